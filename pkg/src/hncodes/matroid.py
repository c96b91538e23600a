"""Matroids on [n] given by their full rank table, and their slope data.

The ground set is [n] with n <= 16; the rank of every subset is stored
(2^n bytes).  Degree of a subset J is k - r(J) with k = r(E), so the top
has degree 0 and the empty set degree k; the canonical polygon, filtration
and graded pieces on the subset lattice come from that degree.  Rank-axiom
validation runs the local exchange axioms (equivalent to the usual
semimodularity): exhaustively for n <= 12, on a fixed random sample above.

Cohomology on this lattice: h0(M, J) = k - r(E - J) and
h1(M, J) = #(E - J) - r(E - J), tied to the dual matroid through the usual
rank complement formula.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .algebra import column_rank_table
from .code import LinearCode
from .errors import InvariantViolation, SizeLimitExceeded
from .hn import CanonicalPolygon, Filtration, polygon_from_profile

MATROID_CAP = 16
_VALIDATE_EXHAUSTIVE = 12


class Matroid:
    """A matroid given by the rank of every subset of its ground set."""

    __slots__ = ("n", "k", "ranks")

    def __init__(self, n: int, ranks, validate: bool = True):
        if n > MATROID_CAP:
            raise SizeLimitExceeded(
                f"matroid ground sets are capped at {MATROID_CAP} elements",
                limit=MATROID_CAP, needed=n)
        ranks = bytes(ranks)
        if len(ranks) != 1 << n:
            raise InvariantViolation(
                f"rank table must have 2^{n} entries, got {len(ranks)}")
        self.n = n
        self.ranks = ranks
        self.k = ranks[(1 << n) - 1]
        if validate:
            self._validate()

    def _validate(self):
        n, r = self.n, self.ranks
        if r[0] != 0:
            raise InvariantViolation("rank of the empty set must be 0")
        if n <= _VALIDATE_EXHAUSTIVE:
            masks = range(1 << n)
        else:
            rng = random.Random(0xA11CE)
            masks = [rng.randrange(1 << n) for _ in range(4096)]
        for J in masks:
            rj = r[J]
            free = [e for e in range(n) if not (J >> e) & 1]
            for e in free:
                d = r[J | (1 << e)] - rj
                if d not in (0, 1):
                    raise InvariantViolation(
                        f"rank must grow by 0 or 1 (subset {J}, element {e})")
            for a in range(len(free)):
                ea = 1 << free[a]
                ra = r[J | ea]
                for b in range(a + 1, len(free)):
                    eb = 1 << free[b]
                    if ra + r[J | eb] < r[J | ea | eb] + rj:
                        raise InvariantViolation(
                            f"local semimodularity fails at subset {J}, "
                            f"elements {free[a]}, {free[b]}")

    def rank_of(self, J: int) -> int:
        return self.ranks[J]

    def degree(self, J: int) -> int:
        return self.k - self.ranks[J]

    def h0(self, J: int) -> int:
        full = (1 << self.n) - 1
        return self.k - self.ranks[full ^ J]

    def h1(self, J: int) -> int:
        full = (1 << self.n) - 1
        comp = full ^ J
        return comp.bit_count() - self.ranks[comp]

    def dual(self) -> "Matroid":
        full = (1 << self.n) - 1
        r = self.ranks
        table = bytes(J.bit_count() + r[full ^ J] - self.k
                      for J in range(1 << self.n))
        return Matroid(self.n, table, validate=False)

    def restrict(self, T: int) -> "Matroid":
        """Restriction to the elements of T, reindexed in ascending order."""
        elems = [e for e in range(self.n) if (T >> e) & 1]
        m = len(elems)
        table = bytearray(1 << m)
        for S in range(1 << m):
            mask = 0
            for i in range(m):
                if (S >> i) & 1:
                    mask |= 1 << elems[i]
            table[S] = self.ranks[mask]
        return Matroid(m, bytes(table), validate=False)

    def contract(self, S: int) -> "Matroid":
        """Contraction of the elements of S, reindexed in ascending order."""
        elems = [e for e in range(self.n) if not (S >> e) & 1]
        base = self.ranks[S]
        m = len(elems)
        table = bytearray(1 << m)
        for X in range(1 << m):
            mask = S
            for i in range(m):
                if (X >> i) & 1:
                    mask |= 1 << elems[i]
            table[X] = self.ranks[mask] - base
        return Matroid(m, bytes(table), validate=False)

    # -- profiles ------------------------------------------------------------

    def _min_rank_by_size(self) -> list[int]:
        INF = self.n + 1
        best = [INF] * (self.n + 1)
        for J in range(1 << self.n):
            s = J.bit_count()
            if self.ranks[J] < best[s]:
                best[s] = self.ranks[J]
        return best

    def profile(self) -> tuple[int, ...]:
        """(k_0, ..., k_n) with k_j = max {h0(M, J) : #J = j}."""
        minr = self._min_rank_by_size()
        return tuple(self.k - minr[self.n - j] for j in range(self.n + 1))

    def hierarchy(self) -> tuple[int, ...]:
        """(d_1, ..., d_k): least #J with h0 reaching each dimension."""
        kj = self.profile()
        out = []
        j = 0
        for i in range(1, self.k + 1):
            while kj[j] < i:
                j += 1
            out.append(j)
        return tuple(out)

    def gaps(self) -> tuple[int, ...]:
        """Sizes j >= 1 where the profile stalls (k_j = k_{j-1})."""
        kj = self.profile()
        return tuple(j for j in range(1, self.n + 1) if kj[j] == kj[j - 1])

    def nongaps(self) -> tuple[int, ...]:
        kj = self.profile()
        return tuple(j for j in range(1, self.n + 1) if kj[j] > kj[j - 1])

    def polygon(self) -> CanonicalPolygon:
        minr = self._min_rank_by_size()
        return polygon_from_profile([self.k - m for m in minr])

    def filtration(self) -> Filtration:
        """Chain of subsets attaining the polygon's vertices (unique per
        vertex; a second attaining subset raises)."""
        poly = self.polygon()
        steps = []
        for s, v in poly.vertices:
            target = int(v)
            found = None
            for J in range(1 << self.n):
                if J.bit_count() != s or self.degree(J) != target:
                    continue
                if found is not None:
                    raise InvariantViolation(
                        f"polygon vertex at size {s} attained twice")
                found = J
            if found is None:
                raise InvariantViolation(f"no subset attains vertex size {s}")
            steps.append(found)
        for A, B in zip(steps, steps[1:]):
            if A & ~B:
                raise InvariantViolation("filtration subsets do not nest")
        return Filtration(steps, poly)

    def graded(self) -> list["Matroid"]:
        """Minors between consecutive filtration steps (contract the
        previous step, keep the new elements); each is semistable of the
        corresponding side slope."""
        filt = self.filtration()
        out = []
        for a in range(1, len(filt.steps)):
            prev = filt.steps[a - 1]
            T = filt.steps[a] & ~prev
            left = [e for e in range(self.n) if not (prev >> e) & 1]
            Timg = 0
            for i, e in enumerate(left):
                if (T >> e) & 1:
                    Timg |= 1 << i
            piece = self.contract(prev).restrict(Timg)
            mu = filt.slopes[a - 1]
            if piece.polygon().slopes != (mu,):
                raise InvariantViolation(
                    "graded restriction is not semistable of the side slope")
            out.append(piece)
        return out

    def is_semistable(self) -> bool:
        return self.polygon().N <= 1

    def __eq__(self, other):
        return (isinstance(other, Matroid) and self.n == other.n
                and self.ranks == other.ranks)

    def __hash__(self):
        return hash((self.n, self.ranks))

    def __repr__(self):
        return f"Matroid(n={self.n}, k={self.k})"


def matroid_from_code(C: LinearCode, validate: bool = True) -> Matroid:
    """Column matroid of the generator matrix (memoized on the code)."""
    table = C.rank_table(MATROID_CAP)
    return Matroid(C.n, table, validate=validate)


def uniform_matroid(k: int, n: int) -> Matroid:
    if not 0 <= k <= n:
        raise InvariantViolation(f"need 0 <= k <= n, got k={k}, n={n}")
    table = bytes(min(J.bit_count(), k) for J in range(1 << n))
    return Matroid(n, table, validate=False)


def matroid_from_bases(n: int, bases) -> Matroid:
    """Matroid from a list of basis bitmasks: r(J) = max #(B & J)."""
    bases = [int(b) for b in bases]
    if not bases:
        raise InvariantViolation("at least one basis is required")
    for b in bases:
        if b < 0 or b >> n:
            raise InvariantViolation(f"basis {b} is not a subset of [{n}]")
    table = bytearray(1 << n)
    for J in range(1 << n):
        table[J] = max((b & J).bit_count() for b in bases)
    return Matroid(n, bytes(table), validate=True)


def matroid_degree(M: Matroid, J: int) -> int:
    return M.degree(J)


def dual_matroid(M: Matroid) -> Matroid:
    return M.dual()


def h0_matroid(M: Matroid, J: int) -> int:
    return M.h0(J)


def h1_matroid(M: Matroid, J: int) -> int:
    return M.h1(J)


def matroid_hierarchy(M: Matroid):
    """(d_i sequence, k_j profile, gaps, nongaps) of the matroid."""
    return (M.hierarchy(), M.profile(), M.gaps(), M.nongaps())


def matroid_polygon(M: Matroid) -> CanonicalPolygon:
    return M.polygon()


def matroid_filtration(M: Matroid) -> Filtration:
    return M.filtration()


def matroid_graded(M: Matroid) -> list[Matroid]:
    return M.graded()


def rr_matroid_check(M: Matroid) -> bool:
    """h0(M, J) - h0(M*, E - J) = #J + k - n for every subset J, with the
    dual h0 agreeing with h1(M, J) (the Serre pairing at dimension level)."""
    Md = M.dual()
    full = (1 << M.n) - 1
    for J in range(1 << M.n):
        dual_h0 = Md.h0(full ^ J)
        if M.h0(J) - dual_h0 != J.bit_count() + M.k - M.n:
            return False
        if dual_h0 != M.h1(J):
            return False
    return True


def gap_counts_check(M: Matroid) -> bool:
    """Exactly n - k gaps and k non-gaps, and the non-gaps are the
    hierarchy."""
    g, ng = M.gaps(), M.nongaps()
    return (len(g) == M.n - M.k and len(ng) == M.k
            and ng == M.hierarchy())


def gap_duality_check(M: Matroid) -> bool:
    """j is a non-gap of M exactly when n + 1 - j is a gap of M*."""
    Md = M.dual()
    gaps_dual = set(Md.gaps())
    nongaps = set(M.nongaps())
    for j in range(1, M.n + 1):
        if (j in nongaps) != (M.n + 1 - j in gaps_dual):
            return False
    return True


def wei_partition_check(M: Matroid) -> bool:
    """The hierarchy of M and the reflected hierarchy of M* tile [n]."""
    d = M.hierarchy()
    dd = M.dual().hierarchy()
    left = set(d)
    right = {M.n + 1 - x for x in dd}
    return (len(left) == M.k and len(right) == M.n - M.k
            and not left & right and left | right == set(range(1, M.n + 1)))


def dual_polygon_check(M: Matroid) -> bool:
    """P_{M*}(x) = P_M(n - x) + n - x - k, vertexwise, slopes -1 - mu
    reversed, and the dual filtration is the complement chain reversed."""
    Pd = M.dual().polygon()
    expect = M.polygon().opposite().affine(M.n - M.k, -1, 1)
    if Pd != expect:
        return False
    mus = M.polygon().slopes
    if Pd.slopes != tuple(-1 - mu for mu in reversed(mus)):
        return False
    full = (1 << M.n) - 1
    steps = M.filtration().steps
    dual_steps = M.dual().filtration().steps
    return dual_steps == tuple(full ^ J for J in reversed(steps))
