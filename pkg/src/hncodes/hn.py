"""Canonical concave polygons, slope filtrations and semistability.

The canonical polygon of a ranked, degree-weighted lattice is the least
concave majorant of the point cloud {(rank(x), degree(x))}.  Its vertices
have integer ranks 0 = i_0 < ... < i_N = R and its side slopes strictly
decrease.  For each vertex rank there is a unique lattice element attaining
the polygon, and these elements form a chain: the canonical filtration.
This module computes the polygon and filtration for linear codes (over the
lattice of subcodes, degree n - w) and exposes the generic lattice checks
(modularity parallelogram, Galois-connection laws, vertex gap condition)
used by the verification suites.

All slopes and polygon values are exact `fractions.Fraction`s.
"""

from __future__ import annotations

from fractions import Fraction

from .algebra import SUBSET_ENUM_CAP, Matrix, echelon_inserter, iter_rref_matrices
from .code import LinearCode, Subcode, bits_of
from .errors import (
    EmptyProfile,
    InvariantViolation,
    NotFullSupport,
    SizeLimitExceeded,
)

SUBSPACE_CAP = 4096


def _upper_hull(points):
    """Upper concave hull of points with strictly increasing integer x."""
    hull = []
    for p in points:
        while len(hull) >= 2:
            x1, y1 = hull[-2]
            x2, y2 = hull[-1]
            x3, y3 = p
            if (y2 - y1) * (x3 - x2) <= (y3 - y2) * (x2 - x1):
                hull.pop()
            else:
                break
        hull.append(p)
    return hull


class CanonicalPolygon:
    """Concave piecewise-linear function given by its vertex list.

    vertices: ((i_0, v_0), ..., (i_N, v_N)) with strictly increasing ranks
    and strictly decreasing side slopes; values are Fractions.
    """

    __slots__ = ("vertices",)

    def __init__(self, vertices):
        vs = tuple((int(x), Fraction(y)) for x, y in vertices)
        if not vs:
            raise EmptyProfile("a polygon needs at least one vertex")
        for (x1, _), (x2, _) in zip(vs, vs[1:]):
            if x2 <= x1:
                raise InvariantViolation("vertex ranks must increase")
        slopes = [Fraction(y2 - y1, x2 - x1)
                  for (x1, y1), (x2, y2) in zip(vs, vs[1:])]
        for s1, s2 in zip(slopes, slopes[1:]):
            if s2 >= s1:
                raise InvariantViolation("side slopes must strictly decrease")
        self.vertices = vs

    @property
    def N(self) -> int:
        return len(self.vertices) - 1

    @property
    def total_rank(self) -> int:
        return self.vertices[-1][0]

    @property
    def vertex_ranks(self) -> tuple[int, ...]:
        return tuple(x for x, _ in self.vertices)

    @property
    def slopes(self) -> tuple[Fraction, ...]:
        vs = self.vertices
        return tuple(Fraction(y2 - y1, x2 - x1)
                     for (x1, y1), (x2, y2) in zip(vs, vs[1:]))

    @property
    def mu_max(self):
        s = self.slopes
        return s[0] if s else None

    @property
    def mu_min(self):
        s = self.slopes
        return s[-1] if s else None

    def value_at(self, x) -> Fraction:
        x = Fraction(x)
        vs = self.vertices
        if not vs[0][0] <= x <= vs[-1][0]:
            raise InvariantViolation(f"{x} outside polygon domain")
        for (x1, y1), (x2, y2) in zip(vs, vs[1:]):
            if x <= x2:
                return y1 + Fraction(y2 - y1, x2 - x1) * (x - x1)
        return vs[-1][1]

    def affine(self, a, b, c) -> "CanonicalPolygon":
        """(x, y) -> (x, a + b x + c y), requires c > 0 (slopes b + c mu)."""
        a, b, c = Fraction(a), Fraction(b), Fraction(c)
        if c <= 0:
            raise InvariantViolation("affine change needs c > 0")
        return CanonicalPolygon(
            [(x, a + b * x + c * y) for x, y in self.vertices])

    def opposite(self) -> "CanonicalPolygon":
        """(x, y) -> (R - x, y) reversed; slopes negate and reverse."""
        R = self.total_rank
        return CanonicalPolygon(
            [(R - x, y) for x, y in reversed(self.vertices)])

    def reflected(self) -> "CanonicalPolygon":
        """Swap the axes (valid when values strictly decrease)."""
        for (_, y1), (_, y2) in zip(self.vertices, self.vertices[1:]):
            if y2 >= y1:
                raise InvariantViolation(
                    "reflection needs strictly decreasing values")
        return CanonicalPolygon(
            [(y, Fraction(x)) for x, y in reversed(self.vertices)])

    def __eq__(self, other):
        return (isinstance(other, CanonicalPolygon)
                and self.vertices == other.vertices)

    def __hash__(self):
        return hash(self.vertices)

    def __repr__(self):
        pts = ", ".join(f"({x},{y})" for x, y in self.vertices)
        return f"CanonicalPolygon({pts})"


def polygon_from_profile(maxdeg) -> CanonicalPolygon:
    """Polygon from the profile maxdeg[i] = max degree among rank-i elements."""
    pts = [(i, Fraction(v)) for i, v in enumerate(maxdeg)]
    if not pts:
        raise EmptyProfile("empty rank/degree profile")
    return CanonicalPolygon(_upper_hull(pts))


def affine_transform(P: CanonicalPolygon, a, b, c) -> CanonicalPolygon:
    return P.affine(a, b, c)


def opposite_polygon(P: CanonicalPolygon) -> CanonicalPolygon:
    return P.opposite()


def code_polygon(C: LinearCode, max_enum: int = SUBSET_ENUM_CAP
                 ) -> CanonicalPolygon:
    """Polygon of the subcode lattice: profile (i, n - d_i)."""
    d = C.weight_hierarchy(max_enum)
    return polygon_from_profile([C.n - di for di in d])


def subset_polygon(C: LinearCode, max_enum: int = SUBSET_ENUM_CAP
                   ) -> CanonicalPolygon:
    """Polygon of the coordinate-subset lattice: profile (j, k_{n-j})."""
    kj = C.dlp(max_enum)
    return polygon_from_profile([kj[C.n - j] for j in range(C.n + 1)])


class Filtration:
    """A canonical filtration: the chain of polygon-vertex elements.

    steps[a] is the element at vertex rank i_a (steps[0] the bottom, the
    last step the top); slopes[a] is the polygon slope between vertices a
    and a+1.
    """

    __slots__ = ("steps", "polygon")

    def __init__(self, steps, polygon: CanonicalPolygon):
        self.steps = tuple(steps)
        self.polygon = polygon
        if len(self.steps) != polygon.N + 1:
            raise InvariantViolation("one step per polygon vertex required")

    @property
    def slopes(self) -> tuple[Fraction, ...]:
        return self.polygon.slopes

    @property
    def ranks(self) -> tuple[int, ...]:
        return self.polygon.vertex_ranks

    def __len__(self):
        return len(self.steps)

    def __iter__(self):
        return iter(self.steps)


def canonical_filtration(C: LinearCode, max_enum: int = SUBSET_ENUM_CAP
                         ) -> Filtration:
    """The chain of subcodes attaining the code polygon's vertices.

    Each step is realized as C_J for a minimizing support J; every
    minimizing support is checked to yield the same subcode (uniqueness is
    a theorem, so a violation raises).
    """
    poly = code_polygon(C, max_enum)
    tab = C.rank_table(max_enum)
    full = (1 << C.n) - 1
    steps = []
    for i, v in poly.vertices:
        if i == 0:
            steps.append(C.zero_subcode())
            continue
        if i == C.k:
            steps.append(C.whole_subcode())
            continue
        w = C.n - int(v)
        found = None
        for mask in range(1 << C.n):
            if mask.bit_count() != w:
                continue
            if C.k - tab[full ^ mask] != i:
                continue
            sub = C.shorten(mask)
            if found is None:
                found = sub
            elif sub != found:
                raise InvariantViolation(
                    f"polygon vertex at rank {i} attained by two distinct "
                    f"subcodes")
        if found is None:
            raise InvariantViolation(f"no subcode attains vertex rank {i}")
        steps.append(found)
    for a, b in zip(steps, steps[1:]):
        if not b.contains(a):
            raise InvariantViolation("filtration steps do not form a chain")
    return Filtration(steps, poly)


# -- semistability ----------------------------------------------------------

def _rate_violation(C: LinearCode, strict: bool):
    """Mask of a coordinate set J whose subcode C_J beats the code's rate.

    strict=False looks for dim/w > k/w(C) (semistability failure),
    strict=True for a proper subcode with dim/w >= k/w(C) (stability
    failure).  Returns None when no violation exists.  The search walks
    complements S = [n] - J, pruning branches whose optimistic margin
    cannot reach a violation (rank only grows along extensions).
    """
    n, k, w = C.n, C.k, C.weight
    insert, cols = echelon_inserter(C.gen)
    full = (1 << n) - 1
    found = []

    def rec(start, mask, size, rk, basis):
        if found:
            return
        dim = k - rk
        lhs = dim * w
        rem = n - start
        floor = (n - size - rem) * k
        # optimistic margin for the whole subtree: dim cannot grow, the
        # complement cannot exceed n - size - rem elements fewer
        if (lhs < floor) if strict else (lhs <= floor):
            return
        if dim > 0:
            rhs = (n - size) * k
            hit = (dim < k and lhs >= rhs) if strict else (lhs > rhs)
            if hit:
                found.append(full ^ mask)
                return
        for j in range(start, n):
            nb = insert(basis, cols[j])
            if nb is None:
                rec(j + 1, mask | (1 << j), size + 1, rk, basis)
            else:
                rec(j + 1, mask | (1 << j), size + 1, rk + 1, nb)
            if found:
                return

    rec(0, 0, 0, 0, ())
    return found[0] if found else None


def is_semistable(C: LinearCode) -> bool:
    """True when every nonzero subcode C' has w(C') >= dim(C')/R(C)."""
    return _rate_violation(C, strict=False) is None


def is_stable(C: LinearCode) -> bool:
    """True when every proper nonzero subcode has strictly smaller rate
    (vacuously true for k = 1)."""
    if C.k == 1:
        return True
    return _rate_violation(C, strict=True) is None


def semistability_witness(C: LinearCode) -> Subcode | None:
    """A subcode violating semistability, or None; the first filtration
    step is returned (the maximal-slope destabilizer) when one exists."""
    if is_semistable(C):
        return None
    filt = canonical_filtration(C)
    return filt.steps[1]


def graded_pieces(C: LinearCode, max_enum: int = SUBSET_ENUM_CAP
                  ) -> list[LinearCode]:
    """Successive quotients of the canonical filtration as codes.

    Piece a is the projection of step a onto the coordinates its support
    adds over step a-1; it is an [n_a - n_{a-1}, i_a - i_{a-1}] code,
    semistable of slope mu_a.  Requires full support.
    """
    if not C.is_full_support:
        raise NotFullSupport("graded pieces need a full-support code",
                             side="primal",
                             zero_columns=((1 << C.n) - 1) ^ C.support_mask)
    filt = canonical_filtration(C, max_enum)
    pieces = []
    prev_mask = 0
    for a in range(1, len(filt.steps)):
        step = filt.steps[a]
        T = step.support_mask & ~prev_mask
        piece = LinearCode.span(step.basis.col_submatrix(bits_of(T)))
        exp_k = step.dim - filt.steps[a - 1].dim
        if piece.n != T.bit_count() or piece.k != exp_k:
            raise InvariantViolation("graded piece has wrong parameters")
        mu = filt.slopes[a - 1]
        if Fraction(-piece.n, piece.k) != mu or not is_semistable(piece):
            raise InvariantViolation(
                "graded piece is not semistable of the side slope")
        pieces.append(piece)
        prev_mask = step.support_mask
    return pieces


# -- enumerable lattice views ----------------------------------------------

class SubspaceLattice:
    """All subcodes of C, with meet/join by set algebra on codewords.

    Refuses codes with q^k > SUBSPACE_CAP.  Elements are Subcode objects;
    internally each is paired with its frozenset of codewords so that
    meet is set intersection and join is the span of a union.
    """

    def __init__(self, C: LinearCode, cap: int = SUBSPACE_CAP):
        if C.field.q ** C.k > cap:
            raise SizeLimitExceeded(
                f"subspace lattice of q^k = {C.field.q ** C.k} codewords "
                f"exceeds the cap {cap}", limit=cap, needed=C.field.q ** C.k)
        self.code = C
        self.elements: list[Subcode] = []
        self._wordsets: list[frozenset] = []
        self._index: dict[frozenset, int] = {}
        f = C.field
        for r in range(C.k + 1):
            for coeff in iter_rref_matrices(f, r, C.k):
                basis = coeff.matmul(C.gen) if r else Matrix(f, 0, C.n, ())
                sub = Subcode(C, basis, check=False)
                words = frozenset(_span_words(f, basis))
                self._index[words] = len(self.elements)
                self.elements.append(sub)
                self._wordsets.append(words)

    def __len__(self):
        return len(self.elements)

    def index_of(self, S: Subcode) -> int:
        return self._index[frozenset(_span_words(self.code.field, S.basis))]

    def rank(self, i: int) -> int:
        return self.elements[i].dim

    def degree(self, i: int) -> int:
        return self.elements[i].degree

    def leq(self, i: int, j: int) -> bool:
        return self._wordsets[i] <= self._wordsets[j]

    def meet(self, i: int, j: int) -> int:
        return self._index[self._wordsets[i] & self._wordsets[j]]

    def join(self, i: int, j: int) -> int:
        f = self.code.field
        union = self._wordsets[i] | self._wordsets[j]
        rows = [list(wv) for wv in union if any(wv)]
        if not rows:
            return self._index[union]
        B = Matrix.from_rows(f, rows).rref_nonzero()
        return self._index[frozenset(_span_words(f, B))]


def _span_words(field, basis: Matrix):
    """All codewords of the row space of `basis` (tuples)."""
    ADD, MUL = field._add, field._mul
    words = [(0,) * basis.cols]
    for i in range(basis.rows):
        row = basis.row(i)
        new = []
        for c in range(1, field.q):
            mc = MUL[c]
            scaled = tuple(mc[x] for x in row)
            for w in words:
                new.append(tuple(ADD[a][b] for a, b in zip(w, scaled)))
        words.extend(new)
    return words


class SubsetLattice:
    """The boolean lattice of coordinate subsets with a supplied degree."""

    def __init__(self, n: int, degree_fn, max_enum: int = SUBSET_ENUM_CAP):
        if n > max_enum:
            raise SizeLimitExceeded(
                f"subset lattice on {n} points exceeds cap {max_enum}",
                limit=max_enum, needed=n)
        self.n = n
        self.elements = range(1 << n)
        self._deg = [degree_fn(J) for J in self.elements]

    @classmethod
    def for_code(cls, C: LinearCode, max_enum: int = SUBSET_ENUM_CAP):
        tab = C.rank_table(max_enum)
        full = (1 << C.n) - 1
        # degree of J is dim C_{[n]-J} = k - rank(columns J)
        return cls(C.n, lambda J: C.k - tab[J], max_enum)

    def __len__(self):
        return 1 << self.n

    def rank(self, J: int) -> int:
        return J.bit_count()

    def degree(self, J: int) -> int:
        return self._deg[J]

    def leq(self, I: int, J: int) -> bool:
        return I & J == I

    def meet(self, I: int, J: int) -> int:
        return I & J

    def join(self, I: int, J: int) -> int:
        return I | J


def verify_parallelogram(lattice, pairs=None) -> bool:
    """Modularity of rank and lower semimodularity of degree on pairs.

    rank(x) + rank(y) == rank(join) + rank(meet) and
    deg(x) + deg(y) <= deg(join) + deg(meet); exhaustive when pairs is
    None.
    """
    idx = range(len(lattice))
    if pairs is None:
        pairs = ((i, j) for i in idx for j in idx)
    for i, j in pairs:
        m = lattice.meet(i, j)
        v = lattice.join(i, j)
        if lattice.rank(i) + lattice.rank(j) != lattice.rank(v) + lattice.rank(m):
            return False
        if lattice.degree(i) + lattice.degree(j) > lattice.degree(v) + lattice.degree(m):
            return False
    return True


def gap_condition_check(C: LinearCode, cap: int = SUBSPACE_CAP) -> bool:
    """At every interior polygon vertex, every non-filtration subcode of
    that rank keeps a degree gap of at least mu_a - mu_{a+1} below the
    polygon."""
    filt = canonical_filtration(C)
    poly = filt.polygon
    if poly.N < 2:
        return True
    lat = SubspaceLattice(C, cap)
    slopes = poly.slopes
    for a in range(1, poly.N):
        i_a, v_a = poly.vertices[a]
        bound = Fraction(v_a) - (slopes[a - 1] - slopes[a])
        x_a = filt.steps[a]
        for sub in lat.elements:
            if sub.dim != i_a or sub == x_a:
                continue
            if Fraction(sub.degree) > bound:
                return False
    return True


# -- Galois connection between subcodes and coordinate subsets --------------

def cosupport(S: Subcode) -> int:
    return ((1 << S.parent.n) - 1) ^ S.support_mask


def subset_to_subcode(C: LinearCode, J: int) -> Subcode:
    """The Galois image of a coordinate set: the subcode vanishing on J."""
    full = (1 << C.n) - 1
    return C.shorten(full ^ J)


def verify_galois(C: LinearCode, subcodes=None, subsets=None,
                  cap: int = SUBSPACE_CAP) -> bool:
    """Check the order-reversing correspondence laws on sampled elements.

    Laws: both closure inclusions x <= x-circ-circ; the adjunction
    (S vanishes on J iff J avoids the support of S); the join/meet
    exchange inequalities; and degree(S) = #cosupport(S).  Exhaustive over
    the subspace lattice and all 2^n subsets when samples are omitted.
    """
    if subcodes is None:
        subcodes = SubspaceLattice(C, cap).elements
    if subsets is None:
        if C.n > 16:
            raise SizeLimitExceeded(
                f"exhaustive subset side needs n <= 16, got {C.n}",
                limit=16, needed=C.n)
        subsets = range(1 << C.n)
    subcodes = list(subcodes)
    subsets = list(subsets)
    img = {}

    def image(J):
        if J not in img:
            img[J] = subset_to_subcode(C, J)
        return img[J]

    for S in subcodes:
        Sc = cosupport(S)
        if not image(Sc).contains(S):
            return False
        if S.degree != Sc.bit_count():
            return False
    for J in subsets:
        if J & ~cosupport(image(J)):
            return False
    for S in subcodes:
        Sc = cosupport(S)
        for J in subsets:
            if image(J).contains(S) != (J & ~Sc == 0):
                return False
    for S in subcodes:
        for T in subcodes:
            if (cosupport(S) | cosupport(T)) & ~cosupport(S.meet(T)):
                return False
            if cosupport(S) & cosupport(T) != cosupport(S.join(T)):
                return False
    for J in subsets:
        for K in subsets:
            if not image(J & K).contains(image(J).join(image(K))):
                return False
            if image(J).meet(image(K)) != image(J | K):
                return False
    return True
