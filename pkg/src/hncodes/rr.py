"""Cohomology of coordinate subsets and the classical duality checks.

For an [n, k] code C and a coordinate set J:
    H0(C, J) = C cap F^J            (codewords supported inside J),
    H1(C, J) = F^{[n]-J} / proj(C)  (cokernel of projection off J),
so h0 - h1 = #J + k - n (Euler), h1(C, J) = h0(C-dual, [n]-J) at the level
of dimensions (Serre), and subtracting the two gives the Riemann-Roch
identity h0(C, J) - h0(C-dual, [n]-J) = #J + k - n.

The same module hosts Wei's duality partition, the profile duality with
witness transfer, and the two polygon-level duality laws (subset side and
code side with the slope map mu -> -1 + 1/(mu + 1)).
"""

from __future__ import annotations

import random
from fractions import Fraction

from .code import LinearCode, Subcode, bits_of
from .errors import InvariantViolation, NotFullSupport
from .hn import CanonicalPolygon, canonical_filtration, code_polygon, subset_polygon

_EXHAUSTIVE_LIMIT = 16
_SAMPLES = 4096


class CohomologyPair:
    """Dimensions and distinguished bases of H0 and H1 for (C, J).

    h0_basis spans C cap F^J inside F^n.  h1_coords are the coordinates of
    [n] - J whose unit vectors represent a complement of the projected
    code (the non-pivot columns of the projection, chosen greedily).
    """

    __slots__ = ("code", "J", "h0", "h1", "h0_basis", "h1_coords")

    def __init__(self, code, J, h0, h1, h0_basis, h1_coords):
        self.code = code
        self.J = J
        self.h0 = h0
        self.h1 = h1
        self.h0_basis = h0_basis
        self.h1_coords = h1_coords

    def euler(self) -> int:
        return self.h0 - self.h1


def cohomology(C: LinearCode, J: int) -> CohomologyPair:
    full = (1 << C.n) - 1
    sub = C.shorten(J)
    out_cols = bits_of(full ^ J)
    if out_cols:
        proj = C.gen.col_submatrix(out_cols)
        _, piv = proj.rref()
        pivset = set(piv)
        h1_coords = tuple(c for i, c in enumerate(out_cols)
                          if i not in pivset)
    else:
        h1_coords = ()
    h1 = len(h1_coords)
    pair = CohomologyPair(C, J, sub.dim, h1, sub.basis, h1_coords)
    if pair.euler() != J.bit_count() + C.k - C.n:
        raise InvariantViolation("Euler characteristic miscomputed")
    return pair


def _subset_iter(n: int, exhaustive_limit: int, samples: int, seed: int):
    if n <= exhaustive_limit:
        return range(1 << n)
    rng = random.Random(seed)
    return [rng.randrange(1 << n) for _ in range(samples)]


def _outside_rank(C: LinearCode, exhaustive: bool):
    """J -> rank of the generator columns outside J; table-backed when the
    length permits full enumeration, direct elimination otherwise."""
    full = (1 << C.n) - 1
    if exhaustive:
        tab = C.rank_table()
        return lambda J: tab[full ^ J]

    def direct(J: int) -> int:
        out = bits_of(full ^ J)
        return C.gen.col_submatrix(out).rank() if out else 0
    return direct


def rr_check(C: LinearCode, exhaustive_limit: int = _EXHAUSTIVE_LIMIT,
             samples: int = _SAMPLES) -> bool:
    """h0(C, J) - h0(C-dual, [n]-J) == #J + k - n over all (or sampled) J."""
    D = C.dual()
    exhaustive = C.n <= exhaustive_limit
    rC = _outside_rank(C, exhaustive)
    rD = _outside_rank(D, exhaustive)
    full = (1 << C.n) - 1
    for J in _subset_iter(C.n, exhaustive_limit, samples, 0xFE11):
        h0 = C.k - rC(J)
        h0d = D.k - rD(full ^ J)
        if h0 - h0d != J.bit_count() + C.k - C.n:
            return False
    return True


def serre_check(C: LinearCode, exhaustive_limit: int = _EXHAUSTIVE_LIMIT,
                samples: int = _SAMPLES) -> bool:
    """h1(C, J) == h0(C-dual, [n]-J) over all (or sampled) J."""
    D = C.dual()
    exhaustive = C.n <= exhaustive_limit
    rC = _outside_rank(C, exhaustive)
    rD = _outside_rank(D, exhaustive)
    full = (1 << C.n) - 1
    for J in _subset_iter(C.n, exhaustive_limit, samples, 0x5E44E):
        comp = full ^ J
        h1 = comp.bit_count() - rC(J)
        h0d = D.k - rD(comp)
        if h1 != h0d:
            return False
    return True


def rr_normalized(C: LinearCode, J: int) -> tuple[int, int]:
    """(deg, g) normal form of the identity: h0 - h1 = deg - g + 1 with
    deg = #J - d_1(C) + 1 shifted so that g = n - k - d_1 + 1 >= 0 exactly
    measures the defect from Singleton.  Returns (#J - d_1 + 1 - 1, g)
    packaged as (degree-like term, genus-like term)."""
    d1 = C.weight_hierarchy()[1]
    g = C.n - C.k - d1 + 1
    return (J.bit_count() - d1, g)


def les_check(C: LinearCode, J: int, Jp: int) -> bool:
    """Dimension bookkeeping of the restriction sequence for disjoint
    J, J': monotone h0, antitone h1, alternating sum zero, and the
    connecting rank equals h0(J u J') - h0(J)."""
    if J & Jp:
        raise InvariantViolation("the two coordinate sets must be disjoint")
    union = J | Jp
    a = cohomology(C, J)
    b = cohomology(C, union)
    if not (a.h0 <= b.h0 and a.h1 >= b.h1):
        return False
    if a.h0 - b.h0 + Jp.bit_count() - a.h1 + b.h1 != 0:
        return False
    if b.h0:
        middle = b.h0_basis.col_submatrix(bits_of(Jp))
        if middle.rank() != b.h0 - a.h0:
            return False
    elif b.h0 - a.h0 != 0:
        return False
    return True


def clifford_check(C: LinearCode, exhaustive_limit: int = _EXHAUSTIVE_LIMIT,
                   samples: int = _SAMPLES) -> bool:
    """For a self-dual code, h0(C, J) <= #J / 2 for every subset."""
    if C.dual() != C:
        raise InvariantViolation("Clifford bound applies to self-dual codes")
    rC = _outside_rank(C, C.n <= exhaustive_limit)
    for J in _subset_iter(C.n, exhaustive_limit, samples, 0xC11F):
        if 2 * (C.k - rC(J)) > J.bit_count():
            return False
    return True


# -- support diagnostics and the standard decomposition ---------------------

def weight_one_span(C: LinearCode) -> Subcode:
    """The subcode generated by all weight-1 codewords."""
    rows = []
    for i in range(C.n):
        unit = [0] * C.n
        unit[i] = 1
        if C.gen.row_space_contains(unit):
            rows.append(unit)
    if not rows:
        return C.zero_subcode()
    return Subcode.from_rows(C, rows)


def full_support_status(C: LinearCode) -> tuple[bool, bool]:
    """(primal full support, dual full support); the dual side fails
    exactly when C contains a weight-1 codeword."""
    primal = C.is_full_support
    dual_full = C.k < C.n and C.weight_hierarchy()[1] >= 2
    return primal, dual_full


def _standard_core(C: LinearCode):
    """Strip zero coordinates and the F^W summand spanned by weight-1
    codewords; returns (core code or None, zero mask, weight-one mask)."""
    full = (1 << C.n) - 1
    zero_mask = full ^ C.support_mask
    wspan = weight_one_span(C)
    wmask = wspan.support_mask
    keep = full ^ zero_mask ^ wmask
    rest = C.shorten(full ^ wmask)
    if rest.dim == 0 or keep == 0:
        return None, zero_mask, wmask
    core = LinearCode.span(rest.basis.col_submatrix(bits_of(keep)))
    return core, zero_mask, wmask


def wei_duality_check(C: LinearCode) -> bool:
    """Wei's partition: {d_i(C)} and {n + 1 - d_i(C-dual)} tile [n].

    Checked directly when C and its dual both have full support; otherwise
    the standard decomposition (drop zero coordinates, split off the
    weight-one summand) is applied first and the partition is checked on
    the core.
    """
    if C.k == C.n:
        return C.weight_hierarchy() == tuple(range(C.n + 1))
    primal, dual_full = full_support_status(C)
    if primal and dual_full:
        return _wei_partition(C)
    core, _, _ = _standard_core(C)
    if core is None:
        return True
    if core.k == core.n:
        return core.weight_hierarchy() == tuple(range(core.n + 1))
    return _wei_partition(core)


def _wei_partition(C: LinearCode) -> bool:
    d = set(C.weight_hierarchy()[1:])
    dd = {C.n + 1 - x for x in C.dual().weight_hierarchy()[1:]}
    return (len(d) == C.k and len(dd) == C.n - C.k and not d & dd
            and d | dd == set(range(1, C.n + 1)))


def dual_dlp_check(C: LinearCode) -> bool:
    """k_{n-j}(C-dual) = k_j(C) + n - j - k for all j, with witness
    transfer: a maximizing J for C complements to one for the dual."""
    D = C.dual()
    kj = C.dlp()
    kjd = D.dlp()
    full = (1 << C.n) - 1
    wits = C.dlp_witnesses()
    for j in range(C.n + 1):
        if kjd[C.n - j] != kj[j] + C.n - j - C.k:
            return False
        # the complement of C's maximizer maximizes for the dual: the dual
        # shortened there must realize k_{n-j} of the dual
        comp = full ^ wits[j]
        if D.shorten(comp).dim != kjd[C.n - j]:
            return False
    return True


def dual_polygon(C: LinearCode) -> CanonicalPolygon:
    """Subset polygon of the dual code."""
    return subset_polygon(C.dual())


def dual_subset_polygon_check(C: LinearCode) -> bool:
    """P_subset(C-dual)(x) = P_subset(C)(n - x) + n - x - k, exactly."""
    expect = subset_polygon(C).opposite().affine(C.n - C.k, -1, 1)
    return dual_polygon(C) == expect


def dual_code_slopes(C: LinearCode) -> tuple[Fraction, ...]:
    """Slopes of the dual code's polygon; requires both codes full
    support, in which case they are -1 + 1/(mu + 1) for the primal slopes
    mu in reverse order, and the dual filtration is obtained by shortening
    the dual to the complements of the primal supports.  Violations of
    either law raise; degenerate support raises NotFullSupport carrying
    the reduction data.
    """
    primal, dual_full = full_support_status(C)
    if not primal:
        full = (1 << C.n) - 1
        raise NotFullSupport(
            "the code itself is not full support", side="primal",
            zero_columns=full ^ C.support_mask)
    if not dual_full:
        raise NotFullSupport(
            "the dual code is not full support (the code has weight-1 "
            "words, i.e. mu_max = -1)", side="dual",
            weight_one_span=weight_one_span(C))
    D = C.dual()
    got = code_polygon(D).slopes
    mus = code_polygon(C).slopes
    expect = tuple(-1 + 1 / (mu + 1) for mu in reversed(mus))
    if got != expect:
        raise InvariantViolation(
            f"dual slope law fails: expected {expect}, got {got}")
    filt = canonical_filtration(C)
    dual_filt = canonical_filtration(D)
    full = (1 << C.n) - 1
    expect_steps = [D.zero_subcode()]
    expect_steps += [D.shorten(full ^ s.support_mask)
                     for s in reversed(filt.steps[:-1])]
    if list(dual_filt.steps) != expect_steps:
        raise InvariantViolation("dual filtration is not the complement "
                                 "chain of the primal one")
    return got
