"""Weight hierarchies of tensor product codes.

For codes A, B the product A (x) B is spanned by the Kronecker products of
their generator rows; its codewords, read as nA x nB matrices, have all
columns in A and all rows in B.  The generalized distances of the product
obey Schaathun's lower bound

    d_r(A (x) B) >= d*_r = min sum_i (d_i(A) - d_{i-1}(A)) * d_{t_i}(B)

over nonincreasing integer sequences kB >= t_1 >= ... >= t_{kA} >= 0 with
sum t_i >= r, with equality for all r when both factors satisfy the chain
condition (nested minimum-support subcodes in every dimension).
"""

from __future__ import annotations

import random
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from .algebra import SUBSET_ENUM_CAP, Matrix, _check_cap
from .code import LinearCode, Subcode, mask_of
from .errors import InvalidHierarchy, InvariantViolation, NotASubcode
from .hn import is_semistable

_INF = float("inf")


def _validate_hierarchy(d, label: str) -> tuple[int, ...]:
    d = tuple(int(x) for x in d)
    if not d or d[0] != 0:
        raise InvalidHierarchy(f"{label} must start with d_0 = 0")
    for i in range(1, len(d)):
        if d[i] <= d[i - 1]:
            raise InvalidHierarchy(
                f"{label} must be strictly increasing (position {i})")
    return d


def schaathun_bound(dA, dB, r: int, exact_sum: bool = False) -> int:
    """d*_r from the two weight hierarchies (d_0, ..., d_k) of the factors.

    With exact_sum=True the minimum runs over sequences with sum t_i == r
    instead of >= r; both forms take the same value.
    """
    dA = _validate_hierarchy(dA, "first hierarchy")
    dB = _validate_hierarchy(dB, "second hierarchy")
    kA, kB = len(dA) - 1, len(dB) - 1
    if not 0 <= r <= kA * kB:
        raise ValueError(f"r must lie in [0, {kA * kB}], got {r}")
    w = [dA[i] - dA[i - 1] for i in range(1, kA + 1)]

    @lru_cache(maxsize=None)
    def best(i: int, prev: int, need: int):
        # prev: ceiling for t_i; need: what the remaining t's must still sum to
        if i == kA:
            return 0 if need == 0 else _INF
        if need > (kA - i) * prev:
            return _INF
        res = _INF
        for t in range(min(prev, need if exact_sum else prev), -1, -1):
            rest = best(i + 1, t, need - t if exact_sum else max(0, need - t))
            if rest is not _INF:
                res = min(res, w[i] * dB[t] + rest)
        return res

    val = best(0, kB, r)
    if val is _INF:
        raise InvariantViolation("no feasible split sequence")
    return int(val)


def schaathun_bound_table(A: LinearCode, B: LinearCode) -> tuple[int, ...]:
    """(d*_0, ..., d*_{kA kB}) for the pair of codes."""
    dA = A.weight_hierarchy()
    dB = B.weight_hierarchy()
    return tuple(schaathun_bound(dA, dB, r)
                 for r in range(A.k * B.k + 1))


def schaathun_verify(A: LinearCode, B: LinearCode,
                     max_enum: int = 18) -> bool:
    """d_r(A (x) B) >= d*_r for every r, by exact computation."""
    _check_cap(A.n * B.n, max_enum)
    C = A.tensor(B)
    d = C.weight_hierarchy()
    star = schaathun_bound_table(A, B)
    return all(d[r] >= star[r] for r in range(C.k + 1))


class SchaathunWitness:
    """Certificate that a subcode D of A (x) B has weight >= d*_{dim D}.

    column_dims[j] is the dimension of the j-th column projection of D
    (a subcode of A); J[i] collects the columns where that dimension is
    at least i + 1; t[i] is the dimension of B shortened to J[i].  The
    recorded chain is

        weight(D) = sum_j w(proj_j)                (per-column supports)
                  >= sum_i (d_i(A) - d_{i-1}(A)) * #J_i
                  >= sum_i (d_i(A) - d_{i-1}(A)) * d_{t_i}(B) = cost
                  >= d*_{dim D}.
    """

    __slots__ = ("r", "weight", "column_dims", "J", "t", "cost", "bound")

    def __init__(self, r, weight, column_dims, J, t, cost, bound):
        self.r = r
        self.weight = weight
        self.column_dims = column_dims
        self.J = J
        self.t = t
        self.cost = cost
        self.bound = bound


def _column_projection(D: Subcode, nA: int, nB: int, j: int):
    """Span of the j-th matrix column over the basis of D, as row vectors
    of length nA (a subspace of F^{nA})."""
    rows = [[D.basis.entry(b, i * nB + j) for i in range(nA)]
            for b in range(D.dim)]
    M = Matrix.from_rows(D.parent.field, rows)
    R, piv = M.rref()
    return [R.row(i) for i in range(len(piv))]


def witness(D: Subcode, A: LinearCode, B: LinearCode) -> SchaathunWitness:
    """Build and check the weight certificate for a subcode of A (x) B."""
    nA, nB = A.n, B.n
    C = D.parent
    if C.n != nA * nB:
        raise NotASubcode("ambient length is not the product of the "
                          "factor lengths")
    # every matrix column must lie in A, every matrix row in B
    for b in range(D.dim):
        word = D.basis.row(b)
        for i in range(nA):
            if not B.gen.row_space_contains(word[i * nB:(i + 1) * nB]):
                raise NotASubcode(f"matrix row {i} of basis vector {b} "
                                  "is outside the second factor")
        for j in range(nB):
            col = [word[i * nB + j] for i in range(nA)]
            if not A.gen.row_space_contains(col):
                raise NotASubcode(f"matrix column {j} of basis vector {b} "
                                  "is outside the first factor")
    r = D.dim
    dA = A.weight_hierarchy()
    dB = B.weight_hierarchy()
    col_spans = [_column_projection(D, nA, nB, j) for j in range(nB)]
    column_dims = tuple(len(s) for s in col_spans)
    # per-column support decomposition of the weight, each piece bounded
    # below through the hierarchy of the first factor
    total = 0
    for j, span in enumerate(col_spans):
        supp = 0
        for row in span:
            supp |= mask_of([i for i, x in enumerate(row) if x])
        total += supp.bit_count()
        if supp.bit_count() < dA[column_dims[j]]:
            raise InvariantViolation(
                f"column {j} projection beats the hierarchy of the first "
                "factor")
    if total != D.weight:
        raise InvariantViolation("per-column supports do not add up to "
                                 "the weight")
    top = max(column_dims, default=0)
    J = tuple(frozenset(j for j in range(nB) if column_dims[j] >= i)
              for i in range(1, top + 1))
    t = tuple(B.shorten(mask_of(sorted(Ji))).dim for Ji in J)
    # dimension estimate: the t_i dominate r
    if sum(t) < r:
        raise InvariantViolation("shortened dimensions fail to cover the "
                                 "subcode dimension")
    for i in range(1, len(t)):
        if t[i] > t[i - 1]:
            raise InvariantViolation("shortened dimensions must be "
                                     "nonincreasing")
    cost = 0
    for i, Ji in enumerate(J, start=1):
        step = dA[i] - dA[i - 1]
        if dB[t[i - 1]] > len(Ji):
            raise InvariantViolation("a column set is smaller than the "
                                     "distance it must dominate")
        cost += step * dB[t[i - 1]]
    bound = schaathun_bound(dA, dB, r)
    if not D.weight >= cost >= bound:
        raise InvariantViolation("certificate chain fails: "
                                 f"{D.weight} >= {cost} >= {bound}")
    return SchaathunWitness(r, D.weight, column_dims, J, t, cost, bound)


def tensor_semistable_check(A: LinearCode, B: LinearCode,
                            max_enum: int = 18, samples: int = 20) -> bool:
    """Semistable factors give a semistable product (checked exactly).

    Alongside the exact verdict, random subcodes of the product are run
    through the weight certificate and the semistability inequality
    w(D) >= dim(D) / R(A (x) B) is rechecked on each.
    """
    from .zoo import random_subcode
    if not (is_semistable(A) and is_semistable(B)):
        raise InvariantViolation("both factors must be semistable")
    _check_cap(A.n * B.n, max_enum)
    C = A.tensor(B)
    rng = random.Random(0x7E45)
    rate = Fraction(C.k, C.weight)
    for _ in range(samples):
        D = random_subcode(rng, C, rng.randrange(1, C.k + 1))
        cert = witness(D, A, B)
        if Fraction(cert.weight) < Fraction(cert.r) / rate:
            raise InvariantViolation(
                "a sampled subcode violates the semistability inequality")
    return is_semistable(C)


def _levels(C: LinearCode):
    """For each i, the supports of the minimum-weight i-dimensional
    subcodes: {J : #J = d_i, dim of the shortening to J is i}."""
    d = C.weight_hierarchy()
    tab = C.rank_table(max(C.n, SUBSET_ENUM_CAP))
    full = (1 << C.n) - 1
    out = []
    for i in range(1, C.k + 1):
        lvl = []
        for combo in combinations(range(C.n), d[i]):
            J = mask_of(combo)
            if C.k - tab[full ^ J] == i:
                lvl.append(J)
        out.append(lvl)
    return out


def is_chained(C: LinearCode) -> bool:
    """Chain condition: nested subcodes D_1 < ... < D_k with each D_i of
    dimension i and weight d_i.  Decided by reachability through the
    levels of minimum supports ordered by inclusion."""
    _check_cap(C.n, SUBSET_ENUM_CAP)
    levels = _levels(C)
    reach = None
    for lvl in levels:
        if reach is None:
            reach = set(lvl)
        else:
            reach = {Jn for Jn in lvl
                     if any(Jp & Jn == Jp for Jp in reach)}
        if not reach:
            return False
    return True


def wei_yang_check(A: LinearCode, B: LinearCode,
                   max_enum: int = 18) -> bool:
    """When both factors are chained the bound is met with equality:
    d_r(A (x) B) == d*_r for every r."""
    if not (is_chained(A) and is_chained(B)):
        raise InvariantViolation("both factors must satisfy the chain "
                                 "condition")
    _check_cap(A.n * B.n, max_enum)
    C = A.tensor(B)
    d = C.weight_hierarchy()
    star = schaathun_bound_table(A, B)
    return tuple(d) == star
