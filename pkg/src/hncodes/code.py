"""Linear codes over small finite fields, their subcodes and weight data.

A LinearCode is stored as its reduced-row-echelon generator matrix, which
makes equality of codes and of subcodes syntactic.  Coordinate subsets are
bitmask ints (bit i = coordinate i, 0-indexed).  The degree of a subcode
C' of an [n, k] code is n - w(C') where w is the support size; the zero
subcode deliberately has degree n.

Weight hierarchies are computed through the dimension/length profile
k_j = max {dim C_J : #J = j} rather than by enumerating subcodes, so the
cost is governed by 2^n (with pruning), never by q^k.
"""

from __future__ import annotations

from fractions import Fraction

from .algebra import (
    SUBSET_ENUM_CAP,
    FieldSpec,
    Matrix,
    min_column_rank_by_size,
    column_rank_table,
    row_space_intersection,
)
from .errors import (
    FieldMismatch,
    InvariantViolation,
    NotASubcode,
    ZeroSubcode,
)


def mask_of(coords) -> int:
    """Bitmask for an iterable of 0-indexed coordinates."""
    m = 0
    for c in coords:
        m |= 1 << c
    return m


def bits_of(mask: int) -> list[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def _support_of_matrix(M: Matrix) -> int:
    mask = 0
    for i in range(M.rows):
        row = M.row(i)
        for j, x in enumerate(row):
            if x:
                mask |= 1 << j
    return mask


class LinearCode:
    """An [n, k] linear code, 1 <= k <= n, held in RREF generator form."""

    __slots__ = ("field", "n", "k", "gen", "_minr", "_minr_wit", "_rtab",
                 "_dual")

    def __init__(self, gen: Matrix):
        R, piv = gen.rref()
        if len(piv) != gen.rows:
            raise InvariantViolation(
                f"generator rows are dependent (rank {len(piv)} of "
                f"{gen.rows}); use LinearCode.span to reduce")
        if not 1 <= gen.rows <= gen.cols:
            raise InvariantViolation(
                f"need 1 <= k <= n, got k={gen.rows}, n={gen.cols}")
        self.field = gen.field
        self.n = gen.cols
        self.k = gen.rows
        self.gen = R
        self._minr = None
        self._minr_wit = None
        self._rtab = None
        self._dual = None

    @classmethod
    def from_rows(cls, field: FieldSpec, rows) -> "LinearCode":
        return cls(Matrix.from_rows(field, rows))

    @classmethod
    def span(cls, gen: Matrix) -> "LinearCode":
        """Like the constructor but silently dropping dependent rows."""
        return cls(gen.rref_nonzero())

    # -- basic data ---------------------------------------------------------

    @property
    def support_mask(self) -> int:
        return _support_of_matrix(self.gen)

    @property
    def weight(self) -> int:
        return self.support_mask.bit_count()

    @property
    def degree(self) -> int:
        return self.n - self.weight

    @property
    def effective_rate(self) -> Fraction:
        return Fraction(self.k, self.weight)

    @property
    def is_full_support(self) -> bool:
        return self.weight == self.n

    def codewords(self):
        """Iterate all q^k codewords (small k only)."""
        f = self.field
        ADD, MUL = f._add, f._mul
        words = [(0,) * self.n]
        for i in range(self.k):
            row = self.gen.row(i)
            new = []
            for c in range(1, f.q):
                mc = MUL[c]
                scaled = tuple(mc[x] for x in row)
                for w in words:
                    new.append(tuple(ADD[a][b] for a, b in zip(w, scaled)))
            words.extend(new)
        return words

    # -- subcodes and coordinate operations ---------------------------------

    def whole_subcode(self) -> "Subcode":
        return Subcode(self, self.gen)

    def zero_subcode(self) -> "Subcode":
        return Subcode(self, Matrix(self.field, 0, self.n, ()))

    def shorten(self, J: int) -> "Subcode":
        """C_J: the largest subcode supported inside the coordinate set J."""
        out_cols = [j for j in range(self.n) if not (J >> j) & 1]
        sub = self.gen.col_submatrix(out_cols)
        coeffs = sub.transpose().right_nullspace()
        rows = coeffs.matmul(self.gen)
        return Subcode(self, rows.rref_nonzero(), check=False)

    def puncture(self, J: int) -> "LinearCode":
        """Image of C under projection onto the coordinates in J."""
        cols = bits_of(J)
        if not cols:
            raise InvariantViolation("cannot puncture onto the empty set")
        return LinearCode.span(self.gen.col_submatrix(cols))

    def dual(self) -> "LinearCode":
        """The [n, n-k] dual code (defined for k < n)."""
        if self.k == self.n:
            raise InvariantViolation(
                "the dual of the full space has dimension 0, which is not "
                "representable as a LinearCode")
        if self._dual is None:
            H = self.gen.right_nullspace()
            self._dual = LinearCode(H.rref_nonzero())
        return self._dual

    # -- weight data ---------------------------------------------------------

    def _min_ranks(self, max_enum: int, witness: bool = False):
        if self._minr is None or (witness and self._minr_wit is None):
            best, wit = min_column_rank_by_size(self.gen, max_enum,
                                                witness=True)
            self._minr, self._minr_wit = best, wit
        return (self._minr, self._minr_wit) if witness else self._minr

    def rank_table(self, max_enum: int = SUBSET_ENUM_CAP) -> bytes:
        """rank of the generator's column subsets, indexed by bitmask."""
        if self._rtab is None:
            self._rtab = column_rank_table(self.gen, max_enum)
        return self._rtab

    def subset_dim(self, J: int, max_enum: int = SUBSET_ENUM_CAP) -> int:
        """dim C_J via the rank table (k minus the complement's rank)."""
        tab = self.rank_table(max_enum)
        full = (1 << self.n) - 1
        return self.k - tab[full ^ J]

    def dlp(self, max_enum: int = SUBSET_ENUM_CAP) -> tuple[int, ...]:
        """Dimension/length profile (k_0, ..., k_n), k_j = max dim C_J."""
        minr = self._min_ranks(max_enum)
        return tuple(self.k - minr[self.n - j] for j in range(self.n + 1))

    def dlp_witnesses(self, max_enum: int = SUBSET_ENUM_CAP) -> tuple[int, ...]:
        """One maximizing coordinate set per profile entry."""
        _, wit = self._min_ranks(max_enum, witness=True)
        full = (1 << self.n) - 1
        return tuple(full ^ wit[self.n - j] for j in range(self.n + 1))

    def weight_hierarchy(self, max_enum: int = SUBSET_ENUM_CAP
                         ) -> tuple[int, ...]:
        """(d_0, ..., d_k): d_i the least support size of an i-dim subcode."""
        kj = self.dlp(max_enum)
        out = [0]
        j = 0
        for i in range(1, self.k + 1):
            while kj[j] < i:
                j += 1
            out.append(j)
        return tuple(out)

    # -- products ------------------------------------------------------------

    def tensor(self, other: "LinearCode") -> "LinearCode":
        """Tensor product code: all n_A x n_B arrays with columns in self
        and rows in other, flattened row-major."""
        if self.field != other.field:
            raise FieldMismatch("tensor factors live over different fields")
        return LinearCode(self.gen.kron(other.gen).rref_nonzero())

    def schur_product(self, other: "LinearCode") -> "LinearCode":
        """Componentwise (Schur) product code."""
        if self.field != other.field:
            raise FieldMismatch("factors live over different fields")
        if self.n != other.n:
            raise InvariantViolation("lengths differ")
        MUL = self.field._mul
        rows = []
        for i in range(self.k):
            a = self.gen.row(i)
            for j in range(other.k):
                b = other.gen.row(j)
                rows.append([MUL[x][y] for x, y in zip(a, b)])
        return LinearCode.span(Matrix.from_rows(self.field, rows))

    def __eq__(self, other):
        return isinstance(other, LinearCode) and self.gen == other.gen

    def __hash__(self):
        return hash(self.gen)

    def __repr__(self):
        return (f"LinearCode([{self.n},{self.k}] over GF({self.field.q}))")


class Subcode:
    """A subspace of a LinearCode, held as an RREF basis inside the parent.

    Dimension 0 is allowed (the zero subcode), unlike LinearCode itself.
    """

    __slots__ = ("parent", "basis", "dim")

    def __init__(self, parent: LinearCode, basis: Matrix, check: bool = True):
        R, piv = basis.rref()
        if len(piv) != basis.rows:
            raise InvariantViolation("subcode basis rows are dependent")
        if basis.cols != parent.n:
            raise InvariantViolation("subcode length differs from parent")
        if check and basis.rows:
            if parent.gen.stack(basis).rank() != parent.k:
                raise NotASubcode(
                    "rows do not lie in the parent code's row space")
        self.parent = parent
        self.basis = R
        self.dim = basis.rows

    @classmethod
    def from_rows(cls, parent: LinearCode, rows) -> "Subcode":
        M = Matrix.from_rows(parent.field, rows).rref_nonzero()
        return cls(parent, M)

    @property
    def support_mask(self) -> int:
        return _support_of_matrix(self.basis)

    @property
    def weight(self) -> int:
        return self.support_mask.bit_count()

    @property
    def degree(self) -> int:
        return self.parent.n - self.weight

    @property
    def effective_rate(self) -> Fraction:
        if self.dim == 0:
            raise ZeroSubcode("the zero subcode has no effective rate")
        return Fraction(self.dim, self.weight)

    @property
    def slope(self) -> Fraction:
        return -1 / self.effective_rate

    def closure(self) -> "Subcode":
        """The largest subcode with the same support, C_{Supp(self)}."""
        return self.parent.shorten(self.support_mask)

    def contains(self, other: "Subcode") -> bool:
        if other.dim == 0:
            return True
        if self.dim < other.dim:
            return False
        return self.basis.stack(other.basis).rank() == self.dim

    def meet(self, other: "Subcode") -> "Subcode":
        B = row_space_intersection(self.basis, other.basis)
        return Subcode(self.parent, B, check=False)

    def join(self, other: "Subcode") -> "Subcode":
        B = self.basis.stack(other.basis).rref_nonzero()
        return Subcode(self.parent, B, check=False)

    def __eq__(self, other):
        return (isinstance(other, Subcode)
                and self.parent == other.parent
                and self.basis == other.basis)

    def __hash__(self):
        return hash((self.parent.gen, self.basis))

    def __repr__(self):
        return (f"Subcode(dim {self.dim} of [{self.parent.n},"
                f"{self.parent.k}], support {sorted(bits_of(self.support_mask))})")


# Spec-surface aliases: the operations read better as functions in formulas.

def support(x) -> int:
    return x.support_mask


def degree(x) -> int:
    return x.degree


def effective_rate(x) -> Fraction:
    return x.effective_rate


def shorten(C: LinearCode, J: int) -> Subcode:
    return C.shorten(J)


def puncture(C: LinearCode, J: int) -> LinearCode:
    return C.puncture(J)


def dual(C: LinearCode) -> LinearCode:
    return C.dual()


def closure(S: Subcode) -> Subcode:
    return S.closure()


def dlp(C: LinearCode, max_enum: int = SUBSET_ENUM_CAP):
    return C.dlp(max_enum)


def weight_hierarchy(C: LinearCode, max_enum: int = SUBSET_ENUM_CAP):
    return C.weight_hierarchy(max_enum)


def tensor(A: LinearCode, B: LinearCode) -> LinearCode:
    return A.tensor(B)


def schur_product(A: LinearCode, B: LinearCode) -> LinearCode:
    return A.schur_product(B)
