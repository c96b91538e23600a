"""Exact arithmetic over small finite fields GF(p^m) and dense matrices.

Field elements are plain integers in [0, q).  The integer's little-endian
base-p digits are the coefficients of the residue polynomial, so 0 and 1 are
the field's zero and one for every (p, m) and prime subfields embed as the
integers [0, p).  Multiplication runs on log/antilog tables built once at
construction; addition is digit-wise mod p.  All matrix routines are exact
(no floats anywhere) and deterministic.

The subset-rank helpers at the bottom enumerate column subsets of a matrix
by depth-first extension, sharing echelon bases along the search tree.  They
are the workhorse behind weight hierarchies, dimension/length profiles and
cohomology tables, and are capped because the enumeration is exponential.
"""

from __future__ import annotations

import itertools

from .errors import (
    DivisionByZero,
    FieldMismatch,
    FieldTooLarge,
    InvariantViolation,
    NonPrime,
    ReducibleModulus,
    SizeLimitExceeded,
)

MAX_FIELD_ORDER = 256


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _to_digits(x: int, p: int) -> list[int]:
    """Little-endian base-p digits of x (empty list for 0)."""
    out = []
    while x:
        out.append(x % p)
        x //= p
    return out


def _poly_rem(a: list[int], b: list[int], p: int) -> list[int]:
    """Remainder of polynomial a modulo monic polynomial b, digit lists."""
    a = list(a)
    while len(a) >= len(b):
        c = a[-1]
        if c:
            off = len(a) - len(b)
            for i, bi in enumerate(b):
                a[off + i] = (a[off + i] - c * bi) % p
        a.pop()
    return a


def _poly_is_irreducible(mod_digits: list[int], p: int) -> bool:
    """Trial division by every lower-degree monic polynomial."""
    m = len(mod_digits) - 1
    for d in range(1, m):
        for tail in itertools.product(range(p), repeat=d):
            divisor = list(tail) + [1]
            if not any(_poly_rem(mod_digits, divisor, p)):
                return False
    return True


class FieldSpec:
    """A concrete finite field GF(p^m) with q = p^m <= 256.

    Parameters
    ----------
    p : prime characteristic.
    m : extension degree, m >= 1.
    modulus : the irreducible monic modulus polynomial encoded as an
        integer (little-endian base-p digits).  Required when m > 1; for
        m = 1 it defaults to the canonical degree-1 encoding (the integer
        p, i.e. the polynomial x).  No canonicalization is applied: two
        fields with distinct moduli are distinct specifications.

    Elements are ints in [0, q).  Methods do not range-check their
    arguments on the hot path; validate_scalar is available when reading
    untrusted input.
    """

    __slots__ = ("p", "m", "q", "modulus", "_mod_digits", "_exp", "_log",
                 "_add", "_sub", "_neg", "_mul", "_inv")

    def __init__(self, p: int, m: int = 1, modulus: int | None = None):
        if not _is_prime(p):
            raise NonPrime(f"characteristic {p} is not prime")
        if m < 1:
            raise InvariantViolation(f"extension degree must be >= 1, got {m}")
        q = p ** m
        if q > MAX_FIELD_ORDER:
            raise FieldTooLarge(f"field order {q} exceeds {MAX_FIELD_ORDER}")
        if modulus is None:
            if m > 1:
                raise InvariantViolation(
                    f"an irreducible modulus is required for GF({p}^{m})")
            modulus = p
        digits = _to_digits(modulus, p)
        if len(digits) != m + 1 or digits[-1] != 1:
            raise InvariantViolation(
                f"modulus {modulus} does not encode a monic degree-{m} "
                f"polynomial over GF({p})")
        if not _poly_is_irreducible(digits, p):
            raise ReducibleModulus(
                f"modulus {modulus} is reducible over GF({p})")
        self.p = p
        self.m = m
        self.q = q
        self.modulus = modulus
        self._mod_digits = digits
        self._build_tables()

    # -- table construction -------------------------------------------------

    def _raw_mul(self, a: int, b: int) -> int:
        p, m = self.p, self.m
        da = _to_digits(a, p)
        db = _to_digits(b, p)
        if not da or not db:
            return 0
        conv = [0] * (len(da) + len(db) - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    conv[i + j] = (conv[i + j] + x * y) % p
        rem = conv if len(conv) <= m else _poly_rem(conv, self._mod_digits, p)
        out = 0
        for d in reversed(rem):
            out = out * p + d
        return out

    def _raw_add(self, a: int, b: int) -> int:
        p = self.p
        out, mult = 0, 1
        while a or b:
            out += ((a % p + b % p) % p) * mult
            a //= p
            b //= p
            mult *= p
        return out

    def _multiplicative_order(self, g: int) -> int:
        acc, k = g, 1
        while acc != 1:
            acc = self._raw_mul(acc, g)
            k += 1
            if k > self.q:
                raise InvariantViolation("order search did not terminate")
        return k

    def _build_tables(self):
        q = self.q
        # generator of the multiplicative group, then log/antilog tables
        if q == 2:
            gen = 1
        else:
            gen = next(g for g in range(2, q)
                       if self._multiplicative_order(g) == q - 1)
        exp = [1] * (q - 1)
        for i in range(1, q - 1):
            exp[i] = self._raw_mul(exp[i - 1], gen)
        log = [0] * q
        for i, v in enumerate(exp):
            log[v] = i
        self._exp, self._log = exp, log
        mul = [[0] * q for _ in range(q)]
        for a in range(1, q):
            la = log[a]
            row = mul[a]
            for b in range(1, q):
                row[b] = exp[(la + log[b]) % (q - 1)]
        self._mul = mul
        neg = [0] * q
        p = self.p
        for a in range(q):
            neg[a] = sum(((p - d) % p) * p ** i
                         for i, d in enumerate(_to_digits(a, p)))
        self._neg = neg
        add = [[0] * q for _ in range(q)]
        for a in range(q):
            row = add[a]
            for b in range(q):
                row[b] = self._raw_add(a, b)
        self._add = add
        sub = [[0] * q for _ in range(q)]
        for a in range(q):
            rowa, rows = add[a], sub[a]
            for b in range(q):
                rows[b] = rowa[neg[b]]
        self._sub = sub
        inv = [0] * q
        for a in range(1, q):
            inv[a] = exp[(q - 1 - log[a]) % (q - 1)]
        self._inv = inv

    # -- scalar operations --------------------------------------------------

    def add(self, a: int, b: int) -> int:
        return self._add[a][b]

    def sub(self, a: int, b: int) -> int:
        return self._sub[a][b]

    def neg(self, a: int) -> int:
        return self._neg[a]

    def mul(self, a: int, b: int) -> int:
        return self._mul[a][b]

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero(f"inverse of 0 in GF({self.q})")
        return self._inv[a]

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e == 0:
                return 1
            if e < 0:
                raise DivisionByZero(f"0**{e} in GF({self.q})")
            return 0
        le = (self._log[a] * e) % (self.q - 1)
        return self._exp[le]

    def elements(self) -> range:
        return range(self.q)

    def validate_scalar(self, a: int) -> int:
        if not isinstance(a, int) or not 0 <= a < self.q:
            raise InvariantViolation(f"{a!r} is not an element of GF({self.q})")
        return a

    def __eq__(self, other):
        return (isinstance(other, FieldSpec)
                and (self.p, self.m, self.modulus)
                == (other.p, other.m, other.modulus))

    def __hash__(self):
        return hash((self.p, self.m, self.modulus))

    def __repr__(self):
        if self.m == 1:
            return f"FieldSpec({self.p})"
        return f"FieldSpec({self.p}, {self.m}, modulus={self.modulus})"


def field_make(p: int, m: int = 1, modulus: int | None = None) -> FieldSpec:
    """Build a FieldSpec; see the class docstring for conventions."""
    return FieldSpec(p, m, modulus)


def scalar_add(field: FieldSpec, a: int, b: int) -> int:
    return field.add(a, b)


def scalar_mul(field: FieldSpec, a: int, b: int) -> int:
    return field.mul(a, b)


def scalar_inv(field: FieldSpec, a: int) -> int:
    return field.inv(a)


class Matrix:
    """Immutable dense matrix over a FieldSpec, entries stored row-major."""

    __slots__ = ("field", "rows", "cols", "entries", "_rref")

    def __init__(self, field: FieldSpec, rows: int, cols: int,
                 entries: tuple[int, ...]):
        if rows < 0 or cols < 0 or len(entries) != rows * cols:
            raise InvariantViolation(
                f"entry count {len(entries)} does not match {rows}x{cols}")
        q = field.q
        for e in entries:
            if not isinstance(e, int) or not 0 <= e < q:
                raise InvariantViolation(
                    f"{e!r} is not an element of GF({q})")
        self.field = field
        self.rows = rows
        self.cols = cols
        self.entries = tuple(entries)
        self._rref = None

    @classmethod
    def from_rows(cls, field: FieldSpec, rows) -> "Matrix":
        rows = [list(r) for r in rows]
        nr = len(rows)
        nc = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != nc:
                raise InvariantViolation("ragged rows")
        return cls(field, nr, nc, tuple(x for r in rows for x in r))

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> "Matrix":
        ent = [0] * (n * n)
        for i in range(n):
            ent[i * n + i] = 1
        return cls(field, n, n, tuple(ent))

    @classmethod
    def zero(cls, field: FieldSpec, rows: int, cols: int) -> "Matrix":
        return cls(field, rows, cols, (0,) * (rows * cols))

    def entry(self, i: int, j: int) -> int:
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def row_list(self) -> list[tuple[int, ...]]:
        return [self.row(i) for i in range(self.rows)]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def _require_same_field(self, other: "Matrix"):
        if self.field != other.field:
            raise FieldMismatch("operands live over different fields")

    def transpose(self) -> "Matrix":
        ent = tuple(self.entries[i * self.cols + j]
                    for j in range(self.cols) for i in range(self.rows))
        return Matrix(self.field, self.cols, self.rows, ent)

    def matmul(self, other: "Matrix") -> "Matrix":
        self._require_same_field(other)
        if self.cols != other.rows:
            raise InvariantViolation(
                f"cannot multiply {self.rows}x{self.cols} by "
                f"{other.rows}x{other.cols}")
        f = self.field
        ADD, MUL = f._add, f._mul
        out = []
        orows = other.row_list()
        for i in range(self.rows):
            srow = self.row(i)
            acc = [0] * other.cols
            for t, c in enumerate(srow):
                if c:
                    mc = MUL[c]
                    orow = orows[t]
                    for j in range(other.cols):
                        acc[j] = ADD[acc[j]][mc[orow[j]]]
            out.extend(acc)
        return Matrix(f, self.rows, other.cols, tuple(out))

    def stack(self, other: "Matrix") -> "Matrix":
        self._require_same_field(other)
        if self.cols != other.cols:
            raise InvariantViolation("column counts differ")
        return Matrix(self.field, self.rows + other.rows, self.cols,
                      self.entries + other.entries)

    def col_submatrix(self, cols) -> "Matrix":
        cols = list(cols)
        ent = tuple(self.entries[i * self.cols + j]
                    for i in range(self.rows) for j in cols)
        return Matrix(self.field, self.rows, len(cols), ent)

    def kron(self, other: "Matrix") -> "Matrix":
        """Kronecker product; row (i, j) maps to index i * other.rows + j."""
        self._require_same_field(other)
        f = self.field
        MUL = f._mul
        R, C = self.rows * other.rows, self.cols * other.cols
        ent = [0] * (R * C)
        for i in range(self.rows):
            for k in range(self.cols):
                a = self.entry(i, k)
                if not a:
                    continue
                ma = MUL[a]
                for j in range(other.rows):
                    base = (i * other.rows + j) * C + k * other.cols
                    orow = other.row(j)
                    for l in range(other.cols):
                        ent[base + l] = ma[orow[l]]
        return Matrix(f, R, C, tuple(ent))

    def rref(self) -> tuple["Matrix", tuple[int, ...]]:
        """Reduced row echelon form and the pivot column tuple."""
        if self._rref is not None:
            return self._rref
        f = self.field
        SUB, MUL, INV = f._sub, f._mul, f._inv
        rows = [list(self.row(i)) for i in range(self.rows)]
        pivots = []
        r = 0
        for c in range(self.cols):
            pr = next((i for i in range(r, len(rows)) if rows[i][c]), None)
            if pr is None:
                continue
            rows[r], rows[pr] = rows[pr], rows[r]
            head = rows[r]
            hc = head[c]
            if hc != 1:
                mi = MUL[INV[hc]]
                rows[r] = head = [mi[x] for x in head]
            for i, other in enumerate(rows):
                if i != r and other[c]:
                    mc = MUL[other[c]]
                    rows[i] = [SUB[x][mc[y]] for x, y in zip(other, head)]
            pivots.append(c)
            r += 1
            if r == len(rows):
                break
        out = Matrix(f, self.rows, self.cols,
                     tuple(x for row in rows for x in row))
        out._rref = (out, tuple(pivots))
        self._rref = (out, tuple(pivots))
        return self._rref

    def rank(self) -> int:
        return len(self.rref()[1])

    def rref_nonzero(self) -> "Matrix":
        """RREF with zero rows dropped (rank many rows)."""
        R, piv = self.rref()
        r = len(piv)
        return Matrix(self.field, r, self.cols, R.entries[:r * self.cols])

    def right_nullspace(self) -> "Matrix":
        """Basis of {x : M x = 0}, one solution per row."""
        R, piv = self.rref()
        free = [j for j in range(self.cols) if j not in piv]
        f = self.field
        NEG = f._neg
        rows = []
        for fc in free:
            v = [0] * self.cols
            v[fc] = 1
            for i, pc in enumerate(piv):
                v[pc] = NEG[R.entry(i, fc)]
            rows.append(v)
        return Matrix.from_rows(f, rows) if rows else Matrix(f, 0, self.cols, ())

    def row_space_contains(self, vector) -> bool:
        vec = Matrix.from_rows(self.field, [list(vector)])
        return self.rank() == self.stack(vec).rank()

    def row_space_equals(self, other: "Matrix") -> bool:
        self._require_same_field(other)
        if self.cols != other.cols:
            return False
        r = self.rank()
        return r == other.rank() and r == self.stack(other).rank()

    def __eq__(self, other):
        return (isinstance(other, Matrix)
                and self.field == other.field
                and (self.rows, self.cols) == (other.rows, other.cols)
                and self.entries == other.entries)

    def __hash__(self):
        return hash((self.field, self.rows, self.cols, self.entries))

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in self.row(i))
                         for i in range(self.rows))
        return f"Matrix({self.rows}x{self.cols} /GF({self.field.q}): {body})"


def rref(M: Matrix) -> tuple[Matrix, tuple[int, ...]]:
    return M.rref()


def rank(M: Matrix) -> int:
    return M.rank()


def nullspace(M: Matrix) -> Matrix:
    return M.right_nullspace()


def kron(A: Matrix, B: Matrix) -> Matrix:
    return A.kron(B)


def row_space_intersection(A: Matrix, B: Matrix) -> Matrix:
    """Basis (RREF, zero rows dropped) of rowspace(A) & rowspace(B).

    Zassenhaus: reduce [A|A; B|0]; rows whose left half vanished carry the
    intersection in their right half.
    """
    if A.field != B.field or A.cols != B.cols:
        raise FieldMismatch("incompatible ambient spaces")
    f, n = A.field, A.cols
    rows = []
    for i in range(A.rows):
        r = A.row(i)
        rows.append(list(r) + list(r))
    for i in range(B.rows):
        rows.append(list(B.row(i)) + [0] * n)
    if not rows:
        return Matrix(f, 0, n, ())
    R, piv = Matrix.from_rows(f, rows).rref()
    keep = []
    for i in range(R.rows):
        row = R.row(i)
        if any(row[:n]):
            continue
        if any(row[n:]):
            keep.append(list(row[n:]))
    if not keep:
        return Matrix(f, 0, n, ())
    return Matrix.from_rows(f, keep).rref_nonzero()


# -- column subset enumeration ---------------------------------------------

SUBSET_ENUM_CAP = 20


def _check_cap(n: int, cap: int):
    if n > cap:
        raise SizeLimitExceeded(
            f"enumerating 2^{n} column subsets exceeds the cap of 2^{cap}; "
            f"raise it with --max-enum / the max_enum argument",
            limit=cap, needed=n)


def echelon_inserter(M: Matrix):
    """Return (insert, cols) for incremental column-rank bookkeeping.

    `insert(basis, v)` returns an extended immutable basis when v is
    independent of it, else None.  Bases are shared along search trees.
    Over GF(2) columns are bit-packed ints; otherwise tuples with pivot
    normalization.
    """
    f = M.field
    if f.q == 2:
        cols = []
        for j in range(M.cols):
            c = 0
            for i in range(M.rows):
                if M.entry(i, j):
                    c |= 1 << i
            cols.append(c)

        def insert(basis, v):
            for b in basis:
                w = v ^ b
                if w < v:
                    v = w
            if v:
                return basis + (v,)
            return None

        return insert, cols

    SUB, MUL, INV = f._sub, f._mul, f._inv
    cols = [M.column(j) for j in range(M.cols)]

    def insert(basis, v):
        for piv, row in basis:
            c = v[piv]
            if c:
                mc = MUL[c]
                v = tuple(SUB[x][mc[y]] for x, y in zip(v, row))
        for i, x in enumerate(v):
            if x:
                mi = MUL[INV[x]]
                return basis + ((i, tuple(mi[y] for y in v)),)
        return None

    return insert, cols


def column_rank_table(M: Matrix, max_enum: int = SUBSET_ENUM_CAP) -> bytes:
    """rank of every column subset of M, indexed by bitmask."""
    n = M.cols
    _check_cap(n, max_enum)
    table = bytearray(1 << n)
    insert, cols = echelon_inserter(M)

    def rec(start, mask, rk, basis):
        table[mask] = rk
        for j in range(start, n):
            nb = insert(basis, cols[j])
            if nb is None:
                rec(j + 1, mask | (1 << j), rk, basis)
            else:
                rec(j + 1, mask | (1 << j), rk + 1, nb)

    rec(0, 0, 0, ())
    return bytes(table)


def min_column_rank_by_size(M: Matrix, max_enum: int = SUBSET_ENUM_CAP,
                            witness: bool = False):
    """For each s, the minimum rank over column subsets of size s.

    Returns the list of minima, or (minima, witnesses) with one minimizing
    bitmask per size when witness=True.  Prunes subtrees that cannot
    improve any entry (subset ranks only grow along extensions).
    """
    n = M.cols
    _check_cap(n, max_enum)
    INF = n + 1
    best = [INF] * (n + 1)
    wit = [0] * (n + 1)
    insert, cols = echelon_inserter(M)

    def rec(start, mask, size, rk, basis):
        if rk < best[size]:
            best[size] = rk
            wit[size] = mask
        rem = n - start
        if not rem:
            return
        for t in range(1, rem + 1):
            if best[size + t] > rk:
                break
        else:
            return
        for j in range(start, n):
            nb = insert(basis, cols[j])
            if nb is None:
                rec(j + 1, mask | (1 << j), size + 1, rk, basis)
            else:
                rec(j + 1, mask | (1 << j), size + 1, rk + 1, nb)

    rec(0, 0, 0, 0, ())
    if witness:
        return best, wit
    return best


def iter_rref_matrices(field: FieldSpec, r: int, c: int):
    """Yield every r x c matrix over `field` in reduced row echelon form
    with exactly r pivots (i.e. every r-dimensional subspace of F^c once).
    """
    if r == 0:
        yield Matrix(field, 0, c, ())
        return
    if r > c:
        return
    q = field.q
    for pivots in itertools.combinations(range(c), r):
        pivset = set(pivots)
        free = [(i, j) for i in range(r) for j in range(pivots[i] + 1, c)
                if j not in pivset]
        for vals in itertools.product(range(q), repeat=len(free)):
            ent = [0] * (r * c)
            for i, p in enumerate(pivots):
                ent[i * c + p] = 1
            for (i, j), v in zip(free, vals):
                ent[i * c + j] = v
            yield Matrix(field, r, c, tuple(ent))
