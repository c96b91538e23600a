"""Tensor products: the Schaathun lower bound, chain-condition equality,
and semistability preservation."""

import itertools
import random

import pytest

from hncodes import (
    InvalidHierarchy,
    InvariantViolation,
    LinearCode,
    NotASubcode,
    Subcode,
    is_chained,
    is_semistable,
    schaathun_bound,
    schaathun_bound_table,
    schaathun_verify,
    tensor_semistable_check,
    wei_yang_check,
    witness,
    zoo,
)

import oracles

GF2, GF3 = zoo.gf2(), zoo.gf3()

NON_CHAINED_GF3 = LinearCode.from_rows(
    GF3, [(1, 0, 0, 0, 0, 1), (0, 1, 0, 1, 1, 0), (0, 0, 1, 1, 2, 0)])


def hierarchies(nmax, kmax):
    """All strictly increasing weight hierarchies (0, d_1, ..., d_k)."""
    for k in range(1, kmax + 1):
        for combo in itertools.combinations(range(1, nmax + 1), k):
            yield (0,) + combo


# ---------------------------------------------------------------------------
# the bound itself
# ---------------------------------------------------------------------------

def test_schaathun_small_square():
    d = (0, 2, 3)
    assert [schaathun_bound(d, d, r) for r in range(5)] == [0, 4, 6, 8, 9]
    assert schaathun_bound_table(zoo.binary_3_2(), zoo.binary_5_2()) == \
        (0, 6, 9, 13, 15)


def test_schaathun_endpoints():
    for dA, dB in [((0, 1, 4), (0, 2, 3, 5)), ((0, 3), (0, 2, 4))]:
        kA, kB = len(dA) - 1, len(dB) - 1
        assert schaathun_bound(dA, dB, 1) == dA[1] * dB[1]
        assert schaathun_bound(dA, dB, kA * kB) == \
            sum((dA[i] - dA[i - 1]) * dB[kB] for i in range(1, kA + 1))


def test_schaathun_validation():
    d = (0, 2, 3)
    with pytest.raises(InvalidHierarchy):
        schaathun_bound((0, 3, 2), d, 1)
    with pytest.raises(InvalidHierarchy):
        schaathun_bound(d, (0, 2, 2), 1)
    with pytest.raises(InvalidHierarchy):
        schaathun_bound((1, 2), d, 1)
    with pytest.raises(ValueError):
        schaathun_bound(d, d, 5)
    with pytest.raises(ValueError):
        schaathun_bound(d, d, -1)


def test_schaathun_dp_matches_enumeration():
    pool = list(hierarchies(6, 3))
    rng = random.Random(501)
    for _ in range(400):
        dA, dB = rng.choice(pool), rng.choice(pool)
        kA, kB = len(dA) - 1, len(dB) - 1
        for r in range(1, kA * kB + 1):
            assert schaathun_bound(dA, dB, r) == \
                oracles.schaathun_oracle(dA, dB, r)


def test_schaathun_exact_sum_agrees():
    # requiring the t-sequence to sum exactly to r never changes the optimum
    pool = list(hierarchies(8, 4))
    rng = random.Random(503)
    for _ in range(150):
        dA, dB = rng.choice(pool), rng.choice(pool)
        kA, kB = len(dA) - 1, len(dB) - 1
        for r in range(kA * kB + 1):
            assert schaathun_bound(dA, dB, r) == \
                schaathun_bound(dA, dB, r, exact_sum=True)


# ---------------------------------------------------------------------------
# witnesses
# ---------------------------------------------------------------------------

def test_witness_inequality_chain():
    rng = random.Random(509)
    seen = 0
    for _ in range(150):
        nA, nB = rng.randrange(2, 4), rng.randrange(2, 5)
        A = zoo.random_code(rng, GF2, nA, rng.randrange(1, nA + 1))
        B = zoo.random_code(rng, GF2, nB, rng.randrange(1, nB + 1))
        T = A.tensor(B)
        D = zoo.random_subcode(rng, T, rng.randrange(1, T.k + 1))
        w = witness(D, A, B)
        assert w.weight >= w.cost >= w.bound
        assert w.r == D.dim
        assert w.bound == schaathun_bound(
            A.weight_hierarchy(), B.weight_hierarchy(), w.r)
        assert len(w.column_dims) == B.n
        assert all(w.t[i] >= w.t[i + 1] for i in range(len(w.t) - 1))
        assert sum(w.t) >= w.r
        seen += 1
    assert seen == 150


def test_witness_whole_tensor_and_rank_one():
    A, B = zoo.binary_3_2(), zoo.binary_5_2()
    T = A.tensor(B)
    whole = Subcode.from_rows(T, [T.gen.row(i) for i in range(T.k)])
    w = witness(whole, A, B)
    assert w.r == T.k and w.weight == T.support_mask.bit_count()
    # a Kronecker product of minimum weight words meets the r = 1 bound
    a = min((v for v in oracles.codewords(A.field, oracles.rows_of(A))
             if any(v)), key=lambda v: sum(x != 0 for x in v))
    b = min((v for v in oracles.codewords(B.field, oracles.rows_of(B))
             if any(v)), key=lambda v: sum(x != 0 for x in v))
    prod = tuple(A.field.mul(x, y) for x in a for y in b)
    rank1 = Subcode.from_rows(T, [prod])
    w1 = witness(rank1, A, B)
    assert w1.weight == w1.bound == schaathun_bound(
        A.weight_hierarchy(), B.weight_hierarchy(), 1)


def test_witness_rejects_foreign_subcode():
    D = Subcode.from_rows(zoo.full_space(GF2, 15),
                          [(1,) + (0,) * 14])
    with pytest.raises(NotASubcode):
        witness(D, zoo.binary_3_2(), zoo.binary_5_2())


def test_schaathun_verify_pairs():
    rng = random.Random(521)
    for _ in range(10):
        nA, nB = rng.randrange(2, 4), rng.randrange(2, 4)
        field = rng.choice([GF2, GF3])
        A = zoo.random_code(rng, field, nA, rng.randrange(1, nA + 1))
        B = zoo.random_code(rng, field, nB, rng.randrange(1, nB + 1))
        assert schaathun_verify(A, B)


# ---------------------------------------------------------------------------
# the chain condition
# ---------------------------------------------------------------------------

def test_is_chained_known_examples():
    assert is_chained(zoo.repetition(GF2, 5))
    assert is_chained(zoo.simplex(3))
    block = LinearCode.from_rows(GF2, [(1, 0, 0, 0, 0, 0),
                                       (0, 1, 1, 0, 0, 0),
                                       (0, 0, 0, 1, 1, 1)])
    assert is_chained(block)
    assert not is_chained(NON_CHAINED_GF3)


def test_is_chained_against_oracle():
    for n in range(1, 5):
        for C in zoo.iter_all_codes(GF2, n):
            assert is_chained(C) == oracles.brute_chained(
                C.field, oracles.rows_of(C))
    rng = random.Random(523)
    for _ in range(12):
        n = rng.randrange(2, 6)
        C = zoo.random_code(rng, GF3, n, rng.randrange(1, min(3, n) + 1))
        assert is_chained(C) == oracles.brute_chained(
            C.field, oracles.rows_of(C))
    assert oracles.brute_chained(GF3, oracles.rows_of(NON_CHAINED_GF3)) is False


def test_wei_yang_equality_on_chained_pairs():
    A, B = zoo.binary_3_2(), zoo.binary_5_2()
    assert wei_yang_check(A, B)
    assert wei_yang_check(zoo.repetition(GF2, 3), zoo.simplex(2))
    # the equality it certifies, spelled out for one pair
    T = A.tensor(A)
    assert T.weight_hierarchy() == schaathun_bound_table(A, A)
    with pytest.raises(InvariantViolation):
        wei_yang_check(NON_CHAINED_GF3, A)


# ---------------------------------------------------------------------------
# semistability of products
# ---------------------------------------------------------------------------

def test_tensor_semistable_check():
    assert tensor_semistable_check(zoo.binary_5_2(), zoo.binary_3_2())
    assert tensor_semistable_check(zoo.repetition(GF2, 2), zoo.simplex(2))
    with pytest.raises(InvariantViolation):
        tensor_semistable_check(zoo.binary_9_7(), zoo.binary_3_2())


def test_tensor_semistable_exhaustive_spot():
    rng = random.Random(541)
    pairs = 0
    pool = [C for n in range(1, 4) for C in zoo.iter_all_codes(GF2, n)
            if is_semistable(C)]
    for A, B in itertools.product(pool, repeat=2):
        if A.n * B.n > 9:
            continue
        assert tensor_semistable_check(A, B)
        assert is_semistable(A.tensor(B))
        pairs += 1
    assert pairs > 50
