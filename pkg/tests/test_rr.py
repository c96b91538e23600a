"""Dimension-level cohomology, duality identities, and dual slope data."""

import random
from fractions import Fraction

import pytest

from hncodes import (
    InvariantViolation,
    LinearCode,
    NotFullSupport,
    canonical_filtration,
    clifford_check,
    code_polygon,
    cohomology,
    dual_code_slopes,
    dual_dlp_check,
    dual_polygon,
    dual_subset_polygon_check,
    full_support_status,
    les_check,
    rr_check,
    rr_normalized,
    serre_check,
    subset_polygon,
    wei_duality_check,
    weight_one_span,
    zoo,
)
from hncodes.code import bits_of

import oracles

GF2, GF3, GF4 = zoo.gf2(), zoo.gf3(), zoo.gf4()


def small_codes(rng, count, fields=(GF2, GF3), nmax=7, kmax=4):
    out = []
    for _ in range(count):
        field = rng.choice(fields)
        n = rng.randrange(1, nmax + 1)
        k = rng.randrange(1, min(kmax, n) + 1)
        out.append(zoo.random_code(rng, field, n, k))
    return out


# ---------------------------------------------------------------------------
# cohomology pairs
# ---------------------------------------------------------------------------

def test_cohomology_against_oracle():
    rng = random.Random(401)
    for C in small_codes(rng, 10, nmax=6):
        rows = oracles.rows_of(C)
        for J in range(1 << C.n):
            P = cohomology(C, J)
            bits = bits_of(J)
            assert P.h0 == oracles.brute_h0(C.field, rows, bits)
            assert P.h1 == oracles.brute_h1(C.field, rows, bits)
            assert P.euler() == J.bit_count() + C.k - C.n
            assert P.h0_basis.rows == P.h0
            for b in range(P.h0):
                row = P.h0_basis.row(b)
                assert all(x == 0 or (J >> i) & 1 for i, x in enumerate(row))
                assert C.gen.row_space_contains(row)
            assert len(P.h1_coords) == P.h1
            assert all(not (J >> i) & 1 for i in P.h1_coords)


def test_cohomology_extremes():
    C = zoo.hamming_7_4()
    full = (1 << 7) - 1
    assert cohomology(C, full).h0 == 4
    assert cohomology(C, full).h1 == 0
    assert cohomology(C, 0).h0 == 0
    assert cohomology(C, 0).h1 == 7 - 4


# ---------------------------------------------------------------------------
# the two duality identities
# ---------------------------------------------------------------------------

def test_rr_identity_directly():
    rng = random.Random(409)
    for C in small_codes(rng, 10, nmax=6):
        if C.k == C.n:
            continue
        D = C.dual()
        full = (1 << C.n) - 1
        rowsC, rowsD = oracles.rows_of(C), oracles.rows_of(D)
        for J in range(1 << C.n):
            h0 = oracles.brute_h0(C.field, rowsC, bits_of(J))
            h0d = oracles.brute_h0(C.field, rowsD, bits_of(full ^ J))
            assert h0 - h0d == J.bit_count() + C.k - C.n


def test_serre_identity_directly():
    rng = random.Random(419)
    for C in small_codes(rng, 10, nmax=6):
        if C.k == C.n:
            continue
        D = C.dual()
        full = (1 << C.n) - 1
        for J in range(1 << C.n):
            assert cohomology(C, J).h1 == cohomology(D, full ^ J).h0


def test_rr_and_serre_checks():
    rng = random.Random(421)
    for C in small_codes(rng, 20, fields=(GF2, GF3, GF4), nmax=8, kmax=5):
        if C.k == C.n:
            continue
        assert rr_check(C)
        assert serre_check(C)


def test_rr_and_serre_sampled_path():
    # past the exhaustive limit the checks run on seeded random subsets
    rng = random.Random(431)
    C = zoo.random_code(rng, GF2, 17, 3)
    assert rr_check(C, samples=200)
    assert serre_check(C, samples=200)


def test_rr_normalized_examples():
    H = zoo.hamming_7_4()                        # d1 = 3, genus 7 - 4 - 3 + 1 = 1
    assert rr_normalized(H, 0) == (-3, 1)
    assert rr_normalized(H, 0b111) == (0, 1)
    assert rr_normalized(H, (1 << 7) - 1) == (4, 1)
    R = zoo.repetition(GF2, 4)                   # MDS: genus 0
    assert rr_normalized(R, 0b0011)[1] == 0


def test_les_check():
    rng = random.Random(433)
    H = zoo.hamming_7_4()
    assert les_check(H, 0b11, 0b1100)
    with pytest.raises(InvariantViolation):
        les_check(H, 0b11, 0b110)                # overlapping subsets
    for C in small_codes(rng, 8, nmax=6):
        for _ in range(6):
            J = rng.randrange(1 << C.n)
            Jp = rng.randrange(1 << C.n) & ~J
            assert les_check(C, J, Jp)


def test_clifford_self_dual():
    E = zoo.extended_hamming_8_4()
    assert clifford_check(E)
    # h0 <= #J / 2 spot check at a middle subset
    assert cohomology(E, 0b1111).h0 <= 2
    with pytest.raises(InvariantViolation):
        clifford_check(zoo.binary_5_2())         # not self dual


# ---------------------------------------------------------------------------
# Wei duality and the dual DLP identity
# ---------------------------------------------------------------------------

def test_wei_duality_exhaustive_small_binary():
    for n in range(1, 6):
        for C in zoo.iter_all_codes(GF2, n):
            assert wei_duality_check(C)
            if C.k < C.n:
                assert dual_dlp_check(C)


def test_wei_duality_other_fields():
    rng = random.Random(439)
    for C in small_codes(rng, 20, fields=(GF3, GF4), nmax=6, kmax=4):
        assert wei_duality_check(C)
        if C.k < C.n:
            assert dual_dlp_check(C)


def test_wei_partition_by_hand():
    C = zoo.binary_9_7()                         # d: 2,3,4,5,7,8,9
    D = C.dual()
    dd = D.weight_hierarchy()[1:]                # dual d_i
    primal = set(C.weight_hierarchy()[1:])
    mirrored = {C.n + 1 - d for d in dd}
    assert primal | mirrored == set(range(1, C.n + 1))
    assert primal & mirrored == set()


# ---------------------------------------------------------------------------
# dual polygons and slopes
# ---------------------------------------------------------------------------

def test_dual_subset_polygon_relation():
    rng = random.Random(443)
    for n in range(2, 6):
        for C in zoo.iter_all_codes(GF2, n, kmax=n - 1):
            assert dual_subset_polygon_check(C)
    for C in small_codes(rng, 15, fields=(GF3, GF4), nmax=6, kmax=4):
        if C.k < C.n:
            assert dual_subset_polygon_check(C)


def test_dual_polygon_affine_form():
    C = zoo.binary_9_7()
    P = subset_polygon(C)
    assert dual_polygon(C) == P.opposite().affine(C.n - C.k, -1, 1)
    assert dual_polygon(C) == subset_polygon(C.dual())


def test_dual_slope_law_values():
    assert dual_code_slopes(zoo.binary_5_2()) == (Fraction(-5, 3),)
    assert dual_code_slopes(zoo.binary_9_7()) == (Fraction(-4), Fraction(-5))
    # mu = -2 is the fixed point
    assert dual_code_slopes(zoo.repetition(GF2, 2)) == (Fraction(-2),)


def test_dual_slope_law_random_full_support():
    rng = random.Random(449)
    checked = 0
    for C in small_codes(rng, 120, fields=(GF2, GF3, GF4), nmax=8, kmax=5):
        if C.k == C.n or full_support_status(C) != (True, True):
            continue
        mus = code_polygon(C).slopes
        expect = tuple(-1 + Fraction(1, mu + 1) for mu in reversed(mus))
        assert dual_code_slopes(C) == expect
        assert code_polygon(C.dual()).slopes == expect
        checked += 1
    assert checked >= 25


def test_dual_filtration_correspondence():
    # shortening the dual to the complement of each step support, reversed
    C = zoo.binary_9_7()
    D = C.dual()
    filt = canonical_filtration(C)
    dfilt = canonical_filtration(D)
    full = (1 << C.n) - 1
    expect = [D.shorten(full ^ s.support_mask) for s in reversed(filt.steps[:-1])]
    for s, e in zip(dfilt.steps[1:], expect):
        assert s.dim == e.dim and s.meet(e).dim == s.dim


def test_dual_slopes_not_full_support_payloads():
    padded = LinearCode.from_rows(GF2, [(1, 0, 1, 0), (0, 0, 1, 1)])
    with pytest.raises(NotFullSupport) as err:
        dual_code_slopes(padded)
    assert err.value.side == "primal"
    assert err.value.zero_columns == 0b10
    with pytest.raises(NotFullSupport) as err:
        dual_code_slopes(zoo.binary_5_2_square())
    assert err.value.side == "dual"
    W = err.value.weight_one_span
    assert W.dim == 1 and W.support_mask == 0b1


def test_weight_one_span():
    assert weight_one_span(zoo.binary_9_7()).dim == 0
    assert weight_one_span(zoo.binary_5_2_square()).dim == 1
    assert weight_one_span(zoo.full_space(GF2, 3)).dim == 3


def test_full_support_status():
    assert full_support_status(zoo.binary_9_7()) == (True, True)
    assert full_support_status(zoo.binary_5_2_square()) == (True, False)
    padded = LinearCode.from_rows(GF2, [(1, 0, 1, 0), (0, 0, 1, 1)])
    assert full_support_status(padded) == (False, True)
