"""Canonical polygons, filtrations, semistability, and the two lattices."""

import random
from fractions import Fraction

import pytest

from hncodes import (
    CanonicalPolygon,
    EmptyProfile,
    InvariantViolation,
    LinearCode,
    NotFullSupport,
    SizeLimitExceeded,
    affine_transform,
    canonical_filtration,
    code_polygon,
    gap_condition_check,
    graded_pieces,
    is_semistable,
    is_stable,
    opposite_polygon,
    polygon_from_profile,
    semistability_witness,
    subset_polygon,
    zoo,
)
from hncodes.hn import (
    SubsetLattice,
    SubspaceLattice,
    cosupport,
    subset_to_subcode,
    verify_galois,
    verify_parallelogram,
)

import oracles

GF2, GF3 = zoo.gf2(), zoo.gf3()


def small_codes(rng, count, fields=(GF2, GF3), nmax=7, kmax=4):
    out = []
    for _ in range(count):
        field = rng.choice(fields)
        n = rng.randrange(1, nmax + 1)
        k = rng.randrange(1, min(kmax, n) + 1)
        out.append(zoo.random_code(rng, field, n, k))
    return out


# ---------------------------------------------------------------------------
# polygons
# ---------------------------------------------------------------------------

def test_polygon_from_profile_known():
    P = polygon_from_profile([9, 4, 3, 0])
    assert P.vertices == ((0, Fraction(9)), (3, Fraction(0)))
    assert P.slopes == (Fraction(-3),)
    Q = polygon_from_profile([0, 2, 3, 3])
    assert Q.vertices == ((0, Fraction(0)), (1, Fraction(2)),
                          (2, Fraction(3)), (3, Fraction(3)))
    assert Q.slopes == (Fraction(2), Fraction(1), Fraction(0))
    assert (Q.mu_max, Q.mu_min) == (2, 0)
    assert Q.total_rank == 3
    assert Q.N == 3


def test_polygon_validation():
    with pytest.raises(EmptyProfile):
        polygon_from_profile([])
    with pytest.raises(InvariantViolation):
        CanonicalPolygon([(0, 0), (1, 1), (2, 3)])   # convex corner
    with pytest.raises(InvariantViolation):
        CanonicalPolygon([(0, 0), (0, 1)])


def test_polygon_against_envelope_oracle():
    rng = random.Random(211)
    for _ in range(60):
        n = rng.randrange(1, 8)
        values = [rng.randrange(-6, 7) for _ in range(n + 1)]
        P = polygon_from_profile(values)
        env = oracles.brute_envelope(values)
        for x in range(n + 1):
            assert P.value_at(x) == env[x]
        assert list(P.vertices) == oracles.envelope_vertices(values)
        assert all(a > b for a, b in zip(P.slopes, P.slopes[1:]))


def test_polygon_value_at_interpolates():
    P = polygon_from_profile([0, 2, 3, 3])
    assert P.value_at(Fraction(1, 2)) == 1
    assert P.value_at(Fraction(3, 2)) == Fraction(5, 2)
    with pytest.raises(InvariantViolation):
        P.value_at(-1)
    with pytest.raises(InvariantViolation):
        P.value_at(4)


def test_affine_transform():
    P = polygon_from_profile([0, 2, 3, 3])
    Q = affine_transform(P, 1, Fraction(1, 2), 2)
    # pointwise y -> a + b*x + c*y
    for x in range(4):
        assert Q.value_at(x) == 1 + Fraction(x, 2) + 2 * P.value_at(x)
    assert Q.slopes == tuple(Fraction(1, 2) + 2 * mu for mu in P.slopes)
    with pytest.raises(InvariantViolation):
        affine_transform(P, 0, 0, 0)             # c must be positive
    with pytest.raises(InvariantViolation):
        affine_transform(P, 0, 0, -1)


def test_opposite_and_reflected():
    P = polygon_from_profile([0, 2, 3, 3])
    O = opposite_polygon(P)
    assert O.vertices == ((0, Fraction(3)), (1, Fraction(3)),
                          (2, Fraction(2)), (3, Fraction(0)))
    assert opposite_polygon(O) == P
    D = polygon_from_profile([9, 8, 6, 0])
    R = D.reflected()
    assert R.vertices == ((0, Fraction(3)), (6, Fraction(2)),
                          (8, Fraction(1)), (9, Fraction(0)))
    assert R.reflected() == D
    with pytest.raises(InvariantViolation):
        P.reflected()                            # needs strictly decreasing


def test_code_and_subset_polygon_examples():
    C = zoo.binary_9_7()
    assert code_polygon(C).vertices == \
        ((0, Fraction(9)), (4, Fraction(4)), (7, Fraction(0)))
    assert code_polygon(C).slopes == (Fraction(-5, 4), Fraction(-4, 3))
    assert subset_polygon(C).vertices == \
        ((0, Fraction(7)), (4, Fraction(4)), (9, Fraction(0)))
    S = zoo.binary_5_2()
    assert code_polygon(S).vertices == ((0, Fraction(5)), (2, Fraction(0)))
    assert code_polygon(S).slopes == (Fraction(-5, 2),)


def test_subset_polygon_is_reflection_for_full_support():
    rng = random.Random(223)
    for C in small_codes(rng, 40):
        if C.is_full_support:
            assert subset_polygon(C) == code_polygon(C).reflected()


def test_separation_without_full_support():
    # a dead coordinate forces a flat initial subset-side segment
    C = LinearCode.from_rows(GF2, [(1, 0, 1, 0), (0, 0, 1, 1)])
    assert subset_polygon(C).vertices == \
        ((0, Fraction(2)), (1, Fraction(2)), (4, Fraction(0)))
    assert code_polygon(C).vertices == ((0, Fraction(4)), (2, Fraction(1)))
    assert code_polygon(C).reflected().vertices == ((1, Fraction(2)), (4, Fraction(0)))
    # the reflected polygon is dominated by the subset polygon where defined
    for x in range(1, 5):
        assert subset_polygon(C).value_at(x) >= code_polygon(C).reflected().value_at(x)


# ---------------------------------------------------------------------------
# semistability and the canonical filtration
# ---------------------------------------------------------------------------

def test_semistable_against_oracle_exhaustive_binary():
    for n in range(1, 5):
        for C in zoo.iter_all_codes(GF2, n):
            rows = oracles.rows_of(C)
            levels = oracles.subspaces_by_dim(GF2, rows)
            assert is_semistable(C) == oracles.brute_semistable(GF2, rows, levels)
            assert is_stable(C) == oracles.brute_stable(GF2, rows, levels)
    for C in zoo.iter_all_codes(GF2, 5, kmax=3):
        rows = oracles.rows_of(C)
        levels = oracles.subspaces_by_dim(GF2, rows)
        assert is_semistable(C) == oracles.brute_semistable(GF2, rows, levels)
        assert is_stable(C) == oracles.brute_stable(GF2, rows, levels)


def test_semistable_against_oracle_gf3():
    rng = random.Random(227)
    for C in small_codes(rng, 25, fields=(GF3,), nmax=5, kmax=3):
        rows = oracles.rows_of(C)
        assert is_semistable(C) == oracles.brute_semistable(GF3, rows)
        assert is_stable(C) == oracles.brute_stable(GF3, rows)


def test_semistability_cross_route():
    rng = random.Random(229)
    for C in small_codes(rng, 60, nmax=9, kmax=5):
        ss = is_semistable(C)
        assert ss == (code_polygon(C).N <= 1)
        assert ss == (semistability_witness(C) is None)


def test_witness_violates_the_rate():
    rng = random.Random(233)
    seen = 0
    for C in small_codes(rng, 80, nmax=9, kmax=5):
        W = semistability_witness(C)
        if W is None:
            continue
        seen += 1
        assert W.effective_rate > C.effective_rate
        filt = canonical_filtration(C)
        assert W == filt.steps[1]                # maximal destabilizing step
    assert seen >= 10


def test_filtration_of_binary_9_7():
    C = zoo.binary_9_7()
    filt = canonical_filtration(C)
    assert filt.ranks == (0, 4, 7)
    assert filt.slopes == (Fraction(-5, 4), Fraction(-4, 3))
    assert filt.polygon == code_polygon(C)
    assert [s.dim for s in filt.steps] == [0, 4, 7]
    assert filt.steps[1].support_mask == 0b111110000
    assert filt.steps[1].weight == 5


def test_filtration_structure_random():
    rng = random.Random(239)
    for C in small_codes(rng, 50, nmax=8, kmax=4):
        filt = canonical_filtration(C)
        assert filt.polygon == code_polygon(C)
        assert filt.steps[0].dim == 0
        assert filt.steps[-1].dim == C.k
        for a, b in zip(filt.steps, filt.steps[1:]):
            assert b.contains(a) and b.dim > a.dim
        for s in filt.steps[1:]:
            assert s.closure() == s              # steps are closed subcodes
        # vertex data matches the steps
        for (x, y), s in zip(filt.polygon.vertices, filt.steps):
            assert s.dim == x
            assert Fraction(C.n - s.weight) == y
        if is_semistable(C):
            assert len(filt.steps) == 2 or C.k == 0


def test_graded_pieces():
    C = zoo.binary_9_7()
    pieces = graded_pieces(C)
    assert [(g.n, g.k) for g in pieces] == [(5, 4), (4, 3)]
    mus = code_polygon(C).slopes
    for g, mu in zip(pieces, mus):
        assert is_semistable(g)
        assert code_polygon(g).slopes == (mu,)
    S = zoo.binary_5_2()
    assert graded_pieces(S) == [S]
    padded = LinearCode.from_rows(GF2, [(1, 0, 1, 0), (0, 0, 1, 1)])
    with pytest.raises(NotFullSupport):
        graded_pieces(padded)


def test_graded_pieces_random_full_support():
    rng = random.Random(241)
    for C in small_codes(rng, 40, nmax=8, kmax=4):
        if not C.is_full_support:
            continue
        pieces = graded_pieces(C)
        mus = code_polygon(C).slopes
        assert len(pieces) == len(mus)
        assert sum(g.k for g in pieces) == C.k
        assert sum(g.n for g in pieces) == C.n
        for g, mu in zip(pieces, mus):
            assert is_semistable(g)
            assert Fraction(g.n - g.weight) == 0  # full support pieces
            assert -Fraction(1, 1) / g.effective_rate == -Fraction(g.n, g.k)
            assert code_polygon(g).slopes == (mu,)


# ---------------------------------------------------------------------------
# lattices and the order-reversing correspondence
# ---------------------------------------------------------------------------

def test_subspace_lattice_structure():
    C = zoo.binary_5_2()
    L = SubspaceLattice(C)
    assert len(L) == 5                           # 1 + 3 + 1 subspaces
    dims = sorted(L.rank(i) for i in range(len(L)))
    assert dims == [0, 1, 1, 1, 2]
    for i in range(len(L)):
        for j in range(len(L)):
            m, jn = L.meet(i, j), L.join(i, j)
            assert L.leq(m, i) and L.leq(m, j)
            assert L.leq(i, jn) and L.leq(j, jn)
            # modular rank identity
            assert L.rank(m) + L.rank(jn) == L.rank(i) + L.rank(j)
    W = C.whole_subcode()
    assert L.rank(L.index_of(W)) == 2
    assert L.degree(L.index_of(W)) == 0


def test_subspace_lattice_cap():
    with pytest.raises(SizeLimitExceeded):
        SubspaceLattice(zoo.full_space(GF2, 13))


def test_parallelogram_exhaustive_small():
    rng = random.Random(251)
    for C in small_codes(rng, 12, nmax=6, kmax=3):
        assert verify_parallelogram(SubspaceLattice(C))


def test_subset_lattice_for_code():
    C = zoo.binary_9_7()
    S = SubsetLattice.for_code(C)
    rows = oracles.rows_of(C)
    for J in [0, 0b111, 0b111110000, (1 << 9) - 1]:
        assert S.rank(J) == J.bit_count()
        comp = ((1 << 9) - 1) ^ J
        assert S.degree(J) == oracles.brute_h0(GF2, rows, [i for i in range(9)
                                                           if (comp >> i) & 1])
    assert S.meet(0b110, 0b011) == 0b010
    assert S.join(0b110, 0b011) == 0b111
    assert S.leq(0b010, 0b011) and not S.leq(0b100, 0b011)


def test_galois_adjunction():
    rng = random.Random(257)
    pool = [zoo.binary_5_2(),
            LinearCode.from_rows(GF2, [(1, 0, 1, 0), (0, 0, 1, 1)])]
    pool += small_codes(rng, 10, nmax=6, kmax=3)
    for C in pool:
        assert verify_galois(C)


def test_galois_adjunction_sampled_on_larger_code():
    # exhaustive lattices blow up past k ~ 4; larger codes use sampled sides
    rng = random.Random(259)
    C = zoo.binary_9_7()
    subcodes = [C.zero_subcode(), C.whole_subcode()]
    subcodes += [zoo.random_subcode(rng, C, rng.randrange(1, 4)) for _ in range(8)]
    subsets = [rng.randrange(1 << C.n) for _ in range(40)] + [0, (1 << C.n) - 1]
    assert verify_galois(C, subcodes=subcodes, subsets=subsets)


def test_subset_to_subcode_and_cosupport():
    C = zoo.binary_9_7()
    S = subset_to_subcode(C, 0b1111)             # vanish on the first four
    assert S.dim == 4
    assert S.support_mask == 0b111110000
    assert cosupport(S) == 0b1111
    # adjunction: S' vanishes on J iff J inside cosupport(S')
    T = subset_to_subcode(C, 0b11)
    assert cosupport(T) & 0b11 == 0b11


def test_gap_condition():
    rng = random.Random(263)
    for C in [zoo.binary_5_2(), zoo.binary_9_7()] + small_codes(rng, 15, nmax=6):
        assert gap_condition_check(C)
