import itertools
import random

import pytest

from multinv.errors import NonUnimodularError
from multinv.intlinalg import (
    Sublattice,
    covers,
    det,
    diagonal_of,
    fixed_lattice,
    hnf_columns,
    intersect,
    intmat,
    kernel_basis,
    moved_lattice,
    quotient_invariants,
    rank,
    snf,
    unimodular_inverse,
)

G1 = [[-1, 0, 0], [0, 0, 1], [0, 1, 0]]
G1_MINUS_I = [[-2, 0, 0], [0, -1, 1], [0, 1, -1]]


def mats_equal(A, B):
    return A.shape == B.shape and all(int(x) == int(y) for x, y in zip(A.flat, B.flat))


def check_snf_contract(M):
    S, U, V = snf(M)
    assert mats_equal(U @ M @ V, S)
    rows, cols = S.shape
    for i in range(rows):
        for j in range(cols):
            if i != j:
                assert int(S[i, j]) == 0
    diag = diagonal_of(S)
    assert all(d >= 0 for d in diag)
    for a, b in zip(diag, diag[1:]):
        if a == 0:
            assert b == 0
        else:
            assert b % a == 0
    assert abs(det(U)) == 1
    assert abs(det(V)) == 1
    return diag


def test_snf_divisibility_chain_forced():
    diag = check_snf_contract(intmat([[2, 0], [0, 3]]))
    assert diag == [1, 6]


def test_snf_zero_matrix():
    M = intmat([[0, 0], [0, 0]])
    S, U, V = snf(M)
    assert diagonal_of(S) == [0, 0]
    assert mats_equal(U, intmat([[1, 0], [0, 1]]))
    assert mats_equal(V, intmat([[1, 0], [0, 1]]))


def test_snf_g1_minus_identity():
    diag = check_snf_contract(intmat(G1_MINUS_I))
    assert diag == [1, 2, 0]


def test_snf_random_shapes():
    rng = random.Random(4021)
    for _ in range(200):
        rows = rng.randint(1, 5)
        cols = rng.randint(1, 5)
        M = intmat([[rng.randint(-9, 9) for _ in range(cols)] for _ in range(rows)])
        check_snf_contract(M)


def test_rank_examples():
    assert rank(intmat([[1, 0], [0, 1]])) == 2
    neg2 = intmat([[-2, 0, 0], [0, -2, 0], [0, 0, -2]])
    assert rank(neg2) == 3
    assert rank(intmat(G1_MINUS_I)) == 2


def test_rank_plus_kernel_rank_is_cols():
    rng = random.Random(7253)
    for _ in range(100):
        rows = rng.randint(1, 4)
        cols = rng.randint(1, 4)
        M = intmat([[rng.randint(-4, 4) for _ in range(cols)] for _ in range(rows)])
        assert rank(M) + kernel_basis(M).shape[1] == cols


def test_hnf_is_idempotent_and_canonical():
    rng = random.Random(99)
    for _ in range(100):
        n = rng.randint(1, 4)
        m = rng.randint(0, 4)
        M = intmat([[rng.randint(-5, 5) for _ in range(m)] for _ in range(n)])
        H = hnf_columns(M)
        assert mats_equal(hnf_columns(H), H)
        # unimodular column operations do not change the canonical form
        perm = list(range(m))
        rng.shuffle(perm)
        assert mats_equal(hnf_columns(M[:, perm]), H)


def test_fixed_lattice_examples():
    ident = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    assert fixed_lattice([ident]) == Sublattice.full(3)
    neg = [[-1, 0, 0], [0, -1, 0], [0, 0, -1]]
    assert fixed_lattice([neg]) == Sublattice.zero(3)
    L = fixed_lattice([G1])
    assert L.rank == 1
    assert [int(x) for x in L.basis[:, 0]] == [0, 1, 1]
    assert L.saturated
    assert quotient_invariants(L)[1] == []


def test_fixed_lattice_generator_independent():
    # the fixed lattice of a generating set equals that of the full group
    gens = [G1, [[-1, 0, 0], [0, 1, 0], [0, 0, 1]]]
    third = intmat(gens[0]) @ intmat(gens[1])
    assert fixed_lattice(gens) == fixed_lattice(gens + [third])


def test_fixed_lattice_dimension_mismatch():
    with pytest.raises(ValueError):
        fixed_lattice([[[1, 0], [0, 1]], G1])


def test_moved_lattice_examples():
    ident = [[1, 0], [0, 1]]
    assert moved_lattice([ident]) == Sublattice.zero(2)
    neg = [[-1, 0], [0, -1]]
    L = moved_lattice([neg])
    assert [[int(x) for x in row] for row in L.basis] == [[2, 0], [0, 2]]
    assert not L.saturated
    assert quotient_invariants(L) == (0, [2, 2])
    Lg1 = moved_lattice([G1])
    assert [[int(x) for x in row] for row in Lg1.basis] == [[2, 0], [0, 1], [0, -1]]
    assert quotient_invariants(Lg1) == (1, [2])


def test_quotient_invariants_full_lattice():
    assert quotient_invariants(Sublattice.full(4)) == (0, [])


def test_covers_examples():
    Z = Sublattice.full(1)
    covered, witness = covers(Z, [Sublattice.from_columns(1, [[2]]),
                                  Sublattice.from_columns(1, [[3]])])
    assert not covered and witness == (1,)

    Z2 = Sublattice.full(2)
    parts = [Sublattice.from_columns(2, [[2, 0], [0, 1]]),
             Sublattice.from_columns(2, [[1, 0], [0, 2]]),
             Sublattice.from_columns(2, [[1, 0], [1, 2]])]
    assert covers(Z2, parts) == (True, None)

    covered, witness = covers(Z2, [])
    assert not covered and witness == (0, 0)


def test_covers_part_not_contained():
    half = Sublattice.from_columns(2, [[2, 0], [0, 2]])
    with pytest.raises(ValueError):
        covers(half, [Sublattice.full(2)])


def test_covers_witness_avoids_discarded_thin_parts():
    Z2 = Sublattice.full(2)
    axis = Sublattice.from_columns(2, [[1], [0]])
    covered, witness = covers(Z2, [axis])
    assert not covered
    assert not axis.contains(witness)


def _brute_force_uncovered(ambient, parts, radius=3):
    pts = []
    for c in itertools.product(range(-radius, radius + 1), repeat=ambient.rank):
        pt = ambient.point(c)
        if not any(P.contains(pt) for P in parts):
            pts.append(pt)
    return pts


def test_covers_matches_brute_force_enumeration():
    rng = random.Random(5150)
    for _ in range(60):
        n = rng.randint(1, 3)
        ambient = Sublattice.full(n)
        parts = []
        for _ in range(rng.randint(0, 3)):
            cols = [[rng.choice([-2, -1, 1, 2]) if rng.random() < 0.8 else 0
                     for _ in range(n)] for _ in range(n)]
            # scale a random coordinate direction to keep indexes small
            P = Sublattice.from_columns(n, intmat(cols).T)
            parts.append(P)
        covered, witness = covers(ambient, parts)
        missing = _brute_force_uncovered(ambient, parts)
        if covered:
            assert not missing
        else:
            assert ambient.contains(witness)
            assert not any(P.contains(witness) for P in parts)
        # a box-limited brute force can only refute coverage, never confirm it
        if missing:
            assert not covered


def test_intersect_parity_lattices():
    even_x = Sublattice.from_columns(2, [[2, 0], [0, 1]])
    even_y = Sublattice.from_columns(2, [[1, 0], [0, 2]])
    both = intersect(even_x, even_y)
    assert [[int(x) for x in row] for row in both.basis] == [[2, 0], [0, 2]]


def test_sublattice_membership_and_coordinates():
    L = Sublattice.from_columns(3, [[2, 0], [0, 3], [0, 0]])
    assert L.contains((4, 3, 0))
    assert not L.contains((1, 0, 0))
    assert not L.contains((0, 0, 1))
    coords = L.coordinates((4, 3, 0))
    assert L.point(coords) == (4, 3, 0)


def test_unimodular_inverse():
    rng = random.Random(31337)
    for _ in range(50):
        n = rng.randint(1, 4)
        M = intmat([[1 if i == j else 0 for j in range(n)] for i in range(n)])
        for _ in range(4):
            i, j = rng.randrange(n), rng.randrange(n)
            if i == j:
                continue
            E = [[1 if a == b else 0 for b in range(n)] for a in range(n)]
            E[i][j] = rng.randint(-3, 3)
            M = M @ intmat(E)
        Minv = unimodular_inverse(M)
        assert mats_equal(M @ Minv, intmat([[1 if i == j else 0 for j in range(n)]
                                            for i in range(n)]))
    with pytest.raises(NonUnimodularError):
        unimodular_inverse(intmat([[2, 0], [0, 1]]))


def test_intmat_validation():
    with pytest.raises(ValueError):
        intmat([[1, 2], [3]])
    with pytest.raises(ValueError):
        intmat([[1.5, 2], [3, 4]])


def test_fixed_lattices_always_saturated():
    from multinv.corpus import corpus_group
    from multinv.matgroup import subgroups

    for name in ("gamma", "s3", "rot4_nonsplit", "g2"):
        G, _ = corpus_group(name)
        for H in subgroups(G):
            L = fixed_lattice(H.elements)
            assert L.saturated
            assert quotient_invariants(L)[1] == []
