import pytest

from multinv.cohomology import (
    GroupTable,
    MuValue,
    h_dim,
    mu_p,
    mu_p_formula,
    resolution,
)
from multinv.corpus import corpus_group, corpus_names
from multinv.errors import BoundExceededError
from multinv.matgroup import generate, sylow, trivial_group


def test_resolution_ranks_z2():
    z2, _ = corpus_group("inversion1")
    res = resolution(z2, 2, 5)
    assert res.ranks == [1, 1, 1, 1, 1, 1]
    res.check_complex()
    assert res.is_minimal()


def test_resolution_ranks_trivial_group():
    res = resolution(trivial_group(2), 2, 4)
    assert res.ranks == [1, 0, 0, 0, 0]


def test_resolution_ranks_z3():
    res = resolution(GroupTable.cyclic(3), 3, 5)
    assert res.ranks == [1, 1, 1, 1, 1, 1]
    assert res.is_minimal()


def test_resolution_minimal_for_p_groups():
    rot4, _ = corpus_group("rot4")
    res = resolution(rot4, 2, 6)
    assert res.is_minimal()
    res.check_complex()
    gamma, _ = corpus_group("gamma")
    res = resolution(gamma, 2, 5)
    assert res.is_minimal()
    res.check_complex()


def test_boundary_composition_zero_everywhere():
    for name, p in (("s3", 3), ("s3", 2), ("gamma", 2), ("rot4_nonsplit", 2)):
        G, _ = corpus_group(name)
        resolution(G, p, 6).check_complex()


def test_h_dim_s3_mod3():
    s3, _ = corpus_group("s3")
    assert h_dim(s3, 3, 1) == 0
    assert h_dim(s3, 3, 2) == 0
    assert h_dim(s3, 3, 3) == 1


def test_h_dim_z2_all_degrees():
    z2, _ = corpus_group("inversion1")
    res = resolution(z2, 2, 9)
    assert [res.cohomology_dim(r) for r in range(9)] == [1] * 9


def test_s3_mod3_dimension_table():
    s3, _ = corpus_group("s3")
    res = resolution(s3, 3, 7)
    assert [res.cohomology_dim(r) for r in range(7)] == [1, 0, 0, 1, 1, 0, 0]


def test_mu_p_examples():
    z2, _ = corpus_group("inversion1")
    assert mu_p(z2, 2) == MuValue(1, True)
    triv = mu_p(trivial_group(3), 5)
    assert triv.is_infinite and triv.exact
    s3, _ = corpus_group("s3")
    assert mu_p(s3, 3) == MuValue(3, True)


def test_mu_p_inexact_marker():
    s3, _ = corpus_group("s3")
    m = mu_p(s3, 3, search_limit=2)
    assert m.value == 3 and not m.exact


def test_mu_p_infinite_iff_order_coprime():
    for name in corpus_names():
        G, p = corpus_group(name)
        assert not mu_p(G, p).is_infinite  # corpus default primes divide |G|
        q = 7  # 7 divides none of the corpus orders
        assert mu_p(G, q).is_infinite


def test_mu_formula_examples():
    s3, _ = corpus_group("s3")
    assert mu_p_formula(s3, 3) == 3
    assert mu_p_formula(s3, 2) == 1
    z2, _ = corpus_group("inversion1")
    assert mu_p_formula(z2, 2) == 1


def test_mu_formula_precondition():
    rot4, _ = corpus_group("rot4")
    with pytest.raises(ValueError):
        mu_p_formula(rot4, 2)  # Sylow order 4, not exactly p


def test_mu_formula_matches_resolution_on_corpus():
    for name in corpus_names():
        G, p = corpus_group(name)
        if sylow(G, p).order != p:
            continue
        assert mu_p(G, p).value == mu_p_formula(G, p)


def test_h_dim_independent_of_pivot_order():
    for name, p in (("s3", 3), ("s3", 2), ("gamma", 2)):
        G, _ = corpus_group(name)
        plain = resolution(G, p, 5)
        flipped = resolution(G, p, 5, _reverse_pivots=True)
        for r in range(4):
            assert plain.cohomology_dim(r) == flipped.cohomology_dim(r)


def test_resolution_bounds():
    s3, _ = corpus_group("s3")
    with pytest.raises(BoundExceededError):
        resolution(s3, 3, 4, max_group_order=4)
    with pytest.raises(BoundExceededError):
        resolution(s3, 3, 11)
    with pytest.raises(ValueError):
        resolution(s3, 4, 3)  # p must be prime


def test_abstract_table_agrees_with_matrix_group():
    rot3, _ = corpus_group("rot3")
    res_mat = resolution(rot3, 3, 6)
    res_tab = resolution(GroupTable.cyclic(3), 3, 6)
    for r in range(5):
        assert res_mat.cohomology_dim(r) == res_tab.cohomology_dim(r)


def test_augmentation_is_degree_zero_rank_one():
    for name, p in (("s3", 3), ("rot4", 2)):
        G, _ = corpus_group(name)
        res = resolution(G, p, 3)
        assert res.ranks[0] == 1
