import itertools
import random
from fractions import Fraction

import pytest

from higgsy.errors import DomainError
from higgsy.stability import (
    ChainDatum,
    enumerate_admissible_degrees,
    equal_slope_decompositions,
    find_walls,
    goodalpha_family,
    higgs_alpha,
    higgs_index_set,
    necessary_conditions,
    satisfies_star,
    slope,
)
from oracles import box_filter, dual_witness, rank_vectors, rows_accept, sample_alphas

F = Fraction


def test_slope_examples():
    assert slope((1, 1), (0, 0), (0, 2)) == 1
    assert slope((2, 1), (1, 0), (0, 2)) == 1
    assert slope((1,), (5,), (0,)) == 5


def test_star_and_higgs_alpha():
    assert satisfies_star((0, 2), 2)
    assert not satisfies_star((0, 1), 2)
    assert satisfies_star((0,), 7)
    assert higgs_alpha(0, 3) == [0]
    assert higgs_alpha(2, 2) == [0, 2, 4]
    assert higgs_alpha(1, 3) == [0, 4]


def test_condition_examples():
    assert necessary_conditions(ChainDatum((1,), (9,), (F(1, 3),))).passed
    rep = necessary_conditions(ChainDatum((1, 1), (0, 1), (0, 2)))
    assert [(f.condition, f.witness) for f in rep.failures] == [("C2", (1,))]
    rep = necessary_conditions(ChainDatum((1, 1), (3, -3), (0, 2)))
    assert [(f.condition, f.witness) for f in rep.failures] == [("C1", (0,))]
    assert rep.failures[0].lhs == 3 and rep.failures[0].rhs == 1


def test_non_increasing_alpha_rejected():
    with pytest.raises(DomainError):
        necessary_conditions(ChainDatum((1, 1), (0, 0), (2, 2)))
    with pytest.raises(DomainError):
        enumerate_admissible_degrees((1, 1), (3, 1), 0)


def test_degree_examples():
    assert enumerate_admissible_degrees((1, 1), (0, 2), 1) == [(1, 0)]
    assert enumerate_admissible_degrees((2, 1), (0, 2), 1) == [(1, 0), (2, -1)]
    assert enumerate_admissible_degrees((1,), (0,), 7) == [(7,)]
    assert box_filter((1, 1), (0, 2), 1, box=10) == [(1, 0)]


def test_oracle_rows_match_library_verdicts():
    rng = random.Random(7)
    for ranks in rank_vectors(4):
        for alpha in sample_alphas(ranks, 3):
            for _ in range(20):
                d = [rng.randint(-8, 8) for _ in ranks]
                verdict = necessary_conditions(ChainDatum(ranks, d, alpha)).passed
                assert verdict == rows_accept(ranks, alpha, d), (ranks, alpha, d)


@pytest.mark.parametrize("ranks", rank_vectors(4))
def test_polytope_matches_box_filter(ranks):
    for alpha in sample_alphas(ranks, 4, seed=11):
        for total in (-5, 0, 3):
            assert enumerate_admissible_degrees(ranks, alpha, total) == box_filter(
                ranks, alpha, total, box=40
            )


def test_duality_maps_failures():
    rng = random.Random(3)
    for ranks in rank_vectors(5):
        r = len(ranks) - 1
        for alpha in sample_alphas(ranks, 3, seed=5):
            for _ in range(10):
                datum = ChainDatum(ranks, [rng.randint(-6, 6) for _ in ranks], alpha)
                dual = datum.dual()
                assert dual.dual() == datum
                mine = {dual_witness(f.condition, f.witness, r) for f in necessary_conditions(datum).failures}
                theirs = {(f.condition, f.witness) for f in necessary_conditions(dual).failures}
                assert mine == theirs


def test_index_set_examples():
    assert higgs_index_set(1, 0, 2) == [((1,), (0,))]
    assert higgs_index_set(2, 1, 2) == [((2,), (1,)), ((1, 1), (0, -1))]
    g3 = higgs_index_set(2, 1, 3)
    tail = box_filter((1, 1), (0, 4), 1 - 4, box=30)
    assert g3 == [((2,), (1,))] + [((1, 1), d) for d in tail]


def test_goodalpha_examples():
    fam = goodalpha_family((2, 1), (1, 0), (0, 2), 2)
    assert (fam.delta, fam.t0, fam.case) == ((0, 1), 0, "increase")
    fam = goodalpha_family((1, 2), (0, 0), (0, 2), 2)
    assert fam.delta == (-1, 0) and fam.case == "decrease"
    fam = goodalpha_family((1, 1), (5, 0), (0, 2), 2)
    assert (fam.delta, fam.t0) == ((0, 1), 3)
    with pytest.raises(DomainError):
        goodalpha_family((1, 1), (0, 0), (0, 1), 2)


@pytest.mark.parametrize("ranks", [(2, 1), (1, 2), (1, 3), (2, 1, 1), (1, 1, 2), (3, 1)])
def test_emptiness_beyond_threshold(ranks):
    g = 2
    alpha = higgs_alpha(len(ranks) - 1, g)
    for total in range(-4, 5):
        for d in enumerate_admissible_degrees(ranks, alpha, total):
            fam = goodalpha_family(ranks, d, alpha, g)
            later = fam.alpha_at(alpha, fam.t0 + 1)
            assert d not in enumerate_admissible_degrees(ranks, later, total)


def test_constant_rank_emptiness_is_not_claimed():
    # for constant ranks the ray only leads to the large-parameter regime
    fam = goodalpha_family((1, 1), (1, 0), (0, 2), 2)
    assert fam.case == "constant-rank" and fam.delta == (0, 1)


def test_walls_instance():
    report = find_walls((1, 1), (1, 0), (0, 2), (0, 1), 10)
    assert report.values == [1, 3, 5, 7, 9]
    for w in report.walls:
        for m, e in w.witnesses:
            assert slope(m, e, (0, 2 + w.t)) == slope((1, 1), (1, 0), (0, 2 + w.t))


def test_walls_degenerate():
    assert find_walls((1, 1), (1, 0), (0, 2), (0, 0), 10).values == []
    assert find_walls((1,), (4,), (0,), (1,), 3).values == []
    with pytest.raises(DomainError):
        find_walls((1, 1), (1, 0), (0, 2), (0, 1), 0)


def test_decomposition_examples():
    assert equal_slope_decompositions((1, 1), (1, 0), (0, 2)) == []
    found = equal_slope_decompositions((1, 1), (1, 0), (0, 1))
    assert sorted(found) == sorted(
        [(((1, 0), (1, 0)), ((0, 1), (0, 0))), (((0, 1), (0, 0)), ((1, 0), (1, 0)))]
    )
    assert equal_slope_decompositions((1,), (0,), (0,)) == []


@pytest.mark.parametrize(
    "ranks, degrees, alpha",
    [((1, 1), (1, 0), (0, 1)), ((2, 2), (2, 0), (0, 1)), ((1, 1, 1), (2, 1, 0), (0, 1, 2)), ((2, 1), (1, 1), (0, 1))],
)
def test_slope_additivity(ranks, degrees, alpha):
    mu = slope(ranks, degrees, alpha)
    for deco in equal_slope_decompositions(ranks, degrees, alpha):
        assert len(deco) >= 2
        weighted = sum(sum(m) * slope(m, e, alpha) for m, e in deco)
        assert weighted == mu * sum(ranks)
        assert tuple(map(sum, zip(*(m for m, _ in deco)))) == tuple(ranks)
        assert tuple(map(sum, zip(*(e for _, e in deco)))) == tuple(degrees)
