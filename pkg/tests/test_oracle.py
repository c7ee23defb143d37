import pytest

from torus_split.bweyl import enumerate_types
from torus_split.errors import BudgetExceeded
from torus_split.normalizer import build_normalizer
from torus_split.split import brute_force_split, classify, verify_complement
from torus_split.split.oracle import greedy_generators
from torus_split.torus import make_torus


def test_sp_rank_one_negative_has_no_complement():
    group = build_normalizer(make_torus(1, 3, "(1-)"), "Sp")
    assert group.order == 8
    assert not brute_force_split(group).splits


def test_psp_rank_one_negative_has_complement():
    group = build_normalizer(make_torus(1, 3, "(1-)"), "PSp")
    result = brute_force_split(group)
    assert result.splits
    assert verify_complement(group, result.certificate)


def test_mixed_rank_two_has_no_complement():
    assert not brute_force_split(build_normalizer(make_torus(2, 3, "(1-)(1)"), "PSp")).splits


@pytest.mark.parametrize("q", [2, 3, 4, 5])
@pytest.mark.parametrize("kind", ["Sp", "PSp"])
def test_search_agrees_with_classifier_rank_two(q, kind):
    for n in (1, 2):
        for t in enumerate_types(n):
            group = build_normalizer(make_torus(n, q, t), kind)
            assert brute_force_split(group).splits == classify(n, q, t, kind).splits, (n, q, str(t))


@pytest.mark.parametrize("text,q,splits", [("(1)(2)", 3, False), ("(2)(1)", 5, True), ("(3)", 3, True)])
def test_search_rank_three_samples(text, q, splits):
    assert brute_force_split(build_normalizer(make_torus(3, q, text), "PSp")).splits == splits


def test_greedy_generators_generate():
    group = build_normalizer(make_torus(2, 3, "(1-)(1-)"), "PSp")
    gens = greedy_generators(group.cw)
    orders = [g.order() for g in gens]
    assert orders == sorted(orders, reverse=True)
    span = {gens[0] ** 0}
    frontier = list(span)
    while frontier:
        frontier = [x * g for x in frontier for g in gens if x * g not in span]
        span.update(frontier)
    assert span == set(group.cw)


def test_search_budget():
    with pytest.raises(BudgetExceeded):
        brute_force_split(build_normalizer(make_torus(2, 9, "(1-)(1-)"), "PSp"), limit=50)


def test_search_statistics_recorded():
    result = brute_force_split(build_normalizer(make_torus(2, 3, "(1)(1)"), "PSp"))
    assert len(result.stats.lifts_total) == len(result.stats.generators)
    assert all(k <= t for k, t in zip(result.stats.lifts_kept, result.stats.lifts_total))


@pytest.mark.parametrize("q", [3, 5, 7])
def test_two_block_parity_by_search(q):
    """Positive pairs with an odd block and mixed pairs split exactly as the parity rules say."""
    for n, text in [(2, "(1)(1)"), (3, "(2)(1)"), (2, "(1-)(1)"), (3, "(1-)(2)"), (3, "(2-)(1)")]:
        found = brute_force_split(build_normalizer(make_torus(n, q, text), "PSp")).splits
        assert found == classify(n, q, text).splits
        if q % 4 == 3:
            assert found == (text == "(1-)(2)")
