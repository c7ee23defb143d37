import pytest

from torus_split.bweyl import enumerate_types
from torus_split.errors import ClauseNotApplicable
from torus_split.split import classify, default_clause, obstruction_check
from torus_split.torus import make_torus


@pytest.mark.parametrize("q", [3, 5, 7])
@pytest.mark.parametrize("n", [1, 2])
def test_sp_sign_change_lifts_never_involutions(n, q):
    for t in enumerate_types(n):
        w = obstruction_check(make_torus(n, q, t), "Sp", "L5-1")
        assert w.satisfying == 0 and w.exhaustive
        assert w.exhausted_parameters["tau1"] == make_torus(n, q, t).order


@pytest.mark.parametrize("q", [3, 5])
def test_three_block_pair_obstruction(q):
    w = obstruction_check(make_torus(3, q, "(1)(1)(1)"), "PSp", "L5-2")
    assert w.exhaustive and w.satisfying == 0


@pytest.mark.parametrize("q", [3, 5, 7])
def test_rank_two_mixed_obstruction(q):
    w = obstruction_check(make_torus(2, q, "(1-)(1)"), "PSp")
    assert w.clause == "L7-1"
    assert w.exhaustive and w.satisfying == 0


@pytest.mark.parametrize("n,q,text,clause", [
    (2, 5, "(1-)(1-)", "L8"),
    (3, 5, "(2-)(1-)", "L8"),
    (3, 3, "(2-)(1-)", "L8"),
    (2, 3, "(1)(1)", "L9"),
    (3, 7, "(2)(1)", "L9"),
    (3, 5, "(1-)(2)", "L10"),
    (3, 3, "(2-)(1)", "L10"),
    (3, 3, "(1-)(1-)(1)", "L5-2"),
])
def test_default_clause_witnesses(n, q, text, clause):
    spec = make_torus(n, q, text)
    assert not classify(n, q, text).splits
    assert default_clause(spec, "PSp") == clause
    w = obstruction_check(spec, "PSp")
    assert w.clause == clause and w.exhaustive and w.satisfying == 0


@pytest.mark.parametrize("q", [3, 5, 7])
def test_every_non_split_rank_two_cell_has_a_witness(q):
    for n in (1, 2):
        for t in enumerate_types(n):
            if classify(n, q, t).splits:
                continue
            w = obstruction_check(make_torus(n, q, t), "PSp")
            assert w.exhaustive and w.satisfying == 0


def test_clause_not_applicable():
    with pytest.raises(ClauseNotApplicable):
        obstruction_check(make_torus(2, 3, "(1-)(1-)"), "PSp")
    with pytest.raises(ClauseNotApplicable):
        obstruction_check(make_torus(2, 3, "(1)(1)"), "PSp", "L8")
    with pytest.raises(ClauseNotApplicable):
        obstruction_check(make_torus(1, 4, "(1)"), "Sp")
    with pytest.raises(ClauseNotApplicable):
        obstruction_check(make_torus(1, 3, "(1)"), "Sp", "L99")
