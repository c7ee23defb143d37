import random

import pytest

from torus_split.bweyl import CycleType, SignedPerm, centralizer, enumerate_types, standard_rep
from torus_split.errors import BudgetExceeded, NotInNormalizer
from torus_split.normalizer import (build_normalizer, conjugation_action, count_fixed_lifts,
                                    normalizer_order_by_count, quotient_check)
from torus_split.sympmat import MonomialMatrix
from torus_split.torus import enumerate_torus, make_torus, realize_monomial


@pytest.mark.parametrize("n,q,text,kind,order", [
    (1, 3, "(1)", "Sp", 4),
    (1, 3, "(1-)", "Sp", 8),
    (2, 3, "(1-)(1-)", "Sp", 128),
    (2, 3, "(1-)(1-)", "PSp", 64),
    (2, 2, "(1)(1)", "PSp", 8),
])
def test_normalizer_orders(n, q, text, kind, order):
    g = build_normalizer(make_torus(n, q, text), kind)
    assert g.order == order
    assert sum(1 for _ in g.elements()) == order


@pytest.mark.parametrize("q", [2, 3, 5])
@pytest.mark.parametrize("n", [1, 2])
def test_order_matches_independent_fixed_point_count(n, q):
    for t in enumerate_types(n):
        g = build_normalizer(make_torus(n, q, t), "Sp")
        assert normalizer_order_by_count(g) == g.order
        assert g.quotient_order == len(centralizer(standard_rep(t)))


@pytest.mark.parametrize("q", [2, 3, 5])
@pytest.mark.parametrize("n", [1, 2])
def test_quotient_is_centralizer(n, q):
    for t in enumerate_types(n):
        assert quotient_check(build_normalizer(make_torus(n, q, t), "Sp"))


def test_fixed_lifts_vanish_outside_centralizer():
    g = build_normalizer(make_torus(2, 3, "(2)"), "Sp")
    w = standard_rep(CycleType.parse("(2)"))
    cw = set(centralizer(w))
    for x in [SignedPerm(2, (1, 2)), SignedPerm(2, (-1, 2)), SignedPerm(2, (2, -1))]:
        assert (count_fixed_lifts(g, x) > 0) == (x in cw)


def test_transversal_lifts_are_in_normalizer():
    g = build_normalizer(make_torus(3, 3, "(2-)(1)"), "Sp")
    for x, r in g.transversal.items():
        assert r.is_symplectic() and g.contains(r)
        assert g.decompose(r).weyl_part == x
        assert r.frobenius(3) == r


def test_sign_change_inverts_rank_one_torus():
    s = make_torus(1, 3, "(1)")
    g = build_normalizer(s, "Sp")
    tau = g.generators["tau1"]
    for t in enumerate_torus(s):
        assert conjugation_action(g, tau, t) == -t


@pytest.mark.parametrize("text,q", [("(2-)(1)", 3), ("(1)(1)", 5), ("(1-)(1-)", 3)])
def test_conjugation_is_a_group_action(text, q):
    s = make_torus(sum(CycleType.parse(text).parts), q, text)
    g = build_normalizer(s, "Sp")
    rng = random.Random(7)
    elements = list(g.elements())
    pts = list(enumerate_torus(s))
    for _ in range(30):
        a, b = rng.choice(elements), rng.choice(elements)
        t = rng.choice(pts)
        assert conjugation_action(g, a * b, t) == conjugation_action(g, a, conjugation_action(g, b, t))
    ident = MonomialMatrix.identity(g.field, s.dim)
    assert all(conjugation_action(g, ident, t) == t for t in pts)


def test_block_cycle_power_is_sign_change_lift():
    s = make_torus(3, 5, "(3-)")
    g = build_normalizer(s, "Sp")
    power = g.generators["varpi1"] ** 3
    x = g.decompose(power).weyl_part
    assert x == g.generator_perms["varpi1"] ** 3
    assert all(v == -i for i, v in enumerate(x.img, start=1))


def test_positive_cycle_commutes_with_sign_change_lift():
    g = build_normalizer(make_torus(2, 3, "(2)"), "Sp")
    s1, u1 = g.generators["omega1"], g.generators["tau1"]
    assert s1 * u1 == u1 * s1


def test_non_member_rejected():
    g = build_normalizer(make_torus(2, 3, "(2)"), "Sp")
    bad = MonomialMatrix.from_perm(g.field, SignedPerm(2, (-1, 2)))
    assert not g.contains(bad)
    with pytest.raises(NotInNormalizer):
        g.decompose(bad)


def test_trivial_torus_gives_centralizer():
    g = build_normalizer(make_torus(2, 2, "(1)(1)"), "Sp")
    assert g.torus_order == 1 and g.order == len(g.cw) == 8


def test_budget():
    with pytest.raises(BudgetExceeded):
        build_normalizer(make_torus(2, 3, "(1-)(1-)"), "Sp", limit=10)
