import itertools
import math

import pytest

from torus_split import gf, sympmat
from torus_split.bweyl import enumerate_types
from torus_split.errors import BudgetExceeded, InvalidType
from torus_split.normalizer import build_normalizer
from torus_split.sympmat import MonomialMatrix
from torus_split.torus import (decompose, enumerate_torus, make_torus, realize,
                               realize_monomial)


def test_block_orders_and_degree():
    s = make_torus(3, 3, "(2-)(1)")
    assert s.d == (10, 2)
    assert s.eps == (-1, 1)
    assert s.L == 4 and s.ambient.order == 81
    assert s.order == 20


def test_generators_have_block_orders():
    s = make_torus(4, 5, "(1-)(2)(1)")
    for g, d in zip(s.lambda_gen, s.d):
        assert g.order() == d


@pytest.mark.parametrize("q", [2, 3, 4, 5])
@pytest.mark.parametrize("n", [1, 2, 3])
def test_order_is_product_formula(n, q):
    for t in enumerate_types(n):
        s = make_torus(n, q, t)
        expected = math.prod(q ** ni - e for ni, e in zip(t.parts, t.signs))
        assert s.order == expected
        if expected <= 5000:
            assert sum(1 for _ in enumerate_torus(s)) == expected


@pytest.mark.parametrize("text,q", [("(1-)(1)", 3), ("(2-)", 3), ("(1)(1)", 5), ("(2)", 3), ("(1-)(1-)", 3)])
def test_torus_equals_all_twist_fixed_diagonals(text, q):
    """Every diagonal symplectic matrix fixed by the twist is a torus point, and vice versa."""
    s = make_torus(2, q, text)
    group = build_normalizer(s, "Sp")
    N = s.ambient.order - 1
    fixed = set()
    for a, b in itertools.product(range(N), repeat=2):
        m = MonomialMatrix.diagonal(s.ambient, (a, b, -a % N, -b % N))
        if group.frob_twist(m) == m:
            fixed.add(m.key())
    torus = {realize_monomial(pt).key() for pt in enumerate_torus(s)}
    assert fixed == torus
    assert len(torus) == s.order


@pytest.mark.parametrize("text,q", [("(2-)(1)", 3), ("(1)(1)(1)", 3), ("(3-)", 2)])
def test_realization_is_injective_homomorphism(text, q):
    s = make_torus(3, q, text)
    pts = list(enumerate_torus(s))[:40]
    seen = set()
    for a in pts:
        ma = realize(a)
        assert sympmat.is_symplectic(ma)
        assert decompose(s, ma) == a
        seen.add(realize_monomial(a).key())
        for b in pts[:8]:
            assert realize_monomial(a + b) == realize_monomial(a) * realize_monomial(b)
    assert len(seen) == len(pts)


def test_decompose_rejects_non_torus_matrix():
    s = make_torus(1, 5, "(1)")
    assert decompose(s, sympmat.tau0(s.ambient, 1)) is None


def test_budget_guard():
    s = make_torus(2, 7, "(1-)(1-)")
    with pytest.raises(BudgetExceeded):
        list(enumerate_torus(s, limit=10))


def test_invalid_inputs():
    with pytest.raises(InvalidType):
        make_torus(2, 3, "(3)")
    with pytest.raises((InvalidType, ValueError)):
        make_torus(1, 6, "(1)")
