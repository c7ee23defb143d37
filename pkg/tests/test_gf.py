import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import least_irreducible, poly_divmod, poly_mul
from torus_split import gf
from torus_split.errors import FieldError


@pytest.mark.parametrize("p,k", [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (5, 2), (7, 2)])
def test_canonical_modulus_matches_enumeration(p, k):
    assert gf.make_field(p, k).modulus == least_irreducible(p, k)


def test_known_small_moduli():
    assert gf.make_field(3, 2).modulus == (1, 0, 1)
    assert gf.make_field(2, 3).modulus == (1, 0, 1, 1)


def test_prime_field_and_cache():
    f = gf.make_field(3, 1)
    assert f.order == 3 and f.k == 1
    assert gf.make_field(3, 1) is f
    assert gf.field_of_order(9) is gf.make_field(3, 2)


@pytest.mark.parametrize("p,k", [(4, 1), (1, 1), (3, 0)])
def test_invalid_field_parameters(p, k):
    with pytest.raises((FieldError, ValueError)):
        gf.make_field(p, k)


def test_field_of_order_rejects_non_prime_power():
    with pytest.raises(ValueError):
        gf.field_of_order(6)


def test_x_squared_reduction_in_gf9():
    f = gf.make_field(3, 2)
    x = f([0, 1])
    expected = poly_divmod(poly_mul([0, 1], [0, 1], 3), list(f.modulus), 3)
    assert (x * x).coeffs == tuple(expected)


@pytest.mark.parametrize("p,k", [(2, 3), (3, 2), (5, 2)])
def test_multiplication_matches_polynomial_oracle(p, k):
    f = gf.make_field(p, k)
    for a, b in itertools.product(f.elements(), repeat=2):
        expected = poly_divmod(poly_mul(list(a.coeffs), list(b.coeffs), p), list(f.modulus), p)
        assert (a * b).coeffs == tuple(expected)


@pytest.mark.parametrize("q", [4, 5, 8, 9, 25, 27])
def test_field_axioms_exhaustive(q):
    f = gf.field_of_order(q)
    els = list(f.elements())
    for a in els:
        assert a + (-a) == f.zero
        if a:
            assert a * a.inverse() == f.one
            assert a ** (q - 1) == f.one
    for a, b in itertools.product(els[:7], repeat=2):
        for c in els[:5]:
            assert a * (b + c) == a * b + a * c


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([9, 25, 49, 16, 27, 81]), st.data())
def test_frobenius_is_ring_homomorphism(q, data):
    f = gf.field_of_order(q)
    a = f(data.draw(st.integers(0, q - 1)))
    b = f(data.draw(st.integers(0, q - 1)))
    p = f.p
    assert gf.frobenius(a + b, p) == gf.frobenius(a, p) + gf.frobenius(b, p)
    assert gf.frobenius(a * b, p) == gf.frobenius(a, p) * gf.frobenius(b, p)
    assert gf.frobenius(a, q) == a


def test_frobenius_fixes_prime_subfield():
    f = gf.make_field(5, 2)
    fixed = [a for a in f.elements() if gf.frobenius(a, 5) == a]
    assert len(fixed) == 5


def test_element_of_order_is_first_in_scan_order():
    f = gf.make_field(3, 2)
    for d in (1, 2, 4, 8):
        e = gf.element_of_order(f, d)
        first = next(a for a in f.elements() if a and a.order() == d)
        assert e == first
        assert e.order() == d


def test_element_of_order_rejects_non_divisor():
    with pytest.raises(FieldError):
        gf.element_of_order(gf.make_field(3, 2), 3)


def test_sqrt_minus_one_gf5():
    a = gf.sqrt_minus_one(gf.make_field(5, 1))
    assert a == 2 and a * a == -1


def test_sqrt_minus_one_existence_pattern():
    for q in range(2, 170):
        if len(gf.factorize(q)) != 1:
            continue
        f = gf.field_of_order(q)
        exists = q % 4 == 1 or f.p == 2
        if exists:
            a = gf.sqrt_minus_one(f)
            assert a * a == -f.one
        else:
            with pytest.raises(FieldError):
                gf.sqrt_minus_one(f)


@pytest.mark.parametrize("q,k", [(3, 2), (2, 2), (5, 2), (3, 3), (4, 2), (9, 2)])
def test_embedding_is_ring_homomorphism(q, k):
    small = gf.field_of_order(q)
    big = gf.field_of_order(q ** k)
    for a in small.elements():
        for b in list(small.elements())[:9]:
            assert gf.embed(a + b, big) == gf.embed(a, big) + gf.embed(b, big)
            assert gf.embed(a * b, big) == gf.embed(a, big) * gf.embed(b, big)
    images = {gf.embed(a, big) for a in small.elements()}
    assert len(images) == q
    assert all(gf.frobenius(x, q) == x for x in images)


@pytest.mark.parametrize("q", [2, 3, 5])
def test_embedding_tower_commutes(q):
    f1, f2, f6 = (gf.field_of_order(q ** e) for e in (1, 2, 6))
    for a in f1.elements():
        assert gf.embed(gf.embed(a, f2), f6) == gf.embed(a, f6)
    for a in list(f2.elements()):
        b = gf.embed(a, f6)
        assert b == gf.embed(gf.embed(a, gf.field_of_order(q ** 2)), f6)


def test_embed_rejects_wrong_characteristic():
    with pytest.raises(FieldError):
        gf.embed(gf.make_field(3, 1).one, gf.make_field(5, 2))


def test_mixed_fields_rejected():
    with pytest.raises(FieldError):
        gf.make_field(3, 2).one + gf.make_field(3, 1).one


def test_factorize_and_prime_power():
    assert dict(gf.factorize(360)) == {2: 3, 3: 2, 5: 1}
    assert gf.prime_power(81) == (3, 4)
    with pytest.raises(FieldError):
        gf.prime_power(12)
