"""Field arithmetic tests, exhaustive at small sizes."""

import random

import numpy as np
import pytest

from moid.field import (
    IRREDUCIBLE_GF2,
    ExtFieldParams,
    FieldParams,
    ext_poly_eval,
    fe_add,
    fe_mul,
    fe_pow,
    gf2_is_irreducible,
)


def test_builtin_irreducibles_are_minimal():
    for m, poly in IRREDUCIBLE_GF2.items():
        assert gf2_is_irreducible(poly, m)
        for cand in range(1 << m, poly):
            assert not gf2_is_irreducible(cand, m)


def test_reducible_modulus_rejected():
    with pytest.raises(ValueError):
        FieldParams(2, 0b101)  # x^2 + 1 = (x+1)^2


def test_gf4_examples():
    gf4 = FieldParams.gf(2)
    three, one, two = gf4.element(3), gf4.element(1), gf4.element(2)
    assert fe_add(three, one).value == 2
    assert fe_mul(two, two).value == 3
    assert fe_pow(two, 3).value == 1
    for a in range(4):
        el = gf4.element(a)
        assert fe_add(el, gf4.element(0)).value == a
        assert fe_add(el, el).value == 0
        assert fe_mul(el, gf4.element(1)).value == a
        assert fe_mul(el, gf4.element(0)).value == 0
        assert fe_pow(el, 0).value == 1
        assert fe_pow(el, 1).value == a


def test_mismatched_params_raise():
    a = FieldParams.gf(2).element(1)
    b = FieldParams.gf(3).element(1)
    with pytest.raises(ValueError):
        fe_add(a, b)
    with pytest.raises(ValueError):
        fe_mul(a, b)


def test_element_range_checked():
    with pytest.raises(ValueError):
        FieldParams.gf(2).element(4)


@pytest.mark.parametrize("m", range(1, 9))
def test_field_axioms_exhaustive(m):
    gf = FieldParams.gf(m)
    q = gf.q
    idx = np.arange(q, dtype=np.int64)
    col, row = idx[:, None], idx[None, :]
    prod = gf.mul_vec(col, row)
    # commutativity, identity, absorbing zero on all pairs
    assert np.array_equal(prod, prod.T)
    assert np.array_equal(prod[1], idx)
    assert np.array_equal(prod[0], np.zeros(q, dtype=np.int64))
    # every nonzero element has an inverse
    for a in range(1, q):
        assert 1 in prod[a]
    # associativity and distributivity on all triples, one slab per a
    for a in range(q):
        ab = prod[a]
        lhs = gf.mul_vec(ab[:, None], row)
        rhs = gf.mul_vec(np.int64(a), prod)
        assert np.array_equal(lhs, rhs)
        dist_l = gf.mul_vec(np.int64(a), col ^ row)
        dist_r = prod[a][:, None] ^ prod[a][None, :]
        assert np.array_equal(dist_l, dist_r)


@pytest.mark.parametrize("m", [1, 2, 4, 8, 11, 16])
def test_mul_routes_agree(m):
    gf = FieldParams.gf(m)
    rng = random.Random(1234 + m)
    for _ in range(300):
        a = rng.randrange(gf.q)
        b = rng.randrange(gf.q)
        assert gf.mul(a, b) == gf.mul_basic(a, b)
    a = np.array([rng.randrange(gf.q) for _ in range(300)], dtype=np.int64)
    b = np.array([rng.randrange(gf.q) for _ in range(300)], dtype=np.int64)
    vec = gf.mul_vec(a, b)
    assert vec.tolist() == [gf.mul_basic(int(x), int(y)) for x, y in zip(a, b)]


def test_ext_field_16_elements_order_15():
    ext = ExtFieldParams.build(FieldParams.gf(2), 2)
    assert ext.order == 16
    seen_orders = set()
    for a in range(1, 16):
        val, order = a, 1
        while val != 1:
            val = ext.mul(val, a)
            order += 1
        assert 15 % order == 0
        seen_orders.add(order)
    assert 15 in seen_orders  # the group is cyclic of order 15


def test_ext_mul_matches_digit_route():
    for m, k in [(2, 2), (3, 2), (2, 3)]:
        ext = ExtFieldParams.build(FieldParams.gf(m), k)
        rng = random.Random(10 * m + k)
        a = np.array([rng.randrange(ext.order) for _ in range(200)], dtype=np.int64)
        b = np.array([rng.randrange(ext.order) for _ in range(200)], dtype=np.int64)
        via_digits = ext._mul_vec_digits(a, b)
        via_tables = ext.mul_vec(a, b)
        assert np.array_equal(via_digits, via_tables)
        for x, y, expect in zip(a[:50], b[:50], via_tables[:50]):
            assert ext.mul(int(x), int(y)) == int(expect)


def test_ext_poly_eval_examples():
    # GF(4) viewed as a degree-1 extension of itself
    ext1 = ExtFieldParams.build(FieldParams.gf(2), 1)
    one, two = ext1.element(1), ext1.element(2)
    assert ext_poly_eval([one, two], two).to_int() == 2
    ext = ExtFieldParams.build(FieldParams.gf(2), 2)
    c = ext.element(7)
    for point in range(16):
        assert ext_poly_eval([c], ext.element(point)).to_int() == 7
    c0, c1 = ext.element(5), ext.element(9)
    assert ext_poly_eval([c0, c1], ext.element(0)).to_int() == 5
    with pytest.raises(ValueError):
        ext_poly_eval([], c)


def test_horner_matches_naive_power_sum():
    ext = ExtFieldParams.build(FieldParams.gf(2), 2)  # GF(16)
    rng = random.Random(99)
    for _ in range(1000):
        deg = rng.randrange(9)
        coeffs = [rng.randrange(16) for _ in range(deg + 1)]
        x = rng.randrange(16)
        naive = 0
        for d, cd in enumerate(coeffs):
            naive ^= ext.mul(cd, ext.pow(x, d))
        got = ext_poly_eval([ext.element(c) for c in coeffs], ext.element(x))
        assert got.to_int() == naive


def test_ext_element_validation():
    ext = ExtFieldParams.build(FieldParams.gf(2), 2)
    with pytest.raises(ValueError):
        ext.element((1, 2, 3))
    with pytest.raises(ValueError):
        ext.element((4, 0))
    assert ext.element((3, 2)).to_int() == 3 + 2 * 4
    assert ext.element(11).coeffs == (3, 2)
