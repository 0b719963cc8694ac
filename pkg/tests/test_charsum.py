from fractions import Fraction
from math import gcd, isclose

import pytest
from hypothesis import given, settings, strategies as st

from cyclocm import charsum as cs
from cyclocm.ff import FieldError
from cyclocm.poly import parse_poly

from _gen import field, field_orders

T, T1, T2 = (0, 1), (1, 1), (2, 1)


def test_char_eval(f7):
    assert cs.char_eval(f7, 0, 5) == 1
    assert isclose(cs.char_eval(f7, 3, 6).real, -1)
    assert cs.char_eval(f7, 2, 0) == 0


def test_f_e_examples(f7):
    for formula in "AB":
        assert cs.near(cs.f_e_sum(f7, 3, 2, formula), 1)
        assert cs.near(cs.f_e_sum(f7, 3, 3, formula), 0)
        assert cs.near(cs.f_e_sum(f7, 6, 0, formula), 0)
    with pytest.raises(FieldError):
        cs.f_e_sum(f7, 4, 1)
    with pytest.raises(ValueError):
        cs.f_e_sum(f7, 3, 2, "C")


def test_g_di_examples(f7):
    assert cs.near(cs.g_di_sum(f7, 2, 0, 2), 1)
    assert cs.near(cs.g_di_sum(f7, 2, 0, 3), 0)
    assert cs.near(cs.g_di_sum(f7, 2, 0, 0), 0)


def test_weil_examples(f7):
    assert cs.near(cs.weil_sum(f7, [T, T1], [3, 3]), -1)
    assert cs.near(cs.weil_sum(f7, [T, T1], [0, 0]), 5)
    assert cs.principal_sum_value(f7, [T, T1]) == 5
    for k in range(1, 6):
        assert cs.near(cs.weil_sum(f7, [T], [k]), 0)
    assert cs.weil_bound_check(f7, [T, T1], [3, 3])
    f13 = field(13)
    assert cs.weil_bound_check(f13, [T, T1, T2], [6, 6, 6])
    with pytest.raises(ValueError):
        cs.weil_bound_check(f7, [T, T1], [0, 6])


def test_poly_validation(f7):
    with pytest.raises(FieldError):
        cs.weil_sum(f7, [(1,)], [1])  # constant
    with pytest.raises(FieldError):
        cs.weil_sum(f7, [(1, 2, 1)], [1])  # (T+1)^2
    with pytest.raises(FieldError):
        cs.weil_sum(f7, [T, (0, 1, 1)], [1, 1])  # share the root 0
    with pytest.raises(ValueError):
        cs.weil_sum(f7, [T], [1, 1])
    assert parse_poly(f7, "1,1") == T1


def test_counts(f7):
    assert cs.count_carlitz(f7, [T], [6]) == 2
    assert cs.count_carlitz(f7, [T, T1], [6, 6]) == 0
    assert cs.count_carlitz(f7, [T], [1]) == 1
    for dl, jl, want in (([1], [1], 2), ([2], [0], 2)):
        assert cs.count_carlitz_gen(f7, [T], dl, jl, 2) == want
        assert cs.count_via_indicators(f7, [T], dl, jl, 2) == want
        assert cs.count_via_indicators(f7, [T], dl, jl, 2, formula="A") == want
    with pytest.raises(ValueError):
        cs.count_carlitz_gen(f7, [T], [1], [2], 2)
    with pytest.raises(ValueError):
        cs.count_via_indicators(f7, [T], [1], [2], 2)


def test_c_constant():
    assert cs.c_constant([4], 4) == 1
    assert cs.c_constant([1], 4) == Fraction(1, 2)
    for d in range(1, 13):
        assert cs.c_constant([d], d) == 1
    with pytest.raises(ValueError):
        cs.c_constant([3], 4)


def test_primitive_root_sums():
    for n in range(1, 40):
        assert cs.near(cs.primitive_root_of_unity_sum(n), cs.mobius(n))


@pytest.mark.parametrize("q", [7, 9, 13, 16, 25, 31])
def test_indicator_identities(q):
    ctx = field(q)
    n = q - 1
    for e in cs.divisors(n):
        for xi in range(q):
            want = 1 if xi and ctx.element_order(xi) == e else 0
            assert cs.near(cs.f_e_sum(ctx, e, xi, "A"), want)
            assert cs.near(cs.f_e_sum(ctx, e, xi, "B"), want)
    for d in cs.divisors(n):
        for xi in range(q):
            total = sum(cs.g_di_sum(ctx, d, i, xi) for i in range(d))
            assert cs.near(total, 1 if xi else 0)


QS = field_orders(49)


def _poly(draw, q, deg):
    coeffs = [draw(st.integers(0, q - 1)) for _ in range(deg)] + [1]
    return tuple(coeffs)


@settings(max_examples=80, deadline=None)
@given(st.sampled_from(QS), st.data())
def test_indicator_count_matches_direct(q, data):
    ctx = field(q)
    n = q - 1
    r = data.draw(st.integers(1, 2))
    polys = [_poly(data.draw, q, data.draw(st.integers(1, 2))) for _ in range(r)]
    try:
        cs.check_gen_params(ctx, polys, [1] * r, [1] * r, 1)
    except FieldError:
        return
    d = data.draw(st.sampled_from([k for k in cs.divisors(n) if k <= 12]))
    jl = [data.draw(st.integers(0, d - 1)) for _ in range(r)]
    dl = [gcd(j, d) for j in jl]
    assert cs.count_via_indicators(ctx, polys, dl, jl, d) == cs.count_carlitz_gen(ctx, polys, dl, jl, d)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 12), st.data())
def test_c_constant_bounds(d, data):
    divs = [k for k in range(1, d + 1) if d % k == 0]
    dl = data.draw(st.lists(st.sampled_from(divs), min_size=1, max_size=3))
    c = cs.c_constant(dl, d)
    assert Fraction(1, d ** len(dl)) <= c <= 1
