import pytest
from hypothesis import given, settings, strategies as st

from cyclocm import cyclomap as cm
from cyclocm.cyclomap import NotAPermutation, PsiFunction
from cyclocm.ff import FieldError

from _gen import field, field_orders, random_cyclo_perm, random_h

EX26 = PsiFunction.parse("(0,1)(2); h=3,4")


def test_cyclo_new_and_evaluate(f7):
    assert cm.cyclo_new(f7, 1, [3]).table() == tuple(3 * x % 7 for x in range(7))
    f = cm.cyclo_new(f7, 2, [2, 4])
    assert [cm.evaluate(f, x) for x in (0, 1, 3)] == [0, 2, 5]
    with pytest.raises(FieldError):
        cm.cyclo_new(f7, 4, [1, 1, 1, 1])
    with pytest.raises(ValueError):
        cm.cyclo_new(f7, 2, [1])


def test_induced_coset_perm(f7):
    assert cm.induced_coset_perm(cm.cyclo_new(f7, 2, [2, 4])) == (0, 1)
    assert cm.induced_coset_perm(cm.cyclo_new(f7, 2, [3, 3])) == (1, 0)
    assert cm.induced_coset_perm(cm.cyclo_new(f7, 2, [1, 5])) is None


@pytest.mark.parametrize("d,a,ct", [(2, [2, 4], {1: 1, 3: 2}), (2, [3, 3], {1: 1, 6: 1}), (1, [1], {1: 7})])
def test_cycle_type_examples(f7, d, a, ct):
    f = cm.cyclo_new(f7, d, a)
    assert cm.cycle_type(f) == ct
    assert cm.cycle_type_oracle(f) == ct


def test_not_a_permutation(f7):
    f = cm.cyclo_new(f7, 2, [1, 5])
    for op in (cm.cycle_type, cm.cycle_type_oracle, cm.sym_function_of):
        with pytest.raises(NotAPermutation):
            op(f)


def test_sym_function_of(f7):
    assert str(cm.sym_function_of(cm.cyclo_new(f7, 2, [2, 4]))) == "(0)(1); h=1,1"
    assert str(cm.sym_function_of(cm.cyclo_new(f7, 2, [3, 3]))) == "(0,1); h=1"
    assert str(cm.sym_function_of(cm.cyclo_new(f7, 1, [3]))) == "(0); h=1"


def test_psi_function_canonical_form():
    h = PsiFunction(3, ((2,), (1, 0)), (4, 3))
    assert h == EX26
    assert str(h) == "(0,1)(2); h=3,4"
    assert PsiFunction.parse(str(h)) == h
    with pytest.raises(ValueError):
        PsiFunction(3, ((0, 1),), (1,))
    with pytest.raises(ValueError):
        PsiFunction(2, ((0, 1),), (0,))


def test_admissible_and_gamma():
    assert cm.is_admissible(EX26, 37)
    assert not cm.is_admissible(EX26, 7)
    one = PsiFunction(1, ((0,),), (1,))
    assert cm.is_admissible(one, 7)
    ct = cm.gamma_h(EX26, 37)
    assert ct == {1: 1, 8: 3, 3: 4}
    assert cm.cycle_type_total(ct) == 37
    assert cm.gamma_h(one, 7) == {1: 1, 6: 1}
    with pytest.raises(ValueError):
        cm.gamma_h(EX26, 7)


def test_cycle_type_json():
    assert cm.cycle_type_json({1: 1, 8: 3, 3: 4}) == '{"1":1,"8":3,"3":4}'
    assert cm.cycle_type_from_json('{"1":1,"8":3,"3":4}') == {1: 1, 8: 3, 3: 4}


def test_construct_from_h_examples(f7):
    idh = PsiFunction(2, ((0,), (1,)), (1, 1))
    f = cm.construct_from_h(f7, idh)
    assert f.a == (2, 2)
    assert cm.cycle_type(f) == {1: 1, 3: 2}
    assert cm.construct_from_h(f7, PsiFunction(1, ((0,),), (1,))).a == (3,)
    with pytest.raises(ValueError):
        cm.construct_from_h(f7, EX26)


def test_special_perm():
    assert cm.special_perm([2, 1]) == (1, 0, 2)
    assert cm.special_perm([3]) == (1, 2, 0)
    assert cm.special_perm([1, 1]) == (0, 1)
    with pytest.raises(ValueError):
        cm.special_perm([1, 2])
    assert cm.is_special_perm((1, 0, 2))
    assert not cm.is_special_perm((0, 2, 1))


def test_construct_f_omega_examples(f7):
    f = cm.construct_f_omega(f7, PsiFunction(2, ((0,), (1,)), (1, 1)))
    assert f.a == (2, 2)
    g = cm.construct_f_omega(f7, PsiFunction(2, ((0, 1),), (1,)))
    assert g.a == (3, 3)
    for fm, h in ((f, (1, 1)), (g, (1,))):
        for zeta, hv in zip(cm.perm_cycles(cm.induced_coset_perm(fm)), h):
            assert fm.pi(zeta) == f7.omega_pow(fm.d * hv)
    with pytest.raises(ValueError):
        cm.construct_f_omega(f7, PsiFunction(3, ((0,), (1, 2)), (1, 1)))


def test_translate(f7):
    f = cm.cyclo_new(f7, 2, [3, 3])
    g = cm.translate(f, 1)
    assert g.a == (4, 4)
    assert cm.induced_coset_perm(g) == (0, 1)
    assert cm.translate(f, 0) == f
    z = cm.translate(cm.cyclo_new(f7, 2, [3, 6]), 1)
    assert z.a == (4, 0) and cm.induced_coset_perm(z) is None


def test_enumerate_h():
    assert len(cm.enumerate_h(1, 2)) == 2
    assert len(cm.enumerate_h(2, 1)) == 2
    assert len(cm.enumerate_h(3, 1)) == 3
    assert all(cm.is_special_perm(h.perm) for h in cm.enumerate_h(4, 2))


def test_enumerate_h_cycle_length_bound():
    # every nontrivial cycle of gamma_h(q) has length >= len(zeta) (q-1) / (d max)
    q, d, top = 37, 3, 4
    for h in cm.enumerate_h(d, top):
        if not cm.is_admissible(h, q):
            continue
        ct = cm.gamma_h(h, q)
        for zeta, hv in h.items():
            assert len(zeta) * (q - 1) // (d * hv) >= len(zeta) * (q - 1) // (d * top)
        assert cm.cycle_type_total(ct) == q


def test_per_map_omega_relabels_cosets():
    ctx = field(37)
    for w in ctx.primitive_roots():
        f = cm.construct_from_h(ctx, EX26, w)
        assert f.omega == w
        assert cm.sym_function_of(f) == EX26
        assert cm.cycle_type_oracle(f) == dict(sorted(cm.gamma_h(EX26, 37).items()))


QS = [q for q in field_orders(400)]


def _divisors(n, cap=12):
    return [d for d in range(1, cap + 1) if n % d == 0]


@settings(max_examples=150, deadline=None)
@given(st.sampled_from(QS), st.randoms(use_true_random=False), st.data())
def test_cycle_type_matches_oracle(q, rnd, data):
    ctx = field(q)
    d = data.draw(st.sampled_from(_divisors(q - 1)))
    f = cm.cyclo_new(ctx, d, random_cyclo_perm(rnd, ctx, d))
    ct = cm.cycle_type(f)
    assert dict(sorted(ct.items())) == cm.cycle_type_oracle(f)
    assert cm.cycle_type_total(ct) == q and ct[1] >= 1


@settings(max_examples=100, deadline=None)
@given(st.sampled_from(QS), st.randoms(use_true_random=False), st.data())
def test_construct_round_trip(q, rnd, data):
    ctx = field(q)
    d = data.draw(st.sampled_from(_divisors(q - 1, 6)))
    h = random_h(rnd, d, q - 1)
    f = cm.construct_from_h(ctx, h)
    assert cm.sym_function_of(f) == h
    assert cm.cycle_type(f) == cm.gamma_h(h, q)
    hs = random_h(rnd, d, q - 1, special=True)
    g = cm.construct_f_omega(ctx, hs)
    assert cm.induced_coset_perm(g) == hs.perm
    for zeta, hv in hs.items():
        assert g.pi(zeta) == ctx.omega_pow(d * hv)


@settings(max_examples=100, deadline=None)
@given(st.sampled_from(QS), st.randoms(use_true_random=False), st.data())
def test_translate_pointwise(q, rnd, data):
    ctx = field(q)
    d = data.draw(st.sampled_from(_divisors(q - 1)))
    f = cm.cyclo_new(ctx, d, [rnd.randrange(q) for _ in range(d)])
    c = data.draw(st.integers(0, q - 1))
    g = cm.translate(f, c)
    for x in range(0, q, max(1, q // 50)):
        assert g(x) == ctx.add(f(x), ctx.mul(c, x))
