"""Multiplicative characters of F_q and the indicator character sums.

Characters are exponent-encoded: chi_k(w^e) = exp(2 pi i k e / (q-1)) and
chi_k(0) = 0, so products and orders are integer arithmetic mod q-1 and complex
numbers only appear when a value is materialized.
"""

from __future__ import annotations

import cmath
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm, sqrt

from sympy import divisors as _divisors
from sympy import mobius as _mobius
from sympy import totient as _totient

from . import poly
from .ff import FieldCtx, FieldError

IDENTITY_TOL = 1e-9
ROUND_TOL = 1e-6


@lru_cache(maxsize=None)
def divisors(n: int) -> tuple[int, ...]:
    return tuple(int(x) for x in _divisors(n))


@lru_cache(maxsize=None)
def mobius(n: int) -> int:
    return int(_mobius(n))


@lru_cache(maxsize=None)
def totient(n: int) -> int:
    return int(_totient(n))


@lru_cache(maxsize=64)
def _unit_roots(n: int) -> tuple[complex, ...]:
    return tuple(cmath.exp(2j * cmath.pi * j / n) for j in range(n))


def char_order(q: int, k: int) -> int:
    return (q - 1) // gcd(k, q - 1)


def chars_with_order_dividing(q: int, m: int) -> range:
    """Exponents k of the m characters whose order divides m."""
    step = (q - 1) // m
    return range(0, q - 1, step)


def chars_with_order(q: int, z: int) -> list[int]:
    step = (q - 1) // z
    return [j * step for j in range(z) if gcd(j, z) == 1]


def char_eval(ctx: FieldCtx, k: int, x: int) -> complex:
    if x == 0:
        return 0j
    n = ctx.q - 1
    return _unit_roots(n)[(k * ctx.discrete_log(x)) % n]


def _check_divisor(ctx, e, what="e"):
    if e < 1 or (ctx.q - 1) % e:
        raise FieldError(f"{what} = {e} does not divide q-1 = {ctx.q - 1}")


def f_e_sum(ctx: FieldCtx, e: int, xi: int, formula: str = "A") -> complex:
    """Character-sum expression for the indicator of 'xi != 0 has order e'."""
    _check_divisor(ctx, e)
    if xi == 0:
        return 0j
    n = ctx.q - 1
    roots = _unit_roots(n)
    lg = ctx.discrete_log(xi)
    if formula == "A":
        total = 0j
        for delta in divisors(e):
            mu = mobius(delta)
            if mu == 0:
                continue
            inner = sum(roots[(k * lg) % n] for k in chars_with_order_dividing(ctx.q, delta * n // e))
            total += mu / delta * inner
        return e / n * total
    if formula == "B":
        cofactor = n // e
        total = 0j
        for z in divisors(n):
            r = z // gcd(z, cofactor)
            mu = mobius(r)
            if mu == 0:
                continue
            inner = sum(roots[(k * lg) % n] for k in chars_with_order(ctx.q, z))
            total += mu / totient(r) * inner
        return totient(e) / n * total
    raise ValueError(f"unknown formula {formula!r}; use 'A' or 'B'")


def g_di_sum(ctx: FieldCtx, d: int, i: int, xi: int) -> complex:
    """Character-sum expression for the indicator of 'xi != 0, log xi = i mod d'."""
    _check_divisor(ctx, d, "d")
    if xi == 0:
        return 0j
    n = ctx.q - 1
    roots = _unit_roots(n)
    lg = ctx.discrete_log(xi)
    # chi_k(omega) = root^k, so chi(omega)^(-i) chi(xi) = root^(k (lg - i))
    return sum(roots[(k * (lg - i)) % n] for k in chars_with_order_dividing(ctx.q, d)) / d


def weil_sum(ctx: FieldCtx, polys, chars) -> complex:
    """Sum over xi of prod chi_i(Q_i(xi))."""
    polys = poly.check_polys(ctx, polys)
    if len(polys) != len(chars):
        raise ValueError("need one character per polynomial")
    n = ctx.q - 1
    roots = _unit_roots(n)
    total = 0j
    for xi in range(ctx.q):
        e = 0
        for a, k in zip(polys, chars):
            v = poly.evaluate(ctx, a, xi)
            if v == 0:
                break
            e += k * ctx.discrete_log(v)
        else:
            total += roots[e % n]
    return total


def weil_bound(ctx: FieldCtx, polys) -> float:
    return (sum(poly.degree(a) for a in polys) - 1) * sqrt(ctx.q)


def weil_bound_check(ctx: FieldCtx, polys, chars) -> bool:
    n = ctx.q - 1
    if all(k % n == 0 for k in chars):
        raise ValueError("the bound needs at least one non-principal character")
    s = weil_sum(ctx, polys, chars)
    return abs(s) <= weil_bound(ctx, polys) + ROUND_TOL


def principal_sum_value(ctx: FieldCtx, polys) -> int:
    """q minus the number of roots of the product (the all-principal case)."""
    polys = poly.check_polys(ctx, polys)
    null = {x for a in polys for x in poly.roots(ctx, a)}
    return ctx.q - len(null)


def count_carlitz(ctx: FieldCtx, polys, e_list) -> int:
    polys = poly.check_polys(ctx, polys)
    if len(polys) != len(e_list):
        raise ValueError("need one order per polynomial")
    for e in e_list:
        _check_divisor(ctx, e)
    count = 0
    for xi in range(ctx.q):
        for a, e in zip(polys, e_list):
            v = poly.evaluate(ctx, a, xi)
            if v == 0 or ctx.element_order(v) != e:
                break
        else:
            count += 1
    return count


def check_gen_params(ctx: FieldCtx, polys, d_list, j_list, d):
    polys = poly.check_polys(ctx, polys)
    if not (len(polys) == len(d_list) == len(j_list)):
        raise ValueError("polys, d_list and j_list must have equal length")
    if any(di < 1 for di in d_list) or d % lcm(*d_list):
        raise ValueError(f"lcm{tuple(d_list)} does not divide d = {d}")
    _check_divisor(ctx, d, "d")
    for di, ji in zip(d_list, j_list):
        if gcd(ji, d) != di:
            raise ValueError(f"gcd({ji}, {d}) = {gcd(ji, d)} != {di}")
    return polys


def count_carlitz_gen(ctx: FieldCtx, polys, d_list, j_list, d: int) -> int:
    """Direct count of xi with Q_i(xi) != 0, ord = (q-1)/d_i, log = j_i mod d."""
    polys = check_gen_params(ctx, polys, d_list, j_list, d)
    n = ctx.q - 1
    count = 0
    for xi in range(ctx.q):
        for a, di, ji in zip(polys, d_list, j_list):
            v = poly.evaluate(ctx, a, xi)
            if v == 0:
                break
            if ctx.element_order(v) != n // di or (ctx.discrete_log(v) - ji) % d:
                break
        else:
            count += 1
    return count


def count_via_indicators(ctx: FieldCtx, polys, d_list, j_list, d: int, formula: str = "B") -> int:
    """The same count, as a sum of products of the f_e and g_{d,i} character sums."""
    polys = check_gen_params(ctx, polys, d_list, j_list, d)
    n = ctx.q - 1
    total = 0j
    for xi in range(ctx.q):
        term = 1 + 0j
        for a, di, ji in zip(polys, d_list, j_list):
            v = poly.evaluate(ctx, a, xi)
            term *= f_e_sum(ctx, n // di, v, formula) * g_di_sum(ctx, d, ji, v)
        total += term
    nearest = round(total.real)
    if abs(total - nearest) > ROUND_TOL:
        raise ArithmeticError(f"indicator sum {total} is not near an integer")
    return int(nearest)


def c_constant(d_list, d: int) -> Fraction:
    """The exact density factor c(d_1..d_r; d)."""
    d_list = [int(x) for x in d_list]
    if d < 1 or any(di < 1 for di in d_list) or d % lcm(*d_list):
        raise ValueError(f"lcm{tuple(d_list)} does not divide d = {d}")
    c = Fraction(1, d ** len(d_list))
    for di in d_list:
        s = Fraction(0)
        for z in divisors(d):
            r = z // gcd(z, di)
            s += Fraction(mobius(r) ** 2 * totient(z), totient(r) ** 2)
        c *= s
    return c


def primitive_root_of_unity_sum(n: int) -> complex:
    if n < 1:
        raise ValueError("n must be positive")
    return sum(cmath.exp(2j * cmath.pi * k / n) for k in range(n) if gcd(k, n) == 1)


def near(z: complex, target: float, tol: float = IDENTITY_TOL) -> bool:
    return abs(z - target) < tol

