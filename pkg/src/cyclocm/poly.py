"""Univariate polynomials over F_q as ascending tuples of element codes."""

from __future__ import annotations

from .ff import FieldCtx, FieldError


def normalize(a) -> tuple[int, ...]:
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return tuple(a)


def parse_poly(ctx: FieldCtx, text: str) -> tuple[int, ...]:
    """``"1,1"`` is T + 1; coefficients are element codes (or ``4w+1`` style)."""
    coeffs = [ctx.parse_element(c) for c in text.split(",") if c.strip()]
    return normalize(coeffs)


def format_poly(a) -> str:
    return ",".join(str(c) for c in a)


def degree(a) -> int:
    return len(normalize(a)) - 1


def evaluate(ctx: FieldCtx, a, x: int) -> int:
    acc = 0
    for c in reversed(a):
        acc = ctx.add(ctx.mul(acc, x), c)
    return acc


def derivative(ctx: FieldCtx, a):
    return normalize(ctx.mul(ctx.scalar(i), c) for i, c in enumerate(a) if i > 0)


def mul(ctx: FieldCtx, a, b):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] = ctx.add(out[i + j], ctx.mul(x, y))
    return normalize(out)


def divmod_poly(ctx: FieldCtx, a, b):
    a, b = list(normalize(a)), normalize(b)
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    db = len(b) - 1
    inv_lead = ctx.inv(b[-1])
    quot = [0] * max(0, len(a) - db)
    while len(a) - 1 >= db and a:
        c = ctx.mul(a[-1], inv_lead)
        shift = len(a) - 1 - db
        quot[shift] = c
        for i, bi in enumerate(b):
            a[shift + i] = ctx.sub(a[shift + i], ctx.mul(c, bi))
        a = list(normalize(a))
    return normalize(quot), tuple(a)


def gcd(ctx: FieldCtx, a, b):
    """Monic gcd."""
    a, b = normalize(a), normalize(b)
    while b:
        a, b = b, divmod_poly(ctx, a, b)[1]
    if not a:
        return ()
    inv = ctx.inv(a[-1])
    return tuple(ctx.mul(c, inv) for c in a)


def is_squarefree(ctx: FieldCtx, a) -> bool:
    da = derivative(ctx, a)
    if not da:
        # a' = 0 means a is a p-th power (or constant)
        return degree(a) <= 0
    return degree(gcd(ctx, a, da)) == 0


def check_polys(ctx: FieldCtx, polys) -> list[tuple[int, ...]]:
    """Raise unless the list is non-constant, squarefree and pairwise coprime."""
    polys = [normalize(a) for a in polys]
    if not polys:
        raise FieldError("need at least one polynomial")
    for a in polys:
        if any(not 0 <= c < ctx.q for c in a):
            raise FieldError(f"coefficient out of range in {a}")
        if degree(a) < 1:
            raise FieldError(f"polynomial {a} is constant")
        if not is_squarefree(ctx, a):
            raise FieldError(f"polynomial {a} is not squarefree")
    for i in range(len(polys)):
        for j in range(i + 1, len(polys)):
            if degree(gcd(ctx, polys[i], polys[j])) > 0:
                raise FieldError(f"polynomials {polys[i]} and {polys[j]} are not coprime")
    return polys


def roots(ctx: FieldCtx, a) -> list[int]:
    return [x for x in range(ctx.q) if evaluate(ctx, a, x) == 0]
