"""Witness searches for complete cyclotomic mappings, plus mapping predicates.

Every search scans a deterministic candidate space in ascending element-code
order and returns a :class:`SearchReport`.  A found witness is re-verified by
the predicates in this module before it is reported.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from . import charsum, poly
from .cyclomap import (
    CyclotomicMap,
    PsiFunction,
    construct_f_omega,
    cycle_type,
    cycle_type_of_table,
    gamma_h,
    induced_coset_perm,
    is_admissible,
    translate,
)
from .ff import FieldCtx, FieldError


@dataclass
class SearchReport:
    found: bool
    witness: dict | None = None
    candidates_tested: int = 0
    exhausted: bool = False
    count: int | None = None
    extra: dict = field(default_factory=dict)
    obj: object = field(default=None, repr=False, compare=False)

    def to_dict(self) -> dict:
        out = {"found": self.found}
        if self.count is not None:
            out["count"] = self.count
        out["candidates_tested"] = self.candidates_tested
        out["exhausted"] = self.exhausted
        if self.witness is not None:
            out["witness"] = self.witness
        out.update(self.extra)
        return out


# predicates on image tables

def _bijective(values, q) -> bool:
    seen = [False] * q
    for v in values:
        if seen[v]:
            return False
        seen[v] = True
    return True


def _check_table(ctx, t):
    t = tuple(t)
    if len(t) != ctx.q or any(not 0 <= v < ctx.q for v in t):
        raise FieldError(f"a mapping of F_{ctx.q} needs {ctx.q} images in range")
    return t


def plus_id(ctx: FieldCtx, t, c: int = 1) -> tuple[int, ...]:
    """Table of x -> t(x) + c*x."""
    return tuple(ctx.add(v, ctx.mul(c, x)) for x, v in enumerate(t))


def is_permutation(ctx: FieldCtx, t) -> bool:
    return _bijective(_check_table(ctx, t), ctx.q)


def is_complete(ctx: FieldCtx, t) -> bool:
    t = _check_table(ctx, t)
    return _bijective(t, ctx.q) and _bijective(plus_id(ctx, t), ctx.q)


def is_orthomorphism(ctx: FieldCtx, t) -> bool:
    t = _check_table(ctx, t)
    minus_one = ctx.neg(1)
    return _bijective(t, ctx.q) and _bijective(plus_id(ctx, t, minus_one), ctx.q)


def is_additive(ctx: FieldCtx, t) -> bool:
    t = _check_table(ctx, t)
    q = ctx.q
    return all(t[ctx.add(x, y)] == ctx.add(t[x], t[y]) for x in range(q) for y in range(x, q))


def fixed_points(t) -> list[int]:
    return [x for x, v in enumerate(t) if v == x]


def is_special(ctx: FieldCtx, t) -> bool:
    """t is one q-cycle and t + id is one fixed point plus a (q-1)-cycle."""
    t = _check_table(ctx, t)
    q = ctx.q
    if q < 3 or not _bijective(t, q):
        return False
    if cycle_type_of_table(t) != {q: 1}:
        return False
    g = plus_id(ctx, t)
    return _bijective(g, q) and cycle_type_of_table(g) == {1: 1, q - 1: 1}


# order / discrete-log witnesses

def find_xi(ctx: FieldCtx, polys, d_list) -> SearchReport:
    """Smallest xi with Q_i(xi) nonzero of order (q-1)/d_i for all i."""
    polys = poly.check_polys(ctx, polys)
    if len(polys) != len(d_list):
        raise ValueError("need one d_i per polynomial")
    n = ctx.q - 1
    for di in d_list:
        if di < 1 or n % di:
            raise FieldError(f"d_i = {di} does not divide q-1 = {n}")
    tested = 0
    for xi in range(ctx.q):
        tested += 1
        vals = [poly.evaluate(ctx, a, xi) for a in polys]
        if all(v != 0 and ctx.element_order(v) == n // di for v, di in zip(vals, d_list)):
            return SearchReport(True, {"xi": xi, "values": vals}, tested)
    return SearchReport(False, None, tested, exhausted=True)


def find_xi_gen(ctx: FieldCtx, polys, d_list, j_list, d: int) -> SearchReport:
    """As find_xi, additionally with log Q_i(xi) = j_i (mod d)."""
    polys = charsum.check_gen_params(ctx, polys, d_list, j_list, d)
    n = ctx.q - 1
    tested = 0
    for xi in range(ctx.q):
        tested += 1
        vals = [poly.evaluate(ctx, a, xi) for a in polys]
        if all(
            v != 0 and ctx.element_order(v) == n // di and (ctx.discrete_log(v) - ji) % d == 0
            for v, di, ji in zip(vals, d_list, j_list)
        ):
            return SearchReport(True, {"xi": xi, "values": vals}, tested)
    return SearchReport(False, None, tested, exhausted=True)


# complete cyclotomic mappings of prescribed cycle type

def _in_subgroup(ctx, x, d):
    return x != 0 and ctx.discrete_log(x) % d == 0


def _map_witness(fmap: CyclotomicMap) -> dict:
    return {"omega": fmap.omega, "d": fmap.d, "a": list(fmap.a)}


def find_complete_cyclotomic(ctx: FieldCtx, h: PsiFunction, c_list=(1,)) -> SearchReport:
    """Scan primitive roots w for a map f_w of type gamma_h(q) whose translates stabilize cosets.

    Acceptance needs every branch constant of every f_w + c id to lie in the
    index-d subgroup C.  The first w for which the translates are merely
    permutations is reported separately as ``weak_witness``.
    """
    if not is_admissible(h, ctx.q):
        raise ValueError(f"q = {ctx.q} is not admissible for h = {h}")
    cs = []
    for c in c_list:
        c = ctx.check(c)
        if c != 0 and c not in cs:
            cs.append(c)
    d = h.d
    target = gamma_h(h, ctx.q)
    tested = 0
    weak = None
    for omega in ctx.primitive_roots():
        tested += 1
        f = construct_f_omega(ctx, h, omega)
        translates = [translate(f, c) for c in cs]
        if all(_in_subgroup(ctx, ai, d) for g in translates for ai in g.a):
            if not _verify_complete_cyclotomic(ctx, f, translates, target):
                raise AssertionError(f"witness at omega={omega} failed verification")
            witness = _map_witness(f)
            witness["cycle_type"] = {str(k): v for k, v in cycle_type(f).items()}
            witness["c"] = cs
            return SearchReport(True, witness, tested, obj=f, extra={"weak_witness": weak})
        if weak is None and all(induced_coset_perm(g) is not None for g in translates):
            weak = _map_witness(f)
    return SearchReport(False, None, tested, exhausted=True, extra={"weak_witness": weak})


def _verify_complete_cyclotomic(ctx, f, translates, target) -> bool:
    if cycle_type_of_table(f.table()) != target:
        return False
    return all(is_permutation(ctx, g.table()) for g in translates)


# prescribed coset behaviour of several translates

def realize_coset_maps(ctx: FieldCtx, d: int, c_list, s_list) -> SearchReport:
    """Find f of index d with (f + c_j id)(C_i) = C_{s_j(i)} for all i, j.

    ``s_list[j]`` is any function {0..d-1} -> {0..d-1}, given as a sequence.
    The c_j are shifted so the first is 0; the returned map undoes the shift.
    """
    n = ctx.q - 1
    if d < 1 or n % d:
        raise FieldError(f"d = {d} does not divide q-1 = {n}")
    cs = [ctx.check(c) for c in c_list]
    if not cs or len(set(cs)) != len(cs):
        raise ValueError("c_list must be non-empty and pairwise distinct")
    sigmas = [tuple(int(v) for v in s) for s in s_list]
    if len(sigmas) != len(cs):
        raise ValueError("need one coset map per c_j")
    for s in sigmas:
        if len(s) != d or any(not 0 <= v < d for v in s):
            raise ValueError(f"coset map {s} is not a function on 0..{d - 1}")
    shift = cs[0]
    shifted = [ctx.sub(c, shift) for c in cs]
    generators = [x for x in ctx.nonzero() if ctx.element_order(x) == n // d]
    tested = 0
    consts, gammas = [], []
    for i in range(d):
        b = ctx.omega_pow(sigmas[0][i] - i)
        for gamma in generators:
            tested += 1
            a = ctx.mul(b, gamma)
            ok = True
            for c, s in zip(shifted[1:], sigmas[1:]):
                v = ctx.add(a, c)
                if v == 0 or (ctx.discrete_log(v) - (s[i] - i)) % d:
                    ok = False
                    break
            if ok:
                gammas.append(gamma)
                consts.append(ctx.sub(a, shift))
                break
        else:
            return SearchReport(False, None, tested, exhausted=True, extra={"failed_coset": i})
    f = CyclotomicMap(ctx, d, tuple(consts))
    if not verify_coset_maps(f, cs, sigmas):
        raise AssertionError("coset-map witness failed verification")
    return SearchReport(True, {"a": list(f.a), "gamma": gammas}, tested, obj=f)


def verify_coset_maps(f: CyclotomicMap, c_list, sigmas) -> bool:
    """Check (f + c_j id)(C_i) = C_{s_j(i)} pointwise over every coset."""
    ctx, d = f.ctx, f.d
    members = [[] for _ in range(d)]
    for x in ctx.nonzero():
        members[f.coset(x)].append(x)
    for c, s in zip(c_list, sigmas):
        for i in range(d):
            images = {ctx.add(f(x), ctx.mul(c, x)) for x in members[i]}
            if 0 in images or any(f.coset(y) != s[i] for y in images):
                return False
            if len(images) != len(members[i]):
                return False
    return True


# non-additive complete mappings with two long cycles

def u_candidates(q: int, p: int, d: int, bound: int | None = None):
    """Odd u > 1, a unit mod (q-1)/d, u != 1 there, u != e(d-1) mod p where e = 1/d mod p."""
    if d < 2 or (q - 1) % d:
        raise ValueError(f"need d > 1 dividing q-1 = {q - 1}")
    if d % p == 0:
        raise ValueError(f"p = {p} divides d = {d}; d has no inverse mod p")
    m = (q - 1) // d
    forbidden = pow(d, -1, p) * (d - 1) % p
    # the conditions are periodic in u with period lcm(2, m, p)
    period = 2 * m * p
    stop = period + 3 if bound is None else bound
    for u in range(3, stop, 2):
        if gcd(u, m) == 1 and u % m != 1 % m and u % p != forbidden:
            yield u


def choose_u(q: int, p: int, d: int, bound: int | None = None) -> SearchReport:
    for tested, u in enumerate(u_candidates(q, p, d, bound), start=1):
        return SearchReport(True, {"u": u, "o": u * d - (d - 1)}, tested)
    raise ValueError(f"no admissible u for q={q}, d={d}" + (f" below {bound}" if bound else ""))


def thm3_conditions(ctx: FieldCtx, d: int, o: int, xi: int) -> tuple[bool, bool, bool, bool]:
    """The four conditions on xi; logs are taken to base xi, which indexes the cosets."""
    n = ctx.q - 1
    c1 = xi != 0 and ctx.element_order(xi) == n
    if not c1:
        return False, False, False, False
    s1 = ctx.add(xi, 1)
    s2 = ctx.add(ctx.pow(xi, o), 1)
    c2 = s1 != 0 and s2 != 0 and ctx.element_order(ctx.mul(ctx.pow(s1, d - 1), s2)) == n // d
    c3 = s1 != 0 and ctx.log_base(s1, xi) % d == 1 % d
    c4 = s2 != 0 and ctx.log_base(s2, xi) % d == 1 % d
    return c1, c2, c3, c4


def construct_thm3(ctx: FieldCtx, d: int, bound: int | None = None) -> SearchReport:
    """Scan (u, xi) for f = xi*x off C_{d-1}, xi^o*x on C_{d-1} with f, f+id both (q-1)-cycles on F_q^*."""
    n = ctx.q - 1
    if d <= 1:
        raise ValueError("d must be > 1")
    if n % d:
        raise FieldError(f"d = {d} does not divide q-1 = {n}")
    tested = 0
    tried = []
    seen_o = set()
    # xi^o depends on o mod q-1, i.e. on the unit u mod (q-1)/d (u = 1 excluded)
    residues = charsum.totient(n // d) - 1
    for u in u_candidates(ctx.q, ctx.p, d, bound):
        if len(seen_o) >= residues:
            break
        o = u * d - (d - 1)
        if o % n in seen_o:
            continue
        seen_o.add(o % n)
        tried.append(u)
        for xi in range(1, ctx.q):
            tested += 1
            if all(thm3_conditions(ctx, d, o, xi)):
                f = CyclotomicMap(ctx, d, tuple([xi] * (d - 1) + [ctx.pow(xi, o)]), xi)
                table = f.table()
                g = plus_id(ctx, table)
                checks = {
                    "fixes_zero": table[0] == 0,
                    "non_additive": not is_additive(ctx, table),
                    "f_cycle_type": cycle_type_of_table(table),
                    "g_cycle_type": cycle_type_of_table(g) if _bijective(g, ctx.q) else None,
                }
                long_cycle = {1: 1, n: 1}
                if not (checks["fixes_zero"] and checks["non_additive"]
                        and checks["f_cycle_type"] == long_cycle and checks["g_cycle_type"] == long_cycle):
                    raise AssertionError(f"two-long-cycle witness failed verification: {checks}")
                witness = {"u": u, "o": o, "omega": xi, "d": d, "a": list(f.a),
                           "f_cycle_type": {str(k): v for k, v in long_cycle.items()},
                           "g_cycle_type": {str(k): v for k, v in long_cycle.items()}}
                return SearchReport(True, witness, tested, obj=f, extra={"u_tried": tried})
    return SearchReport(False, None, tested, exhausted=True, extra={"u_tried": tried})

