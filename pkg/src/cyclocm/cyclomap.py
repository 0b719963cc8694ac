"""First-order cyclotomic mappings and their cycle types.

A map of index d fixes 0 and multiplies the coset C_i = w^i C (C the index-d
subgroup of F_q^*) by a branch constant a_i.  Here w is the map's primitive
root, by default the field's.

Cycle types are plain ``dict[int, int]`` (length -> multiplicity).  Dict
insertion order is kept so that printed monomials follow the coset cycles.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from math import gcd, lcm

from .ff import FieldCtx, FieldError

CycleType = dict


class NotAPermutation(ValueError):
    pass


def _bump(ct: dict, length: int, mult: int) -> None:
    ct[length] = ct.get(length, 0) + mult


def cycle_type_json(ct: dict) -> str:
    return json.dumps({str(k): v for k, v in ct.items()}, separators=(",", ":"))


def cycle_type_from_json(text: str) -> dict:
    return {int(k): int(v) for k, v in json.loads(text).items()}


def cycle_type_total(ct: dict) -> int:
    return sum(length * mult for length, mult in ct.items())


def perm_cycles(perm) -> list[tuple[int, ...]]:
    """Cycles of a permutation of {0..n-1}, each starting at its minimum, sorted."""
    seen = [False] * len(perm)
    out = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        cyc = []
        x = start
        while not seen[x]:
            seen[x] = True
            cyc.append(x)
            x = perm[x]
        if x != start:
            raise ValueError("not a permutation")
        out.append(tuple(cyc))
    return out


def format_cycles(cycles) -> str:
    return "".join("(" + ",".join(str(i) for i in c) + ")" for c in cycles)


def cycle_type_of_table(table) -> dict:
    """Cycle type of a permutation given as an image table (orbit walk)."""
    ct: dict = {}
    for cyc in perm_cycles(table):
        _bump(ct, len(cyc), 1)
    return dict(sorted(ct.items()))


@dataclass(frozen=True)
class PsiFunction:
    """A permutation psi of {0..d-1} (by its cycles) with a positive value per cycle."""

    d: int
    cycles: tuple
    values: tuple

    def __post_init__(self):
        cycles = [tuple(c) for c in self.cycles]
        if len(cycles) != len(self.values):
            raise ValueError("need exactly one value per cycle")
        flat = sorted(i for c in cycles for i in c)
        if flat != list(range(self.d)):
            raise ValueError(f"cycles must partition 0..{self.d - 1}")
        if any(int(v) < 1 for v in self.values):
            raise ValueError("values must be positive integers")
        canon = []
        for c, v in zip(cycles, self.values):
            k = c.index(min(c))
            canon.append((c[k:] + c[:k], int(v)))
        canon.sort(key=lambda cv: cv[0][0])
        object.__setattr__(self, "cycles", tuple(c for c, _ in canon))
        object.__setattr__(self, "values", tuple(v for _, v in canon))

    @classmethod
    def from_perm(cls, perm, values) -> "PsiFunction":
        return cls(len(perm), tuple(perm_cycles(perm)), tuple(values))

    @classmethod
    def parse(cls, text: str) -> "PsiFunction":
        """Parse ``"(0,1)(2); h=3,4"``."""
        cyc_part, _, h_part = text.partition(";")
        cycles = []
        for body in cyc_part.replace(" ", "").strip("()").split(")("):
            cycles.append(tuple(int(t) for t in body.split(",") if t))
        h_part = h_part.strip()
        if h_part.startswith("h="):
            h_part = h_part[2:]
        values = tuple(int(t) for t in h_part.split(",") if t.strip())
        d = sum(len(c) for c in cycles)
        return cls(d, tuple(cycles), values)

    def __str__(self):
        return f"{format_cycles(self.cycles)}; h=" + ",".join(map(str, self.values))

    @property
    def perm(self) -> tuple[int, ...]:
        img = [0] * self.d
        for c in self.cycles:
            for k, i in enumerate(c):
                img[i] = c[(k + 1) % len(c)]
        return tuple(img)

    def items(self):
        return zip(self.cycles, self.values)


@dataclass(frozen=True)
class CyclotomicMap:
    ctx: FieldCtx = field(repr=False)
    d: int
    a: tuple
    omega: int = None

    def __post_init__(self):
        q = self.ctx.q
        if self.d < 1 or (q - 1) % self.d:
            raise FieldError(f"index {self.d} does not divide q-1 = {q - 1}")
        a = tuple(self.ctx.check(x) for x in self.a)
        if len(a) != self.d:
            raise ValueError(f"need {self.d} branch constants, got {len(a)}")
        object.__setattr__(self, "a", a)
        omega = self.ctx.omega if self.omega is None else self.omega
        if not self.ctx.is_primitive(omega):
            raise FieldError(f"{omega} is not a primitive root of F_{q}")
        object.__setattr__(self, "omega", omega)
        object.__setattr__(self, "_log_scale", pow(self.ctx.discrete_log(omega), -1, q - 1))

    def coset(self, x: int) -> int:
        """Index i with x in omega^i C (x nonzero)."""
        return (self.ctx.discrete_log(x) * self._log_scale) % self.d

    def __call__(self, x: int) -> int:
        if x == 0:
            return 0
        return self.ctx.mul(self.a[self.coset(x)], x)

    def table(self) -> tuple[int, ...]:
        return tuple(self(x) for x in range(self.ctx.q))

    def pi(self, cycle) -> int:
        out = 1
        for i in cycle:
            out = self.ctx.mul(out, self.a[i])
        return out


def cyclo_new(ctx: FieldCtx, d: int, a, omega: int = None) -> CyclotomicMap:
    return CyclotomicMap(ctx, d, tuple(a), omega)


def evaluate(fmap: CyclotomicMap, x: int) -> int:
    return fmap(x)


def induced_coset_perm(fmap: CyclotomicMap):
    """The permutation psi with f(C_i) = C_psi(i), or None if f is not bijective."""
    if any(ai == 0 for ai in fmap.a):
        return None
    d = fmap.d
    img = tuple((i + fmap.coset(ai)) % d for i, ai in enumerate(fmap.a))
    if len(set(img)) != d:
        return None
    return img


def _require_perm(fmap):
    psi = induced_coset_perm(fmap)
    if psi is None:
        raise NotAPermutation("the cyclotomic map is not a permutation of F_q")
    return psi


def cycle_type(fmap: CyclotomicMap) -> dict:
    """Closed-form cycle type from the coset permutation and the cycle products."""
    psi = _require_perm(fmap)
    ctx, d = fmap.ctx, fmap.d
    ct = {1: 1}
    for zeta in perm_cycles(psi):
        o = ctx.element_order(fmap.pi(zeta))
        _bump(ct, len(zeta) * o, (ctx.q - 1) // (d * o))
    return ct


def cycle_type_oracle(fmap: CyclotomicMap) -> dict:
    _require_perm(fmap)
    return cycle_type_of_table(fmap.table())


def sym_function_of(fmap: CyclotomicMap) -> PsiFunction:
    psi = _require_perm(fmap)
    ctx, d = fmap.ctx, fmap.d
    cycles = perm_cycles(psi)
    values = [(ctx.q - 1) // (d * ctx.element_order(fmap.pi(z))) for z in cycles]
    return PsiFunction(d, tuple(cycles), tuple(values))


def is_admissible(h: PsiFunction, q: int) -> bool:
    return (q - 1) % (h.d * lcm(*h.values)) == 0


def gamma_h(h: PsiFunction, q: int) -> dict:
    if not is_admissible(h, q):
        raise ValueError(f"q = {q} is not admissible for h = {h}")
    ct = {1: 1}
    for zeta, hv in h.items():
        _bump(ct, len(zeta) * (q - 1) // (h.d * hv), hv)
    return ct


def construct_from_h(ctx: FieldCtx, h: PsiFunction, omega: int = None) -> CyclotomicMap:
    """A map whose Sym(d)-function is h.

    Shifts by omega^(psi(i)-i) carry C_i to C_psi(i); the largest index of each
    cycle also carries b = omega^(d*h), which then is the whole cycle product.
    """
    if not is_admissible(h, ctx.q):
        raise ValueError(f"q = {ctx.q} is not admissible for h = {h}")
    omega = ctx.omega if omega is None else omega
    lw = ctx.discrete_log(omega)
    psi, d = h.perm, h.d
    a = [0] * d
    for zeta, hv in h.items():
        top = max(zeta)
        for i in zeta:
            e = psi[i] - i + (d * hv if i == top else 0)
            a[i] = ctx.omega_pow(lw * e)
    return CyclotomicMap(ctx, d, tuple(a), omega)


def special_perm(lengths) -> tuple[int, ...]:
    lengths = [int(n) for n in lengths]
    if not lengths or any(n < 1 for n in lengths):
        raise ValueError("cycle lengths must be positive")
    if lengths != sorted(lengths, reverse=True):
        raise ValueError("cycle lengths must be in descending order")
    img = []
    start = 0
    for n in lengths:
        img.extend(start + (k + 1) % n for k in range(n))
        start += n
    return tuple(img)


def is_special_perm(perm) -> bool:
    lengths = sorted((len(c) for c in perm_cycles(perm)), reverse=True)
    return tuple(perm) == special_perm(lengths)


def construct_f_omega(ctx: FieldCtx, h: PsiFunction, omega: int = None) -> CyclotomicMap:
    """Branch constant omega off terminal indices, omega^(1-len+d*h) at each terminal index."""
    if not is_special_perm(h.perm):
        raise ValueError(f"{format_cycles(h.cycles)} is not a special permutation")
    if not is_admissible(h, ctx.q):
        raise ValueError(f"q = {ctx.q} is not admissible for h = {h}")
    omega = ctx.omega if omega is None else omega
    a = [omega] * h.d
    for zeta, hv in h.items():
        a[zeta[-1]] = ctx.pow(omega, 1 - len(zeta) + h.d * hv)
    return CyclotomicMap(ctx, h.d, tuple(a), omega)


def translate(fmap: CyclotomicMap, c: int) -> CyclotomicMap:
    ctx = fmap.ctx
    return CyclotomicMap(ctx, fmap.d, tuple(ctx.add(ai, c) for ai in fmap.a), fmap.omega)


def partitions(n: int):
    """Partitions of n as descending tuples, largest first part first."""
    def rec(rest, cap):
        if rest == 0:
            yield ()
            return
        for k in range(min(rest, cap), 0, -1):
            for tail in rec(rest - k, k):
                yield (k,) + tail
    yield from rec(n, n)


def enumerate_h(d: int, max_value: int) -> list[PsiFunction]:
    """All Sym(d)-functions over special permutations with values <= max_value."""
    out = []
    for lengths in partitions(d):
        perm = special_perm(lengths)
        cycles = perm_cycles(perm)
        for values in itertools.product(range(1, max_value + 1), repeat=len(cycles)):
            out.append(PsiFunction(d, tuple(cycles), values))
    return out
