"""Finite fields F_q with q = p^f, elements packed as integer codes.

An element with coefficient vector (c_0, ..., c_{f-1}) over F_p (w.r.t. the
power basis 1, T, ..., T^{f-1} modulo the defining polynomial) has code
c_0 + c_1 p + ... + c_{f-1} p^{f-1}.  For prime fields the code is the residue.

Multiplication goes through discrete-log tables built once per field, so all
the inner-loop operations are O(1) lookups.
"""

from __future__ import annotations

import re
from functools import cached_property
from math import gcd

from sympy import factorint, isprime

# Conway polynomials, ascending coefficients, monic.
CONWAY = {
    4: (1, 1, 1),
    8: (1, 1, 0, 1),
    9: (2, 2, 1),
    16: (1, 1, 0, 0, 1),
    25: (2, 4, 1),
    27: (1, 2, 0, 1),
    32: (1, 0, 1, 0, 0, 1),
    49: (3, 6, 1),
    64: (1, 1, 0, 1, 1, 0, 1),
}


class FieldError(ValueError):
    pass


def _trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmod(a, m, p):
    """Remainder of a modulo monic m over F_p."""
    a = _trim(x % p for x in a)
    dm = len(m) - 1
    while len(a) - 1 >= dm:
        c = a[-1]
        shift = len(a) - 1 - dm
        for i, mi in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mi) % p
        a = _trim(a)
    return a


def _pmulmod(a, b, m, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _pmod(out, m, p)


def _ppowmod(a, e, m, p):
    result, base = [1], _pmod(a, m, p)
    while e:
        if e & 1:
            result = _pmulmod(result, base, m, p)
        base = _pmulmod(base, base, m, p)
        e >>= 1
    return result


def _pgcd(a, b, p):
    a, b = _trim(x % p for x in a), _trim(x % p for x in b)
    while b:
        inv = pow(b[-1], -1, p)
        b = [(x * inv) % p for x in b]
        a, b = b, _pmod(a, b, p)
    return a


def is_irreducible_mod_p(coeffs, p) -> bool:
    """Rabin's test for a monic polynomial over F_p (ascending coefficients)."""
    m = _trim(c % p for c in coeffs)
    n = len(m) - 1
    if n < 1 or m[-1] != 1:
        return False
    if n == 1:
        return True
    x = [0, 1]
    for r in factorint(n):
        h = _ppowmod(x, p ** (n // r), m, p)
        diff = list(h) + [0] * max(0, 2 - len(h))
        diff[1] = (diff[1] - 1) % p
        g = _pgcd(m, diff, p)
        if len(g) > 1:
            return False
    h = _ppowmod(x, p**n, m, p)
    return _trim(h) == [0, 1]


class FieldCtx:
    """The field F_q with a fixed primitive root ``omega``.

    Construct with :func:`field_new`.  Instances are treated as immutable.
    """

    def __init__(self, p: int, f: int, modulus, omega: int, exp: list, log: list):
        self.p = p
        self.f = f
        self.q = p**f
        self.modulus = modulus
        self.omega = omega
        self._exp = exp  # exp[e] = omega^e, length 2(q-1) for wraparound-free sums
        self._log = log  # log[0] = -1

    def __repr__(self):
        return f"FieldCtx(q={self.q}, omega={self.omega})"

    # element plumbing

    def digits(self, x: int) -> list[int]:
        out = []
        for _ in range(self.f):
            x, r = divmod(x, self.p)
            out.append(r)
        return out

    def from_digits(self, ds) -> int:
        x = 0
        for c in reversed(list(ds)):
            x = x * self.p + (c % self.p)
        return x

    def check(self, x: int) -> int:
        if not 0 <= x < self.q:
            raise FieldError(f"{x} is not an element code of F_{self.q}")
        return x

    @cached_property
    def _add_table(self):
        q = self.q
        return [[self._add_slow(x, y) for y in range(q)] for x in range(q)]

    def _add_slow(self, x, y):
        return self.from_digits(a + b for a, b in zip(self.digits(x), self.digits(y)))

    def add(self, x: int, y: int) -> int:
        if self.f == 1:
            return (x + y) % self.p
        if self.q <= 1024:
            return self._add_table[x][y]
        return self._add_slow(x, y)

    def neg(self, x: int) -> int:
        if self.f == 1:
            return -x % self.p
        return self.from_digits(-c for c in self.digits(x))

    def sub(self, x: int, y: int) -> int:
        return self.add(x, self.neg(y))

    def mul(self, x: int, y: int) -> int:
        if x == 0 or y == 0:
            return 0
        return self._exp[self._log[x] + self._log[y]]

    def inv(self, x: int) -> int:
        if x == 0:
            raise ZeroDivisionError("0 has no inverse")
        return self._exp[(-self._log[x]) % (self.q - 1)]

    def pow(self, x: int, e: int) -> int:
        if x == 0:
            if e < 0:
                raise ZeroDivisionError("0 has no inverse")
            return 1 if e == 0 else 0
        return self._exp[(self._log[x] * e) % (self.q - 1)]

    def omega_pow(self, e: int) -> int:
        return self._exp[e % (self.q - 1)]

    def scalar(self, n: int) -> int:
        """Image of the integer n in the prime subfield."""
        return n % self.p

    # multiplicative structure

    def discrete_log(self, x: int) -> int:
        if x == 0:
            raise FieldError("discrete log of 0 is undefined")
        return self._log[self.check(x)]

    def log_base(self, x: int, base: int) -> int:
        """log of x w.r.t. another primitive root ``base``."""
        lb = self.discrete_log(base)
        n = self.q - 1
        if gcd(lb, n) != 1:
            raise FieldError(f"{base} is not a primitive root")
        return (self.discrete_log(x) * pow(lb, -1, n)) % n

    def element_order(self, x: int) -> int:
        n = self.q - 1
        return n // gcd(self.discrete_log(x), n)

    def primitive_roots(self) -> list[int]:
        n = self.q - 1
        return sorted(self._exp[e] for e in range(n) if gcd(e, n) == 1)

    def is_primitive(self, x: int) -> bool:
        return x != 0 and gcd(self.discrete_log(x), self.q - 1) == 1

    def coset_index(self, d: int, x: int) -> int:
        if (self.q - 1) % d:
            raise FieldError(f"{d} does not divide q-1 = {self.q - 1}")
        return self.discrete_log(x) % d

    def nonzero(self):
        return range(1, self.q)

    # parsing / printing

    def parse_element(self, s) -> int:
        """Parse an integer code or a polynomial in ``w``/``ω``/``T`` such as ``4w+1``."""
        if isinstance(s, int):
            return self.check(s)
        s = s.strip().replace(" ", "").replace("ω", "w").replace("T", "w")
        if re.fullmatch(r"\d+", s):
            return self.check(int(s))
        coeffs = [0] * self.f
        for sign, term in re.findall(r"([+-]?)([^+-]+)", s):
            m = re.fullmatch(r"(\d*)\*?w(?:\^(\d+))?|(\d+)", term)
            if not m:
                raise FieldError(f"cannot parse element {s!r}")
            if m.group(3) is not None:
                c, k = int(m.group(3)), 0
            else:
                c = int(m.group(1)) if m.group(1) else 1
                k = int(m.group(2)) if m.group(2) else 1
            if k >= self.f:
                raise FieldError(f"degree {k} too large in {s!r}")
            coeffs[k] += -c if sign == "-" else c
        return self.from_digits(coeffs)

    def format_element(self, x: int) -> str:
        if self.f == 1:
            return str(x)
        terms = []
        for k, c in reversed(list(enumerate(self.digits(x)))):
            if c == 0:
                continue
            if k == 0:
                terms.append(str(c))
            else:
                base = "w" if k == 1 else f"w^{k}"
                terms.append(base if c == 1 else f"{c}{base}")
        return "+".join(terms) or "0"


def field_new(p: int, f: int = 1, modulus=None) -> FieldCtx:
    """Build F_{p^f}.

    ``modulus`` is an ascending, monic coefficient list of degree f; for f > 1
    it defaults to the built-in Conway polynomial when one is tabulated.
    """
    if not isinstance(p, int) or p < 2 or not isprime(p):
        raise FieldError(f"{p} is not prime")
    if f < 1:
        raise FieldError("extension degree must be >= 1")
    q = p**f
    n = q - 1
    if f == 1:
        if modulus is not None and len(_trim(modulus)) not in (0, 2):
            raise FieldError("modulus for a prime field must have degree 1")
        modulus = None
    else:
        if modulus is None:
            modulus = CONWAY.get(q)
            if modulus is None:
                raise FieldError(f"no built-in modulus for q = {q}; supply one")
        modulus = tuple(c % p for c in modulus)
        if len(_trim(modulus)) - 1 != f:
            raise FieldError(f"modulus must have degree {f}")
        if modulus[-1] != 1:
            raise FieldError("modulus must be monic")
        if not is_irreducible_mod_p(modulus, p):
            raise FieldError(f"modulus {list(modulus)} is reducible over F_{p}")

    prime_factors = list(factorint(n)) if n > 1 else []

    def mul(x, y):
        if f == 1:
            return (x * y) % p
        a = [(x // p**i) % p for i in range(f)]
        b = [(y // p**i) % p for i in range(f)]
        c = _pmulmod(a, b, modulus, p)
        return sum(ci * p**i for i, ci in enumerate(c))

    def power(x, e):
        r = 1
        while e:
            if e & 1:
                r = mul(r, x)
            x = mul(x, x)
            e >>= 1
        return r

    def primitive(x):
        return x != 0 and all(power(x, n // r) != 1 for r in prime_factors)

    # the root T of the modulus, if it is primitive; else the smallest primitive code
    if f > 1 and primitive(p):
        omega = p
    else:
        omega = next(x for x in range(1, q) if primitive(x))

    exp = [0] * (2 * n)
    log = [-1] * q
    x = 1
    for e in range(n):
        exp[e] = x
        log[x] = e
        x = mul(x, omega)
    exp[n:] = exp[:n]
    return FieldCtx(p, f, modulus, omega, exp, log)


def parse_field_spec(spec: str, modulus=None) -> FieldCtx:
    """``"7"``, ``"25"`` or ``"5^2"``."""
    spec = str(spec).strip()
    if "^" in spec:
        ps, fs = spec.split("^", 1)
        return field_new(int(ps), int(fs), modulus)
    q = int(spec)
    fac = factorint(q)
    if len(fac) != 1:
        raise FieldError(f"{q} is not a prime power")
    (p, f), = fac.items()
    return field_new(p, f, modulus)


def prime_powers(upto: int, start: int = 2) -> list[int]:
    return [q for q in range(start, upto + 1) if len(factorint(q)) == 1]


# module-level wrappers mirroring the context methods

def element_order(ctx: FieldCtx, x: int) -> int:
    return ctx.element_order(x)


def discrete_log(ctx: FieldCtx, x: int) -> int:
    return ctx.discrete_log(x)


def primitive_roots(ctx: FieldCtx) -> list[int]:
    return ctx.primitive_roots()


def coset_index(ctx: FieldCtx, d: int, x: int) -> int:
    return ctx.coset_index(d, x)
