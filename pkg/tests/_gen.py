"""Random instance generators shared by the property and acceptance suites."""

import random
from functools import lru_cache

from sympy import primerange

from cyclocm.cyclomap import PsiFunction, partitions, perm_cycles, special_perm
from cyclocm.ff import CONWAY, parse_field_spec


@lru_cache(maxsize=None)
def field(q):
    return parse_field_spec(str(q))


def field_orders(qmax):
    """Primes up to qmax plus the built-in prime powers."""
    return sorted(set(primerange(3, qmax + 1)) | {q for q in CONWAY if q <= qmax})


def random_perm(rng, d):
    p = list(range(d))
    rng.shuffle(p)
    return tuple(p)


def random_cyclo_perm(rng, ctx, d):
    """Branch constants of a random index-d cyclotomic permutation."""
    psi = random_perm(rng, d)
    a = []
    for i in range(d):
        # a_i in omega^(psi(i)-i) C
        e = (psi[i] - i) % d + d * rng.randrange((ctx.q - 1) // d)
        a.append(ctx.omega_pow(e))
    return a


def random_h(rng, d, n, special=False):
    """A Sym(d)-function with values dividing n // d (so q = n + 1 is admissible)."""
    if special:
        lengths = rng.choice(list(partitions(d)))
        perm = special_perm(lengths)
    else:
        perm = random_perm(rng, d)
    m = n // d
    divs = [k for k in range(1, m + 1) if m % k == 0]
    cycles = perm_cycles(perm)
    return PsiFunction(d, tuple(cycles), tuple(rng.choice(divs) for _ in cycles))


def rng(seed=0):
    return random.Random(seed)
