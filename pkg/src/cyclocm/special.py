"""Counting special complete mappings by pruned backtracking.

A special complete mapping f is one q-cycle such that f + id is a fixed point
plus a (q-1)-cycle.  We grow the cycle of f from 0 one element at a time and
maintain the partial map g = f + id as a set of disjoint chains:

* a new g-value that is already taken kills the branch (g not injective);
* an edge closing a g-chain into a cycle kills the branch, except for the
  last edge, which must close the single (q-1)-cycle.

The fixed point of g is automatically the last element of f's cycle (the one
mapped to 0).  Scaling x -> l*f(x/l) by l in F_q^* preserves both cycle
types and acts freely on the solutions, so by default only cycles starting
(0, 1, ...) are searched and the count is multiplied by q - 1.
"""

from __future__ import annotations

import logging
import os
from multiprocessing import Pool

from sympy.ntheory import n_order

from .ff import FieldCtx, field_new
from .search import SearchReport, is_special

log = logging.getLogger(__name__)

# q -> (N_q or None when unknown, exemplary mapping)
TABLE1 = {
    3: (2, "x+1"),
    5: (4, "x+1"),
    7: (36, "(0,6,4,1,3,5,2)"),
    9: (0, None),
    11: (760, "x+1"),
    13: (22212, "x+1"),
    17: (None, "(0,3,9,10,13,5,11,14,12,2,8,16,1,4,7,6,15)"),
    19: (None, "x+1"),
    23: (None, "(0,20,7,14,18,5,6,11,8,2,10,15,9,13,16,21,17,22,19,12,1,4,3)"),
    25: (None, "(0,4w+1,4w+4,w,w+4,w+1,4,w+3,2w+1,3w,w+2,4w+3,1,"
               "2,3w+1,3w+2,3w+4,4w+2,4w,2w+4,3w+3,3,2w,2w+3,2w+2)"),
}
TABLE1_MODULUS = {25: (2, 4, 1)}  # T^2 - T + 2 over F_5


class _Stop(Exception):
    pass


def _add_table(ctx: FieldCtx):
    return [[ctx.add(x, y) for y in range(ctx.q)] for x in range(ctx.q)]


def _search_prefix(q, add, prefix, found=None, limit=None) -> tuple[int, int]:
    """(special cycles extending ``prefix``, search nodes visited); prefix starts at 0."""
    in_path = [False] * q
    g_used = [False] * q
    other = list(range(q))  # chain endpoints point at each other; singletons at themselves
    for v in prefix:
        if in_path[v]:
            return 0, 0
        in_path[v] = True
    for x, y in zip(prefix, prefix[1:]):
        gv = add[x][y]
        su = other[x]
        if y == 0 or g_used[gv] or su == gv:
            return 0, 0
        ev = other[gv]
        g_used[gv] = True
        other[su] = ev
        other[ev] = su
    count = 0
    nodes = 0
    path = list(prefix)
    candidates = range(1, q)

    def dfs(x, placed):
        nonlocal count, nodes
        nodes += 1
        addx = add[x]
        su = other[x]
        if placed + 1 == q:
            for y in candidates:
                if not in_path[y]:
                    gv = addx[y]
                    if su == gv and not g_used[gv]:
                        count += 1
                        if found is not None:
                            found.append(tuple(path) + (y,))
                        if limit is not None and count >= limit:
                            raise _Stop
                    return
            return
        for y in candidates:
            if in_path[y]:
                continue
            gv = addx[y]
            if g_used[gv] or su == gv:
                continue
            ev = other[gv]
            in_path[y] = True
            g_used[gv] = True
            other[su] = ev
            other[ev] = su
            path.append(y)
            dfs(y, placed + 1)
            path.pop()
            other[ev] = gv
            other[su] = x
            in_path[y] = False
            g_used[gv] = False

    try:
        dfs(prefix[-1], len(prefix))
    except _Stop:
        pass
    return count, nodes


def _frontier(q, symmetry: bool):
    """Cycle prefixes (0, x1, x2) to split the search on, in ascending order."""
    roots = [(0, 1)] if symmetry else [(0, y) for y in range(1, q)]
    if q <= 3:
        return roots
    return [r + (y,) for r in roots for y in range(1, q) if y not in r]


def _worker(args):
    q, p, f, modulus, prefix = args
    ctx = field_new(p, f, modulus)
    return _search_prefix(q, _add_table(ctx), prefix)


def cycle_to_table(q: int, cycle) -> tuple[int, ...]:
    img = [0] * q
    for k, x in enumerate(cycle):
        img[x] = cycle[(k + 1) % len(cycle)]
    return tuple(img)


def table_to_cycle(table) -> tuple[int, ...]:
    """The cycle through 0 of a table, starting at 0."""
    out = [0]
    x = table[0]
    while x != 0:
        out.append(x)
        x = table[x]
    return tuple(out)


def _scale_cycle(ctx, cycle, lam):
    return tuple(ctx.mul(lam, x) for x in cycle)


def _read_checkpoint(path, q, symmetry):
    partial = 0
    pending = []
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            if line.startswith("#"):
                fields = dict(kv.split("=", 1) for kv in line[1:].split() if "=" in kv)
                if int(fields.get("q", q)) != q or int(fields.get("symmetry", int(symmetry))) != int(symmetry):
                    raise ValueError(f"checkpoint {path} belongs to a different run")
                partial = int(fields.get("partial", partial))
                continue
            pending.append(tuple(int(t) for t in line.split(",")))
    return partial, pending


def _write_checkpoint(path, q, symmetry, partial, pending):
    tmp = f"{path}.tmp"
    with open(tmp, "w") as fh:
        fh.write(f"# q={q} symmetry={int(symmetry)} partial={partial}\n")
        for pre in pending:
            fh.write(",".join(map(str, pre)) + "\n")
    os.replace(tmp, path)


def enumerate_special(ctx: FieldCtx, mode: str = "count", *, symmetry: bool = True,
                      workers: int = 1, checkpoint: str | None = None) -> SearchReport:
    """Count (or list) the special complete mappings of F_q.

    ``mode`` is ``count``, ``first`` (smallest cycle in lexicographic order)
    or ``all``.  ``checkpoint`` names a plain-text file holding the pending
    cycle prefixes, one per line, so that long counts can be resumed.
    """
    if mode not in ("count", "first", "all"):
        raise ValueError(f"unknown mode {mode!r}")
    q = ctx.q
    if q % 2 == 0 or q < 3:
        return SearchReport(False, None, 0, exhausted=True, count=0)
    add = _add_table(ctx)
    scale = (q - 1) if symmetry else 1

    if mode == "first":
        found = []
        _, nodes = _search_prefix(q, add, (0, 1) if symmetry else (0,), found, limit=1)
        if not found:
            return SearchReport(False, None, nodes, exhausted=True, count=0)
        cyc = found[0]
        return SearchReport(True, {"cycle": list(cyc)}, nodes, obj=cycle_to_table(q, cyc))

    if mode == "all":
        found = []
        _, nodes = _search_prefix(q, add, (0, 1) if symmetry else (0,), found)
        if symmetry:
            found = [_scale_cycle(ctx, c, lam) for c in found for lam in range(1, q)]
        found.sort()
        tables = [cycle_to_table(q, c) for c in found]
        witness = {"cycle": list(found[0])} if found else None
        return SearchReport(bool(found), witness, nodes, exhausted=True,
                            count=len(found), obj=tables)

    pending = _frontier(q, symmetry)
    partial = 0
    if checkpoint and os.path.exists(checkpoint):
        partial, pending = _read_checkpoint(checkpoint, q, symmetry)
        log.info("resuming q=%d from %s: %d prefixes pending", q, checkpoint, len(pending))
    tested = 0
    if workers > 1 and not checkpoint:
        jobs = [(q, ctx.p, ctx.f, ctx.modulus, pre) for pre in pending]
        with Pool(workers) as pool:
            for c, nodes in pool.map(_worker, jobs, chunksize=1):
                partial += c
                tested += nodes
    else:
        while pending:
            pre = pending[0]
            c, nodes = _search_prefix(q, add, pre)
            partial += c
            tested += nodes
            pending = pending[1:]
            if checkpoint:
                _write_checkpoint(checkpoint, q, symmetry, partial, pending)
    count = partial * scale
    return SearchReport(count > 0, None, tested, exhausted=True, count=count)


def prop74_map(p: int, b: int = 1) -> tuple[int, ...]:
    """x -> x + b on F_p, for p with 2 a primitive root mod p."""
    ctx = field_new(p)
    if p == 2 or n_order(2, p) != p - 1:
        raise ValueError(f"2 is not a primitive root modulo {p}")
    if b % p == 0:
        raise ValueError("b must be nonzero mod p")
    t = tuple((x + b) % p for x in range(p))
    assert is_special(ctx, t)
    return t


def table1_field(q: int) -> FieldCtx:
    from .ff import parse_field_spec
    return parse_field_spec(str(q), TABLE1_MODULUS.get(q))


def parse_mapping(ctx: FieldCtx, text: str) -> tuple[int, ...]:
    """``x+b`` (translation) or a cycle in the notation ``(0,6,4,...)``."""
    text = text.replace(" ", "")
    if text.startswith("x+"):
        b = ctx.parse_element(text[2:])
        return tuple(ctx.add(x, b) for x in range(ctx.q))
    if not (text.startswith("(") and text.endswith(")")):
        raise ValueError(f"cannot parse mapping {text!r}")
    img = list(range(ctx.q))
    for body in text[1:-1].split(")("):
        cyc = [ctx.parse_element(t) for t in body.split(",")]
        if len(set(cyc)) != len(cyc):
            raise ValueError("repeated element in cycle")
        for k, x in enumerate(cyc):
            img[x] = cyc[(k + 1) % len(cyc)]
    return tuple(img)


def format_cycle(ctx: FieldCtx, cycle) -> str:
    return "(" + ",".join(ctx.format_element(x) for x in cycle) + ")"
