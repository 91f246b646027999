"""Swap congruence, canonical ordering and isomorphism of contexts and signatures.

Two values are isomorphic when one can be turned into the other by legal
swaps of adjacent independent bindings followed by a consistent renaming
of bound variables (and, optionally, of sort names).

Inside a signature, reordering the context of a binding ``K`` changes the
meaning of positional arguments at every use ``K(...)``.  A swap of
declarations ``p`` and ``p+1`` of ``K`` is therefore always paired with
the same transposition of the arguments of every sort headed by ``K``.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterator, Optional, Union

from .syntax import Context, Signature, Sort, alpha_eq


@dataclass(frozen=True)
class IsoWitness:
    """An isomorphism ``a -> b``.

    ``perm[i]`` is the index in `a` of the entry that lands at position
    `i` of `b`.  For signatures ``ctx_perms`` holds the same information
    for each binding's context (keyed by the sort name in `a`) and
    ``vars`` is keyed by ``"Sort.var"``.
    """

    perm: tuple
    vars: dict = field(default_factory=dict)
    sorts: dict = field(default_factory=dict)
    ctx_perms: dict = field(default_factory=dict)

    def text(self) -> str:
        perm = "perm: [" + ", ".join(map(str, self.perm)) + "]"
        for name, p in self.ctx_perms.items():
            if p:
                perm += f" {name}:[" + ", ".join(map(str, p)) + "]"
        vars_ = "vars: {" + ", ".join(f"{k}->{v}" for k, v in self.vars.items()) + "}"
        sorts = "sorts: {" + ", ".join(f"{k}->{v}" for k, v in self.sorts.items()) + "}"
        return f"{perm}\n{vars_}\n{sorts}\n"

    def apply(self, value: Union[Context, Signature]):
        if isinstance(value, Signature):
            return _apply_sig(self, value)
        declared = set(value.names)
        ren = lambda x: self.vars[x] if x in declared else x
        decls = []
        for j in self.perm:
            v, s = value.decls[j]
            decls.append((self.vars[v], Sort(s.head, tuple(ren(x) for x in s.args))))
        return Context(tuple(decls))


def _apply_sig(w: IsoWitness, sig: Signature) -> Signature:
    bindings = []
    for j in w.perm:
        name, ctx = sig.bindings[j]
        declared = set(ctx.names)
        ren = lambda x: w.vars[f"{name}.{x}"] if x in declared else x
        decls = []
        for k in w.ctx_perms.get(name, ()):
            v, s = ctx.decls[k]
            args = _permute(s.args, w.ctx_perms.get(s.head))
            decls.append((ren(v), Sort(w.sorts.get(s.head, s.head), tuple(map(ren, args)))))
        bindings.append((w.sorts.get(name, name), Context(tuple(decls))))
    return Signature(tuple(bindings))


def _permute(args: tuple, perm) -> tuple:
    if perm is None or len(perm) != len(args):
        return args
    return tuple(args[k] for k in perm)


# ---------------------------------------------------------------------------
# single swaps

def swap_ok(value: Union[Context, Signature], position: int) -> bool:
    """Whether entries `position` and `position + 1` are mutually independent."""
    entries = value.bindings if isinstance(value, Signature) else value.decls
    if not 0 <= position < len(entries) - 1:
        raise IndexError(f"no adjacent pair at position {position} (length {len(entries)})")
    (a, x), (b, y) = entries[position], entries[position + 1]
    if isinstance(value, Signature):
        return a not in _heads(y) and b not in _heads(x)
    return a not in y.args and b not in x.args


def _heads(ctx: Context) -> set:
    return {s.head for _, s in ctx.decls}


def _swap_ctx(ctx: Context, p: int) -> Context:
    d = list(ctx.decls)
    d[p], d[p + 1] = d[p + 1], d[p]
    return Context(tuple(d))


def _swap_in_binding(sig: Signature, k: int, p: int) -> Signature:
    """Swap declarations p, p+1 of binding k and transpose K's arguments everywhere."""
    target = sig.bindings[k][0]

    def fix(s: Sort) -> Sort:
        if s.head != target:
            return s
        a = list(s.args)
        if p + 1 < len(a):
            a[p], a[p + 1] = a[p + 1], a[p]
        return Sort(s.head, tuple(a))

    out = []
    for i, (name, ctx) in enumerate(sig.bindings):
        if i == k:
            ctx = _swap_ctx(ctx, p)
        out.append((name, Context(tuple((v, fix(s)) for v, s in ctx.decls))))
    return Signature(tuple(out))


def legal_swaps(value):
    """Every value reachable from `value` by one legal swap."""
    if isinstance(value, Signature):
        for p in range(len(value) - 1):
            if swap_ok(value, p):
                b = list(value.bindings)
                b[p], b[p + 1] = b[p + 1], b[p]
                yield Signature(tuple(b))
        for k, (_, ctx) in enumerate(value.bindings):
            for p in range(len(ctx) - 1):
                if swap_ok(ctx, p):
                    yield _swap_in_binding(value, k, p)
    else:
        for p in range(len(value) - 1):
            if swap_ok(value, p):
                yield _swap_ctx(value, p)


def swap_closure_oracle(a, b, max_size: int = 6) -> bool:
    """Breadth-first search over legal swaps from `a`, testing alpha-equivalence to `b`."""
    if len(a) > max_size or len(b) > max_size:
        raise ValueError(f"oracle limited to {max_size} entries")
    if len(a) != len(b):
        return False
    seen = {a}
    queue = deque([a])
    while queue:
        node = queue.popleft()
        if alpha_eq(node, b):
            return True
        for nxt in legal_swaps(node):
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return False


# ---------------------------------------------------------------------------
# isomorphism search

def _ctx_matchings(a: Context, b: Context, head_map, arg_perms) -> Iterator[tuple]:
    """Yield ``(perm, renaming)`` pairs matching `a` onto `b` declaration by declaration.

    Entries of `b` are matched in order; an entry of `a` is eligible only
    once every variable it mentions has been matched, so the resulting
    permutation respects dependencies.
    """
    if len(a) != len(b):
        return
    a_declared = set(a.names)
    b_declared = set(b.names)
    used = [False] * len(a)
    perm: list = []
    fwd: dict = {}

    def fits(sa: Sort, sb: Sort) -> bool:
        if head_map(sa.head) != sb.head or len(sa.args) != len(sb.args):
            return False
        for x, y in zip(_permute(sa.args, arg_perms(sa.head)), sb.args):
            if x in a_declared:
                if fwd.get(x) != y:
                    return False
            elif x != y or y in b_declared:
                return False
        return True

    def go(i: int):
        if i == len(b):
            yield tuple(perm), dict(fwd)
            return
        vb, sb = b.decls[i]
        for j, (va, sa) in enumerate(a.decls):
            if used[j] or not fits(sa, sb):
                continue
            used[j] = True
            perm.append(j)
            fwd[va] = vb
            yield from go(i + 1)
            del fwd[va]
            perm.pop()
            used[j] = False

    yield from go(0)


def iso_ctx(a: Context, b: Context) -> Optional[IsoWitness]:
    for perm, ren in _ctx_matchings(a, b, lambda h: h, lambda h: None):
        return IsoWitness(perm, ren)
    return None


def iso_sig(a: Signature, b: Signature, rename_sorts: bool = False) -> Optional[IsoWitness]:
    """Search for an isomorphism ``a -> b``; sort names are renamed only if asked."""
    if len(a) != len(b):
        return None
    used = [False] * len(a)
    perm: list = []
    sorts: dict = {}
    sorts_inv: dict = {}
    ctx_perms: dict = {}
    renames: dict = {}
    a_names = set(a.names)

    def head_map(h):
        if h in sorts:
            return sorts[h]
        return None if h in a_names else h

    def arg_perms(h):
        return ctx_perms.get(h)

    def go(i: int):
        if i == len(b):
            yield
            return
        nb, cb = b.bindings[i]
        for j, (na, ca) in enumerate(a.bindings):
            if used[j] or len(ca) != len(cb):
                continue
            if rename_sorts:
                if nb in sorts_inv:
                    continue
            elif na != nb:
                continue
            if any(h in a_names and h not in sorts for h in _heads(ca)):
                continue
            used[j] = True
            perm.append(j)
            sorts[na] = nb
            sorts_inv[nb] = na
            for p, ren in _ctx_matchings(ca, cb, head_map, arg_perms):
                ctx_perms[na] = p
                renames[na] = {f"{na}.{v}": w for v, w in ren.items()}
                yield from go(i + 1)
                del ctx_perms[na]
                del renames[na]
            del sorts[na]
            del sorts_inv[nb]
            perm.pop()
            used[j] = False

    for _ in go(0):
        vars_ = {}
        for j in perm:
            vars_.update(renames[a.bindings[j][0]])
        sort_map = {k: v for k, v in sorts.items() if rename_sorts}
        return IsoWitness(tuple(perm), vars_, sort_map, dict(ctx_perms))
    return None


# ---------------------------------------------------------------------------
# canonical ordering

def _kahn(items: list, deps, key) -> list:
    """Indices of `items` in dependency order, least `key` first among ready ones."""
    placed: list = []
    done: set = set()
    remaining = set(range(len(items)))
    while remaining:
        ready = [i for i in remaining if deps(i) <= done]
        if not ready:
            raise ValueError("dependency cycle")
        i = min(ready, key=key)
        placed.append(i)
        done.add(i)
        remaining.discard(i)
    return placed


def _ctx_order(ctx: Context) -> list:
    index = {v: i for i, v in enumerate(ctx.names)}
    return _kahn(
        list(ctx.decls),
        lambda i: {index[x] for x in ctx.decls[i][1].args if x in index},
        lambda i: (ctx.decls[i][1].head, ctx.decls[i][0]),
    )


def canonical_ctx(ctx: Context) -> Context:
    """Deterministic dependency-respecting reordering keyed on (sort head, variable)."""
    return Context(tuple(ctx.decls[i] for i in _ctx_order(ctx)))


def canonical_sig(sig: Signature) -> Signature:
    """Canonical reordering of bindings and of every binding's context.

    Arguments at use sites are permuted along with the contexts they
    instantiate, so the result is isomorphic to `sig`.
    """
    index = {n: i for i, n in enumerate(sig.names)}
    order = _kahn(
        list(sig.bindings),
        lambda i: {index[h] for h in _heads(sig.bindings[i][1]) if h in index},
        lambda i: sig.bindings[i][0],
    )
    perms = {name: _ctx_order(ctx) for name, ctx in sig.bindings}
    out = []
    for i in order:
        name, ctx = sig.bindings[i]
        decls = []
        for k in perms[name]:
            v, s = ctx.decls[k]
            decls.append((v, Sort(s.head, _permute(s.args, perms.get(s.head)))))
        out.append((name, Context(tuple(decls))))
    return Signature(tuple(out))
