"""Translations between well-formed signatures and finite inverse categories.

``sig_to_fic`` reads each binding ``K : G`` as the object ``K`` together
with one arrow ``y : K -> Y`` per declaration ``y : Y(...)`` of ``G``; the
arguments of ``y`` record how ``y`` composes with the arrows out of ``Y``.

``fic_to_sig`` goes back by listing objects codomain-first and giving
each object the context of its cosieve, every arrow declared after the
composites it factors through.
"""
from __future__ import annotations

from dataclasses import dataclass

from .fic import Arrow, Fic, FicError, cosieve
from .kernel import check_signature, proj
from .syntax import Context, Signature, Sort, fresh_name


@dataclass(frozen=True)
class LinearExtension:
    order: tuple
    constraints: frozenset  # pairs (a, b): a must precede b

    def respects(self) -> bool:
        pos = {x: i for i, x in enumerate(self.order)}
        return len(pos) == len(self.order) and all(pos[a] < pos[b] for a, b in self.constraints)


def _extend(carrier, constraints: frozenset, key) -> LinearExtension:
    before = {x: {a for a, b in constraints if b == x} for x in carrier}
    order = []
    remaining = set(carrier)
    while remaining:
        ready = [x for x in remaining if before[x] <= set(order)]
        if not ready:
            raise FicError(f"ordering constraints are cyclic among {sorted(remaining)}")
        x = min(ready, key=key)
        order.append(x)
        remaining.discard(x)
    return LinearExtension(tuple(order), constraints)


def object_order(l: Fic) -> LinearExtension:
    """Objects ordered so that the codomain of every arrow precedes its domain."""
    constraints = frozenset((a.cod, a.dom) for a in l.arrows.values())
    return _extend(l.objects, constraints, key=lambda x: x)


def cosieve_order(l: Fic, k: str, objects: LinearExtension = None) -> LinearExtension:
    """Arrows out of `k`, each composite ``g o f`` placed before its factor `f`.

    Ties are broken by the rank of the codomain in :func:`object_order`,
    then by name.
    """
    arrows = cosieve(l, k)
    rank = {x: i for i, x in enumerate((objects or object_order(l)).order)}
    constraints = frozenset(
        (h, f) for (g, f), h in l.comp.items() if f in arrows and h in arrows
    )
    return _extend(arrows, constraints, key=lambda f: (rank[l.arrows[f].cod], f))


def build_TK(l: Fic, k: str, objects: LinearExtension = None) -> Context:
    """The context of arrows out of `k`; each ``f : k -> K'`` gets ``K'(p1 o f, ..., pm o f)``."""
    objects = objects or object_order(l)
    decls = []
    for f in cosieve_order(l, k, objects).order:
        target = l.arrows[f].cod
        args = []
        for p in cosieve_order(l, target, objects).order:
            try:
                args.append(l.comp[(p, f)])
            except KeyError:
                raise FicError(f"composition table has no entry for {p}.{f}") from None
        decls.append((f, Sort(target, tuple(args))))
    return Context(tuple(decls))


def fic_to_sig(l: Fic) -> Signature:
    objects = object_order(l)
    return Signature(tuple((k, build_TK(l, k, objects)) for k in objects.order))


def sig_to_fic(sig: Signature) -> Fic:
    """The category presented by a checked signature.

    Variable names that were already used by an earlier binding are
    renamed apart (``x0``, ``x1``, ...), since arrows of a fic must have
    distinct names.
    """
    report = check_signature(sig)
    if not report.ok:
        raise ValueError("signature is not well formed:\n" + report.text())
    sig = _rename_apart(sig)
    objects: list = []
    arrows: dict = {}
    comp: dict = {}
    for k, gamma in sig.bindings:
        objects.append(k)
        for f, sort in gamma.decls:
            arrows[f] = Arrow(f, k, sort.head)
        for f, sort in gamma.decls:
            y = sort.head
            delta = sig.lookup(y)
            for g in delta.names:
                comp[(g, f)] = proj(sig, gamma, y, delta, g, f)
    return Fic(tuple(objects), arrows, comp)


def _rename_apart(sig: Signature) -> Signature:
    used: set = set()
    out = []
    for k, gamma in sig.bindings:
        ren = {}
        for v in gamma.names:
            ren[v] = v if v not in used else fresh_name("var", used | set(gamma.names) | set(ren.values()))
            used.add(ren[v])
        decls = tuple(
            (ren[v], Sort(s.head, tuple(ren[a] for a in s.args))) for v, s in gamma.decls
        )
        out.append((k, Context(decls)))
    return Signature(tuple(out))
