"""Finite inverse categories with explicit composition tables.

Identities are implicit: every object ``K`` carries a formal ``1_K``
that never appears in ``arrows`` or ``comp``.  The composition table maps
``(g, f)`` to the name of ``g o f`` for every composable pair of
non-identity arrows.

Skeletality is checked as "no two distinct objects with arrows both ways".
For a finite category without non-identity endomorphisms this is the same
thing: if ``f : X -> Y`` and ``g : Y -> X`` then ``g o f`` is an
endomorphism of ``X``, hence ``1_X``, and likewise ``f o g = 1_Y``; so two
objects are isomorphic exactly when there are arrows both ways.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Optional, Union

from .kernel import CheckReport, Failure
from .syntax import ParseError, TokenStream, is_sort_name, is_var_name


@dataclass(frozen=True)
class Arrow:
    name: str
    dom: str
    cod: str


@dataclass(frozen=True)
class Identity:
    obj: str

    def __str__(self):
        return f"1_{self.obj}"


@dataclass(frozen=True, eq=False)
class Fic:
    objects: tuple = ()
    arrows: dict = field(default_factory=dict)
    comp: dict = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "objects", tuple(self.objects))

    def __eq__(self, other):
        if not isinstance(other, Fic):
            return NotImplemented
        return (
            set(self.objects) == set(other.objects)
            and len(self.objects) == len(other.objects)
            and self.arrows == other.arrows
            and self.comp == other.comp
        )

    def hom(self, x: str, y: str) -> set:
        return {a.name for a in self.arrows.values() if a.dom == x and a.cod == y}

    def dom(self, f: Union[str, Identity]) -> str:
        return f.obj if isinstance(f, Identity) else self.arrows[f].dom

    def cod(self, f: Union[str, Identity]) -> str:
        return f.obj if isinstance(f, Identity) else self.arrows[f].cod


def make_fic(objects, arrows, comp) -> Fic:
    """Build a fic from ``(name, dom, cod)`` triples and ``(g, f, h)`` triples meaning ``g o f = h``."""
    return Fic(
        tuple(objects),
        {n: Arrow(n, d, c) for n, d, c in arrows},
        {(g, f): h for g, f, h in comp},
    )


class FicError(ValueError):
    pass


# ---------------------------------------------------------------------------
# validation

def validate_fic(l: Fic) -> CheckReport:
    """Check the category laws, inverse-ness and skeletality of `l`.

    Failure rule names: ``objects``, ``arrow``, ``endomorphism``,
    ``comp_domain``, ``comp_total``, ``comp_typing``, ``associativity``,
    ``skeletality``.
    """
    fails = []
    objs = set(l.objects)
    if len(objs) != len(l.objects):
        fails.append(Failure("objects", "objects", "duplicate object"))
    for o in l.objects:
        if not is_sort_name(o):
            fails.append(Failure("objects", "objects", f"bad object name {o!r}"))
    for key, a in l.arrows.items():
        where = f"arrows[{key}]"
        if key != a.name or not is_var_name(a.name):
            fails.append(Failure("arrow", where, f"bad arrow name {a.name!r}"))
        if a.dom not in objs or a.cod not in objs:
            fails.append(Failure("arrow", where, f"{a.name} : {a.dom} -> {a.cod} mentions an unknown object"))
        if a.dom == a.cod:
            fails.append(Failure("endomorphism", where, f"{a.name} is an endomorphism of {a.dom}"))
    if fails and any(f.rule in ("objects", "arrow") for f in fails):
        return CheckReport(tuple(fails))

    for (g, f), h in sorted(l.comp.items()):
        where = f"comp[{g}.{f}]"
        if g not in l.arrows or f not in l.arrows or h not in l.arrows:
            fails.append(Failure("comp_domain", where, f"{g}.{f} = {h} mentions an unknown arrow"))
            continue
        if l.cod(f) != l.dom(g):
            fails.append(Failure("comp_domain", where, f"{g} and {f} are not composable"))
            continue
        if l.dom(h) != l.dom(f) or l.cod(h) != l.cod(g):
            fails.append(Failure(
                "comp_typing", where,
                f"{h} : {l.dom(h)} -> {l.cod(h)} but {g}.{f} : {l.dom(f)} -> {l.cod(g)}",
            ))
    names = sorted(l.arrows)
    for g, f in product(names, names):
        if l.cod(f) == l.dom(g) and (g, f) not in l.comp:
            fails.append(Failure("comp_total", f"comp[{g}.{f}]", f"no entry for composable pair {g}.{f}"))

    typed = not any(x.rule in ("comp_domain", "comp_typing", "comp_total") for x in fails)
    if typed:
        for f, g, h in product(names, names, names):
            if l.cod(f) == l.dom(g) and l.cod(g) == l.dom(h):
                left = l.comp[(h, l.comp[(g, f)])]
                right = l.comp[(l.comp[(h, g)], f)]
                if left != right:
                    fails.append(Failure(
                        "associativity", f"comp[{h}.{g}.{f}]",
                        f"{h}.({g}.{f}) = {left} but ({h}.{g}).{f} = {right}",
                    ))

    ordered = list(l.objects)
    for i, x in enumerate(ordered):
        for y in ordered[i + 1:]:
            if x != y and l.hom(x, y) and l.hom(y, x):
                fails.append(Failure(
                    "skeletality", f"objects[{x},{y}]",
                    f"arrows both ways between {x} and {y}: "
                    f"{sorted(l.hom(x, y))} and {sorted(l.hom(y, x))}",
                ))
    return CheckReport(tuple(fails))


# ---------------------------------------------------------------------------
# arrows

def cosieve(l: Fic, k: str) -> set:
    """All non-identity arrows with domain `k`."""
    if k not in l.objects:
        raise FicError(f"unknown object {k}")
    return {a.name for a in l.arrows.values() if a.dom == k}


def compose_arrows(l: Fic, g: Union[str, Identity], f: Union[str, Identity]):
    """``g o f``; identities absorb, everything else is a table lookup."""
    for a in (g, f):
        if not isinstance(a, Identity) and a not in l.arrows:
            raise FicError(f"{a} is not an arrow of the category")
        if isinstance(a, Identity) and a.obj not in l.objects:
            raise FicError(f"unknown object {a.obj}")
    if l.cod(f) != l.dom(g):
        raise FicError(f"{g} and {f} are not composable: cod({f}) = {l.cod(f)}, dom({g}) = {l.dom(g)}")
    if isinstance(f, Identity):
        return g
    if isinstance(g, Identity):
        return f
    try:
        return l.comp[(g, f)]
    except KeyError:
        raise FicError(f"composition table has no entry for {g}.{f}") from None


# ---------------------------------------------------------------------------
# isomorphism

@dataclass(frozen=True)
class FicIso:
    objects: dict
    arrows: dict

    def text(self) -> str:
        objs = ", ".join(f"{k}->{v}" for k, v in self.objects.items())
        arrs = ", ".join(f"{k}->{v}" for k, v in self.arrows.items())
        return f"objects: {{{objs}}}\narrows: {{{arrs}}}\n"


def is_fic_iso(a: Fic, b: Fic, w: FicIso) -> bool:
    """Machine check that `w` is an isomorphism of categories ``a -> b``."""
    if sorted(w.objects) != sorted(a.objects) or sorted(w.objects.values()) != sorted(b.objects):
        return False
    if sorted(w.arrows) != sorted(a.arrows) or sorted(w.arrows.values()) != sorted(b.arrows):
        return False
    for n, arr in a.arrows.items():
        img = b.arrows[w.arrows[n]]
        if img.dom != w.objects[arr.dom] or img.cod != w.objects[arr.cod]:
            return False
    if len(a.comp) != len(b.comp):
        return False
    return all(
        b.comp.get((w.arrows[g], w.arrows[f])) == w.arrows[h]
        for (g, f), h in a.comp.items()
    )


def iso_fic(a: Fic, b: Fic) -> Optional[FicIso]:
    """Backtracking search for an isomorphism ``a -> b``.

    Objects are matched first, pruning on hom-set sizes; arrows are then
    matched hom-set by hom-set, checking every composition whose three
    arrows are already assigned.
    """
    if len(a.objects) != len(b.objects) or len(a.arrows) != len(b.arrows) or len(a.comp) != len(b.comp):
        return None

    def profile(l, x):
        out = sorted(len(l.hom(x, y)) for y in l.objects if y != x)
        inn = sorted(len(l.hom(y, x)) for y in l.objects if y != x)
        return out, inn

    a_objs = list(a.objects)
    prof_b = {y: profile(b, y) for y in b.objects}
    omap: dict = {}

    def objects(i):
        if i == len(a_objs):
            yield
            return
        x = a_objs[i]
        px = profile(a, x)
        used = set(omap.values())
        for y in b.objects:
            if y in used or prof_b[y] != px:
                continue
            if any(
                len(a.hom(x, x2)) != len(b.hom(y, y2)) or len(a.hom(x2, x)) != len(b.hom(y2, y))
                for x2, y2 in omap.items()
            ):
                continue
            omap[x] = y
            yield from objects(i + 1)
            del omap[x]

    a_arrows = sorted(a.arrows, key=lambda n: (a_objs.index(a.arrows[n].dom), n))

    def arrows(i, amap, used):
        if i == len(a_arrows):
            yield dict(amap)
            return
        n = a_arrows[i]
        arr = a.arrows[n]
        for m in sorted(b.hom(omap[arr.dom], omap[arr.cod])):
            if m in used:
                continue
            amap[n] = m
            used.add(m)
            if _consistent(a, b, amap):
                yield from arrows(i + 1, amap, used)
            used.discard(m)
            del amap[n]

    for _ in objects(0):
        for amap in arrows(0, {}, set()):
            w = FicIso(dict(omap), amap)
            if is_fic_iso(a, b, w):
                return w
    return None


def _consistent(a: Fic, b: Fic, amap: dict) -> bool:
    for (g, f), h in a.comp.items():
        if g in amap and f in amap and h in amap:
            if b.comp.get((amap[g], amap[f])) != amap[h]:
                return False
    return True


# ---------------------------------------------------------------------------
# .fic text format

def parse_fic(text: str) -> Fic:
    """Parse ``.fic`` text; the result is not validated."""
    ts = TokenStream(text)
    ts.expect("objects")
    objects = []
    if not ts.at(";"):
        objects.append(ts.ident("sort name")[1])
        while ts.at(","):
            ts.expect(",")
            tok = ts.ident("sort name")
            if tok[1] in objects:
                ts.error(f"duplicate object {tok[1]}", tok)
            objects.append(tok[1])
    ts.expect(";")
    arrows: dict = {}
    comp: dict = {}
    while ts.peek[0] != "eof":
        tok = ts.peek
        if ts.at("arrow"):
            ts.expect("arrow")
            name = ts.ident("variable")
            if name[1] in arrows:
                ts.error(f"duplicate arrow {name[1]}", name)
            ts.expect(":")
            dom = ts.ident("sort name")
            ts.expect("->")
            cod = ts.ident("sort name")
            ts.expect(";")
            for o in (dom, cod):
                if o[1] not in objects:
                    ts.error(f"undeclared object {o[1]}", o)
            arrows[name[1]] = Arrow(name[1], dom[1], cod[1])
        elif ts.at("comp"):
            ts.expect("comp")
            g = ts.ident("variable")
            ts.expect(".")
            f = ts.ident("variable")
            ts.expect("=")
            h = ts.ident("variable")
            ts.expect(";")
            for a in (g, f, h):
                if a[1] not in arrows:
                    ts.error(f"undeclared arrow {a[1]}", a)
            if (g[1], f[1]) in comp:
                ts.error(f"duplicate comp entry for {g[1]}.{f[1]}", g)
            comp[(g[1], f[1])] = h[1]
        else:
            ts.error(f"expected 'arrow' or 'comp', found {tok[1]!r}" if tok[1] else "unexpected end of input")
    return Fic(tuple(objects), arrows, comp)


def print_fic(l: Fic) -> str:
    lines = ["objects " + ", ".join(sorted(l.objects)) + ";" if l.objects else "objects ;"]
    for n in sorted(l.arrows):
        a = l.arrows[n]
        lines.append(f"arrow {a.name} : {a.dom} -> {a.cod};")
    for (g, f), h in sorted(l.comp.items()):
        lines.append(f"comp {g} . {f} = {h};")
    return "\n".join(lines) + "\n"


def to_dot(l: Fic, name: str = "fic") -> str:
    lines = [f"digraph {name} {{"]
    for o in sorted(l.objects):
        lines.append(f"  {o};")
    for n in sorted(l.arrows):
        a = l.arrows[n]
        lines.append(f'  {a.dom} -> {a.cod} [label="{a.name}"];')
    for (g, f), h in sorted(l.comp.items()):
        lines.append(f"  // {g}.{f} = {h}")
    lines.append("}")
    return "\n".join(lines) + "\n"
