"""Seeded generation of well-formed signatures and the property suites.

Fics are obtained as images of generated signatures under
:func:`~ficsig.bridge.sig_to_fic`; sampling associative composition
tables directly is much harder and reaches nothing new.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Optional

from . import bridge, congruence, fic, kernel, syntax
from .syntax import Context, Signature, Sort

SUITES = ("lemmas", "roundtrip", "congruence", "fic-axioms", "parser")


@dataclass(frozen=True)
class GenParams:
    seed: int = 0
    max_sorts: int = 5
    max_ctx_len: int = 5
    max_attempts: int = 20

    def __post_init__(self):
        for name in ("max_sorts", "max_ctx_len", "max_attempts"):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be non-negative")


def case_seed(seed: int, case: int) -> int:
    return random.Random(f"{seed}/{case}").getrandbits(63)


# ---------------------------------------------------------------------------
# generation

def gen_signature(p: GenParams) -> Signature:
    """A random signature that always passes ``check_signature``.

    Each declaration picks an existing binding ``B : D`` and fills ``D``
    entry by entry with variables of exactly the required sort.  Bindings
    whose search runs out of attempts are skipped; a binding with an
    empty context always fits.  Sizes are skewed towards the maxima.
    """
    rng = random.Random(p.seed)
    sig = Signature()
    for _ in range(_skewed(rng, p.max_sorts)):
        name = syntax.fresh_name("sort", sig.names)
        ctx = Context()
        if len(sig):
            for _ in range(_skewed(rng, p.max_ctx_len)):
                ctx = _extend_ctx(rng, sig, ctx, p.max_attempts)
        sig = sig.extend(name, ctx)
    return sig


def _skewed(rng: random.Random, n: int) -> int:
    return max(rng.randint(0, n), rng.randint(0, n))


def _extend_ctx(rng: random.Random, sig: Signature, ctx: Context, attempts: int) -> Context:
    var = syntax.fresh_name("var", ctx.names)
    options = []
    for head, delta in sig.bindings:
        args = _fill(rng, ctx, delta, (), [max(attempts, 1)])
        if args is not None:
            options.append(Sort(head, args))
    return ctx.extend(var, rng.choice(options))


def _fill(rng, ctx: Context, delta: Context, chosen: tuple, budget: list) -> Optional[tuple]:
    i = len(chosen)
    if i == len(delta):
        return chosen
    image = dict(zip(delta.names, chosen))
    _, sort = delta.decls[i]
    required = Sort(sort.head, tuple(image[a] for a in sort.args))
    candidates = [v for v, s in ctx.decls if s == required]
    rng.shuffle(candidates)
    for v in candidates:
        if budget[0] <= 0:
            return None
        budget[0] -= 1
        found = _fill(rng, ctx, delta, chosen + (v,), budget)
        if found is not None:
            return found
    return None


def rename_variables(rng: random.Random, value):
    """Apply a random injective renaming of bound variables (contexts or signatures)."""
    if isinstance(value, Signature):
        return Signature(tuple((n, rename_variables(rng, c)) for n, c in value.bindings))
    pool = [f"v{i}" for i in range(len(value) * 3 + 3)]
    rng.shuffle(pool)
    ren = dict(zip(value.names, pool))
    return Context(tuple(
        (ren[v], Sort(s.head, tuple(ren.get(a, a) for a in s.args))) for v, s in value.decls
    ))


def random_walk(rng: random.Random, value, steps: int):
    """Apply `steps` random legal swaps (see :mod:`ficsig.congruence`)."""
    for _ in range(steps):
        moves = list(congruence.legal_swaps(value))
        if not moves:
            break
        value = rng.choice(moves)
    return value


# ---------------------------------------------------------------------------
# instance enumeration for the lemma suite

def substitution_chains(sig: Signature):
    """Yield ``(gamma, sigma, delta, tau, sigma_ctx, y, B)`` for every declaration chain.

    ``sigma : gamma => delta`` is the argument list of a declaration
    ``u : A(sigma)`` in some binding context ``gamma`` (with ``A : delta``),
    and ``tau : delta => sigma_ctx`` that of a declaration
    ``y : B(tau)`` of ``delta`` (with ``B : sigma_ctx``).
    """
    for _, gamma in sig.bindings:
        for _, s in gamma.decls:
            delta = sig.lookup(s.head)
            for y, t in delta.decls:
                yield gamma, s.args, delta, t.args, sig.lookup(t.head), y, t.head


def proj_triples(sig: Signature):
    """Yield ``(gamma, Y, dY, Z, dZ, W, dW, z, y, x)`` for arrow chains ``K -z-> Y -y-> Z -x-> W``."""
    for _, gamma in sig.bindings:
        for z, sz in gamma.decls:
            dy = sig.lookup(sz.head)
            for y, sy in dy.decls:
                dz = sig.lookup(sy.head)
                for x, sx in dz.decls:
                    yield gamma, sz.head, dy, sy.head, dz, sx.head, sig.lookup(sx.head), z, y, x


def lemma_failures(sig: Signature, counts: dict) -> list:
    fails = []
    for gamma, sigma, delta, tau, sctx, y, head in substitution_chains(sig):
        comp = kernel.compose_subst(sigma, tau, gamma, delta, sctx)
        lhs = kernel.reify(comp, gamma, sctx)
        f_sigma = kernel.reify(sigma, gamma, delta)
        f_tau = kernel.reify(tau, delta, sctx)
        counts["reify_composition"] = counts.get("reify_composition", 0) + 1
        if any(lhs(v) != f_sigma(f_tau(v)) for v in kernel.ctx_vars(sctx)):
            fails.append("reify_composition")
        counts["lookup"] = counts.get("lookup", 0) + 1
        if (f_sigma(y), Sort(head, comp)) not in gamma.decls:
            fails.append("lookup")
    for gamma, Y, dY, Z, dZ, W, dW, z, y, x in proj_triples(sig):
        counts["proj_assoc"] = counts.get("proj_assoc", 0) + 1
        yz = kernel.proj(sig, gamma, Y, dY, y, z)
        left = kernel.proj(sig, gamma, Z, dZ, x, yz) if yz is not None else None
        xy = kernel.proj(sig, dY, Z, dZ, x, y)
        right = kernel.proj(sig, gamma, Y, dY, xy, z) if xy is not None else None
        if left is None or right is None or left != right:
            fails.append("proj_assoc")
    return fails


# ---------------------------------------------------------------------------
# suites

@dataclass
class CaseFailure:
    case: int
    seed: int
    prop: str
    shrunk: Optional[Signature] = None

    def __str__(self):
        return f"FAIL case={self.case} seed={self.seed} prop={self.prop}"


@dataclass
class SuiteReport:
    name: str
    cases: int
    failures: list = field(default_factory=list)
    counts: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.failures

    @property
    def failed_cases(self) -> int:
        return len({f.case for f in self.failures})

    def text(self) -> str:
        lines = [str(f) for f in self.failures]
        if self.ok:
            lines.append(f"OK {self.cases} cases")
        else:
            lines.append(f"FAILED {self.failed_cases}/{self.cases}")
        return "\n".join(lines) + "\n"


def shrink(sig: Signature, fails: Callable[[Signature], bool]) -> Signature:
    """Drop trailing bindings, then trailing declarations of the last binding, while `fails` holds."""
    while True:
        candidates = []
        if len(sig):
            candidates.append(sig.prefix(len(sig) - 1))
            name, ctx = sig.bindings[-1]
            if len(ctx):
                candidates.append(sig.prefix(len(sig) - 1).extend(name, ctx.prefix(len(ctx) - 1)))
        for c in candidates:
            if fails(c):
                sig = c
                break
        else:
            return sig


def _props_roundtrip(sig: Signature, rng, counts) -> list:
    fails = []
    l = bridge.sig_to_fic(sig)
    back = bridge.fic_to_sig(l)
    if not kernel.check_signature(back).ok:
        fails.append("s_checks")
    w = congruence.iso_sig(back, sig)
    if w is None or w.apply(back) != sig:
        fails.append("sr_iso")
    w2 = fic.iso_fic(bridge.sig_to_fic(back), l)
    if w2 is None:
        fails.append("rs_iso")
    counts["signatures"] = counts.get("signatures", 0) + 1
    return fails


def _props_lemmas(sig, rng, counts) -> list:
    return lemma_failures(sig, counts)


def _props_fic_axioms(sig, rng, counts) -> list:
    fails = []
    l = bridge.sig_to_fic(sig)
    counts["fics"] = counts.get("fics", 0) + 1
    if not fic.validate_fic(l).ok:
        fails.append("r_validates")
    for label, mutant, rule in fic_mutations(l, rng):
        counts[label] = counts.get(label, 0) + 1
        if rule not in fic.validate_fic(mutant).rules:
            fails.append(label)
    return fails


def fic_mutations(l: fic.Fic, rng: random.Random):
    """Yield ``(label, mutant, expected_rule)`` for the three standard corruptions of `l`."""
    if l.comp:
        (g, f), h = rng.choice(sorted(l.comp.items()))
        wrong = [n for n, a in sorted(l.arrows.items())
                 if a.dom != l.arrows[h].dom or a.cod != l.arrows[h].cod]
        comp = dict(l.comp)
        comp[(g, f)] = rng.choice(wrong)
        yield "mut_retarget", fic.Fic(l.objects, l.arrows, comp), "comp_typing"
    if l.objects:
        k = rng.choice(l.objects)
        e = syntax.fresh_name("var", l.arrows)
        arrows = dict(l.arrows)
        arrows[e] = fic.Arrow(e, k, k)
        yield "mut_endo", fic.Fic(l.objects, arrows, l.comp), "endomorphism"
    if l.arrows:
        a = l.arrows[rng.choice(sorted(l.arrows))]
        e = syntax.fresh_name("var", l.arrows)
        arrows = dict(l.arrows)
        arrows[e] = fic.Arrow(e, a.cod, a.dom)
        yield "mut_reverse", fic.Fic(l.objects, arrows, l.comp), "skeletality"


def _props_parser(sig, rng, counts) -> list:
    fails = []
    counts["signatures"] = counts.get("signatures", 0) + 1
    if syntax.parse_sig(syntax.print_sig(sig)) != sig:
        fails.append("sig_roundtrip")
    l = bridge.sig_to_fic(sig)
    if fic.parse_fic(fic.print_fic(l)) != l:
        fails.append("fic_roundtrip")
    return fails


def congruence_pair(sig: Signature, rng: random.Random, level: str):
    """A pair ``(a, b)`` of contexts or signatures, roughly half of them isomorphic."""
    if level == "ctx":
        ctxs = [c for _, c in sig.bindings if len(c)] or [Context()]
        a = rng.choice(ctxs)
    else:
        a = sig
    b = random_walk(rng, a, rng.randint(0, 6))
    b = rename_variables(rng, b)
    if rng.random() < 0.5:
        b = mutate(rng, b, sig)
    return a, b


def mutate(rng: random.Random, value, sig: Signature):
    """Perturb one sort (argument or head) or one adjacent order of `value`."""
    if isinstance(value, Signature):
        targets = [i for i, (_, c) in enumerate(value.bindings) if _edits(c, sig)]
        targets = targets or [i for i, (_, c) in enumerate(value.bindings) if len(c)]
        if not targets:
            return value
        i = rng.choice(targets)
        name, ctx = value.bindings[i]
        b = list(value.bindings)
        b[i] = (name, mutate(rng, ctx, sig))
        return Signature(tuple(b))
    decls = list(value.decls)
    options = _edits(value, sig)
    if options and (len(decls) < 2 or rng.random() < 0.8):
        k, decl = rng.choice(options)
        decls[k] = decl
    elif len(decls) > 1:
        p = rng.randrange(len(decls) - 1)
        decls[p], decls[p + 1] = decls[p + 1], decls[p]
    return Context(tuple(decls))


def _edits(ctx: Context, sig: Signature) -> list:
    """Single-declaration edits: one argument replaced, or the head replaced by a same-arity sort."""
    options = []
    for k, (v, s) in enumerate(ctx.decls):
        earlier = ctx.names[:k]
        for j, a in enumerate(s.args):
            for w in earlier:
                if w != a:
                    args = s.args[:j] + (w,) + s.args[j + 1:]
                    options.append((k, (v, Sort(s.head, args))))
        for n, d in sig.bindings:
            if n != s.head and len(d) == len(s.args):
                options.append((k, (v, Sort(n, s.args))))
    return options


def _props_congruence(sig, rng, counts) -> list:
    fails = []
    for level in ("ctx", "sig"):
        a, b = congruence_pair(sig, rng, level)
        if level == "sig" and sum(len(c) for _, c in sig.bindings) > 8:
            continue
        search = congruence.iso_ctx if level == "ctx" else congruence.iso_sig
        w = search(a, b)
        truth = congruence.swap_closure_oracle(a, b)
        key = f"{level}_{'pos' if truth else 'neg'}"
        counts[key] = counts.get(key, 0) + 1
        if (w is not None) != truth:
            fails.append(f"{level}_agreement")
        elif w is not None and w.apply(a) != b:
            fails.append(f"{level}_witness")
    for _, ctx in sig.bindings:
        canon = congruence.canonical_ctx(ctx)
        if congruence.canonical_ctx(canon) != canon:
            fails.append("canon_idempotent")
        if not congruence.swap_closure_oracle(ctx, canon):
            fails.append("canon_congruent")
    return fails


_PROPS = {
    "lemmas": _props_lemmas,
    "roundtrip": _props_roundtrip,
    "congruence": _props_congruence,
    "fic-axioms": _props_fic_axioms,
    "parser": _props_parser,
}

def run_suite(name: str, p: GenParams, cases: int = 100) -> SuiteReport:
    """Run property family `name` over `cases` signatures derived from ``p.seed``.

    Case ``i`` uses the signature generated from ``case_seed(p.seed, i)``
    with the size bounds of `p`; failing cases are shrunk by dropping
    suffixes.
    """
    if name not in _PROPS:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    props = _PROPS[name]
    report = SuiteReport(name, cases)
    for i in range(cases):
        s = case_seed(p.seed, i)
        q = GenParams(s, p.max_sorts, p.max_ctx_len, p.max_attempts)
        sig = gen_signature(q)
        if not kernel.check_signature(sig).ok:
            report.failures.append(CaseFailure(i, s, "gen_sound", sig))
            continue
        for prop in dict.fromkeys(props(sig, random.Random(s), report.counts)):
            def still_fails(c, prop=prop):
                return prop in props(c, random.Random(s), {})
            report.failures.append(CaseFailure(i, s, prop, shrink(sig, still_fails)))
    return report
