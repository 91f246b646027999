"""Decision procedures for the judgments of the signature calculus.

Every ``check_*`` function re-derives its premises from scratch and
returns a :class:`CheckReport`.  Failures carry the name of the rule whose
premise broke and a dotted path into the checked value, e.g.
``bindings[2].ctx.decls[1].sort.args[0]``.

The substitution calculus (``reify``, ``compose_subst``, ``apply_subst``)
follows the diagrammatic convention: for ``sigma : G => D`` and
``tau : D => S`` the composite ``sigma . tau`` is a substitution
``G => S`` whose entries are ``tau``'s entries pushed through ``sigma``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, NamedTuple, Optional

from .syntax import Context, Signature, Sort


class Failure(NamedTuple):
    rule: str
    path: str
    message: str

    def __str__(self):
        return f"RULE {self.rule} AT {self.path} : {self.message}"


@dataclass(frozen=True)
class CheckReport:
    failures: tuple = ()

    @property
    def ok(self) -> bool:
        return not self.failures

    def __bool__(self):
        return self.ok

    @property
    def rules(self) -> set:
        return {f.rule for f in self.failures}

    def text(self) -> str:
        return "".join(f"{f}\n" for f in self.failures)


OK = CheckReport()


def _at(prefix: str, suffix: str) -> str:
    if not prefix:
        return suffix
    return f"{prefix}.{suffix}" if suffix else prefix


class SubstitutionError(ValueError):
    """A substitution does not fit the contexts it was given."""


@dataclass(frozen=True)
class VarMap:
    """A substitution read as a total function ``vars(to) -> vars(from)``."""

    mapping: Mapping[str, str]
    domain: frozenset = field(default=frozenset())
    codomain: frozenset = field(default=frozenset())

    def __call__(self, var: str) -> str:
        return self.mapping[var]

    def after(self, inner: "VarMap") -> "VarMap":
        """Ordinary composition ``self o inner``."""
        return VarMap(
            {v: self.mapping[w] for v, w in inner.mapping.items()},
            inner.domain,
            self.codomain,
        )


def ctx_vars(ctx: Context) -> frozenset:
    return frozenset(ctx.names)


def vars_by_head(ctx: Context, name: str) -> frozenset:
    """Variables of `ctx` whose declared sort is headed by `name`."""
    return frozenset(v for v, s in ctx.decls if s.head == name)


def reify(sub, from_ctx: Context, to_ctx: Context) -> VarMap:
    """Send the i-th variable of `to_ctx` to the i-th entry of `sub`."""
    sub = tuple(sub)
    if len(sub) != len(to_ctx):
        raise SubstitutionError(
            f"substitution of length {len(sub)} against a context of length {len(to_ctx)}"
        )
    source = ctx_vars(from_ctx)
    for z in sub:
        if z not in source:
            raise SubstitutionError(f"{z} is not declared in {from_ctx}")
    return VarMap(dict(zip(to_ctx.names, sub)), ctx_vars(to_ctx), source)


def compose_subst(sigma, tau, gamma: Context, delta: Context, sigma_ctx: Context) -> tuple:
    """Diagrammatic composite of ``sigma : gamma => delta`` and ``tau : delta => sigma_ctx``."""
    f = reify(sigma, gamma, delta)
    reify(tau, delta, sigma_ctx)
    return tuple(f(z) for z in tau)


def apply_subst(sigma, sort: Sort, gamma: Context, delta: Context) -> Sort:
    f = reify(sigma, gamma, delta)
    for z in sort.args:
        if z not in f.domain:
            raise SubstitutionError(f"{sort} mentions {z}, which is not declared in {delta}")
    return Sort(sort.head, tuple(f(z) for z in sort.args))


def proj(sig: Signature, gamma: Context, a: str, delta: Context, x: str, y: str) -> Optional[str]:
    """Dependency of `y` at position `x`, or ``None`` when `y` is not an `a`-variable.

    Raises ``ValueError`` when the parameters themselves are inconsistent
    (`a` not bound to `delta` in `sig`, `x` or `y` undeclared).
    """
    if sig.lookup(a) != delta:
        raise ValueError(f"({a} : {delta}) is not a binding of the signature")
    if x not in ctx_vars(delta):
        raise ValueError(f"{x} is not declared in {delta}")
    sort = gamma.lookup(y)
    if sort is None:
        raise ValueError(f"{y} is not declared in {gamma}")
    if sort.head != a:
        return None
    return reify(sort.args, gamma, delta)(x)


# ---------------------------------------------------------------------------
# judgments

def check_signature(sig: Signature) -> CheckReport:
    return CheckReport(tuple(_signature(sig)))


def check_context(sig: Signature, ctx: Context) -> CheckReport:
    return CheckReport(tuple(_context(sig, ctx, "")))


def check_sort(sig: Signature, ctx: Context, sort: Sort) -> CheckReport:
    return CheckReport(tuple(_sort(sig, ctx, sort, "")))


def check_term(sig: Signature, ctx: Context, x: str, sort: Sort) -> CheckReport:
    return CheckReport(tuple(_term(ctx, x, sort, "")))


def check_subst(sig: Signature, sub, gamma: Context, delta: Context) -> CheckReport:
    return CheckReport(tuple(_subst(tuple(sub), gamma, delta, "")))


def _signature(sig: Signature):
    for i, (name, ctx) in enumerate(sig.bindings):
        path = f"bindings[{i}]"
        if name in sig.names[:i]:
            yield Failure("sig_ext", path, f"sort name {name} is already bound")
        yield from _context(sig.prefix(i), ctx, _at(path, "ctx"))


def _context(sig: Signature, ctx: Context, path: str):
    for i, (var, sort) in enumerate(ctx.decls):
        here = _at(path, f"decls[{i}]")
        if var in ctx.names[:i]:
            yield Failure("ctx_ext", here, f"variable {var} is already bound")
        yield from _sort(sig, ctx.prefix(i), sort, _at(here, "sort"))


def _sort(sig: Signature, ctx: Context, sort: Sort, path: str):
    delta = sig.lookup(sort.head)
    if delta is None:
        yield Failure("type_sort", path, f"sort name {sort.head} is not bound in the signature")
        return
    yield from _subst(sort.args, ctx, delta, path)


def _term(ctx: Context, x: str, sort: Sort, path: str):
    declared = ctx.lookup(x)
    if declared is None:
        yield Failure("type_var", path, f"variable {x} is not declared in the context")
    elif declared != sort:
        yield Failure("type_var", path, f"{x} has sort {declared}, required {sort}")


def _subst(sub: tuple, gamma: Context, delta: Context, path: str):
    if len(sub) < len(delta):
        yield Failure(
            "sub_empty", path,
            f"substitution length {len(sub)} != context length {len(delta)}",
        )
        return
    if len(sub) > len(delta):
        yield Failure(
            "sub_ext", path,
            f"substitution length {len(sub)} != context length {len(delta)}",
        )
        return
    image = {}
    for i, (z, (x, sort)) in enumerate(zip(sub, delta.decls)):
        here = _at(path, f"args[{i}]")
        missing = [a for a in sort.args if a not in image]
        if missing:
            yield Failure("sub_ext", here, f"target context mentions undeclared {missing[0]}")
            return
        required = Sort(sort.head, tuple(image[a] for a in sort.args))
        for f in _term(gamma, z, required, here):
            yield f._replace(message=f"position {i + 1}: {f.message}")
        image[x] = z
