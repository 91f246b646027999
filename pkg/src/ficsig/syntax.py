"""Raw syntax of signatures, contexts, sorts and substitutions.

Variables are lowercase-initial identifiers and sort names are
uppercase-initial ones, so the two namespaces never collide.  All values
are immutable; well-formedness is a separate judgment (see ``kernel``).

The textual ``.sig`` format is one binding per line::

    O : ();
    A : (c : O(), d : O());
    I : (x : O(), i : A(x,x));
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Union

_IDENT = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")

Substitution = tuple  # tuple[str, ...] of variable names


def is_var_name(text: str) -> bool:
    return bool(_IDENT.match(text)) and text[0].islower()


def is_sort_name(text: str) -> bool:
    return bool(_IDENT.match(text)) and text[0].isupper()


@dataclass(frozen=True)
class Sort:
    head: str
    args: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "args", tuple(self.args))

    def __str__(self):
        return f"{self.head}({','.join(self.args)})"


@dataclass(frozen=True)
class Context:
    decls: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "decls", tuple((v, s) for v, s in self.decls))

    def __len__(self):
        return len(self.decls)

    def __iter__(self) -> Iterator[tuple[str, Sort]]:
        return iter(self.decls)

    @property
    def names(self) -> tuple:
        return tuple(v for v, _ in self.decls)

    def lookup(self, var: str) -> Optional[Sort]:
        for v, s in self.decls:
            if v == var:
                return s
        return None

    def prefix(self, n: int) -> "Context":
        return Context(self.decls[:n])

    def extend(self, var: str, sort: Sort) -> "Context":
        return Context(self.decls + ((var, sort),))

    def __str__(self):
        return "(" + ", ".join(f"{v} : {s}" for v, s in self.decls) + ")"


@dataclass(frozen=True)
class Signature:
    bindings: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "bindings", tuple((a, c) for a, c in self.bindings))

    def __len__(self):
        return len(self.bindings)

    def __iter__(self) -> Iterator[tuple[str, Context]]:
        return iter(self.bindings)

    @property
    def names(self) -> tuple:
        return tuple(a for a, _ in self.bindings)

    def lookup(self, name: str) -> Optional[Context]:
        for a, c in self.bindings:
            if a == name:
                return c
        return None

    def prefix(self, n: int) -> "Signature":
        return Signature(self.bindings[:n])

    def extend(self, name: str, ctx: Context) -> "Signature":
        return Signature(self.bindings + ((name, ctx),))

    def __str__(self):
        return print_sig(self)


# ---------------------------------------------------------------------------
# raw invariants

def raw_violations(value: Union[Context, Signature]) -> list[str]:
    """Return human-readable violations of the raw binding discipline.

    Checks identifier casing and duplicate binders.  An empty list means
    the value is raw-valid; it may still be ill-typed.
    """
    problems = []
    if isinstance(value, Signature):
        seen = set()
        for i, (name, ctx) in enumerate(value.bindings):
            if not is_sort_name(name):
                problems.append(f"bindings[{i}]: bad sort name {name!r}")
            if name in seen:
                problems.append(f"bindings[{i}]: duplicate sort name {name}")
            seen.add(name)
            problems.extend(f"bindings[{i}].ctx.{p}" for p in raw_violations(ctx))
        return problems
    seen = set()
    for i, (var, sort) in enumerate(value.decls):
        if not is_var_name(var):
            problems.append(f"decls[{i}]: bad variable name {var!r}")
        if var in seen:
            problems.append(f"decls[{i}]: duplicate variable {var}")
        seen.add(var)
        if not is_sort_name(sort.head):
            problems.append(f"decls[{i}].sort: bad sort name {sort.head!r}")
        for j, a in enumerate(sort.args):
            if not is_var_name(a):
                problems.append(f"decls[{i}].sort.args[{j}]: bad variable name {a!r}")
    return problems


# ---------------------------------------------------------------------------
# fresh names

def fresh_name(kind: str, avoid: Iterable[str]) -> str:
    """Smallest ``x<n>`` (kind ``"var"``) or ``S<n>`` (kind ``"sort"``) not in `avoid`.

    The bare stem counts as index 0, so ``{"x"}`` yields ``"x1"``.
    """
    if kind == "var":
        stem = "x"
    elif kind == "sort":
        stem = "S"
    else:
        raise ValueError(f"unknown name kind {kind!r}")
    avoid = set(avoid)
    n = 1 if stem in avoid else 0
    while f"{stem}{n}" in avoid:
        n += 1
    return f"{stem}{n}"


# ---------------------------------------------------------------------------
# alpha-equivalence

def alpha_eq(a: Union[Context, Signature], b: Union[Context, Signature]) -> bool:
    """Alpha-equivalence by positional renaming of bound variables.

    Sort names are never renamed.  Variables that are not declared in the
    context (free occurrences) must coincide literally.
    """
    if isinstance(a, Signature) != isinstance(b, Signature):
        raise TypeError("alpha_eq compares two contexts or two signatures")
    if isinstance(a, Signature):
        return len(a) == len(b) and all(
            na == nb and _ctx_alpha(ca, cb)
            for (na, ca), (nb, cb) in zip(a.bindings, b.bindings)
        )
    return _ctx_alpha(a, b)


def _ctx_alpha(a: Context, b: Context) -> bool:
    if len(a) != len(b):
        return False
    fwd: dict = {}
    bwd: dict = {}
    for (va, sa), (vb, sb) in zip(a.decls, b.decls):
        if sa.head != sb.head or len(sa.args) != len(sb.args):
            return False
        for x, y in zip(sa.args, sb.args):
            if x in fwd or y in bwd:
                if fwd.get(x) != y or bwd.get(y) != x:
                    return False
            elif x != y:
                return False
        if va in fwd or vb in bwd:
            return False
        fwd[va] = vb
        bwd[vb] = va
    return True


# ---------------------------------------------------------------------------
# .sig parsing and printing

class ParseError(ValueError):
    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"{line}:{col}: {message}")
        self.message = message
        self.line = line
        self.col = col


_TOKEN = re.compile(
    r"(?P<ws>[ \t\r\n]+)|(?P<comment>--[^\n]*)|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)"
    r"|(?P<arrow>->)|(?P<punct>[:;,().=])"
)


def tokenize(text: str) -> list[tuple[str, str, int, int]]:
    """Split text into ``(kind, value, line, col)`` tokens; kind is ``ident`` or ``punct``."""
    tokens = []
    pos, line, line_start = 0, 1, 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", line, pos - line_start + 1)
        kind = m.lastgroup
        value = m.group()
        if kind == "ident":
            tokens.append(("ident", value, line, pos - line_start + 1))
        elif kind in ("punct", "arrow"):
            tokens.append(("punct", value, line, pos - line_start + 1))
        newlines = value.count("\n")
        if newlines:
            line += newlines
            line_start = pos + value.rindex("\n") + 1
        pos = m.end()
    tokens.append(("eof", "", line, pos - line_start + 1))
    return tokens


class TokenStream:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def peek(self):
        return self.tokens[self.i]

    def at(self, value: str) -> bool:
        kind, v, _, _ = self.peek
        return kind != "eof" and v == value

    def error(self, message: str, tok=None):
        _, _, line, col = tok or self.peek
        raise ParseError(message, line, col)

    def expect(self, value: str):
        tok = self.peek
        if tok[0] == "eof" or tok[1] != value:
            found = "end of input" if tok[0] == "eof" else repr(tok[1])
            self.error(f"expected {value!r}, found {found}")
        self.i += 1
        return tok

    def ident(self, kind: str):
        tok = self.peek
        if tok[0] != "ident":
            found = "end of input" if tok[0] == "eof" else repr(tok[1])
            self.error(f"expected {kind}, found {found}")
        check = is_sort_name if kind == "sort name" else is_var_name
        if not check(tok[1]):
            case = "uppercase" if kind == "sort name" else "lowercase"
            self.error(f"{kind} {tok[1]!r} must start with an {case} letter")
        self.i += 1
        return tok


def parse_sig(text: str) -> Signature:
    """Parse ``.sig`` text.  Duplicate binders are reported as parse errors."""
    ts = TokenStream(text)
    bindings = []
    names = set()
    while ts.peek[0] != "eof":
        tok = ts.ident("sort name")
        name = tok[1]
        if name in names:
            ts.error(f"duplicate sort name {name} (sig_ext requires a fresh name)", tok)
        names.add(name)
        ts.expect(":")
        ctx = _parse_ctx(ts)
        ts.expect(";")
        bindings.append((name, ctx))
    return Signature(tuple(bindings))


def _parse_ctx(ts: TokenStream) -> Context:
    ts.expect("(")
    decls = []
    seen = set()
    if not ts.at(")"):
        while True:
            tok = ts.ident("variable")
            if tok[1] in seen:
                ts.error(f"duplicate variable {tok[1]} (ctx_ext requires a fresh name)", tok)
            seen.add(tok[1])
            ts.expect(":")
            decls.append((tok[1], _parse_sort(ts)))
            if not ts.at(","):
                break
            ts.expect(",")
    ts.expect(")")
    return Context(tuple(decls))


def _parse_sort(ts: TokenStream) -> Sort:
    head = ts.ident("sort name")[1]
    ts.expect("(")
    args = []
    if not ts.at(")"):
        args.append(ts.ident("variable")[1])
        while ts.at(","):
            ts.expect(",")
            args.append(ts.ident("variable")[1])
    ts.expect(")")
    return Sort(head, tuple(args))


def print_sig(sig: Signature) -> str:
    return "".join(f"{name} : {ctx};\n" for name, ctx in sig.bindings)
