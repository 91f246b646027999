"""Command-line front end.

Exit codes: 0 success, 1 check failed or no isomorphism, 2 parse error,
3 usage error.
"""
from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from . import bridge, congruence, fic, harness, kernel, syntax

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_USAGE = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.format_usage()}{self.prog}: error: {message}")


def _build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="ficsig", description="Signatures and finite inverse categories.")
    p.add_argument("--format", choices=["sig", "fic"], help="override the file kind inferred from the extension")
    sub = p.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    c = sub.add_parser("check", help="check a .sig signature or validate a .fic category")
    c.add_argument("file")

    c = sub.add_parser("convert", help="convert between signatures and categories")
    c.add_argument("--to", choices=["sig", "fic"], required=True)
    c.add_argument("-o", "--output")
    c.add_argument("file")

    c = sub.add_parser("iso", help="search for an isomorphism between two files")
    c.add_argument("--rename-sorts", action="store_true")
    c.add_argument("a")
    c.add_argument("b")

    c = sub.add_parser("canon", help="print a signature in canonical order")
    c.add_argument("file")

    c = sub.add_parser("dot", help="render a category as graphviz dot")
    c.add_argument("-o", "--output")
    c.add_argument("file")

    c = sub.add_parser("suite", help="run a property suite")
    c.add_argument("name", choices=harness.SUITES)
    c.add_argument("--seed", type=int, default=None)
    c.add_argument("--cases", type=int, default=100)
    c.add_argument("--max-sorts", type=int, default=5)
    c.add_argument("--max-ctx-len", type=int, default=5)
    return p


class _Failed(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _kind(path: str, override) -> str:
    if override:
        return override
    ext = Path(path).suffix
    if ext in (".sig", ".fic"):
        return ext[1:]
    raise UsageError(f"cannot tell the kind of {path}; use --format sig|fic")


def _read(path: str, kind: str):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise _Failed(EXIT_USAGE, f"{path}: {e.strerror}")
    try:
        return syntax.parse_sig(text) if kind == "sig" else fic.parse_fic(text)
    except syntax.ParseError as e:
        raise _Failed(EXIT_PARSE, f"{path}:{e}")


def _checked(path: str, kind: str):
    value = _read(path, kind)
    report = kernel.check_signature(value) if kind == "sig" else fic.validate_fic(value)
    if not report.ok:
        raise _Failed(EXIT_FAIL, report.text().rstrip("\n"))
    return value


def _emit(text: str, output, out):
    if output:
        Path(output).write_text(text, encoding="utf-8")
    else:
        out.write(text)


def run(argv, stdout=None, stderr=None) -> int:
    out = stdout or sys.stdout
    err = stderr or sys.stderr
    try:
        args = _build_parser().parse_args(argv)
        return _dispatch(args, out, err)
    except UsageError as e:
        err.write(f"{e}\n")
        return EXIT_USAGE
    except _Failed as e:
        err.write(f"{e}\n")
        return e.code


def _dispatch(args, out, err) -> int:
    fmt = args.format
    if args.verb == "check":
        _checked(args.file, _kind(args.file, fmt))
        out.write("OK\n")
    elif args.verb == "convert":
        kind = _kind(args.file, fmt)
        value = _checked(args.file, kind)
        if kind == "sig":
            value = bridge.sig_to_fic(value)
        if args.to == "sig":
            _emit(syntax.print_sig(bridge.fic_to_sig(value)), args.output, out)
        else:
            _emit(fic.print_fic(value), args.output, out)
    elif args.verb == "iso":
        a = _checked(args.a, _kind(args.a, fmt))
        b = _checked(args.b, _kind(args.b, fmt))
        if isinstance(a, syntax.Signature) and isinstance(b, syntax.Signature):
            w = congruence.iso_sig(a, b, rename_sorts=args.rename_sorts)
        else:
            if isinstance(a, syntax.Signature):
                a = bridge.sig_to_fic(a)
            if isinstance(b, syntax.Signature):
                b = bridge.sig_to_fic(b)
            w = fic.iso_fic(a, b)
        if w is None:
            err.write("no isomorphism\n")
            return EXIT_FAIL
        out.write(w.text())
    elif args.verb == "canon":
        if _kind(args.file, fmt) != "sig":
            raise UsageError("canon expects a .sig file")
        out.write(syntax.print_sig(congruence.canonical_sig(_checked(args.file, "sig"))))
    elif args.verb == "dot":
        if _kind(args.file, fmt) != "fic":
            raise UsageError("dot expects a .fic file")
        _emit(fic.to_dot(_read(args.file, "fic")), args.output, out)
    elif args.verb == "suite":
        seed = args.seed
        if seed is None:
            try:
                seed = int(os.environ.get("FICSIG_SEED", "0"))
            except ValueError:
                raise UsageError("FICSIG_SEED must be an integer")
        if args.cases < 0 or args.max_sorts < 0 or args.max_ctx_len < 0:
            raise UsageError("counts must be non-negative")
        p = harness.GenParams(seed, args.max_sorts, args.max_ctx_len)
        report = harness.run_suite(args.name, p, args.cases)
        for f in report.failures:
            if f.shrunk is not None:
                err.write(f"case {f.case} shrunk to:\n{syntax.print_sig(f.shrunk)}")
        out.write(report.text())
        return EXIT_OK if report.ok else EXIT_FAIL
    return EXIT_OK


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
