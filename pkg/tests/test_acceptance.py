"""Acceptance criteria, one test each.  Every test prints a single PASS/FAIL line."""
import io
import shutil
import time
from importlib.resources import files
from pathlib import Path

import pytest

from ficsig import harness
from ficsig.cli import run
from ficsig.congruence import iso_sig
from ficsig.fic import iso_fic, parse_fic
from ficsig.syntax import parse_sig

DATA = files("ficsig") / "data"
BAD = Path(__file__).parent / "fixtures" / "bad"

# tolerances
EXAMPLE_SECONDS = 1.0
ROUNDTRIP_SECONDS = 300.0
MIN_ROUNDTRIP_CASES = 500
MIN_LEMMA_INSTANCES = 1000
MIN_CONGRUENCE_PAIRS = 200
MIN_FORMAT_CASES = 500
MAX_SORTS = 5
MAX_CTX_LEN = 5

BAD_FIXTURES = {
    "dup_sort.sig": "sig_ext",
    "dup_var.sig": "ctx_ext",
    "unbound_head.sig": "type_sort",
    "wrong_length.sig": "sub_empty",
    "sort_mismatch.sig": "type_var",
    "endomorphism.fic": "endomorphism",
    "non_skeletal.fic": "skeletality",
    "missing_comp.fic": "comp_total",
    "comp_retargeted.fic": "comp_typing",
}


@pytest.fixture
def verdict(capsys):
    def say(n, ok, detail):
        with capsys.disabled():
            print(f"\n{'PASS' if ok else 'FAIL'} criterion {n}: {detail}")
        assert ok, detail
    return say


@pytest.fixture
def rg(tmp_path):
    sig, fic = tmp_path / "rg.sig", tmp_path / "rg.fic"
    shutil.copy(str(DATA / "rg.sig"), sig)
    shutil.copy(str(DATA / "rg.fic"), fic)
    return sig, fic


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(map(str, argv)), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def params():
    return harness.GenParams(seed=0, max_sorts=MAX_SORTS, max_ctx_len=MAX_CTX_LEN)


def test_1_running_example_forward(rg, verdict):
    start = time.perf_counter()
    checked = call("check", rg[0])
    code, out, _ = call("convert", "--to", "fic", rg[0])
    elapsed = time.perf_counter() - start
    l = parse_fic(out)
    expected = parse_fic(rg[1].read_text())
    ok = (
        checked == (0, "OK\n", "")
        and code == 0
        and l == expected
        and iso_fic(l, expected) is not None
        and l.hom("A", "O") == {"c", "d"}
        and l.hom("I", "A") == {"i"}
        and l.hom("I", "O") == {"x"}
        and l.comp == {("c", "i"): "x", ("d", "i"): "x"}
        and elapsed < EXAMPLE_SECONDS
    )
    verdict(1, ok, f"check+convert --to fic name-identical to bundled fic in {elapsed:.3f}s")


def test_2_running_example_backward(rg, verdict):
    start = time.perf_counter()
    code, out, _ = call("convert", "--to", "sig", rg[1])
    elapsed = time.perf_counter() - start
    w = iso_sig(parse_sig(out), parse_sig(rg[0].read_text()), rename_sorts=False) if code == 0 else None
    ok = w is not None and elapsed < EXAMPLE_SECONDS
    verdict(2, ok, f"convert --to sig has an iso witness against the bundled signature in {elapsed:.3f}s")


def test_3_roundtrip(verdict):
    start = time.perf_counter()
    report = harness.run_suite("roundtrip", params(), MIN_ROUNDTRIP_CASES)
    elapsed = time.perf_counter() - start
    ok = report.ok and report.counts["signatures"] >= MIN_ROUNDTRIP_CASES and elapsed <= ROUNDTRIP_SECONDS
    verdict(3, ok, f"roundtrip {report.text().strip()} over {report.counts.get('signatures', 0)} signatures in {elapsed:.1f}s")


def test_4_lemmas(verdict):
    report = harness.run_suite("lemmas", params(), 1000)
    counts = {k: report.counts.get(k, 0) for k in ("reify_composition", "lookup", "proj_assoc")}
    ok = report.ok and all(v >= MIN_LEMMA_INSTANCES for v in counts.values())
    verdict(4, ok, f"lemmas {report.text().strip()} with instances {counts}")


def test_5_fic_axioms(verdict):
    report = harness.run_suite("fic-axioms", params(), 500)
    mutants = {k: report.counts.get(k, 0) for k in ("mut_retarget", "mut_endo", "mut_reverse")}
    ok = report.ok and report.counts["fics"] == 500 and all(mutants.values())
    verdict(5, ok, f"fic axioms {report.text().strip()}; mutants rejected {mutants}")


def test_6_congruence(verdict):
    # contexts have at most MAX_CTX_LEN entries and signatures at most MAX_SORTS bindings
    report = harness.run_suite("congruence", params(), 500)
    c = report.counts
    pos = c.get("ctx_pos", 0) + c.get("sig_pos", 0)
    neg = c.get("ctx_neg", 0) + c.get("sig_neg", 0)
    ok = report.ok and pos + neg >= MIN_CONGRUENCE_PAIRS and pos > 0 and neg > 0
    verdict(6, ok, f"congruence {report.text().strip()}; {pos} positive and {neg} negative pairs agree")


def test_7_format_round_trips(verdict):
    report = harness.run_suite("parser", params(), MIN_FORMAT_CASES)
    ok = report.ok and report.counts["signatures"] >= MIN_FORMAT_CASES
    verdict(7, ok, f"parse after print {report.text().strip()} for signatures and their fics")


def test_8_negative_checking(verdict):
    results = {}
    for name, rule in BAD_FIXTURES.items():
        code, out, err = call("check", BAD / name)
        results[name] = code != 0 and out == "" and rule in err
    bad = [n for n, good in results.items() if not good]
    ok = len(results) >= 8 and not bad
    verdict(8, ok, f"{len(results) - len(bad)}/{len(results)} ill-formed fixtures rejected with their rule" + (f"; failing {bad}" if bad else ""))
