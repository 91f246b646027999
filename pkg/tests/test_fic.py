from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ficsig import harness
from ficsig.bridge import sig_to_fic
from ficsig.fic import (
    Arrow,
    Fic,
    FicError,
    Identity,
    compose_arrows,
    cosieve,
    is_fic_iso,
    iso_fic,
    make_fic,
    parse_fic,
    print_fic,
    to_dot,
    validate_fic,
)
from ficsig.syntax import ParseError

seeds = st.integers(min_value=0, max_value=2**63 - 1)

RG_CANONICAL = """objects A, I, O;
arrow c : A -> O;
arrow d : A -> O;
arrow i : I -> A;
arrow x : I -> O;
comp c . i = x;
comp d . i = x;
"""


def r_image(seed, **kw):
    return sig_to_fic(harness.gen_signature(harness.GenParams(seed, **kw)))


def primed(l: Fic) -> Fic:
    return make_fic(
        [o + "p" for o in l.objects],
        [(n + "p", a.dom + "p", a.cod + "p") for n, a in l.arrows.items()],
        [(g + "p", f + "p", h + "p") for (g, f), h in l.comp.items()],
    )


def test_running_example_validates(l_rg):
    assert validate_fic(l_rg).ok
    assert l_rg.hom("A", "O") == {"c", "d"}
    assert l_rg.hom("I", "A") == {"i"}
    assert l_rg.hom("I", "O") == {"x"}


def test_endomorphism_rejected():
    l = make_fic(["O"], [("e", "O", "O")], [("e", "e", "e")])
    assert "endomorphism" in validate_fic(l).rules


def test_two_way_homs_rejected():
    l = make_fic(["X", "Y"], [("f", "X", "Y"), ("g", "Y", "X")], [])
    assert "skeletality" in validate_fic(l).rules


def test_missing_and_mistyped_comp(l_rg):
    missing = Fic(l_rg.objects, l_rg.arrows, {("c", "i"): "x"})
    r = validate_fic(missing)
    assert r.rules == {"comp_total"}
    assert r.failures[0].path == "comp[d.i]"
    wrong = Fic(l_rg.objects, l_rg.arrows, {("c", "i"): "x", ("d", "i"): "i"})
    assert validate_fic(wrong).rules == {"comp_typing"}
    extra = Fic(l_rg.objects, l_rg.arrows, {**l_rg.comp, ("i", "c"): "x"})
    assert validate_fic(extra).rules == {"comp_domain"}


def test_associativity_violation():
    # W -f-> X -g-> Y -h-> Z with two parallel W -> Z arrows picked inconsistently
    l = make_fic(
        "WXYZ",
        [("f", "W", "X"), ("g", "X", "Y"), ("h", "Y", "Z"),
         ("gf", "W", "Y"), ("hg", "X", "Z"), ("p", "W", "Z"), ("q", "W", "Z")],
        [("g", "f", "gf"), ("h", "g", "hg"), ("h", "gf", "p"), ("hg", "f", "q")],
    )
    assert validate_fic(l).rules == {"associativity"}


def test_unknown_objects_reported():
    l = make_fic(["A"], [("f", "A", "B")], [])
    assert validate_fic(l).rules == {"arrow"}


def test_cosieve(l_rg):
    # oracle: scan the fixture's arrows
    assert {n for n, a in l_rg.arrows.items() if a.dom == "I"} == {"i", "x"}
    assert cosieve(l_rg, "I") == {"i", "x"}
    assert cosieve(l_rg, "A") == {"c", "d"}
    assert cosieve(l_rg, "O") == set()
    with pytest.raises(FicError):
        cosieve(l_rg, "Q")


def test_compose_arrows(l_rg):
    assert compose_arrows(l_rg, "c", "i") == "x"
    assert compose_arrows(l_rg, "d", "i") == "x"
    assert compose_arrows(l_rg, Identity("O"), "x") == "x"
    assert compose_arrows(l_rg, "i", Identity("I")) == "i"
    assert compose_arrows(l_rg, Identity("O"), Identity("O")) == Identity("O")
    for g in ["c", "d", "i", "x"]:
        with pytest.raises(FicError):
            compose_arrows(l_rg, g, "x")
    with pytest.raises(FicError):
        compose_arrows(l_rg, "q", "i")


def test_iso_fic_examples(l_rg):
    w = iso_fic(l_rg, primed(l_rg))
    assert w is not None
    assert w.objects == {"A": "Ap", "I": "Ip", "O": "Op"}
    assert is_fic_iso(l_rg, primed(l_rg), w)

    two = make_fic(
        ["O", "A", "I"],
        [("c", "A", "O"), ("d", "A", "O"), ("i", "I", "A"), ("x", "I", "O"), ("y", "I", "O")],
        [("c", "i", "x"), ("d", "i", "y")],
    )
    assert validate_fic(two).ok
    assert iso_fic(l_rg, two) is None
    w = iso_fic(Fic(), Fic())
    assert w is not None and w.objects == {} and w.arrows == {}


def test_iso_fic_respects_composition():
    # same hom-set sizes, different composition tables
    base = [("a", "B", "O"), ("b", "B", "O"), ("c", "C", "B"), ("p", "C", "O"), ("q", "C", "O")]
    one = make_fic("OBC", base, [("a", "c", "p"), ("b", "c", "p")])
    other = make_fic("OBC", base, [("a", "c", "p"), ("b", "c", "q")])
    assert validate_fic(one).ok and validate_fic(other).ok
    assert iso_fic(one, other) is None
    assert iso_fic(other, other) is not None


def test_parse_running_example(l_rg):
    assert l_rg == make_fic(
        ["A", "I", "O"],
        [("c", "A", "O"), ("d", "A", "O"), ("i", "I", "A"), ("x", "I", "O")],
        [("c", "i", "x"), ("d", "i", "x")],
    )


def test_parse_empty():
    assert parse_fic("objects ;") == Fic()
    assert parse_fic("objects;\n-- nothing\n") == Fic()


@pytest.mark.parametrize(
    "text, fragment",
    [
        ("objects A;\narrow f : A -> B;", "undeclared object B"),
        ("objects A, B;\narrow f : A -> B;\ncomp g . f = f;", "undeclared arrow g"),
        ("objects A, B;\narrow f : A -> B;\narrow f : A -> B;", "duplicate arrow f"),
        ("objects A, A;", "duplicate object A"),
        ("objects A;\nmorphism f : A -> A;", "expected 'arrow' or 'comp'"),
        ("arrow f : A -> B;", "expected 'objects'"),
        ("objects a;", "uppercase"),
    ],
)
def test_parse_errors(text, fragment):
    with pytest.raises(ParseError, match=fragment):
        parse_fic(text)


def test_print(l_rg):
    assert print_fic(Fic()) == "objects ;\n"
    assert print_fic(l_rg) == RG_CANONICAL


def test_to_dot(l_rg):
    empty = to_dot(Fic())
    assert "->" not in empty and empty.startswith("digraph")
    text = to_dot(l_rg)
    lines = text.splitlines()
    assert sum(1 for s in lines if s.strip() in ("A;", "I;", "O;")) == 3
    assert sum(1 for s in lines if "->" in s) == 4
    assert sum(1 for s in lines if s.strip().startswith("//")) == 2
    assert '  A -> O [label="c"];' in lines
    assert "  // c.i = x" in lines
    single = to_dot(make_fic(["K"], [], []))
    assert "  K;" in single.splitlines() and "->" not in single


# --- properties ------------------------------------------------------------

@settings(max_examples=150)
@given(seeds)
def test_r_images_satisfy_axioms(seed):
    l = r_image(seed)
    assert validate_fic(l).ok
    names = list(l.arrows)
    for f in names:
        assert l.arrows[f].dom != l.arrows[f].cod
    for x, y in product(l.objects, l.objects):
        if x != y:
            assert not (l.hom(x, y) and l.hom(y, x))
    for f, g, h in product(names, names, names):
        if l.cod(f) == l.dom(g) and l.cod(g) == l.dom(h):
            assert l.comp[(h, l.comp[(g, f)])] == l.comp[(l.comp[(h, g)], f)]
    for k in l.objects:
        assert cosieve(l, k) == set().union(*[l.hom(k, y) for y in l.objects if y != k])


@given(seeds)
def test_print_parse_round_trip(seed):
    l = r_image(seed)
    assert parse_fic(print_fic(l)) == l
    assert print_fic(parse_fic(print_fic(l))) == print_fic(l)


@given(seeds, seeds)
def test_iso_fic_is_an_equivalence(s1, s2):
    a = r_image(s1, max_sorts=4, max_ctx_len=4)
    b = primed(a)
    c = primed(b)
    for x, y in [(a, a), (a, b), (b, a), (b, c), (a, c)]:
        w = iso_fic(x, y)
        assert w is not None and is_fic_iso(x, y, w)
    other = r_image(s2, max_sorts=4, max_ctx_len=4)
    assert (iso_fic(a, other) is None) == (iso_fic(other, a) is None)


@given(seeds, seeds)
def test_mutations_rejected(seed, pick):
    import random

    l = r_image(seed)
    for label, mutant, rule in harness.fic_mutations(l, random.Random(pick)):
        assert rule in validate_fic(mutant).rules, label


def test_arrow_is_plain_data():
    assert Arrow("f", "A", "B") == Arrow("f", "A", "B")
