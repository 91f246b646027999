from importlib.resources import files

import pytest

from ficsig import parse_fic, parse_sig
from ficsig.syntax import Context, Sort

DATA = files("ficsig") / "data"

RG_TEXT = "O : ();\nA : (c : O(), d : O());\nI : (x : O(), i : A(x,x));\n"


@pytest.fixture
def psi_rg():
    return parse_sig(RG_TEXT)


@pytest.fixture
def l_rg():
    return parse_fic((DATA / "rg.fic").read_text())


@pytest.fixture
def gamma_i():
    return Context((("x", Sort("O")), ("i", Sort("A", ("x", "x")))))


@pytest.fixture
def delta_a():
    return Context((("c", Sort("O")), ("d", Sort("O"))))
