# # Finite inverse categories by hand
#
# A fic lists objects, non-identity arrows and their composites.  The
# validator names the first law that breaks.

from ficsig import make_fic, to_dot, validate_fic
from ficsig.fic import compose_arrows, cosieve

ok = make_fic(
    ["O", "A", "I"],
    [("c", "A", "O"), ("d", "A", "O"), ("i", "I", "A"), ("x", "I", "O")],
    [("c", "i", "x"), ("d", "i", "x")],
)
print(validate_fic(ok).ok, cosieve(ok, "I"), compose_arrows(ok, "d", "i"))

loop = make_fic(["O"], [("e", "O", "O")], [("e", "e", "e")])
print(validate_fic(loop).text())

cycle = make_fic(["X", "Y"], [("f", "X", "Y"), ("g", "Y", "X")], [])
print(validate_fic(cycle).rules)

# Graphviz output, one edge per arrow, composites as comments.

print(to_dot(ok, "rg"))
