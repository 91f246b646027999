# # Substitutions as variable maps
#
# A substitution into A : (c : O(), d : O()) is just a list of variables
# of the ambient context.  reify turns it into a function.

from ficsig import parse_sig
from ficsig.kernel import apply_subst, check_subst, compose_subst, proj, reify
from ficsig.syntax import Sort

rg = parse_sig("O : ();\nA : (c : O(), d : O());\nI : (x : O(), i : A(x,x));")
gamma_i = rg.lookup("I")
delta_a = rg.lookup("A")

f = reify(("x", "x"), gamma_i, delta_a)
print(f.mapping)

# Only well-sorted lists pass.  `i` is an edge, not an object.

print(check_subst(rg, ("x", "x"), gamma_i, delta_a).ok)
print(check_subst(rg, ("i", "x"), gamma_i, delta_a).text())

# Substituting into a sort renames its arguments through the map.

print(apply_subst(("x", "x"), Sort("A", ("c", "d")), gamma_i, delta_a))

# Composition pushes the inner list through the outer map.

o_ctx = rg.lookup("O")
print(compose_subst(("x", "x"), (), gamma_i, delta_a, o_ctx))

# proj follows a declaration of A's context back into I's.

for end in ("c", "d"):
    print(end, "of i is", proj(rg, gamma_i, "A", delta_a, end, "i"))
