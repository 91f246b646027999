# # When are two signatures the same?
#
# Declarations that do not depend on each other may be swapped, and
# bound variables may be renamed.  iso_sig searches for such a move
# and returns it as a witness.

from ficsig import canonical_ctx, iso_ctx, iso_sig, parse_sig, print_sig
from ficsig.congruence import swap_closure_oracle
from ficsig.syntax import Context, Sort

a = parse_sig("O : ();\nA : (c : O(), d : O());\nI : (x : O(), i : A(x,x));")
b = parse_sig("O : ();\nA : (s : O(), t : O());\nI : (v : O(), e : A(v,v));")
print(iso_sig(a, b).text())

# Reordering a context is fine as long as nothing refers backwards.

cd = Context((("c", Sort("O")), ("d", Sort("O"))))
dc = Context((("d", Sort("O")), ("c", Sort("O"))))
print(iso_ctx(cd, dc).text())
print("oracle agrees:", swap_closure_oracle(cd, dc))

# Moving a loop in front of its vertex is not.

flipped = Context((("i", Sort("A", ("x", "x"))), ("x", Sort("O"))))
print(iso_ctx(a.lookup("I"), flipped))

# Canonical order sorts by head, then by name, respecting dependencies.

print(canonical_ctx(Context((("z", Sort("O")), ("a", Sort("O"))))))

# Sort names stay fixed unless asked.

primed = parse_sig(print_sig(a).replace("O", "P"))
print(iso_sig(a, primed))
print(iso_sig(a, primed, rename_sorts=True).text())
