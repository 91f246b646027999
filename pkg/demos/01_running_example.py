# # Reflexive graphs, both ways
#
# A reflexive graph has objects O, edges A with a source and a target,
# and a chosen loop i on each object x.  As a signature:

from ficsig import check_signature, fic_to_sig, iso_sig, parse_sig, print_fic, print_sig, sig_to_fic

rg = parse_sig("""
O : ();
A : (c : O(), d : O());
I : (x : O(), i : A(x,x));
""")
print("checks:", check_signature(rg).ok)

# Every declaration `v : B(...)` becomes an arrow K -> B.  The loop i has
# both endpoints equal to x, so composing c or d with i lands on x.

l = sig_to_fic(rg)
print(print_fic(l))
print("Hom(I,O) =", l.hom("I", "O"))
print("c.i =", l.comp[("c", "i")], " d.i =", l.comp[("d", "i")])

# Going back reads each cosieve off as a context.  The result is the
# same signature up to reordering and renaming.

back = fic_to_sig(l)
print(print_sig(back))
print(iso_sig(back, rg).text())
