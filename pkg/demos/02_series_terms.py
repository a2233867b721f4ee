"""
Where the identity comes from
=============================

n_E(x) - 1 counts the steps n for which x has not yet come back, that is
for which x lies outside T^-1 E u ... u T^-n E. Integrating over E gives
a series whose terms can be moved forward by T^n without changing their
measure. The moved terms are the new mass picked up by each forward image
of E, and these add up to the measure of the invariant closure.
"""

from kacreturn import disjoint_decomposition, generate, measure, series_terms

space, T = generate("random_permutation", n=12, seed=0, max_denominator=9)
E = space.points([0, 3, 7])
print("weights:", [str(w) for w in space.weights])
print("map:    ", list(T.forward))

s = series_terms(T, E)
print("mu(E) =", s.mu_E)
print(f"{'n':>3} {'a_n':>8} {'b_n':>8} {'partial':>8}")
for n, (a, b, p) in enumerate(zip(s.terms_a, s.terms_b, s.partial_sums), 1):
    print(f"{n:>3} {str(a):>8} {str(b):>8} {str(p):>8}")

###############################################################################
# The pieces E, TE minus E, T^2 E minus (E u TE), ... are disjoint and fill up
# the invariant closure; their measures are the b_n above.
for n, piece in enumerate(disjoint_decomposition(T, E)):
    print(f"D_{n} = {list(piece)}  mass {measure(space, piece)}")
