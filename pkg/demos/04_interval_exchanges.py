"""
Rotations and interval exchanges
================================

A rational interval exchange moves whole cells of a fine enough grid onto
cells. Compiling it to that grid gives a permutation system on which the
identity can be checked exactly.
"""

from fractions import Fraction

from kacreturn import compile, induced_iet, interval_set, kac_check, make_iet, return_times, rotation

# rotation by 2/5: every point of [0, 1/5) needs five steps to come back
rot = rotation("2/5")
E = interval_set([["0", "1/5"]])
comp, (cells,) = compile(rot, [E])
print("grid order", comp.grid_order, "map", list(comp.map.forward), "E cells", list(cells))
print("return times:", return_times(comp.map, cells))
print("induced on [0, 1/5):", induced_iet(rot, E))

###############################################################################
# A three-interval exchange with a set made of two pieces.
T = make_iet(["1/2", "1/3", "1/6"], [2, 1, 0])
E = interval_set([["0", "1/4"], ["2/3", "5/6"]])
comp, (cells,) = compile(T, [E])
report = kac_check(comp.space, comp.map, cells)
print("grid order", comp.grid_order)
print("integral", report.lhs, "closure", report.rhs, "equal", report.equal)
print("closure as intervals:", [(str(a), str(b)) for a, b in comp.cells_to_intervals(report.rhs_set).intervals])

induced = induced_iet(T, E)
print("induced IET lengths", [str(l) for l in induced.lengths], "permutation", list(induced.permutation))
print("T_E(0) =", induced(Fraction(0)))
