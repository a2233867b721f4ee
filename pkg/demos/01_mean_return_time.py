"""
Return times on a five-point cycle
==================================

Points 0..4 each carry weight 1/5 and the map shifts every point by one.
Starting in E = {0, 2}, point 0 is back in E after two steps and point 2
after three.
"""

from kacreturn import cycle_system, kac_check, return_time, return_time_distribution

space, T = cycle_system(5)
E = space.points([0, 2])

for x in E:
    print(f"n_E({x}) = {return_time(T, E, x)}")

# 2 * 1/5 + 3 * 1/5 = 1, the measure of the whole cycle
report = kac_check(space, T, E)
print("integral of n_E over E:", report.lhs)
print("measure of the invariant closure:", report.rhs, "closure:", list(report.rhs_set))
print("equal:", report.equal)

print("distribution:", [(k, str(m)) for k, m in return_time_distribution(T, E)])

###############################################################################
# The same cycle with total mass 3: the integral becomes 3, and dividing by the
# total brings it back to 1.
space3, T3 = cycle_system(5, total=3)
r = kac_check(space3, T3, space3.points([1]))
print("total 3:", r.lhs, "normalized:", r.normalized_lhs)
