"""
Kakutani towers and first-return maps
=====================================

Grouping E by return time r and stacking E_r, T E_r, ..., T^(r-1) E_r
gives columns that tile the invariant closure exactly once. So the sum of
r * mu(E_r) over the columns is mu(I_E).

The first-return map sends each point of E to the place where it first comes
back. It is again an invertible measure-preserving system, and on it every
point returns in one step.
"""

from kacreturn import cat_map_system, induced_map, invariant_closure, kac_check, kakutani_tower, measure

space, T = cat_map_system(5)
E = space.points([1, 7, 13, 24])

tower = kakutani_tower(space, T, E)
for col in tower.columns:
    print(f"r={col.return_time:<3} base={list(col.base)} levels={[list(l) for l in col.levels]}")

height = sum(c.return_time * measure(space, c.base) for c in tower.columns)
print("sum r * mu(E_r) =", height, "  mu(I_E) =", measure(space, invariant_closure(T, E)))

sub, T_E = induced_map(space, T, E)
print("induced map on", list(E), "->", [E.indices[j] for j in T_E.forward])
print("induced check:", kac_check(sub, T_E, sub.full()).lhs, "= mu(E) =", measure(space, E))
