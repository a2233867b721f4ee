"""
A quick randomized sweep
========================

Seeded random permutations with one random rational weight per cycle and a
random set each time. Both sides are compared exactly.
"""

import random

from kacreturn import generate, is_ergodic, kac_check

checked = 0
for seed in range(200):
    rng = random.Random(seed)
    space, T = generate("random_permutation", n=rng.randint(1, 80), seed=seed)
    E = space.points(i for i in range(space.size) if rng.random() < 0.3)
    report = kac_check(space, T, E)
    assert report.equal, (seed, report)
    checked += 1

print(f"{checked} systems checked, all exact")

# Single cycles are ergodic, so with total mass 1 the integral is 1 for any E
# of positive measure.
space, T = generate("cycle", n=37)
print("ergodic:", is_ergodic(space, T), " integral:", kac_check(space, T, space.points([3, 4, 20])).lhs)
