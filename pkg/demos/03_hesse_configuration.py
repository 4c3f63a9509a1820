"""The nine rank-one summands draw a Hesse configuration.

Each rank-one summand projects onto a line in C^3; the nine projective
points carry exactly 12 collinear triples, matching the 12 lines of the
affine plane over F_3.  The configuration has 432 incidence
automorphisms, but only 216 extend to projective transformations --
combinatorics alone overcounts by the factor-2 "duality" that no matrix
realizes.  The points are also the common zeros of x^3 + y^3 + z^3 and
xyz, i.e. the inflection points of the Fermat cubic.
"""

from waringlab.decomposition import WaringDecomposition
from waringlab.hesse import (
    affine_lines_f3,
    incidence_automorphisms,
    inflection_check,
    pgl_realizable,
    rank_one_configuration,
)
from waringlab.qfield import rational

tau = rational(-2)
d = WaringDecomposition.canonical(tau)
config = rank_one_configuration(d)

print("points:")
for i, p in enumerate(config.points, start=1):
    print(f"  {i}: {p!r}  inflection: {inflection_check(p)}")

print()
print(f"collinear triples: {len(config.lines)}")
print(f"match the affine lines of F_3^2: "
      f"{config.lines == affine_lines_f3()}")

print()
autos = incidence_automorphisms(config)
realizable = [a for a in autos if pgl_realizable(a, config) is not None]
print(f"incidence automorphisms: {len(autos)}")
print(f"realizable by a projective transformation: {len(realizable)}")

swap = {3 * r + c + 1: 3 * c + r + 1 for r in range(3) for c in range(3)}
print()
print("the label transpose (r,c) -> (c,r) is an incidence automorphism "
      f"({any(a == swap for a in autos)}) but realizable: "
      f"{pgl_realizable(swap, config) is not None}")
