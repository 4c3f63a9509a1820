"""Reconstruct the symmetry group of the decomposition.

Starting from five explicit projective matrices, the closure under
composition gives a group of order 216 acting on the 18 summands by
conjugation.  Adding transposition doubles it to 432, and entrywise
field conjugation doubles it again to 864.  Every element permutes the
summands up to cube-root-of-unity scalars, and the permutation of the
first nine summands is an affine map of F_3^2 under the telephone
labeling.
"""

from collections import Counter

from waringlab.decomposition import WaringDecomposition
from waringlab.qfield import rational
from waringlab.symmetry import (
    closure,
    conjugation_op,
    counterexample_matrix,
    generator_ops,
    induced_permutation,
    label_action,
    transpose_op,
    NotASymmetry,
    SymOp,
)

tau = rational(-2)
d = WaringDecomposition.canonical(tau)

gens = generator_ops(tau)
print("closing the 5 conjugation generators...")
g216 = closure(gens, d)
print(f"  order {g216.order}")

print("adding transposition...")
g432 = closure(gens + [transpose_op(tau)], d)
print(f"  order {g432.order}")

print("adding field conjugation...")
g864 = closure(gens + [transpose_op(tau), conjugation_op(tau)], d)
print(f"  order {g864.order}")

print()
print("affine label actions on the first block (432-group):")
dets = Counter(label_action(ip)["block1"].det() for ip in g432.permutations)
translations = sum(1 for ip in g432.permutations
                   if label_action(ip)["block1"].is_translation())
print(f"  determinant distribution: {dict(dets)}")
print(f"  pure translations: {translations}")

print()
print("a conjugation that does NOT normalize the decomposition:")
bad = SymOp.from_matrix(counterexample_matrix(tau))
try:
    induced_permutation(bad, d)
    print("  unexpectedly a symmetry?!")
except NotASymmetry as exc:
    print(f"  rejected: {exc}")
