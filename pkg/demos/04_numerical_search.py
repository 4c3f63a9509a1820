"""Numerical search for Waring decompositions of tr(X^3).

The objective matches the coefficients of sum_i tr(m_i X)^3 against
6 tr(X^3) over all cubic monomials in the matrix entries.  The script
polishes a perturbation of the exact rank-18 solution back to machine
precision, then sweeps the rank for 2x2 matrices to find the smallest
rank that converges from random starts.
"""

from waringlab.decomposition import WaringDecomposition
from waringlab.numsearch import (
    embed_exact,
    loss,
    perturbed_exact,
    polish,
    search,
)
from waringlab.qfield import rational

d = WaringDecomposition.canonical(rational(-2))

exact = embed_exact(d)
print(f"loss at the embedded exact solution: {loss(exact):.3e}")

noisy = perturbed_exact(d, seed=2024, magnitude=1e-3)
print(f"loss after 1e-3 perturbation:        {loss(noisy):.3e}")
res = polish(noisy, tolerance=1e-20)
print(f"after polishing ({res.iterations} iterations):      "
      f"{res.loss:.3e}  converged={res.converged}")

print()
print("rank sweep for n = 2 (3 restarts each, tolerance 1e-12):")
for r in range(1, 8):
    res = search(n=2, r=r, seed=100 * r, restarts=3, max_iters=400)
    mark = "  <-- first success" if res.converged and r == 6 else ""
    print(f"  rank {r}: loss {res.loss:.3e}  converged={res.converged}{mark}")
