"""Verify the rank-18 decomposition of the trace cubic form.

The 18 matrices live over the degree-6 field Q(zeta)(a) with zeta a
primitive cube root of unity and a^3 = tau.  The script checks the
identity sum_i (1/6) tr(m_i X)^3 = tr(X^3) coefficient by coefficient
for both candidate values of tau, then inspects the structure of the
summands.
"""

from waringlab.decomposition import (
    WaringDecomposition,
    matrix_rank,
    projection_factor,
    verify_waring,
)
from waringlab.qfield import rational, rational_str

for tau in (rational("-1/2"), rational(-2)):
    d = WaringDecomposition.canonical(tau)
    rep = verify_waring(d)
    status = "exact match" if rep.exact_match else "MISMATCH"
    print(f"tau = {rational_str(tau):>5}: {status}")
    if not rep.exact_match:
        # the defect is a single multiple of (tr X)^3
        terms = len(rep.difference.terms)
        print(f"  difference form has {terms} nonzero coefficients")

print()
d = WaringDecomposition.canonical(rational(-2))
print("summand structure (rank / trace / factorization):")
for i, m in enumerate(d.matrices, start=1):
    r = matrix_rank(m)
    tr = m.trace()
    note = ""
    if r == 1:
        v = projection_factor(m)
        note = "  projection onto [" + " : ".join(repr(c) for c in v) + "]"
    print(f"  m{i:>2}: rank {r}, trace {tr!r}{note}")
