"""Acceptance suite.  Each test covers one advertised guarantee and
prints a single pass/fail line (on the real stderr, bypassing pytest
capture) stating the tolerance or runtime bound it checked."""

import sys
import time
from itertools import product

import numpy as np
import pytest

from waringlab.decomposition import (
    WaringDecomposition,
    decomposition_matrices,
    verify_waring,
)
from waringlab.hesse import (
    affine_lines_f3,
    column_point,
    incidence_automorphisms,
    inflection_check,
    pgl_realizable,
    rank_one_configuration,
)
from waringlab.numsearch import (
    NumericCandidate,
    embed_exact,
    gradient,
    loss,
    perturbed_exact,
    polish,
    search,
)
from waringlab.qfield import FieldElem, rational
from waringlab.symmetry import (
    AffineMap,
    ProjectiveMatrix,
    conjugation_op,
    counterexample_matrix,
    frame_transport,
    generator_ops,
    induced_permutation,
    label_action,
    label_to_index,
    stabilizes_trace_form,
)
from waringlab.symtensor import (
    CubicForm,
    SquareMatrix,
    pairing_cube,
    scale_add,
)

TAU = rational(-2)


_CAPFD = None


@pytest.fixture(autouse=True)
def _route_around_capture(capfd):
    global _CAPFD
    _CAPFD = capfd
    yield
    _CAPFD = None


def _report(num: int, ok: bool, detail: str):
    line = f"criterion {num}: {'PASS' if ok else 'FAIL'} -- {detail}"
    with _CAPFD.disabled():
        print(line, file=sys.stderr)
    assert ok, line


def test_criterion_1_exact_verification(decomp):
    t0 = time.perf_counter()
    rep = verify_waring(decomp)
    slots = (9 * 10 * 11) // 6  # monomials of degree 3 in 9 variables
    from waringlab.symtensor import trace_cubic_form
    nonzero = len(trace_cubic_form(3, TAU).terms)
    ok = rep.exact_match and rep.difference.is_zero() and nonzero == 11

    tau2 = rational("-1/2")
    rep2 = verify_waring(WaringDecomposition.canonical(tau2))
    quarter = FieldElem.from_rational(rational("1/4"), tau2)
    trace_cubed = pairing_cube(SquareMatrix.identity(3, tau2))
    expected_diff = scale_add(CubicForm.zero(3, tau2), quarter, trace_cubed)
    ok = ok and not rep2.exact_match and rep2.difference == expected_diff
    elapsed = time.perf_counter() - t0
    ok = ok and elapsed < 1.0
    _report(1, ok, f"tau=-2 exact over all {slots} monomial slots "
            f"({nonzero} nonzero in the target), zero tolerance; "
            f"tau=-1/2 difference == (1/4)(tr X)^3 exactly; "
            f"runtime {elapsed:.3f}s < 1s")


def test_criterion_2_spot_evaluation_oracle():
    ms = decomposition_matrices(TAU)
    z = FieldElem.zero(TAU)
    o = FieldElem.one(TAU)
    e = lambda p, q: SquareMatrix.basis_matrix(3, TAU, p, q)
    probes = [
        (SquareMatrix.identity(3, TAU), 18),
        (e(0, 0), 6),
        (SquareMatrix([[o, z, z], [z, o, z], [z, z, z]]), 12),
        (SquareMatrix([[o, z, z], [z, -o, z], [z, z, z]]), 0),
        (e(0, 1), 0),
        (e(0, 1) + e(1, 2) + e(2, 0), 18),
    ]
    ok = True
    for x, val in probes:
        lhs = (x * x * x).trace() * 6
        rhs = sum(((m * x).trace() ** 3 for m in ms), FieldElem.zero(TAU))
        ok = ok and lhs == rhs == FieldElem.from_rational(val, TAU)
    _report(2, ok, "6 tr(X^3) == sum tr(m_i X)^3 at 6 probe matrices, "
            "values (18, 6, 12, 0, 0, 18), exact")


def test_criterion_3_group_orders(closure216, closure432, closure864,
                                  closure_timings):
    orders = (closure216.order, closure432.order, closure864.order)
    elapsed = sum(closure_timings.values())
    ok = orders == (216, 432, 864) and elapsed < 30.0
    _report(3, ok, f"closure orders {orders} == (216, 432, 864); "
            f"runtime {elapsed:.1f}s < 30s")


def test_criterion_4_stabilizer_and_block(closure864):
    ok = all(ip.preserves_first_block() for ip in closure864.permutations)
    ok = ok and all(stabilizes_trace_form(op) for op in closure864.elements)
    _report(4, ok, "all 864 closure elements stabilize the trace cubic "
            "form exactly (zero tolerance) and preserve the 9-element "
            "block setwise")


def test_criterion_5_label_action(closure432, decomp):
    actions = [label_action(ip) for ip in closure432.permutations]
    block1 = [la["block1"] for la in actions]
    ok = None not in block1
    ok = ok and len(set(block1)) == 432  # injective
    all_affine = {AffineMap(a, t)
                  for a in product(product(range(3), repeat=2), repeat=2)
                  for t in product(range(3), repeat=2)
                  if AffineMap(a, t).is_invertible()}
    ok = ok and set(block1) == all_affine  # image = GL(2,F3) affine maps
    flag_free = {la["block1"]
                 for la, op in zip(actions, closure432.elements)
                 if not op.transpose and not op.conjugate}
    sl_part = {m for m in all_affine if m.det() == 1}
    ok = ok and flag_free == sl_part and len(flag_free) == 216
    for gen, t in zip(generator_ops(TAU)[:2], ((0, 1), (1, 0))):
        la = label_action(induced_permutation(gen, decomp))
        ok = ok and la["block1"] == AffineMap(((1, 0), (0, 1)), t)
        ok = ok and la["block2"] == AffineMap(((1, 0), (0, 1)), (0, 0))
    _report(5, ok, "block-1 label action of the 432-group is injective "
            "onto the 432 affine maps with invertible linear part; the "
            "216 flag-free elements give exactly the det-1 part; the two "
            "diagonal generators translate block 1 and fix block 2")


def test_criterion_6_hesse_suite(decomp):
    t0 = time.perf_counter()
    config = rank_one_configuration(decomp)
    ok = config.lines == affine_lines_f3() and len(config.lines) == 12
    autos = incidence_automorphisms(config)
    ok = ok and len(autos) == 432
    realizable = sum(
        1 for a in autos if pgl_realizable(a, config) is not None)
    ok = ok and realizable == 216
    swap = {3 * r + c + 1: label_to_index((c, r))
            for r in range(3) for c in range(3)}
    ok = ok and pgl_realizable(swap, config) is None
    pts = config.points
    src = [pts[i - 1] for i in (1, 2, 7, 8)]
    dst = [pts[i - 1] for i in (1, 4, 3, 6)]
    g = frame_transport(src, dst)
    ok = ok and g == ProjectiveMatrix(counterexample_matrix(TAU))
    ok = ok and pts[2].apply(g) not in set(pts)  # point 3 leaves the config
    ok = ok and all(inflection_check(p) for p in pts)
    elapsed = time.perf_counter() - t0
    ok = ok and elapsed < 30.0
    _report(6, ok, f"12 lines == affine lines of F_3^2; 432 incidence "
            f"automorphisms, 216 realizable; coordinate swap not "
            f"realizable; transport (1,2,7,8)->(1,4,3,6) matches the "
            f"displayed matrix up to scalar and moves point 3 off the "
            f"configuration; 9/9 points satisfy x^3+y^3+z^3 = 0 = xyz; "
            f"runtime {elapsed:.1f}s < 30s")


def test_criterion_7_projection_structure(decomp):
    ok = True
    two = FieldElem.from_rational(2, TAU)
    for m in decomp.matrices[:9]:
        v = None
        for j in range(3):
            col = [m.rows[i][j] for i in range(3)]
            if any(col):
                v = col
                break
        norm = sum((c.conjugate() * c for c in v), FieldElem.zero(TAU))
        rebuilt = SquareMatrix([[two * v[i] * v[j].conjugate() / norm
                                 for j in range(3)] for i in range(3)])
        ok = ok and rebuilt == m
    _report(7, ok, "each rank-one summand equals 2 v v^dagger / (v^dagger v) "
            "for its leading column v, exact")


def test_criterion_8_galois_closure(decomp):
    conj = conjugation_op(TAU)
    ip = induced_permutation(conj, decomp)
    ok = sorted(ip.perm) == list(range(1, 19))
    la = label_action(ip)
    swap = AffineMap(((0, 1), (1, 0)), (0, 0))
    ok = ok and la["block1"] == swap and la["block2"] == swap
    # the coefficient field has exactly two Q-automorphisms: zeta can only
    # go to a root of x^2 + x + 1, i.e. zeta or zeta^2
    z = FieldElem.zeta(TAU)
    one = FieldElem.one(TAU)
    roots = [k for k in range(1, 3)
             if ((z ** k) ** 2 + z ** k + one).is_zero()]
    ok = ok and roots == [1, 2]
    _report(8, ok, "entrywise conjugation permutes the 18 tensors and acts "
            "on both blocks as the coordinate swap (r,c)->(c,r); the only "
            "coefficient-field automorphisms are identity and conjugation")


def test_criterion_9_numerical_suite(decomp):
    t0 = time.perf_counter()
    exact = embed_exact(decomp)
    ok = loss(exact) < 1e-16

    rng = np.random.default_rng(97)
    m = rng.standard_normal((2, 2, 2)) + 1j * rng.standard_normal((2, 2, 2))
    c = NumericCandidate(2, 2, m)
    g = gradient(c)
    h = 1e-6
    for i, p, q in product(range(2), range(2), range(2)):
        for direction in (1.0, 1.0j):
            bump = np.zeros_like(m)
            bump[i, p, q] = h * direction
            fd = (loss(NumericCandidate(2, 2, m + bump))
                  - loss(NumericCandidate(2, 2, m - bump))) / (2 * h)
            part = g[i, p, q].real if direction == 1.0 else g[i, p, q].imag
            ok = ok and abs(part - fd) <= 1e-5 * max(1.0, abs(fd))

    res = polish(perturbed_exact(decomp, seed=11, magnitude=1e-3),
                 max_iters=2000, tolerance=1e-20)
    ok = ok and res.converged and res.loss < 1e-16

    r1 = search(n=2, r=4, seed=13, restarts=2, max_iters=200)
    r2 = search(n=2, r=4, seed=13, restarts=2, max_iters=200)
    ok = ok and r1.loss == r2.loss
    ok = ok and np.array_equal(r1.best.matrices, r2.best.matrices)

    elapsed = time.perf_counter() - t0
    ok = ok and elapsed < 120.0
    _report(9, ok, f"embedded exact loss < 1e-16; gradient matches central "
            f"differences to 1e-5 relative (h=1e-6) on random n=2; "
            f"perturbed-exact polish reconverges below 1e-16; search is "
            f"seed-deterministic; runtime {elapsed:.1f}s < 120s")
