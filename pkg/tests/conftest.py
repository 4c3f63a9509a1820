import time

import pytest

from waringlab.decomposition import WaringDecomposition
from waringlab.qfield import rational
from waringlab.symmetry import (
    closure,
    conjugation_op,
    generator_ops,
    transpose_op,
)

TAU = rational(-2)


@pytest.fixture(scope="session")
def tau():
    return TAU


@pytest.fixture(scope="session")
def decomp():
    return WaringDecomposition.canonical(TAU)


@pytest.fixture(scope="session")
def closure_timings():
    # wall-clock seconds per closure computation, keyed by expected order
    return {}


@pytest.fixture(scope="session")
def closure216(decomp, closure_timings):
    t0 = time.perf_counter()
    rep = closure(generator_ops(TAU), decomp)
    closure_timings[216] = time.perf_counter() - t0
    return rep


@pytest.fixture(scope="session")
def closure432(decomp, closure_timings):
    t0 = time.perf_counter()
    rep = closure(generator_ops(TAU) + [transpose_op(TAU)], decomp)
    closure_timings[432] = time.perf_counter() - t0
    return rep


@pytest.fixture(scope="session")
def closure864(decomp, closure_timings):
    t0 = time.perf_counter()
    rep = closure(generator_ops(TAU) + [transpose_op(TAU),
                                        conjugation_op(TAU)], decomp)
    closure_timings[864] = time.perf_counter() - t0
    return rep
