"""Floating-point search for rank-r Waring decompositions of the trace
cubic form.

A candidate is r complex n x n matrices.  The objective matches the
coefficients of sum_i tr(m_i X)^3 against those of 6 tr(X^3) over all
degree-3 monomials in the n^2 matrix variables; gradients are Wirtinger
style (g = 2 dL/d conj(v)), and descent uses backtracking Armijo line
search.  Everything is deterministic given the seed.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .decomposition import WaringDecomposition
from .qfield import rational
from .symtensor import trace_cubic_form

DEFAULT_MAX_ITERS = 50_000
DEFAULT_TOLERANCE = 1e-12
ARMIJO_INITIAL_STEP = 1.0
ARMIJO_SHRINK = 0.5
ARMIJO_SLOPE = 1e-4


@dataclass
class NumericCandidate:
    n: int
    r: int
    matrices: np.ndarray  # shape (r, n, n), complex128

    def __post_init__(self):
        self.matrices = np.ascontiguousarray(self.matrices,
                                             dtype=np.complex128)
        if self.matrices.shape != (self.r, self.n, self.n):
            raise ValueError("matrices must have shape (r, n, n)")
        if not np.all(np.isfinite(self.matrices.view(np.float64))):
            raise ValueError("candidate contains non-finite entries")

    def to_json(self):
        return {
            "n": self.n,
            "r": self.r,
            "matrices": [[[[float(e.real), float(e.imag)] for e in row]
                          for row in m] for m in self.matrices],
        }

    @staticmethod
    def from_json(data) -> "NumericCandidate":
        mats = np.array([[[complex(re, im) for re, im in row]
                          for row in m] for m in data["matrices"]])
        return NumericCandidate(int(data["n"]), int(data["r"]), mats)


@dataclass
class SearchResult:
    best: NumericCandidate
    loss: float
    iterations: int
    seed: int
    converged: bool

    def to_json(self):
        out = self.best.to_json()
        out.update(loss=self.loss, iterations=self.iterations,
                   seed=self.seed, converged=self.converged)
        return out


class _Objective:
    """Precomputed monomial index table and target coefficients for one n."""

    _cache: dict = {}

    def __new__(cls, n: int):
        if n not in cls._cache:
            obj = super().__new__(cls)
            obj._build(n)
            cls._cache[n] = obj
        return cls._cache[n]

    def _build(self, n: int):
        self.n = n
        nv = n * n
        monos = []
        for i in range(nv):
            for j in range(i, nv):
                for k in range(j, nv):
                    monos.append((i, j, k))
        self.ia = np.array([m[0] for m in monos])
        self.ib = np.array([m[1] for m in monos])
        self.ic = np.array([m[2] for m in monos])
        mult = []
        for i, j, k in monos:
            if i == j == k:
                mult.append(1.0)
            elif i == j or j == k:
                mult.append(3.0)
            else:
                mult.append(6.0)
        self.mult = np.array(mult)
        # target: coefficients of 6 tr(X^3), from the exact form
        form = trace_cubic_form(n, rational(-2))
        target = np.zeros(len(monos), dtype=np.complex128)
        index = {m: t for t, m in enumerate(monos)}
        for mono, coeff in form.terms.items():
            # monomial pairs (p,q) -> variable index of x_pq
            vs = tuple(sorted(n * p + q for p, q in mono))
            target[index[vs]] = 6.0 * complex(coeff.embed_complex())
        self.target = target

    def vectors(self, c: NumericCandidate) -> np.ndarray:
        """Linear-form coefficient vectors: row i is v with
        v[var(q,p)] = (m_i)_{p,q}, i.e. tr(m_i X) = v . x."""
        return np.swapaxes(c.matrices, 1, 2).reshape(c.r, -1)

    def residual(self, v: np.ndarray) -> np.ndarray:
        prod = (v[:, self.ia] * v[:, self.ib] * v[:, self.ic]).sum(axis=0)
        return self.mult * prod - self.target

    def loss_from_vectors(self, v: np.ndarray) -> float:
        e = self.residual(v)
        return float(np.vdot(e, e).real)

    def gradient_from_vectors(self, v: np.ndarray) -> np.ndarray:
        """g = 2 dL/d conj(v); matches central differences on the real and
        imaginary parts of each entry."""
        e = self.residual(v)
        va, vb, vc = v[:, self.ia], v[:, self.ib], v[:, self.ic]
        w = self.mult * e  # per-monomial weight
        g = np.zeros_like(v)
        np.add.at(g, (slice(None), self.ia), np.conj(vb * vc) * w)
        np.add.at(g, (slice(None), self.ib), np.conj(va * vc) * w)
        np.add.at(g, (slice(None), self.ic), np.conj(va * vb) * w)
        return 2.0 * g


def loss(c: NumericCandidate) -> float:
    obj = _Objective(c.n)
    return obj.loss_from_vectors(obj.vectors(c))


def gradient(c: NumericCandidate) -> np.ndarray:
    """Wirtinger gradient with respect to the matrix entries, same shape
    as c.matrices."""
    obj = _Objective(c.n)
    g = obj.gradient_from_vectors(obj.vectors(c))
    return np.swapaxes(g.reshape(c.r, c.n, c.n), 1, 2)


def _jacobian(v, obj):
    """Complex Jacobian dE_k/dv_{i,m} of the residual, shape
    (monomials, r * n^2).  The residual is holomorphic in v."""
    nm = len(obj.mult)
    r, nv = v.shape
    jac = np.zeros((nm, r, nv), dtype=np.complex128)
    rows = np.arange(nm)[:, None]
    cols = np.arange(r)[None, :]
    for idx, o1, o2 in ((obj.ia, obj.ib, obj.ic),
                        (obj.ib, obj.ia, obj.ic),
                        (obj.ic, obj.ia, obj.ib)):
        contrib = (v[:, o1] * v[:, o2]).T * obj.mult[:, None]
        np.add.at(jac, (rows, cols, idx[:, None]), contrib)
    return jac.reshape(nm, r * nv)


def _armijo(v, f, direction, slope, obj):
    """Backtracking line search along direction; slope is the (negative)
    directional derivative bound used in the sufficient-decrease test.
    Returns (v_new, f_new) or None."""
    step = ARMIJO_INITIAL_STEP
    while step > 1e-30:
        v_new = v + step * direction
        f_new = obj.loss_from_vectors(v_new)
        if f_new <= f - ARMIJO_SLOPE * step * slope:
            return v_new, f_new
        step *= ARMIJO_SHRINK
    return None


def _descend(v, obj, max_iters, tolerance):
    """Safeguarded descent on the vector parameterization: a damped
    Gauss-Newton (Levenberg-Marquardt) direction under Armijo
    backtracking, falling back to steepest descent when no damping gives
    an acceptable step.  Plain gradient descent stalls far above the
    convergence tolerance on this objective (the minimum set is a
    positive-dimensional manifold, so the Jacobian is rank-deficient near
    it); the damping keeps the Newton-type step bounded along the flat
    directions.

    Returns (v, loss, iterations, converged)."""
    f = obj.loss_from_vectors(v)
    it = 0
    shape = v.shape
    lam = 1e-3
    while it < max_iters and f > tolerance:
        g = obj.gradient_from_vectors(v)
        gnorm2 = float(np.vdot(g, g).real)
        if gnorm2 == 0.0:
            break  # stationary point
        e = obj.residual(v)
        jac = _jacobian(v, obj)
        gram = jac.conj().T @ jac
        rhs = -(jac.conj().T @ e)
        eye = np.eye(gram.shape[0])
        moved = None
        for _ in range(10):
            try:
                delta = np.linalg.solve(gram + lam * eye, rhs)
            except np.linalg.LinAlgError:
                lam *= 10.0
                continue
            proj2 = float(np.vdot(jac @ delta, jac @ delta).real)
            if proj2 > 0.0:
                moved = _armijo(v, f, delta.reshape(shape), 2.0 * proj2, obj)
                if moved is not None:
                    lam = max(lam * 0.3, 1e-12)
                    break
            lam *= 10.0
        if moved is None:
            moved = _armijo(v, f, -g, gnorm2, obj)
        if moved is None:
            break  # no acceptable step in either direction
        v, f = moved
        it += 1
    return v, f, it, f < tolerance


def polish(c: NumericCandidate, max_iters=DEFAULT_MAX_ITERS,
           tolerance=DEFAULT_TOLERANCE, seed=0) -> SearchResult:
    """Descent from the given candidate, without re-initialization."""
    obj = _Objective(c.n)
    v, f, it, conv = _descend(obj.vectors(c), obj, max_iters, tolerance)
    mats = np.swapaxes(v.reshape(c.r, c.n, c.n), 1, 2)
    return SearchResult(best=NumericCandidate(c.n, c.r, mats), loss=f,
                        iterations=it, seed=seed, converged=conv)


def _one_restart(n, r, seed, max_iters, tolerance):
    rng = np.random.default_rng(seed)
    mats = (rng.standard_normal((r, n, n))
            + 1j * rng.standard_normal((r, n, n)))
    return polish(NumericCandidate(n, r, mats), max_iters, tolerance, seed)


def search(n: int, r: int, seed: int, restarts: int = 1,
           max_iters: int = DEFAULT_MAX_ITERS,
           tolerance: float = DEFAULT_TOLERANCE,
           jobs: int = 1) -> SearchResult:
    """Gradient-descent search from Gaussian random initializations.

    Restart k draws from seed + k, so results are independent of
    scheduling; the best result wins, ties to the lowest restart index.
    """
    if n < 1 or r < 1 or restarts < 1 or tolerance <= 0:
        raise ValueError("n, r, restarts must be >= 1 and tolerance > 0")
    seeds = [seed + k for k in range(restarts)]
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(
                lambda s: _one_restart(n, r, s, max_iters, tolerance), seeds))
    else:
        results = [_one_restart(n, r, s, max_iters, tolerance)
                   for s in seeds]
    return min(results, key=lambda res: (res.loss, res.seed))


def embed_exact(d: WaringDecomposition) -> NumericCandidate:
    """Numeric embedding of an exact decomposition.  The summands carry the
    decomposition weight, so the embedded matrices satisfy the objective's
    sum_i tr(m_i X)^3 = 6 tr(X^3) normalization directly when
    weight = 1/6."""
    scale = (6.0 * float(d.weight)) ** (1.0 / 3.0)
    mats = np.array([[[m.rows[i][j].embed_complex() * scale
                       for j in range(d.n)] for i in range(d.n)]
                     for m in d.matrices])
    return NumericCandidate(d.n, len(d.matrices), mats)


def perturbed_exact(d: WaringDecomposition, seed: int,
                    magnitude: float = 1e-3) -> NumericCandidate:
    base = embed_exact(d)
    rng = np.random.default_rng(seed)
    noise = (rng.standard_normal(base.matrices.shape)
             + 1j * rng.standard_normal(base.matrices.shape)) * magnitude
    return NumericCandidate(base.n, base.r, base.matrices + noise)
