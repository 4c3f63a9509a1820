"""The canonical 18-matrix dataset and exact verification that its
weighted sum of rank-one cubes equals the trace cubic form.

The matrices are transcribed in reading order (rows of the display, left
to right, top to bottom; indices 1..18).  The printed scalar a is the real
cube root of a configurable tau; the exact check is run for both candidate
values tau = -1/2 and tau = -2, and the verdict is whatever the arithmetic
says.
"""

from __future__ import annotations

from dataclasses import dataclass

from .qfield import FieldElem, Rational, rational, rational_str
from .symtensor import (
    CubicForm,
    SquareMatrix,
    pairing_cube,
    scale_add,
    trace_cubic_form,
)

TAU_CANDIDATES = (rational("-1/2"), rational(-2))


def _mat(tau, row_tokens):
    """Build a matrix from entry tokens: int k means k; ("z", e, s) means
    s * zeta^e; "a" means the cube root a."""
    z = FieldElem.zeta(tau)
    a = FieldElem.gen_a(tau)
    rows = []
    for r in row_tokens:
        row = []
        for tok in r:
            if tok == "a":
                row.append(a)
            elif isinstance(tok, tuple):
                _, e, s = tok
                row.append((z ** e) * s)
            else:
                row.append(FieldElem.from_rational(tok, tau))
        rows.append(row)
    return SquareMatrix(rows)


def _z(e, s=1):
    return ("z", e, s)


_MATRIX_TOKENS = [
    # first block: nine rank-one matrices, telephone order
    [[1, -1, 0], [-1, 1, 0], [0, 0, 0]],
    [[0, 0, 0], [0, 1, _z(1, -1)], [0, _z(2, -1), 1]],
    [[1, 0, _z(1, -1)], [0, 0, 0], [_z(2, -1), 0, 1]],
    [[0, 0, 0], [0, 1, _z(2, -1)], [0, _z(1, -1), 1]],
    [[1, 0, -1], [0, 0, 0], [-1, 0, 1]],
    [[1, _z(1, -1), 0], [_z(2, -1), 1, 0], [0, 0, 0]],
    [[1, 0, _z(2, -1)], [0, 0, 0], [_z(1, -1), 0, 1]],
    [[1, _z(2, -1), 0], [_z(1, -1), 1, 0], [0, 0, 0]],
    [[0, 0, 0], [0, 1, -1], [0, -1, 1]],
    # second block: a*I and eight invertible matrices
    [["a", 0, 0], [0, "a", 0], [0, 0, "a"]],
    [[0, 1, 0], [0, 0, _z(1)], [_z(2), 0, 0]],
    [[0, 0, 1], [_z(2), 0, 0], [0, _z(1), 0]],
    [[0, 1, 0], [0, 0, _z(2)], [_z(1), 0, 0]],
    [[0, 0, 1], [1, 0, 0], [0, 1, 0]],
    [[1, 0, 0], [0, _z(1), 0], [0, 0, _z(2)]],
    [[0, 0, 1], [_z(1), 0, 0], [0, _z(2), 0]],
    [[1, 0, 0], [0, _z(2), 0], [0, 0, _z(1)]],
    [[0, 1, 0], [0, 0, 1], [1, 0, 0]],
]


def decomposition_matrices(tau) -> list[SquareMatrix]:
    """The 18 matrices of the rank-18 decomposition, over the given tau."""
    return [_mat(tau, toks) for toks in _MATRIX_TOKENS]


@dataclass(frozen=True)
class WaringDecomposition:
    n: int
    weight: Rational
    matrices: tuple
    tau: Rational

    @staticmethod
    def canonical(tau) -> "WaringDecomposition":
        tau = rational(tau)
        return WaringDecomposition(
            n=3, weight=rational("1/6"),
            matrices=tuple(decomposition_matrices(tau)), tau=tau)

    def to_json(self):
        return {
            "n": self.n,
            "weight": rational_str(self.weight),
            "tau": rational_str(self.tau),
            "matrices": [m.to_json() for m in self.matrices],
        }

    @staticmethod
    def from_json(data) -> "WaringDecomposition":
        tau = rational(data["tau"])
        return WaringDecomposition(
            n=int(data["n"]),
            weight=rational(data["weight"]),
            matrices=tuple(SquareMatrix.from_json(m, tau)
                           for m in data["matrices"]),
            tau=tau,
        )


@dataclass(frozen=True)
class VerificationReport:
    exact_match: bool
    difference: CubicForm
    tau_used: Rational


def verify_waring(d: WaringDecomposition) -> VerificationReport:
    """Compare sum_i weight * tr(m_i X)^3 with tr(X^3), coefficient by
    coefficient, exactly."""
    target = trace_cubic_form(d.n, d.tau)
    w = FieldElem.from_rational(d.weight, d.tau)
    total = CubicForm.zero(d.n, d.tau)
    for m in d.matrices:
        total = scale_add(total, w, pairing_cube(m))
    diff = scale_add(total, FieldElem.from_rational(-1, d.tau), target)
    return VerificationReport(exact_match=diff.is_zero(),
                              difference=diff, tau_used=d.tau)


def tensor_equiv(m: SquareMatrix, m2: SquareMatrix):
    """If m2 = mu * m with mu a cube root of unity (so both define the same
    rank-one cube), return mu; otherwise None."""
    m._check(m2)
    pivot = None
    for i in range(m.n):
        for j in range(m.n):
            if m.rows[i][j]:
                pivot = (i, j)
                break
        if pivot:
            break
    if pivot is None:
        # m = 0: equivalent iff m2 = 0
        return FieldElem.one(m.tau) if all(
            not e for r in m2.rows for e in r) else None
    mu = m2.rows[pivot[0]][pivot[1]] / m.rows[pivot[0]][pivot[1]]
    if (mu ** 3) != FieldElem.one(m.tau):
        return None
    if m.scale(mu) != m2:
        return None
    return mu


def matrix_rank(m: SquareMatrix) -> int:
    """Rank by exact Gaussian elimination over K."""
    rows = [list(r) for r in m.rows]
    n = m.n
    rank = 0
    for col in range(n):
        piv = next((r for r in range(rank, n) if rows[r][col]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = rows[rank][col].inv()
        rows[rank] = [x * inv for x in rows[rank]]
        for r in range(n):
            if r != rank and rows[r][col]:
                f = rows[r][col]
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[rank])]
        rank += 1
    return rank


def projection_factor(m: SquareMatrix):
    """For a rank-one m, the printed column v with m = 2 v v^dag / (v^dag v);
    None if no such identity holds."""
    if matrix_rank(m) != 1:
        raise ValueError("projection_factor requires a rank-1 matrix")
    v = None
    for j in range(m.n):
        col = [m.rows[i][j] for i in range(m.n)]
        if any(col):
            v = col
            break
    norm = FieldElem.zero(m.tau)
    for vi in v:
        norm = norm + vi * vi.conjugate()
    two = FieldElem.from_rational(2, m.tau)
    factor = two / norm
    for i in range(m.n):
        for j in range(m.n):
            if m.rows[i][j] != factor * v[i] * v[j].conjugate():
                return None
    return v
