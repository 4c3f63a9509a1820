"""Symmetry machinery for the 18-term decomposition.

A symmetry operation is a projective matrix g acting by conjugation
m -> g m g^-1, optionally followed by transposition and/or entrywise
complex conjugation (in that order).  Operations induce permutations of
the 18 rank-one tensors, with cube-root-of-unity scalar witnesses; the
full group is generated by breadth-first closure and certified against
the affine structure of the telephone labeling of each 3x3 block.
"""

from __future__ import annotations

from dataclasses import dataclass

from .decomposition import WaringDecomposition, tensor_equiv
from .qfield import FieldElem
from .symtensor import CubicForm, SquareMatrix, pullback, trace_cubic_form


class NotASymmetry(Exception):
    """The operation does not permute the rank-one tensors."""


class ProjectiveMatrix:
    """Invertible matrix up to scalar, stored with its first nonzero entry
    (row-major) normalized to 1."""

    __slots__ = ("rep",)

    def __init__(self, m: SquareMatrix):
        pivot = None
        for r in m.rows:
            for e in r:
                if e:
                    pivot = e
                    break
            if pivot is not None:
                break
        if pivot is None:
            raise ValueError("zero matrix is not projective")
        if pivot == FieldElem.one(m.tau):
            self.rep = m
        else:
            self.rep = m.scale(pivot.inv())

    def __eq__(self, other):
        if not isinstance(other, ProjectiveMatrix):
            return NotImplemented
        return self.rep == other.rep

    def __hash__(self):
        return hash(self.rep)

    def __repr__(self):
        return f"ProjectiveMatrix({self.rep!r})"


@dataclass(frozen=True)
class SymOp:
    """Conjugation by g, then transpose if flagged, then entrywise complex
    conjugation if flagged."""
    g: ProjectiveMatrix
    transpose: bool = False
    conjugate: bool = False

    @staticmethod
    def from_matrix(m: SquareMatrix, transpose=False, conjugate=False):
        return SymOp(ProjectiveMatrix(m), transpose, conjugate)

    def key(self):
        return (self.g.rep, self.transpose, self.conjugate)

    def __hash__(self):
        return hash(self.key())


def identity_op(tau) -> SymOp:
    return SymOp.from_matrix(SquareMatrix.identity(3, tau))


def transpose_op(tau) -> SymOp:
    return SymOp.from_matrix(SquareMatrix.identity(3, tau), transpose=True)


def conjugation_op(tau) -> SymOp:
    return SymOp.from_matrix(SquareMatrix.identity(3, tau), conjugate=True)


def _m(tau, rows):
    z = FieldElem.zeta(tau)
    one = FieldElem.one(tau)

    def entry(tok):
        # tok = (c0, c1) meaning c0 + c1*zeta
        c0, c1 = tok
        return FieldElem.from_rational(c0, tau) + z * c1

    return SquareMatrix([[entry(t) for t in r] for r in rows])


def pgl_generators(tau) -> list[SquareMatrix]:
    """Five projective generators of the identity-component symmetry group:
    two order-3 translations of the first block's telephone labels, and
    three linear-action generators.  Entries are written as c0 + c1*zeta."""
    e_r = _m(tau, [[(0, 0), (0, 0), (1, 0)],
                   [(-1, -1), (0, 0), (0, 0)],
                   [(0, 0), (0, 1), (0, 0)]])
    e_d = _m(tau, [[(0, 0), (0, 0), (1, 0)],
                   [(0, 1), (0, 0), (0, 0)],
                   [(0, 0), (-1, -1), (0, 0)]])
    lin_shear = _m(tau, [[(1, -1), (-2, -1), (1, 2)],
                         [(-2, -1), (1, -1), (1, 2)],
                         [(1, -1), (1, -1), (1, -1)]])
    lin_rot = _m(tau, [[(2, 1), (-1, 1), (2, 1)],
                       [(-1, 1), (2, 1), (2, 1)],
                       [(-1, 1), (-1, 1), (-1, -2)]])
    lin_third = _m(tau, [[(1, 0), (0, 0), (0, 0)],
                         [(0, 0), (1, 0), (0, 0)],
                         [(0, 0), (0, 0), (-1, -1)]])
    return [e_r, e_d, lin_shear, lin_rot, lin_third]


def generator_ops(tau) -> list[SymOp]:
    return [SymOp.from_matrix(g) for g in pgl_generators(tau)]


def counterexample_matrix(tau) -> SquareMatrix:
    """The frame-transport candidate for the coordinate-swap label map;
    it fails to permute the configuration.  Entries as c0 + c1*zeta
    (-zeta^2 = 1 + zeta)."""
    return _m(tau, [[(0, 0), (1, 1), (-1, 0)],
                    [(1, 1), (0, 0), (0, -1)],
                    [(0, 0), (0, 0), (-1, -1)]])


def apply_op(op: SymOp, m: SquareMatrix) -> SquareMatrix:
    g = op.g.rep
    out = g * m * g.inverse()
    if op.transpose:
        out = out.transpose()
    if op.conjugate:
        out = out.conjugate()
    return out


def compose(op1: SymOp, op2: SymOp) -> SymOp:
    """The operation m -> op1(op2(m)), renormalized to the canonical
    conjugate-after-transpose-after-g form.

    Moving Ad_g left past the flags uses Ad_g . C = C . Ad_{conj(g)} and
    Ad_g . T = T . Ad_{g^-T}; projectively g^-T is adjugate(g)^T.
    """
    g1 = op1.g.rep
    if op2.conjugate:
        g1 = g1.conjugate()
    if op2.transpose:
        g1 = g1.adjugate().transpose()
    g = g1 * op2.g.rep
    return SymOp.from_matrix(g,
                             transpose=op1.transpose ^ op2.transpose,
                             conjugate=op1.conjugate ^ op2.conjugate)


def inverse_op(op: SymOp) -> SymOp:
    g = op.g.rep
    if op.conjugate:
        g = g.conjugate()
    if op.transpose:
        g = g.adjugate().transpose()
    return SymOp.from_matrix(g.adjugate(),
                             transpose=op.transpose, conjugate=op.conjugate)


@dataclass(frozen=True)
class InducedPermutation:
    """perm maps 1-based index i to perm[i-1]; witnesses[i-1] is the cube
    root of unity mu with op(m_i) = mu * m_perm."""
    perm: tuple
    witnesses: tuple

    def __mul__(self, other: "InducedPermutation") -> "InducedPermutation":
        # self after other
        perm = tuple(self.perm[other.perm[i] - 1] for i in range(len(self.perm)))
        return InducedPermutation(perm, None)

    def preserves_first_block(self) -> bool:
        return all(1 <= self.perm[i] <= 9 for i in range(9))


def _scaled_lookup(d: WaringDecomposition):
    """Map from mu * m_j (all mu with mu^3 = 1) to (j, mu)."""
    one = FieldElem.one(d.tau)
    zeta = FieldElem.zeta(d.tau)
    table = {}
    for j, m in enumerate(d.matrices, start=1):
        for mu in (one, zeta, zeta * zeta):
            table[m.scale(mu)] = (j, mu)
    return table


def induced_permutation(op: SymOp, d: WaringDecomposition,
                        _table=None) -> InducedPermutation:
    """The permutation of the rank-one tensors induced by op, with scalar
    witnesses; raises NotASymmetry if some image matches no m_j up to a
    cube root of unity."""
    table = _table if _table is not None else _scaled_lookup(d)
    perm, wits = [], []
    for i, m in enumerate(d.matrices, start=1):
        img = apply_op(op, m)
        hit = table.get(img)
        if hit is None:
            raise NotASymmetry(f"image of matrix {i} is not in the set")
        j, mu = hit
        perm.append(j)
        wits.append(mu)
    if sorted(perm) != list(range(1, len(d.matrices) + 1)):
        raise NotASymmetry("images collide; not a permutation")
    return InducedPermutation(tuple(perm), tuple(wits))


def linear_action(op: SymOp):
    """The K-linear part of op on matrix space (conjugation by g, then
    transpose); the Galois flag is semilinear and handled separately."""
    g = op.g.rep
    ginv = g.inverse()

    def act(x: SquareMatrix) -> SquareMatrix:
        y = g * x * ginv
        return y.transpose() if op.transpose else y

    return act


def stabilizes_trace_form(op: SymOp, form: CubicForm = None) -> bool:
    """Exact check that op fixes the cubic form tr(X^3).  With the Galois
    flag the pulled-back form's coefficients are conjugated (the target has
    rational coefficients, so it is Galois-fixed)."""
    tau = op.g.rep.tau
    if form is None:
        form = trace_cubic_form(3, tau)
    pb = pullback(form, linear_action(op))
    if op.conjugate:
        pb = pb.conjugate()
    return pb == form


@dataclass
class GroupReport:
    order: int
    elements: list          # SymOp
    permutations: list      # InducedPermutation, aligned with elements


def closure(gens: list, d: WaringDecomposition) -> GroupReport:
    """Breadth-first closure of the generators under composition, with
    elements deduplicated by canonical projective matrix plus flags.
    Every generator (and hence every element) must induce a permutation
    of the rank-one tensors."""
    table = _scaled_lookup(d)
    ident = identity_op(d.tau)
    seen = {ident.key(): (ident, induced_permutation(ident, d, table))}
    frontier = [ident]
    for gen in gens:
        induced_permutation(gen, d, table)  # raises NotASymmetry if invalid
    while frontier:
        new = []
        for el in frontier:
            for gen in gens:
                cand = compose(gen, el)
                k = cand.key()
                if k not in seen:
                    seen[k] = (cand, induced_permutation(cand, d, table))
                    new.append(cand)
        frontier = new
    elements = [v[0] for v in seen.values()]
    perms = [v[1] for v in seen.values()]
    return GroupReport(order=len(elements), elements=elements,
                       permutations=perms)


# -- telephone labels and affine maps over F_3 -------------------------------

def index_to_label(i: int):
    """1-based index within a block -> (row, col) in F_3^2."""
    return ((i - 1) // 3, (i - 1) % 3)


def label_to_index(lab) -> int:
    return 3 * (lab[0] % 3) + (lab[1] % 3) + 1


@dataclass(frozen=True)
class AffineMap:
    """x -> A x + t over F_3; A is ((a,b),(c,d)), t is (t0,t1)."""
    a: tuple
    t: tuple

    def __call__(self, x):
        (a, b), (c, d) = self.a
        return ((a * x[0] + b * x[1] + self.t[0]) % 3,
                (c * x[0] + d * x[1] + self.t[1]) % 3)

    def det(self) -> int:
        (a, b), (c, d) = self.a
        return (a * d - b * c) % 3

    def is_invertible(self) -> bool:
        return self.det() != 0

    def is_translation(self) -> bool:
        return self.a == ((1, 0), (0, 1))


def fit_affine_map(mapping) -> AffineMap | None:
    """The unique affine map of F_3^2 agreeing with mapping (a dict
    label -> label on all 9 labels), or None."""
    t = mapping[(0, 0)]
    c1 = mapping[(1, 0)]
    c2 = mapping[(0, 1)]
    a = (((c1[0] - t[0]) % 3, (c2[0] - t[0]) % 3),
         ((c1[1] - t[1]) % 3, (c2[1] - t[1]) % 3))
    cand = AffineMap(a, t)
    for x0 in range(3):
        for x1 in range(3):
            if cand((x0, x1)) != mapping[(x0, x1)]:
                return None
    return cand


def label_action(ip: InducedPermutation):
    """Per-block affine interpretation of an induced permutation of the 18
    indices.  Returns a dict {"block1": AffineMap|None, "block2": ...};
    requires both blocks preserved setwise."""
    perm = ip.perm
    if not ip.preserves_first_block():
        raise ValueError("permutation does not preserve the blocks")
    out = {}
    for name, off in (("block1", 0), ("block2", 9)):
        mapping = {}
        for i in range(1, 10):
            j = perm[off + i - 1] - off
            mapping[index_to_label(i)] = index_to_label(j)
        out[name] = fit_affine_map(mapping)
    return out


# -- frame transport ----------------------------------------------------------

def frame_transport(src, dst) -> ProjectiveMatrix:
    """The unique projective matrix sending the 4-point frame src to dst
    (each quadruple in general position: no three collinear).

    For a frame (p1..p4), scale p1..p3 so their sum is p4; the matrix with
    those columns sends the standard frame to it.  The transport is then
    M(dst) * M(src)^-1.
    """
    def frame_matrix(pts):
        cols = [p.coords for p in pts[:3]]
        mat = [[cols[j][i] for j in range(3)] for i in range(3)]
        rhs = list(pts[3].coords)
        lam = _solve_field(mat, rhs)
        if any(l.is_zero() for l in lam):
            raise ValueError("frame is degenerate (three points collinear)")
        return SquareMatrix([[cols[j][i] * lam[j] for j in range(3)]
                             for i in range(3)])

    ms = frame_matrix(src)
    md = frame_matrix(dst)
    return ProjectiveMatrix(md * ms.adjugate())


def _solve_field(mat, rhs):
    """Solve a 3x3 linear system over K by Gaussian elimination."""
    n = len(mat)
    m = [list(row) + [rhs[i]] for i, row in enumerate(mat)]
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col]), None)
        if piv is None:
            raise ValueError("singular system (degenerate frame)")
        m[col], m[piv] = m[piv], m[col]
        inv = m[col][col].inv()
        m[col] = [x * inv for x in m[col]]
        for r in range(n):
            if r != col and m[r][col]:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return [m[i][n] for i in range(n)]
