"""Exact projective geometry of the rank-one block.

The nine column points of the rank-one matrices form a 9-point, 12-line
configuration (the affine plane of order 3).  This module enumerates its
lines, its combinatorial automorphisms, and the subset of automorphisms
realizable by a projective transformation, and certifies the points as
the common zeros of x^3 + y^3 + z^3 and xyz.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations

from .decomposition import matrix_rank
from .qfield import FieldElem
from .symmetry import (
    ProjectiveMatrix,
    frame_transport,
    index_to_label,
    label_to_index,
)
from .symtensor import SquareMatrix


class ProjPoint:
    """Point of P^2(K): nonzero coordinate triple with the first nonzero
    coordinate normalized to 1."""

    __slots__ = ("coords",)

    def __init__(self, coords):
        coords = tuple(coords)
        if len(coords) != 3:
            raise ValueError("ProjPoint needs 3 coordinates")
        pivot = next((c for c in coords if c), None)
        if pivot is None:
            raise ValueError("zero vector is not a projective point")
        if pivot != FieldElem.one(pivot.tau):
            inv = pivot.inv()
            coords = tuple(inv * c for c in coords)
        self.coords = coords

    @property
    def tau(self):
        return self.coords[0].tau

    def __eq__(self, other):
        if not isinstance(other, ProjPoint):
            return NotImplemented
        return self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self):
        return "[" + " : ".join(repr(c) for c in self.coords) + "]"

    def apply(self, g: ProjectiveMatrix | SquareMatrix) -> "ProjPoint":
        m = g.rep if isinstance(g, ProjectiveMatrix) else g
        return ProjPoint(tuple(
            sum((m.rows[i][j] * self.coords[j] for j in range(1, 3)),
                m.rows[i][0] * self.coords[0])
            for i in range(3)))

    def to_json(self):
        return [c.to_json() for c in self.coords]

    @staticmethod
    def from_json(data, tau) -> "ProjPoint":
        return ProjPoint(tuple(FieldElem.from_json(c, tau) for c in data))


def column_point(m: SquareMatrix) -> ProjPoint:
    """The projective point spanned by the first nonzero column of a
    rank-one matrix."""
    if matrix_rank(m) != 1:
        raise ValueError("column_point requires a rank-1 matrix")
    for j in range(m.n):
        col = [m.rows[i][j] for i in range(m.n)]
        if any(col):
            return ProjPoint(col)
    raise AssertionError("unreachable for rank-1 input")


def collinear(p: ProjPoint, q: ProjPoint, r: ProjPoint) -> bool:
    """Exact vanishing of the 3x3 coordinate determinant."""
    return SquareMatrix([p.coords, q.coords, r.coords]).determinant().is_zero()


class DegenerateConfigurationError(ValueError):
    pass


@dataclass(frozen=True)
class Configuration:
    points: tuple        # 9 ProjPoints, telephone order
    lines: frozenset     # frozensets of three 1-based indices

    def lines_through(self, i: int):
        return [ln for ln in self.lines if i in ln]

    def to_json(self):
        return {
            "points": [p.to_json() for p in self.points],
            "lines": sorted(sorted(ln) for ln in self.lines),
        }


def build_configuration(points) -> Configuration:
    """All collinear triples among 9 distinct points."""
    points = tuple(points)
    if len(points) != 9:
        raise ValueError("expected exactly 9 points")
    if len(set(points)) != 9:
        raise DegenerateConfigurationError("duplicate points")
    lines = set()
    for i, j, k in combinations(range(1, 10), 3):
        if collinear(points[i - 1], points[j - 1], points[k - 1]):
            lines.add(frozenset((i, j, k)))
    for quad in combinations(range(1, 10), 4):
        if all(frozenset(t) in lines for t in combinations(quad, 3)):
            raise DegenerateConfigurationError(f"four collinear points {quad}")
    return Configuration(points=points, lines=frozenset(lines))


def rank_one_configuration(d) -> Configuration:
    """Configuration of the first-block column points of a decomposition."""
    return build_configuration([column_point(m) for m in d.matrices[:9]])


def affine_lines_f3() -> frozenset:
    """The 12 lines of the affine plane F_3^2 under the telephone labeling:
    4 directions times 3 translates."""
    lines = set()
    for dr, dc in ((0, 1), (1, 0), (1, 1), (1, 2)):
        for r0 in range(3):
            for c0 in range(3):
                ln = frozenset(label_to_index(((r0 + t * dr) % 3,
                                               (c0 + t * dc) % 3))
                               for t in range(3))
                lines.add(ln)
    return frozenset(lines)


def _line_lookup(c: Configuration):
    """Map each point pair to the third point of its line, when unique."""
    third = {}
    for ln in c.lines:
        a, b, e = sorted(ln)
        for x, y, zz in ((a, b, e), (a, e, b), (b, e, a)):
            key = (x, y)
            if key in third and third[key] != zz:
                return None  # pair on two lines; propagation unreliable
            third[key] = zz
    return third


def _is_automorphism(perm, c: Configuration) -> bool:
    return all(frozenset(perm[i] for i in ln) in c.lines for ln in c.lines)


def incidence_automorphisms(c: Configuration) -> list[dict]:
    """All permutations of {1..9} mapping lines to lines.

    When the configuration has enough lines, images of a determining
    triple (1, 2, and a point off their common line) propagate by line
    closure; each completed candidate is validated in full.  Otherwise a
    brute-force search over all permutations is used.
    """
    third = _line_lookup(c)
    det_triple = _determining_triple(c, third) if third else None
    if det_triple is None:
        out = []
        for images in permutations(range(1, 10)):
            perm = dict(zip(range(1, 10), images))
            if _is_automorphism(perm, c):
                out.append(perm)
        return out

    i1, i2, i3 = det_triple
    autos = []
    for img1 in range(1, 10):
        for img2 in range(1, 10):
            if img2 == img1:
                continue
            for img3 in range(1, 10):
                if img3 in (img1, img2):
                    continue
                perm = _propagate({i1: img1, i2: img2, i3: img3}, c, third)
                if perm is not None and _is_automorphism(perm, c):
                    autos.append(perm)
    return autos


def _determining_triple(c: Configuration, third):
    """Three indices whose images force all others by line closure."""
    for i1, i2, i3 in combinations(range(1, 10), 3):
        trial = _propagate({i1: i1, i2: i2, i3: i3}, c, third)
        if trial is not None and len(trial) == 9:
            return (i1, i2, i3)
    return None


def _propagate(partial, c: Configuration, third):
    """Extend a partial point map by line closure.  Returns the full
    permutation dict, or None on contradiction or underdetermination."""
    perm = dict(partial)
    changed = True
    while changed and len(perm) < 9:
        changed = False
        for (x, y), zz in third.items():
            if x in perm and y in perm and zz not in perm:
                key = (perm[x], perm[y]) if perm[x] < perm[y] else (perm[y], perm[x])
                img = third.get(key)
                if img is None:
                    return None  # images not collinear with any third point
                if img in perm.values():
                    return None
                perm[zz] = img
                changed = True
    if len(perm) != 9 or len(set(perm.values())) != 9:
        return None
    return perm


def pgl_realizable(perm: dict, c: Configuration):
    """The unique projective matrix inducing perm on the points, if any.

    The candidate is built by frame transport on points (1, 3, 4, 6),
    which must be in general position, then checked on all nine points.
    """
    frame_idx = (1, 3, 4, 6)
    src = [c.points[i - 1] for i in frame_idx]
    dst = [c.points[perm[i] - 1] for i in frame_idx]
    try:
        g = frame_transport(src, dst)
    except ValueError:
        raise DegenerateConfigurationError("frame (1,3,4,6) is degenerate")
    for i in range(1, 10):
        if c.points[i - 1].apply(g) != c.points[perm[i] - 1]:
            return None
    return g


def inflection_check(p: ProjPoint) -> bool:
    """Exact test that x^3 + y^3 + z^3 = 0 and xyz = 0."""
    x, y, zc = p.coords
    s = x ** 3 + y ** 3 + zc ** 3
    return s.is_zero() and (x * y * zc).is_zero()


def automorphism_label_map(perm: dict):
    """Read an automorphism as a map of F_3^2 telephone labels."""
    return {index_to_label(i): index_to_label(j) for i, j in perm.items()}
