from itertools import combinations

import pytest

from waringlab.hesse import (
    Configuration,
    DegenerateConfigurationError,
    ProjPoint,
    affine_lines_f3,
    build_configuration,
    collinear,
    column_point,
    incidence_automorphisms,
    inflection_check,
    pgl_realizable,
)
from waringlab.qfield import FieldElem, rational
from waringlab.symmetry import index_to_label, label_to_index
from waringlab.symtensor import SquareMatrix

TAU = rational(-2)


def as_field(k):
    return FieldElem.from_rational(k, TAU)


@pytest.fixture(scope="module")
def points(decomp):
    return [column_point(m) for m in decomp.matrices[:9]]


@pytest.fixture(scope="module")
def config(points):
    return build_configuration(points)


def test_column_points(points):
    z = FieldElem.zeta(TAU)
    one = FieldElem.one(TAU)
    zero = FieldElem.zero(TAU)
    assert points[0] == ProjPoint([one, -one, zero])
    assert points[1] == ProjPoint([zero, one, -(z * z)])
    assert points[6] == ProjPoint([one, zero, -z])


def test_column_point_requires_rank_one(decomp):
    with pytest.raises(ValueError):
        column_point(decomp.matrices[9])


def test_collinear_examples(points):
    assert collinear(points[0], points[1], points[2])
    assert not collinear(points[0], points[2], points[3])
    assert collinear(points[0], points[0], points[4])


def test_configuration_is_affine_plane(config):
    assert len(config.lines) == 12
    assert config.lines == affine_lines_f3()
    for i in range(1, 10):
        assert len(config.lines_through(i)) == 4
    assert all(len(ln) == 3 for ln in config.lines)
    for i, j in combinations(range(1, 10), 2):
        through = [ln for ln in config.lines if i in ln and j in ln]
        assert len(through) == 1


def test_points_distinct_and_inflections(points):
    assert len(set(points)) == 9
    assert all(inflection_check(p) for p in points)


def test_general_position_frame(points):
    frame = [points[i - 1] for i in (1, 3, 4, 6)]
    for triple in combinations(frame, 3):
        assert not collinear(*triple)


def test_automorphism_count(config):
    autos = incidence_automorphisms(config)
    assert len(autos) == 432
    # the automorphisms form a group: closed under composition
    keyset = {tuple(a[i] for i in range(1, 10)) for a in autos}
    assert len(keyset) == 432


def test_automorphisms_are_affine(config):
    from waringlab.symmetry import fit_affine_map
    for a in incidence_automorphisms(config):
        lab = {index_to_label(i): index_to_label(j) for i, j in a.items()}
        am = fit_affine_map(lab)
        assert am is not None
        assert am.is_invertible()


def test_realizable_count(config):
    autos = incidence_automorphisms(config)
    realized = {}
    for idx, a in enumerate(autos):
        g = pgl_realizable(a, config)
        if g is not None:
            realized[tuple(a[i] for i in range(1, 10))] = g
    assert len(realized) == 216
    # realizable set is a group: closed under composition and inversion
    perms = set(realized)
    for p in list(perms)[::9]:
        inv = tuple(sorted(range(1, 10), key=lambda i: p[i - 1]))
        assert inv in perms
    sample = sorted(perms)[::31]
    for p1 in sample:
        for p2 in sample:
            comp = tuple(p1[p2[i] - 1] for i in range(9))
            assert comp in perms


def test_identity_realizable(config):
    ident = {i: i for i in range(1, 10)}
    g = pgl_realizable(ident, config)
    assert g is not None
    assert g.rep == SquareMatrix.identity(3, TAU)


def test_coordinate_swap_not_realizable(config):
    swap = {i: label_to_index(index_to_label(i)[::-1]) for i in range(1, 10)}
    assert any(a == swap for a in incidence_automorphisms(config))
    assert pgl_realizable(swap, config) is None


def test_realizable_matches_flagfree_closure(config, closure216):
    autos = incidence_automorphisms(config)
    realized = {pgl_realizable(a, config) for a in autos}
    realized.discard(None)
    closure_matrices = {op.g for op in closure216.elements}
    assert realized == closure_matrices


def test_inflection_examples():
    one, zero = as_field(1), FieldElem.zero(TAU)
    z = FieldElem.zeta(TAU)
    assert inflection_check(ProjPoint([one, -one, zero]))
    assert inflection_check(ProjPoint([one, zero, -(z * z)]))
    assert not inflection_check(ProjPoint([one, one, one]))


def test_generic_points_have_no_lines():
    pts = []
    for k in range(9):
        # points on the moment curve (1 : t : t^3) are in general position
        t = as_field(k + 1)
        pts.append(ProjPoint([as_field(1), t, t ** 3]))
    c = build_configuration(pts)
    assert len(c.lines) == 0


def test_duplicate_points_rejected(points):
    with pytest.raises(DegenerateConfigurationError):
        build_configuration(points[:8] + [points[0]])


def test_four_collinear_rejected():
    pts = [ProjPoint([as_field(1), as_field(k), FieldElem.zero(TAU)])
           for k in range(4)]
    pts += [ProjPoint([as_field(1), as_field(k), as_field(k * k + 1)])
            for k in range(5)]
    with pytest.raises(DegenerateConfigurationError):
        build_configuration(pts)


def test_configuration_json(config):
    data = config.to_json()
    assert len(data["points"]) == 9
    assert len(data["lines"]) == 12
    assert all(len(ln) == 3 for ln in data["lines"])
    assert Configuration(
        points=tuple(ProjPoint.from_json(p, TAU) for p in data["points"]),
        lines=frozenset(frozenset(ln) for ln in data["lines"]),
    ).lines == config.lines
