"""Cogenerator functors: socles, strata, sigma-closure, density, tops."""

import warnings
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from staircase import (
    Downset,
    Upset,
    ValidationError,
    all_faces,
    associated_faces,
    attached_faces,
    cell,
    closure,
    density_report,
    difference,
    equals,
    face,
    full_face,
    interval,
    is_dense_family,
    is_empty,
    is_subset,
    localize,
    max_along,
    plset,
    point_set,
    random_downset,
    random_upset,
    sigma_closure,
    socle_stratum,
    socle_table,
    top,
    top_direct,
    top_table,
    universe,
)
from staircase.geometry import line_cell, orthant_cell
from staircase.qe import minkowski
from staircase.socle import boundary_degrees, validate_socle_table

from conftest import hs


def F(a, b=1):
    return Fraction(a, b)


def facesets(faces):
    return sorted(tuple(sorted(f.coords)) for f in faces)


# --- max_along ----------------------------------------------------------------


def test_max_along_unique_maximum(closed_principal):
    got = max_along(closed_principal.carrier, face(2))
    assert equals(got, point_set([0, 0]))


def test_max_along_antichain():
    seg = plset(
        2, cell(2, hs([1, 1], 1), hs([-1, -1], -1), hs([-1, 0], 0, True), hs([1, 0], 1))
    )
    assert equals(max_along(seg, face(2)), seg)


def test_max_along_stable_ray():
    s = plset(2, cell(2, hs([0, 1], 0), hs([0, -1], 0), hs([-1, 0], 0)))
    assert equals(max_along(s, face(2, [0])), s)


# --- strata ---------------------------------------------------------------------


def test_stratum_halfplane(half_plane):
    got = socle_stratum(half_plane, face(2), face(2, [0]))
    line = plset(2, cell(2, hs([1, 1], 1), hs([-1, -1], -1)))
    assert equals(got, line)


def test_stratum_triangle(triangle_quotient):
    got = socle_stratum(triangle_quotient, face(2), face(2, [0]))
    target = plset(
        2,
        cell(2, hs([1, 1], 1), hs([-1, -1], -1), hs([-1, 0], 0, True), hs([1, 0], 1)),
        cell(2, hs([1, 0], 1), hs([-1, 0], -1), hs([0, 1], 0)),
    )
    assert equals(got, target)


def test_stratum_closed_vanishes(closed_principal):
    for sigma in all_faces(2):
        if sigma.coords:
            assert is_empty(socle_stratum(closed_principal, face(2), sigma))


# --- socle tables -----------------------------------------------------------------


def test_triangle_socle_table(triangle_quotient):
    table = socle_table(triangle_quotient)
    e1 = table.entry(face(2), face(2, [0]))
    t1 = plset(
        2, cell(2, hs([1, 1], 1), hs([-1, -1], -1), hs([-1, 0], 0, True), hs([1, 0], 1))
    )
    assert equals(e1.degrees, t1)
    e2 = table.entry(face(2), face(2, [1]))
    t2 = plset(
        2, cell(2, hs([1, 1], 1), hs([-1, -1], -1), hs([1, 0], 1, True), hs([-1, 0], 0))
    )
    assert equals(e2.degrees, t2)
    assert is_empty(table.entry(face(2), full_face(2)).degrees)
    assert is_empty(table.entry(face(2), face(2)).degrees)
    assert facesets(table.associated_faces()) == [()]
    validate_socle_table(table)


def test_lower_halfplane_socle(lower_half_plane):
    table = socle_table(lower_half_plane)
    e = table.entry(face(2, [0]), full_face(2))
    line = plset(2, cell(2, hs([0, 1], 0), hs([0, -1], 0)))
    assert equals(e.degrees, line)
    assert equals(e.cosets, point_set([0]))
    assert is_empty(table.entry(face(2, [0]), face(2, [0])).degrees)
    assert facesets(table.associated_faces()) == [(0,)]
    validate_socle_table(table)


def test_closed_principal_socle(closed_principal):
    table = socle_table(closed_principal)
    assert equals(table.entry(face(2), face(2)).degrees, point_set([0, 0]))
    others = [
        e for k, e in table.entries.items() if k != (face(2), face(2))
    ]
    assert all(e.is_zero() for e in others)


def test_universe_socle_full_face():
    d = Downset(universe(2))
    assert facesets(associated_faces(d)) == [(0, 1)]
    table = socle_table(d)
    entry = table.entry(full_face(2), full_face(2))
    assert equals(entry.degrees, universe(2))
    # the coset space along the full face is a point
    assert entry.cosets.dim == 0
    assert equals(entry.cosets, universe(0))


def test_halfspace_socle_in_three_variables():
    # {x+y+z < 1}: one cogenerator class on the boundary plane for each of
    # the three axis nadirs; every plane point carries three incomparable
    # nadirs at once
    d = Downset(plset(3, cell(3, hs([1, 1, 1], 1, True))))
    table = socle_table(d)
    plane = plset(3, cell(3, hs([1, 1, 1], 1), hs([-1, -1, -1], -1)))
    for axis in range(3):
        e = table.entry(face(3), face(3, [axis]))
        assert equals(e.degrees, plane)
    for pair in [(0, 1), (0, 2), (1, 2), (0, 1, 2)]:
        assert table.entry(face(3), face(3, pair)).is_zero()
    assert facesets(table.associated_faces()) == [()]
    validate_socle_table(table)


def test_density_self_check_with_positive_dimensional_faces(
    lower_half_plane, triangle_plus_ray
):
    # entries along positive-dimensional faces route the sigma-closure
    # through the quotient space
    table = socle_table(lower_half_plane)
    assert is_dense_family(table.cosets_family(), table)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        table2 = socle_table(triangle_plus_ray)
        assert is_dense_family(table2.cosets_family(), table2)


def test_interval_boundary_matches_downset_route(half_plane, triangle_quotient):
    # the tail-of-net formula and the slice-closure algorithm must agree on
    # genuine downsets
    from staircase.socle import _interval_boundary_degrees

    for d in (half_plane, triangle_quotient):
        for sigma in all_faces(2):
            a = boundary_degrees(d, sigma)
            b = _interval_boundary_degrees(d.carrier, sigma)
            assert equals(a, b), (sigma,)


@settings(max_examples=8, deadline=None)
@given(st.integers(0, 10_000))
def test_interval_boundary_route_fuzz(seed):
    from staircase.socle import _interval_boundary_degrees

    d = random_downset(seed + 300, 2, 4)
    for sigma in all_faces(2):
        a = boundary_degrees(d, sigma)
        b = _interval_boundary_degrees(d.carrier, sigma)
        assert equals(a, b), (seed, sigma)


def test_triangle_plus_ray_socle(triangle_plus_ray):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        table = socle_table(triangle_plus_ray)
    closed = table.entry(face(2), face(2))
    hypo_half_open = plset(
        2, cell(2, hs([1, 1], 1), hs([-1, -1], -1), hs([-1, 0], 0), hs([1, 0], 1, True))
    )
    assert equals(closed.degrees, hypo_half_open)
    ray_entry = table.entry(face(2, [0]), face(2, [0]))
    stable_tail = plset(
        2, cell(2, hs([0, 1], 0), hs([0, -1], 0), hs([-1, 0], -1))
    )
    assert equals(ray_entry.degrees, stable_tail)
    assert equals(ray_entry.cosets, point_set([0]))
    assert facesets(table.associated_faces()) == [(), (0,)]


def test_empty_interior_interval_warns():
    u = Upset(plset(2, cell(2, hs([-1, 0], 0), hs([0, -1], 0))))
    d = Downset(plset(2, cell(2, hs([0, 1], 0))))
    ray = interval(u, d)  # the closed ray {x >= 0, y = 0}
    with pytest.warns(UserWarning, match="empty interior"):
        socle_table(ray)


# --- associated faces / localization ----------------------------------------------


def test_localization_vanishing_necessary_condition():
    # if the localization along a proper face is everything, the socle along
    # that face must vanish
    for seed in range(6):
        d = random_downset(seed, 2, 4)
        table = socle_table(d)
        for tau in all_faces(2):
            if tau.is_full():
                continue
            if equals(localize(d, tau).carrier, universe(2)):
                for sigma in all_faces(2):
                    if tau.coords <= sigma.coords:
                        assert table.entry(tau, sigma).is_zero()


def test_socle_degrees_inside_boundaries():
    for seed in range(4):
        d = random_downset(seed + 50, 2, 4)
        table = socle_table(d)
        cl = closure(d.carrier)
        for (tau, sigma), e in table.entries.items():
            assert is_subset(e.degrees, cl)
            assert is_subset(e.degrees, boundary_degrees(d, sigma))
            if sigma == tau:
                # closed-socle degrees are honest members of the downset
                assert is_subset(e.degrees, d.carrier)


# --- sigma closure -------------------------------------------------------------------


def test_sigma_closure_segment():
    seg = plset(
        2,
        cell(2, hs([1, 1], 1), hs([-1, -1], -1), hs([-1, 0], 0, True), hs([1, 0], 1, True)),
    )
    got = sigma_closure(seg, face(2, [0]), face(2))
    target = plset(2, cell(2, hs([1, 0], 1), hs([0, 1], 1, True), hs([1, 1], 1)))
    assert equals(got, target)
    assert got.contains((F(1), F(0)))
    assert not got.contains((F(0), F(1)))


def test_sigma_closure_degenerate_is_downward_closure():
    x = point_set([1, 1])
    got = sigma_closure(x, face(2), face(2))
    assert equals(got, plset(2, cell(2, hs([1, 0], 1), hs([0, 1], 1))))


def test_sigma_closure_empty():
    from staircase import empty

    assert is_empty(sigma_closure(empty(2), face(2, [0]), face(2)))


# --- density ---------------------------------------------------------------------------


def test_dense_family_reflexive(triangle_quotient):
    table = socle_table(triangle_quotient)
    assert is_dense_family(table.cosets_family(), table)


def test_dense_after_deleting_endpoint(triangle_quotient):
    table = socle_table(triangle_quotient)
    fam = dict(table.cosets_family())
    key = (face(2), face(2, [0]))
    fam[key] = difference(fam[key], point_set([1, 0]))
    assert is_dense_family(fam, table)


def test_not_dense_after_deleting_open_subsegment(triangle_quotient):
    table = socle_table(triangle_quotient)
    fam = dict(table.cosets_family())
    gap = plset(
        2,
        cell(
            2,
            hs([1, 1], 1),
            hs([-1, -1], -1),
            hs([-1, 0], F(-1, 4), True),
            hs([1, 0], F(1, 2), True),
        ),
    )
    for key in [(face(2), face(2, [0])), (face(2), face(2, [1]))]:
        fam[key] = difference(fam[key], gap)
    rep = density_report(fam, table)
    assert not rep.dense
    tau, sigma, w = rep.failures[0]
    assert F(1, 4) < w[0] < F(1, 2) and w[0] + w[1] == 1


def test_density_precondition_enforced(triangle_quotient):
    table = socle_table(triangle_quotient)
    fam = dict(table.cosets_family())
    fam[(face(2), face(2, [0]))] = universe(2)
    with pytest.raises(ValidationError):
        is_dense_family(fam, table)


# --- tops -------------------------------------------------------------------------------


def test_top_of_open_upper_halfplane():
    u = Upset(plset(2, cell(2, hs([-1, -1], -1, True))))
    e = top(u, face(2), face(2, [0]))
    line = plset(2, cell(2, hs([1, 1], 1), hs([-1, -1], -1)))
    assert equals(e.degrees, line)


def test_top_of_positive_orthant():
    u = Upset(plset(2, cell(2, hs([-1, 0], 0), hs([0, -1], 0))))
    assert facesets(attached_faces(u)) == [()]
    table = top_table(u)
    assert equals(table[(face(2), face(2))].degrees, point_set([0, 0]))


def test_attached_face_of_localized_principal():
    swept = minkowski(point_set([1, 2]), line_cell(face(2, [0])))
    u = Upset(minkowski(swept, orthant_cell(2)))
    assert facesets(attached_faces(u)) == [(0,)]


@settings(max_examples=8, deadline=None)
@given(st.integers(0, 10_000))
def test_top_routes_agree(seed):
    u = random_upset(seed + 7, 2, 4)
    for rho in all_faces(2):
        for xi in all_faces(2):
            if not rho.coords <= xi.coords:
                continue
            a = top(u, rho, xi)
            b = top_direct(u, rho, xi)
            assert equals(a.degrees, b.degrees)
            assert equals(a.cosets, b.cosets)
