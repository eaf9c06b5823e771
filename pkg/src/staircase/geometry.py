"""The partial order on R^n with positive cone R^n_+.

Faces of the positive cone are coordinate subsets; the face lattice is the
boolean lattice on axes.  This module provides face/shape bookkeeping,
validated downsets, upsets and intervals, tangent-cone shapes at points,
upper- and lower-boundary functors, frontiers, localization and
quotient-restriction.

Faces are 0-based internally; the JSON layer renders them 1-based.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from . import qe
from .errors import DimensionMismatch, FaceError, InternalCheckFailure, ValidationError
from .qe import Cell, HalfSpace, PLSet
from .rationals import Rat, Vec, vec

# ---------------------------------------------------------------------------
# Faces and shapes


@dataclass(frozen=True)
class Face:
    """A face of R^n_+, identified with the subset of axes it spans."""

    dim: int
    coords: frozenset[int]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coords", frozenset(self.coords))
        if not self.coords <= set(range(self.dim)):
            raise FaceError(
                f"face coordinates {sorted(self.coords)} out of range for n={self.dim}"
            )

    def __le__(self, other: "Face") -> bool:
        self._check(other)
        return self.coords <= other.coords

    def __lt__(self, other: "Face") -> bool:
        self._check(other)
        return self.coords < other.coords

    def _check(self, other: "Face") -> None:
        if self.dim != other.dim:
            raise DimensionMismatch("faces of different ambient dimensions")

    @property
    def codim_coords(self) -> frozenset[int]:
        return frozenset(range(self.dim)) - self.coords

    def is_full(self) -> bool:
        return len(self.coords) == self.dim

    def sort_key(self) -> tuple:
        return (len(self.coords), tuple(sorted(self.coords)))

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"Face({self.dim}, {{{', '.join(map(str, sorted(self.coords)))}}})"


def face(dim: int, coords: Iterable[int] = ()) -> Face:
    return Face(dim, frozenset(coords))


def full_face(dim: int) -> Face:
    return Face(dim, frozenset(range(dim)))


def zero_face(dim: int) -> Face:
    return Face(dim, frozenset())


def all_faces(dim: int) -> list[Face]:
    out = []
    for r in range(dim + 1):
        for combo in itertools.combinations(range(dim), r):
            out.append(Face(dim, frozenset(combo)))
    return out


def indicator_vector(sigma: Face) -> Vec:
    return tuple(
        Fraction(1) if i in sigma.coords else Fraction(0) for i in range(sigma.dim)
    )


@dataclass(frozen=True)
class Shape:
    """An upward-closed set of faces (a cocomplex) in the face lattice."""

    dim: int
    faces: frozenset[Face]

    def __post_init__(self) -> None:
        object.__setattr__(self, "faces", frozenset(self.faces))
        for f in self.faces:
            if f.dim != self.dim:
                raise DimensionMismatch("shape contains a face of wrong dimension")
        if not self.is_upward_closed():
            raise ValidationError("shape is not upward closed in the face lattice")

    def is_upward_closed(self) -> bool:
        universe = frozenset(range(self.dim))
        for f in self.faces:
            extra = universe - f.coords
            for r in range(1, len(extra) + 1):
                for add in itertools.combinations(extra, r):
                    if Face(self.dim, f.coords | set(add)) not in self.faces:
                        return False
        return True

    def minimal_faces(self) -> frozenset[Face]:
        """The antichain of inclusion-minimal members."""
        return frozenset(
            f
            for f in self.faces
            if not any(g.coords < f.coords for g in self.faces)
        )

    def __contains__(self, f: Face) -> bool:
        return f in self.faces


def shape(dim: int, faces: Iterable[Face]) -> Shape:
    return Shape(dim, frozenset(faces))


def open_star(tau: Face) -> Shape:
    """All faces containing ``tau``."""
    rest = sorted(set(range(tau.dim)) - tau.coords)
    members = []
    for r in range(len(rest) + 1):
        for combo in itertools.combinations(rest, r):
            members.append(Face(tau.dim, tau.coords | set(combo)))
    return Shape(tau.dim, frozenset(members))


# Cells attached to faces -------------------------------------------------


def face_interior(sigma: Face) -> Cell:
    """Relative interior: ``x_i > 0`` on the face, ``x_j = 0`` off it."""
    n = sigma.dim
    cons: list[HalfSpace] = []
    for i in range(n):
        e = tuple(Fraction(1 if k == i else 0) for k in range(n))
        neg = tuple(-c for c in e)
        if i in sigma.coords:
            cons.append(HalfSpace(neg, Fraction(0), True))  # x_i > 0
        else:
            cons.append(HalfSpace(e, Fraction(0), False))  # x_i <= 0
            cons.append(HalfSpace(neg, Fraction(0), False))  # x_i >= 0
    return Cell(n, tuple(cons))


def cone_of_shape(nabla: Shape) -> PLSet:
    """Union of the relative interiors of the shape's faces."""
    return qe.canonicalize(
        PLSet(nabla.dim, tuple(face_interior(f) for f in sorted(nabla.faces, key=Face.sort_key))),
        deep=False,
    )


def upset_cone_cell(sigma: Face) -> Cell:
    """``sigma-interior + R^n_+`` as a single cell: ``x_i > 0`` on the face,
    ``x_j >= 0`` off it."""
    n = sigma.dim
    cons = []
    for i in range(n):
        neg = tuple(Fraction(-1 if k == i else 0) for k in range(n))
        cons.append(HalfSpace(neg, Fraction(0), i in sigma.coords))
    return Cell(n, tuple(cons))


def orthant_cell(dim: int, negative: bool = False) -> Cell:
    sign = Fraction(1 if negative else -1)
    cons = [
        HalfSpace(tuple(sign if k == i else Fraction(0) for k in range(dim)), Fraction(0), False)
        for i in range(dim)
    ]
    return Cell(dim, tuple(cons))


def line_cell(tau: Face) -> Cell:
    """The linear span ``R tau``: coordinates off the face pinned to zero."""
    n = tau.dim
    cons = []
    for j in range(n):
        if j in tau.coords:
            continue
        e = tuple(Fraction(1 if k == j else 0) for k in range(n))
        cons.append(HalfSpace(e, Fraction(0), False))
        cons.append(HalfSpace(tuple(-c for c in e), Fraction(0), False))
    return Cell(n, tuple(cons))


def cone_cell(tau: Face) -> Cell:
    """The face ``tau`` as a closed cone: ``x_i >= 0`` on it, ``0`` off it."""
    n = tau.dim
    cons = []
    for i in range(n):
        e = tuple(Fraction(1 if k == i else 0) for k in range(n))
        neg = tuple(-c for c in e)
        if i in tau.coords:
            cons.append(HalfSpace(neg, Fraction(0), False))
        else:
            cons.append(HalfSpace(e, Fraction(0), False))
            cons.append(HalfSpace(neg, Fraction(0), False))
    return Cell(n, tuple(cons))


# ---------------------------------------------------------------------------
# Downsets, upsets, intervals


def is_downset(s: PLSet) -> bool:
    """Exact extensional test ``s = s - R^n_+``."""
    return qe.equals(s, qe.minkowski(s, orthant_cell(s.dim, negative=True)))


def is_upset(s: PLSet) -> bool:
    return qe.equals(s, qe.minkowski(s, orthant_cell(s.dim, negative=False)))


@dataclass(frozen=True)
class Downset:
    carrier: PLSet

    def __post_init__(self) -> None:
        canonical = qe.canonicalize(self.carrier)
        object.__setattr__(self, "carrier", canonical)
        if not is_downset(canonical):
            w = qe.difference_witness(
                qe.minkowski(canonical, orthant_cell(canonical.dim, negative=True)),
                canonical,
            )
            raise ValidationError(f"not a downset: witness point {w}")

    @property
    def dim(self) -> int:
        return self.carrier.dim


@dataclass(frozen=True)
class Upset:
    carrier: PLSet

    def __post_init__(self) -> None:
        canonical = qe.canonicalize(self.carrier)
        object.__setattr__(self, "carrier", canonical)
        if not is_upset(canonical):
            w = qe.difference_witness(
                qe.minkowski(canonical, orthant_cell(canonical.dim, negative=False)),
                canonical,
            )
            raise ValidationError(f"not an upset: witness point {w}")

    @property
    def dim(self) -> int:
        return self.carrier.dim


@dataclass(frozen=True)
class Interval:
    """Intersection of an upset and a downset, with the pair remembered."""

    upset: Upset
    downset: Downset
    carrier: PLSet

    def __post_init__(self) -> None:
        if self.upset.dim != self.downset.dim or self.carrier.dim != self.upset.dim:
            raise DimensionMismatch("interval parts of different dimensions")
        expected = qe.intersect(self.upset.carrier, self.downset.carrier)
        if not qe.equals(self.carrier, expected):
            raise ValidationError("interval carrier differs from upset-meet-downset")
        object.__setattr__(self, "carrier", qe.canonicalize(self.carrier))

    @property
    def dim(self) -> int:
        return self.carrier.dim


def interval(upset: Upset, downset: Downset) -> Interval:
    return Interval(upset, downset, qe.intersect(upset.carrier, downset.carrier))


def as_interval(m: "Downset | Upset | Interval") -> Interval:
    if isinstance(m, Interval):
        return m
    if isinstance(m, Downset):
        return Interval(Upset(qe.universe(m.dim)), m, m.carrier)
    if isinstance(m, Upset):
        return Interval(m, Downset(qe.universe(m.dim)), m.carrier)
    raise TypeError(f"cannot view {type(m).__name__} as an interval")


def reflect_downset(d: Downset) -> Upset:
    return Upset(qe.reflect(d.carrier))


def reflect_upset(u: Upset) -> Downset:
    return Downset(qe.reflect(u.carrier))


def reflect_interval(i: Interval) -> Interval:
    return Interval(
        reflect_downset(i.downset), reflect_upset(i.upset), qe.reflect(i.carrier)
    )


# ---------------------------------------------------------------------------
# Tangent-cone shapes


def shape_at(d: Downset, a: Iterable[Rat]) -> Shape:
    """The shape of the downset at ``a``: faces whose negated interior ray
    points into ``d`` arbitrarily close to ``a``.

    For the zero face the test degenerates to membership of ``a`` itself.
    For a positive-dimensional face ``sigma`` the single interior ray with
    direction ``-sum(e_i, i in sigma)`` decides the whole relative interior:
    if ``a - eps*s`` lies in the downset for one interior vector ``s`` and all
    small ``eps``, then for any other interior vector ``s'`` one can pick
    ``eps'`` with ``eps'*s' >= eps*s`` coordinatewise on the face, and
    downsets are closed under moving down.  Points separated from the set get
    the empty shape (no faces at all), which is a valid cocomplex.
    """
    av = vec(a)
    if len(av) != d.dim:
        raise DimensionMismatch("point dimension mismatch")
    members = []
    for f in all_faces(d.dim):
        if not f.coords:
            if d.carrier.contains(av):
                members.append(f)
        else:
            direction = tuple(-x for x in indicator_vector(f))
            if qe.directional_limit_member(d.carrier, av, direction):
                members.append(f)
    result = Shape(d.dim, frozenset(members))  # constructor asserts upward closure
    if (zero_face(d.dim) in result.faces) != d.carrier.contains(av):
        raise InternalCheckFailure("zero face membership disagrees with point membership")
    return result


# ---------------------------------------------------------------------------
# Upper boundary functor


def _relatively_open_pieces(c: Cell) -> list[Cell]:
    """Partition a cell by tightness patterns of its non-strict constraints.

    Every point of the cell makes each non-strict constraint either tight
    (equality) or slack (strict), so the pieces partition the cell, and each
    piece is an open subset of the affine span of its equalities.  Empty
    branches are pruned as soon as a partial conjunction is contradictory.
    """
    nonstrict = [h for h in c.constraints if not h.strict and not h.is_zero_normal()]
    base = [h for h in c.constraints if h.strict or h.is_zero_normal()]
    pieces: list[Cell] = []

    def rec(i: int, acc: list[HalfSpace]) -> None:
        if qe.is_empty_cell(Cell(c.dim, tuple(acc) + tuple(nonstrict[i:]))):
            return
        if i == len(nonstrict):
            pieces.append(Cell(c.dim, tuple(acc)))
            return
        h = nonstrict[i]
        rec(i + 1, acc + [h.strictened()])
        rec(i + 1, acc + [h, h.reversed_nonstrict()])

    rec(0, list(base))
    return pieces


def _is_syntactically_closed(s: PLSet) -> bool:
    return all(not h.strict for c in s.cells for h in c.constraints)


def upper_boundary(d: Downset, sigma: Face, check: bool = True) -> Downset:
    """Close the downset along the flats parallel to ``sigma``.

    Algorithm: split each cell into relatively open pieces; for such a piece
    ``C`` meeting an affine flat ``x + R*sigma``, the closure of the slice is
    ``closure(C) ∩ (x + R*sigma)`` (segment argument inside the flat toward a
    point of the slice), so the union of slice closures over all flats is
    ``closure(C) ∩ pi^{-1}(pi(C))`` where ``pi`` projects out the sigma
    coordinates.  Slices of closed cells are closed, so a syntactically
    closed downset is returned unchanged.
    """
    if sigma.dim != d.dim:
        raise DimensionMismatch("face dimension mismatch")
    if not sigma.coords or _is_syntactically_closed(d.carrier):
        return d
    out: list[Cell] = []
    for c in d.carrier.cells:
        for piece in _relatively_open_pieces(c):
            cyl = qe.exists(PLSet(d.dim, (piece,)), sigma.coords)
            closed = Cell(d.dim, tuple(h.relaxed() for h in piece.constraints))
            for cylcell in cyl.cells:
                merged = Cell(d.dim, closed.constraints + cylcell.constraints)
                if not qe.is_empty_cell(merged):
                    out.append(merged)
    result = qe.canonicalize(PLSet(d.dim, tuple(out)))
    if check:
        if not qe.is_subset(d.carrier, result):
            raise InternalCheckFailure("upper boundary lost points of the downset")
        if not qe.is_subset(result, qe.closure(d.carrier)):
            raise InternalCheckFailure("upper boundary escaped the closure")
    return Downset(result)  # constructor re-checks downset-ness


def frontier(d: Downset) -> PLSet:
    """Points of the closure outside the downset, computed two ways."""
    via_boundary = qe.difference(
        upper_boundary(d, full_face(d.dim)).carrier, d.carrier
    )
    via_closure = qe.difference(qe.closure(d.carrier), d.carrier)
    if not qe.equals(via_boundary, via_closure):
        raise InternalCheckFailure("frontier routes disagree")
    return qe.canonicalize(via_boundary)


# ---------------------------------------------------------------------------
# Localization, quotient-restriction


def localize(d: Downset, tau: Face) -> Downset:
    """Degrees where the module survives localization along ``tau``: the
    points whose entire forward ``tau``-cone stays in the downset.

    For a downset the stability condition ``exists t : a + t + tau ⊆ D``
    collapses to ``a + tau ⊆ D``, so one complement and one Minkowski sum
    compute it.  The result is invariant under translation by ``R tau``.
    """
    if tau.dim != d.dim:
        raise DimensionMismatch("face dimension mismatch")
    if not tau.coords:
        return d
    bad = qe.minkowski(
        qe.complement(d.carrier),
        Cell(d.dim, tuple(h.reflected() for h in cone_cell(tau).constraints)),
    )
    result = qe.canonicalize(qe.complement(bad))
    loc = Downset(result)
    if not qe.equals(result, qe.minkowski(result, line_cell(tau))):
        raise InternalCheckFailure("localization is not R*tau invariant")
    return loc


def project_mod(s: PLSet, tau: Face) -> PLSet:
    """Plain image in the quotient modulo ``R tau`` (delete tau coordinates)."""
    if tau.dim != s.dim:
        raise DimensionMismatch("face dimension mismatch")
    return qe.eliminate(s, tau.coords)


def quotient_restrict(s: PLSet, tau: Face) -> PLSet:
    """Image mod ``R tau`` for a translation-invariant set (checked)."""
    if tau.dim != s.dim:
        raise DimensionMismatch("face dimension mismatch")
    if not qe.equals(s, qe.minkowski(s, line_cell(tau))):
        raise ValidationError(
            "quotient-restriction requires invariance under translation by R*tau"
        )
    return project_mod(s, tau)


# ---------------------------------------------------------------------------
# Lower boundary (for upsets), by reflection and directly


def lower_boundary(u: Upset, xi: Face) -> Upset:
    """Reflection route: reflect, take the upper boundary, reflect back."""
    if xi.dim != u.dim:
        raise DimensionMismatch("face dimension mismatch")
    d = reflect_upset(u)
    return Upset(qe.reflect(upper_boundary(d, xi).carrier))


def lower_boundary_direct(u: Upset, xi: Face) -> Upset:
    """Independent route: ``{b : b + xi-interior ⊆ U}`` via one complement.

    For an honest upset the tail of the net along ``b + xi-interior`` is in
    the set iff the entire relative interior is, so the two routes agree.
    """
    if xi.dim != u.dim:
        raise DimensionMismatch("face dimension mismatch")
    if not xi.coords:
        return u
    interior = face_interior(xi)
    bad = qe.minkowski(
        qe.complement(u.carrier),
        Cell(u.dim, tuple(h.reflected() for h in interior.constraints)),
    )
    return Upset(qe.canonicalize(qe.complement(bad)))
