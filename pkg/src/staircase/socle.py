"""Cogenerator functors on indicator modules.

For a downset or interval, the socle along a face ``tau`` with nadir
``sigma`` collects the degrees that die when pushed up in any direction
outside ``tau``, persist along ``tau``, and are reached as limits along
``sigma`` (the inclusion-minimal such face).  Everything is computed
degreewise on piecewise-linear carriers:

* boundary degrees atop ``sigma``: for downsets the upper-boundary functor,
  for general intervals the tail-of-net support of the direct limit along
  the relative interior of ``sigma``;
* the nadir stratification subtracts the boundary degrees of all smaller
  faces between ``tau`` and ``sigma``;
* the closed-socle step keeps the degrees that are maximal modulo ``tau``.

The dual generator functors (tops along faces, attached faces) are obtained
by degree negation, with an independently coded direct route for
cross-checking.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from . import qe
from .errors import DimensionMismatch, FaceError, ValidationError
from .geometry import (
    Cell,
    Downset,
    Face,
    Interval,
    PLSet,
    Upset,
    all_faces,
    as_interval,
    cone_cell,
    face_interior,
    lower_boundary_direct,
    project_mod,
    reflect_interval,
    upper_boundary,
    upset_cone_cell,
    zero_face,
)
from .qe import HalfSpace


def _m_tau_cells(tau: Face) -> list[Cell]:
    """The punctured cone ``R^n_+ minus tau`` as cells ``{q >= 0, q_j > 0}``."""
    n = tau.dim
    out = []
    for j in sorted(set(range(n)) - tau.coords):
        cons = []
        for i in range(n):
            neg = tuple(Fraction(-1 if k == i else 0) for k in range(n))
            cons.append(HalfSpace(neg, Fraction(0), i == j))
        out.append(Cell(n, tuple(cons)))
    return out


def max_along(s: PLSet, tau: Face) -> PLSet:
    """Degrees ``a`` of ``s`` with ``(a + R^n_+) ∩ s  =  a + tau``.

    Computed as ``s`` minus the degrees that survive a push outside ``tau``
    (one Minkowski sum per punctured-cone cell) minus the degrees whose
    forward ``tau``-ray escapes ``s`` (one complement and one Minkowski sum).
    """
    if tau.dim != s.dim:
        raise DimensionMismatch("face dimension mismatch")
    s = qe.condense(s)
    escape_cells: list[Cell] = []
    for k in _m_tau_cells(tau):
        escaped = qe.minkowski(
            s, Cell(s.dim, tuple(h.reflected() for h in k.constraints))
        )
        escape_cells.extend(escaped.cells)
    result = qe.difference(s, qe.condense(PLSet(s.dim, tuple(escape_cells))))
    if result.cells and tau.coords:
        unstable = qe.minkowski(
            qe.complement(s),
            Cell(s.dim, tuple(h.reflected() for h in cone_cell(tau).constraints)),
        )
        result = qe.difference(result, qe.condense(unstable))
    return qe.condense(result)


def min_along(s: PLSet, rho: Face) -> PLSet:
    """Order dual of :func:`max_along`: ``(a - R^n_+) ∩ s = a - rho``.

    Coded without any reflection so the generator-side pipeline is an
    independent implementation.
    """
    if rho.dim != s.dim:
        raise DimensionMismatch("face dimension mismatch")
    s = qe.condense(s)
    escape_cells: list[Cell] = []
    for k in _m_tau_cells(rho):
        escape_cells.extend(qe.minkowski(s, k).cells)
    result = qe.difference(s, qe.condense(PLSet(s.dim, tuple(escape_cells))))
    if result.cells and rho.coords:
        unstable = qe.minkowski(qe.complement(s), cone_cell(rho))
        result = qe.difference(result, qe.condense(unstable))
    return qe.condense(result)


# ---------------------------------------------------------------------------
# Boundary degrees


def _interval_boundary_degrees(carrier: PLSet, sigma: Face) -> PLSet:
    """Degrees where the direct limit along ``sigma``-interior survives.

    ``a`` qualifies iff some ``s'`` in the relative interior of ``sigma`` has
    the whole tail ``{a - s'' : s'' interior, s'' <= s'}`` inside the
    carrier: two elimination layers around one complement.
    """
    n = carrier.dim
    if not sigma.coords:
        return carrier
    interior = face_interior(sigma)
    zero = tuple(Fraction(0) for _ in range(n))

    def pad(h: HalfSpace, block: int) -> HalfSpace:
        parts = [zero, zero, zero]
        parts[block] = h.normal
        return HalfSpace(parts[0] + parts[1] + parts[2], h.offset, h.strict)

    # Blocks: a (0..n), s' (n..2n), s'' (2n..3n).
    bad_cells = []
    for c in qe.complement(carrier).cells:
        cons: list[HalfSpace] = []
        for h in interior.constraints:  # s'' interior
            cons.append(pad(h, 2))
        for i in range(n):  # s'' <= s' coordinatewise
            row = [Fraction(0)] * (3 * n)
            row[2 * n + i] = Fraction(1)
            row[n + i] = Fraction(-1)
            cons.append(HalfSpace(tuple(row), Fraction(0), False))
        for h in c.constraints:  # a - s'' outside the carrier
            cons.append(
                HalfSpace(
                    h.normal + zero + tuple(-x for x in h.normal), h.offset, h.strict
                )
            )
        bad_cells.append(Cell(3 * n, tuple(cons)))
    bad = qe.eliminate(PLSet(3 * n, tuple(bad_cells)), range(2 * n, 3 * n))
    good = qe.complement(bad)  # pairs (a, s') whose tail stays inside
    sprime_interior = Cell(
        2 * n,
        tuple(
            HalfSpace(zero + h.normal, h.offset, h.strict)
            for h in interior.constraints
        ),
    )
    restricted = qe.intersect(good, PLSet(2 * n, (sprime_interior,)))
    return qe.canonicalize(qe.eliminate(restricted, range(n, 2 * n)))


def boundary_degrees(m: Downset | Interval, sigma: Face) -> PLSet:
    """Support of the upper boundary atop ``sigma``."""
    if isinstance(m, Downset):
        return upper_boundary(m, sigma).carrier
    iv = as_interval(m)
    if qe.equals(iv.upset.carrier, qe.universe(iv.dim)):
        return upper_boundary(Downset(iv.carrier), sigma).carrier
    return _interval_boundary_degrees(iv.carrier, sigma)


def interval_interior_warning(m: Interval) -> bool:
    """Warn when the carrier has empty interior: degreewise nadir strata may
    then differ from the categorical kernels.  Returns True when flagged."""
    interior = qe.complement(qe.closure(qe.complement(m.carrier)))
    if qe.is_empty(interior) and not qe.is_empty(m.carrier):
        warnings.warn(
            "interval carrier has empty interior; nadir strata are computed "
            "degreewise and may not match categorical kernels",
            stacklevel=2,
        )
        return True
    return False


# ---------------------------------------------------------------------------
# Socle table


@dataclass(frozen=True)
class SocleEntry:
    tau: Face
    sigma: Face
    degrees: PLSet  # in the ambient space
    cosets: PLSet  # image modulo R*tau

    def is_zero(self) -> bool:
        return qe.is_empty(self.degrees)


@dataclass(frozen=True)
class SocleTable:
    base: Interval
    entries: Mapping[tuple[Face, Face], SocleEntry]

    @property
    def dim(self) -> int:
        return self.base.dim

    def entry(self, tau: Face, sigma: Face) -> SocleEntry:
        try:
            return self.entries[(tau, sigma)]
        except KeyError:
            raise FaceError(
                f"no socle entry for tau={sorted(tau.coords)}, sigma={sorted(sigma.coords)}"
            ) from None

    def nonzero_items(self) -> list[SocleEntry]:
        return [
            e
            for _, e in sorted(
                self.entries.items(),
                key=lambda kv: (kv[0][0].sort_key(), kv[0][1].sort_key()),
            )
            if not e.is_zero()
        ]

    def associated_faces(self) -> frozenset[Face]:
        return frozenset(e.tau for e in self.nonzero_items())

    def cosets_family(self) -> dict[tuple[Face, Face], PLSet]:
        return {k: e.cosets for k, e in self.entries.items()}


class _BoundaryCache:
    def __init__(self, m: Downset | Interval):
        self.m = m
        self._cache: dict[Face, PLSet] = {}

    def get(self, sigma: Face) -> PLSet:
        if sigma not in self._cache:
            self._cache[sigma] = boundary_degrees(self.m, sigma)
        return self._cache[sigma]


def _faces_between(tau: Face, sigma: Face) -> list[Face]:
    """Faces ``sigma'`` with ``tau ⊆ sigma' ⊊ sigma``."""
    import itertools

    extra = sorted(sigma.coords - tau.coords)
    out = []
    for r in range(len(extra)):
        for combo in itertools.combinations(extra, r):
            out.append(Face(tau.dim, tau.coords | set(combo)))
    return out


def socle_stratum(
    m: Downset | Interval, tau: Face, sigma: Face, _cache: _BoundaryCache | None = None
) -> PLSet:
    """Boundary degrees atop ``sigma`` minus those atop any smaller face
    containing ``tau``: the degrees whose nadir within the open star of
    ``tau`` is exactly ``sigma``."""
    if not tau.coords <= sigma.coords:
        raise FaceError("nadir must contain the face of persistence")
    cache = _cache or _BoundaryCache(m)
    result = cache.get(sigma)
    for smaller in _faces_between(tau, sigma):
        result = qe.difference(result, cache.get(smaller))
        if not result.cells:
            break
    return qe.condense(result)


def socle(
    m: Downset | Interval,
    tau: Face,
    sigma: Face,
    _cache: _BoundaryCache | None = None,
) -> SocleEntry:
    """Socle along ``tau`` with nadir ``sigma``: degrees and their cosets."""
    stratum = socle_stratum(m, tau, sigma, _cache)
    degrees = max_along(stratum, tau)
    cosets = qe.canonicalize(project_mod(degrees, tau))
    return SocleEntry(tau, sigma, degrees, cosets)


def socle_table(m: Downset | Interval) -> SocleTable:
    iv = as_interval(m)
    if not isinstance(m, Downset):
        interval_interior_warning(iv)
    cache = _BoundaryCache(m)
    entries: dict[tuple[Face, Face], SocleEntry] = {}
    for tau in all_faces(iv.dim):
        for sigma in all_faces(iv.dim):
            if tau.coords <= sigma.coords:
                entries[(tau, sigma)] = socle(m, tau, sigma, cache)
    return SocleTable(iv, entries)


def associated_faces(m: Downset | Interval) -> frozenset[Face]:
    """Faces along which the socle is nonzero."""
    return socle_table(m).associated_faces()


def validate_socle_table(table: SocleTable) -> None:
    """Structural invariants: degrees inside the closure of the carrier,
    cosets are projections and antichains, nested nadir strata disjoint."""
    closure = qe.closure(table.base.carrier)
    n = table.dim
    for (tau, sigma), e in table.entries.items():
        if not qe.is_subset(e.degrees, closure):
            raise ValidationError("socle degrees escape the carrier closure")
        if not qe.equals(e.cosets, project_mod(e.degrees, tau)):
            raise ValidationError("cosets are not the projection of the degrees")
        qdim = n - len(tau.coords)
        if qdim > 0 and e.cosets.cells:
            bumped = qe.PLSet(qdim, ())
            for k in _m_tau_cells(zero_face(qdim)):
                bumped = qe.union(bumped, qe.minkowski(e.cosets, k))
            if not qe.is_empty(qe.intersect(e.cosets, bumped)):
                raise ValidationError("socle cosets are not an antichain")
        for (tau2, sigma2), e2 in table.entries.items():
            if tau2 == tau and sigma2.coords < sigma.coords and tau.coords <= sigma2.coords:
                if not qe.is_empty(qe.intersect(e.degrees, e2.degrees)):
                    raise ValidationError("nested nadir strata overlap")


# ---------------------------------------------------------------------------
# Sigma-closure and density


def _quotient_face(sigma: Face, tau: Face, qdim: int) -> Face:
    """Image of ``sigma`` in the quotient modulo ``R tau`` (reindexed)."""
    keep = sorted(set(range(tau.dim)) - tau.coords)
    pos = {j: i for i, j in enumerate(keep)}
    return Face(qdim, frozenset(pos[j] for j in sigma.coords - tau.coords))


def sigma_closure(x: PLSet, sigma: Face, tau: Face) -> PLSet:
    """Points of the quotient all of whose ``sigma``-vicinities meet ``x``.

    A ``sigma``-vicinity of ``a`` is a translate ``u + (sigma-interior + Q_+)``
    with ``a - u`` interior to ``sigma``; demanding a point of ``x`` in every
    vicinity is exactly ``a - sigma-interior ⊆ x - (sigma-interior + Q_+)``,
    i.e. membership in the upper boundary atop ``sigma`` of the downset
    ``x`` minus the cone of the open star of ``sigma``.
    """
    if not tau.coords <= sigma.coords:
        raise FaceError("sigma must contain tau")
    qdim = tau.dim - len(tau.coords)
    if x.dim != qdim:
        raise DimensionMismatch(
            f"expected a set in the quotient of dimension {qdim}, got {x.dim}"
        )
    s = _quotient_face(sigma, tau, qdim)
    hang = Cell(qdim, tuple(h.reflected() for h in upset_cone_cell(s).constraints))
    downset = Downset(qe.minkowski(x, hang))
    return upper_boundary(downset, s).carrier


FamilyMap = Mapping[tuple[Face, Face], PLSet]


def is_dense_family(b: FamilyMap | SocleTable, a: SocleTable) -> bool:
    report = density_report(b, a)
    return report.dense


@dataclass(frozen=True)
class DensityReport:
    dense: bool
    failures: tuple[tuple[Face, Face, tuple], ...]  # (tau, sigma, witness coset)


def density_report(b: FamilyMap | SocleTable, a: SocleTable) -> DensityReport:
    """Check that the sigma-closure of the candidate family covers the full
    socle, entry by entry.  The candidate must be entrywise contained in the
    table (checked); failures carry an exact witness coset."""
    bmap: dict[tuple[Face, Face], PLSet] = dict(
        b.cosets_family() if isinstance(b, SocleTable) else b
    )
    for (tau, sigma), bset in bmap.items():
        target = a.entry(tau, sigma).cosets
        if not qe.is_subset(bset, target):
            w = qe.difference_witness(bset, target)
            raise ValidationError(
                f"candidate family is not contained in the socle at "
                f"tau={sorted(tau.coords)}, sigma={sorted(sigma.coords)}: witness {w}"
            )
    failures = []
    for tau in all_faces(a.dim):
        qdim = a.dim - len(tau.coords)
        pool = qe.empty(qdim)
        for sigma in all_faces(a.dim):
            if tau.coords <= sigma.coords:
                part = bmap.get((tau, sigma))
                if part is not None:
                    pool = qe.union(pool, part)
        for sigma in all_faces(a.dim):
            if not tau.coords <= sigma.coords:
                continue
            target = a.entry(tau, sigma).cosets
            if qe.is_empty(target):
                continue
            closed = sigma_closure(pool, sigma, tau)
            w = qe.difference_witness(target, closed)
            if w is not None:
                failures.append((tau, sigma, w))
    return DensityReport(dense=not failures, failures=tuple(failures))


# ---------------------------------------------------------------------------
# Tops (Matlis-dual generator functors)


@dataclass(frozen=True)
class TopEntry:
    rho: Face
    xi: Face
    degrees: PLSet
    cosets: PLSet

    def is_zero(self) -> bool:
        return qe.is_empty(self.degrees)


def _as_upset_interval(u: Upset | Interval) -> Interval:
    if isinstance(u, (Upset, Interval)):
        return as_interval(u)
    raise ValidationError(f"tops are defined for upsets and intervals, got {type(u).__name__}")


def top(u: Upset | Interval, rho: Face, xi: Face) -> TopEntry:
    """Top along ``rho`` with attachment ``xi``, by reflecting the socle."""
    iv = _as_upset_interval(u)
    entry = socle(reflect_interval(iv), rho, xi)
    degrees = qe.reflect(entry.degrees)
    cosets = qe.canonicalize(project_mod(degrees, rho))
    return TopEntry(rho, xi, qe.canonicalize(degrees), cosets)


def top_table(u: Upset | Interval) -> dict[tuple[Face, Face], TopEntry]:
    iv = _as_upset_interval(u)
    mirrored = socle_table(reflect_interval(iv))
    out: dict[tuple[Face, Face], TopEntry] = {}
    for (rho, xi), e in mirrored.entries.items():
        degrees = qe.canonicalize(qe.reflect(e.degrees))
        out[(rho, xi)] = TopEntry(rho, xi, degrees, qe.canonicalize(project_mod(degrees, rho)))
    return out


def attached_faces(u: Upset | Interval) -> frozenset[Face]:
    return frozenset(e.rho for e in top_table(u).values() if not e.is_zero())


def top_direct(u: Upset, rho: Face, xi: Face) -> TopEntry:
    """Independently coded generator pipeline: lower boundaries beneath the
    faces between ``rho`` and ``xi``, stratified, then minimized along
    ``rho``.  Used to cross-check the reflection route."""
    if not isinstance(u, Upset):
        raise ValidationError("the direct generator route takes an honest upset")
    if not rho.coords <= xi.coords:
        raise FaceError("xi must contain rho")
    stratum = lower_boundary_direct(u, xi).carrier
    for smaller in _faces_between(rho, xi):
        stratum = qe.difference(stratum, lower_boundary_direct(u, smaller).carrier)
        if not stratum.cells:
            break
    degrees = min_along(qe.canonicalize(stratum), rho)
    return TopEntry(rho, xi, degrees, qe.canonicalize(project_mod(degrees, rho)))
