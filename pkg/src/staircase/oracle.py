"""Independent verification: rational-grid sampling with epsilon probes for
the real backend, seeded random instance generators, and cross-checks
between the QE engine, the boundary/socle pipeline, and the discrete
backend.

Every disagreement carries a serialized witness point.  Probe-based checks
use three geometrically decreasing epsilons and only count a point when all
three agree, guarding against probe-too-large artifacts; the symbolic
engine remains the ground truth, so agreeing probes that contradict it are
hard failures while disagreeing probes are merely recorded as inconclusive.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterator, Sequence

from . import qe
from .discrete import (
    DiscreteDecomposition,
    DiscreteDownset,
    discrete_primary_decomposition,
)
from .errors import OracleMismatch, ValidationError
from .geometry import (
    Cell,
    Downset,
    Face,
    Interval,
    PLSet,
    Upset,
    all_faces,
    as_interval,
    indicator_vector,
    interval,
    reflect_downset,
    upper_boundary,
    upset_cone_cell,
)
from .qe import HalfSpace
from .rationals import Vec, dot, frac, vec
from .socle import sigma_closure, socle_table


@dataclass(frozen=True)
class GridSpec:
    """Rational sampling grid with an epsilon for directional probes."""

    lo: Vec
    hi: Vec
    step: Fraction
    probe: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "lo", vec(self.lo))
        object.__setattr__(self, "hi", vec(self.hi))
        object.__setattr__(self, "step", frac(self.step))
        object.__setattr__(self, "probe", frac(self.probe))
        if len(self.lo) != len(self.hi):
            raise ValidationError("grid corners of different dimensions")
        if any(l > h for l, h in zip(self.lo, self.hi)):
            raise ValidationError("grid corners out of order")
        if self.step <= 0:
            raise ValidationError("grid step must be positive")
        if not 0 < self.probe < self.step / 2:
            raise ValidationError("probe must lie in (0, step/2)")

    @property
    def dim(self) -> int:
        return len(self.lo)

    def points(self) -> Iterator[Vec]:
        axes = []
        for l, h in zip(self.lo, self.hi):
            vals = []
            x = l
            while x <= h:
                vals.append(x)
                x += self.step
            axes.append(vals)
        for combo in itertools.product(*axes):
            yield tuple(combo)


def default_grid(dim: int, radius: int = 3) -> GridSpec:
    return GridSpec(
        tuple(Fraction(-radius) for _ in range(dim)),
        tuple(Fraction(radius) for _ in range(dim)),
        Fraction(1, 2),
        Fraction(1, 8),
    )


@dataclass
class Report:
    """Outcome of one oracle pass over a grid."""

    name: str
    checked: int = 0
    inconclusive: int = 0
    mismatches: list[dict] = field(default_factory=list)

    @property
    def clean(self) -> bool:
        return not self.mismatches

    def record(self, point: Vec, expected: object, got: object) -> None:
        self.mismatches.append(
            {
                "point": [str(x) for x in point],
                "expected": expected,
                "got": got,
            }
        )

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "checked": self.checked,
            "inconclusive": self.inconclusive,
            "mismatches": self.mismatches,
        }

    def raise_if_dirty(self) -> None:
        if self.mismatches:
            raise OracleMismatch(
                f"{self.name}: {len(self.mismatches)} mismatches, "
                f"first witness {self.mismatches[0]['point']}"
            )


def sample_check_membership(
    s: PLSet,
    grid: GridSpec,
    predicate: Callable[[Vec], bool] | None = None,
    name: str = "membership",
) -> Report:
    """Compare symbolic membership in ``s`` with ``predicate`` gridwise.

    With the default predicate this checks direct constraint evaluation
    against itself (a sanity pass); callers supply the independent predicate
    for derived sets.
    """
    if grid.dim != s.dim:
        raise ValidationError("grid dimension mismatch")
    pred = predicate or s.contains
    report = Report(name)
    for p in grid.points():
        report.checked += 1
        expected = pred(p)
        got = s.contains(p)
        if expected != got:
            report.record(p, expected, got)
    return report


def _probe_agree(values: Sequence[bool]) -> bool | None:
    return values[0] if all(v == values[0] for v in values) else None


def boundary_probe_check(d: Downset, sigma: Face, grid: GridSpec) -> Report:
    """Upper boundary membership vs the decreasing-epsilon ray probe."""
    bd = upper_boundary(d, sigma).carrier
    report = Report(f"boundary-probe sigma={sorted(sigma.coords)}")
    direction = tuple(-x for x in indicator_vector(sigma))
    for p in grid.points():
        report.checked += 1
        symbolic = bd.contains(p)
        if not sigma.coords:
            probed: bool | None = d.carrier.contains(p)
        else:
            eps = [grid.probe, grid.probe / 2, grid.probe / 4]
            vals = [
                d.carrier.contains(tuple(x + e * v for x, v in zip(p, direction)))
                for e in eps
            ]
            probed = _probe_agree(vals)
        if probed is None:
            report.inconclusive += 1
        elif probed != symbolic:
            report.record(p, probed, symbolic)
    return report


def shape_consistency_check(d: Downset, grid: GridSpec, sigma: Face) -> Report:
    """``a`` in the upper boundary atop ``sigma`` iff ``sigma`` lies in the
    shape at ``a``; exact on every grid point, no probes involved."""
    from .geometry import shape_at

    bd = upper_boundary(d, sigma).carrier
    report = Report(f"boundary-vs-shape sigma={sorted(sigma.coords)}")
    for p in grid.points():
        report.checked += 1
        lhs = bd.contains(p)
        rhs = sigma in shape_at(d, p)
        if lhs != rhs:
            report.record(p, rhs, lhs)
    return report


def _tail_cell(a: Vec, sigma: Face, depth: Fraction) -> Cell:
    """``{a - s'' : s'' in sigma-interior, s'' <= depth * indicator}``."""
    n = sigma.dim
    cons: list[HalfSpace] = []
    for i in range(n):
        e = tuple(Fraction(1 if k == i else 0) for k in range(n))
        neg = tuple(-c for c in e)
        if i in sigma.coords:
            cons.append(HalfSpace(e, a[i], True))  # x_i < a_i
            cons.append(HalfSpace(neg, depth - a[i], False))  # x_i >= a_i - depth
        else:
            cons.append(HalfSpace(e, a[i], False))
            cons.append(HalfSpace(neg, -a[i], False))
    return Cell(n, tuple(cons))


def interval_boundary_probe_check(m: Interval, sigma: Face, grid: GridSpec) -> Report:
    """Boundary degrees of an interval vs exact finite-depth tail queries.

    A degree survives the direct limit along ``sigma`` iff some positive
    depth makes the whole tail region land inside the carrier; the condition
    only improves as the depth shrinks, so testing three decreasing depths
    with exact containment is sound: an agreeing probe that contradicts the
    symbolic answer is a genuine engine failure.
    """
    from .socle import boundary_degrees

    bd = boundary_degrees(m, sigma)
    report = Report(f"interval-boundary-probe sigma={sorted(sigma.coords)}")
    for p in grid.points():
        report.checked += 1
        symbolic = bd.contains(p)
        if not sigma.coords:
            probed: bool | None = m.carrier.contains(p)
        else:
            vals = [
                qe.is_subset(PLSet(m.dim, (_tail_cell(p, sigma, e),)), m.carrier)
                for e in (grid.probe, grid.probe / 2, grid.probe / 4)
            ]
            probed = _probe_agree(vals)
        if probed is None:
            report.inconclusive += 1
        elif probed != symbolic:
            report.record(p, probed, symbolic)
    return report


def sigma_closure_probe_check(
    x: PLSet, sigma: Face, tau: Face, grid: GridSpec
) -> Report:
    """Sigma-closure identity vs direct vicinity sampling.

    A point is probed by intersecting ``x`` with the vicinities spawned at
    three depths along the face interior; vicinity membership shrinks as the
    depth does, and agreement across the three depths is required.
    """
    closed = sigma_closure(x, sigma, tau)
    qdim = x.dim
    from .socle import _quotient_face

    s = _quotient_face(sigma, tau, qdim)
    report = Report(
        f"sigma-closure-probe tau={sorted(tau.coords)} sigma={sorted(sigma.coords)}"
    )
    interior = indicator_vector(s)
    cone = upset_cone_cell(s)
    for p in grid.points():
        report.checked += 1
        symbolic = closed.contains(p)
        vals = []
        for e in (grid.probe, grid.probe / 2, grid.probe / 4):
            u = tuple(px - e * iv for px, iv in zip(p, interior))
            vicinity = Cell(
                qdim,
                tuple(
                    HalfSpace(h.normal, h.offset + dot(h.normal, u), h.strict)
                    for h in cone.constraints
                ),
            )
            vals.append(not qe.is_empty(qe.intersect(x, PLSet(qdim, (vicinity,)))))
        probed = _probe_agree(vals)
        if probed is None:
            report.inconclusive += 1
        elif probed != symbolic:
            report.record(p, probed, symbolic)
    return report


# ---------------------------------------------------------------------------
# Random instances


def _random_fraction(rng: random.Random, span: int = 3, denominators=(1, 1, 2, 4)) -> Fraction:
    den = rng.choice(denominators)
    num = rng.randint(-span * den, span * den)
    return Fraction(num, den)


def _random_halfspace(rng: random.Random, n: int, nonnegative_normal: bool) -> HalfSpace:
    while True:
        if nonnegative_normal:
            normal = tuple(Fraction(rng.randint(0, 2)) for _ in range(n))
        else:
            normal = tuple(Fraction(rng.randint(-2, 2)) for _ in range(n))
        if any(c != 0 for c in normal):
            break
    return HalfSpace(normal, _random_fraction(rng), rng.random() < 0.5)


def random_downset(seed: int, n: int, cell_budget: int = 6) -> Downset:
    """Seed-deterministic random downset: random half-space stacks, each
    downward-closed through a random shape cone, unioned and canonicalized.
    Regenerates with fewer pieces when the canonical form exceeds the
    budget."""
    rng = random.Random(seed)
    for attempt in range(50):
        pieces = rng.randint(1, max(1, cell_budget))
        cells = []
        for _ in range(pieces):
            kind = rng.random()
            if kind < 0.45:
                stack = Cell(
                    n,
                    tuple(
                        _random_halfspace(rng, n, nonnegative_normal=True)
                        for _ in range(rng.randint(1, 2))
                    ),
                )
            else:
                point = tuple(_random_fraction(rng) for _ in range(n))
                stack = Cell(
                    n,
                    tuple(
                        HalfSpace(
                            tuple(
                                Fraction(1 if k == i else 0) for k in range(n)
                            ),
                            point[i],
                            rng.random() < 0.5,
                        )
                        for i in range(n)
                    ),
                )
            sigma = Face(n, frozenset(i for i in range(n) if rng.random() < 0.5))
            hang = Cell(
                n, tuple(h.reflected() for h in upset_cone_cell(sigma).constraints)
            )
            closed_down = qe.minkowski(PLSet(n, (stack,)), hang)
            cells.extend(closed_down.cells)
        candidate = qe.canonicalize(PLSet(n, tuple(cells)))
        if 0 < len(candidate.cells) <= cell_budget:
            return Downset(candidate)
    raise ValidationError(f"could not generate a downset within budget {cell_budget}")


def random_upset(seed: int, n: int, cell_budget: int = 6) -> Upset:
    return reflect_downset(random_downset(seed, n, cell_budget))


def random_interval(seed: int, n: int, cell_budget: int = 6) -> Interval:
    """Random nonempty interval: meet of a random downset and upset."""
    for bump in range(200):
        d = random_downset(seed * 1000003 + 2 * bump, n, cell_budget)
        u = random_upset(seed * 7777783 + 2 * bump + 1, n, cell_budget)
        carrier = qe.intersect(u.carrier, d.carrier)
        if not qe.is_empty(carrier):
            return interval(u, d)
    raise ValidationError("could not generate a nonempty interval")


# ---------------------------------------------------------------------------
# Real/discrete correspondence


def real_staircase(decomposition: DiscreteDecomposition) -> Downset:
    """The closed real staircase spanned by the discrete cogenerator
    classes: one closed cell ``{x_j <= rep_j off tau}`` per class."""
    n = decomposition.dim
    cells = []
    for tau, reps in decomposition.cogenerators.items():
        off = sorted(set(range(n)) - tau)
        for rep in reps:
            cons = tuple(
                HalfSpace(
                    tuple(Fraction(1 if k == j else 0) for k in range(n)),
                    Fraction(rep[j]),
                    False,
                )
                for j in off
            )
            cells.append(Cell(n, cons))
    return Downset(PLSet(n, tuple(cells)))


def correspondence_check(d: DiscreteDownset) -> Report:
    """Closed socle strata of the real staircase must project to exactly the
    discrete cogenerator cosets, face by face."""
    decomposition = discrete_primary_decomposition(d)
    report = Report("real-discrete-correspondence")
    staircase = real_staircase(decomposition)
    n = d.dim
    for tau in all_faces(n):
        report.checked += 1
        entry = socle_table_entry_closed(staircase, tau)
        off = sorted(set(range(n)) - tau.coords)
        reps = decomposition.cogenerators.get(frozenset(tau.coords), ())
        points = [tuple(Fraction(r[j]) for j in off) for r in reps]
        target = qe.empty(n - len(tau.coords))
        for p in points:
            target = qe.union(target, qe.point_set(p))
        if not qe.equals(entry, target):
            w = qe.witness(qe.symmetric_difference(entry, target))
            report.record(w or (), "discrete cosets", "real closed stratum")
    return report


def socle_table_entry_closed(d: Downset, tau: Face) -> PLSet:
    """Cosets of the closed socle stratum (nadir equal to the face)."""
    from .socle import socle

    return socle(d, tau, tau).cosets


# ---------------------------------------------------------------------------
# Instance verification (the CLI `verify` entry point)


@dataclass
class VerifyReport:
    reports: list[Report] = field(default_factory=list)

    @property
    def clean(self) -> bool:
        return all(r.clean for r in self.reports)

    def to_json(self) -> dict:
        return {
            "clean": self.clean,
            "checks": [r.to_json() for r in self.reports],
        }


def verify_instance(
    obj: Downset | Upset | Interval | DiscreteDownset,
    grid: GridSpec | None = None,
) -> VerifyReport:
    """Run the oracle suite appropriate to the instance kind."""
    out = VerifyReport()
    if isinstance(obj, DiscreteDownset):
        decomposition = discrete_primary_decomposition(obj)
        from .discrete import is_irredundant, socle_isomorphism_check

        r = Report("discrete-irredundant")
        r.checked = len(decomposition.irreducible_pieces())
        if not is_irredundant(obj, decomposition.irreducible_pieces()):
            r.record((), True, False)
        out.reports.append(r)
        r2 = Report("discrete-socle-isomorphism")
        r2.checked = 1
        if not socle_isomorphism_check(obj, decomposition):
            r2.record((), True, False)
        out.reports.append(r2)
        out.reports.append(correspondence_check(obj))
        return out

    if isinstance(obj, Upset):
        mirrored = reflect_upset_to_downset(obj)
        out.reports.extend(_verify_real(mirrored, grid))
        out.reports.append(_top_routes_report(obj))
        return out
    if isinstance(obj, (Downset, Interval)):
        out.reports.extend(_verify_real(obj, grid))
        return out
    raise ValidationError(f"cannot verify a {type(obj).__name__}")


def _top_routes_report(u: Upset) -> Report:
    """Generator functor computed by reflection vs the direct pipeline."""
    from .socle import top, top_direct

    report = Report("top-route-agreement")
    for rho in all_faces(u.dim):
        for xi in all_faces(u.dim):
            if not rho.coords <= xi.coords:
                continue
            report.checked += 1
            a = top(u, rho, xi)
            b = top_direct(u, rho, xi)
            if not (qe.equals(a.degrees, b.degrees) and qe.equals(a.cosets, b.cosets)):
                w = qe.witness(qe.symmetric_difference(a.degrees, b.degrees))
                report.record(w or (), "reflection route", "direct route")
    return report


def reflect_upset_to_downset(u: Upset) -> Downset:
    return Downset(qe.reflect(u.carrier))


def _verify_real(m: Downset | Interval, grid: GridSpec | None) -> list[Report]:
    from .decompose import irreducible_family, primary_decomposition, reconstruct
    from .socle import validate_socle_table

    iv = as_interval(m)
    g = grid or default_grid(iv.dim)
    reports: list[Report] = [sample_check_membership(iv.carrier, g)]
    if isinstance(m, Downset):
        for sigma in all_faces(iv.dim):
            reports.append(boundary_probe_check(m, sigma, g))
        reports.append(shape_consistency_check(m, g, Face(iv.dim, frozenset(range(iv.dim)))))
        from .geometry import frontier

        frontier(m)  # raises on two-route disagreement
    else:
        for sigma in all_faces(iv.dim):
            reports.append(interval_boundary_probe_check(iv, sigma, g))
    table = socle_table(m)
    validate_socle_table(table)
    structural = Report("socle-structure")
    structural.checked = len(table.entries)
    reports.append(structural)
    decomposition = primary_decomposition(m)  # raises on union failure
    recon = reconstruct(irreducible_family(m, table=decomposition.table), m)
    rr = Report("irreducible-reconstruction")
    rr.checked = 1
    if not qe.equals(recon, iv.carrier):
        rr.record(qe.witness(qe.symmetric_difference(recon, iv.carrier)) or (), True, False)
    reports.append(rr)
    for entry in table.nonzero_items():
        qdim = entry.cosets.dim
        if qdim == 0:
            continue
        sub = GridSpec(
            g.lo[:qdim], g.hi[:qdim], g.step * 2, g.probe
        )
        reports.append(
            sigma_closure_probe_check(entry.cosets, entry.sigma, entry.tau, sub)
        )
    return reports
