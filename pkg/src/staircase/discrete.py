"""Discrete backend: monomial ideals in N^n and their staircases.

The object decomposed is the monomial interval ``J = N^n minus the ideal's
exponent set``, the standard-grade analogue of the real PL downsets: its
closed cogenerators along a face generate the canonical minimal primary
decomposition and the unique irredundant irreducible decomposition.  All
quantifiers reduce to generator comparisons; box scans are exact because
every membership predicate in sight is a boolean combination of coordinate
thresholds bounded by the generator exponents, so coordinates can be clamped
to ``B + 1`` without changing any truth value.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterable, Mapping, Sequence

from .errors import InputFormatError, InternalCheckFailure, ValidationError

IVec = tuple[int, ...]


def _leq(a: Sequence[int], b: Sequence[int]) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _minimalize(gens: Iterable[IVec]) -> tuple[IVec, ...]:
    gens = sorted(set(tuple(g) for g in gens))
    keep = []
    for g in gens:
        if not any(_leq(h, g) for h in gens if h != g and _leq(h, g)):
            keep.append(g)
    # a generator equal to another was deduped; dominated ones dropped
    return tuple(g for g in keep if not any(_leq(h, g) and h != g for h in keep))


@dataclass(frozen=True)
class DiscreteIdeal:
    """Monomial ideal given by finitely many exponent vectors in N^n."""

    dim: int
    generators: tuple[IVec, ...]

    def __post_init__(self) -> None:
        gens = []
        for g in self.generators:
            t = tuple(int(x) for x in g)
            if len(t) != self.dim:
                raise InputFormatError(
                    f"generator {g} has length {len(t)}, expected {self.dim}"
                )
            if any(x < 0 for x in t):
                raise InputFormatError(f"generator {g} has negative exponents")
            gens.append(t)
        object.__setattr__(self, "generators", _minimalize(gens))

    def in_ideal(self, a: Sequence[int]) -> bool:
        return any(_leq(g, a) for g in self.generators)

    def bound(self) -> IVec:
        """Componentwise maximum of the generators (zero when none)."""
        if not self.generators:
            return tuple(0 for _ in range(self.dim))
        return tuple(max(g[i] for g in self.generators) for i in range(self.dim))


@dataclass(frozen=True)
class DiscreteDownset:
    """The Z^n complement of the ideal's exponent upset.

    Membership is decided by generator comparison; the monomial interval
    ``J = D ∩ N^n`` is the part carrying the decomposition theory.
    """

    ideal: DiscreteIdeal

    @property
    def dim(self) -> int:
        return self.ideal.dim

    def contains(self, a: Sequence[int]) -> bool:
        return not self.ideal.in_ideal(a)

    def in_interval(self, a: Sequence[int]) -> bool:
        return all(x >= 0 for x in a) and not self.ideal.in_ideal(a)


def closed_cogenerators(
    d: DiscreteDownset, tau: frozenset[int] | Iterable[int]
) -> tuple[IVec, ...]:
    """Canonical representatives of the closed cogenerator cosets of the
    monomial interval along ``tau``.

    A representative satisfies: it lies in the interval, stepping up by any
    unit vector off ``tau`` leaves the interval, and no generator is below it
    on the coordinates off ``tau`` (so the whole forward ``tau``-orbit stays
    inside).  Coordinates on ``tau`` are pinned to ``B_j + 1``, inside the
    stable region; the remaining coordinates are scanned over ``[-1, B_j]``,
    which covers every possible representative.
    """
    tau = frozenset(int(t) for t in tau)
    n = d.dim
    if not tau <= set(range(n)):
        raise ValidationError(f"face {sorted(tau)} out of range for n={n}")
    bound = d.ideal.bound()
    off = sorted(set(range(n)) - tau)
    reps: list[IVec] = []
    for combo in itertools.product(*(range(-1, bound[j] + 1) for j in off)):
        a = [0] * n
        for j in tau:
            a[j] = bound[j] + 1
        for j, v in zip(off, combo):
            a[j] = v
        a_t = tuple(a)
        if not d.in_interval(a_t):
            continue
        stable = not any(
            all(g[j] <= a_t[j] for j in off) for g in d.ideal.generators
        )
        if not stable:
            continue
        annihilated = True
        for j in off:
            step = tuple(x + (1 if k == j else 0) for k, x in enumerate(a_t))
            if d.in_interval(step):
                annihilated = False
                break
        if annihilated:
            reps.append(a_t)
    return tuple(sorted(reps))


def scan_cogenerators(
    d: DiscreteDownset, tau: frozenset[int] | Iterable[int], margin: int = 2
) -> tuple[IVec, ...]:
    """Brute-force oracle for :func:`closed_cogenerators`.

    Probes membership pointwise with no generator arithmetic: persistence
    along ``tau`` is checked by stepping to the clamp bound ``B + margin``,
    which is exact because all membership thresholds are at most ``B``.
    """
    tau = frozenset(int(t) for t in tau)
    n = d.dim
    bound = d.ideal.bound()
    off = sorted(set(range(n)) - tau)
    tau_sorted = sorted(tau)
    reps: list[IVec] = []
    for combo in itertools.product(*(range(-1, bound[j] + margin) for j in off)):
        a = [0] * n
        for j in tau:
            a[j] = bound[j] + 1
        for j, v in zip(off, combo):
            a[j] = v
        a_t = tuple(a)
        if not d.in_interval(a_t):
            continue
        ok = all(
            not d.in_interval(tuple(x + (1 if k == j else 0) for k, x in enumerate(a_t)))
            for j in off
        )
        if not ok:
            continue
        stable = True
        for steps in itertools.product(
            *(range(0, bound[j] + margin + 1) for j in tau_sorted)
        ):
            b = list(a_t)
            for j, s in zip(tau_sorted, steps):
                b[j] += s
            if not d.in_interval(tuple(b)):
                stable = False
                break
        if stable:
            reps.append(a_t)
    # canonical reps have tau coords pinned; dedup by off-tau coordinates
    seen = {}
    for r in reps:
        key = tuple(r[j] for j in off)
        seen.setdefault(key, r)
    return tuple(sorted(seen.values()))


# ---------------------------------------------------------------------------
# Decompositions


@dataclass(frozen=True)
class DiscreteComponent:
    """Union over cogenerator cosets of ``(rep + Z*tau - N^n) ∩ J``."""

    ideal: DiscreteIdeal
    tau: frozenset[int]
    reps: tuple[IVec, ...]

    @property
    def dim(self) -> int:
        return self.ideal.dim

    def contains(self, a: Sequence[int]) -> bool:
        if not DiscreteDownset(self.ideal).in_interval(a):
            return False
        off = [j for j in range(self.dim) if j not in self.tau]
        return any(all(a[j] <= rep[j] for j in off) for rep in self.reps)

    def complement_ideal_generators(self) -> tuple[IVec, ...]:
        """Minimal generators of the monomial ideal ``N^n minus this set``."""
        box = _component_box(self.ideal)
        mins: list[IVec] = []
        for a in itertools.product(*(range(0, b + 2) for b in box)):
            if self.contains(a):
                continue
            is_min = all(
                a[j] == 0 or self.contains(tuple(x - (1 if k == j else 0) for k, x in enumerate(a)))
                for j in range(self.dim)
            )
            if is_min:
                mins.append(tuple(a))
        return _minimalize(mins)


def _component_box(ideal: DiscreteIdeal) -> IVec:
    return tuple(b + 1 for b in ideal.bound())


@dataclass(frozen=True)
class DiscreteDecomposition:
    ideal: DiscreteIdeal
    components: Mapping[frozenset[int], DiscreteComponent]
    cogenerators: Mapping[frozenset[int], tuple[IVec, ...]]

    @property
    def dim(self) -> int:
        return self.ideal.dim

    def irreducible_pieces(self) -> list[tuple[frozenset[int], IVec]]:
        out = []
        for tau in sorted(self.cogenerators, key=lambda t: (len(t), sorted(t))):
            for rep in self.cogenerators[tau]:
                out.append((tau, rep))
        return out


def _piece_contains(
    ideal: DiscreteIdeal, tau: frozenset[int], rep: IVec, a: Sequence[int]
) -> bool:
    if not DiscreteDownset(ideal).in_interval(a):
        return False
    return all(a[j] <= rep[j] for j in range(ideal.dim) if j not in tau)


def _scan_box(dim: int, lo: int, his: Sequence[int]) -> Iterable[IVec]:
    return itertools.product(*(range(lo, h + 1) for h in his))


def discrete_primary_decomposition(d: DiscreteDownset) -> DiscreteDecomposition:
    """Canonical minimal primary decomposition of the monomial interval.

    The union of the components is verified to equal the interval both on a
    margin box around the staircase and on the clamp box that decides the
    predicates symbolically.
    """
    n = d.dim
    cogens: dict[frozenset[int], tuple[IVec, ...]] = {}
    for size in range(n + 1):
        for combo in itertools.combinations(range(n), size):
            tau = frozenset(combo)
            reps = closed_cogenerators(d, tau)
            if reps:
                cogens[tau] = reps
    components = {
        tau: DiscreteComponent(d.ideal, tau, reps) for tau, reps in cogens.items()
    }
    bound = d.ideal.bound()
    # margin box: negative margin 2, upper margin 2
    for a in _scan_box(n, -2, tuple(b + 2 for b in bound)):
        lhs = d.in_interval(a)
        rhs = any(c.contains(a) for c in components.values())
        if lhs != rhs:
            raise InternalCheckFailure(
                f"discrete primary union mismatch at {a}: interval={lhs} union={rhs}"
            )
    # clamp box: coordinates above B+1 are equivalent to B+1 for every
    # predicate involved, so this scan decides the identity over all of Z^n
    for a in _scan_box(n, 0, tuple(b + 1 for b in bound)):
        lhs = d.in_interval(a)
        rhs = any(c.contains(a) for c in components.values())
        if lhs != rhs:
            raise InternalCheckFailure(
                f"discrete primary union mismatch at clamp point {a}"
            )
    return DiscreteDecomposition(d.ideal, components, cogens)


def discrete_irreducible_decomposition(
    d: DiscreteDownset,
) -> list[tuple[frozenset[int], IVec]]:
    return discrete_primary_decomposition(d).irreducible_pieces()


def is_irredundant(d: DiscreteDownset, pieces: Sequence[tuple[frozenset[int], IVec]]) -> bool:
    """Each irreducible piece contains an interval point no other piece has."""
    n = d.dim
    bound = d.ideal.bound()
    for i, (tau, rep) in enumerate(pieces):
        found = False
        for a in _scan_box(n, 0, tuple(b + 1 for b in bound)):
            if not _piece_contains(d.ideal, tau, rep, a):
                continue
            if not any(
                _piece_contains(d.ideal, t2, r2, a)
                for j, (t2, r2) in enumerate(pieces)
                if j != i
            ):
                found = True
                break
        if not found:
            return False
    return True


def component_cogenerators(
    member: Callable[[Sequence[int]], bool],
    dim: int,
    bound: IVec,
    tau: frozenset[int],
    margin: int = 2,
) -> tuple[IVec, ...]:
    """Closed cogenerator classes of an arbitrary box-determined discrete
    set, keyed by their off-``tau`` coordinates.

    ``member`` must be a boolean combination of coordinate thresholds not
    exceeding ``bound``; clamping to ``bound + margin`` is then exact, so the
    persistence check along ``tau`` only needs the corners of a finite box.
    """
    off = sorted(set(range(dim)) - tau)
    tau_sorted = sorted(tau)
    classes: dict[IVec, IVec] = {}
    for combo in itertools.product(*(range(-1, bound[j] + margin) for j in off)):
        a = [0] * dim
        for j in tau:
            a[j] = bound[j] + margin
        for j, v in zip(off, combo):
            a[j] = v
        a_t = tuple(a)
        if not member(a_t):
            continue
        if any(
            member(tuple(x + (1 if k == j else 0) for k, x in enumerate(a_t)))
            for j in off
        ):
            continue
        stable = True
        for steps in itertools.product(
            *(range(0, bound[j] + margin + 1) for j in tau_sorted)
        ):
            b = list(a_t)
            for j, s in zip(tau_sorted, steps):
                b[j] += s
            if not member(tuple(b)):
                stable = False
                break
        if stable:
            classes.setdefault(tuple(a_t[j] for j in off), a_t)
    return tuple(sorted(classes.values()))


def socle_isomorphism_check(
    d: DiscreteDownset, decomposition: DiscreteDecomposition
) -> bool:
    """Closed cogenerator class multisets of the base must equal the
    disjoint union of the components' classes, face by face."""
    n = d.dim
    bound = _component_box(d.ideal)
    for size in range(n + 1):
        for combo in itertools.combinations(range(n), size):
            tau = frozenset(combo)
            off = sorted(set(range(n)) - tau)
            base = sorted(
                tuple(r[j] for j in off) for r in closed_cogenerators(d, tau)
            )
            pooled: list[IVec] = []
            for comp in decomposition.components.values():
                for rep in component_cogenerators(
                    comp.contains, n, bound, tau
                ):
                    pooled.append(tuple(rep[j] for j in off))
            if base != sorted(pooled):
                return False
    return True
