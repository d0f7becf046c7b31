"""Parameter sweeps, level-crossing detection, and criticality finders.

Sweeps walk a one- or two-axis grid over the couplings (J), hopping (W),
field (B), or temperature (T) and record one concurrence value per cell.
The crossing finder locates sudden ground-state changes along the field
axis through fidelity drops between adjacent samples; the death finder
brackets the temperature above which a pair concurrence stays zero.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

from .entanglement import (
    min_single_qubit_concurrence,
    pair_concurrence,
    single_qubit_concurrence,
)
from .errors import PurityError
from .model import ChainSpec, GroundSolution, ground_state
from .thermal import thermal_pair_concurrence

AXIS_NAMES = ("J", "W", "B", "T")
_SPEC_FIELD = {"J": "kondo", "W": "hopping", "B": "field"}

# concurrence at or below this level counts as absent
ZERO_CONCURRENCE = 1e-6
# ground-state fidelity below this level flags a crossing
FIDELITY_DROP = 0.5


@dataclass(frozen=True)
class AxisSpec:
    """One swept parameter: inclusive start, stop, and positive step."""

    name: str
    start: float
    stop: float
    step: float

    def __post_init__(self) -> None:
        if self.name not in AXIS_NAMES:
            raise ValueError(f"axis name must be one of {AXIS_NAMES}, got {self.name!r}")
        if self.step <= 0:
            raise ValueError(f"axis step must be > 0, got {self.step}")
        if self.start > self.stop:
            raise ValueError(f"axis start {self.start} exceeds stop {self.stop}")

    def values(self) -> list[float]:
        count = int(math.floor((self.stop - self.start) / self.step + 1e-9)) + 1
        return [self.start + k * self.step for k in range(count)]


@dataclass(frozen=True)
class Quantity:
    """Selector for the scanned observable: a qubit pair or a single pivot."""

    kind: str
    qubits: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.kind == "pair":
            if len(self.qubits) != 2 or self.qubits[0] == self.qubits[1]:
                raise ValueError("pair quantity needs two distinct qubits")
        elif self.kind == "single":
            if len(self.qubits) != 1:
                raise ValueError("single quantity needs exactly one pivot qubit")
        else:
            raise ValueError(f"quantity kind must be 'pair' or 'single', got {self.kind!r}")

    @classmethod
    def pair(cls, qubit_a: int, qubit_b: int) -> "Quantity":
        return cls(kind="pair", qubits=(qubit_a, qubit_b))

    @classmethod
    def single(cls, pivot: int) -> "Quantity":
        return cls(kind="single", qubits=(pivot,))


@dataclass(frozen=True)
class ScanGrid:
    """Grid description: fixed chain template, observable, swept axes, and
    the temperature used wherever T is not itself swept."""

    template: ChainSpec
    quantity: Quantity
    axes: tuple[AxisSpec, ...]
    temperature: float = 0.0

    def __post_init__(self) -> None:
        if not 1 <= len(self.axes) <= 2:
            raise ValueError(f"grids sweep one or two axes, got {len(self.axes)}")
        names = [axis.name for axis in self.axes]
        if len(set(names)) != len(names):
            raise ValueError(f"swept axis names must be distinct, got {names}")
        if self.temperature < 0:
            raise ValueError(f"temperature must be >= 0, got {self.temperature}")


@dataclass(frozen=True)
class ScanRecord:
    """One grid cell: swept values plus the computed quantities."""

    values: tuple[float, ...]
    quantity: float
    ground_energy: float
    degeneracy: int


@dataclass(frozen=True)
class Crossing:
    """One detected ground-state change along the field axis."""

    b_value: float
    fidelity_drop: float
    post_crossing_single_qubit_concurrence: float


@dataclass(frozen=True)
class CrossingReport:
    """All crossings found below b_max, ascending in field; ``b_c`` is the
    first crossing that leaves the chain unentangled, when one exists."""

    crossings: tuple[Crossing, ...]
    b_c: float | None


def ground_quantity(solution: GroundSolution, quantity: Quantity) -> float:
    """Evaluate an observable on a ground-state solution.

    Pair concurrences use the canonical representative state.  The
    single-qubit concurrence of an exactly degenerate level is evaluated
    as its minimum over the ground manifold: the entanglement any state of
    that energy must carry.
    """
    if quantity.kind == "pair":
        return pair_concurrence(solution.state, *quantity.qubits)
    pivot = quantity.qubits[0]
    if solution.degeneracy == 1:
        return single_qubit_concurrence(solution.state, pivot)
    manifold = solution.spectrum.eigenvectors[:, : solution.degeneracy]
    return min_single_qubit_concurrence(manifold, pivot)


def evaluate_point(spec: ChainSpec, quantity: Quantity, temperature: float) -> ScanRecord:
    """Evaluate one parameter point; ``values`` is left empty."""
    solution = ground_state(spec)
    if temperature == 0:
        value = ground_quantity(solution, quantity)
    elif quantity.kind == "pair":
        value = thermal_pair_concurrence(spec, *quantity.qubits, temperature)
    else:
        raise PurityError(
            "single-qubit concurrence is defined for pure states and cannot "
            "be scanned at finite temperature"
        )
    return ScanRecord(
        values=(),
        quantity=value,
        ground_energy=solution.energy,
        degeneracy=solution.degeneracy,
    )


def sweep(grid: ScanGrid) -> list[ScanRecord]:
    """Evaluate every grid cell, ordered lexicographically by axis values."""
    records: list[ScanRecord] = []
    axis_values = [axis.values() for axis in grid.axes]
    names = [axis.name for axis in grid.axes]

    def cell(values: tuple[float, ...]) -> ScanRecord:
        updates = {}
        temperature = grid.temperature
        for name, value in zip(names, values):
            if name == "T":
                temperature = value
            else:
                updates[_SPEC_FIELD[name]] = value
        spec = replace(grid.template, **updates) if updates else grid.template
        record = evaluate_point(spec, grid.quantity, temperature)
        return replace(record, values=values)

    if len(axis_values) == 1:
        for v in axis_values[0]:
            records.append(cell((v,)))
    else:
        for v1 in axis_values[0]:
            for v2 in axis_values[1]:
                records.append(cell((v1, v2)))
    return records


def find_crossings(
    spec_template: ChainSpec, b_max: float, coarse_step: float, tol: float
) -> CrossingReport:
    """Locate ground-state changes as the field grows from 0 to b_max.

    Adjacent field samples whose ground states overlap with fidelity below
    0.5 bracket a crossing; each bracket is narrowed by bisection to width
    <= tol.  Whenever a sample lands inside the degeneracy window of a
    crossing it is nudged up by tol/10 before evaluation, so the measures
    only ever see nondegenerate states.  After each crossing the
    single-qubit concurrence of the first tau qubit is evaluated at
    b + 10 tol; ``b_c`` is the first crossing where it drops to zero.
    The Ising variant evolves analytically in the field and comes back
    with no crossings and ``b_c`` absent.
    """
    if b_max <= 0:
        raise ValueError(f"b_max must be > 0, got {b_max}")
    if not 0 < coarse_step <= b_max:
        raise ValueError(f"coarse_step must lie in (0, b_max], got {coarse_step}")
    if tol <= 0:
        raise ValueError(f"tol must be > 0, got {tol}")

    def solve(b: float) -> GroundSolution:
        solution = ground_state(replace(spec_template, field=b))
        if solution.degeneracy > 1:
            solution = ground_state(replace(spec_template, field=b + tol / 10))
        return solution

    def fidelity(x: GroundSolution, y: GroundSolution) -> float:
        return float(abs(np.vdot(x.state, y.state)) ** 2)

    samples = [k * coarse_step for k in range(int(math.floor(b_max / coarse_step)) + 1)]
    if samples[-1] < b_max - 1e-12 * max(1.0, b_max):
        samples.append(b_max)
    solutions = [solve(b) for b in samples]

    crossings: list[Crossing] = []
    for k in range(len(samples) - 1):
        if fidelity(solutions[k], solutions[k + 1]) >= FIDELITY_DROP:
            continue
        lo, hi = samples[k], samples[k + 1]
        sol_lo, sol_hi = solutions[k], solutions[k + 1]
        while hi - lo > tol:
            mid = 0.5 * (lo + hi)
            sol_mid = solve(mid)
            if fidelity(sol_lo, sol_mid) < FIDELITY_DROP:
                hi, sol_hi = mid, sol_mid
            else:
                lo, sol_lo = mid, sol_mid
        b_cross = 0.5 * (lo + hi)
        post = ground_quantity(solve(b_cross + 10 * tol), Quantity.single(0))
        crossings.append(
            Crossing(
                b_value=b_cross,
                fidelity_drop=fidelity(sol_lo, sol_hi),
                post_crossing_single_qubit_concurrence=post,
            )
        )

    b_c = None
    for crossing in crossings:
        if crossing.post_crossing_single_qubit_concurrence <= ZERO_CONCURRENCE:
            b_c = crossing.b_value
            break
    return CrossingReport(crossings=tuple(crossings), b_c=b_c)


def fit_bc_line(j_values: list[float], tol: float) -> float:
    """Least-squares through-origin slope of the critical field along J = W.

    Each point runs the crossing finder on a two-site isotropic ring with
    both couplings set to j; a point without a terminal crossing raises.
    """
    if not j_values:
        raise ValueError("fit_bc_line needs at least one coupling value")
    if any(j <= 0 for j in j_values):
        raise ValueError(f"all couplings must be > 0, got {j_values}")
    numerator = 0.0
    denominator = 0.0
    for j in j_values:
        template = ChainSpec(n_sites=2, hopping=j, kondo=j, field=0.0, anisotropy="xy")
        report = find_crossings(template, b_max=2.2 * j, coarse_step=j / 25, tol=tol)
        if report.b_c is None:
            raise ValueError(f"no entanglement-terminating crossing found for j = {j}")
        numerator += j * report.b_c
        denominator += j * j
    return numerator / denominator


def find_death_temperature(
    spec: ChainSpec,
    qubit_a: int,
    qubit_b: int,
    t_max: float,
    tol: float,
    samples: int = 161,
) -> float | None:
    """Smallest temperature above which a pair concurrence stays zero.

    Scans a uniform grid of positive temperatures up to t_max, takes the
    last sample still above the zero threshold, and bisects the following
    interval to width <= tol; the grid tail beyond that sample doubles as
    the verification that the concurrence never revives below t_max.
    Returns None when the concurrence is zero at every sample or still
    alive at t_max.
    """
    if t_max <= 0:
        raise ValueError(f"t_max must be > 0, got {t_max}")
    if tol <= 0:
        raise ValueError(f"tol must be > 0, got {tol}")
    if samples < 3:
        raise ValueError(f"samples must be >= 3, got {samples}")

    temperatures = [t_max * k / (samples - 1) for k in range(1, samples)]
    values = [
        thermal_pair_concurrence(spec, qubit_a, qubit_b, t) for t in temperatures
    ]
    alive = [k for k, c in enumerate(values) if c > ZERO_CONCURRENCE]
    if not alive:
        return None
    last = alive[-1]
    if last == len(temperatures) - 1:
        return None
    lo, hi = temperatures[last], temperatures[last + 1]
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if thermal_pair_concurrence(spec, qubit_a, qubit_b, mid) > ZERO_CONCURRENCE:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)
