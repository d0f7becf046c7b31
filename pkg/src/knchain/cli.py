"""Command-line front end.

Four subcommands, all emitting plain CSV with '.' decimals and LF line
endings so repeated invocations are byte-identical:

  ground          energy, degeneracy, and every concurrence of one chain
  figure          grid data behind the survey figures (2..13)
  critical-field  field-axis crossing report and the terminal field b_c
  verify          closed-form and monogamy cross-check suite

Exit codes: 0 success, 1 usage error, 2 numerical or capacity error.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass

import numpy as np

from .entanglement import ckw_audit, pair_concurrence
from .errors import (
    CapacityError,
    ConvergenceError,
    HermiticityError,
    PositivityError,
    PurityError,
)
from .model import (
    ChainSpec,
    closed_c_ac_x,
    closed_lambda_xy,
    ground_state,
)
from .scan import (
    AxisSpec,
    Quantity,
    ScanGrid,
    find_crossings,
    ground_quantity,
    sweep,
)

DEFAULT_PRECISION = 12
DEFAULT_STEPS = 101


class _Parser(argparse.ArgumentParser):
    """argparse exits with status 2 on bad flags; remap to 1 (usage error)."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _fmt(value, precision: int) -> str:
    if isinstance(value, str):
        return value
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    return format(float(value) + 0.0, f".{precision}g")


def _emit(lines: list[str], out_path: str | None) -> None:
    text = "\n".join(lines) + "\n"
    if out_path:
        with open(out_path, "w", newline="") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _qubit_label(qubit: int) -> str:
    site = qubit // 2 + 1
    return f"tau{site}" if qubit % 2 == 0 else f"s{site}"


def _spec_from_args(args) -> ChainSpec:
    return ChainSpec(
        n_sites=args.n_sites,
        hopping=args.w,
        kondo=args.j,
        field=args.b,
        anisotropy=args.anisotropy,
        boundary=args.boundary,
    )


def _add_model_args(parser, with_field: bool = True) -> None:
    parser.add_argument("--n-sites", type=int, default=2, help="number of sites (<= 6)")
    parser.add_argument("--anisotropy", choices=("xy", "x"), default="xy")
    parser.add_argument("--j", type=float, default=1.0, help="exchange coupling J")
    parser.add_argument("--w", type=float, default=1.0, help="hopping energy W")
    if with_field:
        parser.add_argument("--b", type=float, default=0.0, help="longitudinal field B")
    parser.add_argument("--boundary", choices=("periodic", "open"), default="periodic")


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def _add_output_args(parser) -> None:
    parser.add_argument("--out", default=None, help="write CSV here instead of stdout")
    parser.add_argument(
        "--precision", type=_positive_int, default=DEFAULT_PRECISION, help="significant digits"
    )


# ---------------------------------------------------------------------------
# ground


def cmd_ground(args) -> int:
    spec = _spec_from_args(args)
    solution = ground_state(spec)
    rows: list[tuple[str, object]] = [
        ("energy", solution.energy),
        ("degeneracy", solution.degeneracy),
    ]
    nq = spec.n_qubits
    for a in range(nq):
        for b in range(a + 1, nq):
            rows.append(
                (f"c_{_qubit_label(a)}_{_qubit_label(b)}", pair_concurrence(solution.state, a, b))
            )
    for q in range(nq):
        rows.append(
            (f"c_single_{_qubit_label(q)}", ground_quantity(solution, Quantity.single(q)))
        )
    lines = ["quantity,value"]
    lines += [f"{name},{_fmt(value, args.precision)}" for name, value in rows]
    _emit(lines, args.out)
    return 0


# ---------------------------------------------------------------------------
# figure


@dataclass(frozen=True)
class _Axis:
    name: str
    start: float
    stop: float
    steps: int

    def __post_init__(self) -> None:
        if self.steps < 1:
            raise ValueError(f"axis {self.name!r} needs at least one step, got {self.steps}")

    def values(self) -> list[float]:
        if self.steps == 1:
            return [self.start]
        return list(np.linspace(self.start, self.stop, self.steps))

    def to_axis_spec(self) -> AxisSpec:
        if self.steps == 1:
            return AxisSpec(self.name.upper(), self.start, self.start, 1.0)
        step = (self.stop - self.start) / (self.steps - 1)
        return AxisSpec(self.name.upper(), self.start, self.stop, step)


# figure catalogue: per-figure fixed parameters and default axes; continuous
# axes default to DEFAULT_STEPS points, family axes mirror the survey curves
_FIGURES: dict[int, dict] = {
    2: dict(kind="coupling_grid", anisotropy="xy", pair=(0, 2), j=(0.0, 4.0), w=(0.0, 4.0)),
    3: dict(kind="coupling_grid", anisotropy="xy", pair=(0, 1), j=(0.0, 4.0), w=(0.0, 4.0)),
    4: dict(kind="coupling_grid", anisotropy="xy", pair=(0, 2), j=(-4.0, 0.0), w=(0.0, 4.0)),
    5: dict(kind="coupling_grid", anisotropy="xy", pair=(0, 3), j=(-4.0, 0.0), w=(0.0, 4.0)),
    6: dict(kind="thermal_curves", anisotropy="xy", pair=(0, 2), j_family=(0.5, 1.0, 2.0), t=(0.01, 2.0)),
    7: dict(kind="thermal_curves", anisotropy="xy", pair=(0, 1), j_family=(0.5, 1.0, 2.0), t=(0.01, 2.0)),
    8: dict(kind="coupling_grid", anisotropy="x", pair=(0, 1), j=(0.0, 4.0), w=(0.0, 4.0)),
    9: dict(kind="thermal_curves", anisotropy="x", pair=(0, 1), j_family=(0.5, 1.0, 2.0), t=(0.01, 2.0)),
    10: dict(kind="size_curves", pair=(0, 2), sizes=(2, 4), j=(0.1, 4.0)),
    11: dict(kind="size_curves", pair=(0, 1), sizes=(2, 4), j=(0.1, 4.0)),
    12: dict(kind="field_response", b=(0.0, 3.0)),
    13: dict(kind="field_curves", pair=(0, 1), b_family=(0.0, 1.0, 1.75, 2.0, 3.0), t=(0.01, 1.5)),
}


def _axis_override(args, name: str, default: _Axis) -> _Axis:
    for entry in args.axis or []:
        if entry[0].lower() == name:
            return _Axis(name, float(entry[1]), float(entry[2]), int(entry[3]))
    if args.steps is not None:
        return _Axis(name, default.start, default.stop, args.steps)
    return default


def _check_overrides(args, axes: tuple[str, ...], fixed: tuple[str, ...]) -> None:
    for entry in args.axis or []:
        if entry[0].lower() not in axes:
            raise ValueError(
                f"figure {args.number} sweeps {'/'.join(axes)}; cannot override axis {entry[0]!r}"
            )
    for flag in ("j", "w"):
        if getattr(args, flag) is not None and flag not in fixed:
            raise ValueError(f"figure {args.number} does not fix {flag.upper()}; drop --{flag}")


def _family_override(args, name: str, default: tuple[float, ...]) -> list[float]:
    for entry in args.axis or []:
        if entry[0].lower() == name:
            return _Axis(name, float(entry[1]), float(entry[2]), int(entry[3])).values()
    return list(default)


def _figure_rows(number: int, args) -> tuple[list[str], list[tuple]]:
    """Assemble one figure's long-format rows from ScanRecord streams."""
    fig = _FIGURES[number]
    kind = fig["kind"]
    rows: list[tuple] = []

    if kind == "coupling_grid":
        _check_overrides(args, axes=("j", "w"), fixed=())
        j_axis = _axis_override(args, "j", _Axis("j", *fig["j"], DEFAULT_STEPS))
        w_axis = _axis_override(args, "w", _Axis("w", *fig["w"], DEFAULT_STEPS))
        grid = ScanGrid(
            template=ChainSpec(n_sites=2, anisotropy=fig["anisotropy"]),
            quantity=Quantity.pair(*fig["pair"]),
            axes=(j_axis.to_axis_spec(), w_axis.to_axis_spec()),
        )
        rows = [(r.values[0], r.values[1], r.quantity) for r in sweep(grid)]
        return ["j", "w", "value"], rows

    if kind == "thermal_curves":
        _check_overrides(args, axes=("j", "t"), fixed=("w",))
        hopping = args.w if args.w is not None else 1.0
        t_axis = _axis_override(args, "t", _Axis("t", *fig["t"], DEFAULT_STEPS))
        for j in _family_override(args, "j", fig["j_family"]):
            grid = ScanGrid(
                template=ChainSpec(n_sites=2, hopping=hopping, kondo=j, anisotropy=fig["anisotropy"]),
                quantity=Quantity.pair(*fig["pair"]),
                axes=(t_axis.to_axis_spec(),),
            )
            rows += [(j, r.values[0], r.quantity) for r in sweep(grid)]
        return ["j", "t", "value"], rows

    if kind == "size_curves":
        _check_overrides(args, axes=("j",), fixed=("w",))
        hopping = args.w if args.w is not None else 1.0
        j_axis = _axis_override(args, "j", _Axis("j", *fig["j"], DEFAULT_STEPS))
        for n in fig["sizes"]:
            grid = ScanGrid(
                template=ChainSpec(n_sites=n, hopping=hopping, anisotropy="xy"),
                quantity=Quantity.pair(*fig["pair"]),
                axes=(j_axis.to_axis_spec(),),
            )
            rows += [(n, r.values[0], r.quantity) for r in sweep(grid)]
        return ["n_sites", "j", "value"], rows

    if kind == "field_response":
        _check_overrides(args, axes=("b",), fixed=("j", "w"))
        j = args.j if args.j is not None else 1.0
        w = args.w if args.w is not None else 1.0
        b_axis = _axis_override(args, "b", _Axis("b", *fig["b"], DEFAULT_STEPS))
        records = {}
        for variant in ("xy", "x"):
            grid = ScanGrid(
                template=ChainSpec(n_sites=2, hopping=w, kondo=j, anisotropy=variant),
                quantity=Quantity.single(0),
                axes=(b_axis.to_axis_spec(),),
            )
            records[variant] = sweep(grid)
        for rec_xy, rec_x in zip(records["xy"], records["x"]):
            rows.append((rec_xy.values[0], "xy", rec_xy.quantity))
            rows.append((rec_x.values[0], "x", rec_x.quantity))
        return ["b", "anisotropy", "value"], rows

    # field_curves (thermal response at several fields)
    _check_overrides(args, axes=("b", "t"), fixed=("j", "w"))
    j = args.j if args.j is not None else 1.0
    w = args.w if args.w is not None else 1.0
    t_axis = _axis_override(args, "t", _Axis("t", *fig["t"], DEFAULT_STEPS))
    for b in _family_override(args, "b", fig["b_family"]):
        grid = ScanGrid(
            template=ChainSpec(n_sites=2, hopping=w, kondo=j, field=b, anisotropy="xy"),
            quantity=Quantity.pair(*fig["pair"]),
            axes=(t_axis.to_axis_spec(),),
        )
        rows += [(b, r.values[0], r.quantity) for r in sweep(grid)]
    return ["b", "t", "value"], rows


def cmd_figure(args) -> int:
    columns, rows = _figure_rows(args.number, args)
    lines = [",".join(columns)]
    for row in rows:
        lines.append(",".join(_fmt(v, args.precision) for v in row))
    _emit(lines, args.out)
    if args.plot:
        from . import plotting

        plotting.render_figure(args.number, columns, rows, args.plot)
    return 0


# ---------------------------------------------------------------------------
# critical-field


def cmd_critical_field(args) -> int:
    spec = _spec_from_args(args)
    b_max = args.b_max if args.b_max is not None else max(1.0, 2.5 * max(abs(args.j), args.w))
    coarse = args.coarse_step if args.coarse_step is not None else b_max / 60.0
    report = find_crossings(spec, b_max=b_max, coarse_step=coarse, tol=args.tol)
    lines = ["b_value,fidelity_drop,post_single_qubit_concurrence"]
    for crossing in report.crossings:
        lines.append(
            ",".join(
                _fmt(v, args.precision)
                for v in (
                    crossing.b_value,
                    crossing.fidelity_drop,
                    crossing.post_crossing_single_qubit_concurrence,
                )
            )
        )
    lines.append(f"b_c,{_fmt(report.b_c, args.precision) if report.b_c is not None else 'NA'}")
    _emit(lines, args.out)
    return 0


# ---------------------------------------------------------------------------
# verify


def _check_energy_grid() -> tuple[bool, str]:
    worst = 0.0
    for j in np.linspace(0.1, 4.0, 20):
        for w in np.linspace(0.1, 4.0, 20):
            spec = ChainSpec(n_sites=2, hopping=w, kondo=j, anisotropy="xy")
            worst = max(worst, abs(ground_state(spec).energy - closed_lambda_xy(j, w)))
    return worst < 1e-9, f"max_dev {worst:.3e} vs 1e-9"


def _check_cac_grid() -> tuple[bool, str]:
    worst = 0.0
    worst_zero = 0.0
    for j in np.linspace(0.1, 4.0, 20):
        for w in np.linspace(0.1, 4.0, 20):
            spec = ChainSpec(n_sites=2, hopping=w, kondo=j, anisotropy="x")
            state = ground_state(spec).state
            worst = max(worst, abs(pair_concurrence(state, 0, 1) - closed_c_ac_x(j, w)))
            worst_zero = max(
                worst_zero, pair_concurrence(state, 0, 2), pair_concurrence(state, 0, 3)
            )
    ok = worst < 1e-9 and worst_zero <= 1e-9
    return ok, f"max_dev {worst:.3e}, max_zero_pair {worst_zero:.3e} vs 1e-9"


def _check_ckw_random(count: int = 1000) -> tuple[bool, str]:
    rng = np.random.default_rng(20240801)
    holds = 0
    for _ in range(count):
        state = rng.standard_normal(16) + 1j * rng.standard_normal(16)
        state /= np.linalg.norm(state)
        if ckw_audit(state, 0).holds:
            holds += 1
    return holds == count, f"{holds}/{count}"


def cmd_verify(args) -> int:
    checks = [
        ("eq7_energy_grid", _check_energy_grid),
        ("eq10_cac_grid", _check_cac_grid),
        ("ckw_random_states", _check_ckw_random),
    ]
    all_ok = True
    for name, check in checks:
        ok, detail = check()
        all_ok &= ok
        print(f"{name}: {'PASS' if ok else 'FAIL'} ({detail})")
    return 0 if all_ok else 2


# ---------------------------------------------------------------------------


def _build_parser() -> _Parser:
    parser = _Parser(prog="knchain", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p_ground = sub.add_parser("ground", help="ground-state energy and concurrences")
    _add_model_args(p_ground)
    _add_output_args(p_ground)
    p_ground.set_defaults(func=cmd_ground)

    p_figure = sub.add_parser("figure", help="emit survey-figure grid data")
    p_figure.add_argument("number", type=int, choices=sorted(_FIGURES), help="figure number")
    p_figure.add_argument("--j", type=float, default=None, help="override a fixed J")
    p_figure.add_argument("--w", type=float, default=None, help="override a fixed W")
    p_figure.add_argument(
        "--axis",
        nargs=4,
        action="append",
        metavar=("NAME", "START", "STOP", "STEPS"),
        help="override one swept axis, repeatable",
    )
    p_figure.add_argument(
        "--steps", type=_positive_int, default=None, help="points per continuous axis"
    )
    p_figure.add_argument("--plot", default=None, help="also render the figure to this image path")
    _add_output_args(p_figure)
    p_figure.set_defaults(func=cmd_figure)

    p_crit = sub.add_parser("critical-field", help="field-axis crossing report")
    _add_model_args(p_crit, with_field=False)
    p_crit.set_defaults(b=0.0)
    p_crit.add_argument("--b-max", type=float, default=None, help="field scan upper end")
    p_crit.add_argument("--coarse-step", type=float, default=None, help="coarse scan step")
    p_crit.add_argument("--tol", type=float, default=1e-4, help="bisection width")
    _add_output_args(p_crit)
    p_crit.set_defaults(func=cmd_critical_field)

    p_verify = sub.add_parser("verify", help="run the closed-form cross-check suite")
    p_verify.set_defaults(func=cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CapacityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (PositivityError, PurityError, HermiticityError, ConvergenceError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
