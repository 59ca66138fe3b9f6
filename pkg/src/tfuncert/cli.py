"""Command-line surface: constants tables, condition checks, certification
batteries, oscillator/Hilbert spectra, and Banach minimization.

All machine output is JSON lines on stdout (one object per line, buffered and
emitted in declared order); CSV export is reserved for function samples.
Exit codes: 0 all passed, 1 certified inequality failure, 2 domain error,
64 malformed invocation.
"""
from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .sampling import (
    GaussianSpec,
    Grid,
    RandomFunctionSpec,
    SampledFunction,
    make_grid,
    random_smooth,
    sample_gaussian,
    scale,
)
from .transforms import AliasingError
from .norms import AdmissibleTriple, default_window, lp_weighted
from .constants import (
    DomainError,
    ExponentSet,
    as_exponent,
    babenko_beckner,
    check_cowling_price,
    check_galperin_grochenig,
    check_lieb_domain,
    general_dual,
    holder_dual,
    leindler_duals,
    lieb_H,
    sharp_B,
    solve_partner_exponent,
)
from .certifier import (
    DEFAULT_TOL,
    HEISENBERG_SHARP_K,
    INEQUALITY_IDS,
    _young_target,
    build_lieb_extremals,
    certify_cowling_functional,
    certify_hausdorff_young,
    certify_heisenberg,
    certify_leindler,
    certify_lieb_forward,
    certify_lieb_reverse,
    certify_modulation_bound,
    certify_young,
    default_lattice,
    run_battery,
    _require_nonnegative,
)
from .variational import (
    MinimizeOptions,
    build_forms,
    minimize_banach,
    oscillator_modes,
    smallest_eigen,
)

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_DOMAIN = 2
EXIT_USAGE = 64

_PRESET_GRIDS = {
    "certify": (512, 12.0, 1),
    "spectrum": (1024, 16.0, 1),
    "minimize": (256, 12.0, 1),
}


class _Parser(argparse.ArgumentParser):
    """argparse with the conventional 64 exit for malformed invocations."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


@dataclass(frozen=True)
class RunConfig:
    subcommand: str
    grid: tuple[int, float, int]
    tol: float
    seed: int
    output: Optional[str] = None
    fmt: str = "json"


class _Emitter:
    """Buffer JSON lines, then emit in order to stdout and optionally a file."""

    def __init__(self, path: Optional[str] = None):
        self.path = path
        self.lines: list[str] = []

    def emit(self, obj) -> None:
        self.lines.append(obj if isinstance(obj, str) else json.dumps(obj))

    def flush(self) -> None:
        text = "\n".join(self.lines)
        if text:
            print(text)
        if self.path:
            with open(self.path, "w", encoding="utf-8") as fh:
                fh.write(text + ("\n" if text else ""))


def _parse_grid(text: Optional[str], default: tuple[int, float, int]) -> Grid:
    if text is None:
        n, extent, dim = default
    else:
        parts = text.split(",")
        if len(parts) not in (2, 3):
            raise DomainError(f"--grid expects N,L or N,L,d, got {text!r}")
        n = int(parts[0])
        extent = float(parts[1])
        dim = int(parts[2]) if len(parts) == 3 else 1
    return make_grid(n, extent, dim)


def _parse_kv(pairs: list[str], what: str) -> dict:
    out = {}
    for item in pairs:
        key, sep, value = item.partition("=")
        if not sep or not key:
            raise DomainError(f"{what} expects key=value tokens, got {item!r}")
        out[key] = as_exponent(value, key)
    return out


def _load_function(path: str) -> SampledFunction:
    with open(path, "r", encoding="utf-8") as fh:
        return SampledFunction.from_json(fh.read())


# ---------------------------------------------------------------------------
# constants


def cmd_constants(args, out: _Emitter) -> int:
    requested = False
    if args.Cp is not None:
        requested = True
        p = as_exponent(args.Cp, "p")
        out.emit({"quantity": "Cp", "p": p, "value": babenko_beckner(p)})
    if args.dual is not None:
        requested = True
        p = as_exponent(args.dual, "p")
        out.emit({"quantity": "holder_dual", "p": p, "value": holder_dual(p)})
    if args.general_dual is not None:
        requested = True
        p = as_exponent(args.general_dual, "p")
        out.emit({"quantity": "general_dual", "p": p, "value": general_dual(p)})
    if args.H is not None:
        requested = True
        r, p = (as_exponent(v, n) for v, n in zip(args.H, ("r", "p")))
        out.emit({"quantity": "H", "r": r, "p": p, "value": lieb_H(r, p)})
    if args.B is not None:
        requested = True
        r, s, u, v = (as_exponent(x, n) for x, n in zip(args.B, ("r", "s", "u", "v")))
        out.emit(
            {"quantity": "B", "r": r, "s": s, "u": u, "v": v, "value": sharp_B(r, s, u, v, args.dim)}
        )
    if args.leindler_duals is not None:
        requested = True
        u, v, r = (as_exponent(x, n) for x, n in zip(args.leindler_duals, ("u", "v", "r")))
        mp, np_ = leindler_duals(u, v, r)
        out.emit({"quantity": "leindler_duals", "u": u, "v": v, "r": r, "m_prime": mp, "n_prime": np_})
    if args.solve_partner is not None:
        requested = True
        s, r, u = (as_exponent(x, n) for x, n in zip(args.solve_partner, ("s", "r", "u")))
        out.emit({"quantity": "partner_exponent", "s": s, "r": r, "u": u, "v": solve_partner_exponent(s, r, u)})
    if args.check_lieb is not None:
        requested = True
        r, s, u, v = (as_exponent(x, n) for x, n in zip(args.check_lieb, ("r", "s", "u", "v")))
        out.emit({"quantity": "lieb_domain", "r": r, "s": s, "u": u, "v": v, "ok": check_lieb_domain(r, s, u, v)})
    if args.check_cp is not None:
        requested = True
        kv = _parse_kv(args.check_cp, "--check-cp")
        witness = check_cowling_price(kv["p"], kv["q"], kv["a"], kv["b"])
        out.emit(
            {
                "quantity": "cowling_price",
                **{k: kv[k] for k in ("p", "q", "a", "b")},
                "ok": bool(witness),
                "margin_x": witness.margin_x,
                "margin_omega": witness.margin_omega,
            }
        )
    if args.check_gg is not None:
        requested = True
        kv = _parse_kv(args.check_gg, "--check-gg")
        witness = check_galperin_grochenig(ExponentSet.from_dict(kv))
        out.emit(
            {
                "quantity": "galperin_grochenig",
                "exponents": dict(sorted(kv.items())),
                "ok": bool(witness),
                "left_factor_x": witness.left_factor_x,
                "left_factor_omega": witness.left_factor_omega,
                "left_product": witness.left_product,
                "right_max_x": witness.right_max_x,
                "right_max_omega": witness.right_max_omega,
                "right_product": witness.right_product,
            }
        )
    if not requested:
        raise DomainError("constants: nothing requested; pass at least one quantity flag")
    return EXIT_PASS


# ---------------------------------------------------------------------------
# certify


def _centered_gaussian(grid: Grid, width: float) -> SampledFunction:
    """exp(-width |x|^2) sampled on the grid."""
    return sample_gaussian(GaussianSpec(width * np.eye(grid.dim)), grid)


def _extremal_report(ineq: str, kv: dict, args, grid: Grid, tol: float):
    """One extremal (saturation) certificate for the requested inequality."""

    def need(key, fallback=None):
        if key in kv:
            return kv[key]
        flag = getattr(args, key, None)
        if flag is not None:
            return as_exponent(flag, key)
        if fallback is not None:
            return fallback
        raise DomainError(f"extremal {ineq} requires exponent {key}")

    if ineq == "hausdorff_young":
        f = _centered_gaussian(grid, math.pi)
        return certify_hausdorff_young(f, need("r"), tol)
    if ineq in ("young", "leindler"):
        m, n = need("m"), need("n")
        r = need("r", _young_target(m, n))
        if m == 1.0 and n == 1.0:
            # the r = 1 corner: mass factorizes, any decaying pair is extremal
            widths = (math.pi, math.pi)
        elif m == 1.0 or n == 1.0:
            raise DomainError(
                "no grid extremal when exactly one exponent is 1 (the dual degenerates)"
            )
        else:
            mp, np_ = general_dual(m), general_dual(n)
            base = math.pi / max(abs(mp), abs(np_))
            widths = (abs(mp) * base, abs(np_) * base)
        f = _centered_gaussian(grid, widths[0])
        g = _centered_gaussian(grid, widths[1])
        certify = certify_young if ineq == "young" else certify_leindler
        return certify(f, g, m, n, r, tol)
    if ineq == "lieb_forward":
        r, p = need("r"), need("p", 2.0)
        f = _centered_gaussian(grid, math.pi)
        return certify_lieb_forward(f, f, r, p, tol)
    if ineq in ("lieb_reverse_xw", "lieb_reverse_wx"):
        order = "x" if ineq == "lieb_reverse_xw" else "omega"
        r, s = need("r"), need("s")
        u = need("u", min(2.0, 0.5 * (1.0 + holder_dual(r))))
        v = need("v", solve_partner_exponent(s, r, u))
        mp, np_ = leindler_duals(u, v, r)
        # geometric-mean normalization keeps both widths within sqrt(|m'/n'|) of pi
        width = math.pi / math.sqrt(abs(mp) * abs(np_))
        f, g = build_lieb_extremals(r, s, u, v, width * np.eye(grid.dim), None, grid, order)
        return certify_lieb_reverse(f, g, r, s, u, v, order, tol)
    if ineq == "heisenberg":
        f = _centered_gaussian(grid, math.pi)
        return certify_heisenberg(f, tol)
    if ineq == "modulation_bound":
        r, s = need("r", 2.0), need("s", 2.0)
        u = need("u", min(2.0, holder_dual(r)))
        v = need("v", solve_partner_exponent(s, r, u))
        f = _centered_gaussian(grid, math.pi)
        return certify_modulation_bound(f, default_window(grid), r, s, u, v, args.side, tol)
    if ineq == "cowling_price_functional":
        f = _centered_gaussian(grid, math.pi)
        return certify_cowling_functional(
            f, need("p", 2.0), need("q", 2.0), need("a", 1.0), need("b", 1.0), tol=tol
        )
    raise DomainError(f"no extremal construction for {ineq!r}")


def _single_input_report(ineq: str, args, grid: Grid, tol: float):
    f = _load_function(args.input)
    g = _load_function(args.input2) if args.input2 else None

    def need(key):
        flag = getattr(args, key, None)
        if flag is None:
            raise DomainError(f"certify {ineq} with --input requires --{key}")
        return as_exponent(flag, key)

    if ineq == "hausdorff_young":
        return certify_hausdorff_young(f, need("r"), tol)
    if ineq in ("young", "leindler"):
        if g is None:
            raise DomainError(f"certify {ineq} requires --input2 for the second factor")
        m, n, r = need("m"), need("n"), need("r")
        if ineq == "young" and m == 1.0 and n == 1.0 and r == 1.0:
            # the r=1 corner is an equality check (mass factorizes), which
            # only holds for nonnegative inputs
            _require_nonnegative(f, "young at m=n=r=1")
            _require_nonnegative(g, "young at m=n=r=1")
        certify = certify_young if ineq == "young" else certify_leindler
        return certify(f, g, m, n, r, tol)
    if ineq == "lieb_forward":
        if g is None:
            raise DomainError("certify lieb_forward requires --input2")
        return certify_lieb_forward(f, g, need("r"), need("p"), tol)
    if ineq in ("lieb_reverse_xw", "lieb_reverse_wx"):
        if g is None:
            raise DomainError("certify lieb_reverse requires --input2")
        order = "x" if ineq == "lieb_reverse_xw" else "omega"
        return certify_lieb_reverse(f, g, need("r"), need("s"), need("u"), need("v"), order, tol)
    if ineq == "heisenberg":
        return certify_heisenberg(f, tol)
    if ineq == "modulation_bound":
        window = g if g is not None else default_window(f.grid)
        return certify_modulation_bound(
            f, window, need("r"), need("s"), need("u"), need("v"), args.side, tol
        )
    if ineq == "cowling_price_functional":
        return certify_cowling_functional(f, need("p"), need("q"), need("a"), need("b"), tol=tol)
    raise DomainError(f"unknown inequality id {ineq!r}")


def cmd_certify(args, out: _Emitter) -> int:
    ineq = args.inequality
    if ineq == "lieb_reverse":
        ineq = "lieb_reverse_xw" if args.order == "x" else "lieb_reverse_wx"
    if ineq not in INEQUALITY_IDS:
        raise DomainError(f"unknown inequality id {ineq!r}; known: {INEQUALITY_IDS}")
    grid = _parse_grid(args.grid, _PRESET_GRIDS["certify"])
    tol = args.tol
    if args.extremal is not None:
        kv = _parse_kv(args.extremal, "--extremal")
        report = _extremal_report(ineq, kv, args, grid, tol)
        out.emit(report.to_json_line())
        return EXIT_PASS if report.passed else EXIT_FAIL
    if args.input:
        report = _single_input_report(ineq, args, grid, tol)
        out.emit(report.to_json_line())
        return EXIT_PASS if report.passed else EXIT_FAIL
    lattice = None
    if args.lattice:
        with open(args.lattice, "r", encoding="utf-8") as fh:
            lattice = json.load(fh)
        if not isinstance(lattice, list) or not all(isinstance(p, dict) for p in lattice):
            raise DomainError("--lattice file must hold a JSON list of exponent objects")
    result = run_battery(ineq, lattice, seeds=args.seeds, grid=grid, tol=tol)
    for report in result.reports:
        out.emit(report.to_json_line())
    for err in result.errors:
        out.emit({"inequality": ineq, **err})
    if any(not report.passed for report in result.reports):
        return EXIT_FAIL
    if result.errors:
        return EXIT_DOMAIN
    return EXIT_PASS


# ---------------------------------------------------------------------------
# spectrum


def _profile(expr: str, base: np.ndarray, what: str) -> np.ndarray:
    """Tiny weight-profile language: zero | coord | abs | <float> | poly:c0,c1,..."""
    expr = expr.strip()
    if expr == "zero":
        return np.zeros_like(base)
    if expr == "coord":
        return base.copy()
    if expr == "abs":
        return np.abs(base)
    if expr.startswith("poly:"):
        try:
            coeffs = [float(tok) for tok in expr[5:].split(",")]
        except ValueError as exc:
            raise DomainError(f"{what}: bad polynomial {expr!r}") from exc
        return np.polynomial.polynomial.polyval(base, coeffs)
    try:
        return np.full_like(base, float(expr))
    except ValueError as exc:
        raise DomainError(
            f"{what}: unknown profile {expr!r} (use zero|coord|abs|<float>|poly:c0,c1,...)"
        ) from exc


def _write_modes_csv(path: str, grid: Grid, modes: list[SampledFunction]) -> None:
    cols = [grid.coords()[:, ax] for ax in range(grid.dim)]
    header = [f"x{ax + 1}" for ax in range(grid.dim)]
    for k, mode in enumerate(modes):
        cols.append(mode.values.real)
        header.append(f"mode_{k}_re")
        cols.append(mode.values.imag)
        header.append(f"mode_{k}_im")
    data = np.column_stack(cols)
    np.savetxt(path, data, delimiter=",", header=",".join(header), comments="")


def cmd_spectrum(args, out: _Emitter) -> int:
    grid = _parse_grid(args.grid, _PRESET_GRIDS["spectrum"])
    count = args.count
    if args.oscillator:
        vals, modes = oscillator_modes(grid.n, grid.extent, count)
        out.emit(
            {
                "method": "finite_difference",
                "eigenvalues": [float(v) for v in vals],
                "grid": {"n": grid.n, "extent": grid.extent, "dim": 1},
            }
        )
        if args.csv:
            _write_modes_csv(args.csv, modes[0].grid, modes)
        return EXIT_PASS
    if not (args.psi and args.phi and args.m0):
        raise DomainError("spectrum needs either --oscillator or all of --psi/--phi/--m0")
    coord = grid.axis if grid.dim == 1 else grid.radii()
    fcoord = grid.freq_axis if grid.dim == 1 else grid.freq_radii()
    psi = _profile(args.psi, coord, "--psi")
    phi = _profile(args.phi, fcoord, "--phi")
    try:
        m0 = float(args.m0)
    except ValueError as exc:
        raise DomainError("--m0 must be a scalar constant") from exc
    triple = AdmissibleTriple(psi.astype(complex), phi.astype(complex), m0)
    window = default_window(grid)
    window = scale(window, 1.0 / lp_weighted(window, 2.0))
    pair = build_forms(triple, window, grid)
    solutions = smallest_eigen(pair, count)
    out.emit(
        {
            "method": "quadratic_form",
            "eigenvalues": [sol.lam for sol in solutions],
            "nu": [sol.nu for sol in solutions],
            "residuals": [sol.residual for sol in solutions],
            "herm_defects": [pair.herm_defect0, pair.herm_defect_full],
            "grid": {"n": grid.n, "extent": grid.extent, "dim": grid.dim},
        }
    )
    if args.csv:
        _write_modes_csv(args.csv, grid, [sol.vector for sol in solutions])
    return EXIT_PASS


# ---------------------------------------------------------------------------
# minimize


_MINIMIZE_PRESETS = {
    "heisenberg": {"d": 1, "p": 2, "q": 2, "a": 1, "b": 1, "r": 2, "s": 2, "alpha": 0, "beta": 0},
}


def cmd_minimize(args, out: _Emitter) -> int:
    if args.preset:
        exponents = ExponentSet.from_dict(_MINIMIZE_PRESETS[args.preset])
    elif args.exponents:
        with open(args.exponents, "r", encoding="utf-8") as fh:
            exponents = ExponentSet.from_dict(json.load(fh))
    else:
        raise DomainError("minimize needs --preset or --exponents")
    grid = _parse_grid(args.grid, _PRESET_GRIDS["minimize"])
    window = default_window(grid)
    options = MinimizeOptions(tol=args.tol, max_iter=args.max_iter, probe_seed=args.seed)
    solutions = []
    for k in range(args.starts):
        init = random_smooth(RandomFunctionSpec(seed=args.seed + 1000 * k), grid)
        solutions.append(minimize_banach(exponents, window, grid, init, options))
    records = [
        {
            "start": k,
            "lambda": sol.lam,
            "el_residual": sol.el_residual,
            "iterations": sol.iterations,
            "converged": sol.converged,
            "exploratory": sol.exploratory,
        }
        for k, sol in enumerate(solutions)
    ]
    for record in records:
        out.emit(record)
    best_idx = min(
        range(len(solutions)), key=lambda k: (not solutions[k].converged, solutions[k].lam)
    )
    out.emit({"best": records[best_idx]})
    if args.csv:
        solutions[best_idx].minimizer.to_csv(args.csv)
    return EXIT_PASS if solutions[best_idx].converged else EXIT_FAIL


# ---------------------------------------------------------------------------
# wiring


def build_parser() -> _Parser:
    parser = _Parser(prog="tfuncert", description=__doc__)
    sub = parser.add_subparsers(dest="subcommand", required=True, parser_class=_Parser)

    c = sub.add_parser("constants", help="sharp constants, duals, and condition checks")
    c.add_argument("--Cp", metavar="P")
    c.add_argument("--dual", metavar="P")
    c.add_argument("--general-dual", dest="general_dual", metavar="P")
    c.add_argument("--H", nargs=2, metavar=("R", "P"))
    c.add_argument("--B", nargs=4, metavar=("R", "S", "U", "V"))
    c.add_argument("--dim", type=int, default=1, help="dimension for --B")
    c.add_argument("--leindler-duals", dest="leindler_duals", nargs=3, metavar=("U", "V", "R"))
    c.add_argument("--solve-partner", dest="solve_partner", nargs=3, metavar=("S", "R", "U"))
    c.add_argument("--check-lieb", dest="check_lieb", nargs=4, metavar=("R", "S", "U", "V"))
    c.add_argument("--check-cp", dest="check_cp", nargs="+", metavar="K=V")
    c.add_argument("--check-gg", dest="check_gg", nargs="+", metavar="K=V")
    c.add_argument("--json", dest="json_out")
    c.set_defaults(handler=cmd_constants)

    f = sub.add_parser("certify", help="run an inequality battery or a single certificate")
    f.add_argument("inequality", metavar="ID")
    f.add_argument("--seeds", type=int, default=20)
    f.add_argument("--grid")
    f.add_argument("--tol", type=float, default=DEFAULT_TOL)
    f.add_argument("--lattice", help="JSON file with a list of exponent objects")
    f.add_argument("--order", choices=("x", "omega"), default="x")
    f.add_argument("--side", choices=("frequency", "time"), default="frequency")
    f.add_argument("--extremal", nargs="*", metavar="K=V")
    f.add_argument("--input", help="JSON file with the sampled input function")
    f.add_argument("--input2", help="JSON file with the second input")
    for flag in ("m", "n", "r", "s", "p", "q", "u", "v", "a", "b"):
        f.add_argument(f"--{flag}")
    f.add_argument("--json", dest="json_out")
    f.set_defaults(handler=cmd_certify)

    e = sub.add_parser("spectrum", help="oscillator or quadratic-form eigenvalues")
    e.add_argument("--oscillator", action="store_true")
    e.add_argument("--psi")
    e.add_argument("--phi")
    e.add_argument("--m0")
    e.add_argument("--grid")
    e.add_argument("--count", type=int, default=1)
    e.add_argument("--csv")
    e.add_argument("--json", dest="json_out")
    e.set_defaults(handler=cmd_spectrum)

    m = sub.add_parser("minimize", help="constrained minimization of the moment functional")
    m.add_argument("--preset", choices=sorted(_MINIMIZE_PRESETS))
    m.add_argument("--exponents", help="JSON file with the exponent set")
    m.add_argument("--grid")
    m.add_argument("--starts", type=int, default=5)
    m.add_argument("--tol", type=float, default=1e-4)
    m.add_argument("--max-iter", dest="max_iter", type=int, default=400)
    m.add_argument("--seed", type=int, default=0)
    m.add_argument("--csv")
    m.add_argument("--json", dest="json_out")
    m.set_defaults(handler=cmd_minimize)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = _Emitter(getattr(args, "json_out", None))
    try:
        status = args.handler(args, out)
    except (DomainError, AliasingError, ValueError, OSError) as exc:
        out.flush()
        print(f"tfuncert: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    out.flush()
    return status


if __name__ == "__main__":
    sys.exit(main())
