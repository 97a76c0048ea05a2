"""Command-line interface.

Subcommands: ``lucas`` (recurrence vs generating-series table), ``operator``
(pipeline vs closed-form coefficient residuals), ``member`` (sampled
real-part membership report), ``bounds`` / ``fekete`` (closed-form bound
sweeps as CSV or JSON), ``verify`` (randomized brute-force bound
verification).

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 I/O error.

Ranges are written ``start:stop:steps`` (or a single number), polynomials
as comma-separated ascending coefficients (``--p 0,1`` is ``p(x) = x``).
``--config FILE`` supplies ``key=value`` defaults for any long flag (dest
names, ``-`` and ``_`` interchangeable); explicit flags win.  A relative
``--out`` path resolves against ``$PQLUCAS_OUT_DIR`` when that is set.
CSV uses RFC-4180-style CRLF rows; JSON tables are one object with a
``rows`` array.  Seeded commands are byte-reproducible.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import statistics
import sys

import numpy as np

from .bioperator import (
    ClassParams,
    DiskGrid,
    apply_operator,
    check_membership_realpart,
    extract_coefficient_identities,
)
from .bounds import (
    BoundInputs,
    PRESET_NAMES,
    bound_a2,
    bound_a3,
    fekete_szego_bound,
    preset,
)
from .lucas import PolyPair, eval_poly, generating_series, lucas_sequence
from .oracle import FUNCTIONALS, MODES, random_inputs, verify_bounds
from .series import FunctionSpec, to_json_coeffs

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_IO = 3

OUT_DIR_ENV = "PQLUCAS_OUT_DIR"

TABLE_COLUMNS = (
    "lambda",
    "mu",
    "delta",
    "x",
    "p",
    "q",
    "upsilon",
    "bound_a2",
    "bound_a3",
    "fs_bound",
    "regime",
    "flags",
)


def _poly_type(text: str) -> tuple[float, ...]:
    try:
        return tuple(float(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"malformed polynomial {text!r}: expected comma-separated numbers"
        ) from None


def _range_type(text: str) -> tuple[float, ...]:
    parts = text.split(":")
    try:
        if len(parts) == 1:
            return (float(parts[0]),)
        if len(parts) == 3:
            start, stop = float(parts[0]), float(parts[1])
            steps = int(parts[2])
        else:
            raise ValueError
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"malformed range {text!r}: expected NUMBER or START:STOP:STEPS"
        ) from None
    if steps < 1:
        raise argparse.ArgumentTypeError("range steps must be >= 1")
    if stop < start:
        raise argparse.ArgumentTypeError("range stop must be >= start")
    if steps == 1:
        return (start,)
    return tuple(float(v) for v in np.linspace(start, stop, steps))


def _nonneg_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("value must be >= 0")
    return value


def _resolve_out(path: str | None) -> str | None:
    if path is None:
        return None
    base = os.environ.get(OUT_DIR_ENV)
    if base and not os.path.isabs(path):
        return os.path.join(base, path)
    return path


def _emit(text: str, out: str | None) -> int:
    path = _resolve_out(out)
    if path is None:
        sys.stdout.write(text)
        return EXIT_OK
    try:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        print(f"error: cannot write {path}: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


def _csv_text(columns: tuple[str, ...], rows: list[list]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\r\n")
    writer.writerow(columns)
    writer.writerows(rows)
    return buf.getvalue()


def _json_text(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _real(value: complex) -> float | list[float]:
    if value.imag == 0.0:
        return value.real
    return [value.real, value.imag]


# ----------------------------------------------------------------- lucas

def cmd_lucas(ns: argparse.Namespace) -> int:
    try:
        pair = PolyPair(ns.p, ns.q, ns.x)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    seq = lucas_sequence(pair, ns.k)
    gen = generating_series(pair, ns.k)
    rows = []
    worst = 0.0
    for k in range(ns.k + 1):
        rec = seq.values[k]
        ser = gen.coefficient(k).real
        diff = abs(rec - gen.coefficient(k))
        worst = max(worst, diff)
        rows.append([k, rec, ser, diff])
    if ns.format == "json":
        payload = {
            "rows": [
                {"k": r[0], "lucas_recurrence": r[1], "lucas_series": r[2], "abs_diff": r[3]}
                for r in rows
            ]
        }
        text = _json_text(payload)
    else:
        text = _csv_text(("k", "lucas_recurrence", "lucas_series", "abs_diff"), rows)
    code = _emit(text, ns.out)
    if code != EXIT_OK:
        return code
    return EXIT_OK if worst <= ns.tol else EXIT_VERIFY_FAILED


# -------------------------------------------------------------- operator

def _identity_payload(params: ClassParams, f: FunctionSpec, tol: float) -> dict:
    report = extract_coefficient_identities(params, f)
    direct = apply_operator(params, f, order=2)
    return {
        "lambda": params.lam,
        "mu": params.mu,
        "delta": params.delta,
        "a2": f.coefficient(2),
        "a3": f.coefficient(3),
        "series": to_json_coeffs(direct),
        "coeff_z": _real(report.pipeline[0]),
        "coeff_z2": _real(report.pipeline[1]),
        "coeff_w": _real(report.pipeline[2]),
        "coeff_w2": _real(report.pipeline[3]),
        "closed_forms": list(report.closed_form),
        "residuals": list(report.residuals),
        "max_residual": report.max_residual,
        "pass": bool(report.max_residual <= tol),
    }


def cmd_operator(ns: argparse.Namespace) -> int:
    try:
        if ns.seed is None:
            params = ClassParams(ns.lam, ns.mu, ns.delta)
            payload = _identity_payload(params, FunctionSpec((ns.a2, ns.a3)), ns.tol)
            all_pass = payload["pass"]
        else:
            rng = np.random.default_rng(ns.seed)
            rows = []
            for _ in range(ns.draws):
                params = ClassParams(
                    rng.uniform(1.0, 3.0), rng.uniform(0.0, 3.0), rng.uniform(0.0, 2.0)
                )
                f = FunctionSpec((rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)))
                rows.append(_identity_payload(params, f, ns.tol))
            all_pass = all(r["pass"] for r in rows)
            payload = {"seed": ns.seed, "rows": rows, "all_pass": all_pass}
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    code = _emit(_json_text(payload), ns.out)
    if code != EXIT_OK:
        return code
    return EXIT_OK if all_pass else EXIT_VERIFY_FAILED


# ---------------------------------------------------------------- member

def cmd_member(ns: argparse.Namespace) -> int:
    try:
        params = ClassParams(ns.lam, ns.mu, ns.delta, ns.alpha)
        f = FunctionSpec(ns.coeffs if ns.coeffs is not None else ())
        grid = DiskGrid(ns.r_max, ns.radii, ns.angles)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    report = check_membership_realpart(params, f, grid, ns.mode)
    payload = {
        "mode": report.mode,
        "alpha": report.alpha,
        "pass": report.passed,
        "min_real_part": report.min_real_part,
        "min_margin": report.margin,
        "worst_point": None
        if report.worst_point is None
        else [report.worst_point.real, report.worst_point.imag],
        "n_points": report.n_evaluated,
        "flagged_points": [[w.real, w.imag] for w in report.flagged],
    }
    code = _emit(_json_text(payload), ns.out)
    if code != EXIT_OK:
        return code
    return EXIT_OK if report.passed else EXIT_VERIFY_FAILED


# --------------------------------------------------------- bounds/fekete

def _apply_preset(ns: argparse.Namespace, parser: argparse.ArgumentParser) -> None:
    if not ns.preset:
        return
    pinned = preset(ns.preset)
    pins = {
        "caglar": ("delta",),
        "srivastava": ("lam", "mu", "delta"),
        "bistarlike": ("lam", "mu", "delta"),
        "mu1": ("mu",),
    }[ns.preset]
    for name in pins:
        flag = {"lam": "--lambda", "mu": "--mu", "delta": "--delta"}[name]
        given = getattr(ns, f"{name}_given", False)
        if given:
            parser.error(f"--preset {ns.preset} pins {flag}")
        setattr(ns, name, (getattr(pinned, name),))


class _TrackedRange(argparse.Action):
    """Stores the parsed range and remembers that it was given explicitly."""

    def __call__(self, parser, namespace, values, option_string=None):
        setattr(namespace, self.dest, values)
        setattr(namespace, f"{self.dest}_given", True)


def cmd_table(ns: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    _apply_preset(ns, parser)
    rows = []
    for lam in ns.lam:
        for mu in ns.mu:
            for delta in ns.delta:
                try:
                    params = ClassParams(lam, mu, delta)
                except ValueError as exc:
                    parser.error(str(exc))
                for x in ns.x:
                    p = eval_poly(ns.p, x)
                    q = eval_poly(ns.q, x)
                    for upsilon in ns.upsilon:
                        inputs = BoundInputs(params, p, q, upsilon)
                        r2 = bound_a2(inputs)
                        r3 = bound_a3(inputs)
                        fs = fekete_szego_bound(inputs)
                        flags = ";".join(r2.flags + r3.flags + fs.flags)
                        rows.append(
                            [
                                lam,
                                mu,
                                delta,
                                x,
                                p,
                                q,
                                upsilon,
                                r2.value,
                                r3.value,
                                fs.value,
                                fs.regime,
                                flags,
                            ]
                        )
    if ns.format == "json":
        payload = {"rows": [dict(zip(TABLE_COLUMNS, row)) for row in rows]}
        text = _json_text(payload)
    else:
        text = _csv_text(TABLE_COLUMNS, rows)
    return _emit(text, ns.out)


# ---------------------------------------------------------------- verify

def cmd_verify(ns: argparse.Namespace) -> int:
    if ns.draws < 1:
        print("error: verify needs --draws >= 1", file=sys.stderr)
        return EXIT_USAGE
    rng = np.random.default_rng(ns.seed)
    try:
        inputs = random_inputs(rng, ns.draws, p_min=ns.p_min, theta_min=ns.theta_min)
    except RuntimeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    results = [verify_bounds(inp, ns.grid_n, ns.mode, ns.tol) for inp in inputs]
    all_pass = all(r.all_pass for r in results)

    ratios = {name: [] for name in FUNCTIONALS}
    passes = {name: 0 for name in FUNCTIONALS}
    for result in results:
        for report, ok in zip(result.reports, result.passes):
            ratios[report.functional].append(report.ratio)
            passes[report.functional] += int(ok)

    if ns.format == "json":
        payload = {
            "mode": ns.mode,
            "grid_n": ns.grid_n,
            "draws": ns.draws,
            "seed": ns.seed,
            "tolerance": ns.tol,
            "rows": [
                {
                    "lambda": res.inputs.params.lam,
                    "mu": res.inputs.params.mu,
                    "delta": res.inputs.params.delta,
                    "p": res.inputs.p,
                    "q": res.inputs.q,
                    "upsilon": res.inputs.upsilon,
                    "theta": res.inputs.theta,
                    "functionals": [
                        {**rep.as_dict(), "pass": ok}
                        for rep, ok in zip(res.reports, res.passes)
                    ],
                }
                for res in results
            ],
            "summary": {
                name: {
                    "min_ratio": min(vals),
                    "median_ratio": statistics.median(vals),
                    "max_ratio": max(vals),
                    "passed": passes[name],
                }
                for name, vals in ratios.items()
            },
            "all_pass": all_pass,
        }
        text = _json_text(payload)
    else:
        lines = [
            f"verify: mode={ns.mode} grid_n={ns.grid_n} draws={ns.draws} seed={ns.seed}",
            f"{'functional':<10} {'min_ratio':>12} {'median_ratio':>14} {'max_ratio':>12} {'pass':>8}",
        ]
        for name, vals in ratios.items():
            lines.append(
                f"{name:<10} {min(vals):>12.6f} {statistics.median(vals):>14.6f} "
                f"{max(vals):>12.6f} {passes[name]:>4}/{ns.draws}"
            )
        lines.append(f"RESULT: {'PASS' if all_pass else 'FAIL'}")
        text = "\n".join(lines) + "\n"
    code = _emit(text, ns.out)
    if code != EXIT_OK:
        return code
    return EXIT_OK if all_pass else EXIT_VERIFY_FAILED


# ----------------------------------------------------------------- parser

def _add_param_flags(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("--lambda", dest="lam", type=float, default=1.0, help="lam >= 1")
    sp.add_argument("--mu", type=float, default=1.0, help="mu >= 0")
    sp.add_argument("--delta", type=float, default=0.0, help="delta >= 0")


def build_parser() -> tuple[argparse.ArgumentParser, dict[str, argparse.ArgumentParser]]:
    parser = argparse.ArgumentParser(
        prog="pqlucas",
        description="(p,q)-Lucas coefficient-bound laboratory",
    )
    parser.add_argument("--config", help="key=value defaults file", default=None)
    sub = parser.add_subparsers(dest="command", required=True)
    subparsers: dict[str, argparse.ArgumentParser] = {}

    sp = sub.add_parser("lucas", help="Lucas sequence: recurrence vs generating series")
    sp.add_argument("--p", type=_poly_type, default=(0.0, 1.0), help="p(x) coefficients")
    sp.add_argument("--q", type=_poly_type, default=(1.0,), help="q(x) coefficients")
    sp.add_argument("--x", type=float, default=1.0)
    sp.add_argument("--k", type=_nonneg_int, default=10, help="largest index")
    sp.add_argument("--tol", type=float, default=1e-9)
    sp.add_argument("--format", choices=("csv", "json"), default="csv")
    sp.add_argument("--out", default=None)
    sp.set_defaults(func=cmd_lucas)
    subparsers["lucas"] = sp

    sp = sub.add_parser("operator", help="operator coefficient identities")
    _add_param_flags(sp)
    sp.add_argument("--a2", type=float, default=0.5)
    sp.add_argument("--a3", type=float, default=0.25)
    sp.add_argument("--tol", type=float, default=1e-9)
    sp.add_argument("--seed", type=int, default=None, help="random residual table")
    sp.add_argument("--draws", type=_nonneg_int, default=10)
    sp.add_argument("--out", default=None)
    sp.set_defaults(func=cmd_operator)
    subparsers["operator"] = sp

    sp = sub.add_parser("member", help="sampled real-part membership check")
    _add_param_flags(sp)
    sp.add_argument("--alpha", type=float, default=0.0)
    sp.add_argument("--coeffs", type=_poly_type, default=None, help="a2,a3,...")
    sp.add_argument("--mode", choices=("operator", "starlike", "convex"), default="operator")
    sp.add_argument("--r-max", dest="r_max", type=float, default=0.95)
    sp.add_argument("--radii", type=_nonneg_int, default=64)
    sp.add_argument("--angles", type=_nonneg_int, default=256)
    sp.add_argument("--out", default=None)
    sp.set_defaults(func=cmd_member)
    subparsers["member"] = sp

    for name, upsilon_default, help_text in (
        ("bounds", "1", "closed-form bound sweep"),
        ("fekete", "0:3:31", "Fekete-Szego bound sweep over upsilon"),
    ):
        sp = sub.add_parser(name, help=help_text)
        sp.add_argument("--lambda", dest="lam", type=_range_type, default=(1.0,),
                        action=_TrackedRange, help="range START:STOP:STEPS or number")
        sp.add_argument("--mu", type=_range_type, default=(1.0,), action=_TrackedRange)
        sp.add_argument("--delta", type=_range_type, default=(0.0,), action=_TrackedRange)
        sp.add_argument("--x", type=_range_type, default=(1.0,))
        sp.add_argument("--upsilon", type=_range_type, default=_range_type(upsilon_default))
        sp.add_argument("--p", type=_poly_type, default=(0.0, 1.0), help="p(x) coefficients")
        sp.add_argument("--q", type=_poly_type, default=(1.0,), help="q(x) coefficients")
        sp.add_argument("--preset", choices=PRESET_NAMES, default=None)
        sp.add_argument("--format", choices=("csv", "json"), default="csv")
        sp.add_argument("--out", default=None)
        sp.set_defaults(func=cmd_table, needs_parser=True)
        subparsers[name] = sp

    sp = sub.add_parser("verify", help="brute-force bound verification")
    sp.add_argument("--draws", type=_nonneg_int, default=50)
    sp.add_argument("--grid-n", dest="grid_n", type=int, default=21)
    sp.add_argument("--mode", choices=MODES, default="paper")
    sp.add_argument("--seed", type=int, default=1729)
    sp.add_argument("--tol", type=float, default=1e-9)
    sp.add_argument("--p-min", dest="p_min", type=float, default=0.1)
    sp.add_argument("--theta-min", dest="theta_min", type=float, default=2.0)
    sp.add_argument("--format", choices=("text", "json"), default="text")
    sp.add_argument("--out", default=None)
    sp.set_defaults(func=cmd_verify)
    subparsers["verify"] = sp

    return parser, subparsers


def _load_config(path: str) -> dict[str, str]:
    values: dict[str, str] = {}
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{lineno}: expected key=value")
            key, _, value = line.partition("=")
            values[key.strip().replace("-", "_")] = value.strip()
    return values


def _prescan_config(argv: list[str]) -> str | None:
    for i, arg in enumerate(argv):
        if arg == "--config":
            if i + 1 >= len(argv):
                return None  # argparse will report the missing value
            return argv[i + 1]
        if arg.startswith("--config="):
            return arg.split("=", 1)[1]
    return None


def main(argv: list[str] | None = None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    parser, subparsers = build_parser()

    config_path = _prescan_config(argv)
    if config_path is not None:
        try:
            config = _load_config(config_path)
        except (OSError, ValueError) as exc:
            print(f"error: cannot read config: {exc}", file=sys.stderr)
            return EXIT_USAGE
        # String defaults are run through each flag's type converter by
        # argparse itself, so raw text is the right currency here.
        for sp in subparsers.values():
            sp.set_defaults(**config)

    ns = parser.parse_args(argv)
    if getattr(ns, "needs_parser", False):
        return ns.func(ns, subparsers[ns.command])
    return ns.func(ns)


if __name__ == "__main__":
    raise SystemExit(main())
