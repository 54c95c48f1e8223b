"""Command line front end.

Three subcommands cover the library surface:

* ``eval``       one value of the selected zeta function, printed as
                 ``re=<v> im=<v> err=<bound>`` with 17 significant digits;
* ``meansquare`` mean-square runs along a vertical line, written as CSV,
                 optionally compared against the asymptotic prediction;
* ``verify``     the named check suites, written as CSV + JSON verdicts.

Exit codes are part of the interface: 0 success, 1 a verification suite
failed, 2 domain error, 3 accuracy not certified, 4 resource budget
exceeded, 5 I/O failure.  Every file-producing run also writes a manifest
(command line, parameters, outputs, library version, wall time); outputs
other than the manifest's timing field are byte-identical across reruns.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from . import __version__
from .barnes import MAX_RANK, TruncationPolicy, barnes_direct, barnes_truncated
from .combinatorics import reduction_coefficients
from .errors import (
    AccuracyError,
    DomainError,
    ProfileCacheError,
    ResourceBudgetError,
    ZetalineError,
)
from .meanvalue import (
    MeanSquareRequest,
    mean_square_grid,
    measurement_row,
    predict_lerch_mean_square,
    predict_multi_mean_square,
    render_manifest,
    residual_report,
    write_measurements_csv,
)
from .verify import (
    coefficient_identity_suite,
    comparability,
    default_verification_suites,
    functional_equation_suite,
    mv_suite,
    oscillatory_suite,
)
from .zetacore import (
    DEFAULT_PRECISION,
    Precision,
    hurwitz_zeta_bounded,
    lerch_zeta_bounded,
)

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_DOMAIN = 2
EXIT_ACCURACY = 3
EXIT_RESOURCE = 4
EXIT_IO = 5

SUITE_CHOICES = (
    "envelopes",
    "mv",
    "comparability",
    "oscillatory",
    "coefficients",
    "funceq",
    "all",
)


def _parse_lambda(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise DomainError(f"--lambda expects a rational like 2/3, got {text!r}") from exc


def _parse_floats(text: str) -> Tuple[float, ...]:
    try:
        return tuple(float(part) for part in text.split(","))
    except ValueError as exc:
        raise DomainError(f"expected comma-separated floats, got {text!r}") from exc


def _precision(ns) -> Precision:
    if ns.rel_tol is None:
        return DEFAULT_PRECISION
    return Precision(rel_tol=ns.rel_tol)


# ---------------------------------------------------------------------------
# eval


def _eval_multi_bounded(
    s: complex, a: float, r: int, prec: Precision
) -> Tuple[complex, float]:
    # rank reduction: value is a fixed linear combination of single zetas,
    # so the error bound is the same combination of their bounds
    if not (1 <= r <= MAX_RANK):
        raise DomainError(f"--kind multi supports --r 1..{MAX_RANK}, got {r}")
    table = reduction_coefficients(r, a)
    total: Optional[complex] = None
    err = 0.0
    for j, coef in enumerate(table.coeffs):
        cf = float(coef)
        if cf == 0.0:
            continue
        val, bound = hurwitz_zeta_bounded(s - j, a, prec)
        term = cf * val
        total = term if total is None else total + term
        err += abs(cf) * bound
    assert total is not None  # p_{r,r-1} never vanishes
    return total, err


def _eval_barnes_bounded(
    s: complex, a: float, w: Sequence[float], prec: Precision
) -> Tuple[complex, float]:
    r = len(w)
    if s.real > r:
        return barnes_direct(s, a, w, prec)
    if s.real > r - 1 and abs(s.imag) >= 2.0:
        policy = TruncationPolicy()
        return barnes_truncated(s, a, w, policy.x_for(s.imag), policy)
    raise DomainError(
        "barnes evaluation needs sigma > r (direct sum), or "
        "r-1 < sigma <= r with |t| >= 2 (truncated strip formula)"
    )


def cmd_eval(ns, argv: Sequence[str]) -> int:
    prec = _precision(ns)
    s = complex(ns.sigma, ns.t)
    if ns.kind == "hurwitz":
        val, err = hurwitz_zeta_bounded(s, ns.a, prec)
    elif ns.kind == "lerch":
        lam = ns.lam if ns.lam is not None else Fraction(1)
        val, err = lerch_zeta_bounded(s, ns.a, lam, prec)
    elif ns.kind == "multi":
        if ns.r is None:
            raise DomainError("--kind multi needs --r")
        val, err = _eval_multi_bounded(s, ns.a, ns.r, prec)
    else:
        if ns.w is None:
            raise DomainError("--kind barnes needs --w")
        val, err = _eval_barnes_bounded(s, ns.a, ns.w, prec)
    print(f"re={val.real:.17g} im={val.imag:.17g} err={err:.17g}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# meansquare


def _build_request(ns, T: float) -> MeanSquareRequest:
    kind = {"multi": "multi_hurwitz"}.get(ns.kind, ns.kind)
    kwargs = {"kind": kind, "sigma": ns.sigma, "a": ns.a, "T": T}
    if kind == "lerch":
        kwargs["lam"] = ns.lam if ns.lam is not None else Fraction(1)
    if kind == "multi_hurwitz":
        if ns.r is None:
            raise DomainError("--kind multi needs --r")
        kwargs["r"] = ns.r
    if kind == "barnes":
        if ns.w is None:
            raise DomainError("--kind barnes needs --w")
        kwargs["w"] = ns.w
    return MeanSquareRequest(**kwargs)


def _prediction_for(ns):
    if ns.predict in ("multi", "thm11"):
        r = ns.r if ns.r is not None else 1
        if ns.kind not in ("hurwitz", "multi"):
            raise DomainError("--predict multi applies to --kind hurwitz or multi")
        return predict_multi_mean_square(r, ns.sigma, ns.a)
    if ns.predict == "lerch":
        if ns.kind != "lerch":
            raise DomainError("--predict lerch applies to --kind lerch")
        lam = ns.lam if ns.lam is not None else Fraction(1)
        return predict_lerch_mean_square(ns.sigma, ns.a, lam)
    return None


def cmd_meansquare(ns, argv: Sequence[str]) -> int:
    if ns.out is None:
        print("error: --out PATH is required", file=sys.stderr)
        return EXIT_IO
    t0 = time.perf_counter()
    T_values = list(ns.T_grid) if ns.T_grid else []
    if ns.T is not None:
        T_values.append(ns.T)
    if not T_values:
        raise DomainError("need --T or --T-grid")
    T_values = sorted(set(T_values))
    req = _build_request(ns, T_values[-1])
    prec = _precision(ns)
    pred = _prediction_for(ns)

    measured = mean_square_grid(req, T_values, prec)
    rows = [measurement_row(req, T_eff, res) for T_eff, res in measured]
    write_measurements_csv(ns.out, rows)
    outputs = [ns.out]

    if pred is not None:
        report = residual_report(measured, pred)
        report_path = os.path.splitext(ns.out)[0] + ".predict.json"
        payload = {
            "prediction": {
                "branch": pred.branch,
                "terms": [list(term) for term in pred.terms],
                "error_exponent": pred.error_exponent,
                "error_log": pred.error_log,
            },
            "report": {
                "T_values": list(report.T_values),
                "ratios": list(report.ratios),
                "residuals": list(report.residuals),
                "fitted_exponent": report.fitted_exponent,
                "fitted_constant": report.fitted_constant,
                "monotone_ok": report.monotone_ok,
                "exponent_ok": report.exponent_ok,
                "passed": report.passed,
            },
        }
        with open(report_path, "w", newline="") as fh:
            fh.write(json.dumps(payload, sort_keys=True, indent=2) + "\n")
        outputs.append(report_path)

    manifest_path = ns.out + ".manifest.json"
    inputs = {
        "kind": ns.kind,
        "sigma": ns.sigma,
        "a": ns.a,
        "T_values": T_values,
        "lambda": str(ns.lam) if ns.lam is not None else None,
        "r": ns.r,
        "w": list(ns.w) if ns.w is not None else None,
        "predict": ns.predict,
    }
    extra = {
        "command_line": " ".join(argv),
        "outputs": outputs,
        "timing_wall_seconds": time.perf_counter() - t0,
    }
    with open(manifest_path, "w", newline="") as fh:
        fh.write(render_manifest(inputs, extra))
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify


def _run_suites(ns, out_dir: str):
    seeds = range(20) if ns.seed is None else (ns.seed,)
    if ns.suite == "envelopes":
        return default_verification_suites(out_dir)[:5]
    if ns.suite == "mv":
        return [mv_suite(seeds=seeds, out_dir=out_dir)]
    if ns.suite == "comparability":
        return [comparability(2, 1.0, (1.0, 2.0), 1.5, out_dir=out_dir)]
    if ns.suite == "oscillatory":
        return [oscillatory_suite(out_dir=out_dir)]
    if ns.suite == "coefficients":
        return [coefficient_identity_suite(out_dir=out_dir)]
    if ns.suite == "funceq":
        return [functional_equation_suite(out_dir=out_dir)]
    return [
        coefficient_identity_suite(out_dir=out_dir),
        functional_equation_suite(out_dir=out_dir),
    ] + default_verification_suites(out_dir)


def cmd_verify(ns, argv: Sequence[str]) -> int:
    if ns.out is None:
        print("error: --out DIR is required", file=sys.stderr)
        return EXIT_IO
    t0 = time.perf_counter()
    os.makedirs(ns.out, exist_ok=True)
    records = _run_suites(ns, ns.out)
    outputs: List[str] = []
    for rec in records:
        outputs.extend(rec.artifacts)
        status = "PASS" if rec.passed else "FAIL"
        print(
            f"{status} {rec.suite}: observed={rec.observed_constant:.6g} "
            f"threshold={rec.threshold:.6g}"
        )
    manifest_path = os.path.join(ns.out, f"verify_{ns.suite}.manifest.json")
    inputs = {"suite": ns.suite, "seed": ns.seed}
    extra = {
        "command_line": " ".join(argv),
        "outputs": sorted(outputs),
        "timing_wall_seconds": time.perf_counter() - t0,
    }
    with open(manifest_path, "w", newline="") as fh:
        fh.write(render_manifest(inputs, extra))
    return EXIT_OK if all(rec.passed for rec in records) else EXIT_VERIFY_FAILED


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zetaline",
        description="Zeta functions on vertical lines: values, mean squares, checks.",
    )
    parser.add_argument("--version", action="version", version=f"zetaline {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--threads", type=int, default=1,
                       help="cap on worker threads; results are identical for any value")
        p.add_argument("--rel-tol", type=float, default=None,
                       help="target relative tolerance for evaluations")

    p_eval = sub.add_parser("eval", help="evaluate one zeta value")
    p_eval.add_argument("--kind", required=True,
                        choices=("hurwitz", "lerch", "multi", "barnes"))
    p_eval.add_argument("--sigma", type=float, required=True)
    p_eval.add_argument("--t", type=float, required=True)
    p_eval.add_argument("--a", type=float, required=True)
    p_eval.add_argument("--lambda", dest="lam", type=_parse_lambda, default=None,
                        metavar="P/Q", help="twist parameter for --kind lerch")
    p_eval.add_argument("--r", type=int, default=None, help="rank for --kind multi")
    p_eval.add_argument("--w", type=_parse_floats, default=None,
                        metavar="F,F,...", help="weights for --kind barnes")
    common(p_eval)
    p_eval.set_defaults(func=cmd_eval)

    p_ms = sub.add_parser("meansquare", help="mean square along a vertical line")
    p_ms.add_argument("--kind", required=True,
                      choices=("hurwitz", "lerch", "multi", "barnes"))
    p_ms.add_argument("--sigma", type=float, required=True)
    p_ms.add_argument("--a", type=float, required=True)
    p_ms.add_argument("--lambda", dest="lam", type=_parse_lambda, default=None,
                      metavar="P/Q")
    p_ms.add_argument("--r", type=int, default=None)
    p_ms.add_argument("--w", type=_parse_floats, default=None, metavar="F,F,...")
    p_ms.add_argument("--T", type=float, default=None)
    p_ms.add_argument("--T-grid", dest="T_grid", type=_parse_floats, default=None,
                      metavar="F,F,...")
    p_ms.add_argument("--out", default=None, help="CSV output path")
    p_ms.add_argument("--predict", choices=("multi", "thm11", "lerch", "none"),
                      default="none",
                      help="compare against the mean-square prediction "
                           "(multi and thm11 are synonyms)")
    common(p_ms)
    p_ms.set_defaults(func=cmd_meansquare)

    p_v = sub.add_parser("verify", help="run check suites")
    p_v.add_argument("--suite", required=True, choices=SUITE_CHOICES)
    p_v.add_argument("--seed", type=int, default=None,
                     help="single RNG seed for the mv suite (default: seeds 0..19)")
    p_v.add_argument("--out", default=None, help="directory for verdict artifacts")
    common(p_v)
    p_v.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:  # argparse reports usage errors by exiting
        return int(exc.code or 0)
    try:
        return ns.func(ns, argv)
    except ProfileCacheError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except ResourceBudgetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except AccuracyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ACCURACY
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except ZetalineError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


def entry() -> int:
    return main()
