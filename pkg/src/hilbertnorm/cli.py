"""Command-line surface: apply the operator, compute norms and bounds,
run verification sweeps, emit tables.

JSON is the machine interface, CSV the table interface; numbers are written
in shortest round-trip form so binary64 values survive a round trip. The
same configuration always produces byte-identical output. HILBERTNORM_THREADS
caps sweep parallelism (default 1).

Exit codes: 0 success; 1 domain/validation error (the message names the
violated precondition); 2 accuracy/convergence failure, with best-effort
partial output on stdout.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor

from .errors import AccuracyError, DomainError, EvaluationError
from .function_space import TaylorFunction, bergman_norm, korenblum_norm
from .hilbert_op import hilbert_coeffs, hilbert_integral_result
from .lemma_verify import margin_rows, run_verification
from .quadrature import QuadratureConfig
from .wco_norms import hinf_bound_breakdown, tt_norm

_LEMMAS = ("beta_bound", "beta_2p", "Fp_nonpositive")


class _Parser(argparse.ArgumentParser):
    """argparse exits with code 2 on bad usage; the contract wants 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"error: {message}\n")
        raise SystemExit(1)


def _parse_at(text: str) -> complex:
    parts = text.split(",")
    try:
        if len(parts) == 1:
            return complex(float(parts[0]), 0.0)
        if len(parts) == 2:
            return complex(float(parts[0]), float(parts[1]))
    except ValueError:
        pass
    raise DomainError(f"--at expects 're' or 're,im', got {text!r}")


def _parse_range(text: str) -> list[float]:
    """'start:step:stop' (inclusive) or a single value."""
    if ":" not in text:
        return [float(text)]
    parts = text.split(":")
    if len(parts) != 3:
        raise DomainError(f"range must be start:step:stop, got {text!r}")
    start, step, stop = (float(p) for p in parts)
    if step <= 0 or stop < start:
        raise DomainError(f"range requires step > 0 and stop >= start, got {text!r}")
    n = int(math.floor((stop - start) / step + 1e-9)) + 1
    return [start + k * step for k in range(n)]


def _load_coeffs(path: str) -> TaylorFunction:
    try:
        with open(path) as fh:
            data = json.load(fh)
    except OSError as exc:
        raise DomainError(f"--coeffs file not readable: {exc}")
    except json.JSONDecodeError as exc:
        raise DomainError(f"--coeffs file is not valid JSON: {exc}")
    return TaylorFunction.from_json(data)


def _c2j(z: complex) -> list[float]:
    z = complex(z)
    return [z.real, z.imag]


def _quad_cfg(args) -> QuadratureConfig:
    if getattr(args, "tol", None) is None:
        return QuadratureConfig()
    return QuadratureConfig(target_abs_tol=args.tol)


def _threads() -> int:
    raw = os.environ.get("HILBERTNORM_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


# --------------------------------------------------------------------------
# command handlers: each returns (payload_dict, rows) with exactly one set
# --------------------------------------------------------------------------


def _cmd_apply(args):
    f = _load_coeffs(args.coeffs)
    if args.method == "coeffs":
        out = hilbert_coeffs(f, args.length)
        if args.at is None:
            return {"op": "apply", "method": "coeffs", "coeffs": out.to_json()}, None
        z = _parse_at(args.at)
        if abs(z) >= 1.0:
            raise DomainError(f"evaluation point must satisfy |z| < 1, got |z| = {abs(z)}")
        return {
            "op": "apply",
            "method": "coeffs",
            "at": _c2j(z),
            "value": _c2j(out(z)),
        }, None
    if args.at is None:
        raise DomainError("--method integral requires --at")
    z = _parse_at(args.at)
    res = hilbert_integral_result(f, z, _quad_cfg(args))
    return {
        "op": "apply",
        "method": "integral",
        "at": _c2j(z),
        "value": _c2j(res.value),
        "err_estimate": res.err_estimate,
        "evals": res.evals,
    }, None


def _cmd_norm(args):
    f = _load_coeffs(args.coeffs)
    if args.space == "ap":
        if args.p is None:
            raise DomainError("--space ap requires --p")
        est = bergman_norm(f, args.p, _quad_cfg(args))
        return {"op": "norm", "space": "ap", "p": args.p, **est.to_json()}, None
    if args.alpha is None:
        raise DomainError("--space hinf requires --alpha")
    est = korenblum_norm(f, args.alpha)
    return {"op": "norm", "space": "hinf", "alpha": args.alpha, **est.to_json()}, None


def _cmd_tnorm(args):
    bk = tt_norm(args.alpha, args.t)
    return {
        "op": "tnorm",
        "alpha": bk.alpha,
        "t": bk.t,
        "regime": bk.regime,
        "x0": bk.x0,
        "value": bk.value,
    }, None


def _cmd_bound(args):
    if args.space == "hinf":
        if args.alpha is None:
            raise DomainError("--space hinf requires --alpha")
        return {"op": "bound", "space": "hinf", **hinf_bound_breakdown(args.alpha, _quad_cfg(args))}, None
    if args.p is None:
        raise DomainError("--space ap requires --p")
    if not 2.0 < args.p < 4.0:
        raise DomainError(f"--p must be in (2, 4), got {args.p}")
    return {
        "op": "bound",
        "space": "ap",
        "p": args.p,
        "value": math.pi / math.sin(2.0 * math.pi / args.p),
    }, None


def _cmd_verify(args):
    if args.format == "csv":
        header, rows = margin_rows(args.lemma, cfg=_quad_cfg(args))
        return None, [dict(zip(header, row)) for row in rows]
    report = run_verification(args.lemma, cfg=_quad_cfg(args))
    return {"op": "verify", **report.to_json()}, None


def _sweep_rows(values, fn):
    def safe(v):
        try:
            row = fn(v)
            row.setdefault("error", None)
            return row
        except Exception as exc:  # row-level failure must not abort the sweep
            return {"error": f"{type(exc).__name__}: {exc}"}

    n = _threads()
    if n > 1:
        with ThreadPoolExecutor(max_workers=n) as pool:
            return list(pool.map(safe, values))
    return [safe(v) for v in values]


def _cmd_sweep(args):
    cfg = _quad_cfg(args)
    if args.what == "bound":
        if args.alpha is None:
            raise DomainError("sweep bound requires --alpha (value or start:step:stop)")
        values = _parse_range(args.alpha)

        def row(a):
            return dict(hinf_bound_breakdown(a, cfg))

        return None, _sweep_rows(values, row)
    if args.what == "tnorm":
        if args.alpha is None or args.t is None:
            raise DomainError("sweep tnorm requires --alpha (fixed) and --t (range)")
        alpha = float(args.alpha)
        values = _parse_range(args.t)

        def row(t):
            bk = tt_norm(alpha, t)
            return {"alpha": bk.alpha, "t": bk.t, "regime": bk.regime, "x0": bk.x0, "value": bk.value}

        return None, _sweep_rows(values, row)
    # apnorm: reference values pi/sin(2 pi / p)
    if args.p is None:
        raise DomainError("sweep apnorm requires --p (value or start:step:stop)")
    values = _parse_range(args.p)

    def row(p):
        if not 2.0 < p < 4.0:
            raise DomainError(f"p must be in (2, 4), got {p}")
        return {"p": p, "value": math.pi / math.sin(2.0 * math.pi / p)}

    return None, _sweep_rows(values, row)


# --------------------------------------------------------------------------
# output
# --------------------------------------------------------------------------


def _fmt_cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, float):
        return repr(float(v))  # plain float repr even for numpy scalars
    return str(v)


def _render(payload, rows, fmt: str) -> str:
    if fmt == "json":
        obj = payload if payload is not None else rows
        return json.dumps(obj, indent=2) + "\n"
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    if rows is None:
        rows = [payload]
    keys: list[str] = []
    for r in rows:
        for k in r:
            if k not in keys:
                keys.append(k)
    writer.writerow(keys)
    for r in rows:
        writer.writerow([_fmt_cell(_flatten(r.get(k))) for k in keys])
    return buf.getvalue()


def _flatten(v):
    if isinstance(v, (dict, list)):
        return json.dumps(v)
    return v


def _emit(text: str, out_path: str | None):
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hilbertnorm", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, *, tol=True):
        p.add_argument("--format", choices=("json", "csv"), default="json")
        p.add_argument("--out", default=None, help="write output to this path instead of stdout")
        if tol:
            p.add_argument("--tol", type=float, default=None, help="quadrature absolute tolerance")

    p = sub.add_parser("apply", help="apply the operator to a coefficient file")
    p.add_argument("--method", choices=("coeffs", "integral"), default="coeffs")
    p.add_argument("--coeffs", required=True, help="JSON file: list of [re, im] pairs")
    p.add_argument("--at", default=None, help="evaluation point 're,im'")
    p.add_argument("--length", type=int, default=None, help="output coefficient count (coeffs method)")
    common(p)

    p = sub.add_parser("norm", help="norm of a coefficient file in a chosen space")
    p.add_argument("--space", choices=("ap", "hinf"), required=True)
    p.add_argument("--p", type=float, default=None)
    p.add_argument("--alpha", type=float, default=None)
    p.add_argument("--coeffs", required=True)
    common(p)

    p = sub.add_parser("tnorm", help="closed-form norm of the composition operator T_t")
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--t", type=float, required=True)
    common(p, tol=False)

    p = sub.add_parser("bound", help="operator-norm bounds")
    p.add_argument("--space", choices=("ap", "hinf"), required=True)
    p.add_argument("--p", type=float, default=None)
    p.add_argument("--alpha", type=float, default=None)
    common(p)

    p = sub.add_parser("verify", help="run a verification sweep")
    p.add_argument("lemma", choices=_LEMMAS)
    common(p)

    p = sub.add_parser("sweep", help="tabulate a quantity over a parameter range")
    p.add_argument("what", choices=("bound", "tnorm", "apnorm"))
    p.add_argument("--alpha", default=None)
    p.add_argument("--t", default=None)
    p.add_argument("--p", default=None)
    common(p)

    return parser


_HANDLERS = {
    "apply": _cmd_apply,
    "norm": _cmd_norm,
    "tnorm": _cmd_tnorm,
    "bound": _cmd_bound,
    "verify": _cmd_verify,
    "sweep": _cmd_sweep,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        payload, rows = _HANDLERS[args.command](args)
    except DomainError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1
    except (AccuracyError, EvaluationError) as exc:
        partial = {"error": str(exc)}
        best = getattr(exc, "best", None)
        if best is not None:
            partial["partial"] = {
                "value": _c2j(best.value) if isinstance(best.value, complex) else best.value,
                "err_estimate": best.err_estimate,
                "evals": best.evals,
            }
        sys.stdout.write(json.dumps(partial, indent=2) + "\n")
        sys.stderr.write(f"error: {exc}\n")
        return 2
    _emit(_render(payload, rows, args.format), args.out)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
