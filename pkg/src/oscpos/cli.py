"""Command-line interface: ``oscpos {eval,certify,validate,zeros,sturm}``.

Exit codes: 0 success, 1 a check failed (validation case, certificate
contradicting its theorem, convexity check), 2 bad input or a violated
precondition, 3 a numerical procedure did not converge.  Output is built in
memory and written only once the command has finished, so a failing run
never leaves a partial file behind.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
import tempfile
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence

import numpy as np

from . import catalog, positivity, sturm, transforms, validation
from .errors import ConvergenceError, DomainError
from .kernels import KernelSpec
from .zeros import enumerate_zeros, mcmahon_estimate, trajectory_from_kernel

TOL_RANGE = (1e-13, 1e-3)
MAX_GRID = 1_000_000

# accepted spellings of the kernel names
KERNEL_ALIASES = {
    "sine": "sine", "sin": "sine",
    "cosine": "cosine", "cos": "cosine",
    "hankel": "hankel", "bessel": "hankel", "bessel_sqrt": "hankel", "j": "hankel",
    "scaled": "scaled", "scaled_bessel": "scaled",
    "y": "y", "neumann": "y", "neumann_sqrt": "y",
}

EVAL_COLUMNS = ("x", "value", "tail_bound", "n_arches")
CERTIFY_COLUMNS = ("x", "value", "tail_bound")
ZERO_COLUMNS = ("k", "zeta", "delta", "mcmahon", "residual")
STURM_COLUMNS = ("k", "zeta", "left_gap", "right_gap", "spacing_ok", "worst_margin", "passed")
VALIDATE_COLUMNS = ("family", "params", "x", "computed", "reference", "rel_error", "rel_tol", "passed", "note")


@dataclass
class RunConfig:
    command: str
    kernel: Optional[str] = None
    nu: Optional[float] = None
    alpha: Optional[float] = None
    function: Optional[str] = None
    params: Dict[str, float] = field(default_factory=dict)
    x_start: float = 1.0
    x_stop: Optional[float] = None
    x_count: int = 1
    x_log: bool = False
    tol: float = 1e-10
    theorem: Optional[str] = None
    fmt: str = "csv"
    out: Optional[str] = None

    def grid(self) -> List[float]:
        if not 1 <= self.x_count <= MAX_GRID:
            raise DomainError(f"--x-count must be in [1, {MAX_GRID}], got {self.x_count}", self.x_count)
        stop = self.x_start if self.x_stop is None else self.x_stop
        if not (math.isfinite(self.x_start) and math.isfinite(stop) and self.x_start > 0 and stop > 0):
            raise DomainError(f"grid endpoints must be finite and positive (start={self.x_start!r}, stop={stop!r})")
        if self.x_count == 1:
            return [float(self.x_start)]
        space = np.geomspace if self.x_log else np.linspace
        return [float(v) for v in space(self.x_start, stop, self.x_count)]


class Outcome:
    """Rendered output plus the exit code and an optional stderr message."""

    def __init__(self, text: str, code: int = 0, message: str = ""):
        self.text, self.code, self.message = text, code, message


# --------------------------------------------------------------------------
# parsing


def parse_params(text: Optional[str]) -> Dict[str, float]:
    """``"b=1,beta=0.5"`` -> ``{"b": 1.0, "beta": 0.5}``."""
    out: Dict[str, float] = {}
    if not text:
        return out
    for item in text.split(","):
        item = item.strip()
        if not item:
            continue
        key, sep, val = item.partition("=")
        if not sep or not key.strip():
            raise DomainError(f"malformed --params entry {item!r}; expected name=value", item)
        try:
            out[key.strip()] = float(val)
        except ValueError:
            raise DomainError(f"--params value for {key.strip()!r} is not a number: {val!r}", val) from None
    return out


def _common(p: argparse.ArgumentParser, fmt_default: str) -> None:
    p.add_argument("--tol", type=float, default=1e-10, help="target accuracy, in [1e-13, 1e-3]")
    p.add_argument("--format", dest="fmt", choices=("csv", "json"), default=fmt_default)
    p.add_argument("--out", help="write to this file instead of stdout")


def _grid_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--x-start", type=float, default=1.0)
    p.add_argument("--x-stop", type=float, default=None)
    p.add_argument("--x-count", type=int, default=1)
    p.add_argument("--x-log", action="store_true", help="geometric instead of linear spacing")


def _profile_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--function", required=True, help=f"profile family: {', '.join(sorted(catalog.FAMILIES))}")
    p.add_argument("--params", default="", help='family parameters, e.g. "gamma=1,delta=1,a=1"')


def _order_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--nu", type=float, default=None)
    p.add_argument("--alpha", type=float, default=None)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="oscpos", description="Oscillatory transforms and positivity checks.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate a transform on an x grid")
    p.add_argument("--kernel", required=True, help="sine, cosine, hankel, scaled or y")
    _order_flags(p)
    _profile_flags(p)
    _grid_flags(p)
    _common(p, "csv")

    p = sub.add_parser("certify", help="check a positivity theorem for a profile")
    p.add_argument("--theorem", required=True, choices=positivity.THEOREMS)
    p.add_argument("--kernel", default=None, help="kernel for M1/M3: sine, hankel or scaled")
    _order_flags(p)
    _profile_flags(p)
    _grid_flags(p)
    _common(p, "json")

    p = sub.add_parser("validate", help="compare against closed-form transforms")
    _common(p, "csv")
    p.set_defaults(tol=1e-11)

    p = sub.add_parser("zeros", help="list kernel zeros")
    p.add_argument("--kernel", required=True, help="sine, cosine, hankel, scaled or y")
    _order_flags(p)
    p.add_argument("--n", type=int, default=10, help="number of zeros")
    _common(p, "csv")
    p.set_defaults(tol=1e-12)

    p = sub.add_parser("sturm", help="oscillation criteria and arch convexity of a kernel")
    p.add_argument("--kernel", required=True, help="sine, hankel or scaled")
    _order_flags(p)
    p.add_argument("--mode", choices=("strict", "non_strict"), default="strict")
    p.add_argument("--reversed", action="store_true", help="expect arches to grow (decreasing phi)")
    p.add_argument("--span", type=float, default=40.0, help="check roots on (0, span]")
    _common(p, "csv")
    return parser


def _config(ns: argparse.Namespace) -> RunConfig:
    cfg = RunConfig(command=ns.command, tol=ns.tol, fmt=ns.fmt, out=ns.out)
    for name in ("nu", "alpha", "function", "theorem", "x_start", "x_stop", "x_count", "x_log"):
        if hasattr(ns, name):
            setattr(cfg, name, getattr(ns, name))
    if getattr(ns, "kernel", None) is not None:
        if ns.kernel not in KERNEL_ALIASES:
            raise DomainError(f"unknown kernel {ns.kernel!r}; choose from sine, cosine, hankel, scaled, y", ns.kernel)
        cfg.kernel = KERNEL_ALIASES[ns.kernel]
    if hasattr(ns, "params"):
        cfg.params = parse_params(ns.params)
    lo, hi = TOL_RANGE
    if not lo <= cfg.tol <= hi:
        raise DomainError(f"--tol must lie in [{lo:g}, {hi:g}], got {cfg.tol!r}", cfg.tol)
    return cfg


def _kernel_spec(name: str, nu: Optional[float], alpha: Optional[float]) -> KernelSpec:
    if name == "sine":
        return KernelSpec.sine()
    if name == "cosine":
        return KernelSpec.cosine()
    if nu is None:
        raise DomainError(f"kernel {name} needs --nu")
    if name == "hankel":
        return KernelSpec.bessel_sqrt(nu)
    if name == "y":
        return KernelSpec.neumann_sqrt(nu)
    if alpha is None:
        raise DomainError("kernel scaled needs --alpha")
    return KernelSpec.scaled_bessel(nu, alpha)


# --------------------------------------------------------------------------
# rendering


def _cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, (bool, np.bool_)):
        return "true" if v else "false"
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    if isinstance(v, (float, np.floating)):
        return format(float(v), ".17g")
    return str(v)


def render_csv(columns: Sequence[str], rows: Sequence[Sequence], comments: Sequence[str] = ()) -> str:
    buf = io.StringIO()
    for line in comments:
        buf.write(f"# {line}\n")
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(columns)
    for row in rows:
        w.writerow([_cell(v) for v in row])
    return buf.getvalue()


def _plain(obj):
    """JSON-safe copy: numpy scalars to Python, non-finite floats to null."""
    if isinstance(obj, dict):
        return {str(k): _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(v) for v in obj]
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        v = float(obj)
        return v if math.isfinite(v) else None
    return obj


def render_json(obj) -> str:
    return json.dumps(_plain(obj), indent=2) + "\n"


# --------------------------------------------------------------------------
# commands


def cmd_eval(cfg: RunConfig) -> Outcome:
    if cfg.kernel not in transforms.TRANSFORMS:
        raise DomainError(f"unknown kernel {cfg.kernel!r}")
    f = catalog.make_profile(cfg.function, cfg.params)
    grid = cfg.grid()

    def one(x):
        return transforms.evaluate(cfg.kernel, f, x, cfg.tol, nu=cfg.nu, alpha=cfg.alpha)

    rows = [(x, v, b, n) for x, (v, b, n) in zip(grid, positivity.ordered_map(one, grid))]
    if cfg.fmt == "csv":
        return Outcome(render_csv(EVAL_COLUMNS, rows))
    doc = {
        "command": "eval", "kernel": cfg.kernel, "nu": cfg.nu, "alpha": cfg.alpha,
        "function": cfg.function, "params": cfg.params, "profile": f.name, "tol": cfg.tol,
        "rows": [dict(zip(EVAL_COLUMNS, r)) for r in rows],
    }
    return Outcome(render_json(doc))


def cmd_certify(cfg: RunConfig) -> Outcome:
    f = catalog.make_profile(cfg.function, cfg.params)
    kernel = None
    if cfg.theorem in ("M1", "M3"):
        if cfg.kernel is None:
            raise DomainError(f"theorem {cfg.theorem} needs --kernel")
        kernel = _kernel_spec(cfg.kernel, cfg.nu, cfg.alpha)
    elif cfg.theorem in ("H1", "H2", "F", "Y") and cfg.nu is None:
        raise DomainError(f"theorem {cfg.theorem} needs --nu")
    cert = positivity.certify(cfg.theorem, f, cfg.grid(), nu=cfg.nu, kernel=kernel,
                              alpha=cfg.alpha, tol=cfg.tol)
    expected = cert.verdict == cert.expected_verdict
    excused = cert.verdict == "not_certified" and not cert.hypotheses.holds
    code = 0 if (expected or excused) else 1
    message = "" if code == 0 else f"verdict {cert.verdict}: {cert.cause}"
    if cfg.fmt == "json":
        return Outcome(render_json(cert.to_dict()), code, message)
    comments = [f"theorem={cert.theorem} case={cert.case} profile={cert.profile}",
                f"verdict={cert.verdict} expected_sign={cert.expected_sign}"]
    comments += [f"hypothesis {h['name']}: {h['status']}" for h in cert.hypotheses.as_list()]
    rows = list(zip(cert.grid, cert.values, cert.tail_bounds))
    return Outcome(render_csv(CERTIFY_COLUMNS, rows, comments), code, message)


def cmd_validate(cfg: RunConfig) -> Outcome:
    rows = validation.run_all(cfg.tol, map_fn=positivity.ordered_map)
    failed = [r for r in rows if not r.passed]
    code, message = 0, ""
    if failed:
        worst = max(failed, key=lambda r: r.rel_error / r.rel_tol if math.isfinite(r.rel_error) else math.inf)
        code = 1
        message = (f"{len(failed)} of {len(rows)} cases failed; worst: {worst.family}[{worst.params}] "
                   f"x={worst.x:g} rel_error={worst.rel_error:.3g} {worst.note}").rstrip()
    if cfg.fmt == "csv":
        text = render_csv(VALIDATE_COLUMNS, [[getattr(r, c) for c in VALIDATE_COLUMNS] for r in rows])
    else:
        text = render_json({"command": "validate", "tol": cfg.tol, "passed": not failed,
                            "rows": [r.as_dict() for r in rows]})
    return Outcome(text, code, message)


def _mcmahon(cfg: RunConfig, k: int) -> float:
    if cfg.kernel == "sine":
        return k * math.pi
    if cfg.kernel == "cosine":
        return (k - 0.5) * math.pi
    if cfg.kernel == "hankel":
        return mcmahon_estimate(cfg.nu, k)
    if cfg.kernel == "scaled":
        return mcmahon_estimate(cfg.nu, k) ** (1.0 / cfg.alpha)
    # zeros of Y_nu(t) ~ sin(t - nu pi/2 - pi/4): (m + nu/2 + 1/4) pi, counted
    # from the first positive one
    shift = cfg.nu / 2.0 + 0.25
    first = 0 if shift > 0.0 else 1
    return (first + k - 1 + shift) * math.pi


def cmd_zeros(cfg: RunConfig, n: int) -> Outcome:
    if not 1 <= n <= MAX_GRID:
        raise DomainError(f"--n must be in [1, {MAX_GRID}], got {n}", n)
    kernel = _kernel_spec(cfg.kernel, cfg.nu, cfg.alpha)
    seq = enumerate_zeros(kernel, n + 1, cfg.tol)
    z = seq.zeros
    rows = [(k, z[k - 1], z[k] - z[k - 1], _mcmahon(cfg, k), abs(kernel(z[k - 1]))) for k in range(1, n + 1)]
    if cfg.fmt == "csv":
        return Outcome(render_csv(ZERO_COLUMNS, rows))
    doc = {"command": "zeros", "kernel": kernel.label, "tol": cfg.tol,
           "rows": [dict(zip(ZERO_COLUMNS, r)) for r in rows]}
    return Outcome(render_json(doc))


def cmd_sturm(cfg: RunConfig, mode: str, reversed_: bool, span: float) -> Outcome:
    if cfg.kernel not in ("sine", "hankel", "scaled"):
        raise DomainError(f"sturm supports the sine, hankel and scaled kernels, not {cfg.kernel!r}", cfg.kernel)
    if not (math.isfinite(span) and span > 0):
        raise DomainError(f"--span must be positive, got {span!r}", span)
    kernel = _kernel_spec(cfg.kernel, cfg.nu, cfg.alpha)
    classification = sturm.classify_oscillation(kernel.normal_form_phi())
    report = sturm.check_arch_convexity(trajectory_from_kernel(kernel, span), mode=mode, reversed=reversed_)
    rows = [(r.k, r.zeta, r.left_gap, r.right_gap, r.spacing_ok, r.worst_margin, r.passed) for r in report.rows]
    code = 0 if report.passed else 1
    message = "" if code == 0 else f"arch convexity fails ({mode}, reversed={reversed_})"
    cls = classification.as_dict()
    if cfg.fmt == "csv":
        comments = [f"kernel={kernel.label} phi={kernel.normal_form_phi().name}",
                    "classification " + " ".join(f"{k}={cls[k]}" for k in ("a1", "a2", "a3", "b1", "b2")),
                    f"convexity mode={mode} reversed={_cell(reversed_)} passed={_cell(report.passed)} "
                    f"worst_margin={_cell(report.worst_margin)}"]
        return Outcome(render_csv(STURM_COLUMNS, rows, comments), code, message)
    doc = {
        "command": "sturm", "kernel": kernel.label, "phi": kernel.normal_form_phi().name,
        "classification": cls,
        "convexity": {"mode": mode, "reversed": reversed_, "span": span, "passed": report.passed,
                      "worst_margin": report.worst_margin,
                      "rows": [dict(zip(STURM_COLUMNS, r)) for r in rows]},
    }
    return Outcome(render_json(doc), code, message)


def run(ns: argparse.Namespace) -> Outcome:
    cfg = _config(ns)
    if cfg.command == "eval":
        return cmd_eval(cfg)
    if cfg.command == "certify":
        return cmd_certify(cfg)
    if cfg.command == "validate":
        return cmd_validate(cfg)
    if cfg.command == "zeros":
        return cmd_zeros(cfg, ns.n)
    return cmd_sturm(cfg, ns.mode, ns.reversed, ns.span)


def _write(text: str, path: Optional[str]) -> None:
    if path is None:
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".oscpos-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def main(argv: Optional[Sequence[str]] = None) -> int:
    ns = build_parser().parse_args(argv)
    try:
        outcome = run(ns)
    except DomainError as exc:
        print(f"oscpos: error: {exc}", file=sys.stderr)
        return 2
    except ConvergenceError as exc:
        print(f"oscpos: did not converge: {exc}", file=sys.stderr)
        return 3
    _write(outcome.text, ns.out)
    if outcome.message:
        print(f"oscpos: {outcome.message}", file=sys.stderr)
    return outcome.code


if __name__ == "__main__":
    sys.exit(main())
