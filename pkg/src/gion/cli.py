"""``gion`` command line.

Exit codes: 0 success, 1 internal or I/O error, 2 infeasible input,
3 verification failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import dataclass, field
from fractions import Fraction

from . import geometry as geo
from .oracle import verify_solution
from .ratpoly import EndpointRootError, RatPoly, irreducibility_certificate, sturm_count
from .solver import STURM_CAP, InfeasibleInputError, classify, solve
from .svgplot import plot_svg

EXIT_OK, EXIT_ERROR, EXIT_INFEASIBLE, EXIT_VERIFY = 0, 1, 2, 3
DIGITS = 12
VERIFY_THRESHOLD = 1e-8


def fmt(v):
    """Fix floats at 12 significant digits; leave other values alone."""
    if isinstance(v, bool) or v is None:
        return v
    if isinstance(v, float):
        return float(f"{v:.{DIGITS}g}")
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, (list, tuple)):
        return [fmt(x) for x in v]
    if isinstance(v, dict):
        return {k: fmt(x) for k, x in v.items()}
    return v


@dataclass
class OutputRecord:
    mode: str
    inputs: dict = field(default_factory=dict)
    outputs: dict = field(default_factory=dict)
    diagnostics: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "mode": self.mode,
            "inputs": fmt(self.inputs),
            "outputs": fmt(self.outputs),
            "diagnostics": fmt(self.diagnostics),
        }

    @classmethod
    def from_dict(cls, data: dict) -> OutputRecord:
        return cls(data["mode"], data["inputs"], data["outputs"], data["diagnostics"])

    def render(self, fmt_name: str = "text") -> str:
        data = self.to_dict()
        if fmt_name == "json":
            return json.dumps(data, indent=2, ensure_ascii=False) + "\n"
        flat = {"mode": data["mode"]}
        for section in ("inputs", "outputs", "diagnostics"):
            for k, v in data[section].items():
                flat[f"{section}.{k}"] = v
        if fmt_name == "csv":
            buf = io.StringIO()
            w = csv.writer(buf, lineterminator="\n")
            w.writerow(flat.keys())
            w.writerow(_cell(v) for v in flat.values())
            return buf.getvalue()
        lines = [f"mode: {data['mode']}"]
        for section in ("inputs", "outputs", "diagnostics"):
            if data[section]:
                lines.append(f"{section}:")
                lines += [f"  {k}: {_cell(v)}" for k, v in data[section].items()]
        return "\n".join(lines) + "\n"


def _cell(v) -> str:
    if isinstance(v, float):
        return f"{v:.{DIGITS}g}"
    if isinstance(v, list):
        return " ".join(_cell(x) for x in v)
    if v is None:
        return ""
    return str(v)


# --- argument parsing helpers ----------------------------------------------


def parse_number(text: str):
    """``"num/den"`` gives an exact Fraction, anything else a float."""
    text = text.strip()
    if "/" in text:
        return Fraction(text)
    return float(text)


def parse_angle(text: str) -> float:
    text = text.strip().lower()
    if text in ("max", "phi0"):
        return geo.constants().phi0
    if text.endswith("deg"):
        return math.radians(float(text[:-3]))
    if text.endswith("rad"):
        text = text[:-3]
    return float(text)


class UserError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


# --- commands ----------------------------------------------------------------


def cmd_solve(p, q, tol: float = 1e-12) -> OutputRecord:
    feas = classify(p, q)
    rec = OutputRecord("solve", {"p": p, "q": q, "tol": tol})
    rec.diagnostics["feasibility"] = feas.verdict.value
    if not feas:
        raise UserError(f"infeasible: {feas.describe()}", EXIT_INFEASIBLE)
    sol = solve(p, q, tol)
    rec.outputs = {"a": sol.a, "m": sol.m, "s": sol.s, "d": sol.d, "t": sol.t}
    rec.diagnostics.update(
        p_residual=sol.p_residual,
        q_residual=sol.q_residual,
        root_bracket=list(sol.root_bracket),
        iterations=sol.iterations,
        method=sol.method,
    )
    return rec


def _t_of(param: str, value: float) -> float:
    if param == "t":
        return value
    if param == "x":
        return geo.t_from_x(value)
    if param == "r":
        return geo.t_from_x(geo.x_from_r(value))
    return geo.t_from_x(geo.x_from_r(geo.r_from_phi(value)))


def cmd_forward(param: str, value: float, scale: str = "unit") -> OutputRecord:
    chains = {
        "phi": geo.quantities_from_phi,
        "r": geo.quantities_from_r,
        "x": geo.quantities_from_x,
        "t": geo.quantities_from_t_unit,
    }
    rec = OutputRecord("forward", {param: value, "scale": scale})
    try:
        qty = chains[param](value)
        t = min(_t_of(param, value), geo.constants().t0)
    except geo.InfeasibleParameterError as exc:
        raise UserError(f"infeasible: {exc}", EXIT_INFEASIBLE) from exc
    if scale == "natural":
        qty = geo.quantities_from_t_scaled(t) if param == "t" else qty.scaled(float(geo.natural_radius(t)))
    a, m, s, d = (float(v) for v in qty.as_tuple())
    rec.outputs = {"a": a, "m": m, "s": s, "d": d, "p": a + m + s + d, "q": m / a + d / m + s / d, "t": t}
    rec.diagnostics["arc_radius"] = 1.0 if scale == "unit" else float(geo.natural_radius(t))
    return rec


SCAN_COLUMNS = ("t", "q", "p", "a", "m", "s", "d")


def scan_rows(n: int) -> list[tuple[float, ...]]:
    """Rows on ``t = t0 * i / n`` for ``i = 1..n``, natural scale."""
    if n < 2:
        raise ValueError("n must be at least 2")
    t0 = geo.constants().t0
    rows = []
    for i in range(1, n + 1):
        t = t0 if i == n else t0 * i / n
        p, q = geo.pq_of_t(t)
        qty = geo.quantities_from_t_scaled(t)
        rows.append((t, q, p, *(float(v) for v in qty.as_tuple())))
    return rows


def write_scan(n: int, out) -> None:
    w = csv.writer(out, lineterminator="\n")
    w.writerow(SCAN_COLUMNS)
    for row in scan_rows(n):
        w.writerow(f"{v:.{DIGITS}g}" for v in row)


def cmd_verify(p, q) -> tuple[OutputRecord, int]:
    rec = cmd_solve(p, q)
    rec.mode = "verify"
    sol = solve(p, q)
    report = verify_solution(sol, p, q)
    rec.diagnostics.update(
        max_deviation=report.max_deviation,
        phi=report.phi,
        arc_radius=report.radius,
        threshold=VERIFY_THRESHOLD,
    )
    if geo.constants().q0 - float(q) < 1e-6:
        rec.diagnostics["note"] = "q lies within 1e-6 of the upper bound q0"
    ok = report.max_deviation <= VERIFY_THRESHOLD
    rec.diagnostics["verified"] = ok
    return rec, EXIT_OK if ok else EXIT_VERIFY


def cmd_certify(q: Fraction) -> OutputRecord:
    poly = geo.gion_polynomial(q)
    rec = OutputRecord("certify", {"q": q})
    rec.outputs["coefficients"] = [str(c) for c in (poly[i] for i in range(11))]
    zero_mult = 0
    work = poly
    while work and work[0] == 0:
        work = RatPoly(work.coeffs[1:])
        zero_mult += 1
    if zero_mult:
        rec.outputs["zero_root_multiplicity"] = zero_mult
    try:
        count = sturm_count(work, 0, STURM_CAP)
    except EndpointRootError as exc:
        count = f"undefined: {exc}"
    rec.outputs["interval"] = f"(0, {STURM_CAP}]"
    rec.outputs["root_count"] = count
    cert = irreducibility_certificate(poly)
    rec.outputs["verdict"] = cert.verdict.value
    rec.outputs["witness"] = None if cert.witness is None else str(cert.witness)
    rec.diagnostics["primes_tried"] = list(cert.primes_tried)
    rec.diagnostics["feasibility"] = classify(1.0, q).verdict.value
    return rec


# --- entry point -------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gion", description="Gion shrine problem solver")
    sub = parser.add_subparsers(dest="command", required=True)

    def fmt_flag(sp):
        sp.add_argument("--format", choices=("text", "json", "csv"), default="text")

    sp = sub.add_parser("solve", help="recover a, m, s, d from p and q")
    sp.add_argument("--p", type=parse_number, required=True)
    sp.add_argument("--q", type=parse_number, required=True)
    sp.add_argument("--tol", type=float, default=1e-12)
    fmt_flag(sp)

    sp = sub.add_parser("forward", help="evaluate the figure from phi, r, x or t")
    g = sp.add_mutually_exclusive_group(required=True)
    g.add_argument("--phi", type=parse_angle, help="radians, or with a 'deg' suffix; 'max' for phi0")
    g.add_argument("--r", type=float)
    g.add_argument("--x", type=float)
    g.add_argument("--t", type=float)
    sp.add_argument("--scale", choices=("unit", "natural"), default="unit")
    fmt_flag(sp)

    sp = sub.add_parser("scan", help="tabulate the figure over (0, t0]")
    sp.add_argument("--n", type=int, default=100)
    sp.add_argument("--output", default="-")

    sp = sub.add_parser("plot", help="write an SVG plot")
    sp.add_argument("--kind", choices=("q_of_t", "phi_of_q"), default="q_of_t")
    sp.add_argument("--output", required=True)
    sp.add_argument("--samples", type=int, default=400)

    sp = sub.add_parser("verify", help="solve and cross-check against the geometric construction")
    sp.add_argument("--p", type=parse_number, required=True)
    sp.add_argument("--q", type=parse_number, required=True)
    fmt_flag(sp)

    sp = sub.add_parser("certify", help="exact root count and irreducibility of P(t, q)")
    sp.add_argument("--q", type=Fraction, help="rational q, e.g. 9/4")
    sp.add_argument("--q-num", type=int)
    sp.add_argument("--q-den", type=int, default=1)
    fmt_flag(sp)
    return parser


def _write_text(path: str, text: str, stdout) -> None:
    if path == "-":
        stdout.write(text)
        return
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)


def main(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    args = build_parser().parse_args(argv)
    code = EXIT_OK
    try:
        if args.command == "solve":
            rec = cmd_solve(args.p, args.q, args.tol)
        elif args.command == "forward":
            param = next(k for k in ("phi", "r", "x", "t") if getattr(args, k) is not None)
            rec = cmd_forward(param, getattr(args, param), args.scale)
        elif args.command == "verify":
            rec, code = cmd_verify(args.p, args.q)
        elif args.command == "certify":
            if args.q is not None:
                q = args.q
            elif args.q_num is not None:
                if args.q_den <= 0:
                    raise UserError("--q-den must be positive", EXIT_ERROR)
                q = Fraction(args.q_num, args.q_den)
            else:
                raise UserError("give --q or --q-num/--q-den", EXIT_ERROR)
            rec = cmd_certify(q)
        elif args.command == "scan":
            buf = io.StringIO()
            write_scan(args.n, buf)
            _write_text(args.output, buf.getvalue(), stdout)
            return EXIT_OK
        else:
            _write_text(args.output, plot_svg(args.kind, args.samples), stdout)
            return EXIT_OK
    except UserError as exc:
        stderr.write(f"gion: {exc}\n")
        return exc.code
    except InfeasibleInputError as exc:
        stderr.write(f"gion: {exc}\n")
        return EXIT_INFEASIBLE
    except (OSError, ValueError, RuntimeError) as exc:
        stderr.write(f"gion: error: {exc}\n")
        return EXIT_ERROR
    stdout.write(rec.render(getattr(args, "format", "text")))
    return code


if __name__ == "__main__":
    sys.exit(main())
