"""Command-line entry point.

Exit codes: 0 success, 1 a checked property is violated, 2 usage or input error.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import cost, scheduler
from .errors import ClosureError, KernelError, ReplayError, TraceParseError
from .flows import Window, accumulate, check_cycle_closure
from .graph import fundamental_cycles
from .ledger import replay
from .potential import solve_potential
from .traceio import parse_trace, parse_walk

OK, VIOLATION, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: error: {message}")


def fmt_real(x: float) -> str:
    return f"{x:.12g}"


def fmt_bool(b: bool) -> str:
    return "true" if b else "false"


def fmt_cycle(cycle) -> str:
    return "->".join(str(u) for u, _ in cycle) + f"->{cycle[0][0]}"


def _read(path: str) -> bytes:
    try:
        return Path(path).read_bytes()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _load_trace(path: str):
    data = _read(path)
    try:
        return parse_trace(data)
    except TraceParseError as exc:
        raise UsageError(f"{path}:{exc}") from None


def _window_flow(args, out):
    trace = _load_trace(args.trace)
    try:
        _, incs = replay(trace)
        return accumulate(incs, Window(args.t0, args.window))
    except KernelError as exc:
        raise UsageError(f"{args.trace}: {exc}") from None


def cmd_cost_eval(args, out):
    try:
        x = float(args.x)
        j = cost.eval_cost(x)
    except (ValueError, KernelError) as exc:
        raise UsageError(f"cost eval: {exc}") from None
    out.append(f"J={fmt_real(j)}")
    return OK


def cmd_cost_check(args, out):
    try:
        r = cost.check_grid(args.grid, args.lo, args.hi)
    except KernelError as exc:
        raise UsageError(f"cost check: {exc}") from None
    out.append(f"reciprocity_max={fmt_real(r.reciprocity)}")
    out.append(f"composition_max={fmt_real(r.composition)}")
    out.append(f"cost_min={fmt_real(r.min_cost)}")
    out.append(f"calibration_max={fmt_real(r.calibration)}")
    out.append(f"ok={fmt_bool(r.ok)}")
    return OK if r.ok else VIOLATION


def cmd_ledger_replay(args, out):
    trace = _load_trace(args.trace)
    try:
        final, _ = replay(trace, strict_unit=args.strict_unit)
    except ReplayError as exc:
        out.append(f"error=tick {exc.tick}: {exc.cause}")
        return VIOLATION
    out += [f"{n}={final.balances[n]}" for n in trace.graph.nodes]
    return OK


def cmd_flows_verify(args, out):
    f = _window_flow(args, out)
    report = check_cycle_closure(f, fundamental_cycles(f.graph))
    out.append(f"closed={fmt_bool(report.closed)}")
    for cyc, flux in report.violations:
        out.append(f"violation={fmt_cycle(cyc)} flux={flux}")
    return OK if report.closed else VIOLATION


def cmd_potential_solve(args, out):
    f = _window_flow(args, out)
    try:
        p = solve_potential(f)
    except ClosureError as exc:
        out.append("closed=false")
        out.append(f"violation={fmt_cycle(exc.cycle)} flux={exc.flux}")
        return VIOLATION
    out += [f"{n}={p.values[n]}" for n in f.graph.nodes]
    return OK


def cmd_schedule_gray(args, out):
    try:
        out += list(scheduler.gray_cycle(args.dim).sequence)
    except KernelError as exc:
        raise UsageError(str(exc)) from None
    return OK


def cmd_schedule_validate(args, out):
    try:
        w = parse_walk(_read(args.walk))
        r = scheduler.validate_walk(w, cyclic=args.cyclic)
    except KernelError as exc:
        raise UsageError(f"{args.walk}:{exc}") from None
    out.append(f"atomic={fmt_bool(r.atomic)}")
    out.append(f"complete={fmt_bool(r.complete)}")
    out.append(f"unique={fmt_bool(r.unique)}")
    out.append(f"period={r.period}")
    out.append(f"minimal_period={1 << w.d}")
    return OK if r.valid else VIOLATION


def cmd_schedule_dims(args, out):
    try:
        rows = scheduler.dimension_scan(args.max)
    except KernelError as exc:
        raise UsageError(str(exc)) from None
    out.append("d\tlcm\tpasses_gap45\tclosed_form\tclosed_form_agrees")
    for r in rows:
        out.append(f"{r.d}\t{r.lcm}\t{fmt_bool(r.passes_gap45)}\t{r.formula}\t{fmt_bool(r.formula_agrees)}")
    survivors = scheduler.surviving_dimensions(rows, args.assume_linking)
    out.append(f"linking_assumed={fmt_bool(args.assume_linking)}")
    out.append("surviving=" + ",".join(str(d) for d in survivors))
    bad = [r.d for r in rows if not r.formula_agrees]
    if bad:
        out.append(
            "note=closed form 2^max(d,3)*45 disagrees with lcm(2^d,45) at d="
            + ",".join(str(d) for d in bad)
            + "; lcm(2^d,45)=360 holds only at d=3"
        )
    return OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="ledgerkernel", description="Discrete ledger verification kernel.")
    sub = p.add_subparsers(dest="group", required=True, parser_class=_Parser)

    c = sub.add_parser("cost", help="reciprocal cost functional")
    cs = c.add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    e = cs.add_parser("eval", help="evaluate J(x)")
    e.add_argument("x")
    e.set_defaults(func=cmd_cost_eval)
    k = cs.add_parser("check", help="max residuals of the cost identities on a log grid")
    k.add_argument("--grid", type=int, default=100)
    k.add_argument("--lo", type=float, default=1e-3)
    k.add_argument("--hi", type=float, default=1e3)
    k.set_defaults(func=cmd_cost_check)

    lg = sub.add_parser("ledger", help="replay traces")
    ls = lg.add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    r = ls.add_parser("replay", help="print final balances in quantum units")
    r.add_argument("trace")
    r.add_argument("--strict-unit", action="store_true", help="only allow magnitudes +-1")
    r.set_defaults(func=cmd_ledger_replay)

    fl = sub.add_parser("flows", help="clearing-window cycle closure")
    fs = fl.add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    v = fs.add_parser("verify", help="check cycle closure of a window's cumulative flow")
    v.add_argument("trace")
    v.add_argument("--t0", type=int, required=True)
    v.add_argument("--window", type=int, required=True)
    v.set_defaults(func=cmd_flows_verify)

    po = sub.add_parser("potential", help="scalar potential of a cleared flow")
    ps = po.add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    s = ps.add_parser("solve", help="print node potentials in quantum units")
    s.add_argument("trace")
    s.add_argument("--t0", type=int, required=True)
    s.add_argument("--window", type=int, required=True)
    s.set_defaults(func=cmd_potential_solve)

    sc = sub.add_parser("schedule", help="Gray-code schedules on hypercubes")
    ss = sc.add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    gr = ss.add_parser("gray", help="print the Gray-code Hamiltonian cycle of Q_d")
    gr.add_argument("--dim", type=int, required=True)
    gr.set_defaults(func=cmd_schedule_gray)
    va = ss.add_parser("validate", help="check atomicity, completeness, uniqueness of a walk")
    va.add_argument("walk")
    va.add_argument("--cyclic", action="store_true")
    va.set_defaults(func=cmd_schedule_validate)
    di = ss.add_parser("dims", help="scan lcm(2^d, 45) = 360 over d = 1..max")
    di.add_argument("--max", type=int, required=True)
    di.add_argument("--assume-linking", action="store_true", help="also require d >= 3")
    di.set_defaults(func=cmd_schedule_dims)
    return p


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    out: list[str] = []
    try:
        args = build_parser().parse_args(argv)
        code = args.func(args, out)
    except UsageError as exc:
        print(exc, file=stderr)
        return USAGE
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    for line in out:
        print(line, file=stdout)
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
