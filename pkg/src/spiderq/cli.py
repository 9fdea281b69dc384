"""Command-line front end.

    spiderq braid n=2 w=[1,1,1] colors=[1,1] --close --invariant normalized --generic
    spiderq pd X[1,5,2,4] X[3,1,4,6] X[5,3,6,2] signs=[1,1,1] --reduced --at d=0
    spiderq braid n=2 w=[1,1,1] --close --check m=2 n=1 --check m=1 n=0

Exit codes: 0 success, 2 parse error, 3 evaluation error, 4 cross-check
disagreement.  The report goes to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from dataclasses import dataclass, field
from typing import Sequence

from . import howe, spider
from .scalar import Scalar, specialize
from .tangle import TangleDiagram, TangleParseError, close, cut_strand, parse_text

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_EVAL = 3
EXIT_MISMATCH = 4

INVARIANTS = ("framed", "normalized", "reduced")


class UsageError(ValueError):
    pass


@dataclass
class JobSpec:
    text: str
    invariant: str = "framed"
    close: bool = False
    generic: bool = False
    at: list[int] = field(default_factory=list)
    checks: list[tuple[int, int]] = field(default_factory=list)
    component: int = 0
    cut_at: int = 0
    fmt: str = "text"
    timing: bool = False

    def __post_init__(self) -> None:
        if self.invariant not in INVARIANTS:
            raise UsageError(f"unknown invariant {self.invariant!r}")
        if self.fmt not in ("text", "json"):
            raise UsageError(f"unknown format {self.fmt!r}")
        for m, n in self.checks:
            if m < 0 or n < 0 or m + n == 0:
                raise UsageError(f"bad oracle pair m={m} n={n}")


def thread_cap() -> int:
    """Value of SPIDERQ_THREADS (default 1).  The evaluators run in one thread,
    so the cap is only validated."""
    raw = os.environ.get("SPIDERQ_THREADS", "").strip()
    if not raw:
        return 1
    try:
        k = int(raw)
    except ValueError:
        raise UsageError(f"SPIDERQ_THREADS must be a positive integer, got {raw!r}") from None
    if k < 1:
        raise UsageError(f"SPIDERQ_THREADS must be a positive integer, got {raw!r}")
    return k


def _oracle(t: TangleDiagram, job: JobSpec, m: int, n: int) -> Scalar:
    d = m - n
    if job.invariant == "reduced":
        cut = cut_strand(t, job.component, job.cut_at)
        op = howe.rt_eval(m, n, cut)
        (a,) = cut.bottom.signed()
        basis = howe.wedge_basis(m, n, abs(a))
        if not basis:
            raise ValueError(f"exterior power {abs(a)} vanishes for gl({m}|{n})")
        key = (basis[0],)
        val = op.entry(key, key)
    else:
        val = howe.rt_eval(m, n, t)
    if job.invariant == "normalized":
        val = val * specialize(spider._twist_factor(t), d)
    return val


def _evaluate(t: TangleDiagram, job: JobSpec) -> Scalar:
    if job.invariant == "reduced":
        return spider.reduced_eval(t, job.component, job.cut_at)
    return spider.colored_eval(t, job.invariant)


def run(job: JobSpec) -> tuple[dict, int]:
    """Evaluate one job.  Returns the report and the exit code."""
    try:
        t = parse_text(job.text, close_default=job.close)
    except TangleParseError as exc:
        return {"error": "parse", "message": str(exc)}, EXIT_PARSE
    if job.close and not t.is_closed:
        try:
            t = close(t)
        except ValueError as exc:
            return {"error": "parse", "message": str(exc)}, EXIT_PARSE
    if not t.is_closed:
        return {"error": "parse", "message": "input is not a closed diagram (use --close)"}, EXIT_PARSE
    if job.invariant == "reduced" and not 0 <= job.component < len(t.components):
        return {"error": "parse", "message": f"no component {job.component}"}, EXIT_PARSE

    t0 = time.perf_counter()
    try:
        val = _evaluate(t, job)
    except (ValueError, ArithmeticError) as exc:
        return {"error": "evaluation", "message": str(exc)}, EXIT_EVAL
    t1 = time.perf_counter()

    report: dict = {
        "input": job.text.strip(),
        "invariant": job.invariant,
        "components": [{"color": c.color, "writhe": c.writhe} for c in t.components],
        "crossings": t.crossing_count,
    }
    if job.invariant == "reduced":
        report["cut"] = {"component": job.component, "at": job.cut_at}
    report["value"] = {"text": str(val), "scalar": val.to_json()}
    report["generic"] = job.generic
    report["specializations"] = {str(d): str(specialize(val, d)) for d in sorted(set(job.at))}

    code = EXIT_OK
    checks = []
    for m, n in job.checks:
        d = m - n
        mine = specialize(val, d)
        try:
            ref = _oracle(t, job, m, n)
        except (ValueError, ArithmeticError) as exc:
            return {"error": "evaluation", "message": f"oracle gl({m}|{n}): {exc}"}, EXIT_EVAL
        ok = mine == ref
        checks.append({"m": m, "n": n, "d": d, "value": str(mine), "oracle": str(ref), "agree": ok})
        if not ok:
            code = EXIT_MISMATCH
    if checks:
        report["checks"] = checks
    if job.timing:
        report["timing"] = {"evaluate_s": round(t1 - t0, 6), "total_s": round(time.perf_counter() - t0, 6)}
    return report, code


def format_text(report: dict) -> str:
    if "error" in report:
        return f"error ({report['error']}): {report['message']}"
    lines = [f"input: {report['input']}", f"invariant: {report['invariant']}"]
    comps = ", ".join(f"#{i} color {c['color']} writhe {c['writhe']}" for i, c in enumerate(report["components"]))
    lines.append(f"components: {comps}")
    lines.append(f"value: {report['value']['text']}")
    for d, v in report["specializations"].items():
        lines.append(f"at d={d}: {v}")
    for c in report.get("checks", []):
        tag = "ok" if c["agree"] else "MISMATCH"
        lines.append(f"check gl({c['m']}|{c['n']}) d={c['d']}: {c['oracle']} [{tag}]")
    if "timing" in report:
        lines.append(f"time: {report['timing']['total_s']:.3f}s")
    return "\n".join(lines)


def _kv(token: str, key: str) -> int:
    k, sep, v = token.partition("=")
    if not sep or k.strip() != key:
        raise UsageError(f"expected {key}=<int>, got {token!r}")
    try:
        return int(v)
    except ValueError:
        raise UsageError(f"expected {key}=<int>, got {token!r}") from None


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="spiderq", description="Colored HOMFLY-PT invariants of links.")
    p.add_argument("input", nargs="+", help="braid n=.. w=[..] [colors=[..]] or pd X[..] .. signs=[..]")
    p.add_argument("--close", action="store_true", help="close a braid by the trace closure")
    p.add_argument("--invariant", choices=INVARIANTS, default="framed")
    p.add_argument("--reduced", action="store_true", help="same as --invariant reduced")
    p.add_argument("--component", type=int, default=0, help="component cut open for the reduced invariant")
    p.add_argument("--cut-at", type=int, default=0, help="which upward point of the component to cut")
    p.add_argument("--generic", action="store_true", help="report the value with beta generic (always computed)")
    p.add_argument("--at", action="append", default=[], metavar="d=D", help="specialize beta to the integer D")
    p.add_argument("--check", action="append", nargs=2, default=[], metavar=("m=M", "n=N"),
                   help="compare against the gl(M|N) R-matrix evaluation")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--timing", action="store_true", help="include wall-clock timing in the report")
    return p


def job_from_args(ns: argparse.Namespace) -> JobSpec:
    return JobSpec(
        text=" ".join(ns.input),
        invariant="reduced" if ns.reduced else ns.invariant,
        close=ns.close,
        generic=ns.generic,
        at=[_kv(tok, "d") for tok in ns.at],
        checks=[(_kv(a, "m"), _kv(b, "n")) for a, b in ns.check],
        component=ns.component,
        cut_at=ns.cut_at,
        fmt=ns.format,
        timing=ns.timing,
    )


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code else EXIT_OK
    try:
        thread_cap()
        job = job_from_args(ns)
    except UsageError as exc:
        print(f"spiderq: {exc}", file=sys.stderr)
        return EXIT_PARSE
    report, code = run(job)
    if job.fmt == "json":
        out = json.dumps(report, sort_keys=True, indent=2)
    else:
        out = format_text(report)
    if "error" in report:
        print(out, file=sys.stderr)
        if job.fmt == "json":
            print(out)
    else:
        print(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
