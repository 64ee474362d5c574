"""Command line entry point.

Exit codes: 0 success, 1 verification counterexample, 2 budget refusal,
3 I/O failure, 64 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import re
import sys
from dataclasses import dataclass, field

from .census import conic_search, exhaustive_census, line_search
from .code import code_params, hermitian_code, parity_check_matrix
from .curve import HermitianCurve, enumerate_affine_points
from .distance import DEFAULT_BUDGET, default_wmax, reconcile
from .field import hermitian_field
from .funcspace import lg_basis, max_included_degree
from .geometry import ProjectivePoint, classify
from .gflinalg import BudgetExceeded
from .verify import run_suite

EXIT_OK, EXIT_COUNTEREXAMPLE, EXIT_BUDGET, EXIT_IO, EXIT_USAGE = 0, 1, 2, 3, 64
SUPPORTED_Q = (2, 3, 4, 5)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


@dataclass
class RunConfig:
    subcommand: str
    q: int | None = None
    rho: int | None = None
    w_max: int | None = None
    w_min: int | None = None
    m: int | None = None
    mode: str | None = None
    jobs: int = 1
    budget: int = DEFAULT_BUDGET
    out: str | None = None
    fmt: str = "json"
    grid: dict = field(default_factory=dict)
    a_max: int = 1
    input: str | None = None
    conic: bool = False
    curve_pair: bool = False


def parse_grid(text: str) -> dict:
    """'q=2,3;rho=0..18' -> {'q': [2, 3], 'rho': [0, ..., 18]}."""
    out: dict = {}
    for part in filter(None, (p.strip() for p in text.split(";"))):
        key, sep, val = part.partition("=")
        key = key.strip()
        if not sep or key not in ("q", "rho"):
            raise UsageError(f"--grid: malformed part {part!r}")
        values: list[int] = []
        for item in val.split(","):
            item = item.strip()
            rng = re.fullmatch(r"(\d+)\.\.(\d+)", item)
            if rng:
                lo, hi = int(rng[1]), int(rng[2])
                if hi < lo:
                    raise UsageError(f"--grid: empty range {item!r}")
                values.extend(range(lo, hi + 1))
            elif item.isdigit():
                values.append(int(item))
            else:
                raise UsageError(f"--grid: cannot parse {item!r}")
        out[key] = values
    if "q" not in out:
        raise UsageError("--grid: missing q=...")
    return out


def _build_parser() -> _Parser:
    p = _Parser(prog="hermcodes", description=__doc__)
    sub = p.add_subparsers(dest="subcommand", parser_class=_Parser)
    sub.required = True

    def common(sp, rho=True):
        sp.add_argument("--q", type=int, required=True)
        if rho:
            sp.add_argument("--rho", type=int, required=True)
        sp.add_argument("--out")

    common(sub.add_parser("params"))
    common(sub.add_parser("points"), rho=False)
    common(sub.add_parser("basis"))
    common(sub.add_parser("matrix"))

    sp = sub.add_parser("distance")
    common(sp)
    sp.add_argument("--wmax", type=int)
    sp.add_argument("--mode", choices=["brute", "formula", "both"], default="both")
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--budget", type=int, default=DEFAULT_BUDGET)

    sp = sub.add_parser("census")
    common(sp)
    sp.add_argument("--wmax", type=int)
    sp.add_argument("--wmin", type=int)
    sp.add_argument("--m", type=int)
    sp.add_argument("--mode", choices=["exhaustive", "lines", "conics"], default="exhaustive")
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    sp.add_argument("--format", choices=["json", "csv"], default="json")

    sp = sub.add_parser("classify")
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--input", help="JSON file with points (default: stdin)")
    sp.add_argument("--m", type=int)
    sp.add_argument("--conic", action="store_true")
    sp.add_argument("--curve-pair", action="store_true")
    sp.add_argument("--out")

    sp = sub.add_parser("verify")
    sp.add_argument("--grid", default="q=2,3")
    sp.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    sp.add_argument("--amax", type=int, default=1)
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--out")
    return p


def parse_args(argv) -> RunConfig:
    ns = _build_parser().parse_args(argv)
    cfg = RunConfig(subcommand=ns.subcommand, out=getattr(ns, "out", None))
    for name in ("q", "rho", "m", "jobs", "budget", "input", "conic", "curve_pair"):
        if hasattr(ns, name) and getattr(ns, name) is not None:
            setattr(cfg, name, getattr(ns, name))
    cfg.w_max = getattr(ns, "wmax", None)
    cfg.w_min = getattr(ns, "wmin", None)
    cfg.mode = getattr(ns, "mode", None)
    cfg.fmt = getattr(ns, "format", "json")
    cfg.a_max = getattr(ns, "amax", 1)
    if ns.subcommand == "verify":
        cfg.grid = parse_grid(ns.grid)
        bad = [q for q in cfg.grid["q"] if q not in SUPPORTED_Q]
        if bad:
            raise UsageError(f"--grid: unsupported q {bad}; use one of {SUPPORTED_Q}")
    if cfg.q is not None and cfg.q not in SUPPORTED_Q:
        raise UsageError(f"--q {cfg.q}: unsupported field size; use one of {SUPPORTED_Q}")
    if cfg.rho is not None and cfg.rho < 0:
        raise UsageError("--rho must be nonnegative")
    if cfg.w_max is not None and cfg.w_max < 1:
        raise UsageError("--wmax must be at least 1")
    if cfg.w_min is not None and cfg.w_min < 1:
        raise UsageError("--wmin must be at least 1")
    if cfg.jobs < 1:
        raise UsageError("--jobs must be at least 1")
    if cfg.m is not None and cfg.m < 0:
        raise UsageError("--m must be nonnegative")
    if cfg.a_max < 0:
        raise UsageError("--amax must be nonnegative")
    return cfg


def _dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True) + "\n"


def _read_points(cfg: RunConfig) -> list[ProjectivePoint]:
    raw = open(cfg.input, encoding="utf-8").read() if cfg.input else sys.stdin.read()
    data = json.loads(raw)
    F = hermitian_field(cfg.q)
    pts = []
    for item in data:
        if isinstance(item, dict):
            pts.append(ProjectivePoint.from_indices(F, (item["x"], item["y"], 1)))
        else:
            pts.append(ProjectivePoint.from_indices(F, item))
    if not pts:
        raise UsageError("classify: empty point list")
    return pts


def _run(cfg: RunConfig) -> tuple[str, int]:
    cmd = cfg.subcommand
    if cmd == "params":
        return _dumps(code_params(cfg.q, cfg.rho)), EXIT_OK
    if cmd == "points":
        return _dumps(enumerate_affine_points(HermitianCurve.over(cfg.q)).to_json()), EXIT_OK
    if cmd == "basis":
        return _dumps(lg_basis(cfg.q, cfg.rho).to_json()), EXIT_OK
    if cmd == "matrix":
        H = parity_check_matrix(hermitian_code(cfg.q, cfg.rho))
        return _dumps(H.to_json()), EXIT_OK
    if cmd == "distance":
        rep = reconcile(cfg.q, cfg.rho, cfg.w_max, mode=cfg.mode, jobs=cfg.jobs, budget=cfg.budget)
        return _dumps(rep.to_json()), EXIT_OK
    if cmd == "census":
        spec = hermitian_code(cfg.q, cfg.rho)
        m = cfg.m if cfg.m is not None else max_included_degree(cfg.q, cfg.rho)
        if cfg.mode == "exhaustive":
            w_max = cfg.w_max or default_wmax(cfg.q, cfg.rho)
            rep = exhaustive_census(spec, w_max, w_min=cfg.w_min or 1, m=m, jobs=cfg.jobs,
                                    budget=cfg.budget)
        elif cfg.mode == "lines":
            rep = line_search(spec, m, budget=cfg.budget)
        else:
            rep = conic_search(spec, m, budget=cfg.budget)
        if cfg.fmt == "csv":
            buf = io.StringIO()
            csv.writer(buf, lineterminator="\n").writerows(rep.to_csv_rows())
            return buf.getvalue(), EXIT_OK
        return _dumps(rep.to_json()), EXIT_OK
    if cmd == "classify":
        pts = _read_points(cfg)
        rep = classify(pts, cfg.m, conic=cfg.conic or pts[0].r == 2, curve_pair=cfg.curve_pair)
        return _dumps(rep.to_json()), EXIT_OK
    if cmd == "verify":
        rho = cfg.grid.get("rho")
        rep = run_suite(cfg.grid["q"], rho, cfg.budget, jobs=cfg.jobs, a_max=cfg.a_max)
        return _dumps(rep.to_json()), EXIT_OK if rep.ok else EXIT_COUNTEREXAMPLE
    raise UsageError(f"unknown subcommand {cmd!r}")


def dispatch(cfg: RunConfig) -> int:
    try:
        text, code = _run(cfg)
    except BudgetExceeded as exc:
        print(f"hermcodes: refused: {exc} (estimate {exc.estimate})", file=sys.stderr)
        return EXIT_BUDGET
    except OSError as exc:
        print(f"hermcodes: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    try:
        if cfg.out:
            with open(cfg.out, "w", encoding="utf-8", newline="\n") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
    except OSError as exc:
        print(f"hermcodes: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    return code


def main(argv=None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s %(name)s: %(message)s")
    try:
        cfg = parse_args(sys.argv[1:] if argv is None else argv)
    except UsageError as exc:
        print(f"hermcodes: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        return dispatch(cfg)
    except (UsageError, ValueError, json.JSONDecodeError, KeyError) as exc:
        print(f"hermcodes: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
