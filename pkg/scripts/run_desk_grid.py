"""Run the verification suite over q in {2, 3} and print a one-line summary per instance.

    python3 scripts/run_desk_grid.py [--jobs N] [--out report.json]
"""

import argparse
import json
import time

from hermcodes.verify import run_suite


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--q", type=int, nargs="+", default=[2, 3])
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--amax", type=int, default=1)
    ap.add_argument("--out")
    args = ap.parse_args()

    t0 = time.perf_counter()
    rep = run_suite(args.q, jobs=args.jobs, a_max=args.amax)
    elapsed = time.perf_counter() - t0

    for info in rep.instances:
        vs = [v for v in rep.verdicts if (v.q, v.rho) == (info["q"], info["rho"])]
        held = sum(1 for v in vs if v.hypotheses_held and v.conclusion_held)
        vacuous = sum(1 for v in vs if not v.hypotheses_held)
        dist = info.get("distance", {})
        print(
            f"q={info['q']} rho={info['rho']:2d} m={info['m']} d={info.get('d')} "
            f"formula={dist.get('d_formula')} held={held} vacuous={vacuous}"
        )
    print(f"ok={rep.ok} counterexamples={len(rep.counterexamples)} ({elapsed:.1f}s)")
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(json.dumps(rep.to_json(), sort_keys=True) + "\n")


if __name__ == "__main__":
    main()
