"""Sweep rational parameters of families A(c) and B(c) and compare every
computed signature and smoothability verdict against the closed forms.

    python3 scripts/sweep_families.py --max-den 10 --max-num 20 --workers 4
"""

from __future__ import annotations

import argparse
import json
import sys
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from fractions import Fraction

from waci.families import family, verify_family

DEGENERATE = {"A": {Fraction(1)}, "B": {Fraction(-2), Fraction(0), Fraction(6)}}


@dataclass(frozen=True)
class SweepConfig:
    families: tuple[str, ...] = ("A", "B")
    max_den: int = 10
    max_num: int = 20
    workers: int = 4


def parameters(cfg: SweepConfig, name: str) -> list[Fraction]:
    cs = {Fraction(n, d) for d in range(1, cfg.max_den + 1) for n in range(-cfg.max_num, cfg.max_num + 1)}
    return sorted(cs - DEGENERATE[name])


def run_one(job: tuple[str, str]) -> dict:
    name, c = job
    rep = verify_family(family(name, Fraction(c)))
    return {
        "family": name,
        "c": c,
        "ok": rep.ok,
        "signature": rep.computed.get("signature"),
        "decision": rep.computed.get("decision"),
        "failures": rep.failures(),
    }


def main(argv=None) -> int:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--families", nargs="+", default=["A", "B"], choices=["A", "B"])
    p.add_argument("--max-den", type=int, default=10)
    p.add_argument("--max-num", type=int, default=20)
    p.add_argument("--workers", type=int, default=4)
    p.add_argument("--json", action="store_true", help="dump every row as JSON lines")
    args = p.parse_args(argv)
    cfg = SweepConfig(tuple(args.families), args.max_den, args.max_num, args.workers)
    jobs = [(name, str(c)) for name in cfg.families for c in parameters(cfg, name)]
    with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
        rows = list(pool.map(run_one, jobs, chunksize=8))
    if args.json:
        for row in rows:
            print(json.dumps(row))
    failed = [r for r in rows if not r["ok"]]
    for name in cfg.families:
        mine = [r for r in rows if r["family"] == name]
        sigs = Counter(abs(r["signature"]) for r in mine)
        decisions = Counter(r["decision"] for r in mine)
        print(f"{name}: {len(mine)} parameters, |signature| counts {dict(sorted(sigs.items()))}, verdicts {dict(decisions)}")
    print(f"config {asdict(cfg)}; mismatches: {len(failed)}")
    for r in failed[:20]:
        print(f"  {r['family']}({r['c']}): {r['failures']}")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
