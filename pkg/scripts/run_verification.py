"""Run every verification suite with timings and an optional JSON report.

    python scripts/run_verification.py --max-n 5 --json-out verify.json
"""

import argparse
import json
import sys
import time
from dataclasses import dataclass

from countsys import verify
from countsys.natmodel import DEFAULT_CAP


@dataclass
class VerifyConfig:
    max_n: int = 4
    cap: int = DEFAULT_CAP
    json_out: str | None = None


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--max-n", type=int, default=VerifyConfig.max_n)
    p.add_argument("--cap", type=int, default=VerifyConfig.cap)
    p.add_argument("--json-out")
    cfg = VerifyConfig(**vars(p.parse_args()))
    results = {}
    ok = True
    for name, fn in verify.SUITES.items():
        start = time.perf_counter()
        reports = fn(cfg.max_n, cfg.cap)
        elapsed = time.perf_counter() - start
        failed = [r for r in reports if not r.passed]
        ok &= not failed
        checked = sum(r.instances_checked for r in reports)
        print(f"{'ok  ' if not failed else 'FAIL'} {name:<14} {len(reports):>4} checks {checked:>9} instances {elapsed:6.2f}s")
        for r in failed:
            print(f"     {r.law}: {r.counterexample}")
        results[name] = {"seconds": round(elapsed, 3), "reports": [r.to_dict() for r in reports]}
    if cfg.json_out:
        with open(cfg.json_out, "w") as fh:
            json.dump(results, fh, indent=2)
    sys.exit(0 if ok else 1)


if __name__ == "__main__":
    main()
