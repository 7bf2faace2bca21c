"""Census of all counting systems on small carriers.

For each carrier size: how many systems there are, how many are minimal,
the distribution of orbit shapes (tail, cycle), and which arithmetic laws
fail on which shapes.

    python scripts/census.py --max-n 5
"""

import argparse
import json
from collections import Counter
from dataclasses import asdict, dataclass, field

from countsys.arith import Law, check_law
from countsys.counting import all_systems, is_minimal, is_standard, minimal_systems


@dataclass
class CensusConfig:
    max_n: int = 5
    json_out: str | None = None


@dataclass
class SizeRow:
    n: int
    systems: int = 0
    minimal: int = 0
    standard: int = 0
    shapes: dict = field(default_factory=dict)


def census(cfg: CensusConfig) -> tuple[list[SizeRow], dict]:
    rows = []
    for n in range(1, cfg.max_n + 1):
        row = SizeRow(n)
        shapes = Counter()
        for cs in all_systems(n):
            row.systems += 1
            row.minimal += is_minimal(cs)
            row.standard += is_standard(cs)
            shapes[f"t={cs.trajectory.tail},l={cs.trajectory.cycle}"] += 1
        row.shapes = dict(sorted(shapes.items()))
        rows.append(row)
    failures = {}
    for n in range(1, cfg.max_n + 1):
        for cs in minimal_systems(n):
            bad = [law.value for law in Law if not check_law(cs, law).passed]
            failures[f"t={cs.trajectory.tail},l={cs.trajectory.cycle}"] = bad
    return rows, failures


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--max-n", type=int, default=CensusConfig.max_n)
    p.add_argument("--json-out")
    cfg = CensusConfig(**vars(p.parse_args()))
    if cfg.max_n > 7:
        p.error("--max-n above 7 enumerates more than 10^7 systems")
    rows, failures = census(cfg)
    print(f"{'n':>2} {'systems':>9} {'minimal':>8} {'standard':>8}")
    for r in rows:
        print(f"{r.n:>2} {r.systems:>9} {r.minimal:>8} {r.standard:>8}")
    print("\nlaws failing per minimal shape (all others hold):")
    for shape, bad in failures.items():
        print(f"  {shape:<10} {', '.join(bad) or '-'}")
    if cfg.json_out:
        with open(cfg.json_out, "w") as fh:
            json.dump({"sizes": [asdict(r) for r in rows], "failing_laws": failures}, fh, indent=2)


if __name__ == "__main__":
    main()
