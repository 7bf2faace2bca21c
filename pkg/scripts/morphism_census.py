"""Which pairs of minimal systems admit a morphism?

Runs the brute-force enumeration over every pair of labeled minimal systems
up to a carrier size and tabulates the answer by the (tail, cycle) shapes
of source and target.  A morphism exists exactly when the target's tail is
no longer than the source's and its cycle length divides the source's; the
script reports any pair where the enumeration disagrees with that rule.

    python scripts/morphism_census.py --max-n 4
"""

import argparse
from collections import defaultdict
from dataclasses import dataclass

from countsys.counting import minimal_systems
from countsys.oracle import morphisms_by_enumeration


@dataclass
class MorphismConfig:
    max_n: int = 4


def shape(cs):
    return cs.trajectory.tail, cs.trajectory.cycle


def predicted(src, dst) -> bool:
    (ts, ls), (td, ld) = shape(src), shape(dst)
    return td <= ts and ls % ld == 0


def run(cfg: MorphismConfig):
    systems = [cs for n in range(1, cfg.max_n + 1) for cs in minimal_systems(n, labeled=True)]
    table = defaultdict(set)
    disagreements = []
    for src in systems:
        for dst in systems:
            found = morphisms_by_enumeration(src, dst)
            if len(found) > 1:
                disagreements.append((src, dst, "several morphisms"))
            if bool(found) != predicted(src, dst):
                disagreements.append((src, dst, f"found={len(found)}"))
            table[shape(src), shape(dst)].add(bool(found))
    return systems, table, disagreements


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--max-n", type=int, default=MorphismConfig.max_n)
    cfg = MorphismConfig(**vars(p.parse_args()))
    if cfg.max_n > 5:
        p.error("--max-n above 5 is too slow for brute force")
    systems, table, disagreements = run(cfg)
    shapes = sorted({shape(cs) for cs in systems})
    labels = [f"{t},{l}" for t, l in shapes]
    print(f"{len(systems)} labeled minimal systems, {len(systems) ** 2} pairs")
    print("rows: source (t,l); columns: target (t,l); 'x' = morphism exists\n")
    print(" " * 6 + " ".join(f"{lab:>5}" for lab in labels))
    for s, lab in zip(shapes, labels):
        cells = []
        for d in shapes:
            seen = table[s, d]
            cells.append("x" if seen == {True} else "." if seen == {False} else "?")
        print(f"{lab:>5} " + " ".join(f"{c:>5}" for c in cells))
    print(f"\ndisagreements with the tail/cycle rule: {len(disagreements)}")
    for src, dst, why in disagreements[:10]:
        print(f"  {src.to_json()} -> {dst.to_json()}: {why}")


if __name__ == "__main__":
    main()
