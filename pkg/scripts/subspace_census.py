#!/usr/bin/env python3
"""Exhaustive subspace census over small instances.

Counts, for every subset/retained-op combination of each instance with a
universe of at most `--bound` elements: how many are subspaces, whether
the two subspace routes ever disagree, and how often the literal raw
closure reading diverges from them.

    python scripts/subspace_census.py [instances_dir] [--bound N]
"""

import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from itertools import combinations

from multigroup.instances import parse_instance
from multigroup.spaces import validate_multigroup
from multigroup.subspaces import (SubsetRef, is_subspace,
                                  is_subspace_by_completeness,
                                  is_subspace_by_intersection)


def combinations_of(ms):
    for r in range(0, len(ms.universe) + 1):
        for elems in combinations(ms.universe, r):
            present = [op for op in ms.op_set
                       if set(elems) & set(ms.group_of(op).carrier)]
            for k in range(1, len(present) + 1):
                for ops in combinations(present, k):
                    yield SubsetRef.of(ms, elems, ops)


def census(path: Path) -> None:
    ms = parse_instance(path.read_text())
    total = subspaces = disagreements = raw_divergences = 0
    for s in combinations_of(ms):
        total += 1
        implemented = is_subspace(ms, s)
        lattice = is_subspace_by_intersection(ms, s).ok
        raw = is_subspace_by_completeness(ms, s)
        subspaces += implemented
        disagreements += implemented != lattice
        raw_divergences += raw != implemented
    print(f"{path.name:<18} combos={total:<5} subspaces={subspaces:<4} "
          f"route-disagreements={disagreements} raw-divergences={raw_divergences}")


def main() -> int:
    parser = argparse.ArgumentParser()
    parser.add_argument("instances", nargs="?",
                        default=str(Path(__file__).resolve().parent.parent
                                    / "instances"))
    parser.add_argument("--bound", type=int, default=8)
    args = parser.parse_args()
    target = Path(args.instances)
    files = [target] if target.is_file() else sorted(target.glob("*.mgs"))
    for path in files:
        ms = parse_instance(path.read_text())
        if len(ms.universe) > args.bound:
            print(f"{path.name:<18} skipped (universe {len(ms.universe)} "
                  f"> bound {args.bound})")
            continue
        if not validate_multigroup(ms).ok:
            print(f"{path.name:<18} skipped (not a valid multi-group space)")
            continue
        census(path)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
