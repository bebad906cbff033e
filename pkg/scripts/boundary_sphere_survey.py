"""Empirical survey: is the boundary of X(B_M) a homology sphere?

Only Cohen-Macaulay, full-rank arrangements are considered.  This records
what happens; it is not a check of any proven statement.
"""
import argparse
from collections import Counter

from omx import battery, nps, om
from omx.realize import om_from_vectors


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--seed", type=int, default=7)
    p.add_argument("--count", type=int, default=100)
    args = p.parse_args()

    cfg = battery.BatteryConfig(seed=args.seed, count=args.count)
    tally = Counter()
    for a in battery.random_arrangements(cfg):
        m = om_from_vectors(a)
        if not om.is_full_rank(m) or not nps.is_cm(m):
            tally["skipped"] += 1
            continue
        rep = nps.manifold_report(m)
        tally["sphere" if rep.boundary_x_sphere else "not sphere"] += 1
        if not rep.boundary_x_sphere:
            print(f"{a.name}: vectors={a.vectors} g={a.g} dim X={rep.dim}")
    print(dict(tally))


if __name__ == "__main__":
    main()
