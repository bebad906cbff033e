"""Search small integer line arrangements whose matroid ideal is a given target.

Used to pick the four-generic-lines fixture; the default target is the
ideal of four generic lines with three bounded regions.
"""
import argparse
import itertools
import random

from omx import nps
from omx.realize import Arrangement, om_from_vectors

DEFAULT = "x1*x2,x1*y3,x1*x4,x2*x3,x2*y4,x3*x4"


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--target", default=DEFAULT, help="comma separated generators")
    p.add_argument("--bound", type=int, default=2)
    p.add_argument("--tries", type=int, default=200000)
    p.add_argument("--seed", type=int, default=1)
    args = p.parse_args()

    target = set(args.target.split(","))
    n = max(int(v[1:]) for g in target for v in g.split("*"))
    rng = random.Random(args.seed)
    rb = range(-args.bound, args.bound + 1)
    lines = [v for v in itertools.product(rb, repeat=3) if v[:2] != (0, 0)]
    for _ in range(args.tries):
        a = Arrangement(tuple(rng.sample(lines, n)), (0, 0, 1))
        m = om_from_vectors(a)
        if m.g_is_coloop:
            continue
        if set(nps.matroid_ideal(m).to_strings()) == target:
            print("vectors:", [list(v) for v in a.vectors])
            print("betti:", nps.cellular_resolution(m).betti)
            return
    print("no realization found")


if __name__ == "__main__":
    main()
