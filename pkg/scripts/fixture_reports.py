"""Print the condition table and Betti numbers for every fixture arrangement."""
import sys
from pathlib import Path

from omx import nps, om
from omx.realize import load_arrangement, om_from_vectors

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def main(paths):
    paths = paths or sorted(p for p in FIXTURES.glob("*.json") if ".om." not in p.name)
    print(f"{'input':22s} {'r':>2s} {'full':>5s} {'c1..c5':>12s} {'dims':>8s} {'measured':>8s}  betti")
    for path in paths:
        m = om_from_vectors(load_arrangement(path))
        rep = nps.genpos_report(m)
        flags = "".join("T" if rep.conditions[k] else "F" for k in ("c1", "c2", "c3", "c4", "c5"))
        betti = nps.cellular_resolution(m).betti
        print(f"{Path(path).stem:22s} {m.rank:2d} {str(rep.full_rank):>5s} {flags:>12s} "
              f"{str(rep.dims):>8s} {str(rep.measured_dims):>8s}  {betti}")
        print(f"{'':22s} O_M = ({', '.join(nps.matroid_ideal(m).to_strings())})")
        for f in rep.findings:
            print(f"{'':22s} finding: {f}")


if __name__ == "__main__":
    main(sys.argv[1:])
