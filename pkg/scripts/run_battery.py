"""Run the seeded random battery and write per-arrangement results as JSON."""
import argparse
import json
import time

from omx import battery


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--seed", type=int, default=2024)
    p.add_argument("--count", type=int, default=200)
    p.add_argument("--parallel", type=int, default=1)
    p.add_argument("-o", "--output", default="battery.json")
    args = p.parse_args()

    cfg = battery.BatteryConfig(seed=args.seed, count=args.count)
    t0 = time.perf_counter()
    results = battery.run_battery(cfg, parallel=args.parallel)
    summary = battery.summarize(results)
    with open(args.output, "w") as fh:
        json.dump({"seed": cfg.seed, **summary, "results": [r.to_json() for r in results]}, fh, indent=2)

    print(f"{summary['count']} arrangements in {time.perf_counter() - t0:.1f}s, "
          f"{summary['full_rank']} full rank, {summary['cm']} CM")
    for check, names in summary["failures"].items():
        print(f"  {check:18s} {'ok' if not names else f'{len(names)} failures'}")
    for r in results:
        for note in r.notes:
            print(f"  {r.name}: {note}")


if __name__ == "__main__":
    main()
