"""Command line front end.

Exit codes: 0 success, 1 a mathematical check failed (see "findings"),
2 bad input or usage.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import battery, nps, om, sr
from . import signvec as sv
from .realize import Arrangement, om_from_vectors

VERBS = ("build-om", "check-axioms", "ideal", "resolution", "cm", "genpos", "manifold", "report")


class InputError(Exception):
    pass


def _read(path: str) -> dict:
    try:
        with open(path) as fh:
            data = json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from None
    if not isinstance(data, dict):
        raise InputError(f"{path}: expected a JSON object")
    return data


def _name(data: dict, path: str) -> str:
    return data.get("name") or Path(path).stem


def load_input(path: str, allow_loop_g: bool = False, affine: bool = True):
    """Arrangement or OM JSON (told apart by their keys) -> (object, name).

    Without ``affine`` an OM file lacking ``g`` loads as a plain OrientedMatroid.
    """
    data = _read(path)
    try:
        if "vectors" in data:
            return om_from_vectors(Arrangement.from_json(data), allow_loop_g), _name(data, path)
        if "cocircuits" in data:
            m = om.om_from_json(data, allow_loop_g)
            if affine and not isinstance(m, om.AffineOM):
                raise InputError(f"{path}: OM file has no distinguished element g")
            return m, _name(data, path)
    except ValueError as exc:
        raise InputError(f"{path}: {exc}") from None
    raise InputError(f"{path}: neither an arrangement (vectors) nor an OM (cocircuits) file")


def _fields(spec: str) -> tuple[int, ...]:
    if spec == "all":
        return sr.FIELDS
    table = {"0": 0, "q": 0, "qq": 0}
    key = spec.lower()
    if key in table:
        return (table[key],)
    if key.isdigit() and int(key) in sr.FIELDS:
        return (int(key),)
    raise InputError(f"unsupported field {spec!r}; choose from Q, 2, 3, 5, all")


# verbs ------------------------------------------------------------------------

def cmd_build_om(args):
    m, name = load_input(args.input, args.allow_loop_g, affine=False)
    data = m.to_json()
    return {"name": name, **data}, 0


def cmd_check_axioms(args):
    data = _read(args.input)
    if "cocircuits" in data:
        # take the listed vectors at face value so a bad file yields a witness
        try:
            C = [sv.from_str(s) for s in data["cocircuits"]]
            k = len(data["elements"])
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"{args.input}: {exc}") from None
        if any(len(c) != k for c in C):
            raise InputError(f"{args.input}: cocircuit length does not match elements")
        L = om.span_from_cocircuits(C, k, check=False)
    else:
        m, _ = load_input(args.input, args.allow_loop_g, affine=False)
        L, k = m.om.covectors, len(m.ground)
    v = om.check_covector_axioms(L, k)
    # witnesses are sign vectors, plus an element position for L3
    witness = [sv.to_str(w) if isinstance(w, tuple) else w for w in v.witness]
    out = {"input": _name(data, args.input), "covectors": len(L), "ok": v.ok,
           "axiom": v.axiom, "witness": witness, "findings": []}
    if not v.ok:
        out["findings"].append(f"{v.axiom}: {v.message}")
    return out, 0 if v.ok else 1


def cmd_ideal(args):
    m, name = load_input(args.input, args.allow_loop_g)
    O = nps.matroid_ideal(m)
    return {"input": name, "ideal": O.to_strings(), "specialized": nps.specialize(O).to_strings()}, 0


def _resolution(m):
    try:
        return nps.cellular_resolution(m)
    except ValueError as exc:
        raise InputError(str(exc)) from None


def cmd_resolution(args):
    m, name = load_input(args.input, args.allow_loop_g)
    res = _resolution(m)
    x = res.complex
    faithful = nps.check_faithful(res)
    acyclic = {p: nps.check_acyclic(res, p) for p in _fields(args.field)}
    findings = []
    if not faithful:
        findings.append("labeling is not faithful")
    findings += [f"not acyclic over field of characteristic {p}" for p, ok in acyclic.items() if not ok]
    cells = [{"cell": sv.to_str(x.keys[i]), "dim": x.dims[i],
              "label": res.ideal.monomial_str(x.labels[i])} for i in range(1, len(x))]
    out = {"input": name, "ideal": res.ideal.to_strings(), "betti": list(res.betti),
           "faithful": faithful, "acyclic": all(acyclic.values()), "cells": cells,
           "findings": findings}
    return out, 1 if findings else 0


def cmd_cm(args):
    m, name = load_input(args.input, args.allow_loop_g)
    fields = _fields(args.field)
    res = _resolution(m)
    O = res.ideal
    cell = {p: w is None for p, w in nps.cm_cellular_witnesses(res, fields).items()}
    reis = {p: w is None for p, w in sr.reisner_witnesses(sr.complex_from_ideal(O), fields).items()}
    spec = {p: w is None for p, w in
            sr.reisner_witnesses(sr.complex_from_ideal(nps.specialize(O)), fields).items()}
    findings = []
    if len(set(cell.values()) | set(reis.values())) > 1:
        findings.append("cellular and Reisner verdicts differ")
    out = {"input": name, "fields": list(fields),
           "cellular": [cell[p] for p in fields], "reisner": [reis[p] for p in fields],
           "specialized": [spec[p] for p in fields], "cm": all(cell.values()),
           "findings": findings}
    return out, 1 if findings else 0


def cmd_genpos(args):
    m, name = load_input(args.input, args.allow_loop_g)
    if m.g_is_loop or m.g_is_coloop:
        raise InputError("g must be neither a loop nor a coloop")
    rep = nps.genpos_report(m, _fields(args.field))
    out = {"input": name, "rank": rep.rank, "n": rep.n, **rep.to_json(),
           "witnesses": rep.witnesses, "findings": rep.findings}
    return out, 1 if rep.findings else 0


def cmd_manifold(args):
    m, name = load_input(args.input, args.allow_loop_g)
    _resolution(m)
    rep = nps.manifold_report(m)
    out = {"input": name, **rep.to_json(), "findings": rep.findings}
    return out, 1 if rep.findings else 0


def cmd_report(args):
    if args.battery:
        cfg = battery.BatteryConfig(seed=args.seed, count=args.battery, fields=_fields(args.field))
        results = battery.run_battery(cfg, parallel=args.parallel)
        summary = battery.summarize(results)
        failed = any(summary["failures"].values())
        out = {"seed": cfg.seed, **summary, "results": [r.to_json() for r in results]}
        return out, 1 if failed else 0
    if not args.input:
        raise InputError("report needs an input file or --battery N")
    m, name = load_input(args.input, args.allow_loop_g)
    out = nps.build_report(m, name, _fields(args.field))
    return out, 1 if out["findings"] else 0


COMMANDS = {
    "build-om": cmd_build_om, "check-axioms": cmd_check_axioms, "ideal": cmd_ideal,
    "resolution": cmd_resolution, "cm": cmd_cm, "genpos": cmd_genpos,
    "manifold": cmd_manifold, "report": cmd_report,
}


def summary_lines(verb: str, out: dict) -> list[str]:
    lines = [f"{verb}: {out.get('input', '')}".rstrip()]
    for key in ("ideal", "betti", "ok", "faithful", "acyclic", "cm", "full_rank",
                "c1", "c2", "c3", "c4", "c5", "dims", "delta_manifold", "boundary_sphere",
                "count", "failures"):
        if key in out:
            lines.append(f"  {key}: {out[key]}")
    for f in out.get("findings", []):
        lines.append(f"  finding: {f}")
    return lines


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="omx", description="Matroid ideals of affine oriented matroids.")
    p.add_argument("verb", choices=VERBS)
    p.add_argument("input", nargs="?", help="arrangement or OM JSON file")
    p.add_argument("-o", "--output", help="write JSON here instead of stdout")
    p.add_argument("--field", default="all", help="Q, 2, 3, 5 or all (default)")
    p.add_argument("--allow-loop-g", action="store_true", help="accept g as a loop (zero ideal)")
    p.add_argument("--seed", type=int, default=battery.BatteryConfig.seed)
    p.add_argument("--battery", type=int, default=0, metavar="N",
                   help="with 'report': run N seeded random arrangements instead of a file")
    p.add_argument("--parallel", type=int, default=1, metavar="N")
    p.add_argument("--summary", action="store_true", help="print a short text summary instead of JSON")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.input is None and not (args.verb == "report" and args.battery):
        print(f"omx {args.verb}: an input file is required", file=sys.stderr)
        return 2
    try:
        out, code = COMMANDS[args.verb](args)
    except InputError as exc:
        print(f"omx {args.verb}: {exc}", file=sys.stderr)
        return 2
    if args.summary:
        text = "\n".join(summary_lines(args.verb, out)) + "\n"
    else:
        text = json.dumps(out, indent=2) + "\n"
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
