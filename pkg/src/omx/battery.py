"""Seeded random arrangements and the property checks run over them."""
from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field

from . import cw, nps, om, sr
from .realize import Arrangement, om_from_vectors
from .sr import FIELDS


@dataclass(frozen=True)
class BatteryConfig:
    seed: int = 2024
    count: int = 200
    max_dim: int = 3
    max_n: int = 5
    entry_bound: int = 3
    fields: tuple[int, ...] = FIELDS


def random_arrangements(cfg: BatteryConfig) -> list[Arrangement]:
    """``cfg.count`` arrangements with g neither zero nor a coloop."""
    rng = random.Random(cfg.seed)
    b = cfg.entry_bound
    out = []
    while len(out) < cfg.count:
        d = rng.randint(1, cfg.max_dim)
        n = rng.randint(1, cfg.max_n)
        vecs = [tuple(rng.randint(-b, b) for _ in range(d + 1)) for _ in range(n)]
        g = tuple(rng.randint(-b, b) for _ in range(d + 1))
        if not any(g):
            continue
        a = Arrangement(tuple(vecs), g, f"random-{cfg.seed}-{len(out)}")
        if om_from_vectors(a).g_is_coloop:
            continue
        out.append(a)
    return out


@dataclass
class BatteryResult:
    name: str
    n: int
    rank: int
    full_rank: bool
    cm: bool
    checks: dict[str, bool] = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def to_json(self) -> dict:
        return asdict(self)


def check_arrangement(a: Arrangement, fields=FIELDS) -> BatteryResult:
    m = om_from_vectors(a)
    L = m.om.covectors
    checks: dict[str, bool] = {}
    notes: list[str] = []

    checks["a_axioms"] = bool(om.check_covector_axioms(L, len(m.ground)))
    checks["b_roundtrip"] = om.span_from_cocircuits(om.cocircuits(L), len(m.ground), check=False) == L

    res = nps.cellular_resolution(m)
    hom = cw.chain_cochains(res.complex).integral_homology()
    checks["c_contractible"] = all(g.is_zero() for g in hom.values())

    rep = nps.genpos_report(m, fields)
    checks["d_genpos_agree"] = rep.agree() if rep.full_rank else True
    if rep.full_rank and not rep.agree():
        notes.append(f"conditions {rep.conditions}")
    verdicts = [v for table in rep.cm_by_field.values() for v in table.values()]
    cellular = set(rep.cm_by_field["cellular"].values()) | set(rep.cm_by_field["reisner"].values())
    checks["e_fields_agree"] = len(cellular) == 1 and len(set(rep.cm_by_field["specialized"].values())) == 1
    # S~/O_M and S/Obar_M are CM together; a mismatch is recorded, not hidden
    if len(set(verdicts)) > 1:
        notes.append(f"cm verdicts {rep.cm_by_field}")
    cm = rep.conditions["c2"]

    checks["f_matroid_complex"] = True
    checks["g_contraction"] = True
    if cm:
        dbar = sr.complex_from_ideal(nps.specialize(nps.matroid_ideal(m)))
        checks["f_matroid_complex"] = sr.is_matroid_complex(dbar)
        rb = om.bounded_rank(m)
        for i, p in zip(m.elements, m.element_positions):
            if not any(lam[p] for lam in m.bounded):
                continue
            mc = om.contract_affine(m, [i])
            if not nps.is_cm(mc, fields[0]):
                checks["g_contraction"] = False
                notes.append(f"contraction by {i} is not CM")
            elif mc.bounded and om.bounded_rank(mc) >= rb:
                checks["g_contraction"] = False
                notes.append(f"contraction by {i} does not lower the rank of B")

    checks["h_precondition"] = bool(nps.regularity_precondition_check(res.ideal))
    return BatteryResult(a.name, m.n, m.rank, rep.full_rank, cm, checks, notes)


def run_battery(cfg: BatteryConfig, parallel: int = 1) -> list[BatteryResult]:
    arrs = random_arrangements(cfg)
    if parallel > 1:
        with ProcessPoolExecutor(parallel) as pool:
            return list(pool.map(check_arrangement, arrs, [cfg.fields] * len(arrs), chunksize=4))
    return [check_arrangement(a, cfg.fields) for a in arrs]


def summarize(results: list[BatteryResult]) -> dict:
    keys = sorted({k for r in results for k in r.checks})
    return {
        "count": len(results),
        "full_rank": sum(r.full_rank for r in results),
        "cm": sum(r.cm for r in results),
        "failures": {k: [r.name for r in results if not r.checks.get(k, True)] for k in keys},
    }
