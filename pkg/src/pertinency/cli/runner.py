"""Execute the tasks of an experiment configuration and assemble a report."""

from __future__ import annotations

import time
from fractions import Fraction

from .. import __version__
from ..group import (
    hdet,
    invariant_dimension_direct,
    molien_series,
    odd_cycle_oracle,
    pole_order,
    rational_trace,
    reflection_report,
    trace_series,
)
from ..identities import fourier_identity_suite
from ..smash.annihilator import AnnihilatorLadder
from ..smash.products import DualGroupSmashAlgebra, corner_dimension
from ..smash.report import pertinency_report
from .config import ExperimentConfig, build

# trace before reflection and hdet (shared Padé cache), molien before corner checks
TASK_ORDER = ("trace", "reflection", "hdet", "molien", "pertinency", "membership", "verify_lemma53")


def scalar_to_json(x):
    """Integers stay integers; everything else becomes its string form."""
    if isinstance(x, Fraction):
        return int(x) if x.denominator == 1 else str(x)
    if isinstance(x, int):
        return x
    if hasattr(x, "is_rational") and x.is_rational():
        return scalar_to_json(x.coeffs[0] if x.coeffs else Fraction(0))
    if hasattr(x, "value") and hasattr(x, "modulus"):
        return int(x.value)
    return str(x)


def _element_info(g):
    return {"perm": list(g.perm), "scalars": [scalar_to_json(c) for c in g.scalars]}


def task_trace(ring, G, B, D):
    out = []
    for k, g in enumerate(G.elements):
        info = _element_info(g)
        info["element"] = k
        info["series"] = [scalar_to_json(c) for c in trace_series(g, D)]
        info["rational"] = str(rational_trace(g))
        out.append(info)
    return {"elements": out}


def task_reflection(ring, G, B, D):
    rep = reflection_report(G)
    poles = {k: pole_order(g) for k, g in enumerate(G.elements) if k}
    out = {
        "reflection_numbers": {str(k): v for k, v in rep["reflection_numbers"].items()},
        "group_reflection_number": rep["group_reflection_number"],
        "quasi_reflections": rep["quasi_reflections"],
        "quasi_bireflections": rep["quasi_bireflections"],
        "pole_orders": {str(k): v for k, v in poles.items()},
    }
    if ring.label == "minus_one" and all(g.is_pure_permutation() for g in G.elements):
        odd = {str(k): odd_cycle_oracle(g) for k, g in enumerate(G.elements) if k}
        out["odd_cycles"] = odd
        out["odd_cycle_agreement"] = odd == out["pole_orders"]
    return out


def task_hdet(ring, G, B, D):
    values = {str(k): scalar_to_json(hdet(g)) for k, g in enumerate(G.elements)}
    return {"hdet": values, "all_one": all(v == 1 for v in values.values())}


def _identity_degree_count(B: DualGroupSmashAlgebra, d):
    grading = B.grading
    return sum(1 for m in B.ring.degree_basis(d) if grading.degree_of(m) == 0)


def task_molien(ring, G, B, D):
    check = min(D, 12 if ring.n <= 4 else 6)
    if isinstance(B, DualGroupSmashAlgebra):
        counts = [_identity_degree_count(B, d) for d in range(D + 1)]
        corner = [corner_dimension(B, d) for d in range(check + 1)]
        return {"identity_degree_dims": counts, "corner_dims": corner,
                "agree": corner == counts[: check + 1]}
    series = [scalar_to_json(c) for c in molien_series(G, D)]
    direct = [invariant_dimension_direct(G, d) for d in range(check + 1)]
    corner = [corner_dimension(B, d) for d in range(check + 1)]
    return {"molien": series, "direct": direct, "corner_dims": corner,
            "agree": series[: check + 1] == direct == corner}


def task_pertinency(ring, G, B, D, policy, seed):
    return pertinency_report(B, D, field_policy=policy, seed=seed).to_dict()


def _default_membership(ring, B, ladder, D):
    """For e and for each generator, the smallest k with x_i^k # 1 in I."""
    out = {"e_in_I": ladder.contains(B.integral())}
    powers = {}
    for i in range(ring.n):
        powers[str(i)] = None
        for k in range(1, ladder.D + 1):
            exps = [0] * ring.n
            exps[i] = k
            if ladder.contains(B.embed(ring.monomial(exps))):
                powers[str(i)] = k
                break
    out["smallest_power_in_I"] = powers
    out["searched_up_to"] = ladder.D
    return out


def task_membership(ring, G, B, D, cfg: ExperimentConfig):
    if cfg.membership:
        top = max(sum(m) for m in cfg.membership)
        ladder = AnnihilatorLadder(B, max(top, 1))
        return {"queries": [{"exponents": list(m),
                             "in_I": ladder.contains(B.embed(ring.monomial(m)))}
                            for m in cfg.membership]}
    ladder = AnnihilatorLadder(B, min(D, 2 * ring.n))
    return _default_membership(ring, B, ladder, D)


def task_fourier_identities(ring, G, B, D):
    return fourier_identity_suite(ring.n)


# looked up by name at call time so handlers can be replaced in tests
_HANDLER_NAMES = {"verify_lemma53": "task_fourier_identities"}


def run_experiment(cfg: ExperimentConfig, timings: bool = False, seed: int = 0) -> dict:
    """Run the configured tasks; failures are recorded per task rather than raised."""
    ring, G, B = build(cfg)
    D = cfg.effective_max_degree()
    results, times = {}, {}
    for task in TASK_ORDER:
        if task not in cfg.tasks:
            continue
        start = time.perf_counter()
        try:
            if task == "pertinency":
                value = task_pertinency(ring, G, B, D, cfg.field_policy, seed)
            elif task == "membership":
                value = task_membership(ring, G, B, D, cfg)
            else:
                name = _HANDLER_NAMES.get(task, f"task_{task}")
                value = globals()[name](ring, G, B, D)
            results[task] = {"status": "ok", "result": value}
        except Exception as exc:  # reported with task attribution
            results[task] = {"status": "error", "error": f"{type(exc).__name__}: {exc}"}
        times[task] = round((time.perf_counter() - start) * 1000, 3)
    return {
        "config": cfg.to_dict(),
        "results": results,
        "timings_ms": times if timings else {},
        "version": __version__,
    }


def report_ok(report: dict) -> bool:
    return all(r["status"] == "ok" for r in report["results"].values())
