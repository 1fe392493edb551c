"""Pertinency reports: quotient Hilbert function, growth class and value."""

from __future__ import annotations

import random
from dataclasses import asdict, dataclass, field as dc_field

from ..coeff import CyclotomicField, PrimeField, certificate_primes, euler_phi
from ..series import gk_growth_estimate
from .annihilator import AnnihilatorLadder, ModularAnnihilatorLadder
from .products import GroupSmashAlgebra, SmashAlgebra

FIELD_POLICIES = ("exact", "modular_then_exact", "modular_only")


@dataclass
class PertinencyReport:
    n: int
    max_degree: int
    field: str
    field_policy: str
    dims_B: list
    dims_I: list
    hilbert_quotient: list
    classification: str  # certified_finite | estimated | inconclusive
    zero_degree: int | None
    growth_m: int | None
    gkdim_quotient: int | None
    pertinency: int | None
    pertinency_status: str  # exact | estimate | unknown
    primes: list = dc_field(default_factory=list)
    notes: list = dc_field(default_factory=list)
    annotations: list = dc_field(default_factory=list)

    @property
    def classification_line(self) -> str:
        if self.classification == "certified_finite":
            return f"certified_finite at degree {self.zero_degree}"
        if self.classification == "estimated":
            return f"estimated polynomial({self.growth_m})"
        return "inconclusive"

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: dict) -> "PertinencyReport":
        return cls(**data)


def default_max_degree(n: int) -> int:
    return 4 * n


def _is_cyclic_shift_group(B: SmashAlgebra) -> bool:
    if not isinstance(B, GroupSmashAlgebra):
        return False
    n = B.ring.n
    shifts = {tuple((i + k) % n for i in range(n)) for k in range(n)}
    return (B.K == n and all(g.is_pure_permutation() for g in B.group.elements)
            and {g.perm for g in B.group.elements} == shifts)


def theoretical_annotations(B: SmashAlgebra) -> list[str]:
    """Known lower bounds for the configuration, stated as annotations only."""
    out = []
    if B.K > 1:
        out.append("domain: p >= 1")
    ring = B.ring
    if ring.label == "minus_one" and _is_cyclic_shift_group(B):
        n = ring.n
        phi = euler_phi(n)
        if n & (n - 1) == 0:
            out.append(f"n = {n} is a power of 2: p = {n} (proven)")
        if n % 4:
            out.append(f"floor φ({n})={phi}")
        else:
            out.append(f"floor φ({n})/2={phi // 2}")
    return out


def _prime_congruence(field) -> int:
    return field.n if isinstance(field, CyclotomicField) else 1


def choose_primes(B: SmashAlgebra, count: int, seed: int = 0) -> list[int]:
    if isinstance(B.field, PrimeField):
        return [B.field.p]
    return certificate_primes(count, B.ring.n, random.Random(seed),
                              congruent_to_one_mod=_prime_congruence(B.field))


def _classify(h, window):
    est = gk_growth_estimate(h, min(window, len(h)))
    if est.kind == "certified_zero":
        return "certified_finite", est.zero_degree, 0
    if est.kind == "polynomial":
        return "estimated", None, est.m
    return "inconclusive", None, None


def pertinency_report(B: SmashAlgebra, D: int | None = None,
                      field_policy: str = "modular_then_exact",
                      window: int = 4, seed: int = 0, primes=None) -> PertinencyReport:
    """Compute h(d) = dim B_d - dim I_d for d <= D and derive the pertinency.

    exact               exact annihilator ladder over the algebra's field
    modular_only        annihilator ladder modulo two certificate primes
    modular_then_exact  modular run; a zero slice is then confirmed exactly
    """
    if field_policy not in FIELD_POLICIES:
        raise ValueError(f"field_policy must be one of {FIELD_POLICIES}")
    n = B.ring.n
    D = default_max_degree(n) if D is None else D
    if D < 2:
        raise ValueError("need max degree >= 2")
    notes = []
    used_primes: list[int] = []
    if field_policy == "exact":
        h = AnnihilatorLadder(B, D).h
        notes.append("exact annihilator ladder")
    else:
        used_primes = list(primes) if primes else choose_primes(B, 2, seed)
        runs = [ModularAnnihilatorLadder(B, D, p) for p in used_primes]
        # h_p >= h for every p, so the pointwise minimum is the sharpest bound
        h = [min(vals) for vals in zip(*(r.h for r in runs))]
        if len(runs) > 1 and any(r.h != runs[0].h for r in runs):
            notes.append("modular runs disagree; using the pointwise minimum")
        notes.append(f"modular annihilator ladder mod {', '.join(map(str, used_primes))}")
        zero = next((d for d, v in enumerate(h) if v == 0), None)
        if field_policy == "modular_then_exact":
            if isinstance(B.field, PrimeField):
                notes.append("coefficient field is GF(p); modular run is exact")
            elif zero is not None:
                exact = AnnihilatorLadder(B, zero)
                if exact.h[zero] != 0:
                    raise ArithmeticError("exact confirmation failed: modular zero slice "
                                          f"at degree {zero} is nonzero over {B.field!r}")
                h = exact.h + [0] * (D - zero)
                notes.append(f"zero slice at degree {zero} confirmed by the exact ladder")
            else:
                notes.append("no zero slice; exact confirmation skipped, "
                             "values are modular (upper bounds for h)")
        elif zero is not None:
            notes.append("zero slice certified by the modular bound h_p >= h")
    classification, zero_degree, m = _classify(h, window)
    if classification == "certified_finite":
        gk, pert, status = 0, n, "exact"
    elif classification == "estimated":
        gk, pert, status = m, n - m, "estimate"
        notes.append(f"GK-dimension estimated: differences of order {m} vanish "
                     f"on the last {window} degrees")
    else:
        gk, pert, status = None, None, "unknown"
    dims_B = [B.dim(d) for d in range(D + 1)]
    return PertinencyReport(
        n=n, max_degree=D, field=repr(B.field), field_policy=field_policy,
        dims_B=dims_B, dims_I=[b - v for b, v in zip(dims_B, h)],
        hilbert_quotient=list(h), classification=classification,
        zero_degree=zero_degree, growth_m=m, gkdim_quotient=gk,
        pertinency=pert, pertinency_status=status, primes=used_primes,
        notes=notes, annotations=theoretical_annotations(B),
    )
