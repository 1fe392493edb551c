"""Experiment configuration: JSON schema validation and object construction."""

from __future__ import annotations

import json
from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from ..algebra import GradingAssignment, SkewPolyRing
from ..coeff import field_from_descriptor, is_prime
from ..group import GroupTooLarge, MonomialAutomorphism, cyclic_permutation, group_closure
from ..smash.products import DualGroupSmashAlgebra, GroupSmashAlgebra
from ..smash.report import FIELD_POLICIES

TASKS = ("pertinency", "reflection", "molien", "trace", "hdet", "membership", "verify_lemma53")
TOP_KEYS = {"ring", "field", "group", "smash", "grading", "max_degree", "field_policy",
            "tasks", "membership"}


class ConfigError(ValueError):
    """Invalid configuration; ``errors`` lists every violation found."""

    def __init__(self, errors):
        self.errors = list(errors)
        super().__init__("; ".join(self.errors))


@dataclass
class ExperimentConfig:
    ring: dict
    field: dict
    group: dict
    smash: dict
    tasks: list
    max_degree: int | None = None
    field_policy: str = "modular_then_exact"
    grading: list | None = None
    membership: list | None = None
    extra: dict = dc_field(default_factory=dict)

    @property
    def n(self) -> int:
        return self.ring["n"]

    def effective_max_degree(self) -> int:
        return self.max_degree if self.max_degree is not None else 4 * self.n

    def to_dict(self) -> dict:
        out = {"ring": self.ring, "field": self.field, "group": self.group,
               "smash": self.smash, "max_degree": self.max_degree,
               "field_policy": self.field_policy, "tasks": list(self.tasks)}
        if self.grading is not None:
            out["grading"] = self.grading
        if self.membership is not None:
            out["membership"] = self.membership
        return out


# ---------------------------------------------------------------------------
# parsing
# ---------------------------------------------------------------------------


def _is_int(x):
    return isinstance(x, int) and not isinstance(x, bool)


def _parse_rational(x):
    if _is_int(x):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise ValueError(f"not a rational number: {x!r}")


def _check_field(spec, n, errors):
    if not isinstance(spec, dict) or "kind" not in spec:
        errors.append("field: expected an object with a 'kind'")
        return
    kind = spec["kind"]
    if kind == "rational":
        return
    if kind == "cyclotomic":
        m = spec.get("n")
        if not _is_int(m) or m < 1:
            errors.append("field.n: cyclotomic order must be a positive integer")
        return
    if kind == "prime":
        p = spec.get("p")
        if not _is_int(p) or not is_prime(p):
            errors.append(f"field.p: {p!r} is not a prime")
        elif (2 * n) % p == 0:
            errors.append(f"field.p: characteristic {p} divides 2n = {2 * n}")
        return
    errors.append(f"field.kind: unknown kind {kind!r}")


def _check_scalar(x, field_spec):
    if isinstance(x, dict):
        if set(x) != {"zeta"} or not _is_int(x["zeta"]):
            raise ValueError(f"scalar object must be {{'zeta': k}}, got {x!r}")
        if field_spec.get("kind") != "cyclotomic":
            raise ValueError("roots of unity as scalars need a cyclotomic field")
        return
    _parse_rational(x)


def _check_ring(spec, errors):
    if not isinstance(spec, dict):
        errors.append("ring: expected an object")
        return None
    n = spec.get("n")
    if not _is_int(n) or n < 1:
        errors.append("ring.n: must be a positive integer")
        n = None
    q = spec.get("q", "minus_one")
    if isinstance(q, str):
        if q not in ("minus_one", "commutative"):
            errors.append(f"ring.q: unknown preset {q!r}")
    elif isinstance(q, list):
        if n is not None and (len(q) != n or any(not isinstance(r, list) or len(r) != n for r in q)):
            errors.append("ring.q: matrix must be n x n")
        else:
            try:
                vals = [[_parse_rational(x) for x in r] for r in q]
                for i in range(len(vals)):
                    if vals[i][i] != 1:
                        errors.append(f"ring.q: diagonal entry {i} must be 1")
                    for j in range(len(vals)):
                        if vals[i][j] * vals[j][i] != 1:
                            errors.append(f"ring.q: q[{i}][{j}] * q[{j}][{i}] != 1")
            except (ValueError, ZeroDivisionError) as exc:
                errors.append(f"ring.q: {exc}")
    else:
        errors.append("ring.q: expected 'minus_one', 'commutative' or a matrix")
    return n


def _check_group(spec, n, field_spec, errors):
    if not isinstance(spec, dict) or "kind" not in spec:
        errors.append("group: expected an object with a 'kind'")
        return
    kind = spec["kind"]
    if kind == "cyclic_permutation":
        return
    if kind != "explicit":
        errors.append(f"group.kind: unknown kind {kind!r}")
        return
    gens = spec.get("generators")
    if not isinstance(gens, list) or not gens:
        errors.append("group.generators: need a nonempty list")
        return
    for t, g in enumerate(gens):
        if not isinstance(g, dict) or "perm" not in g:
            errors.append(f"group.generators[{t}]: need an object with 'perm'")
            continue
        perm = g["perm"]
        if n is not None and (not isinstance(perm, list) or sorted(perm) != list(range(n))):
            errors.append(f"group.generators[{t}].perm: not a permutation of 0..{n - 1}")
        sc = g.get("scalars")
        if sc is not None:
            if not isinstance(sc, list) or (n is not None and len(sc) != n):
                errors.append(f"group.generators[{t}].scalars: need n scalars")
            else:
                for x in sc:
                    try:
                        _check_scalar(x, field_spec if isinstance(field_spec, dict) else {})
                        if not isinstance(x, dict) and _parse_rational(x) == 0:
                            raise ValueError("scalars must be nonzero")
                    except (ValueError, ZeroDivisionError) as exc:
                        errors.append(f"group.generators[{t}].scalars: {exc}")


def parse_config(text) -> ExperimentConfig:
    """Parse and validate a JSON configuration; raise ConfigError listing all problems."""
    try:
        data = json.loads(text) if isinstance(text, (str, bytes)) else text
    except json.JSONDecodeError as exc:
        raise ConfigError([f"invalid JSON: {exc}"]) from None
    if not isinstance(data, dict):
        raise ConfigError(["top level must be a JSON object"])
    errors: list[str] = []
    for key in sorted(set(data) - TOP_KEYS):
        errors.append(f"unknown key {key!r}")
    for key in ("ring", "field", "group", "smash", "tasks"):
        if key not in data:
            errors.append(f"missing key {key!r}")
    n = _check_ring(data.get("ring"), errors) if "ring" in data else None
    if "field" in data:
        _check_field(data["field"], n or 1, errors)
    if "group" in data:
        _check_group(data["group"], n, data.get("field"), errors)
    smash = data.get("smash")
    if isinstance(smash, str):
        smash = {"kind": smash}
    smash_kind = smash.get("kind") if isinstance(smash, dict) else None
    if "smash" in data and smash_kind not in ("group", "dual"):
        errors.append("smash.kind: must be 'group' or 'dual'")
    grading = data.get("grading")
    if smash_kind == "dual":
        if grading is None:
            errors.append("grading: required for a dual smash product")
        elif not isinstance(grading, list) or (n is not None and len(grading) != n):
            errors.append("grading: need one group-element label per generator")
        else:
            for lab in grading:
                if not (_is_int(lab) or (isinstance(lab, list) and all(_is_int(a) for a in lab))):
                    errors.append(f"grading: bad label {lab!r}")
    elif grading is not None:
        errors.append("grading: only allowed for a dual smash product")
    D = data.get("max_degree")
    if D is not None and (not _is_int(D) or D < 2):
        errors.append("max_degree: must be an integer >= 2")
    policy = data.get("field_policy", "modular_then_exact")
    if policy not in FIELD_POLICIES:
        errors.append(f"field_policy: must be one of {', '.join(FIELD_POLICIES)}")
    tasks = data.get("tasks")
    if "tasks" in data:
        if not isinstance(tasks, list) or not tasks:
            errors.append("tasks: need a nonempty list")
        else:
            for t in tasks:
                if t not in TASKS:
                    errors.append(f"tasks: unknown task {t!r}")
    membership = data.get("membership")
    if membership is not None:
        if not isinstance(membership, list) or any(
                not isinstance(m, list) or (n is not None and len(m) != n)
                or any(not _is_int(a) or a < 0 for a in m) for m in membership):
            errors.append("membership: need a list of exponent vectors of length n")
    if not errors and isinstance(tasks, list) and "verify_lemma53" in tasks:
        if data["ring"].get("q", "minus_one") != "minus_one" or data["group"]["kind"] != "cyclic_permutation":
            errors.append("verify_lemma53: needs ring.q = 'minus_one' and a cyclic_permutation group")
    cfg = None
    if not errors:
        cfg = ExperimentConfig(
            ring={"n": n, "q": data["ring"].get("q", "minus_one")},
            field=dict(data["field"]), group=dict(data["group"]), smash={"kind": smash_kind},
            tasks=list(tasks), max_degree=D, field_policy=policy,
            grading=grading, membership=membership)
        # semantic checks that need the objects
        try:
            build(cfg)
        except ConfigError as exc:
            errors.extend(exc.errors)
    if errors:
        raise ConfigError(errors)
    return cfg


# ---------------------------------------------------------------------------
# building objects
# ---------------------------------------------------------------------------


def build_field(spec):
    return field_from_descriptor(spec)


def _scalar(x, field):
    if isinstance(x, dict):
        return field.zeta(x["zeta"])
    return field(_parse_rational(x))


def build_ring(cfg: ExperimentConfig, field=None) -> SkewPolyRing:
    field = field or build_field(cfg.field)
    n, q = cfg.ring["n"], cfg.ring["q"]
    if q == "minus_one":
        return SkewPolyRing.minus_one(n, field)
    if q == "commutative":
        return SkewPolyRing.commutative(n, field)
    return SkewPolyRing(n, [[field(_parse_rational(x)) for x in r] for r in q], field)


def build_generators(cfg: ExperimentConfig, ring: SkewPolyRing):
    if cfg.group["kind"] == "cyclic_permutation":
        return [cyclic_permutation(ring)]
    gens = []
    for g in cfg.group["generators"]:
        sc = g.get("scalars")
        scalars = [_scalar(x, ring.field) for x in sc] if sc is not None else None
        gens.append(MonomialAutomorphism(ring, g["perm"], scalars))
    return gens


def build(cfg: ExperimentConfig, field=None):
    """(ring, group, smash algebra) for a configuration."""
    errors = []
    ring = build_ring(cfg, field)
    gens = build_generators(cfg, ring)
    for t, g in enumerate(gens):
        if not g.compatible_with(ring):
            errors.append(f"group.generators[{t}]: does not preserve the ring relations")
    if errors:
        raise ConfigError(errors)
    try:
        G = group_closure(gens, ring=ring)
    except GroupTooLarge as exc:
        raise ConfigError([f"group: {exc}"]) from None
    if cfg.smash["kind"] == "group":
        if not ring.field(G.order):
            raise ConfigError([f"field: |G| = {G.order} is not invertible"])
        return ring, G, GroupSmashAlgebra(ring, G)
    if not G.is_abelian():
        raise ConfigError(["group: a dual smash product needs an abelian group"])
    degrees = []
    for lab in cfg.grading:
        exps = [lab] if _is_int(lab) else lab
        if len(exps) > len(gens):
            raise ConfigError([f"grading: label {lab!r} has more exponents than generators"])
        k = G.identity
        for gen_k, a in zip(gens, exps):
            k = G.mul(k, G.power(G.index[gen_k], a))
        degrees.append(k)
    grading = GradingAssignment(G, degrees)
    return ring, G, DualGroupSmashAlgebra(ring, grading)


def apply_overrides(cfg: ExperimentConfig, max_degree=None, field=None) -> ExperimentConfig:
    """Return a copy with command-line overrides applied (then revalidated)."""
    data = cfg.to_dict()
    if max_degree is not None:
        data["max_degree"] = max_degree
    if field is not None:
        data["field"] = parse_field_flag(field)
    return parse_config(json.dumps(data))


def parse_field_flag(text: str) -> dict:
    """'rational', 'cyclotomic:N' or 'prime:P'."""
    kind, _, arg = text.partition(":")
    if kind == "rational" and not arg:
        return {"kind": "rational"}
    if kind == "cyclotomic" and arg.isdigit():
        return {"kind": "cyclotomic", "n": int(arg)}
    if kind == "prime" and arg.isdigit():
        return {"kind": "prime", "p": int(arg)}
    raise ConfigError([f"--field: cannot parse {text!r} (use rational, cyclotomic:N or prime:P)"])
