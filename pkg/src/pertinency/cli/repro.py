"""Named reproduction cases: each is a list of configurations with expected outcomes."""

from __future__ import annotations

from math import gcd

from .config import parse_config


def _cyclic(n, tasks, q="minus_one", field=None, **extra):
    data = {"ring": {"n": n, "q": q}, "field": field or {"kind": "rational"},
            "group": {"kind": "cyclic_permutation"}, "smash": {"kind": "group"},
            "tasks": tasks}
    data.update(extra)
    return data


def min_odd_prime_factor(n):
    for p in range(3, n + 1, 2):
        if n % p == 0:
            return p
    return None


def expected_reflection_number(n):
    p = min_odd_prime_factor(n)
    return n if p is None else n - n // p


def totient(n):
    return sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)


def totient_floor(n):
    return totient(n) // 2 if n % 4 == 0 else totient(n)


def _check_powers_of_two(report, n):
    p = report["results"]["pertinency"]["result"]
    return p["classification"] == "certified_finite" and p["pertinency"] == n


def _check_reflection(report, n):
    r = report["results"]["reflection"]["result"]
    return (r["group_reflection_number"] == expected_reflection_number(n)
            and r.get("odd_cycle_agreement", False))


def _check_totient(report, n):
    p = report["results"]["pertinency"]["result"]
    m = 0 if p["classification"] == "certified_finite" else p["growth_m"]
    return m is not None and m <= n - totient_floor(n)


def _check_hdet(report, n):
    return report["results"]["hdet"]["result"]["all_one"]


def _check_fourier(report, n):
    return report["results"]["verify_lemma53"]["result"]["all_pass"]


def _check_commutative(report, n):
    p = report["results"]["pertinency"]["result"]
    return p["growth_m"] == 1 and p["pertinency"] == 1


CASES = {
    "powers-of-two": (
        "certified pertinency n for the (-1)-skew ring with cyclic W, n = 2, 4",
        [(n, _cyclic(n, ["pertinency"], max_degree=4 * n,
                     field_policy="exact" if n == 2 else "modular_then_exact"),
          _check_powers_of_two) for n in (2, 4)]),
    "reflection-numbers": (
        "r(R, W) from Padé pole orders against the closed formula, n = 2..8",
        [(n, _cyclic(n, ["trace", "reflection"], max_degree=2 * n + 8), _check_reflection)
         for n in range(2, 9)]),
    "totient-floors": (
        "growth estimate of B/I against the totient lower bound, n = 3, 5, 6",
        [(n, _cyclic(n, ["pertinency"], max_degree=4 * n, field_policy="modular_only"),
          _check_totient) for n in (3, 5, 6)]),
    "hdet-cyclic": (
        "homological determinant of every power of the cyclic shift, n = 2..6",
        [(n, _cyclic(n, ["hdet"], max_degree=2 * n + 8), _check_hdet) for n in range(2, 7)]),
    "fourier-identities": (
        "anticommutator identity and ideal memberships over Q(zeta_4), n = 4",
        [(4, _cyclic(4, ["verify_lemma53"], field={"kind": "cyclotomic", "n": 4},
                     max_degree=8), _check_fourier)]),
    "commutative-contrast": (
        "commutative k[x1, x2] with the swap: linear growth, pertinency 1",
        [(2, _cyclic(2, ["pertinency"], q="commutative", max_degree=12,
                     field_policy="exact"), _check_commutative)]),
}


def case_ids():
    return list(CASES)


def case_configs(case_id):
    """[(n, ExperimentConfig, check)] for one case."""
    if case_id not in CASES:
        raise KeyError(case_id)
    return [(n, parse_config(data), check) for n, data, check in CASES[case_id][1]]
