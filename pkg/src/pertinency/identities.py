"""Checks of explicit identities in the skew polynomial ring and its smash product.

* Fourier-type generators y_j = sum_i zeta^(ij) x_i and Y_j = sum_i zeta^(ij) x_i^2
  of the (-1)-skew ring over Q(zeta_n), with the anticommutator identity
  y_i y_j + y_j y_i = 2 Y_(i+j) and, for n a power of two, the memberships
  (y_s y_(s-1))^n # 1 in I and y_s^(2(d+1)) # 1 in I.
* Products of G-homogeneous elements of a dual smash product whose suffix
  degrees exhaust G lie in I.
"""

from __future__ import annotations

import random

from .algebra import GradingAssignment, SkewPolyRing
from .coeff import CyclotomicField
from .group import cyclic_group
from .smash.annihilator import AnnihilatorLadder
from .smash.products import DualGroupSmashAlgebra, GroupSmashAlgebra


def fourier_generators(ring: SkewPolyRing):
    """Lists y[0..n-1], Y[0..n-1] with x_i numbered 1..n in the exponents."""
    field = ring.field
    if not isinstance(field, CyclotomicField) or field.n % ring.n:
        raise ValueError("need coefficients containing the n-th roots of unity")
    n = ring.n
    zeta = field.zeta(field.n // n)
    xs = ring.gens()
    y, Y = [], []
    for j in range(n):
        yj, Yj = ring.element(), ring.element()
        for i in range(1, n + 1):
            c = zeta ** ((i * j) % n)
            yj = yj + xs[i - 1] * c
            Yj = Yj + (xs[i - 1] * xs[i - 1]) * c
        y.append(yj)
        Y.append(Yj)
    return y, Y


def _log2_exact(n):
    d = n.bit_length() - 1
    return d if n == 1 << d else None


def fourier_identity_suite(n: int) -> dict:
    """Run the identity suite over Q(zeta_n) for the (-1)-skew ring with W = <sigma>."""
    field = CyclotomicField(n)
    ring = SkewPolyRing.minus_one(n, field)
    y, Y = fourier_generators(ring)
    anticommutator = {}
    for i in range(n):
        for j in range(n):
            anticommutator[f"{i},{j}"] = (y[i] * y[j] + y[j] * y[i]) == Y[(i + j) % n] * 2
    out = {"n": n, "field": repr(field),
           "anticommutator": all(anticommutator.values()),
           "anticommutator_failures": [k for k, v in anticommutator.items() if not v]}
    d = _log2_exact(n)
    if d is None:
        out["power_of_two"] = False
        return out
    out["power_of_two"] = True
    B = GroupSmashAlgebra(ring, cyclic_group(ring))
    top = max(2 * n, 2 * (d + 1))
    ladder = AnnihilatorLadder(B, top)
    out["ladder_h"] = ladder.h
    pair_power, square_power = {}, {}
    for s in range(n):
        f = (y[s] * y[(s - 1) % n]) ** n
        pair_power[str(s)] = ladder.contains(B.embed(f))
        g = y[s] ** (2 * (d + 1))
        square_power[str(s)] = ladder.contains(B.embed(g))
    out["pair_power_in_I"] = pair_power
    out["square_power_in_I"] = square_power
    out["all_pass"] = out["anticommutator"] and all(pair_power.values()) and all(square_power.values())
    return out


# ---------------------------------------------------------------------------
# suffix-cover products in dual smash products
# ---------------------------------------------------------------------------


def suffix_degrees(grading: GradingAssignment, factors) -> list[int]:
    """Group degrees of f_w ... f_m for w = 1..m (factors given as monomials)."""
    G = grading.group
    out = []
    acc = G.identity
    for m in reversed(factors):
        acc = G.mul(grading.degree_of(m), acc)
        out.append(acc)
    return out[::-1]


def covers_group(grading: GradingAssignment, factors) -> bool:
    return set(suffix_degrees(grading, factors)) == set(range(grading.group.order))


def random_cover_sequence(grading: GradingAssignment, rng: random.Random,
                          max_factor_degree: int = 2, max_len: int = 8):
    """Random monomial factors whose suffix degrees cover G, or None."""
    n = len(grading.degrees)
    G = grading.group
    for _ in range(200):
        length = rng.randint(G.order, max(G.order, max_len))
        factors = []
        for _ in range(length):
            deg = rng.randint(1, max_factor_degree)
            e = [0] * n
            for _ in range(deg):
                e[rng.randrange(n)] += 1
            factors.append(tuple(e))
        if covers_group(grading, factors):
            return factors
    return None


def cover_product_in_ideal(B: DualGroupSmashAlgebra, factors, ladder=None) -> bool:
    """Whether f_1 ... f_m # 1 lies in the ideal generated by e."""
    ring = B.ring
    prod = ring.one()
    for m in factors:
        prod = prod * ring.monomial(m)
    d = sum(sum(m) for m in factors)
    if not prod:
        return True
    ladder = ladder if ladder is not None and ladder.D >= d else AnnihilatorLadder(B, d)
    return ladder.contains(B.embed(prod))
