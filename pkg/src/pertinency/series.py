"""Truncated power series, rational functions and growth estimates.

Polynomials are plain lists of field elements, lowest degree first, with no
trailing zeros (the zero polynomial is ``[]``).
"""

from __future__ import annotations

from dataclasses import dataclass

from .coeff import QQ
from .linalg import Matrix, rref_rank


class PadeError(ValueError):
    """No rational function of the requested shape fits the series."""


class PadeUnstable(PadeError):
    """Reconstructions at truncations D and D-2 disagree; more terms are needed."""


# ---------------------------------------------------------------------------
# polynomial helpers over a field
# ---------------------------------------------------------------------------


def poly_trim(a):
    a = list(a)
    while a and not a[-1]:
        a.pop()
    return a


def poly_mul(a, b, field=QQ):
    if not a or not b:
        return []
    out = [field.zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = out[i + j] + x * y
    return poly_trim(out)


def poly_divmod(a, b, field=QQ):
    b = poly_trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = poly_trim(a)
    if len(a) < len(b):
        return [], a
    a = list(a)
    inv = field.one / b[-1]
    q = [field.zero] * (len(a) - len(b) + 1)
    for k in range(len(a) - len(b), -1, -1):
        c = a[k + len(b) - 1] * inv
        q[k] = c
        if c:
            for j, y in enumerate(b):
                a[k + j] = a[k + j] - c * y
    return poly_trim(q), poly_trim(a[: len(b) - 1])


def poly_gcd(a, b, field=QQ):
    a, b = poly_trim(a), poly_trim(b)
    while b:
        a, b = b, poly_divmod(a, b, field)[1]
    if not a:
        return []
    inv = field.one / a[-1]
    return [x * inv for x in a]


def poly_eval(a, x, field=QQ):
    acc = field.zero
    for c in reversed(a):
        acc = acc * x + c
    return acc


def poly_str(a, var="t"):
    if not a:
        return "0"
    parts = []
    for k, c in enumerate(a):
        if not c:
            continue
        mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
        cs = str(c)
        if not mono:
            parts.append(cs)
        elif cs == "1":
            parts.append(mono)
        elif cs == "-1":
            parts.append("-" + mono)
        else:
            if any(ch in cs for ch in "+ "):
                cs = f"({cs})"
            parts.append(f"{cs}*{mono}")
    return " + ".join(parts).replace("+ -", "- ")


# ---------------------------------------------------------------------------
# series and rational functions
# ---------------------------------------------------------------------------


class TruncatedSeries:
    """Power series known up to and including degree ``truncation``."""

    def __init__(self, coeffs, field=QQ):
        self.field = field
        self.coeffs = [field(c) for c in coeffs]
        if not self.coeffs:
            raise ValueError("a truncated series needs at least one coefficient")

    @property
    def truncation(self) -> int:
        return len(self.coeffs) - 1

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, k):
        return self.coeffs[k]

    def __iter__(self):
        return iter(self.coeffs)

    def truncate(self, D: int) -> "TruncatedSeries":
        return TruncatedSeries(self.coeffs[: D + 1], self.field)

    def __add__(self, other):
        D = min(self.truncation, other.truncation)
        return TruncatedSeries([a + b for a, b in zip(self.coeffs[: D + 1], other.coeffs)], self.field)

    def scale(self, c):
        c = self.field(c)
        return TruncatedSeries([c * a for a in self.coeffs], self.field)

    def __eq__(self, other):
        return isinstance(other, TruncatedSeries) and self.coeffs == other.coeffs

    def __repr__(self):
        return f"TruncatedSeries({[str(c) for c in self.coeffs]})"


class RationalFunction:
    """num/den in lowest terms with den(0) = 1."""

    def __init__(self, num, den, field=QQ):
        self.field = field
        num = poly_trim([field(c) for c in num])
        den = poly_trim([field(c) for c in den])
        if not den:
            raise ZeroDivisionError("zero denominator")
        g = poly_gcd(num, den, field) if num else [field.one]
        if len(g) > 1:
            num = poly_divmod(num, g, field)[0]
            den = poly_divmod(den, g, field)[0]
        if not num:
            den = [field.one]
        if not den[0]:
            raise ValueError("denominator vanishes at t = 0; not a power series")
        inv = field.one / den[0]
        self.num = [c * inv for c in num]
        self.den = [c * inv for c in den]

    def expand(self, D: int) -> TruncatedSeries:
        """Power series coefficients 0..D."""
        f = self.field
        out = []
        for i in range(D + 1):
            c = self.num[i] if i < len(self.num) else f.zero
            for j in range(1, min(i, len(self.den) - 1) + 1):
                c = c - self.den[j] * out[i - j]
            out.append(c)
        return TruncatedSeries(out, f)

    def is_zero(self) -> bool:
        return not self.num

    def __eq__(self, other):
        return (isinstance(other, RationalFunction) and self.num == other.num
                and self.den == other.den)

    def __hash__(self):
        return hash((tuple(self.num), tuple(self.den)))

    def __str__(self):
        if len(self.den) == 1:
            return poly_str(self.num)
        num = poly_str(self.num)
        if sum(1 for c in self.num if c) > 1:
            num = f"({num})"
        return f"{num}/({poly_str(self.den)})"

    __repr__ = __str__


def _solve(rows, rhs, nvars, field):
    """A particular solution of rows @ x = rhs (free variables zero), or None."""
    if nvars == 0:
        return [] if all(not b for b in rhs) else None
    aug = Matrix([list(r) + [b] for r, b in zip(rows, rhs)], field, ncols=nvars + 1)
    red, rk = rref_rank(aug)
    x = [field.zero] * nvars
    for i in range(rk):
        row = red.data[i]
        lead = next(j for j, v in enumerate(row) if v)
        if lead == nvars:
            return None
        x[lead] = row[nvars]
    return x


def _pade_once(coeffs, max_num, max_den, field):
    D = len(coeffs) - 1
    for k in range(max_den + 1):
        rows, rhs = [], []
        for i in range(max_num + 1, D + 1):
            rows.append([coeffs[i - j] if i - j >= 0 else field.zero for j in range(1, k + 1)])
            rhs.append(-coeffs[i])
        q = _solve(rows, rhs, k, field)
        if q is None:
            continue
        den = [field.one] + q
        num = []
        for i in range(max_num + 1):
            c = field.zero
            for j in range(min(i, k) + 1):
                c = c + den[j] * coeffs[i - j]
            num.append(c)
        return RationalFunction(num, den, field)
    raise PadeError(f"no rational function with numerator degree <= {max_num} "
                    f"and denominator degree <= {max_den} fits {D + 1} coefficients")


def pade_reconstruct(s: TruncatedSeries, max_num: int, max_den: int) -> RationalFunction:
    """Rational function with small degrees matching all coefficients of ``s``.

    The reconstruction is repeated with the last two coefficients dropped and
    both answers must coincide; otherwise :class:`PadeUnstable` is raised.
    """
    D = s.truncation
    if max_num < 0 or max_den < 0:
        raise ValueError("degree bounds must be nonnegative")
    if max_num + max_den + 3 > D:
        raise ValueError(f"need at least {max_num + max_den + 4} coefficients "
                         f"(bounds {max_num}/{max_den} plus two for the stability check), got {D + 1}")
    f = _pade_once(s.coeffs, max_num, max_den, s.field)
    try:
        g = _pade_once(s.coeffs[:-2], max_num, max_den, s.field)
    except PadeError:
        g = None
    if g != f:
        raise PadeUnstable("reconstruction changes between truncations "
                           f"{D - 2} and {D}; increase D")
    return f


def _multiplicity_at_one(a, field):
    a = poly_trim(a)
    m = 0
    while a and not poly_eval(a, field.one, field):
        a = poly_divmod(a, [-field.one, field.one], field)[0]
        m += 1
    return m


def pole_order_at_one(f: RationalFunction) -> int:
    """Order of the pole of f at t = 1 (0 when f is regular there)."""
    if f.is_zero():
        return 0
    return max(0, _multiplicity_at_one(f.den, f.field) - _multiplicity_at_one(f.num, f.field))


def leading_term_at_infinity(f: RationalFunction):
    """(m, c) with f(t) = c * t**m * (1 + O(1/t)) as t -> infinity."""
    if f.is_zero():
        raise ValueError("the zero function has no leading term")
    m = (len(f.num) - 1) - (len(f.den) - 1)
    return m, f.num[-1] / f.den[-1]


# ---------------------------------------------------------------------------
# growth of Hilbert functions
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GrowthEstimate:
    kind: str  # "certified_zero" | "polynomial" | "inconclusive"
    m: int | None = None
    zero_degree: int | None = None

    def __str__(self):
        if self.kind == "polynomial":
            return f"polynomial({self.m})"
        if self.kind == "certified_zero":
            return f"certified_zero at degree {self.zero_degree}"
        return self.kind


def _differences(h, m):
    h = list(h)
    for _ in range(m):
        h = [b - a for a, b in zip(h, h[1:])]
    return h


def gk_growth_estimate(h, window: int) -> GrowthEstimate:
    """Classify the growth of a Hilbert function from finitely many values.

    A zero value certifies GK-dimension 0 (the algebra is generated in degrees
    at most one, so every later slice vanishes).  Otherwise the smallest m
    whose m-th finite difference vanishes on the last ``window`` positions is
    returned as ``polynomial(m)``, an estimate of the GK-dimension.
    """
    h = list(h)
    if window < 1:
        raise ValueError("window must be positive")
    if window > len(h):
        raise ValueError(f"window {window} exceeds the {len(h)} available values")
    for d, v in enumerate(h):
        if v == 0:
            return GrowthEstimate("certified_zero", 0, d)
    m = 1
    while window + m <= len(h):
        tail = _differences(h[-(window + m):], m)
        if all(v == 0 for v in tail):
            return GrowthEstimate("polynomial", m)
        m += 1
    return GrowthEstimate("inconclusive")
