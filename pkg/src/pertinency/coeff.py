"""Exact coefficient fields.

Three fields share one small interface: the rationals (backed by
:class:`fractions.Fraction`), cyclotomic fields Q(zeta_n) and prime fields
GF(p).  Elements of every field support ``+ - * /``, ``**``, equality and
truthiness, so generic code can stay field-agnostic as long as it coerces raw
integers through ``field(x)`` first.
"""

from __future__ import annotations

import random
from fractions import Fraction
from functools import lru_cache
from math import gcd

Rational = Fraction


class MixedFieldError(TypeError):
    """Raised when an operation combines elements of different fields."""


# ---------------------------------------------------------------------------
# integer polynomials and cyclotomic polynomials
# ---------------------------------------------------------------------------


def _poly_divmod_int(num, den):
    # den monic, integer coefficients low -> high
    num = list(num)
    out = [0] * max(len(num) - len(den) + 1, 1)
    for k in range(len(num) - len(den), -1, -1):
        c = num[k + len(den) - 1]
        out[k] = c
        if c:
            for j, d in enumerate(den):
                num[k + j] -= c * d
    rem = num[: len(den) - 1]
    return out, rem


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients (low to high) of the n-th cyclotomic polynomial."""
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"cyclotomic polynomial needs n >= 1, got {n!r}")
    poly = [-1] + [0] * (n - 1) + [1]  # z^n - 1
    for d in range(1, n):
        if n % d == 0:
            poly, rem = _poly_divmod_int(poly, cyclotomic_polynomial(d))
            assert not any(rem)
    while len(poly) > 1 and poly[-1] == 0:
        poly.pop()
    return tuple(poly)


def euler_phi(n: int) -> int:
    result, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid for all 64-bit inputs."""
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
    for p in small:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in small:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


# ---------------------------------------------------------------------------
# fields
# ---------------------------------------------------------------------------


class Field:
    kind = "abstract"
    characteristic = 0

    def __call__(self, value):
        raise NotImplementedError

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def descriptor(self) -> dict:
        raise NotImplementedError

    def __repr__(self):
        return self.name


class RationalField(Field):
    kind = "rational"
    name = "QQ"

    def __call__(self, value):
        if isinstance(value, Fraction):
            return value
        if isinstance(value, (int, str)):
            return Fraction(value)
        if isinstance(value, (CyclotomicNumber, PrimeFieldElement)):
            raise MixedFieldError(f"cannot coerce {value!r} into QQ")
        return Fraction(value)

    def contains(self, x) -> bool:
        return isinstance(x, (Fraction, int))

    def descriptor(self):
        return {"kind": "rational"}

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")


QQ = RationalField()


class PrimeField(Field):
    kind = "prime"

    def __init__(self, p: int):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.characteristic = p
        self.name = f"GF({p})"

    def __call__(self, value):
        if isinstance(value, PrimeFieldElement):
            if value.modulus != self.p:
                raise MixedFieldError(f"{value!r} is not in GF({self.p})")
            return value
        if isinstance(value, int):
            return PrimeFieldElement(value % self.p, self.p)
        if isinstance(value, (Fraction, str)):
            return reduce_mod_p(Fraction(value), self.p)
        raise MixedFieldError(f"cannot coerce {value!r} into GF({self.p})")

    def contains(self, x) -> bool:
        return isinstance(x, PrimeFieldElement) and x.modulus == self.p

    def descriptor(self):
        return {"kind": "prime", "p": self.p}

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))


class CyclotomicField(Field):
    """Q(zeta_n), elements stored as residues modulo the n-th cyclotomic polynomial."""

    kind = "cyclotomic"

    def __init__(self, n: int):
        self.n = n
        self.modulus = cyclotomic_polynomial(n)
        self.degree = len(self.modulus) - 1
        self.name = f"QQ(zeta_{n})"

    def __call__(self, value):
        if isinstance(value, CyclotomicNumber):
            if value.order != self.n:
                raise MixedFieldError(f"{value!r} is not in {self.name}")
            return value
        if isinstance(value, (int, Fraction, str)):
            coeffs = [Fraction(0)] * self.degree
            coeffs[0] = Fraction(value)
            return CyclotomicNumber(self.n, coeffs)
        raise MixedFieldError(f"cannot coerce {value!r} into {self.name}")

    def contains(self, x) -> bool:
        return isinstance(x, CyclotomicNumber) and x.order == self.n

    def gen(self) -> "CyclotomicNumber":
        """The primitive root zeta_n itself (the class of z)."""
        return self.zeta(1)

    def zeta(self, k: int) -> "CyclotomicNumber":
        k %= self.n
        return CyclotomicNumber.from_poly(self.n, [0] * k + [1])

    def descriptor(self):
        return {"kind": "cyclotomic", "n": self.n}

    def __eq__(self, other):
        return isinstance(other, CyclotomicField) and other.n == self.n

    def __hash__(self):
        return hash(("cyclotomic", self.n))


# ---------------------------------------------------------------------------
# elements
# ---------------------------------------------------------------------------


class PrimeFieldElement:
    __slots__ = ("value", "modulus")

    def __init__(self, value: int, modulus: int):
        self.value = value % modulus
        self.modulus = modulus

    def _other(self, other):
        if isinstance(other, PrimeFieldElement):
            if other.modulus != self.modulus:
                raise MixedFieldError(f"GF({self.modulus}) vs GF({other.modulus})")
            return other.value
        if isinstance(other, int):
            return other % self.modulus
        if isinstance(other, Fraction):
            return reduce_mod_p(other, self.modulus).value
        return None

    def _wrap(self, v):
        return PrimeFieldElement(v, self.modulus)

    def __add__(self, other):
        o = self._other(other)
        return NotImplemented if o is None else self._wrap(self.value + o)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        return NotImplemented if o is None else self._wrap(self.value - o)

    def __rsub__(self, other):
        o = self._other(other)
        return NotImplemented if o is None else self._wrap(o - self.value)

    def __mul__(self, other):
        o = self._other(other)
        return NotImplemented if o is None else self._wrap(self.value * o)

    __rmul__ = __mul__

    def inverse(self):
        if self.value == 0:
            raise ZeroDivisionError("division by zero in GF(%d)" % self.modulus)
        return self._wrap(pow(self.value, -1, self.modulus))

    def __truediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self * self._wrap(o).inverse()

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self._wrap(o) * self.inverse()

    def __neg__(self):
        return self._wrap(-self.value)

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return self._wrap(pow(self.value, k, self.modulus))

    def __eq__(self, other):
        o = self._other(other)
        return o is not None and o == self.value

    def __hash__(self):
        return hash((self.value, self.modulus))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"{self.value} (mod {self.modulus})"

    __str__ = lambda self: str(self.value)


def _trim(coeffs):
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def _qpoly_divmod(a, b):
    a = list(a)
    out = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    lead = b[-1]
    for k in range(len(a) - len(b), -1, -1):
        c = a[k + len(b) - 1] / lead
        out[k] = c
        if c:
            for j, d in enumerate(b):
                a[k + j] -= c * d
    return _trim(out), _trim(a[: len(b) - 1])


def _qpoly_mul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _qpoly_sub(a, b):
    out = [Fraction(0)] * max(len(a), len(b))
    for i, x in enumerate(a):
        out[i] += x
    for i, y in enumerate(b):
        out[i] -= y
    return _trim(out)


class CyclotomicNumber:
    """Element of Q(zeta_n): a rational vector of length phi(n)."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs):
        self.order = order
        self.coeffs = tuple(Fraction(c) for c in coeffs)
        if len(self.coeffs) != euler_phi(order):
            raise ValueError("coefficient vector must have length phi(n)")

    @classmethod
    def from_poly(cls, order: int, poly) -> "CyclotomicNumber":
        """Reduce an arbitrary rational polynomial in z modulo Phi_n."""
        mod = cyclotomic_polynomial(order)
        deg = len(mod) - 1
        work = [Fraction(c) for c in poly]
        for k in range(len(work) - 1, deg - 1, -1):
            c = work[k]
            if c:
                for j in range(deg + 1):
                    work[k - deg + j] -= c * mod[j]
        work = (work + [Fraction(0)] * deg)[:deg]
        return cls(order, work)

    def _other(self, other):
        if isinstance(other, CyclotomicNumber):
            if other.order != self.order:
                raise MixedFieldError(f"QQ(zeta_{self.order}) vs QQ(zeta_{other.order})")
            return other.coeffs
        if isinstance(other, (int, Fraction)):
            return (Fraction(other),) + (Fraction(0),) * (len(self.coeffs) - 1)
        if isinstance(other, PrimeFieldElement):
            raise MixedFieldError("cyclotomic number combined with a prime-field element")
        return None

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return CyclotomicNumber(self.order, [a + b for a, b in zip(self.coeffs, o)])

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return CyclotomicNumber(self.order, [a - b for a, b in zip(self.coeffs, o)])

    def __rsub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return CyclotomicNumber(self.order, [b - a for a, b in zip(self.coeffs, o)])

    def __neg__(self):
        return CyclotomicNumber(self.order, [-a for a in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CyclotomicNumber(self.order, [a * other for a in self.coeffs])
        o = self._other(other)
        if o is None:
            return NotImplemented
        return CyclotomicNumber.from_poly(self.order, _qpoly_mul(self.coeffs, o))

    __rmul__ = __mul__

    def inverse(self) -> "CyclotomicNumber":
        """Inverse by the extended Euclidean algorithm against Phi_n."""
        a = _trim(self.coeffs)
        if not a:
            raise ZeroDivisionError("division by zero in QQ(zeta_%d)" % self.order)
        m = [Fraction(c) for c in cyclotomic_polynomial(self.order)]
        # invariant: r0 = s0*a (mod m), r1 = s1*a (mod m)
        r0, s0 = m, []
        r1, s1 = a, [Fraction(1)]
        while len(r1) > 1:
            quo, rem = _qpoly_divmod(r0, r1)
            r0, r1 = r1, rem
            s0, s1 = s1, _qpoly_sub(s0, _qpoly_mul(quo, s1))
        # r1 is a nonzero constant since Phi_n is irreducible
        c = r1[0]
        return CyclotomicNumber.from_poly(self.order, [x / c for x in s1])

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return CyclotomicNumber(self.order, [a / other for a in self.coeffs])
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self * CyclotomicNumber(self.order, o).inverse()

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return CyclotomicNumber(self.order, o) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = CyclotomicNumber(self.order, (1,) + (0,) * (len(self.coeffs) - 1))
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        try:
            o = self._other(other)
        except MixedFieldError:
            return False
        return o is not None and tuple(o) == self.coeffs

    def __hash__(self):
        if all(c == 0 for c in self.coeffs[1:]):
            return hash(self.coeffs[0])
        return hash((self.order, self.coeffs))

    def __bool__(self):
        return any(self.coeffs)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def __repr__(self):
        terms = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if k == 0 else ("z" if k == 1 else f"z^{k}")
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{c}*{mono}")
        return " + ".join(terms).replace("+ -", "- ") if terms else "0"

    __str__ = __repr__


def reduce_mod_p(x, p: int) -> PrimeFieldElement:
    """Image of a rational number in GF(p)."""
    x = Fraction(x)
    if x.denominator % p == 0:
        raise ValueError(f"denominator of {x} is divisible by {p}")
    return PrimeFieldElement(x.numerator * pow(x.denominator, -1, p), p)


# ---------------------------------------------------------------------------
# reductions into GF(p) (used by the modular certificate engines)
# ---------------------------------------------------------------------------


def primitive_root_of_unity_mod(n: int, p: int) -> int:
    """A primitive n-th root of unity in GF(p); requires p = 1 (mod n)."""
    if (p - 1) % n:
        raise ValueError(f"GF({p}) has no primitive {n}-th root of unity")
    factors = {q for q in range(2, n + 1) if n % q == 0 and is_prime(q)}
    for a in range(2, p):
        w = pow(a, (p - 1) // n, p)
        if all(pow(w, n // q, p) != 1 for q in factors):
            return w
    raise ValueError("no primitive root found")  # pragma: no cover


class ModularReduction:
    """Ring homomorphism from the coefficient field (integral part) into GF(p).

    For cyclotomic fields zeta_n is sent to a fixed primitive n-th root of
    unity modulo p, which needs p = 1 (mod n).
    """

    def __init__(self, field: Field, p: int):
        self.field = field
        self.p = p
        self._root = None
        if isinstance(field, CyclotomicField):
            self._root = primitive_root_of_unity_mod(field.n, p)
        elif isinstance(field, PrimeField) and field.p != p:
            raise MixedFieldError("cannot reduce GF(q) into a different prime field")

    def __call__(self, x) -> int:
        p = self.p
        if isinstance(x, PrimeFieldElement):
            return x.value
        if isinstance(x, CyclotomicNumber):
            total, w = 0, 1
            for c in x.coeffs:
                if c:
                    total += reduce_mod_p(c, p).value * w
                w = w * self._root % p
            return total % p
        return reduce_mod_p(Fraction(x), p).value


def certificate_primes(count: int, n: int, rng: random.Random | None = None,
                       congruent_to_one_mod: int = 1,
                       lo: int = 1 << 30, hi: int = 1 << 31) -> list[int]:
    """Random primes in [lo, hi) that do not divide 2n.

    ``congruent_to_one_mod`` restricts to primes p = 1 (mod m) so that GF(p)
    holds the m-th roots of unity (needed when reducing cyclotomic data).
    """
    rng = rng or random.Random(0)
    m = congruent_to_one_mod
    found: list[int] = []
    while len(found) < count:
        k = rng.randrange((lo - 1) // m + 1, (hi - 1) // m)
        p = k * m + 1
        if p < lo or p >= hi or (2 * n) % p == 0 or p in found:
            continue
        if is_prime(p):
            found.append(p)
    return found


def field_from_descriptor(desc: dict) -> Field:
    kind = desc.get("kind")
    if kind == "rational":
        return QQ
    if kind == "cyclotomic":
        return CyclotomicField(int(desc["n"]))
    if kind == "prime":
        return PrimeField(int(desc["p"]))
    raise ValueError(f"unknown field kind {kind!r}")


def lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)
