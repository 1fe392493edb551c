"""q-skew polynomial rings with PBW normal forms.

The ring k_q[x_1..x_n] has relations x_j x_i = q[i][j] x_i x_j for i < j.
Generators are indexed from 0 in code.  Every element is a linear combination
of sorted monomials x_0^a_0 ... x_{n-1}^a_{n-1}, and the product of two
sorted monomials is again one sorted monomial times a product of q's, so no
rewriting system is needed.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb

import numpy as np

from .coeff import QQ, MixedFieldError
from .series import TruncatedSeries


class Monomial(tuple):
    """Exponent vector of a PBW monomial."""

    __slots__ = ()

    def __new__(cls, exps):
        return super().__new__(cls, (int(a) for a in exps))

    @property
    def degree(self) -> int:
        return sum(self)

    @property
    def exponents(self) -> tuple:
        return tuple(self)

    def __mul__(self, other):
        return Monomial(a + b for a, b in zip(self, other))

    def __str__(self):
        parts = []
        for i, a in enumerate(self):
            if a == 1:
                parts.append(f"x{i + 1}")
            elif a:
                parts.append(f"x{i + 1}^{a}")
        return "*".join(parts) or "1"

    def __repr__(self):
        return f"Monomial({tuple(self)!r})"


@lru_cache(maxsize=None)
def _compositions(n: int, d: int) -> tuple:
    if n == 0:
        return ((),) if d == 0 else ()
    if n == 1:
        return ((d,),)
    out = []
    for a in range(d, -1, -1):
        for rest in _compositions(n - 1, d - a):
            out.append((a,) + rest)
    return tuple(out)


def degree_basis_exponents(n: int, d: int) -> list[Monomial]:
    """Monomials of degree d, lexicographically decreasing (x_0 exponent first)."""
    return [Monomial(c) for c in _compositions(n, d)]


@lru_cache(maxsize=64)
def exponent_array(n: int, d: int) -> np.ndarray:
    """Same order as :func:`degree_basis_exponents`, as an (N, n) int64 array."""
    if n == 1:
        return np.array([[d]], dtype=np.int64)
    blocks = []
    for a in range(d, -1, -1):
        rest = exponent_array(n - 1, d - a)
        blocks.append(np.hstack([np.full((rest.shape[0], 1), a, dtype=np.int64), rest]))
    out = np.vstack(blocks)
    out.flags.writeable = False
    return out


class ExponentIndex:
    """Vectorized lookup of row positions in :func:`exponent_array`."""

    def __init__(self, n: int, d: int):
        self.n, self.d = n, d
        self.array = exponent_array(n, d)
        self.base = d + 1
        keys = self.keys(self.array)
        self.order = np.argsort(keys)
        self.sorted_keys = keys[self.order]

    def keys(self, exps):
        w = self.base ** np.arange(self.n - 1, -1, -1, dtype=np.int64)
        return exps @ w

    def __call__(self, exps) -> np.ndarray:
        pos = np.searchsorted(self.sorted_keys, self.keys(exps))
        return self.order[pos]

    def __len__(self):
        return self.array.shape[0]


class SkewPolyRing:
    """k_q[x_1..x_n]; ``q[i][j]`` is the scalar in x_j x_i = q[i][j] x_i x_j."""

    def __init__(self, n: int, q, field=QQ, label: str | None = None):
        if n < 1:
            raise ValueError("need at least one generator")
        self.n = n
        self.field = field
        self.q = tuple(tuple(field(x) for x in row) for row in q)
        if len(self.q) != n or any(len(row) != n for row in self.q):
            raise ValueError("q must be an n x n matrix")
        for i in range(n):
            if self.q[i][i] != 1:
                raise ValueError(f"q[{i}][{i}] must be 1")
            for j in range(n):
                if self.q[i][j] * self.q[j][i] != 1:
                    raise ValueError(f"q[{i}][{j}] * q[{j}][{i}] must be 1")
        self.label = label or "custom"
        self.q_is_sign = all(x == 1 or x == -1 for row in self.q for x in row)

    @classmethod
    def minus_one(cls, n, field=QQ):
        q = [[1 if i == j else -1 for j in range(n)] for i in range(n)]
        return cls(n, q, field, label="minus_one")

    @classmethod
    def commutative(cls, n, field=QQ):
        return cls(n, [[1] * n for _ in range(n)], field, label="commutative")

    def with_field(self, field) -> "SkewPolyRing":
        """The same ring over another field (q must be coercible)."""
        return SkewPolyRing(self.n, [[field(x) for x in row] for row in self.q], field, self.label)

    def __eq__(self, other):
        return (isinstance(other, SkewPolyRing) and self.n == other.n
                and self.field == other.field and self.q == other.q)

    def __hash__(self):
        return hash((self.n, self.q))

    def __repr__(self):
        return f"SkewPolyRing(n={self.n}, q={self.label}, field={self.field!r})"

    # -- bases --------------------------------------------------------------

    def degree_basis(self, d: int) -> list[Monomial]:
        if d < 0:
            raise ValueError("degree must be nonnegative")
        return degree_basis_exponents(self.n, d)

    def dim(self, d: int) -> int:
        return comb(d + self.n - 1, self.n - 1) if d >= 0 else 0

    def basis_index(self, d: int) -> dict:
        return _basis_index(self.n, d)

    # -- arithmetic on monomials -------------------------------------------

    def monomial_product_coeff(self, a, b):
        """Scalar c with x^a x^b = c x^(a+b)."""
        c = self.field.one
        q = self.q
        n = self.n
        for i in range(1, n):
            ai = a[i]
            if not ai:
                continue
            for j in range(i):
                if b[j]:
                    qq = q[j][i]
                    if qq != 1:
                        c = c * qq ** (ai * b[j])
        return c

    def left_generator_coeff(self, i: int, b):
        """Scalar c with x_i x^b = c x^(b + e_i)."""
        c = self.field.one
        for j in range(i):
            if b[j] and self.q[j][i] != 1:
                c = c * self.q[j][i] ** b[j]
        return c

    def word_normal_form(self, word):
        """Sort a word of generator indices, returning (Monomial, scalar)."""
        exps = [0] * self.n
        c = self.field.one
        for t, a in enumerate(word):
            if not 0 <= a < self.n:
                raise IndexError(f"generator index {a} out of range for n={self.n}")
            # x_a moves left past every earlier letter b > a
            for b in word[:t]:
                if b > a:
                    c = c * self.q[a][b]
            exps[a] += 1
        return Monomial(exps), c

    # -- elements -------------------------------------------------------------

    def element(self, terms=None) -> "AlgebraElement":
        return AlgebraElement(self, terms or {})

    def one(self) -> "AlgebraElement":
        return AlgebraElement(self, {Monomial([0] * self.n): self.field.one})

    def gen(self, i: int) -> "AlgebraElement":
        e = [0] * self.n
        e[i] = 1
        return AlgebraElement(self, {Monomial(e): self.field.one})

    def gens(self):
        return [self.gen(i) for i in range(self.n)]

    def monomial(self, exps, coeff=1) -> "AlgebraElement":
        return AlgebraElement(self, {Monomial(exps): self.field(coeff)})

    def hilbert_series(self, D: int) -> TruncatedSeries:
        return TruncatedSeries([self.dim(d) for d in range(D + 1)])


@lru_cache(maxsize=256)
def _basis_index(n, d):
    return {m: k for k, m in enumerate(degree_basis_exponents(n, d))}


def word_normal_form(ring: SkewPolyRing, word):
    return ring.word_normal_form(word)


def degree_basis(ring: SkewPolyRing, d: int):
    return ring.degree_basis(d)


def hilbert_series_R(ring: SkewPolyRing, D: int) -> TruncatedSeries:
    return ring.hilbert_series(D)


class AlgebraElement:
    """Finite linear combination of PBW monomials."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: SkewPolyRing, terms):
        self.ring = ring
        f = ring.field
        clean = {}
        for m, c in terms.items():
            m = m if isinstance(m, Monomial) else Monomial(m)
            if len(m) != ring.n:
                raise ValueError("monomial has the wrong number of exponents")
            c = f(c)
            if c:
                clean[m] = c
        self.terms = dict(sorted(clean.items(), reverse=True))

    def _check(self, other):
        if not isinstance(other, AlgebraElement):
            return False
        if other.ring != self.ring:
            raise MixedFieldError("elements belong to different rings")
        return True

    def _scalar(self, c):
        return AlgebraElement(self.ring, {Monomial([0] * self.ring.n): c})

    def __add__(self, other):
        if not self._check(other):
            other = self._scalar(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out[m] + c if m in out else c
        return AlgebraElement(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return AlgebraElement(self.ring, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not self._check(other):
            c = self.ring.field(other)
            return AlgebraElement(self.ring, {m: c * x for m, x in self.terms.items()})
        ring = self.ring
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = m1 * m2
                c = c1 * c2 * ring.monomial_product_coeff(m1, m2)
                out[m] = out[m] + c if m in out else c
        return AlgebraElement(ring, out)

    def __rmul__(self, other):
        c = self.ring.field(other)
        return AlgebraElement(self.ring, {m: c * x for m, x in self.terms.items()})

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not defined")
        out = self.ring.one()
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, AlgebraElement):
            return self.ring == other.ring and self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        return hash(tuple(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def coefficient(self, m):
        return self.terms.get(Monomial(m), self.ring.field.zero)

    def degrees(self) -> set:
        return {m.degree for m in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    @property
    def degree(self) -> int:
        ds = self.degrees()
        if len(ds) != 1:
            raise ValueError("element is not homogeneous (or is zero)")
        return ds.pop()

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.terms.items():
            cs = str(c)
            if m.degree == 0:
                parts.append(cs)
            elif cs == "1":
                parts.append(str(m))
            elif cs == "-1":
                parts.append("-" + str(m))
            else:
                if " " in cs:
                    cs = f"({cs})"
                parts.append(f"{cs}*{m}")
        return " + ".join(parts).replace("+ -", "- ")


def element_multiply(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    return a * b


# ---------------------------------------------------------------------------
# monomial automorphisms (the group objects live in pertinency.group)
# ---------------------------------------------------------------------------


def automorphism_on_monomial(ring: SkewPolyRing, perm, scalars, a):
    """Image of x^a under x_i -> scalars[i] * x_{perm[i]}: returns (Monomial, scalar)."""
    n = ring.n
    c = ring.field.one
    for i in range(n):
        if a[i]:
            c = c * scalars[i] ** a[i]
    q = ring.q
    for i in range(n):
        if not a[i]:
            continue
        pi = perm[i]
        for j in range(i + 1, n):
            if a[j] and perm[j] < pi:
                qq = q[perm[j]][pi]
                if qq != 1:
                    c = c * qq ** (a[i] * a[j])
    out = [0] * n
    for i in range(n):
        out[perm[i]] = a[i]
    return Monomial(out), c


def apply_automorphism(g, a: AlgebraElement) -> AlgebraElement:
    """Apply a monomial automorphism (anything with ``perm`` and ``scalars``)."""
    ring = a.ring
    if hasattr(g, "compatible_with") and not g.compatible_with(ring):
        raise ValueError("automorphism does not preserve the relations of the ring")
    out = {}
    for m, c in a.terms.items():
        m2, s = automorphism_on_monomial(ring, g.perm, g.scalars, m)
        out[m2] = out[m2] + c * s if m2 in out else c * s
    return AlgebraElement(ring, out)


# ---------------------------------------------------------------------------
# abstract finite groups and gradings
# ---------------------------------------------------------------------------


class TableGroup:
    """Finite group given by its multiplication table; element 0 is the identity."""

    def __init__(self, table, labels=None):
        self.table = [list(row) for row in table]
        self.order = len(self.table)
        self.labels = list(labels) if labels is not None else list(range(self.order))
        if any(self.table[0][a] != a or self.table[a][0] != a for a in range(self.order)):
            raise ValueError("element 0 must be the identity")
        self._inv = [self.table[a].index(0) for a in range(self.order)]

    identity = 0

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inverse(self, a: int) -> int:
        return self._inv[a]

    def power(self, a: int, k: int) -> int:
        if k < 0:
            a, k = self.inverse(a), -k
        out = 0
        for _ in range(k):
            out = self.table[out][a]
        return out

    def is_abelian(self) -> bool:
        t = self.table
        return all(t[a][b] == t[b][a] for a in range(self.order) for b in range(a))

    def __len__(self):
        return self.order


def cyclic_product_group(orders) -> TableGroup:
    """Z_{m_1} x ... x Z_{m_k}; elements are labelled by exponent tuples."""
    orders = tuple(orders)
    labels = [()]
    for m in orders:
        labels = [lab + (a,) for lab in labels for a in range(m)]
    index = {lab: k for k, lab in enumerate(labels)}
    table = [[index[tuple((x + y) % m for x, y, m in zip(a, b, orders))] for b in labels]
             for a in labels]
    return TableGroup(table, labels)


class GradingAssignment:
    """Assigns an element of a finite abelian group to every generator x_i."""

    def __init__(self, group: TableGroup, degrees):
        if not group.is_abelian():
            raise ValueError("gradings are only supported for abelian groups")
        self.group = group
        self.degrees = [int(g) for g in degrees]
        if any(not 0 <= g < group.order for g in self.degrees):
            raise ValueError("grading degree outside the group")

    def degree_of(self, m) -> int:
        g = self.group.identity
        for i, a in enumerate(m):
            if a:
                g = self.group.mul(g, self.group.power(self.degrees[i], a))
        return g

    def homogeneous_components(self, a: AlgebraElement) -> dict:
        comps: dict[int, dict] = {}
        for m, c in a.terms.items():
            comps.setdefault(self.degree_of(m), {})[m] = c
        return {g: AlgebraElement(a.ring, t) for g, t in comps.items()}

    def is_homogeneous(self, a: AlgebraElement) -> bool:
        return len(self.homogeneous_components(a)) <= 1

    def degree_array(self, exps: np.ndarray) -> np.ndarray:
        """Group degrees of many monomials at once (rows of an exponent array)."""
        g = self.group
        out = np.zeros(exps.shape[0], dtype=np.int64)
        t = np.array(g.table, dtype=np.int64)
        for i, gi in enumerate(self.degrees):
            powers = np.array([g.power(gi, k) for k in range(g.order)], dtype=np.int64)
            # the order of gi divides |G|, so exponents can be reduced mod |G|
            out = t[out, powers[exps[:, i] % g.order]]
        return out
