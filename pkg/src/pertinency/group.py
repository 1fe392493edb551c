"""Finite groups of monomial automorphisms and their trace invariants.

A monomial automorphism sends x_i to c_i x_{perm[i]}.  It maps every PBW
monomial to a scalar multiple of a monomial, so its trace on R_d is a signed
count of the monomials it fixes.
"""

from __future__ import annotations

from collections import deque

from .algebra import (
    SkewPolyRing,
    TableGroup,
    automorphism_on_monomial,
)
from .series import (
    PadeError,
    RationalFunction,
    TruncatedSeries,
    leading_term_at_infinity,
    pade_reconstruct,
    pole_order_at_one,
)
from .linalg import RowSpace


class GroupTooLarge(ValueError):
    """Closure exceeded the element cap (infinite or very large group)."""


class HdetAnomaly(ValueError):
    """The trace at infinity does not have the expected t^(-n) leading term."""


class MonomialAutomorphism:
    """x_i -> scalars[i] * x_{perm[i]} on a fixed ring (0-based indices)."""

    def __init__(self, ring: SkewPolyRing, perm, scalars=None):
        self.ring = ring
        n = ring.n
        self.perm = tuple(int(p) for p in perm)
        if sorted(self.perm) != list(range(n)):
            raise ValueError(f"{perm!r} is not a permutation of 0..{n - 1}")
        f = ring.field
        self.scalars = tuple(f(c) for c in (scalars if scalars is not None else [1] * n))
        if len(self.scalars) != n:
            raise ValueError("need one scalar per generator")
        if any(not c for c in self.scalars):
            raise ValueError("scalars must be nonzero")
        self._trace_cache: dict = {}

    @classmethod
    def identity(cls, ring):
        return cls(ring, range(ring.n))

    def key(self):
        return (self.perm, self.scalars)

    def __eq__(self, other):
        return isinstance(other, MonomialAutomorphism) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __matmul__(self, other: "MonomialAutomorphism") -> "MonomialAutomorphism":
        """Composition self o other (apply ``other`` first)."""
        perm = [self.perm[other.perm[i]] for i in range(self.ring.n)]
        scalars = [other.scalars[i] * self.scalars[other.perm[i]] for i in range(self.ring.n)]
        return MonomialAutomorphism(self.ring, perm, scalars)

    __mul__ = __matmul__

    def inverse(self) -> "MonomialAutomorphism":
        n = self.ring.n
        perm = [0] * n
        scalars = [None] * n
        for i in range(n):
            perm[self.perm[i]] = i
            scalars[self.perm[i]] = self.ring.field.one / self.scalars[i]
        return MonomialAutomorphism(self.ring, perm, scalars)

    def is_identity(self) -> bool:
        return self.perm == tuple(range(self.ring.n)) and all(c == 1 for c in self.scalars)

    def is_pure_permutation(self) -> bool:
        return all(c == 1 for c in self.scalars)

    def compatible_with(self, ring: SkewPolyRing) -> bool:
        q, p = ring.q, self.perm
        return all(q[p[i]][p[j]] == q[i][j] for i in range(ring.n) for j in range(ring.n))

    def on_monomial(self, m):
        return automorphism_on_monomial(self.ring, self.perm, self.scalars, m)

    def cycles(self) -> list[list[int]]:
        seen, out = set(), []
        for i in range(self.ring.n):
            if i in seen:
                continue
            cyc, j = [], i
            while j not in seen:
                seen.add(j)
                cyc.append(j)
                j = self.perm[j]
            out.append(cyc)
        return out

    def __repr__(self):
        sc = "" if self.is_pure_permutation() else f", scalars={[str(c) for c in self.scalars]}"
        return f"MonomialAutomorphism(perm={list(self.perm)}{sc})"


def cyclic_permutation(ring: SkewPolyRing, power: int = 1) -> MonomialAutomorphism:
    """sigma^power where sigma(x_i) = x_{i+1} (indices mod n)."""
    n = ring.n
    return MonomialAutomorphism(ring, [(i + power) % n for i in range(n)])


def check_automorphism(ring: SkewPolyRing, g: MonomialAutomorphism) -> bool:
    return g.compatible_with(ring)


class FiniteGroup(TableGroup):
    """Closed set of automorphisms; element 0 is the identity."""

    def __init__(self, elements):
        self.elements = list(elements)
        if not self.elements[0].is_identity():
            raise ValueError("element 0 must be the identity")
        index = {g: k for k, g in enumerate(self.elements)}
        table = [[index[a @ b] for b in self.elements] for a in self.elements]
        super().__init__(table)
        self.ring = self.elements[0].ring
        self.index = index

    def __getitem__(self, k):
        return self.elements[k]

    def __iter__(self):
        return iter(self.elements)

    def nontrivial(self):
        return self.elements[1:]

    def __repr__(self):
        return f"FiniteGroup(order={self.order})"


def group_closure(generators, cap: int = 10 ** 5, ring: SkewPolyRing | None = None) -> FiniteGroup:
    """All products of the generators, breadth first from the identity."""
    generators = list(generators)
    if ring is None:
        if not generators:
            raise ValueError("need a ring or at least one generator")
        ring = generators[0].ring
    for g in generators:
        if not g.compatible_with(ring):
            raise ValueError(f"{g!r} does not preserve the relations of the ring")
    ident = MonomialAutomorphism.identity(ring)
    elements = [ident]
    seen = {ident}
    queue = deque([ident])
    while queue:
        a = queue.popleft()
        for g in generators:
            b = a @ g
            if b not in seen:
                if len(elements) >= cap:
                    raise GroupTooLarge(f"group closure exceeds {cap} elements")
                seen.add(b)
                elements.append(b)
                queue.append(b)
    return FiniteGroup(elements)


def cyclic_group(ring: SkewPolyRing) -> FiniteGroup:
    """The group W generated by the cyclic shift of the generators."""
    return group_closure([cyclic_permutation(ring)], ring=ring)


# ---------------------------------------------------------------------------
# traces
# ---------------------------------------------------------------------------


def _cycle_exponents(lengths, d):
    """Exponent choices a_u >= 0 with sum lengths[u] * a_u = d."""
    if not lengths:
        if d == 0:
            yield ()
        return
    first, rest = lengths[0], lengths[1:]
    for a in range(d // first, -1, -1):
        for tail in _cycle_exponents(rest, d - a * first):
            yield (a,) + tail


def fixed_monomials(g: MonomialAutomorphism, d: int):
    """Monomials of degree d that g maps to a multiple of themselves."""
    cycles = g.cycles()
    n = g.ring.n
    for choice in _cycle_exponents([len(c) for c in cycles], d):
        exps = [0] * n
        for cyc, a in zip(cycles, choice):
            for i in cyc:
                exps[i] = a
        yield tuple(exps)


def trace_on_degree(g: MonomialAutomorphism, d: int):
    """Trace of g on R_d as a signed count of fixed monomials."""
    f = g.ring.field
    tr = f.zero
    for m in fixed_monomials(g, d):
        tr = tr + g.on_monomial(m)[1]
    return tr


def trace_on_degree_direct(g: MonomialAutomorphism, d: int):
    """Same trace, scanning the full monomial basis (slow reference)."""
    f = g.ring.field
    tr = f.zero
    for m in g.ring.degree_basis(d):
        m2, c = g.on_monomial(m)
        if m2 == m:
            tr = tr + c
    return tr


def _diagonal_trace_series(g: MonomialAutomorphism, D: int) -> list:
    """prod_i 1/(1 - c_i t) up to t^D; valid when g fixes every generator."""
    f = g.ring.field
    coeffs = [f.one] + [f.zero] * D
    for c in g.scalars:
        # multiply by 1/(1 - c t): running sum a_k + c * b_(k-1)
        for k in range(1, D + 1):
            coeffs[k] = coeffs[k] + c * coeffs[k - 1]
    return coeffs


def trace_series(g: MonomialAutomorphism, D: int) -> TruncatedSeries:
    f = g.ring.field
    if g.perm == tuple(range(g.ring.n)):
        return TruncatedSeries(_diagonal_trace_series(g, D), f)
    return TruncatedSeries([trace_on_degree(g, d) for d in range(D + 1)], f)


def default_trace_degree(n: int) -> int:
    return 2 * n + 8


def rational_trace(g: MonomialAutomorphism, D: int | None = None) -> RationalFunction:
    """Closed form of Tr(g, t) by stability-checked Padé reconstruction."""
    n = g.ring.n
    D = default_trace_degree(n) if D is None else D
    key = D
    if key not in g._trace_cache:
        g._trace_cache[key] = pade_reconstruct(trace_series(g, D), n + 2, n + 2)
    return g._trace_cache[key]


def pole_order(g: MonomialAutomorphism, D: int | None = None) -> int:
    return pole_order_at_one(rational_trace(g, D))


def reflection_number(g: MonomialAutomorphism, D: int | None = None) -> int:
    """r(g) = n - (order of the pole of Tr(g, t) at t = 1)."""
    return g.ring.n - pole_order(g, D)


def reflection_number_group(G: FiniteGroup, D: int | None = None):
    """Minimum of r(g) over g != 1; None for the trivial group."""
    values = [reflection_number(g, D) for g in G.nontrivial()]
    return min(values) if values else None


def odd_cycle_oracle(g: MonomialAutomorphism) -> int:
    """Number of odd-length cycles of a pure permutation.

    On the (-1)-skew polynomial ring this is the pole order of Tr(g, t) at 1.
    """
    if not g.is_pure_permutation():
        raise ValueError("odd_cycle_oracle needs a pure permutation (all scalars 1)")
    return sum(1 for c in g.cycles() if len(c) % 2)


def hdet(g: MonomialAutomorphism, D: int | None = None):
    """Homological determinant (-1)^n / c where Tr(g, t) ~ c t^(-n) at infinity."""
    n = g.ring.n
    m, c = leading_term_at_infinity(rational_trace(g, D))
    if m != -n:
        raise HdetAnomaly(f"trace behaves like t^{m} at infinity, expected t^{-n}")
    return g.ring.field((-1) ** n) / c


def reflection_report(G: FiniteGroup, D: int | None = None) -> dict:
    """Reflection numbers per element with quasi-reflections and bireflections."""
    r = {k: reflection_number(g, D) for k, g in enumerate(G.elements) if k}
    return {
        "reflection_numbers": r,
        "group_reflection_number": min(r.values()) if r else None,
        "quasi_reflections": [k for k, v in r.items() if v == 1],
        "quasi_bireflections": [k for k, v in r.items() if v == 2],
    }


# ---------------------------------------------------------------------------
# invariants
# ---------------------------------------------------------------------------


def _group_order_inverse(G: FiniteGroup):
    f = G.ring.field
    order = f(G.order)
    if not order:
        raise ZeroDivisionError(f"|G| = {G.order} is not invertible in {f!r}")
    return f.one / order


def molien_series(G: FiniteGroup, D: int) -> TruncatedSeries:
    """(1/|G|) sum_g Tr(g, t), truncated at degree D."""
    inv = _group_order_inverse(G)
    total = None
    for g in G.elements:
        s = trace_series(g, D)
        total = s if total is None else total + s
    return total.scale(inv)


def invariant_dimension_direct(G: FiniteGroup, d: int) -> int:
    """Rank of the Reynolds operator (1/|G|) sum_g g on R_d."""
    _group_order_inverse(G)
    ring = G.ring
    index = ring.basis_index(d)
    space = RowSpace(len(index), ring.field)
    for m in ring.degree_basis(d):
        row: dict = {}
        for g in G.elements:
            m2, c = g.on_monomial(m)
            k = index[m2]
            row[k] = row[k] + c if k in row else c
        space.insert(row)
    return space.dim


__all__ = [
    "FiniteGroup", "GroupTooLarge", "HdetAnomaly", "MonomialAutomorphism", "PadeError",
    "check_automorphism", "cyclic_group", "cyclic_permutation", "fixed_monomials",
    "group_closure", "hdet", "invariant_dimension_direct", "molien_series",
    "odd_cycle_oracle", "pole_order", "rational_trace", "reflection_number",
    "reflection_number_group", "reflection_report", "trace_on_degree",
    "trace_on_degree_direct", "trace_series",
]
