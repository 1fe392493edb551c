"""The smash products R#kG and R#(kG)°.

Both algebras have the basis {m # b} with m a PBW monomial and b running over
a basis of the degree-zero part B_0 (group elements g, respectively the
orthogonal idempotents p_a).  B_0 basis elements are referred to by their
index k in the group; index 0 is the identity element (resp. p_identity).
Coordinates of a degree-d element use column ``midx * K + k`` where ``midx``
is the position of m in ``ring.degree_basis(d)`` and K = |G|.
"""

from __future__ import annotations

from ..algebra import AlgebraElement, GradingAssignment, Monomial, SkewPolyRing
from ..coeff import MixedFieldError
from ..group import FiniteGroup
from ..linalg import RowSpace


class SmashAlgebra:
    kind = "abstract"

    def __init__(self, ring: SkewPolyRing, group):
        self.ring = ring
        self.field = ring.field
        self.group = group
        self.K = group.order

    def dim(self, d: int) -> int:
        return self.K * self.ring.dim(d)

    def column(self, m, k: int) -> int:
        return self.ring.basis_index(sum(m))[Monomial(m)] * self.K + k

    def basis_element_at(self, d: int, col: int):
        m = self.ring.degree_basis(d)[col // self.K]
        return m, col % self.K

    def element(self, terms=None) -> "SmashElement":
        return SmashElement(self, terms or {})

    def basis_element(self, m, k: int, coeff=1) -> "SmashElement":
        return SmashElement(self, {(Monomial(m), k): coeff})

    def b0(self, k: int) -> "SmashElement":
        return self.basis_element([0] * self.ring.n, k)

    def one(self) -> "SmashElement":
        raise NotImplementedError

    def embed(self, r: AlgebraElement) -> "SmashElement":
        """r # 1."""
        raise NotImplementedError

    def monomial_product(self, m1, k1, m2, k2):
        """(m1 # k1)(m2 # k2) as a list of (monomial, k, scalar)."""
        raise NotImplementedError

    def left_generator(self, i: int, m, k):
        """(x_i # 1)(m # k) as (monomial, k, scalar)."""
        b = list(m)
        c = self.ring.left_generator_coeff(i, b)
        b[i] += 1
        return Monomial(b), k, c

    def right_generator(self, m, k, i: int):
        """(m # k)(x_i # 1) as a list of (monomial, k, scalar)."""
        raise NotImplementedError

    def integral(self) -> "SmashElement":
        raise NotImplementedError

    def scaled_integral(self) -> "SmashElement":
        """A nonzero multiple of e with integer coefficients."""
        raise NotImplementedError


class GroupSmashAlgebra(SmashAlgebra):
    """R # kG with (r # g)(r' # g') = r g(r') # g g'."""

    kind = "group"

    def __init__(self, ring: SkewPolyRing, group: FiniteGroup):
        if group.ring != ring:
            raise ValueError("the group acts on a different ring")
        super().__init__(ring, group)

    def one(self):
        return self.b0(0)

    def embed(self, r: AlgebraElement):
        if r.ring != self.ring:
            raise MixedFieldError("element of a different ring")
        return SmashElement(self, {(m, 0): c for m, c in r.terms.items()})

    def monomial_product(self, m1, k1, m2, k2):
        g = self.group[k1]
        m2g, c = g.on_monomial(m2)
        c = c * self.ring.monomial_product_coeff(m1, m2g)
        return [(m1 * m2g, self.group.mul(k1, k2), c)]

    def right_generator(self, m, k, i):
        g = self.group[k]
        j = g.perm[i]
        b = list(m)
        c = g.scalars[i] * self.ring.monomial_product_coeff(m, _unit(self.ring.n, j))
        b[j] += 1
        return [(Monomial(b), k, c)]

    def integral(self):
        f = self.field
        order = f(self.K)
        if not order:
            raise ZeroDivisionError(f"|G| = {self.K} is not invertible in {f!r}")
        c = f.one / order
        z = Monomial([0] * self.ring.n)
        return SmashElement(self, {(z, k): c for k in range(self.K)})

    def scaled_integral(self):
        z = Monomial([0] * self.ring.n)
        return SmashElement(self, {(z, k): 1 for k in range(self.K)})

    def __repr__(self):
        return f"GroupSmashAlgebra({self.ring!r}, |G|={self.K})"


class DualGroupSmashAlgebra(SmashAlgebra):
    """R # (kG)° for a G-graded R, G finite abelian.

    (r # p_a)(r' # p_b) = delta(c^-1 a, b) r r' # p_b for r' of G-degree c.
    """

    kind = "dual"

    def __init__(self, ring: SkewPolyRing, grading: GradingAssignment):
        if len(grading.degrees) != ring.n:
            raise ValueError("grading must assign a degree to every generator")
        super().__init__(ring, grading.group)
        self.grading = grading

    def one(self):
        z = Monomial([0] * self.ring.n)
        return SmashElement(self, {(z, k): 1 for k in range(self.K)})

    def embed(self, r: AlgebraElement):
        if r.ring != self.ring:
            raise MixedFieldError("element of a different ring")
        return SmashElement(self, {(m, k): c for m, c in r.terms.items() for k in range(self.K)})

    def monomial_product(self, m1, a, m2, b):
        G = self.group
        c_deg = self.grading.degree_of(m2)
        if G.mul(G.inverse(c_deg), a) != b:
            return []
        return [(m1 * m2, b, self.ring.monomial_product_coeff(m1, m2))]

    def right_generator(self, m, a, i):
        G = self.group
        b = G.mul(G.inverse(self.grading.degrees[i]), a)
        e = list(m)
        c = self.ring.monomial_product_coeff(m, _unit(self.ring.n, i))
        e[i] += 1
        return [(Monomial(e), b, c)]

    def integral(self):
        return self.b0(0)

    scaled_integral = integral

    def __repr__(self):
        return f"DualGroupSmashAlgebra({self.ring!r}, |G|={self.K})"


def _unit(n, j):
    e = [0] * n
    e[j] = 1
    return e


class SmashElement:
    """Sparse combination of basis elements m # b of a smash algebra."""

    __slots__ = ("parent", "terms")

    def __init__(self, parent: SmashAlgebra, terms):
        self.parent = parent
        f = parent.field
        clean = {}
        for (m, k), c in terms.items():
            c = f(c)
            if c:
                clean[(Monomial(m), int(k))] = c
        self.terms = dict(sorted(clean.items(), key=lambda t: (-sum(t[0][0]), tuple(-a for a in t[0][0]), t[0][1])))

    def _same(self, other):
        if not isinstance(other, SmashElement):
            return False
        if other.parent is not self.parent:
            raise MixedFieldError("smash elements from different algebras")
        return True

    def __add__(self, other):
        self._same(other) or _raise_type(other)
        out = dict(self.terms)
        for key, c in other.terms.items():
            out[key] = out[key] + c if key in out else c
        return SmashElement(self.parent, out)

    def __neg__(self):
        return SmashElement(self.parent, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not self._same(other):
            c = self.parent.field(other)
            return SmashElement(self.parent, {k: c * x for k, x in self.terms.items()})
        P = self.parent
        out = {}
        for (m1, k1), c1 in self.terms.items():
            for (m2, k2), c2 in other.terms.items():
                for m, k, c in P.monomial_product(m1, k1, m2, k2):
                    key = (m, k)
                    v = c1 * c2 * c
                    out[key] = out[key] + v if key in out else v
        return SmashElement(P, out)

    def __rmul__(self, other):
        c = self.parent.field(other)
        return SmashElement(self.parent, {k: c * x for k, x in self.terms.items()})

    def __pow__(self, k):
        out = self.parent.one()
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, SmashElement):
            return other.parent is self.parent and other.terms == self.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        return hash(tuple(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def degrees(self) -> set:
        return {m.degree for (m, _) in self.terms}

    @property
    def degree(self) -> int:
        ds = self.degrees()
        if len(ds) != 1:
            raise ValueError("element is not homogeneous (or is zero)")
        return ds.pop()

    def to_vector(self) -> dict:
        """Sparse coordinates (column -> scalar) in B_d for homogeneous elements."""
        if not self.terms:
            return {}
        d = self.degree
        index = self.parent.ring.basis_index(d)
        K = self.parent.K
        return {index[m] * K + k: c for (m, k), c in self.terms.items()}

    @classmethod
    def from_vector(cls, parent: SmashAlgebra, d: int, vec) -> "SmashElement":
        basis = parent.ring.degree_basis(d)
        K = parent.K
        items = vec.items() if isinstance(vec, dict) else enumerate(vec)
        return cls(parent, {(basis[col // K], col % K): c for col, c in items if c})

    def __repr__(self):
        if not self.terms:
            return "0"
        P = self.parent
        parts = []
        for (m, k), c in self.terms.items():
            b = f"g{k}" if P.kind == "group" else f"p{k}"
            parts.append(f"{c}*({m}#{b})")
        return " + ".join(parts)


def _raise_type(other):
    raise TypeError(f"cannot add a smash element and {type(other).__name__}")


def smash_multiply(a: SmashElement, b: SmashElement) -> SmashElement:
    return a * b


def integral_idempotent(B: SmashAlgebra) -> SmashElement:
    return B.integral()


def corner_dimension(B: SmashAlgebra, d: int) -> int:
    """dim e B_d e, computed by multiplying out e (m # k) e for every basis element."""
    e = B.integral()
    space = RowSpace(B.dim(d), B.field)
    for m in B.ring.degree_basis(d):
        for k in range(B.K):
            v = (e * B.basis_element(m, k) * e).to_vector()
            if v:
                space.insert(v)
    return space.dim
