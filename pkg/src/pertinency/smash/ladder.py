"""Degree slices of the two-sided ideal I = (e), spanned directly.

I_0 = B_0 e B_0 and I_d = B_1 I_{d-1} + I_{d-1} B_1.  Because I_{d-1} is a
B_0-bimodule, multiplying its basis by the generators x_i # 1 on both sides
already spans I_d.
"""

from __future__ import annotations

from ..linalg import RowSpace
from .products import SmashAlgebra, SmashElement


class IdealLadder:
    """Row spaces I_0..I_D inside the coordinate spaces of B_0..B_D."""

    engine = "primal"

    def __init__(self, B: SmashAlgebra, D: int):
        self.B = B
        self.D = D
        self.slices: list[RowSpace] = []
        self._build()

    def _build(self):
        B = self.B
        e = B.integral()
        I0 = RowSpace(B.dim(0), B.field)
        for a in range(B.K):
            for b in range(B.K):
                v = (B.b0(a) * e * B.b0(b)).to_vector()
                if v:
                    I0.insert(v)
        self.slices.append(I0)
        for d in range(1, self.D + 1):
            self.slices.append(self._next(self.slices[-1], d))

    def _next(self, prev: RowSpace, d: int) -> RowSpace:
        B = self.B
        n, K = B.ring.n, B.K
        basis_prev = B.ring.degree_basis(d - 1)
        index = B.ring.basis_index(d)
        cur = RowSpace(B.dim(d), B.field)
        for row in prev.basis:
            for i in range(n):
                left: dict = {}
                right: dict = {}
                for col, c in row.items():
                    m, k = basis_prev[col // K], col % K
                    m2, k2, s = B.left_generator(i, m, k)
                    t = index[m2] * K + k2
                    left[t] = left[t] + c * s if t in left else c * s
                    for m2, k2, s in B.right_generator(m, k, i):
                        t = index[m2] * K + k2
                        right[t] = right[t] + c * s if t in right else c * s
                cur.insert(left)
                cur.insert(right)
                if cur.is_full():
                    return cur
        return cur

    # -- queries ----------------------------------------------------------------

    @property
    def dims_B(self) -> list[int]:
        return [self.B.dim(d) for d in range(self.D + 1)]

    @property
    def dims_I(self) -> list[int]:
        return [s.dim for s in self.slices]

    @property
    def h(self) -> list[int]:
        return [b - i for b, i in zip(self.dims_B, self.dims_I)]

    def contains(self, f: SmashElement) -> bool:
        if not f:
            return True
        d = f.degree
        if d > self.D:
            raise ValueError(f"element of degree {d} is beyond the ladder (D = {self.D})")
        return self.slices[d].contains(f.to_vector())


def ideal_ladder(B: SmashAlgebra, D: int, engine: str = "primal"):
    """Ideal slices up to degree D with the chosen engine ("primal" or "annihilator")."""
    if engine == "primal":
        return IdealLadder(B, D)
    if engine == "annihilator":
        from .annihilator import AnnihilatorLadder
        return AnnihilatorLadder(B, D)
    raise ValueError(f"unknown ladder engine {engine!r}")


def quotient_hilbert(B: SmashAlgebra, D: int, ladder=None) -> list[int]:
    ladder = ladder or ideal_ladder(B, D, engine="annihilator")
    return ladder.h[: D + 1]


def ideal_membership(B: SmashAlgebra, f: SmashElement, ladder) -> bool:
    if f.parent is not B:
        raise ValueError("element belongs to a different algebra")
    return ladder.contains(f)
