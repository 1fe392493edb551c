"""Exact linear algebra.

Two layers live here:

* a field-generic layer (``Matrix``, ``rref_rank``, ``RowSpace``) working on
  any scalars from :mod:`pertinency.coeff`;
* a modular layer (``ModularEchelon``, ``matmul_mod``) working on int64 numpy
  arrays with entries in ``[0, p)`` for a prime ``p < 2**31``.  It is what the
  certificate engines use for large slices.
"""

from __future__ import annotations

import numba
import numpy as np

from .coeff import QQ


class Matrix:
    """Dense matrix of field elements, stored row-major as a list of lists."""

    def __init__(self, rows, field=QQ, ncols=None):
        self.field = field
        self.data = [[field(x) for x in row] for row in rows]
        self.nrows = len(self.data)
        if ncols is None:
            ncols = len(self.data[0]) if self.data else 0
        self.ncols = ncols
        for row in self.data:
            if len(row) != ncols:
                raise ValueError("ragged matrix rows")

    @classmethod
    def identity(cls, k, field=QQ):
        return cls([[1 if i == j else 0 for j in range(k)] for i in range(k)], field)

    @classmethod
    def zeros(cls, r, c, field=QQ):
        return cls([[0] * c for _ in range(r)], field, ncols=c)

    @property
    def entries(self):
        return [x for row in self.data for x in row]

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    def __eq__(self, other):
        return (isinstance(other, Matrix) and self.ncols == other.ncols
                and self.data == other.data)

    def __repr__(self):
        return f"Matrix({self.nrows}x{self.ncols}, {self.data!r})"


def rref_rank(m: Matrix) -> tuple[Matrix, int]:
    """Reduced row-echelon form and rank.

    Pivots are chosen column by column: the leftmost column with a nonzero
    entry at or below the current row, and in it the topmost such row.
    """
    field = m.field
    a = [list(row) for row in m.data]
    nrows, ncols = m.nrows, m.ncols
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        pr = next((i for i in range(r, nrows) if a[i][c]), None)
        if pr is None:
            continue
        a[r], a[pr] = a[pr], a[r]
        inv = field.one / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(nrows):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        r += 1
    return Matrix(a, field, ncols=ncols), r


class RowSpace:
    """Incrementally maintained subspace of ``field**ambient_dim``.

    The basis is kept in reduced row-echelon form; each basis row is stored
    sparsely as a dict column -> scalar with value one at its pivot.  Rows
    are kept sorted by pivot, so ``pivots`` is strictly increasing.
    """

    def __init__(self, ambient_dim: int, field=QQ):
        self.ambient_dim = ambient_dim
        self.field = field
        self._rows: dict[int, dict] = {}  # pivot -> row

    def __len__(self):
        return len(self._rows)

    @property
    def dim(self) -> int:
        return len(self._rows)

    @property
    def pivots(self) -> list[int]:
        return sorted(self._rows)

    @property
    def basis(self) -> list[dict]:
        return [self._rows[p] for p in self.pivots]

    def copy(self) -> "RowSpace":
        other = RowSpace(self.ambient_dim, self.field)
        other._rows = {p: dict(r) for p, r in self._rows.items()}
        return other

    def _as_sparse(self, v) -> dict:
        if isinstance(v, dict):
            items = v.items()
            for k, _ in items:
                if not 0 <= k < self.ambient_dim:
                    raise ValueError(f"column {k} outside ambient dimension {self.ambient_dim}")
            return {k: self.field(x) for k, x in items if x}
        if len(v) != self.ambient_dim:
            raise ValueError(f"vector of length {len(v)} in ambient dimension {self.ambient_dim}")
        return {k: self.field(x) for k, x in enumerate(v) if x}

    def reduce(self, v) -> dict:
        """Remainder of ``v`` after elimination against the basis (sparse)."""
        w = self._as_sparse(v)
        rows = self._rows
        # basis is fully reduced, so one pass over the pivots present in w suffices
        for p in [c for c in w if c in rows]:
            c = w.get(p)
            if not c:
                continue
            for k, x in rows[p].items():
                y = w.get(k)
                y = -c * x if y is None else y - c * x
                if y:
                    w[k] = y
                else:
                    w.pop(k, None)
        return w

    def insert(self, v) -> bool:
        """Add ``v`` to the space; return True iff the dimension grew."""
        w = self.reduce(v)
        if not w:
            return False
        p = min(w)
        inv = self.field.one / w[p]
        w = {k: x * inv for k, x in w.items()}
        for row in self._rows.values():
            c = row.get(p)
            if c:
                for k, x in w.items():
                    y = row.get(k)
                    y = -c * x if y is None else y - c * x
                    if y:
                        row[k] = y
                    else:
                        del row[k]
        self._rows[p] = w
        return True

    def contains(self, v) -> bool:
        return not self.reduce(v)

    def is_full(self) -> bool:
        return len(self._rows) == self.ambient_dim

    def to_matrix(self) -> Matrix:
        zero = self.field.zero
        rows = []
        for p in self.pivots:
            r = self._rows[p]
            rows.append([r.get(k, zero) for k in range(self.ambient_dim)])
        return Matrix(rows, self.field, ncols=self.ambient_dim)

    def nullspace(self) -> list[list]:
        """Basis of {c : B c = 0} where B is the matrix of basis rows."""
        zero, one = self.field.zero, self.field.one
        pivs = set(self._rows)
        out = []
        for f in range(self.ambient_dim):
            if f in pivs:
                continue
            vec = [zero] * self.ambient_dim
            vec[f] = one
            for p, row in self._rows.items():
                x = row.get(f)
                if x:
                    vec[p] = -x
            out.append(vec)
        return out


def rowspace_insert(s: RowSpace, v) -> tuple[RowSpace, bool]:
    grew = s.insert(v)
    return s, grew


def rowspace_contains(s: RowSpace, v) -> bool:
    return s.contains(v)


def rank(rows, field=QQ, ncols=None) -> int:
    rows = list(rows)
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    s = RowSpace(ncols, field)
    for r in rows:
        s.insert(r)
    return s.dim


# ---------------------------------------------------------------------------
# modular layer
# ---------------------------------------------------------------------------

_LIMB = 1 << 16


def matmul_mod(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    """Exact ``a @ b mod p`` for int64 arrays with entries in [0, p), p < 2**31.

    Both factors are split into 16-bit limbs so that each float64 BLAS
    product stays below 2**53 as long as the inner dimension is < 2**21.
    """
    if a.shape[1] == 0:
        return np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
    if a.shape[1] >= (1 << 21):
        raise ValueError("inner dimension too large for exact limb products")
    a0 = (a & 0xFFFF).astype(np.float64)
    a1 = (a >> 16).astype(np.float64)
    b0 = (b & 0xFFFF).astype(np.float64)
    b1 = (b >> 16).astype(np.float64)
    lo = (a0 @ b0).astype(np.int64) % p
    mid = ((a0 @ b1).astype(np.int64) + (a1 @ b0).astype(np.int64)) % p
    hi = (a1 @ b1).astype(np.int64) % p
    s16 = _LIMB % p
    s32 = (_LIMB * _LIMB) % p
    return (lo + mid * s16 % p + hi * s32 % p) % p


@numba.njit(cache=True)
def _insert_rows(basis, piv, rank, rows, p):
    """Insert rows into a fully reduced echelon basis (in place); return new rank."""
    ncols = basis.shape[1]
    for r in range(rows.shape[0]):
        if rank == ncols:
            return rank
        v = rows[r].copy()
        for j in range(rank):
            c = v[piv[j]]
            if c != 0:
                for k in range(ncols):
                    b = basis[j, k]
                    if b != 0:
                        v[k] = (v[k] - c * b) % p
        lead = -1
        for k in range(ncols):
            if v[k] != 0:
                lead = k
                break
        if lead < 0:
            continue
        a = v[lead]
        inv = 1
        e = p - 2
        while e > 0:
            if e & 1:
                inv = inv * a % p
            a = a * a % p
            e >>= 1
        for k in range(ncols):
            v[k] = v[k] * inv % p
        for j in range(rank):
            c = basis[j, lead]
            if c != 0:
                for k in range(ncols):
                    if v[k] != 0:
                        basis[j, k] = (basis[j, k] - c * v[k]) % p
        basis[rank] = v
        piv[rank] = lead
        rank += 1
    return rank


class ModularEchelon:
    """Row space over GF(p) of a stream of row blocks with few columns.

    Each incoming block is first reduced against the current basis with one
    matrix product; only the surviving rows go through scalar elimination.
    """

    def __init__(self, ncols: int, p: int):
        self.ncols = ncols
        self.p = p
        self.basis = np.zeros((ncols, ncols), dtype=np.int64)
        self.piv = np.zeros(ncols, dtype=np.int64)
        self.rank = 0

    def is_full(self) -> bool:
        return self.rank == self.ncols

    def add_rows(self, rows: np.ndarray) -> None:
        if self.is_full() or rows.shape[0] == 0:
            return
        rows = np.ascontiguousarray(rows % self.p, dtype=np.int64)
        if self.rank:
            piv = self.piv[: self.rank]
            rows = (rows - matmul_mod(rows[:, piv], self.basis[: self.rank], self.p)) % self.p
            rows = rows[rows.any(axis=1)]
            if rows.shape[0] == 0:
                return
        self.rank = _insert_rows(self.basis, self.piv, self.rank, np.ascontiguousarray(rows), self.p)

    def nullspace(self) -> np.ndarray:
        """Basis (as rows) of {c : basis @ c = 0 mod p}."""
        p, r, n = self.p, self.rank, self.ncols
        piv = self.piv[:r]
        free = np.setdiff1d(np.arange(n), piv)
        out = np.zeros((len(free), n), dtype=np.int64)
        out[np.arange(len(free)), free] = 1
        if r:
            out[:, piv] = (-self.basis[:r][:, free].T) % p
        return out


def rank_mod_p(rows, p: int) -> int:
    a = np.asarray(rows, dtype=np.int64) % p
    if a.size == 0:
        return 0
    ech = ModularEchelon(a.shape[1], p)
    ech.add_rows(a)
    return ech.rank
