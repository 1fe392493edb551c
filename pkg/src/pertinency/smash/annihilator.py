"""Ideal slices via their annihilators.

Instead of spanning I_d (dimension close to dim B_d) this engine tracks a
basis Psi_d of the functionals on B_d vanishing on I_d; its size is the
quotient dimension h(d), which stays small.  It rests on

    I_d = B_1 I_{d-1} + e B_d          (d >= 1),

which holds because b e = e for b in the group part (resp. p_a e = delta e)
and B is generated by B_0 and B_1.  A functional phi on B_d kills I_d iff

* for every generator i, f_i = phi((x_i # 1) . ) lies in span Psi_{d-1}, and
* phi(e (m # 1)) = 0 for every monomial m of degree d.

Write f_i = sum_l c[i, l] psi_l.  Since (x_i # 1)(x^b # k) = s_i(b) x^(b+e_i) # k,
phi is determined by the coefficients c through the smallest index i0 in the
support of each monomial (where s_i0 = 1); the other generators give the
consistency equations

    f_i'(g - e_i', k) = s_i'(g - e_i') f_i0(g - e_i0, k).

The unknown vector c has n * dim Psi_{d-1} entries, and the new Psi_d is read
off the null space.
"""

from __future__ import annotations

import numpy as np

from ..algebra import ExponentIndex, exponent_array
from ..coeff import ModularReduction, PrimeField
from ..linalg import ModularEchelon, RowSpace, matmul_mod
from .products import SmashAlgebra, SmashElement

_CHUNK = 8192


class _DegreeData:
    """Index bookkeeping for the consistency equations in degree d >= 1."""

    def __init__(self, n: int, d: int):
        E = exponent_array(n, d)
        self.d = d
        self.E = E
        self.N = E.shape[0]
        prev = ExponentIndex(n, d - 1)
        self.i0 = np.argmax(E > 0, axis=1)
        rows = np.arange(self.N)
        shifted = E.copy()
        shifted[rows, self.i0] -= 1
        self.src = prev(shifted)
        a_parts, b_parts, ip_parts, i0_parts, beta_parts = [], [], [], [], []
        for ip in range(n):
            sel = np.nonzero((E[:, ip] > 0) & (self.i0 < ip))[0]
            if sel.size == 0:
                continue
            beta = E[sel].copy()
            beta[:, ip] -= 1
            a_parts.append(prev(beta))
            b_parts.append(self.src[sel])
            ip_parts.append(np.full(sel.size, ip, dtype=np.int64))
            i0_parts.append(self.i0[sel])
            beta_parts.append(beta)
        cat = (lambda parts, width=None: np.concatenate(parts) if parts
               else np.zeros((0,) if width is None else (0, width), dtype=np.int64))
        self.pa = cat(a_parts)
        self.pb = cat(b_parts)
        self.pip = cat(ip_parts)
        self.pi0 = cat(i0_parts)
        self.pbeta = cat(beta_parts, n)


class _LadderBase:
    engine = "annihilator"

    def __init__(self, B: SmashAlgebra, D: int):
        self.B = B
        self.D = D
        self.dims_B = [B.dim(d) for d in range(D + 1)]
        self.h: list[int] = []

    @property
    def dims_I(self) -> list[int]:
        return [b - h for b, h in zip(self.dims_B, self.h)]

    def zero_degree(self):
        return next((d for d, v in enumerate(self.h) if v == 0), None)


# ---------------------------------------------------------------------------
# exact engine (any field)
# ---------------------------------------------------------------------------


class AnnihilatorLadder(_LadderBase):
    """Exact annihilator ladder over the algebra's own coefficient field.

    Once a slice vanishes every later slice vanishes too, and no further
    equations are assembled.
    """

    def __init__(self, B: SmashAlgebra, D: int):
        super().__init__(B, D)
        self.psi: list[list[list]] = []
        self._run()

    def _initial(self):
        B, f = self.B, self.B.field
        K = B.K
        rows = []
        if B.kind == "group":
            for k in range(1, K):
                r = [f.zero] * K
                r[0], r[k] = f.one, -f.one
                rows.append(r)
        else:
            for k in range(1, K):
                r = [f.zero] * K
                r[k] = f.one
                rows.append(r)
        return rows

    def _run(self):
        psi = self._initial()
        self.psi.append(psi)
        self.h.append(len(psi))
        for d in range(1, self.D + 1):
            if psi:
                psi = self._step(psi, d)
            self.psi.append(psi)
            self.h.append(len(psi))

    def _step(self, psi, d):
        B = self.B
        f = B.field
        ring = B.ring
        n, K = ring.n, B.K
        u = len(psi)
        nu = n * u
        dd = _DegreeData(n, d)
        space = RowSpace(nu, f)
        zero = f.zero
        pa, pb, pip, pi0 = dd.pa.tolist(), dd.pb.tolist(), dd.pip.tolist(), dd.pi0.tolist()
        svals = [ring.left_generator_coeff(ip, beta) for ip, beta in zip(pip, dd.pbeta.tolist())]
        for k in range(K):
            for a, b, ip, i0, s in zip(pa, pb, pip, pi0, svals):
                row = {}
                ca, cb = a * K + k, b * K + k
                for l in range(u):
                    x = psi[l][ca]
                    if x:
                        row[ip * u + l] = x
                    y = psi[l][cb]
                    if y:
                        row[i0 * u + l] = -s * y
                if row:
                    space.insert(row)
                    if space.is_full():
                        return []
        # phi(e (m # 1)) = 0
        i0s, srcs = dd.i0.tolist(), dd.src.tolist()
        basis = ring.degree_basis(d)
        index = ring.basis_index(d)
        for j, m in enumerate(basis):
            row = {}
            if B.kind == "group":
                for h, g in enumerate(B.group.elements):
                    m2, c = g.on_monomial(m)
                    t = index[m2]
                    base, col = i0s[t] * u, srcs[t] * K + h
                    for l in range(u):
                        x = psi[l][col]
                        if x:
                            key = base + l
                            row[key] = row.get(key, zero) + c * x
            else:
                G = B.group
                kk = G.inverse(B.grading.degree_of(m))
                base, col = i0s[j] * u, srcs[j] * K + kk
                for l in range(u):
                    x = psi[l][col]
                    if x:
                        row[base + l] = x
            row = {key: v for key, v in row.items() if v}
            if row:
                space.insert(row)
                if space.is_full():
                    return []
        new = []
        for c in space.nullspace():
            out = [zero] * (dd.N * K)
            for j in range(dd.N):
                base, src = i0s[j] * u, srcs[j] * K
                coeffs = c[base: base + u]
                for k in range(K):
                    acc = zero
                    for l in range(u):
                        if coeffs[l]:
                            x = psi[l][src + k]
                            if x:
                                acc = acc + coeffs[l] * x
                    out[j * K + k] = acc
            new.append(out)
        return new

    def contains(self, f: SmashElement) -> bool:
        """f in I  iff  every annihilating functional vanishes on f."""
        if not f:
            return True
        d = f.degree
        if d > self.D:
            raise ValueError(f"element of degree {d} is beyond the ladder (D = {self.D})")
        vec = f.to_vector()
        zero = self.B.field.zero
        for row in self.psi[d]:
            acc = zero
            for col, c in vec.items():
                acc = acc + row[col] * c
            if acc:
                return False
        return True


# ---------------------------------------------------------------------------
# modular engine (GF(p), numpy)
# ---------------------------------------------------------------------------


def _vpow(base, exps, p):
    """Elementwise base**exps mod p for an int64 exponent array."""
    base = np.broadcast_to(np.asarray(base, dtype=np.int64) % p, exps.shape).copy()
    out = np.ones(exps.shape, dtype=np.int64)
    e = exps.copy()
    while e.any():
        odd = (e & 1).astype(bool)
        out[odd] = out[odd] * base[odd] % p
        base = base * base % p
        e >>= 1
    return out


class ModularAnnihilatorLadder(_LadderBase):
    """The annihilator ladder for the integral form of B reduced mod p.

    Dimensions satisfy h_p(d) >= h(d) for the ladder over the original field,
    so a zero value here certifies a zero value there.
    """

    def __init__(self, B: SmashAlgebra, D: int, p: int):
        super().__init__(B, D)
        self.p = p
        if isinstance(B.field, PrimeField) and B.field.p != p:
            raise ValueError("cannot reduce a prime field modulo a different prime")
        red = ModularReduction(B.field, p)
        ring = B.ring
        self.qmod = np.array([[red(x) for x in row] for row in ring.q], dtype=np.int64)
        if B.kind == "group":
            self.perms = [np.array(g.perm, dtype=np.int64) for g in B.group.elements]
            self.scal = [np.array([red(c) for c in g.scalars], dtype=np.int64) for g in B.group.elements]
        self._run()

    def _left_coeffs(self, ip, beta):
        p = self.p
        s = np.ones(beta.shape[0], dtype=np.int64)
        for j in range(ip):
            qv = int(self.qmod[j, ip])
            if qv != 1:
                s = s * _vpow(qv, beta[:, j], p) % p
        return s

    def _action(self, h, E):
        """Targets and coefficients of group element h on the rows of E (mod p)."""
        p = self.p
        perm, sc = self.perms[h], self.scal[h]
        n = E.shape[1]
        inv = np.argsort(perm)
        tgt = E[:, inv]
        coef = np.ones(E.shape[0], dtype=np.int64)
        for i in range(n):
            if sc[i] != 1:
                coef = coef * _vpow(int(sc[i]), E[:, i], p) % p
        for i in range(n):
            for j in range(i + 1, n):
                if perm[i] > perm[j]:
                    qv = int(self.qmod[perm[j], perm[i]])
                    if qv != 1:
                        coef = coef * _vpow(qv, E[:, i] * E[:, j], p) % p
        return tgt, coef

    def _run(self):
        B, p = self.B, self.p
        K = B.K
        if B.kind == "group":
            psi = np.zeros((K - 1, K), dtype=np.int64)
            psi[:, 0] = 1
            psi[np.arange(K - 1), np.arange(1, K)] = p - 1
        else:
            psi = np.zeros((K - 1, K), dtype=np.int64)
            psi[np.arange(K - 1), np.arange(1, K)] = 1
        self.h.append(psi.shape[0])
        for d in range(1, self.D + 1):
            if psi.shape[0]:
                psi = self._step(psi, d)
            self.h.append(psi.shape[0])
        self.last_psi = psi


    # Equations are checked in two ways.  A first batch is eliminated
    # directly; afterwards each equation is tested against the current null
    # space N through W_i = N_i Psi (N_i the block of N belonging to generator
    # i), which costs O(dim N) per equation.  Only equations that fail the
    # test are materialized and eliminated.  An equation orthogonal to N lies
    # in the row space already, so after one pass every equation is accounted
    # for.

    def _consistency_rows(self, psi, dd, s_all, k, idx):
        p, K = self.p, self.B.K
        u = psi.shape[0]
        nu = self.B.ring.n * u
        ar = np.arange(u)
        rows = np.zeros((idx.size, nu), dtype=np.int64)
        rr = np.arange(idx.size)[:, None]
        rows[rr, dd.pip[idx, None] * u + ar] = psi[:, dd.pa[idx] * K + k].T
        rows[rr, dd.pi0[idx, None] * u + ar] = (-(s_all[idx, None] * psi[:, dd.pb[idx] * K + k].T)) % p
        return rows

    def _consistency_residual(self, W, dd, s_all, k, idx):
        p, K = self.p, self.B.K
        ra = W[dd.pip[idx], :, dd.pa[idx] * K + k].astype(np.int64)
        rb = W[dd.pi0[idx], :, dd.pb[idx] * K + k].astype(np.int64)
        return (ra - s_all[idx, None] * rb) % p

    def _ideal_terms(self, dd):
        """For each monomial: list of (target row, B_0 index, coefficient) arrays."""
        B = self.B
        K = B.K
        if B.kind == "group":
            cur = ExponentIndex(B.ring.n, dd.d)
            out = []
            for h in range(K):
                tgt, coef = self._action(h, dd.E)
                out.append((cur(tgt), np.full(dd.N, h, dtype=np.int64), coef))
            return out
        G = B.group
        inv = np.array([G.inverse(g) for g in range(K)], dtype=np.int64)
        kk = inv[B.grading.degree_array(dd.E)]
        return [(np.arange(dd.N), kk, np.ones(dd.N, dtype=np.int64))]

    def _ideal_rows(self, psi, dd, terms, sel):
        p, K = self.p, self.B.K
        u = psi.shape[0]
        ar = np.arange(u)
        rows = np.zeros((sel.size, self.B.ring.n * u), dtype=np.int64)
        rr = np.arange(sel.size)[:, None]
        for t_all, k_all, c_all in terms:
            t, k, c = t_all[sel], k_all[sel], c_all[sel]
            cols = dd.i0[t][:, None] * u + ar
            vals = c[:, None] * psi[:, dd.src[t] * K + k].T % p
            rows[rr, cols] = (rows[rr, cols] + vals) % p
        return rows

    def _ideal_residual(self, W, dd, terms, sel):
        p, K = self.p, self.B.K
        acc = np.zeros((sel.size, W.shape[1]), dtype=np.int64)
        for t_all, k_all, c_all in terms:
            t, k, c = t_all[sel], k_all[sel], c_all[sel]
            acc = (acc + c[:, None] * W[dd.i0[t], :, dd.src[t] * K + k].astype(np.int64)) % p
        return acc

    def _step(self, psi, d):
        B, p = self.B, self.p
        n, K = B.ring.n, B.K
        u = psi.shape[0]
        nu = n * u
        dd = _DegreeData(n, d)
        ech = ModularEchelon(nu, p)
        s_all = np.zeros(dd.pa.shape[0], dtype=np.int64)
        for ip in np.unique(dd.pip):
            sel = dd.pip == ip
            s_all[sel] = self._left_coeffs(int(ip), dd.pbeta[sel])
        terms = self._ideal_terms(dd)
        total = dd.pa.shape[0]
        empty = np.zeros((0, dd.N * K), dtype=np.int64)

        # seed with an evenly spread sample so the rank is close to final
        seed = np.unique(np.linspace(0, total - 1, min(total, _CHUNK)).astype(np.int64))
        for k in range(K):
            ech.add_rows(self._consistency_rows(psi, dd, s_all, k, seed))
        ech.add_rows(self._ideal_rows(psi, dd, terms, np.unique(
            np.linspace(0, dd.N - 1, min(dd.N, _CHUNK)).astype(np.int64))))

        # W is only refreshed when it rejects many equations; a stale W is
        # still sound because the row space only grows
        state = {"W": None, "stale": True}

        def current_w():
            if state["stale"]:
                null = ech.nullspace()
                W = np.empty((n, null.shape[0], psi.shape[1]), dtype=np.int32)
                for i in range(n):
                    W[i] = matmul_mod(null[:, i * u:(i + 1) * u], psi, p)
                state["W"], state["stale"] = W, False
            return state["W"]

        def absorb(bad_rows):
            if bad_rows.shape[0] > max(64, nu // 2):
                state["stale"] = True
            ech.add_rows(bad_rows)

        for k in range(K):
            for st in range(0, total, _CHUNK):
                if ech.is_full():
                    return empty
                idx = np.arange(st, min(st + _CHUNK, total))
                bad = self._consistency_residual(current_w(), dd, s_all, k, idx).any(axis=1)
                if bad.any():
                    absorb(self._consistency_rows(psi, dd, s_all, k, idx[bad]))
        for st in range(0, dd.N, _CHUNK):
            if ech.is_full():
                return empty
            sel = np.arange(st, min(st + _CHUNK, dd.N))
            bad = self._ideal_residual(current_w(), dd, terms, sel).any(axis=1)
            if bad.any():
                absorb(self._ideal_rows(psi, dd, terms, sel[bad]))
        if ech.is_full():
            return empty

        null = ech.nullspace()
        hnew = null.shape[0]
        coeffs = null.reshape(hnew, n, u)
        new = np.zeros((hnew, dd.N * K), dtype=np.int64)
        kr = np.arange(K)
        for i in range(n):
            js = np.nonzero(dd.i0 == i)[0]
            if js.size == 0:
                continue
            src_cols = (dd.src[js][:, None] * K + kr).ravel()
            dst_cols = (js[:, None] * K + kr).ravel()
            new[:, dst_cols] = matmul_mod(coeffs[:, i, :], psi[:, src_cols], p)
        return new
