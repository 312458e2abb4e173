"""Orbit dimension of a matrix space under congruence.

The space spanned by coefficient matrices B_1..B_d is a point of the
Grassmannian of d-planes in the space of skew matrices (Pluecker
coordinates indexed by d-subsets of the upper-triangle positions).  Each
elementary matrix E contributes one tangent row: the derivative of the
Pluecker vector of (B_1 + t D_1) ^ ... ^ (B_d + t D_d) at t = 0, with
D_k = E^T B_k + B_k E.  The rank of the stacked rows is the affine cone
dimension of the orbit; the projective orbit dimension is one less.

Rows are kept sparse (dict keyed by column subsets); the rank is
prescreened modulo a seeded random prime and certified exactly by
fraction-free elimination of the row Gram matrix, whose rank equals the
row rank over the rationals.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from fractions import Fraction
from math import comb, gcd

import numpy as np

from . import linalg

Q = Fraction


@dataclass(frozen=True)
class OrbitReport:
    ambient_grassmannian_dim: int
    tangent_rank: int
    orbit_dim: int
    modular_rank: int
    prime: int
    seed: int

    def to_json(self):
        return {
            "ambient_grassmannian_dim": self.ambient_grassmannian_dim,
            "tangent_rank": self.tangent_rank,
            "orbit_dim": self.orbit_dim,
            "modular_rank": self.modular_rank,
            "prime": self.prime,
            "seed": self.seed,
        }

    def dumps(self):
        return json.dumps(self.to_json(), indent=2)


def _pair_index(n):
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    return pairs, {p: k for k, p in enumerate(pairs)}


def _flatten_int(B, index):
    """Strict upper triangle of an integer skew matrix as a sparse dict."""
    out = {}
    for (i, j), k in index.items():
        v = B[i][j]
        if v:
            out[k] = v
    return out


def _int_matrix(B):
    den = 1
    for row in B:
        for x in row:
            den = den * Q(x).denominator // gcd(den, Q(x).denominator)
    M = [[int(Q(x) * den) for x in row] for row in B]
    g = 0
    for row in M:
        for x in row:
            g = gcd(g, abs(x))
    if g > 1:
        M = [[x // g for x in row] for row in M]
    return M


def _mv_wedge_vec(mv, vec):
    """Wedge a multivector (dict subset-tuple -> int) with a 1-vector."""
    out = {}
    for key, c in mv.items():
        for col, v in vec.items():
            if col in key:
                continue
            above = sum(1 for s in key if s > col)
            merged = tuple(sorted(key + (col,)))
            val = c * v if above % 2 == 0 else -c * v
            s = out.get(merged, 0) + val
            if s:
                out[merged] = s
            elif merged in out:
                del out[merged]
    return out


def _mv_wedge(m1, m2):
    """Wedge of two multivectors with ascending subset keys."""
    if not m1 or not m2:
        return {}
    out = {}
    for k1, c1 in m1.items():
        set1 = set(k1)
        for k2, c2 in m2.items():
            if set1 & set(k2):
                continue
            inv = sum(1 for x in k1 for y in k2 if x > y)
            merged = tuple(sorted(k1 + k2))
            val = c1 * c2 if inv % 2 == 0 else -c1 * c2
            s = out.get(merged, 0) + val
            if s:
                out[merged] = s
            elif merged in out:
                del out[merged]
    return out


def tangent_rows(A):
    """One sparse Pluecker-derivative row per elementary matrix E_(i,j)."""
    n = A.order
    d = A.nvars
    pairs, index = _pair_index(n)
    basis = [_int_matrix(B) for B in A.coefficient_basis()]
    flats = [_flatten_int(B, index) for B in basis]
    flat_rows = [[B[i][j] for (i, j) in pairs] for B in basis]
    if linalg.rank(flat_rows) != d:
        raise ValueError("coefficient matrices are linearly dependent")

    prefix = [{(): 1}]
    for k in range(d):
        prefix.append(_mv_wedge_vec(prefix[-1], flats[k]))
    flat_mv = [{(c,): v for c, v in f.items()} for f in flats]
    suffix = [None] * (d + 1)
    suffix[d] = {(): 1}
    for k in range(d - 1, -1, -1):
        suffix[k] = _mv_wedge(flat_mv[k], suffix[k + 1])

    rows = []
    for i in range(n):
        for j in range(n):
            # D_k = E^T B_k + B_k E for E with a single 1 at (i, j):
            # row j of D_k is row i of B_k, column j is column i of B_k.
            row_acc = {}
            for k in range(d):
                B = basis[k]
                D = {}
                for q in range(n):
                    v = B[i][q]
                    if v and j != q:
                        key = (j, q) if j < q else (q, j)
                        D[index[key]] = D.get(index[key], 0) + (v if j < q else -v)
                for p in range(n):
                    v = B[p][i]
                    if v and p != j:
                        key = (p, j) if p < j else (j, p)
                        D[index[key]] = D.get(index[key], 0) + (v if p < j else -v)
                D = {c: v for c, v in D.items() if v}
                if not D:
                    continue
                term = _mv_wedge(_mv_wedge_vec(prefix[k], D), suffix[k + 1])
                for key, v in term.items():
                    s = row_acc.get(key, 0) + v
                    if s:
                        row_acc[key] = s
                    elif key in row_acc:
                        del row_acc[key]
            rows.append(row_acc)
    return rows


def _is_probable_prime(n):
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
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


def _seeded_prime(seed, bits=30):
    rng = random.Random("rank-prescreen:%d" % seed)
    while True:
        cand = rng.getrandbits(bits) | (1 << (bits - 1)) | 1
        if _is_probable_prime(cand):
            return cand


def _modular_rank(Z, p):
    A = np.mod(Z, p).astype(np.int64)
    m, n = A.shape
    r = 0
    for c in range(n):
        nz = np.nonzero(A[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        inv = pow(int(A[r, c]), -1, p)
        A[r] = (A[r] * inv) % p
        below = A[r + 1:, c].copy()
        if below.any():
            A[r + 1:] = (A[r + 1:] - np.outer(below, A[r])) % p
        r += 1
        if r == m:
            break
    return r


def rank_exact(rows, seed=0, dense_check=False):
    """Exact rank of sparse integer rows, with a modular prescreen.

    The exact value comes from fraction-free (Bareiss) elimination of the
    row Gram matrix: over the rationals the Gram matrix has the same rank
    as the rows themselves.  `dense_check` additionally runs fraction-free
    elimination on the materialised rows and asserts agreement.
    """
    rows = [r for r in rows]
    cols = sorted({c for r in rows for c in r})
    col_index = {c: k for k, c in enumerate(cols)}
    m, n = len(rows), len(cols)
    if n == 0:
        return {"rank": 0, "modular_rank": 0, "prime": _seeded_prime(seed)}
    Z = np.zeros((m, n), dtype=np.int64)
    maxabs = 0
    for i, r in enumerate(rows):
        for c, v in r.items():
            Z[i, col_index[c]] = v
            maxabs = max(maxabs, abs(v))
    prime = _seeded_prime(seed)
    modular = _modular_rank(Z, prime)
    if maxabs * maxabs * n < 2 ** 62:
        gram = (Z @ Z.T).tolist()
    else:
        gram = [[sum(v * other.get(c, 0) for c, v in r.items())
                 for other in rows] for r in rows]
    exact = linalg.bareiss_rank(gram)
    if dense_check:
        direct = linalg.bareiss_rank(Z.tolist())
        assert direct == exact, "Gram rank disagrees with direct elimination"
    return {"rank": exact, "modular_rank": modular, "prime": prime}


def orbit_dimension(A, seed=0, dense_check=False):
    """Orbit dimension report for the space spanned by A's coefficients."""
    n = A.order
    d = A.nvars
    rows = tangent_rows(A)
    res = rank_exact(rows, seed=seed, dense_check=dense_check)
    ambient = d * (comb(n, 2) - d)
    return OrbitReport(
        ambient_grassmannian_dim=ambient,
        tangent_rank=res["rank"],
        orbit_dim=res["rank"] - 1,
        modular_rank=res["modular_rank"],
        prime=res["prime"],
        seed=seed,
    )
