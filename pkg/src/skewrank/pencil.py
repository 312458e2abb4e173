"""Complete classification of constant-rank skew-symmetric pencils.

A pencil a*A1 + b*A2 of constant rank 2r is classified by the degrees of
a minimal polynomial basis of its kernel: a partition of r (the positive
degrees) plus the number of constant kernel vectors (padding, the
degenerate part split off by zero rows and columns).  These invariants
are complete for congruence, so equivalence is decided by comparing them.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .certify import certify_constant_rank
from .forms import Form
from .skew import SkewPolyMatrix

Q = Fraction


@dataclass(frozen=True)
class KroneckerInvariants:
    rank: int
    partition: tuple
    padding: int

    def to_json(self):
        return {"rank": self.rank, "partition": list(self.partition),
                "padding": self.padding}

    def dumps(self):
        return json.dumps(self.to_json())


@dataclass(frozen=True)
class CanonicalPencil:
    invariants: KroneckerInvariants
    matrix: SkewPolyMatrix


def _degree_solution_space(B1, B2, n, delta):
    """Kernel vectors with entries homogeneous of degree delta in (a, b).

    Unknowns are the coefficient vectors c_0..c_delta of
    v = sum c_e * a^(delta-e) b^e; the equations say (a*A1 + b*A2) v = 0
    coefficientwise.  Returns primitive integer basis vectors (RREF order).
    """
    rows = []
    for e in range(delta + 2):
        for i in range(n):
            row = [Q(0)] * ((delta + 1) * n)
            if e <= delta:
                for j in range(n):
                    if B1[i][j]:
                        row[e * n + j] = B1[i][j]
            if e >= 1:
                for j in range(n):
                    if B2[i][j]:
                        row[(e - 1) * n + j] += B2[i][j]
            rows.append(row)
    return linalg.nullspace(rows, ncols=(delta + 1) * n)


def _multiples_of(found, n, delta):
    """Coefficient vectors of m * v for found kernel vectors v of lower
    degree and monomials m of the complementary degree."""
    out = []
    for eps, vec in found:
        k = delta - eps
        for shift in range(k + 1):
            w = [0] * ((delta + 1) * n)
            for e in range(eps + 1):
                for j in range(n):
                    w[(e + shift) * n + j] = vec[e * n + j]
            out.append(w)
    return out


def minimal_indices(A, cert=None):
    """Kronecker invariants of a certified constant-rank pencil."""
    if A.nvars != 2:
        raise ValueError("minimal indices are defined for pencils (d = 2)")
    if cert is None:
        cert = certify_constant_rank(A)
    if cert.constant is not True:
        raise ValueError("pencil does not have constant rank")
    rank = cert.generic_rank
    r = rank // 2
    n = A.order
    kernel_rank = n - rank
    B1, B2 = A.coefficient_basis()

    found = []
    degrees = []
    for delta in range(0, r + 1):
        if len(found) == kernel_rank:
            break
        sols = _degree_solution_space(B1, B2, n, delta)
        span = _multiples_of(found, n, delta)
        base_rank = linalg.rank(span) if span else 0
        for vec in sols:
            if len(found) == kernel_rank:
                break
            cand = span + [list(vec)]
            if linalg.rank(cand) > base_rank:
                span = cand
                base_rank += 1
                found.append((delta, list(vec)))
                degrees.append(delta)
    assert len(found) == kernel_rank, "kernel basis extraction incomplete"
    padding = degrees.count(0)
    partition = tuple(sorted((d for d in degrees if d > 0), reverse=True))
    assert sum(partition) == r
    return KroneckerInvariants(rank, partition, padding)


def canonical_form(partition):
    """Canonical pencil for a partition (r_1 >= ... >= r_h >= 1).

    Block layout: order 2r + h with the top-right r x (r + h) block made of
    staircase blocks carrying `a` on the diagonal and `b` beside it.
    """
    partition = tuple(int(x) for x in partition)
    if not partition:
        raise ValueError("empty partition")
    if any(x < 1 for x in partition):
        raise ValueError("partition entries must be positive")
    if list(partition) != sorted(partition, reverse=True):
        raise ValueError("partition must be non-increasing")
    r = sum(partition)
    h = len(partition)
    order = 2 * r + h
    vars = ("a", "b")
    a = Form.variable(vars, "a")
    b = Form.variable(vars, "b")
    upper = {}
    row = 0
    col = r
    for ri in partition:
        for t in range(ri):
            upper[(row + t, col + t)] = a
            upper[(row + t, col + t + 1)] = b
        row += ri
        col += ri + 1
    matrix = SkewPolyMatrix(order, vars, upper)
    return CanonicalPencil(KroneckerInvariants(2 * r, partition, 0), matrix)


def equivalent(A, B):
    """Congruence equivalence of two certified constant-rank pencils."""
    ca = certify_constant_rank(A)
    cb = certify_constant_rank(B)
    if ca.constant is not True or cb.constant is not True:
        raise ValueError("equivalence needs constant-rank certificates")
    if A.order != B.order or ca.generic_rank != cb.generic_rank:
        return False
    ia = minimal_indices(A, ca)
    ib = minimal_indices(B, cb)
    return ia == ib
