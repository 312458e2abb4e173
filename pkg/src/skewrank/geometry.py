"""Projective geometry toolkit for constant-rank spaces.

Order reduction by verified projection, the kernel 2-plane map through
complementary sub-Pfaffians, line restrictions with their splitting data,
jumping-line scans, and degrees of section zero schemes.  Everything is
exact; randomness is always drawn from a caller-supplied seed.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from . import linalg
from .certify import certify_constant_rank, restrict_line
from .forms import Form
from .groebner import Ideal, WrongDimension, hilbert_profile, is_projectively_empty
from .pencil import KroneckerInvariants, minimal_indices
from .skew import SkewPolyMatrix

Q = Fraction


class BudgetExhausted(RuntimeError):
    """A sampling search ran out of attempts; not a silent failure."""


# -- projections -------------------------------------------------------


@dataclass(frozen=True)
class ProjectionStep:
    center: tuple
    basis_change: tuple          # P with result = drop_last(P^T A P)
    result: SkewPolyMatrix
    valid: bool
    certificate: object

    def to_json(self):
        return {
            "center": [str(x) for x in self.center],
            "valid": self.valid,
            "result": self.result.to_json(),
            "certificate": self.certificate.to_json(),
        }


def _projection_basis_change(center):
    """Invertible P whose congruence moves the center into the last
    coordinate: row k of P^T reads off the k-th quotient coordinate.

    The completion is deterministic: the center is scaled to have leading
    coefficient 1 at its first nonzero coordinate j0, and the quotient
    coordinates are x_j - center_j * x_j0 for j != j0 in increasing order.
    """
    center = [Q(x) for x in center]
    n = len(center)
    j0 = next((i for i, x in enumerate(center) if x), None)
    if j0 is None:
        raise ValueError("zero projection center")
    center = [x / center[j0] for x in center]
    rows = []
    for j in range(n):
        if j == j0:
            continue
        row = [Q(0)] * n
        row[j] = Q(1)
        row[j0] = -center[j]
        rows.append(row)
    last = [Q(0)] * n
    last[j0] = Q(1)
    rows.append(last)
    P = linalg.transpose(rows)
    return tuple(tuple(r) for r in P), tuple(center)


def project(A, center, seed=0):
    """Project the space from a point; validity is decided by
    re-certification of the result at the same rank, never assumed."""
    if len(center) != A.order:
        raise ValueError("center must have one coordinate per matrix row")
    P, center = _projection_basis_change(center)
    moved = A.congruence_transform(P)
    upper = {(i, j): f for (i, j), f in moved.upper_entries()
             if j < A.order - 1}
    result = SkewPolyMatrix(A.order - 1, A.vars, upper)
    cert_in = certify_constant_rank(A, seed=seed)
    cert_out = certify_constant_rank(result, seed=seed)
    valid = (cert_out.constant is True
             and cert_out.generic_rank == cert_in.generic_rank)
    return ProjectionStep(center, P, result, valid, cert_out)


def find_valid_center(A, target_order, seed=0, budget=200):
    """Chain of valid projection steps down to the target order.

    Sampling is deterministic under the seed; running out of candidates
    raises BudgetExhausted.  Orders below 2r + 2 (kernel rank two) are
    rejected up front; the coarser guarantee for existence is order
    2r + d, which the error message reports as well.
    """
    cert = certify_constant_rank(A, seed=seed)
    if cert.constant is not True:
        raise ValueError("projection chains need a constant-rank input")
    two_r = cert.generic_rank
    floor = two_r + 2
    if target_order < floor:
        raise ValueError(
            "target order %d is below the kernel-rank-two floor %d "
            "(guaranteed reachable: order %d)"
            % (target_order, floor, two_r + A.nvars))
    if target_order >= A.order:
        raise ValueError("target order %d is not below the current order %d"
                         % (target_order, A.order))
    rng = random.Random("projection-centers:%d" % seed)
    steps = []
    current = A
    attempts = 0
    while current.order > target_order:
        found = None
        while attempts < budget:
            attempts += 1
            cand = tuple(Q(rng.randint(-3, 3)) for _ in range(current.order))
            if not any(cand):
                continue
            step = project(current, cand, seed=seed)
            if step.valid:
                found = step
                break
        if found is None:
            raise BudgetExhausted(
                "no valid center found for order %d after %d attempts"
                % (current.order, attempts))
        steps.append(found)
        current = found.result
    return steps


# -- kernel 2-plane map --------------------------------------------------


def _check_corank2(A, cert):
    if A.order % 2:
        raise ValueError("kernel 2-plane map needs even order")
    if cert.constant is not True:
        raise ValueError("needs a constant-rank certificate")
    if cert.generic_rank != A.order - 2:
        raise ValueError("kernel 2-plane map needs corank exactly 2")


def kernel_plucker(A, cert=None):
    """Coordinates of the kernel 2-plane: entry (i, j) is
    (-1)^(i+j) times the Pfaffian with rows and columns i, j removed."""
    if cert is None:
        cert = certify_constant_rank(A)
    _check_corank2(A, cert)
    n = A.order
    out = {}
    for i, j in combinations(range(n), 2):
        idx = tuple(k for k in range(n) if k not in (i, j))
        f = A._pf(idx)
        out[(i, j)] = f if (i + j) % 2 == 0 else -f
    return out


def plucker_tensor_at(kp, order, point):
    """Constant skew matrix of the kernel coordinates at a point."""
    T = [[Q(0)] * order for _ in range(order)]
    for (i, j), f in kp.items():
        v = f.evaluate(point)
        T[i][j] = v
        T[j][i] = -v
    return T


def support_plane(T):
    """Column space of a rank-2 skew tensor, as a canonical RREF basis.

    For skew T the column space equals the row space, so the rows serve.
    """
    return linalg.span_rref([row for row in T if any(row)])


def kernel_plane_at(A, point):
    """Exact kernel of the evaluated matrix, as a canonical RREF basis."""
    basis = linalg.nullspace(A.evaluate_at(point), ncols=A.order)
    return linalg.span_rref(basis)


def gauss_span_dim(A, cert=None):
    """Dimension of the rational span of the kernel-map coordinates."""
    kp = kernel_plucker(A, cert)
    forms = list(kp.values())
    monos = sorted({e for f in forms for e in f._terms},
                   reverse=True)
    rows = [[f.coefficient(e) for e in monos] for f in forms]
    return linalg.rank(rows)


# -- lines, splitting types, jumping lines -------------------------------


def restrict_to_line(A, p, q):
    """Pencil obtained by substituting vars = s*p + t*q (independent p, q)."""
    if linalg.rank([list(p), list(q)]) != 2:
        raise ValueError("line needs two independent points")
    return restrict_line(A, p, q)


def line_span_points(line):
    """Two deterministic independent points on the line with the given
    dual coordinates."""
    line = [Q(x) for x in line]
    if len(line) != 3:
        raise ValueError("dual line coordinates must be a triple")
    j0 = next((i for i, x in enumerate(line) if x), None)
    if j0 is None:
        raise ValueError("zero dual vector is not a line")
    pts = []
    for j in range(3):
        if j == j0:
            continue
        v = [Q(0)] * 3
        v[j] = line[j0]
        v[j0] = -line[j]
        pts.append(tuple(linalg.primitive_vector(v)))
    return pts[0], pts[1]


def splitting_on_line(A, p, q):
    """Kronecker invariants of the restriction to the line through p, q."""
    pencil = restrict_to_line(A, p, q)
    cert = certify_constant_rank(pencil)
    if cert.constant is not True:
        raise ValueError("restriction is not of constant rank; "
                         "the ambient space was not constant rank")
    return minimal_indices(pencil, cert)


def generic_splitting(A, seed=0, samples=20, quorum=15):
    """Most frequent splitting over seeded random lines, with a quorum."""
    rng = random.Random("generic-splitting:%d" % seed)
    d = A.nvars
    seen = {}
    done = 0
    while done < samples:
        p = tuple(Q(rng.randint(-5, 5)) for _ in range(d))
        q = tuple(Q(rng.randint(-5, 5)) for _ in range(d))
        if not any(p) or not any(q) or linalg.rank([list(p), list(q)]) != 2:
            continue
        inv = splitting_on_line(A, p, q)
        seen[inv] = seen.get(inv, 0) + 1
        done += 1
    best, count = max(seen.items(), key=lambda kv: kv[1])
    if count < quorum:
        raise BudgetExhausted("no splitting reached the quorum: %r" % seen)
    return best


def jumping_test(A, line, generic=None, seed=0):
    """Does the line's splitting differ from the generic one?"""
    if generic is None:
        generic = generic_splitting(A, seed=seed)
    p, q = line_span_points(line)
    return splitting_on_line(A, p, q) != generic


def _primitive_dual(v):
    w = linalg.primitive_vector(list(v))
    return tuple(w)


@lru_cache(maxsize=4)
def grid_lines(bound=4):
    """Duals of all lines through pairs of grid points with coordinates in
    [-bound, bound], deduplicated, simplest first."""
    pts = []
    seen = set()
    rng = range(-bound, bound + 1)
    for x in rng:
        for y in rng:
            for z in rng:
                if x == 0 and y == 0 and z == 0:
                    continue
                p = tuple(linalg.primitive_vector([x, y, z]))
                if p not in seen:
                    seen.add(p)
                    pts.append(p)
    lines = set()
    for a, b in combinations(pts, 2):
        cross = (a[1] * b[2] - a[2] * b[1],
                 a[2] * b[0] - a[0] * b[2],
                 a[0] * b[1] - a[1] * b[0])
        if any(cross):
            lines.add(_primitive_dual(cross))
    return tuple(sorted(lines, key=lambda l: (max(abs(x) for x in l), l)))


@dataclass(frozen=True)
class ScanResult:
    generic: KroneckerInvariants
    jumping_lines: tuple         # ((line, invariants), ...)
    scanned: int
    seed: int


def jumping_scan(A, budget=200, seed=0, extra_lines=()):
    """Test structured grid lines (plus caller candidates) for jumping."""
    generic = generic_splitting(A, seed=seed)
    candidates = [tuple(Q(x) for x in l) for l in extra_lines]
    for l in grid_lines():
        if len(candidates) >= budget:
            break
        if l not in candidates:
            candidates.append(l)
    jumps = []
    for line in candidates[:budget]:
        p, q = line_span_points(line)
        inv = splitting_on_line(A, p, q)
        if inv != generic:
            jumps.append((line, inv))
    return ScanResult(generic, tuple(jumps), len(candidates[:budget]), seed)


def verify_jumping_set(A, lines, negatives=50, seed=0):
    """All given lines jump; seeded random other lines do not."""
    generic = generic_splitting(A, seed=seed)
    positives = {_primitive_dual([Q(x) for x in l]) for l in lines}
    for line in lines:
        if not jumping_test(A, line, generic=generic):
            return False
    rng = random.Random("negative-lines:%d" % seed)
    done = 0
    while done < negatives:
        l = tuple(Q(rng.randint(-9, 9)) for _ in range(3))
        if not any(l) or _primitive_dual(l) in positives:
            continue
        done += 1
        if jumping_test(A, l, generic=generic):
            return False
    return True


def fit_dual_conic(lines):
    """Conic through five dual points (lines); None unless unique."""
    rows = []
    for l in lines[:5]:
        l0, l1, l2 = (Q(x) for x in l)
        rows.append([l0 * l0, l0 * l1, l0 * l2, l1 * l1, l1 * l2, l2 * l2])
    basis = linalg.nullspace(rows, ncols=6)
    if len(basis) != 1:
        return None
    return tuple(basis[0])


def conic_contains(conic, line):
    l0, l1, l2 = (Q(x) for x in line)
    vals = [l0 * l0, l0 * l1, l0 * l2, l1 * l1, l1 * l2, l2 * l2]
    return sum(c * v for c, v in zip(conic, vals)) == 0


# -- section zero schemes -------------------------------------------------


def _bordered_pfaffians(A, xi):
    """Nonzero Pfaffians of size 2r+2 of A bordered skew-symmetrically by
    the constant covector xi (only subsets through the border survive)."""
    n = A.order
    cert = certify_constant_rank(A)
    size = cert.generic_rank + 2
    xi = [Q(x) for x in xi]
    zero = Form.zero(A.vars)

    def entry(i, j):
        if i == j:
            return zero
        if j == n:
            return Form.constant(A.vars, xi[i])
        if i == n:
            return -Form.constant(A.vars, xi[j])
        return A.entry(i, j)

    memo = {}

    def pf(idx):
        got = memo.get(idx)
        if got is not None:
            return got
        if not idx:
            out = Form.constant(A.vars, 1)
        else:
            i0 = idx[0]
            rest = idx[1:]
            out = Form.zero(A.vars)
            sign = 1
            for t, j in enumerate(rest):
                e = entry(i0, j)
                if not e.is_zero():
                    term = e * pf(rest[:t] + rest[t + 1:])
                    out = out + (term if sign > 0 else -term)
                sign = -sign
        memo[idx] = out
        return out

    gens = []
    for sub in combinations(range(n), size - 1):
        f = pf(sub + (n,))
        if not f.is_zero():
            gens.append(f)
    return gens


def default_covector(order):
    return tuple(Q(i) for i in range(1, order + 1))


def section_zero_scheme_degree(A, xi=None, seed=0, retries=10):
    """Degree of the locus where the kernel plane sits inside ker(xi).

    On a plane of parameters (d = 3) the locus is finite and the degree is
    the second Chern class of the dual kernel bundle; for d = 4 the locus
    is a curve and its degree is returned.  Degenerate covectors are
    redrawn deterministically from the seed.
    """
    d = A.nvars
    if d not in (3, 4):
        raise ValueError("zero-scheme degrees are computed for d = 3 or 4")
    want_dim = 0 if d == 3 else 1
    rng = random.Random("covector:%d" % seed)
    tried = 0
    current = tuple(Q(x) for x in xi) if xi is not None else default_covector(A.order)
    if not any(current):
        raise ValueError("zero covector")
    last_error = None
    while tried <= retries:
        tried += 1
        gens = _bordered_pfaffians(A, current)
        if gens:
            ideal = Ideal(A.vars, sorted(set(gens), key=str))
            if is_projectively_empty(ideal):
                return 0
            prof = hilbert_profile(ideal)
            if prof.stabilized and prof.dimension == want_dim:
                return prof.degree
            last_error = "dimension %d (wanted %d)" % (prof.dimension, want_dim)
        else:
            last_error = "section vanished identically"
        current = tuple(Q(rng.randint(-9, 9)) for _ in range(A.order))
        while not any(current):
            current = tuple(Q(rng.randint(-9, 9)) for _ in range(A.order))
    raise WrongDimension("no generic covector found after %d draws: %s"
                         % (tried, last_error))


# -- fingerprints ---------------------------------------------------------


@dataclass(frozen=True)
class BundleFingerprint:
    generic_splitting: tuple
    generic_padding: int
    jumping_lines: tuple
    c2: int
    gauss_span_dim: int
    scanned: int
    seed: int

    def to_json(self):
        return {
            "generic_splitting": list(self.generic_splitting),
            "generic_padding": self.generic_padding,
            "jumping_lines": [{"line": [str(x) for x in l],
                               "splitting": inv.to_json()}
                              for l, inv in self.jumping_lines],
            "c2": self.c2,
            "gauss_span_dim": self.gauss_span_dim,
            "scanned": self.scanned,
            "seed": self.seed,
        }

    def dumps(self):
        return json.dumps(self.to_json(), indent=2)


def bundle_fingerprint(A, seed=0, budget=200):
    """Splitting data, jumping lines, c2 and the kernel-map span size.

    The zero-scheme degree is recomputed with three independent covectors
    and must agree; a disagreement raises (it would mean the covectors
    were degenerate in a way the retries did not catch).
    """
    cert = certify_constant_rank(A, seed=seed)
    rng = random.Random("fingerprint-covectors:%d" % seed)
    degrees = [section_zero_scheme_degree(A, seed=seed)]
    for _ in range(2):
        xi = tuple(Q(rng.randint(-9, 9)) for _ in range(A.order))
        while not any(xi):
            xi = tuple(Q(rng.randint(-9, 9)) for _ in range(A.order))
        degrees.append(section_zero_scheme_degree(A, xi=xi, seed=seed))
    if len(set(degrees)) != 1:
        raise WrongDimension("covector draws disagree on the zero-scheme "
                             "degree: %r" % degrees)
    if A.nvars == 3:
        scan = jumping_scan(A, budget=budget, seed=seed)
        generic = scan.generic
        jumps = scan.jumping_lines
        scanned = scan.scanned
    else:
        generic = generic_splitting(A, seed=seed)
        jumps = ()
        scanned = 0
    return BundleFingerprint(
        generic_splitting=generic.partition,
        generic_padding=generic.padding,
        jumping_lines=jumps,
        c2=degrees[0],
        gauss_span_dim=gauss_span_dim(A, cert),
        scanned=scanned,
        seed=seed,
    )
