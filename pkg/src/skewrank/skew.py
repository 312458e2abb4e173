"""Skew-symmetric matrices of linear forms.

The matrix stores only its strict upper triangle; the lower triangle and
the zero diagonal are implied.  Entries are homogeneous linear
:class:`~skewrank.forms.Form` values (or zero) in a shared tuple of
parameter variables.  Values are immutable; Pfaffian computations share a
per-instance memo table keyed by principal index subsets.
"""

from __future__ import annotations

import hashlib
import json
from fractions import Fraction

from . import linalg
from .forms import Form, parse_form

Q = Fraction


class SkewPolyMatrix:
    __slots__ = ("order", "vars", "_upper", "_pf_memo", "_hash")

    def __init__(self, order, vars, upper):
        order = int(order)
        if order < 1:
            raise ValueError("order must be at least 1")
        vars = tuple(str(v) for v in vars)
        if not vars:
            raise ValueError("need at least one parameter variable")
        clean = {}
        items = upper.items() if isinstance(upper, dict) else upper
        for (i, j), f in items:
            i, j = int(i), int(j)
            if not (0 <= i < j < order):
                raise ValueError("bad upper-triangle position (%d, %d)" % (i, j))
            if isinstance(f, str):
                f = parse_form(f, vars)
            if not isinstance(f, Form):
                raise ValueError("entries must be Forms")
            if f.vars != vars:
                raise ValueError("entry ring %r does not match %r" % (f.vars, vars))
            if f.is_zero():
                continue
            if not f.is_homogeneous(1):
                raise ValueError("entry (%d, %d) is not linear: %s" % (i, j, f))
            clean[(i, j)] = f
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "vars", vars)
        object.__setattr__(self, "_upper", clean)
        object.__setattr__(self, "_pf_memo", {})
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("SkewPolyMatrix is immutable")

    @property
    def nvars(self):
        return len(self.vars)

    @classmethod
    def zero(cls, order, vars):
        return cls(order, vars, {})

    @classmethod
    def from_coefficient_basis(cls, vars, matrices):
        """Rebuild sum(var_k * B_k) from constant skew matrices B_k."""
        vars = tuple(vars)
        if len(matrices) != len(vars):
            raise ValueError("need one coefficient matrix per variable")
        order = len(matrices[0])
        upper = {}
        for k, B in enumerate(matrices):
            if len(B) != order or any(len(r) != order for r in B):
                raise ValueError("coefficient matrices must share one order")
            for i in range(order):
                if B[i][i]:
                    raise ValueError("nonzero diagonal in coefficient matrix")
                for j in range(i + 1, order):
                    if Q(B[i][j]) != -Q(B[j][i]):
                        raise ValueError("coefficient matrix %d is not skew" % k)
                    if B[i][j]:
                        e = tuple(1 if t == k else 0 for t in range(len(vars)))
                        f = upper.get((i, j), Form.zero(vars))
                        upper[(i, j)] = f + Form(vars, [(e, Q(B[i][j]))])
        return cls(order, vars, upper)

    # -- access ---------------------------------------------------------

    def entry(self, i, j):
        """Entry (i, j) with the skew sign materialised."""
        if i == j:
            return Form.zero(self.vars)
        if i < j:
            return self._upper.get((i, j), Form.zero(self.vars))
        f = self._upper.get((j, i))
        return -f if f is not None else Form.zero(self.vars)

    def upper_entries(self):
        """Nonzero strict-upper entries as ((i, j), Form), lex ordered."""
        return [((i, j), self._upper[(i, j)]) for (i, j) in sorted(self._upper)]

    def coefficient_basis(self):
        """Constant skew matrices B_k with A = sum(var_k * B_k)."""
        mats = []
        for k in range(self.nvars):
            B = [[Q(0)] * self.order for _ in range(self.order)]
            for (i, j), f in self._upper.items():
                e = tuple(1 if t == k else 0 for t in range(self.nvars))
                c = f.coefficient(e)
                if c:
                    B[i][j] = c
                    B[j][i] = -c
            mats.append(B)
        return mats

    def __eq__(self, other):
        return (isinstance(other, SkewPolyMatrix) and self.order == other.order
                and self.vars == other.vars and self._upper == other._upper)

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((self.order, self.vars, tuple(sorted(self._upper.items()))))
            object.__setattr__(self, "_hash", h)
        return h

    def __repr__(self):
        return "SkewPolyMatrix(order=%d, vars=%r, entries=%d)" % (
            self.order, list(self.vars), len(self._upper))

    def pretty(self):
        width = max([len(str(f)) for f in self._upper.values()] + [1]) + 1
        lines = []
        for i in range(self.order):
            cells = []
            for j in range(self.order):
                cells.append(str(self.entry(i, j)).rjust(width))
            lines.append(" ".join(cells))
        return "\n".join(lines)

    # -- evaluation -------------------------------------------------------

    def evaluate_at(self, point):
        """Constant skew matrix at a nonzero parameter point."""
        point = [Q(x) for x in point]
        if len(point) != self.nvars:
            raise ValueError("point length does not match variable count")
        if not any(point):
            raise ValueError("zero parameter point")
        M = [[Q(0)] * self.order for _ in range(self.order)]
        for (i, j), f in self._upper.items():
            v = f.evaluate(point)
            M[i][j] = v
            M[j][i] = -v
        return M

    def rank_at(self, point):
        """Exact rank at a nonzero point (always even)."""
        r = linalg.bareiss_rank(self.evaluate_at(point))
        assert r % 2 == 0
        return r

    # -- transforms -------------------------------------------------------

    def congruence_transform(self, P):
        """Congruence P^T A P by an invertible constant matrix."""
        P = [[Q(x) for x in row] for row in P]
        n = self.order
        if len(P) != n or any(len(r) != n for r in P):
            raise ValueError("transform must be square of order %d" % n)
        if linalg.det(P) == 0:
            raise ValueError("singular congruence matrix")
        Pt = linalg.transpose(P)
        basis = self.coefficient_basis()
        new = [linalg.mat_mul(linalg.mat_mul(Pt, B), P) for B in basis]
        return SkewPolyMatrix.from_coefficient_basis(self.vars, new)

    def parameter_change(self, L):
        """Substitute variables by L * (vars); L invertible d x d."""
        d = self.nvars
        L = [[Q(x) for x in row] for row in L]
        if len(L) != d or any(len(r) != d for r in L):
            raise ValueError("parameter change must be square of order %d" % d)
        if linalg.det(L) == 0:
            raise ValueError("singular parameter change")
        images = []
        for i in range(d):
            images.append(Form(self.vars,
                               [(tuple(1 if t == j else 0 for t in range(d)), L[i][j])
                                for j in range(d) if L[i][j]]))
        upper = {ij: f.linear_substitute(images) for ij, f in self._upper.items()}
        return SkewPolyMatrix(self.order, self.vars, upper)

    def direct_sum(self, other):
        if not isinstance(other, SkewPolyMatrix):
            raise ValueError("direct_sum needs a SkewPolyMatrix")
        if self.vars != other.vars:
            raise ValueError("variable mismatch: %r vs %r" % (self.vars, other.vars))
        n = self.order
        upper = dict(self._upper)
        for (i, j), f in other._upper.items():
            upper[(i + n, j + n)] = f
        return SkewPolyMatrix(n + other.order, self.vars, upper)

    def pad_zero(self, k):
        """Append k zero rows and columns."""
        if k < 0:
            raise ValueError("negative padding")
        if k == 0:
            return self
        return SkewPolyMatrix(self.order + k, self.vars, dict(self._upper))

    # -- nondegeneracy ------------------------------------------------------

    def is_nondegenerate(self):
        """(flag, witness): witness is a common kernel vector when False.

        Nondegenerate means the coefficient matrices have trivial common
        kernel and their images span the whole space; for skew-symmetric
        spaces the two conditions agree.
        """
        basis = self.coefficient_basis()
        stacked = [row for B in basis for row in B]
        kernel = linalg.nullspace(stacked, ncols=self.order)
        concat = [sum((list(B[i]) for B in basis), []) for i in range(self.order)]
        row_ok = linalg.rank(concat) == self.order
        col_ok = not kernel
        assert row_ok == col_ok
        if col_ok:
            return True, None
        return False, tuple(kernel[0])

    # -- Pfaffians ----------------------------------------------------------

    def _pf(self, idx):
        """Pfaffian of the principal submatrix on the sorted index tuple."""
        memo = self._pf_memo
        got = memo.get(idx)
        if got is not None:
            return got
        if not idx:
            out = Form.constant(self.vars, 1)
        else:
            rest = idx[1:]
            i0 = idx[0]
            out = Form.zero(self.vars)
            sign = 1
            for t, j in enumerate(rest):
                e = self.entry(i0, j)
                if not e.is_zero():
                    sub = rest[:t] + rest[t + 1:]
                    term = e * self._pf(sub)
                    out = out + (term if sign > 0 else -term)
                sign = -sign
        memo[idx] = out
        return out

    def pfaffian_symbolic(self):
        """Pfaffian of the whole matrix; requires even order."""
        if self.order % 2:
            raise ValueError("Pfaffian needs even order")
        return self._pf(tuple(range(self.order)))

    def sub_pfaffians(self, size):
        """Pfaffians of all principal size x size submatrices, lex order."""
        size = int(size)
        if size % 2:
            raise ValueError("sub-Pfaffian size must be even")
        if size < 0 or size > self.order:
            raise ValueError("size %d out of range for order %d" % (size, self.order))
        from itertools import combinations
        return [self._pf(s) for s in combinations(range(self.order), size)]

    # -- JSON ------------------------------------------------------------

    def to_json(self):
        return {
            "order": self.order,
            "vars": list(self.vars),
            "upper": [{"i": i, "j": j, "form": str(f)}
                      for (i, j), f in self.upper_entries()],
        }

    @classmethod
    def from_json(cls, obj):
        vars = tuple(obj["vars"])
        upper = {(e["i"], e["j"]): parse_form(e["form"], vars) for e in obj["upper"]}
        return cls(obj["order"], vars, upper)

    def dumps(self):
        return json.dumps(self.to_json(), indent=2, sort_keys=True)

    @classmethod
    def loads(cls, s):
        return cls.from_json(json.loads(s))

    def digest(self):
        """Content digest of the canonical JSON encoding."""
        payload = json.dumps(self.to_json(), sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(payload.encode()).hexdigest()


def pfaffian(rows):
    """Pfaffian of a constant skew-symmetric matrix (exact).

    Expanded along the first row: Pf(A) = sum over j of (-1)^j a_0j times
    the Pfaffian with rows and columns 0 and j removed; Pf([[0, a], [-a, 0]])
    is +a.
    """
    n = len(rows)
    if n % 2:
        raise ValueError("Pfaffian needs even order")
    M = [[Q(x) for x in row] for row in rows]
    for i in range(n):
        if M[i][i]:
            raise ValueError("nonzero diagonal entry")
        for j in range(i + 1, n):
            if M[i][j] != -M[j][i]:
                raise ValueError("matrix is not skew-symmetric")

    def rec(idx):
        if not idx:
            return Q(1)
        i0 = idx[0]
        rest = idx[1:]
        total = Q(0)
        sign = 1
        for t, j in enumerate(rest):
            a = M[i0][j]
            if a:
                total += (a if sign > 0 else -a) * rec(rest[:t] + rest[t + 1:])
            sign = -sign
        return total

    return rec(tuple(range(n)))
