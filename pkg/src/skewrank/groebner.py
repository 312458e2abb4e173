"""Buchberger engine over Q for homogeneous ideals in few variables.

Provides reduced Groebner bases in graded reverse lexicographic order
(the only order used anywhere), ideal membership via normal forms,
projective emptiness through the pure-power criterion on the leading-term
ideal, and degrees of low-dimensional projective schemes read off the
Hilbert function of the staircase.
"""

from __future__ import annotations

import heapq
import json
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from . import _kernels
from .forms import Form, parse_form

Q = Fraction


class WrongDimension(ValueError):
    """The staircase does not have the dimension the caller expected."""


@dataclass(frozen=True)
class Ideal:
    vars: tuple
    generators: tuple

    def __init__(self, vars, generators):
        vars = tuple(vars)
        gens = []
        for g in generators:
            if isinstance(g, str):
                g = parse_form(g, vars)
            if not isinstance(g, Form) or g.vars != vars:
                raise ValueError("generator ring mismatch")
            gens.append(g)
        object.__setattr__(self, "vars", vars)
        object.__setattr__(self, "generators", tuple(gens))

    @classmethod
    def of(cls, forms):
        forms = list(forms)
        if not forms:
            raise ValueError("cannot infer ring of an empty ideal")
        return cls(forms[0].vars, forms)

    def to_json(self):
        return {"vars": list(self.vars),
                "generators": [str(g) for g in self.generators]}

    @classmethod
    def from_json(cls, obj):
        return cls(tuple(obj["vars"]), obj["generators"])

    @classmethod
    def loads(cls, s):
        return cls.from_json(json.loads(s))


class GroebnerBasis:
    """Reduced degrevlex Groebner basis (monic forms, ascending leads)."""

    __slots__ = ("ideal", "basis", "_lay", "_kpolys", "_backend")

    def __init__(self, ideal, basis, lay, kpolys, backend):
        self.ideal = ideal
        self.basis = tuple(basis)
        self._lay = lay
        self._kpolys = kpolys
        self._backend = backend

    def leading_exponents(self):
        K = self._backend
        return [K.unpack(p[0][1], self._lay) for p in self._kpolys]

    def __iter__(self):
        return iter(self.basis)

    def __len__(self):
        return len(self.basis)


def _resolve_backend(backend):
    if backend is None:
        return _kernels.impl
    if isinstance(backend, str):
        return _kernels.backends()[backend]
    return backend


def _form_to_kernel(f, lay, K):
    """Clear denominators, strip content; returns a primitive int poly."""
    den = 1
    for _, c in f._terms.items():
        den = den * c.denominator // gcd(den, c.denominator)
    pairs = [(K.pack(e, lay), int(c * den)) for e, c in f._terms.items()]
    return K.primitive(K.poly_from_pairs(pairs, lay))


def _kernel_to_monic_form(p, vars, lay, K):
    lead = Q(p[0][2])
    return Form(vars, [(K.unpack(dk, lay), Q(c) / lead) for _, dk, c in p])


def _interreduce(polys, lay, K):
    polys = [p for p in polys if p]
    stable = False
    while not stable:
        stable = True
        fresh = []
        for i, p in enumerate(polys):
            others = fresh + polys[i + 1:]
            h = K.reduce_primitive(p, others, lay) if others else K.primitive(p)
            if h != p:
                stable = False
            if h:
                fresh.append(h)
        polys = fresh
    return polys


def buchberger(ideal, backend=None):
    """Reduced Groebner basis of a homogeneous ideal, deterministically."""
    K = _resolve_backend(backend)
    vars = ideal.vars
    n = len(vars)
    lay = K.make_layout(n)
    gens = []
    for g in ideal.generators:
        if g.is_zero():
            continue
        if not g.is_homogeneous():
            raise ValueError("non-homogeneous generator %s" % g)
        gens.append(_form_to_kernel(g, lay, K))
    seen = set()
    unique = []
    for p in gens:
        key = tuple(p)
        if key not in seen:
            seen.add(key)
            unique.append(p)

    G = _interreduce(unique, lay, K)

    pending = set()
    heap = []

    def push_pairs(t):
        dkt = G[t][0][1]
        for i in range(t):
            lcm = K.mono_lcm(G[i][0][1], dkt, lay)
            pending.add((i, t))
            heapq.heappush(heap, (K.mono_deg(lcm, lay), K.okey_of(lcm, lay), i, t))

    for t in range(len(G)):
        push_pairs(t)

    while heap:
        _, _, i, j = heapq.heappop(heap)
        if (i, j) not in pending:
            continue
        pending.discard((i, j))
        dki, dkj = G[i][0][1], G[j][0][1]
        lcm = K.mono_lcm(dki, dkj, lay)
        if lcm == dki + dkj:          # coprime leading monomials
            continue
        skip = False
        for k in range(len(G)):
            if k in (i, j):
                continue
            if K.mono_divides(G[k][0][1], lcm, lay):
                a = (min(i, k), max(i, k))
                b = (min(j, k), max(j, k))
                if a not in pending and b not in pending:
                    skip = True
                    break
        if skip:
            continue
        h = K.reduce_primitive(K.s_polynomial(G[i], G[j], lay), G, lay)
        if h:
            G.append(h)
            push_pairs(len(G) - 1)

    # Minimalise, then tail-reduce: the reduced basis is unique.
    G.sort(key=lambda p: p[0][0])
    kept = []
    for p in G:
        if not any(K.mono_divides(q[0][1], p[0][1], lay) for q in kept):
            kept.append(p)
    final = []
    for i, p in enumerate(kept):
        others = kept[:i] + kept[i + 1:]
        final.append(K.reduce_primitive(p, others, lay) if others else p)
    final.sort(key=lambda p: p[0][0])
    forms = [_kernel_to_monic_form(p, vars, lay, K) for p in final]
    return GroebnerBasis(ideal, forms, lay, final, K)


def normal_form(f, gb):
    """Remainder of f on division by the basis; zero iff f is a member."""
    if not isinstance(f, Form) or f.vars != gb.ideal.vars:
        raise ValueError("ring mismatch")
    if f.is_zero():
        return f
    K = gb._backend
    lay = gb._lay
    den = 1
    for c in f._terms.values():
        den = den * c.denominator // gcd(den, c.denominator)
    work = K.poly_from_pairs([(K.pack(e, lay), int(c * den)) for e, c in f._terms.items()], lay)
    scale = Q(den)                     # work == scale * f_remaining
    out = {}
    while work:
        dk0 = work[0][1]
        c0 = work[0][2]
        hit = None
        for g in gb._kpolys:
            if K.mono_divides(g[0][1], dk0, lay):
                hit = g
                break
        if hit is None:
            out[K.unpack(dk0, lay)] = Q(c0) / scale
            work = work[1:]
            continue
        cg = hit[0][2]
        work = K.add_scaled(work, K.shift_scaled(hit, dk0 - hit[0][1], 1, lay), cg, -c0)
        scale *= cg
        if work:
            g = K.content(work)
            if g > 1:
                work = [(ok, dk, c // g) for ok, dk, c in work]
                scale /= g
    return Form(gb.ideal.vars, out)


def _as_gb(x, backend=None):
    if isinstance(x, GroebnerBasis):
        return x
    return buchberger(x, backend=backend)


def is_projectively_empty(x, backend=None):
    """True iff the projective zero set over the closure is empty.

    Criterion: the leading-term ideal of the reduced basis contains a pure
    power of every variable.  The zero ideal yields False (whole space).
    """
    gb = _as_gb(x, backend)
    if not gb.basis:
        return False
    lay, K = gb._lay, gb._backend
    n = lay[0]
    covered = [False] * n
    for p in gb._kpolys:
        exps = K.unpack(p[0][1], lay)
        support = [i for i, e in enumerate(exps) if e]
        if len(support) == 1:
            covered[support[0]] = True
        elif not support:              # unit ideal
            return True
    return all(covered)


def hilbert_function(gb, upto):
    """Standard-monomial counts of the leading-term ideal, degrees 0..upto.

    A monomial is standard when no leading exponent vector divides it;
    the search keeps, per prefix, only the leads that can still divide.
    """
    lay, K = gb._lay, gb._backend
    n = lay[0]
    lts = [K.unpack(p[0][1], lay) for p in gb._kpolys]

    def rec(pos, remaining, live):
        if pos == n - 1:
            for lt in live:
                if lt[pos] <= remaining:
                    return 0
            return 1
        total = 0
        for e in range(remaining + 1):
            nxt = []
            dead = False
            for lt in live:
                if lt[pos] <= e:
                    if any(lt[i] for i in range(pos + 1, n)):
                        nxt.append(lt)
                    else:
                        dead = True
                        break
            if not dead:
                total += rec(pos + 1, remaining - e, nxt)
        return total

    if n == 1:
        bound = min((lt[0] for lt in lts), default=None)
        return [1 if bound is None or t < bound else 0 for t in range(upto + 1)]
    return [rec(0, t, lts) for t in range(upto + 1)]


@dataclass(frozen=True)
class HilbertProfile:
    counts: tuple
    dimension: int          # 0 = eventually constant, 1 = eventually linear
    degree: int
    stabilized: bool


def hilbert_profile(x, backend=None):
    """Detect staircase dimension (0 or 1) and the associated degree."""
    gb = _as_gb(x, backend)
    if not gb.basis:
        raise ValueError("zero ideal has no meaningful staircase profile")
    maxdeg = max(g.degree() for g in gb.basis)
    n = len(gb.ideal.vars)
    upto = max(2 * maxdeg * n, 6)
    hf = hilbert_function(gb, upto)
    if hf[-1] == hf[-2] == hf[-3]:
        return HilbertProfile(tuple(hf), 0, hf[-1], True)
    d1 = [b - a for a, b in zip(hf, hf[1:])]
    if d1[-1] == d1[-2] == d1[-3] and d1[-1] > 0:
        return HilbertProfile(tuple(hf), 1, d1[-1], True)
    return HilbertProfile(tuple(hf), -1, -1, False)


def projective_degree(x, proj_dim=0, backend=None):
    """Degree of a 0-dimensional scheme (constant Hilbert value) or of a
    curve (slope of the linear Hilbert growth), per `proj_dim`."""
    prof = hilbert_profile(x, backend)
    if not prof.stabilized:
        raise WrongDimension("Hilbert function did not stabilise inside the "
                             "desk-scale window: %r" % (prof.counts,))
    if proj_dim == 0:
        if prof.dimension != 0:
            raise WrongDimension("scheme is not zero-dimensional "
                                 "(Hilbert growth %r)" % (prof.counts,))
        return prof.degree
    if proj_dim == 1:
        if prof.dimension != 1:
            raise WrongDimension("scheme is not a curve "
                                 "(Hilbert counts %r)" % (prof.counts,))
        return prof.degree
    raise ValueError("proj_dim must be 0 or 1")
