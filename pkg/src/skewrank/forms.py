"""Exact multivariate polynomial arithmetic over the rationals.

A :class:`Form` is a polynomial in a fixed tuple of named variables with
``fractions.Fraction`` coefficients, stored as a map from exponent vectors
to nonzero coefficients.  Forms are immutable, hashable and safe to share;
every operation returns a new value.  Terms are ordered graded reverse
lexicographically (variables in declaration order) wherever an order
matters: printing, serialisation, leading terms.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction

Q = Fraction


def degrevlex_key(exps):
    """Sort key: larger key == larger monomial in degrevlex."""
    return (sum(exps), tuple(-e for e in reversed(exps)))


class Form:
    """A polynomial with exact rational coefficients in named variables."""

    __slots__ = ("vars", "_terms", "_hash")

    def __init__(self, vars, terms=()):
        vars = tuple(str(v) for v in vars)
        if len(set(vars)) != len(vars):
            raise ValueError("duplicate variable names: %r" % (vars,))
        clean = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for exps, c in items:
            exps = tuple(int(e) for e in exps)
            if len(exps) != len(vars):
                raise ValueError("exponent vector %r does not match %d variables"
                                 % (exps, len(vars)))
            if any(e < 0 for e in exps):
                raise ValueError("negative exponent in %r" % (exps,))
            c = Q(c)
            if exps in clean:
                c = clean[exps] + c
            if c:
                clean[exps] = c
            elif exps in clean:
                del clean[exps]
        object.__setattr__(self, "vars", vars)
        object.__setattr__(self, "_terms", clean)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Form is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, vars):
        return cls(vars, ())

    @classmethod
    def constant(cls, vars, c):
        vars = tuple(vars)
        return cls(vars, [((0,) * len(vars), Q(c))])

    @classmethod
    def variable(cls, vars, name):
        vars = tuple(vars)
        i = vars.index(name)
        exps = tuple(1 if j == i else 0 for j in range(len(vars)))
        return cls(vars, [(exps, Q(1))])

    # -- inspection ----------------------------------------------------

    def is_zero(self):
        return not self._terms

    def terms(self):
        """Terms as (exponents, coefficient), degrevlex descending."""
        return [(e, self._terms[e]) for e in
                sorted(self._terms, key=degrevlex_key, reverse=True)]

    def coefficient(self, exps):
        return self._terms.get(tuple(exps), Q(0))

    def degree(self):
        """Total degree; -1 for the zero form."""
        if not self._terms:
            return -1
        return max(sum(e) for e in self._terms)

    def is_homogeneous(self, degree=None):
        if not self._terms:
            return True
        degs = {sum(e) for e in self._terms}
        if len(degs) != 1:
            return False
        return degree is None or degs == {degree}

    def leading_term(self):
        """(exponents, coefficient) of the degrevlex-largest monomial."""
        if not self._terms:
            raise ValueError("zero form has no leading term")
        e = max(self._terms, key=degrevlex_key)
        return e, self._terms[e]

    # -- ring operations ----------------------------------------------

    def _check_ring(self, other):
        if self.vars != other.vars:
            raise ValueError("ring mismatch: %r vs %r" % (self.vars, other.vars))

    def __add__(self, other):
        if not isinstance(other, Form):
            other = Form.constant(self.vars, other)
        self._check_ring(other)
        acc = dict(self._terms)
        for e, c in other._terms.items():
            s = acc.get(e, Q(0)) + c
            if s:
                acc[e] = s
            elif e in acc:
                del acc[e]
        return Form(self.vars, acc)

    __radd__ = __add__

    def __neg__(self):
        return Form(self.vars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, Form):
            other = Form.constant(self.vars, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Form):
            c = Q(other)
            if not c:
                return Form.zero(self.vars)
            return Form(self.vars, {e: k * c for e, k in self._terms.items()})
        self._check_ring(other)
        acc = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = acc.get(e, Q(0)) + c1 * c2
                if s:
                    acc[e] = s
                elif e in acc:
                    del acc[e]
        return Form(self.vars, acc)

    __rmul__ = __mul__

    def __pow__(self, n):
        n = int(n)
        if n < 0:
            raise ValueError("negative power of a form")
        result = Form.constant(self.vars, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __eq__(self, other):
        return (isinstance(other, Form) and self.vars == other.vars
                and self._terms == other._terms)

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((self.vars, tuple(sorted(self._terms.items()))))
            object.__setattr__(self, "_hash", h)
        return h

    def __bool__(self):
        return bool(self._terms)

    # -- evaluation and substitution ----------------------------------

    def evaluate(self, point):
        """Exact value at a point given as a sequence of rationals."""
        point = [Q(x) for x in point]
        if len(point) != len(self.vars):
            raise ValueError("point length %d does not match %d variables"
                             % (len(point), len(self.vars)))
        total = Q(0)
        for exps, c in self._terms.items():
            v = c
            for x, e in zip(point, exps):
                if e:
                    v *= x ** e
            total += v
        return total

    def linear_substitute(self, images):
        """Replace each variable by a linear form in a common target ring.

        Every image must be zero or homogeneous of degree 1; they must all
        live in the same ring, which becomes the ring of the result.
        """
        images = list(images)
        if len(images) != len(self.vars):
            raise ValueError("need one image per variable")
        target = None
        for g in images:
            if not isinstance(g, Form):
                raise ValueError("images must be Forms")
            if target is None:
                target = g.vars
            elif g.vars != target:
                raise ValueError("ring mismatch among images")
            if not g.is_zero() and not g.is_homogeneous(1):
                raise ValueError("non-linear image %s" % g)
        if target is None:
            raise ValueError("need one image per variable")
        out = Form.zero(target)
        for exps, c in self._terms.items():
            term = Form.constant(target, c)
            for g, e in zip(images, exps):
                if e:
                    term = term * g ** e
            out = out + term
        return out

    # -- text and JSON formats ----------------------------------------

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for exps, c in self.terms():
            factors = []
            for name, e in zip(self.vars, exps):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append("%s^%d" % (name, e))
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    def __repr__(self):
        return "Form(%r, %s)" % (list(self.vars), str(self))

    def to_json(self):
        return {
            "vars": list(self.vars),
            "terms": [
                {"exp": list(e), "num": str(c.numerator), "den": str(c.denominator)}
                for e, c in self.terms()
            ],
        }

    @classmethod
    def from_json(cls, obj):
        return cls(obj["vars"],
                   [(tuple(t["exp"]), Q(int(t["num"]), int(t["den"])))
                    for t in obj["terms"]])

    def dumps(self):
        return json.dumps(self.to_json())

    @classmethod
    def loads(cls, s):
        return cls.from_json(json.loads(s))


def variables(names):
    """The variable forms of the ring with the given names."""
    names = tuple(names)
    return tuple(Form.variable(names, n) for n in names)


# -- string grammar ----------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+/\d+|\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\^)|(\*)|(\+)|(-))")


def parse_form(text, vars):
    """Parse ``coef*var^exp*...`` terms joined by ``+``/``-``.

    Examples: ``"a"``, ``"c-b"``, ``"2*a^2*b - 3/2*c"``, ``"0"``.
    """
    vars = tuple(vars)
    index = {v: i for i, v in enumerate(vars)}
    pos = 0
    tokens = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            if text[pos:].strip():
                raise ValueError("cannot parse %r at position %d" % (text, pos))
            break
        tokens.append(m)
        pos = m.end()

    terms = []
    sign = 1
    coef = None
    exps = None

    def flush():
        nonlocal coef, exps, sign
        if exps is None:
            if coef is None:
                return
            exps = [0] * len(vars)
        c = Q(1) if coef is None else coef
        terms.append((tuple(exps), sign * c))
        coef, exps, sign = None, None, 1

    expect_exp = False
    last_var = None
    for m in tokens:
        num, name, caret, star, plus, minus = m.groups()
        if num is not None:
            value = Q(int(num.split("/")[0]), int(num.split("/")[1])) if "/" in num else Q(int(num))
            if expect_exp:
                if last_var is None or value.denominator != 1:
                    raise ValueError("bad exponent in %r" % text)
                exps[last_var] += int(value) - 1
                expect_exp = False
                last_var = None
            else:
                if exps is not None or coef is not None:
                    raise ValueError("unexpected number in %r" % text)
                coef = value
        elif name is not None:
            if expect_exp:
                raise ValueError("expected exponent in %r" % text)
            if name not in index:
                raise ValueError("unknown variable %r (ring %r)" % (name, vars))
            if exps is None:
                exps = [0] * len(vars)
            exps[index[name]] += 1
            last_var = index[name]
        elif caret is not None:
            if last_var is None:
                raise ValueError("misplaced '^' in %r" % text)
            expect_exp = True
        elif star is not None:
            continue
        else:
            if expect_exp:
                raise ValueError("expected exponent in %r" % text)
            flush()
            sign = -1 if minus is not None else 1
    if expect_exp:
        raise ValueError("dangling '^' in %r" % text)
    flush()
    if not terms:
        return Form.zero(vars)
    return Form(vars, terms)


def format_form(f):
    return str(f)


# -- univariate helpers for the binary GCD ------------------------------


def _uni_trim(u):
    while u and not u[-1]:
        u.pop()
    return u


def _uni_mod(u, v):
    """Remainder of u by v; dense little-endian Fraction lists."""
    u = list(u)
    dv = len(v) - 1
    lv = v[-1]
    while len(u) - 1 >= dv and _uni_trim(u):
        du = len(u) - 1
        if du < dv:
            break
        q = u[-1] / lv
        shift = du - dv
        for i, c in enumerate(v):
            u[i + shift] -= q * c
        u.pop()
        _uni_trim(u)
    return u


def _uni_gcd(u, v):
    u, v = _uni_trim(list(u)), _uni_trim(list(v))
    while v:
        u, v = v, _uni_mod(u, v)
    if u:
        lead = u[-1]
        u = [c / lead for c in u]
    return u


def binary_gcd(forms):
    """Greatest common divisor of homogeneous forms in two variables.

    The result is normalised so that the coefficient of the highest power
    of the first variable is 1; coprime inputs give the constant form 1.
    """
    forms = list(forms)
    if not forms:
        raise ValueError("empty input")
    ring = None
    for f in forms:
        if not isinstance(f, Form) or len(f.vars) != 2:
            raise ValueError("binary_gcd needs forms in exactly 2 variables")
        if ring is None:
            ring = f.vars
        elif f.vars != ring:
            raise ValueError("ring mismatch")
        if not f.is_homogeneous():
            raise ValueError("non-homogeneous input %s" % f)
    nonzero = [f for f in forms if not f.is_zero()]
    if not nonzero:
        raise ValueError("gcd of all-zero input")

    # f = b^(val) * hom(F) with F(t) = f(t, 1); gcd splits accordingly.
    val = None
    g = None
    for f in nonzero:
        d = f.degree()
        uni = [Q(0)] * (d + 1)
        for (ea, eb), c in f._terms.items():
            uni[ea] += c
        _uni_trim(uni)
        v = d - (len(uni) - 1)
        val = v if val is None else min(val, v)
        g = uni if g is None else _uni_gcd(g, uni)
        if val == 0 and len(g) == 1:
            break

    degg = len(g) - 1
    terms = {}
    for ea, c in enumerate(g):
        if c:
            terms[(ea, val + degg - ea)] = c
    return Form(ring, terms)
