# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twin of the pure-Python reduction kernels.

Same packed-monomial representation and the same API as ``_gbcore_py``;
results must be bit-identical.  Layouts whose keys do not fit in 64 bits
delegate to the pure twin.
"""

from math import gcd

from . import _gbcore_py as _py

make_layout = _py.make_layout
pack = _py.pack
unpack = _py.unpack
mono_deg = _py.mono_deg
mono_lcm = _py.mono_lcm


def okey_of(dkey, lay):
    cdef unsigned long long dk, degmask, lowall
    if not lay[6]:
        return _py.okey_of(dkey, lay)
    dk = dkey
    degmask = lay[3]
    lowall = lay[4]
    return (dk & degmask) + (lowall - (dk & lowall))


def mono_divides(a, b, lay):
    cdef unsigned long long ua, ub, guard
    if not lay[6]:
        return _py.mono_divides(a, b, lay)
    ua = a
    ub = b
    guard = lay[5]
    return ((ub | guard) - ua) & guard == guard


def poly_from_pairs(pairs, lay):
    acc = {}
    for dk, c in pairs:
        s = acc.get(dk, 0) + c
        if s:
            acc[dk] = s
        elif dk in acc:
            del acc[dk]
    out = [(okey_of(dk, lay), dk, c) for dk, c in acc.items()]
    out.sort(reverse=True)
    return out


def content(p):
    cdef Py_ssize_t i, n
    n = len(p)
    g = 0
    for i in range(n):
        g = gcd(g, p[i][2])
        if g == 1:
            return 1
    return g


def primitive(p):
    if not p:
        return p
    g = content(p)
    if p[0][2] < 0:
        g = -g
    if g == 1:
        return p
    return [(ok, dk, c // g) for ok, dk, c in p]


def scale(p, c):
    if c == 1:
        return p
    return [(ok, dk, k * c) for ok, dk, k in p]


def shift_scaled(p, m, c, lay):
    cdef unsigned long long degmask, lowall, nk, um
    if not lay[6]:
        return _py.shift_scaled(p, m, c, lay)
    if m == 0:
        return scale(p, c)
    degmask = lay[3]
    lowall = lay[4]
    um = m
    out = []
    for ok, dk, k in p:
        nk = (<unsigned long long> dk) + um
        out.append(((nk & degmask) + (lowall - (nk & lowall)), nk, k * c))
    return out


def add_scaled(p, q, cp, cq):
    cdef Py_ssize_t i = 0, j = 0, lp = len(p), lq = len(q)
    out = []
    append = out.append
    while i < lp and j < lq:
        a = p[i]
        b = q[j]
        ao = a[0]
        bo = b[0]
        if ao > bo:
            append((ao, a[1], cp * a[2]))
            i += 1
        elif ao < bo:
            append((bo, b[1], cq * b[2]))
            j += 1
        else:
            s = cp * a[2] + cq * b[2]
            if s:
                append((ao, a[1], s))
            i += 1
            j += 1
    while i < lp:
        a = p[i]
        append((a[0], a[1], cp * a[2]))
        i += 1
    while j < lq:
        b = q[j]
        append((b[0], b[1], cq * b[2]))
        j += 1
    return out


def s_polynomial(f, g, lay):
    dkf = f[0][1]
    dkg = g[0][1]
    cf = f[0][2]
    cg = g[0][2]
    lcm = mono_lcm(dkf, dkg, lay)
    sp = add_scaled(shift_scaled(f, lcm - dkf, 1, lay),
                    shift_scaled(g, lcm - dkg, 1, lay), cg, -cf)
    return primitive(sp)


def echelon_int(rows, ncols):
    """Fraction-free (Bareiss) forward elimination of integer rows."""
    cdef Py_ssize_t nrows, nc, r, c, i, j, piv
    m = [list(r_) for r_ in rows]
    nrows = len(m)
    nc = ncols
    pivots = []
    prev = 1
    r = 0
    for c in range(nc):
        piv = -1
        for i in range(r, nrows):
            if m[i][c]:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            m[r], m[piv] = m[piv], m[r]
        mr = m[r]
        p = mr[c]
        for i in range(r + 1, nrows):
            mi = m[i]
            t = mi[c]
            if t:
                for j in range(c, nc):
                    mi[j] = (p * mi[j] - t * mr[j]) // prev
            elif p != prev:
                for j in range(c, nc):
                    mi[j] = (p * mi[j]) // prev
        prev = p
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return m[:r], pivots


def reduce_primitive(f, basis, lay):
    cdef unsigned long long dk0, gdk, guard
    cdef Py_ssize_t nb, t
    cdef int steps = 0
    if not lay[6]:
        return _py.reduce_primitive(f, basis, lay)
    guard = lay[5]
    nb = len(basis)
    work = list(f)
    out = []
    while work:
        head = work[0]
        dk0 = head[1]
        hit = None
        for t in range(nb):
            g = basis[t]
            gdk = g[0][1]
            if ((dk0 | guard) - gdk) & guard == guard:
                hit = g
                break
        if hit is None:
            out.append(head)
            work = work[1:]
            continue
        c0 = head[2]
        cg = hit[0][2]
        work = add_scaled(work, shift_scaled(hit, dk0 - hit[0][1], 1, lay), cg, -c0)
        if out and cg != 1:
            out = scale(out, cg)
        steps += 1
        if steps % 16 == 0 and work:
            g2 = content(work)
            if out:
                g2 = gcd(g2, content(out))
            if g2 > 1:
                work = [(ok, dk, c // g2) for ok, dk, c in work]
                if out:
                    out = [(ok, dk, c // g2) for ok, dk, c in out]
    return primitive(out)
