"""Pure-Python polynomial reduction kernels.

Monomials are packed into single integers: one B-bit field per variable
plus the total degree in the top field.  Two keys are used per monomial:
``dkey`` holds the raw exponents (additive under multiplication, guard-bit
divisibility test) and ``okey`` orders monomials graded reverse
lexicographically as plain integers.  A polynomial is a list of
``(okey, dkey, coeff)`` triples, descending in okey, with nonzero integer
coefficients.

The compiled twin in ``_gbcore.pyx`` implements the same API and must
produce identical results.
"""

from math import gcd


def make_layout(nvars):
    """Packing parameters for a ring with `nvars` variables."""
    n = int(nvars)
    if n < 1:
        raise ValueError("need at least one variable")
    B = min(16, 63 // (n + 1))
    if B < 8:
        B = 8
    mask = (1 << B) - 1
    degshift = n * B
    lowall = 0
    guard = 0
    for i in range(n):
        lowall |= mask << (i * B)
    for i in range(n + 1):
        guard |= 1 << ((i + 1) * B - 1)
    degmask = mask << degshift
    return (n, B, degshift, degmask, lowall, guard, (n + 1) * B <= 63)


def pack(exps, lay):
    n, B, degshift = lay[0], lay[1], lay[2]
    if len(exps) != n:
        raise ValueError("exponent length mismatch")
    cap = 1 << (B - 1)
    dkey = 0
    total = 0
    for i, e in enumerate(exps):
        if e < 0 or e >= cap:
            raise ValueError("exponent %d out of packing range" % e)
        dkey |= e << (i * B)
        total += e
    if total >= cap:
        raise ValueError("degree %d out of packing range" % total)
    return dkey | (total << degshift)


def unpack(dkey, lay):
    n, B = lay[0], lay[1]
    mask = (1 << B) - 1
    return tuple((dkey >> (i * B)) & mask for i in range(n))


def okey_of(dkey, lay):
    degmask, lowall = lay[3], lay[4]
    return (dkey & degmask) + (lowall - (dkey & lowall))


def mono_deg(dkey, lay):
    return dkey >> lay[2]


def mono_divides(a, b, lay):
    """True when monomial a divides monomial b."""
    guard = lay[5]
    return ((b | guard) - a) & guard == guard


def mono_lcm(a, b, lay):
    n, B, degshift = lay[0], lay[1], lay[2]
    mask = (1 << B) - 1
    out = 0
    total = 0
    for i in range(n):
        e = max((a >> (i * B)) & mask, (b >> (i * B)) & mask)
        out |= e << (i * B)
        total += e
    return out | (total << degshift)


def poly_from_pairs(pairs, lay):
    """Build a polynomial from (dkey, coeff) pairs (merges duplicates)."""
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
    g = 0
    for _, _, c in p:
        g = gcd(g, c)
        if g == 1:
            return 1
    return g


def primitive(p):
    """Strip integer content; make the leading coefficient positive."""
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
    """p times the monomial m times the integer c (order is preserved)."""
    degmask, lowall = lay[3], lay[4]
    if m == 0:
        return scale(p, c)
    out = []
    for ok, dk, k in p:
        nk = dk + m
        out.append(((nk & degmask) + (lowall - (nk & lowall)), nk, k * c))
    return out


def add_scaled(p, q, cp, cq):
    """cp*p + cq*q, merged; returns a fresh sorted list."""
    out = []
    i = j = 0
    lp, lq = len(p), len(q)
    while i < lp and j < lq:
        a, b = p[i], q[j]
        if a[0] > b[0]:
            out.append((a[0], a[1], cp * a[2]))
            i += 1
        elif a[0] < b[0]:
            out.append((b[0], b[1], cq * b[2]))
            j += 1
        else:
            s = cp * a[2] + cq * b[2]
            if s:
                out.append((a[0], a[1], s))
            i += 1
            j += 1
    while i < lp:
        a = p[i]
        out.append((a[0], a[1], cp * a[2]))
        i += 1
    while j < lq:
        b = q[j]
        out.append((b[0], b[1], cq * b[2]))
        j += 1
    return out


def s_polynomial(f, g, lay):
    """Primitive S-polynomial of two primitive polynomials."""
    dkf, dkg = f[0][1], g[0][1]
    cf, cg = f[0][2], g[0][2]
    lcm = mono_lcm(dkf, dkg, lay)
    sp = add_scaled(shift_scaled(f, lcm - dkf, 1, lay),
                    shift_scaled(g, lcm - dkg, 1, lay), cg, -cf)
    return primitive(sp)


def echelon_int(rows, ncols):
    """Fraction-free (Bareiss) forward elimination of integer rows.

    Returns (echelon_rows, pivot_cols); entries stay integers, row i has
    its pivot at pivot_cols[i].  The input is not modified.
    """
    m = [list(r) for r in rows]
    nrows = len(m)
    pivots = []
    prev = 1
    r = 0
    for c in range(ncols):
        piv = -1
        for i in range(r, nrows):
            if m[i][c]:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            m[r], m[piv] = m[piv], m[r]
        p = m[r][c]
        for i in range(r + 1, nrows):
            mi = m[i]
            mr = m[r]
            t = mi[c]
            if t:
                for j in range(c, ncols):
                    mi[j] = (p * mi[j] - t * mr[j]) // prev
            elif p != prev:
                for j in range(c, ncols):
                    mi[j] = (p * mi[j]) // prev
        prev = p
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return m[:r], pivots


def reduce_primitive(f, basis, lay):
    """Full normal form of f modulo basis, returned primitive.

    The divisor for each step is the first basis element (in list order)
    whose leading monomial divides the current leading monomial; ties and
    ordering are therefore deterministic.
    """
    work = list(f)
    out = []
    steps = 0
    while work:
        dk0 = work[0][1]
        c0 = work[0][2]
        hit = None
        for g in basis:
            if mono_divides(g[0][1], dk0, lay):
                hit = g
                break
        if hit is None:
            out.append(work[0])
            work = work[1:]
            continue
        cg = hit[0][2]
        work = add_scaled(work, shift_scaled(hit, dk0 - hit[0][1], 1, lay), cg, -c0)
        if out and cg != 1:
            out = scale(out, cg)
        steps += 1
        if steps % 16 == 0 and work:
            g = content(work)
            if out:
                g = gcd(g, content(out))
            if g > 1:
                work = [(ok, dk, c // g) for ok, dk, c in work]
                if out:
                    out = [(ok, dk, c // g) for ok, dk, c in out]
    return primitive(out)
