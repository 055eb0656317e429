# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled rational echelon kernel.

Twin of ``valsat._ratkernel`` (same functions, same packed representation,
bit-identical results); see that module for the data-layout contract.
Numerators and denominators stay arbitrary-precision Python ints; the win
over the pure twin is the removal of interpreter overhead in the
per-coefficient loops.
"""

from math import gcd as _py_gcd

cdef object gcd = _py_gcd


cdef long long _vp(object num, object den, long long p):
    cdef long long v = 0
    n = num
    while n % p == 0:
        n //= p
        v += 1
    if v:
        return v
    d = den
    while d % p == 0:
        d //= p
        v -= 1
    return v


cpdef bint frac_is_unit(object num, object den, long long p):
    if num == 0:
        return False
    if p == 0:
        return True
    return num % p != 0 and den % p != 0


cpdef bint frac_divides(object an, object ad, object bn, object bd, long long p):
    """a | b in V for nonzero a, b: val(a) <= val(b)."""
    if p == 0:
        return True
    return _vp(an, ad, p) <= _vp(bn, bd, p)


cpdef tuple frac_sub(object an, object ad, object bn, object bd):
    g = gcd(ad, bd)
    if g == 1:
        return an * bd - bn * ad, ad * bd
    s = ad // g
    t = an * (bd // g) - bn * s
    g2 = gcd(t, g)
    if g2 == 1:
        return t, s * bd
    return t // g2, s * (bd // g2)


cpdef tuple frac_mul(object an, object ad, object bn, object bd):
    g1 = gcd(an, bd)
    if g1 > 1:
        an //= g1
        bd //= g1
    g2 = gcd(bn, ad)
    if g2 > 1:
        bn //= g2
        ad //= g2
    return an * bn, ad * bd


cpdef tuple frac_div(object an, object ad, object bn, object bd):
    num, den = frac_mul(an, ad, bd, bn)
    if den < 0:
        return -num, -den
    return num, den


cpdef bint vec_is_zero(list vec):
    cdef list comp
    for comp in vec:
        if comp:
            return False
    return True


cpdef list vec_copy(list vec):
    cdef list comp
    return [list(comp) for comp in vec]


cpdef list vec_shift(list vec):
    cdef list comp
    return [[0, 1] + comp if comp else [] for comp in vec]


cpdef vec_trim(list vec):
    cdef list comp
    for comp in vec:
        while comp and comp[len(comp) - 2] == 0:
            del comp[len(comp) - 2:]


cpdef vec_pivot(list vec, long long p):
    """First unit coordinate: (j, r, num, den), or None."""
    cdef Py_ssize_t c, i
    cdef list comp
    for c in range(len(vec)):
        comp = vec[c]
        for i in range(0, len(comp), 2):
            num = comp[i]
            if num != 0 and frac_is_unit(num, comp[i + 1], p):
                return (c + 1, i // 2, num, comp[i + 1])
    return None


cpdef tuple vec_content(list vec, long long p):
    """First minimal-valuation coefficient in coordinate order."""
    cdef Py_ssize_t i
    cdef list comp
    bn = 0
    bd = 0
    for comp in vec:
        for i in range(0, len(comp), 2):
            num = comp[i]
            if num == 0:
                continue
            if bn == 0 or not frac_divides(bn, bd, num, comp[i + 1], p):
                bn = num
                bd = comp[i + 1]
    return bn, bd


cpdef vec_div(list vec, object cn, object cd):
    cdef Py_ssize_t i
    cdef list comp
    for comp in vec:
        for i in range(0, len(comp), 2):
            if comp[i] != 0:
                comp[i], comp[i + 1] = frac_div(comp[i], comp[i + 1], cn, cd)


cdef _sub_scaled(list vec, list col, object fn, object fd):
    cdef Py_ssize_t c, i, pad
    cdef list comp, wcomp
    for c in range(len(col)):
        wcomp = col[c]
        if not wcomp:
            continue
        comp = vec[c]
        if len(comp) < len(wcomp):
            for pad in range((len(wcomp) - len(comp)) // 2):
                comp.append(0)
                comp.append(1)
        for i in range(0, len(wcomp), 2):
            bn = wcomp[i]
            if bn == 0:
                continue
            pn, pd = frac_mul(bn, wcomp[i + 1], fn, fd)
            comp[i], comp[i + 1] = frac_sub(comp[i], comp[i + 1], pn, pd)
    vec_trim(vec)


cpdef tuple insert(list cols, list pivots, list vec, long long p):
    """Strict-echelon insertion; see valsat._ratkernel.insert."""
    cdef Py_ssize_t w, i
    cdef long long pj, pr
    cdef list comp, col
    vec = vec_copy(vec)
    vec_trim(vec)
    for w in range(len(cols)):
        col = cols[w]
        piv = pivots[w]
        pj = piv[0]
        pr = piv[1]
        comp = vec[pj - 1]
        i = 2 * pr
        if i >= len(comp):
            continue
        an = comp[i]
        if an == 0:
            continue
        fn, fd = frac_div(an, comp[i + 1], piv[2], piv[3])
        _sub_scaled(vec, col, fn, fd)
        if vec_is_zero(vec):
            return None, 0, 0
    if vec_is_zero(vec):
        return None, 0, 0
    cn, cd = vec_content(vec, p)
    vec_div(vec, cn, cd)
    return vec, cn, cd
