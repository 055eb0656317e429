"""Pure-Python rational echelon kernel.

Twin of the compiled ``_speedups`` extension; same functions, same packed
representation, bit-identical results.  A packed vector is a list of n
component lists, each storing interleaved reduced fractions
``[num0, den0, num1, den1, ...]`` (denominators positive, trailing zero
coefficients trimmed).  ``p`` is the residue prime of Z_(p), or 0 for the
trivial valuation on Q.
"""

from math import gcd


def _vp(num: int, den: int, p: int) -> int:
    v = 0
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


def frac_is_unit(num, den, p):
    if num == 0:
        return False
    if p == 0:
        return True
    return num % p != 0 and den % p != 0


def frac_divides(an, ad, bn, bd, p):
    """a | b in V for nonzero a, b: val(a) <= val(b)."""
    if p == 0:
        return True
    return _vp(an, ad, p) <= _vp(bn, bd, p)


def frac_sub(an, ad, bn, bd):
    g = gcd(ad, bd)
    if g == 1:
        return an * bd - bn * ad, ad * bd
    s = ad // g
    t = an * (bd // g) - bn * s
    g2 = gcd(t, g)
    if g2 == 1:
        return t, s * bd
    return t // g2, s * (bd // g2)


def frac_mul(an, ad, bn, bd):
    g1 = gcd(an, bd)
    if g1 > 1:
        an //= g1
        bd //= g1
    g2 = gcd(bn, ad)
    if g2 > 1:
        bn //= g2
        ad //= g2
    return an * bn, ad * bd


def frac_div(an, ad, bn, bd):
    num, den = frac_mul(an, ad, bd, bn)
    if den < 0:
        return -num, -den
    return num, den


def vec_is_zero(vec):
    return all(not comp for comp in vec)


def vec_copy(vec):
    return [list(comp) for comp in vec]


def vec_shift(vec):
    return [[0, 1] + list(comp) if comp else [] for comp in vec]


def vec_trim(vec):
    for comp in vec:
        while comp and comp[-2] == 0:
            del comp[-2:]


def vec_pivot(vec, p):
    """First unit coordinate: (j, r, num, den), or None."""
    for c, comp in enumerate(vec):
        for i in range(0, len(comp), 2):
            num = comp[i]
            if num and frac_is_unit(num, comp[i + 1], p):
                return (c + 1, i // 2, num, comp[i + 1])
    return None


def vec_content(vec, p):
    """First minimal-valuation coefficient in coordinate order."""
    bn = bd = 0
    for comp in vec:
        for i in range(0, len(comp), 2):
            num = comp[i]
            if num == 0:
                continue
            if bn == 0 or not frac_divides(bn, bd, num, comp[i + 1], p):
                bn, bd = num, comp[i + 1]
    return bn, bd


def vec_div(vec, cn, cd):
    for comp in vec:
        for i in range(0, len(comp), 2):
            if comp[i]:
                comp[i], comp[i + 1] = frac_div(comp[i], comp[i + 1], cn, cd)


def _sub_scaled(vec, col, fn, fd):
    """vec -= (fn/fd) * col, componentwise on packed lists."""
    for c, wcomp in enumerate(col):
        if not wcomp:
            continue
        comp = vec[c]
        if len(comp) < len(wcomp):
            comp.extend([0, 1] * ((len(wcomp) - len(comp)) // 2))
        for i in range(0, len(wcomp), 2):
            bn = wcomp[i]
            if bn == 0:
                continue
            pn, pd = frac_mul(bn, wcomp[i + 1], fn, fd)
            comp[i], comp[i + 1] = frac_sub(comp[i], comp[i + 1], pn, pd)
    vec_trim(vec)


def insert(cols, pivots, vec, p):
    """Strict-echelon insertion of a packed vector against a packed basis.

    Eliminates vec at each basis pivot in order, returning
    ``(None, 0, 0)`` when it dies, else ``(reduced, cont_num, cont_den)``
    with the primitive reduction and the content that was divided out.
    The caller appends the reduction to the basis.
    """
    vec = vec_copy(vec)
    vec_trim(vec)
    for col, (pj, pr, cn, cd) in zip(cols, pivots):
        comp = vec[pj - 1]
        i = 2 * pr
        if i >= len(comp):
            continue
        an = comp[i]
        if an == 0:
            continue
        fn, fd = frac_div(an, comp[i + 1], cn, cd)
        _sub_scaled(vec, col, fn, fd)
        if vec_is_zero(vec):
            return None, 0, 0
    if vec_is_zero(vec):
        return None, 0, 0
    cn, cd = vec_content(vec, p)
    vec_div(vec, cn, cd)
    return vec, cn, cd
