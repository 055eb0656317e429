"""Brute-force verifiers grounded directly in the definition of saturation.

Everything here works on finite degree slices of V[X]^n, viewed as plain
free V-modules.  Saturation of a column span is computed by a two-sided
Smith-style reduction over V (row and column operations with
minimal-valuation pivoting): if A = U * diag * Q with U, Q invertible over
V, the saturation of the column span of A is spanned by the first
rank-many columns of U.  That route shares no code with the echelon
machinery it is used to check; its whole value is independence.  The same
reduction yields an exact membership test for arbitrary V-spans.

Returned bases are put into a canonical fully-reduced strict form
(ascending pivots, pivot coefficient 1, zero at every other basis pivot),
which is unique for a saturated module, so equal modules produce equal
output lists.
"""

from __future__ import annotations

from .errors import DegreeExceeded
from .polyvec import PivotIndex, PolyVec
from .valuation import content


# ---------------------------------------------------------------------------
# Slices: flat coordinate vectors over an explicit list of basis positions.

def _slice_positions(n: int, bound) -> list[PivotIndex]:
    """Positions (j, r) in PivotIndex order; bound is an int or per-component list."""
    bounds = [bound] * n if isinstance(bound, int) else list(bound)
    return [
        PivotIndex(j, r) for j in range(1, n + 1) for r in range(bounds[j - 1] + 1)
    ]


def _to_coords(v: PolyVec, positions) -> list:
    return [v.coord(at) for at in positions]


def _from_coords(domain, n: int, positions, coords) -> PolyVec:
    comps = [[] for _ in range(n)]
    for (j, r), c in zip(positions, coords):
        comp = comps[j - 1]
        while len(comp) <= r:
            comp.append(domain.zero)
        comp[r] = c
    return PolyVec(domain, comps)


# ---------------------------------------------------------------------------
# Smith-style two-sided reduction over V.

def _smith_left(cols, domain):
    """Reduce the matrix with the given columns over V.

    Returns ``(u_cols, uinv_rows, diag)`` where A = U * D * Q for invertible
    U, Q over V, ``u_cols`` are the columns of U, ``uinv_rows`` the rows of
    U^-1 and ``diag`` the nonzero diagonal of D (its length is the rank).
    """
    m = len(cols[0]) if cols else 0
    s = len(cols)
    zero, one = domain.zero, domain.one
    work = [[cols[c][i] for c in range(s)] for i in range(m)]
    u_cols = [[one if i == c else zero for i in range(m)] for c in range(m)]
    uinv_rows = [[one if i == c else zero for c in range(m)] for i in range(m)]
    diag = []
    for t in range(min(m, s)):
        pos = _min_valuation_entry(work, t)
        if pos is None:
            break
        pi, pj = pos
        if pi != t:
            work[t], work[pi] = work[pi], work[t]
            u_cols[t], u_cols[pi] = u_cols[pi], u_cols[t]
            uinv_rows[t], uinv_rows[pi] = uinv_rows[pi], uinv_rows[t]
        if pj != t:
            for row in work:
                row[t], row[pj] = row[pj], row[t]
        pivot = work[t][t]
        for i in range(t + 1, m):
            e = work[i][t]
            if e.is_zero():
                continue
            f = e.div_exact(pivot)
            work[i] = [a - f * b for a, b in zip(work[i], work[t])]
            u_cols[t] = [a + f * b for a, b in zip(u_cols[t], u_cols[i])]
            uinv_rows[i] = [a - f * b for a, b in zip(uinv_rows[i], uinv_rows[t])]
        for j in range(t + 1, s):
            e = work[t][j]
            if e.is_zero():
                continue
            g = e.div_exact(pivot)
            for row in work:
                row[j] = row[j] - g * row[t]
        diag.append(pivot)
    return u_cols, uinv_rows, diag


def _min_valuation_entry(work, t):
    """First (row-major) nonzero entry of minimal valuation in work[t:, t:]."""
    best = None
    pos = None
    for i in range(t, len(work)):
        for j in range(t, len(work[i])):
            e = work[i][j]
            if e.is_zero():
                continue
            if best is None or not best.divides(e):
                best, pos = e, (i, j)
    return pos


def _span_contains(cols, vectors, domain) -> bool:
    """Whether every coordinate vector in ``vectors`` lies in the V-span of cols."""
    nz = [c for c in cols if any(not x.is_zero() for x in c)]
    if not nz:
        return all(all(x.is_zero() for x in v) for v in vectors)
    _, uinv_rows, diag = _smith_left(nz, domain)
    r = len(diag)
    for v in vectors:
        y = [sum((a * b for a, b in zip(row, v)), domain.zero) for row in uinv_rows]
        for t, yt in enumerate(y):
            if t < r:
                if not diag[t].divides(yt):
                    return False
            elif not yt.is_zero():
                return False
    return True


def _canonical_basis(cols, domain):
    """Unique fully-reduced strict basis of the saturated span of cols.

    The columns must be V-independent with saturated span (as produced by
    ``_smith_left``).  Forward insertion makes the family strictly echelon,
    then a descending sweep scales pivot coefficients to 1 and clears every
    pivot position from all other columns.
    """
    basis = []
    for col in cols:
        col = list(col)
        for bcol, bpos, bcoef in basis:
            c = col[bpos]
            if not c.is_zero():
                f = c / bcoef
                col = [a - f * b for a, b in zip(col, bcol)]
        u, _ = content(col)
        col = [x.div_exact(u) for x in col]
        pos = next(i for i, x in enumerate(col) if x.is_unit())
        basis.append((col, pos, col[pos]))
    basis.sort(key=lambda b: b[1])
    for i in range(len(basis) - 1, -1, -1):
        col, pos, coef = basis[i]
        col = [x.div_exact(coef) for x in col]
        basis[i] = (col, pos, col[pos])
        for j in range(len(basis)):
            if j == i:
                continue
            other, opos, ocoef = basis[j]
            c = other[pos]
            if not c.is_zero():
                other = [a - c * b for a, b in zip(other, col)]
                basis[j] = (other, opos, other[opos])
    return [col for col, _, _ in basis]


# ---------------------------------------------------------------------------
# Public oracles.

def brute_saturation(F, D: int) -> list[PolyVec]:
    """V-basis of (K-span of F) intersected with the degree-D slice of V[X]^n.

    Every column of F must fit in the slice (DegreeExceeded otherwise); D is
    a pure slice bound and no X-shifting happens here; callers verifying
    the V[X]-saturation pass the shifted family explicitly.  The result is
    canonical, hence independent of the presentation of the span.
    """
    F = list(F)
    if not F:
        return []
    domain = F[0].domain
    n = F[0].n
    for f in F:
        if f.degree() > D:
            raise DegreeExceeded(f"degree {f.degree()} exceeds slice bound {D}")
    positions = _slice_positions(n, D)
    cols = [_to_coords(f, positions) for f in F if not f.is_zero()]
    if not cols:
        return []
    u_cols, _, diag = _smith_left(cols, domain)
    canon = _canonical_basis(u_cols[: len(diag)], domain)
    return [_from_coords(domain, n, positions, c) for c in canon]


def in_v_span(cols, vectors) -> bool:
    """Whether every vector lies in the V-span of the given PolyVec columns."""
    cols = list(cols)
    vectors = list(vectors)
    if not vectors:
        return True
    if not cols:
        return all(v.is_zero() for v in vectors)
    domain = cols[0].domain
    n = cols[0].n
    D = max(v.degree() for v in cols + vectors)
    positions = _slice_positions(n, max(D, 0))
    return _span_contains(
        [_to_coords(c, positions) for c in cols],
        [_to_coords(v, positions) for v in vectors],
        domain,
    )


def spans_equal(A, B) -> bool:
    """Whether two families of vectors generate the same V-module."""
    return in_v_span(B, A) and in_v_span(A, B)


def in_vx_span(generators, vectors, bound: int, max_extra: int = 10) -> bool:
    """Whether every vector lies in the V[X]-span of the generators.

    Realised through V-spans of bounded shift families: membership in the
    span of {X^r g : deg <= bound + extra} is an exact witness.  The bound
    is raised up to ``max_extra`` times because a V[X]-combination of total
    degree <= bound may cancel through higher-degree shift terms; a miss at
    every bound is reported as non-membership.
    """
    from .polyvec import x_shifts

    gens = [g for g in generators if not g.is_zero()]
    vectors = list(vectors)
    if not vectors:
        return True
    if not gens:
        return all(v.is_zero() for v in vectors)
    for extra in range(max_extra + 1):
        if in_v_span(x_shifts(gens, bound + extra), vectors):
            return True
    return False


def saturation_slice(S, D: int, max_extra: int = 24, patience: int = 3) -> list[PolyVec]:
    """Canonical V-basis of Sat(V[X]-span(S)) on the degree-D slice.

    The saturation of the V[X]-span of S is the K-span of all X-shifts of S
    intersected with V[X]^n.  On a finite slice the K-span needs witnesses
    of degree possibly above D (combinations whose high terms cancel), so
    shifts up to D + extra are used and extra is raised until the
    restricted K-span stops growing for ``patience`` consecutive steps;
    the restriction is then intersected with the V-slice via the same
    Smith-based route as ``brute_saturation``.
    """
    from .polyvec import x_shifts

    S = [v for v in S if not v.is_zero()]
    if not S:
        return []
    domain = S[0].domain
    n = S[0].n
    inside = _slice_positions(n, D)
    best: list | None = None
    best_rank = -1
    stable = 0
    for extra in range(max_extra + 1):
        top = D + extra
        positions = _slice_positions(n, top)
        fam = x_shifts(S, top)
        cols = [_to_coords(f, positions) for f in fam]
        outside_idx = [i for i, at in enumerate(positions) if at.exponent > D]
        inside_idx = [i for i, at in enumerate(positions) if at.exponent <= D]
        out_rows = [[col[i] for col in cols] for i in outside_idx]
        if out_rows:
            null = _nullspace_over_k(out_rows, domain)
        else:
            null = [[domain.one if i == j else domain.zero for i in range(len(cols))]
                    for j in range(len(cols))]
        restricted = []
        for c in null:
            w = []
            for i in inside_idx:
                acc = domain.zero
                for col, cj in zip(cols, c):
                    if not cj.is_zero():
                        acc = acc + col[i] * cj
                w.append(acc)
            if any(not x.is_zero() for x in w):
                restricted.append(w)
        rank = _k_rank(restricted, domain)
        if rank == best_rank:
            stable += 1
            if stable >= patience:
                break
        else:
            best_rank = rank
            best = restricted
            stable = 0
    if not best:
        return []
    scaled = [_scale_into_v(w, domain) for w in best]
    u_cols, _, diag = _smith_left(scaled, domain)
    canon = _canonical_basis(u_cols[: len(diag)], domain)
    return [_from_coords(domain, n, inside, c) for c in canon]


def _k_rank(cols, domain) -> int:
    if not cols:
        return 0
    rows = [[col[i] for col in cols] for i in range(len(cols[0]))]
    return len(cols) - len(_nullspace_over_k(rows, domain))


def brute_syzygies(U, D: int) -> list[PolyVec]:
    """Canonical V-basis of the degree-bounded slice of the syzygy module.

    U is the family u_1..u_n in V[X]^k; solutions f with sum f_j u_j = 0 are
    enumerated with per-component bounds deg(f_j) <= D + d_U - deg(u_j)
    (d_U the largest degree in U), i.e. every product stays within degree
    D + d_U.  The K-solution space of the resulting exact linear system is
    intersected with the V-slice via the same Smith-based saturation used by
    ``brute_saturation``.
    """
    U = list(U)
    if not U:
        return []
    domain = U[0].domain
    n = len(U)
    k = U[0].n
    d_u = max((u.degree() for u in U if not u.is_zero()), default=0)
    bounds = [D + d_u - (u.degree() if not u.is_zero() else 0) for u in U]
    positions = _slice_positions(n, bounds)
    e_max = D + d_u
    rows = []
    for i in range(1, k + 1):
        for e in range(e_max + 1):
            row = []
            for (j, r) in positions:
                row.append(U[j - 1].coord(PivotIndex(i, e - r))
                           if 0 <= e - r else domain.zero)
            rows.append(row)
    nullspace = _nullspace_over_k(rows, domain)
    if not nullspace:
        return []
    scaled = [_scale_into_v(vec, domain) for vec in nullspace]
    u_cols, _, diag = _smith_left(scaled, domain)
    canon = _canonical_basis(u_cols[: len(diag)], domain)
    return [_from_coords(domain, n, positions, c) for c in canon]


def _nullspace_over_k(rows, domain):
    """K-basis of the nullspace of the matrix, by plain reduced elimination."""
    m = len(rows)
    s = len(rows[0]) if m else 0
    work = [list(r) for r in rows]
    pivot_of_col: dict[int, int] = {}
    rank = 0
    for j in range(s):
        pr = None
        for i in range(rank, m):
            if not work[i][j].is_zero():
                pr = i
                break
        if pr is None:
            continue
        work[rank], work[pr] = work[pr], work[rank]
        inv = work[rank][j]
        work[rank] = [x / inv for x in work[rank]]
        for i in range(m):
            if i == rank:
                continue
            c = work[i][j]
            if not c.is_zero():
                work[i] = [a - c * b for a, b in zip(work[i], work[rank])]
        pivot_of_col[j] = rank
        rank += 1
    zero, one = domain.zero, domain.one
    basis = []
    for j in range(s):
        if j in pivot_of_col:
            continue
        vec = [zero] * s
        vec[j] = one
        for pj, pi in pivot_of_col.items():
            vec[pj] = -work[pi][j]
        basis.append(vec)
    return basis


def _scale_into_v(coords, domain):
    """Scale a K-coordinate vector by a uniformizer power into a V-vector."""
    vals = [c.valuation() for c in coords if not c.is_zero()]
    if not vals:
        return list(coords)
    m = min(vals)
    if m == 0:
        return list(coords)
    pi = domain.uniformizer()
    if pi is None:
        return list(coords)
    alpha = domain.one
    step = pi if m < 0 else domain.one / pi
    for _ in range(abs(m)):
        alpha = alpha * step
    return [c * alpha for c in coords]
