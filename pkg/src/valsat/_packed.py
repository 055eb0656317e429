"""Packed engine: echelon insertion through the rational kernel.

Usable whenever the domain's elements are plain rationals (Z_(p), and Q with
the trivial valuation); the packed representation and the kernel twins live
in ``_ratkernel``/``_speedups``.  Results are bit-identical to the generic
engine: same elimination order, same content rule, same canonical fractions.
"""

from __future__ import annotations

from fractions import Fraction

from . import _backend
from .echelon import EchelonBasis
from .polyvec import Pivot, PivotIndex, PolyVec


def _pack(v: PolyVec):
    out = []
    for comp in v.comps:
        flat = []
        for c in comp:
            f = c.value
            flat.append(f.numerator)
            flat.append(f.denominator)
        out.append(flat)
    return out


def _unpack(domain, packed) -> PolyVec:
    comps = []
    for comp in packed:
        comps.append(
            tuple(
                domain.k_element(Fraction(comp[i], comp[i + 1]))
                for i in range(0, len(comp), 2)
            )
        )
    return PolyVec(domain, comps)


class PackedEngine:
    """Engine over packed rational vectors, kernel chosen at import."""

    def __init__(self, domain, kernel=None):
        self.domain = domain
        self.p = domain.packing_prime
        self.kernel = kernel if kernel is not None else _backend.kernel()
        self.name = f"packed-{_backend.kernel_name()}"
        self.cols: list = []
        self.pivs: list = []

    def __len__(self):
        return len(self.cols)

    def insert_vector(self, v: PolyVec) -> tuple[bool, bool]:
        return self._insert(_pack(v))

    def insert_shift_of(self, i: int) -> tuple[bool, bool]:
        return self._insert(self.kernel.vec_shift(self.cols[i]))

    def _insert(self, packed) -> tuple[bool, bool]:
        reduced, cn, cd = self.kernel.insert(self.cols, self.pivs, packed, self.p)
        if reduced is None:
            return False, False
        self.cols.append(reduced)
        self.pivs.append(self.kernel.vec_pivot(reduced, self.p))
        return True, not self.kernel.frac_is_unit(cn, cd, self.p)

    def pivot(self, i: int) -> tuple[int, int]:
        j, r, _, _ = self.pivs[i]
        return (j, r)

    def polyvec(self, i: int) -> PolyVec:
        return _unpack(self.domain, self.cols[i])

    def export_basis(self) -> EchelonBasis:
        columns = [self.polyvec(i) for i in range(len(self.cols))]
        pivots = [
            Pivot(PivotIndex(j, r), self.domain.k_element(Fraction(num, den)))
            for (j, r, num, den) in self.pivs
        ]
        return EchelonBasis(columns, pivots, _trusted=True)
