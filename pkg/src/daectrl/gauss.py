"""Gaussian elimination without row switching and the explicit kernel map.

This mirrors the elimination operator T = T_{l-1} o ... o T_0 and the
back-substitution kernel columns z^i used in the genericity proof for
strong controllability. It exists to validate that construction against
the general-purpose kernel_basis; the concept criteria never call it.

Pivot steps are indexed from 1 (the composite applies steps 1..l-1).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from .matrix import RatMatrix


class PivotError(ValueError):
    def __init__(self, k: int):
        super().__init__(f"zero pivot at elimination step {k}")
        self.k = k


@dataclass(frozen=True)
class TDomainReport:
    """Whether E lies in dom T, and where elimination first stalled."""

    in_domain: bool
    failed_step: Optional[int] = None
    # pivot (TE)_{l,l}; nonzero means E is additionally in dom T'
    last_pivot: Optional[Fraction] = None

    def __post_init__(self):
        if self.in_domain == (self.failed_step is not None):
            raise ValueError("failed_step present iff not in domain")

    @property
    def in_domain_t_prime(self) -> bool:
        return self.in_domain and self.last_pivot is not None and self.last_pivot != 0


def t_step(E: RatMatrix, k: int) -> RatMatrix:
    """One elimination step: rows 1..k unchanged, rows below k get
    row_i - (E[i,k]/E[k,k]) * row_k. k is 1-based, 1 <= k <= rows-1."""
    if not 1 <= k <= E.rows - 1:
        raise ValueError(f"step index {k} outside 1..{E.rows - 1}")
    piv = E[k - 1, k - 1]
    if piv == 0:
        raise PivotError(k)
    m = E.to_lists()
    for i in range(k, E.rows):
        f = m[i][k - 1] / piv
        if f != 0:
            m[i] = [a - f * b for a, b in zip(m[i], m[k - 1])]
    return RatMatrix.from_rows(m, cols=E.cols)


def apply_T(E: RatMatrix) -> Tuple[RatMatrix, TDomainReport]:
    """Apply T_{l-1} o ... o T_1 (T_0 is the identity).

    Failure is reported, not raised: failed_step is the first k whose
    pivot vanished, and the partially eliminated matrix is returned.
    For l = 1 the composite is the identity and dom T is everything.
    """
    if E.rows > E.cols:
        raise ValueError("apply_T expects rows <= cols")
    cur = E
    for k in range(1, E.rows):
        try:
            cur = t_step(cur, k)
        except PivotError:
            return cur, TDomainReport(False, failed_step=k)
    last = cur[E.rows - 1, E.rows - 1] if E.rows >= 1 else None
    return cur, TDomainReport(True, last_pivot=last)


def backsub_kernel(E: RatMatrix) -> RatMatrix:
    """Kernel basis from the staircase back-substitution recursion.

    Column i has a 1 in position l+i, zeros in the other free positions,
    and the top l entries solved row by row from the bottom of the
    staircase. Requires rows < cols and E in dom T'."""
    l, n = E.rows, E.cols
    if l >= n:
        raise ValueError("backsub_kernel needs rows < cols")
    U, rep = apply_T(E)
    if not rep.in_domain_t_prime:
        raise ValueError("matrix not in dom T'")
    cols = []
    for i in range(1, n - l + 1):
        z = [Fraction(0)] * n
        z[l + i - 1] = Fraction(1)
        for j in range(l, 0, -1):
            s = U[j - 1, l + i - 1]
            for k in range(j + 1, l + 1):
                s += U[j - 1, k - 1] * z[k - 1]
            z[j - 1] = -s / U[j - 1, j - 1]
        cols.append(z)
    return RatMatrix(n, n - l, [c[i] for i in range(n) for c in cols])
