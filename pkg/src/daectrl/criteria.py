"""Concept predicates for linear differential-algebraic systems (E, A, B).

Eight DAE controllability/stabilizability concepts plus the classical
Kalman test for square ODE systems, each decided exactly from block ranks
and pencil rank certificates, together with the closed-form table saying
for which dimensions (l, n, m) each concept is generic.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Dict, Optional

from .algebra import Poly
from .matrix import RatMatrix, hconcat, parse_matrix
from .algebra import hurwitz_stable
from .pencil import build_pencil, generic_rank, minor_gcd

AS_WRITTEN = "as-written"
WITH_E = "with-e"


def _pencil_certificate(pm, d):
    """(gcd of order-d minors, holds everywhere, holds on Re >= 0).

    d must not exceed min(pm.rows, pm.cols). A zero gcd means rank < d at
    every point; a nonzero constant means no drop point at all; otherwise
    the drop points are exactly the gcd roots and the half-plane verdict
    is the Hurwitz test.
    """
    g = minor_gcd(pm, d)
    if d == 0:
        return g, True, True
    if g.is_zero():
        return g, False, False
    if g.is_constant():
        return g, True, True
    return g, False, hurwitz_stable(g)


class Concept(enum.Enum):
    FREELY_INITIALIZABLE = "freely_initializable"
    IMPULSE_CONTROLLABLE = "impulse_controllable"
    COMPLETELY_CONTROLLABLE = "completely_controllable"
    BEHAVIOURALLY_CONTROLLABLE = "behaviourally_controllable"
    STRONGLY_CONTROLLABLE = "strongly_controllable"
    COMPLETELY_STABILIZABLE = "completely_stabilizable"
    STRONGLY_STABILIZABLE = "strongly_stabilizable"
    BEHAVIOURALLY_STABILIZABLE = "behaviourally_stabilizable"
    ODE_CONTROLLABLE = "ode_controllable"


DAE_CONCEPTS = [c for c in Concept if c is not Concept.ODE_CONTROLLABLE]


@dataclass(frozen=True)
class DaeTriple:
    """A system (E, A, B) with E, A of shape l x n and B of shape l x m."""

    E: RatMatrix
    A: RatMatrix
    B: RatMatrix

    def __post_init__(self):
        if self.E.rows != self.A.rows or self.E.cols != self.A.cols:
            raise ValueError("E and A must share dimensions")
        if self.B.rows != self.E.rows:
            raise ValueError("B row count must match E")
        if min(self.E.rows, self.E.cols, self.B.cols) < 1:
            raise ValueError("l, n, m must all be at least 1")

    @property
    def l(self) -> int:
        return self.E.rows

    @property
    def n(self) -> int:
        return self.E.cols

    @property
    def m(self) -> int:
        return self.B.cols

    @staticmethod
    def from_strings(obj) -> "DaeTriple":
        for key in ("E", "A", "B"):
            if key not in obj:
                raise ValueError(f"missing block {key!r}")
        try:
            E = parse_matrix(obj["E"])
            A = parse_matrix(obj["A"])
            B = parse_matrix(obj["B"])
        except (ValueError, ZeroDivisionError, TypeError) as exc:
            raise ValueError(f"bad matrix data: {exc}") from exc
        if (E.rows, E.cols) != (A.rows, A.cols):
            raise ValueError("dimension error in block A: must match E")
        if B.rows != E.rows:
            raise ValueError("dimension error in block B: row count must match E")
        return DaeTriple(E, A, B)


@dataclass
class ConceptReport:
    concept: Concept
    verdict: bool
    ranks: Dict[str, int] = field(default_factory=dict)
    drop_polynomial: Optional[Poly] = None


def freely_initializable(t: DaeTriple) -> ConceptReport:
    """rk [E, B] = rk [E, A, B]."""
    r_eb = hconcat([t.E, t.B]).rank()
    r_eab = hconcat([t.E, t.A, t.B]).rank()
    return ConceptReport(
        Concept.FREELY_INITIALIZABLE,
        r_eb == r_eab,
        {"rk[E,B]": r_eb, "rk[E,A,B]": r_eab},
    )


def impulse_controllable(t: DaeTriple) -> ConceptReport:
    """rk [E, A, B] = rk [E, AZ, B] with im Z = ker E."""
    Z = t.E.kernel_basis()
    r_eab = hconcat([t.E, t.A, t.B]).rank()
    r_eazb = hconcat([t.E, t.A @ Z, t.B]).rank()
    return ConceptReport(
        Concept.IMPULSE_CONTROLLABLE,
        r_eab == r_eazb,
        {"rk[E,A,B]": r_eab, "rk[E,AZ,B]": r_eazb},
    )


def completely_controllable(t: DaeTriple) -> ConceptReport:
    """rk [E, A, B] = rk [E, B] = rk [lambda E - A, B] for all complex lambda."""
    r = hconcat([t.E, t.A, t.B]).rank()
    r_eb = hconcat([t.E, t.B]).rank()
    pm = build_pencil(t.E, t.A, t.B)
    g = generic_rank(pm)
    drop, everywhere = None, False
    if g == r:
        drop, everywhere, _ = _pencil_certificate(pm, r)
    ok = r_eb == r and everywhere
    return ConceptReport(
        Concept.COMPLETELY_CONTROLLABLE,
        ok,
        {"rk[E,A,B]": r, "rk[E,B]": r_eb, "generic_pencil_rank": g},
        drop_polynomial=drop,
    )


def behaviourally_controllable(t: DaeTriple) -> ConceptReport:
    """Generic pencil rank is attained at every complex lambda."""
    pm = build_pencil(t.E, t.A, t.B)
    g = generic_rank(pm)
    drop, everywhere, _ = _pencil_certificate(pm, g)
    return ConceptReport(
        Concept.BEHAVIOURALLY_CONTROLLABLE,
        everywhere,
        {"generic_pencil_rank": g},
        drop_polynomial=drop,
    )


def strongly_controllable(t: DaeTriple, variant: str = AS_WRITTEN) -> ConceptReport:
    """rk [E, A, B] = rk [AZ, B] = rk [lambda E - A, B] for all lambda.

    variant "as-written" uses [AZ, B] for the middle block; "with-e"
    uses [E, AZ, B] (the form the strong-stabilizability criterion uses).
    """
    if variant not in (AS_WRITTEN, WITH_E):
        raise ValueError(f"unknown variant {variant!r}")
    Z = t.E.kernel_basis()
    r = hconcat([t.E, t.A, t.B]).rank()
    if variant == AS_WRITTEN:
        mid_name = "rk[AZ,B]"
        mid = hconcat([t.A @ Z, t.B]).rank()
    else:
        mid_name = "rk[E,AZ,B]"
        mid = hconcat([t.E, t.A @ Z, t.B]).rank()
    pm = build_pencil(t.E, t.A, t.B)
    g = generic_rank(pm)
    drop, everywhere = None, False
    if g == r:
        drop, everywhere, _ = _pencil_certificate(pm, r)
    ok = mid == r and everywhere
    return ConceptReport(
        Concept.STRONGLY_CONTROLLABLE,
        ok,
        {"rk[E,A,B]": r, mid_name: mid, "generic_pencil_rank": g},
        drop_polynomial=drop,
    )


def completely_stabilizable(t: DaeTriple) -> ConceptReport:
    """Complete controllability with lambda restricted to Re >= 0."""
    r = hconcat([t.E, t.A, t.B]).rank()
    r_eb = hconcat([t.E, t.B]).rank()
    pm = build_pencil(t.E, t.A, t.B)
    g = generic_rank(pm)
    drop, on_rhp = None, False
    if g == r:
        drop, _, on_rhp = _pencil_certificate(pm, r)
    ok = r_eb == r and on_rhp
    return ConceptReport(
        Concept.COMPLETELY_STABILIZABLE,
        ok,
        {"rk[E,A,B]": r, "rk[E,B]": r_eb, "generic_pencil_rank": g},
        drop_polynomial=drop,
    )


def strongly_stabilizable(t: DaeTriple) -> ConceptReport:
    """rk [E, A, B] = rk [E, AZ, B] = rk [lambda E - A, B] on Re >= 0."""
    Z = t.E.kernel_basis()
    r = hconcat([t.E, t.A, t.B]).rank()
    r_eazb = hconcat([t.E, t.A @ Z, t.B]).rank()
    pm = build_pencil(t.E, t.A, t.B)
    g = generic_rank(pm)
    drop, on_rhp = None, False
    if g == r:
        drop, _, on_rhp = _pencil_certificate(pm, r)
    ok = r_eazb == r and on_rhp
    return ConceptReport(
        Concept.STRONGLY_STABILIZABLE,
        ok,
        {"rk[E,A,B]": r, "rk[E,AZ,B]": r_eazb, "generic_pencil_rank": g},
        drop_polynomial=drop,
    )


def behaviourally_stabilizable(t: DaeTriple) -> ConceptReport:
    """Generic pencil rank is attained at every lambda with Re >= 0."""
    pm = build_pencil(t.E, t.A, t.B)
    g = generic_rank(pm)
    drop, _, on_rhp = _pencil_certificate(pm, g)
    return ConceptReport(
        Concept.BEHAVIOURALLY_STABILIZABLE,
        on_rhp,
        {"generic_pencil_rank": g},
        drop_polynomial=drop,
    )


def kalman_controllable(A: RatMatrix, B: RatMatrix) -> ConceptReport:
    """Kalman criterion: rk [B, AB, ..., A^(n-1) B] = n."""
    if A.rows != A.cols:
        raise ValueError("Kalman test needs a square A")
    if B.rows != A.rows:
        raise ValueError("B row count must match A")
    n = A.rows
    blocks = []
    cur = B
    for _ in range(n):
        blocks.append(cur)
        cur = A @ cur
    r = hconcat(blocks).rank()
    return ConceptReport(
        Concept.ODE_CONTROLLABLE, r == n, {"rk[B,AB,...]": r, "n": n}
    )


def evaluate(concept: Concept, t: DaeTriple, strong_variant: str = AS_WRITTEN) -> ConceptReport:
    """Run one concept predicate on a triple."""
    if concept is Concept.ODE_CONTROLLABLE:
        if t.l != t.n:
            raise ValueError("ODE controllability needs l = n (square A)")
        return kalman_controllable(t.A, t.B)
    if concept is Concept.STRONGLY_CONTROLLABLE:
        return strongly_controllable(t, strong_variant)
    fn = {
        Concept.FREELY_INITIALIZABLE: freely_initializable,
        Concept.IMPULSE_CONTROLLABLE: impulse_controllable,
        Concept.COMPLETELY_CONTROLLABLE: completely_controllable,
        Concept.BEHAVIOURALLY_CONTROLLABLE: behaviourally_controllable,
        Concept.COMPLETELY_STABILIZABLE: completely_stabilizable,
        Concept.STRONGLY_STABILIZABLE: strongly_stabilizable,
        Concept.BEHAVIOURALLY_STABILIZABLE: behaviourally_stabilizable,
    }[concept]
    return fn(t)


def genericity_predicted(concept: Concept, l: int, n: int, m: int) -> bool:
    """Closed-form table: is the concept generic on systems of size (l, n, m)?"""
    if min(l, n, m) < 1:
        raise ValueError("dimensions must be at least 1")
    if concept is Concept.FREELY_INITIALIZABLE:
        return l <= n + m
    if concept is Concept.IMPULSE_CONTROLLABLE:
        return l <= n + m
    if concept is Concept.COMPLETELY_CONTROLLABLE:
        return l < n + m
    if concept is Concept.BEHAVIOURALLY_CONTROLLABLE:
        return l != n + m
    if concept is Concept.STRONGLY_CONTROLLABLE:
        return (n <= l <= m or (l < n and 2 * l <= n + m)) and l != n + m
    if concept is Concept.COMPLETELY_STABILIZABLE:
        return l < n + m
    if concept is Concept.STRONGLY_STABILIZABLE:
        return l < n + m
    if concept is Concept.BEHAVIOURALLY_STABILIZABLE:
        return l != n + m
    if concept is Concept.ODE_CONTROLLABLE:
        return True
    raise ValueError(concept)
