"""Principal-parts Chern classes and Weierstrass sweeps on pencil families.

Given a pencil family (from :func:`hodgediv.chow.pencil_family`), the locus
swept by the fiberwise Weierstrass points is a curve in the total space
whose class is computed by a corank-1 degeneracy-locus formula:

    g(g+1)/2 * omega_rel - (deg lambda) * f.

The base degrees of eta, kappa, delta_0 and lambda are all recovered from
the lattice, giving two independent routes to every intersection number of
the family with a divisor class on the projectivized bundle.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as Q

from .chow import LatticeClass, PencilFamily, lattice_intersect


@dataclass(frozen=True)
class FamilyInvariants:
    """A pencil family together with its fiber genus and lambda-degree."""

    g: int
    lambda_deg: Q
    family: PencilFamily

    def __post_init__(self):
        if self.g < 1:
            raise ValueError("fiber genus must be >= 1")
        if self.lambda_deg < 0:
            raise ValueError("lambda-degree must be nonnegative")


def kappa_degree(fam: PencilFamily) -> Q:
    """Degree of kappa on the base: self-intersection of omega_rel."""
    return lattice_intersect(fam.omega_rel, fam.omega_rel)


def singular_fiber_count(fam: PencilFamily) -> Q:
    """Degree of delta_0 on the base, by topological Euler characteristics.

    For a general pencil every singular fiber is irreducible one-nodal and
    contributes 1, so the count is e(total space) - e(P^1) e(fiber)
    = (e(base) + r) - 2(2 - 2g).
    """
    return Q(fam.base_euler + fam.base_points - 2 * (2 - 2 * fam.genus))


def lambda_degree(fam: PencilFamily) -> Q:
    """Degree of lambda on the base via lambda = (kappa + delta)/12."""
    return (kappa_degree(fam) + singular_fiber_count(fam)) / 12


def family_invariants(fam: PencilFamily) -> FamilyInvariants:
    """Package a pencil family with its derived lambda-degree."""
    return FamilyInvariants(fam.genus, lambda_degree(fam), fam)


def principal_parts_c1(k: int, c1L: LatticeClass, c1omega: LatticeClass) -> LatticeClass:
    """First Chern class of the bundle of relative k-jets of L.

    The jet exact sequences telescope to k c1(L) + k(k-1)/2 c1(omega_rel).
    """
    if k < 1:
        raise ValueError("jet order must be >= 1")
    return k * c1L + Q(k * (k - 1), 2) * c1omega


def weierstrass_family_class(fam: FamilyInvariants) -> LatticeClass:
    """Class of the fiberwise Weierstrass locus in the total space:
    g(g+1)/2 omega_rel - (deg lambda) f."""
    omega = fam.family.omega_rel
    return principal_parts_c1(fam.g, omega, omega) - fam.lambda_deg * fam.family.f


def weierstrass_sweep_degree(fam: FamilyInvariants, ample: LatticeClass) -> Q:
    """Degree, against a base-pullback class, of the curve traced out by
    the Weierstrass points of the pencil."""
    return lattice_intersect(weierstrass_family_class(fam), ample)


def eta_degree_from_family(fam: PencilFamily, L: LatticeClass) -> Q:
    """Degree of eta on the base of a family whose differentials are cut
    out by the divisor class L.

    The relation omega_rel = pullback(O(-1)) + L, intersected with an
    exceptional section E, rearranges to deg eta = (omega_rel - L).E.
    """
    if fam.base_points < 1:
        raise ValueError("family has no exceptional sections")
    return lattice_intersect(fam.omega_rel - L, fam.lattice.exceptional(0))
