"""Verify the two worked pencil-family examples by several routes.

A general pencil of plane quartics (genus 3) and a general pencil of
genus-4 canonical curves on a quadric both give curves B in the
projectivized bundle of differentials; the degree of the curve swept out
by their fiberwise Weierstrass points is computed three independent ways.
"""

from hodgediv import CurveRecord, basis, class_D, pair
from hodgediv.chow import MultiProjRing, chow_integrate, pencil_family
from hodgediv.picard import PHODGE_ABELIAN
from hodgediv.porteous import (
    eta_degree_from_family,
    family_invariants,
    kappa_degree,
    lambda_degree,
    singular_fiber_count,
    weierstrass_sweep_degree,
)

print("--- pencil of plane quartics ---")
fam = pencil_family("P2", 4)
h = fam.pullback([1])
print(f"fiber genus {fam.genus}, {fam.base_points} base points")
print(f"deg eta = {eta_degree_from_family(fam, h)}")
print(f"kappa degree = {kappa_degree(fam)}, nodal fibers = {singular_fiber_count(fam)}, "
      f"lambda degree = {lambda_degree(fam)}")
rec = CurveRecord.from_map("B", basis(PHODGE_ABELIAN, 3), {
    "eta": eta_degree_from_family(fam, h),
    "lambda": lambda_degree(fam),
    "delta_0": singular_fiber_count(fam),
})
print(f"B.D via class pairing      = {pair(rec, class_D(3))}")
print(f"B.D via degeneracy sweep   = {weierstrass_sweep_degree(family_invariants(fam), h)}")
print(f"B.D via flex-curve degree  = {6 * 4 - 6}  (6d-6 at d=4)")

print()
print("--- pencil of genus-4 canonical curves on a quadric ---")
fam4 = pencil_family("P1xP1", (3, 3))
section = fam4.pullback([1, 1])
print(f"fiber genus {fam4.genus}, {fam4.base_points} base points")
print(f"B.eta = {eta_degree_from_family(fam4, section)}")
print(f"B.kappa (lattice) = {kappa_degree(fam4)}")

# Same kappa degree in the Chow ring of the ambient P^1 x P^3: the total
# space is cut out by divisors of type (0,2) and (1,3), and the relative
# dualizing class restricts from (1,1).
ring = MultiProjRing((1, 3))
alpha, beta = ring.generators()
surface = (2 * beta) * (alpha + 3 * beta)
omega = alpha + beta
print(f"B.kappa (Chow ring) = {chow_integrate(omega * omega * surface)}")

print(f"B.delta_0 = {singular_fiber_count(fam4)}, B.lambda = {lambda_degree(fam4)}")
rec4 = CurveRecord.from_map("B", basis(PHODGE_ABELIAN, 4), {
    "eta": eta_degree_from_family(fam4, section),
    "lambda": lambda_degree(fam4),
    "delta_0": singular_fiber_count(fam4),
})
print(f"B.D via class pairing    = {pair(rec4, class_D(4))}")
print(f"B.D via degeneracy sweep = {weierstrass_sweep_degree(family_invariants(fam4), section)}")
print(f"B.D via Chow ring        = {chow_integrate((10 * omega - 4 * alpha) * beta * surface)}")
