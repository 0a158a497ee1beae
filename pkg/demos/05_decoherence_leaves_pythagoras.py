"""Leaves foliate the statespace, and radii obey Pythagoras.

Fix a basis.  Every state projects perpendicularly onto the basis simplex
(zero the off-diagonals); everything sharing a projection forms one
decoherence leaf.  The center distance r_d, the in-simplex distance r_s of
the projection, and the leaf radius r_c close a right triangle:
r_s^2 + r_c^2 = r_d^2.
"""

import numpy as np

import statespace as st
from statespace.randomstates import random_density_mat

rng = np.random.default_rng(7)

print(f"{'d':>2}  {'r_s':>9}  {'r_c':>9}  {'r_d':>9}  {'r_s^2+r_c^2-r_d^2':>18}")
for d in (2, 3, 4, 5):
    rho = st.validate_density(random_density_mat(d, rng))
    center = st.maximally_mixed(d)
    proj = st.project_to_simplex(rho)
    r_s = st.distance(proj, center)
    r_c = st.leaf_radius(rho)
    r_d = st.distance(rho, center)
    print(f"{d:>2}  {r_s:9.6f}  {r_c:9.6f}  {r_d:9.6f}  {r_s**2 + r_c**2 - r_d**2:18.1e}")

# Each state belongs to exactly one leaf per basis; the leaf is labeled by
# the shared diagonal.
d = 3
rho = st.validate_density(random_density_mat(d, rng))
mates = []
for _ in range(3):
    # same diagonal, different off-diagonals: damp by random amounts
    t = float(rng.uniform(0.2, 3.0))
    mates.append(st.decohere(rho, st.computational_basis(d), t))
print("\nleafmates share measurement statistics:")
for i, m in enumerate(mates):
    print(f"  mate {i}: diag {np.round(m.diag(), 6)}, same_leaf -> "
          f"{st.same_leaf(rho, m)}")

# The d(d-1)/2 off-diagonal magnitudes are independent leaf coordinates:
# the squared leaf radius is their sum of squares.
leaf = st.leaf_coordinates(rho)
mags = leaf.magnitudes
print("\noff-diagonal magnitudes:", np.round(mags, 6))
print("sqrt(sum of squares):  ", round(float(np.sqrt((mags ** 2).sum())), 6))
print("leaf_radius:           ", round(st.leaf_radius(rho), 6))
print("distance to projection:", round(st.distance(rho, st.project_to_simplex(rho)), 6))
