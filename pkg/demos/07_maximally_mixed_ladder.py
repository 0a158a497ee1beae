"""The ladder of maximally mixed states seen from the deep origin.

Drawing real statevectors from the infinite-entropy origin gives every state
a length sqrt(Tr(rho^2)/2): 1/sqrt(2) for pure states, 1/sqrt(2d) for the
maximally mixed state of dimension d.  Orthogonal pure states sit at right
angles; the center-to-vertex angle theta_d narrows from 180 degrees (qubit
diameter) toward 90 as d grows; successive maximally mixed statevectors
close right triangles all the way down.
"""

import math

import numpy as np

import statespace as st

print(f"{'d':>3} {'r_Md':>9} {'r_d':>9} {'r_succ':>9} "
      f"{'theta_d':>9} {'theta_Md':>9} {'theta_succ':>11}")
for d in (2, 3, 4, 5, 8, 16, 64):
    m = st.hierarchy_metrics(d)
    print(f"{d:>3} {m.r_md:9.6f} {m.r_d:9.6f} {m.r_succ:9.6f} "
          f"{math.degrees(m.theta_d):8.3f}d {math.degrees(m.theta_md):8.3f}d "
          f"{math.degrees(m.theta_succ):10.3f}d")

print("\nfamiliar landmarks:")
print("  theta_2 = 180 (a straight diameter through the qubit center)")
print("  theta_3 = 120 (triangle center to two vertices)")
print("  theta_4 = 109.47 (tetrahedral angle)")
print("  limits: theta_d -> 90, r_Md -> 0 (absolute ignorance at the origin)")

# Numeric cross-checks on explicit matrices (embedding the smaller space).
d = 3
m = st.hierarchy_metrics(d)
center = st.maximally_mixed(d)
pure = st.validate_density(np.diag([1.0, 0.0, 0.0]))
print(f"\nclosed form r_d({d}) = {m.r_d:.12f}")
print(f"matrix computation   = {st.distance(pure, center):.12f}")

up = st.embed_in_dimension(center, d + 1)
print(f"closed form r_succ({d}) = {m.r_succ:.12f}")
print(f"matrix computation      = {st.distance(up, st.maximally_mixed(d + 1)):.12f}")

# Right triangle between successive ladder rungs.
lhs = st.hierarchy_metrics(d + 1).r_md ** 2 + m.r_succ ** 2
print(f"\nr_M,{d+1}^2 + r_succ^2 = {lhs:.12f} = r_M,{d}^2 = {m.r_md ** 2:.12f}")

# Orthogonal pure statevectors always form the legs of a unit right triangle.
a = st.validate_density(np.diag([1.0, 0, 0]))
b = st.validate_density(np.diag([0, 1.0, 0]))
print("\nstatevector angle between orthogonal pure states:",
      round(math.degrees(st.angle(a, b)), 6), "degrees")
print("origin radii:", st.origin_radius(a), "->  0.5^2 + 0.5^2 = 1 = distance^2 =",
      st.distance(a, b) ** 2)
