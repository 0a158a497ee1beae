"""Diagonalized states live in a regular unit simplex.

For one basis, the diagonal states form a regular simplex with unit edges:
a segment for qubits, an equilateral triangle for qutrits, a tetrahedron
for d=4.  The transformation M maps raw probability coordinates onto it,
stretching the diagonal direction by sqrt(d/2) and compressing differences
to 1/sqrt(2).  Parallels through a statepoint cut the edges in lengths
equal to the probabilities.
"""

import numpy as np

import statespace as st

for d in (2, 3, 4):
    chart = st.build_chart(d)
    print(f"d={d}: M =")
    print(np.round(chart.transform, 6))
    print("  vertices (one per basis state, last at the origin):")
    print(np.round(chart.vertices, 6))

chart = st.build_chart(3)
p = st.probability_vector([0.5, 0.3, 0.2])
point = st.simplex_point(p, chart)
print("\nqutrit probabilities (0.5, 0.3, 0.2) sit at", np.round(point, 6))
print("parallel cuts on the unit edges:", st.parallel_cut_lengths(p))
print("distance to the simplex center:", round(st.center_distance(p), 6))

# The simplex metric is the statespace metric restricted to diagonal states.
q = st.probability_vector([1 / 3, 1 / 3, 1 / 3])
print("\nsimplex distance to the center:", round(st.simplex_distance(p, q), 6))
print("matrix-level distance agrees:   ",
      round(st.distance(st.validate_density(np.diag(p.probs)),
                        st.maximally_mixed(3)), 6))

# Vertices are orthogonal pure states exactly one unit apart.
a = st.validate_density(np.diag([1.0, 0.0, 0.0]))
b = st.validate_density(np.diag([0.0, 1.0, 0.0]))
print("\nvertex-to-vertex distance:", st.distance(a, b))

# The eigenvalue ladder stretches: M's action on the paper directions.
m = chart.transform
ones = np.ones(2)
diff = np.array([1.0, -1.0])
print("M @ (1,1)  =", np.round(m @ ones, 6), " = sqrt(3/2) * (1,1)")
print("M @ (1,-1) =", np.round(m @ diff, 6), " = (1,-1)/sqrt(2)")
