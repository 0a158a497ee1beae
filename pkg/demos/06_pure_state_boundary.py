"""Pure states: the extremal boundary and amplitude coordinates.

Between pure states the metric collapses to sqrt(1 - |<b|psi>|^2): overlap 1
means distance 0, orthogonal means the maximum distance 1.  The squared
distance is exactly the probability of NOT landing on b when measuring psi
in any basis containing b.  Any two distinct pure states span an embedded
qubit whose geometry is an ordinary Bloch sphere inside the big space.
"""

import numpy as np

import statespace as st

b = st.basis_ket(2, 0)
psi = st.ket([0.6, 0.8j])

r = st.pure_distance(b, psi)
print(f"|<b|psi>| = {abs(st.overlap(b, psi)):.3f}")
print(f"distance  = sqrt(1 - 0.36) = {r:.3f}")
probs = st.measure_probabilities(st.to_density(psi), st.computational_basis(2))
print(f"P(not b)  = {1 - probs.probs[0]:.3f} = distance^2 = {r * r:.3f}")

# Complete b into an orthonormal pair through psi.
a, amp_b, amp_a = st.complete_qubit_basis(b, psi)
print("\ncompleted partner ket a:", np.round(a.amps, 6))
print("orthogonality <b|a> =", abs(np.vdot(b.amps, a.amps)))
print(f"reconstruction: {amp_a:.3f}|a> + ({amp_b:.3f})|b> = psi ->",
      np.allclose(amp_a * a.amps + amp_b * b.amps, psi.amps))

# The same construction works embedded in a larger space.
b3 = st.basis_ket(3, 0)
psi3 = st.ket([1 / np.sqrt(2), 0, 1j / np.sqrt(2)])
a3, _, _ = st.complete_qubit_basis(b3, psi3)
print("\nqutrit-embedded partner:", np.round(a3.amps, 6))

# Column-vector entries are lengths (plus one relative phase).
coords = st.column_coordinates(psi, st.computational_basis(2))
print("\ncolumn coordinates (magnitude, phase):")
for i, (mag, phase) in enumerate(coords):
    partner = st.pure_distance(st.basis_ket(2, i), psi)
    print(f"  entry {i}: magnitude {mag:.3f}, phase {phase:+.3f}; "
          f"distance to that basis point {partner:.3f} = sqrt(1 - {mag:.3f}^2)")

# Distances never exceed 1, reached only for orthogonal pure pairs.
print("\nmax distance check:", st.pure_distance(st.basis_ket(2, 0), st.basis_ket(2, 1)))
