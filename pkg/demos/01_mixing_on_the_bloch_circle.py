"""Mixing states with the center-of-mass rule.

A mixed state is a probability-weighted blend of other states.  Its point in
statespace is found exactly like a center of mass, with probabilities in
place of masses: r = sum_i p_i r_i.  We walk the classic qubit pictures: a
70/30 blend of up/down, the equal-thirds up/down/right blend, and the
all-directions blend that lands dead center.
"""

import numpy as np

import statespace as st

up = st.validate_density([[1, 0], [0, 0]])
down = st.validate_density([[0, 0], [0, 1]])
right = st.to_density(st.ket([1 / np.sqrt(2), 1 / np.sqrt(2)]))

print("Statepoints live in a ball of radius 1/2 (for qubits, the Bloch ball):")
for name, s in [("up", up), ("down", down), ("right", right)]:
    print(f"  {name:>5}: {np.round(st.to_statepoint(s).coords, 6)}")

# A 70% chance of up, 30% of down sits on the up/down diameter,
# 0.2 from the center, closer to the likelier state.
blend = st.mix(st.WeightedEnsemble([(0.7, up), (0.3, down)]))
print("\n70/30 up/down blend:")
print("  matrix diag:", np.round(blend.diag(), 6))
print("  statepoint:", np.round(st.to_statepoint(blend).coords, 6))
t, residual = st.cut_ratio(up, down, blend)
print(f"  cuts the up->down segment at t = {t:.3f} (the down weight),"
      f" collinearity residual {residual:.1e}")

# Equal thirds of up, down and right: the two opposite points cancel to the
# center, then the remaining third pulls toward right.
thirds = st.mix(st.WeightedEnsemble([(1 / 3, up), (1 / 3, down), (1 / 3, right)]))
print("\nEqual thirds of up/down/right:")
print(np.round(thirds.mat.real, 6))
print("  statepoint:", np.round(st.to_statepoint(thirds).coords, 6),
      " (1/6 toward right)")

# Blending every direction equally can only land at the center: the
# maximally mixed state, I/2 in any basis.
n = 12
kets = [st.ket([np.cos(a / 2), np.sin(a / 2)]) for a in np.linspace(0, 2 * np.pi, n, endpoint=False)]
uniform = st.mix(st.WeightedEnsemble([(1 / n, st.to_density(k)) for k in kets]))
print("\nEqual blend of 12 boundary directions:")
print(np.round(uniform.mat.real, 9))
print("  entropy:", round(st.entropy_and_w(uniform)[0], 6), "= ln 2 =",
      round(np.log(2), 6))
