"""Reading a density matrix as coordinates of one geometric point.

The same state has one statepoint but many matrix representations, one per
basis.  Diagonal entries say where the point projects onto the basis
diameter (or simplex); the off-diagonal complex number says how far off the
diameter it sits and at what angle.  Switching basis only re-coordinatizes
the same point.
"""

import numpy as np

import statespace as st

rho = st.validate_density([[0.5, 1 / 6], [1 / 6, 0.5]])
print("In the up/down basis:")
print(np.round(rho.mat.real, 6))
leaf = st.leaf_coordinates(rho)
print("  diagonal (projection onto the diameter):", leaf.diag.probs)
print(f"  off-diagonal magnitude (distance off the diameter): {leaf.offdiag[0][0]:.6f}")

# The unique basis whose diameter passes through the statepoint is the
# eigenbasis; there the off-diagonals vanish.
hadamard = np.array([[1, 1], [1, -1]]) / np.sqrt(2)
rotated = st.change_basis(rho, hadamard)
print("\nSame state in the right/left basis:")
print(np.round(rotated.mat.real, 6))
print("  off-diagonals are zero: the statepoint lies ON this diameter,")
print("  cutting it 2/3 to 1/3.")

spec = st.eig_hermitian(rho)
print("\nEigendecomposition confirms:", np.round(spec.eigenvalues, 6))

# Basis-independent facts agree in both representations.
for name, s in [("up/down rep", rho), ("right/left rep", rotated)]:
    print(f"  {name}: purity {st.purity(s):.6f}, "
          f"center distance {st.distance(s, st.maximally_mixed(2)):.6f}")

# A qutrit works the same way, now with three off-diagonal coordinates.
qutrit = np.diag([0.5, 0.3, 0.2]).astype(complex)
qutrit[0, 1] = qutrit[1, 0] = 0.08
qutrit[0, 2] = 0.05j
qutrit[2, 0] = -0.05j
q = st.validate_density(qutrit)
print("\nQutrit leaf coordinates (magnitude, phase) in row-major order:")
for pair, (j, k) in zip(st.leaf_coordinates(q).offdiag, [(0, 1), (0, 2), (1, 2)]):
    print(f"  entry ({j},{k}): magnitude {pair[0]:.4f}, phase {pair[1]:+.4f}")
print("distance off the basis simplex:", round(st.leaf_radius(q), 6))
