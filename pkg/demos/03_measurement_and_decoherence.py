"""Measurement probabilities as geometry, and decoherence as a straight path.

Choosing a projective measurement picks a diameter (a basis).  Dropping a
perpendicular from the statepoint onto it cuts the unit diameter into the
outcome probabilities.  Decoherence damps the off-diagonals: the statepoint
slides straight down that perpendicular, inside its decoherence leaf, until
it reaches the diameter.
"""

import numpy as np

import statespace as st

rho = st.validate_density([[0.5, 1 / 6], [1 / 6, 0.5]])
basis = st.computational_basis(2)

probs = st.measure_probabilities(rho, basis)
print("measuring in the up/down basis:", probs.probs)

h = st.measurement_basis(np.array([[1, 1], [1, -1]]) / np.sqrt(2))
print("measuring in the right/left basis:", np.round(st.measure_probabilities(rho, h).probs, 6))

print("\nDecoherence in the up/down basis (off-diagonal shrinks, diagonal fixed):")
proj = st.project_to_simplex(rho)
print(f"  {'t':>5}  {'offdiag':>10}  {'leaf radius':>11}  {'on the segment?':>15}")
for t in (0.0, 0.5, 1.0, 2.0, 5.0):
    out = st.decohere(rho, basis, t)
    r = st.leaf_radius(out)
    if st.distance(rho, proj) > 1e-9 and 0 < t:
        _, resid = st.cut_ratio(rho, proj, out)
        onseg = f"residual {resid:.1e}"
    else:
        onseg = "-"
    print(f"  {t:5.1f}  {out.mat[0, 1].real:10.6f}  {r:11.6f}  {onseg:>15}")

print("\nIn the limit the state IS its projection (same diagonal, no coherence):")
late = st.decohere(rho, basis, 50.0)
print(np.round(late.mat.real, 9))
assert st.same_leaf(late, rho)

print("\nEvery intermediate state stays in the same decoherence leaf")
print("(identical measurement statistics in the chosen basis):")
for t in (0.3, 1.7):
    out = st.decohere(rho, basis, t)
    print(f"  t={t}: probabilities {st.measure_probabilities(out, basis).probs}")
