"""State tomography: intersecting decoherence leaves.

One measured basis pins down which leaf of that basis' foliation the state
is in (its diagonal there).  Measuring in enough different bases intersects
the leaves down to a single statepoint.  For a qubit, three bases (the three
Pauli foliations) suffice; in general d+1 well-chosen bases do.
"""

import numpy as np

import statespace as st
from statespace import textio
from statespace.randomstates import random_density_mat

rng = np.random.default_rng(12)
rho = st.validate_density(random_density_mat(2, rng))
print("hidden state:")
print(np.round(rho.mat, 6))

bases = st.default_bases(2)
names = ["Z (up/down)", "X (right/left)", "Y (circular)"]
print("\nmeasured diagonal data per basis:")
data = []
for name, basis in zip(names, bases):
    probs = st.measure_probabilities(rho, basis)
    data.append(probs)
    print(f"  {name:>15}: {np.round(probs.probs, 6)}")

# One basis alone leaves a whole leaf of candidates; least squares then
# returns the leaf center (minimum-coordinate solution).
partial = st.TomographyRecord(bases=bases[:1], diag_data=tuple(data[:1]))
center_of_leaf, _ = st.reconstruct(partial)
print("\nfrom Z alone (the whole leaf is compatible; its center is returned):")
print(np.round(center_of_leaf.mat, 6))

full = st.TomographyRecord(bases=bases, diag_data=tuple(data))
rebuilt, residual = st.reconstruct(full)
print("\nfrom all three bases:")
print(np.round(rebuilt.mat, 6))
print("reconstruction error:", float(np.abs(rebuilt.mat - rho.mat).max()))
print("residual:", residual)

# Qutrit: the deterministic default set is the computational basis plus
# d seeded unitaries, checked informationally complete.
rho3 = st.validate_density(random_density_mat(3, rng))
rebuilt3, residual3 = st.reconstruct(st.simulate_record(rho3))
print("\nqutrit round trip error:", float(np.abs(rebuilt3.mat - rho3.mat).max()))

# Records serialize to a plain text format for the CLI `tomo` subcommand.
record_text = textio.dumps_record(st.simulate_record(rho))
print("\nserialized record header:", record_text.splitlines()[0],
      f"({len(record_text.splitlines())} lines)")
