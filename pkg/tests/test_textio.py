import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as hst

import statespace as st
from statespace import textio
from statespace.errors import FormatError

from util import random_state, random_unitary, seeded

finite_floats = hst.floats(
    allow_nan=False, allow_infinity=False, min_value=-1e6, max_value=1e6
)


class TestComplexFormat:
    def test_examples(self):
        assert textio.parse_complex("0.5+0.0i") == 0.5
        assert textio.parse_complex("0.5-0.25i") == 0.5 - 0.25j
        assert textio.parse_complex("1e-3+2e-4i") == 1e-3 + 2e-4j
        assert textio.parse_complex("-.5+.5i") == -0.5 + 0.5j
        assert textio.parse_complex("0.7") == 0.7

    def test_garbage(self):
        for bad in ("abc", "1+2", "1i+2", "", "1 + 2i"):
            with pytest.raises(FormatError):
                textio.parse_complex(bad)

    @given(finite_floats, finite_floats)
    @settings(max_examples=200, deadline=None)
    def test_roundtrip_bit_exact(self, re, im):
        z = complex(re, im)
        assert textio.parse_complex(textio.format_complex(z)) == z


class TestMatrixFormat:
    def test_dumps_shape(self):
        text = textio.dumps_matrix(np.eye(2) / 2)
        lines = text.strip().splitlines()
        assert lines[0] == "2"
        assert len(lines) == 3

    def test_roundtrip_bit_exact(self, rng):
        for d in (2, 3, 5):
            rho = random_state(d, rng)
            back = textio.loads_density(textio.dumps_matrix(rho.mat))
            assert np.array_equal(back.mat, rho.mat)

    def test_bad_header(self):
        with pytest.raises(FormatError):
            textio.loads_matrix_raw("x\n1 0\n0 1")

    def test_wrong_row_count(self):
        with pytest.raises(FormatError):
            textio.loads_matrix_raw("2\n1+0i 0+0i")

    def test_wrong_entry_count(self):
        with pytest.raises(FormatError):
            textio.loads_matrix_raw("2\n1+0i\n0+0i 1+0i")


class TestKetAndPoint:
    def test_ket_roundtrip(self, rng):
        from util import random_ket

        psi = random_ket(4, rng)
        back = textio.loads_ket(textio.dumps_ket(psi))
        assert np.array_equal(back.amps, psi.amps)

    def test_statepoint_roundtrip(self, rng):
        p = st.to_statepoint(random_state(3, rng))
        d, coords = textio.loads_statepoint_raw(textio.dumps_statepoint(p))
        assert d == 3
        assert np.array_equal(coords, p.coords)

    def test_statepoint_wrong_count(self):
        with pytest.raises(FormatError):
            textio.loads_statepoint_raw("2 0.1 0.2")


class TestLeafFormat:
    def test_roundtrip(self, rng):
        leaf = st.leaf_coordinates(random_state(3, rng))
        back = textio.loads_leaf(textio.dumps_leaf(leaf))
        assert back.dim == leaf.dim
        assert np.array_equal(back.diag.probs, leaf.diag.probs)
        assert back.offdiag == leaf.offdiag


class TestEnsembleFile:
    def test_read(self, tmp_path):
        up = st.validate_density([[1, 0], [0, 0]])
        down = st.validate_density([[0, 0], [0, 1]])
        (tmp_path / "up.txt").write_text(textio.dumps_matrix(up.mat))
        (tmp_path / "down.txt").write_text(textio.dumps_matrix(down.mat))
        ens_file = tmp_path / "ens.txt"
        ens_file.write_text("# mixture\n0.7 up.txt\n0.3 down.txt\n")
        ens = textio.read_ensemble(str(ens_file))
        mixed = st.mix(ens)
        assert np.abs(mixed.mat - np.diag([0.7, 0.3])).max() <= 1e-15

    def test_bad_line(self, tmp_path):
        f = tmp_path / "ens.txt"
        f.write_text("0.7\n")
        with pytest.raises(FormatError):
            textio.read_ensemble(str(f))


class TestRecordFile:
    def test_roundtrip(self, rng):
        rho = random_state(3, rng)
        record = st.simulate_record(rho)
        back = textio.loads_record(textio.dumps_record(record))
        assert len(back.bases) == len(record.bases)
        for a, b in zip(back.bases, record.bases):
            assert np.array_equal(a.mat, b.mat)
        for a, b in zip(back.diag_data, record.diag_data):
            assert np.array_equal(a.probs, b.probs)
        rebuilt, _ = st.reconstruct(back)
        assert np.abs(rebuilt.mat - rho.mat).max() <= 1e-8

    def test_bad_header(self):
        with pytest.raises(FormatError):
            textio.loads_record("2\n")

    def test_wrong_line_count(self):
        with pytest.raises(FormatError):
            textio.loads_record("2 1\n1+0i 0+0i\n")
