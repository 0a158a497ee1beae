"""Text serialization for matrices, kets, statepoints, leaves and records.

Matrix format: first line the dimension d, then d whitespace-separated rows
of ``re+imi`` entries (e.g. ``0.5+0i``).  Numbers are written with 17
significant digits, enough for bit-exact float64 round-trips.

Other formats:
  ket              d lines of re+imi
  statepoint       one line: d then the d^2-1 coordinates
  leaf coordinates line 1: d; line 2: the d diagonal probabilities;
                   then one "magnitude phase" line per upper off-diagonal
  ensemble         one line per component: weight then a matrix file path
                   (resolved relative to the ensemble file)
  tomography       header "d n_bases"; per basis, d matrix rows then one
                   probability line
"""

import os
import re

import numpy as np

from .densmat import validate_density
from .errors import FormatError
from .leaves import LeafCoordinates
from .measurement import MeasurementBasis, TomographyRecord, measurement_basis
from .mixtures import WeightedEnsemble
from .purestate import PureKet
from .simplex import ProbabilityVector

_COMPLEX_RE = re.compile(
    r"^(?P<re>[+-]?(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?)"
    r"(?:(?P<im>[+-](?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?)i)?$"
)


def format_float(x):
    return f"{float(x):.17g}"


def format_complex(z):
    z = complex(z)
    return f"{z.real:.17g}{z.imag:+.17g}i"


def parse_complex(token):
    m = _COMPLEX_RE.match(token)
    if not m:
        raise FormatError(f"cannot parse complex entry {token!r}")
    return complex(float(m.group("re")), float(m.group("im") or 0.0))


def _lines(text):
    return [ln.strip() for ln in text.strip().splitlines() if ln.strip()]


def dumps_matrix(mat):
    mat = np.asarray(mat, dtype=np.complex128)
    d = mat.shape[0]
    rows = [" ".join(format_complex(z) for z in row) for row in mat]
    return "\n".join([str(d)] + rows) + "\n"


def loads_matrix_raw(text):
    """Parse the matrix format into an ndarray without state validation."""
    lines = _lines(text)
    if not lines:
        raise FormatError("empty matrix text")
    try:
        d = int(lines[0])
    except ValueError:
        raise FormatError(f"first line must be the dimension, got {lines[0]!r}")
    if len(lines) != d + 1:
        raise FormatError(f"expected {d} matrix rows, found {len(lines) - 1}")
    rows = []
    for ln in lines[1:]:
        toks = ln.split()
        if len(toks) != d:
            raise FormatError(f"expected {d} entries per row, got {len(toks)}")
        rows.append([parse_complex(t) for t in toks])
    return np.array(rows, dtype=np.complex128)


def loads_density(text, config=None):
    return validate_density(loads_matrix_raw(text), config)


def loads_basis(text, config=None):
    return measurement_basis(loads_matrix_raw(text), config)


def dumps_ket(psi):
    return "\n".join(format_complex(z) for z in psi.amps) + "\n"


def loads_ket(text):
    lines = _lines(text)
    if not lines:
        raise FormatError("empty ket text")
    amps = np.array([parse_complex(ln.split()[0]) for ln in lines])
    return PureKet(dim=amps.shape[0], amps=amps)


def dumps_statepoint(point):
    coords = " ".join(format_float(c) for c in point.coords)
    return f"{point.dim} {coords}\n"


def loads_statepoint_raw(text):
    """Parse a statepoint line into (dim, coords) without the ball check."""
    toks = text.split()
    if len(toks) < 2:
        raise FormatError("statepoint needs a dimension and coordinates")
    try:
        d = int(toks[0])
        coords = np.array([float(t) for t in toks[1:]])
    except ValueError as e:
        raise FormatError(f"bad statepoint line: {e}")
    if coords.shape[0] != d * d - 1:
        raise FormatError(
            f"dimension {d} needs {d * d - 1} coordinates, got {coords.shape[0]}"
        )
    return d, coords


def dumps_leaf(leaf):
    out = [str(leaf.dim), " ".join(format_float(p) for p in leaf.diag.probs)]
    out += [f"{format_float(m)} {format_float(ph)}" for m, ph in leaf.offdiag]
    return "\n".join(out) + "\n"


def loads_leaf(text):
    lines = _lines(text)
    if len(lines) < 2:
        raise FormatError("leaf text needs a dimension and a diagonal line")
    d = int(lines[0])
    probs = np.array([float(t) for t in lines[1].split()])
    n_off = d * (d - 1) // 2
    if len(lines) != 2 + n_off:
        raise FormatError(f"expected {n_off} off-diagonal lines, got {len(lines) - 2}")
    pairs = []
    for ln in lines[2:]:
        m, ph = ln.split()
        pairs.append((float(m), float(ph)))
    return LeafCoordinates(
        dim=d,
        diag=ProbabilityVector(dim=d, probs=probs),
        offdiag=tuple(pairs),
    )


def read_ensemble(path, config=None):
    """Load a weighted ensemble file; matrix paths resolve relative to it."""
    base = os.path.dirname(os.path.abspath(path))
    components = []
    with open(path) as fh:
        for raw in fh:
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split(maxsplit=1)
            if len(parts) != 2:
                raise FormatError(f"ensemble line needs 'weight path': {line!r}")
            try:
                w = float(parts[0])
            except ValueError:
                raise FormatError(f"bad weight {parts[0]!r}")
            mpath = parts[1].strip()
            if not os.path.isabs(mpath):
                mpath = os.path.join(base, mpath)
            with open(mpath) as mf:
                state = loads_density(mf.read(), config)
            components.append((w, state))
    return WeightedEnsemble(components, config)


def dumps_record(record):
    d = record.dim
    out = [f"{d} {len(record.bases)}"]
    for b, p in zip(record.bases, record.diag_data):
        out += [" ".join(format_complex(z) for z in row) for row in b.mat]
        out.append(" ".join(format_float(x) for x in p.probs))
    return "\n".join(out) + "\n"


def loads_record(text, config=None):
    lines = _lines(text)
    if not lines:
        raise FormatError("empty tomography record")
    head = lines[0].split()
    if len(head) != 2:
        raise FormatError("record header must be 'd n_bases'")
    try:
        d, n = int(head[0]), int(head[1])
    except ValueError:
        raise FormatError(f"bad record header {lines[0]!r}")
    expect = 1 + n * (d + 1)
    if len(lines) != expect:
        raise FormatError(f"expected {expect} lines for {n} bases, got {len(lines)}")
    bases, data = [], []
    at = 1
    for _ in range(n):
        block = "\n".join([str(d)] + lines[at : at + d])
        bases.append(loads_basis(block, config))
        at += d
        probs = np.array([float(t) for t in lines[at].split()])
        data.append(ProbabilityVector(dim=d, probs=probs))
        at += 1
    return TomographyRecord(bases=tuple(bases), diag_data=tuple(data))
