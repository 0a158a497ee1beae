"""Serializable geometric scenes: Bloch circle/sphere and simplex figures.

A SceneDocument is plain data (points, segments, annotations) ready for any
renderer.  Numeric values attached to elements are taken verbatim from the
library calls that define them -- scenes never recompute geometry through a
second code path.  Curved outlines are emitted as polyline segments and the
d=4 cut planes as ordered triangle-fan vertex lists, so renderers need no
curve or polygon primitives.

JSON layout (schema_version 1):

    {"schema_version": 1, "kind": "BlochCircle" | "BlochSphere" |
     "Simplex2" | "Simplex3",
     "points": [{"label", "coords", "style"}],
     "segments": [{"label", "a", "b", "style", "value"}],
     "annotations": [{"text", "anchor"}],
     "meta": {"dim", "source_digest", "source_matrix", ...}}
"""

import hashlib
import json
import math
from dataclasses import dataclass, field

import numpy as np

from .densmat import change_basis, eig_hermitian
from .embedding import to_statepoint
from .errors import FormatError, WrongDimension
from .leaves import leaf_coordinates, leaf_radius
from .measurement import measure_probabilities
from .simplex import build_chart, parallel_cut_lengths, probability_vector, simplex_point
from . import textio

SCHEMA_VERSION = 1

KINDS = ("BlochCircle", "BlochSphere", "Simplex2", "Simplex3")

# Scene-space vertex layouts: first edge along +x, origin vertex last.
_TRIANGLE = np.array([[1.0, 0.0], [0.5, math.sqrt(3.0) / 2.0]])
_TETRA = np.array(
    [
        [1.0, 0.0, 0.0],
        [0.5, math.sqrt(3.0) / 2.0, 0.0],
        [0.5, math.sqrt(3.0) / 6.0, math.sqrt(6.0) / 3.0],
    ]
)


@dataclass(frozen=True)
class ScenePoint:
    label: str
    coords: tuple
    style: str = "point"


@dataclass(frozen=True)
class SceneSegment:
    label: str
    a: tuple
    b: tuple
    style: str = "line"
    value: float | None = None


@dataclass(frozen=True)
class SceneAnnotation:
    text: str
    anchor: tuple


@dataclass(frozen=True)
class SceneDocument:
    kind: str
    points: tuple
    segments: tuple
    annotations: tuple
    meta: dict = field(default_factory=dict)

    def to_dict(self):
        return {
            "schema_version": SCHEMA_VERSION,
            "kind": self.kind,
            "points": [
                {"label": p.label, "coords": list(p.coords), "style": p.style}
                for p in self.points
            ],
            "segments": [
                {
                    "label": s.label,
                    "a": list(s.a),
                    "b": list(s.b),
                    "style": s.style,
                    "value": s.value,
                }
                for s in self.segments
            ],
            "annotations": [
                {"text": a.text, "anchor": list(a.anchor)} for a in self.annotations
            ],
            "meta": self.meta,
        }

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2) + "\n"

    @staticmethod
    def from_dict(doc):
        if doc.get("schema_version") != SCHEMA_VERSION:
            raise FormatError(
                f"unsupported scene schema version {doc.get('schema_version')!r}"
            )
        if doc.get("kind") not in KINDS:
            raise FormatError(f"unknown scene kind {doc.get('kind')!r}")
        return SceneDocument(
            kind=doc["kind"],
            points=tuple(
                ScenePoint(p["label"], tuple(p["coords"]), p["style"])
                for p in doc["points"]
            ),
            segments=tuple(
                SceneSegment(
                    s["label"], tuple(s["a"]), tuple(s["b"]), s["style"], s["value"]
                )
                for s in doc["segments"]
            ),
            annotations=tuple(
                SceneAnnotation(a["text"], tuple(a["anchor"]))
                for a in doc["annotations"]
            ),
            meta=doc["meta"],
        )

    @staticmethod
    def from_json(text):
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as e:
            raise FormatError(f"scene is not valid JSON: {e}")
        return SceneDocument.from_dict(doc)


def _digest(rho):
    return hashlib.sha256(textio.dumps_matrix(rho.mat).encode()).hexdigest()


def _tup(arr):
    return tuple(float(x) for x in arr)


def _polyline(points, label, style):
    segs = []
    for i in range(len(points)):
        a, b = points[i], points[(i + 1) % len(points)]
        segs.append(SceneSegment(label, _tup(a), _tup(b), style))
    return segs


def _circle3d(center, radius, axis, n=48):
    axis = np.asarray(axis, dtype=float)
    axis /= np.linalg.norm(axis)
    ref = np.array([1.0, 0.0, 0.0]) if abs(axis[0]) < 0.9 else np.array([0.0, 1.0, 0.0])
    u = np.cross(axis, ref)
    u /= np.linalg.norm(u)
    v = np.cross(axis, u)
    ts = np.linspace(0.0, 2.0 * math.pi, n, endpoint=False)
    return [center + radius * (math.cos(t) * u + math.sin(t) * v) for t in ts]


def scene_bloch(rho, basis, sphere=False, config=None):
    """Measurement picture for a qubit state: basis diameter, statepoint,
    perpendicular foot, probability segments and the decoherence leaf."""
    if rho.dim != 2:
        raise WrongDimension(f"Bloch scenes need d=2, got d={rho.dim}")
    if basis.dim != 2:
        raise WrongDimension(f"basis dimension {basis.dim} != 2")

    probs = measure_probabilities(rho, basis)
    p0, p1 = float(probs.probs[0]), float(probs.probs[1])
    in_basis = change_basis(rho, basis.mat.conj().T, config)
    rc = leaf_radius(in_basis)
    phase = leaf_coordinates(in_basis).offdiag[0][1]
    z = 0.5 * (p0 - p1)
    chord = math.sqrt(max(0.0, 0.25 - z * z))

    points, segments, notes = [], [], []
    if not sphere:
        kind = "BlochCircle"
        v0, v1, foot, sp = (0.5, 0.0), (-0.5, 0.0), (z, 0.0), (z, rc)
        outline = [
            (0.5 * math.cos(t), 0.5 * math.sin(t))
            for t in np.linspace(0.0, 2.0 * math.pi, 96, endpoint=False)
        ]
        segments += _polyline(outline, "outline", "outline")
        leaf_pts = [(z, chord), (z, -chord)]
        segments.append(
            SceneSegment("leaf", _tup(leaf_pts[0]), _tup(leaf_pts[1]), "leaf", rc)
        )
    else:
        kind = "BlochSphere"
        coords = np.asarray(to_statepoint(in_basis).coords)
        v0, v1 = (0.0, 0.0, 0.5), (0.0, 0.0, -0.5)
        foot = (0.0, 0.0, float(coords[2]))
        sp = _tup(coords[[0, 1, 2]])
        for axis in ((0, 0, 1), (0, 1, 0), (1, 0, 0)):
            segments += _polyline(
                _circle3d(np.zeros(3), 0.5, np.array(axis, dtype=float)),
                "outline",
                "outline",
            )
        segments += _polyline(
            _circle3d(np.array(foot), chord, np.array([0.0, 0.0, 1.0])),
            "leaf",
            "leaf",
        )

    points += [
        ScenePoint("basis_0", _tup(v0), "vertex"),
        ScenePoint("basis_1", _tup(v1), "vertex"),
        ScenePoint("center", _tup(np.zeros(len(v0))), "center"),
        ScenePoint("foot", _tup(foot), "foot"),
        ScenePoint("statepoint", _tup(sp), "statepoint"),
    ]
    segments += [
        SceneSegment("diameter_far_0", _tup(v1), _tup(foot), "probability", p0),
        SceneSegment("diameter_far_1", _tup(v0), _tup(foot), "probability", p1),
        SceneSegment("perpendicular", _tup(sp), _tup(foot), "perpendicular", rc),
    ]
    notes += [
        SceneAnnotation(f"p0 = {p0:.12g}", _tup((np.array(v1) + np.array(foot)) / 2)),
        SceneAnnotation(f"p1 = {p1:.12g}", _tup((np.array(v0) + np.array(foot)) / 2)),
        SceneAnnotation(f"phase = {phase:.12g}", _tup(sp)),
    ]
    meta = {
        "dim": 2,
        "source_digest": _digest(rho),
        "source_matrix": textio.dumps_matrix(rho.mat),
        "basis_matrix": textio.dumps_matrix(basis.mat),
        "probabilities": [p0, p1],
        "leaf_radius": rc,
        "phase": phase,
    }
    return SceneDocument(
        kind=kind,
        points=tuple(points),
        segments=tuple(segments),
        annotations=tuple(notes),
        meta=meta,
    )


def _scene_vertices(d):
    """Vertex positions in scene space plus the chart rotation achieving
    them: first edge along +x, origin vertex last."""
    target = _TRIANGLE if d == 3 else _TETRA
    chart = build_chart(d)
    rot = target.T @ np.linalg.inv(chart.transform)
    verts = np.zeros((d, d - 1))
    verts[: d - 1] = target
    return chart, rot, verts


def scene_simplex(rho, config=None):
    """Diagonalized-state picture inside the regular simplex: outline,
    centroid, statepoint, and the parallel cuts reading off eigenvalue
    probabilities (lines for d=3, triangle-fan planes for d=4)."""
    d = rho.dim
    if d not in (3, 4):
        raise WrongDimension(f"simplex scenes need d in {{3, 4}}, got d={d}")
    kind = "Simplex2" if d == 3 else "Simplex3"

    spectrum = eig_hermitian(rho, config)
    probs = probability_vector(np.clip(spectrum.eigenvalues, 0.0, None))
    cuts = parallel_cut_lengths(probs)
    chart, rot, verts = _scene_vertices(d)
    sp = rot @ simplex_point(probs, chart)
    centroid = rot @ simplex_point(
        probability_vector(np.full(d, 1.0 / d)), chart
    )

    points = [
        ScenePoint(f"vertex_{i}", _tup(verts[i]), "vertex") for i in range(d)
    ]
    points += [
        ScenePoint("centroid", _tup(centroid), "center"),
        ScenePoint("statepoint", _tup(sp), "statepoint"),
    ]

    segments = []
    for i in range(d):
        for j in range(i + 1, d):
            segments.append(
                SceneSegment(f"edge_{i}{j}", _tup(verts[i]), _tup(verts[j]), "outline")
            )

    notes = []
    for i in range(d):
        others = [j for j in range(d) if j != i]
        cut_pts = [cuts[i] * verts[i] + (1.0 - cuts[i]) * verts[j] for j in others]
        if d == 3:
            segments.append(
                SceneSegment(
                    f"cut_{i}",
                    _tup(cut_pts[0]),
                    _tup(cut_pts[1]),
                    "cut",
                    float(cuts[i]),
                )
            )
        else:
            for k, w in enumerate(cut_pts):
                points.append(
                    ScenePoint(f"cut_{i}_fan_{k}", _tup(w), f"fan:cut_{i}")
                )
            for k in range(len(cut_pts)):
                segments.append(
                    SceneSegment(
                        f"cut_{i}_edge_{k}",
                        _tup(cut_pts[k]),
                        _tup(cut_pts[(k + 1) % len(cut_pts)]),
                        "cut",
                        float(cuts[i]),
                    )
                )
        far_mid = cuts[i] / 2.0 * verts[i] + (1.0 - cuts[i] / 2.0) * verts[others[0]]
        notes.append(SceneAnnotation(f"p{i} = {float(cuts[i]):.12g}", _tup(far_mid)))

    meta = {
        "dim": d,
        "source_digest": _digest(rho),
        "source_matrix": textio.dumps_matrix(rho.mat),
        "eigenvalues": [float(x) for x in spectrum.eigenvalues],
        "cut_lengths": [float(x) for x in cuts],
    }
    return SceneDocument(
        kind=kind,
        points=tuple(points),
        segments=tuple(segments),
        annotations=tuple(notes),
        meta=meta,
    )
