"""Operation layer shared by the CLI and the HTTP service.

Each op_* function takes a plain dict of inputs (text payloads in the file
formats, plus scalars) and returns a JSON-serializable payload.  Both
frontends serialize payloads through :func:`payload_bytes`, which keeps CLI
``--format json`` output and service responses byte-identical.
"""

import json
import math

import numpy as np

from . import scenes, textio
from .config import resolve
from .densmat import classify, eig_hermitian, entropy_and_w, purity, validate_density
from .embedding import angle, distance, from_statepoint, origin_radius, to_statepoint
from .errors import FormatError
from .hierarchy import hierarchy_metrics
from .leaves import leaf_coordinates, leaf_radius, project_to_simplex
from .measurement import (
    computational_basis,
    decohere,
    measure_probabilities,
    reconstruct,
)
from .mixtures import WeightedEnsemble, mix

SCENE_KINDS = {
    "bloch-circle": ("bloch", False),
    "bloch-sphere": ("bloch", True),
    "simplex2": ("simplex", 3),
    "simplex3": ("simplex", 4),
}


def payload_bytes(payload):
    """Canonical JSON encoding (full-precision floats, stable key order)."""
    return (json.dumps(payload, allow_nan=False) + "\n").encode()


def _need(body, key):
    if key not in body or body[key] is None:
        raise FormatError(f"missing required field {key!r}")
    return body[key]


def _load_state(body, config=None):
    """A state from either a matrix text or a raw statepoint."""
    if body.get("matrix") is not None:
        return textio.loads_density(body["matrix"], config)
    if body.get("statepoint") is not None:
        sp = body["statepoint"]
        if isinstance(sp, str):
            d, coords = textio.loads_statepoint_raw(sp)
        else:
            d = int(_need(sp, "dim"))
            coords = np.asarray(_need(sp, "coords"), dtype=np.float64)
        return from_statepoint(coords, dim=d, config=config)
    raise FormatError("missing required field 'matrix' (or 'statepoint')")


def _state_payload(rho, config=None):
    s, w = entropy_and_w(rho, config)
    return {
        "dim": rho.dim,
        "matrix": textio.dumps_matrix(rho.mat),
        "statepoint": [float(x) for x in to_statepoint(rho).coords],
        "purity": purity(rho),
        "entropy": s,
        "w": w,
        "class": classify(rho, config).value,
        "origin_radius": origin_radius(rho),
    }


def op_validate(body, config=None):
    rho = _load_state(body, config)
    out = {"valid": True}
    out.update(_state_payload(rho, config))
    return out


def op_eig(body, config=None):
    rho = _load_state(body, config)
    spec = eig_hermitian(rho, config)
    return {
        "dim": rho.dim,
        "eigenvalues": [float(x) for x in spec.eigenvalues],
        "eigenvectors": textio.dumps_matrix(spec.eigenvectors),
    }


def op_distance(body, config=None):
    a = textio.loads_density(_need(body, "a"), config)
    b = textio.loads_density(_need(body, "b"), config)
    return {"distance": distance(a, b)}


def op_angle(body, config=None):
    a = textio.loads_density(_need(body, "a"), config)
    b = textio.loads_density(_need(body, "b"), config)
    rad = angle(a, b, config)
    return {"angle_rad": rad, "angle_deg": math.degrees(rad)}


def op_mix(body, config=None):
    comps = _need(body, "components")
    if not isinstance(comps, list) or not comps:
        raise FormatError("'components' must be a non-empty list")
    pairs = []
    for c in comps:
        w = float(_need(c, "weight"))
        state = textio.loads_density(_need(c, "matrix"), config)
        pairs.append((w, state))
    mixed = mix(WeightedEnsemble(pairs, config))
    out = {"dim": mixed.dim, "matrix": textio.dumps_matrix(mixed.mat)}
    out["statepoint"] = [float(x) for x in to_statepoint(mixed).coords]
    return out


def op_project(body, config=None):
    rho = _load_state(body, config)
    proj = project_to_simplex(rho)
    return {"dim": proj.dim, "matrix": textio.dumps_matrix(proj.mat)}


def op_leaf(body, config=None):
    rho = _load_state(body, config)
    leaf = leaf_coordinates(rho)
    return {
        "dim": leaf.dim,
        "diag": [float(x) for x in leaf.diag.probs],
        "offdiag": [[float(m), float(p)] for m, p in leaf.offdiag],
        "leaf_radius": leaf.radius(),
    }


def op_measure(body, config=None):
    rho = _load_state(body, config)
    basis = textio.loads_basis(_need(body, "basis"), config)
    return {
        "probabilities": [
            float(x) for x in measure_probabilities(rho, basis).probs
        ]
    }


def op_decohere(body, config=None):
    rho = _load_state(body, config)
    basis = textio.loads_basis(_need(body, "basis"), config)
    t = float(_need(body, "t"))
    gamma = float(body.get("gamma", 1.0))
    out = decohere(rho, basis, t, gamma)
    return {
        "dim": out.dim,
        "matrix": textio.dumps_matrix(out.mat),
        "leaf_radius": leaf_radius(out),
    }


def op_tomo(body, config=None):
    record = textio.loads_record(_need(body, "record"), config)
    rho, residual = reconstruct(record, config)
    return {
        "dim": rho.dim,
        "matrix": textio.dumps_matrix(rho.mat),
        "residual": residual,
    }


def op_hierarchy(body, config=None):
    d = int(_need(body, "d"))
    m = hierarchy_metrics(d)
    return {
        "d": m.d,
        "r_md": m.r_md,
        "r_d": m.r_d,
        "r_succ": m.r_succ,
        "theta_d_rad": m.theta_d,
        "theta_d_deg": math.degrees(m.theta_d),
        "theta_md_rad": m.theta_md,
        "theta_md_deg": math.degrees(m.theta_md),
        "theta_succ_rad": m.theta_succ,
        "theta_succ_deg": math.degrees(m.theta_succ),
    }


def op_scene(body, config=None):
    kind = _need(body, "kind")
    if kind not in SCENE_KINDS:
        raise FormatError(
            f"unknown scene kind {kind!r}; expected one of {sorted(SCENE_KINDS)}"
        )
    rho = _load_state(body, config)
    family, arg = SCENE_KINDS[kind]
    if family == "bloch":
        if body.get("basis") is not None:
            basis = textio.loads_basis(body["basis"], config)
        else:
            basis = computational_basis(2)
        doc = scenes.scene_bloch(rho, basis, sphere=arg, config=config)
    else:
        doc = scenes.scene_simplex(rho, config)
    return doc.to_dict()


OPERATIONS = {
    "validate": op_validate,
    "eig": op_eig,
    "distance": op_distance,
    "angle": op_angle,
    "mix": op_mix,
    "project": op_project,
    "leaf": op_leaf,
    "measure": op_measure,
    "decohere": op_decohere,
    "tomo": op_tomo,
    "hierarchy": op_hierarchy,
    "scene": op_scene,
}
