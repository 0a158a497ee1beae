"""Command-line interface.

Exit codes: 0 success, 1 domain error (message on stderr), 2 usage error.
``--format text`` renders numbers at 12 significant digits; ``--format
json`` emits the exact payload the HTTP service would return.
"""

import argparse
import json
import sys

from . import ops, textio
from .errors import StatespaceError


def _fmt(x):
    if isinstance(x, float):
        return f"{x:.12g}"
    return str(x)


def _read(path):
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e}")


def _write(path, text):
    try:
        with open(path, "w") as fh:
            fh.write(text)
    except OSError as e:
        raise UsageError(f"cannot write {path}: {e}")


class UsageError(Exception):
    pass


def _render_text(name, payload, out):
    if name == "validate":
        out.write(f"valid {payload['dim']}x{payload['dim']} state, class {payload['class']}\n")
        for key in ("purity", "entropy", "w", "origin_radius"):
            out.write(f"{key} = {_fmt(payload[key])}\n")
        out.write("statepoint " + " ".join(_fmt(c) for c in payload["statepoint"]) + "\n")
    elif name == "eig":
        out.write("eigenvalues " + " ".join(_fmt(v) for v in payload["eigenvalues"]) + "\n")
        out.write("eigenvector columns:\n" + payload["eigenvectors"])
    elif name == "distance":
        out.write(_fmt(payload["distance"]) + "\n")
    elif name == "angle":
        out.write(f"{_fmt(payload['angle_rad'])} rad ({_fmt(payload['angle_deg'])} deg)\n")
    elif name in ("mix", "project", "decohere"):
        out.write(payload["matrix"])
        if "leaf_radius" in payload:
            out.write(f"leaf_radius = {_fmt(payload['leaf_radius'])}\n")
    elif name == "leaf":
        out.write("diag " + " ".join(_fmt(p) for p in payload["diag"]) + "\n")
        for k, (m, ph) in enumerate(payload["offdiag"]):
            out.write(f"offdiag_{k} magnitude {_fmt(m)} phase {_fmt(ph)}\n")
        out.write(f"leaf_radius = {_fmt(payload['leaf_radius'])}\n")
    elif name == "measure":
        out.write(" ".join(_fmt(p) for p in payload["probabilities"]) + "\n")
    elif name == "tomo":
        out.write(payload["matrix"])
        out.write(f"residual = {_fmt(payload['residual'])}\n")
    elif name == "hierarchy":
        d = payload["d"]
        out.write(f"d = {d}\n")
        out.write(f"r_Md        = {_fmt(payload['r_md'])}\n")
        out.write(f"r_d         = {_fmt(payload['r_d'])}\n")
        out.write(f"r_succ      = {_fmt(payload['r_succ'])}\n")
        out.write(f"theta_d     = {_fmt(payload['theta_d_deg'])} deg\n")
        out.write(f"theta_Md    = {_fmt(payload['theta_md_deg'])} deg\n")
        out.write(f"theta_succ  = {_fmt(payload['theta_succ_deg'])} deg\n")
    elif name == "scene":
        out.write(json.dumps(payload, indent=2) + "\n")
    else:  # pragma: no cover
        out.write(json.dumps(payload) + "\n")


def _body_from_args(args):
    name = args.command
    body = {}
    if name in ("validate", "eig", "project", "leaf", "scene"):
        if getattr(args, "infile", None):
            body["matrix"] = _read(args.infile)
        if getattr(args, "point", None):
            body["statepoint"] = _read(args.point)
        if "matrix" not in body and "statepoint" not in body:
            raise UsageError(f"{name} needs --in or --point")
    if name in ("distance", "angle"):
        body["a"] = _read(args.a)
        body["b"] = _read(args.b)
    if name == "mix":
        body["components"] = _ensemble_components(args.infile)
    if name in ("measure", "decohere"):
        body["matrix"] = _read(args.infile)
        body["basis"] = _read(args.basis)
    if name == "decohere":
        body["t"] = args.t
        body["gamma"] = args.gamma
    if name == "tomo":
        body["record"] = _read(args.infile)
    if name == "hierarchy":
        body["d"] = args.d
    if name == "scene":
        body["kind"] = args.kind
        if getattr(args, "basis", None):
            body["basis"] = _read(args.basis)
    return body


def _ensemble_components(path):
    """Expand an ensemble file into inline components for the shared op."""
    import os

    base = os.path.dirname(os.path.abspath(path))
    comps = []
    for line in _read(path).splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split(maxsplit=1)
        if len(parts) != 2:
            raise UsageError(f"ensemble line needs 'weight path': {line!r}")
        mpath = parts[1].strip()
        if not os.path.isabs(mpath):
            mpath = os.path.join(base, mpath)
        comps.append({"weight": float(parts[0]), "matrix": _read(mpath)})
    return comps


def build_parser():
    parser = argparse.ArgumentParser(
        prog="statespace",
        description="Euclidean statespace geometry of quantum states",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_, **flags):
        p = sub.add_parser(name, help=help_)
        for flag, kw in flags.items():
            p.add_argument(flag, **kw)
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--out", help="write the payload (or scene JSON) here")
        return p

    add("validate", "check a matrix and report state metrics",
        **{"--in": dict(dest="infile", help="matrix file"),
           "--point": dict(help="statepoint file")})
    add("eig", "eigenvalues and canonical eigenvectors",
        **{"--in": dict(dest="infile", required=True)})
    add("distance", "statespace distance between two states",
        **{"--a": dict(required=True), "--b": dict(required=True)})
    add("angle", "angle between statevectors from the deep origin",
        **{"--a": dict(required=True), "--b": dict(required=True)})
    add("mix", "mix a weighted ensemble file",
        **{"--in": dict(dest="infile", required=True)})
    add("project", "zero the off-diagonals (simplex projection)",
        **{"--in": dict(dest="infile", required=True)})
    add("leaf", "decoherence-leaf coordinates",
        **{"--in": dict(dest="infile", required=True)})
    add("measure", "outcome probabilities in a basis",
        **{"--in": dict(dest="infile", required=True),
           "--basis": dict(required=True)})
    add("decohere", "damp off-diagonals in a basis for a time t",
        **{"--in": dict(dest="infile", required=True),
           "--basis": dict(required=True),
           "--t": dict(type=float, required=True),
           "--gamma": dict(type=float, default=1.0)})
    add("tomo", "reconstruct a state from a tomography record",
        **{"--in": dict(dest="infile", required=True)})
    add("hierarchy", "closed-form lengths and angles at dimension d",
        **{"--d": dict(type=int, required=True)})
    add("scene", "emit a scene document",
        **{"--kind": dict(required=True, choices=sorted(ops.SCENE_KINDS)),
           "--in": dict(dest="infile"),
           "--point": dict(help="statepoint file"),
           "--basis": dict()})

    serve = sub.add_parser("serve", help="run the HTTP service")
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--port", type=int, default=8077)
    serve.add_argument("--cors-origin", default=None)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)

    if args.command == "serve":
        from .service import serve

        serve(host=args.host, port=args.port, cors_origin=args.cors_origin)
        return 0

    try:
        body = _body_from_args(args)
        payload = ops.OPERATIONS[args.command](body)
        if args.out:
            if args.command == "scene":
                _write(args.out, json.dumps(payload, indent=2) + "\n")
            elif "matrix" in payload:
                _write(args.out, payload["matrix"])
            else:
                _write(args.out, ops.payload_bytes(payload).decode())
        if args.format == "json":
            sys.stdout.write(ops.payload_bytes(payload).decode())
        else:
            _render_text(args.command, payload, sys.stdout)
    except UsageError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return 2
    except StatespaceError as e:
        print(f"error [{e.code}]: {e}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
