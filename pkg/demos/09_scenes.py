"""Emitting scene documents, and rendering them with matplotlib.

Scenes are plain JSON (points, segments, annotations) meant for the browser
explorer or any plotting tool.  This script writes the three classic
figures next to itself and, when matplotlib is importable, rasterizes the
two-dimensional ones to PNG.
"""

import json
import pathlib

import numpy as np

import statespace as st

HERE = pathlib.Path(__file__).parent
OUT = HERE / "out"
OUT.mkdir(exist_ok=True)

up = st.validate_density([[1, 0], [0, 0]])
down = st.validate_density([[0, 0], [0, 1]])
right = st.to_density(st.ket([1 / np.sqrt(2), 1 / np.sqrt(2)]))
mixed = st.mix(st.WeightedEnsemble([(1 / 3, up), (1 / 3, down), (1 / 3, right)]))

docs = {
    "mixture_circle": st.scene_bloch(mixed, st.computational_basis(2)),
    "mixture_sphere": st.scene_bloch(mixed, st.computational_basis(2), sphere=True),
    "qutrit_simplex": st.scene_simplex(
        st.validate_density(np.diag([0.5, 0.3, 0.2]))
    ),
    "ququart_simplex": st.scene_simplex(
        st.validate_density(np.diag([0.4, 0.3, 0.2, 0.1]))
    ),
}
for name, doc in docs.items():
    path = OUT / f"{name}.json"
    path.write_text(doc.to_json())
    print(f"wrote {path} ({doc.kind}: {len(doc.points)} points, "
          f"{len(doc.segments)} segments)")

try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    print("matplotlib not installed; skipping PNG rendering")
    raise SystemExit(0)

STYLE_COLORS = {
    "outline": "#999999",
    "cut": "#d62728",
    "leaf": "#1f77b4",
    "perpendicular": "#2ca02c",
    "probability": "#ff7f0e",
}

for name in ("mixture_circle", "qutrit_simplex"):
    doc = docs[name]
    fig, ax = plt.subplots(figsize=(5, 5))
    for seg in doc.segments:
        xs, ys = zip(seg.a, seg.b)
        ax.plot(xs, ys, color=STYLE_COLORS.get(seg.style, "#444444"),
                lw=1.0 if seg.style == "outline" else 1.8)
    for p in doc.points:
        if p.style in ("vertex", "statepoint", "center", "foot"):
            ax.plot(*p.coords, "o",
                    color="#000000" if p.style == "statepoint" else "#777777",
                    ms=6 if p.style == "statepoint" else 4)
            ax.annotate(p.label, p.coords, textcoords="offset points",
                        xytext=(4, 4), fontsize=7)
    for note in doc.annotations:
        ax.annotate(note.text, note.anchor, textcoords="offset points",
                    xytext=(4, -8), fontsize=6, color="#555555")
    ax.set_aspect("equal")
    ax.axis("off")
    png = OUT / f"{name}.png"
    fig.savefig(png, dpi=150, bbox_inches="tight")
    plt.close(fig)
    print(f"rendered {png}")
