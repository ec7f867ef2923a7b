"""JSON and DOT encodings.

Rationals travel as strings, "p/q" or plain "n", never as floats.  All
emitted collections are canonically sorted so identical requests produce
byte-identical output.
"""

from __future__ import annotations

from fractions import Fraction

from .cartan import IMAGINARY, REAL, AffineRoot, RootSystem, imaginary_root, real_root
from .characters import CharacterTable, DecompositionMatrix
from .weights import Weight


def frac_str(x) -> str:
    return str(Fraction(x))


def parse_frac(text) -> Fraction:
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int):
        return Fraction(text)
    if isinstance(text, str):
        return Fraction(text)
    raise ValueError(f"cannot parse rational from {text!r}")


def weight_to_json(w: Weight) -> dict:
    return {
        "labels": [frac_str(l) for l in w.labels],
        "level": frac_str(w.level),
        "degree": frac_str(w.degree),
    }


def weight_from_json(obj: dict, rank: int | None = None) -> Weight:
    labels = [parse_frac(l) for l in obj["labels"]]
    if rank is not None and len(labels) != rank:
        raise ValueError(f"expected {rank} labels, got {len(labels)}")
    return Weight.make(labels, parse_frac(obj.get("level", 0)), parse_frac(obj.get("degree", 0)))


def root_to_json(beta: AffineRoot) -> dict:
    return {"kind": beta.kind, "finite": list(beta.finite), "n": beta.n}


def root_from_json(rs: RootSystem, obj: dict) -> AffineRoot:
    kind = obj.get("kind", REAL)
    if kind == IMAGINARY:
        return imaginary_root(rs, int(obj["n"]))
    return real_root(rs, obj["finite"], int(obj.get("n", 0)))


def weight_label(w: Weight) -> str:
    """Compact one-line form used for DOT node labels."""
    labels = ",".join(frac_str(l) for l in w.labels)
    return f"({labels};{frac_str(w.level)};{frac_str(w.degree)})"


def character_table_to_json(table: CharacterTable) -> dict:
    return {
        "base": weight_to_json(table.base),
        "entries": [
            {"weight": weight_to_json(w), "mult": m} for w, m in table.sorted_entries()
        ],
    }


def multiplicity_map_to_json(entries: dict) -> list[dict]:
    return [{"weight": weight_to_json(w), "mult": m} for w, m in sorted(entries.items())]


def decomposition_matrix_to_json(matrix: DecompositionMatrix) -> dict:
    weights = list(matrix.weights)
    cells = [
        {"row": weights.index(lam), "col": weights.index(mu), "value": v}
        for (lam, mu), v in sorted(matrix.entries.items())
    ]
    return {"weights": [weight_to_json(w) for w in weights], "cells": cells}


_PALETTE = (
    "lightblue", "lightsalmon", "palegreen", "khaki", "plum",
    "lightcyan", "mistyrose", "wheat",
)


def dot_graph(nodes, edges, highlight=None) -> str:
    """A Graphviz digraph; edges point from the smaller to the larger weight.

    highlight, when given, maps a weight to a class index used for coloring.
    """
    nodes = sorted(nodes)
    ids = {w: f"w{i}" for i, w in enumerate(nodes)}
    lines = ["digraph order {"]
    for w in nodes:
        attrs = [f'label="{weight_label(w)}"']
        if highlight is not None and w in highlight:
            color = _PALETTE[highlight[w] % len(_PALETTE)]
            attrs.append(f'style=filled fillcolor="{color}"')
        lines.append(f'  {ids[w]} [{" ".join(attrs)}];')
    for mu, lam in sorted(edges):
        lines.append(f"  {ids[mu]} -> {ids[lam]};")
    lines.append("}")
    return "\n".join(lines)
