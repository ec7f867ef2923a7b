"""Request handlers shared by the HTTP service and the CLI.

Each handler takes a validated request model, runs the library and returns
a JSON-ready dict.  Domain failures surface as DomainError; the service
maps them to HTTP 400, the CLI to exit code 1.
"""

from __future__ import annotations

from .. import cartan, characters, linkage, orders, serialize, weights
from ..errors import DomainError
from . import schemas


def _rs(req: schemas.TypeRequest) -> cartan.RootSystem:
    return cartan.root_system(req.type)


def _weight(rs, model: schemas.WeightModel) -> weights.Weight:
    try:
        return serialize.weight_from_json(model.model_dump(), rank=rs.rank)
    except ValueError as exc:
        raise DomainError(str(exc)) from exc


def _root(rs, model: schemas.RootModel) -> cartan.AffineRoot:
    try:
        return serialize.root_from_json(rs, model.model_dump())
    except ValueError as exc:
        raise DomainError(str(exc)) from exc


def _box(rs, box_model, depth, default_top=None) -> orders.Box:
    if box_model is not None:
        tops = [_weight(rs, t) for t in box_model.tops]
        return orders.Box.make(tops, box_model.depth)
    if default_top is None:
        raise DomainError("a box is required")
    return orders.Box.make([default_top], depth)


def parse_fiber(rs, text: str) -> linkage.FiberSpec:
    """Fiber syntax: generic | closed | subgeneric:<simple-index-or-coords>."""
    text = text.strip().lower()
    if text == "generic":
        return linkage.FiberSpec.generic()
    if text == "closed":
        return linkage.FiberSpec.closed()
    if text.startswith("subgeneric:"):
        spec = text.split(":", 1)[1]
        try:
            parts = [int(p) for p in spec.split(",")]
            if len(parts) == 1:
                idx = parts[0]
                if not 1 <= idx <= rs.rank:
                    raise ValueError
                coords = tuple(int(i == idx - 1) for i in range(rs.rank))
            else:
                coords = tuple(parts)
            return linkage.FiberSpec.subgeneric(rs, coords)
        except ValueError as exc:
            raise DomainError(f"bad subgeneric fiber {spec!r}") from exc
    raise DomainError(f"bad fiber {text!r}")


def info(req: schemas.TypeRequest) -> dict:
    rs = _rs(req)
    return {
        "type": str(rs.cartan_type),
        "rank": rs.rank,
        "cartan_matrix": [list(row) for row in rs.cartan_matrix],
        "symmetrizers": [serialize.frac_str(d) for d in rs.symmetrizers],
        "positive_roots": [list(a) for a in rs.positive_roots],
        "highest_root": list(rs.highest_root),
        "dual_coxeter": rs.dual_coxeter,
        "marks_dual": list(rs.marks_dual),
        "critical_level": serialize.frac_str(rs.critical_level),
        "simple_affine_roots": [
            serialize.root_to_json(b) for b in cartan.simple_affine_roots(rs)
        ],
    }


def pair(req: schemas.PairRequest) -> dict:
    rs = _rs(req)
    value = weights.pairing(rs, _weight(rs, req.weight), _root(rs, req.root))
    return {"value": serialize.frac_str(value)}


def reflect(req: schemas.ReflectRequest) -> dict:
    rs = _rs(req)
    out = weights.reflect(rs, _root(rs, req.root), _weight(rs, req.weight))
    return {"weight": serialize.weight_to_json(out)}


def dot(req: schemas.ReflectRequest) -> dict:
    rs = _rs(req)
    out = weights.dot(rs, _root(rs, req.root), _weight(rs, req.weight))
    return {"weight": serialize.weight_to_json(out)}


def leq(req: schemas.LeqRequest) -> dict:
    rs = _rs(req)
    return {"leq": orders.leq(rs, _weight(rs, req.lower), _weight(rs, req.upper))}


def box(req: schemas.BoxRequest) -> dict:
    rs = _rs(req)
    members = orders.enumerate_box(rs, _box(rs, req.box, 0))
    return {"weights": [serialize.weight_to_json(w) for w in members]}


def hasse(req: schemas.BoxRequest) -> dict:
    rs = _rs(req)
    b = _box(rs, req.box, 0)
    nodes = orders.enumerate_box(rs, b)
    edges = orders.hasse(rs, b)
    return {
        "nodes": [serialize.weight_to_json(w) for w in nodes],
        "edges": [
            [serialize.weight_to_json(mu), serialize.weight_to_json(lam)]
            for mu, lam in edges
        ],
    }


def hasse_dot(req: schemas.BoxRequest) -> str:
    rs = _rs(req)
    b = _box(rs, req.box, 0)
    return serialize.dot_graph(orders.enumerate_box(rs, b), orders.hasse(rs, b))


def integrality(req: schemas.IntegralityRequest) -> dict:
    rs = _rs(req)
    data = linkage.integrality(rs, _weight(rs, req.weight))
    return {
        "finite_integral_roots": [list(a) for a in data.finite_integral_roots],
        "includes_imaginary": data.includes_imaginary,
    }


def kk_predecessors(req: schemas.KKRequest) -> dict:
    rs = _rs(req)
    lam = _weight(rs, req.weight)
    b = _box(rs, req.box, req.depth, default_top=lam)
    preds = linkage.kk_predecessors(rs, lam, parse_fiber(rs, req.fiber), b)
    return {
        "predecessors": [
            {
                "weight": serialize.weight_to_json(mu),
                "root": serialize.root_to_json(beta),
                "n": n,
            }
            for mu, beta, n in preds
        ]
    }


def linkage_class(req: schemas.ClassRequest) -> dict:
    rs = _rs(req)
    lam = _weight(rs, req.weight)
    b = _box(rs, req.box, req.depth, default_top=lam)
    cls = linkage.linkage_class(rs, lam, parse_fiber(rs, req.fiber), req.restricted, b)
    return {"weights": [serialize.weight_to_json(w) for w in cls]}


def linkage_class_dot(req: schemas.ClassRequest) -> str:
    rs = _rs(req)
    lam = _weight(rs, req.weight)
    b = _box(rs, req.box, req.depth, default_top=lam)
    cls = linkage.linkage_class(rs, lam, parse_fiber(rs, req.fiber), req.restricted, b)
    highlight = {w: 0 for w in cls}
    return serialize.dot_graph(orders.enumerate_box(rs, b), orders.hasse(rs, b), highlight)


def alpha_down(req: schemas.AlphaDownRequest) -> dict:
    rs = _rs(req)
    lam = _weight(rs, req.weight)
    b = _box(rs, req.box, req.depth, default_top=lam)
    try:
        out = linkage.alpha_down(rs, req.alpha, lam, b)
    except ValueError as exc:
        raise DomainError(str(exc)) from exc
    return {"weight": serialize.weight_to_json(out)}


def partition(req: schemas.PartitionRequest) -> dict:
    rs = _rs(req)
    return {"value": characters.partition(rs, _weight(rs, req.gamma))}


def verma_character(req: schemas.CharacterRequest) -> dict:
    rs = _rs(req)
    lam = _weight(rs, req.weight)
    b = _box(rs, req.box, req.depth, default_top=lam)
    return serialize.character_table_to_json(characters.verma_character(rs, lam, b))


def weyl_kac_character(req: schemas.CharacterRequest) -> dict:
    rs = _rs(req)
    lam = _weight(rs, req.weight)
    b = _box(rs, req.box, req.depth, default_top=lam)
    return serialize.character_table_to_json(characters.weyl_kac_character(rs, lam, b))


def q_multiplicities(req: schemas.CharacterRequest) -> dict:
    rs = _rs(req)
    mu = _weight(rs, req.weight)
    b = _box(rs, req.box, req.depth, default_top=mu)
    return {"entries": serialize.multiplicity_map_to_json(characters.q_multiplicities(rs, mu, b))}


def projective_multiplicities(req: schemas.ProjRequest) -> dict:
    rs = _rs(req)
    mu = _weight(rs, req.weight)
    b = _box(rs, req.box, req.depth, default_top=mu)
    out = characters.projective_multiplicities(
        rs, mu, parse_fiber(rs, req.fiber), b, restricted=req.restricted
    )
    return {"entries": serialize.multiplicity_map_to_json(out)}


def decomposition_matrix(req: schemas.DecompRequest) -> dict:
    rs = _rs(req)
    b = _box(rs, req.box, 0)
    matrix = characters.decomposition_matrix(rs, parse_fiber(rs, req.fiber), b)
    return serialize.decomposition_matrix_to_json(matrix)
