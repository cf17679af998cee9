"""Matrices attached to loose-graph morphisms.

The local matrix of a morphism at a vertex describes the induced map of
affine patches in star coordinates; the global matrix acts on the ambient
coordinates (one per completion vertex) and is the 0/1 indicator of the
induced completion-vertex map.  Kernels and rank criteria are taken over F_2,
matching the base layer.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import gfq
from .graphs import LooseMorphism
from .scheme import SchemeModel


def _star_edges(graph, v: str) -> list[str]:
    seen = []
    for e, ends in graph.edges.items():
        if v in ends and e not in seen:
            seen.append(e)
    return seen


def local_matrix(morphism: LooseMorphism, v: str):
    """Star-coordinate matrix at source vertex v.

    Rows are the star edges of the image vertex, columns the star edges of v.
    An edge mapping to an edge contributes a unit column; a contracted edge a
    zero column.  If the image star is empty a single synthetic zero row keeps
    the shape nonempty.
    """
    morphism.validate()
    src, tgt = morphism.source, morphism.target
    w = morphism.vmap[v]
    cols = _star_edges(src, v)
    rows = _star_edges(tgt, w)
    if not rows:
        return (tuple(0 for _ in cols),) if cols else ((0,),)
    mat = []
    for r in rows:
        row = []
        for c in cols:
            kind, name = morphism.emap[c]
            row.append(1 if kind == "edge" and name == r else 0)
        mat.append(tuple(row))
    return tuple(mat)


def global_matrix(morphism: LooseMorphism):
    """The matrix P acting on ambient coordinates: rows indexed by target
    completion vertices, columns by source completion vertices."""
    cmap = morphism.completion_vertex_map()
    src_names = morphism.source.completion().names
    tgt_names = morphism.target.completion().names
    tgt_index = {v: i for i, v in enumerate(tgt_names)}
    mat = [[0] * len(src_names) for _ in tgt_names]
    for j, v in enumerate(src_names):
        mat[tgt_index[cmap[v]]][j] = 1
    return tuple(tuple(row) for row in mat)


def compose_check(g: LooseMorphism, f: LooseMorphism) -> bool:
    """P_{g o f} == P_g . P_f over F_2, for composable f: G1->G2, g: G2->G3."""
    F2 = gfq.get_field(2)
    composite = g.compose(f)
    lhs = global_matrix(composite)
    rhs = gfq.mat_mul(F2, global_matrix(g), global_matrix(f))
    return lhs == rhs


def matrix_rank_f2(mat) -> int:
    return gfq.mat_rank(gfq.get_field(2), mat)


@dataclass(frozen=True)
class InjectivityReport:
    rank: int
    source_dim: int
    target_dim: int
    injective: bool


def injectivity_criterion(morphism: LooseMorphism) -> InjectivityReport:
    """P defines an injective linear map iff the target is at least as large
    and P has full column rank over F_2."""
    mat = global_matrix(morphism)
    m1 = len(mat[0])
    m2 = len(mat)
    rank = matrix_rank_f2(mat)
    return InjectivityReport(rank, m1, m2, m2 >= m1 and rank == m1)


def kernel_f1(morphism: LooseMorphism, q: int = 2) -> dict:
    """Scheme points of the source killed by the global matrix, and the open
    complement U on which the induced rational map is defined."""
    F = gfq.get_field(q)
    mat = global_matrix(morphism)
    source = SchemeModel(morphism.source, q)
    kernel = []
    domain = []
    for p in source.points:
        img = gfq.mat_vec(F, mat, p)
        if all(c == 0 for c in img):
            kernel.append(p)
        else:
            domain.append(p)
    return {"kernel": kernel, "domain": domain, "matrix": mat}


def apply_morphism(morphism: LooseMorphism, q: int = 2) -> list[dict]:
    """Evaluate the induced rational map on the rational points of the source.

    Points in the kernel have no image; for the others we record the image
    point and whether it lands in the target point set (the map is only
    rational, so landing outside is reportable, not an error).
    """
    F = gfq.get_field(q)
    mat = global_matrix(morphism)
    source = SchemeModel(morphism.source, q)
    target = SchemeModel(morphism.target, q)
    out = []
    for p in source.points:
        img = gfq.mat_vec(F, mat, p)
        if all(c == 0 for c in img):
            out.append({"point": p, "image": None, "in_target": False})
        else:
            norm = gfq.normalize_point(F, img)
            out.append({"point": p, "image": norm, "in_target": norm in target.point_index})
    return out
