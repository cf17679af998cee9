"""Point sets in PG(m-1, q) attached to loose graphs.

Coordinates are indexed by completion vertices.  Every original vertex v
contributes the affine patch A_v: points supported on v and its completion
neighbours with nonzero v-coordinate.  Every vertexless edge contributes a
punctured line (its line minus the two coordinate points).

Membership is therefore a pure support condition, which makes counting over
any extension F_{q^r} exact: the number of points of a subspace W with
support inside a coordinate set only depends on F_q-ranks of column
submatrices of a basis of W, so extension counts are integer polynomial
evaluations.  All containment and stability tests below ride on that.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product

from . import gfq
from .graphs import LooseGraph

MAX_AMBIENT = 12
MAX_POINTS = 10**6


@dataclass(frozen=True)
class Piece:
    """One locally closed piece of the point set."""

    kind: str  # "vertex" or "gm"
    label: str
    support_mask: int  # coordinates the piece lives on
    required_bit: int  # vertex coordinate that must not vanish (-1 for gm)
    dim: int  # affine dimension (vertex pieces) or 1 (gm lines)


class SchemeModel:
    def __init__(self, graph: LooseGraph, q: int):
        self.graph = graph
        self.q = q
        self.F = gfq.get_field(q)
        self.completion = graph.completion()
        self.m = len(self.completion)
        if self.m == 0:
            raise ValueError("empty graph has no ambient space")
        if self.m > MAX_AMBIENT:
            raise ValueError(f"ambient dimension {self.m} exceeds bound {MAX_AMBIENT}")
        self.index = self.completion.index
        self.pieces: list[Piece] = []
        for v in graph.vertices:
            nbrs = self.completion.neighbours(v)
            mask = 1 << self.index[v]
            for w in nbrs:
                mask |= 1 << self.index[w]
            self.pieces.append(Piece("vertex", v, mask, self.index[v], len(nbrs)))
        for e, (a, b) in graph.edges.items():
            if a is None and b is None:
                ca, cb = self.completion.edge_ends[e]
                mask = (1 << self.index[ca]) | (1 << self.index[cb])
                self.pieces.append(Piece("gm", e, mask, -1, 1))
        self._good_supports = self._build_good_supports()
        self.points = self._enumerate_points()
        self.point_index = {p: i for i, p in enumerate(self.points)}
        self._profile_cache: dict = {}
        self._dmap_cache: dict = {}

    # -- membership ---------------------------------------------------------

    def _build_good_supports(self) -> frozenset[int]:
        good = set()
        for piece in self.pieces:
            if piece.kind == "gm":
                good.add(piece.support_mask)
                continue
            vbit = 1 << piece.required_bit
            rest = piece.support_mask & ~vbit
            others = [1 << i for i in range(self.m) if rest >> i & 1]
            for k in range(len(others) + 1):
                for combo in combinations(others, k):
                    mask = vbit
                    for b in combo:
                        mask |= b
                    good.add(mask)
        return frozenset(good)

    def support_mask(self, vec) -> int:
        mask = 0
        for i, c in enumerate(vec):
            if c != 0:
                mask |= 1 << i
        return mask

    def contains(self, vec) -> bool:
        """Membership of a nonzero coordinate vector (over any extension, by support)."""
        return self.support_mask(vec) in self._good_supports

    def _enumerate_points(self) -> list[tuple[int, ...]]:
        F, m = self.F, self.m
        pts = set()
        total = 0
        for piece in self.pieces:
            bits = [i for i in range(m) if piece.support_mask >> i & 1]
            if piece.kind == "vertex":
                free = [i for i in bits if i != piece.required_bit]
                total += self.q ** len(free)
                if total > MAX_POINTS:
                    raise ValueError("point set too large")
                for vals in product(F.elements(), repeat=len(free)):
                    vec = [0] * m
                    vec[piece.required_bit] = 1
                    for i, c in zip(free, vals):
                        vec[i] = c
                    pts.add(gfq.normalize_point(F, tuple(vec)))
            else:
                a, b = bits
                for t in range(1, self.q):
                    vec = [0] * m
                    vec[a] = 1
                    vec[b] = t
                    pts.add(gfq.normalize_point(F, tuple(vec)))
        return sorted(pts)

    # -- counting over extensions -------------------------------------------

    def _dimension_map(self, rows) -> tuple[dict[int, int], list[int]]:
        """For the subspace spanned by rows: dim of the trace on every
        coordinate subset of the support union.  Keyed by the canonical basis.
        """
        key = gfq.echelon(self.F, rows) if rows else ()
        cached = self._dmap_cache.get(key)
        if cached is not None:
            return cached
        F = self.F
        basis = list(key)
        k = len(basis)
        union = 0
        for row in basis:
            union |= self.support_mask(row)
        bits = [i for i in range(self.m) if union >> i & 1]
        u = len(bits)
        dmap: dict[int, int] = {}
        for sub in range(1 << u):
            outside = [i for j, i in enumerate(bits) if not sub >> j & 1]
            if not outside or k == 0:
                dmap[sub] = k
                continue
            cols = [tuple(row[i] for i in outside) for row in basis]
            dmap[sub] = k - gfq.mat_rank(F, cols)
        result = (dmap, bits)
        self._dmap_cache[key] = result
        return result

    def count_in_subspace(self, rows, r: int) -> int:
        """Number of F_{q^r}-points of the subspace spanned by rows that lie
        in the scheme's point set."""
        if not rows:
            return 0
        dmap, bits = self._dimension_map(rows)
        u = len(bits)
        x = self.q**r
        f = [x ** dmap[s] for s in range(1 << u)]
        # Moebius transform: f[T] becomes the count of vectors with support exactly T
        for j in range(u):
            bit = 1 << j
            for s in range(1 << u):
                if s & bit:
                    f[s] -= f[s ^ bit]
        total = 0
        for s in range(1, 1 << u):
            mask = 0
            for j in range(u):
                if s >> j & 1:
                    mask |= 1 << bits[j]
            if mask in self._good_supports:
                total += f[s]
        assert total % (x - 1) == 0
        return total // (x - 1)

    def point_count(self, r: int = 1) -> int:
        """|X(F_{q^r})| from the support census (no enumeration)."""
        x = self.q**r
        total = 0
        for mask in self._good_supports:
            total += (x - 1) ** (bin(mask).count("1") - 1)
        return total

    def profile(self, rows, rmax: int | None = None) -> tuple[int, ...]:
        """Counts of scheme points of a subspace over F_{q^r}, r = 1..rmax.

        The default (and cache key) runs to m+1 so extension stability at one
        degree beyond the ambient bound is always visible.
        """
        key = gfq.echelon(self.F, rows) if rows else ()
        full = self._profile_cache.get(key)
        if full is None:
            full = tuple(self.count_in_subspace(key, r) for r in range(1, self.m + 2))
            self._profile_cache[key] = full
        if rmax is None:
            return full
        return full[:rmax]

    def subspace_dim(self, rows) -> int:
        return len(gfq.echelon(self.F, rows)) if rows else 0


def build_scheme(graph: LooseGraph, q: int) -> SchemeModel:
    return SchemeModel(graph, q)


# ---------------------------------------------------------------------------
# lines of the incidence geometry
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GeometryLine:
    kind: str  # "projective" or "affine"
    points: tuple[tuple[int, ...], ...]  # rational points, sorted
    basis: tuple[tuple[int, ...], ...]
    missing: tuple[int, ...] | None  # the unique rational gap of an affine line


def line_rational_points(F: gfq.FField, basis) -> list[tuple[int, ...]]:
    a, b = basis
    pts = [gfq.normalize_point(F, a)]
    for t in F.elements():
        pts.append(gfq.normalize_point(F, gfq.vec_add(F, gfq.vec_scale(F, t, a), b)))
    return sorted(set(pts))


def classify_line(scheme: SchemeModel, basis) -> GeometryLine | None:
    """Classify the line spanned by two independent vectors, or None.

    projective: every point over every F_{q^r} (r <= m, and still at m+1)
    belongs to the scheme.  affine ("complete affine"): exactly one rational
    point is missing, at every extension degree.
    """
    q, m = scheme.q, scheme.m
    prof = scheme.profile(tuple(basis))
    full = tuple(q**r + 1 for r in range(1, m + 2))
    almost = tuple(q**r for r in range(1, m + 2))
    rat = line_rational_points(scheme.F, basis)
    inside = tuple(sorted(p for p in rat if p in scheme.point_index))
    if prof == full:
        return GeometryLine("projective", inside, gfq.echelon(scheme.F, basis), None)
    if prof == almost:
        gaps = [p for p in rat if p not in scheme.point_index]
        if len(gaps) == 1:
            return GeometryLine("affine", inside, gfq.echelon(scheme.F, basis), gaps[0])
    return None


def classify_lines(scheme: SchemeModel) -> list[GeometryLine]:
    """All projective and complete-affine lines of the point set.

    Any such line carries at least two rational points, so scanning spans of
    point pairs is exhaustive.
    """
    seen = set()
    out = []
    pts = scheme.points
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            key = gfq.echelon(scheme.F, (pts[i], pts[j]))
            if key in seen:
                continue
            seen.add(key)
            line = classify_line(scheme, key)
            if line is not None:
                out.append(line)
    out.sort(key=lambda l: (l.kind, l.points))
    return out


# ---------------------------------------------------------------------------
# higher subspaces and the double rank
# ---------------------------------------------------------------------------

MAX_SUBSPACE_DIM = 4


@dataclass(frozen=True)
class AffinePatch:
    basis: tuple[tuple[int, ...], ...]  # projective completion P
    hyperplane: tuple[tuple[int, ...], ...]  # H with P \ H inside the scheme
    dim: int  # affine dimension
    completed: bool  # whether P itself is fully contained


def _hyperplanes_of(F: gfq.FField, basis):
    """All hyperplanes of the subspace spanned by basis, as echelon bases."""
    k = len(basis)
    out = set()
    for coeffs in gfq.projective_points(F, k):
        # kernel of the functional sum coeffs_i * y_i on internal coordinates
        hyp = []
        pivot = next(i for i in range(k) if coeffs[i] != 0)
        for i in range(k):
            if i == pivot:
                continue
            # internal vector e_i - (c_i / c_pivot) e_pivot lies in the kernel
            factor = F.neg(F.div(coeffs[i], coeffs[pivot]))
            vec = tuple(
                F.add(basis[i][t], F.mul(factor, basis[pivot][t])) for t in range(len(basis[0]))
            )
            hyp.append(vec)
        out.add(gfq.echelon(F, hyp) if hyp else ())
    return sorted(out)


def enumerate_subspaces(scheme: SchemeModel, dmax: int | None = None):
    """Projective subspaces fully contained in the scheme and affine patches
    (subspace minus one of its hyperplanes) contained with incomplete closure.

    Returns (projective, affine) where projective maps dimension -> list of
    echelon bases and affine is a list of AffinePatch.  Search grows spans of
    rational points, pruned by rational counts, so it is exhaustive for the
    constructible containments it reports.
    """
    if dmax is None:
        dmax = max((scheme.graph.degree(v) for v in scheme.graph.vertices), default=1)
    dmax = min(dmax, MAX_SUBSPACE_DIM)
    q, m = scheme.q, scheme.m
    projective: dict[int, list] = {d: [] for d in range(1, dmax + 1)}
    affine: list[AffinePatch] = []

    full_profiles = {
        k: tuple(gfq.pg_size(q**r, k) for r in range(1, m + 2)) for k in range(1, dmax + 2)
    }

    # candidate subspaces of vector dimension k, grown from rational point spans
    level = set()
    for i in range(len(scheme.points)):
        for j in range(i + 1, len(scheme.points)):
            level.add(gfq.echelon(scheme.F, (scheme.points[i], scheme.points[j])))
    for k in range(2, dmax + 2):
        survivors = set()
        for basis in sorted(level):
            prof = scheme.profile(basis)
            d = k - 1  # projective dimension
            fully = prof == full_profiles[k]
            if fully:
                projective[d].append(basis)
            if prof[0] < q**d:
                continue
            survivors.add(basis)
            if not fully:
                want = tuple(q ** (r * d) for r in range(1, m + 2))
                for hyp in _hyperplanes_of(scheme.F, basis):
                    hprof = scheme.profile(hyp)
                    got = tuple(p - h for p, h in zip(prof, hprof))
                    if got == want:
                        affine.append(AffinePatch(basis, hyp, d, False))
        if k == dmax + 1:
            break
        level = set()
        for basis in survivors:
            for p in scheme.points:
                if gfq.in_span(scheme.F, p, basis):
                    continue
                level.add(gfq.echelon(scheme.F, basis + (p,)))
    for d in projective:
        projective[d].sort()
    affine.sort(key=lambda a: (a.dim, a.basis))
    return projective, affine


def clique_number(graph: LooseGraph) -> int:
    """Largest n with a complete subgraph on n real vertices (edges need both ends)."""
    verts = graph.vertices
    adj = {v: set(graph.neighbours(v)) for v in verts}
    best = 1 if verts else 0
    for size in range(2, len(verts) + 1):
        for combo in combinations(verts, size):
            if all(b in adj[a] for a, b in combinations(combo, 2)):
                best = size
                break
        else:
            break
    return best


def double_rank(scheme: SchemeModel, dmax: int | None = None) -> tuple[int, int]:
    """(r, s): r is the top dimension of a contained affine patch whose
    projective closure is not contained; s the top dimension of a fully
    contained projective subspace."""
    projective, affine = enumerate_subspaces(scheme, dmax)
    r = max((a.dim for a in affine), default=0)
    s = max((d for d, items in projective.items() if items), default=0)
    return r, s


# ---------------------------------------------------------------------------
# counting and interpolation
# ---------------------------------------------------------------------------

_PRIME_POWERS = [2, 3, 4, 5, 7, 8, 9, 11, 13, 16]


def count_points(graph: LooseGraph, qs=None) -> dict[int, int]:
    """|X(F_q)| for each q, by enumeration (cross-checked against the census)."""
    if qs is None:
        qs = [2, 3, 4, 5]
    out = {}
    for q in qs:
        model = build_scheme(graph, q)
        out[q] = len(model.points)
        assert out[q] == model.point_count(1)
    return out


def interpolate_count_polynomial(graph: LooseGraph) -> list[Fraction]:
    """Coefficients (ascending) of the polynomial N with N(q) = |X(F_q)|.

    The degree is at most the maximum vertex degree, so max-degree + 1
    prime-power nodes pin it down.
    """
    deg = max((graph.degree(v) for v in graph.vertices), default=1)
    nodes = _PRIME_POWERS[: deg + 1]
    counts = count_points(graph, nodes)
    def poly_mul(a, b):
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
        return out

    coeffs = [Fraction(0)] * len(nodes)
    for xi in nodes:
        basis = [Fraction(1)]
        denom = Fraction(1)
        for xj in nodes:
            if xj == xi:
                continue
            basis = poly_mul(basis, [Fraction(-xj), Fraction(1)])
            denom *= Fraction(xi - xj)
        scale = Fraction(counts[xi]) / denom
        for i, c in enumerate(basis):
            coeffs[i] += scale * c
    return coeffs


# ---------------------------------------------------------------------------
# convexity, spans, decomposition
# ---------------------------------------------------------------------------


def _off_star_points(scheme: SchemeModel, piece: Piece) -> list[tuple[int, ...]]:
    """Points of a vertex patch lying on none of its own star lines, i.e. with
    at least two nonzero coordinates besides the vertex one."""
    out = []
    for p in scheme.points:
        mask = scheme.support_mask(p)
        if mask & ~piece.support_mask:
            continue
        if not mask >> piece.required_bit & 1:
            continue
        if bin(mask).count("1") >= 3:
            out.append(p)
    return out


def convexity_check(scheme: SchemeModel) -> dict:
    """For loose trees: a secant through generic points of two different
    vertex patches meets the rational point set in exactly those two points."""
    if not scheme.graph.is_tree():
        raise ValueError("convexity check applies to loose trees")
    F = scheme.F
    vertex_pieces = [p for p in scheme.pieces if p.kind == "vertex"]
    checked = 0
    failures = []
    for pa, pb in combinations(vertex_pieces, 2):
        for x in _off_star_points(scheme, pa):
            for y in _off_star_points(scheme, pb):
                if x == y:
                    continue
                rat = line_rational_points(F, (x, y))
                hits = [p for p in rat if p in scheme.point_index]
                checked += 1
                if sorted(hits) != sorted({x, y}):
                    failures.append((x, y, tuple(hits)))
    return {"checked": checked, "failures": failures, "ok": not failures}


def subgraph_span_dim(scheme: SchemeModel, completion_vertices) -> int:
    """Projective dimension of the span of the embedded subgraph on the given
    completion vertices: its vertex points that are rational scheme points plus
    all rational scheme points on its edge lines."""
    names = list(completion_vertices)
    idx = scheme.index
    vecs = []
    for v in names:
        unit = tuple(1 if i == idx[v] else 0 for i in range(scheme.m))
        if unit in scheme.point_index:
            vecs.append(unit)
    for a, b in scheme.completion.edge_ends.values():
        if a in names and b in names:
            ua = tuple(1 if i == idx[a] else 0 for i in range(scheme.m))
            ub = tuple(1 if i == idx[b] else 0 for i in range(scheme.m))
            for p in line_rational_points(scheme.F, (ua, ub)):
                if p in scheme.point_index:
                    vecs.append(p)
    if not vecs:
        return -1
    return gfq.mat_rank(scheme.F, vecs) - 1


def complement_points(scheme: SchemeModel) -> list[tuple[int, ...]]:
    """Rational points of the complement construction, in the same ambient basis."""
    comp_graph = scheme.graph.complement_graph()
    slots = getattr(comp_graph, "ambient_slots", {})
    F, m = scheme.F, scheme.m
    idx = scheme.index
    pts = set()
    # vertex patches of retained (fresh) vertices
    for v in comp_graph.vertices:
        nbr = []
        for e, (a, b) in comp_graph.edges.items():
            if v not in (a, b):
                continue
            u0, u1 = slots[e]
            nbr.append(u1 if u0 == v else u0)
        support = [idx[v]] + [idx[w] for w in nbr]
        for vals in product(F.elements(), repeat=len(nbr)):
            vec = [0] * m
            vec[idx[v]] = 1
            for i, c in zip(support[1:], vals):
                vec[i] = c
            pts.add(gfq.normalize_point(F, tuple(vec)))
    # punctured lines of fully vertexless complement edges
    for e, (a, b) in comp_graph.edges.items():
        if a is None and b is None:
            u0, u1 = slots[e]
            for t in range(1, F.q):
                vec = [0] * m
                vec[idx[u0]] = 1
                vec[idx[u1]] = t
                pts.add(gfq.normalize_point(F, tuple(vec)))
    return sorted(pts)


def decompose(scheme: SchemeModel) -> dict:
    """Split the ambient PG(m-1, q) into scheme points, complement points and
    the rest.  The first two must be disjoint."""
    x = set(scheme.points)
    xc = set(complement_points(scheme))
    ambient = gfq.projective_points(scheme.F, scheme.m)
    overlap = x & xc
    y = [p for p in ambient if p not in x and p not in xc]
    return {
        "x": sorted(x),
        "xc": sorted(xc),
        "y": sorted(y),
        "sizes": (len(x), len(xc), len(y)),
        "disjoint": not overlap,
        "ambient_size": len(ambient),
    }
