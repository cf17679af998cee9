"""The degenerate base layer: prime spectra of free "field with one element"
algebras, their Proj counterpart, and point congruences.

Points of Spec of the free algebra on n variables are in bijection with the
subsets of the variables (the ideal generated by the subset); specialization
is inclusion.  Closed points of the Proj counterpart on m+1 variables match
the F_2-rational points of PG(m, 2).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .permgroup import PermGroup

MAX_SPEC_VARS = 20
MAX_TOPO_POINTS = 2**16


@dataclass(frozen=True)
class FiniteSpace:
    """A finite poset of points under specialization.

    Points are bitmasks over the variable indices; x <= y means x specializes
    from y ... concretely we order by subset inclusion (the generic point is
    the empty set).
    """

    n_vars: int
    points: tuple[int, ...]

    def leq(self, a: int, b: int) -> bool:
        """a is a generization of b (the ideal of a is contained in that of b)."""
        return a & b == a

    def height(self, a: int) -> int:
        return bin(a).count("1")

    def generic_point(self) -> int:
        return 0

    def closed_point(self) -> int:
        return (1 << self.n_vars) - 1


def spec_points(n: int) -> FiniteSpace:
    """Spec of the free algebra on n variables: all 2**n 'variable subset' ideals."""
    if not 0 <= n <= MAX_SPEC_VARS:
        raise ValueError(f"n out of range: {n}")
    return FiniteSpace(n, tuple(range(2**n)))


def height_census(space: FiniteSpace) -> dict[int, int]:
    out: dict[int, int] = {}
    for p in space.points:
        h = space.height(p)
        out[h] = out.get(h, 0) + 1
    # sanity against the binomial count
    for h, cnt in out.items():
        assert cnt == comb(space.n_vars, h)
    return out


def proj_c_closed_point_count(m: int) -> int:
    """Closed-point count of the Proj construction on m+1 variables.

    These correspond to the F_2-rational points of PG(m, 2).
    """
    if m < 0:
        raise ValueError("m must be >= 0")
    return 2 ** (m + 1) - 1


@dataclass(frozen=True)
class PointCongruence:
    """The congruence attached to a 0/1 coordinate vector.

    Generators: x_i ~ 0 for every zero coordinate, and x_i ~ x_pivot for every
    further unit coordinate, where pivot is the first index with a 1.
    """

    vector: tuple[int, ...]
    pivot: int
    zero_indices: tuple[int, ...]
    unit_pairs: tuple[tuple[int, int], ...]

    def generators(self):
        gens = [("zero", i) for i in self.zero_indices]
        gens += [("eq", i, j) for i, j in self.unit_pairs]
        return gens


def point_congruence(vector) -> PointCongruence:
    vec = tuple(int(v) for v in vector)
    if any(v not in (0, 1) for v in vec):
        raise ValueError("coordinates must be 0 or 1")
    ones = [i for i, v in enumerate(vec) if v == 1]
    if not ones:
        raise ValueError("the zero vector carries no point congruence")
    pivot = ones[0]
    zero = tuple(i for i, v in enumerate(vec) if v == 0)
    pairs = tuple((i, pivot) for i in ones[1:])
    return PointCongruence(vec, pivot, zero, pairs)


def topo_aut_group(space: FiniteSpace) -> PermGroup:
    """Automorphisms of the specialization order, as a permutation group.

    Backtracking with a small invariant refinement; the poset sizes used in
    practice are tiny (the bound below is a hard safety stop).
    """
    pts = list(space.points)
    if len(pts) > MAX_TOPO_POINTS:
        raise ValueError("space too large for automorphism search")
    n = len(pts)
    below = [frozenset(j for j, q in enumerate(pts) if space.leq(q, p)) for p in pts]
    above = [frozenset(j for j, q in enumerate(pts) if space.leq(p, q)) for p in pts]

    # invariant: (|down-set|, |up-set|), iterated once with neighbour multisets
    inv = [(len(below[i]), len(above[i])) for i in range(n)]
    inv = [
        (inv[i], tuple(sorted(inv[j] for j in below[i])), tuple(sorted(inv[j] for j in above[i])))
        for i in range(n)
    ]

    found: list[tuple[int, ...]] = []
    image = [-1] * n
    used = [False] * n

    def consistent(i: int, img: int) -> bool:
        if inv[i] != inv[img]:
            return False
        # order relations against already-assigned points must match
        for j in range(n):
            if image[j] < 0 or j == i:
                continue
            if (j in below[i]) != (image[j] in below[img]):
                return False
            if (j in above[i]) != (image[j] in above[img]):
                return False
        return True

    def dfs(i: int) -> None:
        if i == n:
            found.append(tuple(image))
            return
        for img in range(n):
            if used[img] or not consistent(i, img):
                continue
            image[i] = img
            used[img] = True
            dfs(i + 1)
            image[i] = -1
            used[img] = False

    dfs(0)
    return PermGroup(found, n)
