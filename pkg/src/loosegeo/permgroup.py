"""Permutation groups with exact integer orders.

Permutations are image tuples on range(degree).  The stabilizer chain is the
plain deterministic Schreier-Sims with Schreier-generator closure and
deduplication; group orders here stay small (at most a few tens of
thousands), so no randomization or fancy data structures are needed.
"""

from __future__ import annotations


def identity_perm(n: int) -> tuple[int, ...]:
    return tuple(range(n))


def is_identity(p) -> bool:
    return all(p[i] == i for i in range(len(p)))


def compose(p, q):
    """p after q: (p*q)(x) = p(q(x))."""
    return tuple(p[q[x]] for x in range(len(p)))


def inverse(p):
    out = [0] * len(p)
    for i, img in enumerate(p):
        out[img] = i
    return tuple(out)


class _Level:
    __slots__ = ("point", "gens", "transversal")

    def __init__(self, point: int):
        self.point = point
        self.gens: list[tuple[int, ...]] = []
        self.transversal: dict[int, tuple[int, ...]] = {}

    def rebuild(self, degree: int) -> None:
        ident = identity_perm(degree)
        trans = {self.point: ident}
        frontier = [self.point]
        while frontier:
            pt = frontier.pop()
            for g in self.gens:
                img = g[pt]
                if img not in trans:
                    trans[img] = compose(g, trans[pt])
                    frontier.append(img)
        self.transversal = trans


class PermGroup:
    def __init__(self, generators, degree: int, base_hint=()):
        self.degree = degree
        self.generators = [tuple(g) for g in generators if not is_identity(g)]
        self._base_hint = tuple(base_hint)
        self._levels: list[_Level] | None = None

    # -- stabilizer chain ---------------------------------------------------

    def _chain(self) -> list[_Level]:
        if self._levels is None:
            self._levels = self._build_chain()
        return self._levels

    def _build_chain(self) -> list[_Level]:
        degree = self.degree
        levels: list[_Level] = [_Level(b) for b in self._base_hint]

        def build(i: int, gens: list[tuple[int, ...]]) -> None:
            gens = sorted(set(g for g in gens if not is_identity(g)))
            if i >= len(levels):
                if not gens:
                    return
                moved = min(min(x for x in range(degree) if g[x] != x) for g in gens)
                levels.append(_Level(moved))
            level = levels[i]
            # every generator takes part in the orbit: one fixing the base
            # point can still extend the orbit from another orbit point
            level.gens = list(gens)
            level.rebuild(degree)
            schreier = set()
            for pt, u in level.transversal.items():
                for s in level.gens:
                    rep = level.transversal[s[pt]]
                    sg = compose(inverse(rep), compose(s, u))
                    if not is_identity(sg):
                        schreier.add(sg)
            build(i + 1, sorted(schreier))

        build(0, list(self.generators))
        # drop trailing trivial hint levels is unnecessary; keep determinism
        return levels

    def order(self) -> int:
        n = 1
        for level in self._chain():
            n *= len(level.transversal)
        return n

    def sift(self, p):
        """Strip p through the chain; returns the residue (identity iff member)."""
        g = tuple(p)
        for level in self._chain():
            img = g[level.point]
            if img not in level.transversal:
                return g
            g = compose(inverse(level.transversal[img]), g)
        return g

    def contains(self, p) -> bool:
        if len(p) != self.degree:
            return False
        return is_identity(self.sift(p))

    def elements(self):
        """All elements; only call when the order is known to be small."""
        chain = self._chain()
        out = [identity_perm(self.degree)]
        for level in reversed(chain):
            out = [compose(u, g) for u in level.transversal.values() for g in out]
        return out

    def is_subgroup_of(self, other: "PermGroup") -> bool:
        return all(other.contains(g) for g in self.generators)

    def same_group(self, other: "PermGroup") -> bool:
        return (
            self.degree == other.degree
            and self.order() == other.order()
            and self.is_subgroup_of(other)
        )

    def orbit(self, point: int) -> set[int]:
        seen = {point}
        frontier = [point]
        while frontier:
            pt = frontier.pop()
            for g in self.generators:
                if g[pt] not in seen:
                    seen.add(g[pt])
                    frontier.append(g[pt])
        return seen


def bsgs(generators, degree: int, base_hint=()) -> PermGroup:
    return PermGroup(generators, degree, base_hint=base_hint)


def pointwise_stabilizer(group: PermGroup, points) -> PermGroup:
    """Subgroup fixing every listed point, via a chain based at those points."""
    points = list(points)
    rebased = PermGroup(group.generators, group.degree, base_hint=points)
    chain = rebased._chain()
    k = len(points)
    gens = chain[k].gens + [g for lvl in chain[k + 1 :] for g in lvl.gens] if k < len(chain) else []
    # generators of level k generate the pointwise stabilizer already, but the
    # union over deeper levels is harmless and keeps this obviously correct
    return PermGroup(gens, group.degree)


def setwise_stabilizer(group: PermGroup, points) -> PermGroup:
    """Subgroup mapping the point set onto itself, by backtrack over the chain."""
    target = set(points)
    chain = group._chain()
    degree = group.degree
    found: list[tuple[int, ...]] = []

    def dfs(level: int, g):
        if level == len(chain):
            if {g[p] for p in target} == target:
                found.append(g)
            return
        lvl = chain[level]
        inside = lvl.point in target
        for pt, u in sorted(lvl.transversal.items()):
            img = g[pt]
            if (img in target) != inside:
                continue
            dfs(level + 1, compose(g, u))

    dfs(0, identity_perm(degree))
    return PermGroup(found, degree)


def is_normal(group: PermGroup, sub: PermGroup) -> bool:
    for g in group.generators:
        ginv = inverse(g)
        for h in sub.generators:
            if not sub.contains(compose(g, compose(h, ginv))):
                return False
    return True


def intersection_order(a: PermGroup, b: PermGroup) -> int:
    """|A meet B| by enumerating the smaller group; both must be small."""
    small, big = (a, b) if a.order() <= b.order() else (b, a)
    return sum(1 for e in small.elements() if big.contains(e))


def verify_central_product(group: PermGroup, factors) -> dict:
    """Check that `group` is the central product of the listed subgroups.

    Verifies pairwise commutation of generators, generation, and reports the
    pairwise intersection orders (which must be central, hence abelian; we
    check each intersection centralizes everything in sight).
    """
    factors = list(factors)
    commute = True
    for i, a in enumerate(factors):
        for b in factors[i + 1 :]:
            for g in a.generators:
                for h in b.generators:
                    if compose(g, h) != compose(h, g):
                        commute = False
    gens = [g for f in factors for g in f.generators]
    generated = PermGroup(gens, group.degree)
    generates = generated.same_group(group)
    inter = {}
    for i in range(len(factors)):
        for j in range(i + 1, len(factors)):
            inter[(i, j)] = intersection_order(factors[i], factors[j])
    return {
        "commute": commute,
        "generates": generates,
        "group_order": group.order(),
        "factor_orders": [f.order() for f in factors],
        "intersection_orders": inter,
        "ok": commute and generates,
    }


def factor_order_identity(group: PermGroup, normal: PermGroup, outer_orders) -> dict:
    """Check |G| = |N| * product(outer orders) with N normal in G."""
    normality = is_normal(group, normal) and normal.is_subgroup_of(group)
    expected = normal.order()
    for n in outer_orders:
        expected *= n
    return {
        "normal": normality,
        "group_order": group.order(),
        "normal_order": normal.order(),
        "outer_orders": list(outer_orders),
        "ok": normality and group.order() == expected,
    }
