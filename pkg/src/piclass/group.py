"""Permutation groups backed by a base and strong generating set.

The stabilizer chain is built with a deterministic Schreier-Sims: base points
are taken in ascending order among the points a generator (or sift residue)
moves, orbits are explored breadth-first with generators in list order, and
no randomization is used anywhere.  Two constructions from the same generator
list therefore produce identical chains, identical element enumeration order,
and identical random-element streams for a fixed seed.

A group is immutable once its chain is built; the build itself is guarded by
a lock so concurrent first uses are safe.
"""

import random
import threading
from math import prod

from .errors import CapExceededError, DegreeMismatchError
from .perm import Permutation

DEFAULT_MAX_ELEMENTS = 100_000


class _Level:
    __slots__ = ("point", "gens", "transversal", "orbit")

    def __init__(self, point: int):
        self.point = point
        self.gens: list[Permutation] = []
        self.transversal: dict[int, Permutation] = {}
        self.orbit: list[int] = []


class PermGroup:
    """A finite permutation group on {0..degree-1} given by generators.

    ``base_hint`` seeds the base with the given points (in order) before the
    automatic ascending choice kicks in; it exists so tests can regenerate
    the chain with a different base and compare invariants.
    """

    def __init__(self, generators, degree: int | None = None, base_hint=()):
        generators = tuple(generators)
        if not generators:
            raise ValueError("a group needs at least one generator (identity for the trivial group)")
        if degree is None:
            degree = generators[0].degree
        for g in generators:
            if g.degree != degree:
                raise DegreeMismatchError(
                    f"generator degree {g.degree} != group degree {degree}"
                )
        self.degree = degree
        self.generators = generators
        self._base_hint = tuple(base_hint)
        self._levels: list[_Level] | None = None
        self._order: int | None = None
        self._lock = threading.Lock()
        self.cache: dict = {}

    # -- stabilizer chain ------------------------------------------------

    def _ensure_chain(self):
        if self._levels is None:
            with self._lock:
                if self._levels is None:
                    self._build_chain()
        return self._levels

    def _build_chain(self):
        degree = self.degree
        gens: list[Permutation] = []
        seen = set()
        for g in self.generators:
            if not g.is_identity() and g.images not in seen:
                seen.add(g.images)
                gens.append(g)

        levels: list[_Level] = []
        base_points: set[int] = set()

        def add_level(point: int):
            levels.append(_Level(point))
            base_points.add(point)

        def place(g: Permutation):
            # g joins every level group it belongs to: levels 0..j where
            # base[j] is the first base point g moves.
            for lvl in levels:
                lvl.gens.append(g)
                if g.images[lvl.point] != lvl.point:
                    return
            raise AssertionError("generator fixes the whole base")

        def rebuild_orbit(lvl: _Level):
            ident = Permutation.identity(degree)
            lvl.transversal = {lvl.point: ident}
            lvl.orbit = [lvl.point]
            i = 0
            while i < len(lvl.orbit):
                x = lvl.orbit[i]
                i += 1
                ux = lvl.transversal[x]
                for g in lvl.gens:
                    y = g.images[x]
                    if y not in lvl.transversal:
                        lvl.transversal[y] = g * ux
                        lvl.orbit.append(y)

        def extend_base_for(g: Permutation):
            if all(g.images[lvl.point] == lvl.point for lvl in levels):
                add_level(min(p for p in range(degree) if g.images[p] != p))

        for pt in self._base_hint:
            if 0 <= pt < degree and pt not in base_points:
                add_level(pt)
        for g in gens:
            extend_base_for(g)
        for g in gens:
            place(g)
        for lvl in levels:
            rebuild_orbit(lvl)

        def sift_from(p: Permutation, start: int):
            h = p
            for i in range(start, len(levels)):
                lvl = levels[i]
                x = h.images[lvl.point]
                if x == lvl.point:
                    continue
                u = lvl.transversal.get(x)
                if u is None:
                    return h, i
                h = u.inverse() * h
            return h, len(levels)

        # Verify Schreier generators level by level, deepest first; a
        # non-identity residue becomes a new strong generator and sends
        # verification back to its level.
        i = len(levels) - 1
        while i >= 0:
            lvl = levels[i]
            clean = True
            for x in sorted(lvl.transversal):
                ux = lvl.transversal[x]
                for g in lvl.gens:
                    uy = lvl.transversal[g.images[x]]
                    sg = uy.inverse() * (g * ux)
                    if sg.is_identity():
                        continue
                    h, j = sift_from(sg, i + 1)
                    if h.is_identity():
                        continue
                    if j == len(levels):
                        add_level(min(h.moved_points()))
                    place(h)
                    for m in range(j + 1):
                        rebuild_orbit(levels[m])
                    i = j
                    clean = False
                    break
                if not clean:
                    break
            if clean:
                i -= 1

        self._levels = levels
        self._order = prod(len(lvl.transversal) for lvl in levels)

    # -- queries ----------------------------------------------------------

    @property
    def order(self) -> int:
        self._ensure_chain()
        return self._order

    @property
    def base(self) -> tuple[int, ...]:
        return tuple(lvl.point for lvl in self._ensure_chain())

    def sift(self, p: Permutation) -> Permutation:
        """Residue of p after sifting through the chain; identity iff p in G."""
        if p.degree != self.degree:
            raise DegreeMismatchError(
                f"element degree {p.degree} != group degree {self.degree}"
            )
        h = p
        for lvl in self._ensure_chain():
            x = h.images[lvl.point]
            if x == lvl.point:
                continue
            u = lvl.transversal.get(x)
            if u is None:
                return h
            h = u.inverse() * h
        return h

    def contains(self, p: Permutation) -> bool:
        return self.sift(p).is_identity()

    def __contains__(self, p: Permutation) -> bool:
        return self.contains(p)

    def elements(self, cap: int = DEFAULT_MAX_ELEMENTS):
        """Deterministic iterator over all elements, exactly ``order`` of them.

        Elements are the transversal products of the chain, with orbit points
        taken in ascending order at every level.  Raises CapExceededError up
        front when the group is larger than ``cap``; never truncates.
        """
        levels = self._ensure_chain()
        if self._order > cap:
            raise CapExceededError("element enumeration", self._order, cap)
        ident = Permutation.identity(self.degree)
        if not levels:
            yield ident
            return
        points = [sorted(lvl.transversal) for lvl in levels]
        k = len(levels)
        idx = [0] * k
        prefix: list[Permutation] = [None] * k
        prev = ident
        for lv in range(k):
            prefix[lv] = prev = prev * levels[lv].transversal[points[lv][0]]
        while True:
            yield prefix[-1]
            lv = k - 1
            while lv >= 0 and idx[lv] == len(points[lv]) - 1:
                lv -= 1
            if lv < 0:
                return
            idx[lv] += 1
            for m in range(lv + 1, k):
                idx[m] = 0
            prev = prefix[lv - 1] if lv > 0 else ident
            for m in range(lv, k):
                prefix[m] = prev = prev * levels[m].transversal[points[m][idx[m]]]

    def element_list(self, cap: int = DEFAULT_MAX_ELEMENTS) -> list[Permutation]:
        """Cached list(self.elements(cap))."""
        cached = self.cache.get("elements")
        if cached is None:
            cached = list(self.elements(cap))
            self.cache["elements"] = cached
        elif len(cached) > cap:
            raise CapExceededError("element enumeration", len(cached), cap)
        return cached

    def random_element(self, rng: random.Random) -> Permutation:
        """Uniformly random element: independent uniform picks, one per level."""
        g = Permutation.identity(self.degree)
        for lvl in self._ensure_chain():
            pts = sorted(lvl.transversal)
            g = g * lvl.transversal[pts[rng.randrange(len(pts))]]
        return g

    def moved_points(self) -> list[int]:
        moved = set()
        for g in self.generators:
            moved.update(g.moved_points())
        return sorted(moved)

    def is_trivial(self) -> bool:
        return self.order == 1

    def is_abelian(self) -> bool:
        gens = self.generators
        for i, a in enumerate(gens):
            for b in gens[i + 1 :]:
                if a * b != b * a:
                    return False
        return True

    def __repr__(self) -> str:
        return f"PermGroup(degree={self.degree}, gens={len(self.generators)})"
