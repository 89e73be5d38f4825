"""Subgroup construction and structural computations.

Stabilizer-style computations (element centralizers, normalizers, subgroup
conjugacy) run on orbits of the relevant conjugation action with Schreier
generators, so they never enumerate the ambient group.  Set-level filters
(subgroup centralizers, centers) enumerate under the element cap.  Searches
that can fail distinguish three outcomes explicitly; in particular
``hall_search`` only ever reports nonexistence from its exhaustive tier.
"""

import random
from dataclasses import dataclass

from .classes import conjugacy_classes, k_pi, pi_part_of_element
from .errors import CapExceededError, NotInGroupError
from .group import DEFAULT_MAX_ELEMENTS, PermGroup
from .numtheory import is_pi_number, pi_part, prime_factors, validate_pi
from .perm import Permutation, conjugate

DEFAULT_SUBGROUP_CAP = 2000
DEFAULT_MAX_QUOTIENT_DEGREE = 2048
DEFAULT_HALL_BUDGET = 20


class SubgroupHandle:
    """A subgroup of a parent group, given by generators inside the parent."""

    def __init__(self, parent: PermGroup, group: PermGroup):
        self.parent = parent
        self.group = group
        self._element_set: frozenset[tuple[int, ...]] | None = None
        self._is_abelian: bool | None = None
        self._is_normal: bool | None = None

    @property
    def generators(self) -> tuple[Permutation, ...]:
        return self.group.generators

    @property
    def order(self) -> int:
        return self.group.order

    def contains(self, p: Permutation) -> bool:
        return self.group.contains(p)

    def elements(self, cap: int = DEFAULT_MAX_ELEMENTS) -> list[Permutation]:
        return self.group.element_list(cap)

    def element_set(self, cap: int = DEFAULT_MAX_ELEMENTS) -> frozenset[tuple[int, ...]]:
        if self._element_set is None:
            self._element_set = frozenset(p.images for p in self.elements(cap))
        return self._element_set

    def is_abelian(self) -> bool:
        if self._is_abelian is None:
            self._is_abelian = self.group.is_abelian()
        return self._is_abelian

    def is_normal(self) -> bool:
        """Normal in the parent group."""
        if self._is_normal is None:
            self._is_normal = all(
                self.group.contains(conjugate(g, s))
                for g in self.parent.generators
                for s in self.group.generators
            )
        return self._is_normal

    def __repr__(self) -> str:
        return f"SubgroupHandle(order={self.order} in parent order {self.parent.order})"


def subgroup(parent: PermGroup, gens, *, verify: bool = True) -> SubgroupHandle:
    """Smallest subgroup of parent containing gens (the closure)."""
    gens = [g for g in gens if not g.is_identity()]
    if verify:
        for g in gens:
            if not parent.contains(g):
                raise NotInGroupError(f"generator not in parent group: {g!r}")
    if not gens:
        gens = [Permutation.identity(parent.degree)]
    return SubgroupHandle(parent, PermGroup(gens, degree=parent.degree))


def trivial_subgroup(parent: PermGroup) -> SubgroupHandle:
    return subgroup(parent, [])


def whole_group(parent: PermGroup) -> SubgroupHandle:
    return SubgroupHandle(parent, parent)


def _reduced_generators(degree: int, elements) -> list[Permutation]:
    """Greedy generating subset: keep an element only when it enlarges the closure."""
    gens: list[Permutation] = []
    current: PermGroup | None = None
    for x in elements:
        if x.is_identity():
            continue
        if current is None or not current.contains(x):
            gens.append(x)
            current = PermGroup(gens, degree=degree)
    return gens


# -- orbit / stabilizer machinery ------------------------------------------


def _schreier_stabilizer(parent: PermGroup, start_key, act, target_index=None):
    """Orbit of ``start_key`` under conjugation-like actions, with stabilizer.

    ``act(g, ginv, key) -> key`` must define a left action of the parent on
    hashable keys.  Returns (orbit dict key -> transversal element, stabilizer
    SubgroupHandle).  Schreier generators are consumed lazily and reduced; the
    scan stops early once the stabilizer reaches its known order
    |parent| / |orbit|.
    """
    gen_pairs = [(g, g.inverse()) for g in parent.generators]
    ident = Permutation.identity(parent.degree)
    transversal = {start_key: ident}
    orbit = [start_key]
    i = 0
    while i < len(orbit):
        key = orbit[i]
        i += 1
        u = transversal[key]
        for g, ginv in gen_pairs:
            nkey = act(g, ginv, key)
            if nkey not in transversal:
                transversal[nkey] = g * u
                orbit.append(nkey)
    target = parent.order // len(orbit)
    stab_gens: list[Permutation] = []
    stab: PermGroup | None = None
    if target > 1:
        for key in orbit:
            u = transversal[key]
            for g, ginv in gen_pairs:
                s = transversal[act(g, ginv, key)].inverse() * (g * u)
                if s.is_identity():
                    continue
                if stab is None or not stab.contains(s):
                    stab_gens.append(s)
                    stab = PermGroup(stab_gens, degree=parent.degree)
                    if stab.order == target:
                        break
            if stab is not None and stab.order == target:
                break
    if stab is None:
        handle = trivial_subgroup(parent)
    else:
        handle = SubgroupHandle(parent, stab)
    if handle.order != target:
        raise AssertionError("Schreier stabilizer does not match orbit index")
    return transversal, handle


def centralizer_of_element(group: PermGroup, x: Permutation) -> SubgroupHandle:
    """C_G(x) as the stabilizer of x under conjugation."""
    if not group.contains(x):
        raise NotInGroupError(f"element not in group: {x!r}")
    if group.is_abelian():
        return whole_group(group)

    def act(g, ginv, key):
        gim, ginvim = g.images, ginv.images
        return tuple(gim[key[q]] for q in ginvim)

    _, handle = _schreier_stabilizer(group, x.images, act)
    return handle


def _centralizer_of_element_brute(group: PermGroup, x: Permutation,
                                  cap: int = DEFAULT_MAX_ELEMENTS) -> SubgroupHandle:
    # Independent filter path, cross-checked against the Schreier path in tests.
    hits = [g for g in group.elements(cap) if g * x == x * g]
    return subgroup(group, _reduced_generators(group.degree, hits), verify=False)


def _subgroup_key(handle: SubgroupHandle, cap: int = DEFAULT_MAX_ELEMENTS):
    return handle.element_set(cap)


def normalizer(group: PermGroup, handle: SubgroupHandle,
               cap: int = DEFAULT_MAX_ELEMENTS) -> SubgroupHandle:
    """N_G(H): stabilizer of the element set of H under conjugation."""
    hset = handle.element_set(cap)

    def act(g, ginv, key):
        gim, ginvim = g.images, ginv.images
        return frozenset(tuple(gim[t[q]] for q in ginvim) for t in key)

    _, stab = _schreier_stabilizer(group, hset, act)
    return stab


def centralizer_of_subgroup(group: PermGroup, handle: SubgroupHandle,
                            cap: int = DEFAULT_MAX_ELEMENTS) -> SubgroupHandle:
    """C_G(H) by filtering the element list against H's generators."""
    hgens = handle.generators
    hits = [g for g in group.elements(cap) if all(g * h == h * g for h in hgens)]
    return subgroup(group, _reduced_generators(group.degree, hits), verify=False)


def center(group: PermGroup, cap: int = DEFAULT_MAX_ELEMENTS) -> SubgroupHandle:
    return centralizer_of_subgroup(group, whole_group(group), cap)


def normal_closure(group: PermGroup, seeds, cap: int = DEFAULT_MAX_ELEMENTS) -> SubgroupHandle:
    """Smallest normal subgroup of G containing the seed elements."""
    gens = [s for s in seeds if not s.is_identity()]
    if not gens:
        return trivial_subgroup(group)
    current = PermGroup(gens, degree=group.degree)
    queue = list(gens)
    while queue:
        s = queue.pop(0)
        for g in group.generators:
            c = conjugate(g, s)
            if not current.contains(c):
                gens.append(c)
                current = PermGroup(gens, degree=group.degree)
                queue.append(c)
    return SubgroupHandle(group, current)


def commutator_subgroup(group: PermGroup, a: SubgroupHandle, b: SubgroupHandle) -> SubgroupHandle:
    """[A, B]: normal closure in <A, B> of the generator commutators."""
    joint = PermGroup(
        _reduced_generators(group.degree, list(a.generators) + list(b.generators))
        or [Permutation.identity(group.degree)],
        degree=group.degree,
    )
    comms = []
    for x in a.generators:
        for y in b.generators:
            comms.append(x * y * x.inverse() * y.inverse())
    closed = normal_closure(joint, comms)
    return SubgroupHandle(group, closed.group)


def derived_subgroup(group: PermGroup) -> SubgroupHandle:
    g = whole_group(group)
    return commutator_subgroup(group, g, g)


def subgroup_intersection(group: PermGroup, a: SubgroupHandle, b: SubgroupHandle,
                          cap: int = DEFAULT_MAX_ELEMENTS) -> SubgroupHandle:
    small, big = (a, b) if a.order <= b.order else (b, a)
    bigset = big.element_set(cap)
    hits = [x for x in small.elements(cap) if x.images in bigset]
    return subgroup(group, _reduced_generators(group.degree, hits), verify=False)


def join_subgroups(group: PermGroup, a: SubgroupHandle, b: SubgroupHandle) -> SubgroupHandle:
    return subgroup(group, list(a.generators) + list(b.generators), verify=False)


# -- normal subgroup lattice ------------------------------------------------


def normal_subgroups(group: PermGroup, cap: int = DEFAULT_MAX_ELEMENTS) -> list[SubgroupHandle]:
    """The complete list of normal subgroups.

    Seeds are the normal closures of the conjugacy class representatives;
    every normal subgroup is the join of the seeds it contains, so closing
    the seed set under pairwise joins is exhaustive.  Cached on the group.
    """
    cached = group.cache.get("normal_subgroups")
    if cached is not None:
        return cached
    table = conjugacy_classes(group, cap)
    whole_key = None  # element-set key for G itself is never materialized
    found: dict[frozenset | None, SubgroupHandle] = {}

    def key_of(handle: SubgroupHandle):
        if handle.order == group.order:
            return whole_key
        return handle.element_set(cap)

    def register(handle: SubgroupHandle) -> bool:
        k = key_of(handle)
        if k in found:
            return False
        found[k] = handle
        return True

    register(trivial_subgroup(group))
    seeds = []
    for cls in table.classes:
        closure = normal_closure(group, [cls.rep], cap)
        if register(closure):
            seeds.append(closure)
    queue = list(seeds)
    while queue:
        current = queue.pop(0)
        for other in list(found.values()):
            if current.order == group.order:
                break
            if other.order == group.order:
                continue
            # nested pairs join to the bigger one, already registered
            if (other.order % current.order == 0
                    and all(other.contains(g) for g in current.generators)):
                continue
            if (current.order % other.order == 0
                    and all(current.contains(g) for g in other.generators)):
                continue
            joined = join_subgroups(group, current, other)
            if register(joined):
                queue.append(joined)
    result = sorted(
        found.values(),
        key=lambda h: (h.order, tuple(sorted(h.element_set(cap))) if h.order < group.order else ()),
    )
    group.cache["normal_subgroups"] = result
    return result


@dataclass
class QuotientGroup:
    """G/N realized as the action of G on the left cosets of N."""

    group: PermGroup
    parent: PermGroup
    kernel: SubgroupHandle
    coset_reps: tuple[Permutation, ...]

    def project(self, g: Permutation) -> Permutation:
        """Image of g in the coset action; a homomorphism by construction."""
        images = [self._coset_index(g * r) for r in self.coset_reps]
        return Permutation(images)

    def _coset_index(self, h: Permutation) -> int:
        kernel_elems = self.kernel.elements()
        label = min((h * n).images for n in kernel_elems)
        return self._index[label]

    def __post_init__(self):
        self._index = {r.images: i for i, r in enumerate(self.coset_reps)}


def quotient(group: PermGroup, kernel: SubgroupHandle,
             max_degree: int = DEFAULT_MAX_QUOTIENT_DEGREE,
             cap: int = DEFAULT_MAX_ELEMENTS) -> QuotientGroup:
    """Coset action of G on G/N; fails rather than seeking a smaller action."""
    if not kernel.is_normal():
        raise ValueError("kernel is not normal in the group")
    index = group.order // kernel.order
    if index > max_degree:
        raise CapExceededError("quotient degree", index, max_degree)
    kernel_images = [n.images for n in kernel.elements(cap)]
    degree = group.degree

    def label(h: Permutation) -> tuple[int, ...]:
        him = h.images
        return min(tuple(map(him.__getitem__, nim)) for nim in kernel_images)

    start = Permutation._make(label(Permutation.identity(degree)))
    reps = [start]
    index_of = {start.images: 0}
    i = 0
    while i < len(reps):
        r = reps[i]
        i += 1
        for g in group.generators:
            lab = label(g * r)
            if lab not in index_of:
                index_of[lab] = len(reps)
                reps.append(Permutation._make(lab))
    if len(reps) != index:
        raise AssertionError("coset count does not match the index")
    qgens = []
    for g in group.generators:
        qgens.append(Permutation([index_of[label(g * r)] for r in reps]))
    qgroup = PermGroup(qgens or [Permutation.identity(index)], degree=index)
    if qgroup.order != index:
        raise AssertionError("coset action order does not match the index")
    return QuotientGroup(group=qgroup, parent=group, kernel=kernel, coset_reps=tuple(reps))


# -- Sylow and Hall subgroups ------------------------------------------------


def sylow_subgroup(group: PermGroup, p: int, cap: int = DEFAULT_MAX_ELEMENTS) -> SubgroupHandle:
    """A Sylow p-subgroup, grown through normalizers of smaller p-subgroups."""
    validate_pi([p])
    target = pi_part(group.order, frozenset([p]))
    if target == 1:
        return trivial_subgroup(group)
    seed = None
    for x in group.elements(cap):
        if x.order() % p == 0:
            seed = pi_part_of_element(x, [p])[0]
            break
    current = subgroup(group, [seed], verify=False)
    while current.order < target:
        norm = normalizer(group, current, cap)
        grown = False
        for y in norm.elements(cap):
            yp = pi_part_of_element(y, [p])[0]
            if not yp.is_identity() and not current.contains(yp):
                current = subgroup(group, list(current.generators) + [yp], verify=False)
                grown = True
                break
        if not grown:
            raise AssertionError("Sylow growth stalled below the target order")
    return current


@dataclass(frozen=True)
class HallSearchOutcome:
    """Outcome of a Hall subgroup search; ``none_exists`` only from the exhaustive tier."""

    status: str  # "found" | "none_exists" | "unresolved"
    subgroup: SubgroupHandle | None
    method: str | None  # constructive | randomized | exhaustive
    route: str | None
    abelian: bool | None

    @property
    def found(self) -> bool:
        return self.status == "found"


def hall_search(group: PermGroup, pi, budget: int = DEFAULT_HALL_BUDGET,
                subgroup_cap: int = DEFAULT_SUBGROUP_CAP,
                cap: int = DEFAULT_MAX_ELEMENTS, seed: int = 0) -> HallSearchOutcome:
    """Tiered search for a Hall pi-subgroup (order exactly |G|_pi).

    Tier 1 is constructive: the whole group / trivial group shortcuts, the
    closure of one Sylow subgroup per prime, and - when d_p(G) = 1 for every
    relevant p - Sylow subgroups taken inside iterated centralizers.  A
    randomized pass then conjugates the Sylow tuple by seeded random elements,
    ``budget`` attempts.  Tier 2 enumerates pi-subgroups up to conjugacy and
    is the only tier allowed to conclude nonexistence.
    """
    pi = validate_pi(pi)
    target = pi_part(group.order, pi)

    def found(handle: SubgroupHandle, method: str, route: str) -> HallSearchOutcome:
        # Independent recheck of the Found contract.
        if handle.order != target or not is_pi_number(handle.order, pi):
            raise AssertionError("hall candidate failed verification")
        return HallSearchOutcome("found", handle, method, route, handle.is_abelian())

    if target == 1:
        return found(trivial_subgroup(group), "constructive", "pi-part of order is 1")
    if target == group.order:
        return found(whole_group(group), "constructive", "whole group is a pi-group")

    relevant = [p for p in prime_factors(group.order) if p in pi]
    sylows = [sylow_subgroup(group, p, cap) for p in relevant]
    gens: list[Permutation] = []
    for s in sylows:
        gens.extend(s.generators)
    cand = subgroup(group, gens, verify=False)
    if cand.order == target:
        return found(cand, "constructive", "closure of one Sylow subgroup per prime")

    try:
        all_dp_one = all(
            k_pi(group, frozenset([p]), cap) == pi_part(group.order, frozenset([p]))
            for p in relevant
        )
    except CapExceededError:
        all_dp_one = False
    if all_dp_one:
        for direction, primes in (("descending", sorted(relevant, reverse=True)),
                                  ("ascending", sorted(relevant))):
            cur = group
            hgens: list[Permutation] = []
            for p in primes:
                syl = sylow_subgroup(cur, p, cap)
                hgens.extend(syl.generators)
                cur = centralizer_of_subgroup(cur, syl, cap).group
            cand = subgroup(group, hgens, verify=False)
            if cand.order == target and is_pi_number(cand.order, pi):
                return found(cand, "constructive",
                             f"Sylow subgroups in iterated centralizers ({direction})")

    rng = random.Random(seed)
    for attempt in range(budget):
        gens = []
        for s in sylows:
            c = group.random_element(rng)
            cinv = c.inverse()
            gens.extend(conjugate(c, g, cinv) for g in s.generators)
        cand = subgroup(group, gens, verify=False)
        if cand.order == target and is_pi_number(cand.order, pi):
            return found(cand, "randomized", f"random Sylow conjugates, attempt {attempt + 1}")

    if group.order <= subgroup_cap:
        classes = enumerate_subgroups_up_to_conjugacy(group, pi=pi, cap=subgroup_cap,
                                                      element_cap=cap)
        for handle in classes:
            if handle.order == target:
                return found(handle, "exhaustive", "pi-subgroup enumeration")
        return HallSearchOutcome("none_exists", None, "exhaustive",
                                 "no pi-subgroup of Hall order exists", None)
    return HallSearchOutcome("unresolved", None, None, "budget exhausted over exhaustive cap", None)


def are_conjugate_subgroups(group: PermGroup, a: SubgroupHandle, b: SubgroupHandle,
                            cap: int = DEFAULT_MAX_ELEMENTS):
    """(conjugate?, witness g with a^g = b).

    Walks the conjugates of ``a`` breadth-first; the transversal elements are
    coset representatives of N_G(a), so the walk is exactly conjugation by
    such representatives.
    """
    if a.order != b.order:
        return False, None
    akey = a.element_set(cap)
    bkey = b.element_set(cap)
    if akey == bkey:
        return True, Permutation.identity(group.degree)
    gen_pairs = [(g, g.inverse()) for g in group.generators]
    transversal = {akey: Permutation.identity(group.degree)}
    queue = [akey]
    i = 0
    while i < len(queue):
        key = queue[i]
        i += 1
        u = transversal[key]
        for g, ginv in gen_pairs:
            gim, ginvim = g.images, ginv.images
            nkey = frozenset(tuple(gim[t[q]] for q in ginvim) for t in key)
            if nkey not in transversal:
                witness = g * u
                if nkey == bkey:
                    return True, witness
                transversal[nkey] = witness
                queue.append(nkey)
    return False, None


# -- characteristic-style subgroups ------------------------------------------


def _normal_core(group: PermGroup, prime_pred, cap: int = DEFAULT_MAX_ELEMENTS) -> SubgroupHandle:
    """Largest normal subgroup whose order has only primes satisfying pred.

    The closure of the class representatives whose normal closure qualifies;
    any product of qualifying normal subgroups qualifies again, so this is
    maximal.
    """
    table = conjugacy_classes(group, cap)
    picked: list[Permutation] = []
    for cls in table.classes:
        if cls.order == 1:
            continue
        if not all(prime_pred(q) for q in prime_factors(cls.order)):
            continue
        closed = normal_closure(group, [cls.rep], cap)
        if all(prime_pred(q) for q in prime_factors(closed.order)):
            picked.extend(closed.generators)
    handle = subgroup(group, _reduced_generators(group.degree, picked), verify=False)
    if not all(prime_pred(q) for q in prime_factors(handle.order)):
        raise AssertionError("normal core has a disallowed prime")
    return handle


def o_pi_prime(group: PermGroup, pi, cap: int = DEFAULT_MAX_ELEMENTS) -> SubgroupHandle:
    """O_{pi'}(G), the largest normal pi'-subgroup."""
    pi = validate_pi(pi)
    return _normal_core(group, lambda q: q not in pi, cap)


def fitting_subgroup(group: PermGroup, cap: int = DEFAULT_MAX_ELEMENTS) -> SubgroupHandle:
    """F(G): the join of the largest normal p-subgroups over p | |G|."""
    gens: list[Permutation] = []
    for p in prime_factors(group.order):
        core = _normal_core(group, lambda q, p=p: q == p, cap)
        gens.extend(core.generators)
    return subgroup(group, _reduced_generators(group.degree, gens), verify=False)


def socle(group: PermGroup, cap: int = DEFAULT_MAX_ELEMENTS) -> SubgroupHandle:
    """Join of the minimal normal subgroups."""
    normals = [n for n in normal_subgroups(group, cap) if n.order > 1]
    minimal = []
    for n in normals:
        nset = n.element_set(cap)
        if not any(
            m.order < n.order and m.element_set(cap) <= nset for m in normals if m is not n
        ):
            minimal.append(n)
    gens: list[Permutation] = []
    for m in minimal:
        gens.extend(m.generators)
    return subgroup(group, _reduced_generators(group.degree, gens), verify=False)


def is_simple(group: PermGroup, cap: int = DEFAULT_MAX_ELEMENTS) -> bool:
    return group.order > 1 and len(normal_subgroups(group, cap)) == 2


def almost_simple_socle(group: PermGroup, cap: int = DEFAULT_MAX_ELEMENTS) -> SubgroupHandle | None:
    """The socle when the group is almost simple (non-abelian simple socle
    with trivial centralizer); None otherwise."""
    s = socle(group, cap)
    if s.order == 1 or s.is_abelian():
        return None
    if not is_simple(s.group, cap):
        return None
    if centralizer_of_subgroup(group, s, cap).order != 1:
        return None
    return s


# -- exhaustive subgroup enumeration ------------------------------------------


def enumerate_subgroups_up_to_conjugacy(group: PermGroup, pi=None,
                                        cap: int = DEFAULT_SUBGROUP_CAP,
                                        element_cap: int = DEFAULT_MAX_ELEMENTS
                                        ) -> list[SubgroupHandle]:
    """One representative per conjugacy class of subgroups, complete.

    Layered one-element extensions: every found class representative H is
    extended by candidate elements (one per H-conjugation orbit), and each new
    subgroup is deduplicated against the conjugate closure of the classes
    found so far.  Any subgroup is reachable through its own generation chain,
    so the sweep is exhaustive.  With ``pi`` set, only pi-subgroups are
    enumerated (sound: every subgroup of a pi-group is again one, so chains
    never have to leave the pi-world).  Results are cached per (group, pi).
    """
    if group.order > cap:
        raise CapExceededError("subgroup enumeration", group.order, cap)
    pi = validate_pi(pi) if pi is not None else None
    cache_key = ("subgroup_classes", pi)
    cached = group.cache.get(cache_key)
    if cached is not None:
        return cached

    elements = group.element_list(element_cap)
    if pi is not None:
        candidates = [x for x in elements if is_pi_number(x.order(), pi)]
    else:
        candidates = elements
    gen_pairs = [(g.images, g.inverse().images) for g in group.generators]

    def conjugate_orbit_of_set(key: frozenset):
        orbit = {key}
        queue = [key]
        while queue:
            cur = queue.pop()
            for gim, ginvim in gen_pairs:
                nkey = frozenset(tuple(gim[t[q]] for q in ginvim) for t in cur)
                if nkey not in orbit:
                    orbit.add(nkey)
                    queue.append(nkey)
        return orbit

    found: list[SubgroupHandle] = []
    seen: dict[frozenset, int] = {}

    def register(handle: SubgroupHandle) -> bool:
        key = handle.element_set(element_cap)
        if key in seen:
            return False
        idx = len(found)
        found.append(handle)
        for k in conjugate_orbit_of_set(key):
            seen[k] = idx
        return True

    register(trivial_subgroup(group))
    i = 0
    while i < len(found):
        base = found[i]
        i += 1
        base_set = base.element_set(element_cap)
        base_gen_pairs = [(g.images, g.inverse().images) for g in base.generators]
        covered: set[tuple[int, ...]] = set()
        for x in candidates:
            xim = x.images
            if xim in base_set or xim in covered:
                continue
            orbit = [xim]
            covered.add(xim)
            qi = 0
            while qi < len(orbit):
                cur = orbit[qi]
                qi += 1
                for gim, ginvim in base_gen_pairs:
                    nim = tuple(gim[cur[q]] for q in ginvim)
                    if nim not in covered:
                        covered.add(nim)
                        orbit.append(nim)
            extended = subgroup(group, list(base.generators) + [x], verify=False)
            if pi is not None and not is_pi_number(extended.order, pi):
                continue
            register(extended)
    found.sort(key=lambda h: (h.order, tuple(sorted(h.element_set(element_cap)))))
    group.cache[cache_key] = found
    return found
