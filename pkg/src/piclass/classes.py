"""Conjugacy classes, element centralizers, and pi-element classification."""

from dataclasses import dataclass

from .errors import CapExceededError, NotInGroupError
from .group import DEFAULT_MAX_ELEMENTS, PermGroup
from .numtheory import is_pi_number, pi_part, validate_pi
from .perm import Permutation


@dataclass(frozen=True)
class ConjClass:
    rep: Permutation  # lexicographically least image tuple in the class
    size: int
    order: int  # element order, shared by the whole class


class ClassTable:
    """All conjugacy classes of a group plus an element -> class resolver."""

    def __init__(self, group: PermGroup, classes, index_of):
        self.group = group
        self.classes: tuple[ConjClass, ...] = tuple(classes)
        self._index_of: dict[tuple[int, ...], int] = index_of

    @property
    def k(self) -> int:
        return len(self.classes)

    def class_of(self, p: Permutation) -> int:
        idx = self._index_of.get(p.images)
        if idx is None:
            raise NotInGroupError(f"element not in group: {p!r}")
        return idx

    def sizes(self) -> list[int]:
        return [c.size for c in self.classes]

    def representatives(self) -> list[Permutation]:
        return [c.rep for c in self.classes]


def conjugacy_classes(group: PermGroup, cap: int = DEFAULT_MAX_ELEMENTS) -> ClassTable:
    """Class table via a conjugation-orbit sweep over the full element list.

    Deterministic: elements come from the group's enumeration order and each
    orbit is explored breadth-first with generators in list order.  The result
    is cached on the group.
    """
    if group.order > cap:
        raise CapExceededError("class table", group.order, cap)
    cached = group.cache.get("class_table")
    if cached is not None:
        return cached

    elements = group.element_list(cap)
    gen_pairs = [(g.images, g.inverse().images) for g in group.generators]
    index_of: dict[tuple[int, ...], int] = {}
    classes: list[ConjClass] = []
    for start in elements:
        if start.images in index_of:
            continue
        idx = len(classes)
        orbit = [start.images]
        index_of[start.images] = idx
        best = start.images
        qi = 0
        while qi < len(orbit):
            xim = orbit[qi]
            qi += 1
            for gim, ginvim in gen_pairs:
                yim = tuple(gim[xim[q]] for q in ginvim)
                if yim not in index_of:
                    index_of[yim] = idx
                    orbit.append(yim)
                    if yim < best:
                        best = yim
        rep = Permutation._make(best)
        classes.append(ConjClass(rep=rep, size=len(orbit), order=rep.order()))
    classes_sorted = sorted(range(len(classes)), key=lambda i: classes[i].rep.images)
    renumber = {old: new for new, old in enumerate(classes_sorted)}
    table = ClassTable(
        group,
        [classes[i] for i in classes_sorted],
        {images: renumber[idx] for images, idx in index_of.items()},
    )
    group.cache["class_table"] = table
    return table


def is_pi_element(x: Permutation, pi) -> bool:
    """True iff every prime factor of the element order lies in pi."""
    return is_pi_number(x.order(), validate_pi(pi))


def pi_part_of_element(x: Permutation, pi) -> tuple[Permutation, Permutation]:
    """The commuting (pi, pi')-factorization of x into powers of x.

    Returns (x_pi, x_pi') with x = x_pi * x_pi', both powers of x, the orders
    a pi-number and a pi'-number respectively.  The exponent for x_pi is the
    CRT solution e = 1 mod m_pi, e = 0 mod m_pi' on the element order m.
    """
    pi = validate_pi(pi)
    m = x.order()
    a = pi_part(m, pi)
    b = m // a
    if b == 1:
        return x, Permutation.identity(x.degree)
    if a == 1:
        return Permutation.identity(x.degree), x
    e = b * pow(b, -1, a)
    x_pi = x**e
    return x_pi, x ** (m + 1 - e)


def k_pi(group: PermGroup, pi, cap: int = DEFAULT_MAX_ELEMENTS) -> int:
    """Number of conjugacy classes consisting of pi-elements."""
    pi = validate_pi(pi)
    table = conjugacy_classes(group, cap)
    return sum(1 for c in table.classes if is_pi_number(c.order, pi))
