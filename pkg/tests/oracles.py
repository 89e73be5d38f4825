"""Independent brute-force oracles the library is checked against.

Nothing here touches the BSGS machinery: closures are multiplication BFS
over raw image tuples, class partitions conjugate by every element, and the
commuting probability counts pairs.  numpy only vectorizes the O(|G|^2)
loops; all arithmetic stays integral.
"""

import numpy as np

from piclass.perm import Permutation


def naive_closure(gens, cap=None):
    """All products of the generators as a set of image tuples."""
    degree = gens[0].degree
    gen_images = [g.images for g in gens]
    ident = tuple(range(degree))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for gim in gen_images:
                y = tuple(gim[p] for p in x)
                if y not in seen:
                    if cap is not None and len(seen) >= cap:
                        raise OverflowError("closure exceeded cap")
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


def naive_membership(gens, p):
    return p.images in naive_closure(gens)


def _element_matrix(elements):
    return np.array([e.images for e in elements], dtype=np.int64)


def commuting_pair_count(elements) -> int:
    """|{(a, b) : ab = ba}| by direct counting, vectorized over b."""
    mat = _element_matrix(elements)
    total = 0
    for a in mat:
        ab = a[mat]  # rows a(b(x))
        ba = mat[:, a]  # rows b(a(x))
        total += int(np.all(ab == ba, axis=1).sum())
    return total


def brute_conjugacy_partition(elements):
    """Partition into conjugacy classes by conjugating with every element."""
    mat = _element_matrix(elements)
    inv = np.argsort(mat, axis=1)
    index = {tuple(int(v) for v in row): i for i, row in enumerate(mat)}
    unassigned = set(range(len(elements)))
    classes = []
    while unassigned:
        i = min(unassigned)
        x = mat[i]
        conj = np.take_along_axis(mat, x[inv], axis=1)  # rows g(x(g^-1(p)))
        members = {index[tuple(int(v) for v in row)] for row in conj}
        classes.append(frozenset(members))
        unassigned -= members
    return classes


def brute_centralizer(elements, x):
    return [g for g in elements if g * x == x * g]


def normal_subgroups_by_class_unions(group, cap=100_000):
    """Normal subgroups as the class-unions closed under multiplication.

    Exponential in the class count; only for small class tables.
    """
    from piclass.classes import conjugacy_classes

    table = conjugacy_classes(group, cap)
    elements = group.element_list(cap)
    class_of = {e.images: table.class_of(e) for e in elements}
    members = [[] for _ in range(table.k)]
    for e in elements:
        members[class_of[e.images]].append(e)
    identity_cls = table.class_of(Permutation.identity(group.degree))
    rest = [i for i in range(table.k) if i != identity_cls]
    out = []
    for mask in range(1 << len(rest)):
        chosen = {identity_cls} | {rest[i] for i in range(len(rest)) if mask >> i & 1}
        subset = {e.images for c in chosen for e in members[c]}
        closed = all(
            tuple(a[b[p]] for p in range(group.degree)) in subset
            for a in subset for b in subset
        )
        if closed:
            out.append(frozenset(subset))
    return out


def all_subgroups_naive(group, cap=100_000):
    """Every subgroup (not up to conjugacy) by one-element extensions of sets."""
    elements = group.element_list(cap)
    ident = Permutation.identity(group.degree)
    start = frozenset([ident.images])
    found = {start}
    queue = [(start, [ident])]
    while queue:
        current_set, gens = queue.pop()
        for x in elements:
            if x.images in current_set:
                continue
            new_gens = gens + [x]
            closure = frozenset(naive_closure(new_gens))
            if closure not in found:
                found.add(closure)
                queue.append((closure, new_gens))
    return found
