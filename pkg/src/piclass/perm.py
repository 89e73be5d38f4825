"""Permutations of {0..n-1} as immutable image tuples.

Composition convention, fixed globally: (a * b)(x) = a(b(x)), i.e. apply b
first, then a.  Every other module relies on this choice.
"""

import math
import re

from .errors import DegreeMismatchError

_CYCLE_GAP = re.compile(r"\)\s*\(")

_IDENTITY_IMAGES: dict[int, tuple[int, ...]] = {}


def _identity_images(n: int) -> tuple[int, ...]:
    images = _IDENTITY_IMAGES.get(n)
    if images is None:
        images = tuple(range(n))
        _IDENTITY_IMAGES[n] = images
    return images


class Permutation:
    """A bijection on {0..n-1}, stored as the tuple of images."""

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(images)
        n = len(images)
        if sorted(images) != list(range(n)):
            raise ValueError(f"not a permutation of 0..{n - 1}: {images!r}")
        self.images = images

    @classmethod
    def _make(cls, images: tuple[int, ...]) -> "Permutation":
        # Internal fast path: caller guarantees images is a bijection.
        p = object.__new__(cls)
        p.images = images
        return p

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls._make(_identity_images(n))

    @classmethod
    def from_cycles(cls, degree: int, cycles) -> "Permutation":
        """Build from disjoint cycles given as point sequences."""
        images = list(range(degree))
        seen = set()
        for cycle in cycles:
            for pt in cycle:
                if not 0 <= pt < degree:
                    raise ValueError(f"point out of range: {pt} (degree {degree})")
                if pt in seen:
                    raise ValueError(f"point repeated across cycles: {pt}")
                seen.add(pt)
            for a, b in zip(cycle, cycle[1:]):
                images[a] = b
            if cycle:
                images[cycle[-1]] = cycle[0]
        return cls._make(tuple(images))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point]

    def __mul__(self, other: "Permutation") -> "Permutation":
        # (a * b)(x) = a(b(x))
        a = self.images
        if len(a) != len(other.images):
            raise DegreeMismatchError(
                f"degree mismatch: {len(a)} vs {len(other.images)}"
            )
        return Permutation._make(tuple(map(a.__getitem__, other.images)))

    def inverse(self) -> "Permutation":
        images = self.images
        inv = [0] * len(images)
        for i, j in enumerate(images):
            inv[j] = i
        return Permutation._make(tuple(inv))

    def __pow__(self, k: int) -> "Permutation":
        if k < 0:
            return self.inverse() ** (-k)
        result = Permutation.identity(len(self.images))
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def is_identity(self) -> bool:
        return self.images == _identity_images(len(self.images))

    def order(self) -> int:
        """Least m >= 1 with p**m = identity: the lcm of the cycle lengths."""
        cycles = self.cycles()
        if not cycles:
            return 1
        return math.lcm(*(len(c) for c in cycles))

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its least point, sorted by that point."""
        images = self.images
        seen = [False] * len(images)
        out = []
        for start in range(len(images)):
            if seen[start] or images[start] == start:
                continue
            cycle = [start]
            seen[start] = True
            x = images[start]
            while x != start:
                seen[x] = True
                cycle.append(x)
                x = images[x]
            out.append(tuple(cycle))
        return out

    def moved_points(self) -> list[int]:
        return [i for i, j in enumerate(self.images) if i != j]

    def cycle_string(self) -> str:
        """Disjoint-cycle notation over 0-based points; identity is ``()``."""
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cycles)

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __repr__(self) -> str:
        return f"Permutation[{self.degree}] {self.cycle_string()}"


def compose(a: Permutation, b: Permutation) -> Permutation:
    """(a . b)(x) = a(b(x)); the module-wide convention."""
    return a * b


def conjugate(g: Permutation, x: Permutation, ginv: Permutation | None = None) -> Permutation:
    """g * x * g^-1 in one pass; pass ginv to reuse a precomputed inverse."""
    if ginv is None:
        ginv = g.inverse()
    gim = g.images
    xim = x.images
    return Permutation._make(tuple(gim[xim[q]] for q in ginv.images))


def parse_cycle_text(text: str, degree: int) -> Permutation:
    """Parse disjoint-cycle notation like ``(0 1 2)(3 4)`` over 0-based points.

    ``()`` denotes the identity.  Points may be separated by spaces or commas.
    """
    s = _CYCLE_GAP.sub(")(", text.strip())
    if not s:
        raise ValueError("empty permutation text")
    if s == "()":
        return Permutation.identity(degree)
    if not (s.startswith("(") and s.endswith(")")):
        raise ValueError(f"expected cycle notation, got {text!r}")
    cycles = []
    for chunk in s[1:-1].split(")("):
        parts = chunk.replace(",", " ").split()
        if not parts:
            raise ValueError(f"empty cycle in {text!r}")
        try:
            cycle = [int(p) for p in parts]
        except ValueError:
            raise ValueError(f"bad point in {text!r}") from None
        if len(set(cycle)) != len(cycle):
            raise ValueError(f"point repeated within a cycle: {text!r}")
        cycles.append(cycle)
    return Permutation.from_cycles(degree, cycles)
