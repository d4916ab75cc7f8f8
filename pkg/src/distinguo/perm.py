"""Permutations of {0..n-1} and the finite groups they generate."""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import DegreeMismatch, MalformedCycles, MalformedGroupFile, OrderExceedsCap

DEFAULT_CAP = 10**6


class Permutation:
    """A bijection of {0..n-1}, stored as the tuple of images.

    Products compose right to left: ``(p * q)(i) == p(q(i))``.
    Comparison is lexicographic on the image tuple.
    """

    __slots__ = ("images",)

    def __init__(self, images: Iterable[int]):
        images = tuple(images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"not a permutation: {images}")
        object.__setattr__(self, "images", images)

    @classmethod
    def _trusted(cls, images: tuple) -> "Permutation":
        p = object.__new__(cls)
        object.__setattr__(p, "images", images)
        return p

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls._trusted(tuple(range(n)))

    def __setattr__(self, name, value):
        raise AttributeError("Permutation is immutable")

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if len(other.images) != len(self.images):
            raise DegreeMismatch(f"degrees {self.degree} and {other.degree}")
        mine = self.images
        return Permutation._trusted(tuple(mine[j] for j in other.images))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation._trusted(tuple(inv))

    def __pow__(self, k: int) -> "Permutation":
        base = self if k >= 0 else self.inverse()
        result = Permutation.identity(self.degree)
        for _ in range(abs(k)):
            result = base * result
        return result

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __lt__(self, other: "Permutation") -> bool:
        return self.images < other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __repr__(self) -> str:
        return f"Permutation({self.cycle_string()!r}, degree={self.degree})"

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def support(self) -> frozenset:
        return frozenset(i for i, j in enumerate(self.images) if i != j)

    def motion(self) -> int:
        return sum(1 for i, j in enumerate(self.images) if i != j)

    def cycles(self, include_fixed: bool = False) -> list[tuple]:
        seen = [False] * self.degree
        out = []
        for start in range(self.degree):
            if seen[start]:
                continue
            cyc = [start]
            seen[start] = True
            j = self.images[start]
            while j != start:
                cyc.append(j)
                seen[j] = True
                j = self.images[j]
            if len(cyc) > 1 or include_fixed:
                out.append(tuple(cyc))
        return out

    def cycle_count(self) -> int:
        """Number of cycles, fixed points included."""
        return len(self.cycles(include_fixed=True))

    def cycle_string(self) -> str:
        cycs = self.cycles()
        if not cycs:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cycs)

    def image_of_set(self, points: Iterable[int]) -> frozenset:
        return frozenset(self.images[i] for i in points)

    def image_mask(self, mask: int) -> int:
        out = 0
        i = 0
        while mask:
            if mask & 1:
                out |= 1 << self.images[i]
            mask >>= 1
            i += 1
        return out


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_permutation(text: str, degree: int) -> Permutation:
    """Parse disjoint-cycle notation such as ``"(0 1 2)(3 4)"``; ``"()"`` is the identity."""
    s = text.strip()
    if not s:
        raise MalformedCycles("empty cycle string")
    if _CYCLE_RE.sub("", s).strip():
        raise MalformedCycles(f"cannot parse {text!r}")
    images = list(range(degree))
    seen = set()
    for body in _CYCLE_RE.findall(s):
        tokens = body.replace(",", " ").split()
        try:
            cyc = [int(t) for t in tokens]
        except ValueError:
            raise MalformedCycles(f"non-integer point in {text!r}") from None
        for pt in cyc:
            if pt < 0 or pt >= degree:
                raise MalformedCycles(f"point {pt} outside 0..{degree - 1}")
            if pt in seen:
                raise MalformedCycles(f"point {pt} repeated in {text!r}")
            seen.add(pt)
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            images[a] = b
    return Permutation._trusted(tuple(images))


@dataclass(frozen=True)
class FiniteAction:
    """The group generated by ``generators`` acting on {0..degree-1}."""

    degree: int
    generators: tuple

    def __post_init__(self):
        gens = tuple(self.generators)
        if not gens:
            raise ValueError("a FiniteAction needs at least one generator")
        for g in gens:
            if g.degree != self.degree:
                raise DegreeMismatch(f"generator of degree {g.degree} in action of degree {self.degree}")
        object.__setattr__(self, "generators", gens)

    @classmethod
    def from_cycles(cls, degree: int, *cycle_strings: str) -> "FiniteAction":
        return cls(degree, tuple(parse_permutation(c, degree) for c in cycle_strings))

    @classmethod
    def trivial(cls, degree: int) -> "FiniteAction":
        return cls(degree, (Permutation.identity(degree),))

    def identity(self) -> Permutation:
        return Permutation.identity(self.degree)


def parse_group(text: str) -> FiniteAction:
    """Read the ``permgroup <n>`` / ``gen <cycles>`` text format."""
    degree = None
    gens = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        head, _, rest = line.partition(" ")
        if degree is None:
            if head != "permgroup":
                raise MalformedGroupFile(f"line {lineno}: expected 'permgroup <n>'")
            try:
                degree = int(rest.strip())
            except ValueError:
                raise MalformedGroupFile(f"line {lineno}: bad degree {rest!r}") from None
            if degree < 1:
                raise MalformedGroupFile(f"line {lineno}: degree must be positive")
        elif head == "gen":
            gens.append(parse_permutation(rest, degree))
        else:
            raise MalformedGroupFile(f"line {lineno}: unexpected {head!r}")
    if degree is None:
        raise MalformedGroupFile("missing 'permgroup' header")
    if not gens:
        raise MalformedGroupFile("no 'gen' lines")
    return FiniteAction(degree, tuple(gens))


def format_group(action: FiniteAction) -> str:
    lines = [f"permgroup {action.degree}"]
    lines += [f"gen {g.cycle_string()}" for g in action.generators]
    return "\n".join(lines) + "\n"


@lru_cache(maxsize=256)
def _bfs_elements(action: FiniteAction, cap: int) -> tuple:
    identity = action.identity()
    seen = {identity}
    order = [identity]
    level = [identity]
    gens = sorted(set(action.generators))
    while level:
        nxt = set()
        for g in level:
            for s in gens:
                h = g * s
                if h not in seen:
                    nxt.add(h)
        seen.update(nxt)
        if len(seen) > cap:
            raise OrderExceedsCap(f"group order exceeds cap {cap}")
        level = sorted(nxt)
        order.extend(level)
    return tuple(order)


def enumerate_elements(action: FiniteAction, cap: int = DEFAULT_CAP) -> list[Permutation]:
    """All group elements, breadth-first by word length; ties in lexicographic image order."""
    return list(_bfs_elements(action, cap))


def group_order(action: FiniteAction, cap: int = DEFAULT_CAP) -> int:
    return len(_bfs_elements(action, cap))


def orbit(action: FiniteAction, point: int) -> set[int]:
    if not 0 <= point < action.degree:
        raise ValueError(f"point {point} outside 0..{action.degree - 1}")
    found = {point}
    frontier = [point]
    while frontier:
        x = frontier.pop()
        for g in action.generators:
            y = g.images[x]
            if y not in found:
                found.add(y)
                frontier.append(y)
    return found


def orbits(action: FiniteAction) -> list[set[int]]:
    out = []
    covered = set()
    for x in range(action.degree):
        if x not in covered:
            o = orbit(action, x)
            covered |= o
            out.append(o)
    return out


def _closure(gens: Sequence[Permutation], degree: int) -> set:
    identity = Permutation.identity(degree)
    found = {identity}
    frontier = [identity]
    while frontier:
        g = frontier.pop()
        for s in gens:
            h = g * s
            if h not in found:
                found.add(h)
                frontier.append(h)
    return found


def generating_subset(elements: Sequence[Permutation], degree: int) -> list[Permutation]:
    """Greedy generating set for the group formed by ``elements`` (assumed closed)."""
    gens: list[Permutation] = []
    generated = {Permutation.identity(degree)}
    for e in elements:
        if e not in generated:
            gens.append(e)
            generated = _closure(gens, degree)
    return gens


def subgroup_from_elements(elements: Sequence[Permutation], degree: int) -> FiniteAction:
    gens = generating_subset(elements, degree)
    return FiniteAction(degree, tuple(gens)) if gens else FiniteAction.trivial(degree)


def point_stabilizer(action: FiniteAction, point: int, cap: int = DEFAULT_CAP) -> FiniteAction:
    if not 0 <= point < action.degree:
        raise ValueError(f"point {point} outside 0..{action.degree - 1}")
    stab = [g for g in enumerate_elements(action, cap) if g.images[point] == point]
    return subgroup_from_elements(stab, action.degree)


def pointwise_stabilizer_elements(action: FiniteAction, points: Iterable[int], cap: int = DEFAULT_CAP) -> list:
    pts = list(points)
    return [g for g in enumerate_elements(action, cap) if all(g.images[p] == p for p in pts)]


def setwise_stabilizer_order(action: FiniteAction, subset: Iterable[int], cap: int = DEFAULT_CAP) -> int:
    target = frozenset(subset)
    if any(not 0 <= x < action.degree for x in target):
        raise ValueError("subset point outside the ground set")
    return sum(1 for g in enumerate_elements(action, cap) if g.image_of_set(target) == target)


def contains(action: FiniteAction, p: Permutation, cap: int = DEFAULT_CAP) -> bool:
    return p in set(_bfs_elements(action, cap))


# Standard families used by the fixtures and tests.

def cyclic_group(n: int) -> FiniteAction:
    if n == 1:
        return FiniteAction.trivial(1)
    return FiniteAction(n, (Permutation(tuple((i + 1) % n for i in range(n))),))


def dihedral_group(n: int) -> FiniteAction:
    """Symmetries of the n-gon on its vertices 0..n-1 (order 2n for n >= 3)."""
    rot = Permutation(tuple((i + 1) % n for i in range(n)))
    ref = Permutation(tuple((-i) % n for i in range(n)))
    return FiniteAction(n, (rot, ref))


def symmetric_group(n: int) -> FiniteAction:
    if n == 1:
        return FiniteAction.trivial(1)
    if n == 2:
        return FiniteAction(2, (Permutation((1, 0)),))
    swap = Permutation((1, 0) + tuple(range(2, n)))
    cyc = Permutation(tuple((i + 1) % n for i in range(n)))
    return FiniteAction(n, (swap, cyc))


def alternating_group(n: int) -> FiniteAction:
    if n <= 2:
        return FiniteAction.trivial(n)
    gens = []
    for k in range(2, n):
        images = list(range(n))
        images[0], images[1], images[k] = 1, k, 0
        gens.append(Permutation(images))
    return FiniteAction(n, tuple(gens))


def affine_group(p: int, multipliers: Iterable[int]) -> FiniteAction:
    """x -> a*x + b over Z/p for a in the subgroup generated by ``multipliers``."""
    gens = [Permutation(tuple((i + 1) % p for i in range(p)))]
    for a in multipliers:
        gens.append(Permutation(tuple((a * i) % p for i in range(p))))
    return FiniteAction(p, tuple(gens))
