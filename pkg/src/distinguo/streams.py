"""Countable group actions given by built-in families, queried on finite windows.

A family fixes an enumeration of its ground set (windows are prefixes of it)
and enumerates its nonidentity elements breadth-first over generator words,
deduplicated by exact normal form.  Within a word length, elements appear in
the order they are discovered: earlier elements first, extended on the right
by the generators in their listed order.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from itertools import count
from typing import Callable, Iterable, Optional

from . import ex41
from .errors import BudgetExceeded, MalformedWord, UnknownFamily


@dataclass(frozen=True)
class Affine:
    """The map i -> reflect*i + shift of the integers."""

    reflect: int = 1
    shift: int = 0

    def __call__(self, i: int) -> int:
        return self.reflect * i + self.shift

    def __mul__(self, other: "Affine") -> "Affine":
        return Affine(self.reflect * other.reflect, self.reflect * other.shift + self.shift)

    def inverse(self) -> "Affine":
        return Affine(self.reflect, -self.reflect * self.shift)

    def is_identity(self) -> bool:
        return self.reflect == 1 and self.shift == 0

    def sort_key(self):
        return (self.reflect, self.shift)

    def describe(self) -> str:
        return f"i -> {'' if self.reflect == 1 else '-'}i{self.shift:+d}"


def _int_points():
    yield 0
    for k in count(1):
        yield k
        yield -k


def _ex41_points():
    for i in _int_points():
        yield (ex41.X, i)
        yield (ex41.Y, i)


@dataclass(frozen=True)
class Family:
    name: str
    # Generators in enumeration order, as (word token, element).
    generators: tuple
    # Extra named elements of the ambient group usable as probe targets.
    ambient: tuple
    identity: object
    point_iter: Callable
    points_per_radius: int
    point_radius: Callable
    format_point: Callable
    parse_point: Callable
    infinite_motion: bool
    subdegree_finite: bool
    note: str

    def window(self, radius: int) -> list:
        """Points of index magnitude at most ``radius``, in enumeration order."""
        if radius < 0:
            return []
        size = self.points_per_radius * (2 * radius + 1)
        it = self.point_iter()
        return [next(it) for _ in range(size)]


def _parse_int_point(text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise MalformedWord(f"bad integer point {text!r}") from None


def _parse_ex41_point(text: str) -> tuple:
    m = re.fullmatch(r"([xy])(-?\d+)", text.strip())
    if not m:
        raise MalformedWord(f"bad point {text!r}; expected x<i> or y<i>")
    return (ex41.X if m.group(1) == "x" else ex41.Y, int(m.group(2)))


T = Affine(1, 1)
R = Affine(-1, 0)

_Z_COMMON = dict(
    identity=Affine(),
    point_iter=_int_points,
    points_per_radius=1,
    point_radius=abs,
    format_point=str,
    parse_point=_parse_int_point,
)

_EX41_COMMON = dict(
    identity=ex41.IDENTITY,
    point_iter=_ex41_points,
    points_per_radius=2,
    point_radius=lambda p: abs(p[1]),
    format_point=ex41.point_name,
    parse_point=_parse_ex41_point,
)

FAMILIES = {
    "z-translate": Family(
        name="z-translate",
        generators=(("t", T), ("t^-1", T.inverse())),
        ambient=(("r", R),),
        infinite_motion=True,
        subdegree_finite=True,
        note="nonidentity translations fix no integer",
        **_Z_COMMON,
    ),
    "inf-dihedral": Family(
        name="inf-dihedral",
        generators=(("t", T), ("t^-1", T.inverse()), ("r", R)),
        ambient=(),
        infinite_motion=True,
        subdegree_finite=True,
        note="every nonidentity element fixes at most one integer",
        **_Z_COMMON,
    ),
    "ex41-B": Family(
        name="ex41-B",
        generators=(("b", ex41.GEN_B), ("b^-1", ex41.GEN_B.inverse()), ("c", ex41.GEN_C), ("d", ex41.GEN_D)),
        ambient=(("s0", ex41.S0),),
        infinite_motion=True,
        subdegree_finite=True,
        note="B has infinite motion (property 3 of the double-ray-times-K2 example)",
        **_EX41_COMMON,
    ),
    "ex41-A": Family(
        name="ex41-A",
        generators=(
            ("b", ex41.GEN_B),
            ("b^-1", ex41.GEN_B.inverse()),
            ("c", ex41.GEN_C),
            ("d", ex41.GEN_D),
            ("s0", ex41.S0),
        ),
        ambient=(),
        infinite_motion=False,
        subdegree_finite=True,
        note="countable part <b,c,d,s0> of the full automorphism group; s0 moves two points",
        **_EX41_COMMON,
    ),
}


@dataclass(frozen=True)
class StreamElement:
    index: int  # 1-based position in the element enumeration
    value: object
    # The word is stored as a link to the element it extends, so that long
    # words (z-translate words grow linearly) cost constant space each.
    parent: Optional["StreamElement"] = field(default=None, compare=False, repr=False)
    token: str = field(default="", compare=False)

    @property
    def word(self) -> tuple:
        """Generator tokens, leftmost applied last."""
        toks = []
        e = self
        while e is not None:
            toks.append(e.token)
            e = e.parent
        return tuple(reversed(toks))

    def __call__(self, point):
        return self.value(point)

    def word_string(self) -> str:
        return format_word(self.word)


def format_word(word: Iterable[str]) -> str:
    """Collapse runs of equal generators: ``('b','b','d')`` -> ``'b^2 d'``."""
    parts: list[list] = []
    for tok in word:
        base, _, exp = tok.partition("^")
        e = int(exp) if exp else 1
        if parts and parts[-1][0] == base:
            parts[-1][1] += e
        else:
            parts.append([base, e])
    out = []
    for base, e in parts:
        if e == 0:
            continue
        out.append(base if e == 1 else f"{base}^{e}")
    return " ".join(out) if out else "1"


class GroupStream:
    """Lazily enumerated nonidentity elements of a built-in family."""

    def __init__(self, family: Family):
        self.family = family
        self._elements: list[StreamElement] = []
        self._seen = {family.identity}
        self._level = [None]
        self._next_level: list = []
        self._cursor = 0

    @property
    def family_name(self) -> str:
        return self.family.name

    @property
    def infinite_motion_asserted(self) -> bool:
        return self.family.infinite_motion

    @property
    def subdegree_finite_asserted(self) -> bool:
        return self.family.subdegree_finite

    def _grow(self) -> None:
        while self._cursor >= len(self._level):
            if not self._next_level:
                raise BudgetExceeded(f"family {self.family.name} has no further elements")
            self._level, self._next_level, self._cursor = self._next_level, [], 0
        parent = self._level[self._cursor]
        value = self.family.identity if parent is None else parent.value
        self._cursor += 1
        for tok, g in self.family.generators:
            h = value * g
            if h not in self._seen:
                self._seen.add(h)
                e = StreamElement(len(self._elements) + 1, h, parent, tok)
                self._next_level.append(e)
                self._elements.append(e)

    def element(self, index: int) -> StreamElement:
        """The ``index``-th nonidentity element (1-based)."""
        if index < 1:
            raise ValueError("element indices start at 1")
        while len(self._elements) < index:
            self._grow()
        return self._elements[index - 1]

    def elements(self, limit: int):
        for k in range(1, limit + 1):
            yield self.element(k)

    def window(self, radius: int) -> list:
        return self.family.window(radius)

    def points(self):
        return self.family.point_iter()

    def format_point(self, p) -> str:
        return self.family.format_point(p)

    def parse_point(self, text: str):
        return self.family.parse_point(text)

    def parse_word(self, text: str):
        """Evaluate a word such as ``"b^-9 d b^9"`` over the family's generators and ambient names."""
        table = {}
        for tok, g in self.family.generators + self.family.ambient:
            base = tok.partition("^")[0]
            if tok == base:
                table[base] = g
        value = self.family.identity
        tokens = text.replace("*", " ").split()
        for tok in tokens:
            if tok in ("1", "id", "e"):
                continue
            m = re.fullmatch(r"([a-z]+)(-?\d+)?(?:\^(-?\d+))?", tok)
            if not m:
                raise MalformedWord(f"bad word token {tok!r}")
            name, sub, exp = m.group(1), m.group(2), m.group(3)
            if name == "s" and sub is not None and self.family.name.startswith("ex41"):
                g = ex41.transposition(int(sub))
            elif sub is None and name in table:
                g = table[name]
            else:
                raise MalformedWord(f"unknown generator {tok!r} for family {self.family.name}")
            k = int(exp) if exp else 1
            base = g if k >= 0 else g.inverse()
            for _ in range(abs(k)):
                value = value * base
        return value


def make_stream(family_name: str) -> GroupStream:
    try:
        return GroupStream(FAMILIES[family_name])
    except KeyError:
        raise UnknownFamily(f"unknown family {family_name!r}; known: {', '.join(FAMILIES)}") from None


def _value(e):
    return e.value if isinstance(e, StreamElement) else e


def window_agreement(s: GroupStream, e1, e2, radius: int) -> bool:
    f, g = _value(e1), _value(e2)
    return all(f(p) == g(p) for p in s.window(radius))


def first_disagreement(s: GroupStream, e1, e2, max_radius: int):
    """Smallest radius at which the two elements disagree, or None up to ``max_radius``."""
    f, g = _value(e1), _value(e2)
    it = s.points()
    per = s.family.points_per_radius
    for r in range(max_radius + 1):
        k = per * (2 * r + 1) if r == 0 else per * 2
        for _ in range(k):
            p = next(it)
            if f(p) != g(p):
                return r
    return None


def find_displacing_element(s: GroupStream, ys: Iterable, zs: Iterable, budget: int) -> StreamElement:
    """First enumerated ``a`` with ``ys`` and ``a(zs)`` disjoint."""
    ys = set(ys)
    zs = list(zs)
    for a in s.elements(budget):
        if not any(a(z) in ys for z in zs):
            return a
    raise BudgetExceeded(f"no displacing element among the first {budget} elements")


class _UnionFind:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra


def window_point_stabilizer_orbits(s: GroupStream, point, radius: int, budget: int) -> list[list]:
    """Partition of the window under the scanned elements that fix ``point``.

    Classes are listed in window order, each in window order.
    """
    w = s.window(radius)
    inside = set(w)
    uf = _UnionFind(w)
    for a in s.elements(budget):
        if a(point) != point:
            continue
        for p in w:
            q = a(p)
            if q in inside:
                uf.union(p, q)
    classes: dict = {}
    for p in w:
        classes.setdefault(uf.find(p), []).append(p)
    return list(classes.values())


@dataclass
class ProbeResult:
    radius: int
    witness: StreamElement | None


@dataclass
class ClosureReport:
    target: object
    results: list = field(default_factory=list)
    # Set when the target itself occurs in the scanned prefix of the enumeration.
    member_index: int | None = None

    @property
    def complete(self) -> bool:
        return all(r.witness is not None for r in self.results)

    @property
    def verdict(self) -> str:
        if self.member_index is not None:
            return "MEMBER"
        return "EVIDENCE" if self.complete else "NOT_FOUND"


def closure_membership_probe(s: GroupStream, target, radii: Iterable[int], budget: int) -> ClosureReport:
    """For each radius, the first scanned element agreeing with ``target`` on that window."""
    target = _value(target)
    report = ClosureReport(target)
    radii = list(radii)
    windows = [(s.window(r), [target(p) for p in s.window(r)]) for r in radii]
    hits: list = [None] * len(radii)
    for a in s.elements(budget):
        if a.value == target:
            report.member_index = a.index
        for k, (w, expected) in enumerate(windows):
            if hits[k] is None and all(a(p) == q for p, q in zip(w, expected)):
                hits[k] = a
        if report.member_index is not None and all(h is not None for h in hits):
            break
    report.results.extend(ProbeResult(r, h) for r, h in zip(radii, hits))
    return report
