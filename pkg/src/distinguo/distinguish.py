"""Motion, Motion Lemma certificates, distinguishing numbers, and the greedy
2-colouring for countable streams."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations

from .errors import (
    DegreeMismatch,
    MotionEvidenceExhausted,
    SearchBudgetExceeded,
    TrivialGroup,
)
from .perm import DEFAULT_CAP, FiniteAction, Permutation, enumerate_elements
from .streams import GroupStream

DEFAULT_SEARCH_BUDGET = 10**7

CERTIFIED_2 = "CERTIFIED_2"
INCONCLUSIVE = "INCONCLUSIVE"


@dataclass(frozen=True)
class Coloring:
    colors: tuple

    @property
    def degree(self) -> int:
        return len(self.colors)

    @property
    def num_colors(self) -> int:
        return max(self.colors) + 1 if self.colors else 0

    @classmethod
    def from_black_set(cls, n: int, black) -> "Coloring":
        black = set(black)
        return cls(tuple(1 if i in black else 0 for i in range(n)))

    @classmethod
    def parse(cls, text: str) -> "Coloring":
        text = text.strip()
        if not text or not text.isdigit():
            raise ValueError(f"coloring must be a digit string, got {text!r}")
        return cls(tuple(int(ch) for ch in text))

    def black_set(self) -> frozenset:
        return frozenset(i for i, c in enumerate(self.colors) if c == 1)

    def __str__(self) -> str:
        if self.num_colors > 10:
            return ",".join(map(str, self.colors))
        return "".join(map(str, self.colors))


@dataclass
class MotionReport:
    group_order: int
    motion: int
    witness: Permutation
    verdict: str | None = None

    @property
    def bound_value(self) -> float:
        return 2 * math.log2(self.group_order)


def _nonidentity(action: FiniteAction, cap: int) -> list[Permutation]:
    elements = enumerate_elements(action, cap)
    if len(elements) < 2:
        raise TrivialGroup("motion is undefined for the trivial group")
    return elements[1:]


def motion(action: FiniteAction, cap: int = DEFAULT_CAP) -> MotionReport:
    """Minimum support size over nonidentity elements; lexicographically least witness."""
    rest = _nonidentity(action, cap)
    best = min(rest, key=lambda g: (g.motion(), g.images))
    return MotionReport(len(rest) + 1, best.motion(), best)


def motion_lemma_certify(action: FiniteAction, cap: int = DEFAULT_CAP) -> MotionReport:
    """CERTIFIED_2 iff 2**m >= |A|**2; the check is one-sided and never claims D > 2."""
    report = motion(action, cap)
    ok = 2**report.motion >= report.group_order**2
    report.verdict = CERTIFIED_2 if ok else INCONCLUSIVE
    return report


def count_preserved_colorings(p: Permutation) -> int:
    return 2 ** p.cycle_count()


def verify_coloring(action: FiniteAction, coloring: Coloring, cap: int = DEFAULT_CAP) -> int:
    """Order of the subgroup preserving ``coloring``; 1 means distinguishing."""
    if coloring.degree != action.degree:
        raise DegreeMismatch(f"coloring has {coloring.degree} points, action has {action.degree}")
    col = coloring.colors
    n = action.degree
    return sum(
        1 for g in enumerate_elements(action, cap) if all(col[g.images[i]] == col[i] for i in range(n))
    )


def _search_coloring(elements: list[Permutation], n: int, d: int, budget: list) -> tuple | None:
    """Lexicographically least colouring with at most ``d`` colours fixed only by the identity.

    Points are coloured in order 0..n-1.  Only colourings whose colours first
    appear in increasing order are tried, which keeps the lexicographic minimum.
    ``survivors`` holds the nonidentity elements consistent with the partial
    colouring; a branch dies when one of them fixes every uncoloured point.
    """
    inverses = [g.inverse().images for g in elements]
    images = [g.images for g in elements]
    col = [-1] * n

    def rec(pos: int, used: int, survivors: list) -> bool:
        budget[0] -= 1
        if budget[0] < 0:
            raise SearchBudgetExceeded("coloring search budget exhausted")
        if not survivors:
            for i in range(pos, n):
                col[i] = 0
            return True
        if pos == n:
            return False
        for k in survivors:
            img = images[k]
            if all(img[i] == i for i in range(pos, n)):
                return False
        for c in range(min(used + 1, d)):
            col[pos] = c
            nxt = []
            for k in survivors:
                a = images[k][pos]
                b = inverses[k][pos]
                if a <= pos and col[a] != c:
                    continue
                if b <= pos and col[b] != c:
                    continue
                nxt.append(k)
            if rec(pos + 1, max(used, c + 1), nxt):
                return True
        col[pos] = -1
        return False

    if rec(0, 0, list(range(len(elements)))):
        return tuple(col)
    return None


def distinguishing_number(
    action: FiniteAction, cap: int = DEFAULT_CAP, budget: int = DEFAULT_SEARCH_BUDGET
) -> tuple[int, Coloring]:
    """Least d admitting a distinguishing d-colouring, with the lexicographically least witness."""
    elements = enumerate_elements(action, cap)
    rest = [g for g in elements if not g.is_identity()]
    n = action.degree
    if not rest:
        return 1, Coloring((0,) * n)
    remaining = [budget]
    for d in range(2, n + 1):
        found = _search_coloring(rest, n, d, remaining)
        if found is not None:
            witness = Coloring(found)
            assert verify_coloring(action, witness, cap) == 1
            return d, witness
    raise AssertionError("the all-distinct colouring is always distinguishing")


def _stabilizer_is_trivial(masks_of: list, mask: int) -> bool:
    for img in masks_of:
        if img(mask) == mask:
            return False
    return True


def find_2_distinguishing_subset(
    action: FiniteAction, cap: int = DEFAULT_CAP, budget: int = DEFAULT_SEARCH_BUDGET
) -> frozenset | None:
    """Least subset (by size, then bitmask) with trivial setwise stabilizer, or None."""
    rest = [g for g in enumerate_elements(action, cap) if not g.is_identity()]
    n = action.degree
    if not rest:
        return frozenset()
    examined = 0
    for size in range(n + 1):
        masks = sorted(sum(1 << i for i in c) for c in combinations(range(n), size))
        for mask in masks:
            examined += 1
            if examined > budget:
                raise SearchBudgetExceeded(f"examined {budget} subsets without finishing")
            if all(g.image_mask(mask) != mask for g in rest):
                return frozenset(i for i in range(n) if mask >> i & 1)
    return None


def minimal_base(action: FiniteAction, cap: int = DEFAULT_CAP) -> list[int]:
    """A smallest base; among those of least size, the lexicographically first."""
    rest = [g for g in enumerate_elements(action, cap) if not g.is_identity()]
    n = action.degree
    for size in range(n + 1):
        for pts in combinations(range(n), size):
            if all(any(g.images[p] != p for p in pts) for g in rest):
                return list(pts)
    raise AssertionError("the whole ground set is a base of a faithful action")


@dataclass
class GreedyStep:
    k: int
    element: object
    point: object
    image: object


@dataclass
class GreedyTranscript:
    steps: list = field(default_factory=list)

    @property
    def black(self) -> list:
        return [s.point for s in self.steps]

    @property
    def images(self) -> list:
        return [s.image for s in self.steps]

    def check(self) -> None:
        ys = self.black
        if len(set(ys)) != len(ys):
            raise AssertionError("black points repeat")
        if set(ys) & set(self.images):
            raise AssertionError("black set meets its image set")
        for s in self.steps:
            if s.element(s.point) != s.image or s.image == s.point:
                raise AssertionError(f"step {s.k} is not a move of its element")


def greedy_infinite_coloring(s: GroupStream, n_steps: int, window_growth_bound: int = 10**4) -> GreedyTranscript:
    """Pick one moved point per enumerated element so that the picks form a distinguishing black set.

    For the k-th element a, the chosen point is the first point in the
    enumeration that a moves, that is not an earlier pick or image, and whose
    image is not an earlier pick.  Points are scanned out to radius
    ``window_growth_bound``.
    """
    if not s.infinite_motion_asserted:
        raise MotionEvidenceExhausted(f"family {s.family_name} is not asserted to have infinite motion")
    transcript = GreedyTranscript()
    if n_steps <= 0:
        return transcript
    limit = s.family.points_per_radius * (2 * window_growth_bound + 1)
    picked: set = set()
    excluded: set = set()
    for a in s.elements(n_steps):
        chosen = None
        for _, x in zip(range(limit), s.points()):
            if x in excluded:
                continue
            y = a(x)
            if y == x or y in picked:
                continue
            chosen = (x, y)
            break
        if chosen is None:
            raise MotionEvidenceExhausted(
                f"no admissible moved point for element {a.index} within radius {window_growth_bound}"
            )
        x, y = chosen
        transcript.steps.append(GreedyStep(a.index, a, x, y))
        picked.add(x)
        excluded.update((x, y))
    return transcript
