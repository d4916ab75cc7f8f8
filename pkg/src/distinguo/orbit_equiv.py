"""Orbits on subsets, strong orbit-equivalence, and the windowed dense-subgroup sampler.

Subsets of {0..n-1} are bitmasks (bit i set when i is in the subset).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb

import numpy as np

from .distinguish import find_2_distinguishing_subset
from .errors import DegreeMismatch, NotASubgroup, TooManySubsets
from .perm import DEFAULT_CAP, FiniteAction, Permutation, enumerate_elements
from .streams import GroupStream

MAX_POWERSET_DEGREE = 20


def mask_to_list(mask: int) -> list[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def list_to_mask(points) -> int:
    m = 0
    for p in points:
        m |= 1 << p
    return m


class UnionFind:
    def __init__(self, size: int):
        self.parent = list(range(size))

    def find(self, x: int) -> int:
        parent = self.parent
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return
        # Keep the smaller label as root so class representatives are minimal masks.
        if rb < ra:
            ra, rb = rb, ra
        self.parent[rb] = ra


@dataclass
class SubsetOrbitPartition:
    degree: int
    size: int | None  # None for the whole power set
    classes: list  # lists of masks, each sorted; classes ordered by least mask

    def class_of(self) -> dict:
        return {m: k for k, cls in enumerate(self.classes) for m in cls}

    def format(self) -> str:
        lines = []
        for k, cls in enumerate(self.classes):
            subsets = " ".join("[" + ",".join(map(str, mask_to_list(m))) + "]" for m in cls)
            lines.append(f"class {k}: {subsets}")
        return "\n".join(lines)


def _mask_images(p: Permutation, masks: np.ndarray) -> np.ndarray:
    out = np.zeros_like(masks)
    for i, j in enumerate(p.images):
        out |= ((masks >> i) & 1) << j
    return out


def _partition(action: FiniteAction, masks: list[int], size) -> SubsetOrbitPartition:
    index = {m: k for k, m in enumerate(masks)}
    uf = UnionFind(len(masks))
    arr = np.array(masks, dtype=np.int64)
    for g in action.generators:
        imgs = _mask_images(g, arr)
        for k, img in enumerate(imgs.tolist()):
            uf.union(k, index[img])
    groups: dict = {}
    for k, m in enumerate(masks):
        groups.setdefault(uf.find(k), []).append(m)
    classes = sorted((sorted(c) for c in groups.values()), key=lambda c: c[0])
    return SubsetOrbitPartition(action.degree, size, classes)


def subset_orbits(action: FiniteAction, k: int, cap: int = 10**6) -> SubsetOrbitPartition:
    n = action.degree
    if not 0 <= k <= n:
        raise ValueError(f"subset size {k} outside 0..{n}")
    if comb(n, k) > cap:
        raise TooManySubsets(f"C({n},{k}) exceeds cap {cap}")
    masks = sorted(list_to_mask(c) for c in combinations(range(n), k))
    return _partition(action, masks, k)


def powerset_orbits(action: FiniteAction, cap: int = 2**MAX_POWERSET_DEGREE) -> SubsetOrbitPartition:
    n = action.degree
    if n > MAX_POWERSET_DEGREE or 2**n > cap:
        raise TooManySubsets(f"2^{n} subsets exceeds the power-set limit")
    return _partition(action, list(range(2**n)), None)


def strongly_orbit_equivalent(a: FiniteAction, b: FiniteAction, cap: int = 2**MAX_POWERSET_DEGREE) -> bool:
    if a.degree != b.degree:
        raise DegreeMismatch(f"degrees {a.degree} and {b.degree}")
    return powerset_orbits(a, cap).classes == powerset_orbits(b, cap).classes


def _orbit_size(elements: list[Permutation], mask: int) -> int:
    return len({g.image_mask(mask) for g in elements})


@dataclass
class OEWitness:
    subset: frozenset
    orbit_size_a: int
    orbit_size_b: int


def strong_oe_witness(
    a: FiniteAction, b: FiniteAction, cap: int = 2**MAX_POWERSET_DEGREE, group_cap: int = DEFAULT_CAP
) -> OEWitness | None:
    """A subset whose orbits under ``a`` and its subgroup ``b`` differ, or None when none exists.

    Tries a 2-distinguishing subset of ``a`` first: its ``a``-orbit has |a|
    members while its ``b``-orbit has at most |b|.  Otherwise scans all subsets.
    """
    if a.degree != b.degree:
        raise DegreeMismatch(f"degrees {a.degree} and {b.degree}")
    n = a.degree
    if n > MAX_POWERSET_DEGREE or 2**n > cap:
        raise TooManySubsets(f"2^{n} subsets exceeds the power-set limit")
    elems_a = enumerate_elements(a, group_cap)
    members = set(elems_a)
    for g in b.generators:
        if g not in members:
            raise NotASubgroup(f"generator {g.cycle_string()} is not in the parent group")
    elems_b = enumerate_elements(b, group_cap)
    if len(elems_b) < len(elems_a):
        y = find_2_distinguishing_subset(a, group_cap)
        if y is not None:
            mask = list_to_mask(y)
            sa, sb = _orbit_size(elems_a, mask), _orbit_size(elems_b, mask)
            if sa != sb:
                return OEWitness(frozenset(y), sa, sb)
    class_a = powerset_orbits(a, cap).class_of()
    class_b = powerset_orbits(b, cap).class_of()
    # b-orbits refine a-orbits, so they differ exactly where some a-class splits.
    sizes_a: dict = {}
    sizes_b: dict = {}
    for m in range(2**n):
        sizes_a[class_a[m]] = sizes_a.get(class_a[m], 0) + 1
        sizes_b[class_b[m]] = sizes_b.get(class_b[m], 0) + 1
    for m in range(2**n):
        if sizes_a[class_a[m]] != sizes_b[class_b[m]]:
            return OEWitness(frozenset(mask_to_list(m)), sizes_a[class_a[m]], sizes_b[class_b[m]])
    return None


@dataclass
class DenseSample:
    radius: int
    max_subset_size: int
    scanned: int
    representatives: list = field(default_factory=list)  # StreamElements, first-use order
    pairs: dict = field(default_factory=dict)  # (Y, Z) frozensets -> index into representatives
    # Pairs whose image left the window; deferred to larger radii.
    escaped: int = 0

    def verify(self) -> bool:
        return all(
            frozenset(self.representatives[k](p) for p in ys) == zs for (ys, zs), k in self.pairs.items()
        )


def sample_dense_generators(s: GroupStream, radius: int, max_subset_size: int, budget: int) -> DenseSample:
    """One representative element for each (Y, aY) realised by the first ``budget`` elements.

    Y ranges over nonempty window subsets of size at most ``max_subset_size``;
    only pairs with aY inside the window are recorded.
    """
    out = DenseSample(radius, max_subset_size, 0)
    if max_subset_size <= 0:
        return out
    w = s.window(radius)
    inside = set(w)
    subsets = [frozenset(c) for k in range(1, max_subset_size + 1) for c in combinations(w, k)]
    rep_index: dict = {}
    for a in s.elements(budget):
        out.scanned += 1
        img = {p: a(p) for p in w}
        for ys in subsets:
            zs = frozenset(img[p] for p in ys)
            if not zs <= inside:
                out.escaped += 1
                continue
            if (ys, zs) in out.pairs:
                continue
            if a.index not in rep_index:
                rep_index[a.index] = len(out.representatives)
                out.representatives.append(a)
            out.pairs[(ys, zs)] = rep_index[a.index]
    return out
