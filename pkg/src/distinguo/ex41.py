"""Automorphisms of the strong product of the double ray with K2.

Vertices are ``(side, i)`` with side 0 for ``x_i`` and 1 for ``y_i``.  Every
element handled here has the shape "move index i to eps*i + shift, then swap
the two vertices at the new index if it lies in the flip set".  The flip set
is the symmetric difference of finitely many translates ``s*SQUARES + t`` of
the squares (0 included) together with a finite explicit set.  Two distinct
translates meet in finitely many points, so a reduced symbolic part is either
empty or infinite, and equality of normal forms decides equality of elements.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import isqrt

from .perm import Permutation

X, Y = 0, 1


def is_square(i: int) -> bool:
    return i >= 0 and isqrt(i) ** 2 == i


def _xor(a: frozenset, b) -> frozenset:
    return a.symmetric_difference(b)


@dataclass(frozen=True)
class Ex41Element:
    reflect: int = 1
    shift: int = 0
    flips: frozenset = field(default_factory=frozenset)
    explicit: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if self.reflect not in (1, -1):
            raise ValueError("reflect must be +1 or -1")
        for s, _ in self.flips:
            if s not in (1, -1):
                raise ValueError("flip sign must be +1 or -1")
        object.__setattr__(self, "flips", frozenset(self.flips))
        object.__setattr__(self, "explicit", frozenset(self.explicit))

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def sort_key(self):
        return (self.reflect, self.shift, tuple(sorted(self.flips)), tuple(sorted(self.explicit)))

    def is_identity(self) -> bool:
        return self.reflect == 1 and self.shift == 0 and not self.flips and not self.explicit

    def _affine(self, i: int) -> int:
        return self.reflect * i + self.shift

    def flipped_at(self, j: int) -> bool:
        parity = j in self.explicit
        for s, t in self.flips:
            if is_square(s * (j - t)):
                parity = not parity
        return parity

    def __call__(self, point: tuple) -> tuple:
        side, i = point
        j = self._affine(i)
        return (side ^ 1, j) if self.flipped_at(j) else (side, j)

    def _push(self, other: "Ex41Element"):
        # Transport other's flip data through this element's affine map.
        flips = frozenset((self.reflect * s, self.reflect * t + self.shift) for s, t in other.flips)
        explicit = frozenset(self._affine(j) for j in other.explicit)
        return flips, explicit

    def __mul__(self, other: "Ex41Element") -> "Ex41Element":
        """Composition: apply ``other`` first, then ``self``."""
        flips, explicit = self._push(other)
        return Ex41Element(
            self.reflect * other.reflect,
            self.reflect * other.shift + self.shift,
            _xor(self.flips, flips),
            _xor(self.explicit, explicit),
        )

    def inverse(self) -> "Ex41Element":
        eps, k = self.reflect, self.shift
        return Ex41Element(
            eps,
            -eps * k,
            frozenset((eps * s, eps * (t - k)) for s, t in self.flips),
            frozenset(eps * (j - k) for j in self.explicit),
        )

    def __pow__(self, k: int) -> "Ex41Element":
        base = self if k >= 0 else self.inverse()
        out = IDENTITY
        for _ in range(abs(k)):
            out = base * out
        return out

    def describe(self) -> str:
        def sgn(v):
            return f"{v:+d}"

        flips = ",".join(f"({sgn(s)},{t})" for s, t in sorted(self.flips))
        explicit = ",".join(str(j) for j in sorted(self.explicit))
        return f"eps={sgn(self.reflect)} k={self.shift} flips={{{flips}}} explicit={{{explicit}}}"


IDENTITY = Ex41Element()
GEN_B = Ex41Element(1, 1)
GEN_C = Ex41Element(-1, 0)
GEN_D = Ex41Element(1, 0, frozenset({(1, 0)}))
S0 = Ex41Element(1, 0, explicit=frozenset({0}))


def transposition(i: int) -> Ex41Element:
    """The automorphism swapping x_i and y_i and fixing everything else."""
    return Ex41Element(1, 0, explicit=frozenset({i}))


def ex41_multiply(p: Ex41Element, q: Ex41Element) -> Ex41Element:
    return p * q


def point_name(point: tuple) -> str:
    side, i = point
    return ("x" if side == X else "y") + str(i)


def window_points(radius: int) -> list[tuple]:
    return [(side, i) for i in range(-radius, radius + 1) for side in (X, Y)]


@dataclass(frozen=True)
class WindowAction:
    """Images of the window points; points whose image leaves the window are listed in ``escaped``."""

    radius: int
    points: tuple
    images: dict
    escaped: tuple

    def motion(self) -> int:
        return sum(1 for p in self.points if self.images[p] != p)

    def as_permutation(self) -> Permutation:
        if self.escaped:
            raise ValueError("window is not invariant; some points leave it")
        index = {p: k for k, p in enumerate(self.points)}
        return Permutation(tuple(index[self.images[p]] for p in self.points))


def ex41_window_action(p: Ex41Element, radius: int) -> WindowAction:
    pts = tuple(window_points(radius))
    images = {pt: p(pt) for pt in pts}
    escaped = tuple(pt for pt in pts if abs(images[pt][1]) > radius)
    return WindowAction(radius, pts, images, escaped)
