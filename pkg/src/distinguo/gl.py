"""Distinguishing sets for GL(n, Q) with exact rational arithmetic.

Vectors are tuples of Fractions; matrices are tuples of rows.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations, product
from math import factorial

from .errors import BadDimension, MalformedVectors, OrderTooSmall, SearchBudgetExceeded, ZeroVector

TRIVIAL = "TRIVIAL"
NONTRIVIAL = "NONTRIVIAL"


def vec(*entries) -> tuple:
    return tuple(Fraction(e) for e in entries)


def unit(n: int, j: int) -> tuple:
    return tuple(Fraction(int(i == j)) for i in range(n))


def identity_matrix(n: int) -> tuple:
    return tuple(unit(n, i) for i in range(n))


def mat_vec(m, v) -> tuple:
    return tuple(sum((a * b for a, b in zip(row, v)), Fraction(0)) for row in m)


def mat_mul(a, b) -> tuple:
    cols = list(zip(*b))
    return tuple(tuple(sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in cols) for row in a)


def transpose(m) -> tuple:
    return tuple(zip(*m))


def inverse(m) -> tuple | None:
    """Gauss-Jordan inverse, or None when singular."""
    n = len(m)
    aug = [list(row) + list(unit(n, i)) for i, row in enumerate(m)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            return None
        aug[col], aug[pivot] = aug[pivot], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


def rank(vectors) -> int:
    rows = [list(v) for v in vectors]
    r = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][col] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        for i in range(len(rows)):
            if i != r and rows[i][col] != 0:
                f = rows[i][col] / rows[r][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        r += 1
    return r


def construct_distinguishing_set(n: int, c) -> list[tuple]:
    """The vectors c**i * u_j for 1 <= j <= n and 0 <= i < j, ordered by j then i."""
    if n < 1:
        raise BadDimension(f"dimension must be at least 1, got {n}")
    c = Fraction(c)
    # Over Q every element other than 0, 1, -1 has infinite multiplicative order.
    if c == 0:
        raise OrderTooSmall("0 is not a unit")
    if c in (1, -1):
        order = 1 if c == 1 else 2
        if order <= n * n:
            raise OrderTooSmall(f"{c} has multiplicative order {order} <= {n * n}")
    out = []
    for j in range(n):
        u = unit(n, j)
        for i in range(j + 1):
            out.append(tuple(c**i * x for x in u))
    return out


def _line_key(v: tuple) -> tuple:
    lead = next(x for x in v if x != 0)
    return tuple(x / lead for x in v)


@dataclass
class StabilizerVerdict:
    verdict: str
    candidates: int
    certificate: tuple | None = None  # a nonidentity matrix permuting Y


def _complement_certificate(ys: list, n: int) -> tuple:
    # Y spans a proper subspace: fix a basis of the span and double one complementary vector.
    basis = []
    for v in ys:
        if rank(basis + [v]) > len(basis):
            basis.append(v)
    for j in range(n):
        if rank(basis + [unit(n, j)]) > len(basis):
            basis.append(unit(n, j))
    k = len(basis) - 1
    p = transpose(basis)
    d = tuple(tuple(Fraction(2 if (i == j == k) else int(i == j)) for j in range(n)) for i in range(n))
    return mat_mul(mat_mul(p, d), inverse(p))


def verify_trivial_setwise_stabilizer(ys, max_candidates: int = 10**6) -> StabilizerVerdict:
    """Decide whether only the identity of GL(n, Q) maps the finite set ``ys`` onto itself.

    A linear map permuting Y sends each line through the origin to a line
    holding the same number of points of Y.  Every permutation of Y that
    respects this is tried; for each, the unique linear map agreeing with it on
    a basis taken from Y is checked against all of Y.
    """
    ys = [tuple(Fraction(x) for x in v) for v in ys]
    if not ys:
        raise ZeroVector("empty vector set")
    n = len(ys[0])
    if any(len(v) != n for v in ys):
        raise MalformedVectors("vectors of different lengths")
    if any(all(x == 0 for x in v) for v in ys):
        raise ZeroVector("zero vector in set")
    ys = list(dict.fromkeys(ys))

    if rank(ys) < n:
        return StabilizerVerdict(NONTRIVIAL, 0, _complement_certificate(ys, n))

    lines: dict = {}
    for v in ys:
        lines.setdefault(_line_key(v), []).append(v)
    by_size: dict = {}
    for members in lines.values():
        by_size.setdefault(len(members), []).append(members)

    basis_idx = []
    chosen = []
    for k, v in enumerate(ys):
        if rank(chosen + [v]) > len(chosen):
            chosen.append(v)
            basis_idx.append(k)
    basis_inv = inverse(transpose(chosen))
    yset = set(ys)

    # For every size class: a permutation of its lines, then a bijection inside each line.
    per_size_options = []
    for size, groups in sorted(by_size.items()):
        options = []
        for target_order in permutations(range(len(groups))):
            bijections = [permutations(groups[t]) for t in target_order]
            for choice in product(*bijections):
                options.append({v: w for g, imgs in zip(groups, choice) for v, w in zip(g, imgs)})
        per_size_options.append(options)

    candidates = 0
    for combo in product(*per_size_options):
        candidates += 1
        if candidates > max_candidates:
            raise SearchBudgetExceeded(f"more than {max_candidates} candidate permutations")
        sigma = {}
        for part in combo:
            sigma.update(part)
        if all(sigma[v] == v for v in ys):
            continue
        m = mat_mul(transpose([sigma[ys[k]] for k in basis_idx]), basis_inv)
        if all(mat_vec(m, v) == sigma[v] for v in ys) and all(mat_vec(m, v) in yset for v in ys):
            return StabilizerVerdict(NONTRIVIAL, candidates, m)
    return StabilizerVerdict(TRIVIAL, candidates)


def expected_candidate_count(n: int) -> int:
    out = 1
    for j in range(1, n + 1):
        out *= factorial(j)
    return out


def format_vector(v) -> str:
    return " ".join(f"{x.numerator}/{x.denominator}" for x in v)


def parse_vector(line: str) -> tuple:
    try:
        return tuple(Fraction(tok) for tok in line.replace(",", " ").split())
    except (ValueError, ZeroDivisionError):
        raise MalformedVectors(f"bad rational vector {line!r}") from None


def parse_vectors(text: str) -> list[tuple]:
    out = []
    for raw in text.splitlines():
        line = raw.strip()
        if line and not line.startswith("#"):
            out.append(parse_vector(line))
    return out
