"""Exact Cartan data for the simple Lie algebras A-G, in Bourbaki numbering.

Weights are tuples of integer Dynkin labels (coordinates in the
fundamental-weight basis).  Roots are stored in simple-root coordinates
and converted to weights through the Cartan matrix.  All arithmetic is
exact: integers where possible, ``fractions.Fraction`` for the invariant
form, never floats.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

Weight = tuple[int, ...]
RootVec = tuple[int, ...]

FAMILIES = "ABCDEFG"

# inclusive rank bounds per family; None means unbounded above
_RANK_RANGE = {
    "A": (1, None),
    "B": (2, None),
    "C": (2, None),
    "D": (3, None),
    "E": (6, 8),
    "F": (4, 4),
    "G": (2, 2),
}

_EXCEPTIONAL_WEYL_ORDER = {
    ("E", 6): 51840,
    ("E", 7): 2903040,
    ("E", 8): 696729600,
    ("F", 4): 1152,
    ("G", 2): 12,
}

_EXCEPTIONAL_NUM_POSITIVE = {
    ("E", 6): 36,
    ("E", 7): 63,
    ("E", 8): 120,
    ("F", 4): 24,
    ("G", 2): 6,
}


@dataclass(frozen=True)
class LieType:
    """A simple type: family letter A-G and rank."""

    family: str
    rank: int

    def __post_init__(self):
        if self.family not in _RANK_RANGE:
            raise ValueError(f"unknown family {self.family!r}; expected one of {FAMILIES}")
        lo, hi = _RANK_RANGE[self.family]
        if not isinstance(self.rank, int) or self.rank < lo or (hi is not None and self.rank > hi):
            raise ValueError(f"rank {self.rank} out of range for family {self.family}")

    @classmethod
    def parse(cls, name: str) -> "LieType":
        """Parse a compact name such as ``"D6"`` or ``"E8"``."""
        name = name.strip()
        if len(name) < 2 or name[0].upper() not in FAMILIES:
            raise ValueError(f"cannot parse Lie type {name!r}")
        try:
            rank = int(name[1:])
        except ValueError as exc:
            raise ValueError(f"cannot parse Lie type {name!r}") from exc
        return cls(name[0].upper(), rank)

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


def _cartan_matrix(t: LieType) -> np.ndarray:
    """Cartan matrix A with A[i, j] = alpha_j(h_i), Bourbaki numbering."""
    n = t.rank
    a = 2 * np.eye(n, dtype=np.int64)

    def link(i, j):
        a[i, j] = -1
        a[j, i] = -1

    if t.family in "ABC":
        for i in range(n - 1):
            link(i, i + 1)
        if t.family == "B":
            a[n - 1, n - 2] = -2  # alpha_n short
        elif t.family == "C":
            a[n - 2, n - 1] = -2  # alpha_n long
    elif t.family == "D":
        for i in range(n - 2):
            link(i, i + 1)
        link(n - 3, n - 1)
    elif t.family == "E":
        for i, j in [(0, 2), (2, 3), (3, 4), (4, 5), (1, 3)]:
            link(i, j)
        if n >= 7:
            link(5, 6)
        if n == 8:
            link(6, 7)
    elif t.family == "F":
        a = np.array(
            [[2, -1, 0, 0], [-1, 2, -1, 0], [0, -2, 2, -1], [0, 0, -1, 2]], dtype=np.int64
        )
    elif t.family == "G":
        a = np.array([[2, -3], [-1, 2]], dtype=np.int64)
    return a


def _six_d(t: LieType) -> tuple[int, ...]:
    """6*(alpha_i, alpha_i)/2 per simple root, normalised so long roots have norm 2."""
    n = t.rank
    if t.family in "ADE":
        return (6,) * n
    if t.family == "B":
        return (6,) * (n - 1) + (3,)
    if t.family == "C":
        return (3,) * (n - 1) + (6,)
    if t.family == "F":
        return (6, 6, 3, 3)
    return (2, 6)  # G2: alpha_1 short with (a,a) = 2/3


def _weyl_order(t: LieType) -> int:
    import math

    n = t.rank
    if t.family == "A":
        return math.factorial(n + 1)
    if t.family in "BC":
        return (2**n) * math.factorial(n)
    if t.family == "D":
        return (2 ** (n - 1)) * math.factorial(n)
    return _EXCEPTIONAL_WEYL_ORDER[(t.family, n)]


def _num_positive_roots(t: LieType) -> int:
    n = t.rank
    if t.family == "A":
        return n * (n + 1) // 2
    if t.family in "BC":
        return n * n
    if t.family == "D":
        return n * (n - 1)
    return _EXCEPTIONAL_NUM_POSITIVE[(t.family, n)]


def _invert_fraction_matrix(m: list[list[Fraction]]) -> list[list[Fraction]]:
    """Exact Gauss-Jordan inverse; m must be square and invertible."""
    n = len(m)
    aug = [row[:] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m)]
    for col in range(n):
        pivot = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[pivot] = aug[pivot], aug[col]
        pv = aug[col][col]
        aug[col] = [x / pv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


class RootSystem:
    """Roots, Weyl group actions and the invariant form for one simple type.

    Immutable after construction; build through :func:`build_root_system`,
    which caches one instance per type.
    """

    def __init__(self, lie: LieType):
        self.lie = lie
        self.rank = lie.rank
        self.cartan = _cartan_matrix(lie)
        self.cartan.setflags(write=False)
        self.six_d = _six_d(lie)
        self.weyl_order = _weyl_order(lie)
        self.rho: Weight = (1,) * self.rank

        self.positive_roots = self._generate_positive_roots()
        expected = _num_positive_roots(lie)
        if len(self.positive_roots) != expected:
            raise AssertionError(
                f"{lie}: generated {len(self.positive_roots)} positive roots, expected {expected}"
            )

        heights = [sum(c) for c in self.positive_roots]
        top = max(heights)
        if heights.count(top) != 1:
            raise AssertionError(f"{lie}: highest root is not unique")
        self.highest_root: RootVec = self.positive_roots[heights.index(top)]
        self.theta: Weight = self.root_weight(self.highest_root)
        if not self.is_dominant(self.theta):
            raise AssertionError(f"{lie}: highest root is not dominant")
        for c in self.positive_roots:
            if any(t - x < 0 for t, x in zip(self.highest_root, c)):
                raise AssertionError(f"{lie}: root {c} not below the highest root")

        # weight labels of R and of R u {0}, in a fixed deterministic order
        pos_w = [self.root_weight(c) for c in self.positive_roots]
        self.root_weights: tuple[Weight, ...] = tuple(
            sorted(pos_w + [tuple(-x for x in w) for w in pos_w])
        )
        self.cover_steps: tuple[Weight, ...] = tuple(sorted(self.root_weights + ((0,) * self.rank,)))

        d = [Fraction(x, 6) for x in self.six_d]
        a_frac = [[Fraction(int(self.cartan[i, j])) for j in range(self.rank)] for i in range(self.rank)]
        a_inv = _invert_fraction_matrix(a_frac)
        # form on weight space: (x, y) = x^T diag(d) A^{-1} y, symmetric
        self._form = [[d[i] * a_inv[i][j] for j in range(self.rank)] for i in range(self.rank)]
        for i in range(self.rank):
            for j in range(self.rank):
                if self._form[i][j] != self._form[j][i]:
                    raise AssertionError(f"{lie}: invariant form is not symmetric")
        self._inv_cartan = a_inv
        if self.pairing(self.theta, self.theta) != 2:
            raise AssertionError(f"{lie}: (theta, theta) != 2 under the normalised form")

        self._orbit_size_cache: dict[Weight, int] = {}

    # -- basic coordinate conversions -------------------------------------

    def root_weight(self, coords: RootVec) -> Weight:
        """Weight labels of a root given in simple-root coordinates."""
        return tuple(int(x) for x in self.cartan @ np.asarray(coords, dtype=np.int64))

    def weight_root_coords(self, w: Weight) -> tuple[Fraction, ...]:
        """Simple-root coordinates of a weight (rational in general)."""
        return tuple(sum(self._inv_cartan[i][j] * w[j] for j in range(self.rank)) for i in range(self.rank))

    def is_dominant(self, w: Weight) -> bool:
        return all(x >= 0 for x in w)

    def check_weight(self, w) -> Weight:
        w = tuple(int(x) for x in w)
        if len(w) != self.rank:
            raise ValueError(f"weight {w} has length {len(w)}, expected rank {self.rank}")
        return w

    # -- invariant form ----------------------------------------------------

    def pairing(self, x: Weight, y: Weight) -> Fraction:
        """The W-invariant form with (theta, theta) = 2, exact rational."""
        acc = Fraction(0)
        for i in range(self.rank):
            if x[i]:
                row = self._form[i]
                acc += x[i] * sum(row[j] * y[j] for j in range(self.rank) if y[j])
        return acc

    def pair_root6(self, w: Weight, coords: RootVec) -> int:
        """6*(w, beta) for a root beta in simple-root coordinates; always an integer."""
        return sum(c * sd * x for c, sd, x in zip(coords, self.six_d, w))

    # -- Weyl group actions ------------------------------------------------

    def reflect(self, w: Weight, i: int) -> Weight:
        """Simple reflection s_i acting on a weight."""
        wi = w[i]
        if wi == 0:
            return w
        col = self.cartan[:, i]
        return tuple(w[j] - wi * int(col[j]) for j in range(self.rank))

    def dominant_representative(self, w) -> tuple[Weight, int, int]:
        """Dominant W-orbit representative, with det sign and word length used."""
        w = self.check_weight(w)
        steps = 0
        limit = len(self.positive_roots) + 2
        while True:
            for i, x in enumerate(w):
                if x < 0:
                    w = self.reflect(w, i)
                    steps += 1
                    break
            else:
                return w, (-1) ** steps, steps
            if steps > limit:
                raise AssertionError("dominance normalisation failed to terminate")

    def weyl_orbit(self, w) -> frozenset[Weight]:
        """Full W-orbit of a dominant weight, generated by descending reflections."""
        w = self.check_weight(w)
        if not self.is_dominant(w):
            raise ValueError(f"weyl_orbit requires a dominant weight, got {w}")
        seen = {w}
        frontier = [w]
        while frontier:
            nxt = []
            for v in frontier:
                for i in range(self.rank):
                    if v[i] > 0:
                        u = self.reflect(v, i)
                        if u not in seen:
                            seen.add(u)
                            nxt.append(u)
            frontier = nxt
        return frozenset(seen)

    def orbit_size(self, w: Weight) -> int:
        if w not in self._orbit_size_cache:
            self._orbit_size_cache[w] = len(self.weyl_orbit(w))
        return self._orbit_size_cache[w]

    def dual_weight(self, w) -> Weight:
        """-w_circ applied to a dominant weight; indexes the dual module."""
        w = self.check_weight(w)
        if not self.is_dominant(w):
            raise ValueError(f"dual_weight requires a dominant weight, got {w}")
        return self.dominant_representative(tuple(-x for x in w))[0]

    def _generate_positive_roots(self) -> tuple[RootVec, ...]:
        """Closure of the simple roots under simple reflections."""
        n = self.rank
        simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
        seen: set[RootVec] = set(simple)
        frontier = list(simple)
        while frontier:
            nxt = []
            for c in frontier:
                labels = self.root_weight(c)
                for i in range(n):
                    if labels[i] == 0:
                        continue
                    # s_i in root coordinates only changes the i-th entry
                    c2 = list(c)
                    c2[i] -= labels[i]
                    c2 = tuple(c2)
                    if c2 not in seen:
                        seen.add(c2)
                        nxt.append(c2)
            frontier = nxt
        positive = [c for c in seen if all(x >= 0 for x in c)]
        if 2 * len(positive) != len(seen):
            raise AssertionError(f"{self.lie}: root set is not symmetric")
        positive.sort(key=lambda c: (sum(c), c))
        return tuple(positive)


@functools.lru_cache(maxsize=None)
def build_root_system(lie: LieType) -> RootSystem:
    """Complete root data for a valid simple type; cached per type."""
    return RootSystem(lie)
