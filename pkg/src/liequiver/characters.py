"""Exact character arithmetic for finite-dimensional modules.

Characters of genuine modules are stored orbit-compressed (dominant
weights with multiplicities); full Weyl-symmetric supports are expanded
on demand as numpy integer arrays.  Virtual characters arising inside
the symmetric-power recursion keep full support and signed
multiplicities.  The central entry point is :class:`LieContext`, which
memoises irreducible characters, dimensions and tensor decompositions
for one simple type.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from . import _arrays
from .rootsys import LieType, RootSystem, Weight, build_root_system


class Character:
    """Character of a genuine finite-dimensional module, orbit-compressed."""

    __slots__ = ("lie", "dominant", "_full", "_dim")

    def __init__(self, lie: LieType, dominant: dict[Weight, int]):
        rs = build_root_system(lie)
        for w, m in dominant.items():
            rs.check_weight(w)
            if not rs.is_dominant(w):
                raise ValueError(f"character support contains non-dominant weight {w}")
            if m <= 0:
                raise ValueError(f"character multiplicity at {w} must be positive, got {m}")
        self.lie = lie
        self.dominant = dict(dominant)
        self._full = None
        self._dim = None

    @classmethod
    def trivial(cls, lie: LieType) -> "Character":
        return cls(lie, {(0,) * lie.rank: 1})

    def full_support(self) -> tuple[np.ndarray, np.ndarray]:
        """Weights and multiplicities over the whole Weyl-symmetric support."""
        if self._full is None:
            rs = build_root_system(self.lie)
            self._full = _arrays.orbit_expand(rs, self.dominant.items())
        return self._full

    def dim(self) -> int:
        if self._dim is None:
            rs = build_root_system(self.lie)
            self._dim = sum(m * rs.orbit_size(w) for w, m in self.dominant.items())
        return self._dim

    def items_sorted(self):
        return sorted(self.dominant.items())

    def __eq__(self, other):
        return (
            isinstance(other, Character)
            and self.lie == other.lie
            and self.dominant == other.dominant
        )

    def __repr__(self):
        body = ", ".join(f"{w}: {m}" for w, m in self.items_sorted())
        return f"Character({self.lie}, {{{body}}})"


class SignedCharacter:
    """Virtual character on full support; closed under +, scaling and product."""

    __slots__ = ("lie", "weights", "mults")

    def __init__(self, lie: LieType, weights: np.ndarray, mults: np.ndarray):
        self.lie = lie
        self.weights = weights
        self.mults = mults

    @classmethod
    def zero(cls, lie: LieType) -> "SignedCharacter":
        return cls(lie, *_arrays.empty_support(lie.rank))

    @classmethod
    def trivial(cls, lie: LieType) -> "SignedCharacter":
        return cls(
            lie,
            np.zeros((1, lie.rank), dtype=np.int64),
            np.ones(1, dtype=np.int64),
        )

    @classmethod
    def from_character(cls, x: Character) -> "SignedCharacter":
        w, m = x.full_support()
        return cls(x.lie, w.copy(), m.copy())

    def support(self):
        return self.weights, self.mults

    def signed_dim(self) -> int:
        return int(self.mults.sum())

    def __add__(self, other: "SignedCharacter") -> "SignedCharacter":
        self._check(other)
        return SignedCharacter(self.lie, *_arrays.add(self.support(), other.support()))

    def scale(self, c: int) -> "SignedCharacter":
        return SignedCharacter(self.lie, *_arrays.scale(self.support(), c))

    def __mul__(self, other: "SignedCharacter") -> "SignedCharacter":
        self._check(other)
        return SignedCharacter(self.lie, *_arrays.convolve(self.support(), other.support()))

    def adams(self, k: int) -> "SignedCharacter":
        """Scale every support weight by k, keeping multiplicities."""
        if k < 1:
            raise ValueError(f"Adams operation needs k >= 1, got {k}")
        return SignedCharacter(self.lie, *_arrays.dilate(self.support(), k))

    def divide_exact(self, c: int) -> "SignedCharacter":
        if (self.mults % c).any():
            raise AssertionError(f"multiplicities not divisible by {c}")
        return SignedCharacter(self.lie, self.weights, self.mults // c)

    def to_character(self) -> Character:
        """Orbit-compress; requires genuinely nonnegative multiplicities."""
        if (self.mults < 0).any():
            bad = self.weights[self.mults < 0][0]
            raise AssertionError(f"negative multiplicity at weight {tuple(int(x) for x in bad)}")
        dom = (self.weights >= 0).all(axis=1)
        entries = {
            tuple(int(x) for x in w): int(m)
            for w, m in zip(self.weights[dom], self.mults[dom])
            if m > 0
        }
        out = Character(self.lie, entries)
        out._full = (self.weights, self.mults)
        out._dim = self.signed_dim()
        return out

    def _check(self, other):
        if self.lie != other.lie:
            raise ValueError(f"type mismatch: {self.lie} vs {other.lie}")


class LieContext:
    """Shared computation context for one simple type.

    Memoises irreducible characters, Weyl dimensions and tensor
    decompositions.  All values are immutable once computed, so a context
    can be shared freely; cache insertion is idempotent.
    """

    def __init__(self, family, rank: int | None = None, max_degree: int = 6):
        if isinstance(family, LieType):
            lie = family
        elif rank is None:
            lie = LieType.parse(family)
        else:
            lie = LieType(family, rank)
        self.lie = lie
        self.rs: RootSystem = build_root_system(lie)
        self.max_degree = max_degree
        self._irr: dict[Weight, Character] = {}
        self._weyl_dim: dict[Weight, int] = {}
        self._adjoint: Character | None = None
        self._named_decomp: dict[tuple, dict[Weight, int]] = {}
        self.graded = None  # set lazily by plethysm.GradedAdjointTable

    # -- dimensions ---------------------------------------------------------

    def weyl_dim(self, lam) -> int:
        """dim V(lam) by the Weyl dimension formula, exact."""
        lam = self.rs.check_weight(lam)
        if not self.rs.is_dominant(lam):
            raise ValueError(f"weyl_dim requires a dominant weight, got {lam}")
        if lam not in self._weyl_dim:
            rho_shift = tuple(x + 1 for x in lam)
            num = Fraction(1)
            for alpha in self.rs.positive_roots:
                num *= Fraction(
                    self.rs.pair_root6(rho_shift, alpha), self.rs.pair_root6(self.rs.rho, alpha)
                )
            if num.denominator != 1:
                raise AssertionError(f"Weyl dimension of {lam} is not an integer: {num}")
            self._weyl_dim[lam] = int(num)
        return self._weyl_dim[lam]

    # -- irreducible characters ----------------------------------------------

    def dominant_weights_below(self, lam: Weight) -> list[Weight]:
        """All dominant mu with lam - mu a nonnegative root sum.

        Consecutive dominant weights in the dominance order differ by a
        positive root, so a sweep subtracting positive roots is exhaustive.
        """
        pos_w = [self.rs.root_weight(c) for c in self.rs.positive_roots]
        seen = {lam}
        frontier = [lam]
        while frontier:
            nxt = []
            for w in frontier:
                for beta in pos_w:
                    u = tuple(a - b for a, b in zip(w, beta))
                    if u not in seen and all(x >= 0 for x in u):
                        seen.add(u)
                        nxt.append(u)
            frontier = nxt
        return sorted(seen)

    def irreducible(self, lam) -> Character:
        """Character of V(lam) via the Freudenthal multiplicity recursion."""
        lam = self.rs.check_weight(lam)
        if not self.rs.is_dominant(lam):
            raise ValueError(f"irreducible character requires a dominant weight, got {lam}")
        if lam in self._irr:
            return self._irr[lam]

        rs = self.rs
        rho = rs.rho
        lam_rho = tuple(x + 1 for x in lam)
        norm_top = rs.pairing(lam_rho, lam_rho)
        candidates = self.dominant_weights_below(lam)
        # descending depth: weights closer to lam first
        def depth(mu):
            return sum(rs.weight_root_coords(tuple(a - b for a, b in zip(lam, mu))))

        order = sorted(candidates, key=lambda mu: (depth(mu), mu))
        mults: dict[Weight, int] = {lam: 1}
        pos = rs.positive_roots
        pos_w = [rs.root_weight(c) for c in pos]
        for mu in order:
            if mu == lam:
                continue
            acc6 = 0  # six times the Freudenthal right-hand sum
            for alpha, alpha_w in zip(pos, pos_w):
                k = 1
                while True:
                    nu = tuple(a + k * b for a, b in zip(mu, alpha_w))
                    m = mults.get(rs.dominant_representative(nu)[0], 0)
                    if m == 0:
                        # root strings through a weight are contiguous, so
                        # the first zero ends the string
                        break
                    acc6 += 2 * m * rs.pair_root6(nu, alpha)
                    k += 1
            mu_rho = tuple(x + 1 for x in mu)
            denom = norm_top - rs.pairing(mu_rho, mu_rho)
            val = Fraction(acc6, 6) / denom
            if val.denominator != 1:
                raise AssertionError(f"Freudenthal gave a non-integer multiplicity at {mu}")
            m = int(val)
            if m < 0:
                raise AssertionError(f"Freudenthal gave a negative multiplicity at {mu}")
            if m:
                mults[mu] = m
        ch = Character(self.lie, mults)
        if ch.dim() != self.weyl_dim(lam):
            raise AssertionError(
                f"character of V({lam}): dimension {ch.dim()} != Weyl value {self.weyl_dim(lam)}"
            )
        self._irr[lam] = ch
        return ch

    def adjoint(self) -> Character:
        """Adjoint character, built from the root system itself."""
        if self._adjoint is None:
            entries: dict[Weight, int] = {(0,) * self.rs.rank: self.rs.rank}
            for coords in self.rs.positive_roots:
                rep = self.rs.dominant_representative(self.rs.root_weight(coords))[0]
                entries[rep] = entries.get(rep, 0) + 0  # reps collected below
            reps = {
                self.rs.dominant_representative(self.rs.root_weight(c))[0]
                for c in self.rs.positive_roots
            }
            for rep in reps:
                entries[rep] = 1
            self._adjoint = Character(self.lie, entries)
            if self._adjoint.dim() != 2 * len(self.rs.positive_roots) + self.rs.rank:
                raise AssertionError("adjoint character has the wrong dimension")
        return self._adjoint

    # -- tensor decomposition -------------------------------------------------

    def tensor_decompose(self, x: Character, lam) -> dict[Weight, int]:
        """Multiplicities of irreducibles in X (x) V(lam), by Klimyk's rule.

        Iterates over the full support of X, so callers should pass the
        smaller factor as X.
        """
        lam = self.rs.check_weight(lam)
        if x.lie != self.lie:
            raise ValueError(f"type mismatch: character over {x.lie}, weight over {self.lie}")
        if not self.rs.is_dominant(lam):
            raise ValueError(f"tensor_decompose requires a dominant weight, got {lam}")
        w, m = x.full_support()
        return self._klimyk(w, m, lam, int(m.sum()))

    def _klimyk(self, weights: np.ndarray, mults: np.ndarray, lam: Weight, dim_x: int):
        rho_shift = np.array([x + 1 for x in lam], dtype=np.int64)
        rows = weights + rho_shift[None, :]
        rows, signs, regular = _arrays.dominantize_signed(self.rs, rows)
        rows = rows[regular] - 1  # subtract rho
        contrib = signs[regular] * mults[regular]
        out_w, out_m = _arrays.aggregate(rows, contrib)
        if (out_m < 0).any():
            bad = out_w[out_m < 0][0]
            raise AssertionError(
                f"Klimyk produced a negative multiplicity at {tuple(int(v) for v in bad)}"
            )
        result = {tuple(int(v) for v in w): int(c) for w, c in zip(out_w, out_m)}
        total = sum(c * self.weyl_dim(w) for w, c in result.items())
        expected = dim_x * self.weyl_dim(lam)
        if total != expected:
            raise AssertionError(
                f"tensor decomposition loses dimension: {total} != {expected}"
            )
        return result

    def hom_dim(self, mu, x: Character, lam) -> int:
        """dim Hom(V(mu), X (x) V(lam)): one multiplicity of the decomposition."""
        mu = self.rs.check_weight(mu)
        return self.tensor_decompose(x, lam).get(mu, 0)

    def adjoint_decomposition(self, lam) -> dict[Weight, int]:
        """Cached decomposition of g (x) V(lam); the Ext-quiver workhorse."""
        lam = self.rs.check_weight(lam)
        key = ("adj", lam)
        if key not in self._named_decomp:
            self._named_decomp[key] = self.tensor_decompose(self.adjoint(), lam)
        return self._named_decomp[key]

    # -- independent oracle -----------------------------------------------------

    def brute_force_tensor_oracle(self, lam, mu) -> dict[Weight, int]:
        """Decompose V(lam) (x) V(mu) by full character product and peeling.

        Deliberately avoids the Klimyk path so the two can be compared in
        tests; restricted to rank <= 3 by policy.
        """
        if self.rs.rank > 3:
            raise ValueError("brute-force tensor oracle is restricted to rank <= 3")
        lam = self.rs.check_weight(lam)
        mu = self.rs.check_weight(mu)
        prod = _arrays.convolve(
            self.irreducible(lam).full_support(), self.irreducible(mu).full_support()
        )
        remaining = {tuple(int(x) for x in w): int(c) for w, c in zip(*prod)}
        out: dict[Weight, int] = {}
        while remaining:
            top = max(remaining, key=lambda w: (sum(self.rs.weight_root_coords(w)), w))
            if not self.rs.is_dominant(top):
                raise AssertionError(f"peeling found a non-dominant maximal weight {top}")
            c = remaining[top]
            if c <= 0:
                raise AssertionError(f"peeling found a non-positive coefficient at {top}")
            out[top] = c
            for w, m in zip(*self.irreducible(top).full_support()):
                key = tuple(int(x) for x in w)
                left = remaining.get(key, 0) - c * int(m)
                if left:
                    remaining[key] = left
                else:
                    remaining.pop(key, None)
        return out
