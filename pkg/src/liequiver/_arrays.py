"""Bulk operations on weight supports stored as integer numpy arrays.

A support is a pair (weights, mults): an (N, rank) int64 array of unique
rows plus an (N,) int64 multiplicity vector.  Everything here is exact
integer arithmetic; rows are kept unique and lexicographically sorted so
results are deterministic.
"""

from __future__ import annotations

import numpy as np

from .rootsys import RootSystem


def empty_support(rank: int) -> tuple[np.ndarray, np.ndarray]:
    return np.zeros((0, rank), dtype=np.int64), np.zeros(0, dtype=np.int64)


def aggregate(weights: np.ndarray, mults: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Sum multiplicities of equal rows and drop zero entries."""
    if len(weights) == 0:
        return empty_support(weights.shape[1] if weights.ndim == 2 else 0)
    uniq, inverse = np.unique(weights, axis=0, return_inverse=True)
    out = np.zeros(len(uniq), dtype=np.int64)
    np.add.at(out, inverse.reshape(-1), mults)
    keep = out != 0
    return np.ascontiguousarray(uniq[keep]), out[keep]


def add(a, b):
    """Sum of two supports."""
    (wa, ma), (wb, mb) = a, b
    return aggregate(np.concatenate([wa, wb]), np.concatenate([ma, mb]))


def scale(a, c: int):
    wa, ma = a
    if c == 0:
        return empty_support(wa.shape[1])
    return wa, ma * np.int64(c)


def convolve(a, b, chunk_rows: int = 4_000_000):
    """Pointwise product of characters: all pairwise sums of weights."""
    (wa, ma), (wb, mb) = a, b
    if len(wa) == 0 or len(wb) == 0:
        return empty_support(wa.shape[1])
    if len(wa) < len(wb):
        (wa, ma), (wb, mb) = (wb, mb), (wa, ma)
    step = max(1, chunk_rows // max(1, len(wa)))
    acc_w, acc_m = [], []
    pending = 0
    for lo in range(0, len(wb), step):
        blk_w = wb[lo : lo + step]
        blk_m = mb[lo : lo + step]
        shifted = (wa[None, :, :] + blk_w[:, None, :]).reshape(-1, wa.shape[1])
        prod = (ma[None, :] * blk_m[:, None]).reshape(-1)
        acc_w.append(shifted)
        acc_m.append(prod)
        pending += len(shifted)
        if pending > 2 * chunk_rows:
            w, m = aggregate(np.concatenate(acc_w), np.concatenate(acc_m))
            acc_w, acc_m = [w], [m]
            pending = len(w)
    return aggregate(np.concatenate(acc_w), np.concatenate(acc_m))


def dilate(a, k: int):
    """Scale every support weight by k (the degree-k Adams operation)."""
    wa, ma = a
    return wa * np.int64(k), ma.copy()


def orbit_expand(rs: RootSystem, dominant_items) -> tuple[np.ndarray, np.ndarray]:
    """Full Weyl-symmetric support from dominant multiplicities.

    Distinct dominant weights have disjoint orbits and the multiplicity is
    constant along each orbit, so a single breadth-first sweep over the
    union works.
    """
    items = [(tuple(w), int(m)) for w, m in dominant_items if m != 0]
    if not items:
        return empty_support(rs.rank)
    seeds = np.array([w for w, _ in items], dtype=np.int64)
    seed_m = np.array([m for _, m in items], dtype=np.int64)
    cartan = np.asarray(rs.cartan, dtype=np.int64)
    seen = {row.tobytes() for row in np.ascontiguousarray(seeds)}
    out_w, out_m = [seeds], [seed_m]
    level_w, level_m = seeds, seed_m
    while len(level_w):
        cand_w, cand_m = [], []
        for i in range(rs.rank):
            mask = level_w[:, i] > 0
            if not mask.any():
                continue
            sub = level_w[mask]
            cand_w.append(sub - sub[:, i : i + 1] * cartan[:, i][None, :])
            cand_m.append(level_m[mask])
        if not cand_w:
            break
        cw = np.ascontiguousarray(np.concatenate(cand_w))
        cm = np.concatenate(cand_m)
        cw, cm = aggregate_first(cw, cm)
        fresh = np.fromiter(
            (row.tobytes() not in seen for row in cw), dtype=bool, count=len(cw)
        )
        cw, cm = cw[fresh], cm[fresh]
        for row in cw:
            seen.add(row.tobytes())
        out_w.append(cw)
        out_m.append(cm)
        level_w, level_m = cw, cm
    w = np.concatenate(out_w)
    m = np.concatenate(out_m)
    order = np.lexsort(w.T[::-1])
    return np.ascontiguousarray(w[order]), m[order]


def aggregate_first(weights: np.ndarray, mults: np.ndarray):
    """Deduplicate rows keeping one multiplicity per row (rows must agree)."""
    uniq, idx = np.unique(weights, axis=0, return_index=True)
    return np.ascontiguousarray(uniq), mults[idx]


def dominantize_signed(rs: RootSystem, rows: np.ndarray):
    """Normalise each row into the dominant chamber, tracking det signs.

    Returns (rows, signs, regular): rows moved to their dominant
    representatives, the (-1)^length sign per row, and a mask of rows whose
    representative has no zero coordinate (i.e. not fixed by any
    reflection).
    """
    rows = rows.copy()
    signs = np.ones(len(rows), dtype=np.int64)
    cartan = np.asarray(rs.cartan, dtype=np.int64)
    limit = len(rs.positive_roots) + 2
    for _ in range(limit):
        neg = rows < 0
        active = neg.any(axis=1)
        if not active.any():
            break
        idx = np.flatnonzero(active)
        first = neg[idx].argmax(axis=1)
        sub = rows[idx]
        coef = sub[np.arange(len(idx)), first]
        rows[idx] = sub - coef[:, None] * cartan.T[first]
        signs[idx] = -signs[idx]
    else:
        raise AssertionError("dominance normalisation failed to terminate")
    regular = ~(rows == 0).any(axis=1)
    return rows, signs, regular
