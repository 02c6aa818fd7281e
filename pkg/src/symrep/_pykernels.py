"""Pure-Python kernels. Same contract as the compiled ``_ckernels`` module."""
from __future__ import annotations

from typing import Sequence

BACKEND = "python"


def _plan(pattern_rows: Sequence[int], order: Sequence[int]):
    pos = {p: i for i, p in enumerate(order)}
    back, anti = [], []
    for i, p in enumerate(order):
        b = [pos[q] for q in range(len(order)) if (pattern_rows[p] >> q) & 1 and pos[q] < i]
        a = [pos[q] for q in range(len(order)) if q != p and not (pattern_rows[p] >> q) & 1 and pos[q] < i]
        back.append(b)
        anti.append(a)
    return back, anti


def copy_masks(
    host_rows: Sequence[int],
    pattern_rows: Sequence[int],
    order: Sequence[int],
    induced: bool = False,
    first_only: bool = False,
) -> list[int]:
    """Vertex-set bitmasks of all injective images of the pattern in the host.

    ``order`` lists pattern vertices so that each one (except component
    starts) has an earlier neighbour.  Returns sorted distinct masks.
    """
    n, k = len(host_rows), len(order)
    if k == 0 or k > n:
        return []
    back, anti = _plan(pattern_rows, order)
    pdeg = [pattern_rows[p].bit_count() for p in order]
    hdeg = [r.bit_count() for r in host_rows]
    allowed = []
    for i in range(k):
        m = 0
        for v in range(n):
            if hdeg[v] >= pdeg[i]:
                m |= 1 << v
        allowed.append(m)
    full = (1 << n) - 1
    mapped = [0] * k
    found: set[int] = set()

    def rec(i: int, used: int) -> bool:
        if i == k:
            found.add(used)
            return first_only
        cand = allowed[i] & ~used
        for j in back[i]:
            cand &= host_rows[mapped[j]]
        if induced:
            for j in anti[i]:
                cand &= full & ~host_rows[mapped[j]]
        while cand:
            low = cand & -cand
            cand ^= low
            mapped[i] = low.bit_length() - 1
            if rec(i + 1, used | low):
                return True
        return False

    rec(0, 0)
    return sorted(found)


def drop_supersets(members: Sequence[int]) -> list[int]:
    """Minimal members only, ordered by (size, mask)."""
    kept: list[int] = []
    for m in sorted(set(members), key=lambda m: (m.bit_count(), m)):
        if not any(s & m == s for s in kept):
            kept.append(m)
    return kept


def greedy_cover(weights: Sequence[int], members: Sequence[int]) -> tuple[int, int]:
    """Greedy max coverage per unit weight, ties to the smaller element."""
    chosen = cost = 0
    left = list(members)
    while left:
        counts = [0] * len(weights)
        for s in left:
            while s:
                low = s & -s
                counts[low.bit_length() - 1] += 1
                s ^= low
        best = -1
        for e, c in enumerate(counts):
            if c and (best < 0 or c * weights[best] > counts[best] * weights[e]):
                best = e
        chosen |= 1 << best
        cost += weights[best]
        left = [s for s in left if not (s >> best) & 1]
    return cost, chosen


def min_weighted_hitting(weights: Sequence[int], members: Sequence[int]) -> tuple[int, int]:
    active = drop_supersets(members)
    ub_cost, ub_mask = greedy_cover(weights, active)
    return branch_and_bound(weights, active, ub_cost, ub_mask)


def branch_and_bound(
    weights: Sequence[int], active: Sequence[int], ub_cost: int, ub_mask: int
) -> tuple[int, int]:
    """Exact minimum-weight hitting set given an incumbent ``(ub_cost, ub_mask)``.

    Branches on the elements of the smallest unhit member (ties: smaller
    mask); branch ``i`` excludes the elements of branches ``0..i-1``.  The
    lower bound packs pairwise disjoint unhit members in list order, each
    costing its cheapest element.
    """
    best = [ub_cost, ub_mask]

    def rec(chosen: int, cost: int, active: list[int]) -> None:
        if not active:
            if cost < best[0]:
                best[0], best[1] = cost, chosen
            return
        used = lb = 0
        for s in active:
            if s & used:
                continue
            used |= s
            lb += min(weights[e] for e in _bits(s))
        if cost + lb >= best[0]:
            return
        pivot = min(active, key=lambda m: (m.bit_count(), m))
        excluded = 0
        for e in _bits(pivot):
            bit = 1 << e
            nxt = []
            for s in active:
                if s & bit:
                    continue
                s &= ~excluded
                if not s:
                    break
                nxt.append(s)
            else:
                rec(chosen | bit, cost + weights[e], nxt)
            excluded |= bit

    rec(0, 0, list(active))
    return best[0], best[1]


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out
