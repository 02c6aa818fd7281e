# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels over 64-bit vertex masks (hosts and element sets up to 64)."""

from libc.stdlib cimport malloc, free

ctypedef unsigned long long u64

cdef extern from *:
    int popcount64 "__builtin_popcountll"(unsigned long long)
    int ctz64 "__builtin_ctzll"(unsigned long long)

BACKEND = "cython"
MAX_BITS = 64


cdef class _CopySearch:
    cdef u64 host[64]
    cdef u64 allowed[64]
    cdef u64 back[64]
    cdef u64 anti[64]
    cdef int mapped[64]
    cdef int k
    cdef bint induced
    cdef bint first_only
    cdef set found

    cdef bint rec(self, int i, u64 used):
        cdef u64 cand, low, b
        cdef int j
        if i == self.k:
            self.found.add(used)
            return self.first_only
        cand = self.allowed[i] & ~used
        b = self.back[i]
        while b:
            j = ctz64(b)
            b &= b - 1
            cand &= self.host[self.mapped[j]]
        if self.induced:
            b = self.anti[i]
            while b:
                j = ctz64(b)
                b &= b - 1
                cand &= ~self.host[self.mapped[j]]
        while cand:
            low = cand & (~cand + 1)
            cand ^= low
            self.mapped[i] = ctz64(low)
            if self.rec(i + 1, used | low):
                return True
        return False


def copy_masks(host_rows, pattern_rows, order, bint induced=False, bint first_only=False):
    cdef int n = len(host_rows)
    cdef int k = len(order)
    cdef int i, j, v, p, q
    cdef _CopySearch s
    if n > 64 or k > 64:
        raise ValueError("compiled kernel supports at most 64 vertices")
    if k == 0 or k > n:
        return []
    s = _CopySearch()
    s.k = k
    s.induced = induced
    s.first_only = first_only
    s.found = set()
    pos = {order[i]: i for i in range(k)}
    for v in range(n):
        s.host[v] = host_rows[v]
    for i in range(k):
        p = order[i]
        pdeg = popcount64(pattern_rows[p])
        s.allowed[i] = 0
        for v in range(n):
            if popcount64(s.host[v]) >= pdeg:
                s.allowed[i] |= (<u64>1) << v
        s.back[i] = 0
        s.anti[i] = 0
        for q in range(k):
            j = pos[q]
            if j >= i:
                continue
            if (pattern_rows[p] >> q) & 1:
                s.back[i] |= (<u64>1) << j
            else:
                s.anti[i] |= (<u64>1) << j
    s.rec(0, 0)
    return sorted(s.found)


cdef class _Hitter:
    cdef u64* buf
    cdef int m
    cdef long long w[64]
    cdef long long best_cost
    cdef u64 best_mask

    cdef long long min_weight(self, u64 s):
        cdef long long lo = -1
        cdef int e
        while s:
            e = ctz64(s)
            s &= s - 1
            if lo < 0 or self.w[e] < lo:
                lo = self.w[e]
        return lo

    cdef void rec(self, int depth, u64 chosen, long long cost, u64* active, int na):
        cdef u64 used = 0, s, pivot, bit, excluded, p
        cdef long long lb = 0
        cdef int t, nn, e, pc, best_pc
        cdef bint ok
        cdef u64* nxt
        if na == 0:
            if cost < self.best_cost:
                self.best_cost = cost
                self.best_mask = chosen
            return
        for t in range(na):
            s = active[t]
            if s & used:
                continue
            used |= s
            lb += self.min_weight(s)
        if cost + lb >= self.best_cost:
            return
        pivot = active[0]
        best_pc = popcount64(pivot)
        for t in range(1, na):
            s = active[t]
            pc = popcount64(s)
            if pc < best_pc or (pc == best_pc and s < pivot):
                pivot = s
                best_pc = pc
        nxt = self.buf + (depth + 1) * self.m
        excluded = 0
        p = pivot
        while p:
            e = ctz64(p)
            p &= p - 1
            bit = (<u64>1) << e
            nn = 0
            ok = True
            for t in range(na):
                s = active[t]
                if s & bit:
                    continue
                s &= ~excluded
                if s == 0:
                    ok = False
                    break
                nxt[nn] = s
                nn += 1
            if ok:
                self.rec(depth + 1, chosen | bit, cost + self.w[e], nxt, nn)
            excluded |= bit


def branch_and_bound(weights, active, ub_cost, ub_mask):
    cdef int m = len(active)
    cdef int i
    cdef _Hitter h
    if len(weights) > 64:
        raise ValueError("compiled kernel supports at most 64 elements")
    if m == 0:
        return 0, 0
    h = _Hitter()
    h.m = m
    for i in range(len(weights)):
        h.w[i] = weights[i]
    h.best_cost = ub_cost
    h.best_mask = ub_mask
    # depth never exceeds the element count
    h.buf = <u64*>malloc((len(weights) + 2) * m * sizeof(u64))
    if h.buf == NULL:
        raise MemoryError()
    try:
        for i in range(m):
            h.buf[i] = active[i]
        h.rec(0, 0, 0, h.buf, m)
    finally:
        free(h.buf)
    return int(h.best_cost), int(h.best_mask)


def drop_supersets(members):
    """Minimal members only, ordered by (size, mask)."""
    ordered = sorted(set(members), key=lambda m: (popcount64(m), m))
    cdef Py_ssize_t m = len(ordered), i, j, nk = 0
    cdef u64* kept = <u64*>malloc(max(m, 1) * sizeof(u64))
    cdef u64 s
    cdef bint dominated
    if kept == NULL:
        raise MemoryError()
    try:
        for i in range(m):
            s = ordered[i]
            dominated = False
            for j in range(nk):
                if kept[j] & s == kept[j]:
                    dominated = True
                    break
            if not dominated:
                kept[nk] = s
                nk += 1
        return [kept[i] for i in range(nk)]
    finally:
        free(kept)


def greedy_cover(weights, members):
    """Greedy max coverage per unit weight, ties to the smaller element."""
    cdef Py_ssize_t m = len(members), i, nleft
    cdef int e, best, ne = len(weights)
    cdef long long counts[64]
    cdef long long w[64]
    cdef long long cost = 0
    cdef u64 chosen = 0, s
    cdef u64* left = <u64*>malloc(max(m, 1) * sizeof(u64))
    if left == NULL:
        raise MemoryError()
    try:
        for i in range(m):
            left[i] = members[i]
        for e in range(ne):
            w[e] = weights[e]
        nleft = m
        while nleft:
            for e in range(ne):
                counts[e] = 0
            for i in range(nleft):
                s = left[i]
                while s:
                    counts[ctz64(s)] += 1
                    s &= s - 1
            best = -1
            for e in range(ne):
                if counts[e] and (best < 0 or counts[e] * w[best] > counts[best] * w[e]):
                    best = e
            chosen |= (<u64>1) << best
            cost += w[best]
            m = 0
            for i in range(nleft):
                if not (left[i] >> best) & 1:
                    left[m] = left[i]
                    m += 1
            nleft = m
        return int(cost), int(chosen)
    finally:
        free(left)


def min_weighted_hitting(weights, members):
    if len(weights) > 64:
        raise ValueError("compiled kernel supports at most 64 elements")
    active = drop_supersets(members)
    ub_cost, ub_mask = greedy_cover(weights, active)
    return branch_and_bound(weights, active, ub_cost, ub_mask)
