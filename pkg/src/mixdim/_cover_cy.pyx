# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled branch-and-bound kernel for minimum hitting set.

Mirror of mixdim._cover_py (same branching order, same tie-breaking, same
bounds), restricted to universes of at most 64 elements so sets fit in one
machine word.  Both kernels return identical results; this one exists for
speed on the larger exact searches.
"""
from time import monotonic

cdef extern from *:
    """
    #define POPCNT(x) __builtin_popcountll(x)
    #define CTZLL(x) __builtin_ctzll(x)
    """
    int POPCNT(unsigned long long) nogil
    int CTZLL(unsigned long long) nogil

from libc.stdlib cimport free, malloc

STATUS_OPTIMAL = 0
STATUS_CUTOFF = 1
STATUS_TIMEOUT = 2

ctypedef unsigned long long u64

cdef struct State:
    int best_size
    u64 best_mask
    bint have_best
    int stop_size
    bint has_deadline
    double deadline
    unsigned long long nodes
    bint timed_out
    u64 *arena
    int cap


cdef int _greedy(u64 *masks, int nmask, int universe, u64 *out_mask, u64 *scratch):
    """Max-coverage greedy, ties to the smallest element; returns size."""
    cdef int remaining = nmask
    cdef int size = 0
    cdef int e, i, best_e, best_c, c
    cdef u64 bit, chosen = 0
    for i in range(nmask):
        scratch[i] = masks[i]
    while remaining > 0:
        best_e = -1
        best_c = 0
        for e in range(universe):
            bit = (<u64>1) << e
            c = 0
            for i in range(remaining):
                if scratch[i] & bit:
                    c += 1
            if c > best_c:
                best_c = c
                best_e = e
        bit = (<u64>1) << best_e
        chosen |= bit
        size += 1
        i = 0
        while i < remaining:
            if scratch[i] & bit:
                remaining -= 1
                scratch[i] = scratch[remaining]
            else:
                i += 1
    out_mask[0] = chosen
    return size


cdef bint _dfs(State *st, u64 *masks, int nmask, int level, u64 chosen, int cnt, u64 banned):
    """Returns True when the search should unwind (stop hit or timeout)."""
    st.nodes += 1
    if st.has_deadline and (st.nodes & 0xFFF) == 0:
        if monotonic() > st.deadline:
            st.timed_out = True
            return True

    cdef u64 picks, avail, acc, pick, bit, x
    cdef int i, w, lb, pick_pc, pc
    cdef u64 *child
    cdef int nchild

    # forced picks: sets with a single available element
    while True:
        picks = 0
        for i in range(nmask):
            avail = masks[i] & ~banned
            if avail == 0:
                return False
            if avail & (avail - 1) == 0:
                picks |= avail
        if picks == 0:
            break
        chosen |= picks
        cnt += POPCNT(picks)
        w = 0
        for i in range(nmask):
            if not masks[i] & chosen:
                masks[w] = masks[i]
                w += 1
        nmask = w
        if cnt >= st.best_size:
            return False
        if nmask == 0:
            break

    if cnt >= st.best_size:
        return False
    if nmask == 0:
        st.best_size = cnt
        st.best_mask = chosen
        st.have_best = True
        return cnt <= st.stop_size

    # lower bound: greedily collected pairwise-disjoint uncovered sets
    lb = 0
    acc = 0
    for i in range(nmask):
        avail = masks[i] & ~banned
        if not avail & acc:
            lb += 1
            acc |= avail
    if cnt + lb >= st.best_size:
        return False

    # branch on the smallest available set (ties: smallest mask value)
    pick = 0
    pick_pc = 1 << 30
    for i in range(nmask):
        avail = masks[i] & ~banned
        pc = POPCNT(avail)
        if pc < pick_pc or (pc == pick_pc and avail < pick):
            pick = avail
            pick_pc = pc

    child = st.arena + (<size_t>(level + 1)) * st.cap
    x = pick
    while x:
        bit = x & (~x + 1)
        x ^= bit
        nchild = 0
        for i in range(nmask):
            if not masks[i] & bit:
                child[nchild] = masks[i]
                nchild += 1
        if _dfs(st, child, nchild, level + 1, chosen | bit, cnt + 1, banned):
            return True
        banned |= bit
    return False


def solve(universe, masks, cutoff, stop_size, deadline):
    """Exact minimum hitting set over bitmask sets; see _cover_py.solve."""
    cdef int u = universe
    cdef int nmask = len(masks)
    if u > 64:
        raise ValueError("compiled kernel supports universes up to 64 elements")
    if nmask == 0:
        return STATUS_OPTIMAL, 0, 0

    cdef int sentinel = (cutoff + 1) if cutoff is not None else u + 1
    cdef State st
    st.best_size = sentinel
    st.best_mask = 0
    st.have_best = False
    st.stop_size = stop_size
    st.has_deadline = deadline is not None
    st.deadline = deadline if deadline is not None else 0.0
    st.nodes = 0
    st.timed_out = False
    st.cap = nmask

    cdef u64 *buf = <u64 *> malloc(<size_t>(u + 2) * nmask * sizeof(u64))
    cdef u64 *scratch = <u64 *> malloc(<size_t>nmask * sizeof(u64))
    if buf == NULL or scratch == NULL:
        free(buf)
        free(scratch)
        raise MemoryError()
    st.arena = buf

    cdef int i, g_size
    cdef u64 g_mask = 0
    try:
        for i in range(nmask):
            buf[i] = masks[i]
        g_size = _greedy(buf, nmask, u, &g_mask, scratch)
        if g_size < sentinel:
            st.best_size = g_size
            st.best_mask = g_mask
            st.have_best = True
            if g_size <= stop_size:
                return STATUS_OPTIMAL, g_size, int(g_mask)
        _dfs(&st, buf, nmask, 0, 0, 0, 0)
        if st.timed_out:
            return STATUS_TIMEOUT, 0, 0
        if not st.have_best or (cutoff is not None and st.best_size > cutoff):
            return STATUS_CUTOFF, 0, 0
        return STATUS_OPTIMAL, st.best_size, int(st.best_mask)
    finally:
        free(buf)
        free(scratch)
