"""Pure-Python branch-and-bound kernel for minimum hitting set.

This is the reference implementation of the search; the compiled extension
in _cover_cy.pyx mirrors it exactly (same branching, same tie-breaking),
so both backends return identical results.  Sets are bitmasks over a
universe of small integers; this module accepts arbitrary-width Python
ints, the compiled twin is limited to 64-bit universes.

Branching: take the uncovered set with the fewest available elements and
split on its elements in ascending index order, banning each element in
the later branches.  Lower bound: size of a greedily collected family of
pairwise-disjoint uncovered sets.  Singleton sets force their element.
"""
from __future__ import annotations

import time

STATUS_OPTIMAL = 0
STATUS_CUTOFF = 1
STATUS_TIMEOUT = 2

_TIME_CHECK_MASK = 0xFFF


def greedy_cover(masks: list[int]) -> tuple[int, int]:
    """Max-coverage greedy hitting set; ties broken by smallest element.

    Returns (size, chosen_mask).  masks must be nonempty bitmasks.
    """
    remaining = list(masks)
    chosen = 0
    size = 0
    while remaining:
        counts: dict[int, int] = {}
        for m in remaining:
            x = m
            while x:
                b = x & -x
                e = b.bit_length() - 1
                counts[e] = counts.get(e, 0) + 1
                x ^= b
        best_e = -1
        best_c = 0
        for e in sorted(counts):
            if counts[e] > best_c:
                best_c = counts[e]
                best_e = e
        bit = 1 << best_e
        chosen |= bit
        size += 1
        remaining = [m for m in remaining if not m & bit]
    return size, chosen


class _Search:
    __slots__ = ("best_size", "best_mask", "stop_size", "deadline", "nodes", "timed_out")

    def __init__(self, best_size: int, stop_size: int, deadline: float | None):
        self.best_size = best_size
        self.best_mask = -1
        self.stop_size = stop_size
        self.deadline = deadline
        self.nodes = 0
        self.timed_out = False

    def run(self, masks: list[int], chosen: int, count: int, banned: int) -> bool:
        """DFS; returns True when the search should unwind (stop or timeout)."""
        self.nodes += 1
        if self.deadline is not None and not self.nodes & _TIME_CHECK_MASK:
            if time.monotonic() > self.deadline:
                self.timed_out = True
                return True

        # forced picks: sets with a single available element
        while True:
            picks = 0
            for m in masks:
                avail = m & ~banned
                if avail == 0:
                    return False  # this branch cannot hit m
                if avail & (avail - 1) == 0:
                    picks |= avail
            if not picks:
                break
            chosen |= picks
            count += bin(picks).count("1")
            masks = [m for m in masks if not m & chosen]
            if count >= self.best_size:
                return False
            if not masks:
                break

        if count >= self.best_size:
            return False
        if not masks:
            self.best_size = count
            self.best_mask = chosen
            return count <= self.stop_size

        # lower bound from pairwise-disjoint uncovered sets
        lb = 0
        acc = 0
        for m in masks:
            avail = m & ~banned
            if not avail & acc:
                lb += 1
                acc |= avail
        if count + lb >= self.best_size:
            return False

        # branch on the smallest available set (ties: smallest mask value)
        pick = -1
        pick_pc = 1 << 62
        for m in masks:
            avail = m & ~banned
            pc = bin(avail).count("1")
            if pc < pick_pc or (pc == pick_pc and avail < pick):
                pick = avail
                pick_pc = pc
        local_banned = banned
        x = pick
        while x:
            bit = x & -x
            x ^= bit
            child = [m for m in masks if not m & bit]
            if self.run(child, chosen | bit, count + 1, local_banned):
                return True
            local_banned |= bit
        return False


def solve(
    universe: int,
    masks: list[int],
    cutoff: int | None,
    stop_size: int,
    deadline: float | None,
) -> tuple[int, int, int]:
    """Exact minimum hitting set over bitmask sets.

    masks must be nonempty and reduced (no set a superset of another).
    Returns (status, size, witness_mask).  With a cutoff, sizes above it
    are reported as STATUS_CUTOFF.  A solution of size <= stop_size ends
    the search immediately (callers pass a proven lower bound, so the
    result is still optimal).
    """
    if not masks:
        return STATUS_OPTIMAL, 0, 0
    sentinel = (cutoff + 1) if cutoff is not None else universe + 1
    g_size, g_mask = greedy_cover(masks)
    search = _Search(best_size=sentinel, stop_size=stop_size, deadline=deadline)
    if g_size < sentinel:
        search.best_size = g_size
        search.best_mask = g_mask
        if g_size <= stop_size:
            return STATUS_OPTIMAL, g_size, g_mask
    search.run(masks, 0, 0, 0)
    if search.timed_out:
        return STATUS_TIMEOUT, 0, 0
    if search.best_mask < 0 or (cutoff is not None and search.best_size > cutoff):
        return STATUS_CUTOFF, 0, 0
    return STATUS_OPTIMAL, search.best_size, search.best_mask
