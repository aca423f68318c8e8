"""Pure-Python kernels.  ``_ckernels.pyx`` mirrors these exactly.

Tables are sequences of 0/1 of length ``2**n`` indexed by coalition bitmask
(bit i set iff player i is a member).
"""

from __future__ import annotations

from typing import Sequence

_LOSE, _WIN, _MIXED = 0, 1, 2


def determining_strings(table: Sequence[int], n: int) -> tuple[list[str], list[str]]:
    """Minimal losing/winning determining strings of a game on n players.

    A string of length k fixes players 0..k-1; it is determining when every
    completion gets the same verdict.  Returns ``(t0, t1)`` in lexicographic
    order.  Only the shortest determining prefix along each branch is kept.
    """
    levels = [list(table)]
    for k in range(n - 1, -1, -1):
        below = levels[-1]
        bit = 1 << k
        cur = [0] * (1 << k)
        for p in range(1 << k):
            a, b = below[p], below[p | bit]
            cur[p] = a if a == b and a != _MIXED else _MIXED
        levels.append(cur)
    levels.reverse()  # levels[k][p] = status of the length-k prefix p

    t0: list[str] = []
    t1: list[str] = []
    stack = [(0, 0, "")]
    while stack:
        k, p, s = stack.pop()
        st = levels[k][p]
        if st == _LOSE:
            t0.append(s)
        elif st == _WIN:
            t1.append(s)
        else:
            # push "1" first so "0" is expanded first: preorder = lex order
            stack.append((k + 1, p | (1 << k), s + "1"))
            stack.append((k + 1, p, s + "0"))
    return t0, t1


def subset_certificates(table: Sequence[int], n: int) -> list[int]:
    """For each mask m, some winning subset of m, or -1 if none exists."""
    size = 1 << n
    cert = [-1] * size
    for m in range(size):
        if table[m]:
            cert[m] = m
            continue
        rest = m
        while rest:
            low = rest & -rest
            c = cert[m ^ low]
            if c >= 0:
                cert[m] = c
                break
            rest ^= low
    return cert


def _popcount(x: int) -> int:
    return bin(x).count("1")


def _minimal_sets(masks: list[int]) -> list[int]:
    uniq = sorted(set(masks), key=lambda m: (_popcount(m), m))
    keep: list[int] = []
    for m in uniq:
        if not any(k & m == k for k in keep):
            keep.append(m)
    return keep


def _coverable(inter: int, r: int, sets: list[int]) -> bool:
    # branch on the lowest surviving player: some chosen set must exclude it
    if inter == 0:
        return True
    if r == 0:
        return False
    low = inter & -inter
    for w in sets:
        if not w & low and _coverable(inter & w, r - 1, sets):
            return True
    return False


def _lex_first(masks: list[int], start: int, inter: int, r: int, chosen: list[int]) -> bool:
    if inter == 0:
        return True
    if r == 0:
        return False
    for j in range(start, len(masks)):
        w = masks[j]
        nxt = inter & w
        if nxt == inter:
            continue
        if r == 1 and nxt:
            continue
        chosen.append(w)
        if _lex_first(masks, j + 1, nxt, r - 1, chosen):
            return True
        chosen.pop()
    return False


def min_empty_intersection(masks: Sequence[int], full: int) -> tuple[int, tuple[int, ...]]:
    """Smallest family of ``masks`` whose intersection within ``full`` is empty.

    Returns ``(k, witness)`` with the witness the lexicographically least
    ascending tuple among all families of size k, or ``(0, ())`` when the
    intersection of all masks is nonempty.
    """
    ms = sorted({m & full for m in masks})
    total = full
    for m in ms:
        total &= m
    if not ms or total:
        return 0, ()
    minimal = _minimal_sets(ms)
    k = 1
    while not _coverable(full, k, minimal):
        k += 1
    chosen: list[int] = []
    if not _lex_first(ms, 0, full, k, chosen):  # pragma: no cover - k is attainable
        raise AssertionError("minimum family vanished in the lexicographic pass")
    return k, tuple(chosen)
