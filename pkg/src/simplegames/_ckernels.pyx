# cython: language_level=3
"""Compiled kernels; behaviour matches ``_pykernels`` bit for bit.

Masks are 64-bit, so at most 63 players (the ``full`` mask must fit).
"""

from libc.stdlib cimport malloc, free

ctypedef unsigned long long u64


def determining_strings(table, int n):
    cdef Py_ssize_t size = 1 << n
    cdef Py_ssize_t total = 2 * size - 1
    cdef unsigned char *buf = <unsigned char *> malloc(total)
    cdef Py_ssize_t *offset = <Py_ssize_t *> malloc((n + 1) * sizeof(Py_ssize_t))
    cdef Py_ssize_t p, k, off, below_off
    cdef unsigned char a, b
    if buf == NULL or offset == NULL:
        free(buf)
        free(offset)
        raise MemoryError()
    try:
        # level k occupies [offset[k], offset[k] + 2**k)
        off = 0
        for k in range(n + 1):
            offset[k] = off
            off += 1 << k
        below_off = offset[n]
        for p in range(size):
            buf[below_off + p] = 1 if table[p] else 0
        for k in range(n - 1, -1, -1):
            for p in range(1 << k):
                a = buf[offset[k + 1] + p]
                b = buf[offset[k + 1] + (p | (1 << k))]
                buf[offset[k] + p] = a if (a == b and a != 2) else 2
        t0 = []
        t1 = []
        stack = [(0, 0, "")]
        while stack:
            k, p, s = stack.pop()
            a = buf[offset[k] + p]
            if a == 0:
                t0.append(s)
            elif a == 1:
                t1.append(s)
            else:
                stack.append((k + 1, p | (1 << k), s + "1"))
                stack.append((k + 1, p, s + "0"))
        return t0, t1
    finally:
        free(buf)
        free(offset)


def subset_certificates(table, int n):
    cdef Py_ssize_t size = 1 << n
    cdef long long *cert = <long long *> malloc(size * sizeof(long long))
    cdef Py_ssize_t m
    cdef u64 rest, low
    cdef long long c
    if cert == NULL:
        raise MemoryError()
    try:
        for m in range(size):
            cert[m] = -1
            if table[m]:
                cert[m] = m
                continue
            rest = m
            while rest:
                low = rest & (~rest + 1)
                c = cert[m ^ low]
                if c >= 0:
                    cert[m] = c
                    break
                rest ^= low
        return [cert[m] for m in range(size)]
    finally:
        free(cert)


cdef bint _coverable(u64 inter, int r, u64 *sets, Py_ssize_t nsets):
    cdef u64 low
    cdef Py_ssize_t j
    if inter == 0:
        return True
    if r == 0:
        return False
    low = inter & (~inter + 1)
    for j in range(nsets):
        if not (sets[j] & low) and _coverable(inter & sets[j], r - 1, sets, nsets):
            return True
    return False


cdef bint _lex_first(u64 *masks, Py_ssize_t nmasks, Py_ssize_t start, u64 inter,
                     int r, u64 *chosen, int depth):
    cdef Py_ssize_t j
    cdef u64 w, nxt
    if inter == 0:
        return True
    if r == 0:
        return False
    for j in range(start, nmasks):
        w = masks[j]
        nxt = inter & w
        if nxt == inter:
            continue
        if r == 1 and nxt:
            continue
        chosen[depth] = w
        if _lex_first(masks, nmasks, j + 1, nxt, r - 1, chosen, depth + 1):
            return True
    return False


def _weight(m):
    return (bin(m).count("1"), m)


def min_empty_intersection(masks, full):
    cdef u64 cfull = full
    ms = sorted({int(m) & full for m in masks})
    cdef u64 total = cfull
    for m in ms:
        total &= <u64> m
    if not ms or total:
        return 0, ()
    uniq = sorted(ms, key=_weight)
    keep = []
    for m in uniq:
        if not any([q & m == q for q in keep]):
            keep.append(m)
    cdef Py_ssize_t nmin = len(keep), nall = len(ms), i
    cdef u64 *minimal = <u64 *> malloc(nmin * sizeof(u64))
    cdef u64 *allm = <u64 *> malloc(nall * sizeof(u64))
    cdef u64 *chosen = <u64 *> malloc(65 * sizeof(u64))
    cdef int size_k = 1
    if minimal == NULL or allm == NULL or chosen == NULL:
        free(minimal)
        free(allm)
        free(chosen)
        raise MemoryError()
    try:
        for i in range(nmin):
            minimal[i] = keep[i]
        for i in range(nall):
            allm[i] = ms[i]
        while not _coverable(cfull, size_k, minimal, nmin):
            size_k += 1
        if not _lex_first(allm, nall, 0, cfull, size_k, chosen, 0):
            raise AssertionError("minimum family vanished in the lexicographic pass")
        return size_k, tuple([int(chosen[i]) for i in range(size_k)])
    finally:
        free(minimal)
        free(allm)
        free(chosen)
