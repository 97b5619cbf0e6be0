# cython: language_level=3, boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled kernel: circle counts of every state of the smoothing cube."""

from libc.stdlib cimport free, malloc


def circle_counts_all(int n, int m, joins0, joins1):
    """Return a bytearray b with b[s] = number of circles of state s.

    joins0/joins1: array('i') of length 4*n; entries 4*c..4*c+3 hold the two
    arc-index pairs identified at crossing c under its 0/1 smoothing.
    Arc indices run over 0..m-1.  Circle counts must fit in a byte, which
    holds for any diagram with at most 127 crossings.
    """
    if n < 0 or n > 30:
        raise ValueError("state count out of range")
    cdef const int[:] j0 = joins0
    cdef const int[:] j1 = joins1
    out_py = bytearray(1 << n)
    cdef unsigned char[:] out = out_py
    cdef long num_states = 1 << n
    cdef long s
    cdef int i, c, base, cnt, x, y, rx, ry
    cdef int* parent = <int*> malloc(m * sizeof(int)) if m > 0 else NULL
    if m > 0 and parent == NULL:
        raise MemoryError()
    try:
        for s in range(num_states):
            for i in range(m):
                parent[i] = i
            cnt = m
            for c in range(n):
                base = 4 * c
                if (s >> c) & 1:
                    x = j1[base]; y = j1[base + 1]
                else:
                    x = j0[base]; y = j0[base + 1]
                rx = x
                while parent[rx] != rx:
                    parent[rx] = parent[parent[rx]]
                    rx = parent[rx]
                ry = y
                while parent[ry] != ry:
                    parent[ry] = parent[parent[ry]]
                    ry = parent[ry]
                if rx != ry:
                    parent[rx] = ry
                    cnt -= 1
                if (s >> c) & 1:
                    x = j1[base + 2]; y = j1[base + 3]
                else:
                    x = j0[base + 2]; y = j0[base + 3]
                rx = x
                while parent[rx] != rx:
                    parent[rx] = parent[parent[rx]]
                    rx = parent[rx]
                ry = y
                while parent[ry] != ry:
                    parent[ry] = parent[parent[ry]]
                    ry = parent[ry]
                if rx != ry:
                    parent[rx] = ry
                    cnt -= 1
            out[s] = <unsigned char> cnt
    finally:
        if parent != NULL:
            free(parent)
    return out_py
