"""Pure-Python kernel: circle counts of every state of the smoothing cube.

Same contract as the compiled kernel in _cubecore.pyx; kept in lockstep.
"""


def circle_counts_all(n, m, joins0, joins1):
    if n < 0 or n > 30:
        raise ValueError("state count out of range")
    out = bytearray(1 << n)
    parent = list(range(m))
    rng_m = range(m)
    for s in range(1 << n):
        for i in rng_m:
            parent[i] = i
        cnt = m
        for c in range(n):
            base = 4 * c
            row = joins1 if (s >> c) & 1 else joins0
            for off in (0, 2):
                rx = row[base + off]
                while parent[rx] != rx:
                    parent[rx] = parent[parent[rx]]
                    rx = parent[rx]
                ry = row[base + off + 1]
                while parent[ry] != ry:
                    parent[ry] = parent[parent[ry]]
                    ry = parent[ry]
                if rx != ry:
                    parent[rx] = ry
                    cnt -= 1
        out[s] = cnt
    return out
