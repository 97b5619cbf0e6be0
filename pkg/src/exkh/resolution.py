"""Smoothing states and their resolutions into circles.

A state assigns 0 or 1 to every crossing.  For the tuple X[a,b,c,d] the
0-smoothing reconnects the four strand ends into the arcs a-b and c-d,
the 1-smoothing into a-d and b-c.  Resolving every crossing turns the
diagram into a disjoint union of circles; for the all-zero state each
crossing additionally leaves a chord joining its two smoothing arcs,
whose cyclic positions feed the chord-interleavement graph.
"""

from __future__ import annotations

from array import array
from dataclasses import dataclass
from typing import Iterator, Mapping

from .cube import circle_counts_all
from .diagram import LinkDiagram
from .exceptions import CubeTooLarge

DEFAULT_CUBE_CAP = 20

# join partners inside one crossing, by smoothing label
_JOIN0 = {0: 1, 1: 0, 2: 3, 3: 2}
_JOIN1 = {0: 3, 3: 0, 1: 2, 2: 1}
# arc id of a position pair, by smoothing label: arc 0 contains position 0
_ARC0 = {0: 0, 1: 0, 2: 1, 3: 1}
_ARC1 = {0: 0, 3: 0, 1: 1, 2: 1}


@dataclass(frozen=True)
class State:
    """A vertex of the smoothing cube: one bit per crossing."""

    bits: tuple[int, ...]

    def __post_init__(self):
        if any(b not in (0, 1) for b in self.bits):
            raise ValueError("state bits must be 0 or 1")

    @classmethod
    def from_mask(cls, mask: int, n: int) -> "State":
        return cls(tuple((mask >> i) & 1 for i in range(n)))

    @classmethod
    def zero(cls, n: int) -> "State":
        return cls((0,) * n)

    @property
    def mask(self) -> int:
        m = 0
        for i, b in enumerate(self.bits):
            m |= b << i
        return m

    @property
    def weight(self) -> int:
        return sum(self.bits)

    def __len__(self):
        return len(self.bits)


@dataclass(frozen=True)
class Resolution:
    """The circles of one resolved state.

    circles: per circle, the cyclic sequence of half-arc markers
    (edge label, occurrence index).  Crossing-free unknot components
    appear as trailing circles with empty marker sequences.

    chord_endpoints: for the all-zero state only, crossing -> the pair of
    (circle id, cyclic position) locations of its two smoothing arcs; the
    position counts half-arc slots around the circle, so the arc sits just
    before the marker at that index.
    """

    state: State
    circles: tuple[tuple[tuple[int, int], ...], ...]
    chord_endpoints: dict[int, tuple[tuple[int, int], tuple[int, int]]] | None
    _label_to_circle: dict[int, int]

    @property
    def circle_count(self) -> int:
        return len(self.circles)

    def circle_of(self, edge: int) -> int:
        return self._label_to_circle[edge]

    def to_json_dict(self) -> dict:
        out = {
            "state": list(self.state.bits),
            "circles": [[list(m) for m in c] for c in self.circles],
        }
        if self.chord_endpoints is not None:
            out["chords"] = {
                str(k): [list(p) for p in v]
                for k, v in sorted(self.chord_endpoints.items())
            }
        return out


def resolve(d: LinkDiagram, v: State) -> Resolution:
    """Resolve state v by walking the reconnected strand ends.

    Every strand end (crossing, position) has exactly two neighbours:
    the other end of its edge, and its smoothing-arc partner at the
    crossing; following them alternately traces out each circle once.
    """
    n = d.n
    if len(v) != n:
        raise ValueError(f"state has {len(v)} bits for a {n}-crossing diagram")
    crossings = d.pd.crossings
    apps = d.pd.appearances()
    occurrence = {}
    for e, pair in apps.items():
        occurrence[pair[0]] = (e, 0)
        occurrence[pair[1]] = (e, 1)
    seg_partner = {}
    for e, (p1, p2) in apps.items():
        seg_partner[p1] = p2
        seg_partner[p2] = p1

    def join_partner(app):
        ci, pos = app
        table = _JOIN1 if v.bits[ci] else _JOIN0
        return (ci, table[pos])

    def arc_of(app):
        ci, pos = app
        table = _ARC1 if v.bits[ci] else _ARC0
        return (ci, table[pos])

    visited = set()
    raw_circles = []  # (markers, joins) in walk order
    for ci in range(n):
        for pos in range(4):
            start = (ci, pos)
            if start in visited:
                continue
            markers = []
            joins = []
            cur = start
            while True:
                visited.add(cur)
                nxt = join_partner(cur)
                visited.add(nxt)
                joins.append(arc_of(cur))
                markers.append(occurrence[nxt])
                cur = seg_partner[nxt]
                markers.append(occurrence[cur])
                if cur == start:
                    break
            raw_circles.append((tuple(markers), tuple(joins)))

    raw_circles.sort(key=lambda mc: min(mc[0]))
    circles = [m for m, _ in raw_circles]
    label_to_circle = {}
    for cid, (markers, _) in enumerate(raw_circles):
        for e, _occ in markers:
            label_to_circle[e] = cid
    circles.extend(() for _ in range(d.unknotted_components))

    chords = None
    if v.weight == 0:
        locate = {}
        for cid, (_, joins) in enumerate(raw_circles):
            for t, arc in enumerate(joins):
                locate[arc] = (cid, 2 * t)
        chords = {
            ci: (locate[(ci, 0)], locate[(ci, 1)]) for ci in range(n)
        }

    return Resolution(v, tuple(circles), chords, label_to_circle)


def _join_arrays(d: LinkDiagram) -> tuple[int, array, array]:
    """Arc-index join pairs feeding the all-states kernel."""
    labels = d.pd.edges
    index = {e: i for i, e in enumerate(labels)}
    j0 = array("i")
    j1 = array("i")
    for a, b, c, e in d.pd.crossings:
        j0.extend((index[a], index[b], index[c], index[e]))
        j1.extend((index[a], index[e], index[b], index[c]))
    return len(labels), j0, j1


class CircleCountMap(Mapping):
    """Read-only map State -> circle count, backed by one byte per state."""

    def __init__(self, n: int, counts: bytearray, extra: int):
        self._n = n
        self._counts = counts
        self._extra = extra

    @property
    def n(self) -> int:
        return self._n

    def by_mask(self, mask: int) -> int:
        return self._counts[mask] + self._extra

    def __getitem__(self, v: State) -> int:
        if len(v) != self._n:
            raise KeyError(v)
        return self.by_mask(v.mask)

    def __iter__(self) -> Iterator[State]:
        for mask in range(1 << self._n):
            yield State.from_mask(mask, self._n)

    def __len__(self) -> int:
        return 1 << self._n


def circle_count_all_states(
    d: LinkDiagram, cube_cap: int = DEFAULT_CUBE_CAP
) -> CircleCountMap:
    """Circle counts of every state, via the selected cube backend."""
    if d.n > cube_cap:
        raise CubeTooLarge(d.n, cube_cap)
    m, j0, j1 = _join_arrays(d)
    counts = circle_counts_all(d.n, m, j0, j1)
    return CircleCountMap(d.n, counts, d.unknotted_components)


def looks_nonplanar(d: LinkDiagram) -> bool:
    """Necessary-condition planarity screen.

    Two checks that hold for every planar code: re-smoothing one crossing
    of the all-zero or all-one state changes the circle count by exactly
    one, and the all-zero and all-one counts satisfy the planar bound
    ``s0 + s1 <= crossings + 2`` per connected piece of the shadow.
    Failing either certifies a virtual code; passing proves nothing.
    """
    if d.n == 0:
        return False
    s0 = resolve(d, State.zero(d.n)).circle_count
    s1 = resolve(d, State((1,) * d.n)).circle_count
    for k in range(d.n):
        near_zero = State(tuple(1 if i == k else 0 for i in range(d.n)))
        near_one = State(tuple(0 if i == k else 1 for i in range(d.n)))
        if abs(resolve(d, near_zero).circle_count - s0) != 1:
            return True
        if abs(resolve(d, near_one).circle_count - s1) != 1:
            return True
    parent = list(range(d.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    first_seen: dict[int, int] = {}
    for ci, t in enumerate(d.pd.crossings):
        for e in t:
            if e in first_seen:
                ra, rb = find(first_seen[e]), find(ci)
                if ra != rb:
                    parent[ra] = rb
            else:
                first_seen[e] = ci
    pieces = len({find(ci) for ci in range(d.n)})
    u = d.unknotted_components
    return (s0 - u) + (s1 - u) > d.n + 2 * pieces
