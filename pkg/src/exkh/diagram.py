"""PD codes and oriented link diagrams.

A planar-diagram (PD) code lists one 4-tuple of edge labels per crossing,
read counterclockwise starting from the incoming under-strand edge.  Edge
labels are positive integers; along each link component they form one
consecutive cyclic run (standard PD numbering), which is what orients the
diagram.  Crossing-free unknot components cannot be expressed by tuples and
are carried as a separate count.

Example: the standard left-handed trefoil is
``X[1,4,2,5];X[3,6,4,1];X[5,2,6,3]``.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field

from .exceptions import (
    BadEdgeMultiplicity,
    EmptyInput,
    InconsistentOrientation,
    MalformedSyntax,
)

_TOKEN_RE = re.compile(r"X\[(-?\d+),(-?\d+),(-?\d+),(-?\d+)\]")
_PREFIX_RE = re.compile(r"O:(\d+)")


@dataclass(frozen=True)
class PDCode:
    """A validated PD code: ordered crossings plus crossing-free circles."""

    crossings: tuple[tuple[int, int, int, int], ...]
    unknotted_components: int = 0

    def __post_init__(self):
        if self.n == 0 and self.unknotted_components == 0:
            raise EmptyInput("PD code describes no crossings and no circles")
        counts: dict[int, int] = {}
        for t in self.crossings:
            for e in t:
                if e <= 0:
                    raise MalformedSyntax(f"edge label {e} is not a positive integer")
                counts[e] = counts.get(e, 0) + 1
        bad = sorted(e for e, c in counts.items() if c != 2)
        if bad:
            raise BadEdgeMultiplicity(
                f"edge labels with multiplicity != 2: {bad}"
            )

    @property
    def n(self) -> int:
        return len(self.crossings)

    @property
    def edges(self) -> tuple[int, ...]:
        """Sorted distinct edge labels."""
        return tuple(sorted({e for t in self.crossings for e in t}))

    def appearances(self) -> dict[int, list[tuple[int, int]]]:
        """Edge label -> its two (crossing index, tuple position) occurrences."""
        out: dict[int, list[tuple[int, int]]] = {}
        for ci, t in enumerate(self.crossings):
            for pos, e in enumerate(t):
                out.setdefault(e, []).append((ci, pos))
        return out

    def components(self) -> list[tuple[int, ...]]:
        """Edge-label sets of the link components that pass through crossings.

        Two labels belong to one component when they sit on the same strand
        of some crossing: positions (0,2) are the under-strand, (1,3) the
        over-strand.
        """
        labels = self.edges
        parent = {e: e for e in labels}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        def union(x, y):
            rx, ry = find(x), find(y)
            if rx != ry:
                parent[rx] = ry

        for a, b, c, d in self.crossings:
            union(a, c)
            union(b, d)
        groups: dict[int, list[int]] = {}
        for e in labels:
            groups.setdefault(find(e), []).append(e)
        return sorted(tuple(sorted(g)) for g in groups.values())

    def successor(self) -> dict[int, int]:
        """Next edge label along the orientation, wrapping per component run.

        Raises InconsistentOrientation if some component's labels do not
        form a consecutive integer run.
        """
        succ: dict[int, int] = {}
        for comp in self.components():
            lo, hi = comp[0], comp[-1]
            if comp != tuple(range(lo, hi + 1)):
                raise InconsistentOrientation(
                    f"component labels {comp} are not a consecutive run"
                )
            for e in comp:
                succ[e] = lo if e == hi else e + 1
        return succ

    def serialize(self) -> str:
        parts = []
        if self.unknotted_components:
            parts.append(f"O:{self.unknotted_components}")
        parts.extend("X[{},{},{},{}]".format(*t) for t in self.crossings)
        return ";".join(parts)


def parse_pd(text: str) -> PDCode:
    """Parse PD text or its JSON form into a validated PDCode.

    Text form: crossings ``X[a,b,c,d]`` separated by ``;`` with an optional
    ``O:k`` prefix for k crossing-free unknot components; whitespace is
    ignored.  JSON form: an array of 4-element integer arrays, or an object
    ``{"crossings": [...], "unknotted_components": k}``.
    """
    stripped = text.strip()
    if not stripped:
        raise EmptyInput("empty PD input")
    if stripped[0] in "[{":
        return _parse_json(stripped)
    compact = re.sub(r"\s+", "", stripped)
    crossings: list[tuple[int, int, int, int]] = []
    circles = 0
    seen_prefix = False
    for tok in compact.split(";"):
        if not tok:
            continue
        m = _TOKEN_RE.fullmatch(tok)
        if m:
            crossings.append(tuple(int(g) for g in m.groups()))
            continue
        m = _PREFIX_RE.fullmatch(tok)
        if m:
            if seen_prefix:
                raise MalformedSyntax(f"duplicate circle prefix {tok!r}")
            seen_prefix = True
            circles = int(m.group(1))
            continue
        raise MalformedSyntax(f"unreadable token {tok!r}")
    return PDCode(tuple(crossings), circles)


def _parse_json(text: str) -> PDCode:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedSyntax(f"invalid JSON input: {exc}") from None
    circles = 0
    if isinstance(obj, dict):
        raw = obj.get("crossings", [])
        circles = obj.get("unknotted_components", 0)
    elif isinstance(obj, list):
        raw = obj
    else:
        raise MalformedSyntax(f"JSON input must be an array or object, got {type(obj).__name__}")
    if not isinstance(circles, int) or circles < 0:
        raise MalformedSyntax(f"unknotted_components must be a non-negative integer")
    crossings = []
    for t in raw:
        if not (isinstance(t, list) and len(t) == 4 and all(isinstance(x, int) for x in t)):
            raise MalformedSyntax(f"unreadable crossing {t!r}")
        crossings.append(tuple(t))
    return PDCode(tuple(crossings), circles)


_IN, _OUT = 1, -1


@dataclass(frozen=True)
class LinkDiagram:
    """An oriented link diagram: PD code plus derived crossing signs."""

    pd: PDCode
    crossing_signs: tuple[int, ...]
    n_plus: int = field(init=False)
    n_minus: int = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "n_plus", sum(1 for s in self.crossing_signs if s > 0))
        object.__setattr__(self, "n_minus", sum(1 for s in self.crossing_signs if s < 0))
        if self.n_plus + self.n_minus != self.pd.n:
            raise InconsistentOrientation("sign list does not cover all crossings")

    @property
    def n(self) -> int:
        return self.pd.n

    @property
    def unknotted_components(self) -> int:
        return self.pd.unknotted_components

    def writhe(self) -> int:
        return self.n_plus - self.n_minus


def _appearance_directions(pd: PDCode) -> dict[tuple[int, int], int]:
    """Assign in/out to every (crossing, position) appearance.

    Position 0 is always incoming and position 2 outgoing (under-strand).
    Over-strand appearances are resolved by propagation: the two over
    positions of a crossing carry opposite directions, and so do the two
    appearances of any edge.  Anything still open afterwards (components
    that never pass under) falls back to the successor rule.
    """
    succ = pd.successor()
    apps = pd.appearances()
    direction: dict[tuple[int, int], int] = {}

    def assign(app, value):
        prev = direction.get(app)
        if prev is not None:
            if prev != value:
                raise InconsistentOrientation(
                    f"edge direction conflict at crossing {app[0]}, position {app[1]}"
                )
            return False
        direction[app] = value
        return True

    def propagate():
        # twin appearances of an edge point opposite ways, and so do the
        # two over positions of a crossing
        changed = True
        while changed:
            changed = False
            for p1, p2 in (tuple(a) for a in apps.values()):
                d1, d2 = direction.get(p1), direction.get(p2)
                if d1 is not None and d2 is None:
                    changed |= assign(p2, -d1)
                elif d2 is not None and d1 is None:
                    changed |= assign(p1, -d2)
                elif d1 is not None and d1 == d2:
                    raise InconsistentOrientation(
                        f"both occurrences of an edge point the same way at {p1}, {p2}"
                    )
            for ci in range(pd.n):
                b, d = (ci, 1), (ci, 3)
                db, dd = direction.get(b), direction.get(d)
                if db is not None and dd is None:
                    changed |= assign(d, -db)
                elif dd is not None and db is None:
                    changed |= assign(b, -dd)
                elif db is not None and db == dd:
                    raise InconsistentOrientation(
                        f"over-strand enters crossing {ci} on both sides"
                    )

    for ci, t in enumerate(pd.crossings):
        if succ[t[0]] != t[2]:
            raise InconsistentOrientation(
                f"under-strand at crossing {ci} runs {t[0]} -> {t[2]} "
                f"but the successor of {t[0]} is {succ[t[0]]}"
            )
        assign((ci, 0), _IN)
        assign((ci, 2), _OUT)
    propagate()

    # Components with no under-pass anywhere: orient by the successor rule,
    # re-propagating after every choice so one decision per component suffices.
    for ci, t in enumerate(pd.crossings):
        if direction.get((ci, 1)) is not None:
            continue
        b, d = t[1], t[3]
        d_in = succ[d] == b
        b_in = succ[b] == d
        if b_in and not d_in:
            assign((ci, 1), _IN)
            assign((ci, 3), _OUT)
        elif d_in or b_in:
            # when both hold (two-edge over component) either reading is
            # consistent; prefer the positive one
            assign((ci, 3), _IN)
            assign((ci, 1), _OUT)
        else:
            raise InconsistentOrientation(
                f"over-strand {b},{d} at crossing {ci} matches no successor"
            )
        propagate()

    for e, (p1, p2) in apps.items():
        d1, d2 = direction.get(p1), direction.get(p2)
        if d1 is None or d2 is None or d1 == d2:
            raise InconsistentOrientation(f"edge {e} has no coherent direction")
    for ci, t in enumerate(pd.crossings):
        x = t[3] if direction[(ci, 3)] == _IN else t[1]
        other = t[1] if x == t[3] else t[3]
        if succ[x] != other:
            raise InconsistentOrientation(
                f"over-strand at crossing {ci} enters on {x} "
                f"but the successor of {x} is {succ[x]}, not {other}"
            )
    return direction


def derive_signs(pd: PDCode) -> LinkDiagram:
    """Classify every crossing as +1 or -1 from the orientation structure.

    With the tuple read counterclockwise from the incoming under-strand,
    the crossing is positive exactly when the over-strand enters on the
    fourth position.
    """
    if pd.n == 0:
        return LinkDiagram(pd, ())
    direction = _appearance_directions(pd)
    signs = tuple(
        +1 if direction[(ci, 3)] == _IN else -1 for ci in range(pd.n)
    )
    return LinkDiagram(pd, signs)


def link_diagram(text: str) -> LinkDiagram:
    """Parse PD text and derive crossing signs in one step."""
    return derive_signs(parse_pd(text))


def mirror(d: LinkDiagram) -> LinkDiagram:
    """The mirror diagram: over and under swap at every crossing.

    Each tuple is rotated so it again starts at the incoming under-strand
    of the mirrored crossing: by one position at a negative crossing and
    by three at a positive one.  All crossing signs flip.
    """
    rotated = []
    for t, s in zip(d.pd.crossings, d.crossing_signs):
        a, b, c, e = t
        rotated.append((e, a, b, c) if s > 0 else (b, c, e, a))
    pd = PDCode(tuple(rotated), d.pd.unknotted_components)
    return LinkDiagram(pd, tuple(-s for s in d.crossing_signs))
