"""Construction of PD codes from combinatorial recipes.

Diagrams are assembled as 4-valent maps: crossings with four ports in
counterclockwise order and an over-strand on one opposite port pair.
Components are traced, oriented by first traversal, and numbered so the
emitted PD text always carries consecutive cyclic edge runs.

Used by the test suite for random diagrams and by the corpus generator.
"""

from __future__ import annotations

import random


class DiagramBuilder:
    """A 4-valent map accumulating crossings and port connections.

    Ports are numbered counterclockwise; the strand through a crossing
    connects opposite ports.  over_pair 0 means ports (0, 2) carry the
    over strand, 1 means ports (1, 3).
    """

    def __init__(self):
        self.over_pairs: list[int] = []
        self.link: dict[tuple[int, int], tuple[int, int]] = {}
        self.extra_circles = 0

    def add_crossing(self, over_pair: int) -> int:
        if over_pair not in (0, 1):
            raise ValueError("over_pair must be 0 or 1")
        self.over_pairs.append(over_pair)
        return len(self.over_pairs) - 1

    def connect(self, p: tuple[int, int], q: tuple[int, int]):
        if p in self.link or q in self.link:
            raise ValueError(f"port already connected: {p} or {q}")
        if p == q:
            raise ValueError("cannot connect a port to itself")
        self.link[p] = q
        self.link[q] = p

    def to_pd_text(self) -> str:
        n = len(self.over_pairs)
        ports = [(ci, k) for ci in range(n) for k in range(4)]
        for p in ports:
            if p not in self.link:
                raise ValueError(f"unconnected port {p}")

        label: dict[tuple[int, int], int] = {}
        role_in: dict[tuple[int, int], bool] = {}
        next_label = 1
        seen = set()
        for start in ports:
            if start in seen:
                continue
            # orient the component: first arrival is the smallest port on it
            arrival = start
            count = 0
            a = arrival
            while True:
                seen.add(a)
                leave = (a[0], (a[1] + 2) % 4)
                seen.add(leave)
                role_in[a] = True
                role_in[leave] = False
                count += 1
                a = self.link[leave]
                if a == arrival:
                    break
            base = next_label
            a = arrival
            for t in range(count):
                label[a] = base + t
                leave = (a[0], (a[1] + 2) % 4)
                label[leave] = base + (t + 1) % count
                a = self.link[leave]
            next_label += count

        tuples = []
        for ci in range(n):
            under = (1, 3) if self.over_pairs[ci] == 0 else (0, 2)
            p0 = next(k for k in under if role_in[(ci, k)])
            tuples.append(
                "X[{},{},{},{}]".format(
                    *(label[(ci, (p0 + off) % 4)] for off in range(4))
                )
            )
        parts = []
        if self.extra_circles:
            parts.append(f"O:{self.extra_circles}")
        parts.extend(tuples)
        return ";".join(parts)


def braid_closure(word: list[int]) -> str:
    """PD text of the closure of a braid word.

    Letters are nonzero integers: +i is the positive generator crossing
    strand slots i and i+1 (slot i passes over), -i its inverse.
    """
    if not word:
        raise ValueError("empty braid word")
    b = DiagramBuilder()
    open_top: dict[int, tuple[int, int]] = {}
    bottoms: dict[int, tuple[int, int]] = {}
    for letter in word:
        if letter == 0:
            raise ValueError("0 is not a braid letter")
        i = abs(letter)
        ci = b.add_crossing(0 if letter > 0 else 1)
        for slot, port in ((i, (ci, 0)), (i + 1, (ci, 1))):
            if slot in open_top:
                b.connect(open_top.pop(slot), port)
            else:
                bottoms[slot] = port
        open_top[i] = (ci, 3)
        open_top[i + 1] = (ci, 2)
    for slot, port in open_top.items():
        b.connect(port, bottoms.pop(slot))
    assert not bottoms
    return b.to_pd_text()


def pretzel(twists: list[int]) -> str:
    """PD text of a pretzel diagram with the given twist counts.

    Each entry is a vertical band of |q| crossings, right-handed for
    positive q; band tops are joined in sequence and so are the bottoms.
    """
    if any(q == 0 for q in twists) or not twists:
        raise ValueError("twist counts must be nonzero")
    b = DiagramBuilder()
    tops = []
    bottoms = []
    for q in twists:
        over = 0 if q > 0 else 1
        chain = [b.add_crossing(over) for _ in range(abs(q))]
        for c1, c2 in zip(chain, chain[1:]):
            b.connect((c1, 3), (c2, 0))
            b.connect((c1, 2), (c2, 1))
        bottoms.append(((chain[0], 0), (chain[0], 1)))
        tops.append(((chain[-1], 3), (chain[-1], 2)))
    m = len(twists)
    for j in range(m):
        right_top = tops[j][1]
        left_top = tops[(j + 1) % m][0]
        b.connect(right_top, left_top)
        right_bot = bottoms[j][1]
        left_bot = bottoms[(j + 1) % m][0]
        b.connect(right_bot, left_bot)
    return b.to_pd_text()


def twisted_braid_closure(word: list[int], curls: int) -> str:
    """Braid closure with negative curls inserted on the slot-1 strand.

    Each curl adds one crossing and one chord with both endpoints on a
    single circle of the all-zero smoothing, without touching the others.
    """
    b = DiagramBuilder()
    open_top: dict[int, tuple[int, int]] = {}
    bottoms: dict[int, tuple[int, int]] = {}
    for letter in word:
        i = abs(letter)
        ci = b.add_crossing(0 if letter > 0 else 1)
        for slot, port in ((i, (ci, 0)), (i + 1, (ci, 1))):
            if slot in open_top:
                b.connect(open_top.pop(slot), port)
            else:
                bottoms[slot] = port
        open_top[i] = (ci, 3)
        open_top[i + 1] = (ci, 2)
    cur = open_top.pop(1)
    for _ in range(curls):
        ci = b.add_crossing(1)  # over strand on ports (1, 3)
        b.connect(cur, (ci, 0))
        b.connect((ci, 2), (ci, 1))  # the curl loop
        cur = (ci, 3)
    b.connect(cur, bottoms.pop(1))
    for slot, port in open_top.items():
        b.connect(port, bottoms.pop(slot))
    assert not bottoms
    return b.to_pd_text()


def plat_closure(word: list[int], strands: int = 4) -> str:
    """PD text of the plat closure of a braid word on an even strand count.

    Bottom and top ends are capped in adjacent pairs (1,2), (3,4), ...
    Strands never used by the word become plain wires; cap circles that
    touch no crossing at all surface as crossing-free unknot components.
    """
    if strands % 2:
        raise ValueError("plat closure needs an even strand count")
    b = DiagramBuilder()
    open_top: dict[int, tuple[int, int]] = {}
    bottoms: dict[int, tuple[int, int]] = {}
    for letter in word:
        if letter == 0 or abs(letter) >= strands:
            raise ValueError(f"bad letter {letter} for {strands} strands")
        i = abs(letter)
        ci = b.add_crossing(0 if letter > 0 else 1)
        for slot, port in ((i, (ci, 0)), (i + 1, (ci, 1))):
            if slot in open_top:
                b.connect(open_top.pop(slot), port)
            else:
                bottoms[slot] = port
        open_top[i] = (ci, 3)
        open_top[i + 1] = (ci, 2)

    # resolve caps and idle wires into direct port links
    neighbour: dict[tuple[str, int], tuple[str, int]] = {}
    for k in range(1, strands, 2):
        neighbour[("bot", k)] = ("bot", k + 1)
        neighbour[("bot", k + 1)] = ("bot", k)
        neighbour[("top", k)] = ("top", k + 1)
        neighbour[("top", k + 1)] = ("top", k)
    port_at = {("bot", s): p for s, p in bottoms.items()}
    port_at.update({("top", s): p for s, p in open_top.items()})

    def step(end):
        # crossing a cap, then a wire when the far slot is idle
        other = neighbour[end]
        while other not in port_at:
            side, slot = other
            far = ("top" if side == "bot" else "bot", slot)
            if far == end:  # closed cap-wire loop with no crossings
                return None
            other = neighbour[far]
            if other == end:
                return None
        return other

    done = set()
    for end, port in sorted(port_at.items()):
        if end in done:
            continue
        other = step(end)
        if other is None:
            raise ValueError("degenerate plat wiring")
        done.add(end)
        done.add(other)
        b.connect(port, port_at[other])
    # idle cap pairs with idle wires on both slots close into circles
    idle = [
        k
        for k in range(1, strands, 2)
        if ("bot", k) not in port_at
        and ("bot", k + 1) not in port_at
        and ("top", k) not in port_at
        and ("top", k + 1) not in port_at
    ]
    b.extra_circles += len(idle)
    return b.to_pd_text()


def cyclic_chord_diagram(m: int) -> str:
    """A diagram whose self-chord interleavement graph is the m-cycle.

    One closed curve visits 2m chord endpoints; chord i occupies cyclic
    slots 2i and 2i+3, so consecutive chords alternate and no others do.
    Realizable in the plane exactly when m is even (the cycle must be
    two-colorable by inside/outside placement).
    """
    if m < 4 or m % 2:
        raise ValueError("need an even m >= 4")
    b = DiagramBuilder()
    for _ in range(m):
        b.add_crossing(1)  # over strand on ports (1, 3)

    # At each chord the circle rides the smoothing arcs (0,1) and (2,3);
    # entering the second arc at port 2 keeps the outside connections of
    # the four ports noncrossing, which is what makes the code planar.
    def arrival(slot):
        s = slot % (2 * m)
        if s % 2 == 0:
            return (s // 2, 0)
        return (((s - 3) // 2) % m, 2)

    def departure(slot):
        s = slot % (2 * m)
        if s % 2 == 0:
            return (s // 2, 1)
        return (((s - 3) // 2) % m, 3)

    for s in range(2 * m):
        b.connect(departure(s - 1), arrival(s))
    return b.to_pd_text()


def random_braid_word(rng: random.Random, length: int, strands: int) -> list[int]:
    word = []
    for _ in range(length):
        i = rng.randint(1, strands - 1)
        word.append(i if rng.random() < 0.5 else -i)
    return word


def random_diagram_text(rng: random.Random, crossings: int) -> str:
    """A random braid-closure diagram with exactly the given crossing count."""
    strands = rng.randint(2, min(4, max(2, crossings)))
    return braid_closure(random_braid_word(rng, crossings, strands))
