import random
from itertools import product

import pytest

from exkh.diagram import link_diagram
from exkh.exceptions import CubeTooLarge
from exkh.resolution import (
    State,
    circle_count_all_states,
    looks_nonplanar,
    resolve,
)

from diagen import random_diagram_text
from helpers.oracles import count_circles_sets

TREFOIL = "X[1,4,2,5];X[3,6,4,1];X[5,2,6,3]"


def test_trefoil_zero_state():
    d = link_diagram(TREFOIL)
    r = resolve(d, State.zero(3))
    assert r.circle_count == 3
    # no chord has both endpoints on one circle
    for (c1, _), (c2, _) in r.chord_endpoints.values():
        assert c1 != c2


def test_kink_resolutions():
    pos = link_diagram("X[1,1,2,2]")
    assert resolve(pos, State((0,))).circle_count == 2
    assert resolve(pos, State((1,))).circle_count == 1
    neg = link_diagram("X[1,2,2,1]")
    r0 = resolve(neg, State((0,)))
    assert r0.circle_count == 1
    (c1, _), (c2, _) = r0.chord_endpoints[0]
    assert c1 == c2  # the kink chord is a self-chord
    assert resolve(neg, State((1,))).circle_count == 2


def test_zero_crossing_unknot():
    d = link_diagram("O:1")
    r = resolve(d, State(()))
    assert r.circle_count == 1
    assert r.circles == ((),)


def test_chord_endpoint_total(corpus):
    for entry in corpus:
        d = entry.diagram()
        r = resolve(d, State.zero(d.n))
        assert sum(len(c) // 2 for c in r.circles) == 2 * d.n
        assert len(r.chord_endpoints) == d.n


def test_circle_counts_trefoil():
    d = link_diagram(TREFOIL)
    counts = circle_count_all_states(d)
    assert counts[State.zero(3)] == 3
    for k in range(3):
        assert counts.by_mask(1 << k) == 2


def test_adjacent_states_differ_by_one(small_corpus):
    for entry in small_corpus:
        d = entry.diagram()
        if d.n > 10:
            continue
        counts = circle_count_all_states(d)
        for mask in range(1 << d.n):
            for k in range(d.n):
                if not (mask >> k) & 1:
                    diff = counts.by_mask(mask | (1 << k)) - counts.by_mask(mask)
                    assert abs(diff) == 1


def test_counts_against_set_merger():
    rng = random.Random(12)
    for _ in range(20):
        d = link_diagram(random_diagram_text(rng, rng.randint(1, 6)))
        counts = circle_count_all_states(d)
        for bits in product((0, 1), repeat=d.n):
            got = counts[State(bits)]
            want = count_circles_sets(
                list(d.pd.crossings), bits, d.unknotted_components
            )
            assert got == want


def test_resolve_matches_count_map(small_corpus):
    for entry in small_corpus:
        d = entry.diagram()
        if d.n > 8:
            continue
        counts = circle_count_all_states(d)
        for mask in range(1 << d.n):
            v = State.from_mask(mask, d.n)
            assert resolve(d, v).circle_count == counts[v]


def test_counts_invariant_under_renumbering():
    rng = random.Random(3)
    for _ in range(10):
        d = link_diagram(random_diagram_text(rng, rng.randint(2, 7)))
        counts = circle_count_all_states(d)
        perm = list(range(d.n))
        rng.shuffle(perm)
        text = ";".join(
            "X[{},{},{},{}]".format(*d.pd.crossings[p]) for p in perm
        )
        d2 = link_diagram(text)
        counts2 = circle_count_all_states(d2)
        for mask in range(1 << d.n):
            image = 0
            for new_pos, old_pos in enumerate(perm):
                if (mask >> old_pos) & 1:
                    image |= 1 << new_pos
            assert counts.by_mask(mask) == counts2.by_mask(image)


def test_cube_cap():
    d = link_diagram(TREFOIL)
    with pytest.raises(CubeTooLarge):
        circle_count_all_states(d, cube_cap=2)


def test_nonplanar_screen():
    for entry_text in (TREFOIL, "X[1,1,2,2]", "O:1"):
        assert not looks_nonplanar(link_diagram(entry_text))
    # a chord structure that cannot close up in the plane: re-smoothing a
    # self-chord keeps the circle count, violating the planar step bound
    virtual = "X[1,4,2,5];X[10,5,11,6];X[2,6,3,7];X[11,7,12,8];X[3,8,1,9];X[12,9,10,4]"
    assert looks_nonplanar(link_diagram(virtual))


def test_resolution_json_dump():
    d = link_diagram("X[1,2,2,1]")
    data = resolve(d, State((0,))).to_json_dict()
    assert data["state"] == [0]
    assert "chords" in data
