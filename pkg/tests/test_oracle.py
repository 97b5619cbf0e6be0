import random

import pytest

from exkh.diagram import link_diagram, mirror
from exkh.exceptions import CubeTooLarge
from exkh.homology import GradedAbelianGroup
from exkh.oracle import (
    EnhancedState,
    all_khovanov_complexes,
    full_khovanov_homology,
    graded_euler_characteristic,
    h_grading,
    jmax,
    jmin,
    jones_bracket,
    khovanov_complex,
    khovanov_homology,
    q_extremes_scan,
    q_grading,
    smin_states,
)
from exkh.polynomials import LaurentPoly
from exkh.resolution import State

from diagen import random_diagram_text

TREFOIL = "X[1,4,2,5];X[3,6,4,1];X[5,2,6,3]"


@pytest.fixture(scope="module")
def trefoil():
    return link_diagram(TREFOIL)


def test_h_grading(trefoil):
    assert h_grading(trefoil, State.zero(3)) == -3
    assert h_grading(trefoil, State((1, 1, 1))) == trefoil.n_plus
    assert h_grading(link_diagram("O:1"), State(())) == 0


def test_q_grading(trefoil):
    assert q_grading(trefoil, EnhancedState(State.zero(3), (-1, -1, -1))) == -9
    u = link_diagram("O:1")
    assert q_grading(u, EnhancedState(State(()), (1,))) == 1
    assert q_grading(u, EnhancedState(State(()), (-1,))) == -1


def test_jmin_jmax_values(trefoil):
    assert jmin(trefoil) == -9
    assert jmax(trefoil) == -1
    assert jmin(link_diagram("O:1")) == -1
    assert jmax(link_diagram("O:1")) == 1
    assert jmax(trefoil) == -jmin(mirror(trefoil))


def test_extremes_scan_matches_formulas(small_corpus):
    for entry in small_corpus:
        d = entry.diagram()
        assert q_extremes_scan(d) == (jmin(d), jmax(d))


def test_smin_trefoil(trefoil):
    assert smin_states(trefoil) == {State.zero(3)}


def test_smin_kinks():
    assert smin_states(link_diagram("X[1,1,2,2]")) == {State((0,))}
    assert smin_states(link_diagram("X[1,2,2,1]")) == {State((0,)), State((1,))}


def test_smin_contains_zero(small_corpus):
    for entry in small_corpus:
        d = entry.diagram()
        assert State.zero(d.n) in smin_states(d)


def test_trefoil_extreme_complex(trefoil):
    cx = khovanov_complex(trefoil, -9)
    assert cx.dim(-3) == 1
    assert cx.total_dim() == 1
    assert cx.matrix(-3).is_zero()


def test_unknot_complex():
    d = link_diagram("O:1")
    cx = khovanov_complex(d, -1)
    assert cx.dim(0) == 1


def test_trefoil_full_homology(trefoil):
    kh = full_khovanov_homology(trefoil)
    table = {j: g for j, g in kh.items() if not g.is_zero()}
    assert table[-1] == GradedAbelianGroup.from_dict({0: (1, ())})
    assert table[-3] == GradedAbelianGroup.from_dict({0: (1, ())})
    assert table[-5] == GradedAbelianGroup.from_dict({-2: (1, ())})
    assert table[-7] == GradedAbelianGroup.from_dict({-2: (0, (2,))})
    assert table[-9] == GradedAbelianGroup.from_dict({-3: (1, ())})
    assert set(table) == {-1, -3, -5, -7, -9}


def test_unknot_homology():
    d = link_diagram("O:1")
    kh = full_khovanov_homology(d)
    assert kh[1] == GradedAbelianGroup.from_dict({0: (1, ())})
    assert kh[-1] == GradedAbelianGroup.from_dict({0: (1, ())})


def test_positive_kink_is_unknot():
    # adding a positive curl shifts nothing in the homology
    kinked = full_khovanov_homology(link_diagram("X[1,1,2,2]"))
    plain = full_khovanov_homology(link_diagram("O:1"))
    assert {j: g for j, g in kinked.items() if not g.is_zero()} == {
        j: g for j, g in plain.items() if not g.is_zero()
    }


def test_negative_kink_extreme_vanishes():
    d = link_diagram("X[1,2,2,1]")
    assert khovanov_homology(d, jmin(d)).is_zero()


def test_jones_unknot():
    assert jones_bracket(link_diagram("O:1")) == LaurentPoly({1: 1, -1: 1})
    assert jones_bracket(link_diagram("O:2")) == LaurentPoly(
        {2: 1, 0: 2, -2: 1}
    )


def test_jones_trefoil(trefoil):
    jb = jones_bracket(trefoil)
    assert jb == LaurentPoly({-9: -1, -5: 1, -3: 1, -1: 1})
    assert jb.min_exponent == -9


def test_euler_identity_small(small_corpus):
    for entry in small_corpus:
        if entry.expected["n"] > 8:
            continue
        d = entry.diagram()
        kh = full_khovanov_homology(d)
        assert graded_euler_characteristic(kh) == jones_bracket(d)


def test_mirror_flips_bracket(trefoil):
    jb = jones_bracket(trefoil)
    flipped = LaurentPoly({-e: c for e, c in jb.items()})
    assert jones_bracket(mirror(trefoil)) == flipped


def test_d_squared_zero_everywhere():
    # construction itself asserts the composition law; make sure it runs
    rng = random.Random(8)
    for _ in range(10):
        d = link_diagram(random_diagram_text(rng, rng.randint(1, 6)))
        for cx in all_khovanov_complexes(d).values():
            for i in cx.degrees():
                prod = cx.matrix(i + 1) @ cx.matrix(i)
                assert prod.is_zero()


def test_homology_invariant_under_renumbering():
    rng = random.Random(77)
    for _ in range(6):
        d = link_diagram(random_diagram_text(rng, rng.randint(2, 6)))
        perm = list(range(d.n))
        rng.shuffle(perm)
        text = ";".join(
            "X[{},{},{},{}]".format(*d.pd.crossings[p]) for p in perm
        )
        d2 = link_diagram(text)
        kh1 = {j: g for j, g in full_khovanov_homology(d).items() if not g.is_zero()}
        kh2 = {j: g for j, g in full_khovanov_homology(d2).items() if not g.is_zero()}
        assert kh1 == kh2


def test_virtual_code_rejected_when_dichotomy_breaks():
    # a code whose re-smoothing neither merges nor splits cannot feed the
    # differential; the guard turns silent nonsense into a clear error
    from exkh.exceptions import InconsistentOrientation

    virtual = (
        "X[1,4,2,5];X[10,5,11,6];X[2,6,3,7];"
        "X[11,7,12,8];X[3,8,1,9];X[12,9,10,4]"
    )
    d = link_diagram(virtual)
    with pytest.raises(InconsistentOrientation):
        full_khovanov_homology(d)


def test_cube_cap_raises(trefoil):
    with pytest.raises(CubeTooLarge):
        khovanov_complex(trefoil, -9, cube_cap=2)
    with pytest.raises(CubeTooLarge):
        jones_bracket(trefoil, cube_cap=1)


def test_exhaustive_q_minimum(trefoil):
    # literal enumeration of every enhancement of every state
    from exkh.resolution import resolve
    from itertools import product

    values = []
    for mask in range(8):
        v = State.from_mask(mask, 3)
        k = resolve(trefoil, v).circle_count
        for signs in product((-1, 1), repeat=k):
            values.append(q_grading(trefoil, EnhancedState(v, signs)))
    assert min(values) == jmin(trefoil)
    assert max(values) == jmax(trefoil)
