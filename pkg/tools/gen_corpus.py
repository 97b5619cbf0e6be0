"""Regenerate the bundled diagram corpus with frozen expected values.

Every expected value is produced by the face pipeline and, for diagrams
within the cube cap, cross-checked against the cube oracle before being
written.  Run from the repository root:

    python tools/gen_corpus.py            # writes src/exkh/data/corpus.json
"""

from __future__ import annotations

import json
import pathlib
import random
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "src"))
sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent))

from diagen import (  # noqa: E402
    braid_closure,
    cyclic_chord_diagram,
    plat_closure,
    pretzel,
    random_diagram_text,
    twisted_braid_closure,
)
from exkh.diagram import link_diagram, mirror  # noqa: E402
from exkh.lando import (  # noqa: E402
    extreme_khovanov_homology,
    independence_complex,
    jmax_khovanov_homology,
    lando_graph,
)
from exkh.oracle import jmax, jmin, khovanov_homology  # noqa: E402
from exkh.resolution import State, resolve  # noqa: E402

ORACLE_CAP = 12


def pick_random(rng: random.Random, crossings: int, budget: int) -> str:
    """First seeded closure whose cube stays within the generator budget."""
    from exkh.resolution import circle_count_all_states

    while True:
        txt = random_diagram_text(rng, crossings)
        d = link_diagram(txt)
        counts = circle_count_all_states(d)
        total = sum(1 << counts.by_mask(m) for m in range(1 << d.n))
        if total <= budget:
            return txt


def build_entries() -> list[tuple[str, str]]:
    hopf_pos = "X[1,3,2,4];X[3,1,4,2]"
    trefoil_left = "X[1,4,2,5];X[3,6,4,1];X[5,2,6,3]"
    rng = random.Random(99)
    entries = [
        ("unknot", "O:1"),
        ("two_unknots", "O:2"),
        ("kink_positive", "X[1,1,2,2]"),
        ("kink_negative", "X[1,2,2,1]"),
        ("kinked_unknot_with_circle", "O:1;X[1,1,2,2]"),
        ("unknot_six_curls", twisted_braid_closure([-1], 5)),
        ("hopf_positive", hopf_pos),
        ("hopf_negative", mirror(link_diagram(hopf_pos)).pd.serialize()),
        ("trefoil_left", trefoil_left),
        ("trefoil_right", mirror(link_diagram(trefoil_left)).pd.serialize()),
        ("figure_eight_braid", braid_closure([1, -2, 1, -2])),
        ("torus_2_4_negative", braid_closure([-1] * 4)),
        ("torus_2_5_negative", braid_closure([-1] * 5)),
        ("torus_2_6_negative", braid_closure([-1] * 6)),
        ("torus_2_7_negative", braid_closure([-1] * 7)),
        ("torus_2_5_positive", braid_closure([1] * 5)),
        ("twist_knot_4_1_plat", plat_closure([2, -1, 2, 2])),
        ("twist_knot_5_2_plat", plat_closure([2, -1, -1, 2, 2])),
        ("twist_plat_6", plat_closure([2, -1, -1, -1, 2, 2])),
        ("twist_plat_7", plat_closure([2, -1, -1, -1, -1, 2, 2])),
        ("pretzel_m2_3_3", pretzel([-2, 3, 3])),
        ("pretzel_3_3_m3", pretzel([3, 3, -3])),
        ("chord_ring_4", cyclic_chord_diagram(4)),
        ("chord_ring_6", cyclic_chord_diagram(6)),
        (
            "chord_ring_6_mirror",
            mirror(link_diagram(cyclic_chord_diagram(6))).pd.serialize(),
        ),
        ("random_10", pick_random(rng, 10, 40_000)),
        ("random_11", pick_random(rng, 11, 60_000)),
        ("random_12", pick_random(rng, 12, 90_000)),
        ("big_torus_2_35", braid_closure([-1] * 35)),
        ("big_twisted_2_25_c10", twisted_braid_closure([-1] * 25, 10)),
    ]
    return entries


def groups_to_json(g):
    return g.to_json_dict()


def expected_for(name: str, text: str) -> dict:
    d = link_diagram(text)
    g = lando_graph(d)
    x = independence_complex(g)
    ext = extreme_khovanov_homology(d)
    top = jmax_khovanov_homology(d)
    exp = {
        "n": d.n,
        "n_plus": d.n_plus,
        "n_minus": d.n_minus,
        "circles_zero": resolve(d, State.zero(d.n)).circle_count,
        "j_min": jmin(d),
        "j_max": jmax(d),
        "lando_vertices": len(g.vertices),
        "lando_edges": len(g.edges),
        "x_faces": x.face_count,
        "extreme": groups_to_json(ext),
        "top": groups_to_json(top),
        "oracle_checked": d.n <= ORACLE_CAP,
    }
    if d.n <= ORACLE_CAP:
        assert ext == khovanov_homology(d, jmin(d)), f"{name}: extreme mismatch"
        assert top == khovanov_homology(d, jmax(d)), f"{name}: top mismatch"
    return exp


def main():
    out = {"entries": []}
    for name, text in build_entries():
        print(f"  {name}: {text[:60]}{'...' if len(text) > 60 else ''}")
        out["entries"].append(
            {"name": name, "pd": text, "expected": expected_for(name, text)}
        )
    target = (
        pathlib.Path(__file__).resolve().parent.parent
        / "src"
        / "exkh"
        / "data"
        / "corpus.json"
    )
    target.parent.mkdir(parents=True, exist_ok=True)
    target.write_text(json.dumps(out, indent=1, sort_keys=True) + "\n")
    print(f"wrote {target} with {len(out['entries'])} entries")


if __name__ == "__main__":
    main()
