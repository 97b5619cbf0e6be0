"""The bundled diagram corpus and expectation checking."""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .diagram import LinkDiagram, link_diagram
from .exceptions import EmptyInput, MalformedSyntax
from .homology import GradedAbelianGroup
from .lando import (
    DEFAULT_FACE_LIMIT,
    extreme_khovanov_homology,
    independence_complex,
    jmax_khovanov_homology,
    lando_graph,
)
from .oracle import jmax, jmin
from .resolution import State, resolve


@dataclass(frozen=True)
class CorpusEntry:
    """A named diagram with optional frozen expected values."""

    name: str
    pd_text: str
    expected: dict | None = None

    def diagram(self) -> LinkDiagram:
        return link_diagram(self.pd_text)


def _group_from_json(data: dict) -> GradedAbelianGroup:
    return GradedAbelianGroup.from_dict(
        {int(k): (v["betti"], tuple(v["torsion"])) for k, v in data.items()}
    )


def load_corpus(path: str | Path | None = None) -> list[CorpusEntry]:
    """Entries from a corpus JSON file; the bundled corpus by default."""
    if path is None:
        text = (
            resources.files("exkh").joinpath("data/corpus.json").read_text()
        )
    else:
        text = Path(path).read_text()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedSyntax(f"corpus file is not valid JSON: {exc}") from None
    raw = data.get("entries", []) if isinstance(data, dict) else data
    entries = [
        CorpusEntry(e["name"], e["pd"], e.get("expected")) for e in raw
    ]
    if not entries:
        raise EmptyInput("corpus contains no entries")
    return entries


def check_expected(
    entry: CorpusEntry, face_limit: int = DEFAULT_FACE_LIMIT
) -> list[tuple[str, bool, str]]:
    """Reproduce an entry's frozen values with the face pipelines.

    Returns (check name, passed, witness) triples; empty when the entry
    carries no expectations.  Only cube-free quantities are checked here,
    so this runs on every entry regardless of size.
    """
    if not entry.expected:
        return []
    exp = entry.expected
    d = entry.diagram()
    g = lando_graph(d)
    results = []

    def expect(label: str, got, want):
        results.append(
            (label, got == want, "" if got == want else f"got {got}, expected {want}")
        )

    expect("crossing count", d.n, exp["n"])
    expect("positive crossings", d.n_plus, exp["n_plus"])
    expect("negative crossings", d.n_minus, exp["n_minus"])
    expect(
        "circles of the zero smoothing",
        resolve(d, State.zero(d.n)).circle_count,
        exp["circles_zero"],
    )
    expect("minimal quantum grading", jmin(d), exp["j_min"])
    expect("maximal quantum grading", jmax(d), exp["j_max"])
    expect("chord graph vertices", len(g.vertices), exp["lando_vertices"])
    expect("chord graph edges", len(g.edges), exp["lando_edges"])
    expect(
        "independence complex faces",
        independence_complex(g, face_limit).face_count,
        exp["x_faces"],
    )
    expect(
        "extreme homology",
        extreme_khovanov_homology(d, face_limit),
        _group_from_json(exp["extreme"]),
    )
    expect(
        "top homology",
        jmax_khovanov_homology(d, face_limit),
        _group_from_json(exp["top"]),
    )
    return results
