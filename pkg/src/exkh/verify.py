"""Machine checks tying the face pipeline to the cube oracle.

Three suites: the graded-cohomology equivalence at the minimal quantum
grading, its mirror statement at the maximal grading, and the structural
identifications (downward closure, face poset, matrix-level agreement).
Every report carries the caveat that only integral cohomology is being
certified; no homotopy-level statement is checked here.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .diagram import LinkDiagram
from .homology import BigradedComplex
from .lando import (
    DEFAULT_FACE_LIMIT,
    extreme_complex,
    extreme_khovanov_homology,
    jmax_khovanov_homology,
    smin_faces,
)
from .oracle import (
    jmax,
    jmin,
    khovanov_complex,
    khovanov_homology,
    smin_states,
)
from .resolution import DEFAULT_CUBE_CAP, State

FOOTER = (
    "certifies graded integral cohomology only; "
    "the stable equivalence itself is not machine-checked"
)


@dataclass
class CheckResult:
    name: str
    passed: bool
    witness: str = ""
    seconds: float = 0.0


@dataclass
class VerificationReport:
    diagram: str
    j_min: int
    j_max: int
    checks: list[CheckResult] = field(default_factory=list)
    footer: str = FOOTER

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def first_witness(self) -> str:
        for c in self.checks:
            if not c.passed:
                return f"{c.name}: {c.witness}"
        return ""

    def to_json_dict(self) -> dict:
        # wall times stay out of serialized output so reports are reproducible
        return {
            "diagram": self.diagram,
            "j_min": self.j_min,
            "j_max": self.j_max,
            "passed": self.passed,
            "checks": [
                {"name": c.name, "passed": c.passed, "witness": c.witness}
                for c in self.checks
            ],
            "note": self.footer,
        }

    def to_table(self) -> str:
        lines = [f"diagram {self.diagram}: j_min={self.j_min} j_max={self.j_max}"]
        for c in self.checks:
            status = "pass" if c.passed else "FAIL"
            line = f"  [{status}] {c.name}"
            if not c.passed and c.witness:
                line += f"  ({c.witness})"
            lines.append(line)
        lines.append(f"  note: {self.footer}")
        return "\n".join(lines)


def _timed(report: VerificationReport, name: str, fn):
    t0 = time.perf_counter()
    passed, witness = fn()
    report.checks.append(
        CheckResult(name, passed, witness, time.perf_counter() - t0)
    )


def _compare_groups(got, want, got_label: str, want_label: str):
    if got == want:
        return True, ""
    degrees = sorted(set(got.degrees()) | set(want.degrees()))
    for i in degrees:
        a = (got.betti(i), got.torsion(i))
        b = (want.betti(i), want.torsion(i))
        if a != b:
            return False, (
                f"degree {i}: {got_label} has betti={a[0]} torsion={list(a[1])}, "
                f"{want_label} has betti={b[0]} torsion={list(b[1])}"
            )
    return False, "group mismatch"


def verify_extreme(
    d: LinkDiagram,
    name: str = "diagram",
    cube_cap: int = DEFAULT_CUBE_CAP,
    face_limit: int = DEFAULT_FACE_LIMIT,
) -> VerificationReport:
    """Graded integral equality of the two minimal-grading pipelines."""
    report = VerificationReport(name, jmin(d), jmax(d))

    def check():
        ext = extreme_khovanov_homology(d, face_limit)
        orc = khovanov_homology(d, jmin(d), cube_cap)
        return _compare_groups(ext, orc, "faces", "cube")

    _timed(report, "extreme grading: face pipeline equals cube homology", check)
    return report


def verify_jmax(
    d: LinkDiagram,
    name: str = "diagram",
    cube_cap: int = DEFAULT_CUBE_CAP,
    face_limit: int = DEFAULT_FACE_LIMIT,
) -> VerificationReport:
    """Graded integral equality at the maximal grading via the dual complex."""
    report = VerificationReport(name, jmin(d), jmax(d))

    def check():
        dual_side = jmax_khovanov_homology(d, face_limit)
        orc = khovanov_homology(d, jmax(d), cube_cap)
        return _compare_groups(dual_side, orc, "dual faces", "cube")

    _timed(report, "top grading: dual-complex pipeline equals cube homology", check)
    return report


def _signs_reconcile(a: BigradedComplex, b: BigradedComplex):
    """Can a and b be conjugated into each other by +-1 diagonals?

    Solves e_target * B * e_source = A generator-wise by propagating sign
    unknowns across all degrees at once.
    """
    lo = min(a.degree_range[0], b.degree_range[0])
    hi = max(a.degree_range[1], b.degree_range[1])
    for i in range(lo, hi + 1):
        if a.dim(i) != b.dim(i):
            return False, f"degree {i}: {a.dim(i)} vs {b.dim(i)} generators"
    # union-find with parity over generator slots (degree, index)
    parent: dict = {}
    parity: dict = {}

    def find(x):
        if x not in parent:
            parent[x] = x
            parity[x] = 0
            return x, 0
        root, p = x, 0
        while parent[root] != root:
            p ^= parity[root]
            root = parent[root]
        # path compression
        cur, cp = x, p
        while parent[cur] != cur:
            nxt = parent[cur]
            np = cp ^ parity[cur]
            parent[cur] = root
            parity[cur] = cp
            cur, cp = nxt, np
        return root, p

    def union(x, y, rel):
        rx, px = find(x)
        ry, py = find(y)
        if rx == ry:
            return (px ^ py) == rel
        parent[rx] = ry
        parity[rx] = px ^ py ^ rel
        return True

    for i in range(lo, hi + 1):
        ma, mb = a.matrix(i), b.matrix(i)
        if set(ma.entries) != set(mb.entries):
            extra = sorted(set(ma.entries) ^ set(mb.entries))
            return False, f"degree {i}: sparsity mismatch at {extra[:3]}"
        for key, va in ma.entries.items():
            vb = mb.entries[key]
            if abs(va) != abs(vb):
                return False, f"degree {i}: entry {key} has {va} vs {vb}"
            rel = 0 if va == vb else 1
            row, col = key
            if not union((i, "c", col), (i + 1, "c", row), rel):
                return False, f"degree {i}: inconsistent sign cycle at {key}"
    return True, ""


def verify_structure(
    d: LinkDiagram,
    name: str = "diagram",
    cube_cap: int = DEFAULT_CUBE_CAP,
    face_limit: int = DEFAULT_FACE_LIMIT,
) -> VerificationReport:
    """Downward closure, face-poset identification, matrix-level match."""
    report = VerificationReport(name, jmin(d), jmax(d))
    states = smin_states(d, cube_cap)

    def check_closure():
        masks = {s.mask for s in states}
        for mask in sorted(masks):
            for k in range(d.n):
                if (mask >> k) & 1 and (mask ^ (1 << k)) not in masks:
                    culprit = State.from_mask(mask, d.n)
                    return False, f"state {culprit.bits} minus crossing {k} missing"
        return True, ""

    def check_faces():
        faces = smin_faces(d, face_limit)
        if faces == states:
            return True, ""
        diff = sorted(
            s.bits for s in faces.symmetric_difference(states)
        )
        return False, f"first differing state {diff[0]}"

    def check_matrices():
        ext = extreme_complex(d, face_limit)
        cube = khovanov_complex(d, jmin(d), cube_cap)
        return _signs_reconcile(ext, cube)

    _timed(report, "minimal-grading states are downward closed", check_closure)
    _timed(report, "face supports equal minimal-grading states", check_faces)
    _timed(
        report,
        "face coboundary matches cube differential up to sign conjugation",
        check_matrices,
    )
    return report


def verify_diagram(
    d: LinkDiagram,
    name: str = "diagram",
    cube_cap: int = DEFAULT_CUBE_CAP,
    face_limit: int = DEFAULT_FACE_LIMIT,
) -> VerificationReport:
    """All three suites on one diagram, merged into a single report."""
    report = VerificationReport(name, jmin(d), jmax(d))
    for sub in (
        verify_extreme(d, name, cube_cap, face_limit),
        verify_jmax(d, name, cube_cap, face_limit),
        verify_structure(d, name, cube_cap, face_limit),
    ):
        report.checks.extend(sub.checks)
    return report
