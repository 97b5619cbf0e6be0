"""Extreme Khovanov homology of link diagrams, two independent ways.

The cube oracle builds the full smoothing-cube chain complex and is
exponential in the crossing count; the face pipeline reads the extreme
gradings off the independence complex of the chord-interleavement graph
of the all-zero smoothing and its Alexander dual, and scales with the
face count instead.  The verify module checks the two against each other
at the level of graded integral cohomology.
"""

from .cube import BACKEND
from .diagram import (
    LinkDiagram,
    PDCode,
    derive_signs,
    link_diagram,
    mirror,
    parse_pd,
)
from .exceptions import (
    BadEdgeMultiplicity,
    CubeTooLarge,
    EmptyInput,
    ExkhError,
    InconsistentOrientation,
    MalformedSyntax,
    NotAComplex,
    TooManyFaces,
)
from .homology import (
    BigradedComplex,
    GradedAbelianGroup,
    IntMatrix,
    cohomology,
    smith_normal_form,
)
from .lando import (
    DEFAULT_FACE_LIMIT,
    LandoGraph,
    SimplicialComplex,
    alexander_dual,
    extreme_complex,
    extreme_khovanov_homology,
    independence_complex,
    jmax_khovanov_homology,
    lando_graph,
    reduced_cohomology,
    smin_faces,
    y_complex,
)
from .oracle import (
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
from .polynomials import LaurentPoly
from .resolution import (
    DEFAULT_CUBE_CAP,
    CircleCountMap,
    Resolution,
    State,
    circle_count_all_states,
    looks_nonplanar,
    resolve,
)
from .verify import (
    VerificationReport,
    verify_diagram,
    verify_extreme,
    verify_jmax,
    verify_structure,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BadEdgeMultiplicity",
    "BigradedComplex",
    "CircleCountMap",
    "CubeTooLarge",
    "DEFAULT_CUBE_CAP",
    "DEFAULT_FACE_LIMIT",
    "EmptyInput",
    "EnhancedState",
    "ExkhError",
    "GradedAbelianGroup",
    "InconsistentOrientation",
    "IntMatrix",
    "LandoGraph",
    "LaurentPoly",
    "LinkDiagram",
    "MalformedSyntax",
    "NotAComplex",
    "PDCode",
    "Resolution",
    "SimplicialComplex",
    "State",
    "TooManyFaces",
    "VerificationReport",
    "alexander_dual",
    "all_khovanov_complexes",
    "circle_count_all_states",
    "cohomology",
    "derive_signs",
    "extreme_complex",
    "extreme_khovanov_homology",
    "full_khovanov_homology",
    "graded_euler_characteristic",
    "h_grading",
    "independence_complex",
    "jmax",
    "jmax_khovanov_homology",
    "jmin",
    "jones_bracket",
    "khovanov_complex",
    "khovanov_homology",
    "lando_graph",
    "link_diagram",
    "looks_nonplanar",
    "mirror",
    "parse_pd",
    "q_extremes_scan",
    "q_grading",
    "reduced_cohomology",
    "resolve",
    "smin_faces",
    "smin_states",
    "smith_normal_form",
    "verify_diagram",
    "verify_extreme",
    "verify_jmax",
    "verify_structure",
    "y_complex",
]
