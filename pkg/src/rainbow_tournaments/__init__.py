"""Rainbow triangles in arc-colored tournaments.

Exact triangle censuses, the lower and upper bounds that tie rainbow
triangles to monochromatic degrees, the extremal constructions that show
those bounds are tight, and a search for rainbow-free colorings.
"""

from .bounds import (
    BoundReport,
    BoundRow,
    claim1_bound,
    lemma1_bound,
    lemma2_upper,
    lemma3_lower,
    lemma4_upper,
    thm1_bound,
    thm1plus_threshold,
    thm2_threshold,
    verify,
)
from .constructions import (
    ConstructionResult,
    almost_regular_tournament,
    blowup,
    example1,
    example2,
    example3,
    example4,
    example5,
    measure,
    remark1,
    rotational_tournament,
)
from .core import (
    ColoredTournament,
    Tournament,
    build,
    color_distinct,
    color_uniform,
    parse,
    read_instance,
    recolor,
    reverse,
    serialize,
    write_instance,
)
from .errors import ConstructionError, InstanceSyntaxError, TournamentError
from .metrics import (
    DegreeProfile,
    MonoDegrees,
    degree_profile,
    is_strongly_connected,
    max_mono_in,
    mono_degrees,
    strong_components,
)
from .search import (
    CAP_MIN_RAINBOW,
    MAX_MONO,
    MIN_MONO,
    SearchConfig,
    SearchOutcome,
    anneal,
    anneal_restarts,
    conjecture_probe,
    exhaustive_search,
)
from .triangles import (
    TriangleCensus,
    census,
    enumerate_triangles,
    mono_p2,
    triangle_count,
    triangles_through,
)

__version__ = "0.1.0"
