"""wedgelab: exact counting of origin-triangle areas, dot products, and the
line-family incidences they reduce to.

Everything is computed in arbitrary-precision rational arithmetic; all
randomness comes from a seeded, package-owned stream, so every run is
reproducible bit for bit.
"""

from .counting import (
    EnergyReport,
    WedgeHistogram,
    distinct_areas,
    distinct_areas_bipartite,
    distinct_dot_products,
    energy,
    quadruple_count_naive,
    wedge_histogram,
)
from .errors import (
    CapExceededError,
    CoincidentLinesError,
    CollinearPairError,
    DuplicateEntryError,
    FormatError,
    GeneratorError,
    InputError,
    OriginPointError,
    ProjectionError,
    RotationExhaustedError,
    WedgeLabError,
    X1SectionError,
    X4DirectionError,
)
from .generators import GeneratorSpec, generate
from .geom import (
    Point2,
    PointSet,
    RotationRecord,
    Scalar,
    dot,
    format_scalar,
    max_collinear,
    normalize_rotation,
    perp,
    perp_set,
    pythagorean_rotations,
    scalar,
    wedge,
)
from .incidence import (
    CorrespondenceReport,
    GktReport,
    IncidenceRecord,
    PlaneRecord,
    QuadricSurface,
    RegulusResult,
    correspondence_check,
    gkt_condition_report,
    max_concurrency,
    max_coplanar,
    pairwise_intersections,
    regulus_max,
)
from .lines import (
    Line3,
    LineFamily,
    TransformLine,
    build_family,
    on_quadric_check,
    project,
    project_family,
    transform_line,
)
from .report import Report, build_report, render_report_json
from .sumproduct import (
    CsCertificate,
    RealSet,
    RepHistogram,
    cs_certificate,
    dio_solution_count,
    grid_wedge_equivalence,
    product_sumset,
    range_set,
    rep_histogram,
)

__version__ = "0.1.0"
