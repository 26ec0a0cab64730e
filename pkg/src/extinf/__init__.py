"""Sentinel-infinity weight domain for shortest-path search, with a paired
benchmark harness and a Welch's t-test gate.

The public surface re-exported here covers the extended weight domain, the
graph model with its fixtures and seeded generators, the search itself under
either infinity representation, and the timing/statistics machinery.
"""

from .bench import (
    ComparisonRow,
    TimingSample,
    improvement,
    run_comparison,
    time_dijkstra,
)
from .fixtures import (
    CATEGORIES,
    FIXTURE_NAMES,
    ROAD_ROUTES,
    UnknownFixtureError,
    fixture,
    primary_fixture_names,
)
from .generators import KINDS, GeneratorSpec, generate
from .graphs import (
    DanglingTargetWarning,
    GraphParseError,
    InvalidGraphError,
    emit_graph,
    parse_graph,
    validate,
)
from .shortest_path import (
    DOMAINS,
    IEEE_BASELINE,
    SENTINEL,
    UnknownNodeError,
    WeightDomain,
    bellman_ford,
    dijkstra,
    distances_from_jsonable,
    distances_to_jsonable,
    get_domain,
)
from .stats import (
    DegenerateSamplesError,
    SampleSet,
    WelchReport,
    mean,
    student_t_cdf,
    variance,
    welch_test,
)
from .weights import (
    INFINITY,
    ExtendedWeight,
    Ordering,
    add,
    compare,
    finite,
    format_weight,
    from_binary64,
    parse_weight,
    to_binary64,
)

__version__ = "0.1.0"
