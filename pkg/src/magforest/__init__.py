"""Nearest-magnet maps on simple closed curves and the escape paths they give."""

from .classify import DilateWitness, IsoClassPartition, is_connected, is_dilate, is_isomorphic, partition_corpus
from .errors import (
    DegenerateMagnetError,
    DimensionError,
    LocationError,
    MagnetError,
    OriginError,
    ParseError,
    SamplingError,
    TopologyError,
)
from .escape import (
    ConvergenceReport,
    EscapePlan,
    StrategyStats,
    analytic_escape,
    convergence_study,
    escape_path,
    monte_carlo_escape,
)
from .geometry import (
    Circle,
    Curve,
    Location,
    MagnetSet,
    Polygon,
    SampledLoop,
    TopologyReport,
    Vector,
    dot,
    norm,
    point_location,
    sample_boundary,
    validate_topology,
)
from .index import NearestResult, SpatialIndex, build_index, epsilon_field_members, nearest_magnet
from .magnetization import (
    MagnetizedCurve,
    Magnetization,
    StrictlyIsolated,
    TiedIsolation,
    isolating_radius,
    magnetize,
    resample_uniqueness,
    verify_isolation,
)
from .scene import Scene, load_scene, parse_scene

__version__ = "0.1.0"
