"""Exact return times and the mean return-time identity on finite systems."""

from .dynamics import (
    OrbitInfo,
    Transformation,
    cat_map_system,
    cycle_system,
    generate,
    identity,
    invariant_closure,
    is_ergodic,
    iterate_set,
    make_transformation,
    orbit,
    random_system,
)
from .errors import *  # noqa: F401,F403
from .iet import IET, Compilation, IntervalSet, compile, induced_iet, interval_set, iet_apply, make_iet, rotation
from .measure import (
    FiniteMeasureSpace,
    PointSet,
    Rational,
    complement,
    difference,
    intersect,
    make_space,
    measure,
    parse_rational,
    point_set,
    render_rational,
    set_algebra,
    uniform_space,
    union,
)
from .recurrence import (
    INFINITE,
    PoincareReport,
    SeriesReport,
    Tower,
    TowerColumn,
    VerificationReport,
    disjoint_decomposition,
    induced_map,
    kac_check,
    kakutani_tower,
    poincare_check,
    return_integral,
    return_time,
    return_time_distribution,
    return_times,
    series_terms,
)

__version__ = "0.1.0"
