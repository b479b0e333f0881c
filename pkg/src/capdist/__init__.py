"""capdist: exact water-capacity statistics on {1,2}-compositions.

Enumerators, statistics, recurrences, closed forms, generating functions,
and executable bijections for the capacity (trapped water) distribution on
compositions with parts 1 and 2, plus a verifier that cross-checks every
result along independent routes.
"""

from .algebra import ONE, P, Q, TriPoly, XSeries, Y, ZERO, rational_series
from .bijections import (
    PairingStep,
    RunCode,
    decode_capacity_runs,
    encode_capacity_runs,
    extend_ending_one,
    extend_even_interior,
    marked_counts,
    missed_composition,
    pairing_sign_sum,
    sign_pairing,
)
from .closedforms import (
    capacity_zero_count,
    count_by_capacity,
    count_by_capacity_ones,
    double_sum_identity,
    fib,
    fib_poly_convolution,
    fib_polynomial,
    lucas,
    marked_convolution,
    sign_balance,
    total_capacity,
    total_capacity_colored,
)
from .compositions import (
    Composition,
    Stats,
    capacity,
    ends_in_one,
    ends_in_two_one,
    even_interior,
    iter_compositions_12,
    iter_even_interior,
    last_twos_adjacent,
    one_between_last_twos,
    ones_between_outer_twos,
    outer_twos_separated,
    profile,
    render_bargraph,
)
from .genfunc import MODELS, GfModel
from .recurrences import (
    capacity_dist_rec3,
    capacity_dist_rec4,
    even_interior_rec1,
    even_interior_rec2,
    joint_dist_seq,
)
from .verifier import SUITE_NAMES, Bounds, VerifyReport, run_all, run_suite

__version__ = "0.1.0"
