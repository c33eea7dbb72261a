from .core import CountTable, PeakSet, Permutation, RunDecomposition, circular_peak_set, is_feasible, run_decomposition
from .counting import (
    a_triangle,
    b_triangle,
    closed_form_count,
    count_by_method,
    cp_count,
    cp_empty,
    cp_pair,
    cp_single,
    cp_tail_run,
    dp_table,
    enumerate_class,
    gf_polynomial,
    oracle_count,
    w_closed,
)
from .utils import Method, RouteTracker, get_settings, override_settings
from .verify import run_suite
