from .closed_forms import (
    CoeffTriangle,
    RationalPolynomial,
    a_triangle,
    b_triangle,
    cp_empty,
    cp_pair,
    cp_single,
    cp_single_by_split,
    cp_tail_run,
    cp_tail_run_b,
    differential_residual,
    f_polynomial,
)
from .genfunc import (
    PeakPolynomial,
    gf_coefficient,
    gf_format,
    gf_initial,
    gf_polynomial,
    gf_step,
    peak_count_polynomial,
)
from .oracle import (
    enumerate_by_insertion,
    enumerate_class,
    lift_by_new_maximum,
    oracle_count,
    oracle_table,
)
from .paths import (
    LatticePath,
    PathWeightParams,
    cp_count,
    cp_strip_last_run,
    cp_by_runs,
    enumerate_paths,
    path_steps,
    path_weight,
    w_by_enumeration,
    w_closed,
)
from .recurrences import (
    dp_count,
    dp_table,
    dp_tables,
    insertion_residuals,
    tail_recurrence_residuals,
    tail_run_recurrence,
    scale_by_doubling,
)
from .routes import closed_form_count, count_by_method
