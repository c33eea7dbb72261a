from .peaks import (
    circular_peak_set,
    feasible,
    is_feasible,
    peak_mask,
    peak_values,
    reduce_subsequence,
    run_decomposition,
    runs_of,
)
from .types import (
    CountTable,
    PeakSet,
    Permutation,
    Run,
    RunDecomposition,
    as_elements,
    elements_to_mask,
    mask_to_elements,
)
