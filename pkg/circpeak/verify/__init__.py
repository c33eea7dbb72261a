from .fixtures import load_golden_table, parse_table_csv
from .suite import CheckResult, SuiteReport, run_suite
