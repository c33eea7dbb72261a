from .config import Settings, get_settings, override_settings
from .file_cache import file_cache
from .tracker import Method, RouteTracker
from .utils import format_rational, format_set, parse_permutation, parse_set_spec
