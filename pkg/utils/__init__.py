"""
hyperminor - Utilities
Errores, parsing de formatos de texto, configuración y formateo
"""

from .errors import (
    HyperminorError, DimensionError, ParameterError, ValidationError,
    InfeasibleError, SizeError, RetryExhaustedError, ConfigError
)
from .validation import (
    iter_content_lines, parse_edge_list, parse_rank_lines, parse_placement,
    parse_shape, parse_rational, parse_int_list
)
from .helpers import format_rational, format_big_int, to_jsonable, dumps_json, format_edge_list
from .config import HyperminorConfig, load_config, get_config
from .logging_setup import setup_logging, verbosity_level
