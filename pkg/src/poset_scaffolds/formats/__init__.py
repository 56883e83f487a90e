from .modules import (
    format_module_rep,
    format_qr_complex,
    parse_module_rep,
    parse_qr_complex,
    read_module_rep,
    read_qr_complex,
)
from .posets import format_hasse, format_interval, parse_hasse, parse_interval, read_ambient, read_hasse, read_interval
from .results import (
    MatrixResult,
    format_colimit,
    format_grank,
    format_limit,
    format_points,
    format_scaffold,
    parse_grank,
    parse_matrix_result,
    parse_points,
    parse_scaffold,
    read_scaffold,
)
from .text import format_element, write_text
