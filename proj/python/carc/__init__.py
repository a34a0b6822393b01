"""Recognition and certification of circular-arc r-graphs."""

from ._core import (
    CarcError,
    Graph,
    build_model,
    catalog,
    example,
    extract_ordering,
    harness,
    normalize_model,
    random_graph,
    recognize,
    recognize_bruteforce,
    render_svg,
    row_scan,
    scan_patterns,
    validate_model,
    verify_ordering,
    verify_rcircular,
)

__all__ = [
    "CarcError",
    "Graph",
    "build_model",
    "catalog",
    "example",
    "extract_ordering",
    "harness",
    "normalize_model",
    "random_graph",
    "recognize",
    "recognize_bruteforce",
    "render_svg",
    "row_scan",
    "scan_patterns",
    "validate_model",
    "verify_ordering",
    "verify_rcircular",
]
