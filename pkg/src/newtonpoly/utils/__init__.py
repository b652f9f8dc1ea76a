from .serialization import (
    load_polygon,
    loop_from_json,
    polygon_from_json,
    polygon_to_json,
    read_corpus,
    read_polynomial,
    write_corpus,
)

__all__ = [
    "load_polygon",
    "loop_from_json",
    "polygon_from_json",
    "polygon_to_json",
    "read_corpus",
    "read_polynomial",
    "write_corpus",
]
