"""
JSON and JSON-lines codecs for polygons, loops, corpora and polynomials.
"""

import json
import re
from pathlib import Path
from typing import Any, Iterable, List, Union

from newtonpoly.core.errors import InvalidInputError
from newtonpoly.lattice.geometry import LatticePolygon, as_point
from newtonpoly.loops.legal_loops import LegalLoop
from newtonpoly.nondegeneracy.laurent import LaurentPolynomial, parse_polynomial

PathLike = Union[str, Path]


def polygon_from_json(data: Any) -> LatticePolygon:
    """
    Parse ``{"vertices": [[x, y], ...]}`` (or a bare vertex list) in any order and orientation.

    Raises:
        InvalidInputError: On missing keys, non-integer coordinates or
            vertices that do not span a strictly convex polygon
    """
    vertices = data.get("vertices") if isinstance(data, dict) else data
    if not isinstance(vertices, list):
        raise InvalidInputError(f"Expected a vertex list, got {data!r}")
    points = []
    for vertex in vertices:
        if not isinstance(vertex, (list, tuple)):
            raise InvalidInputError(f"Vertex {vertex!r} is not a coordinate pair")
        points.append(as_point(tuple(vertex)))
    return LatticePolygon.from_vertices(points)


def polygon_to_json(polygon: LatticePolygon) -> dict:
    return polygon.to_json()


def loop_from_json(data: Any) -> LegalLoop:
    vectors = data.get("vectors") if isinstance(data, dict) else data
    if not isinstance(vectors, list):
        raise InvalidInputError(f"Expected a vector list, got {data!r}")
    points = []
    for vector in vectors:
        if not isinstance(vector, (list, tuple)):
            raise InvalidInputError(f"Vector {vector!r} is not a coordinate pair")
        points.append(as_point(tuple(vector)))
    return LegalLoop(tuple(points))


def load_json(path: PathLike) -> Any:
    path = Path(path)
    if not path.exists():
        raise InvalidInputError(f"File not found: {path}")
    try:
        with open(path, "r") as f:
            return json.load(f)
    except json.JSONDecodeError as e:
        raise InvalidInputError(f"{path} is not valid JSON: {e}") from e


def load_polygon(path: PathLike) -> LatticePolygon:
    return polygon_from_json(load_json(path))


def write_corpus(polygons: Iterable[LatticePolygon], path: PathLike) -> int:
    """Write one polygon per line; returns the line count."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    count = 0
    with open(path, "w") as f:
        for polygon in polygons:
            f.write(json.dumps(polygon.to_json()) + "\n")
            count += 1
    return count


def read_corpus(path: PathLike) -> List[LatticePolygon]:
    polygons = []
    with open(path, "r") as f:
        for number, line in enumerate(f, start=1):
            if not line.strip():
                continue
            try:
                polygons.append(polygon_from_json(json.loads(line)))
            except json.JSONDecodeError as e:
                raise InvalidInputError(f"{path}:{number}: {e}") from e
    return polygons


def read_polynomial(source: str, max_prime: int = 1 << 16) -> LaurentPolynomial:
    """Parse a polynomial literal, or the contents of the file it names."""
    if re.match(r"\s*p\s*=", source):
        return parse_polynomial(source, max_prime=max_prime)
    path = Path(source)
    if not path.is_file():
        raise InvalidInputError(f"{source!r} is neither a polynomial literal nor a file")
    return parse_polynomial(path.read_text(), max_prime=max_prime)
