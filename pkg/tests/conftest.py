"""
Shared fixtures for the newtonpoly test suite.
"""

import json

import pytest
from click.testing import CliRunner

from newtonpoly.lattice.geometry import LatticePolygon, standard_simplex


def make_runner() -> CliRunner:
    """CliRunner keeping stderr out of ``result.stdout`` on every click version."""
    try:
        return CliRunner(mix_stderr=False)
    except TypeError:
        return CliRunner()


@pytest.fixture
def runner():
    return make_runner()


@pytest.fixture
def simplex():
    return standard_simplex(1)


@pytest.fixture
def quartic():
    """4*Sigma, the Newton polygon of a generic plane quartic."""
    return standard_simplex(4)


@pytest.fixture
def square():
    """[0,3]^2, maximal with interior hull [1,2]^2."""
    return LatticePolygon(((0, 0), (3, 0), (3, 3), (0, 3)))


@pytest.fixture
def pruned_quintic():
    """5*Sigma with two corners cut, not maximal."""
    return LatticePolygon(((0, 0), (3, 0), (3, 2), (2, 3), (0, 3)))


@pytest.fixture
def polygon_file(tmp_path):
    """Factory writing a polygon JSON file and returning its path as a string."""

    def write(vertices, name="polygon.json"):
        path = tmp_path / name
        path.write_text(json.dumps({"vertices": [list(v) for v in vertices]}))
        return str(path)

    return write
