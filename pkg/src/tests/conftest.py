"""
Общие фикстуры поверхностей.
"""

import pytest

from surface_geometry.ellipsoid import tune_ellipsoid
from surface_geometry.surfaces import Ellipsoid


@pytest.fixture(scope="session")
def tuned_ellipsoid():
    """
    Эллипсоид с длинами главных геодезических (2π, 2π + 0.05, 2π + 0.1).
    """

    return Ellipsoid(*tune_ellipsoid(0.05).coefficients)
