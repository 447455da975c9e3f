"""
Описание моделей данных геодезических сетей.
"""

from typing import Any

import numpy as np
from pydantic import BaseModel, Field, validator

from settings import KERNEL_TOL
from surface_geometry.base import BaseSurface
from surface_geometry.models import GeodesicSegment

# допуск на симметричность оператора Якоби
SYMMETRY_TOL = 1e-8


class NetVarifold(BaseModel):
    """
    Целочисленный 1-варифолд, порожденный вложением сети.

    .. code-block::

        NetVarifold(
            surface=RoundSphere(),
            edges=[(0, 1), (0, 8), ...],
            segments=[GeodesicSegment(...), ...],
            multiplicities=[1, 1, ...],
            total_mass=6.283185307179586,
            singular_vertices=[],
            singular_points=np.zeros((0, 3)),
        )
    """

    surface: BaseSurface
    edges: list[tuple[int, int]]
    segments: list[GeodesicSegment]
    multiplicities: list[int]
    total_mass: float
    singular_vertices: list[int]
    singular_points: np.ndarray

    class Config:
        arbitrary_types_allowed = True
        allow_mutation = False

    @validator("multiplicities")
    def _aligned(cls, value: list[int], values: dict[str, Any]) -> list[int]:  # pylint: disable=no-self-argument
        if len(value) != len(values.get("segments", [])):
            raise ValueError("one multiplicity per segment is required")
        if any(item <= 0 for item in value):
            raise ValueError("multiplicities must be positive")
        return value


class StationarityReport(BaseModel):
    """
    Невязка стационарности r(u) = −Σ ω τ в вершинах и ее калиброванная форма.

    .. code-block::

        StationarityReport(
            vectors=np.zeros((9, 3)),
            max_norm=2.2e-16,
            gauged=np.zeros(9),
            gauged_max=1.1e-16,
        )
    """

    vectors: np.ndarray
    max_norm: float
    gauged: np.ndarray
    gauged_max: float

    class Config:
        arbitrary_types_allowed = True
        allow_mutation = False


class JacobiOperator(BaseModel):
    """
    Симметричная матрица оператора Якоби на калиброванных координатах.

    ``dofs`` перечисляет координаты в виде пар (вершина, номер направления),
    ``deviation`` хранит расхождение с разностной сборкой.

    .. code-block::

        JacobiOperator(
            matrix=np.array([[...]]),
            dofs=[(0, 0), (1, 0), ...],
            kernel_tol=1e-07,
            deviation=3.4e-10,
        )
    """

    matrix: np.ndarray
    dofs: list[tuple[int, int]] = []
    kernel_tol: float = KERNEL_TOL
    deviation: float = 0.0

    class Config:
        arbitrary_types_allowed = True
        allow_mutation = False

    @validator("matrix")
    def _symmetric(cls, value: np.ndarray) -> np.ndarray:  # pylint: disable=no-self-argument
        value = np.asarray(value, dtype=float)
        if value.ndim != 2 or value.shape[0] != value.shape[1]:
            raise ValueError("Jacobi operator must be a square matrix")
        if value.size and np.max(np.abs(value - value.T)) >= SYMMETRY_TOL:
            raise ValueError("Jacobi operator must be symmetric")
        return value


class MassGradientCheck(BaseModel):
    """
    Сравнение ⟨g, q⟩ для калиброванной невязки g с разностной производной массы вдоль q.

    .. code-block::

        MassGradientCheck(analytic=0.01234, numeric=0.01234, deviation=2.1e-11)
    """

    analytic: float
    numeric: float
    deviation: float

    class Config:
        allow_mutation = False


class NetReport(BaseModel):
    """
    Выгрузка сети для отчета.

    .. code-block::

        NetReport(
            surface={"kind": "RoundSphere", "params": []},
            graph={"vertices": 9, "edges": [[0, 1], ...], "weights": [1, ...]},
            vertex_positions=[[1.0, 0.0, 0.0], ...],
            mass=6.283185307179586,
            residual=1.2e-16,
            kernel_dim=2,
        )
    """

    surface: dict[str, Any]
    graph: dict[str, Any]
    vertex_positions: list[list[float]]
    mass: float
    residual: float
    kernel_dim: int = Field(ge=0)
