"""
Тестирование перестроения варифолда в подразбитое вложение.
"""

import numpy as np
import pytest
from scipy.spatial.distance import cdist

from errors import InvalidInput, MassNotPreserved, QTooSmall
from geodesic_nets.embedding import net_varifold
from geodesic_nets.presets import preset_net, theta_net
from geodesic_nets.stratify import regular_arcs, stratify
from surface_geometry.geodesics import point_along
from surface_geometry.surfaces import RoundSphere

SPHERE = RoundSphere()


class TestStratify:
    """
    Тестирование функции stratify.
    """

    def test_equator(self):
        graph, embedding = stratify(net_varifold(preset_net(SPHERE, "equator", 3)), 8)
        assert len(graph.vertices) == 9
        assert graph.is_subdivided(8)
        assert np.allclose([segment.length for segment in embedding.segments], 2 * np.pi / 9, atol=1e-10)

    def test_theta(self):
        graph, embedding = stratify(net_varifold(theta_net(SPHERE, 1)), 4)
        assert len(graph.vertices) == 14
        assert len(graph.edges) == 15
        assert graph.is_subdivided(4)
        assert embedding.mass == pytest.approx(3 * np.pi, abs=1e-9)
        assert embedding.is_balanced()
        assert np.allclose(embedding.positions[:2], [[0, 0, 1], [0, 0, -1]], atol=1e-12)

    def test_singular_points(self):
        points, singular, arcs = regular_arcs(net_varifold(theta_net(SPHERE, 3)))
        assert len(singular) == 2
        assert len(arcs) == 3
        assert all(not arc.closed and arc.length == pytest.approx(np.pi) for arc in arcs)
        assert {tuple(np.round(points[index], 12)) for index in singular} == {(0, 0, 1), (0, 0, -1)}

    def test_weights_preserved(self):
        graph, embedding = stratify(net_varifold(preset_net(SPHERE, "equator", 3, weight=3)), 4)
        assert set(graph.weights()) == {3}
        assert embedding.mass == pytest.approx(6 * np.pi, abs=1e-9)

    def test_idempotent(self):
        first_graph, first = stratify(net_varifold(theta_net(SPHERE, 2)), 4)
        second_graph, second = stratify(net_varifold(first), 4)
        assert first_graph.is_isomorphic(second_graph)
        assert np.max(cdist(first.positions, second.positions).min(axis=1)) < 1e-9

    def test_q_too_small(self):
        with pytest.raises(QTooSmall):
            stratify(net_varifold(theta_net(SPHERE, 4)), 2)

    def test_q_not_positive(self):
        with pytest.raises(InvalidInput):
            stratify(net_varifold(preset_net(SPHERE, "equator", 3)), 0)

    def test_mass_not_preserved(self, mocker):
        def lifted(surface, segment, arclength):
            point = point_along(surface, segment, arclength) + np.array([0.0, 0.0, 0.05])
            return point / np.linalg.norm(point)

        mocker.patch("geodesic_nets.stratify.point_along", side_effect=lifted)
        with pytest.raises(MassNotPreserved) as error:
            stratify(net_varifold(preset_net(SPHERE, "equator", 3)), 8)
        assert error.value.details["mass"] < error.value.details["expected"]
