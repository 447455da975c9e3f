"""
Тестирование вложений сетей, варифолдов и невязки стационарности.
"""

import numpy as np
import pytest

from errors import ImmersionViolated, SegmentsOverlap
from geodesic_nets.embedding import NetEmbedding, net_varifold
from geodesic_nets.graph import GraphStructure
from geodesic_nets.presets import preset_net, theta_net
from geodesic_nets.stationarity import mass_gradient_check, stationarity_residual
from surface_geometry.surfaces import RoundSphere

SPHERE = RoundSphere()


def rotation_z(angle):
    return np.array([[np.cos(angle), -np.sin(angle), 0.0], [np.sin(angle), np.cos(angle), 0.0], [0.0, 0.0, 1.0]])


@pytest.fixture
def tilted_theta():
    net = theta_net(SPHERE, 1)
    positions = np.array(net.positions)
    positions[2] = rotation_z(0.1) @ positions[2]
    return NetEmbedding(net.graph, SPHERE, positions)


class TestNetVarifold:
    """
    Тестирование варифолда сети.
    """

    def test_equator(self):
        varifold = net_varifold(preset_net(SPHERE, "equator", 8))
        assert varifold.total_mass == pytest.approx(2 * np.pi, abs=1e-9)
        assert varifold.singular_vertices == []
        assert len(varifold.segments) == 9

    def test_weight_linearity(self):
        varifold = net_varifold(preset_net(SPHERE, "equator", 8, weight=2))
        assert varifold.total_mass == pytest.approx(4 * np.pi, abs=1e-9)
        assert set(varifold.multiplicities) == {2}

    def test_theta(self):
        varifold = net_varifold(theta_net(SPHERE, 4))
        assert varifold.total_mass == pytest.approx(3 * np.pi, abs=1e-9)
        assert varifold.singular_vertices == [0, 1]
        assert np.allclose(varifold.singular_points, [[0, 0, 1], [0, 0, -1]], atol=1e-15)

    def test_balanced(self):
        assert preset_net(SPHERE, "equator", 8).is_balanced()
        assert theta_net(SPHERE, 4).is_balanced()

    def test_coinciding_vertices(self):
        graph = GraphStructure([(0, 1), (1, 2), (2, 3), (3, 0)])
        positions = [[1.0, 0, 0], [0, 1.0, 0], [1.0, 0, 0], [0, -1.0, 0]]
        with pytest.raises(ImmersionViolated) as error:
            NetEmbedding(graph, SPHERE, positions)
        assert error.value.condition == "I1"

    def test_antipodal_edge(self):
        graph = GraphStructure([(0, 1), (1, 2), (0, 2)])
        with pytest.raises(ImmersionViolated) as error:
            NetEmbedding(graph, SPHERE, [[1.0, 0, 0], [0, 1.0, 0], [-1.0, 0, 0]])
        assert error.value.condition == "I2"

    def test_crossing_segments(self):
        corners = [(0.3, 0.3), (-0.3, -0.3), (-0.3, 0.3), (0.3, -0.3)]
        positions = [SPHERE.project(np.array([x, y, 1.0])) for x, y in corners]
        graph = GraphStructure([(0, 1), (1, 2), (2, 3), (3, 0)])
        with pytest.raises(SegmentsOverlap):
            net_varifold(NetEmbedding(graph, SPHERE, positions))

    def test_report(self):
        report = preset_net(SPHERE, "equator", 3).to_report(residual=0.0, kernel_dim=2)
        assert report.graph["vertices"] == 4
        assert report.surface == {"kind": "RoundSphere", "params": []}
        assert report.mass == pytest.approx(2 * np.pi)


class TestStationarity:
    """
    Тестирование невязки стационарности и ее калиброванной формы.
    """

    def test_equator(self):
        report = stationarity_residual(preset_net(SPHERE, "equator", 8))
        assert report.max_norm < 1e-10
        assert report.gauged.shape == (9,)

    def test_theta(self):
        net = theta_net(SPHERE, 4)
        report = stationarity_residual(net)
        assert report.max_norm < 1e-10
        assert report.gauged.shape == (16,)

    def test_tilted_theta(self, tilted_theta):
        report = stationarity_residual(tilted_theta)
        longitudes = [0.1, 2 * np.pi / 3, 4 * np.pi / 3]
        tangents = np.array([[np.cos(angle), np.sin(angle), 0.0] for angle in longitudes])
        assert np.allclose(report.vectors[0], -tangents.sum(axis=0), atol=1e-10)
        assert np.linalg.norm(report.vectors[0]) == pytest.approx(np.linalg.norm(tangents.sum(axis=0)), abs=1e-10)

    def test_smooth_degree_two_vertices(self):
        net = preset_net(SPHERE, "equator", 8)
        for u in net.graph.vertices:
            first, second = (net.tangent_towards(u, v) for v in net.graph.neighbors(u))
            assert np.linalg.norm(first + second) < 1e-8

    def test_weight_homogeneity(self, tilted_theta):
        doubled = tilted_theta.with_weights_scaled(2)
        assert doubled.mass == pytest.approx(2 * tilted_theta.mass)
        assert np.allclose(stationarity_residual(doubled).vectors, 2 * stationarity_residual(tilted_theta).vectors)

    @pytest.mark.parametrize("seed", [1, 2, 3])
    def test_mass_gradient(self, tilted_theta, seed):
        direction = np.random.default_rng(seed).normal(size=tilted_theta.dimension)
        check = mass_gradient_check(tilted_theta, direction)
        assert check.deviation < 1e-6
        assert abs(check.analytic) > 1e-3
