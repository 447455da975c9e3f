"""
Тестирование оператора Якоби сети и размерности его ядра.
"""

import numpy as np
import pytest

from errors import AssemblyMismatch, NotStationary
from geodesic_nets.embedding import NetEmbedding
from geodesic_nets.jacobi import edge_hessian, jacobi_operator, kernel_dimension, numeric_hessian
from geodesic_nets.models import JacobiOperator
from geodesic_nets.presets import preset_net, theta_net
from surface_geometry.geodesics import geodesic_between
from surface_geometry.surfaces import FlatRect, RoundSphere

SPHERE = RoundSphere()


class TestEdgeHessian:
    """
    Тестирование второй вариации длины отрезка.
    """

    @pytest.mark.parametrize("angle", [0.3, 1.0, 2.0])
    def test_sphere(self, angle):
        segment = geodesic_between(SPHERE, np.array([1.0, 0, 0]), np.array([np.cos(angle), np.sin(angle), 0]))
        cot, csc = 1 / np.tan(angle), 1 / np.sin(angle)
        assert np.allclose(edge_hessian(SPHERE, segment), [[cot, -csc], [-csc, cot]], atol=1e-10)

    def test_flat(self):
        surface = FlatRect(4.0, 4.0)
        segment = geodesic_between(surface, np.array([0.0, 0.0]), np.array([0.6, 0.8]))
        assert np.allclose(edge_hessian(surface, segment), [[1.0, -1.0], [-1.0, 1.0]], atol=1e-10)


class TestJacobiOperator:
    """
    Тестирование сборки оператора Якоби.
    """

    def test_great_circle(self):
        operator = jacobi_operator(preset_net(SPHERE, "equator", 8))
        assert np.max(np.abs(operator.matrix - operator.matrix.T)) < 1e-8
        assert operator.deviation < 1e-6
        assert kernel_dimension(operator) == 2

    def test_mass_differences(self):
        net = preset_net(SPHERE, "equator", 8)
        assert np.max(np.abs(jacobi_operator(net, verify=False).matrix - numeric_hessian(net, "mass"))) < 1e-6

    def test_theta(self):
        net = theta_net(SPHERE, 4)
        operator = jacobi_operator(net)
        assert operator.matrix.shape == (16, 16)
        assert kernel_dimension(operator) == 3
        assert kernel_dimension(jacobi_operator(net.pinned_at([0, 1]))) == 1

    def test_weight_homogeneity(self):
        single = jacobi_operator(preset_net(SPHERE, "equator", 8))
        double = jacobi_operator(preset_net(SPHERE, "equator", 8, weight=2))
        assert np.allclose(double.matrix, 2 * single.matrix, atol=1e-12)
        assert kernel_dimension(double) == kernel_dimension(single)

    def test_not_stationary(self):
        net = theta_net(SPHERE, 1)
        positions = np.array(net.positions)
        positions[0] = SPHERE.project(positions[0] + np.array([0.05, 0.0, 0.0]))
        with pytest.raises(NotStationary):
            jacobi_operator(NetEmbedding(net.graph, SPHERE, positions))

    def test_mismatch(self, mocker):
        net = preset_net(SPHERE, "equator", 4)
        mocker.patch("geodesic_nets.jacobi.numeric_hessian", return_value=np.zeros((5, 5)))
        with pytest.raises(AssemblyMismatch):
            jacobi_operator(net)

    def test_kernel_of_identity(self):
        assert kernel_dimension(JacobiOperator(matrix=np.eye(3))) == 0
        assert kernel_dimension(JacobiOperator(matrix=np.diag([1.0, 1e-12, -2.0]))) == 1

    def test_asymmetric_rejected(self):
        with pytest.raises(ValueError):
            JacobiOperator(matrix=np.array([[1.0, 0.5], [0.0, 1.0]]))

    @pytest.mark.slow
    @pytest.mark.parametrize("name", ["gamma1", "gamma2", "gamma3"])
    def test_tuned_ellipsoid(self, tuned_ellipsoid, name):
        operator = jacobi_operator(preset_net(tuned_ellipsoid, name, 8))
        assert operator.deviation < 1e-6
        assert kernel_dimension(operator) == 0
