"""
Матрицы Паули и функции спектрального параметра K(λ) = λ − λ⁻¹, J(λ) = λ + λ⁻¹.
"""

import numpy as np

IDENTITY = np.eye(2, dtype=complex)
SIGMA_1 = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_2 = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_3 = np.array([[1, 0], [0, -1]], dtype=complex)
PAULI = np.stack([SIGMA_1, SIGMA_2, SIGMA_3])


def check_pauli() -> None:
    """
    Проверка σ₁² = σ₂² = σ₃² = Id и σ₁σ₂ = iσ₃.

    :return:
    """

    for sigma in PAULI:
        if not np.array_equal(sigma @ sigma, IDENTITY):
            raise RuntimeError("Pauli matrix does not square to identity")
    if not np.array_equal(SIGMA_1 @ SIGMA_2, 1j * SIGMA_3):
        raise RuntimeError("Pauli product relation is broken")


def from_components(components: np.ndarray) -> np.ndarray:
    """
    Матрица Σ cₖσₖ по компонентам c (первая ось длины 3, остальные оси сохраняются в начале).

    :param components: Массив 3 × ...
    :return: Массив ... × 2 × 2
    """

    return np.einsum("k...,kij->...ij", components, PAULI)


def spectral_k(lam: complex) -> complex:
    return lam - 1 / lam


def spectral_j(lam: complex) -> complex:
    return lam + 1 / lam


check_pauli()
