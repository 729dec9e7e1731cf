"""Weyl-basis gamma matrices and the 16-element basis of Cl(1,3)."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import reduce
from itertools import combinations

import numpy as np

from .numerics import I2, I4, O2

SIGMA1 = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA2 = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA3 = np.array([[1, 0], [0, -1]], dtype=complex)
PAULI = (SIGMA1, SIGMA2, SIGMA3)

#: Minkowski metric, signature (+, -, -, -).
ETA = np.diag([1.0, -1.0, -1.0, -1.0])

GRADE_NAMES = ("scalar", "vector", "tensor", "axial vector", "pseudo-scalar")


@dataclass(frozen=True)
class GammaSet:
    """The four Weyl-basis gamma matrices, gamma^5 and the metric."""

    gamma: tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]
    gamma5: np.ndarray
    eta: np.ndarray = field(default_factory=ETA.copy)

    @property
    def gamma0(self) -> np.ndarray:
        return self.gamma[0]

    @property
    def gamma1(self) -> np.ndarray:
        return self.gamma[1]

    @property
    def gamma2(self) -> np.ndarray:
        return self.gamma[2]

    @property
    def gamma3(self) -> np.ndarray:
        return self.gamma[3]

    def stacked(self) -> np.ndarray:
        """Upper-index gammas as one (4, 4, 4) array."""
        return np.stack(self.gamma)

    def stacked_lower(self) -> np.ndarray:
        """Lower-index gammas as one (4, 4, 4) array."""
        return np.stack([lower_index(self, a) for a in range(4)])


def _readonly(m: np.ndarray) -> np.ndarray:
    m.setflags(write=False)
    return m


def build_gamma_set() -> GammaSet:
    """Build the Weyl-basis gamma matrices.

    gamma^0 has identity off-diagonal blocks, gamma^k (k = 1, 2, 3) has
    ``sigma_k`` top-right and ``-sigma_k`` bottom-left, and
    gamma^5 = i gamma^0 gamma^1 gamma^2 gamma^3.
    """
    g0 = np.block([[O2, I2], [I2, O2]])
    gk = [np.block([[O2, s], [-s, O2]]) for s in PAULI]
    gammas = tuple(_readonly(g) for g in (g0, *gk))
    g5 = _readonly(1j * gammas[0] @ gammas[1] @ gammas[2] @ gammas[3])
    eta = ETA.copy()
    eta.setflags(write=False)
    return GammaSet(gamma=gammas, gamma5=g5, eta=eta)


def anticommutator(a, b) -> np.ndarray:
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    return a @ b + b @ a


def lower_index(gs: GammaSet, a: int) -> np.ndarray:
    """gamma_a = eta_ab gamma^b (the metric is diagonal)."""
    if a not in (0, 1, 2, 3):
        raise IndexError(f"spacetime index must be 0..3, got {a!r}")
    return gs.eta[a, a] * gs.gamma[a]


@dataclass(frozen=True)
class BasisElement:
    label: str
    grade: int
    matrix: np.ndarray


@dataclass(frozen=True)
class CliffordBasis:
    elements: tuple[BasisElement, ...]

    def grade_counts(self) -> tuple[int, ...]:
        return tuple(sum(1 for e in self.elements if e.grade == g) for g in range(5))

    def of_grade(self, grade: int) -> list[BasisElement]:
        return [e for e in self.elements if e.grade == grade]

    def matrices(self) -> np.ndarray:
        return np.stack([e.matrix for e in self.elements])

    def rank(self, tol: float = 1e-10) -> int:
        """Rank of the elements flattened to 16-component complex vectors."""
        flat = self.matrices().reshape(len(self.elements), -1)
        sv = np.linalg.svd(flat, compute_uv=False)
        return int(np.sum(sv > tol * max(1.0, sv[0])))


def build_basis16(gs: GammaSet) -> CliffordBasis:
    """Products of strictly increasing gamma indices, grades 0 through 4.

    The grade-4 element is kept as gamma^0 gamma^1 gamma^2 gamma^3, which
    equals -i gamma^5.
    """
    elements = []
    for grade in range(5):
        for idx in combinations(range(4), grade):
            label = "1" if not idx else "g" + "".join(str(i) for i in idx)
            mat = reduce(np.matmul, (gs.gamma[i] for i in idx), I4.copy())
            elements.append(BasisElement(label, grade, _readonly(np.asarray(mat, dtype=complex))))
    return CliffordBasis(tuple(elements))


def clifford_residuals(gs: GammaSet) -> dict[tuple[int, int], float]:
    """max|{g^a, g^b} - 2 eta^ab 1| for every ordered pair (a, b)."""
    out = {}
    for a in range(4):
        for b in range(4):
            d = anticommutator(gs.gamma[a], gs.gamma[b]) - 2 * gs.eta[a, b] * I4
            out[(a, b)] = float(np.max(np.abs(d)))
    return out
