import itertools

import numpy as np
import pytest

from helicity_clifford.clifford import (
    ETA,
    SIGMA3,
    anticommutator,
    build_basis16,
    clifford_residuals,
    lower_index,
)
from helicity_clifford.numerics import I2, I4, blocks

from . import oracle


def test_weyl_gammas_match_literal_matrices(gs):
    for mine, ref in zip(gs.gamma, oracle.GAMMAS):
        assert np.array_equal(mine, ref)
    assert np.array_equal(gs.gamma5, oracle.G5)


def test_block_displays(gs):
    assert np.array_equal(blocks(gs.gamma0).tr, I2)
    assert np.array_equal(blocks(gs.gamma3).tr, SIGMA3)
    b5 = blocks(gs.gamma5)
    assert np.array_equal(b5.tl, -I2) and np.array_equal(b5.br, I2)
    assert not b5.tr.any() and not b5.bl.any()


def test_gamma5_definition(gs):
    g = gs.gamma
    assert np.array_equal(gs.gamma5, 1j * g[0] @ g[1] @ g[2] @ g[3])


def test_anticommutator_examples(gs):
    assert np.array_equal(anticommutator(gs.gamma0, gs.gamma0), 2 * I4)
    assert not anticommutator(gs.gamma1, gs.gamma2).any()
    assert np.array_equal(anticommutator(gs.gamma1, gs.gamma1), -2 * I4)


def test_clifford_relations_exact(gs):
    res = clifford_residuals(gs)
    assert len(res) == 16
    assert all(r == 0.0 for r in res.values())


def test_squares(gs):
    assert np.array_equal(gs.gamma0 @ gs.gamma0, I4)
    for a in (1, 2, 3):
        assert np.array_equal(gs.gamma[a] @ gs.gamma[a], -I4)
    assert np.array_equal(gs.gamma5 @ gs.gamma5, I4)


@pytest.mark.parametrize("a", range(4))
def test_gamma5_anticommutes(gs, a):
    assert not anticommutator(gs.gamma5, gs.gamma[a]).any()


@pytest.mark.parametrize("a, sign", [(0, 1), (1, -1), (2, -1), (3, -1)])
def test_lower_index(gs, a, sign):
    assert np.array_equal(lower_index(gs, a), sign * gs.gamma[a])


@pytest.mark.parametrize("bad", [-1, 4, 1.5])
def test_lower_index_out_of_range(gs, bad):
    with pytest.raises(IndexError):
        lower_index(gs, bad)


def test_eta_signature(gs):
    assert np.array_equal(gs.eta, ETA)
    assert list(np.diag(gs.eta)) == [1, -1, -1, -1]


def test_gamma_set_is_immutable(gs):
    with pytest.raises(ValueError):
        gs.gamma0[0, 0] = 5


def test_basis16(gs):
    basis = build_basis16(gs)
    assert basis.grade_counts() == (1, 4, 6, 4, 1)
    assert np.array_equal(basis.of_grade(0)[0].matrix, I4)
    assert np.array_equal(basis.of_grade(4)[0].matrix, -1j * gs.gamma5)
    assert basis.rank(1e-10) == 16


def test_basis16_canonical_ordering(gs):
    basis = build_basis16(gs)
    tensors = basis.of_grade(2)
    for el, (i, j) in zip(tensors, itertools.combinations(range(4), 2)):
        assert el.label == f"g{i}{j}"
        assert np.array_equal(el.matrix, gs.gamma[i] @ gs.gamma[j])


def test_basis_trace_orthogonality(gs):
    # tr(A^-1 B) = 4 delta_AB for products of gammas: an independent rank check.
    mats = build_basis16(gs).matrices()
    gram = np.array([[np.trace(np.linalg.inv(A) @ B) for B in mats] for A in mats])
    assert np.allclose(gram, 4 * np.eye(16), atol=1e-12)


def test_rank_detects_dependence(gs):
    from helicity_clifford.clifford import BasisElement, CliffordBasis

    basis = build_basis16(gs)
    dup = CliffordBasis(basis.elements[:15] + (BasisElement("dup", 0, 2 * I4),))
    assert dup.rank() == 15
