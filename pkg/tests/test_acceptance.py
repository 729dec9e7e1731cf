"""Acceptance suite: one PASS/FAIL line per criterion, then the assertion.

Run with ``pytest tests/test_acceptance.py -v``; the summary lines are printed
regardless of output capture.
"""

import math

import numpy as np
import pytest

from helicity_clifford.bilinears import (
    NotProportional,
    block_form_J,
    block_form_K,
    expanded_slash_pair,
    extract_helicity,
    slash_pair,
    slash_pairs,
)
from helicity_clifford.cli import EXIT_FAIL, EXIT_OK, EXIT_USAGE, main
from helicity_clifford.clifford import build_basis16, clifford_residuals
from helicity_clifford.graphene import (
    PlanarWavevector,
    dirac_cone_eigenvalues,
    hamiltonian,
    prefactor_ratio,
    trace_reconstruction,
)
from helicity_clifford.numerics import I2, I4, max_diff
from helicity_clifford.spinors import (
    UnitMomentum,
    charge_conj2,
    charge_conj4,
    charge_conj4_blocks,
    phi_R,
    random_spinors,
)
from helicity_clifford.theorem import phi_grid, projector_identities, sweep_main_result, theta_grid

SEED = 1
N_SPINORS = 1000


@pytest.fixture
def report(capsys):
    def emit(n, ok, detail):
        with capsys.disabled():
            print(f"\n[criterion {n}] {'PASS' if ok else 'FAIL'}: {detail}")
        return ok

    return emit


@pytest.fixture(scope="module")
def spinors():
    return random_spinors(N_SPINORS, SEED)


def test_criterion_1_gamma_algebra(gs, report):
    anti = max(clifford_residuals(gs).values())
    g5 = max_diff(gs.gamma5, np.diag([-1, -1, 1, 1]))
    basis = build_basis16(gs)
    rank = basis.rank(1e-10)
    ok = anti == 0 and g5 == 0 and rank == 16 and len(basis.elements) == 16
    report(1, ok, f"anticommutator max residual {anti:.1e}, gamma5 residual {g5:.1e}, basis rank {rank}")
    assert ok


def test_criterion_2_closed_form_oracle(gs, spinors, report):
    K, J = slash_pairs(spinors, gs)
    worst = 0.0
    for i, psi in enumerate(spinors):
        ex = expanded_slash_pair(psi)
        worst = max(worst, max_diff(K[i], ex.K_slash), max_diff(J[i], ex.J_slash))
    ok = worst <= 1e-12
    report(2, ok, f"{N_SPINORS} spinors, max entrywise difference {worst:.2e} (tol 1e-12)")
    assert ok


def test_criterion_3_block_form(gs, spinors, report):
    K, J = slash_pairs(spinors, gs)
    worst = 0.0
    for i, psi in enumerate(spinors):
        worst = max(worst, max_diff(K[i], block_form_K(psi)), max_diff(J[i], block_form_J(psi)))
    ok = worst <= 1e-12
    report(3, ok, f"{N_SPINORS} spinors, max block-form difference {worst:.2e} (tol 1e-12)")
    assert ok


def test_criterion_4_main_result(gs, report):
    res = sweep_main_result(64, 64, phi_grid(8), tol=1e-12, helicity_tol=1e-10, gs=gs)
    zero = res.delta_phi == 0
    n_fail = int(np.count_nonzero(~res.passed))
    ok = bool(res.passed.all())
    detail = (
        f"{len(res)} cases (64x64 grid, 8 delta_phi, both hands), {len(res) - n_fail} pass; "
        f"delta_phi=0 slice {int(res.passed[zero].sum())}/{int(zero.sum())}; "
        f"max eigen residual {res.eigen.max():.2e}, at delta_phi=0 {res.eigen[zero].max():.2e}"
    )
    report(4, ok, detail)
    assert ok, detail


def test_criterion_5_projectors(report):
    worst = 0.0
    completeness = 0.0
    for theta in theta_grid(64):
        for phi in phi_grid(64):
            p = UnitMomentum(theta, phi)
            worst = max(worst, *projector_identities(p, 0.0))
            r = phi_R(p)
            rc = charge_conj2(r)
            completeness = max(completeness, max_diff(np.outer(r, r.conj()) + np.outer(rc, rc.conj()), I2))
    ok = worst <= 1e-12 and completeness <= 1e-12
    report(5, ok, f"64x64 grid, projector residual {worst:.2e}, completeness residual {completeness:.2e}")
    assert ok


def test_criterion_6_conjugation(gs, spinors, report):
    rng = np.random.default_rng(SEED)
    twos = rng.normal(size=(N_SPINORS, 2)) + 1j * rng.normal(size=(N_SPINORS, 2))
    ortho = max(abs(np.vdot(v, charge_conj2(v))) for v in twos)
    square = max(max_diff(charge_conj2(charge_conj2(v)), -v) for v in twos)
    blocks = max(max_diff(charge_conj4(psi, gs), charge_conj4_blocks(psi)) for psi in spinors)
    ok = ortho <= 1e-14 and square <= 1e-14 and blocks <= 1e-14
    report(6, ok, f"<phi|phi^C> max {ortho:.2e}, C^2 + 1 residual {square:.2e}, 4-spinor block form {blocks:.2e}")
    assert ok


def test_criterion_7_graphene(report):
    rng = np.random.default_rng(SEED)
    ks = [PlanarWavevector(float(x), float(y)) for x, y in rng.uniform(-5, 5, size=(100, 2))]
    recon = np.zeros((len(ks), 8))
    eig = ratio = 0.0
    for i, k in enumerate(ks):
        H = hamiltonian(k)
        for j, dphi in enumerate(phi_grid(8)):
            recon[i, j] = max_diff(trace_reconstruction(k, float(dphi)), H)
        lo, hi = dirac_cone_eigenvalues(H)
        eig = max(eig, abs(lo + k.norm), abs(hi - k.norm))
        ratio = max(ratio, abs(prefactor_ratio(k) - k.norm**2) / k.norm**2)
    ok = recon.max() <= 1e-12 and eig <= 1e-12 and ratio <= 4 * np.finfo(float).eps
    detail = (
        f"100 wavevectors x 8 delta_phi, reconstruction max residual {recon.max():.2e} "
        f"(delta_phi=0 column {recon[:, 0].max():.2e}), {int((recon <= 1e-12).sum())}/800 within tol; "
        f"eigenvalue residual {eig:.2e}; prefactor ratio vs |k|^2 rel. diff {ratio:.1e}"
    )
    report(7, ok, detail)
    assert ok, detail


def test_criterion_8_counterexample(gs, report):
    psi = np.array([1, 0, 1, 0], dtype=complex) / math.sqrt(2)
    try:
        extract_helicity(slash_pair(psi, gs))
        ok, detail = False, "mixed state was accepted"
    except NotProportional as exc:
        r = exc.result.residual
        ok, detail = r > 0.1, f"NotProportional raised, best h {exc.result.h:.3g}, residual {r:.3g}"
    report(8, ok, detail)
    assert ok


def test_criterion_9_cli(tmp_path, report, capsys):
    args = ["verify", "all", "--grid-theta", "16", "--grid-phi", "16", "--delta-phi-samples", "1",
            "--samples", "200"]
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    codes = [main(args + ["--out", str(a)]), main(args + ["--out", str(b)])]
    identical = a.read_bytes() == b.read_bytes()
    contract = {
        "ok": main(["verify", "clifford", "--out", str(tmp_path / "c.json")]) == EXIT_OK,
        "fail": main(["compute", "--spinor", "1,0,1,0"]) == EXIT_FAIL,
        "usage": main(["verify", "clifford", "--grid-phi", "0"]) == EXIT_USAGE,
        "parse": main(["compute", "--spinor", "1,0,0"]) == EXIT_USAGE,
    }
    capsys.readouterr()
    ok = identical and codes == [EXIT_OK, EXIT_OK] and all(contract.values())
    report(9, ok, f"byte-identical JSON {identical}, run exit codes {codes}, contract {contract}")
    assert ok
