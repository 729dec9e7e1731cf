"""Command-line verification harness.

    helicity-clifford verify <suite> [--grid-theta N] [--grid-phi N]
        [--delta-phi-samples N] [--seed S] [--tolerance T]
        [--format json|csv] [--out PATH]
    helicity-clifford compute --spinor "a,b,c,d" [--format json]

Exit codes: 0 all cases pass, 1 some case fails, 2 bad configuration or input.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import re
import sys
from dataclasses import asdict, dataclass
from typing import Any

import numpy as np

from . import __version__
from ._backend import BACKEND
from .bilinears import (
    HELICITY_TOL,
    NotProportional,
    ZeroCurrent,
    bilinear_set,
    block_form_J,
    block_form_K,
    expanded_slash_pair,
    extract_helicity,
    slash_pair,
    slash_pairs,
)
from .clifford import build_basis16, build_gamma_set, clifford_residuals
from .graphene import (
    GrapheneParams,
    PlanarWavevector,
    dirac_cone_eigenvalues,
    hamiltonian,
    planar_to_unit_momentum,
    prefactor_ratio,
    restricted_K,
    right_handed_sign,
    sandwiched,
    trace_reconstruction,
    trace_reconstruction_literal,
    two_d_helicity,
)
from .numerics import I4, block_partial_trace, blocks, max_diff
from .spinors import charge_conj2, charge_conj4, charge_conj4_blocks, random_spinors
from .theorem import phi_grid, sweep_main_result

GRAPHENE_WAVEVECTORS = 100

SUITES = ("clifford", "bilinears", "theorem", "graphene", "all")

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class ParseError(ValueError):
    def __init__(self, token: str, position: int, reason: str = "not a complex literal"):
        super().__init__(f"{reason}: {token!r} at position {position}")
        self.token = token
        self.position = position


class WrongArity(ValueError):
    pass


@dataclass(frozen=True)
class RunConfig:
    suite: str = "all"
    grid_theta: int = 64
    grid_phi: int = 64
    delta_phi_samples: int = 8
    seed: int = 1
    tolerance: float = HELICITY_TOL
    samples: int = 1000
    output_format: str = "json"
    output_path: str | None = None

    def __post_init__(self):
        if self.suite not in SUITES:
            raise ValueError(f"unknown suite {self.suite!r}")
        if self.grid_theta < 2 or self.grid_phi < 2:
            raise ValueError("grid sizes must be >= 2")
        if self.delta_phi_samples < 1 or self.samples < 1:
            raise ValueError("sample counts must be positive")
        if not (self.tolerance > 0 and math.isfinite(self.tolerance)):
            raise ValueError("tolerance must be a positive number")
        if self.output_format not in ("json", "csv"):
            raise ValueError(f"unknown format {self.output_format!r}")


# ---------------------------------------------------------------- parsing

_REAL = r"[+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?"
_COMPLEX_RE = re.compile(
    rf"^(?:(?P<re>{_REAL})(?P<im>[+-](?:\d+\.?\d*|\.\d+)?(?:[eE][+-]?\d+)?)i"
    rf"|(?P<imonly>{_REAL}|[+-]?)i"
    rf"|(?P<reonly>{_REAL}))$"
)


def _parse_complex(token: str, position: int) -> complex:
    t = token.replace(" ", "").replace("\t", "")
    m = _COMPLEX_RE.match(t)
    if not t or m is None:
        raise ParseError(token, position)

    def coeff(s: str) -> float:
        return float(s + "1") if s in ("", "+", "-") else float(s)

    if m.group("reonly") is not None:
        return complex(float(m.group("reonly")), 0.0)
    if m.group("imonly") is not None:
        return complex(0.0, coeff(m.group("imonly")))
    return complex(float(m.group("re")), coeff(m.group("im")))


def parse_spinor(text: str) -> np.ndarray:
    """Four comma-separated complex literals (``a+bi``, ``a`` or ``bi``)."""
    parts = text.split(",")
    if len(parts) != 4:
        raise WrongArity(f"expected 4 components, got {len(parts)}")
    out = []
    pos = 0
    for part in parts:
        offset = len(part) - len(part.lstrip())
        out.append(_parse_complex(part.strip(), pos + offset))
        pos += len(part) + 1
    return np.array(out, dtype=complex)


# ---------------------------------------------------------------- suites


def _case(suite: str, name: str, passed: bool, residual: float | None = None, **extra) -> dict:
    rec: dict[str, Any] = {"suite": suite, "case": name}
    rec.update(extra)
    if residual is not None:
        rec["residual"] = float(residual)
    rec["passed"] = bool(passed)
    return rec


def _delta_phis(cfg: RunConfig) -> np.ndarray:
    return phi_grid(cfg.delta_phi_samples) if cfg.delta_phi_samples > 1 else np.zeros(1)


def suite_clifford(cfg: RunConfig) -> list[dict]:
    gs = build_gamma_set()
    tol = cfg.tolerance
    cases = []
    for (a, b), r in clifford_residuals(gs).items():
        cases.append(_case("clifford", f"anticommutator_{a}{b}", r == 0.0, r, a=a, b=b))
    g5_block = np.diag([-1, -1, 1, 1]).astype(complex)
    r = max_diff(gs.gamma5, g5_block)
    cases.append(_case("clifford", "gamma5_block_diag", r == 0.0, r))
    r = max_diff(gs.gamma5 @ gs.gamma5, I4)
    cases.append(_case("clifford", "gamma5_squared", r <= tol, r))
    r = max(max_diff(gs.gamma5 @ g + g @ gs.gamma5, 0 * I4) for g in gs.gamma)
    cases.append(_case("clifford", "gamma5_anticommutes", r <= tol, r))
    basis = build_basis16(gs)
    counts = basis.grade_counts()
    cases.append(
        _case("clifford", "grade_counts", counts == (1, 4, 6, 4, 1), None, counts=list(counts))
    )
    rank = basis.rank(1e-10)
    cases.append(_case("clifford", "basis_rank", rank == 16, None, rank=rank))
    r = max_diff(basis.of_grade(4)[0].matrix, -1j * gs.gamma5)
    cases.append(_case("clifford", "pseudoscalar_is_minus_i_gamma5", r <= tol, r))
    return cases


def suite_bilinears(cfg: RunConfig) -> list[dict]:
    gs = build_gamma_set()
    tol = cfg.tolerance
    psis = random_spinors(cfg.samples, cfg.seed)
    K, J = slash_pairs(psis, gs)
    cases = []
    for i, psi in enumerate(psis):
        ex = expanded_slash_pair(psi)
        oracle = max(max_diff(K[i], ex.K_slash), max_diff(J[i], ex.J_slash))
        block = max(max_diff(K[i], block_form_K(psi)), max_diff(J[i], block_form_J(psi)))
        b = bilinear_set(psi, gs)
        reality = max(
            abs(b.omega1.imag),
            float(np.max(np.abs(b.J.imag))),
            float(np.max(np.abs(b.K.imag))),
            float(np.max(np.abs(b.S.imag))),
            abs(b.omega2.real),
        )
        conj = max(
            abs(np.vdot(psi[:2], charge_conj2(psi[:2]))),
            abs(np.vdot(psi[2:], charge_conj2(psi[2:]))),
            max_diff(charge_conj4(psi, gs), charge_conj4_blocks(psi)),
            max_diff(charge_conj4(charge_conj4(psi, gs), gs), psi),
        )
        worst = max(oracle, block, reality, conj)
        cases.append(
            _case(
                "bilinears",
                f"spinor_{i}",
                worst <= tol,
                worst,
                oracle_residual=oracle,
                block_form_residual=block,
                reality_residual=reality,
                conjugation_residual=conj,
            )
        )
    mixed = np.array([1, 0, 1, 0], dtype=complex) / math.sqrt(2)
    try:
        res = extract_helicity(slash_pair(mixed, gs), tol)
        cases.append(_case("bilinears", "mixed_state_not_proportional", False, None, h=res.h))
    except NotProportional as exc:
        r = exc.result.residual
        cases.append(
            _case("bilinears", "mixed_state_not_proportional", r > 0.1, None, h=exc.result.h, fit_residual=r)
        )
    return cases


def suite_theorem(cfg: RunConfig) -> list[dict]:
    res = sweep_main_result(
        cfg.grid_theta,
        cfg.grid_phi,
        _delta_phis(cfg),
        tol=cfg.tolerance,
        helicity_tol=cfg.tolerance,
    )
    cases = []
    for i in range(len(res)):
        hand = "right" if res.handedness[i] > 0 else "left"
        worst = max(res.h_residual[i], res.eigen[i].max(), res.projector[i].max())
        cases.append(
            _case(
                "theorem",
                f"grid_{i}",
                res.passed[i],
                worst,
                theta=float(res.theta[i]),
                phi=float(res.phi[i]),
                delta_phi=float(res.delta_phi[i]),
                handedness=hand,
                h=float(res.h[i]),
                h_residual=float(res.h_residual[i]),
                eigen_residuals=[float(x) for x in res.eigen[i]],
                projector_residuals=[float(x) for x in res.projector[i]],
            )
        )
    return cases


def suite_graphene(cfg: RunConfig) -> list[dict]:
    gs = build_gamma_set()
    tol = cfg.tolerance
    params = GrapheneParams()
    rng = np.random.default_rng(cfg.seed)
    ks = rng.uniform(-5.0, 5.0, size=(GRAPHENE_WAVEVECTORS, 2))
    cases = []
    for i, (kx, ky) in enumerate(ks):
        k = PlanarWavevector(float(kx), float(ky))
        H = hamiltonian(k, params)
        n = k.norm
        ratio = prefactor_ratio(k)
        ratio_res = abs(ratio - n * n) / (n * n)
        lo, hi = dirac_cone_eigenvalues(H)
        eig_res = max(abs(lo + params.scale * n), abs(hi - params.scale * n))
        literal_res = max_diff(trace_reconstruction_literal(k, 0.0, params, gs) * ratio, H)
        sign = right_handed_sign(k, params)
        for dphi in _delta_phis(cfg):
            rec = trace_reconstruction(k, float(dphi), params, gs)
            recon_res = max_diff(rec, H)
            M = sandwiched(restricted_K(planar_to_unit_momentum(k), float(dphi)), gs)
            ptr_res = max_diff(block_partial_trace(M), 2 * two_d_helicity(k))
            b = blocks(M)
            offdiag = max(np.max(np.abs(b.tr)), np.max(np.abs(b.bl)))
            worst = max(recon_res, eig_res, ptr_res, literal_res, offdiag)
            cases.append(
                _case(
                    "graphene",
                    f"k_{i}_dphi_{float(dphi):.6f}",
                    worst <= tol and ratio_res <= tol,
                    worst,
                    kx=float(kx),
                    ky=float(ky),
                    delta_phi=float(dphi),
                    reconstruction_residual=recon_res,
                    eigenvalue_residual=eig_res,
                    partial_trace_residual=ptr_res,
                    literal_prefactor_residual=literal_res,
                    prefactor_ratio=ratio,
                    k_norm_squared=n * n,
                    right_handed_sign=sign,
                )
            )
    return cases


_SUITE_FUNCS = {
    "clifford": suite_clifford,
    "bilinears": suite_bilinears,
    "theorem": suite_theorem,
    "graphene": suite_graphene,
}


def run_suite(cfg: RunConfig) -> dict:
    """Run the configured suite(s) and return the report as a plain dict."""
    names = [n for n in _SUITE_FUNCS] if cfg.suite == "all" else [cfg.suite]
    cases = []
    for name in names:
        cases.extend(_SUITE_FUNCS[name](cfg))
    residuals = [c["residual"] for c in cases if "residual" in c]
    config = asdict(cfg)
    config.pop("output_path")
    return {
        "suite": cfg.suite,
        "version": __version__,
        "config": config,
        "summary": {
            "cases": len(cases),
            "passed": sum(1 for c in cases if c["passed"]),
            "max_residual": max(residuals) if residuals else 0.0,
        },
        "cases": cases,
    }


def report_ok(report: dict) -> bool:
    return report["summary"]["passed"] == report["summary"]["cases"]


# ---------------------------------------------------------------- output


def _fmt_float(x: float) -> str:
    if x != x or x in (float("inf"), float("-inf")):
        raise ValueError(f"non-finite value {x!r} in report")
    return format(x, ".17g")


def _encode(obj) -> str:
    """Compact JSON with every float written to 17 significant digits."""
    if isinstance(obj, bool) or obj is None:
        return json.dumps(obj)
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        return _fmt_float(float(obj))
    if isinstance(obj, str):
        return json.dumps(obj, ensure_ascii=False)
    if isinstance(obj, dict):
        return "{" + ", ".join(f"{json.dumps(str(k))}: {_encode(v)}" for k, v in obj.items()) + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(_encode(v) for v in obj) + "]"
    raise TypeError(f"cannot encode {type(obj).__name__}")


def to_json(report: dict) -> str:
    return _encode(report) + "\n"


def _flatten(prefix: str, value, rows: list):
    if isinstance(value, dict):
        for k, v in value.items():
            _flatten(f"{prefix}.{k}" if prefix else k, v, rows)
    elif isinstance(value, (list, tuple)):
        for i, v in enumerate(value):
            _flatten(f"{prefix}[{i}]", v, rows)
    elif isinstance(value, bool) or value is None:
        rows.append((prefix, json.dumps(value)))
    elif isinstance(value, (float, np.floating)):
        rows.append((prefix, _fmt_float(float(value))))
    else:
        rows.append((prefix, str(value)))


def to_csv(report: dict) -> str:
    """Long format: one row per (suite, case, field, value)."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["suite", "case", "field", "value"])
    head = {k: v for k, v in report.items() if k != "cases"}
    rows: list = []
    _flatten("", head, rows)
    for field, value in rows:
        w.writerow([report["suite"], "", field, value])
    for case in report["cases"]:
        rows = []
        _flatten("", {k: v for k, v in case.items() if k not in ("suite", "case")}, rows)
        for field, value in rows:
            w.writerow([case["suite"], case["case"], field, value])
    return buf.getvalue()


def _emit(text: str, path: str | None) -> None:
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------- compute


def _blocks_json(m) -> dict:
    b = blocks(m)
    return {
        "top_right": [[[z.real, z.imag] for z in row] for row in b.tr],
        "bottom_left": [[[z.real, z.imag] for z in row] for row in b.bl],
    }


def compute_command(spinor_text: str, tol: float = HELICITY_TOL) -> tuple[dict, int]:
    """Bilinears, slash blocks and helicity for one spinor; returns (payload, exit code)."""
    psi = parse_spinor(spinor_text)
    gs = build_gamma_set()
    b = bilinear_set(psi, gs)
    sp = slash_pair(psi, gs)
    payload: dict[str, Any] = {
        "spinor": [[z.real, z.imag] for z in psi],
        "bilinears": {
            "omega1": [b.omega1.real, b.omega1.imag],
            "J": [[z.real, z.imag] for z in b.J],
            "S": [[[z.real, z.imag] for z in row] for row in b.S],
            "K": [[z.real, z.imag] for z in b.K],
            "omega2": [b.omega2.real, b.omega2.imag],
        },
        "K_slash": _blocks_json(sp.K_slash),
        "J_slash": _blocks_json(sp.J_slash),
    }
    try:
        res = extract_helicity(sp, tol)
        payload["helicity"] = {"status": "ok", "h": res.h, "residual": res.residual}
        code = EXIT_OK
    except NotProportional as exc:
        payload["helicity"] = {"status": "NotProportional", "h": exc.result.h, "residual": exc.result.residual}
        code = EXIT_FAIL
    except ZeroCurrent:
        payload["helicity"] = {"status": "ZeroCurrent"}
        code = EXIT_FAIL
    return payload, code


def _compute_text(payload: dict) -> str:
    def cplx(p):
        return f"{p[0]:+.6g}{p[1]:+.6g}i"

    b = payload["bilinears"]
    lines = [
        f"psi     = ({', '.join(cplx(z) for z in payload['spinor'])})",
        f"Omega_1 = {cplx(b['omega1'])}",
        f"J^a     = ({', '.join(cplx(z) for z in b['J'])})",
        f"K_a     = ({', '.join(cplx(z) for z in b['K'])})",
        f"Omega_2 = {cplx(b['omega2'])}",
    ]
    for name in ("K_slash", "J_slash"):
        for blk in ("top_right", "bottom_left"):
            rows = payload[name][blk]
            lines.append(f"{name} {blk}: " + " | ".join(" ".join(cplx(z) for z in row) for row in rows))
    h = payload["helicity"]
    if h["status"] == "ok":
        lines.append(f"helicity h = {h['h']:+.12g} (residual {h['residual']:.3g})")
    elif h["status"] == "NotProportional":
        lines.append(f"NotProportional: best h = {h['h']:+.6g}, residual {h['residual']:.6g}")
    else:
        lines.append("ZeroCurrent: J vanishes, helicity undefined")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------- entry point


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="helicity-clifford", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("suite", choices=SUITES)
    v.add_argument("--grid-theta", type=int, default=64)
    v.add_argument("--grid-phi", type=int, default=64)
    v.add_argument("--delta-phi-samples", type=int, default=8)
    v.add_argument("--seed", type=int, default=1)
    v.add_argument("--tolerance", type=float, default=HELICITY_TOL)
    v.add_argument("--samples", type=int, default=1000, help="random spinors for the bilinears suite")
    v.add_argument("--format", choices=("json", "csv"), default="json")
    v.add_argument("--out", default=None)

    c = sub.add_parser("compute", help="bilinears and helicity for one spinor")
    c.add_argument("--spinor", required=True)
    c.add_argument("--tolerance", type=float, default=HELICITY_TOL)
    c.add_argument("--format", choices=("json", "text"), default="text")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK

    if args.command == "compute":
        try:
            payload, code = compute_command(args.spinor, args.tolerance)
        except (ParseError, WrongArity) as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_USAGE
        sys.stdout.write(to_json(payload) if args.format == "json" else _compute_text(payload))
        return code

    try:
        cfg = RunConfig(
            suite=args.suite,
            grid_theta=args.grid_theta,
            grid_phi=args.grid_phi,
            delta_phi_samples=args.delta_phi_samples,
            seed=args.seed,
            tolerance=args.tolerance,
            samples=args.samples,
            output_format=args.format,
            output_path=args.out,
        )
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    report = run_suite(cfg)
    text = to_json(report) if cfg.output_format == "json" else to_csv(report)
    try:
        _emit(text, cfg.output_path)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    s = report["summary"]
    print(
        f"{cfg.suite}: {s['passed']}/{s['cases']} passed, max residual {s['max_residual']:.3g} [{BACKEND}]",
        file=sys.stderr,
    )
    return EXIT_OK if report_ok(report) else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
