"""Acceptance suite: one test per acceptance criterion.

Each test prints a ``[PASS]``/``[FAIL]`` line (run ``pytest -s`` to see them
on success).  Oracles are independent of the code paths they certify: grid
scans use direct matrix congruence and determinants, spectra use dense
eigendecompositions.
"""

import numpy as np
import pytest

from cvrobust import (
    FULLY_ROBUST,
    FullySymmetric,
    LocalSymplectic,
    Transmittance,
    apply_local_symplectic,
    attenuate,
    boundary_band,
    build,
    classify,
    critical_transmittance,
    family_witnesses,
    gamma_coefficients,
    minimized_duan,
    ppt_witness,
    random_physical_state,
    reduced_witness,
    robustify,
    symplectic_spectrum,
)
from helpers import (
    CM_A,
    CM_B,
    CM_C,
    CM_D,
    CM_E,
    HIGHLY_SQUEEZED,
    oracle_attenuated_ppt_grid,
    random_entangled_states,
    random_states,
)


def criterion(number, description, ok, detail=""):
    status = "PASS" if ok else "FAIL"
    suffix = f"  [{detail}]" if detail and not ok else ""
    print(f"[{status}] criterion {number:2d}: {description}{suffix}")
    assert ok, f"criterion {number}: {description} {detail}"


@pytest.fixture(scope="module")
def ensemble():
    """1000 seeded random physical states shared by the scaling criteria."""
    return random_states(1000)


def test_criterion_01_figure_panel_classification():
    got = [
        classify(CM_A).cls.label,
        classify(CM_B).cls.label,
        classify(CM_C).cls.label,
        classify(CM_D).cls.label,
    ]
    want = ["FullyRobust", "Fragile", "Separable", "PartiallyRobustSymmetric"]
    criterion(
        1,
        "panel fixtures classify FullyRobust/Fragile/Separable/PartiallyRobustSymmetric",
        got == want,
        f"got {got}",
    )


def test_criterion_02_attenuation_fixture():
    att = attenuate(CM_D, (1.0, 0.40))
    entrywise = float(np.abs(att.matrix - CM_E.matrix).max())
    report = classify(att)
    ok = (
        entrywise <= 5e-3
        and report.cls.label == "PartiallyRobustAsymmetric"
        and report.cls.robust_mode == 2
    )
    criterion(
        2,
        "attenuated fixture matches 3-digit reference (<=5e-3) and classifies "
        "PartiallyRobustAsymmetric(robust_mode=2)",
        ok,
        f"max|delta|={entrywise:.2e}, class={report.cls}",
    )


def test_criterion_03_pure_state_fragility():
    det = float(np.linalg.det(HIGHLY_SQUEEZED.matrix))
    nu_pt = symplectic_spectrum(HIGHLY_SQUEEZED, partial_transpose_mode=2).nu_minus
    label = classify(HIGHLY_SQUEEZED).cls.label
    ok = (
        abs(det - 1.0) <= 1e-9
        and abs(nu_pt - 0.2236) <= 5e-3
        and label == "PartiallyRobustSymmetric"
    )
    criterion(
        3,
        "pure highly squeezed state: det V = 1, PT nu_minus = 0.2236(5e-3), "
        "PartiallyRobustSymmetric",
        ok,
        f"det={det!r}, nu_pt={nu_pt!r}, class={label}",
    )


def test_criterion_04_factorization_identity(ensemble):
    ts = np.linspace(0.0, 1.0, 11)
    worst = 0.0
    for v in ensemble:
        g = gamma_coefficients(v)
        grid = oracle_attenuated_ppt_grid(v.matrix, ts)  # independent oracle
        w_r = (
            g.gamma11
            + g.gamma21 * ts[:, None]
            + g.gamma12 * ts[None, :]
            + g.gamma22 * np.outer(ts, ts)
        )
        err = np.abs(grid - np.outer(ts, ts) * w_r) / (1.0 + np.abs(w_r))
        worst = max(worst, float(err.max()))
    criterion(
        4,
        "w_ppt(attenuate(v,t)) = t1 t2 W_R(t) within 1e-9(1+|W_R|), 1000 states x 11x11",
        worst <= 1e-9,
        f"worst={worst:.3e}",
    )


def test_criterion_05_duan_scaling(ensemble):
    ts = np.linspace(0.0, 1.0, 11)
    worst = 0.0
    for v in ensemble:
        base = minimized_duan(v).w_m
        m = v.matrix
        # independent attenuated evaluation from the congruence-transformed
        # matrix entries
        root = np.sqrt(ts)
        lvec = np.zeros((len(ts), len(ts), 4))
        lvec[..., 0] = lvec[..., 1] = root[:, None]
        lvec[..., 2] = lvec[..., 3] = root[None, :]
        w = lvec[..., :, None] * lvec[..., None, :] * (m - np.eye(4)) + np.eye(4)
        sigma1 = w[..., 0, 0] + w[..., 1, 1] - 2.0
        sigma2 = w[..., 2, 2] + w[..., 3, 3] - 2.0
        w_m_att = sigma1 * sigma2 - (w[..., 1, 3] - w[..., 0, 2]) ** 2
        expected = np.outer(ts, ts) * base
        err = np.abs(w_m_att - expected) / np.maximum(1.0, np.abs(expected))
        worst = max(worst, float(err.max()))
    criterion(
        5,
        "minimized Duan witness scales as t1 t2 under attenuation (1e-9 relative)",
        worst <= 1e-9,
        f"worst={worst:.3e}",
    )


def test_criterion_06_corner_oracle_equivalence():
    ts = np.linspace(0.0, 1.0, 101)
    h = ts[1]
    states = random_entangled_states(500)
    agree = excluded = mismatch = 0
    details = []
    for v in states:
        report = classify(v)
        band = boundary_band(v)
        if report.boundary_flags:
            excluded += 1
            continue
        # boundary at grid resolution: a class edge crossing inside one cell
        g = gamma_coefficients(v)
        unresolved = any(
            w > band and w / (w - report.w_ppt) < h
            for w in (report.w_ch1, report.w_ch2)
        ) or (report.w_full > band and reduced_witness(g, (h, h)) <= band)
        if unresolved:
            excluded += 1
            continue

        grid = oracle_attenuated_ppt_grid(v.matrix, ts)
        neg = grid < -band
        if grid[-1, -1] >= -band:
            scan = ("Separable", None)
        else:
            inner = slice(1, None)
            edge1 = bool(neg[inner, -1].all())
            edge2 = bool(neg[-1, inner].all())
            if edge1 and edge2 and bool(neg[inner, inner].all()):
                scan = ("FullyRobust", None)
            elif edge1 and edge2:
                scan = ("PartiallyRobustSymmetric", None)
            elif edge1 or edge2:
                scan = ("PartiallyRobustAsymmetric", 1 if edge1 else 2)
            else:
                scan = ("Fragile", None)
        if scan == (report.cls.label, report.cls.robust_mode):
            agree += 1
        else:
            mismatch += 1
            details.append((scan, str(report.cls)))
    criterion(
        6,
        "corner-sign classification agrees with 101x101 brute-force scans "
        "(500 entangled states, boundary excluded)",
        mismatch == 0 and agree >= 400,
        f"agree={agree}, excluded={excluded}, mismatch={mismatch}, first={details[:3]}",
    )


def test_criterion_07_critical_transmittance():
    t1c = critical_transmittance(CM_B, 1)
    residual = abs(ppt_witness(attenuate(CM_B, (t1c, 1.0))))
    ok = abs(t1c - 0.412) <= 1e-3 and residual <= 1e-6
    criterion(
        7,
        "fragile fixture: T1_c = 0.412(1e-3) and |w_ppt| <= 1e-6 at (T1_c, 1)",
        ok,
        f"t1c={t1c!r}, residual={residual:.2e}",
    )


def test_criterion_08_fully_symmetric_robustness():
    rng = np.random.default_rng(2026)
    bad_class = bad_sign = 0
    n = 10_000
    for _ in range(n):
        nu = rng.uniform(1.0, 2.0)
        r = rng.uniform(0.35, 1.5) * rng.choice([-1.0, 1.0])
        spec = FullySymmetric(s=nu * np.cosh(2 * r), c=nu * np.sinh(2 * r))
        key = spec.s - 1.0 - abs(spec.c)
        w = family_witnesses(spec)
        if np.sign(w.w_ppt) != np.sign(key):
            bad_sign += 1
            continue
        if key < 0 and classify(build(spec)).cls != FULLY_ROBUST:
            bad_class += 1
    criterion(
        8,
        "10^4 fully symmetric entangled states all FullyRobust with "
        "sign(w_ppt) = sign(s-1-|c|)",
        bad_class == 0 and bad_sign == 0,
        f"bad_class={bad_class}, bad_sign={bad_sign}",
    )


def test_criterion_09_monotone_fragility():
    rng = np.random.default_rng(90)
    violations = 0
    for seed in range(1000):
        v = random_physical_state(seed)
        t = Transmittance(*rng.uniform(0.0, 1.0, 2))
        if classify(attenuate(v, t)).cls.rank > classify(v).cls.rank:
            violations += 1
    criterion(
        9,
        "classification never becomes strictly more robust under attenuation "
        "(1000 state/loss pairs)",
        violations == 0,
        f"violations={violations}",
    )


def test_criterion_10_rotation_loss_commutation():
    rng = np.random.default_rng(100)
    worst = 0.0
    for seed in range(1000):
        v = random_physical_state(seed)
        rot = LocalSymplectic.rotation(*rng.uniform(-np.pi, np.pi, 2))
        t = Transmittance(*rng.uniform(0.0, 1.0, 2))
        lhs = attenuate(apply_local_symplectic(v, rot), t).matrix
        rhs = apply_local_symplectic(attenuate(v, t), rot).matrix
        scale = max(1.0, float(np.abs(v.matrix).max()))
        worst = max(worst, float(np.abs(lhs - rhs).max()) / scale)

    squeeze = LocalSymplectic.squeeze(0.5, 0.0)
    violation = 0.0
    for seed in range(20):
        v = random_physical_state(seed)
        t = Transmittance(0.5, 0.9)
        lhs = attenuate(apply_local_symplectic(v, squeeze), t).matrix
        rhs = apply_local_symplectic(attenuate(v, t), squeeze).matrix
        violation = max(violation, float(np.abs(lhs - rhs).max()))
    criterion(
        10,
        "rotations commute with loss to 1e-12; an r=0.5 squeeze violates by >1e-6",
        worst <= 1e-12 and violation > 1e-6,
        f"rotation worst={worst:.2e}, squeeze violation={violation:.2e}",
    )


def test_criterion_11_robustify_fixtures():
    results = {}
    ok = True
    for name, v in (("fragile", CM_B), ("partially-robust", CM_D)):
        res = robustify(v)  # default evaluation cap
        if res is None:
            ok = False
            results[name] = "budget exhausted"
            continue
        after = classify(res.v_out).cls
        nu0 = symplectic_spectrum(v)
        nu1 = symplectic_spectrum(res.v_out)
        spectrum_ok = abs(nu1.nu_minus - nu0.nu_minus) <= 1e-9 * nu0.nu_minus and abs(
            nu1.nu_plus - nu0.nu_plus
        ) <= 1e-9 * nu0.nu_plus
        results[name] = f"{after} in {res.evaluations} evals"
        ok = ok and after == FULLY_ROBUST and spectrum_ok
    criterion(
        11,
        "robustify returns a local symplectic giving FullyRobust with the "
        "spectrum preserved (fragile and partially robust fixtures)",
        ok,
        str(results),
    )
