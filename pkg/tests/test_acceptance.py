"""Acceptance suite: the eight campaign-level criteria.

Each criterion prints one PASS/FAIL line. Criterion 1 currently FAILS, and
is meant to: the T32/R33 bounds are false on finite kernel models (the
underlying proof expands ||A k||^2 with the operator product in the wrong
order; the numerical-radius analogue needs a supremum over all unit
vectors, which the kernel set does not provide). The violation witnesses
are reproducible from the seeds recorded in the report, and the analytic
counterexample family is pinned in tests/test_theorems.py. All other
gating checkers are clean over the full campaign.
"""

import json
import time

import numpy as np
import pytest

from berlab import blockops, harness, numlin, report, rkhs, theorems


def announce(num, ok, detail):
    line = f"ACCEPTANCE CRITERION {num}: {'PASS' if ok else 'FAIL'} ({detail})"
    print(line)
    assert ok, line


def cgauss(rng, shape):
    return (rng.standard_normal(shape) + 1j * rng.standard_normal(shape)) / np.sqrt(2.0)


def criterion1_config():
    # master_seed=42, 500 trials, default dims/families/grids
    return harness.CampaignConfig()


@pytest.fixture(scope="module")
def campaign():
    config = criterion1_config()
    started = time.monotonic()
    rep = harness.run_campaign(config)
    elapsed = time.monotonic() - started
    return config, rep, elapsed


def random_space(rng, n):
    family = harness.DEFAULT_FAMILIES[int(rng.integers(3))]
    return harness.draw_space(rng, family, n)


def test_criterion_1_gating_soundness(campaign):
    _, rep, elapsed = campaign
    gating = [r for r in rep.results if r["mode"] == theorems.GATING]
    failures = {(r["theorem_id"], r["link"]): r["failures"]
                for r in gating if r["failures"]}
    ok = rep.gating_failures == 0 and elapsed <= 300.0
    announce(1, ok,
             f"{rep.gating_failures} gating failures {dict(failures)}, "
             f"{elapsed:.1f}s; known-false bounds T32/R33, see module docstring")


def test_criterion_2_equality_witnesses():
    blk = blockops.offdiag_block(np.array([[1.0 + 0j]]), np.array([[1.0 + 0j]]))
    t24 = theorems.check_block("T24a", blk, "pair", {"r": 1.0, "p": 0.5})[0]
    ok = (abs(t24.lhs - 2.0) <= 1e-12 and abs(t24.rhs - 2.0) <= 1e-12
          and abs(t24.slack) <= 1e-12)

    for a in (0.5, 1.0, 2.0, 3.0):
        for m in (1, 2, 3):
            cert = theorems.check_scalar("YOUNG2", {"m": m}, (a, a))[0]
            ok = ok and cert.slack == 0.0

    blk_i = blockops.offdiag_block(np.eye(2, dtype=complex), np.eye(2, dtype=complex))
    c27 = theorems.check_block("C27", blk_i, "joint", {})[1]
    ok = ok and abs(c27.slack) <= 1e-12
    announce(2, ok, "T24a pair equality, YOUNG2 a=b, C27 link 2 at X=I")


def test_criterion_3_decomposition_oracles():
    rng = np.random.default_rng(2024)
    worst_polar, worst_iso, worst_fg = 0.0, 0.0, 0.0
    for i in range(1000):
        dim = 1 + i % 8
        kind = harness.OPERATOR_KINDS[i % len(harness.OPERATOR_KINDS)]
        t_mat = harness.generate_operator(kind, dim, int(rng.integers(2**63)))
        scale = 1.0 + numlin.operator_norm(t_mat)
        parts = numlin.polar_decompose(t_mat)
        u = parts.isometry
        worst_polar = max(worst_polar,
                          numlin.operator_norm(u @ parts.modulus - t_mat) / scale)
        worst_iso = max(worst_iso, numlin.operator_norm(u @ u.conj().T @ u - u))
        ab = numlin.matrix_abs(t_mat)
        for p in (0.25, 0.5, 0.75):
            prod = numlin.matrix_power_psd(ab, p) @ numlin.matrix_power_psd(ab, 1.0 - p)
            worst_fg = max(worst_fg, numlin.operator_norm(prod - ab) / scale)
    ok = worst_polar <= 1e-9 and worst_iso <= 1e-9 and worst_fg <= 1e-9
    announce(3, ok, f"worst defects: polar {worst_polar:.2e}, "
                    f"isometry {worst_iso:.2e}, f*g {worst_fg:.2e} over 1000 draws")


def test_criterion_4_berezin_oracle_equivalence():
    rng = np.random.default_rng(2025)
    worst = 0.0
    for _ in range(500):
        sp = random_space(rng, int(rng.integers(1, 7)))
        a = cgauss(rng, (sp.dim, sp.dim))
        got = rkhs.berezin_number(sp, a)
        want = 0.0
        for j in range(sp.dim):
            k = sp.kernel_column(j)
            want = max(want, abs(np.conj(k) @ (a @ k)) / (np.conj(k) @ k).real)
        worst = max(worst, abs(got - want) / (1.0 + want))
    ok = worst <= 1e-10
    announce(4, ok, f"worst chart-vs-Gram-ratio deviation {worst:.2e} over 500 draws")


def test_criterion_5_rotation_identity():
    rng = np.random.default_rng(2026)
    worst = 0.0
    for _ in range(200):
        sp = random_space(rng, int(rng.integers(1, 7)))
        a = cgauss(rng, (sp.dim, sp.dim))
        ber = rkhs.berezin_number(sp, a)
        rot = rkhs.ber_via_rotations(sp, a, 720)
        worst = max(worst, abs(ber - rot) / (1.0 + ber))
    ok = worst <= 1e-4
    announce(5, ok, f"worst grid-720 rotation deviation {worst:.2e} over 200 draws")


def test_criterion_6_aluthge_consistency():
    rng = np.random.default_rng(2027)
    worst_match, worst_eig = 0.0, 0.0
    for _ in range(200):
        n = int(rng.integers(1, 6))
        x, y = cgauss(rng, (n, n)), cgauss(rng, (n, n))
        big = blockops.assemble(blockops.offdiag_block(x, y))
        scale = 1.0 + numlin.operator_norm(big)
        want_eigs = np.sort_complex(np.linalg.eigvals(big))
        for t in (0.25, 0.5, 0.75):
            closed = blockops.assemble(blockops.aluthge_offdiag(x, y, t))
            direct = blockops.aluthge_general(big, t)
            worst_match = max(worst_match, numlin.operator_norm(closed - direct))
            got_eigs = np.sort_complex(np.linalg.eigvals(direct))
            worst_eig = max(worst_eig,
                            float(np.max(np.abs(got_eigs - want_eigs))) / scale)
    ok = worst_match <= 1e-8 and worst_eig <= 1e-7
    announce(6, ok, f"closed-form defect {worst_match:.2e}, "
                    f"eigenvalue multiset defect {worst_eig:.2e} over 200 pairs")


def test_criterion_7_determinism(campaign):
    config, rep, _ = campaign
    second = harness.run_campaign(criterion1_config())
    d1, d2 = rep.to_dict(), second.to_dict()
    # wall_time_ms is the one report field that cannot be bit-stable
    d1["wall_time_ms"] = d2["wall_time_ms"] = 0
    ok = report.dumps_json(d1) == report.dumps_json(d2)

    # every min-slack witness reproduces from its recorded per-trial seed
    checked = 0
    for res in rep.results:
        wit = res["witness"]
        draw = harness.draw_trial(res["theorem_id"], wit["witness"]["trial_seed"],
                                  config)
        certs = harness.evaluate_draw(draw, config)
        match = [c for c in certs
                 if c.convention == res["convention"]
                 and c.params.get("link", 0) == res["link"]
                 and c.params.get("reading") == wit["params"].get("reading")]
        ok = ok and len(match) == 1 and match[0].to_dict() == wit
        checked += 1
    announce(7, ok, f"byte-identical reports modulo wall_time_ms; "
                    f"{checked} witnesses replayed from recorded seeds")


def test_criterion_8_informational_tracking(campaign):
    _, rep, _ = campaign
    info = {(r["theorem_id"], r["reading"])
            for r in rep.results if r["mode"] == theorems.INFORMATIONAL}
    tracked = {t for t, _ in info}
    ok = {"T311_stmt", "T312_stmt", "C35"} <= tracked
    ok = ok and {("C35", "sum"), ("C35", "adjoint_sum")} <= info
    ok = ok and all(np.isfinite(r["min_slack"]) for r in rep.results)
    # informational rows never count toward the gating failure total
    recount = sum(r["failures"] for r in rep.results if r["mode"] == theorems.GATING)
    ok = ok and recount == rep.gating_failures
    announce(8, ok, f"informational rows tracked: {sorted(tracked)}")
