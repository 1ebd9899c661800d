"""Inequality checkers emitting slack certificates.

Each checker evaluates the left and right side of one inequality on
concrete inputs and returns Certificate records. Chain inequalities emit
one certificate per link (the link number is recorded in the params map).
Checkers flagged informational are recorded but never fail a campaign.
"""

import hashlib
import json
import math
from dataclasses import dataclass, field

import numpy as np

from . import blockops, numlin, rkhs
from .errors import BadParams, DimensionMismatch

GATING = "gating"
INFORMATIONAL = "informational"

CHECK_TOL = 1e-9
TOL_FLOOR = 1e-12


def slack_tolerance(rhs, check_tol=CHECK_TOL):
    """Allowed negative slack for a certificate with the given rhs."""
    return max(TOL_FLOOR, check_tol * (1.0 + abs(rhs)))


@dataclass(frozen=True)
class Certificate:
    """One evaluated inequality instance."""

    theorem_id: str
    lhs: float
    rhs: float
    slack: float
    holds: bool
    mode: str = GATING
    convention: str = None
    params: dict = field(default_factory=dict)
    witness: dict = field(default_factory=dict)
    input_digest: str = ""

    def to_dict(self):
        return {
            "theorem_id": self.theorem_id,
            "convention": self.convention,
            "params": dict(self.params),
            "lhs": self.lhs,
            "rhs": self.rhs,
            "slack": self.slack,
            "holds": self.holds,
            "mode": self.mode,
            "witness": dict(self.witness),
            "input_digest": self.input_digest,
        }


def make_certificate(theorem_id, lhs, rhs, *, params=None, witness=None,
                     convention=None, mode=GATING, digest="",
                     check_tol=CHECK_TOL):
    lhs = float(lhs)
    rhs = float(rhs)
    if not (math.isfinite(lhs) and math.isfinite(rhs)):
        raise BadParams(f"{theorem_id}: non-finite lhs/rhs")
    slack = rhs - lhs
    return Certificate(
        theorem_id=theorem_id,
        lhs=lhs,
        rhs=rhs,
        slack=slack,
        holds=bool(slack >= -slack_tolerance(rhs, check_tol)),
        mode=mode,
        convention=convention,
        params=dict(params or {}),
        witness=dict(witness or {}),
        input_digest=digest,
    )


def digest_inputs(*items):
    """Stable hex digest of scalar / array inputs, for witness bookkeeping."""
    h = hashlib.blake2b(digest_size=16)
    for item in items:
        if isinstance(item, np.ndarray):
            a = np.ascontiguousarray(item, dtype=np.complex128)
            h.update(repr(a.shape).encode())
            h.update(a.tobytes())
        else:
            h.update(json.dumps(item, sort_keys=True, default=str).encode())
    return h.hexdigest()


def _inner(u, v):
    """<u, v> with conjugation on the second argument."""
    return complex(np.conj(v) @ u)


def _require(cond, msg):
    if not cond:
        raise BadParams(msg)


def _conjugate_pair(p, q):
    _require(p > 1 and q > 1, "need p, q > 1")
    _require(abs(1.0 / p + 1.0 / q - 1.0) <= 1e-12, "need 1/p + 1/q = 1")


def _spow(a, p):
    """Scalar power with the 0**0 = 1 convention used throughout."""
    if a == 0.0 and p == 0.0:
        return 1.0
    return float(a) ** p


# ---------------------------------------------------------------------------
# scalar checkers

SCALAR_IDS = ("YOUNG2", "I37", "I38", "S310")


def check_scalar(theorem_id, params, inputs, check_tol=CHECK_TOL):
    """Scalar / vector inequality checkers. Returns a list of Certificates."""
    if theorem_id == "YOUNG2":
        a, b = float(inputs[0]), float(inputs[1])
        m = params["m"]
        _require(a >= 0 and b >= 0, "YOUNG2 needs a, b >= 0")
        _require(int(m) == m and m >= 1, "YOUNG2 needs positive integer m")
        m = int(m)
        digest = digest_inputs(a, b, m)
        lhs = _spow(math.sqrt(a * b), m) + 0.5**m * (_spow(a, m / 2.0) - _spow(b, m / 2.0)) ** 2
        rhs = 2.0**-m * (a + b) ** m
        cert = make_certificate("YOUNG2", lhs, rhs, params={"m": m},
                                witness={"a": a, "b": b}, digest=digest,
                                check_tol=check_tol)
        return [cert]
    if theorem_id == "I37":
        a, b = float(inputs[0]), float(inputs[1])
        nu, r = float(params["nu"]), float(params["r"])
        _require(a >= 0 and b >= 0, "I37 needs a, b >= 0")
        _require(0.0 <= nu <= 1.0, "I37 needs nu in [0, 1]")
        _require(r >= 1.0, "I37 needs r >= 1")
        digest = digest_inputs(a, b, nu, r)
        geo = _spow(a, nu) * _spow(b, 1.0 - nu)
        ari = nu * a + (1.0 - nu) * b
        pow_mean = _spow(nu * a**r + (1.0 - nu) * b**r, 1.0 / r)
        common = {"nu": nu, "r": r}
        wit = {"a": a, "b": b}
        return [
            make_certificate("I37", geo, ari, params={**common, "link": 1},
                             witness=wit, digest=digest, check_tol=check_tol),
            make_certificate("I37", ari, pow_mean, params={**common, "link": 2},
                             witness=wit, digest=digest, check_tol=check_tol),
        ]
    if theorem_id == "I38":
        a, b = float(inputs[0]), float(inputs[1])
        p, q, r = float(params["p"]), float(params["q"]), float(params["r"])
        _require(a >= 0 and b >= 0, "I38 needs a, b >= 0")
        _conjugate_pair(p, q)
        _require(r >= 1.0, "I38 needs r >= 1")
        digest = digest_inputs(a, b, p, q, r)
        young = a**p / p + b**q / q
        outer = _spow(a ** (p * r) / p + b ** (q * r) / q, 1.0 / r)
        common = {"p": p, "q": q, "r": r}
        wit = {"a": a, "b": b}
        return [
            make_certificate("I38", a * b, young, params={**common, "link": 1},
                             witness=wit, digest=digest, check_tol=check_tol),
            make_certificate("I38", young, outer, params={**common, "link": 2},
                             witness=wit, digest=digest, check_tol=check_tol),
        ]
    if theorem_id == "S310":
        a = np.asarray(inputs[0], dtype=np.complex128)
        b = np.asarray(inputs[1], dtype=np.complex128)
        e = np.asarray(inputs[2], dtype=np.complex128)
        norm_e = np.linalg.norm(e)
        _require(norm_e > 0, "S310 needs a nonzero unit vector e")
        e = e / norm_e
        digest = digest_inputs(a, b, e)
        ab = _inner(a, b)
        ae = _inner(a, e)
        eb = _inner(e, b)
        lhs = abs(ab - ae * eb) + abs(ae * eb)
        rhs = float(np.linalg.norm(a) * np.linalg.norm(b))
        return [make_certificate("S310", lhs, rhs, params={},
                                 witness={"dim": int(a.shape[0])},
                                 digest=digest, check_tol=check_tol)]
    raise BadParams(f"unknown scalar checker {theorem_id!r}")


# ---------------------------------------------------------------------------
# single-operator checkers

SINGLE_IDS = (
    "L21c", "P39", "R310", "T311_proof", "T311_stmt", "T312_proof",
    "T312_stmt", "T32", "R33",
    "L22a", "L22b", "L23", "BER_HOM", "BER_SUB", "BER_NORM",
)

SINGLE_MODES = {"T311_stmt": INFORMATIONAL, "T312_stmt": INFORMATIONAL}


def _abs_power(t_mat, p):
    return numlin.matrix_power_psd(numlin.matrix_abs(t_mat), p)


def _t311_combo(t_mat, r, p, q, e):
    """(1/p) f^{pr}(|T^2|) + (1/q) g^{qr}(|(T^2)*|) with f = s^e, g = s^(1-e)."""
    t2 = t_mat @ t_mat
    left = _abs_power(t2, e * p * r)
    right = _abs_power(t2.conj().T, (1.0 - e) * q * r)
    return left / p + right / q


def check_single(theorem_id, space, t_mat, params, extras=None,
                 check_tol=CHECK_TOL):
    """Single-operator checkers on one kernel space. Returns Certificates."""
    t_mat = space.check_operator(t_mat)
    extras = extras or {}
    digest = digest_inputs(t_mat, space.gram, dict(params))
    mode = SINGLE_MODES.get(theorem_id, GATING)
    n = space.dim
    khat = space.normalized_chart()

    if theorem_id == "L21c":
        grid = int(params.get("theta_grid", 720))
        _require(grid >= 4, "L21c needs theta_grid >= 4")
        ber, j = rkhs.berezin_peak(space, t_mat)
        grid_sup = rkhs.ber_via_rotations(space, t_mat, grid)
        # grid of spacing 2*pi/G misses the optimal phase by at most pi/G
        rhs = grid_sup + (1.0 - math.cos(math.pi / grid)) * ber
        return [make_certificate("L21c", ber, rhs, params={"theta_grid": grid},
                                 witness={"j": j}, digest=digest,
                                 check_tol=check_tol)]
    if theorem_id in ("P39", "R310"):
        r = float(params["r"])
        _require(r >= 1.0, f"{theorem_id} needs r >= 1")
        ber, j = rkhs.berezin_peak(space, t_mat)
        mid = 0.5 * (rkhs.berezin_number(space, t_mat @ t_mat) ** r
                     + numlin.operator_norm(t_mat) ** (2 * r))
        if theorem_id == "P39":
            return [make_certificate("P39", ber ** (2 * r), mid,
                                     params={"r": r}, witness={"j": j},
                                     digest=digest, check_tol=check_tol)]
        first = make_certificate("R310", ber ** (2 * r), mid,
                                 params={"r": r, "link": 1}, witness={"j": j},
                                 digest=digest, check_tol=check_tol)
        second = make_certificate("R310", mid,
                                  numlin.operator_norm(t_mat) ** (2 * r),
                                  params={"r": r, "link": 2}, witness={"j": j},
                                  digest=digest, check_tol=check_tol)
        return [first, second]
    if theorem_id in ("T311_stmt", "T311_proof"):
        r, p, q = float(params["r"]), float(params["p"]), float(params["q"])
        e = float(params["e"])
        _conjugate_pair(p, q)
        _require(p >= q, "T311 needs p >= q")
        _require(r >= 1.0 and q * r >= 2.0, "T311 needs r >= 1 and q*r >= 2")
        _require(0.0 <= e <= 1.0, "T311 exponent pair needs e in [0, 1]")
        combo = _t311_combo(t_mat, r, p, q, e)
        pr = {"r": r, "p": p, "q": q, "e": e}
        if theorem_id == "T311_stmt":
            ber, j = rkhs.berezin_peak(space, t_mat)
            rhs = 0.5 * (numlin.operator_norm(t_mat) ** (2 * r)
                         + rkhs.berezin_number(space, combo))
            return [make_certificate("T311_stmt", ber ** (2 * r), rhs,
                                     params=pr, witness={"j": j},
                                     digest=digest, mode=INFORMATIONAL,
                                     check_tol=check_tol)]
        best = None
        for j in range(n):
            k = khat[:, j]
            tk = t_mat @ k
            tsk = t_mat.conj().T @ k
            lhs = abs(_inner(tk, k)) ** (2 * r)
            rhs = 0.5 * (np.linalg.norm(tk) ** r * np.linalg.norm(tsk) ** r
                         + (np.conj(k) @ (combo @ k)).real)
            if best is None or rhs - lhs < best[0]:
                best = (rhs - lhs, lhs, rhs, j)
        _, lhs, rhs, j = best
        return [make_certificate("T311_proof", lhs, rhs, params=pr,
                                 witness={"j": j}, digest=digest,
                                 check_tol=check_tol)]
    if theorem_id in ("T312_stmt", "T312_proof"):
        nu, tshift = float(params["nu"]), float(params["t"])
        _require(0.0 <= nu <= 1.0, "T312 needs nu in [0, 1]")
        eye = np.eye(n, dtype=np.complex128)
        ber = rkhs.berezin_number(space, t_mat)
        rhs = (((1.0 - nu) ** 2 + nu**2) * ber**2
               + nu * numlin.operator_norm(t_mat - tshift * eye) ** 2
               + (1.0 - nu) * numlin.operator_norm(t_mat - 1j * tshift * eye) ** 2)
        pr = {"nu": nu, "t": tshift}
        if theorem_id == "T312_stmt":
            lhs = numlin.operator_norm(t_mat) ** 2
            return [make_certificate("T312_stmt", lhs, rhs, params=pr,
                                     witness={}, digest=digest,
                                     mode=INFORMATIONAL, check_tol=check_tol)]
        norms = np.linalg.norm(t_mat @ khat, axis=0) ** 2
        j = int(np.argmax(norms))
        return [make_certificate("T312_proof", float(norms[j]), rhs,
                                 params=pr, witness={"j": j}, digest=digest,
                                 check_tol=check_tol)]
    if theorem_id == "T32":
        t = float(params["t"])
        _require(0.0 <= t <= 1.0, "T32 needs t in [0, 1]")
        parts = numlin.polar_decompose(t_mat)
        ber, j = rkhs.berezin_peak(space, t_mat)
        p2t = blockops._support_power(parts.modulus, 2.0 * t)
        p2s = blockops._support_power(parts.modulus, 2.0 * (1.0 - t))
        rhs = (0.25 * numlin.operator_norm(p2t + p2s)
               + 0.5 * rkhs.berezin_number(space, blockops.aluthge_general(t_mat, t)))
        return [make_certificate("T32", ber, rhs, params={"t": t},
                                 witness={"j": j}, digest=digest,
                                 check_tol=check_tol)]
    if theorem_id == "R33":
        ber, j = rkhs.berezin_peak(space, t_mat)
        rhs = (0.5 * numlin.operator_norm(t_mat)
               + 0.5 * rkhs.berezin_number(space, blockops.aluthge_general(t_mat, 0.5)))
        return [make_certificate("R33", ber, rhs, params={"t": 0.5},
                                 witness={"j": j}, digest=digest,
                                 check_tol=check_tol)]
    if theorem_id in ("L22a", "L22b"):
        r = float(params["r"])
        if theorem_id == "L22a":
            _require(r >= 1.0, "L22a needs r >= 1")
        else:
            _require(0.0 < r <= 1.0, "L22b needs 0 < r <= 1")
        tr_pow = numlin.matrix_power_psd(t_mat, r)
        best = None
        for j in range(n):
            k = khat[:, j]
            base = (np.conj(k) @ (t_mat @ k)).real
            powd = (np.conj(k) @ (tr_pow @ k)).real
            lhs, rhs = (max(base, 0.0) ** r, powd) if theorem_id == "L22a" else (powd, max(base, 0.0) ** r)
            if best is None or rhs - lhs < best[0]:
                best = (rhs - lhs, lhs, rhs, j)
        _, lhs, rhs, j = best
        return [make_certificate(theorem_id, lhs, rhs, params={"r": r},
                                 witness={"j": j}, digest=digest,
                                 check_tol=check_tol)]
    if theorem_id == "L23":
        p = float(params["p"])
        _require(0.0 <= p <= 1.0, "L23 needs exponent p in [0, 1]")
        x = np.asarray(extras["x"], dtype=np.complex128)
        y = np.asarray(extras["y"], dtype=np.complex128)
        digest = digest_inputs(t_mat, x, y, dict(params))
        lhs = abs(_inner(t_mat @ x, y)) ** 2
        f2 = _abs_power(t_mat, 2.0 * p)
        g2 = _abs_power(t_mat.conj().T, 2.0 * (1.0 - p))
        rhs = ((np.conj(x) @ (f2 @ x)).real * (np.conj(y) @ (g2 @ y)).real)
        return [make_certificate("L23", lhs, rhs, params={"p": p},
                                 witness={}, digest=digest,
                                 check_tol=check_tol)]
    if theorem_id == "BER_HOM":
        alpha = complex(params.get("alpha_re", 1.0), params.get("alpha_im", 0.0))
        lhs = rkhs.berezin_number(space, alpha * t_mat)
        rhs = abs(alpha) * rkhs.berezin_number(space, t_mat)
        # equality statement: check both directions at the shared tolerance
        tol = slack_tolerance(rhs, check_tol)
        return [Certificate(
            theorem_id="BER_HOM", lhs=lhs, rhs=rhs, slack=rhs - lhs,
            holds=bool(abs(rhs - lhs) <= tol), mode=GATING, convention=None,
            params={"alpha_re": alpha.real, "alpha_im": alpha.imag},
            witness={}, input_digest=digest)]
    if theorem_id == "BER_SUB":
        b_mat = space.check_operator(extras["B"])
        digest = digest_inputs(t_mat, b_mat, space.gram)
        lhs = rkhs.berezin_number(space, t_mat + b_mat)
        rhs = rkhs.berezin_number(space, t_mat) + rkhs.berezin_number(space, b_mat)
        return [make_certificate("BER_SUB", lhs, rhs, params={}, witness={},
                                 digest=digest, check_tol=check_tol)]
    if theorem_id == "BER_NORM":
        ber, j = rkhs.berezin_peak(space, t_mat)
        return [make_certificate("BER_NORM", ber, numlin.operator_norm(t_mat),
                                 params={}, witness={"j": j}, digest=digest,
                                 check_tol=check_tol)]
    raise BadParams(f"unknown single-operator checker {theorem_id!r}")


# ---------------------------------------------------------------------------
# block checkers

BLOCK_IDS = (
    "L21a", "L21b", "INEQ1", "T24a", "T24b", "C25a", "C25b", "R26", "C27",
    "C28", "T29", "C210", "T31", "C34", "C35", "T36", "T37",
)


def _require_offdiag(block):
    _require(np.count_nonzero(block.S) == 0 and np.count_nonzero(block.R) == 0,
             "checker needs an off-diagonal block (S = R = 0)")


def _require_diag(block):
    _require(np.count_nonzero(block.X) == 0 and np.count_nonzero(block.Y) == 0,
             "checker needs a diagonal block (X = Y = 0)")


def _require_square(block):
    _require(block.space1.dim == block.space2.dim,
             "checker needs square off-diagonal blocks (n1 = n2)")


def _t24_operands(block, r, p, variant):
    """PSD combination operators for the two-sided product bounds.

    variant "fg": (f^{2r}(|X|)+g^{2r}(|Y*|), f^{2r}(|Y|)+g^{2r}(|X*|))
    variant "ff": (f^{2r}(|X|)+f^{2r}(|Y*|), g^{2r}(|Y|)+g^{2r}(|X*|))
    First operand acts on space2, second on space1.
    """
    fe, ge = 2.0 * r * p, 2.0 * r * (1.0 - p)
    if variant == "fg":
        op2 = _abs_power(block.X, fe) + _abs_power(block.Y.conj().T, ge)
        op1 = _abs_power(block.Y, fe) + _abs_power(block.X.conj().T, ge)
    else:
        op2 = _abs_power(block.X, fe) + _abs_power(block.Y.conj().T, fe)
        op1 = _abs_power(block.Y, ge) + _abs_power(block.X.conj().T, ge)
    return op2, op1


def _psd_symbols(space, a):
    vals = rkhs.berezin_symbols(space, a).real
    return np.clip(vals, 0.0, None)


def check_block(theorem_id, block, conv, params, mode=GATING,
                check_tol=CHECK_TOL):
    """Block-operator checkers at an explicit Berezin convention."""
    digest = digest_inputs(block.S, block.X, block.Y, block.R,
                           block.space1.gram, block.space2.gram, dict(params))
    sp1, sp2 = block.space1, block.space2

    def block_peak():
        value, (j1, j2) = blockops.ber_block(block, conv)
        return value, {"j1": j1, "j2": j2}

    if theorem_id == "L21a":
        _require_diag(block)
        lhs, wit = block_peak()
        rhs = max(rkhs.berezin_number(sp1, block.S),
                  rkhs.berezin_number(sp2, block.R))
        return [make_certificate("L21a", lhs, rhs, params=params, witness=wit,
                                 convention=conv, mode=mode, digest=digest,
                                 check_tol=check_tol)]
    if theorem_id == "L21b":
        _require_offdiag(block)
        lhs, wit = block_peak()
        rhs = 0.5 * (numlin.operator_norm(block.X) + numlin.operator_norm(block.Y))
        return [make_certificate("L21b", lhs, rhs, params=params, witness=wit,
                                 convention=conv, mode=mode, digest=digest,
                                 check_tol=check_tol)]
    if theorem_id == "INEQ1":
        _require_offdiag(block)
        s = float(params["s"])
        p = float(params["p"])
        _require(s >= 1.0, "INEQ1 needs power h(t) = t^s with s >= 1")
        _require(0.0 <= p <= 1.0, "INEQ1 needs exponent p in [0, 1]")
        value, wit = block_peak()
        lhs = value**s
        rhs = 0.25 * numlin.operator_norm(
            _abs_power(block.Y, 2 * p * s) + _abs_power(block.Y, 2 * (1 - p) * s)
        ) + 0.25 * numlin.operator_norm(
            _abs_power(block.X, 2 * p * s) + _abs_power(block.X, 2 * (1 - p) * s)
        )
        return [make_certificate("INEQ1", lhs, rhs, params=params, witness=wit,
                                 convention=conv, mode=mode, digest=digest,
                                 check_tol=check_tol)]
    if theorem_id in ("T24a", "T24b", "C25a", "C25b", "R26"):
        _require_offdiag(block)
        if theorem_id == "R26":
            r, p = 1.0, 0.5
        else:
            r, p = float(params["r"]), float(params["p"])
        _require(r >= 1.0, f"{theorem_id} needs r >= 1")
        _require(0.0 <= p <= 1.0, f"{theorem_id} needs p in [0, 1]")
        variant = "ff" if theorem_id in ("T24b", "C25b") else "fg"
        op2, op1 = _t24_operands(block, r, p, variant)
        value, wit = block_peak()
        rhs = (2.0**r / 2.0
               * math.sqrt(rkhs.berezin_number(sp2, op2))
               * math.sqrt(rkhs.berezin_number(sp1, op1)))
        return [make_certificate(theorem_id, value**r, rhs, params=params,
                                 witness=wit, convention=conv, mode=mode,
                                 digest=digest, check_tol=check_tol)]
    if theorem_id == "C27":
        _require_offdiag(block)
        _require_square(block)
        _require(np.array_equal(block.X, block.Y), "C27 needs Y = X")
        value, wit = block_peak()
        combo = numlin.matrix_abs(block.X) + numlin.matrix_abs(block.X.conj().T)
        mid = 0.5 * rkhs.berezin_number(sp1, combo)
        return [
            make_certificate("C27", value, mid, params={**params, "link": 1},
                             witness=wit, convention=conv, mode=mode,
                             digest=digest, check_tol=check_tol),
            make_certificate("C27", mid, numlin.operator_norm(block.X),
                             params={**params, "link": 2}, witness=wit,
                             convention=conv, mode=mode, digest=digest,
                             check_tol=check_tol),
        ]
    if theorem_id == "C28":
        _require_offdiag(block)
        op2, op1 = _t24_operands(block, 1.0, 0.5, "fg")
        ber2 = rkhs.berezin_number(sp2, op2)
        ber1 = rkhs.berezin_number(sp1, op1)
        value, wit = block_peak()
        prod = 0.5 * math.sqrt(ber2) * math.sqrt(ber1)
        mean = 0.25 * (ber2 + ber1)
        top = 0.5 * max(ber2, ber1)
        kw = dict(witness=wit, convention=conv, mode=mode, digest=digest,
                  check_tol=check_tol)
        return [
            make_certificate("C28", value, prod, params={**params, "link": 1}, **kw),
            make_certificate("C28", prod, mean, params={**params, "link": 2}, **kw),
            make_certificate("C28", mean, top, params={**params, "link": 3}, **kw),
        ]
    if theorem_id in ("T29", "C210"):
        _require_offdiag(block)
        r, p = float(params["r"]), float(params["p"])
        _require(r >= 1.0, f"{theorem_id} needs r >= 1")
        _require(0.0 <= p <= 1.0, f"{theorem_id} needs p in [0, 1]")
        if theorem_id == "C210":
            _require_square(block)
            _require(np.array_equal(block.X, block.Y), "C210 needs Y = X")
        op2, op1 = _t24_operands(block, r, p, "fg")
        avals = _psd_symbols(sp2, op2)
        bvals = _psd_symbols(sp1, op1)
        eta = (np.sqrt(avals)[None, :] - np.sqrt(bvals)[:, None]) ** 2
        eta_inf = float(np.min(eta))
        value, wit = block_peak()
        if theorem_id == "T29":
            head = 2.0 ** (r - 2) * (float(np.max(avals)) + float(np.max(bvals)))
        else:
            head = 2.0 ** (r - 1) * numlin.operator_norm(op2)
        rhs = head - 2.0 ** (r - 2) * eta_inf
        wit["eta_inf"] = eta_inf
        return [make_certificate(theorem_id, value**r, rhs, params=params,
                                 witness=wit, convention=conv, mode=mode,
                                 digest=digest, check_tol=check_tol)]
    if theorem_id in ("T31", "C34"):
        _require_offdiag(block)
        _require_square(block)
        t = float(params["t"])
        _require(0.0 <= t <= 1.0, f"{theorem_id} needs t in [0, 1]")
        abs_x = numlin.matrix_abs(block.X)
        abs_y = numlin.matrix_abs(block.Y)
        abs_xs = numlin.matrix_abs(block.X.conj().T)
        abs_ys = numlin.matrix_abs(block.Y.conj().T)
        cross = 0.5 * (
            numlin.operator_norm(blockops._support_power(abs_y, t)
                                 @ blockops._support_power(abs_xs, 1.0 - t))
            + numlin.operator_norm(blockops._support_power(abs_x, t)
                                   @ blockops._support_power(abs_ys, 1.0 - t)))
        if theorem_id == "T31":
            tilted = blockops.aluthge_offdiag(block.X, block.Y, t,
                                              space1=sp1, space2=sp2)
            value, (j1, j2) = blockops.ber_block(tilted, conv)
            wit = {"j1": j1, "j2": j2}
            return [make_certificate("T31", value, cross, params=params,
                                     witness=wit, convention=conv, mode=mode,
                                     digest=digest, check_tol=check_tol)]
        value, wit = block_peak()
        rhs = 0.5 * max(numlin.operator_norm(block.X),
                        numlin.operator_norm(block.Y)) + 0.5 * cross
        return [make_certificate("C34", value, rhs, params=params, witness=wit,
                                 convention=conv, mode=mode, digest=digest,
                                 check_tol=check_tol)]
    if theorem_id == "C35":
        _require_offdiag(block)
        _require_square(block)
        half_x = blockops._support_power(numlin.matrix_abs(block.X), 0.5)
        half_y = blockops._support_power(numlin.matrix_abs(block.Y), 0.5)
        half_xs = blockops._support_power(numlin.matrix_abs(block.X.conj().T), 0.5)
        half_ys = blockops._support_power(numlin.matrix_abs(block.Y.conj().T), 0.5)
        rhs = (max(numlin.operator_norm(block.X), numlin.operator_norm(block.Y))
               + 0.5 * (numlin.operator_norm(half_x @ half_y)
                        + numlin.operator_norm(half_xs @ half_ys)))
        return [
            make_certificate("C35", numlin.operator_norm(block.X + block.Y),
                             rhs, params={**params, "reading": "sum"},
                             witness={}, convention=None, mode=INFORMATIONAL,
                             digest=digest, check_tol=check_tol),
            make_certificate("C35", numlin.operator_norm(block.X + block.Y.conj().T),
                             rhs, params={**params, "reading": "adjoint_sum"},
                             witness={}, convention=None, mode=INFORMATIONAL,
                             digest=digest, check_tol=check_tol),
        ]
    if theorem_id in ("T36", "T37"):
        alpha = float(params["alpha"])
        _require(0.0 <= alpha <= 1.0, f"{theorem_id} needs alpha in [0, 1]")
        value, wit = block_peak()
        ber_s = rkhs.berezin_number(sp1, block.S)
        ber_r = rkhs.berezin_number(sp2, block.R)
        nx = numlin.operator_norm(block.X)
        ny = numlin.operator_norm(block.Y)
        if theorem_id == "T36":
            rhs = (0.5 * ber_s + ber_r
                   + 0.5 * math.sqrt(alpha**2 * ber_s**2 + nx**2)
                   + 0.5 * math.sqrt((1.0 - alpha) ** 2 * ber_s**2 + ny**2))
        else:
            rhs = (0.5 * ber_r + ber_s
                   + 0.5 * math.sqrt(alpha**2 * ber_r**2 + ny**2)
                   + 0.5 * math.sqrt((1.0 - alpha) ** 2 * ber_r**2 + nx**2))
        return [make_certificate(theorem_id, value, rhs, params=params,
                                 witness=wit, convention=conv, mode=mode,
                                 digest=digest, check_tol=check_tol)]
    raise BadParams(f"unknown block checker {theorem_id!r}")
