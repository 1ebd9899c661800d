"""Reproducible verification campaigns over random operator ensembles.

A campaign draws (space, operator, parameter) instances per checker from a
per-trial seed derived by hashing (master_seed, theorem_id, trial index),
evaluates every convention the checker declares, and aggregates slack
statistics into a deterministic Report.
"""

import dataclasses
import hashlib
import time
from dataclasses import dataclass, field

import numpy as np

from . import blockops, numlin, rkhs, theorems
from .errors import BadParams, BerlabError, ConfigInvalid, IllConditioned

__version__ = "0.1.0"

OPERATOR_KINDS = (
    "ginibre", "hermitian", "psd", "unitary", "partial_isometry",
    "contraction", "nilpotent",
)

DEFAULT_DIMS = ((1, 1), (2, 2), (3, 2), (4, 4), (6, 5))
DEFAULT_FAMILIES = (
    rkhs.KernelFamily("identity"),
    rkhs.KernelFamily("szego"),
    rkhs.KernelFamily("gaussian", {"sigma": 1.0}),
)

DEFAULT_PARAM_GRID = {
    "r": (1.0, 1.5, 2.0, 3.0),
    "p": (0.0, 0.25, 0.5, 0.75, 1.0),
    "t": (0.0, 0.25, 0.5, 0.75, 1.0),
    "alpha": (0.0, 0.5, 1.0),
    "nu": (0.0, 0.25, 0.5, 0.75, 1.0),
    "m": (1, 2, 3),
    "s": (1.0, 2.0),
    "theta_grid": 720,
}

# Hoelder-conjugate (p, q) pairs with p >= q used by I38 and T311.
CONJUGATE_PAIRS = ((2.0, 2.0), (3.0, 1.5), (4.0, 4.0 / 3.0))

GATING = theorems.GATING
INFORMATIONAL = theorems.INFORMATIONAL

# conventions each block checker is evaluated at, with the mode of each run
_PAIR_GATED = (("pair", GATING), ("joint", INFORMATIONAL))
_JOINT_GATED = (("joint", GATING), ("pair", INFORMATIONAL))

BLOCK_CONVS = {
    "L21a": _JOINT_GATED,
    "L21b": _JOINT_GATED,
    "INEQ1": _JOINT_GATED,
    "T24a": _PAIR_GATED,
    "T24b": _PAIR_GATED,
    "C25a": _PAIR_GATED,
    "C25b": _PAIR_GATED,
    "R26": _JOINT_GATED,
    "C27": _JOINT_GATED,
    "C28": _JOINT_GATED,
    "T29": _PAIR_GATED,
    "C210": _PAIR_GATED,
    "T31": (("joint", GATING),),
    "C34": (("joint", GATING),),
    "C35": ((None, INFORMATIONAL),),
    "T36": (("joint", GATING),),
    "T37": (("joint", GATING),),
}

# how the blocks of each block checker are drawn
BLOCK_SHAPES = {
    "L21a": "diag",
    "L21b": "offdiag",
    "INEQ1": "offdiag",
    "T24a": "offdiag",
    "T24b": "offdiag",
    "C25a": "offdiag",
    "C25b": "offdiag",
    "R26": "offdiag",
    "C27": "tied_square",
    "C28": "offdiag",
    "T29": "offdiag",
    "C210": "tied_square",
    "T31": "offdiag_square",
    "C34": "offdiag_square",
    "C35": "offdiag_square",
    "T36": "full",
    "T37": "full",
}

ALL_CHECKERS = tuple(theorems.SCALAR_IDS) + tuple(theorems.SINGLE_IDS) + tuple(theorems.BLOCK_IDS)


@dataclass
class CampaignConfig:
    """Reproducible description of a verification run."""

    master_seed: int = 42
    trials_per_checker: int = 500
    dims: tuple = DEFAULT_DIMS
    kernel_families: tuple = DEFAULT_FAMILIES
    param_grid: dict = field(default_factory=lambda: dict(DEFAULT_PARAM_GRID))
    checker_filter: tuple = ()
    check_tol: float = theorems.CHECK_TOL
    check_tol_overrides: dict = field(default_factory=dict)
    out: str = None
    format: str = "json"

    def validate(self):
        if self.trials_per_checker < 1:
            raise ConfigInvalid("trials_per_checker must be >= 1")
        if not self.dims or any(n1 < 1 or n2 < 1 for n1, n2 in self.dims):
            raise ConfigInvalid("dims entries must be >= 1")
        if not self.kernel_families:
            raise ConfigInvalid("need at least one kernel family")
        for tid in self.checker_filter:
            if tid not in ALL_CHECKERS:
                raise ConfigInvalid(f"unknown checker id {tid!r}")
        if self.format not in ("json", "csv"):
            raise ConfigInvalid(f"unknown report format {self.format!r}")

    def checkers(self):
        return tuple(self.checker_filter) if self.checker_filter else ALL_CHECKERS

    def tol_for(self, theorem_id):
        return float(self.check_tol_overrides.get(theorem_id, self.check_tol))

    def echo(self):
        return {
            "master_seed": self.master_seed,
            "trials_per_checker": self.trials_per_checker,
            "dims": [f"{n1}x{n2}" for n1, n2 in self.dims],
            "kernel_families": [
                {"tag": f.tag, "params": dict(f.params)} for f in self.kernel_families
            ],
            "param_grid": {k: list(v) if isinstance(v, (tuple, list)) else v
                           for k, v in sorted(self.param_grid.items())},
            "checker_filter": list(self.checker_filter),
            "check_tol": self.check_tol,
            "check_tol_overrides": dict(sorted(self.check_tol_overrides.items())),
        }


def derive_trial_seed(master_seed, theorem_id, index):
    """Stable 64-bit per-trial seed keyed by checker id and trial index."""
    text = f"{int(master_seed)}:{theorem_id}:{int(index)}".encode()
    return int.from_bytes(hashlib.blake2b(text, digest_size=8).digest(), "big")


# ---------------------------------------------------------------------------
# operator and space generators

def _complex_gaussian(rng, shape):
    return (rng.standard_normal(shape) + 1j * rng.standard_normal(shape)) / np.sqrt(2.0)


def _draw_operator(rng, kind, dim):
    g = _complex_gaussian(rng, (dim, dim))
    if kind == "ginibre":
        return g
    if kind == "hermitian":
        return (g + g.conj().T) / 2.0
    if kind == "psd":
        return g.conj().T @ g
    if kind == "unitary":
        return numlin.polar_decompose(g).isometry
    if kind == "partial_isometry":
        u = numlin.polar_decompose(g).isometry
        mask = rng.integers(0, 2, size=dim).astype(np.complex128)
        return u @ np.diag(mask)
    if kind == "contraction":
        norm = numlin.operator_norm(g)
        return g / max(norm, 1.0)
    if kind == "nilpotent":
        return np.triu(g, 1)
    raise BadParams(f"unknown operator kind {kind!r}")


def generate_operator(kind, dim, seed):
    """Deterministic random operator of a named ensemble."""
    if dim < 1:
        raise BadParams("dim must be >= 1")
    return _draw_operator(np.random.default_rng(int(seed)), kind, dim)


def _draw_rect(rng, kind, rows, cols):
    """Rectangular block obtained by slicing a square ensemble draw."""
    big = _draw_operator(rng, kind, max(rows, cols))
    return np.ascontiguousarray(big[:rows, :cols])


def _choice(rng, seq):
    return seq[int(rng.integers(len(seq)))]


def draw_space(rng, family, n, attempts=5):
    """Sample a kernel space; ill-conditioned point draws are retried."""
    last = None
    for _ in range(attempts):
        try:
            if family.tag == "identity":
                return rkhs.identity_space(n)
            if family.tag in ("szego", "bergman"):
                radii = 0.9 * np.sqrt(rng.random(n))
                angles = 2.0 * np.pi * rng.random(n)
                points = radii * np.exp(1j * angles)
                return rkhs.build_space(family, [complex(z) for z in points])
            points = rng.normal(0.0, 2.0, n)
            return rkhs.build_space(family, [float(x) for x in points])
        except BerlabError as exc:
            last = exc
    raise IllConditioned(f"space draw failed after {attempts} attempts: {last}")


# ---------------------------------------------------------------------------
# per-checker trial drawing

def _draw_scalar_pair(rng):
    # occasional exact zeros exercise the boundary of each inequality
    a = 0.0 if rng.random() < 0.1 else float(4.0 * rng.random())
    b = 0.0 if rng.random() < 0.1 else float(4.0 * rng.random())
    return a, b


def _draw_params(theorem_id, rng, grid):
    if theorem_id == "YOUNG2":
        return {"m": int(_choice(rng, grid["m"]))}
    if theorem_id == "I37":
        return {"nu": _choice(rng, grid["nu"]), "r": _choice(rng, grid["r"])}
    if theorem_id == "I38":
        p, q = _choice(rng, CONJUGATE_PAIRS)
        return {"p": p, "q": q, "r": _choice(rng, grid["r"])}
    if theorem_id == "L21c":
        return {"theta_grid": int(grid["theta_grid"])}
    if theorem_id in ("P39", "R310"):
        return {"r": _choice(rng, grid["r"])}
    if theorem_id in ("T311_stmt", "T311_proof"):
        p, q = _choice(rng, CONJUGATE_PAIRS)
        valid_r = [r for r in grid["r"] if q * r >= 2.0 - 1e-12]
        return {"p": p, "q": q, "r": _choice(rng, valid_r),
                "e": _choice(rng, grid["p"])}
    if theorem_id in ("T312_stmt", "T312_proof"):
        return {"nu": _choice(rng, grid["nu"]), "t": _choice(rng, grid["t"])}
    if theorem_id in ("T32", "T31", "C34"):
        return {"t": _choice(rng, grid["t"])}
    if theorem_id == "L22a":
        return {"r": _choice(rng, grid["r"])}
    if theorem_id == "L22b":
        return {"r": 1.0 / _choice(rng, grid["r"])}
    if theorem_id == "L23":
        return {"p": _choice(rng, grid["p"])}
    if theorem_id == "INEQ1":
        return {"s": _choice(rng, grid["s"]), "p": _choice(rng, grid["p"])}
    if theorem_id in ("T24a", "T24b", "C25a", "C25b", "T29", "C210"):
        return {"r": _choice(rng, grid["r"]), "p": _choice(rng, grid["p"])}
    if theorem_id in ("T36", "T37"):
        return {"alpha": _choice(rng, grid["alpha"])}
    return {}


@dataclass
class TrialDraw:
    """Concrete inputs of one checker trial; arrays are the free operands."""

    theorem_id: str
    trial_seed: int
    params: dict
    arrays: dict
    scalars: dict
    spaces: dict


def draw_trial(theorem_id, trial_seed, config):
    """Deterministically draw the inputs of one trial from its seed."""
    rng = np.random.default_rng(int(trial_seed))
    grid = config.param_grid
    params = _draw_params(theorem_id, rng, grid)
    arrays, scalars, spaces = {}, {}, {}

    if theorem_id in ("YOUNG2", "I37", "I38"):
        a, b = _draw_scalar_pair(rng)
        scalars = {"a": a, "b": b}
    elif theorem_id == "S310":
        n1, _ = _choice(rng, config.dims)
        n = max(n1, 2)
        arrays = {"a": _complex_gaussian(rng, n), "b": _complex_gaussian(rng, n),
                  "e": _complex_gaussian(rng, n)}
    elif theorem_id in theorems.SINGLE_IDS:
        n1, _ = _choice(rng, config.dims)
        family = _choice(rng, config.kernel_families)
        spaces["space"] = draw_space(rng, family, n1)
        kind = "psd" if theorem_id in ("L22a", "L22b") else _choice(rng, OPERATOR_KINDS)
        arrays["T"] = _draw_operator(rng, kind, n1)
        if theorem_id == "L23":
            arrays["x"] = _complex_gaussian(rng, n1)
            arrays["y"] = _complex_gaussian(rng, n1)
        elif theorem_id == "BER_SUB":
            arrays["B"] = _draw_operator(rng, _choice(rng, OPERATOR_KINDS), n1)
        elif theorem_id == "BER_HOM":
            alpha = complex(_complex_gaussian(rng, ()))
            params = {"alpha_re": alpha.real, "alpha_im": alpha.imag}
    elif theorem_id in theorems.BLOCK_IDS:
        shape = BLOCK_SHAPES[theorem_id]
        n1, n2 = _choice(rng, config.dims)
        if shape in ("tied_square", "offdiag_square"):
            n2 = n1
        family = _choice(rng, config.kernel_families)
        spaces["space1"] = draw_space(rng, family, n1)
        spaces["space2"] = (spaces["space1"] if shape == "tied_square"
                            else draw_space(rng, family, n2))
        kind = _choice(rng, OPERATOR_KINDS)
        if shape == "diag":
            arrays["S"] = _draw_operator(rng, kind, n1)
            arrays["R"] = _draw_operator(rng, _choice(rng, OPERATOR_KINDS), n2)
        elif shape == "tied_square":
            arrays["X"] = _draw_operator(rng, kind, n1)
        elif shape == "full":
            arrays["S"] = _draw_operator(rng, kind, n1)
            arrays["R"] = _draw_operator(rng, _choice(rng, OPERATOR_KINDS), n2)
            arrays["X"] = _draw_rect(rng, _choice(rng, OPERATOR_KINDS), n1, n2)
            arrays["Y"] = _draw_rect(rng, _choice(rng, OPERATOR_KINDS), n2, n1)
        else:
            arrays["X"] = _draw_rect(rng, kind, n1, n2)
            arrays["Y"] = _draw_rect(rng, _choice(rng, OPERATOR_KINDS), n2, n1)
    else:
        raise BadParams(f"unknown checker id {theorem_id!r}")
    return TrialDraw(theorem_id=theorem_id, trial_seed=int(trial_seed),
                     params=params, arrays=arrays, scalars=scalars,
                     spaces=spaces)


def _build_block(draw):
    sp1, sp2 = draw.spaces["space1"], draw.spaces["space2"]
    n1, n2 = sp1.dim, sp2.dim
    zero = lambda r, c: np.zeros((r, c), dtype=np.complex128)
    shape = BLOCK_SHAPES[draw.theorem_id]
    if shape == "diag":
        return blockops.BlockOperator(S=draw.arrays["S"], X=zero(n1, n2),
                                      Y=zero(n2, n1), R=draw.arrays["R"],
                                      space1=sp1, space2=sp2)
    if shape == "tied_square":
        x = draw.arrays["X"]
        return blockops.BlockOperator(S=zero(n1, n1), X=x, Y=x.copy(),
                                      R=zero(n2, n2), space1=sp1, space2=sp2)
    if shape == "full":
        return blockops.BlockOperator(S=draw.arrays["S"], X=draw.arrays["X"],
                                      Y=draw.arrays["Y"], R=draw.arrays["R"],
                                      space1=sp1, space2=sp2)
    return blockops.BlockOperator(S=zero(n1, n1), X=draw.arrays["X"],
                                  Y=draw.arrays["Y"], R=zero(n2, n2),
                                  space1=sp1, space2=sp2)


def evaluate_draw(draw, config):
    """Evaluate every convention of the drawn checker; returns Certificates."""
    tid = draw.theorem_id
    tol = config.tol_for(tid)
    if tid in theorems.SCALAR_IDS:
        if tid == "S310":
            inputs = (draw.arrays["a"], draw.arrays["b"], draw.arrays["e"])
        else:
            inputs = (draw.scalars["a"], draw.scalars["b"])
        certs = theorems.check_scalar(tid, draw.params, inputs, check_tol=tol)
    elif tid in theorems.SINGLE_IDS:
        extras = {k: v for k, v in draw.arrays.items() if k != "T"}
        certs = theorems.check_single(tid, draw.spaces["space"],
                                      draw.arrays["T"], draw.params,
                                      extras=extras, check_tol=tol)
    else:
        block = _build_block(draw)
        certs = []
        for conv, mode in BLOCK_CONVS[tid]:
            certs.extend(theorems.check_block(tid, block, conv, draw.params,
                                              mode=mode, check_tol=tol))
    return [dataclasses.replace(
        c, witness={**c.witness, "trial_seed": draw.trial_seed}) for c in certs]


# ---------------------------------------------------------------------------
# campaign aggregation

def _agg_key(cert):
    return (cert.theorem_id, cert.convention or "", cert.params.get("link", 0),
            cert.params.get("reading", ""), cert.mode)


@dataclass
class Report:
    """Aggregated campaign outcome."""

    config: dict
    results: list
    wall_time_ms: int
    version: str = __version__

    @property
    def gating_failures(self):
        return sum(r["failures"] for r in self.results if r["mode"] == GATING)

    def to_dict(self):
        return {
            "config": self.config,
            "results": self.results,
            "wall_time_ms": self.wall_time_ms,
            "version": self.version,
        }


def run_campaign(config):
    """Run every selected checker for the configured number of trials."""
    config.validate()
    started = time.monotonic()
    aggregates = {}
    anomalies = {}
    for tid in config.checkers():
        anomalies[tid] = 0
        for i in range(config.trials_per_checker):
            seed = derive_trial_seed(config.master_seed, tid, i)
            try:
                draw = draw_trial(tid, seed, config)
                certs = evaluate_draw(draw, config)
            except BerlabError:
                anomalies[tid] += 1
                continue
            for cert in certs:
                key = _agg_key(cert)
                agg = aggregates.get(key)
                if agg is None:
                    agg = {"theorem_id": cert.theorem_id,
                           "convention": cert.convention,
                           "link": cert.params.get("link", 0),
                           "reading": cert.params.get("reading", ""),
                           "mode": cert.mode, "trials": 0, "failures": 0,
                           "slack_sum": 0.0, "min_slack": None, "witness": None}
                    aggregates[key] = agg
                agg["trials"] += 1
                agg["slack_sum"] += cert.slack
                if not cert.holds and cert.mode == GATING:
                    agg["failures"] += 1
                if agg["min_slack"] is None or cert.slack < agg["min_slack"]:
                    agg["min_slack"] = cert.slack
                    agg["witness"] = cert
    results = []
    for key in sorted(aggregates):
        agg = aggregates[key]
        results.append({
            "theorem_id": agg["theorem_id"],
            "convention": agg["convention"],
            "link": agg["link"],
            "reading": agg["reading"],
            "mode": agg["mode"],
            "trials": agg["trials"],
            "failures": agg["failures"],
            "anomalies": anomalies.get(agg["theorem_id"], 0),
            "min_slack": agg["min_slack"],
            "mean_slack": agg["slack_sum"] / agg["trials"],
            "witness": agg["witness"].to_dict(),
        })
    wall = int((time.monotonic() - started) * 1000.0)
    return Report(config=config.echo(), results=results, wall_time_ms=wall)


# ---------------------------------------------------------------------------
# adversarial tightness search

def _min_gating_slack(certs):
    slacks = [c.slack for c in certs if c.mode == GATING]
    if not slacks:
        slacks = [c.slack for c in certs]
    return min(slacks)


def _worst_cert(certs):
    target = [c for c in certs if c.mode == GATING] or list(certs)
    return min(target, key=lambda c: c.slack)


def _perturb(draw, rng, step):
    """Gaussian bump of one coordinate of one free operand."""
    out = dataclasses.replace(
        draw,
        arrays={k: v.copy() for k, v in draw.arrays.items()},
        scalars=dict(draw.scalars),
    )
    names = sorted(out.arrays) + sorted(out.scalars)
    name = _choice(rng, names)
    if name in out.arrays:
        arr = out.arrays[name]
        idx = tuple(int(rng.integers(s)) for s in arr.shape)
        arr[idx] += step * complex(_complex_gaussian(rng, ()))
    else:
        out.scalars[name] = abs(out.scalars[name] + step * rng.standard_normal())
    return out


def explore(config, theorem_id, budget, restarts=10):
    """Coordinate-wise hill climb minimizing the gating slack of a checker.

    Starts from the minimum-slack random witness of a short campaign and
    never returns a certificate with larger slack than that start.
    """
    config.validate()
    if theorem_id not in ALL_CHECKERS:
        raise BadParams(f"unknown checker id {theorem_id!r}")
    if budget < 0:
        raise BadParams("budget must be >= 0")
    best_draw, best_slack, best_cert = None, None, None
    for i in range(config.trials_per_checker):
        seed = derive_trial_seed(config.master_seed, theorem_id, i)
        try:
            draw = draw_trial(theorem_id, seed, config)
            certs = evaluate_draw(draw, config)
        except BerlabError:
            continue
        slack = _min_gating_slack(certs)
        if best_slack is None or slack < best_slack:
            best_draw, best_slack, best_cert = draw, slack, _worst_cert(certs)
    if best_draw is None:
        raise BadParams(f"no evaluable random witness for {theorem_id!r}")
    if budget == 0:
        return best_cert
    rng = np.random.default_rng(derive_trial_seed(config.master_seed,
                                                  theorem_id + "/explore", 0))
    per_restart = max(1, budget // max(restarts, 1))
    rounds_left = budget
    for _ in range(restarts):
        if rounds_left <= 0:
            break
        current, current_slack = best_draw, best_slack
        step = 0.5
        for _ in range(min(per_restart, rounds_left)):
            rounds_left -= 1
            candidate = _perturb(current, rng, step)
            try:
                certs = evaluate_draw(candidate, config)
                slack = _min_gating_slack(certs)
            except BerlabError:
                step /= 2.0
                continue
            if slack < current_slack:
                current, current_slack = candidate, slack
                if slack < best_slack:
                    best_draw, best_slack = candidate, slack
                    best_cert = _worst_cert(certs)
            else:
                step /= 2.0
    return best_cert
