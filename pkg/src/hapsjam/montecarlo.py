"""Brute-force SJR simulation used as the oracle for the closed forms.

Samples are generated in fixed-size blocks. Block ``k`` of link ``l`` draws
from a Philox stream keyed by ``SeedSequence(seed, spawn_key=(k, l))``, so
results depend on (seed, samples, block_size) only and never on how many
workers process the blocks.
"""

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .analytics import Scenario
from .channel import LinkState
from .linkbudget import db_to_linear, link_coefficients, sample_shadowing_db

_TG_STREAM = 0
_RG_STREAM = 1


class JammerDraw(str, Enum):
    SHARED = "shared"
    INDEPENDENT = "independent"


class BudgetMode(str, Enum):
    SIMPLIFIED = "simplified"
    FULL = "full"


@dataclass(frozen=True)
class McConfig:
    samples: int = 1_000_000
    seed: int = 0
    jammer_draw: JammerDraw = JammerDraw.INDEPENDENT
    budget_mode: BudgetMode = BudgetMode.SIMPLIFIED
    block_size: int = 1 << 16
    workers: int = 1

    def __post_init__(self):
        object.__setattr__(self, "jammer_draw", JammerDraw(self.jammer_draw))
        object.__setattr__(self, "budget_mode", BudgetMode(self.budget_mode))
        if int(self.samples) < 1:
            raise ValueError("samples must be >= 1")
        if int(self.block_size) < 1:
            raise ValueError("block_size must be >= 1")
        if int(self.workers) < 1:
            raise ValueError("workers must be >= 1")
        if not 0 <= int(self.seed) < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")

    def blocks(self):
        """(index, size) of every sample block."""
        n, size = int(self.samples), int(self.block_size)
        return [(k, min(size, n - k * size)) for k in range(math.ceil(n / size))]


@dataclass
class EmpiricalCdf:
    thresholds_db: np.ndarray
    cdf: np.ndarray
    n: int
    seed: int = None

    @property
    def stderr(self):
        return np.sqrt(self.cdf * (1.0 - self.cdf) / self.n)


@dataclass
class DeviationReport:
    max_abs_dev: float
    argmax_db: float
    deviations: np.ndarray
    stderr: np.ndarray
    thresholds_db: np.ndarray
    n: int

    def format(self):
        lines = [
            f"samples = {self.n}",
            f"max_abs_dev = {self.max_abs_dev:.6f}",
            f"at_gamma_db = {self.argmax_db:g}",
            f"max_stderr = {float(np.max(self.stderr)):.6f}",
            "gamma_db,deviation,stderr",
        ]
        lines += [f"{g:g},{d:.6f},{s:.6f}"
                  for g, d, s in zip(self.thresholds_db, self.deviations, self.stderr)]
        return "\n".join(lines)


def block_rng(seed, block, stream):
    ss = np.random.SeedSequence(int(seed), spawn_key=(int(block), int(stream)))
    return np.random.Generator(np.random.Philox(ss))


def _draw_states(p_los, forced, rng, n):
    if forced:
        return np.ones(n, dtype=bool)
    return rng.random(n) < p_los


def _received(spec, fading, mc, rng, n):
    """Received power (up to the common dB reference) of one link, n samples."""
    d_los, d_nlos = link_coefficients(spec)
    los = _draw_states(spec.p_los(), spec.forced_los, rng, n)
    m_l, o_l = fading.shape_scale(LinkState.LOS)
    m_n, o_n = fading.shape_scale(LinkState.NLOS)
    shape = np.where(los, m_l, m_n)
    scale = np.where(los, o_l, o_n)
    gain = rng.gamma(shape, scale)
    power = np.where(los, d_los, d_nlos) * gain
    if mc.budget_mode is BudgetMode.FULL:
        extra_db = spec.antenna_attenuation_db() + spec.other_loss_db
        extra_db = extra_db + sample_shadowing_db(spec.shadowing_sigma_db, rng, n)
        power = power * db_to_linear(-extra_db)
    return power


def _simulate_block(cfg, mc, block, n):
    """Per-link SJR samples (sjr_tg, sjr_rg or None) for one block."""
    rng_tg = block_rng(mc.seed, block, _TG_STREAM)
    useful_tg = _received(cfg.tg, cfg.fading, mc, rng_tg, n)
    jam_tg = _received(cfg.hg, cfg.fading, mc, rng_tg, n)
    sjr_tg = useful_tg / jam_tg
    if cfg.scenario is not Scenario.RELAY:
        return sjr_tg, None
    rng_rg = block_rng(mc.seed, block, _RG_STREAM)
    useful_rg = _received(cfg.rg, cfg.fading, mc, rng_rg, n)
    if mc.jammer_draw is JammerDraw.SHARED:
        jam_rg = jam_tg
    else:
        jam_rg = _received(cfg.hg, cfg.fading, mc, rng_rg, n)
    return sjr_tg, useful_rg / jam_rg


def _combine(cfg, sjr_tg, sjr_rg):
    # relay: the ground station keeps the better of the two links
    if sjr_rg is None:
        return sjr_tg
    return np.maximum(sjr_tg, sjr_rg)


def simulate_link_sjr(cfg, mc):
    """Linear per-link SJR samples, in block order: (sjr_tg, sjr_rg or None)."""
    parts = [_simulate_block(cfg, mc, k, n) for k, n in mc.blocks()]
    tg = np.concatenate([p[0] for p in parts])
    rg = None if parts[0][1] is None else np.concatenate([p[1] for p in parts])
    return tg, rg


def simulate_sjr(cfg, mc):
    """Linear SJR samples of the configured scenario (max over links for relay)."""
    return _combine(cfg, *simulate_link_sjr(cfg, mc))


def _count_below(samples, gammas):
    return np.searchsorted(np.sort(samples), gammas, side="left").astype(np.int64)


def empirical_cdf(samples, thresholds_db, seed=None):
    """Fraction of linear SJR samples strictly below each dB threshold."""
    samples = np.asarray(samples, dtype=float).ravel()
    if samples.size == 0:
        raise ValueError("empirical_cdf needs at least one sample")
    grid = np.asarray(thresholds_db, dtype=float)
    if np.any(np.diff(grid) <= 0):
        raise ValueError("threshold grid must be strictly increasing")
    counts = _count_below(samples, db_to_linear(grid))
    return EmpiricalCdf(grid, counts / samples.size, int(samples.size), seed)


def run_cdf(cfg, mc, thresholds_db=None):
    """Streaming empirical CDF: per-block counts summed, samples not retained."""
    grid = np.asarray(cfg.thresholds_db if thresholds_db is None else thresholds_db, dtype=float)
    gammas = db_to_linear(grid)

    def count(block):
        k, n = block
        return _count_below(_combine(cfg, *_simulate_block(cfg, mc, k, n)), gammas)

    blocks = mc.blocks()
    if mc.workers > 1 and len(blocks) > 1:
        with ThreadPoolExecutor(max_workers=mc.workers) as pool:
            counts = list(pool.map(count, blocks))
    else:
        counts = [count(b) for b in blocks]
    total = np.sum(counts, axis=0, dtype=np.int64)
    return EmpiricalCdf(grid, total / mc.samples, int(mc.samples), int(mc.seed))


def compare(analytic, empirical):
    """Max absolute deviation of an analytic curve from an empirical CDF."""
    a_grid = np.asarray(analytic.thresholds_db, dtype=float)
    e_grid = np.asarray(empirical.thresholds_db, dtype=float)
    if a_grid.shape != e_grid.shape or not np.allclose(a_grid, e_grid, rtol=0, atol=1e-12):
        raise ValueError("analytic and empirical curves use different threshold grids")
    dev = np.abs(np.asarray(analytic.p_jam) - np.asarray(empirical.cdf))
    i = int(np.argmax(dev))
    return DeviationReport(
        max_abs_dev=float(dev[i]),
        argmax_db=float(a_grid[i]),
        deviations=dev,
        stderr=empirical.stderr,
        thresholds_db=a_grid,
        n=empirical.n,
    )
