"""Closed-form jamming probabilities and their quadrature cross-check.

A link is jammed when ``D_u h_u < gamma * D_j h_j``, with Gamma power gains
on both sides. For fixed LOS/NLOS states the ratio of the normalised gains
is beta-prime distributed, so the conditional probability reduces to a
single 2F1 evaluation on [-1, 0]. The LOS/NLOS states of the useful link
and of the jammer link are independent Bernoulli draws.
"""

import math
from dataclasses import dataclass, field
from enum import Enum

import numpy as np
from scipy import integrate

from .channel import FadingSpec, LinkState
from .linkbudget import db_to_linear, link_coefficients
from .specfun import gauss_2f1, ln_gamma, reg_lower_gamma

DEFAULT_GRID_DB = tuple(float(g) for g in range(-20, 41))


class Scenario(Enum):
    DIRECT = 1
    RELAY = 2

    @classmethod
    def parse(cls, value):
        if isinstance(value, Scenario):
            return value
        text = str(value).strip().lower()
        if text in ("1", "direct"):
            return cls.DIRECT
        if text in ("2", "relay"):
            return cls.RELAY
        raise ValueError(f"unknown scenario {value!r}; expected 1/direct or 2/relay")


@dataclass(frozen=True)
class ScenarioConfig:
    scenario: Scenario
    tg: "LinkSpec"
    hg: "LinkSpec"
    fading: FadingSpec = field(default_factory=FadingSpec)
    rg: "LinkSpec" = None
    thresholds_db: tuple = DEFAULT_GRID_DB

    def __post_init__(self):
        object.__setattr__(self, "scenario", Scenario.parse(self.scenario))
        object.__setattr__(self, "thresholds_db", tuple(float(g) for g in self.thresholds_db))
        if self.scenario is Scenario.RELAY and self.rg is None:
            raise ValueError("relay scenario requires an rg link")
        grid = np.asarray(self.thresholds_db)
        if grid.size == 0 or np.any(np.diff(grid) <= 0) or not np.all(np.isfinite(grid)):
            raise ValueError("threshold grid must be non-empty, finite and strictly increasing")


@dataclass
class JamProbCurve:
    """Jamming probability over a threshold grid.

    For the relay scenario the conditional columns are conditioned on the
    state of the TG link and already include the RG factor.
    """

    thresholds_db: np.ndarray
    p_jam: np.ndarray
    p_jam_los_cond: np.ndarray
    p_jam_nlos_cond: np.ndarray


def pairwise_jam_prob(d_useful, m_useful, omega_useful, d_jammer, m_jammer, omega_jammer, gamma):
    """P(d_useful * h_u < gamma * d_jammer * h_j) for independent Gamma gains.

    With X = (h_u/omega_u) / (h_j/omega_j) ~ BetaPrime(m_u, m_j), the event is
    X < z where z = gamma d_j omega_j / (d_u omega_u), and

        P(X < z) = Gamma(a+b) / (Gamma(a+1) Gamma(b)) z^a 2F1(a, a+b; a+1; -z).

    For z > 1 the complementary form in 1/z is used so the 2F1 argument
    always stays in [-1, 0].
    """
    if gamma <= 0:
        return 0.0
    a, b = float(m_useful), float(m_jammer)
    z = gamma * d_jammer * omega_jammer / (d_useful * omega_useful)
    if math.isinf(z):
        return 1.0
    if z <= 1.0:
        log_c = ln_gamma(a + b) - ln_gamma(a + 1.0) - ln_gamma(b)
        p = math.exp(log_c + a * math.log(z)) * gauss_2f1(a, a + b, a + 1.0, -z)
    else:
        log_c = ln_gamma(a + b) - ln_gamma(b + 1.0) - ln_gamma(a)
        p = 1.0 - math.exp(log_c - b * math.log(z)) * gauss_2f1(b, a + b, b + 1.0, -1.0 / z)
    return min(1.0, max(0.0, p))


def _paper_literal_conditional(useful, jammer, jammer_los_probs, fading, useful_state, gamma):
    # the two printed conditional expressions, symbol for symbol ("D_N^GT" read as D_N^TG)
    d_tl, d_tn = useful
    d_hl, d_hn = jammer
    p_l, p_n = jammer_los_probs
    m_l, o_l, m_n, o_n = fading.m_los, fading.omega_los, fading.m_nlos, fading.omega_nlos
    g = math.gamma
    if LinkState(useful_state) is LinkState.LOS:
        first = p_l * d_tl / (d_hl * gamma) * (
            1 - o_l**m_l * (d_hl * gamma / d_tl * o_l) ** (-m_l) * g(2 * m_l)
            * gauss_2f1(m_l, 2 * m_l, m_l + 1, -d_tl / (d_hl * gamma)) / g(m_l))
        second = (
            1 - o_n**m_n * (d_hl * gamma / d_hn * o_l) ** (-m_n) * g(m_l + m_n)
            * gauss_2f1(m_n, m_l + m_n, m_n + 1, -o_n / (d_tl * o_l * d_hn * gamma)) / g(m_l)
        ) * d_tl * p_n / (d_hn * gamma)
    else:
        first = p_l * d_tn / (d_hl * gamma) * (
            1 - o_l**m_l * (d_hl * gamma / d_tn * o_n) ** (-m_l) * g(m_l + m_n)
            * gauss_2f1(m_l, m_l + m_n, m_l + 1, -o_l * d_tn / (o_n * d_hl * gamma)) / g(m_n))
        second = (
            1 - o_n**m_n * (d_hn * gamma / d_tn * o_n) ** (-m_n) * g(2 * m_n)
            * gauss_2f1(m_n, 2 * m_n, m_n + 1, -d_tn / (d_hn * gamma)) / g(m_l)
        ) * d_tn * p_n / (d_hn * gamma)
    return first + second


def jam_prob_conditional(useful, jammer, jammer_los_probs, fading, useful_state, gamma_th,
                         paper_literal=False):
    """Jamming probability given the useful link's LOS/NLOS state.

    ``useful`` and ``jammer`` are (D_los, D_nlos) coefficient pairs,
    ``jammer_los_probs`` is (p_L, p_N) of the jammer link and ``gamma_th``
    is linear. ``paper_literal=True`` evaluates the expressions exactly as
    printed in the source derivation; they are not probabilities in general
    and are kept only for comparison.
    """
    if gamma_th <= 0:
        return 0.0
    if paper_literal:
        return _paper_literal_conditional(useful, jammer, jammer_los_probs, fading,
                                          useful_state, gamma_th)
    state = LinkState(useful_state)
    d_u = useful[0] if state is LinkState.LOS else useful[1]
    m_u, o_u = fading.shape_scale(state)
    total = 0.0
    for d_j, p_j, j_state in zip(jammer, jammer_los_probs, (LinkState.LOS, LinkState.NLOS)):
        if p_j == 0.0:
            continue
        m_j, o_j = fading.shape_scale(j_state)
        total += p_j * pairwise_jam_prob(d_u, m_u, o_u, d_j, m_j, o_j, gamma_th)
    return min(1.0, max(0.0, total))


def _gamma_pdf(h, m, omega):
    if h <= 0.0:
        return 0.0
    return math.exp((m - 1.0) * math.log(h) - h / omega - ln_gamma(m) - m * math.log(omega))


def jam_prob_quadrature(useful, jammer, jammer_los_probs, fading, useful_state, gamma_th):
    """Numerical-integration counterpart of `jam_prob_conditional`.

    Averages the useful-link CDF, P(m_u, gamma D_j h_j / (D_u omega_u)), over
    the Gamma density of the jammer gain h_j, for each jammer state.
    """
    if gamma_th <= 0:
        return 0.0
    state = LinkState(useful_state)
    d_u = useful[0] if state is LinkState.LOS else useful[1]
    m_u, o_u = fading.shape_scale(state)
    total = 0.0
    for d_j, p_j, j_state in zip(jammer, jammer_los_probs, (LinkState.LOS, LinkState.NLOS)):
        if p_j == 0.0:
            continue
        m_j, o_j = fading.shape_scale(j_state)
        scale = gamma_th * d_j / (d_u * o_u)

        def integrand(h):
            return _gamma_pdf(h, m_j, o_j) * reg_lower_gamma(m_u, scale * h)

        # split at the jammer-gain mean and at the useful CDF's knee
        knees = sorted({m_j * o_j, m_u / scale, 10.0 * m_j * o_j + 50.0 * o_j})
        edges = [0.0] + [k for k in knees if k > 0.0 and math.isfinite(k)]
        value = 0.0
        for lo, hi in zip(edges[:-1], edges[1:]):
            part, _ = integrate.quad(integrand, lo, hi, epsabs=1e-13, epsrel=1e-11, limit=200)
            value += part
        tail, _ = integrate.quad(integrand, edges[-1], math.inf, epsabs=1e-13, epsrel=1e-11,
                                 limit=200)
        total += p_j * (value + tail)
    return min(1.0, max(0.0, total))


def link_jam_components(useful, jammer, fading, gamma_th, paper_literal=False):
    """(P_jam, P_jam | useful LOS, P_jam | useful NLOS) for one useful link."""
    p_l = useful.p_los()
    jammer_probs = (jammer.p_los(), 1.0 - jammer.p_los())
    d_useful = link_coefficients(useful)
    d_jammer = link_coefficients(jammer)
    los = jam_prob_conditional(d_useful, d_jammer, jammer_probs, fading, LinkState.LOS,
                               gamma_th, paper_literal)
    nlos = jam_prob_conditional(d_useful, d_jammer, jammer_probs, fading, LinkState.NLOS,
                                gamma_th, paper_literal)
    return p_l * los + (1.0 - p_l) * nlos, los, nlos


def jam_prob_link(useful, jammer, fading, gamma_th, paper_literal=False):
    """p_L(theta_u) P^{u,L} + p_N(theta_u) P^{u,N} for one useful link."""
    return link_jam_components(useful, jammer, fading, gamma_th, paper_literal)[0]


def jam_prob_scenario1(cfg, gamma_th, paper_literal=False):
    if cfg.scenario is not Scenario.DIRECT:
        raise ValueError("jam_prob_scenario1 needs a direct (scenario 1) configuration")
    return jam_prob_link(cfg.tg, cfg.hg, cfg.fading, gamma_th, paper_literal)


def jam_prob_scenario2(cfg, gamma_th, paper_literal=False):
    """Both the TG and RG links jammed; the per-link events are independent."""
    if cfg.scenario is not Scenario.RELAY or cfg.rg is None:
        raise ValueError("jam_prob_scenario2 needs a relay (scenario 2) configuration with rg")
    p_tg = jam_prob_link(cfg.tg, cfg.hg, cfg.fading, gamma_th, paper_literal)
    p_rg = jam_prob_link(cfg.rg, cfg.hg, cfg.fading, gamma_th, paper_literal)
    return p_tg * p_rg


def jam_prob(cfg, gamma_th, paper_literal=False):
    if cfg.scenario is Scenario.DIRECT:
        return jam_prob_scenario1(cfg, gamma_th, paper_literal)
    return jam_prob_scenario2(cfg, gamma_th, paper_literal)


def sjr_cdf_curve(cfg, paper_literal=False):
    """Evaluate the scenario's jamming probability over ``cfg.thresholds_db``."""
    grid = np.asarray(cfg.thresholds_db, dtype=float)
    p = np.empty_like(grid)
    p_los = np.empty_like(grid)
    p_nlos = np.empty_like(grid)
    for i, gamma in enumerate(db_to_linear(grid)):
        total, los, nlos = link_jam_components(cfg.tg, cfg.hg, cfg.fading, gamma, paper_literal)
        if cfg.scenario is Scenario.RELAY:
            p_rg = jam_prob_link(cfg.rg, cfg.hg, cfg.fading, gamma, paper_literal)
            total, los, nlos = total * p_rg, los * p_rg, nlos * p_rg
        p[i], p_los[i], p_nlos[i] = total, los, nlos
    return JamProbCurve(grid, p, p_los, p_nlos)
