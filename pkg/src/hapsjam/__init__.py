"""Jamming probability of LEO downlinks under a HAPS jammer.

Closed-form Lemma-style analytics (`analytics`), a Monte Carlo oracle
(`montecarlo`), the fading and link-budget models they share, and a small
special-function kernel.
"""

__version__ = "0.1.0"

from .analytics import (
    JamProbCurve,
    Scenario,
    ScenarioConfig,
    jam_prob,
    jam_prob_conditional,
    jam_prob_link,
    jam_prob_quadrature,
    jam_prob_scenario1,
    jam_prob_scenario2,
    sjr_cdf_curve,
)
from .channel import BETA_PRESETS, Environment, FadingSpec, LinkState, RicianSpec
from .linkbudget import LinkSpec, link_coefficient
from .montecarlo import McConfig, compare, empirical_cdf, run_cdf, simulate_sjr

__all__ = [
    "BETA_PRESETS",
    "Environment",
    "FadingSpec",
    "JamProbCurve",
    "LinkSpec",
    "LinkState",
    "McConfig",
    "RicianSpec",
    "Scenario",
    "ScenarioConfig",
    "compare",
    "empirical_cdf",
    "jam_prob",
    "jam_prob_conditional",
    "jam_prob_link",
    "jam_prob_quadrature",
    "jam_prob_scenario1",
    "jam_prob_scenario2",
    "link_coefficient",
    "run_cdf",
    "simulate_sjr",
    "sjr_cdf_curve",
]
