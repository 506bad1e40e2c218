"""Flat ``key = value`` configuration files.

Global keys apply to every link unless a per-link key (``tg.``, ``rg.`` or
``hg.`` prefix) overrides them. Unset keys take the reference values:
2 GHz, Pt = 10 dB for both satellites and -10 dB for the HAPS, distances
550/600/20 km, exponents 2 / 2.2, fading (3, 1/3) LOS and (2, 1/2) NLOS,
and a jammer that is always in LOS.

Example::

    scenario = 2
    beta = urban
    tg.elevation_deg = 30
    rg.elevation_deg = 60
"""

import configparser
import math

from .analytics import DEFAULT_GRID_DB, Scenario, ScenarioConfig
from .channel import BETA_PRESETS, Environment, FadingSpec
from .linkbudget import LinkSpec
from .montecarlo import BudgetMode, JammerDraw

LINKS = ("tg", "rg", "hg")

# per-link keys that fall back to a global key of the same name
INHERITED = ("frequency_hz", "beta", "alpha_los", "alpha_nlos")

LINK_DEFAULTS = {
    "tg": {"tx_power_db": 10.0, "distance_m": 550e3, "elevation_deg": 30.0, "forced_los": False},
    "rg": {"tx_power_db": 10.0, "distance_m": 600e3, "elevation_deg": 60.0, "forced_los": False},
    "hg": {"tx_power_db": -10.0, "distance_m": 20e3, "elevation_deg": 90.0, "forced_los": True},
}

GLOBAL_DEFAULTS = {
    "scenario": "1",
    "frequency_hz": 2e9,
    "beta": "urban",
    "alpha_los": 2.0,
    "alpha_nlos": 2.2,
    "m_los": 3.0,
    "omega_los": 1.0 / 3.0,
    "m_nlos": 2.0,
    "omega_nlos": 0.5,
    "grid": "-20:40:1",
    "theta_rg_list": "30,60,90",
    "jammer_draw": JammerDraw.INDEPENDENT.value,
    "budget_mode": BudgetMode.SIMPLIFIED.value,
}

LINK_FIELDS = {
    "tx_power_db": float,
    "tx_gain_db": float,
    "rx_gain_db": float,
    "frequency_hz": float,
    "distance_m": float,
    "elevation_deg": float,
    "beta": str,
    "alpha_los": float,
    "alpha_nlos": float,
    "forced_los": bool,
    "shadowing_sigma_db": float,
    "aperture_radius_wl": float,
    "boresight_deg": float,
    "other_loss_db": float,
}

LINK_FIELD_DEFAULTS = {
    "tx_gain_db": 0.0,
    "rx_gain_db": 0.0,
    "shadowing_sigma_db": 0.0,
    "aperture_radius_wl": None,
    "boresight_deg": None,
    "other_loss_db": 0.0,
}

_SECTION = "config"


class ConfigError(ValueError):
    def __init__(self, key, message):
        super().__init__(f"config key '{key}': {message}")
        self.key = key


def parse_grid(text):
    """'start:stop:step' (inclusive stop) or a comma-separated list."""
    text = str(text).strip()
    if ":" in text:
        parts = text.split(":")
        if len(parts) != 3:
            raise ValueError(f"grid {text!r} must look like start:stop:step")
        start, stop, step = (float(p) for p in parts)
        if step <= 0 or stop < start:
            raise ValueError(f"grid {text!r} needs step > 0 and stop >= start")
        count = int(math.floor((stop - start) / step + 1e-9)) + 1
        return tuple(round(start + i * step, 12) for i in range(count))
    return tuple(float(p) for p in text.split(",") if p.strip())


def _parse_bool(text):
    value = str(text).strip().lower()
    if value in ("1", "true", "yes", "on"):
        return True
    if value in ("0", "false", "no", "off"):
        return False
    raise ValueError(f"expected a boolean, got {text!r}")


def _format(value):
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return "none"
    if isinstance(value, float):
        return repr(value)
    return str(value)


def read_pairs(text):
    """Raw ``key -> value`` strings from a flat config text."""
    parser = configparser.ConfigParser(interpolation=None, delimiters=("=",),
                                       comment_prefixes=("#", ";"), inline_comment_prefixes=("#",))
    parser.optionxform = str
    try:
        parser.read_string(f"[{_SECTION}]\n" + text)
    except configparser.Error as exc:
        raise ConfigError(getattr(exc, "option", None) or "<syntax>", str(exc).splitlines()[0]) from None
    return dict(parser[_SECTION])


def resolve(pairs):
    """Full, validated key set with defaults applied and values normalised."""
    known_links = {f"{link}.{name}" for link in LINKS for name in LINK_FIELDS}
    for key in pairs:
        if key not in GLOBAL_DEFAULTS and key not in known_links:
            raise ConfigError(key, "unknown key")

    out = {}
    for key, default in GLOBAL_DEFAULTS.items():
        raw = pairs.get(key, default)
        out[key] = _coerce_global(key, raw)

    for link in LINKS:
        for name, kind in LINK_FIELDS.items():
            key = f"{link}.{name}"
            if key in pairs:
                raw = pairs[key]
            elif name in INHERITED:
                raw = out[name]
            elif name in LINK_DEFAULTS[link]:
                raw = LINK_DEFAULTS[link][name]
            else:
                raw = LINK_FIELD_DEFAULTS[name]
            out[key] = _coerce_link(key, kind, raw)
    # surface semantic errors under the key that caused them
    for link in LINKS:
        try:
            build_link(out, link)
        except ValueError as exc:
            raise ConfigError(f"{link}.*", str(exc)) from None
    return out


def _coerce_global(key, raw):
    try:
        if key == "scenario":
            return str(Scenario.parse(raw).value)
        if key == "beta":
            return _normalise_beta(raw)
        if key == "grid":
            grid = parse_grid(raw)
            if not grid or any(b <= a for a, b in zip(grid, grid[1:])):
                raise ValueError("grid must be non-empty and strictly increasing")
            return str(raw).strip()
        if key == "theta_rg_list":
            values = parse_grid(raw)
            if not values or any(not 0 < v <= 90 for v in values):
                raise ValueError("angles must lie in (0, 90]")
            return ",".join(_format(v) for v in values)
        if key == "jammer_draw":
            return JammerDraw(str(raw).strip().lower()).value
        if key == "budget_mode":
            return BudgetMode(str(raw).strip().lower()).value
        value = float(raw)
        if not (value > 0 and math.isfinite(value)):
            raise ValueError("must be positive and finite")
        return value
    except ValueError as exc:
        raise ConfigError(key, str(exc)) from None


def _normalise_beta(raw):
    text = str(raw).strip().lower()
    if text in BETA_PRESETS:
        return text
    return _format(Environment.parse(text).beta)


def _coerce_link(key, kind, raw):
    try:
        if raw is None or (isinstance(raw, str) and raw.strip().lower() == "none"):
            if key.split(".", 1)[1] in ("aperture_radius_wl", "boresight_deg"):
                return None
            raise ValueError("value required")
        if kind is bool:
            return raw if isinstance(raw, bool) else _parse_bool(raw)
        if kind is str:
            return _normalise_beta(raw)
        value = float(raw)
        if not math.isfinite(value):
            raise ValueError("must be finite")
        return value
    except ValueError as exc:
        raise ConfigError(key, str(exc)) from None


def build_link(resolved, link, **overrides):
    fields = {name: resolved[f"{link}.{name}"] for name in LINK_FIELDS}
    fields.update(overrides)
    beta = fields.pop("beta")
    return LinkSpec(env=Environment.parse(beta), **fields)


def build_scenario(resolved, scenario=None, beta=None, thresholds_db=None, **link_overrides):
    """ScenarioConfig from a resolved key set.

    ``beta`` (preset or number) replaces the environment of every link.
    ``link_overrides`` maps 'tg'/'rg'/'hg' to LinkSpec field overrides.
    """
    links = {}
    for link in LINKS:
        overrides = dict(link_overrides.get(link, {}))
        if beta is not None:
            overrides["beta"] = _normalise_beta(beta)
        links[link] = build_link(resolved, link, **overrides)
    fading = FadingSpec(resolved["m_los"], resolved["omega_los"],
                        resolved["m_nlos"], resolved["omega_nlos"])
    grid = parse_grid(resolved["grid"]) if thresholds_db is None else thresholds_db
    return ScenarioConfig(
        scenario=Scenario.parse(scenario or resolved["scenario"]),
        tg=links["tg"],
        hg=links["hg"],
        rg=links["rg"],
        fading=fading,
        thresholds_db=grid,
    )


def load(path):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ConfigError("--config", f"cannot read {path}: {exc.strerror}") from None
    return resolve(read_pairs(text))


def dump(resolved):
    """Resolved config as ``key = value`` lines; re-parses to the same key set."""
    return [f"{key} = {_format(resolved[key])}" for key in resolved]
