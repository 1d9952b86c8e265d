"""Run configuration: flat key = value files with '#' comments.

Minimal example::

    nx = 250
    ny = 125
    Re = 500          # mu = 1/Re under the unit reference scaling
    t_end = 1.0
    viscous = alpha6  # or shen6 / alpha4

Defaults follow the benchmark setup: gamma = 1.4, Pr = 0.73, R = 1,
cfl = 0.2, domain [0,1] x [0,0.5], shock-tube case, snapshots at
t = 0.45, 0.50, 0.54, 0.65, 1.0 (filtered to t_end).  Every malformed
input produces a ConfigError naming the key and line, never a crash.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .gas import GasModel
from .solver import DEFAULT_SNAPSHOT_TIMES, Grid2D, ghost_width_for
from .stencils import VISCOUS_KINDS, SchemeSpec, scheme_spec

CASES = ("shock_tube", "manufactured", "checkerboard")
_KNOWN_KEYS = {
    "nx", "ny", "x0", "x1", "y0", "y1",
    "gamma", "Pr", "R", "Re", "mu",
    "viscous", "inviscid", "convective",
    "cfl", "t_end", "snapshot_times",
    "output_dir", "case", "perturbation",
}


class ConfigError(ValueError):
    """Invalid configuration; carries the offending key and line number."""

    def __init__(self, message: str, key: str | None = None,
                 line: int | None = None):
        self.key = key
        self.line = line
        where = ""
        if key is not None:
            where += f" (key {key!r}"
            where += f", line {line})" if line is not None else ")"
        elif line is not None:
            where += f" (line {line})"
        super().__init__(message + where)


@dataclass(frozen=True)
class RunConfig:
    nx: int
    ny: int
    t_end: float
    mu: float
    re: float | None = None
    x0: float = 0.0
    x1: float = 1.0
    y0: float = 0.0
    y1: float = 0.5
    gamma: float = 1.4
    pr: float = 0.73
    r_gas: float = 1.0
    viscous: str = "alpha6"
    convective: bool = True
    cfl: float = 0.2
    snapshot_times: tuple[float, ...] = ()
    output_dir: str = "out"
    case: str = "shock_tube"
    perturbation: float = 1e-3

    def gas(self) -> GasModel:
        return GasModel(gamma=self.gamma, Pr=self.pr, R=self.r_gas, mu=self.mu)

    def scheme(self) -> SchemeSpec:
        return scheme_spec(self.viscous)

    @property
    def ghost(self) -> int:
        return ghost_width_for(self.scheme())

    def grid(self) -> Grid2D:
        return Grid2D(nx=self.nx, ny=self.ny, x0=self.x0, x1=self.x1,
                      y0=self.y0, y1=self.y1, ghost=self.ghost)


def _parse_scalar(key: str, raw: str, line: int, kind):
    try:
        if kind is bool:
            if raw.lower() in ("on", "true", "yes", "1"):
                return True
            if raw.lower() in ("off", "false", "no", "0"):
                return False
            raise ValueError(raw)
        return kind(raw)
    except ValueError:
        raise ConfigError(f"cannot parse {raw!r} as {kind.__name__}",
                          key, line) from None


def parse_config(text: str) -> RunConfig:
    """Parse and fully validate a flat key = value configuration."""
    raw: dict[str, tuple[str, int]] = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        body = line.split("#", 1)[0].strip()
        if not body:
            continue
        if "=" not in body:
            raise ConfigError("expected 'key = value'", line=lineno)
        key, _, value = body.partition("=")
        key, value = key.strip(), value.strip()
        if key not in _KNOWN_KEYS:
            raise ConfigError("unknown key", key, lineno)
        if key in raw:
            raise ConfigError("duplicate key", key, lineno)
        if not value:
            raise ConfigError("empty value", key, lineno)
        raw[key] = (value, lineno)

    def get(key, kind, default=None, required=False):
        if key not in raw:
            if required:
                raise ConfigError("missing required key", key)
            return default
        value, lineno = raw[key]
        return _parse_scalar(key, value, lineno, kind)

    nx = get("nx", int, required=True)
    ny = get("ny", int, required=True)
    t_end = get("t_end", float, required=True)
    re = get("Re", float)
    mu = get("mu", float)
    if (re is None) == (mu is None):
        key = "Re" if re is not None else "mu"
        raise ConfigError("exactly one of Re or mu must be given", key,
                          raw.get(key, (None, None))[1])
    if re is not None:
        if re <= 0:
            raise ConfigError("Re must be positive", "Re", raw["Re"][1])
        mu = 1.0 / re
    elif mu < 0:
        raise ConfigError("mu must be nonnegative", "mu", raw["mu"][1])

    case = get("case", str, default="shock_tube")
    if case not in CASES:
        raise ConfigError(f"case must be one of {CASES}", "case",
                          raw["case"][1])
    viscous = get("viscous", str, default="alpha6")
    if viscous not in VISCOUS_KINDS:
        raise ConfigError(f"viscous must be one of {VISCOUS_KINDS}",
                          "viscous", raw["viscous"][1])
    inviscid = get("inviscid", str, default="mp5-cllf")
    if inviscid != "mp5-cllf":
        raise ConfigError("only the mp5-cllf convective scheme is available",
                          "inviscid", raw["inviscid"][1])
    convective = get("convective", bool, default=(case == "shock_tube"))

    cfl = get("cfl", float, default=0.2)
    if not 0 < cfl <= 1:
        raise ConfigError("require 0 < cfl <= 1", "cfl",
                          raw.get("cfl", (None, None))[1])
    if t_end < 0:
        raise ConfigError("t_end must be nonnegative", "t_end",
                          raw["t_end"][1])

    if "snapshot_times" in raw:
        value, lineno = raw["snapshot_times"]
        try:
            times = tuple(float(tok) for tok in value.split(",") if tok.strip())
        except ValueError:
            raise ConfigError("expected a comma-separated list of floats",
                              "snapshot_times", lineno) from None
        if list(times) != sorted(times):
            raise ConfigError("snapshot_times must be sorted ascending",
                              "snapshot_times", lineno)
        if times and times[-1] > t_end:
            raise ConfigError("snapshot_times must not exceed t_end",
                              "snapshot_times", lineno)
    else:
        times = tuple(t for t in DEFAULT_SNAPSHOT_TIMES if t <= t_end)

    perturbation = get("perturbation", float, default=1e-3)
    if perturbation <= 0:
        raise ConfigError("perturbation must be positive", "perturbation",
                          raw["perturbation"][1])

    cfg = RunConfig(
        nx=nx, ny=ny, t_end=t_end, mu=mu, re=re,
        x0=get("x0", float, default=0.0), x1=get("x1", float, default=1.0),
        y0=get("y0", float, default=0.0), y1=get("y1", float, default=0.5),
        gamma=get("gamma", float, default=1.4),
        pr=get("Pr", float, default=0.73),
        r_gas=get("R", float, default=1.0),
        viscous=viscous, convective=convective, cfl=cfl,
        snapshot_times=times,
        output_dir=get("output_dir", str, default="out"),
        case=case, perturbation=perturbation,
    )
    validate_config(cfg)
    return cfg


def validate_config(cfg: RunConfig) -> None:
    """Cross-field checks shared by the parser and CLI overrides."""
    if cfg.gamma <= 1:
        raise ConfigError("gamma must exceed 1", "gamma")
    if cfg.pr <= 0 or cfg.r_gas <= 0:
        raise ConfigError("Pr and R must be positive",
                          "Pr" if cfg.pr <= 0 else "R")
    if not (cfg.x1 > cfg.x0 and cfg.y1 > cfg.y0):
        raise ConfigError("domain bounds must be increasing", "x1")
    need = 2 * cfg.ghost
    if min(cfg.nx, cfg.ny) < need:
        raise ConfigError(
            f"viscous scheme {cfg.viscous!r} needs nx, ny >= {need}", "nx")
    if cfg.case == "checkerboard" and cfg.nx % 2:
        raise ConfigError("checkerboard case needs an even nx", "nx")


def load_config(path) -> RunConfig:
    try:
        text = open(path, encoding="utf-8").read()
    except OSError as exc:
        raise ConfigError(f"cannot read config file: {exc}") from None
    return parse_config(text)
