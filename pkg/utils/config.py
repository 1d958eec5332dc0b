"""
Engine Settings
Defaults, environment overrides and flag precedence for the genus engine
"""

import os
from dataclasses import dataclass, fields, replace
from typing import Any, Dict, Mapping, Optional

import psutil

from groups.engine import DEFAULT_THRESHOLD, EXTENDED_THRESHOLD
from utils.errors import SpecParseError


ENV_PREFIX = "COXETER_GENUS_"

TIERS = ("standard", "extended")
FORMATS = ("text", "json", "csv")

# Search threshold a tier uses when none is given.
TIER_THRESHOLDS = {"standard": DEFAULT_THRESHOLD, "extended": EXTENDED_THRESHOLD}

DEFAULT_SEED = 0
DEFAULT_BUDGET = 20000

_TRUE_VALUES = {"1", "true", "yes", "on"}
_FALSE_VALUES = {"0", "false", "no", "off", ""}


def default_jobs() -> int:
    """Physical core count, falling back to 1 where psutil cannot tell."""
    try:
        cores = psutil.cpu_count(logical=False)
    except Exception:
        cores = None
    return cores or 1


@dataclass(frozen=True)
class EngineSettings:
    threshold: Optional[int] = None
    seed: int = DEFAULT_SEED
    budget: int = DEFAULT_BUDGET
    jobs: int = 1
    tier: str = "standard"
    format: str = "text"
    heuristic: bool = False
    witness_out: Optional[str] = None

    def __post_init__(self):
        if self.tier not in TIERS:
            raise SpecParseError(f"unknown tier {self.tier!r}; expected one of {', '.join(TIERS)}")
        if self.threshold is None:
            object.__setattr__(self, "threshold", TIER_THRESHOLDS[self.tier])
        if self.threshold < 1:
            raise SpecParseError(f"threshold must be positive, got {self.threshold}")
        if self.budget < 0:
            raise SpecParseError(f"budget must be non-negative, got {self.budget}")
        if self.jobs < 1:
            raise SpecParseError(f"jobs must be at least 1, got {self.jobs}")
        if self.format not in FORMATS:
            raise SpecParseError(f"unknown format {self.format!r}; expected one of {', '.join(FORMATS)}")

    def for_tier(self, tier: str) -> "EngineSettings":
        """Same settings on another tier; a tier-default threshold follows the tier."""
        if tier == self.tier:
            return self
        threshold = self.threshold
        if threshold == TIER_THRESHOLDS[self.tier]:
            threshold = None
        return replace(self, tier=tier, threshold=threshold)

    def engine_parameters(self) -> Dict[str, Any]:
        """The parameters a report needs to be reproduced."""
        return {"threshold": self.threshold, "seed": self.seed, "budget": self.budget,
                "jobs": self.jobs, "heuristic": self.heuristic}


def _parse_int(name: str, raw: str) -> int:
    try:
        return int(raw.strip().replace("_", ""))
    except ValueError:
        raise SpecParseError(f"{ENV_PREFIX}{name} must be an integer, got {raw!r}") from None


def _parse_bool(name: str, raw: str) -> bool:
    value = raw.strip().lower()
    if value in _TRUE_VALUES:
        return True
    if value in _FALSE_VALUES:
        return False
    raise SpecParseError(f"{ENV_PREFIX}{name} must be a boolean, got {raw!r}")


_ENV_PARSERS = {
    "threshold": _parse_int,
    "seed": _parse_int,
    "budget": _parse_int,
    "jobs": _parse_int,
    "tier": lambda name, raw: raw.strip().lower(),
    "format": lambda name, raw: raw.strip().lower(),
    "heuristic": _parse_bool,
}


def env_overrides(environ: Optional[Mapping[str, str]] = None) -> Dict[str, Any]:
    """Settings named by COXETER_GENUS_* variables; unset variables are omitted."""
    environ = os.environ if environ is None else environ
    overrides = {}
    for field_name, parser in _ENV_PARSERS.items():
        key = ENV_PREFIX + field_name.upper()
        if key in environ:
            overrides[field_name] = parser(field_name.upper(), environ[key])
    return overrides


def resolve_settings(flags: Optional[Mapping[str, Any]] = None,
                     environ: Optional[Mapping[str, str]] = None) -> EngineSettings:
    """Flag beats environment beats default. Flags set to None count as absent."""
    known = {f.name for f in fields(EngineSettings)}
    merged = env_overrides(environ)
    for name, value in (flags or {}).items():
        if name in known and value is not None:
            merged[name] = value
    merged.setdefault("jobs", default_jobs())
    return EngineSettings(**merged)
