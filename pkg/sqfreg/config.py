# ANCHOR: config
from __future__ import annotations
import os
from dataclasses import dataclass, field, fields, replace
from typing import Any, Callable, Dict, Optional, Tuple

# Load .env early if present
try:
    import dotenv; dotenv.load_dotenv()
except Exception:
    pass

from decouple import config as env

from .errors import ConfigError

# --- Fixed constants ---
REPORT_SCHEMA = 1
CHECK_PRIME   = 32003          # second characteristic for field-agreement checks
MAX_GRAPH6_N  = 62             # one-byte graph6 header
MAX_VERTICES  = 32             # vertex subsets fit one machine word
HARD_CAP      = 20             # absolute ceiling for the regularity vertex cap

# --- Env knobs (prefix SQFR_) ---
# Config field -> (env var, default, cast). Read on every Config.from_env() call.
KNOBS: Dict[str, Tuple[str, Any, Callable[[Any], Any]]] = {
    "prime":              ("SQFR_PRIME", 2, int),
    "vertex_cap":         ("SQFR_CAP", 14, int),
    "jobs":               ("SQFR_JOBS", os.cpu_count() or 1, int),
    "cache_path":         ("SQFR_CACHE", "", str),
    "seed":               ("SQFR_SEED", 0, int),
    "hamilton_cap":       ("SQFR_HAMILTON_CAP", 20, int),
    "colon_sample":       ("SQFR_COLON_SAMPLE", 200, int),
    "oracle_sample":      ("SQFR_ORACLE_SAMPLE", 2000, int),
    "colon_oracle_max_s": ("SQFR_COLON_ORACLE_MAX_S", 2, int),
    "order_count_max":    ("SQFR_ORDER_COUNT_MAX", 6, int),
    "allow_big_cap":      ("SQFR_ALLOW_BIG_CAP", False, bool),
}


def knob(name: str) -> Any:
    """Current value of one Config knob from the environment (or .env)."""
    var, default, cast = KNOBS[name]
    return env(var, default=default, cast=cast)


def logs_dir() -> str:
    return env("SQFR_LOGS_DIR", default="sqfreg_logs")


def log_level() -> str:
    return env("SQFR_LOG_LEVEL", default="WARNING")


# Import-time defaults for library calls made without a Config.
DEFAULT_PRIME        = knob("prime")
DEFAULT_CAP          = knob("vertex_cap")
DEFAULT_CACHE        = knob("cache_path") or None
HAMILTON_CAP         = knob("hamilton_cap")
ORDER_COUNT_MAX      = knob("order_count_max")
REG_MEMO_SIZE        = env("SQFR_REG_MEMO", default=4096, cast=int)   # fixed per process


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class Config:
    """Run configuration shared by the CLI, the sweep workers and the checks."""
    prime: int = 2
    vertex_cap: int = 14
    jobs: int = 1
    cache_path: Optional[str] = None
    seed: int = 0
    hamilton_cap: int = 20
    colon_sample: int = 200
    oracle_sample: int = 2000
    colon_oracle_max_s: int = 2
    order_count_max: int = 6
    allow_big_cap: bool = field(default=False, compare=False)

    @classmethod
    def from_env(cls) -> "Config":
        values = {f.name: knob(f.name) for f in fields(cls)}
        values["jobs"] = max(1, values["jobs"])
        values["cache_path"] = values["cache_path"] or None
        return cls(**values)

    def override(self, **kwargs) -> "Config":
        """Return a copy with every non-None keyword applied."""
        changes = {k: v for k, v in kwargs.items() if v is not None}
        return replace(self, **changes)

    def validate(self) -> "Config":
        if not is_prime(self.prime):
            raise ConfigError(f"prime must be prime, got {self.prime}")
        if self.vertex_cap < 1:
            raise ConfigError(f"vertex cap must be positive, got {self.vertex_cap}")
        if self.vertex_cap > HARD_CAP and not self.allow_big_cap:
            raise ConfigError(
                f"vertex cap {self.vertex_cap} exceeds {HARD_CAP}; set SQFR_ALLOW_BIG_CAP=1 to override"
            )
        if self.jobs < 1:
            raise ConfigError(f"jobs must be >= 1, got {self.jobs}")
        if self.seed < 0:
            raise ConfigError(f"seed must be >= 0, got {self.seed}")
        return self
