from __future__ import annotations

import sys
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parents[1]
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))

from sqfreg import config
from sqfreg.config import Config, is_prime
from sqfreg.errors import ConfigError


def test_is_prime():
    assert [p for p in range(20) if is_prime(p)] == [2, 3, 5, 7, 11, 13, 17, 19]
    assert is_prime(config.CHECK_PRIME)


def test_defaults_validate():
    cfg = Config().validate()
    assert (cfg.prime, cfg.vertex_cap, cfg.jobs) == (2, 14, 1)


@pytest.mark.parametrize("kwargs", [
    {"prime": 4},
    {"vertex_cap": 0},
    {"vertex_cap": 21},
    {"jobs": 0},
    {"seed": -1},
])
def test_invalid_values(kwargs):
    with pytest.raises(ConfigError):
        Config(**kwargs).validate()


def test_big_cap_needs_opt_in():
    assert Config(vertex_cap=24, allow_big_cap=True).validate().vertex_cap == 24


def test_override_skips_none():
    cfg = Config(prime=3).override(prime=None, jobs=4, cache_path=None)
    assert cfg.prime == 3 and cfg.jobs == 4 and cfg.cache_path is None


def test_from_env_reads_environment_at_call_time(monkeypatch, tmp_path):
    for var, _, _ in config.KNOBS.values():
        monkeypatch.delenv(var, raising=False)
    assert Config.from_env().prime == 2

    monkeypatch.setenv("SQFR_PRIME", "5")
    monkeypatch.setenv("SQFR_JOBS", "0")
    monkeypatch.setenv("SQFR_CACHE", str(tmp_path / "reg.jsonl"))
    monkeypatch.setenv("SQFR_ORDER_COUNT_MAX", "4")
    monkeypatch.setenv("SQFR_ALLOW_BIG_CAP", "1")
    cfg = Config.from_env()
    assert (cfg.prime, cfg.jobs, cfg.order_count_max) == (5, 1, 4)
    assert cfg.cache_path == str(tmp_path / "reg.jsonl")
    assert cfg.allow_big_cap is True
    assert cfg.override(vertex_cap=24).validate().vertex_cap == 24


def test_invalid_env_value_fails_validation(monkeypatch):
    monkeypatch.setenv("SQFR_PRIME", "9")
    with pytest.raises(ConfigError):
        Config.from_env().validate()


def test_logs_dir_follows_environment(monkeypatch, tmp_path):
    from sqfreg.util.diagnostics import events_path

    monkeypatch.setenv("SQFR_LOGS_DIR", str(tmp_path / "elsewhere"))
    assert config.logs_dir() == str(tmp_path / "elsewhere")
    assert events_path() == tmp_path / "elsewhere" / "diagnostics" / "events.jsonl"
