"""Configuration: environment settings, JSON config files and run parameters.

Settings resolve as explicit argument > environment variable > default. The
CLI loads a ``.env`` file first (python-dotenv), so the environment may also
come from there.
"""

import json
import logging
import os
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, List, Mapping, Optional

from dotenv import load_dotenv

from .exceptions import ConfigError
from .schemas import COMMANDS, FORMATS, SUITES, RunConfig

logger = logging.getLogger(__name__)

DEFAULT_DENSE_CAP = 4096
DEFAULT_N_QUAD = 512
DEFAULT_LOG_LEVEL = "WARNING"

ENV_DENSE_CAP = "WALKZETA_DENSE_CAP"
ENV_N_QUAD = "WALKZETA_N_QUAD"
ENV_SERIAL = "WALKZETA_SERIAL"
ENV_LOG_LEVEL = "WALKZETA_LOG_LEVEL"

_TRUTHY = {"1", "true", "yes", "on"}


@dataclass(frozen=True)
class Settings:
    """Process-wide numerical settings."""

    dense_cap: int = DEFAULT_DENSE_CAP
    n_quad: int = DEFAULT_N_QUAD
    serial: bool = False
    log_level: str = DEFAULT_LOG_LEVEL

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary for serialization."""
        return {
            "dense_cap": self.dense_cap,
            "n_quad": self.n_quad,
            "serial": self.serial,
            "log_level": self.log_level,
        }


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None or not raw.strip():
        return default
    try:
        value = int(raw)
    except ValueError as exc:
        raise ConfigError(f"{name} must be an integer, got {raw!r}") from exc
    if value < 1:
        raise ConfigError(f"{name} must be positive, got {value}")
    return value


def get_settings() -> Settings:
    """Read settings from the current environment."""
    return Settings(
        dense_cap=_env_int(ENV_DENSE_CAP, DEFAULT_DENSE_CAP),
        n_quad=_env_int(ENV_N_QUAD, DEFAULT_N_QUAD),
        serial=os.environ.get(ENV_SERIAL, "").strip().lower() in _TRUTHY,
        log_level=(
            os.environ.get(ENV_LOG_LEVEL, DEFAULT_LOG_LEVEL).strip().upper() or DEFAULT_LOG_LEVEL
        ),
    )


def load_environment(env_file: Optional[Path] = None) -> Settings:
    """Load a ``.env`` file (without overriding the real environment) and read settings."""
    if env_file is not None:
        load_dotenv(env_file, override=False)
    else:
        load_dotenv(override=False)
    return get_settings()


def configure_logging(level: str) -> None:
    numeric = logging.getLevelName(level.upper())
    if not isinstance(numeric, int):
        raise ConfigError(f"unknown log level {level!r}")
    logging.basicConfig(level=numeric, format="%(asctime)s %(levelname)s %(name)s: %(message)s")
    logging.getLogger("walkzeta").setLevel(numeric)


def load_json(path: Path) -> Dict[str, Any]:
    """Read a JSON object from ``path``.

    Raises:
        ConfigError: If the file is missing, unreadable or not a JSON object.
    """
    try:
        data = json.loads(Path(path).read_text())
    except FileNotFoundError as exc:
        raise ConfigError(f"config file not found: {path}") from exc
    except json.JSONDecodeError as exc:
        raise ConfigError(f"invalid JSON in {path}: {exc}") from exc
    if not isinstance(data, dict):
        raise ConfigError(f"{path}: top level must be a JSON object")
    return data


def parse_complex(value: Any) -> complex:
    """Accept numbers, ``"0.3+0.1j"`` strings and ``[re, im]`` pairs."""
    if isinstance(value, (list, tuple)) and len(value) == 2:
        return complex(float(value[0]), float(value[1]))
    if isinstance(value, Mapping) and "re" in value:
        return complex(float(value["re"]), float(value.get("im", 0.0)))
    try:
        return complex(str(value).replace(" ", "")) if isinstance(value, str) else complex(value)
    except (TypeError, ValueError) as exc:
        raise ConfigError(f"cannot read {value!r} as a complex number") from exc


def _as_list(value: Any) -> List[Any]:
    return list(value) if isinstance(value, (list, tuple)) else [value]


def build_run_config(
    command: str,
    file_cfg: Optional[Mapping[str, Any]] = None,
    overrides: Optional[Mapping[str, Any]] = None,
    settings: Optional[Settings] = None,
) -> RunConfig:
    """Merge a config file with CLI overrides and validate the result.

    ``None`` values in ``overrides`` mean "flag not given".

    Raises:
        ConfigError: If a field is missing or outside its allowed range.
    """
    settings = settings or get_settings()
    merged: Dict[str, Any] = dict(file_cfg or {})
    merged.update({k: v for k, v in (overrides or {}).items() if v is not None})
    if command not in COMMANDS:
        raise ConfigError(f"unknown command {command!r}; expected one of {COMMANDS}")

    try:
        cfg = RunConfig(
            command=command,
            model=merged.get("model"),
            graph=merged.get("graph"),
            u=[parse_complex(z) for z in _as_list(merged.get("u", 0.0))],
            N=int(merged["N"]) if merged.get("N") is not None else None,
            n_quad=int(merged.get("n_quad", settings.n_quad)),
            r_max=int(merged.get("r_max", 12)),
            a=[float(x) for x in _as_list(merged.get("a", [0.0, 0.25, 0.5, 0.75, 1.0]))],
            steps=int(merged.get("steps", 20)),
            p=int(merged["p"]) if merged.get("p") is not None else None,
            suite=str(merged.get("suite", "all")),
            out=Path(merged["out"]) if merged.get("out") else None,
            format=str(merged.get("format", "csv")).lower(),
            serial=bool(merged.get("serial", False)) or settings.serial,
        )
    except (TypeError, ValueError) as exc:
        if isinstance(exc, ConfigError):
            raise
        raise ConfigError(f"invalid run parameter: {exc}") from exc

    if cfg.N is not None and cfg.N < 2:
        raise ConfigError(f"N must be at least 2, got {cfg.N}")
    if cfg.n_quad < 1:
        raise ConfigError(f"n_quad must be positive, got {cfg.n_quad}")
    if cfg.r_max < 1:
        raise ConfigError(f"r_max must be at least 1, got {cfg.r_max}")
    if cfg.steps < 0:
        raise ConfigError(f"steps must be non-negative, got {cfg.steps}")
    if cfg.p is not None and cfg.p not in (1, 2):
        raise ConfigError(f"p must be 1 or 2, got {cfg.p}")
    if any(not 0.0 <= a <= 1.0 for a in cfg.a):
        raise ConfigError(f"every a must lie in [0, 1], got {cfg.a}")
    if cfg.suite not in SUITES:
        raise ConfigError(f"unknown suite {cfg.suite!r}; expected one of {SUITES}")
    if cfg.format not in FORMATS:
        raise ConfigError(f"unknown format {cfg.format!r}; expected one of {FORMATS}")
    if command in ("zeta", "coeffs", "simulate") and cfg.model is None:
        raise ConfigError(f"'{command}' needs a model config")
    logger.debug("run config: %s", cfg.to_dict())
    return cfg
