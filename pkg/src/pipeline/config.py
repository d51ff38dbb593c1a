"""Strict enumeration configuration schema and loader."""
from __future__ import annotations

import json
import os
from dataclasses import dataclass, field, replace
from functools import lru_cache
from pathlib import Path
from typing import Any

OUTPUT_FORMATS = ("poly", "coeff-list", "csv")

UNSAFE_GUARD_ENV = "GRAPHGF_UNSAFE_ELEMENT_GUARD"


def _require_positive_int(value: Any, name: str) -> None:
    # bool is an int subclass; reject it explicitly
    if isinstance(value, bool) or not isinstance(value, int) or value < 1:
        raise ValueError(f"{name} must be a positive integer, got {value!r}")


@dataclass(frozen=True)
class GuardConfig:
    """Feasibility limits for the paths that iterate over group elements."""

    permutation_max_n: int = 10
    elementwise_max_n: int = 8
    detmat_max_m: int = 15
    cofactor_max_m: int = 8
    lemma_element_max_n: int = 5
    reynolds_max_n: int = 8
    orbit_max_n: int = 7
    brute_simple_max_n: int = 6
    brute_multi_max_n: int = 5
    brute_multi_max_degree: int = 8

    def __post_init__(self) -> None:
        """Validate guard limits."""
        for name in GUARD_KEYS:
            _require_positive_int(getattr(self, name), f"guards.{name}")
        if self.cofactor_max_m > self.detmat_max_m:
            raise ValueError("guards.cofactor_max_m must not exceed guards.detmat_max_m")


GUARD_KEYS = (
    "permutation_max_n",
    "elementwise_max_n",
    "detmat_max_m",
    "cofactor_max_m",
    "lemma_element_max_n",
    "reynolds_max_n",
    "orbit_max_n",
    "brute_simple_max_n",
    "brute_multi_max_n",
    "brute_multi_max_degree",
)


@dataclass(frozen=True)
class ParallelConfig:
    """Worker settings for class-summed pipelines."""

    n_jobs: int = 1
    min_classes: int = 64

    def __post_init__(self) -> None:
        """Validate parallel configuration."""
        if isinstance(self.n_jobs, bool) or not isinstance(self.n_jobs, int) or self.n_jobs == 0:
            raise ValueError(f"parallel.n_jobs must be a non-zero integer, got {self.n_jobs!r}")
        _require_positive_int(self.min_classes, "parallel.min_classes")


@dataclass(frozen=True)
class OutputConfig:
    """Output rendering defaults."""

    default_format: str = "coeff-list"

    def __post_init__(self) -> None:
        """Validate output configuration."""
        if self.default_format not in OUTPUT_FORMATS:
            raise ValueError(
                f"output.default_format must be one of {list(OUTPUT_FORMATS)}, "
                f'got "{self.default_format}"'
            )


@dataclass(frozen=True)
class EnumerationConfig:
    """Complete enumeration configuration."""

    guards: GuardConfig = field(default_factory=GuardConfig)
    parallel: ParallelConfig = field(default_factory=ParallelConfig)
    output: OutputConfig = field(default_factory=OutputConfig)


class EnvSettings:
    """Settings read from environment variables."""

    def __init__(self, environ: dict[str, str] | None = None) -> None:
        env = os.environ if environ is None else environ
        self.config_path: str | None = env.get("GRAPHGF_CONFIG") or None
        self.log_level: str = env.get("GRAPHGF_LOG_LEVEL", "INFO").upper()
        self.n_jobs: int | None = _parse_optional_int(env.get("GRAPHGF_N_JOBS"), "GRAPHGF_N_JOBS")
        self.unsafe_element_guard: int | None = _parse_optional_int(
            env.get(UNSAFE_GUARD_ENV), UNSAFE_GUARD_ENV
        )
        if self.unsafe_element_guard is not None and self.unsafe_element_guard < 1:
            raise ValueError(f"{UNSAFE_GUARD_ENV} must be a positive integer")

    @property
    def is_unsafe(self) -> bool:
        """Check if element guards are overridden."""
        return self.unsafe_element_guard is not None


def _parse_optional_int(raw: str | None, name: str) -> int | None:
    if raw is None or raw.strip() == "":
        return None
    try:
        return int(raw)
    except ValueError as e:
        raise ValueError(f"{name} must be an integer, got {raw!r}") from e


def _validate_no_unknown_keys(
    data: dict[str, Any],
    known_keys: set[str],
    context: str = "top-level",
) -> None:
    """
    Validate that no unknown keys are present.

    Raises:
        ValueError: If unknown keys are found
    """
    unknown = set(data.keys()) - known_keys
    if unknown:
        raise ValueError(
            f"Unknown keys in {context}: {sorted(unknown)}. "
            f"Known keys: {sorted(known_keys)}"
        )


def _section(data: dict[str, Any], name: str, known_keys: set[str]) -> dict[str, Any]:
    section = data.get(name, {})
    if not isinstance(section, dict):
        raise ValueError(f"{name} must be an object")
    _validate_no_unknown_keys(section, known_keys, name)
    return section


def load_enumeration_config(path: str | Path) -> EnumerationConfig:
    """
    Load and validate enumeration configuration from a JSON file.

    Missing sections and keys fall back to the dataclass defaults.

    Args:
        path: Path to JSON configuration file

    Returns:
        Validated EnumerationConfig instance

    Raises:
        FileNotFoundError: If config file does not exist
        ValueError: If config is invalid or contains unknown keys
        json.JSONDecodeError: If JSON is malformed
    """
    config_path = Path(path)
    if not config_path.exists():
        raise FileNotFoundError(f"Configuration file not found: {config_path}")

    with open(config_path, "r") as f:
        data = json.load(f)

    if not isinstance(data, dict):
        raise ValueError(f"Configuration must be a JSON object, got {type(data)}")

    _validate_no_unknown_keys(data, {"guards", "parallel", "output"}, "top-level")

    guards = GuardConfig(**_section(data, "guards", set(GUARD_KEYS)))
    parallel = ParallelConfig(**_section(data, "parallel", {"n_jobs", "min_classes"}))
    output = OutputConfig(**_section(data, "output", {"default_format"}))

    return EnumerationConfig(guards=guards, parallel=parallel, output=output)


def apply_env_overrides(config: EnumerationConfig, settings: EnvSettings) -> EnumerationConfig:
    """
    Apply environment overrides on top of a loaded configuration.

    The UNSAFE guard raises every guard that bounds an n! iteration.
    """
    if settings.n_jobs is not None:
        config = replace(config, parallel=replace(config.parallel, n_jobs=settings.n_jobs))
    if settings.unsafe_element_guard is not None:
        limit = settings.unsafe_element_guard
        config = replace(
            config,
            guards=replace(
                config.guards,
                permutation_max_n=limit,
                elementwise_max_n=limit,
                reynolds_max_n=limit,
            ),
        )
    return config


def resolve_config(path: str | Path | None = None, environ: dict[str, str] | None = None) -> EnumerationConfig:
    """
    Build the effective configuration: file (explicit path, then GRAPHGF_CONFIG) plus env overrides.
    """
    settings = EnvSettings(environ)
    config_path = path if path is not None else settings.config_path
    config = load_enumeration_config(config_path) if config_path else EnumerationConfig()
    return apply_env_overrides(config, settings)


@lru_cache(maxsize=1)
def get_config() -> EnumerationConfig:
    """Process-wide configuration used when callers pass no explicit config."""
    return resolve_config()


def reset_config_cache() -> None:
    """Drop the cached process-wide configuration."""
    get_config.cache_clear()
