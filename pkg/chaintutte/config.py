"""Runtime limits for chaintutte.

Values are resolved in three layers, later layers winning:

1. the module-level ``DEFAULT_*`` constants below;
2. ``CHAINTUTTE_*`` environment variables (a ``.env`` file in the working
   directory is loaded on import);
3. an optional YAML file, named by ``CHAINTUTTE_CONFIG`` or passed to
   :func:`load_limits` explicitly (the CLI exposes it as ``--config``).

Example ``chaintutte.yaml``::

    max_chains: 1073741824
    max_perm_n: 9
    threads: 4
"""

from __future__ import annotations

import logging
import os
import threading
from pathlib import Path
from typing import Any, Dict, Optional, Union

import yaml
from dotenv import load_dotenv
from pydantic import BaseModel, Field, ValidationError

from .errors import BudgetExceededError, InvalidParametersError

load_dotenv()

__all__ = [
    "DEFAULT_MAX_CHAINS",
    "DEFAULT_MAX_PERM_N",
    "DEFAULT_MAX_TOP_TUTTE_N",
    "DEFAULT_DENSE_RANK_LIMIT",
    "DEFAULT_CHUNK_SIZE",
    "ComputeLimits",
    "load_limits",
    "get_limits",
    "set_limits",
    "check_budget",
]

DEFAULT_MAX_CHAINS = 2**30
DEFAULT_MAX_PERM_N = 9
DEFAULT_MAX_TOP_TUTTE_N = 6
DEFAULT_DENSE_RANK_LIMIT = 16
DEFAULT_CHUNK_SIZE = 4096
DEFAULT_THREADS = os.cpu_count() or 1

_ENV_PREFIX = "CHAINTUTTE_"


class ComputeLimits(BaseModel):
    max_chains: int = Field(DEFAULT_MAX_CHAINS, gt=0, description="Largest number of chains, subsets or rank queries a single enumeration may visit")
    max_perm_n: int = Field(DEFAULT_MAX_PERM_N, gt=0, description="Largest ground set for permutation enumeration")
    max_top_tutte_n: int = Field(DEFAULT_MAX_TOP_TUTTE_N, gt=0, description="Largest ground set for the top chain polynomial route")
    dense_rank_limit: int = Field(DEFAULT_DENSE_RANK_LIMIT, ge=0, description="Ground sets up to this size get a dense rank table")
    threads: int = Field(DEFAULT_THREADS, gt=0, description="Worker threads used by parallel enumerations")
    chunk_size: int = Field(DEFAULT_CHUNK_SIZE, gt=0, description="Chains handed to a worker per task")


def _from_env() -> Dict[str, Any]:
    values: Dict[str, Any] = {}
    for name in ComputeLimits.model_fields:
        raw = os.getenv(_ENV_PREFIX + name.upper())
        if raw is None or raw.strip() == "":
            continue
        try:
            values[name] = int(raw)
        except ValueError:
            logging.warning("Ignoring non-integer %s%s=%r", _ENV_PREFIX, name.upper(), raw)
    return values


def _from_yaml(path: Union[str, Path]) -> Dict[str, Any]:
    path = Path(path).expanduser()
    if not path.exists():
        raise InvalidParametersError(f"Config file not found: {path}", {"path": str(path)})
    with open(path, "r", encoding="utf-8") as f:
        data = yaml.safe_load(f) or {}
    if not isinstance(data, dict):
        raise InvalidParametersError(f"Config file {path} must contain a mapping", {"path": str(path)})
    unknown = sorted(set(data) - set(ComputeLimits.model_fields))
    if unknown:
        logging.warning("Ignoring unknown config keys in %s: %s", path, ", ".join(unknown))
    return {k: v for k, v in data.items() if k in ComputeLimits.model_fields}


def load_limits(config_path: Optional[Union[str, Path]] = None, **overrides: Any) -> ComputeLimits:
    """Resolve limits from defaults, environment, YAML and explicit overrides."""
    values = _from_env()
    config_path = config_path or os.getenv(_ENV_PREFIX + "CONFIG")
    if config_path:
        values.update(_from_yaml(config_path))
    values.update({k: v for k, v in overrides.items() if v is not None})
    try:
        return ComputeLimits(**values)
    except ValidationError as e:
        raise InvalidParametersError(f"Invalid compute limits: {e}") from e


# ---------------------------------------------------------------------------
# Process-wide instance
# ---------------------------------------------------------------------------

_limits: Optional[ComputeLimits] = None
_lock = threading.Lock()


def get_limits() -> ComputeLimits:
    global _limits
    with _lock:
        if _limits is None:
            _limits = load_limits()
        return _limits


def set_limits(limits: Optional[ComputeLimits]) -> None:
    """Replace the process-wide limits; ``None`` re-reads them on next use."""
    global _limits
    with _lock:
        _limits = limits


def check_budget(count: int, what: str, unit: str = "chains") -> None:
    """Refuse an enumeration of ``count`` items once it exceeds ``max_chains``.

    The one budget covers chains, subsets, subset pairs and rank queries.
    """
    limit = get_limits().max_chains
    if count > limit:
        raise BudgetExceededError(
            f"{what} needs {count} {unit}, over the budget of {limit}",
            {"chains": count, "max_chains": limit, "unit": unit},
        )
