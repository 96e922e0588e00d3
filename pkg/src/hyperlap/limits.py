"""Enumeration caps, overridable through ``HYPERLAP_LIMITS``.

The variable holds comma-separated ``key=value`` pairs, for example
``HYPERLAP_LIMITS="cheeger=12,sign=16"``.
"""

from __future__ import annotations

import os

DEFAULTS = {
    "cheeger": 20,        # vertices for subset enumeration
    "sign": 22,           # vertices for sign-vector enumeration
    "chromatic": 16,      # vertices for exact coloring
    "pairings": 10_000,   # underlying-graph pairings
    "colorings": 10_000,  # alternative colorings in the sharpness search
}


class EnumerationLimitError(ValueError):
    """An exhaustive search would exceed its configured size cap."""


def _from_env(key: str) -> int | None:
    raw = os.environ.get("HYPERLAP_LIMITS", "")
    for item in raw.split(","):
        if "=" not in item:
            continue
        name, value = item.split("=", 1)
        if name.strip() == key:
            return int(value)
    return None


def get(key: str) -> int:
    env = _from_env(key)
    return DEFAULTS[key] if env is None else env


def resolve(key: str, value: int | None) -> int:
    """Explicit ``value`` if given, never above a cap set in the environment."""
    env = _from_env(key)
    if value is None:
        return DEFAULTS[key] if env is None else env
    return int(value) if env is None else min(int(value), env)
