"""Resource caps, overridable through the POLYEXT_CAPS environment variable (JSON)."""
from __future__ import annotations

import json
import os

from .errors import InputError, CapExceeded

DEFAULT_CAPS = {
    "schubert_n": 5,
    "delta_schubert_n": 3,
    "perm_n": 5,
    "stell_n": 4,
    "permB_n": 3,
    "verify_perm_n": 4,
    "verify_stell_n": 3,
    "verify_permB_n": 3,
    "max_simplices": 200000,
    "timeout_seconds": 3600,
}


def load_caps(env=None) -> dict:
    env = os.environ if env is None else env
    caps = dict(DEFAULT_CAPS)
    raw = env.get("POLYEXT_CAPS")
    if raw:
        try:
            extra = json.loads(raw)
        except json.JSONDecodeError as e:
            raise InputError(f"POLYEXT_CAPS is not valid JSON: {e}") from e
        if not isinstance(extra, dict):
            raise InputError("POLYEXT_CAPS must be a JSON object")
        for k, v in extra.items():
            if k not in DEFAULT_CAPS:
                raise InputError(f"unknown cap {k!r}")
            if not isinstance(v, int) or isinstance(v, bool) or v <= 0:
                raise InputError(f"cap {k!r} must be a positive integer")
            caps[k] = v
    return caps


def require(caps, key, value):
    if value > caps[key]:
        raise CapExceeded(f"{key} = {value} exceeds the cap {caps[key]}")
