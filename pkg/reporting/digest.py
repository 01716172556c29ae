import hashlib
import json
from typing import Any, Dict, Literal

VOLATILE_KEYS = ("wall_time",)


def canonical_json(payload: Any) -> str:
    """JSON with sorted keys and fixed separators, so equal payloads give equal bytes."""
    return json.dumps(payload, sort_keys=True, separators=(",", ":"), ensure_ascii=True, allow_nan=True)


def generate_digest(payload: Dict[str, Any], algorithm: Literal["sha256", "sha1"] = "sha256") -> str:
    """Hash a report without its volatile fields.

    Two runs of the same scenario with the same seed produce the same digest;
    the wall time and the digest field itself are excluded.

    Args:
        payload: The report dictionary.
        algorithm: ``sha256`` (default) or ``sha1``.

    Returns:
        Hexadecimal digest string.

    Example:
        >>> len(generate_digest({"verb": "decide"}))
        64
    """
    stable = {k: v for k, v in payload.items() if k not in VOLATILE_KEYS and k != "digest"}
    h = hashlib.sha1() if algorithm == "sha1" else hashlib.sha256()
    h.update(canonical_json(stable).encode("utf-8"))
    return h.hexdigest()
