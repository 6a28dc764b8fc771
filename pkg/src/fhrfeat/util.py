"""Small shared helpers: input validation and deterministic seed derivation."""

from __future__ import annotations

import hashlib

import numpy as np


def as_float_array(values, name="values") -> np.ndarray:
    """Coerce a sequence to a 1-D float64 array, rejecting other shapes."""
    arr = np.asarray(values, dtype=float)
    if arr.ndim != 1:
        raise ValueError(f"{name} must be one-dimensional, got shape {arr.shape}")
    return arr

def as_finite_array(values, name="values") -> np.ndarray:
    arr = as_float_array(values, name)
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{name} must contain only finite values")
    return arr


def as_binary_labels(labels, name="labels") -> np.ndarray:
    """Coerce labels to a 0/1 int array."""
    arr = np.asarray(labels)
    if arr.ndim != 1:
        raise ValueError(f"{name} must be one-dimensional")
    out = arr.astype(int)
    if not np.all((out == 0) | (out == 1)):
        raise ValueError(f"{name} must contain only 0 and 1")
    return out


def derive_seed(*parts) -> int:
    """Derive a 64-bit seed from an ordered tuple of parts, reproducibly.

    Uses SHA-256 over a ':'-joined string form, so the result is stable
    across processes and platforms (unlike the builtin salted hash).
    """
    token = ":".join(str(p) for p in parts)
    digest = hashlib.sha256(token.encode("utf-8")).digest()
    return int.from_bytes(digest[:8], "big")
