"""Ambient-size caps, overridable through SPLITKIT_SIZE_CAP."""

import os

TENSOR_ENTRY_CAP = 10**7
SUBSPACE_VERTEX_CAP = 4096


def size_cap(default: int) -> int:
    raw = os.environ.get("SPLITKIT_SIZE_CAP")
    return int(raw) if raw else default
