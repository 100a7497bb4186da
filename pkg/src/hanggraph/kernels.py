"""Kernel backend dispatch.

The compiled extension (``_ckernel``) handles graphs whose masks fit in a
64-bit word; anything larger, or any environment where the extension failed
to build, falls back to the pure-Python twin (``_pykernel``).  Setting
HANGGRAPH_PURE=1 forces the fallback.  Both backends implement the same
signatures and are equivalence-tested against each other.
"""

from __future__ import annotations

import os
from typing import Sequence

from . import _pykernel as _py
from ._pykernel import (  # re-exported contract constants
    F_BLOCK_GRAPH,
    F_CONNECTED,
    F_HANGABLE,
    F_HANGABLE_TRIPLES,
    F_SELF_CENTERED,
    F_TREE,
    VERIFY_DIAMETER,
    VERIFY_DISTANCE,
    VERIFY_ECCENTRICITY,
    VERIFY_GRAPH_PERIPHERY,
    VERIFY_HANGABLE,
    VERIFY_OK,
    VERIFY_VERTEX_PERIPHERY,
    bits_from_masks,
    masks_from_bits,
)

_c = None
if os.environ.get("HANGGRAPH_PURE", "") != "1":
    try:
        from . import _ckernel as _c  # type: ignore[attr-defined]
    except ImportError:
        _c = None

BACKEND = "compiled" if _c is not None else "pure"

_MAXN = 64
_MAX_CLASSIFY_N = 11  # C(11,2) = 55 edge bits fit a 64-bit subset index


def apsp(masks: Sequence[int]) -> list[int]:
    if _c is not None and len(masks) <= _MAXN:
        return _c.apsp(masks)
    return _py.apsp(masks)


def is_connected_masks(masks: Sequence[int]) -> bool:
    if _c is not None and len(masks) <= _MAXN:
        return _c.is_connected_masks(masks)
    return _py.is_connected_masks(masks)


def hangable_subset(dist: Sequence[int], n: int) -> tuple[bool, int, int]:
    if _c is not None and n <= _MAXN:
        return _c.hangable_subset(dist, n)
    return _py.hangable_subset(dist, n)


def hangable_triples(dist: Sequence[int], n: int,
                     exhaustive: bool = False) -> tuple[bool, int, int, int, int]:
    if _c is not None and n <= _MAXN:
        return _c.hangable_triples(dist, n, exhaustive)
    return _py.hangable_triples(dist, n, exhaustive)


def is_block_graph_masks(masks: Sequence[int]) -> bool:
    if _c is not None and len(masks) <= _MAXN:
        return _c.is_block_graph_masks(masks)
    return _py.is_block_graph_masks(masks)


def smallest_power_k(dist: Sequence[int], n: int) -> int:
    if _c is not None and n <= _MAXN:
        return _c.smallest_power_k(dist, n)
    return _py.smallest_power_k(dist, n)


def classify_bits(n: int, bits: int) -> tuple[int, int, int, int]:
    if _c is not None and n <= _MAX_CLASSIFY_N:
        return _c.classify_bits(n, bits)
    return _py.classify_bits(n, bits)


def corona_verify(masks_g: Sequence[int], dist_g: Sequence[int],
                  masks_h: Sequence[int]) -> int:
    if _c is not None and len(masks_g) * (1 + len(masks_h)) <= _MAXN:
        return _c.corona_verify(masks_g, dist_g, masks_h)
    return _py.corona_verify(masks_g, dist_g, masks_h)


def cartesian_verify(masks_g: Sequence[int], dist_g: Sequence[int],
                     masks_h: Sequence[int], dist_h: Sequence[int]) -> int:
    if _c is not None and len(masks_g) * len(masks_h) <= _MAXN:
        return _c.cartesian_verify(masks_g, dist_g, masks_h, dist_h)
    return _py.cartesian_verify(masks_g, dist_g, masks_h, dist_h)


def join_verify(masks_g: Sequence[int], masks_h: Sequence[int]) -> int:
    if _c is not None and len(masks_g) + len(masks_h) <= _MAXN:
        return _c.join_verify(masks_g, masks_h)
    return _py.join_verify(masks_g, masks_h)
