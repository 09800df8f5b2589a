"""Named groups: a small spec language and the regular-group test corpus.

Specs: ``square``, ``cube``, ``polygon:P``, ``torus:N`` (order 2^N),
``torus:S,T``, ``flat:N3,N4,...``, ``power:<spec>``.
"""
from __future__ import annotations

from typing import Iterator

from .catalog import cube, polygon
from .cstring import StringCGroup
from .mix import build_flat_tower
from .toroidal import TorusParams, build_torus_group, torus


def _ints(text: str) -> list[int]:
    return [int(x) for x in text.split(",") if x.strip()]


def parse_group(spec: str) -> StringCGroup:
    spec = spec.strip()
    kind, _, rest = spec.partition(":")
    if kind == "square":
        return polygon(4)
    if kind == "cube":
        return cube()
    if kind == "polygon":
        return polygon(int(rest))
    if kind == "torus":
        vals = _ints(rest)
        if len(vals) == 1:
            return torus(vals[0])
        if len(vals) == 2:
            return build_torus_group(TorusParams(*vals))
        raise ValueError(f"bad torus spec {spec!r}")
    if kind == "flat":
        vals = _ints(rest)
        return torus(vals[0]) if len(vals) == 1 else build_flat_tower(vals)
    if kind == "power":
        from .power import power_2k
        return power_2k(parse_group(rest))
    raise ValueError(f"unknown group spec {spec!r}")


# regular groups whose posets are small enough to check exhaustively
CORPUS_SPECS = (
    "square", "cube",
    "torus:5", "torus:6", "torus:7", "torus:8", "torus:9", "torus:10",
    "torus:3,0", "torus:3,3",
    "flat:5,5", "flat:5,6", "flat:6,5", "flat:6,6", "flat:5,7", "flat:6,7",
    "flat:5,5,5", "flat:5,5,6", "flat:5,6,5",
    "power:square", "power:torus:2,0",
)


def regular_corpus(max_order: int | None = None) -> Iterator[tuple[str, StringCGroup]]:
    for spec in CORPUS_SPECS:
        G = parse_group(spec)
        if max_order is None or G.order() <= max_order:
            yield spec, G
