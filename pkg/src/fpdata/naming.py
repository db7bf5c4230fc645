"""Group labels (``D12``, ``A4``, ``S4``, ``A5+``, ``A5-``) and pretty markers."""

from __future__ import annotations

import re

from .groups import ICOS, OCT, TET, Dihedral, InvalidParameter
from .rotations import RotationModel, build_model

_DIHEDRAL = re.compile(r"D([1-9][0-9]*)")

PRETTY_MARKERS = {"u": "△", "d": "▽", "s": "✱"}


def parse_group(label: str) -> RotationModel:
    label = label.strip()
    match = _DIHEDRAL.fullmatch(label)
    if match:
        m = int(match.group(1))
        if m < 2:
            raise InvalidParameter(f"D{m}: dihedral groups need m >= 2")
        return build_model(Dihedral(m))
    if label == "A4":
        return build_model(TET)
    if label == "S4":
        return build_model(OCT)
    if label in ("A5+", "A5-"):
        return build_model(ICOS, label[-1])
    raise InvalidParameter(f"unknown group label {label!r} (expected Dm, A4, S4, A5+ or A5-)")


def group_label(model: RotationModel) -> str:
    fam = model.family
    if fam.kind == "icos":
        return f"A5{model.chirality}"
    return str(fam)


def pretty(label: str) -> str:
    """Human form of a pair or subgroup label: ``D2u:std`` -> ``D2△:std``."""
    head, sep, rep = label.partition(":")
    if head[-1:] in PRETTY_MARKERS and head[-2:-1].isdigit():
        head = head[:-1] + PRETTY_MARKERS[head[-1]]
    if rep == "-":
        rep = "−"
    return head + sep + rep
