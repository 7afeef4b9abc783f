"""Shifted tableau combinatorics with queer-crystal cross-checks."""

from .shapes import (
    Partition,
    SkewShape,
    StrictPartition,
    cells,
    complement_in_rectangle,
    conjugate,
    shifted_complement,
    staircase,
    straight_shape,
)
from .words import (
    PrimedLetter,
    content,
    has_lattice_property,
    has_mu_lattice_property,
    has_stembridge_lattice_property,
    parse_letter,
    parse_word,
    rightmost_unprimed,
    star_labeling,
)
from .tableaux import PrimedTableau, enumerate_semistandard, is_semistandard, reading_word
from .ssdt import (
    DecompTableau,
    enumerate_ssdt,
    highest_tableau,
    hook_split,
    is_skew_ssdt,
    is_ssdt,
    lowest_tableau,
)

__all__ = [
    "Partition",
    "StrictPartition",
    "SkewShape",
    "cells",
    "staircase",
    "conjugate",
    "complement_in_rectangle",
    "shifted_complement",
    "straight_shape",
    "PrimedLetter",
    "parse_letter",
    "parse_word",
    "content",
    "star_labeling",
    "rightmost_unprimed",
    "has_lattice_property",
    "has_stembridge_lattice_property",
    "has_mu_lattice_property",
    "PrimedTableau",
    "reading_word",
    "is_semistandard",
    "enumerate_semistandard",
    "DecompTableau",
    "hook_split",
    "is_ssdt",
    "is_skew_ssdt",
    "highest_tableau",
    "lowest_tableau",
    "enumerate_ssdt",
]
