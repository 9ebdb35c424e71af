"""Orientifold Temperley-Lieb combinatorics: tableaux, paths, graded decomposition matrices."""

from ._oriftl import (
    Config,
    blocks,
    calibrated_check,
    count_std,
    decomposition_matrix,
    degree,
    delta_matrix,
    factorize,
    is_ladder,
    reduced_word,
    residues,
    run_cli,
    shapes,
    tableaux,
)

__all__ = [
    "Config",
    "blocks",
    "calibrated_check",
    "count_std",
    "decomposition_matrix",
    "degree",
    "delta_matrix",
    "factorize",
    "is_ladder",
    "reduced_word",
    "residues",
    "run_cli",
    "shapes",
    "tableaux",
]
