"""Exact finite-group and character-table computations for discrete CPT groups."""

from .cpt_models import GROUP_IDS, named_group, named_irreps
from .group_core import FiniteGroup
from .repr_theory import CharacterTable, Representation, character_table, tables_match

__all__ = [
    "GROUP_IDS",
    "CharacterTable",
    "FiniteGroup",
    "Representation",
    "character_table",
    "named_group",
    "named_irreps",
    "tables_match",
]
__version__ = "0.1.0"
