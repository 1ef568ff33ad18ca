"""End-to-end analyses that tie the layers together and cache the
expensive parts.

A GroupAnalysis owns one permutation group and lazily computes, in
order: the enumerated group, its conjugacy classes, the character table
(canonical row and column order), and a reporting view of that table.
For the two embedded groups the reporting view adopts the row order and
row labels of the published reference table whenever the computed table
matches it under fingerprint constraints; decompositions are then
directly comparable with the published multiplicity vectors.  Columns
always stay in canonical class order.

Analyses for the embedded groups are cached per process so the command
line and the test suite pay for enumeration and the character table
once.
"""

from __future__ import annotations

from functools import lru_cache

from . import datasets
from .chartab import (CharacterTable, ClassFunction, MatchResult, decompose,
                      match_columns, permutation_character)
from .dixon import compute_character_table
from .errors import InconsistencyError, InputError
from .perm import ClassSet, FiniteGroup, parse_cycles
from .tensor import CLOSED_FORM_FAMILIES, transition_matrix

_EXPECTED_FIRST_DECOMPOSITION = {
    "g1344-deg8": (1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0),
    "g1344-deg14": (1, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0),
}


class GroupAnalysis:
    def __init__(self, spec: dict, is_builtin: bool = False):
        self.spec = spec
        self.name = spec["name"]
        self.is_builtin = is_builtin
        self._group = None
        self._class_set = None
        self._canonical_table = None
        self._reporting = None       # (table, match or None, adopted flag)
        self._permchar = None
        self._transition = None
        self._family_checked = False
        self._family = None

    @property
    def group(self) -> FiniteGroup:
        if self._group is None:
            degree = int(self.spec["degree"])
            gens = [parse_cycles(g, degree) for g in self.spec["generators"]]
            group = FiniteGroup(gens, degree=degree)
            want = self.spec.get("order")
            if want is not None and group.order != want:
                raise InputError(
                    f"group {self.name} enumerates to order {group.order}, "
                    f"spec says {want}")
            self._group = group
        return self._group

    @property
    def class_set(self) -> ClassSet:
        if self._class_set is None:
            self._class_set = ClassSet(self.group)
        return self._class_set

    @property
    def canonical_table(self) -> CharacterTable:
        if self._canonical_table is None:
            self._canonical_table = compute_character_table(
                self.group, self.class_set, name=self.name)
        return self._canonical_table

    def _reporting_parts(self):
        if self._reporting is None:
            table = self.canonical_table
            match = None
            adopted = False
            if self.is_builtin and self.name in datasets.BUILTIN_GROUP_NAMES:
                reference = datasets.transcription_table(self.name)
                match = match_columns(table, reference)
                if match.level != "positional":
                    table = table.reordered_rows(
                        list(match.row_map), labels=list(reference.characters))
                    adopted = True
            self._reporting = (table, match, adopted)
        return self._reporting

    @property
    def table(self) -> CharacterTable:
        """The table used for all reporting: published row order for the
        embedded groups, canonical otherwise."""
        return self._reporting_parts()[0]

    @property
    def reference_match(self) -> MatchResult | None:
        """Match of the computed table against the embedded reference
        transcription; None for groups without one."""
        return self._reporting_parts()[1]

    @property
    def published_order_adopted(self) -> bool:
        return self._reporting_parts()[2]

    @property
    def permchar(self) -> ClassFunction:
        if self._permchar is None:
            self._permchar = permutation_character(
                self.group, self.class_set, self.table)
        return self._permchar

    @property
    def family(self) -> str | None:
        """Closed-form family name, only for the embedded groups and
        only after the published row alignment has been confirmed by
        decomposing the permutation character."""
        if not self._family_checked:
            self._family_checked = True
            if (self.is_builtin and self.name in CLOSED_FORM_FAMILIES
                    and self.published_order_adopted):
                d1 = decompose(self.permchar, self.table)
                want = _EXPECTED_FIRST_DECOMPOSITION[self.name]
                if d1 != want:
                    raise InconsistencyError(
                        f"permutation character of {self.name} decomposes as "
                        f"{d1}, published alignment expects {want}")
                self._family = self.name
        return self._family

    @property
    def transition(self) -> list[list[int]]:
        if self._transition is None:
            self._transition = transition_matrix(self.permchar, self.table)
        return self._transition

    def diag_variant_notes(self) -> list[str]:
        """Which printed fixed-point diagonal variant agrees with the
        derived one, in the reference table's column order."""
        match = self.reference_match
        if match is None or self.name not in datasets.TABLE_PRINTED_DIAG:
            return []
        reference = datasets.transcription_table(self.name)
        fixed = [c.representative.fixed_points()
                 for c in self.class_set.classes]
        derived = [fixed[match.col_map[b]] for b in range(reference.size)]
        notes = []
        for variant, printed in sorted(
                datasets.TABLE_PRINTED_DIAG[self.name].items()):
            if printed == derived:
                notes.append(f"printed diagonal variant {variant} matches "
                             "the derived fixed-point diagonal")
            else:
                bad = [reference.classes[b].label
                       for b in range(reference.size) if printed[b] != derived[b]]
                notes.append(f"printed diagonal variant {variant} differs "
                             f"from the derived fixed-point diagonal at "
                             f"columns {', '.join(bad)}")
        return notes


@lru_cache(maxsize=None)
def builtin_analysis(name: str) -> GroupAnalysis:
    return GroupAnalysis(datasets.builtin_group(name), is_builtin=True)


def analysis_from_file(path: str) -> GroupAnalysis:
    return GroupAnalysis(datasets.load_group_file(path), is_builtin=False)
