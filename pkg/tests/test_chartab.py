"""Character table container, validation, matching, serialization.

The published transcription dataset is the main fixture for the
negative paths: its two wrong cells and three inconsistent class sizes
must be flagged exactly, and nothing else.
"""

import json

import pytest

from ctrz.errors import InputError
from ctrz.exact import Cyclotomic
from ctrz.perm import FiniteGroup, ClassSet, parse_cycles
from ctrz.dixon import compute_character_table
from ctrz.datasets import transcription_table
from ctrz.chartab import (CharacterTable, ClassInfo, ClassFunction,
                          DecompositionError, validate,
                          permutation_character, inner_product, decompose,
                          match_columns, class_metadata_findings,
                          encode_value, decode_value, display_value,
                          table_to_dict, table_from_dict, load_table)


def rat(x, conductor=1):
    return Cyclotomic.from_rational(x, conductor)


def s3_table():
    g = FiniteGroup([parse_cycles("(1,2)", 3), parse_cycles("(1,2,3)", 3)])
    cs = ClassSet(g)
    return g, cs, compute_character_table(g, cs)


def test_validate_accepts_computed_tables(g8, g14):
    assert validate(g8.canonical_table) == []
    assert validate(g14.canonical_table) == []


def test_validate_transcription_localizes_the_wrong_column():
    """Every orthogonality failure of the published table involves the
    two degree-3 rows or the printed column holding their wrong cell."""
    ext = transcription_table("g")
    violations = validate(ext)
    assert violations
    kinds = {v.kind for v in violations}
    assert kinds == {"row-orthogonality", "column-orthogonality"}
    for v in violations:
        if v.kind == "row-orthogonality":
            assert "chi2" in v.subject or "chi3" in v.subject
        else:
            assert "C3" in v.subject.split(",")
    # The diagonal column failure states the centralizer mismatch.
    diag = [v for v in violations if v.subject == "C3,C3"]
    assert len(diag) == 1
    assert "30" in diag[0].detail and "32" in diag[0].detail


def test_validate_transcription_h_side():
    violations = validate(transcription_table("h"))
    assert violations
    for v in violations:
        if v.kind == "row-orthogonality":
            assert "chi2" in v.subject or "chi3" in v.subject
        else:
            assert "C4'" in v.subject.split(",")


def test_validate_catches_seeded_cell_error(g8):
    data = table_to_dict(g8.canonical_table)
    data["characters"][5]["values"][3] = "5"
    broken = table_from_dict(data)
    violations = validate(broken)
    assert violations
    row = data["characters"][5]["label"]
    col = data["classes"][3]["label"]
    assert any(row in v.subject for v in violations if v.kind == "row-orthogonality")
    assert any(col in v.subject for v in violations if v.kind == "column-orthogonality")


def test_validate_catches_degree_sum_mismatch():
    _, _, ct = s3_table()
    data = table_to_dict(ct)
    for row in data["characters"]:
        if row["values"][0] == "2":
            row["values"] = ["3", "0", "1"]
    broken = table_from_dict(data)
    assert any(v.kind == "degree-squares" for v in validate(broken))


def test_validate_rejects_nonpositive_sizes():
    ct = CharacterTable("bad", 2, 1,
                        [ClassInfo("C1", 1, 1), ClassInfo("C2", -1, 2)],
                        ["chi1"], [[rat(1), rat(1)]])
    kinds = [v.kind for v in validate(ct)]
    assert "class-sizes" in kinds


def test_validate_requires_identity_class():
    ct = CharacterTable("bad", 4, 1,
                        [ClassInfo("C1", 2, 1), ClassInfo("C2", 2, 2)],
                        ["chi1", "chi2"],
                        [[rat(1), rat(1)], [rat(1), rat(-1)]])
    kinds = {v.kind for v in validate(ct)}
    assert "identity-class" in kinds


def test_permutation_character_values_are_fixed_points():
    g, cs, ct = s3_table()
    chi = permutation_character(g, cs, ct)
    assert [v.as_rational() for v in chi.values] == [3, 0, 1]


def test_permutation_character_rejects_misaligned_table(g8):
    g = FiniteGroup([parse_cycles("(1,2)", 3), parse_cycles("(1,2,3)", 3)])
    cs = ClassSet(g)
    with pytest.raises(InputError):
        permutation_character(g, cs, g8.canonical_table)


def test_inner_product_of_irreducibles_is_kronecker():
    _, _, ct = s3_table()
    for i in range(ct.size):
        for j in range(ct.size):
            got = inner_product(ct.row(i), ct.row(j)).as_rational()
            assert got == (1 if i == j else 0)


def test_decompose_s3_natural_character():
    g, cs, ct = s3_table()
    chi = permutation_character(g, cs, ct)
    # Natural character of S3 = trivial + standard.
    assert decompose(chi, ct) == (1, 0, 1)
    assert inner_product(chi, chi).as_rational() == 2


def test_decompose_rejects_non_character():
    _, _, ct = s3_table()
    f = ClassFunction(ct, [rat(1), rat(0), rat(0)])
    with pytest.raises(DecompositionError):
        decompose(f, ct)


def test_decompose_requires_verified_table():
    ext = transcription_table("g")
    f = ClassFunction(ext, [rat(1)] * 11)
    with pytest.raises(InputError):
        decompose(f, ext)


def test_class_function_pointwise_algebra():
    _, _, ct = s3_table()
    chi = ct.row(2)
    sq = chi * chi
    assert [v.as_rational() for v in sq.values] == [4, 1, 0]
    assert [v.as_rational() for v in chi.power(3).values] == [8, -1, 0]
    with pytest.raises(InputError):
        ClassFunction(ct, [rat(1), rat(1)])


def test_match_self_is_identity(g8):
    m = match_columns(g8.canonical_table, g8.canonical_table)
    assert m.row_map == tuple(range(11))
    assert m.col_map == tuple(range(11))
    assert m.errata.findings == []
    assert m.level == "full"


def test_match_cross_group_finds_no_differences(g8, g14):
    """The two builtin groups have identical character tables once the
    columns are keyed by size alone; orders differ, so the constraint
    level drops to size and the cell sets still agree everywhere."""
    m = match_columns(g8.canonical_table, g14.canonical_table)
    assert m.level == "size"
    assert m.errata.findings == []
    assert m.row_map == tuple(range(11))
    assert m.col_map == tuple(range(11))


def test_match_against_transcription_g(g8):
    m = match_columns(g8.canonical_table, transcription_table("g"))
    assert m.level == "full"
    cells = [(f.row, f.column, f.external, f.computed)
             for f in m.errata.findings if f.kind == "cell"]
    assert cells == [("chi2", "C3", "0", "-1"), ("chi3", "C3", "0", "-1")]
    sizes = {(f.column, f.external, f.computed)
             for f in m.errata.findings if f.kind == "class-size"}
    assert sizes == {("C6", "168", "84"), ("C5", "84", "224"),
                     ("C8", "224", "168")}
    orders = {f.column for f in m.errata.findings if f.kind == "class-order"}
    assert orders == {"C5", "C8"}
    assert len(m.errata.findings) == 7


def test_match_against_transcription_h(g14):
    m = match_columns(g14.canonical_table, transcription_table("h"))
    cells = [(f.row, f.column, f.external, f.computed)
             for f in m.errata.findings if f.kind == "cell"]
    assert cells == [("chi2", "C4'", "0", "-1"), ("chi3", "C4'", "0", "-1")]
    assert {f.column for f in m.errata.findings if f.kind == "class-size"} == \
        {"C5'", "C6'", "C8'"}
    assert {f.column for f in m.errata.findings if f.kind == "class-order"} == \
        {"C5'", "C8'"}


def test_match_notes_flag_conventional_column_choice(g8):
    m = match_columns(g8.canonical_table, transcription_table("g"))
    assert any("C10" in note and "C11" in note for note in m.notes)


def test_match_requires_same_class_count(g8):
    _, _, s3 = s3_table()
    with pytest.raises(InputError):
        match_columns(g8.canonical_table, s3)


def test_match_falls_back_to_positional():
    """Tables whose class size multisets differ cannot be keyed, so the
    match degrades to positional pairing and reports the level."""
    _, _, s3 = s3_table()
    c3 = compute_character_table(FiniteGroup([parse_cycles("(1,2,3)", 3)]))
    m = match_columns(s3, c3)
    assert m.level == "positional"
    assert m.errata.findings


def test_match_result_to_dict(g8):
    m = match_columns(g8.canonical_table, transcription_table("g"))
    d = m.to_dict()
    assert set(d) == {"matching", "findings"}
    assert d["matching"]["constraint_level"] == "full"
    assert len(d["matching"]["rows"]) == 11
    assert all(set(f) >= {"kind", "external", "computed"} for f in d["findings"])


def test_class_metadata_findings_direct():
    ext = transcription_table("g")
    findings = class_metadata_findings(ext)
    assert len(findings) == 5
    assert {f.kind for f in findings} == {"class-size", "class-order"}


def test_encode_decode_round_trip_all_values(g8, g14):
    for tab in (g8.canonical_table, g14.canonical_table,
                transcription_table("g"), transcription_table("h")):
        for row in tab.values:
            for v in row:
                assert decode_value(encode_value(v), tab.conductor) == v


def test_encode_value_forms(g8):
    tab = g8.canonical_table
    assert encode_value(tab.values[0][0]) == "1"
    enc = encode_value(tab.values[1][7])
    assert set(enc) == {"D", "a", "b"} and enc["D"] == -7
    zeta_cell = encode_value(tab.values[4][4] * Cyclotomic.zeta(84))
    assert set(zeta_cell) == {"conductor", "coeffs"}


def test_decode_value_rejects_garbage():
    with pytest.raises(InputError):
        decode_value("1.5", 84)
    with pytest.raises(InputError):
        decode_value("", 84)
    with pytest.raises(InputError):
        decode_value({"D": -7}, 84)
    with pytest.raises(InputError):
        decode_value(["1"], 84)
    with pytest.raises(InputError):
        decode_value({"conductor": 4, "coeffs": ["1", "0", "0"]}, 4)


def test_display_value_strings(g8):
    tab = g8.canonical_table
    shown = {display_value(v) for row in tab.values for v in row}
    assert "(-1+√-7)/2" in shown
    assert "(-1-√-7)/2" in shown
    assert "-1" in shown and "8" in shown


def test_table_dict_round_trip(g8):
    data = table_to_dict(g8.canonical_table)
    back = table_from_dict(data)
    assert back.values == g8.canonical_table.values
    assert [c.label for c in back.classes] == \
        [c.label for c in g8.canonical_table.classes]
    # Loaded tables are never trusted until re-validated.
    assert back.verified is False


def test_table_dict_keeps_printed_sizes():
    data = table_to_dict(transcription_table("g"))
    back = table_from_dict(data)
    assert any(c.printed_size is not None and c.printed_size != c.size
               for c in back.classes)


def test_load_table_from_file(tmp_path, g8):
    path = tmp_path / "table.json"
    path.write_text(json.dumps(table_to_dict(g8.canonical_table)))
    back = load_table(str(path))
    assert back.values == g8.canonical_table.values


def test_load_table_errors(tmp_path):
    with pytest.raises(InputError):
        load_table(str(tmp_path / "missing.json"))
    bad = tmp_path / "bad.json"
    bad.write_text("not json")
    with pytest.raises(InputError):
        load_table(str(bad))
    wrong = tmp_path / "wrong.json"
    wrong.write_text(json.dumps({"name": "x"}))
    with pytest.raises(InputError):
        load_table(str(wrong))


def test_reordered_rows(g8):
    tab = g8.canonical_table
    order = [10, 0, 1, 2, 3, 4, 5, 6, 7, 8, 9]
    moved = tab.reordered_rows(order)
    assert moved.values[0] == tab.values[10]
    assert moved.values[1] == tab.values[0]
    assert moved.verified == tab.verified
    with pytest.raises(InputError):
        tab.reordered_rows([0, 0, 1, 2, 3, 4, 5, 6, 7, 8, 9])


def test_identity_column(g8):
    assert g8.canonical_table.identity_column() == 0
