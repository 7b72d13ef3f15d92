from fractions import Fraction

import pytest

from sylowtab.cyclo import Cyc, cyc_root
from sylowtab.serialize import (GroupDocument, ParseError, ReportRow,
                                emit_group, emit_report, emit_table,
                                parse_cyc_expr, parse_group, parse_table,
                                parse_text_table, report_has_mismatch)


@pytest.mark.parametrize("name", ["C2", "S4", "A5", "SL(2,9)", "M11"])
def test_table_round_trip(corpus, name):
    t = corpus.table(name)
    text = emit_table(t)
    t2 = parse_table(text)
    assert emit_table(t2) == text
    assert t2.chars == t.chars
    assert t2.power_maps == t.power_maps
    assert [(c.size, c.element_order) for c in t2.classes] \
        == [(c.size, c.element_order) for c in t.classes]


def test_group_round_trip():
    g = GroupDocument(degree=3, generators=((1, 2, 0), (1, 0, 2)),
                      name="S3", expected_order=6)
    assert parse_group(emit_group(g)) == g


def test_parse_errors_are_located():
    with pytest.raises(ParseError, match="power_maps"):
        parse_table('{"kind": "table", "group_order": 1,'
                    ' "classes": [], "characters": []}')
    with pytest.raises(ParseError, match="generators"):
        parse_group('{"kind": "group", "degree": 3, "generators": [[0, 1]]}')
    with pytest.raises(ParseError, match="invalid JSON"):
        parse_table("{")


def test_parse_rejects_invalid_table(corpus):
    import json
    doc = json.loads(emit_table(corpus.table("S4")))
    doc["classes"][1]["size"] = 7  # breaks size sum and orthogonality
    with pytest.raises(ParseError, match="validation"):
        parse_table(json.dumps(doc))


def test_cyc_expr_parser():
    assert parse_cyc_expr("3") == Cyc.from_rational(Fraction(3))
    assert parse_cyc_expr("-2") == Cyc.from_rational(Fraction(-2))
    assert parse_cyc_expr("E(4)") == cyc_root(4, 1)
    assert parse_cyc_expr("E(5)^2+E(5)^3") == cyc_root(5, 2) + cyc_root(5, 3)
    assert parse_cyc_expr("2*E(3)+1") == 2 * cyc_root(3, 1) + Cyc.one()
    assert parse_cyc_expr("E(8)-E(8)^3") == cyc_root(8, 1) - cyc_root(8, 3)
    with pytest.raises(ParseError):
        parse_cyc_expr("E(8)^")
    with pytest.raises(ParseError):
        parse_cyc_expr("1 + $")


def test_text_table_import_validates():
    s3 = """\
order 6
centralizers 6 2 3
orders 1 2 3
powermap 2 1 1 3
powermap 3 1 2 1
char 1 1 1
char 1 -1 1
char 2 0 -1
"""
    t = parse_text_table(s3, name="S3")
    assert t.group_order == 6 and t.k == 3
    with pytest.raises(ParseError, match="power maps"):
        parse_text_table("order 2\nsizes 1 1\norders 1 2\nchar 1 1\nchar 1 -1\n")
    with pytest.raises(ParseError, match="validation"):
        parse_text_table(s3.replace("char 2 0 -1", "char 2 0 1"))


def test_text_table_matches_dixon(corpus):
    """The importer and the Dixon engine agree on C4 up to row order."""
    c4 = """\
order 4
sizes 1 1 1 1
orders 1 4 2 4
powermap 2 1 3 1 3
char 1 1 1 1
char 1 E(4) -1 E(4)^3
char 1 -1 1 -1
char 1 E(4)^3 -1 E(4)
"""
    t = parse_text_table(c4)
    d = corpus.table("C4")
    assert {frozenset(r) for r in t.chars} == {frozenset(r) for r in d.chars}


def test_report_determinism_and_mismatch():
    rows = [
        ReportRow("S4", 2, "yes", "yes", False, 4, True, True, False),
        ReportRow("A5", 2, "yes", "no", True, 4, True, False, True),
    ]
    text = emit_report(rows)
    assert text == emit_report(list(reversed(rows)))
    assert text.splitlines()[1].startswith("group=A5")
    assert "MISMATCH" not in text
    assert not report_has_mismatch(rows)
    bad = [ReportRow("S4", 2, "no", "yes", False, 4, True, True, False)]
    assert report_has_mismatch(bad)
    assert "thmA_check=MISMATCH" in emit_report(bad)


def test_report_empty():
    assert emit_report([]) == "# sylowtab report v1\n"


def test_report_unknown_flag():
    rows = [ReportRow("X", 2, "unknown", "no", False, 1, True, False, False)]
    assert "thmA_check=UNKNOWN" in emit_report(rows)
    assert not report_has_mismatch(rows)
