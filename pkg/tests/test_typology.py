import io

import pytest
from hypothesis import given
from hypothesis import strategies as st

from wordorder.typology import (
    ORDER_TOKENS,
    LanguageRecord,
    TypologyParseError,
    TypologySummary,
    classify_verb_position,
    fixture_path,
    parse_language_table,
    read_language_table,
    serialize,
    summarize,
)


def test_parse_single_row():
    assert parse_language_table("language_id,dominant_order\nL1,SOV") == [LanguageRecord("L1", "SOV")]


def test_bad_token_reports_line():
    with pytest.raises(TypologyParseError) as err:
        parse_language_table("language_id,dominant_order\nL1,SOV\nL2,XYZ\n")
    assert err.value.line == 3
    assert "line 3" in str(err.value)


@pytest.mark.parametrize(
    "text,line",
    [
        ("id,order\nL1,SOV\n", 1),
        ("language_id,dominant_order\nL1,SOV,extra\n", 2),
        ("language_id,dominant_order\n,SOV\n", 2),
    ],
)
def test_malformed(text, line):
    with pytest.raises(TypologyParseError) as err:
        parse_language_table(text)
    assert err.value.line == line


def test_empty_inputs():
    assert parse_language_table("") == []
    assert parse_language_table("language_id,dominant_order\n") == []
    assert summarize([]) == TypologySummary(0, 0, 0, 0, 0)


def test_crlf_accepted():
    records = parse_language_table(io.StringIO("language_id,dominant_order\r\nA,VOS\r\nB,NONE\r\n", newline=""))
    assert records == [LanguageRecord("A", "VOS"), LanguageRecord("B", "NONE")]


@pytest.mark.parametrize(
    "order,cls",
    [("SOV", "final"), ("OSV", "final"), ("OVS", "medial"), ("SVO", "medial"), ("VSO", "initial"), ("VOS", "initial"), ("NONE", "none")],
)
def test_classify(order, cls):
    assert classify_verb_position(order) == cls


def test_fixture_reproduces_world_counts():
    records = read_language_table(fixture_path())
    assert len(records) == 1377
    s = summarize(records)
    assert (s.n1, s.n2, s.n3, s.total) == (120, 499, 569, 1377)
    assert s.none_share == pytest.approx(0.14, abs=0.01)
    assert s.n1 + s.n2 + s.n3 + s.none_count == s.total


def test_fixture_round_trip():
    text = fixture_path().read_text()
    assert serialize(parse_language_table(text)) == text


records_st = st.lists(
    st.builds(LanguageRecord, st.from_regex(r"[A-Za-z0-9_]{1,8}", fullmatch=True), st.sampled_from(ORDER_TOKENS)),
    unique_by=lambda r: r.language_id,
)


@given(records_st)
def test_partition_and_round_trip(records):
    s = summarize(records)
    assert s.n1 + s.n2 + s.n3 + s.none_count == s.total == len(records)
    canonical = serialize(records)
    assert serialize(parse_language_table(canonical)) == canonical


def test_summary_outputs():
    s = TypologySummary(1, 2, 3, 4, 10)
    assert s.to_json() == '{"n1": 1, "n2": 2, "n3": 3, "none_count": 4, "total": 10}'
    assert s.to_csv() == "n1,n2,n3,none_count,total\n1,2,3,4,10\n"
