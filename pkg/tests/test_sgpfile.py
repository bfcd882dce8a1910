import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from brandt import (
    BadZero,
    NonAssociative,
    ParseError,
    parse_sgp,
    read_extension,
    write_extension,
    write_sgp,
)
from brandt.construct import brandt_extension, matrix_units, matrix_units_extension
from brandt.corpus import (
    chain,
    cyclic_group_with_zero,
    example_e,
    two_element,
)

CORPUS = [two_element(), chain(3), example_e(), cyclic_group_with_zero(2)]


def test_roundtrip_matrix_units():
    b2 = matrix_units(2)
    assert parse_sgp(write_sgp(b2)) == b2


def test_roundtrip_preserves_declarations():
    S = example_e()
    text = write_sgp(S)
    assert "zero 2" in text and "identity 0" in text
    T = parse_sgp(text)
    assert T.zero == 2 and T.identity == 0 and T.labels == S.labels


def test_labels_default_when_missing():
    S = parse_sgp("sgp 1\nn 2\nrow 0 1\nrow 1 1\n")
    assert S.labels == ("e0", "e1")


def test_comments_and_blank_lines_ignored():
    text = "# header comment\nsgp 1\n\nn 2\nlabels a b\nrow 0 1  # inline\nrow 1 1\nzero 1\n"
    S = parse_sgp(text)
    assert S.labels == ("a", "b") and S.zero == 1


def test_missing_row_reports_count():
    with pytest.raises(ParseError) as exc:
        parse_sgp("sgp 1\nn 3\nrow 0 1 2\nrow 1 1 2\n")
    assert "expected 3 rows" in str(exc.value)


def test_parse_error_carries_line_number():
    with pytest.raises(ParseError) as exc:
        parse_sgp("sgp 1\nn 2\nrow 0 5\nrow 1 1\n")
    assert exc.value.line == 3


def test_duplicate_labels_rejected():
    with pytest.raises(ParseError):
        parse_sgp("sgp 1\nn 2\nlabels a a\nrow 0 1\nrow 1 1\n")


def test_non_associative_table_rejected_with_witness():
    with pytest.raises(NonAssociative) as exc:
        parse_sgp("sgp 1\nn 2\nrow 1 0\nrow 0 0\n")
    assert exc.value.witness == (0, 0, 1)


def test_bad_zero_declaration():
    with pytest.raises(BadZero):
        parse_sgp("sgp 1\nn 2\nrow 0 1\nrow 1 1\nzero 0\n")


def test_unknown_directive():
    with pytest.raises(ParseError):
        parse_sgp("sgp 1\nn 1\nrow 0\nfoo 1\n")


def test_bad_header():
    with pytest.raises(ParseError):
        parse_sgp("sgp 2\nn 1\nrow 0\n")


def test_extension_legend_roundtrip():
    ext = brandt_extension(example_e(), 2)
    text = write_extension(ext)
    back = read_extension(text)
    assert back is not None
    assert back.lam == 2
    assert back.carrier.table == ext.carrier.table
    assert back.carrier.labels == ext.carrier.labels
    assert back.base.order == ext.base.order
    # index coordinates survive even though the base is reindexed
    for idx in range(1, ext.carrier.order):
        a1, _, b1 = ext.decode(idx)
        a2, _, b2 = back.decode(idx)
        assert (a1, b1) == (a2, b2)


def test_plain_file_has_no_legend():
    assert read_extension(write_sgp(example_e())) is None


def test_corrupted_legend_rejected():
    ext = matrix_units_extension(2)
    text = write_extension(ext).replace("lambda 2", "lambda 3")
    with pytest.raises(ParseError):
        read_extension(text)


@given(st.data())
@settings(max_examples=150, deadline=None)
def test_random_extension_roundtrip(data):
    S = data.draw(st.sampled_from(CORPUS))
    lam = data.draw(st.integers(min_value=1, max_value=3))
    ext = brandt_extension(S, lam)
    assert parse_sgp(write_sgp(ext.carrier)) == ext.carrier
