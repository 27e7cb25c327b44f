import pytest
from hypothesis import given

from apforge.grammar import GrammarError, parse_braid_letters, parse_int_vector, parse_word
from apforge.words import Word

from strategies import words


@pytest.mark.parametrize(
    "text, expected",
    [
        ("x1 x2 x1^-1", "x1 x2 x1^-1"),
        ("x_1 x_2^{-1}", "x1 x2^-1"),
        ("(x1 x2)^2", "x1 x2 x1 x2"),
        ("(x1, x2)", "x1^-1 x2^-1 x1 x2"),
        ("(x1,x2)^-1", "x2^-1 x1^-1 x2 x1"),
        ("1", "1"),
        ("", "1"),
        ("x1^0 x2", "x2"),
        ("x1 x1^-1 # trailing comment", "1"),
        ("((x1, x2), x3)", str(Word.gen(1, 3).commutator(Word.gen(2, 3)).commutator(Word.gen(3, 3)))),
    ],
)
def test_parse(text, expected):
    assert str(parse_word(text, 3)) == expected


@pytest.mark.parametrize(
    "text, column, fragment",
    [
        ("x1 ^", 5, "missing exponent"),
        ("x5", 1, "out of range"),
        ("x1 (x2", 7, "expected ')'"),
        ("r1", 1, "relator references"),
        ("x1 ? x2", 4, "unexpected character"),
    ],
)
def test_errors_carry_position(text, column, fragment):
    with pytest.raises(GrammarError) as info:
        parse_word(text, 3, line=7)
    assert info.value.line == 7
    assert info.value.column == column
    assert fragment in info.value.reason


@given(words(4))
def test_printed_words_reparse(u):
    assert parse_word(str(u), 4) == u


def test_braid_letters():
    assert parse_braid_letters("s1 s2^-1 s1^2", 3) == [(1, 1), (2, -1), (1, 1), (1, 1)]
    with pytest.raises(GrammarError):
        parse_braid_letters("s3", 3)


def test_int_vector():
    assert parse_int_vector(" 1, -2,3 ") == [1, -2, 3]
    assert parse_int_vector("") == []
    with pytest.raises(GrammarError):
        parse_int_vector("1, a")
