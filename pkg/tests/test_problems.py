from fractions import Fraction

import pytest

from charvar.scalars import Scalar
from charvar.linalg import Mat
from charvar.problems import ParseError, parse_matrix, parse_problem
from charvar.words import surface_presentation

S = Scalar.of

GENUS2 = """
# genus-2 surface problem
[group]
surface_genus = 2

[target]
family = SL 2

[representation]
a1 = [[1,1],[0,1]]
b1 = [[1,0],[1,1]]
a2 = [[1,0],[1,1]]
b2 = [[1,1],[0,1]]
"""

EXPLICIT = """
[group]
generators = x y
relator = x x
relator = y y
relator = x y x y

[target]
family = SO 3

[representation]
x = [[1,0,0],[0,-1,0],[0,0,-1]]
y = [[-1,0,0],[0,1,0],[0,0,-1]]
"""

HANDLEBODY = """
[group]
generators = x y

[target]
family = SL 2

[representation]
x = [[1,1],[0,1]]
y = [[1,0],[1,1]]

[hom]
source_surface_genus = 2
a1 = x
b1 = 1
a2 = y
b2 = 1
"""


def test_parse_matrix_literals():
    assert parse_matrix("[[1,1],[0,1]]") == Mat.from_int_rows([[1, 1], [0, 1]])
    assert parse_matrix("[[1/2, -3*i]]") == Mat.from_rows(
        [[S(Fraction(1, 2)), S(0, -3)]])


def test_parse_genus2_problem():
    problem = parse_problem(GENUS2)
    assert problem.presentation == surface_presentation(2)
    assert str(problem.family) == "SL 2"
    assert problem.images[0] == Mat.from_int_rows([[1, 1], [0, 1]])
    assert problem.hom is None
    assert problem.form_gram is None


def test_parse_explicit_relators():
    problem = parse_problem(EXPLICIT)
    assert problem.presentation.generator_names == ("x", "y")
    assert len(problem.presentation.relators) == 3
    assert str(problem.family) == "SO 3"


def test_parse_hom_section():
    problem = parse_problem(HANDLEBODY)
    assert problem.hom is not None
    assert problem.hom.source == surface_presentation(2)
    assert problem.hom.images[1].is_empty()


def test_unbalanced_matrix_reports_position():
    bad = GENUS2.replace("a1 = [[1,1],[0,1]]", "a1 = [[1,1],[0,1]")
    with pytest.raises(ParseError) as info:
        parse_problem(bad)
    assert info.value.line == 10
    assert "matrix" in info.value.message


def test_bad_scalar_reports_position():
    bad = GENUS2.replace("[[1,0],[1,1]]\na2", "[[1,q],[1,1]]\na2")
    with pytest.raises(ParseError) as info:
        parse_problem(bad)
    assert info.value.line == 11
    assert "scalar" in info.value.message


def test_unknown_section_rejected():
    with pytest.raises(ParseError) as info:
        parse_problem("[grouping]\nx = 1\n")
    assert info.value.line == 1


def test_unknown_generator_rejected():
    bad = GENUS2 + "c3 = [[1,0],[0,1]]\n"
    with pytest.raises(ParseError) as info:
        parse_problem(bad)
    assert "c3" in info.value.message


def test_missing_section_rejected():
    with pytest.raises(ParseError):
        parse_problem("[group]\nsurface_genus = 1\n")


def test_missing_generator_image_rejected():
    bad = GENUS2.replace("b2 = [[1,1],[0,1]]\n", "")
    with pytest.raises(ParseError) as info:
        parse_problem(bad)
    assert "b2" in info.value.message


def test_size_mismatch_rejected():
    bad = GENUS2.replace("family = SL 2", "family = SL 3")
    with pytest.raises(ParseError) as info:
        parse_problem(bad)
    assert "expected 3x3" in info.value.message


def test_wrong_word_in_hom_rejected():
    bad = HANDLEBODY.replace("a1 = x", "a1 = z")
    with pytest.raises(ParseError) as info:
        parse_problem(bad)
    assert "z" in info.value.message


def test_form_section():
    text = GENUS2 + "\n[form]\ngram = [[0,2,0],[2,0,0],[0,0,4]]\n"
    problem = parse_problem(text)
    assert problem.form_gram == Mat.from_int_rows([[0, 2, 0], [2, 0, 0], [0, 0, 4]])
