# SPDX-FileCopyrightText: Copyright DB Netz AG and the qudit-zw contributors
# SPDX-License-Identifier: Apache-2.0
from __future__ import annotations

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quditzw import qufinite, semantics, textformat
from quditzw.diagram import core, derived
from quditzw.diagram import generators as gen

from .conftest import TEST_TERMS_PATH, TOL, complexes, diagrams


def _read(name: str) -> str:
    return (TEST_TERMS_PATH / name).read_text(encoding="utf8")


class TestParse:
    def test_w_with_phase(self) -> None:
        expected = [[1, 0], [0, 1j], [0, 1], [0, 0]]

        diagram = textformat.parse(_read("w_phase.term"), 2)

        assert semantics.approx_equal(
            semantics.interpret(diagram), expected, TOL
        )

    def test_empty_phase_list_is_phase_free(self) -> None:
        diagram = textformat.parse(_read("spider.term"), 4)

        assert isinstance(diagram, core.Leaf)
        assert diagram == derived.spider(2, 1, 4)

    def test_comments_are_ignored(self, snake_text: str) -> None:
        assert snake_text.startswith(";")

        diagram = textformat.parse(snake_text, 3)

        assert diagram.signature == ((3,), (3,))

    def test_binder_ignores_the_dimension(self) -> None:
        diagram = textformat.parse("(seq (bind 2 3) (split 3 2))", 5)

        assert diagram.signature == ((2, 3), (3, 2))

    @pytest.mark.parametrize(
        ["text", "expected"],
        [
            pytest.param("2", 2 + 0j, id="integer"),
            pytest.param("-0.5", -0.5 + 0j, id="negative"),
            pytest.param("1.5-2i", 1.5 - 2j, id="complex"),
            pytest.param("0+1e-3i", 1e-3j, id="exponent"),
            pytest.param(".5+.25i", 0.5 + 0.25j, id="leading-dot"),
        ],
    )
    def test_parse_complex(self, text: str, expected: complex) -> None:
        assert textformat.parse_complex(text) == expected

    def test_parse_complex_keeps_negative_zero(self) -> None:
        value = textformat.parse_complex("1.0-0.0i")

        assert math.copysign(1.0, value.imag) == -1.0

    @pytest.mark.parametrize(
        ["text", "d", "position", "message"],
        [
            pytest.param(
                _read("mismatch.term"),
                2,
                9,
                "Codomain [2, 2] of the upper diagram does not match "
                "domain [2]",
                id="mismatch",
            ),
            pytest.param(
                _read("bad_complex.term"),
                2,
                8,
                "Invalid complex number '1+i'",
                id="bad-complex",
            ),
            pytest.param(
                _read("unclosed.term"),
                2,
                15,
                "Expected ')' but reached the end of input",
                id="unclosed",
            ),
            pytest.param(
                "(z 1 1 [1, 2])",
                2,
                7,
                "Phase length 2 does not match d - 1 = 1",
                id="phase-length",
            ),
            pytest.param("(foo)", 2, 1, "Unknown atom 'foo'", id="atom"),
            pytest.param(
                "(id) (id)", 2, 5, "Unexpected '(' after the term", id="tail"
            ),
            pytest.param(
                "(seq (id) (id) (id))",
                2,
                15,
                "Expected ')' but found '('",
                id="ternary-seq",
            ),
            pytest.param(
                "(z x 1 [])",
                2,
                3,
                "Expected a non-negative integer but found 'x'",
                id="integer",
            ),
            pytest.param("(w)", 1, 0, "needs d >= 2", id="dimension"),
            pytest.param("", 2, 0, "reached the end of input", id="empty"),
            pytest.param(
                "(par " * 250 + "(id)",
                2,
                5 * (textformat.MAX_DEPTH + 1),
                "nested deeper than",
                id="depth",
            ),
            pytest.param(
                "(seq (id) (z 40 40 []))", 2, 10, "at most 64", id="legs"
            ),
        ],
    )
    def test_errors_carry_the_position(
        self, text: str, d: int, position: int, message: str
    ) -> None:
        with pytest.raises(textformat.ParseError) as info:
            textformat.parse(text, d)

        assert info.value.position == position
        assert message in str(info.value)
        assert str(info.value).endswith(f"at position {position}")

    def test_dimension_below_one_raises(self) -> None:
        with pytest.raises(gen.InvalidDimension):
            textformat.parse("(id)", 0)


class TestPrint:
    def test_canonical_form(self) -> None:
        diagram = textformat.parse(_read("w_phase.term"), 2)

        text = textformat.print_diagram(diagram)

        assert text == "(seq (w) (par (id) (z 1 1 [0.0+1.0i])))"

    def test_phase_free_spider_prints_empty_list(self) -> None:
        text = textformat.print_diagram(derived.spider(0, 3, 5))

        assert text == "(z 0 3 [])"

    def test_binder(self) -> None:
        assert textformat.print_diagram(qufinite.binder(2, 3)) == (
            "(bind 2 3)"
        )

    def test_mixed_swap_has_no_text(self) -> None:
        with pytest.raises(gen.DiagramError, match=r"\[2, 3\]"):
            textformat.print_diagram(qufinite.swap(2, 3))

    @pytest.mark.parametrize(
        ["value", "expected"],
        [
            pytest.param(1 + 0j, "1.0+0.0i", id="one"),
            pytest.param(-0.5 - 2j, "-0.5-2.0i", id="negative"),
            pytest.param(complex(1, -0.0), "1.0-0.0i", id="negative-zero"),
            pytest.param(0.1 + 1e-20j, "0.1+1e-20i", id="exponent"),
        ],
    )
    def test_format_complex(self, value: complex, expected: str) -> None:
        assert textformat.format_complex(value) == expected

    @given(value=complexes)
    def test_complex_literals_are_exact(self, value: complex) -> None:
        text = textformat.format_complex(value)

        assert textformat.parse_complex(text) == value

    @given(d=st.sampled_from([2, 3, 4]), data=st.data())
    @settings(max_examples=500, deadline=None)
    def test_printed_diagrams_parse_back(
        self, d: int, data: st.DataObject
    ) -> None:
        diagram = data.draw(diagrams(d))

        text = textformat.print_diagram(diagram)
        parsed = textformat.parse(text, d)

        assert parsed == diagram
        assert textformat.print_diagram(parsed) == text
        assert np.array_equal(
            semantics.interpret(parsed), semantics.interpret(diagram)
        )
