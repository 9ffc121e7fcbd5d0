# SPDX-FileCopyrightText: Copyright DB Netz AG and the qudit-zw contributors
# SPDX-License-Identifier: Apache-2.0
from __future__ import annotations

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quditzw import semantics, textformat
from quditzw.diagram import core, derived
from quditzw.diagram import generators as gen

from .conftest import TOL, diagrams


class TestGeneratorMatrices:
    def test_w_at_two(self) -> None:
        expected = [[1, 0], [0, 1], [0, 1], [0, 0]]

        matrix = semantics.generator_matrix(gen.W(), 2)

        assert np.array_equal(matrix, expected)

    def test_w_at_three_maps_every_digit_to_both_outputs(self) -> None:
        matrix = semantics.generator_matrix(gen.W(), 3)

        assert matrix.shape == (9, 3)
        assert np.flatnonzero(matrix[:, 0]).tolist() == [0]
        assert np.flatnonzero(matrix[:, 1]).tolist() == [1, 3]
        assert np.flatnonzero(matrix[:, 2]).tolist() == [2, 6]

    def test_braid_at_two(self) -> None:
        expected = [
            [1, 0, 0, 0],
            [0, 0, 1, 0],
            [0, 1, 0, 0],
            [0, 0, 0, -1],
        ]

        matrix = semantics.generator_matrix(gen.Braid(), 2)

        assert semantics.approx_equal(matrix, expected, TOL)

    @pytest.mark.parametrize("d", [2, 3, 4, 5])
    def test_braid_inverse_undoes_the_braid(self, d: int) -> None:
        braid = semantics.generator_matrix(gen.Braid(), d)
        inverse = semantics.generator_matrix(gen.BraidInv(), d)

        assert semantics.approx_equal(inverse @ braid, np.eye(d * d), TOL)

    @pytest.mark.parametrize("d", [2, 3, 4, 5])
    def test_hadamard_times_its_dagger_is_d_times_identity(
        self, d: int
    ) -> None:
        h = semantics.generator_matrix(gen.Hadamard(), d)
        h_dagger = semantics.generator_matrix(gen.HadamardDagger(), d)

        assert semantics.approx_equal(h @ h_dagger, d * np.eye(d), TOL)
        assert semantics.approx_equal(h_dagger, h.conj().T, TOL)

    def test_triangle_at_three(self) -> None:
        expected = [[1, 1, 1], [0, 1, 0], [0, 0, 1]]

        matrix = semantics.generator_matrix(gen.Triangle(), 3)
        inverse = semantics.generator_matrix(gen.TriangleInv(), 3)

        assert np.array_equal(matrix, expected)
        assert semantics.approx_equal(inverse @ matrix, np.eye(3), TOL)

    def test_spider_one_to_one_is_the_phase_diagonal(self) -> None:
        phase = gen.PhaseVector((2, -1j), 3)

        matrix = semantics.generator_matrix(gen.ZSpider(1, 1, phase), 3)

        assert np.array_equal(matrix, np.diag([1, 2, -1j]))

    def test_spider_without_legs_sums_its_coefficients(self) -> None:
        phase = gen.PhaseVector((2, -1j, 0.5), 4)

        matrix = semantics.generator_matrix(gen.ZSpider(0, 0, phase), 4)

        assert matrix.shape == (1, 1)
        assert matrix[0, 0] == 3.5 - 1j

    def test_spider_two_to_one_at_three(self) -> None:
        phase = gen.PhaseVector((5, 7), 3)

        matrix = semantics.generator_matrix(gen.ZSpider(2, 1, phase), 3)

        assert matrix.shape == (3, 9)
        assert matrix[0, 0] == 1
        assert matrix[1, 4] == 5
        assert matrix[2, 8] == 7
        assert np.count_nonzero(matrix) == 3

    def test_mixed_swap_exchanges_the_digits(self) -> None:
        matrix = semantics.generator_matrix(gen.Swap((2, 3)), 0)

        for a in range(2):
            for b in range(3):
                rows = np.flatnonzero(matrix[:, a * 3 + b])
                assert rows.tolist() == [b * 2 + a]

    def test_cached_matrices_are_read_only(self) -> None:
        matrix = semantics.generator_matrix(gen.Cap(), 3)

        with pytest.raises(ValueError):
            matrix[0, 0] = 5

    def test_unknown_generator_raises(self) -> None:
        class Mystery(gen.Generator):
            symbol = "mystery"
            calculi = frozenset()

        with pytest.raises(gen.UnknownGenerator):
            semantics.generator_matrix(Mystery(), 2)


class TestInterpret:
    @pytest.mark.parametrize("d", [1, 2, 3, 4, 5])
    def test_snake_is_the_identity(self, snake_text: str, d: int) -> None:
        diagram = textformat.parse(snake_text, d)

        matrix = semantics.interpret(diagram)

        assert np.array_equal(matrix, np.eye(d))

    @pytest.mark.parametrize("d", [2, 3, 4, 5])
    def test_mirrored_snake_is_the_identity(self, d: int) -> None:
        i = derived.identity(d)
        diagram = core.seq(
            core.par(derived.cap(d), i), core.par(i, derived.cup(d))
        )

        assert semantics.approx_equal(
            semantics.interpret(diagram), np.eye(d), TOL
        )

    @pytest.mark.parametrize("d", [2, 3, 4, 5])
    def test_cap_and_cup_absorb_the_swap(self, d: int) -> None:
        swap = derived.swap(d)
        cap, cup = derived.cap(d), derived.cup(d)

        assert semantics.approx_equal(
            semantics.interpret(core.seq(cap, swap)),
            semantics.interpret(cap),
            TOL,
        )
        assert semantics.approx_equal(
            semantics.interpret(core.seq(swap, cup)),
            semantics.interpret(cup),
            TOL,
        )

    @pytest.mark.parametrize("d", [2, 3, 4, 5])
    def test_swap_is_an_involution(self, d: int) -> None:
        swap = derived.swap(d)

        matrix = semantics.interpret(core.seq(swap, swap))

        assert np.array_equal(matrix, np.eye(d * d))

    def test_seq_multiplies_lower_after_upper(self) -> None:
        tri = core.make_generator(gen.Triangle(), 3)
        h = derived.hadamard(3)
        expected = semantics.generator_matrix(gen.Hadamard(), 3) @ (
            semantics.generator_matrix(gen.Triangle(), 3)
        )

        matrix = semantics.interpret(core.seq(tri, h))

        assert semantics.approx_equal(matrix, expected, TOL)

    def test_par_is_the_kronecker_product(self) -> None:
        diagram = core.par(derived.w(2), derived.identity(3))

        matrix = semantics.interpret(diagram)

        assert matrix.shape == (12, 6)
        assert np.array_equal(
            matrix,
            np.kron(semantics.generator_matrix(gen.W(), 2), np.eye(3)),
        )

    def test_empty_is_the_scalar_one(self) -> None:
        assert np.array_equal(semantics.interpret(core.empty()), [[1]])

    def test_entry_cap_is_enforced(self) -> None:
        with pytest.raises(semantics.EntryCapExceeded, match="27 entries"):
            semantics.interpret(derived.w(3), entry_cap=10)

    @given(data=st.data())
    @settings(max_examples=40, deadline=None)
    def test_interchange_law(self, data: st.DataObject) -> None:
        a = data.draw(diagrams(2, max_leaves=3, max_wires=2))
        b = data.draw(diagrams(2, max_leaves=3, max_wires=2))
        rot_a, rot_b = derived.rotate(a, 2), derived.rotate(b, 2)

        left = core.seq(core.par(a, b), core.par(rot_a, rot_b))
        right = core.par(core.seq(a, rot_a), core.seq(b, rot_b))

        assert semantics.approx_equal(
            semantics.interpret(left), semantics.interpret(right), TOL
        )


class TestFunctoriality:
    @given(d=st.sampled_from([2, 3]), data=st.data())
    @settings(max_examples=100, deadline=None)
    def test_seq_is_the_matrix_product(
        self, d: int, data: st.DataObject
    ) -> None:
        a = data.draw(diagrams(d, max_wires=3))
        b = data.draw(diagrams(d, max_wires=3, inputs=len(a.cod)))

        matrix = semantics.interpret(core.seq(a, b))

        expected = semantics.interpret(b) @ semantics.interpret(a)
        assert semantics.approx_equal(matrix, expected, TOL)

    @given(d=st.sampled_from([2, 3]), data=st.data())
    @settings(max_examples=100, deadline=None)
    def test_par_is_the_kronecker_product(
        self, d: int, data: st.DataObject
    ) -> None:
        a = data.draw(diagrams(d, max_wires=2))
        b = data.draw(diagrams(d, max_wires=2))

        matrix = semantics.interpret(core.par(a, b))

        expected = np.kron(semantics.interpret(a), semantics.interpret(b))
        assert semantics.approx_equal(matrix, expected, TOL)

    @given(data=st.data())
    @settings(max_examples=50, deadline=None)
    def test_par_is_associative(self, data: st.DataObject) -> None:
        a, b, c = (data.draw(diagrams(2, max_wires=2)) for _ in range(3))

        left = semantics.interpret(core.par(core.par(a, b), c))
        right = semantics.interpret(core.par(a, core.par(b, c)))

        assert semantics.approx_equal(left, right, TOL)

    @given(d=st.sampled_from([2, 3]), data=st.data())
    @settings(max_examples=50, deadline=None)
    def test_units_leave_the_interpretation_alone(
        self, d: int, data: st.DataObject
    ) -> None:
        a = data.draw(diagrams(d, max_wires=3))
        matrix = semantics.interpret(a)
        before = core.identities(len(a.dom), d)
        after = core.identities(len(a.cod), d)

        for unit in (
            core.par(core.empty(), a),
            core.par(a, core.empty()),
            core.seq(before, a),
            core.seq(a, after),
        ):
            assert semantics.approx_equal(
                semantics.interpret(unit), matrix, TOL
            )


class TestApproxEqual:
    def test_equal_within_tolerance(self) -> None:
        comparison = semantics.approx_equal([[1.0]], [[1.0 + 1e-12]], TOL)

        assert comparison
        assert comparison.reason is None

    def test_reports_the_worst_deviation(self) -> None:
        comparison = semantics.approx_equal([[1, 2]], [[1.5, 2]], TOL)

        assert not comparison
        assert comparison.deviation == 0.5

    def test_shape_mismatch_is_infinitely_off(self) -> None:
        comparison = semantics.approx_equal(np.eye(2), np.eye(3))

        assert not comparison
        assert math.isinf(comparison.deviation)
        assert comparison.reason is not None
        assert "Shape mismatch" in comparison.reason


class TestFormulas:
    @pytest.mark.parametrize("d", [2, 3, 4, 7])
    def test_roots_of_unity_close_the_circle(self, d: int) -> None:
        table = semantics.roots_of_unity(d)

        assert table[0] == 1
        assert table[d] == 1
        assert abs(table.xi**d - 1) <= TOL

    def test_fourth_root_of_unity_is_i(self) -> None:
        assert abs(semantics.roots_of_unity(4).xi - 1j) <= TOL

    def test_x_spider_state(self) -> None:
        matrix = semantics.x_spider_formula(0, 1, 1, 3)

        assert np.array_equal(matrix, [[0], [0], [1]])

    def test_x_spider_rejects_index_out_of_range(self) -> None:
        with pytest.raises(ValueError):
            semantics.x_spider_formula(1, 1, 3, 3)

    def test_red_tau_at_two(self) -> None:
        expected = [
            [(1 - 1j) / 2, (1 + 1j) / 2],
            [(1 + 1j) / 2, (1 - 1j) / 2],
        ]

        matrix = semantics.red_tau_formula(2)

        assert semantics.approx_equal(matrix, expected, TOL)

    def test_s_vector_scales_by_one_over_d(self) -> None:
        spider = gen.ZSpider(0, 0, semantics.s_vector(5))

        matrix = semantics.generator_matrix(spider, 5)

        assert abs(matrix[0, 0] - 0.2) <= TOL

    def test_black_spider_needs_a_leg(self) -> None:
        with pytest.raises(ValueError):
            semantics.black_spider_formula(0, 3)
