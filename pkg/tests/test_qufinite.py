# SPDX-FileCopyrightText: Copyright DB Netz AG and the qudit-zw contributors
# SPDX-License-Identifier: Apache-2.0
from __future__ import annotations

import numpy as np
import pytest

from quditzw import qufinite, rules, semantics
from quditzw.diagram import core
from quditzw.diagram import generators as gen

from .conftest import TOL


class TestGenerators:
    @pytest.mark.parametrize("s", [1, 2, 3, 4, 5])
    @pytest.mark.parametrize("t", [1, 2, 3, 4, 5])
    def test_binder_and_splitter_are_mutually_inverse(
        self, s: int, t: int
    ) -> None:
        binder = qufinite.binder_matrix(s, t)
        splitter = qufinite.splitter_matrix(s, t)

        assert np.array_equal(splitter @ binder, np.eye(s * t))
        assert np.array_equal(binder @ splitter, np.eye(s * t))

    def test_binder_interprets_like_its_matrix(self) -> None:
        matrix = semantics.interpret(qufinite.binder(2, 3))

        assert np.array_equal(matrix, qufinite.binder_matrix(2, 3))

    def test_binder_and_splitter_signatures(self) -> None:
        assert qufinite.binder(2, 3).signature == ((2, 3), (6,))
        assert qufinite.splitter(2, 3).signature == ((6,), (2, 3))

    def test_sizes_below_one_raise(self) -> None:
        with pytest.raises(gen.InvalidDimension):
            qufinite.binder(0, 2)
        with pytest.raises(gen.InvalidDimension):
            qufinite.splitter_matrix(2, 0)

    def test_swap_of_equal_sizes_is_the_ordinary_swap(self) -> None:
        leaf = qufinite.swap(3, 3)

        assert leaf.generator == gen.Swap()
        assert leaf.d == 3

    def test_swap_of_different_sizes(self) -> None:
        leaf = qufinite.swap(2, 3)

        assert leaf.signature == ((2, 3), (3, 2))
        assert semantics.interpret(leaf).shape == (6, 6)

    def test_unit_on_size_one_is_the_scalar_one(self) -> None:
        matrix = semantics.interpret(qufinite.one_unit())

        assert np.array_equal(matrix, [[1]])

    def test_binder_needs_matching_wires(self) -> None:
        with pytest.raises(gen.SignatureMismatch):
            core.seq(qufinite.binder(2, 3), qufinite.identity(5))

    def test_mixed_diagram_has_no_single_dimension(self) -> None:
        diagram = core.seq(qufinite.splitter(2, 3), qufinite.swap(2, 3))

        assert core.dimension_of(diagram) is None
        assert diagram.signature == ((6,), (3, 2))


class TestRules:
    def test_catalog_holds_six_rules(self) -> None:
        catalog = qufinite.qufinite_catalog()

        assert [rule.name for rule in catalog] == [
            "binder_unitary_1",
            "binder_unitary_2",
            "binder_assoc",
            "binder_wspider",
            "binder_with1_right",
            "binder_with1_left",
        ]
        assert {rule.kind for rule in catalog} == {"qufinite"}

    def test_all_rules_hold(self) -> None:
        reports = qufinite.verify_qufinite()

        assert len(reports) == 6
        assert all(report.passed for report in reports), [
            report.message for report in reports if not report.passed
        ]
        assert all(report.dimension is None for report in reports)

    def test_grid_checks_every_combination(self) -> None:
        reports = qufinite.verify_qufinite(tol=TOL)

        assoc = next(r for r in reports if r.rule == "binder_assoc")
        assert len(assoc.sizes) == 27

    def test_grid_can_be_overridden(self) -> None:
        rule = rules.find_rule(
            "binder_unitary_1", qufinite.qufinite_catalog()
        )

        report = rules.verify(rule, None, grid={"s": [2], "t": [3]})

        assert report.passed
        assert report.trials == 1
        assert report.sizes == [{"s": 2, "t": 3}]

    def test_verify_all_runs_qufinite_rules_once(self) -> None:
        reports = rules.verify_all(
            (2, 3, 4), rules=qufinite.qufinite_catalog()
        )

        assert len(reports) == 6
        assert [r.kind for r in reports] == ["qufinite"] * 6
