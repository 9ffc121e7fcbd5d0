# SPDX-FileCopyrightText: Copyright DB Netz AG and the qudit-zw contributors
# SPDX-License-Identifier: Apache-2.0

"""The ZW rule catalogs and their numerical soundness verifier.

:py:func:`~quditzw.rules.catalog` holds the rewrite rules of the
calculus and :py:func:`~quditzw.rules.lemma_catalog` the lemmas derived
from them. :py:func:`~quditzw.rules.verify` instantiates both sides of a
rule with random phase vectors, interprets them and reports the worst
entry-wise deviation as an :class:`~quditzw.auditing.VerificationReport`.
"""
from __future__ import annotations

__all__ = [
    "RewriteRule",
    "TranscriptionError",
    "UnknownRule",
    "all_rules",
    "bialgebra_counterexample",
    "catalog",
    "find_rule",
    "lemma_catalog",
    "random_phase",
    "verify",
    "verify_all",
]

import collections.abc as cabc
import concurrent.futures
import logging
import math
import typing as t
import zlib

import numpy as np

from .. import auditing, semantics
from ..diagram import core, derived
from ..diagram import generators as gen
from . import lemmas, zwrules
from .ruletypes import RewriteRule, TranscriptionError

LOGGER = logging.getLogger(__name__)
DEFAULT_DIMS = (2, 3, 4, 5)
DEFAULT_TRIALS = 20
DEFAULT_SEED = 42
DEFAULT_MODULUS = (0.5, 1.5)


class UnknownRule(Exception):
    """No rule or lemma with the requested name exists."""


def catalog() -> list[RewriteRule]:
    """Return the rewrite rules of the calculus in catalog order."""
    return list(zwrules.CATALOG)


def lemma_catalog() -> list[RewriteRule]:
    """Return the lemmas derived from the rules."""
    return list(lemmas.LEMMAS)


def all_rules() -> list[RewriteRule]:
    return catalog() + lemma_catalog()


def find_rule(
    name: str, rules: cabc.Iterable[RewriteRule] | None = None
) -> RewriteRule:
    """Return the rule or lemma called ``name``.

    Raises
    ------
    UnknownRule
        If no rule of that name exists.
    """
    for rule in all_rules() if rules is None else rules:
        if rule.name == name:
            return rule
    raise UnknownRule(f"No rule named {name!r}")


def random_phase(
    rng: np.random.Generator,
    d: int,
    modulus: tuple[float, float] = DEFAULT_MODULUS,
) -> gen.PhaseVector:
    """Draw a phase vector with entries of random modulus and angle.

    The moduli are uniform in ``modulus`` and the angles uniform in
    ``[0, 2 pi)``.
    """
    low, high = modulus
    moduli = rng.uniform(low, high, d - 1)
    angles = rng.uniform(0, 2 * np.pi, d - 1)
    return gen.PhaseVector(tuple(moduli * np.exp(1j * angles)), d)


def _rng(seed: int, d: int | None, name: str) -> np.random.Generator:
    entropy = [seed, d or 0, zlib.crc32(name.encode("utf-8"))]
    return np.random.default_rng(np.random.SeedSequence(entropy))


def verify(
    rule: RewriteRule,
    d: int | None,
    trials: int = DEFAULT_TRIALS,
    tol: float = semantics.DEFAULT_TOLERANCE,
    seed: int = DEFAULT_SEED,
    *,
    grid: cabc.Mapping[str, cabc.Sequence[int]] | None = None,
    modulus: tuple[float, float] = DEFAULT_MODULUS,
    entry_cap: int = semantics.DEFAULT_ENTRY_CAP,
) -> auditing.VerificationReport:
    """Check numerically that both sides of ``rule`` interpret equally.

    Parameters
    ----------
    rule
        The rule, lemma or qufinite rule to verify.
    d
        The qudit dimension, at least 2. Qufinite rules carry their
        wire sizes in their size slots and are verified with ``None``.
    trials
        Number of random phase assignments per size assignment. Rules
        without phase slots are evaluated once.
    tol
        Absolute entry-wise tolerance.
    seed
        Seed of the run. Together with ``d`` and the rule name it
        determines the random stream of this cell.
    grid
        Overrides the values the size slots are checked at.
    modulus
        Range of the moduli of random phase entries.
    entry_cap
        Passed on to :func:`~quditzw.semantics.interpret`.

    Returns
    -------
    report
        The worst deviation over all trials. Errors while building or
        interpreting a side end the check with an infinite deviation
        and the error in ``message``.
    """
    if d is not None and d < 2:
        raise gen.InvalidDimension(f"Expected d >= 2, got {d}")
    if trials < 1:
        raise ValueError(f"Expected at least one trial, got {trials}")
    if seed < 0:
        raise ValueError(f"Expected a non-negative seed, got {seed}")
    if d is None and rule.phases:
        raise ValueError(f"Rule {rule.name} needs a dimension for its phases")

    rng = _rng(seed, d, rule.name)
    runs = 1 if rule.is_deterministic else trials
    sizes = rule.size_grid(grid)
    worst = 0.0
    failing: dict[str, t.Any] | None = None
    message: str | None = None
    for size_assignment in sizes:
        for _ in range(runs):
            assignment: dict[str, t.Any] = dict(size_assignment)
            for slot in rule.phases:
                assignment[slot] = random_phase(rng, d, modulus)

            try:
                lhs, rhs = rule.build(d or 0, assignment)
                comparison = semantics.approx_equal(
                    semantics.interpret(lhs, entry_cap),
                    semantics.interpret(rhs, entry_cap),
                    tol,
                )
            except (gen.DiagramError, semantics.EntryCapExceeded) as error:
                return auditing.VerificationReport(
                    rule.name,
                    d,
                    runs,
                    seed,
                    False,
                    math.inf,
                    tol,
                    auditing.convert_assignment(assignment),
                    sizes,
                    f"{type(error).__name__}: {error}",
                    rule.kind,
                )

            worst = max(worst, comparison.deviation)
            if not comparison and failing is None:
                failing = auditing.convert_assignment(assignment)
                message = comparison.reason

    return auditing.VerificationReport(
        rule.name,
        d,
        runs,
        seed,
        worst <= tol,
        worst,
        tol,
        failing,
        sizes,
        message,
        rule.kind,
    )


def verify_all(
    dims: cabc.Sequence[int] = DEFAULT_DIMS,
    trials: int = DEFAULT_TRIALS,
    tol: float = semantics.DEFAULT_TOLERANCE,
    seed: int = DEFAULT_SEED,
    rules: cabc.Sequence[RewriteRule] | None = None,
    *,
    workers: int = 1,
    gather_logs: bool = False,
    grid: cabc.Mapping[str, cabc.Sequence[int]] | None = None,
    modulus: tuple[float, float] = DEFAULT_MODULUS,
    entry_cap: int = semantics.DEFAULT_ENTRY_CAP,
) -> list[auditing.VerificationReport]:
    """Verify every rule at every dimension.

    Parameters
    ----------
    dims
        The dimensions to verify at. Qufinite rules are verified once
        if ``dims`` is not empty.
    trials, tol, seed
        See :func:`verify`.
    rules
        The rules to verify, defaults to all rules and lemmas.
    workers
        Number of threads the rule/dimension cells are spread over.
    gather_logs
        If ``True`` failures are only recorded in the ``message`` of
        the returned reports instead of also being logged.
    grid, modulus, entry_cap
        See :func:`verify`.

    Returns
    -------
    reports
        One report per cell, ordered by rule and then dimension. A
        failing cell never stops the run.
    """
    if rules is None:
        rules = all_rules()

    cells: list[tuple[RewriteRule, int | None]] = []
    for rule in rules:
        if rule.kind == "qufinite":
            if dims:
                cells.append((rule, None))
        else:
            cells.extend((rule, d) for d in dims)

    def run(
        cell: tuple[RewriteRule, int | None]
    ) -> auditing.VerificationReport:
        rule, d = cell
        report = verify(
            rule,
            d,
            trials,
            tol,
            seed,
            grid=grid,
            modulus=modulus,
            entry_cap=entry_cap,
        )
        LOGGER.info("%s", auditing.formulate_statement(report))
        if not report.passed and not gather_logs:
            LOGGER.warning(
                "Rule %s failed at d=%s: %s", rule.name, d, report.message
            )
        return report

    if workers > 1:
        with concurrent.futures.ThreadPoolExecutor(workers) as executor:
            return list(executor.map(run, cells))
    return [run(cell) for cell in cells]


def _bialgebra_sides(d: int) -> tuple[core.Diagram, core.Diagram]:
    i, w, down = derived.identity(d), derived.w(d), derived.down_w(d)
    lhs = core.seq(down, w)
    rhs = core.seq(
        core.par(w, w),
        core.par(i, derived.braid(d), i),
        core.par(down, down),
    )
    return lhs, rhs


def bialgebra_counterexample(d: int) -> float:
    """Return the deviation between both sides of the W-W bialgebra law.

    A downward W node followed by a W node is compared against two W
    nodes, a braid on the middle wires and two downward W nodes. The
    equation holds for qubits and fails for every ``d > 2``.
    """
    if d < 2:
        raise gen.InvalidDimension(f"Expected d >= 2, got {d}")
    lhs, rhs = _bialgebra_sides(d)
    comparison = semantics.approx_equal(
        semantics.interpret(lhs), semantics.interpret(rhs)
    )
    return comparison.deviation
