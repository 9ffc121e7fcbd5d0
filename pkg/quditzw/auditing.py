# SPDX-FileCopyrightText: Copyright DB Netz AG and the qudit-zw contributors
# SPDX-License-Identifier: Apache-2.0

"""Functionality for reporting on verification runs."""
from __future__ import annotations

import collections
import collections.abc as cabc
import dataclasses
import logging
import math
import sys
import typing as t
from importlib import metadata as imm

import numpy as np
import numpy.typing as npt

from . import __version__
from .diagram import generators as gen

LOGGER = logging.getLogger(__name__)
DEPENDENCIES = ("numpy", "click", "pyYaml")


@dataclasses.dataclass
class VerificationReport:
    """Outcome of verifying one rule at one dimension."""

    rule: str
    dimension: int | None
    """``None`` for qufinite rules, which carry their own wire sizes."""
    trials: int
    seed: int
    passed: bool
    deviation: float
    """Worst entry-wise deviation over all trials and size assignments."""
    tolerance: float
    failing: dict[str, t.Any] | None = None
    """The first assignment whose deviation exceeded the tolerance."""
    sizes: list[dict[str, int]] = dataclasses.field(default_factory=list)
    """All size assignments the rule was checked at."""
    message: str | None = None
    kind: str = "rule"


def dump(reports: cabc.Iterable[VerificationReport]) -> list[dict[str, t.Any]]:
    """Convert reports into something safely writable as YAML or JSON."""
    return [_convert_report(report) for report in reports]


def _convert_report(report: VerificationReport) -> dict[str, t.Any]:
    converted = dataclasses.asdict(report)
    if report.failing is not None:
        converted["failing"] = convert_assignment(report.failing)
    if math.isinf(report.deviation):
        converted["deviation"] = None
    return converted


def convert_assignment(
    assignment: cabc.Mapping[str, t.Any]
) -> dict[str, t.Any]:
    """Replace phase vectors by lists of ``[re, im]`` pairs."""
    return {name: _convert_obj(value) for name, value in assignment.items()}


def _convert_obj(obj: t.Any) -> t.Any:
    if isinstance(obj, gen.PhaseVector):
        return [[entry.real, entry.imag] for entry in obj.entries]
    elif isinstance(obj, list) and all(isinstance(o, list) for o in obj):
        return [[float(part) for part in pair] for pair in obj]
    elif isinstance(obj, (complex, np.complexfloating)):
        return [float(obj.real), float(obj.imag)]
    return obj


def format_matrix(matrix: npt.ArrayLike) -> str:
    """Serialize a matrix as text.

    The first line holds the shape, every following line one row of
    ``re,im`` pairs separated by ``;``. Floats are written with
    :func:`repr` so that parsing the text reproduces every bit.

    Examples
    --------
    >>> print(format_matrix([[1, 0], [0, 1j]]))
    shape 2 2
    1.0,0.0;0.0,0.0
    0.0,0.0;0.0,1.0
    """
    array = np.asarray(matrix, dtype=np.complex128)
    if array.ndim != 2:
        raise ValueError(f"Expected a 2-dimensional matrix, got {array.ndim}")

    lines = [f"shape {array.shape[0]} {array.shape[1]}"]
    for row in array:
        lines.append(
            ";".join(
                f"{float(entry.real)!r},{float(entry.imag)!r}"
                for entry in row
            )
        )
    return "\n".join(lines)


def formulate_statement(report: VerificationReport) -> str:
    """Return a one-line statement about the given report."""
    dimension = "-" if report.dimension is None else str(report.dimension)
    verdict = "PASS" if report.passed else "FAIL"
    if math.isinf(report.deviation):
        deviation = "inf"
    else:
        deviation = f"{report.deviation:.3e}"
    return (
        f"{report.rule} d={dimension} trials={report.trials} "
        f"deviation={deviation} {verdict}"
    )


class VerificationReporter:
    """Stores and reports on verification results."""

    store: list[VerificationReport]
    """All reports in the order they were stored."""
    kinds: dict[str, int]
    """Maps the kind of a rule to the number of verified cells."""

    def __init__(self) -> None:
        self.store = list[VerificationReport]()
        self.kinds: dict[str, int] = collections.defaultdict(lambda: 0)

    def store_reports(
        self, reports: cabc.Iterable[VerificationReport]
    ) -> None:
        for report in reports:
            self.kinds[report.kind] += 1
            self.store.append(report)

    @property
    def failures(self) -> list[VerificationReport]:
        return [report for report in self.store if not report.passed]

    def get_report(self) -> str:
        """Return one line per stored report."""
        return "\n".join(formulate_statement(r) for r in self.store)

    def create_summary(self, seed: int | None = None) -> str:
        """Return a summary of all stored reports.

        Parameters
        ----------
        seed
            The seed of the run, included in the header if given.

        Returns
        -------
        summary
        """
        passed = len(self.store) - len(self.failures)
        header = f"Verified {len(self.store)} cells"
        if seed is not None:
            header += f" with seed {seed}"
        counts = ", ".join(
            f"{count} {kind}" for kind, count in sorted(self.kinds.items())
        )
        lines = [
            f"{header}: {passed} passed, {len(self.failures)} failed",
        ]
        if counts:
            lines.append(f"Cells per kind: {counts}")
        for report in self.failures:
            lines.append(f"- {formulate_statement(report)}")
            if report.message:
                lines.append(f"  {report.message}")

        dependencies = "\n".join(
            (
                "This was done using:",
                f"- qudit-zw v{__version__}",
                *[f"- {dep}" for dep in get_dependencies()],
            )
        )
        return "\n".join(lines) + "\n\n" + dependencies


def get_dependencies() -> list[str]:
    """Return all major dependencies with their current version."""
    py_version = sys.version.split(" ", maxsplit=1)[0]
    dependencies = [f"{dep} v{imm.version(dep)}" for dep in DEPENDENCIES]
    dependencies.insert(0, f"Python {py_version}")
    return dependencies
