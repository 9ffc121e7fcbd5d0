# SPDX-FileCopyrightText: Copyright DB Netz AG and the qudit-zw contributors
# SPDX-License-Identifier: Apache-2.0

"""Types shared by the rule catalogs and the verifier."""
from __future__ import annotations

import collections.abc as cabc
import dataclasses
import itertools
import typing as t

from ..diagram import core
from ..diagram import generators as gen

RuleKind = t.Literal["rule", "lemma", "qufinite"]
Assignment = cabc.Mapping[str, t.Any]
"""Values for the phase and size slots of a rule."""
Builder = cabc.Callable[[int, Assignment], tuple[core.Diagram, core.Diagram]]
"""Returns ``(lhs, rhs)`` for a dimension and a slot assignment."""


class TranscriptionError(gen.DiagramError):
    """The two sides of a rule do not have the same signature."""


@dataclasses.dataclass(frozen=True)
class RewriteRule:
    """A named equation between two parameterized diagrams.

    Lemmas and qufinite rules share this shape and differ in ``kind``
    only.
    """

    name: str
    builder: Builder = dataclasses.field(repr=False, compare=False)
    phases: tuple[str, ...] = ()
    """Names of the phase-vector slots, drawn at random when verifying."""
    sizes: tuple[tuple[str, tuple[int, ...]], ...] = ()
    """Integer slots with the grid of values they are verified at."""
    constraints: tuple[str, ...] = ()
    """Fixed parameters the rule is stated with, e.g. ``-1`` vectors."""
    source: str = ""
    kind: RuleKind = "rule"

    @property
    def is_deterministic(self) -> bool:
        """Whether the rule has no random slots."""
        return not self.phases

    def size_grid(
        self, grid: cabc.Mapping[str, cabc.Sequence[int]] | None = None
    ) -> list[dict[str, int]]:
        """Return all size assignments, optionally overriding the grid."""
        grid = grid or {}
        names = [name for name, _ in self.sizes]
        values = [grid.get(name, default) for name, default in self.sizes]
        return [
            dict(zip(names, combination))
            for combination in itertools.product(*values)
        ]

    def build(
        self, d: int, assignment: Assignment
    ) -> tuple[core.Diagram, core.Diagram]:
        """Return both sides, checking that their signatures agree.

        Raises
        ------
        TranscriptionError
            If the signatures of both sides differ.
        """
        lhs, rhs = self.builder(d, assignment)
        if lhs.signature != rhs.signature:
            raise TranscriptionError(
                f"{self.name}: lhs {_format(lhs.signature)} does not match "
                f"rhs {_format(rhs.signature)}"
            )
        return lhs, rhs


def _format(signature: tuple[gen.WireSignature, gen.WireSignature]) -> str:
    dom, cod = signature
    return f"{list(dom)} -> {list(cod)}"


def registrar(
    registry: list[RewriteRule], kind: RuleKind
) -> cabc.Callable[..., cabc.Callable[[Builder], Builder]]:
    """Return a decorator factory appending builders to ``registry``.

    Examples
    --------
    >>> RULES: list[RewriteRule] = []
    >>> rule = registrar(RULES, "rule")
    >>> @rule("S2", source="spiders")
    ... def _s2(d, _):
    ...     return spider(1, 1, d), identity(d)
    """

    def register(
        name: str,
        *,
        phases: cabc.Sequence[str] = (),
        sizes: cabc.Mapping[str, tuple[int, ...]] | None = None,
        constraints: cabc.Sequence[str] = (),
        source: str = "",
    ) -> cabc.Callable[[Builder], Builder]:
        def decorator(builder: Builder) -> Builder:
            registry.append(
                RewriteRule(
                    name,
                    builder,
                    tuple(phases),
                    tuple((sizes or {}).items()),
                    tuple(constraints),
                    source,
                    kind,
                )
            )
            return builder

        return decorator

    return register
