# SPDX-FileCopyrightText: Copyright DB Netz AG and the qudit-zw contributors
# SPDX-License-Identifier: Apache-2.0

"""Generator-wise translations between the ZX- and the ZW-calculus.

Both translations act on leaves only and commute with ``seq`` and
``par``. Z spiders and the generators both calculi share (identity,
swap, cap, cup and the empty diagram) map to themselves.
"""
from __future__ import annotations

import collections.abc as cabc
import dataclasses
import logging
import typing as t

from . import auditing, semantics
from .diagram import core, derived
from .diagram import generators as gen

LOGGER = logging.getLogger(__name__)

Direction = t.Literal["xw", "wx"]
LeafImage = cabc.Callable[[gen.Generator, int], core.Diagram]
"""Returns the image of a generator at a dimension."""

seq, par = core.seq, core.par


def _itself(g: gen.Generator, d: int) -> core.Diagram:
    return core.make_generator(g, d)


# ZX -> ZW


def _hadamard_zw(g: gen.Generator, d: int) -> core.Diagram:
    i = derived.identity(d)
    crossing = derived.braid_inv(d)
    if isinstance(g, gen.Hadamard):
        crossing = derived.braid(d)
    return seq(
        par(i, derived.spider(0, 1, d)),
        crossing,
        par(i, derived.spider(1, 0, d)),
    )


def _triangle_zw(g: gen.Generator, d: int) -> core.Diagram:
    phase = semantics.ones(d)
    if isinstance(g, gen.TriangleInv):
        phase = semantics.minus_ones(d)
    return seq(
        derived.w(d),
        par(derived.spider(1, 0, d, phase), derived.identity(d)),
    )


# ZW -> ZX


def _braid_phases(d: int, dagger: bool = False) -> core.Diagram:
    """Return the diagonal ``|a, b> -> xi**(a*b) |a, b>``."""
    hadamard = derived.hadamard_dagger(d) if dagger else derived.hadamard(d)
    i, copy = derived.identity(d), derived.spider(1, 2, d)
    pairing = seq(par(hadamard, i), derived.cup(d))
    return seq(par(copy, copy), par(i, pairing, i))


def _braid_zx(g: gen.Generator, d: int) -> core.Diagram:
    dagger = isinstance(g, gen.BraidInv)
    return seq(derived.swap(d), _braid_phases(d, dagger))


def _negation(d: int) -> core.Diagram:
    """Return ``|a> -> |-a mod d>``."""
    twice = seq(derived.hadamard(d), derived.hadamard(d))
    return par(derived.scalar(1 / d, d), twice)


def _controlled_subtraction(d: int) -> core.Diagram:
    """Return ``|a, b> -> |a, b - a mod d>``."""
    i = derived.identity(d)
    return seq(
        par(derived.spider(1, 2, d), i),
        par(i, _negation(d), i),
        par(i, derived.red_spider(2, 1, 0, d)),
    )


def _w_zx(_: gen.Generator, d: int) -> core.Diagram:
    triangle = core.make_generator(gen.Triangle(), d)
    return seq(
        derived.spider(1, 2, d),
        par(triangle, derived.identity(d)),
        _controlled_subtraction(d),
    )


_COMMON: dict[type[gen.Generator], LeafImage] = {
    gen.ZSpider: _itself,
    gen.Identity: _itself,
    gen.Swap: _itself,
    gen.Cap: _itself,
    gen.Cup: _itself,
    gen.Empty: _itself,
}


@dataclasses.dataclass(frozen=True)
class TranslationTable:
    """Images of the generators of one calculus in the other one."""

    direction: Direction
    mapping: cabc.Mapping[type[gen.Generator], LeafImage] = dataclasses.field(
        repr=False
    )

    @property
    def source(self) -> str:
        return "zx" if self.direction == "xw" else "zw"

    def image(self, leaf: core.Leaf) -> core.Diagram:
        """Return the image of a single leaf.

        Raises
        ------
        UnknownGenerator
            If the generator of ``leaf`` is not part of the source
            calculus.
        """
        builder = self.mapping.get(type(leaf.generator))
        if builder is None:
            raise gen.UnknownGenerator(
                f"Generator {leaf.generator.describe()!r} is not part of "
                f"the {self.source.upper()}-calculus"
            )

        image = builder(leaf.generator, leaf.d)
        LOGGER.debug(
            "Translated %s at d=%d", leaf.generator.describe(), leaf.d
        )
        return image

    def translate(self, diagram: core.Diagram) -> core.Diagram:
        """Translate ``diagram`` leaf by leaf."""
        if isinstance(diagram, core.Leaf):
            return self.image(diagram)
        elif isinstance(diagram, core.Seq):
            return seq(
                self.translate(diagram.upper), self.translate(diagram.lower)
            )
        elif isinstance(diagram, core.Par):
            return par(
                self.translate(diagram.left), self.translate(diagram.right)
            )
        raise TypeError(f"Not a diagram: {diagram!r}")


XW_TABLE: t.Final = TranslationTable(
    "xw",
    {
        **_COMMON,
        gen.Hadamard: _hadamard_zw,
        gen.HadamardDagger: _hadamard_zw,
        gen.Triangle: _triangle_zw,
        gen.TriangleInv: _triangle_zw,
    },
)
WX_TABLE: t.Final = TranslationTable(
    "wx",
    {
        **_COMMON,
        gen.W: _w_zx,
        gen.Braid: _braid_zx,
        gen.BraidInv: _braid_zx,
    },
)
TABLES: t.Final[dict[str, TranslationTable]] = {
    table.direction: table for table in (XW_TABLE, WX_TABLE)
}


def to_zw(diagram: core.Diagram) -> core.Diagram:
    """Translate a ZX diagram into the ZW-calculus.

    Raises
    ------
    UnknownGenerator
        If ``diagram`` holds a generator that is not part of the
        ZX-calculus.
    """
    return XW_TABLE.translate(diagram)


def to_zx(diagram: core.Diagram) -> core.Diagram:
    """Translate a ZW diagram into the ZX-calculus.

    Raises
    ------
    UnknownGenerator
        If ``diagram`` holds a generator that is not part of the
        ZW-calculus, including the dimension-binder and -splitter.
    """
    return WX_TABLE.translate(diagram)


def translate(diagram: core.Diagram, direction: Direction) -> core.Diagram:
    try:
        table = TABLES[direction]
    except KeyError:
        raise ValueError(f"Unknown direction: {direction!r}") from None
    return table.translate(diagram)


def check_preservation(
    diagram: core.Diagram,
    direction: Direction,
    tol: float = semantics.DEFAULT_TOLERANCE,
    entry_cap: int = semantics.DEFAULT_ENTRY_CAP,
) -> auditing.VerificationReport:
    """Check that translating ``diagram`` keeps its interpretation."""
    translated = translate(diagram, direction)
    comparison = semantics.approx_equal(
        semantics.interpret(translated, entry_cap),
        semantics.interpret(diagram, entry_cap),
        tol,
    )
    return auditing.VerificationReport(
        rule=f"translate-{direction}",
        dimension=core.dimension_of(diagram),
        trials=1,
        seed=0,
        passed=comparison.equal,
        deviation=comparison.deviation,
        tolerance=tol,
        message=comparison.reason,
        kind="translation",
    )


@dataclasses.dataclass(frozen=True)
class RoundTrip:
    """Outcome of translating a ZX diagram to ZW and back."""

    result: core.Diagram = dataclasses.field(repr=False)
    semantic: semantics.Comparison
    structural: bool
    """Whether the result is the original tree. Only expected for Z
    spiders and the common generators."""

    @property
    def semantic_pass(self) -> bool:
        return self.semantic.equal


def round_trip_zx(
    diagram: core.Diagram,
    tol: float = semantics.DEFAULT_TOLERANCE,
    entry_cap: int = semantics.DEFAULT_ENTRY_CAP,
) -> RoundTrip:
    """Translate a ZX diagram to ZW and back and compare with the original."""
    result = to_zx(to_zw(diagram))
    comparison = semantics.approx_equal(
        semantics.interpret(result, entry_cap),
        semantics.interpret(diagram, entry_cap),
        tol,
    )
    return RoundTrip(
        result, comparison, core.equal_structural(result, diagram)
    )
