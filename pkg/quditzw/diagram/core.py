# SPDX-FileCopyrightText: Copyright DB Netz AG and the qudit-zw contributors
# SPDX-License-Identifier: Apache-2.0

"""Immutable composition trees of generators.

A :class:`Diagram` is either a :class:`Leaf` holding one generator, a
:class:`Seq` stacking an upper diagram above a lower one, or a
:class:`Par` placing two diagrams side by side. Every node caches its
wire signature and composition is type-checked on construction.
"""
from __future__ import annotations

import collections.abc as cabc
import dataclasses
import functools
import logging
import typing as t

from . import generators as gen

LOGGER = logging.getLogger(__name__)


class Diagram:
    """Base class of the three tree node types."""

    dom: gen.WireSignature
    cod: gen.WireSignature

    @property
    def signature(self) -> tuple[gen.WireSignature, gen.WireSignature]:
        return self.dom, self.cod

    @property
    def children(self) -> tuple[Diagram, ...]:
        return ()

    def __rshift__(self, other: Diagram) -> Diagram:
        return seq(self, other)

    def __matmul__(self, other: Diagram) -> Diagram:
        return par(self, other)


@dataclasses.dataclass(frozen=True)
class Leaf(Diagram):
    """A single generator placed at a dimension.

    ``d`` is the dimension context of the generator. Generators that
    carry their own wire sizes are stored with ``d = 0``.
    """

    generator: gen.Generator
    d: int
    dom: gen.WireSignature
    cod: gen.WireSignature


@dataclasses.dataclass(frozen=True)
class Seq(Diagram):
    """``upper`` followed by ``lower`` (``upper`` drawn on top)."""

    upper: Diagram
    lower: Diagram
    dom: gen.WireSignature = dataclasses.field(
        init=False, repr=False, compare=False
    )
    cod: gen.WireSignature = dataclasses.field(
        init=False, repr=False, compare=False
    )

    def __post_init__(self) -> None:
        if self.upper.cod != self.lower.dom:
            raise gen.SignatureMismatch(self.upper.cod, self.lower.dom)
        object.__setattr__(self, "dom", self.upper.dom)
        object.__setattr__(self, "cod", self.lower.cod)

    @property
    def children(self) -> tuple[Diagram, ...]:
        return self.upper, self.lower


@dataclasses.dataclass(frozen=True)
class Par(Diagram):
    """``left`` placed beside ``right``."""

    left: Diagram
    right: Diagram
    dom: gen.WireSignature = dataclasses.field(
        init=False, repr=False, compare=False
    )
    cod: gen.WireSignature = dataclasses.field(
        init=False, repr=False, compare=False
    )

    def __post_init__(self) -> None:
        object.__setattr__(self, "dom", self.left.dom + self.right.dom)
        object.__setattr__(self, "cod", self.left.cod + self.right.cod)

    @property
    def children(self) -> tuple[Diagram, ...]:
        return self.left, self.right


EMPTY: t.Final = Leaf(gen.Empty(), 0, (), ())
"""The empty diagram ``0 -> 0``."""


def empty() -> Leaf:
    """Return the empty diagram, the unit of :func:`seq` and :func:`par`."""
    return EMPTY


def make_generator(kind: gen.Generator, d: int) -> Leaf:
    """Place a generator at dimension ``d``.

    Parameters
    ----------
    kind
        The generator variant, e.g. ``ZSpider(2, 3, phase)`` or ``W()``.
    d
        The qudit dimension of the wires. Ignored by generators with
        explicit wire sizes.

    Raises
    ------
    InvalidDimension
        If ``d`` is below the dimension the generator is defined for.
    InvalidPhase
        If a spider phase was built for a different dimension.
    """
    if isinstance(kind, gen.Empty):
        return EMPTY
    if gen.has_explicit_sizes(kind):
        dom, cod = kind.signature(d)
        return Leaf(kind, 0, dom, cod)

    if d < 1 or (kind.qudit_only and d < 2):
        minimum = 2 if kind.qudit_only else 1
        raise gen.InvalidDimension(
            f"Generator {kind.symbol!r} needs d >= {minimum}, got {d}"
        )
    if isinstance(kind, gen.ZSpider) and kind.phase.dimension != d:
        raise gen.InvalidPhase(
            f"Phase length {len(kind.phase.entries)} does not match "
            f"d - 1 = {d - 1}"
        )

    dom, cod = kind.signature(d)
    return Leaf(kind, d, dom, cod)


def seq(a: Diagram, b: Diagram, *more: Diagram) -> Diagram:
    """Compose diagrams sequentially, ``a`` on top.

    Raises
    ------
    SignatureMismatch
        If the codomain of one diagram is not the domain of the next.
    """
    return functools.reduce(Seq, more, Seq(a, b))


def par(a: Diagram, b: Diagram, *more: Diagram) -> Diagram:
    """Place diagrams side by side, ``a`` leftmost."""
    return functools.reduce(Par, more, Par(a, b))


def identities(n: int, d: int) -> Diagram:
    """Return ``n`` parallel identity wires of dimension ``d``."""
    if n == 0:
        return EMPTY
    wire = make_generator(gen.Identity(), d)
    result: Diagram = wire
    for _ in range(n - 1):
        result = Par(result, wire)
    return result


def power(diagram: Diagram, k: int) -> Diagram:
    """Return ``k`` sequential copies of an endomorphism."""
    if diagram.dom != diagram.cod:
        raise gen.SignatureMismatch(diagram.cod, diagram.dom)
    if k < 1:
        return identities(len(diagram.dom), _single_dim(diagram.dom))
    return functools.reduce(Seq, [diagram] * (k - 1), diagram)


def _single_dim(signature: gen.WireSignature) -> int:
    dims = set(signature)
    if len(dims) > 1:
        raise gen.InvalidDimension(
            f"Expected a single wire dimension, got {list(signature)}"
        )
    return dims.pop() if dims else 0


def leaves(diagram: Diagram) -> cabc.Iterator[Leaf]:
    """Yield all leaves from left to right, top to bottom."""
    if isinstance(diagram, Leaf):
        yield diagram
        return
    for child in diagram.children:
        yield from leaves(child)


def calculus_of(diagram: Diagram) -> frozenset[str]:
    """Return the calculi in which every generator of ``diagram`` lives."""
    calculi = frozenset({"zw", "zx", "qufinite"})
    for leaf in leaves(diagram):
        calculi &= leaf.generator.calculi
    return calculi


def dimension_of(diagram: Diagram) -> int | None:
    """Return the single qudit dimension of ``diagram``, if it has one.

    ``None`` is returned for diagrams with wires of several dimensions
    and for diagrams without any dimension context.
    """
    dims = set(diagram.dom + diagram.cod)
    for leaf in leaves(diagram):
        if gen.has_explicit_sizes(leaf.generator):
            return None
        if leaf.d:
            dims.add(leaf.d)
    if len(dims) != 1:
        return None
    return dims.pop()


_NormalForm = t.Union[Leaf, tuple[str, tuple[t.Any, ...]], None]


def _normal_form(diagram: Diagram) -> _NormalForm:
    if isinstance(diagram, Leaf):
        return None if isinstance(diagram.generator, gen.Empty) else diagram

    tag = "seq" if isinstance(diagram, Seq) else "par"
    parts: list[t.Any] = []
    for child in diagram.children:
        form = _normal_form(child)
        if form is None:
            continue
        if isinstance(form, tuple) and form[0] == tag:
            parts.extend(form[1])
        else:
            parts.append(form)

    if not parts:
        return None
    if len(parts) == 1:
        return parts[0]
    return (tag, tuple(parts))


def equal_structural(a: Diagram, b: Diagram) -> bool:
    """Compare two diagrams as trees.

    Associativity of both compositions is normalized and empty units are
    removed before comparing. Generators and their complex parameters
    are compared exactly, so semantically equal but differently built
    diagrams compare unequal.
    """
    return _normal_form(a) == _normal_form(b)
