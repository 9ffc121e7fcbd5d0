# SPDX-FileCopyrightText: Copyright DB Netz AG and the qudit-zw contributors
# SPDX-License-Identifier: Apache-2.0

"""Composite diagrams defined in terms of the generators.

Besides shorthands for single generators this module provides the
derived nodes of both calculi: the downward W node and the black dots
of the ZW-calculus, black spiders with any number of legs, and the X
spider and red tau node of the ZX-calculus. Every derived node is a
plain :class:`~quditzw.diagram.core.Diagram` built from generators.
"""
from __future__ import annotations

import logging
import typing as t

from .. import semantics
from . import core
from . import generators as gen

LOGGER = logging.getLogger(__name__)

DerivedKind = t.Literal[
    "down_w", "black_dot", "black_codot", "white_nophase", "down_white_unit"
]
Orientation = t.Literal["up", "down"]


def identity(d: int) -> core.Leaf:
    return core.make_generator(gen.Identity(), d)


def swap(d: int) -> core.Leaf:
    return core.make_generator(gen.Swap(), d)


def cap(d: int) -> core.Leaf:
    return core.make_generator(gen.Cap(), d)


def cup(d: int) -> core.Leaf:
    return core.make_generator(gen.Cup(), d)


def w(d: int) -> core.Leaf:
    return core.make_generator(gen.W(), d)


def braid(d: int) -> core.Leaf:
    return core.make_generator(gen.Braid(), d)


def braid_inv(d: int) -> core.Leaf:
    return core.make_generator(gen.BraidInv(), d)


def hadamard(d: int) -> core.Leaf:
    return core.make_generator(gen.Hadamard(), d)


def hadamard_dagger(d: int) -> core.Leaf:
    return core.make_generator(gen.HadamardDagger(), d)


def spider(
    n_in: int, m_out: int, d: int, phase: gen.PhaseVector | None = None
) -> core.Leaf:
    """Return a Z spider, phase-free unless ``phase`` is given."""
    if phase is None:
        phase = semantics.ones(d)
    return core.make_generator(gen.ZSpider(n_in, m_out, phase), d)


def tensor_power(diagram: core.Diagram, n: int) -> core.Diagram:
    """Return ``n`` copies of ``diagram`` side by side."""
    result: core.Diagram = core.EMPTY
    for _ in range(n):
        result = diagram if result is core.EMPTY else result @ diagram
    return result


def caps(n: int, d: int) -> core.Diagram:
    """Return ``n`` nested caps, ``0 -> 2n``."""
    result: core.Diagram = core.EMPTY
    for k in range(1, n + 1):
        ids = core.identities(k - 1, d)
        result = core.seq(result, core.par(ids, cap(d), ids))
    return result


def cups(n: int, d: int) -> core.Diagram:
    """Return ``n`` nested cups, ``2n -> 0``."""
    result: core.Diagram = core.EMPTY
    for k in range(1, n + 1):
        ids = core.identities(k - 1, d)
        result = core.seq(core.par(ids, cup(d), ids), result)
    return result


def rotate(diagram: core.Diagram, d: int) -> core.Diagram:
    """Turn an ``n -> m`` diagram upside down into an ``m -> n`` one.

    The inputs are bent up with caps and the outputs bent down with
    cups. For the interpretation this reverses the wire order on both
    sides and transposes the matrix.

    The inputs are bent first, so that ``diagram`` never sits next to
    the ``m`` new input wires. No node of the result has more than
    ``max(3n + m, n + 3m, 2n + 2m)`` legs.
    """
    n = len(diagram.dom)
    m = len(diagram.cod)
    state = core.seq(caps(n, d), core.par(core.identities(n, d), diagram))
    return core.seq(
        core.par(state, core.identities(m, d)),
        core.par(core.identities(n, d), cups(m, d)),
    )


def down_w(d: int) -> core.Diagram:
    """Return the W node turned upside down, ``2 -> 1``."""
    return rotate(w(d), d)


def black_codot(d: int) -> core.Diagram:
    """Return the black co-unit, interpreting to ``<0|``."""
    return core.seq(w(d), cup(d))


def black_dot(d: int) -> core.Diagram:
    """Return the black unit, interpreting to ``|0>``."""
    return core.seq(cap(d), down_w(d))


def derived_zw(kind: DerivedKind, d: int) -> core.Diagram:
    """Return one of the defined ZW diagrams at dimension ``d``.

    Parameters
    ----------
    kind
        ``down_w``, ``black_dot``, ``black_codot``, ``white_nophase``
        (the ``1 -> 1`` white spider with phase ``(1, ..., 1)``) or
        ``down_white_unit`` (the phase-free white spider ``0 -> 1``).
    d
        The qudit dimension, at least 2.
    """
    if d < 2:
        raise gen.InvalidDimension(f"Expected d >= 2, got {d}")
    if kind == "down_w":
        return down_w(d)
    elif kind == "black_dot":
        return black_dot(d)
    elif kind == "black_codot":
        return black_codot(d)
    elif kind == "white_nophase":
        return spider(1, 1, d)
    elif kind == "down_white_unit":
        return spider(0, 1, d)
    raise ValueError(f"Unknown derived diagram: {kind!r}")


def black_spider(
    m: int, d: int, orientation: Orientation = "up"
) -> core.Diagram:
    """Return the black spider with one input and ``m`` outputs.

    The spider is a left-associated tree of W nodes, so that ``m = 2``
    gives the W node itself and ``m = 1`` the identity. ``m = 0`` gives
    the black co-unit. With ``orientation="down"`` the spider has ``m``
    inputs and one output and is built from downward W nodes.
    """
    if m < 0:
        raise gen.DiagramError(f"Leg count must be >= 0, got {m}")
    if orientation not in ("up", "down"):
        raise ValueError(f"Unknown orientation: {orientation!r}")

    if m == 0:
        return black_codot(d) if orientation == "up" else black_dot(d)
    if m == 1:
        return identity(d)

    if orientation == "up":
        result: core.Diagram = w(d)
        for legs in range(3, m + 1):
            step = core.par(w(d), core.identities(legs - 2, d))
            result = core.seq(result, step)
    else:
        result = down_w(d)
        for _ in range(3, m + 1):
            result = core.seq(core.par(result, identity(d)), down_w(d))
    return result


def scalar(value: complex, d: int) -> core.Leaf:
    """Return a ``0 -> 0`` spider interpreting to ``value``."""
    if d < 2:
        raise gen.InvalidDimension(f"Expected d >= 2, got {d}")
    phase = gen.PhaseVector((0,) * (d - 2) + (value - 1,), d)
    return spider(0, 0, d, phase)


def red_spider(n: int, m: int, j: int, d: int) -> core.Diagram:
    """Return the X spider with ``n`` inputs, ``m`` outputs and index ``j``.

    A Z spider with phase ``exp(i K_j)`` is conjugated by Hadamard nodes
    and scaled by ``1/d``, the latter realized as the spider with phase
    ``s``. The result agrees with
    :func:`~quditzw.semantics.x_spider_formula`.
    """
    if not 0 <= j < d:
        raise ValueError(f"Expected 0 <= j < {d}, got {j}")
    body = core.seq(
        tensor_power(hadamard_dagger(d), n),
        spider(n, m, d, semantics.k_phases(j, d)),
        tensor_power(hadamard(d), m),
    )
    return core.par(spider(0, 0, d, semantics.s_vector(d)), body)


def red_tau(d: int) -> core.Diagram:
    """Return the red tau node, agreeing with ``red_tau_formula``."""
    body = core.seq(
        hadamard_dagger(d),
        spider(1, 1, d, semantics.tau_phases(d)),
        hadamard(d),
    )
    return core.par(spider(0, 0, d, semantics.s_vector(d)), body)
