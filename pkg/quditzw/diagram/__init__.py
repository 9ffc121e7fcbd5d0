# SPDX-FileCopyrightText: Copyright DB Netz AG and the qudit-zw contributors
# SPDX-License-Identifier: Apache-2.0

"""Term representation of ZW, ZX and qufinite diagrams.

Diagrams are built from the generators in
:py:mod:`~quditzw.diagram.generators` with :py:func:`seq` and
:py:func:`par`. Composites defined in terms of the generators, e.g. the
black spiders or the X spider, live in
:py:mod:`~quditzw.diagram.derived`.
"""
from __future__ import annotations

from .core import (
    EMPTY,
    Diagram,
    Leaf,
    Par,
    Seq,
    calculus_of,
    dimension_of,
    empty,
    equal_structural,
    identities,
    leaves,
    make_generator,
    par,
    power,
    seq,
)
from .generators import (
    DiagramError,
    InvalidDimension,
    InvalidPhase,
    PhaseVector,
    SignatureMismatch,
    UnknownGenerator,
    WireSignature,
)
