# SPDX-FileCopyrightText: Copyright DB Netz AG and the qudit-zw contributors
# SPDX-License-Identifier: Apache-2.0

"""Generator variants, phase vectors and the errors of diagram building.

Every generator carries a fixed arity. Generators that are defined on a
single qudit dimension ``d`` derive their wire signature from it, while
the qufinite generators (and the mixed-dimension swap) carry their own
wire sizes.
"""
from __future__ import annotations

import collections.abc as cabc
import dataclasses
import typing as t

import typing_extensions as te

WireSignature = tuple[int, ...]
"""Ordered per-wire dimensions of one side of a diagram."""

Calculus = t.Literal["zw", "zx", "qufinite"]
"""Names of the calculi a generator may belong to."""

ZW: te.Final = frozenset({"zw", "qufinite"})
ZX: te.Final = frozenset({"zx"})
COMMON: te.Final = ZW | ZX
MAX_SPIDER_LEGS: te.Final = 64
"""Upper bound on the legs of a single spider."""


class DiagramError(Exception):
    """Base class for errors raised while building diagrams."""


class InvalidPhase(DiagramError):
    """A phase vector does not fit the dimension it is used at."""


class InvalidDimension(DiagramError):
    """A generator was requested at a dimension it is not defined for."""


class UnknownGenerator(DiagramError):
    """A generator is not part of the requested calculus."""


class SignatureMismatch(DiagramError):
    """The boundaries of two diagrams do not agree for composition."""

    def __init__(self, upper: WireSignature, lower: WireSignature) -> None:
        self.upper = upper
        self.lower = lower
        super().__init__(
            f"Codomain {list(upper)} of the upper diagram does not match "
            f"domain {list(lower)} of the lower diagram"
        )


@dataclasses.dataclass(frozen=True)
class PhaseVector:
    """The parameter ``(a_1, ..., a_{d-1})`` of a Z spider.

    The coefficient ``a_0`` is fixed to one and never stored. Entry-wise
    product and sum implement the parameter algebra used by spider
    fusion and by the addition rule.
    """

    entries: tuple[complex, ...]
    dimension: int

    def __post_init__(self) -> None:
        if self.dimension < 1:
            raise InvalidDimension(
                f"Phase vectors need a dimension >= 1, got {self.dimension}"
            )
        entries = tuple(complex(entry) for entry in self.entries)
        object.__setattr__(self, "entries", entries)
        if len(entries) != self.dimension - 1:
            raise InvalidPhase(
                f"Phase length {len(entries)} does not match "
                f"d - 1 = {self.dimension - 1}"
            )

    @classmethod
    def constant(cls, value: complex, d: int) -> PhaseVector:
        """Return the vector with all ``d - 1`` entries set to ``value``."""
        return cls((value,) * (d - 1), d)

    @property
    def coefficients(self) -> tuple[complex, ...]:
        """All ``d`` coefficients including the implicit ``a_0 = 1``."""
        return (1 + 0j, *self.entries)

    def is_ones(self) -> bool:
        return all(entry == 1 for entry in self.entries)

    def conjugate(self) -> PhaseVector:
        return PhaseVector(
            tuple(entry.conjugate() for entry in self.entries),
            self.dimension,
        )

    def _zip(
        self, other: PhaseVector
    ) -> cabc.Iterator[tuple[complex, complex]]:
        if other.dimension != self.dimension:
            raise InvalidPhase(
                f"Cannot combine phases of dimension {self.dimension} and "
                f"{other.dimension}"
            )
        return zip(self.entries, other.entries)

    def __mul__(self, other: PhaseVector) -> PhaseVector:
        return PhaseVector(
            tuple(a * b for a, b in self._zip(other)), self.dimension
        )

    def __add__(self, other: PhaseVector) -> PhaseVector:
        return PhaseVector(
            tuple(a + b for a, b in self._zip(other)), self.dimension
        )


@dataclasses.dataclass(frozen=True)
class Generator:
    """Base class of all generator variants."""

    symbol: t.ClassVar[str]
    """Atom name in the text format."""
    calculi: t.ClassVar[frozenset[str]]
    """The calculi this generator belongs to."""
    arity: t.ClassVar[tuple[int, int]] = (1, 1)
    qudit_only: t.ClassVar[bool] = False
    """If ``True`` the generator is only defined for ``d >= 2``."""

    def signature(self, d: int) -> tuple[WireSignature, WireSignature]:
        """Return ``(dom, cod)`` of the generator at dimension ``d``."""
        n_in, m_out = self.arity
        return (d,) * n_in, (d,) * m_out

    def describe(self) -> str:
        return self.symbol


@dataclasses.dataclass(frozen=True)
class ZSpider(Generator):
    """White spider of the ZW-calculus, green spider of the ZX-calculus."""

    symbol = "z"
    calculi = COMMON

    n_in: int
    m_out: int
    phase: PhaseVector

    def __post_init__(self) -> None:
        if self.n_in < 0 or self.m_out < 0:
            raise DiagramError(
                f"Spider legs must be non-negative, got {self.n_in} -> "
                f"{self.m_out}"
            )
        if self.n_in + self.m_out > MAX_SPIDER_LEGS:
            raise DiagramError(
                f"Spider has {self.n_in + self.m_out} legs, at most "
                f"{MAX_SPIDER_LEGS} are supported"
            )

    def signature(self, d: int) -> tuple[WireSignature, WireSignature]:
        return (d,) * self.n_in, (d,) * self.m_out

    def describe(self) -> str:
        return f"z {self.n_in} {self.m_out}"


@dataclasses.dataclass(frozen=True)
class W(Generator):
    symbol = "w"
    calculi = ZW
    arity = (1, 2)
    qudit_only = True


@dataclasses.dataclass(frozen=True)
class Braid(Generator):
    symbol = "tau"
    calculi = ZW
    arity = (2, 2)
    qudit_only = True


@dataclasses.dataclass(frozen=True)
class BraidInv(Generator):
    symbol = "taui"
    calculi = ZW
    arity = (2, 2)
    qudit_only = True


@dataclasses.dataclass(frozen=True)
class Identity(Generator):
    symbol = "id"
    calculi = COMMON


@dataclasses.dataclass(frozen=True)
class Swap(Generator):
    """Symmetry of two wires.

    Without ``dims`` both wires carry the dimension of the context. With
    ``dims=(s, t)`` the swap maps wires of dimensions ``s, t`` to
    ``t, s``.
    """

    symbol = "swap"
    calculi = COMMON
    arity = (2, 2)

    dims: tuple[int, int] | None = None

    def signature(self, d: int) -> tuple[WireSignature, WireSignature]:
        if self.dims is None:
            return super().signature(d)
        s, t_ = self.dims
        return (s, t_), (t_, s)


@dataclasses.dataclass(frozen=True)
class Cap(Generator):
    symbol = "cap"
    calculi = COMMON
    arity = (0, 2)


@dataclasses.dataclass(frozen=True)
class Cup(Generator):
    symbol = "cup"
    calculi = COMMON
    arity = (2, 0)


@dataclasses.dataclass(frozen=True)
class Hadamard(Generator):
    symbol = "h"
    calculi = ZX
    qudit_only = True


@dataclasses.dataclass(frozen=True)
class HadamardDagger(Generator):
    symbol = "hdag"
    calculi = ZX
    qudit_only = True


@dataclasses.dataclass(frozen=True)
class Triangle(Generator):
    symbol = "tri"
    calculi = ZX
    qudit_only = True


@dataclasses.dataclass(frozen=True)
class TriangleInv(Generator):
    symbol = "trii"
    calculi = ZX
    qudit_only = True


@dataclasses.dataclass(frozen=True)
class _Resize(Generator):
    calculi = frozenset({"qufinite"})

    s: int
    t: int

    def __post_init__(self) -> None:
        if self.s < 1 or self.t < 1:
            raise InvalidDimension(
                f"Wire sizes must be >= 1, got s={self.s}, t={self.t}"
            )

    def describe(self) -> str:
        return f"{self.symbol} {self.s} {self.t}"


@dataclasses.dataclass(frozen=True)
class Binder(_Resize):
    """Dimension-binder: two wires of sizes ``s, t`` to one of ``s*t``."""

    symbol = "bind"
    arity = (2, 1)

    def signature(self, d: int) -> tuple[WireSignature, WireSignature]:
        return (self.s, self.t), (self.s * self.t,)


@dataclasses.dataclass(frozen=True)
class Splitter(_Resize):
    """Dimension-splitter: one wire of size ``s*t`` to two of ``s, t``."""

    symbol = "split"
    arity = (1, 2)

    def signature(self, d: int) -> tuple[WireSignature, WireSignature]:
        return (self.s * self.t,), (self.s, self.t)


@dataclasses.dataclass(frozen=True)
class Empty(Generator):
    """The empty diagram, unit of both compositions."""

    symbol = "empty"
    calculi = COMMON
    arity = (0, 0)


SIMPLE_GENERATORS: te.Final[dict[str, type[Generator]]] = {
    cls.symbol: cls
    for cls in (
        W,
        Braid,
        BraidInv,
        Identity,
        Swap,
        Cap,
        Cup,
        Hadamard,
        HadamardDagger,
        Triangle,
        TriangleInv,
        Empty,
    )
}
"""Parameterless generators by their atom name."""


def has_explicit_sizes(generator: Generator) -> bool:
    """Return whether ``generator`` ignores the dimension context."""
    if isinstance(generator, _Resize):
        return True
    return isinstance(generator, Swap) and generator.dims is not None
