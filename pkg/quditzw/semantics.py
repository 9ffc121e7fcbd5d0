# SPDX-FileCopyrightText: Copyright DB Netz AG and the qudit-zw contributors
# SPDX-License-Identifier: Apache-2.0

"""The standard interpretation of diagrams as dense complex matrices.

Basis states are ordered big-endian mixed-radix: the leftmost wire is
the most significant digit. A diagram ``seq(a, b)`` (``a`` on top)
interprets as ``[[b]] @ [[a]]`` and ``par(a, b)`` as the Kronecker
product ``[[a]] (x) [[b]]``. None of the formulas carry a normalization
factor, e.g. ``[[H]] @ [[H^dagger]] = d * I``.
"""
from __future__ import annotations

import collections.abc as cabc
import dataclasses
import functools
import logging
import math
import typing as t

import numpy as np
import numpy.typing as npt

from .diagram import core
from .diagram import generators as gen

LOGGER = logging.getLogger(__name__)
DEFAULT_ENTRY_CAP = 10**6
DEFAULT_TOLERANCE = 1e-9

ComplexMatrix = npt.NDArray[np.complex128]
"""Dense complex matrix of shape ``(prod(cod), prod(dom))``."""


class EntryCapExceeded(Exception):
    """An interpretation would allocate more entries than allowed."""


@dataclasses.dataclass(frozen=True)
class RootOfUnityTable:
    """Powers of ``xi = exp(2 pi i / d)`` for the exponents ``0..d**2``.

    Exponents are reduced modulo ``d`` before evaluating the exponential,
    so ``xi**(j*k)`` is as accurate for large ``j*k`` as for small ones.
    """

    d: int
    powers: ComplexMatrix = dataclasses.field(repr=False, compare=False)

    @classmethod
    def build(cls, d: int) -> RootOfUnityTable:
        if d < 1:
            raise gen.InvalidDimension(f"Expected d >= 1, got {d}")
        exponents = np.arange(d * d + 1) % d
        powers = np.exp(2j * np.pi * exponents / d)
        powers.setflags(write=False)
        return cls(d, powers)

    @property
    def xi(self) -> complex:
        return self[1]

    def __getitem__(self, exponent: int) -> complex:
        return complex(self.powers[exponent % self.d])

    def products(self, conjugate: bool = False) -> ComplexMatrix:
        """Return the ``d x d`` matrix with entries ``xi**(j*k)``."""
        ks = np.arange(self.d)
        table = self.powers[np.outer(ks, ks)]
        return table.conj() if conjugate else table


@functools.lru_cache(maxsize=None)
def roots_of_unity(d: int) -> RootOfUnityTable:
    """Return the cached :class:`RootOfUnityTable` for ``d``."""
    return RootOfUnityTable.build(d)


def ones(d: int) -> gen.PhaseVector:
    """Return ``(1, ..., 1)``, the phase of a phase-free spider."""
    return gen.PhaseVector.constant(1, d)


def minus_ones(d: int) -> gen.PhaseVector:
    return gen.PhaseVector.constant(-1, d)


def two_tau(d: int) -> gen.PhaseVector:
    """Return ``(xi, ..., xi**(k**2), ..., xi**((d-1)**2))``."""
    table = roots_of_unity(d)
    return gen.PhaseVector(tuple(table[k * k] for k in range(1, d)), d)


def tau_phases(d: int) -> gen.PhaseVector:
    """Return ``exp(i tau_k)`` with ``tau_k = k pi + k**2 pi / d``."""
    return gen.PhaseVector(
        tuple(
            complex(np.exp(1j * (k * np.pi + k * k * np.pi / d)))
            for k in range(1, d)
        ),
        d,
    )


def k_phases(j: int, d: int) -> gen.PhaseVector:
    """Return ``exp(i K_j)``, i.e. the entries ``xi**(j*k)``."""
    table = roots_of_unity(d)
    return gen.PhaseVector(tuple(table[j * k] for k in range(1, d)), d)


def s_vector(d: int) -> gen.PhaseVector:
    """Return ``(0, ..., 0, 1/d - 1)``.

    A ``0 -> 0`` spider with this phase evaluates to the scalar ``1/d``.
    """
    return gen.PhaseVector((0,) * (d - 2) + (1 / d - 1,), d)


def _repunit(n: int, d: int) -> int:
    return sum(d**k for k in range(n))


def _spider(g: gen.ZSpider, d: int) -> ComplexMatrix:
    matrix = np.zeros((d**g.m_out, d**g.n_in), dtype=np.complex128)
    row_step = _repunit(g.m_out, d)
    col_step = _repunit(g.n_in, d)
    for j, coefficient in enumerate(g.phase.coefficients):
        matrix[j * row_step, j * col_step] += coefficient
    return matrix


def _w(_: gen.Generator, d: int) -> ComplexMatrix:
    matrix = np.zeros((d * d, d), dtype=np.complex128)
    matrix[0, 0] = 1
    for i in range(1, d):
        matrix[i, i] = 1
        matrix[i * d, i] = 1
    return matrix


def _braid(g: gen.Generator, d: int) -> ComplexMatrix:
    matrix = np.zeros((d * d, d * d), dtype=np.complex128)
    j, k = np.indices((d, d))
    phases = roots_of_unity(d).products(
        conjugate=isinstance(g, gen.BraidInv)
    )
    matrix[(j * d + k).ravel(), (k * d + j).ravel()] = phases.ravel()
    return matrix


def _swap(g: gen.Generator, d: int) -> ComplexMatrix:
    assert isinstance(g, gen.Swap)
    s, t_ = g.dims or (d, d)
    matrix = np.zeros((s * t_, s * t_), dtype=np.complex128)
    first, second = np.indices((s, t_))
    matrix[(second * s + first).ravel(), (first * t_ + second).ravel()] = 1
    return matrix


def _hadamard(g: gen.Generator, d: int) -> ComplexMatrix:
    conjugate = isinstance(g, gen.HadamardDagger)
    return roots_of_unity(d).products(conjugate=conjugate)


def _triangle(g: gen.Generator, d: int) -> ComplexMatrix:
    matrix = np.eye(d, dtype=np.complex128)
    matrix[0, 1:] = -1 if isinstance(g, gen.TriangleInv) else 1
    return matrix


def _resize(g: gen.Generator, _: int) -> ComplexMatrix:
    assert isinstance(g, (gen.Binder, gen.Splitter))
    return np.eye(g.s * g.t, dtype=np.complex128)


_MATRIX_BUILDERS: dict[
    type[gen.Generator], cabc.Callable[[t.Any, int], ComplexMatrix]
] = {
    gen.ZSpider: _spider,
    gen.W: _w,
    gen.Braid: _braid,
    gen.BraidInv: _braid,
    gen.Identity: lambda _, d: np.eye(d, dtype=np.complex128),
    gen.Swap: _swap,
    gen.Cap: lambda _, d: np.eye(d, dtype=np.complex128).reshape(d * d, 1),
    gen.Cup: lambda _, d: np.eye(d, dtype=np.complex128).reshape(1, d * d),
    gen.Hadamard: _hadamard,
    gen.HadamardDagger: _hadamard,
    gen.Triangle: _triangle,
    gen.TriangleInv: _triangle,
    gen.Binder: _resize,
    gen.Splitter: _resize,
    gen.Empty: lambda *_: np.ones((1, 1), dtype=np.complex128),
}


@functools.lru_cache(maxsize=1024)
def generator_matrix(g: gen.Generator, d: int) -> ComplexMatrix:
    """Return the interpretation of a single generator at dimension ``d``.

    The returned array is cached and therefore read-only.

    Raises
    ------
    UnknownGenerator
        If ``g`` is not one of the known generator variants.
    """
    try:
        builder = _MATRIX_BUILDERS[type(g)]
    except KeyError:
        raise gen.UnknownGenerator(
            f"No interpretation for generator {g!r}"
        ) from None

    matrix = builder(g, d)
    matrix.setflags(write=False)
    return matrix


def interpret(
    diagram: core.Diagram, entry_cap: int = DEFAULT_ENTRY_CAP
) -> ComplexMatrix:
    """Return the standard interpretation of ``diagram``.

    Parameters
    ----------
    diagram
        A well-typed diagram.
    entry_cap
        The maximum number of matrix entries any node of the tree may
        interpret to.

    Raises
    ------
    EntryCapExceeded
        If a node's matrix would exceed ``entry_cap`` entries.
    """
    entries = math.prod(diagram.cod) * math.prod(diagram.dom)
    if entries > entry_cap:
        raise EntryCapExceeded(
            f"Interpretation of a {list(diagram.dom)} -> "
            f"{list(diagram.cod)} diagram needs {entries} entries, the cap "
            f"is {entry_cap}"
        )
    if entries > entry_cap // 2:
        LOGGER.debug(
            "Interpreting %d entries, close to the cap of %d",
            entries,
            entry_cap,
        )

    if isinstance(diagram, core.Leaf):
        return np.array(generator_matrix(diagram.generator, diagram.d))
    elif isinstance(diagram, core.Seq):
        upper = interpret(diagram.upper, entry_cap)
        lower = interpret(diagram.lower, entry_cap)
        return lower @ upper
    elif isinstance(diagram, core.Par):
        left = interpret(diagram.left, entry_cap)
        right = interpret(diagram.right, entry_cap)
        return np.kron(left, right)
    raise TypeError(f"Not a diagram: {diagram!r}")


@dataclasses.dataclass(frozen=True)
class Comparison:
    """Outcome of :func:`approx_equal`, truthy iff the matrices agree."""

    equal: bool
    deviation: float
    reason: str | None = None

    def __bool__(self) -> bool:
        return self.equal


def approx_equal(
    a: npt.ArrayLike, b: npt.ArrayLike, tol: float = DEFAULT_TOLERANCE
) -> Comparison:
    """Compare two matrices entry-wise up to an absolute tolerance.

    Matrices of different shape compare unequal with infinite deviation
    and the shapes as ``reason``.
    """
    left = np.asarray(a)
    right = np.asarray(b)
    if left.shape != right.shape:
        return Comparison(
            False, math.inf, f"Shape mismatch: {left.shape} != {right.shape}"
        )

    difference = np.abs(left - right)
    deviation = float(difference.max()) if difference.size else 0.0
    if deviation <= tol:
        return Comparison(True, deviation)
    return Comparison(
        False, deviation, f"Deviation {deviation!r} exceeds {tol!r}"
    )


def _digit_sums(n: int, d: int) -> npt.NDArray[np.int_]:
    sums = np.zeros(1, dtype=np.int_)
    for _ in range(n):
        sums = (sums[:, None] + np.arange(d)[None, :]).ravel()
    return sums


def x_spider_formula(n: int, m: int, j: int, d: int) -> ComplexMatrix:
    """Return the X spider with ``n`` inputs, ``m`` outputs and index ``j``.

    The entry for output ``|i_1..i_m>`` and input ``|j_1..j_n>`` is one
    if ``i_1 + ... + i_m + j = j_1 + ... + j_n (mod d)`` and zero
    otherwise.
    """
    if not 0 <= j < d:
        raise ValueError(f"Expected 0 <= j < {d}, got {j}")
    rows = _digit_sums(m, d)
    cols = _digit_sums(n, d)
    congruent = (rows[:, None] + j - cols[None, :]) % d == 0
    return congruent.astype(np.complex128)


def red_tau_formula(d: int) -> ComplexMatrix:
    r"""Return the red tau node.

    .. math::

        \frac{1}{d} \sum_{k,n,l} e^{i\tau_l} \xi^{(k-n)l} |k\rangle\langle n|,
        \qquad \tau_l = l\pi + \frac{l^2\pi}{d}
    """
    if d < 2:
        raise gen.InvalidDimension(f"Expected d >= 2, got {d}")
    table = roots_of_unity(d)
    ls = np.arange(d)
    taus = np.exp(1j * (ls * np.pi + ls * ls * np.pi / d))
    k, n = np.indices((d, d))
    exponents = ((k - n)[..., None] * ls) % d
    return (table.powers[exponents] * taus).sum(axis=-1) / d


def black_spider_formula(m: int, d: int) -> ComplexMatrix:
    """Return the black spider with one input and ``m >= 1`` outputs.

    The input ``|0>`` maps to ``|0..0>`` and every ``|i>`` with ``i > 0``
    to the sum of all outputs carrying ``i`` on exactly one wire.
    """
    if m < 1:
        raise ValueError(f"Expected m >= 1, got {m}")
    matrix = np.zeros((d**m, d), dtype=np.complex128)
    matrix[0, 0] = 1
    for i in range(1, d):
        for slot in range(m):
            matrix[i * d ** (m - 1 - slot), i] = 1
    return matrix
