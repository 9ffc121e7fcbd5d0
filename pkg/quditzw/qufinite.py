# SPDX-FileCopyrightText: Copyright DB Netz AG and the qudit-zw contributors
# SPDX-License-Identifier: Apache-2.0

"""The mixed-dimension extension of the ZW-calculus.

Wires carry individual dimensions. The dimension-binder merges two
wires of sizes ``s`` and ``t`` into one wire of size ``s*t`` and the
dimension-splitter undoes this. A wire of size one is an ordinary wire
interpreting to ``C^1``; it is only drawn as empty.
"""
from __future__ import annotations

import collections.abc as cabc
import logging

import numpy as np

from . import auditing, rules, semantics
from .diagram import core, derived
from .diagram import generators as gen
from .rules import ruletypes

LOGGER = logging.getLogger(__name__)

QUFINITE_RULES: list[ruletypes.RewriteRule] = []
qufinite_rule = ruletypes.registrar(QUFINITE_RULES, "qufinite")

PAIR = {"s": (1, 2, 3, 4), "t": (1, 2, 3, 4)}
TRIPLE = {"s": (1, 2, 3), "t": (1, 2, 3), "u": (1, 2, 3)}

seq, par = core.seq, core.par


def _check_sizes(*sizes: int) -> None:
    if any(size < 1 for size in sizes):
        raise gen.InvalidDimension(f"Wire sizes must be >= 1, got {sizes}")


def binder_matrix(s: int, t: int) -> semantics.ComplexMatrix:
    """Return ``sum_{k,l} |k*t + l><k, l|`` as an ``st x st`` matrix."""
    _check_sizes(s, t)
    matrix = np.zeros((s * t, s * t), dtype=np.complex128)
    high, low = np.indices((s, t))
    index = (high * t + low).ravel()
    matrix[index, index] = 1
    return matrix


def splitter_matrix(s: int, t: int) -> semantics.ComplexMatrix:
    """Return ``sum_k |[k/t]>|k - t[k/t]><k|``, the inverse binder."""
    _check_sizes(s, t)
    matrix = np.zeros((s * t, s * t), dtype=np.complex128)
    k = np.arange(s * t)
    high, low = np.divmod(k, t)
    matrix[high * t + low, k] = 1
    return matrix


def binder(s: int, t: int) -> core.Leaf:
    return core.make_generator(gen.Binder(s, t), 0)


def splitter(s: int, t: int) -> core.Leaf:
    return core.make_generator(gen.Splitter(s, t), 0)


def identity(s: int) -> core.Leaf:
    """Return the identity on a wire of size ``s``."""
    return derived.identity(s)


def swap(s: int, t: int) -> core.Leaf:
    """Return the swap of a wire of size ``s`` and one of size ``t``.

    Equal sizes give the ordinary swap at dimension ``s``.
    """
    _check_sizes(s, t)
    if s == t:
        return derived.swap(s)
    return core.make_generator(gen.Swap(dims=(s, t)), 0)


def spider(n_in: int, m_out: int, s: int) -> core.Leaf:
    """Return the phase-free white spider on wires of size ``s``."""
    return derived.spider(n_in, m_out, s)


def one_unit() -> core.Leaf:
    """Return the white unit on a wire of size one, interpreting to 1."""
    return spider(0, 1, 1)


def one_counit() -> core.Leaf:
    return spider(1, 0, 1)


@qufinite_rule("binder_unitary_1", sizes=PAIR)
def _binder_unitary_1(_, p):
    s, t = p["s"], p["t"]
    return seq(binder(s, t), splitter(s, t)), par(identity(s), identity(t))


@qufinite_rule("binder_unitary_2", sizes=PAIR)
def _binder_unitary_2(_, p):
    s, t = p["s"], p["t"]
    return seq(splitter(s, t), binder(s, t)), identity(s * t)


@qufinite_rule("binder_assoc", sizes=TRIPLE)
def _binder_assoc(_, p):
    s, t, u = p["s"], p["t"], p["u"]
    return (
        seq(par(binder(s, t), identity(u)), binder(s * t, u)),
        seq(par(identity(s), binder(t, u)), binder(s, t * u)),
    )


@qufinite_rule("binder_wspider", sizes={"s": TRIPLE["s"], "t": TRIPLE["t"]})
def _binder_wspider(_, p):
    s, t = p["s"], p["t"]
    return (
        seq(binder(s, t), spider(1, 2, s * t)),
        seq(
            par(spider(1, 2, s), spider(1, 2, t)),
            par(identity(s), swap(s, t), identity(t)),
            par(binder(s, t), binder(s, t)),
        ),
    )


@qufinite_rule("binder_with1_right", sizes={"s": TRIPLE["s"]})
def _binder_with1_right(_, p):
    s = p["s"]
    return seq(par(identity(s), one_unit()), binder(s, 1)), identity(s)


@qufinite_rule("binder_with1_left", sizes={"t": TRIPLE["t"]})
def _binder_with1_left(_, p):
    t = p["t"]
    return seq(par(one_unit(), identity(t)), binder(1, t)), identity(t)


def qufinite_catalog() -> list[ruletypes.RewriteRule]:
    """Return the rules for the dimension-binder and -splitter."""
    return list(QUFINITE_RULES)


def verify_qufinite(
    grid: cabc.Mapping[str, cabc.Sequence[int]] | None = None,
    tol: float = semantics.DEFAULT_TOLERANCE,
    seed: int = rules.DEFAULT_SEED,
    entry_cap: int = semantics.DEFAULT_ENTRY_CAP,
) -> list[auditing.VerificationReport]:
    """Verify all qufinite rules over their size grids.

    Parameters
    ----------
    grid
        Overrides the sizes ``s``, ``t`` and ``u`` are checked at, e.g.
        ``{"s": [2], "t": [3]}``.
    """
    reports = []
    for rule in QUFINITE_RULES:
        report = rules.verify(
            rule, None, 1, tol, seed, grid=grid, entry_cap=entry_cap
        )
        LOGGER.info("%s", auditing.formulate_statement(report))
        reports.append(report)
    return reports
