# SPDX-FileCopyrightText: Copyright DB Netz AG and the qudit-zw contributors
# SPDX-License-Identifier: Apache-2.0

"""The rewrite rules of the non-anyonic qudit ZW-calculus.

Each builder returns ``(lhs, rhs)`` for a dimension ``d`` and an
assignment of the rule's phase slots. Diagrams are read top to bottom,
``seq(a, b)`` places ``a`` above ``b``.
"""
from __future__ import annotations

from .. import semantics
from ..diagram import core, derived
from . import ruletypes

CATALOG: list[ruletypes.RewriteRule] = []
rule = ruletypes.registrar(CATALOG, "rule")

BRAIDS = "braid and naturality rules"
W_NODE = "W node rules"
SPIDERS = "spider and phase rules"

seq, par = core.seq, core.par
ids = core.identities


def _yang_baxter(
    braid: core.Diagram, d: int
) -> tuple[core.Diagram, core.Diagram]:
    i = derived.identity(d)
    return (
        seq(par(braid, i), par(i, braid), par(braid, i)),
        seq(par(i, braid), par(braid, i), par(i, braid)),
    )


def right_trace(braid: core.Diagram, d: int) -> core.Diagram:
    """Feed the right output of a braid back into its right input."""
    i = derived.identity(d)
    return seq(
        par(i, derived.cap(d)), par(braid, i), par(i, derived.cup(d))
    )


def left_trace(braid: core.Diagram, d: int) -> core.Diagram:
    """Feed the left output of a braid back into its left input."""
    i = derived.identity(d)
    return seq(
        par(derived.cap(d), i), par(i, braid), par(derived.cup(d), i)
    )


@rule("Bd1", source=BRAIDS)
def _bd1(d, _):
    return seq(derived.braid(d), derived.braid_inv(d)), ids(2, d)


@rule("Bd2", source=BRAIDS)
def _bd2(d, _):
    return seq(derived.braid_inv(d), derived.braid(d)), ids(2, d)


@rule("Bd3", sizes={"n": (1, 2, 3)}, source=BRAIDS)
def _bd3(d, p):
    k = p["n"] * d
    return core.power(derived.braid(d), k), core.power(derived.swap(d), k)


@rule("Bd4", source=BRAIDS)
def _bd4(d, _):
    return _yang_baxter(derived.braid(d), d)


@rule("Nat1", source=BRAIDS)
def _nat1(d, _):
    i, dot = derived.identity(d), derived.black_dot(d)
    return seq(par(dot, i), derived.braid(d)), par(i, dot)


@rule("Nat2", source=BRAIDS)
def _nat2(d, _):
    i, dot = derived.identity(d), derived.black_dot(d)
    return seq(par(i, dot), derived.braid(d)), par(dot, i)


@rule("Nat3", source=BRAIDS)
def _nat3(d, _):
    i, tau, sigma = derived.identity(d), derived.braid(d), derived.swap(d)
    return (
        seq(par(sigma, i), par(i, sigma), par(tau, i)),
        seq(par(i, tau), par(sigma, i), par(i, sigma)),
    )


@rule("Nat4", source=BRAIDS)
def _nat4(d, _):
    i, tau, sigma = derived.identity(d), derived.braid(d), derived.swap(d)
    return (
        seq(par(tau, i), par(i, sigma), par(sigma, i)),
        seq(par(i, sigma), par(sigma, i), par(i, tau)),
    )


@rule("Nat5", source=BRAIDS)
def _nat5(d, _):
    i, tau, cap = derived.identity(d), derived.braid(d), derived.cap(d)
    return seq(par(cap, i), par(i, tau)), seq(par(i, cap), par(tau, i))


@rule("Nat6", source=BRAIDS)
def _nat6(d, _):
    i, tau, cup = derived.identity(d), derived.braid(d), derived.cup(d)
    return seq(par(i, tau), par(cup, i)), seq(par(tau, i), par(i, cup))


@rule("Syb", source=W_NODE)
def _syb(d, _):
    return seq(derived.w(d), derived.swap(d)), derived.w(d)


@rule("Unt", source=W_NODE)
def _unt(d, _):
    i = derived.identity(d)
    return seq(derived.w(d), par(i, derived.black_codot(d))), i


@rule("Aso", source=W_NODE)
def _aso(d, _):
    i, w = derived.identity(d), derived.w(d)
    return seq(w, par(w, i)), seq(w, par(i, w))


@rule("Cpy", source=W_NODE)
def _cpy(d, _):
    dot = derived.black_dot(d)
    return seq(dot, derived.w(d)), par(dot, dot)


@rule("Wnt1", source=W_NODE)
def _wnt1(d, _):
    i, w, tau = derived.identity(d), derived.w(d), derived.braid(d)
    return (
        seq(tau, par(i, w)),
        seq(par(w, i), par(i, tau), par(tau, i)),
    )


@rule("Wnt2", source=W_NODE)
def _wnt2(d, _):
    i, w, tau = derived.identity(d), derived.w(d), derived.braid(d)
    return (
        seq(tau, par(w, i)),
        seq(par(i, w), par(tau, i), par(i, tau)),
    )


@rule("Wsm", source=W_NODE)
def _wsm(d, _):
    return seq(derived.w(d), derived.braid(d)), derived.w(d)


@rule("Bsm", source=W_NODE)
def _bsm(d, _):
    tau, sigma = derived.braid(d), derived.swap(d)
    return seq(tau, sigma), seq(sigma, tau)


@rule("Ept", source=W_NODE)
def _ept(d, _):
    return seq(derived.black_dot(d), derived.black_codot(d)), core.empty()


@rule("Bhf", source=W_NODE, constraints=("-1",))
def _bhf(d, _):
    negate = derived.spider(1, 1, d, semantics.minus_ones(d))
    return (
        seq(
            derived.w(d),
            par(derived.identity(d), negate),
            derived.down_w(d),
        ),
        seq(derived.black_codot(d), derived.black_dot(d)),
    )


@rule("S1", phases=("a", "b"), source=SPIDERS)
def _s1(d, p):
    i = derived.identity(d)
    return (
        seq(
            par(derived.spider(1, 2, d, p["a"]), i),
            par(i, derived.spider(2, 1, d, p["b"])),
        ),
        derived.spider(2, 2, d, p["a"] * p["b"]),
    )


@rule("S2", source=SPIDERS, constraints=("1",))
def _s2(d, _):
    return derived.spider(1, 1, d), derived.identity(d)


@rule("S3", phases=("a",), source=SPIDERS)
def _s3(d, p):
    i = derived.identity(d)
    return (
        seq(par(i, derived.cap(d)), par(derived.spider(2, 1, d, p["a"]), i)),
        derived.spider(1, 2, d, p["a"]),
    )


@rule("Wps", source=SPIDERS, constraints=("2tau",))
def _wps(d, _):
    return (
        right_trace(derived.braid(d), d),
        derived.spider(1, 1, d, semantics.two_tau(d)),
    )


@rule("Baw", source=SPIDERS)
def _baw(d, _):
    i, w = derived.identity(d), derived.w(d)
    merge = derived.spider(2, 1, d)
    return (
        seq(merge, w),
        seq(par(w, w), par(i, derived.swap(d), i), par(merge, merge)),
    )


@rule("WBh", source=SPIDERS)
def _wbh(d, _):
    return (
        seq(derived.w(d), derived.spider(2, 1, d)),
        seq(derived.black_codot(d), derived.black_dot(d)),
    )


@rule("WBs", source=SPIDERS)
def _wbs(d, _):
    dot, unit = derived.black_dot(d), derived.spider(0, 1, d)
    return seq(par(dot, unit), derived.braid(d)), par(unit, dot)


@rule("Pcp", phases=("a",), source=SPIDERS)
def _pcp(d, p):
    phase = derived.spider(1, 1, d, p["a"])
    return (
        seq(phase, derived.w(d)),
        seq(derived.w(d), par(phase, phase)),
    )


@rule("AD", phases=("a", "b"), source=SPIDERS)
def _ad(d, p):
    return (
        seq(
            derived.w(d),
            par(
                derived.spider(1, 1, d, p["a"]),
                derived.spider(1, 1, d, p["b"]),
            ),
            derived.down_w(d),
        ),
        derived.spider(1, 1, d, p["a"] + p["b"]),
    )


@rule("Pcp2", phases=("a",), source=SPIDERS)
def _pcp2(d, p):
    return (
        seq(
            derived.spider(1, 2, d, p["a"]),
            par(derived.identity(d), derived.black_codot(d)),
        ),
        seq(derived.black_codot(d), derived.black_dot(d)),
    )
