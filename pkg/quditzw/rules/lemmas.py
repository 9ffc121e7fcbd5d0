# SPDX-FileCopyrightText: Copyright DB Netz AG and the qudit-zw contributors
# SPDX-License-Identifier: Apache-2.0

"""Equations derivable from the ZW rules."""
from __future__ import annotations

from .. import semantics
from ..diagram import core, derived
from . import ruletypes
from .zwrules import left_trace, right_trace

LEMMAS: list[ruletypes.RewriteRule] = []
lemma = ruletypes.registrar(LEMMAS, "lemma")

seq, par = core.seq, core.par


@lemma("crossinv", source="Bd2, Bd3")
def _crossinv(d, _):
    return derived.braid_inv(d), core.power(derived.braid(d), 2 * d - 1)


@lemma("braidinv4", source="Bd1, Bd2, Bd4")
def _braidinv4(d, _):
    i, tau = derived.identity(d), derived.braid_inv(d)
    return (
        seq(par(tau, i), par(i, tau), par(tau, i)),
        seq(par(i, tau), par(tau, i), par(i, tau)),
    )


@lemma("braid_ptrace", source="Nat5, Nat6")
def _braid_ptrace(d, _):
    tau = derived.braid(d)
    return left_trace(tau, d), right_trace(tau, d)


@lemma("braid_ptrace2", source="Nat5, Nat6, crossinv")
def _braid_ptrace2(d, _):
    tau = derived.braid_inv(d)
    return left_trace(tau, d), right_trace(tau, d)


@lemma("w_inv_braid_sym", source="Wsm, Bd3, Bsm")
def _w_inv_braid_sym(d, _):
    # tau^d is the identity for even d and the swap for odd d
    tail = core.power(derived.braid(d), d - 1)
    if d % 2 == 0:
        lhs = seq(derived.w(d), tail)
    else:
        lhs = seq(derived.w(d), derived.swap(d), tail)
    return lhs, derived.w(d)


@lemma("w_nat_flip", source="Wnt1, Nat5, Nat6")
def _w_nat_flip(d, _):
    i, tau, down = derived.identity(d), derived.braid(d), derived.down_w(d)
    return (
        seq(par(down, i), tau),
        seq(par(i, tau), par(tau, i), par(i, down)),
    )


@lemma("white_downblack_bialg", source="Baw")
def _white_downblack_bialg(d, _):
    i, down = derived.identity(d), derived.down_w(d)
    copy = derived.spider(1, 2, d)
    return (
        seq(down, copy),
        seq(par(copy, copy), par(i, derived.swap(d), i), par(down, down)),
    )


@lemma("white_downblack_hopf", source="WBh")
def _white_downblack_hopf(d, _):
    return (
        seq(derived.spider(1, 2, d), derived.down_w(d)),
        seq(derived.black_codot(d), derived.black_dot(d)),
    )


@lemma("white_black_inv_swap", phases=("a",), source="Bd4, WBs, crossinv")
def _white_black_inv_swap(d, p):
    dot, unit = derived.black_dot(d), derived.spider(0, 1, d, p["a"])
    return seq(par(unit, dot), derived.braid_inv(d)), par(dot, unit)


@lemma("braid_loop_phase", source="S1, Wps", constraints=("2tau",))
def _braid_loop_phase(d, _):
    return (
        right_trace(derived.braid_inv(d), d),
        derived.spider(1, 1, d, semantics.two_tau(d).conjugate()),
    )


@lemma("addition_two_blacks", phases=("a", "b"), source="AD")
def _addition_two_blacks(d, p):
    return (
        seq(
            par(
                derived.spider(0, 1, d, p["a"]),
                derived.spider(0, 1, d, p["b"]),
            ),
            derived.down_w(d),
        ),
        derived.spider(0, 1, d, p["a"] + p["b"]),
    )


@lemma("black_dot_copy", phases=("a",), source="Cpy, Pcp")
def _black_dot_copy(d, p):
    dot = derived.black_dot(d)
    return seq(dot, derived.spider(1, 2, d, p["a"])), par(dot, dot)


@lemma("general_hopf", sizes={"m": (2, 3, 4)}, source="WBh, Aso")
def _general_hopf(d, p):
    m = p["m"]
    return (
        seq(derived.black_spider(m, d), derived.spider(m, 1, d)),
        seq(derived.black_codot(d), derived.black_dot(d)),
    )
