# SPDX-FileCopyrightText: Copyright DB Netz AG and the qudit-zw contributors
# SPDX-License-Identifier: Apache-2.0

"""A small s-expression language for diagrams.

.. code-block:: text

    term    := atom | "(" "seq" term term ")" | "(" "par" term term ")"
    atom    := "(z" INT INT phases ")" | "(w)" | "(tau)" | "(taui)"
             | "(id)" | "(swap)" | "(cap)" | "(cup)"
             | "(h)" | "(hdag)" | "(tri)" | "(trii)"
             | "(bind" INT INT ")" | "(split" INT INT ")" | "(empty)"
    phases  := "[" complex ("," complex)* "]" | "[]"
    complex := FLOAT | FLOAT ("+"|"-") FLOAT "i"

``[]`` stands for the phase ``(1, ..., 1)``. A ``;`` starts a comment
that runs until the end of the line.
"""
from __future__ import annotations

import dataclasses
import logging
import math
import re

from . import semantics
from .diagram import core
from .diagram import generators as gen

LOGGER = logging.getLogger(__name__)

_TOKEN = re.compile(
    r"""
    (?P<space>\s+)
    |(?P<comment>;[^\n]*)
    |(?P<open>\()
    |(?P<close>\))
    |(?P<lbracket>\[)
    |(?P<rbracket>\])
    |(?P<comma>,)
    |(?P<word>[^\s()\[\],;]+)
    """,
    re.VERBOSE,
)
_FLOAT = r"(?:(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?|inf|nan)"
_COMPLEX = re.compile(
    rf"(?P<real>[+-]?{_FLOAT})(?:(?P<sign>[+-])(?P<imag>{_FLOAT})i)?"
)
_INTEGER = re.compile(r"\d+")
MAX_DEPTH = 200
"""Deepest nesting of ``seq`` and ``par`` terms that is accepted."""
_DESCRIPTIONS = {
    "open": "'('",
    "close": "')'",
    "lbracket": "'['",
    "rbracket": "']'",
    "comma": "','",
    "word": "a word",
}


class ParseError(Exception):
    """The text is not a well-formed, well-typed diagram term."""

    def __init__(self, message: str, position: int) -> None:
        self.position = position
        super().__init__(f"{message} at position {position}")


@dataclasses.dataclass(frozen=True)
class Token:
    kind: str
    text: str
    position: int


def tokenize(text: str) -> list[Token]:
    """Split ``text`` into tokens, dropping whitespace and comments."""
    tokens = []
    for match in _TOKEN.finditer(text):
        kind = match.lastgroup
        assert kind is not None
        if kind not in {"space", "comment"}:
            tokens.append(Token(kind, match.group(), match.start()))
    return tokens


def parse_complex(text: str, position: int = 0) -> complex:
    """Parse a literal like ``2``, ``-0.5`` or ``1.5-2i``.

    Raises
    ------
    ParseError
        If ``text`` is not a complex literal.
    """
    match = _COMPLEX.fullmatch(text)
    if match is None:
        raise ParseError(f"Invalid complex number {text!r}", position)
    real = float(match.group("real"))
    if match.group("imag") is None:
        return complex(real, 0.0)
    imag = float(match.group("imag"))
    return complex(real, -imag if match.group("sign") == "-" else imag)


class _Parser:
    def __init__(self, text: str, d: int) -> None:
        self.text = text
        self.d = d
        self.tokens = tokenize(text)
        self.index = 0

    def peek(self) -> Token | None:
        if self.index < len(self.tokens):
            return self.tokens[self.index]
        return None

    def position(self) -> int:
        token = self.peek()
        return len(self.text) if token is None else token.position

    def expect(self, kind: str) -> Token:
        token = self.peek()
        if token is None:
            raise ParseError(
                f"Expected {_DESCRIPTIONS[kind]} but reached the end of input",
                len(self.text),
            )
        if token.kind != kind:
            raise ParseError(
                f"Expected {_DESCRIPTIONS[kind]} but found {token.text!r}",
                token.position,
            )
        self.index += 1
        return token

    def integer(self) -> int:
        token = self.expect("word")
        if not _INTEGER.fullmatch(token.text):
            raise ParseError(
                f"Expected a non-negative integer but found {token.text!r}",
                token.position,
            )
        return int(token.text)

    def phases(self) -> gen.PhaseVector:
        start = self.expect("lbracket")
        token = self.peek()
        if token is not None and token.kind == "rbracket":
            self.index += 1
            return semantics.ones(self.d)

        entries = []
        while True:
            word = self.expect("word")
            entries.append(parse_complex(word.text, word.position))
            token = self.peek()
            if token is not None and token.kind == "comma":
                self.index += 1
                continue
            self.expect("rbracket")
            break

        try:
            return gen.PhaseVector(tuple(entries), self.d)
        except gen.DiagramError as error:
            raise ParseError(str(error), start.position) from None

    def leaf(self, kind: gen.Generator, position: int) -> core.Leaf:
        try:
            return core.make_generator(kind, self.d)
        except gen.DiagramError as error:
            raise ParseError(str(error), position) from None

    def term(self, depth: int = 0) -> core.Diagram:
        start = self.expect("open")
        if depth > MAX_DEPTH:
            raise ParseError(
                f"Terms nested deeper than {MAX_DEPTH} levels",
                start.position,
            )
        head = self.expect("word")
        diagram: core.Diagram
        if head.text in {"seq", "par"}:
            first = self.term(depth + 1)
            second_position = self.position()
            second = self.term(depth + 1)
            try:
                if head.text == "seq":
                    diagram = core.seq(first, second)
                else:
                    diagram = core.par(first, second)
            except gen.SignatureMismatch as error:
                raise ParseError(str(error), second_position) from None
        elif head.text == "z":
            n_in, m_out = self.integer(), self.integer()
            phase = self.phases()
            try:
                spider = gen.ZSpider(n_in, m_out, phase)
            except gen.DiagramError as error:
                raise ParseError(str(error), start.position) from None
            diagram = self.leaf(spider, start.position)
        elif head.text in {"bind", "split"}:
            s, t_ = self.integer(), self.integer()
            resize = gen.Binder if head.text == "bind" else gen.Splitter
            try:
                kind = resize(s, t_)
            except gen.DiagramError as error:
                raise ParseError(str(error), start.position) from None
            diagram = self.leaf(kind, start.position)
        elif head.text in gen.SIMPLE_GENERATORS:
            generator = gen.SIMPLE_GENERATORS[head.text]()
            diagram = self.leaf(generator, start.position)
        else:
            raise ParseError(f"Unknown atom {head.text!r}", head.position)

        self.expect("close")
        return diagram


def parse(text: str, d: int) -> core.Diagram:
    """Parse a diagram term at dimension ``d``.

    Parameters
    ----------
    text
        The term, e.g. ``(seq (w) (par (id) (z 1 1 [0+1i])))``.
    d
        The qudit dimension of all wires. Phase lists hold ``d - 1``
        entries.

    Raises
    ------
    ParseError
        If the text is malformed, a phase list has the wrong length or
        a sequential composition does not type-check. The error carries
        the 0-based offset of the offending term in ``position``.
    """
    if d < 1:
        raise gen.InvalidDimension(f"Expected d >= 1, got {d}")
    parser = _Parser(text, d)
    diagram = parser.term()
    token = parser.peek()
    if token is not None:
        raise ParseError(
            f"Unexpected {token.text!r} after the term", token.position
        )
    LOGGER.debug("Parsed %d tokens at d=%d", len(parser.tokens), d)
    return diagram


def format_complex(value: complex) -> str:
    """Return the literal of ``value`` that parses back bit-exactly."""
    sign = "-" if math.copysign(1.0, value.imag) < 0 else "+"
    return f"{value.real!r}{sign}{abs(value.imag)!r}i"


def _format_phase(phase: gen.PhaseVector) -> str:
    if phase.is_ones():
        return "[]"
    return "[" + ", ".join(format_complex(e) for e in phase.entries) + "]"


def _print_leaf(leaf: core.Leaf) -> str:
    generator = leaf.generator
    if isinstance(generator, gen.ZSpider):
        phase = _format_phase(generator.phase)
        return f"(z {generator.n_in} {generator.m_out} {phase})"
    elif isinstance(generator, (gen.Binder, gen.Splitter)):
        return f"({generator.describe()})"
    elif isinstance(generator, gen.Swap) and generator.dims is not None:
        raise gen.DiagramError(
            f"A swap of wires with sizes {list(generator.dims)} has no "
            "text representation"
        )
    elif generator.symbol in gen.SIMPLE_GENERATORS:
        return f"({generator.symbol})"
    raise gen.UnknownGenerator(f"Cannot print generator {generator!r}")


def print_diagram(diagram: core.Diagram) -> str:
    """Return the canonical term of ``diagram``.

    Raises
    ------
    DiagramError
        If ``diagram`` contains a swap of wires with different sizes.
    """
    if isinstance(diagram, core.Leaf):
        return _print_leaf(diagram)
    elif isinstance(diagram, core.Seq):
        upper = print_diagram(diagram.upper)
        lower = print_diagram(diagram.lower)
        return f"(seq {upper} {lower})"
    elif isinstance(diagram, core.Par):
        left = print_diagram(diagram.left)
        right = print_diagram(diagram.right)
        return f"(par {left} {right})"
    raise TypeError(f"Not a diagram: {diagram!r}")
