# SPDX-FileCopyrightText: Copyright DB Netz AG and the qudit-zw contributors
# SPDX-License-Identifier: Apache-2.0

import collections.abc as cabc
import pathlib

import pytest
from hypothesis import strategies as st

from quditzw import load
from quditzw.diagram import core, derived
from quditzw.diagram import generators as gen

TEST_DATA_PATH = pathlib.Path(__file__).parent / "data"
TEST_TERMS_PATH = TEST_DATA_PATH / "terms"
TEST_CONFIG_PATH = TEST_DATA_PATH / "config.yaml"
TEST_CONFIG = load.load_yaml(TEST_CONFIG_PATH)
TOL = 1e-9

ZW_ATOMS = ("z", "w", "tau", "taui", "id", "swap", "cap", "cup")
ZX_ATOMS = ("z", "h", "hdag", "tri", "trii", "id", "swap", "cap", "cup")
ALL_ATOMS = tuple(dict.fromkeys(ZW_ATOMS + ZX_ATOMS))

_floats = st.floats(
    min_value=-2, max_value=2, allow_nan=False, allow_infinity=False
)
complexes = st.builds(complex, _floats, _floats)


def phase_vectors(d: int) -> st.SearchStrategy[gen.PhaseVector]:
    return st.lists(complexes, min_size=d - 1, max_size=d - 1).map(
        lambda entries: gen.PhaseVector(tuple(entries), d)
    )


@st.composite
def generators(
    draw: st.DrawFn, d: int, atoms: cabc.Sequence[str], max_legs: int = 2
) -> gen.Generator:
    symbol = draw(st.sampled_from(atoms))
    if symbol == "z":
        n_in = draw(st.integers(0, max_legs))
        m_out = draw(st.integers(0, max_legs))
        return gen.ZSpider(n_in, m_out, draw(phase_vectors(d)))
    return gen.SIMPLE_GENERATORS[symbol]()


@st.composite
def diagrams(
    draw: st.DrawFn,
    d: int,
    atoms: cabc.Sequence[str] = ALL_ATOMS,
    max_leaves: int = 6,
    max_wires: int = 4,
    inputs: int | None = None,
) -> core.Diagram:
    """Draw a well-typed diagram made of layers of single generators.

    Every layer places one generator between identity wires, so the
    number of wires never exceeds ``max_wires``. With ``inputs`` the
    diagram starts on exactly that many wires.
    """
    if inputs is None:
        wires = draw(st.integers(0, max_wires))
    else:
        wires = inputs
    diagram: core.Diagram | None = None
    for _ in range(draw(st.integers(1, max_leaves))):
        generator = draw(generators(d, atoms))
        n_in, m_out = (len(side) for side in generator.signature(d))
        if n_in > wires or wires - n_in + m_out > max_wires:
            continue
        offset = draw(st.integers(0, wires - n_in))
        layer = core.par(
            core.identities(offset, d),
            core.make_generator(generator, d),
            core.identities(wires - offset - n_in, d),
        )
        diagram = layer if diagram is None else core.seq(diagram, layer)
        wires = wires - n_in + m_out

    if diagram is None:
        if inputs is not None or wires:
            return core.identities(wires, d)
        return derived.identity(d)
    return diagram


@pytest.fixture
def snake_text() -> str:
    return (TEST_TERMS_PATH / "snake.term").read_text(encoding="utf8")
