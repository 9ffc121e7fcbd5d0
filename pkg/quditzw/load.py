# SPDX-FileCopyrightText: Copyright DB Netz AG and the qudit-zw contributors
# SPDX-License-Identifier: Apache-2.0
from __future__ import annotations

import copy
import logging
import pathlib
import typing as t

import typing_extensions as te
import yaml

LOGGER = logging.getLogger(__name__)


class InvalidSettings(Exception):
    """A settings file holds unknown keys or values of the wrong type."""


class Settings(te.TypedDict):
    tolerance: float
    """Absolute entry-wise tolerance of all comparisons."""
    entry_cap: int
    """Maximum number of entries an interpretation may allocate."""
    dims: list[int]
    """Dimensions the verifier runs at."""
    trials: int
    seed: int
    modulus: list[float]
    """Range of the moduli of random phase entries."""


DEFAULT_SETTINGS: te.Final[Settings] = {
    "tolerance": 1e-9,
    "entry_cap": 10**6,
    "dims": [2, 3, 4, 5],
    "trials": 20,
    "seed": 42,
    "modulus": [0.5, 1.5],
}


def load_yaml(config_path: pathlib.Path | str) -> dict[str, t.Any]:
    """Return the parsed YAML file at ``config_path``.

    .. code-block::
        :caption: Example for config.yaml

        tolerance: 1.0e-9
        entry_cap: 1000000
        dims: [2, 3, 4, 5]
        trials: 20
        seed: 42
        modulus: [0.5, 1.5] # Bounds of random phase moduli

    Returns
    -------
    config
        The whole file content, an empty mapping for an empty file.
    """
    content = yaml.safe_load(
        pathlib.Path(config_path).read_text(encoding="utf-8")
    )
    return content or {}


def _check_type(key: str, value: t.Any) -> t.Any:
    if key == "tolerance":
        if isinstance(value, str):
            # PyYAML reads exponent floats without a dot as strings
            try:
                value = float(value)
            except ValueError:
                return None
        valid = isinstance(value, (int, float)) and not isinstance(value, bool)
        return float(value) if valid and value >= 0 else None
    elif key in {"entry_cap", "trials", "seed"}:
        valid = isinstance(value, int) and not isinstance(value, bool)
        minimum = 0 if key == "seed" else 1
        return value if valid and value >= minimum else None
    elif key == "dims":
        if isinstance(value, list) and all(
            isinstance(d, int) and not isinstance(d, bool) and d >= 2
            for d in value
        ):
            return value
    elif key == "modulus":
        if (
            isinstance(value, list)
            and len(value) == 2
            and all(
                isinstance(v, (int, float)) and not isinstance(v, bool)
                for v in value
            )
            and 0 <= value[0] <= value[1]
        ):
            return [float(v) for v in value]
    return None


def load_settings(config_path: pathlib.Path | str | None = None) -> Settings:
    """Return the verification settings, filled up with defaults.

    Parameters
    ----------
    config_path
        Path to a YAML settings file. Without a path the defaults are
        returned.

    Raises
    ------
    InvalidSettings
        If the file holds keys other than those of :class:`Settings`
        or values of the wrong type.
    """
    settings = copy.deepcopy(DEFAULT_SETTINGS)
    if config_path is None:
        return settings

    content = load_yaml(config_path)
    if not isinstance(content, dict):
        raise InvalidSettings(
            f"Expected a mapping in {str(config_path)!r}, "
            f"got {type(content).__name__}"
        )

    errors: list[str] = []
    for key, value in content.items():
        if key not in DEFAULT_SETTINGS:
            errors.append(f"Unknown setting {key!r}")
            continue

        checked = _check_type(key, value)
        if checked is None:
            errors.append(f"Invalid value for {key!r}: {value!r}")
        else:
            settings[key] = checked  # type: ignore[literal-required]

    if errors:
        raise InvalidSettings("\n".join(errors))

    LOGGER.debug("Loaded settings from %s", config_path)
    return settings
