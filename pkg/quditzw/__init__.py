# SPDX-FileCopyrightText: Copyright DB Netz AG and the qudit-zw contributors
# SPDX-License-Identifier: Apache-2.0

"""The quditzw package."""
from importlib import metadata

try:
    __version__ = metadata.version("qudit-zw")
except metadata.PackageNotFoundError:
    __version__ = "0.0.0+unknown"
del metadata
