"""
Annotation Type Hints
=====================

Define the annotation type hints used across :mod:`partial_ranking`.
"""

from __future__ import annotations

from typing import Literal

import numpy as np
import numpy.typing as npt
from typing_extensions import TypeAlias

__author__ = "Partial Ranking Developers"
__copyright__ = "Copyright 2026 Partial Ranking Developers"
__license__ = "BSD-3-Clause - https://opensource.org/licenses/BSD-3-Clause"
__maintainer__ = "Partial Ranking Developers"
__email__ = "partial-ranking-developers@googlegroups.com"
__status__ = "Production"

__all__ = [
    "ArrayLike",
    "NDArrayBoolean",
    "NDArrayFloat",
    "NDArrayInt",
    "LiteralMethod",
]

ArrayLike: TypeAlias = npt.ArrayLike

NDArrayBoolean: TypeAlias = npt.NDArray[np.bool_]
NDArrayFloat: TypeAlias = npt.NDArray[np.float64]
NDArrayInt: TypeAlias = npt.NDArray[np.int64]

LiteralMethod: TypeAlias = Literal["finite_sample", "asymptotic"]
