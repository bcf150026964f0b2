"""
Weight function model and parameter enumeration
"""

import numpy as np
from pydantic import BaseModel, ConfigDict, field_validator
from enum import Enum


class ParamKind(str, Enum):
    """Exact graph parameters usable as weight generators"""
    MAX_DEGREE = "max-degree"
    CLIQUE_NUMBER = "clique-number"
    INDEPENDENCE_NUMBER = "independence-number"
    CHROMATIC_NUMBER = "chromatic-number"
    COMPONENT_COUNT = "component-count"
    ORDER = "order"
    SIZE = "size"


class WeightFn(BaseModel):
    """Non-negative finite weights indexed by family element id.

    ``values`` is a read-only float64 array; ``family_key`` binds it to the
    family it was built for.
    """
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    values: np.ndarray
    family_key: str

    @field_validator('values', mode='before')
    @classmethod
    def check_values(cls, value):
        array = np.array(value, dtype=np.float64, copy=True)
        if array.ndim != 1:
            raise ValueError("weights must be a one-dimensional array")
        if not np.all(np.isfinite(array)):
            bad = int(np.flatnonzero(~np.isfinite(array))[0])
            raise ValueError(f"weight of element {bad} is not finite")
        if np.any(array < 0):
            bad = int(np.flatnonzero(array < 0)[0])
            raise ValueError(f"weight of element {bad} is negative ({array[bad]!r})")
        array.setflags(write=False)
        return array

    @property
    def size(self) -> int:
        return int(self.values.shape[0])

    def __len__(self) -> int:
        return self.size

    def __getitem__(self, element: int) -> float:
        return float(self.values[element])

    def __eq__(self, other) -> bool:
        if not isinstance(other, WeightFn):
            return NotImplemented
        return self.family_key == other.family_key and np.array_equal(self.values, other.values)

    __hash__ = None
