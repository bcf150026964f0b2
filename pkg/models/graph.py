"""
Graph and subgraph-family input models
"""

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator
from typing import List, Optional, Tuple
from enum import Enum


class FamilyKind(str, Enum):
    """Which subgraph family is materialised over a graph"""
    VERTEX_INDUCED = "vertex-induced"
    EDGE_SUBSETS = "edge-subsets"
    EXPLICIT = "explicit"


class Graph(BaseModel):
    """Finite simple undirected graph on vertices 0..n-1"""
    model_config = ConfigDict(frozen=True)

    n: int = Field(ge=1)
    edges: Tuple[Tuple[int, int], ...] = ()

    @field_validator('edges', mode='before')
    @classmethod
    def normalise_edges(cls, value):
        # store each edge as (u, v) with u < v, sorted
        pairs = []
        for edge in value or ():
            edge = tuple(edge)
            if len(edge) != 2:
                raise ValueError(f"edge {list(edge)} must have exactly two endpoints")
            u, v = int(edge[0]), int(edge[1])
            if u == v:
                raise ValueError(f"loop at vertex {u} is not allowed")
            pairs.append((min(u, v), max(u, v)))
        if len(set(pairs)) != len(pairs):
            raise ValueError("duplicate edges are not allowed")
        return tuple(sorted(pairs))

    @model_validator(mode='after')
    def check_endpoints(self):
        for u, v in self.edges:
            if u < 0 or v >= self.n:
                raise ValueError(f"edge ({u}, {v}) has an endpoint outside 0..{self.n - 1}")
        return self

    @property
    def vertex_count(self) -> int:
        return self.n

    @property
    def edge_count(self) -> int:
        return len(self.edges)


class ExplicitFamilySpec(BaseModel):
    """Explicit family file: labels plus generating containment pairs"""
    elements: List[str] = Field(min_length=1)
    leq: List[Tuple[int, int]] = Field(default_factory=list)
    top: Optional[int] = None

    @field_validator('elements')
    @classmethod
    def unique_labels(cls, value):
        if len(set(value)) != len(value):
            raise ValueError("element labels must be unique")
        if any(label == '' for label in value):
            raise ValueError("element labels must be non-empty")
        return value

    @model_validator(mode='after')
    def check_indices(self):
        m = len(self.elements)
        for i, j in self.leq:
            if not (0 <= i < m and 0 <= j < m):
                raise ValueError(f"leq pair [{i}, {j}] references an element outside 0..{m - 1}")
        if self.top is not None and not 0 <= self.top < m:
            raise ValueError(f"top {self.top} is outside 0..{m - 1}")
        return self
