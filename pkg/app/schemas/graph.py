from typing import List, Tuple

from pydantic import Field, field_validator

from app.schemas.base import BaseSchema, FrozenSchema


class DegreeConstraint(FrozenSchema):
    '''Maximum tree degree applied uniformly to every node'''
    dmax: int = Field(ge=1, description="Maximum degree per node")

    @classmethod
    def unconstrained(cls, n: int) -> "DegreeConstraint":
        return cls(dmax=max(1, n - 1))

    def is_unconstrained(self, n: int) -> bool:
        return self.dmax >= n - 1


class GraphDocument(BaseSchema):
    '''Edge-list graph as exchanged over the HTTP API'''
    n: int = Field(ge=2)
    edges: List[Tuple[int, int, int]]

    @field_validator('edges')
    def validate_non_empty(cls, v: List[Tuple[int, int, int]]) -> List[Tuple[int, int, int]]:
        """A connected graph of two or more nodes has at least one edge"""
        if not v:
            raise ValueError("edge list cannot be empty")
        return v


class GenerateRequest(BaseSchema):
    '''Parameters of the random instance generator'''
    n: int = Field(ge=2, le=4096)
    density: float = Field(gt=0.0, le=1.0)
    seed: int = Field(ge=0, lt=2**64)
