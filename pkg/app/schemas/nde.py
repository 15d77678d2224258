from enum import Enum
from typing import Optional

from app.schemas.base import BaseSchema


class ViolationKind(str, Enum):
    LENGTH_MISMATCH = "LengthMismatch"
    ROOT_DEPTH = "RootDepth"
    NODE_OUT_OF_RANGE = "NodeOutOfRange"
    DUPLICATE_NODE = "DuplicateNode"
    DEPTH_STEP = "DepthStep"
    NOT_A_GRAPH_EDGE = "NotAGraphEdge"
    WEIGHT_MISMATCH = "WeightMismatch"
    DEGREE_MISMATCH = "DegreeMismatch"


class Violation(BaseSchema):
    '''First invariant violation found in a tree'''
    kind: ViolationKind
    index: Optional[int] = None
    detail: str

    def __str__(self) -> str:
        where = f" at index {self.index}" if self.index is not None else ""
        return f"{self.kind.value}{where}: {self.detail}"


class TreeReport(BaseSchema):
    '''Outcome of validating an NdeTree against a graph'''
    violation: Optional[Violation] = None

    @property
    def ok(self) -> bool:
        return self.violation is None
