from pydantic import Field

from app.schemas.base import FrozenSchema

NO_MOVE_DELTA = (1 << 63) - 1


class PaoMove(FrozenSchema):
    '''
    One Preserve Ancestor Operator outcome: move the subtree rooted at
    prune_node from old_parent to attach_node.
    '''
    prune_index: int = Field(ge=1, description="Index of prune_node in the source tree; never the root")
    prune_node: int = Field(ge=0)
    old_parent: int = Field(ge=0)
    attach_node: int = Field(ge=0)
    delta: int = Field(description="w(attach_node, prune_node) - w(old_parent, prune_node)")
    seed: int = Field(ge=0, lt=2**64, description="PRNG seed that produced this move")


class TrialResult(FrozenSchema):
    '''Best move of a trial range, identified by the trial that produced it'''
    trial_index: int = Field(ge=0)
    move: PaoMove

    @property
    def sort_key(self) -> tuple:
        return (self.move.delta, self.trial_index)
