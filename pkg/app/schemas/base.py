from pydantic import BaseModel, ConfigDict


class BaseSchema(BaseModel):
    """Base schema that all other schemas inherit from.
    Allows building schemas from plain objects' attributes."""
    model_config = ConfigDict(from_attributes=True)


class FrozenSchema(BaseSchema):
    """Immutable, hashable schema for values passed between workers"""
    model_config = ConfigDict(from_attributes=True, frozen=True)
