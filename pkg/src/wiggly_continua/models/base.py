"""
Base models for serialised wiggly-continua artefacts.

Every document written to disk (dataset headers, reports, corpus tables)
is built from these models so that reading a file back validates it and
rejects unknown fields.
"""

from typing import Any

from pydantic import BaseModel, ConfigDict


class ReportModel(BaseModel):
    """
    Base model for all serialised artefacts.

    Unknown fields are rejected so that a report read from disk is known to
    match the schema it was written with.
    """

    model_config = ConfigDict(extra="forbid")

    def to_simplified_dict(self) -> dict[str, Any]:
        """
        Convert the model to a simplified dictionary.

        Returns:
            A dictionary without unset optional fields
        """
        return self.model_dump(exclude_none=True)
