"""JSON input documents for the constructions."""

from typing import Any, Dict, List, Union

from pydantic import BaseModel, ConfigDict, Field, field_validator
from pydantic import ValidationError as PydanticValidationError

from construct.minimal import MinimalStageInput
from core.exceptions import ValidationError
from tableau.io import RationalText


class MinimalStageDocument(BaseModel):
    """{"A22": [[...]], "A33": [[...]], "c": [...], "p": int, "q": int}."""

    model_config = ConfigDict(extra="forbid")

    A22: List[List[RationalText]] = Field(default_factory=list)
    A33: List[List[RationalText]] = Field(default_factory=list)
    c: List[RationalText]
    p: int = Field(ge=1)
    q: int = Field(ge=2)

    @field_validator("A22", "A33")
    @classmethod
    def _rows_as_text(cls, rows):
        return [[str(value) for value in row] for row in rows]

    @field_validator("c")
    @classmethod
    def _as_text(cls, values):
        return [str(value) for value in values]

    def to_input(self) -> MinimalStageInput:
        return MinimalStageInput.build(A22=self.A22, A33=self.A33, c=self.c, p=self.p, q=self.q)


def parse_minimal_input(document: Union[str, Dict[str, Any]]) -> MinimalStageInput:
    """
    Validate a minimal-stage construction document.

    Raises:
        ValidationError: malformed document or inconsistent free parameters
    """
    try:
        if isinstance(document, str):
            parsed = MinimalStageDocument.model_validate_json(document)
        else:
            parsed = MinimalStageDocument.model_validate(document)
    except PydanticValidationError as e:
        raise ValidationError(f"Invalid construction document: {e.errors()[0]['msg']}", field="spec")
    return parsed.to_input()
