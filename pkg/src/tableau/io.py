"""JSON tableau documents."""

import json
from typing import Any, Dict, List, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, field_validator
from pydantic import ValidationError as PydanticValidationError

from core.exceptions import ValidationError
from tableau.model import Tableau
from utils.helpers import fraction_text

RationalText = Union[str, int, float]


class TableauDocument(BaseModel):
    """Wire form of a tableau: every number is a rational or decimal string."""

    model_config = ConfigDict(extra="forbid", populate_by_name=True)

    name: str = ""
    A: List[List[RationalText]]
    b: List[RationalText]
    c: Optional[List[RationalText]] = None
    claimed_order: Optional[int] = Field(default=None, ge=1)
    claimed_wso: Optional[int] = Field(default=None, ge=1)

    @field_validator("b", "c")
    @classmethod
    def _as_text(cls, values):
        return None if values is None else [str(value) for value in values]

    @field_validator("A")
    @classmethod
    def _rows_as_text(cls, rows):
        return [[str(value) for value in row] for row in rows]

    def to_tableau(self) -> Tableau:
        return Tableau.build(
            A=self.A,
            b=self.b,
            c=self.c,
            name=self.name,
            claimed_order=self.claimed_order,
            claimed_wso=self.claimed_wso,
        )


def load_document(document: Union[str, Dict[str, Any]]) -> TableauDocument:
    try:
        if isinstance(document, str):
            return TableauDocument.model_validate_json(document)
        return TableauDocument.model_validate(document)
    except PydanticValidationError as e:
        raise ValidationError(f"Invalid tableau document: {e.errors()[0]['msg']}", field="document")


def parse_tableau(document: Union[str, Dict[str, Any]]) -> Tableau:
    """
    Parse and validate a JSON tableau document.

    Args:
        document: JSON text (or an already decoded mapping)

    Returns:
        Tableau: validated tableau; c defaults to A e when absent

    Raises:
        ValidationError: malformed document or rational literal
        TableauStructureError: A not strictly lower triangular, or c != A e
    """
    return load_document(document).to_tableau()


def tableau_document(tableau: Tableau) -> Dict[str, Any]:
    """Mapping in the document format, entries rendered as 'p/q'."""
    document = {
        "name": tableau.name,
        "A": [[fraction_text(value) for value in row] for row in tableau.A.tolist()],
        "b": [fraction_text(value) for value in tableau.b],
        "c": [fraction_text(value) for value in tableau.c],
    }
    if tableau.claimed_order is not None:
        document["claimed_order"] = tableau.claimed_order
    if tableau.claimed_wso is not None:
        document["claimed_wso"] = tableau.claimed_wso
    return document


def export_tableau(tableau: Tableau) -> str:
    return json.dumps(tableau_document(tableau), indent=2)
