from __future__ import annotations

"""JSON schemas for polynomials.

Coefficients travel as decimal strings because chain counts overflow 64-bit
integers for modest ground sets.
"""

import re
from typing import Dict, List

from pydantic import BaseModel, Field, field_validator

__all__ = [
    "TermModel",
    "PolynomialModel",
]

_VAR_NAME = re.compile(r"^(?:[xyuvab][1-9]\d*|[stz]1?)$")


class TermModel(BaseModel):
    exp: Dict[str, int] = Field(default_factory=dict, description="Variable name to (possibly negative) exponent.")
    coeff: str = Field(description="Non-zero integer coefficient as a decimal string.")

    @field_validator("exp")
    @classmethod
    def _check_names(cls, value: Dict[str, int]) -> Dict[str, int]:
        for name in value:
            if not _VAR_NAME.match(name):
                raise ValueError(f"invalid variable name {name!r}")
        return value

    @field_validator("coeff")
    @classmethod
    def _check_coeff(cls, value: str) -> str:
        int(value)
        return value


class PolynomialModel(BaseModel):
    """Terms in canonical order."""

    terms: List[TermModel] = Field(default_factory=list)
