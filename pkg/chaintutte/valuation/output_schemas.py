from __future__ import annotations

"""JSON schema for valuation check reports."""

from typing import Any, Optional

from pydantic import BaseModel, Field

__all__ = [
    "ValuationReport",
]


class ValuationReport(BaseModel):
    invariant: str = Field(description="Registered invariant id")
    k: Optional[int] = Field(default=None, description="Chain length, for chain invariants")
    holds: bool = Field(description="Whether f(P) equals the inclusion-exclusion sum over the nerve")
    lhs: Any = Field(description="f of the big matroid, JSON-encoded")
    rhs: Any = Field(description="Alternating sum over the non-empty faces, JSON-encoded")
    faces: int = Field(default=0, description="Number of non-empty faces summed over")
