from __future__ import annotations

"""JSON schemas for derived invariants.

Integers travel as decimal strings, rank vectors as comma-joined keys::

    {"n": 3, "counts": {"1,1,0": 6}}
"""

from typing import Dict

from pydantic import BaseModel, Field, field_validator

__all__ = [
    "GInvariantModel",
    "EvaluationPair",
    "ConstantEvaluations",
    "ExpectedCodimReport",
]


class GInvariantModel(BaseModel):
    n: int = Field(ge=0, description="Ground set size")
    counts: Dict[str, int] = Field(default_factory=dict, description="Rank vector (comma-joined) to multiplicity.")

    @field_validator("counts")
    @classmethod
    def _check_keys(cls, value: Dict[str, int]) -> Dict[str, int]:
        for key in value:
            if key and not all(part.strip().lstrip("-").isdigit() for part in key.split(",")):
                raise ValueError(f"invalid rank vector key {key!r}")
        return value


class EvaluationPair(BaseModel):
    tutte: str = Field(description="Value read off the chain Tutte polynomial")
    direct: str = Field(description="Value from the direct combinatorial count")

    @property
    def agrees(self) -> bool:
        return self.tutte == self.direct


class ConstantEvaluations(BaseModel):
    """Special evaluations of ``T^k`` next to the counts they enumerate."""

    k: int = Field(ge=1)
    num_bases: EvaluationPair = Field(description="T^k(1..1; 1..1) against |bases|")
    num_independent: EvaluationPair = Field(description="T^1(2; 1) against |independent sets|")
    chain_independent: EvaluationPair = Field(description="T^k(2..2; 1..1) against sum_m k^m I_m")
    sum_2m_Im: EvaluationPair = Field(description="T^2(2,2; 1,1) against sum_m 2^m I_m")
    spanning_pair: EvaluationPair = Field(description="T^2(1,1; 2,2) against nested spanning pairs")
    eval_2112: EvaluationPair = Field(description="T^2(2,1; 1,2) against independent sets inside spanning sets")
    bases_1221: EvaluationPair = Field(description="T^2(1,2; 2,1) against |bases|")
    eval_1100_parity_pair: EvaluationPair = Field(description="T^k(1..1; 0..0) against 1 or the Möbius value")
    euler_pair: EvaluationPair = Field(description="T^k(0..0; 1..1) against 1 or the reduced Euler characteristic")

    def disagreements(self) -> Dict[str, EvaluationPair]:
        return {
            name: pair
            for name, pair in ((name, getattr(self, name)) for name in type(self).model_fields if name != "k")
            if not pair.agrees
        }


class ExpectedCodimReport(BaseModel):
    direct: int
    derivative: int
    recursion: int

    @property
    def agrees(self) -> bool:
        return self.direct == self.derivative == self.recursion
