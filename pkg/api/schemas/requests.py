"""Request bodies."""

from typing import List, Literal, Optional

from pydantic import BaseModel, Field


class ReduceRequest(BaseModel):
    """Word reduction request."""

    n: int = Field(..., ge=1, description="Rank parameter of S_n")
    word: List[int] = Field(..., description="Generator indices, 1-based")
    budget: Optional[int] = Field(default=None, ge=1, description="Step budget")


class CohomologyRequest(BaseModel):
    """Cohomology report request."""

    n: int = Field(..., ge=1)
    q: int = Field(..., ge=2, description="Order of the finite field")
    word: List[int] = Field(..., min_length=1)
    coeff: Literal["structure", "canonical", "modp", "zp"] = "structure"
    variety: Literal["compactified", "open"] = "compactified"
    p: Optional[int] = Field(default=None, description="Defaults to the characteristic of F_q")
    m: Optional[int] = Field(default=None, ge=1)
    cross_check: bool = False


class ComplexRequest(BaseModel):
    """Complex export request."""

    n: int = Field(..., ge=1)
    q: int = Field(..., ge=2)
    word: List[int] = Field(..., min_length=1)
    p: Optional[int] = None
    m: Optional[int] = Field(default=None, ge=1)
    homology: bool = False
