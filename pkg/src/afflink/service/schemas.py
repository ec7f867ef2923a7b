"""Pydantic request models for the service endpoints.

Weights, roots and boxes mirror the library's JSON wire format; rationals
are "p/q" strings (plain integers are accepted on input).
"""

from __future__ import annotations

from typing import Literal, Optional, Union

from pydantic import BaseModel, Field

Rational = Union[str, int]


class WeightModel(BaseModel):
    labels: list[Rational]
    level: Rational = "0"
    degree: Rational = "0"


class RootModel(BaseModel):
    kind: Literal["real", "imaginary"] = "real"
    finite: list[int] = Field(default_factory=list)
    n: int = 0


class BoxModel(BaseModel):
    tops: list[WeightModel]
    depth: int = 0


class TypeRequest(BaseModel):
    type: str


class PairRequest(TypeRequest):
    weight: WeightModel
    root: RootModel


class ReflectRequest(TypeRequest):
    weight: WeightModel
    root: RootModel


class LeqRequest(TypeRequest):
    lower: WeightModel
    upper: WeightModel


class BoxRequest(TypeRequest):
    box: BoxModel


class IntegralityRequest(TypeRequest):
    weight: WeightModel


class KKRequest(TypeRequest):
    weight: WeightModel
    fiber: str = "closed"
    box: Optional[BoxModel] = None  # defaults to tops=[weight]
    depth: int = 0


class ClassRequest(KKRequest):
    restricted: bool = False


class AlphaDownRequest(TypeRequest):
    weight: WeightModel
    alpha: list[int]
    box: Optional[BoxModel] = None
    depth: int = 0


class PartitionRequest(TypeRequest):
    gamma: WeightModel


class CharacterRequest(TypeRequest):
    weight: WeightModel
    box: Optional[BoxModel] = None
    depth: int = 0


class ProjRequest(TypeRequest):
    weight: WeightModel
    fiber: str = "subgeneric:1"
    box: Optional[BoxModel] = None
    depth: int = 0
    restricted: bool = False


class DecompRequest(TypeRequest):
    fiber: str
    box: BoxModel
