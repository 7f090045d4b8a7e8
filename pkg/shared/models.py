"""
Wire models for the JSON formats. Every model validates on load and converts
to and from the core types; tuples are always emitted sorted.
"""

from __future__ import annotations

from pydantic import BaseModel, ConfigDict, Field, model_validator

from core.structure import (
    APoint,
    BPoint,
    Inner,
    LabelTable,
    Native,
    Plain,
    Shared,
    Signature,
    Structure,
    Symbol,
    Tag,
    validate,
)


class SymbolModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    name: str
    arity: int = Field(ge=1)


class StructureModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    signature: list[SymbolModel]
    size: int = Field(ge=0)
    labels: list[str] | None = None
    relations: dict[str, list[list[int]]] = Field(default_factory=dict)

    @model_validator(mode="after")
    def _well_formed(self) -> StructureModel:
        for name, tuples in self.relations.items():
            if len({tuple(t) for t in tuples}) != len(tuples):
                raise ValueError(f"duplicate tuple in relation {name!r}")
        problems = validate(self.to_structure())
        if problems:
            raise ValueError("; ".join(problems))
        return self

    def to_structure(self) -> Structure:
        signature = Signature(tuple(Symbol(s.name, s.arity) for s in self.signature))
        relations = {name: {tuple(t) for t in ts} for name, ts in self.relations.items()}
        return Structure(signature, self.size, relations, tuple(self.labels) if self.labels is not None else None)

    @classmethod
    def structure_fields(cls, s: Structure) -> dict:
        return {
            "signature": [SymbolModel(name=x.name, arity=x.arity) for x in s.signature],
            "size": s.size,
            "labels": list(s.labels) if s.labels is not None else None,
            "relations": {name: [list(t) for t in sorted(ts)] for name, ts in s.relations.items()},
        }

    @classmethod
    def from_structure(cls, s: Structure) -> StructureModel:
        return cls(**cls.structure_fields(s))


# --- Tags ---

def tag_to_json(tag: Tag) -> dict[str, int | list[int]]:
    match tag:
        case Native(g):
            return {"native": g}
        case Shared(p):
            return {"shared": p}
        case APoint(u, a):
            return {"a": [u, a]}
        case BPoint(v, b):
            return {"b": [v, b]}
        case Inner(u, v, c):
            return {"inner": [u, v, c]}
        case Plain(i):
            return {"plain": i}
    raise TypeError(f"not a tag: {tag!r}")


def tag_from_json(data: dict[str, int | list[int]]) -> Tag:
    (kind, value), = data.items()
    builders = {"native": Native, "shared": Shared, "a": APoint, "b": BPoint, "inner": Inner, "plain": Plain}
    if kind not in builders:
        raise ValueError(f"unknown tag kind {kind!r}")
    try:
        return builders[kind](*value) if isinstance(value, list) else builders[kind](value)
    except TypeError:
        raise ValueError(f"malformed {kind} tag: {value!r}") from None


class TaggedStructureModel(StructureModel):
    tags: list[dict[str, int | list[int]]]

    @model_validator(mode="after")
    def _tags_cover_domain(self) -> TaggedStructureModel:
        if len(self.tags) != self.size:
            raise ValueError(f"{len(self.tags)} tags for size {self.size}")
        if len({tag_from_json(t) for t in self.tags}) != self.size:
            raise ValueError("label table repeats a tag")
        return self

    def to_tags(self) -> LabelTable:
        return LabelTable(tuple(tag_from_json(t) for t in self.tags))


class GadgetModel(StructureModel):
    alpha: int
    beta: int
    A: list[int] = Field(default_factory=list)
    B: list[int] = Field(default_factory=list)
    P: list[int] = Field(default_factory=list)


class PPFormulaModel(StructureModel):
    free: list[int]


class StepModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    rel: str
    tuple: list[int]


class LPathModel(StructureModel):
    p: list[int]
    steps: list[StepModel] = Field(default_factory=list)


class CliqueWitnessModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    natives: list[int]
    paths: dict[str, list[int]]


class StageModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    stage: str
    ok: bool
    detail: str


class MinedGadgetModel(GadgetModel):
    verified_m: int
    natives: list[int]
    stages: list[StageModel]
    system: GadgetModel


class ColouringModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    n: int
    colouring: dict[str, int | str]
