"""
Canonical JSON (RFC 8785) for structures, gadgets, formulas, paths and
mining results.
"""

from __future__ import annotations

from typing import TypeVar

import rfc8785
from pydantic import BaseModel, TypeAdapter

from core.errors import InvalidStructure
from core.structure import LabelTable, Structure
from density.clique import CliqueWitness
from density.miner import MinedGadget
from gadget.model import Gadget, make_gadget
from logic.paths import LPath, is_lpath
from logic.pp import PPFormula
from shared.models import (
    CliqueWitnessModel,
    GadgetModel,
    LPathModel,
    MinedGadgetModel,
    PPFormulaModel,
    StageModel,
    StepModel,
    StructureModel,
    TaggedStructureModel,
    tag_to_json,
)

M = TypeVar("M", bound=BaseModel)


def to_canonical_json(value: BaseModel | list | dict | int | str) -> str:
    data = value.model_dump(mode="json", exclude_none=True) if isinstance(value, BaseModel) else value
    return rfc8785.dumps(data).decode("utf-8")


def parse(text: str, model: type[M]) -> M:
    return model.model_validate_json(text)


# --- Encoders ---

def structure_model(s: Structure, tags: LabelTable | None = None) -> StructureModel:
    if tags is None:
        return StructureModel.from_structure(s)
    return TaggedStructureModel(**StructureModel.structure_fields(s), tags=[tag_to_json(t) for t in tags])


def gadget_model(g: Gadget) -> GadgetModel:
    return GadgetModel(
        **StructureModel.structure_fields(g.carrier),
        alpha=g.alpha,
        beta=g.beta,
        A=sorted(g.A),
        B=sorted(g.B),
        P=sorted(g.P),
    )


def lpath_model(path: LPath) -> LPathModel:
    return LPathModel(
        **StructureModel.structure_fields(path.carrier),
        p=list(path.p),
        steps=[StepModel(rel=r, tuple=list(t)) for r, t in path.steps],
    )


def formula_model(phi: PPFormula) -> PPFormulaModel:
    return PPFormulaModel(**StructureModel.structure_fields(phi.canonical), free=list(phi.free))


def witness_model(w: CliqueWitness) -> CliqueWitnessModel:
    return CliqueWitnessModel(
        natives=list(w.natives),
        paths={f"{i}-{j}": list(path) for (i, j), path in sorted(w.paths.items())},
    )


def mined_model(result: MinedGadget) -> MinedGadgetModel:
    return MinedGadgetModel(
        **gadget_model(result.gadget).model_dump(),
        verified_m=result.verified_m,
        natives=list(result.natives),
        stages=[StageModel(stage=s.stage, ok=s.ok, detail=s.detail) for s in result.stages],
        system=gadget_model(result.system),
    )


def dump_structure(s: Structure, tags: LabelTable | None = None) -> str:
    return to_canonical_json(structure_model(s, tags))


def dump_gadget(g: Gadget) -> str:
    return to_canonical_json(gadget_model(g))


# --- Decoders ---

def load_structure(text: str) -> Structure:
    return parse(text, StructureModel).to_structure()


_ANY_STRUCTURE = TypeAdapter(TaggedStructureModel | GadgetModel | StructureModel)


def load_any_structure(text: str) -> tuple[Structure, LabelTable | None]:
    """Plain, tagged or gadget JSON; gadgets contribute their carrier."""
    model = _ANY_STRUCTURE.validate_json(text)
    tags = model.to_tags() if isinstance(model, TaggedStructureModel) else None
    return model.to_structure(), tags


def gadget_from_model(model: GadgetModel) -> Gadget:
    return make_gadget(model.to_structure(), model.alpha, model.beta, model.A, model.B, model.P)


def load_gadget(text: str) -> Gadget:
    return gadget_from_model(parse(text, GadgetModel))


def load_formula(text: str) -> PPFormula:
    model = parse(text, PPFormulaModel)
    return PPFormula(model.to_structure(), tuple(model.free))


def load_lpath(text: str) -> LPath:
    """An L-path along p; listed steps must be the chain itself, or none are listed."""
    model = parse(text, LPathModel)
    steps = [(step.rel, tuple(step.tuple)) for step in model.steps] or None
    path = is_lpath(model.to_structure(), model.p, steps)
    if path is None:
        along = f"with steps {steps} " if steps else ""
        raise InvalidStructure(f"not an L-path {along}along {model.p}")
    return path
