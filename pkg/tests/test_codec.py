import json

import pytest
from pydantic import ValidationError

from adapters.json_codec import (
    dump_gadget,
    dump_structure,
    formula_model,
    gadget_model,
    load_any_structure,
    load_formula,
    load_gadget,
    load_lpath,
    load_structure,
    lpath_model,
    mined_model,
    parse,
    to_canonical_json,
    witness_model,
)
from core.errors import InvalidStructure
from core.graph import directed_path, subdivided_clique, tournament, undirected_cycle
from core.structure import APoint, BPoint, Inner, Native, Plain, Shared, Structure, make_graph
from density.clique import detect_subdivided_clique
from density.miner import mine_gadget
from gadget.fixtures import TERNARY, fixture_paths, path_gadget
from gadget.star import star
from logic.paths import is_lpath
from logic.pp import PPFormula
from shared.models import ColouringModel, MinedGadgetModel, StructureModel, tag_from_json, tag_to_json


def test_canonical_form_is_sorted_and_compact():
    text = dump_structure(make_graph(2, [(1, 0), (0, 1)]))
    assert text == '{"relations":{"E":[[0,1],[1,0]]},"signature":[{"arity":2,"name":"E"}],"size":2}'


def test_labels_survive_a_round_trip():
    g = make_graph(2, [(0, 1)], ["s", "t"])
    back = load_structure(dump_structure(g))
    assert back == g and back.labels == ("s", "t")


def test_structure_validation():
    with pytest.raises(ValidationError):
        load_structure('{"signature":[{"name":"E","arity":2}],"size":2,"relations":{"E":[[0,2]]}}')
    with pytest.raises(ValidationError):
        load_structure('{"signature":[{"name":"E","arity":2}],"size":2,"relations":{"E":[[0,1],[0,1]]}}')
    with pytest.raises(ValidationError):
        load_structure('{"signature":[{"name":"E","arity":2}],"size":2,"relations":{"E":[[0]]}}')
    with pytest.raises(ValidationError):
        load_structure('{"signature":[{"name":"E","arity":2}],"size":1,"colour":"red"}')
    with pytest.raises(ValidationError):
        load_structure("not json")


@pytest.mark.parametrize(
    "tag,data",
    [
        (Native(3), {"native": 3}),
        (Shared(1), {"shared": 1}),
        (APoint(0, 4), {"a": [0, 4]}),
        (BPoint(2, 5), {"b": [2, 5]}),
        (Inner(0, 1, 2), {"inner": [0, 1, 2]}),
        (Plain(7), {"plain": 7}),
    ],
)
def test_tag_json(tag, data):
    assert tag_to_json(tag) == data
    assert tag_from_json(data) == tag


def test_bad_tags():
    with pytest.raises(ValueError):
        tag_from_json({"corner": 1})
    with pytest.raises(ValueError):
        tag_from_json({"inner": [0, 1]})


def test_tagged_structures_load_with_their_tags():
    built = star(directed_path(1), path_gadget(1))
    s, tags = load_any_structure(dump_structure(built.structure, built.tags))
    assert s == built.structure
    assert list(tags) == list(built.tags)


def test_repeated_tags_are_rejected():
    built = subdivided_clique(2, 1)
    data = json.loads(dump_structure(built.structure, built.tags))
    data["tags"][1] = data["tags"][0]
    with pytest.raises(ValidationError):
        load_any_structure(json.dumps(data))


def test_any_structure_accepts_gadgets_and_plain_structures(ternary):
    s, tags = load_any_structure(dump_gadget(ternary))
    assert s == ternary.carrier and tags is None
    s, tags = load_any_structure(dump_structure(ternary.carrier))
    assert s == ternary.carrier and tags is None


def test_gadget_round_trip(marked):
    assert load_gadget(dump_gadget(marked)) == marked
    assert gadget_model(marked).P == [5]


def test_gadget_rules_apply_on_load(path1):
    data = json.loads(dump_gadget(path1))
    data["beta"] = data["alpha"]
    with pytest.raises(Exception, match="alpha"):
        load_gadget(json.dumps(data))


def test_formula_round_trip():
    phi = PPFormula(make_graph(3, [(1, 0), (0, 2)]), (0,))
    assert load_formula(to_canonical_json(formula_model(phi))) == phi


def test_lpath_model():
    s, p = fixture_paths()["ternary-system"]
    model = lpath_model(is_lpath(s, p))
    assert model.p == [0, 2, 1]
    assert [(step.rel, step.tuple) for step in model.steps] == [("R", [0, 2, 3]), ("R", [2, 1, 4])]
    back = load_lpath(to_canonical_json(model))
    assert back.carrier == s and back.steps == (("R", (0, 2, 3)), ("R", (2, 1, 4)))


def test_lpath_steps_are_checked_on_load():
    s, p = fixture_paths()["ternary-system"]
    model = lpath_model(is_lpath(s, p))
    swapped = model.model_copy(update={"steps": list(reversed(model.steps))})
    with pytest.raises(InvalidStructure, match="with steps"):
        load_lpath(to_canonical_json(swapped))
    # no steps listed: the chain is searched for
    assert load_lpath(to_canonical_json(model.model_copy(update={"steps": []}))).steps == is_lpath(s, p).steps


def test_witness_model_keys():
    w = detect_subdivided_clique(undirected_cycle(6), 3, 1)
    model = witness_model(w)
    assert sorted(model.paths) == ["0-1", "0-2", "1-2"]
    assert all(len(path) == 3 for path in model.paths.values())


def test_mined_model_validates():
    mined = mine_gadget(star(tournament(3), path_gadget(1)).structure, 3, 1)
    text = to_canonical_json(mined_model(mined))
    model = parse(text, MinedGadgetModel)
    assert model.verified_m == mined.verified_m
    assert model.system.alpha == mined.system.alpha


def test_colouring_model():
    model = parse('{"n":3,"colouring":{"0-1":1,"0-2":"x","1-2":1}}', ColouringModel)
    assert model.colouring["0-2"] == "x"


def test_ternary_structure_model():
    s = Structure(TERNARY, 3, {"R": {(2, 1, 0), (0, 1, 2)}})
    assert StructureModel.from_structure(s).relations == {"R": [[0, 1, 2], [2, 1, 0]]}
