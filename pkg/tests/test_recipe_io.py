import json
from pathlib import Path

import pytest

from shakelink.lab.recipe_io import (
    RecipePreconditionError,
    RecipeSchemaError,
    load_recipe,
    parse_recipe,
    resolve_string_link,
    run_recipe,
)

RECIPES = Path(__file__).resolve().parents[1] / "recipes"


@pytest.mark.parametrize("path", sorted(p.name for p in RECIPES.glob("*.json") if not p.name.startswith("invalid")))
def test_shipped_recipes_pass(path):
    rep = run_recipe(load_recipe(RECIPES / path), seed=0)
    assert rep.passed


def test_same_component_band_is_a_precondition_failure():
    with pytest.raises(RecipePreconditionError, match="same component"):
        run_recipe(load_recipe(RECIPES / "invalid_same_component_band.json"))


@pytest.mark.parametrize(
    "data",
    [
        {},
        {"name": "nope"},
        {"name": "crossing_change", "params": {"knot": "trefoil"}},
        {"name": "crossing_change", "params": {"knot": "trefoil", "crossing": -1}},
        {"name": "lemma41", "params": {"m": 2, "string_link": "clasp", "multidisk": [[[1, 2]]]}},
        {"name": "generic", "params": {"before": "a", "after": "b", "profile": [[1], [1]]}, "steps": []},
        {"name": "generic", "params": {"before": "a", "after": "a", "profile": [[1], [1]]},
         "steps": [{"op": "closure", "out": "a"}]},
        {"name": "generic", "params": {"before": "a", "after": "a", "profile": [[1], [1]]},
         "steps": [{"op": "reverse", "in": ["x"], "out": "a", "args": {}}]},
        {"name": "fig11", "extra": 1},
    ],
)
def test_schema_violations(data):
    with pytest.raises(RecipeSchemaError):
        parse_recipe(data)


def test_unreadable_and_non_json(tmp_path):
    with pytest.raises(RecipeSchemaError):
        load_recipe(tmp_path / "missing.json")
    bad = tmp_path / "bad.json"
    bad.write_text("{", "utf-8")
    with pytest.raises(RecipeSchemaError):
        load_recipe(bad)


def test_unknown_string_link_name():
    with pytest.raises(RecipeSchemaError):
        run_recipe(parse_recipe({"name": "strong_shake_hopf", "params": {"knot": "granny"}}))


def test_string_link_forms():
    assert resolve_string_link({"braid": [1, 1, 1]}).m == 1
    assert resolve_string_link({"braid": [1, 1]}).m == 2
    pd = "stringlink m=1\nE bottom 1 1\nE top 1 1\n"
    assert resolve_string_link({"pd": pd}).m == 1
    with pytest.raises(RecipeSchemaError):
        resolve_string_link({"braid": [1], "strands": 3})
    with pytest.raises(RecipeSchemaError):
        resolve_string_link({"pd": "link m=1\nO 1\n"})


def test_generic_steps_and_seed():
    data = json.loads((RECIPES / "generic_random_infection.json").read_text("utf-8"))
    recipe = parse_recipe(data)
    a, b = run_recipe(recipe, seed=11), run_recipe(recipe, seed=11)
    assert a.lines() == b.lines()
    undefined = dict(data, steps=data["steps"][:2] + [dict(data["steps"][2], **{"in": ["base", "K"]})])
    with pytest.raises(RecipePreconditionError, match="undefined"):
        run_recipe(parse_recipe(undefined))


def test_generic_type_and_profile_checks():
    wrong_type = {
        "name": "generic",
        "params": {"before": "a", "after": "a", "profile": [[1], [1]]},
        "steps": [{"op": "fixture", "out": "h", "args": {"name": "hopf"}}, {"op": "closure", "in": ["h"], "out": "a"}],
    }
    with pytest.raises(RecipePreconditionError, match="string link"):
        run_recipe(parse_recipe(wrong_type))
    bad_profile = {
        "name": "generic",
        "params": {"before": "h", "after": "h", "profile": [[1], [1]]},
        "steps": [{"op": "fixture", "out": "h", "args": {"name": "hopf"}}],
    }
    with pytest.raises(RecipePreconditionError, match="profile"):
        run_recipe(parse_recipe(bad_profile))
    even = dict(bad_profile, params={"before": "h", "after": "h", "profile": [[1, 2], [1, 1]]})
    assert not run_recipe(parse_recipe(even)).passed
