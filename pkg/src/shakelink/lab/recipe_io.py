"""Recipe files: JSON ``{name, params, steps}`` validated against ``recipe.schema.json``."""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from functools import cache
from importlib import resources
from pathlib import Path

import jsonschema

from ..construct import (
    BandSpec,
    ConstructionError,
    MultidiskSpec,
    OrientationPattern,
    RouteStep,
    band_sum,
    cable_component,
    closure,
    infect,
    mirror,
    r_shaking,
    reverse,
    split_union,
    sublink,
)
from ..gauss import braid_permutation
from ..pd import DiagramError, LinkDiagram, StringLinkDiagram, parse_pd
from . import fixtures as fx
from . import recipes
from .recipes import ConcordancePairReport


class RecipeSchemaError(ValueError):
    """The recipe file is not valid input (exit code 2)."""


class RecipePreconditionError(ConstructionError):
    """A step's inputs do not satisfy its preconditions (exit code 1)."""


@dataclass(frozen=True)
class Recipe:
    name: str
    params: dict = field(default_factory=dict)
    steps: tuple[dict, ...] = ()


@cache
def schema() -> dict:
    return json.loads(resources.files(__package__).joinpath("recipe.schema.json").read_text("utf-8"))


def parse_recipe(data) -> Recipe:
    try:
        jsonschema.Draft202012Validator(schema()).validate(data)
    except jsonschema.ValidationError as exc:
        where = "/".join(map(str, exc.absolute_path)) or "<root>"
        raise RecipeSchemaError(f"recipe schema violation at {where}: {exc.message}") from None
    return Recipe(data["name"], data.get("params", {}), tuple(data.get("steps", ())))


def load_recipe(path: str | Path) -> Recipe:
    try:
        text = Path(path).read_text("utf-8")
    except OSError as exc:
        raise RecipeSchemaError(f"cannot read recipe {path}: {exc.strerror}") from None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise RecipeSchemaError(f"recipe {path} is not JSON: {exc}") from None
    return parse_recipe(data)


# ---------------------------------------------------------------- inputs

def resolve_string_link(spec) -> StringLinkDiagram:
    if isinstance(spec, str):
        if spec in fx.KNOTS:
            return fx.knot(spec)
        if spec in fx.STRING_LINKS:
            return fx.STRING_LINKS[spec]()
        raise RecipeSchemaError(f"unknown string link {spec!r}; choose from {sorted({*fx.KNOTS, *fx.STRING_LINKS})}")
    if "pd" in spec:
        try:
            d = parse_pd(spec["pd"])
        except DiagramError as exc:
            raise RecipeSchemaError(f"inline PD: {exc}") from None
        if not isinstance(d, StringLinkDiagram):
            raise RecipeSchemaError("inline PD must describe a string link")
        return d
    word = spec["braid"]
    n = spec.get("strands", max((abs(x) for x in word), default=0) + 1)
    if any(abs(x) >= n for x in word):
        raise RecipeSchemaError(f"braid letter out of range for {n} strands")
    if braid_permutation(n, word) == list(range(n)):
        return fx.string_link(n, word)
    try:
        return fx.long_knot(n, word)
    except DiagramError:
        raise RecipeSchemaError("braid is neither pure nor closes to a knot") from None


def _multidisk(spec) -> MultidiskSpec:
    return MultidiskSpec(tuple(tuple((a, s) for a, s in disk) for disk in spec))


# ---------------------------------------------------------------- generic steps

def _need(value, kind, op):
    if not isinstance(value, kind):
        want = "link" if kind is LinkDiagram else "string link"
        raise RecipePreconditionError(f"step {op}: expected a {want}, got {type(value).__name__}")
    return value


def _step(op: str, ins: list, args: dict, rng: random.Random):
    if op == "fixture":
        try:
            return fx.fixture(args["name"], resolve_string_link(args["knot"]) if "knot" in args else None, args.get("m"))
        except fx.UnknownFixture as exc:
            raise RecipeSchemaError(str(exc.args[0])) from None
    if op == "string_link":
        return resolve_string_link(args["link"])
    if op == "random_string_link":
        return fx.random_string_link(rng, args.get("strands"), args.get("max_crossings", 6))
    if op == "closure":
        return closure(_need(ins[0], StringLinkDiagram, op))
    if op == "split_union":
        return split_union(_need(ins[0], LinkDiagram, op), _need(ins[1], LinkDiagram, op))
    if op == "mirror":
        return mirror(ins[0])
    if op == "reverse":
        return reverse(_need(ins[0], LinkDiagram, op), args["component"])
    if op == "sublink":
        return sublink(_need(ins[0], LinkDiagram, op), args["keep"])
    if op == "cable_component":
        pattern = OrientationPattern(tuple(args["orientations"]))
        return cable_component(_need(ins[0], LinkDiagram, op), args["component"], pattern, args.get("framing", 0))
    if op == "r_shaking":
        return r_shaking(_need(ins[0], LinkDiagram, op), args["n"], args.get("framing", 0))
    if op == "band_sum":
        core = resolve_string_link(args["core"]) if "core" in args else None
        band = BandSpec(
            tuple((a, s) for a, s in args["endpoints"]),
            tuple(RouteStep(a, o, s) for a, o, s in args.get("route", ())),
            args.get("half_twists", 0),
            core,
        )
        return band_sum(_need(ins[0], LinkDiagram, op), band)
    if op == "infect":
        return infect(_need(ins[0], LinkDiagram, op), _multidisk(args["multidisk"]), _need(ins[1], StringLinkDiagram, op))
    raise RecipeSchemaError(f"unknown op {op!r}")


def run_steps(steps, seed: int = 0) -> dict:
    rng = random.Random(seed)
    env: dict = {}
    for n, step in enumerate(steps, start=1):
        op = step["op"]
        missing = [x for x in step.get("in", ()) if x not in env]
        if missing:
            raise RecipePreconditionError(f"step {n} ({op}): undefined input {', '.join(missing)}")
        try:
            env[step["out"]] = _step(op, [env[x] for x in step.get("in", ())], step.get("args", {}), rng)
        except RecipeSchemaError:
            raise
        except DiagramError as exc:
            raise RecipePreconditionError(f"step {n} ({op}): {exc}") from None
    return env


# ---------------------------------------------------------------- dispatch

def run_recipe(recipe: Recipe, seed: int = 0) -> ConcordancePairReport:
    p = recipe.params
    max_len = p.get("max_len")
    kw = {} if max_len is None else {"max_len": max_len}
    try:
        if recipe.name == "crossing_change":
            return recipes.crossing_change_recipe(resolve_string_link(p["knot"]), p["crossing"], p.get("half_twists", 0), **kw)
        if recipe.name == "strong_shake_hopf":
            return recipes.strong_shake_hopf_recipe(resolve_string_link(p["knot"]), **kw)
        if recipe.name == "lemma41":
            return recipes.lemma41_recipe(fx.unlink(p["m"]), resolve_string_link(p["string_link"]), _multidisk(p["multidisk"]), **kw)
        if recipe.name == "fig11":
            return recipes.fig11_recipe(**kw)
    except RecipeSchemaError:
        raise
    except DiagramError as exc:
        raise RecipePreconditionError(f"{recipe.name}: {exc}") from None
    env = run_steps(recipe.steps, seed)
    for key in ("before", "after"):
        if p[key] not in env:
            raise RecipePreconditionError(f"{key} names {p[key]!r}, which no step produces")
    before = _need(env[p["before"]], LinkDiagram, "report")
    after = _need(env[p["after"]], LinkDiagram, "report")
    profile = p["profile"]
    if len(profile[0]) != before.m or len(profile[1]) != after.m:
        raise RecipePreconditionError("profile lengths must match the component counts of before and after")
    return recipes.make_report("generic", before, after, profile, **kw)
