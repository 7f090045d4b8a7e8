"""
Command-line surface: constructions, searches and the verification suites.

Exit codes: 0 success, 1 domain error or an aborted prompt, 2 usage error or
unparsable input, 3 verification suite failure.
"""

from __future__ import annotations

from collections.abc import Sequence

import click
from loguru import logger
from pydantic import ValidationError

from adapters.dot import to_dot
from adapters.json_codec import (
    dump_gadget,
    dump_structure,
    formula_model,
    load_any_structure,
    load_formula,
    load_gadget,
    load_lpath,
    mined_model,
    parse,
    to_canonical_json,
    witness_model,
)
from cli.suites import SUITES, Budget, run_suite
from core.constants import DEFAULT_MAX_R, DEFAULT_MAX_VERTICES, DEFAULT_SEED, LOG_FILE, RANDOM_SAMPLES
from core.errors import GadgetError, InvalidStructure
from core.graph import arc_graph, gaifman, subdivide, subdivided_clique, subdivided_half_graph
from core.structure import LabelTable, Structure
from density.canonical import classify_canonical
from density.clique import detect_subdivided_clique, density_profile
from density.miner import mine_gadget
from gadget.star import ostar, star
from hom.engine import HomQuery, count, exists, solve
from hom.morphisms import find_isomorphism, is_rigid
from logic.interpret import gra_spec, reconstruct
from logic.paths import orient_lpath
from logic.pp import pp_components, pp_satisfies
from shared.models import ColouringModel
from utils.logger import setup_logger

CONTEXT = dict(max_content_width=120, help_option_names=["-h", "--help"])
EXIT_DOMAIN, EXIT_USAGE, EXIT_SUITE = 1, 2, 3
EXIT_ABORT = 1  # what click itself exits with on Abort


# --- Output helpers ---

def _emit(text: str, output: str) -> None:
    with click.open_file(output, "w") as fh:
        fh.write(text if text.endswith("\n") else text + "\n")


def _emit_structure(s: Structure, tags: LabelTable | None, fmt: str, output: str) -> None:
    _emit(to_dot(s, tags) if fmt == "dot" else dump_structure(s, tags), output)


def _read(source) -> str:
    return source.read()


def _parse_pins(ctx, param, values: tuple[str, ...]) -> dict[int, int]:
    pins = {}
    for value in values:
        try:
            x, y = (int(part) for part in value.split("=", 1))
        except ValueError:
            raise click.BadParameter(f"expected x=y, got {value!r}") from None
        pins[x] = y
    return pins


output_option = click.option("-o", "--output", default="-", metavar="<path>", help="Output file (default stdout)")
format_option = click.option("--format", "fmt", type=click.Choice(["json", "dot"]), default="json", show_default=True)


@click.group(context_settings=CONTEXT)
@click.option("-v", "--verbose", is_flag=True, help="Log at DEBUG level")
def cli(verbose: bool) -> None:
    """Relational gadgets: star products, homomorphism search and density tools."""
    if verbose:
        setup_logger("DEBUG", LOG_FILE)


# --- Constructions ---

@cli.command("gaifman")
@click.argument("source", type=click.File("r"))
@output_option
@format_option
def gaifman_cmd(source, output: str, fmt: str) -> None:
    """Gaifman graph of a structure."""
    s, _ = load_any_structure(_read(source))
    _emit_structure(gaifman(s), None, fmt, output)


@cli.command()
@click.argument("source", type=click.File("r"))
@output_option
@format_option
def arc(source, output: str, fmt: str) -> None:
    """Arc graph of a directed structure."""
    s, _ = load_any_structure(_read(source))
    _emit_structure(arc_graph(s).graph, None, fmt, output)


@cli.command("subdivide")
@click.argument("source", type=click.File("r"))
@click.option("--r", "r", type=click.IntRange(min=0), required=True)
@click.option("--mode", type=click.Choice(["undirected", "directed"]), default="directed", show_default=True)
@output_option
@format_option
def subdivide_cmd(source, r: int, mode: str, output: str, fmt: str) -> None:
    """Replace every edge by a path of length r+1."""
    g, _ = load_any_structure(_read(source))
    built = subdivide(g, r, mode)
    _emit_structure(built.structure, built.tags, fmt, output)


@cli.command()
@click.option("--n", "n", type=click.IntRange(min=1), required=True)
@click.option("--r", "r", type=click.IntRange(min=0), default=0, show_default=True)
@click.option("--pattern", type=click.Choice(["clique", "half"]), default="clique", show_default=True)
@output_option
@format_option
def clique(n: int, r: int, pattern: str, output: str, fmt: str) -> None:
    """The r-subdivided K_n (or half-graph)."""
    built = subdivided_clique(n, r) if pattern == "clique" else subdivided_half_graph(n, r)
    _emit_structure(built.structure, built.tags, fmt, output)


@cli.command("star")
@click.option("--graph", "graph", type=click.File("r"), required=True)
@click.option("--gadget", "gadget", type=click.File("r"), required=True)
@output_option
@format_option
def star_cmd(graph, gadget, output: str, fmt: str) -> None:
    """G * M with provenance tags."""
    g, _ = load_any_structure(_read(graph))
    built = star(g, load_gadget(_read(gadget)))
    _emit_structure(built.structure, built.tags, fmt, output)


@cli.command("ostar")
@click.option("--left", "left", type=click.File("r"), required=True, help="Simple graph gadget H")
@click.option("--gadget", "gadget", type=click.File("r"), required=True)
@output_option
def ostar_cmd(left, gadget, output: str) -> None:
    """H (*) M as a gadget."""
    _emit(dump_gadget(ostar(load_gadget(_read(left)), load_gadget(_read(gadget)))), output)


@cli.command("phi")
@click.option("--graph", "graph", type=click.File("r"), required=True)
@click.option("--gadget", "gadget", type=click.File("r"), required=True)
@click.option("--edge", nargs=2, type=int, required=True)
@output_option
def phi_cmd(graph, gadget, edge: tuple[int, int], output: str) -> None:
    """The embedding of the gadget copy glued along an edge."""
    g, _ = load_any_structure(_read(graph))
    f = star(g, load_gadget(_read(gadget))).phi(edge)
    _emit(to_canonical_json(list(f.mapping)), output)


# --- Searches ---

@cli.command("hom")
@click.option("--from", "source", type=click.File("r"), required=True)
@click.option("--to", "target", type=click.File("r"), required=True)
@click.option("--strong", is_flag=True)
@click.option("--injective", is_flag=True)
@click.option("--pin", "pinned", multiple=True, callback=_parse_pins, metavar="x=y")
@click.option("--limit", type=click.IntRange(min=1), default=None)
@click.option("--count", "mode", flag_value="count", help="Print the number of homs")
@click.option("--exists", "mode", flag_value="exists", help="Print whether a hom exists")
@click.option("--all", "mode", flag_value="all", default=True, help="Print every hom (default)")
@output_option
def hom_cmd(source, target, strong: bool, injective: bool, pinned: dict, limit: int | None, mode: str, output: str) -> None:
    """Homomorphisms between two structures."""
    m, _ = load_any_structure(_read(source))
    n, _ = load_any_structure(_read(target))
    q = HomQuery(m, n, strong=strong, injective=injective, pinned=pinned, limit=limit)
    if mode == "count":
        _emit(str(count(q)), output)
    elif mode == "exists":
        _emit(to_canonical_json(exists(q)), output)
    else:
        _emit(to_canonical_json([list(f.mapping) for f in solve(q)]), output)


@cli.command("iso")
@click.argument("first", type=click.File("r"))
@click.argument("second", type=click.File("r"))
@output_option
def iso_cmd(first, second, output: str) -> None:
    """An isomorphism between two structures, or null."""
    m, _ = load_any_structure(_read(first))
    n, _ = load_any_structure(_read(second))
    f = find_isomorphism(m, n)
    _emit(to_canonical_json(list(f.mapping) if f else None), output)


@cli.command()
@click.argument("source", type=click.File("r"))
@output_option
def rigid(source, output: str) -> None:
    """Whether the identity is the only endomorphism."""
    s, _ = load_any_structure(_read(source))
    _emit(to_canonical_json(is_rigid(s)), output)


# --- Logic ---

@cli.command()
@click.argument("source", type=click.File("r"))
@output_option
@format_option
def orient(source, output: str, fmt: str) -> None:
    """Orient an L-path so that each step starts with its two joints."""
    path = load_lpath(_read(source))
    _emit_structure(orient_lpath(path).structure, None, fmt, output)


@cli.command("pp-sat")
@click.option("--structure", "structure", type=click.File("r"), required=True)
@click.option("--formula", "formula", type=click.File("r"), required=True)
@click.option("-a", "--assign", "values", type=int, multiple=True, help="Value of the next free variable")
@click.option("--components", is_flag=True, help="Also report the component-wise check")
@output_option
def pp_sat(structure, formula, values: tuple[int, ...], components: bool, output: str) -> None:
    """Whether a structure satisfies a pp formula at a tuple."""
    a, _ = load_any_structure(_read(structure))
    phi = load_formula(_read(formula))
    satisfied = pp_satisfies(a, values, phi)
    if not components:
        _emit(to_canonical_json(satisfied), output)
        return
    parts = pp_components(phi)
    each = [pp_satisfies(a, values, part) for part in parts]
    _emit(
        to_canonical_json(
            {
                "satisfied": satisfied,
                "components": [formula_model(p).model_dump(mode="json", exclude_none=True) for p in parts],
                "agree": satisfied == all(each),
            }
        ),
        output,
    )


@cli.command("reconstruct")
@click.argument("source", type=click.File("r"))
@output_option
@format_option
def reconstruct_cmd(source, output: str, fmt: str) -> None:
    """Rebuild a graph from its homs out of the point and the edge patterns."""
    m, _ = load_any_structure(_read(source))
    _emit_structure(reconstruct(gra_spec(), m), None, fmt, output)


# --- Density ---

@cli.command()
@click.argument("source", type=click.File("r"))
@click.option("--n", "n", type=click.IntRange(min=1), required=True)
@click.option("--r", "r", type=click.IntRange(min=0), required=True)
@output_option
def detect(source, n: int, r: int, output: str) -> None:
    """An r-subdivided K_n in an undirected graph, or null."""
    g, _ = load_any_structure(_read(source))
    witness = detect_subdivided_clique(g, n, r)
    _emit(to_canonical_json(witness_model(witness) if witness else None), output)


@cli.command()
@click.argument("source", type=click.File("r"))
@click.option("--max-n", type=click.IntRange(min=1), default=4, show_default=True)
@click.option("--max-r", type=click.IntRange(min=0), default=DEFAULT_MAX_R, envvar="GADGET_MAX_R", show_default=True)
@click.option("--pattern", type=click.Choice(["clique", "half"]), default="clique", show_default=True)
@output_option
def profile(source, max_n: int, max_r: int, pattern: str, output: str) -> None:
    """Largest embedded subdivided pattern for each depth r."""
    g, _ = load_any_structure(_read(source))
    found = density_profile(g, max_n, max_r, pattern)
    _emit(to_canonical_json({str(r): n for r, n in found.items()}), output)


@cli.command()
@click.argument("source", type=click.File("r"))
@output_option
def classify(source, output: str) -> None:
    """Canonical types (1-4) of a pair colouring."""
    model = parse(_read(source), ColouringModel)
    chi = {}
    for key, value in model.colouring.items():
        try:
            i, j = (int(part) for part in key.split("-"))
        except ValueError:
            raise InvalidStructure(f"colouring key {key!r} is not of the form i-j") from None
        chi[(i, j)] = value
    _emit(to_canonical_json(sorted(classify_canonical(model.n, chi))), output)


@cli.command()
@click.argument("source", type=click.File("r"))
@click.option("--n", "n", type=click.IntRange(min=1), required=True)
@click.option("--r", "r", type=click.IntRange(min=0), required=True)
@output_option
def mine(source, n: int, r: int, output: str) -> None:
    """Recover a gadget from a structure containing a subdivided clique."""
    host, _ = load_any_structure(_read(source))
    result = mine_gadget(host, n, r)
    if result is None:
        logger.warning(f"[cli] no gadget mined for n={n}, r={r}")
    _emit(to_canonical_json(mined_model(result) if result else None), output)


@cli.command("export-dot")
@click.argument("source", type=click.File("r"))
@output_option
def export_dot(source, output: str) -> None:
    """DOT rendering of a graph; tagged inputs use their tags as node ids."""
    s, tags = load_any_structure(_read(source))
    _emit(to_dot(s, tags), output)


# --- Verification ---

@cli.command()
@click.argument("name", type=click.Choice([*SUITES, "all"]))
@click.option(
    "--max-vertices",
    type=click.IntRange(min=1),
    default=DEFAULT_MAX_VERTICES,
    envvar="GADGET_MAX_VERTICES",
    help="Cap on every suite's vertex bound (default: each suite's own)",
)
@click.option("--max-r", type=click.IntRange(min=0), default=DEFAULT_MAX_R, envvar="GADGET_MAX_R", show_default=True)
@click.option("--seed", type=int, default=DEFAULT_SEED, envvar="GADGET_SEED", show_default=True)
@click.option(
    "--samples",
    type=click.IntRange(min=0),
    default=RANDOM_SAMPLES,
    envvar="GADGET_RANDOM_SAMPLES",
    help="Random instances per suite (default: each suite's own)",
)
@click.option("--limit", type=click.IntRange(min=1), default=None, help="Instances per suite")
@output_option
def verify(
    name: str, max_vertices: int | None, max_r: int, seed: int, samples: int | None, limit: int | None, output: str
) -> int:
    """Run one verification suite (or all of them)."""
    budget = Budget(max_vertices=max_vertices, max_r=max_r, seed=seed, samples=samples, limit=limit)
    names = list(SUITES) if name == "all" else [name]
    failed = 0
    lines = []
    for suite_name in names:
        instances = run_suite(suite_name, budget)
        bad = [i for i in instances if not i.passed]
        for instance in bad:
            logger.warning(f"[verify] {instance.line()}")
        lines += [i.line() for i in instances]
        failed += len(bad)
        click.secho(
            f"[{'+' if not bad else '!'}] {suite_name}: {len(instances) - len(bad)}/{len(instances)} passed",
            fg="green" if not bad else "red",
            bold=True,
            err=True,
        )
    _emit("\n".join(lines), output)
    return EXIT_SUITE if failed else 0


def run(argv: Sequence[str] | None = None) -> int:
    try:
        rv = cli.main(args=list(argv) if argv is not None else None, prog_name="gadgets", standalone_mode=False)
    except click.ClickException as exc:
        exc.show()
        return exc.exit_code
    except click.exceptions.Abort:
        click.echo("Aborted!", err=True)
        return EXIT_ABORT
    except ValidationError as exc:
        click.secho(f"invalid input: {exc}", fg="red", err=True)
        return EXIT_USAGE
    except GadgetError as exc:
        logger.error(f"[cli] {type(exc).__name__}: {exc}")
        click.secho(f"error: {type(exc).__name__}: {exc}", fg="red", err=True)
        return EXIT_DOMAIN
    return rv if isinstance(rv, int) else 0
