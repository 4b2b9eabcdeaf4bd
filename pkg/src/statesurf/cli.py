"""Command-line front end.

JSON is the contract surface: every subcommand prints one JSON document
with sorted keys and floats rounded to 12 significant digits, so the
same invocation on the same input is byte-identical across runs.  The
``--text`` flag re-renders the same data as indented lines for reading;
nothing about that rendering is promised to stay stable.

Exit codes: 0 success, 1 usage, 2 bad input, 3 hypothesis not met.
Module errors are reported as machine-readable objects on stderr.
"""

from __future__ import annotations

import csv
import json
import os
from fractions import Fraction
from typing import Optional, Sequence

import click

from .bounds import general_lower, montesinos_bounds, positive_braid_bounds
from .corpus import FAMILIES, generate
from .diagram import LinkDiagram
from .errors import (
    CrossingCapExceeded,
    HypothesisError,
    InputError,
    NotAdequateOrHomogeneous,
    NotHomogeneous,
)
from .jones import adequacy_obstruction, jones_report
from .montesinos import (
    MontesinosNormalForm,
    build_diagram,
    montesinos_report,
    negative_loop_taxonomy,
    normalize,
)
from .notation import (
    MontesinosVector,
    parse_braid,
    parse_montesinos,
    parse_pd,
    serialize_braid,
    serialize_montesinos,
    serialize_pd,
)
from .polyhedra import guts_interval
from .states import (
    State,
    adequacy,
    essentiality,
    euler_data,
    fiber_report,
    orientability,
    resolve,
    state_graph,
    turaev_genus,
)

# The skein evaluator is exponential in crossing number; analyze keeps a
# conservative default so full reports stay interactive, the dedicated
# jones subcommand allows more patience.
ANALYZE_JONES_CAP = 24
JONES_CAP = 30

DEFAULT_FIXTURES = "statesurf_fixtures.json"
FIXTURES_ENV = "STATESURF_FIXTURES"


# -- JSON plumbing -----------------------------------------------------


def _jsonable(obj):
    """Normalize report values for deterministic JSON.

    Floats are rounded to 12 significant digits, Fractions become
    "p/q" strings (or ints when whole), tuples become lists.
    """
    if isinstance(obj, bool):
        return obj
    if isinstance(obj, float):
        return float(f"{obj:.12g}")
    if isinstance(obj, Fraction):
        return int(obj) if obj.denominator == 1 else str(obj)
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(x) for x in obj]
    return obj


def _text_lines(data, indent=0):
    pad = "  " * indent
    if isinstance(data, dict):
        for key in sorted(data):
            value = data[key]
            if isinstance(value, (dict, list)) and value:
                yield f"{pad}{key}:"
                yield from _text_lines(value, indent + 1)
            else:
                yield f"{pad}{key}: {_scalar_text(value)}"
    elif isinstance(data, list):
        for item in data:
            if isinstance(item, (dict, list)):
                yield f"{pad}-"
                yield from _text_lines(item, indent + 1)
            else:
                yield f"{pad}- {_scalar_text(item)}"
    else:
        yield f"{pad}{_scalar_text(data)}"


def _scalar_text(value):
    if value is None:
        return "null"
    if value is True:
        return "true"
    if value is False:
        return "false"
    if isinstance(value, (dict, list)):
        return "{}" if isinstance(value, dict) else "[]"
    return str(value)


def _emit(data: dict, text: bool) -> None:
    data = _jsonable(data)
    if text:
        click.echo("\n".join(_text_lines(data)))
    else:
        click.echo(json.dumps(data, sort_keys=True, indent=2))


def _error_object(e: Exception) -> dict:
    obj = {"type": type(e).__name__, "message": str(e)}
    for attr in ("position", "r", "s"):
        value = getattr(e, attr, None)
        if value is not None:
            obj[attr] = value
    return {"error": obj}


# -- input plumbing ----------------------------------------------------


class SourceInput:
    """One parsed input: its notation, kind, and the built diagram."""

    def __init__(self, kind, text, diagram, braid=None, form=None, name=None):
        self.kind = kind
        self.text = text
        self.diagram = diagram
        self.braid = braid
        self.form = form
        self.name = name

    def echo(self) -> dict:
        out = {"kind": self.kind, "text": self.text}
        if self.name is not None:
            out["name"] = self.name
        return out


def _sniff_kind(text: str) -> str:
    head = text.lstrip()
    if head.startswith("M(") or head.startswith("M "):
        return "montesinos"
    if head[:1] == "B" and ":" in head.split("\n", 1)[0]:
        return "braid"
    return "pd"


def _build(kind: str, text: str, name=None) -> SourceInput:
    if kind == "montesinos":
        vector = parse_montesinos(text)
        form = normalize(vector)
        return SourceInput(kind, text, build_diagram(form), form=form, name=name)
    if kind == "braid":
        braid = parse_braid(text)
        return SourceInput(
            kind, text, LinkDiagram.braid_closure(braid), braid=braid, name=name
        )
    return SourceInput(kind, text, LinkDiagram.from_pd(parse_pd(text)), name=name)


def _load_fixtures(fixtures_path: Optional[str]) -> dict:
    path = fixtures_path or os.environ.get(FIXTURES_ENV) or DEFAULT_FIXTURES
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as e:
        raise InputError(f"cannot read fixture file {path}: {e.strerror}")
    except ValueError as e:
        raise InputError(f"fixture file {path} is not valid JSON: {e}")
    if not isinstance(data, dict):
        raise InputError(f"fixture file {path} must map names to PD text")
    return data


def _load_input(pd_text, braid_text, montesinos_text, path, name, fixtures_path):
    given = [
        x
        for x in (pd_text, braid_text, montesinos_text, path, name)
        if x is not None
    ]
    if len(given) != 1:
        raise click.UsageError(
            "give exactly one of --pd, --braid, --montesinos, --file, --name"
        )
    if pd_text is not None:
        return _build("pd", pd_text)
    if braid_text is not None:
        return _build("braid", braid_text)
    if montesinos_text is not None:
        return _build("montesinos", montesinos_text)
    if path is not None:
        try:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as e:
            raise InputError(f"cannot read {path}: {e.strerror}")
        return _build(_sniff_kind(text), text.strip())
    fixtures = _load_fixtures(fixtures_path)
    if name not in fixtures:
        raise InputError(f"no fixture named {name!r}; have {sorted(fixtures)}")
    return _build("pd", fixtures[name], name=name)


def _input_options(f):
    f = click.option("--pd", "pd_text", default=None, metavar="PD",
                     help="PD code, e.g. \"X(4,2,5,1) X(2,4,1,3)\"")(f)
    f = click.option("--braid", "braid_text", default=None, metavar="WORD",
                     help="braid word, e.g. \"B3: s1^3 s2^-1\"")(f)
    f = click.option("--montesinos", "montesinos_text", default=None,
                     metavar="SLOPES", help="slope vector, e.g. \"M(1/2, -2/3, 1/3)\"")(f)
    f = click.option("--file", "path", default=None, metavar="PATH",
                     help="read the notation from a file (kind is sniffed)")(f)
    f = click.option("--name", "fixture_name", default=None, metavar="NAME",
                     help="named PD fixture produced by ingest")(f)
    f = click.option("--fixtures", "fixtures_path", default=None, metavar="PATH",
                     help=f"fixture file for --name [default: {DEFAULT_FIXTURES} "
                          f"or ${FIXTURES_ENV}]")(f)
    return f


def _output_options(f):
    return click.option("--text", is_flag=True,
                        help="render as indented text instead of JSON")(f)


# -- report assembly ---------------------------------------------------


def _parse_state(labels: str, n: int) -> State:
    cleaned = labels.replace(" ", "").upper()
    if len(cleaned) != n or any(x not in "AB" for x in cleaned):
        raise InputError(
            f"state must be {n} letters over A/B, got {labels!r}"
        )
    return State(tuple(cleaned))


def _state_block(d: LinkDiagram, st: State) -> dict:
    circles, h = resolve(d, st)
    g, reduced = state_graph(h)
    block = {
        "circles": circles.count,
        "adequate": adequacy(g),
        "homogeneous": h.is_homogeneous,
        "orientable": orientability(g),
        "euler": euler_data(g, reduced),
    }
    try:
        block["essential"] = essentiality(d, st)
    except NotHomogeneous:
        block["essential"] = None
    try:
        block["fiber"] = fiber_report(d, st)
    except NotAdequateOrHomogeneous as e:
        block["fiber"] = {"undecided": str(e)}
    return block


def _montesinos_hints(form: Optional[MontesinosNormalForm]):
    """Exactness hints for the two guts computations, when earned.

    Only a reduced non-alternating vector with enough tangles of the
    right sign justifies the Montesinos rule; the mirror diagram sees
    the negative tangles as positive ones.
    """
    if form is None or form.alternating:
        return None, None
    hint_a = hint_b = None
    if form.positive_count >= 3:
        hint_a = {"reduced": True, "positive_tangles": form.positive_count}
    if form.negative_count >= 3:
        hint_b = {"reduced": True, "positive_tangles": form.negative_count}
    return hint_a, hint_b


def _interval_json(interval) -> dict:
    return {
        "lo": interval.lo,
        "hi": interval.hi,
        "exact": interval.exact,
        "justification": interval.justification,
    }


def _guts_blocks(d: LinkDiagram, form: Optional[MontesinosNormalForm]) -> dict:
    hint_a, hint_b = _montesinos_hints(form)
    out = {}
    for label, dd, hint in (("A", d, hint_a), ("B", d.mirror(), hint_b)):
        try:
            out[label] = _interval_json(guts_interval(dd, montesinos_hint=hint))
        except HypothesisError as e:
            out[label] = {"undecided": str(e)}
    return out


def _jones_block(d: LinkDiagram, cap: int) -> dict:
    rep = jones_report(d, cap)
    block = {
        "variable": "t",
        "polynomial": rep.J.to_text(),
        "coefficients": rep.J.to_json_map(),
        "m2": rep.m2,
        "r2": rep.r2,
        "alpha": rep.alpha,
        "beta": rep.beta,
        "alpha_prime": rep.alpha_prime,
        "beta_prime": rep.beta_prime,
        "epsilon": rep.epsilon,
        "epsilon_prime": rep.epsilon_prime,
        "value_at_one": rep.value_at_one,
        "adequacy_obstruction": adequacy_obstruction(rep),
    }
    # the stable identity needs the A-side reduced graph, computed here
    # directly so the bracket is only evaluated once
    _, h = resolve(d, State.all_A(d))
    g, reduced = state_graph(h)
    if adequacy(g):
        lhs = [abs(rep.alpha_prime), abs(rep.beta_prime)]
        rhs = [1, 1 - reduced.chi]
        block["stable_identity"] = {"holds": lhs == rhs, "lhs": lhs, "rhs": rhs}
    else:
        block["stable_identity"] = {
            "undecided": "the stable coefficient identity needs A-adequacy"
        }
    return block


def _volume_blocks(src: SourceInput) -> dict:
    out = {}
    if src.kind == "montesinos":
        try:
            out["montesinos"] = montesinos_bounds(src.form).to_json_map()
        except HypothesisError as e:
            out["montesinos"] = {"undecided": str(e)}
    if src.braid is not None and src.braid.is_positive:
        try:
            out["positive_braid"] = positive_braid_bounds(src.braid).to_json_map()
        except HypothesisError as e:
            out["positive_braid"] = {"undecided": str(e)}
    try:
        out["state_surface"] = general_lower(src.diagram).to_json_map()
    except HypothesisError as e:
        out["state_surface"] = {"undecided": str(e)}
    return out


def analysis_report(
    src: SourceInput,
    jones_cap: int = ANALYZE_JONES_CAP,
    sigma: Optional[str] = None,
) -> dict:
    """The full cross-referenced report for one diagram."""
    d = src.diagram
    warnings: list[str] = []
    _, t, twist_reduced = d.twist_regions()
    prime, nugatory = d.primeness()

    states = {"A": State.all_A(d), "B": State.all_B(d)}
    if sigma is not None:
        states["sigma"] = _parse_state(sigma, d.n)

    report = {
        "input": src.echo(),
        "diagram": {
            "crossings": d.n,
            "components": d.component_count,
            "free_loops": d.free_loops,
            "writhe": d.writhe,
            "twist_number": t,
            "twist_reduced": twist_reduced,
            "prime": prime,
            "nugatory": nugatory,
            "alternating": d.is_alternating,
            "turaev_genus": turaev_genus(d),
        },
        "states": {k: _state_block(d, v) for k, v in states.items()},
        "guts": _guts_blocks(d, src.form),
        "volume": _volume_blocks(src),
        "warnings": warnings,
    }
    if src.kind == "montesinos":
        report["montesinos"] = montesinos_report(src.form)
    try:
        report["jones"] = _jones_block(d, jones_cap)
    except CrossingCapExceeded as e:
        warnings.append(f"jones skipped: {e}")
    return report


def _diagram_stats(d: LinkDiagram) -> dict:
    _, t, twist_reduced = d.twist_regions()
    return {
        "crossings": d.n,
        "components": d.component_count,
        "writhe": d.writhe,
        "twist_number": t,
        "twist_reduced": twist_reduced,
        "prime": d.is_prime,
        "alternating": d.is_alternating,
    }


def _dot_text(d: LinkDiagram, side: str, reduced_flag: bool) -> str:
    st = State.all_A(d) if side == "A" else State.all_B(d)
    _, h = resolve(d, st)
    g, reduced = state_graph(h)
    lines = [f"graph state_{side} {{"]
    for i in range(g.v):
        lines.append(f'  c{i} [label="c{i}"];')
    if reduced_flag:
        for (u, v), crossings in sorted(reduced.parallel_classes().items()):
            ids = ",".join(str(c) for c in crossings)
            lines.append(f'  c{u} -- c{v} [label="{ids}"];')
    else:
        for u, v, c in g.edges:
            lines.append(f'  c{u} -- c{v} [label="{c}"];')
    lines.append("}")
    return "\n".join(lines)


# -- the command group -------------------------------------------------


@click.group(name="statesurf")
def cli():
    """State surfaces, stable Jones coefficients, and volume bounds."""


@cli.command()
@_input_options
@click.option("--state", "sigma", default=None, metavar="LABELS",
              help="extra state block, one A/B letter per crossing")
@click.option("--jones-cap", type=int, default=ANALYZE_JONES_CAP,
              show_default=True, help="skip the Jones block above this size")
@_output_options
def analyze(pd_text, braid_text, montesinos_text, path, fixture_name,
            fixtures_path, sigma, jones_cap, text):
    """Full report: states, guts, Jones data, volume bounds."""
    src = _load_input(pd_text, braid_text, montesinos_text, path,
                      fixture_name, fixtures_path)
    _emit(analysis_report(src, jones_cap=jones_cap, sigma=sigma), text)


@cli.command()
@_input_options
@click.option("--cap", type=int, default=JONES_CAP, show_default=True,
              help="refuse diagrams above this crossing number")
@_output_options
def jones(pd_text, braid_text, montesinos_text, path, fixture_name,
          fixtures_path, cap, text):
    """Jones polynomial with its extreme-coefficient data."""
    src = _load_input(pd_text, braid_text, montesinos_text, path,
                      fixture_name, fixtures_path)
    _emit(_jones_block(src.diagram, cap), text)


@cli.command()
@_input_options
@_output_options
def guts(pd_text, braid_text, montesinos_text, path, fixture_name,
         fixtures_path, text):
    """Certified guts intervals for both checkerboard-like sides."""
    src = _load_input(pd_text, braid_text, montesinos_text, path,
                      fixture_name, fixtures_path)
    _emit(_guts_blocks(src.diagram, src.form), text)


@cli.command()
@_input_options
@_output_options
def volume(pd_text, braid_text, montesinos_text, path, fixture_name,
           fixtures_path, text):
    """Volume bounds, routed by the strongest applicable theorem."""
    src = _load_input(pd_text, braid_text, montesinos_text, path,
                      fixture_name, fixtures_path)
    if src.kind == "montesinos":
        route, bounds = "montesinos", montesinos_bounds(src.form)
    elif src.braid is not None and src.braid.is_positive:
        route, bounds = "positive braid", positive_braid_bounds(src.braid)
    else:
        route, bounds = "state surface", general_lower(src.diagram)
    _emit({"route": route, "bounds": bounds.to_json_map()}, text)


@cli.command()
@_input_options
@_output_options
def fibered(pd_text, braid_text, montesinos_text, path, fixture_name,
            fixtures_path, text):
    """Fibering decision for the two extreme state surfaces."""
    src = _load_input(pd_text, braid_text, montesinos_text, path,
                      fixture_name, fixtures_path)
    d = src.diagram
    out = {}
    for label, st in (("A", State.all_A(d)), ("B", State.all_B(d))):
        try:
            out[label] = fiber_report(d, st)
        except NotAdequateOrHomogeneous as e:
            out[label] = {"undecided": str(e)}
    _emit(out, text)


@cli.command(name="montesinos")
@click.argument("aspect", default="report",
                type=click.Choice(("report", "normalize", "volume", "taxonomy")))
@click.option("--slopes", "slopes_text", required=True, metavar="SLOPES",
              help="slope vector, e.g. \"M(1/3, -1/3, 1/2)\"")
@_output_options
def montesinos_cmd(aspect, slopes_text, text):
    """Montesinos tools: report, normal form, volume, loop taxonomy."""
    vector = parse_montesinos(slopes_text)
    if aspect == "normalize":
        form = normalize(vector)
        data = {
            "slopes": form.slopes,
            "canonical": serialize_montesinos(MontesinosVector(form.slopes)),
            "total": form.total,
            "r": form.positive_count,
            "s": form.negative_count,
            "alternating": form.alternating,
        }
    elif aspect == "volume":
        data = montesinos_bounds(vector).to_json_map()
    elif aspect == "taxonomy":
        data = {"loops": negative_loop_taxonomy(vector)}
    else:
        data = montesinos_report(vector)
    _emit(data, text)


@cli.command(name="braid")
@click.option("--braid", "braid_text", required=True, metavar="WORD",
              help="braid word, e.g. \"B3: s1^3 s2^3\"")
@_output_options
def braid_cmd(braid_text, text):
    """Braid word summary and its closure diagram."""
    braid = parse_braid(braid_text)
    d = LinkDiagram.braid_closure(braid)
    data = {
        "word": serialize_braid(braid),
        "strands": braid.strand_count,
        "letters": [list(x) for x in braid.letters],
        "crossings": braid.crossing_count,
        "positive": braid.is_positive,
        "closure": dict(_diagram_stats(d), pd=serialize_pd(d.to_pd())),
    }
    if braid.is_positive:
        try:
            data["volume"] = positive_braid_bounds(braid).to_json_map()
        except HypothesisError as e:
            data["volume"] = {"undecided": str(e)}
    _emit(data, text)


@cli.command()
@_input_options
@click.option("-n", "--count", "n", type=int, default=2, show_default=True,
              help="number of parallel copies")
@_output_options
def cable(pd_text, braid_text, montesinos_text, path, fixture_name,
          fixtures_path, n, text):
    """n-cable of the diagram, with the chi(G'_A) invariance witness."""
    src = _load_input(pd_text, braid_text, montesinos_text, path,
                      fixture_name, fixtures_path)

    def chi_reduced_a(d):
        _, h = resolve(d, State.all_A(d))
        _, reduced = state_graph(h)
        return reduced.chi

    cabled = src.diagram.cable(n)
    base_chi = chi_reduced_a(src.diagram)
    cable_chi = chi_reduced_a(cabled)
    _emit(
        {
            "n": n,
            "base": dict(_diagram_stats(src.diagram),
                         chi_reduced_A=base_chi),
            "cable": dict(_diagram_stats(cabled),
                          chi_reduced_A=cable_chi,
                          pd=serialize_pd(cabled.to_pd())),
            "chi_reduced_A_equal": base_chi == cable_chi,
        },
        text,
    )


@cli.command()
@_input_options
@click.option("--side", type=click.Choice(("A", "B")), default="A",
              show_default=True, help="which extreme state graph")
@click.option("--reduced", is_flag=True,
              help="one edge per parallel class, labelled by its crossings")
def dot(pd_text, braid_text, montesinos_text, path, fixture_name,
        fixtures_path, side, reduced):
    """State graph as Graphviz DOT (undirected, circles as c<i>)."""
    src = _load_input(pd_text, braid_text, montesinos_text, path,
                      fixture_name, fixtures_path)
    click.echo(_dot_text(src.diagram, side, reduced))


@cli.command()
@click.option("--file", "path", required=True, metavar="PATH",
              help="CSV with columns name, pd_notation")
@click.option("--out", "out_path", default=None, metavar="PATH",
              help="write the fixture JSON here instead of stdout")
@_output_options
def ingest(path, out_path, text):
    """Build named PD fixtures from a knot-table CSV export.

    Header matching is forgiving (case and spaces ignored), so the
    usual table exports work unmodified.  Rows whose PD text does not
    parse are skipped with a warning.
    """
    try:
        with open(path, newline="", encoding="utf-8-sig") as fh:
            reader = csv.reader(fh)
            rows = list(reader)
    except OSError as e:
        raise InputError(f"cannot read {path}: {e.strerror}")
    if not rows:
        raise InputError(f"{path} is empty")

    header = [cell.strip().lower().replace(" ", "_") for cell in rows[0]]
    try:
        name_col = header.index("name")
        pd_col = header.index("pd_notation")
    except ValueError:
        raise InputError(
            f"{path} needs columns name and pd_notation, found {header}"
        )

    fixtures: dict[str, str] = {}
    warnings: list[str] = []
    for i, row in enumerate(rows[1:], start=2):
        if not row or all(not cell.strip() for cell in row):
            continue
        if len(row) <= max(name_col, pd_col):
            warnings.append(f"row {i}: too few columns, skipped")
            continue
        name = row[name_col].strip()
        if not name:
            warnings.append(f"row {i}: empty name, skipped")
            continue
        try:
            pd = parse_pd(row[pd_col])
        except InputError as e:
            warnings.append(f"row {i} ({name}): {type(e).__name__}: {e}")
            continue
        if name in fixtures:
            warnings.append(f"row {i}: duplicate name {name!r}, overwritten")
        fixtures[name] = serialize_pd(pd)

    if out_path is not None:
        payload = json.dumps(fixtures, sort_keys=True, indent=2) + "\n"
        try:
            with open(out_path, "w", encoding="utf-8") as fh:
                fh.write(payload)
        except OSError as e:
            raise InputError(f"cannot write {out_path}: {e.strerror}")
        _emit({"written": out_path, "count": len(fixtures),
               "warnings": warnings}, text)
    else:
        _emit({"fixtures": fixtures, "count": len(fixtures),
               "warnings": warnings}, text)


@cli.command()
@click.option("--family", type=click.Choice(FAMILIES), required=True)
@click.option("--seed", type=int, required=True)
@click.option("--count", type=int, default=10, show_default=True)
@click.option("--cap", type=int, default=None,
              help="crossing cap override for the family")
@_output_options
def corpus(family, seed, count, cap, text):
    """Deterministic diagram corpus for a named family."""
    items = generate(family, seed, count=count, cap=cap)
    _emit(
        {
            "family": family,
            "seed": seed,
            "count": len(items),
            "items": [
                {
                    "source": item.source,
                    "pd": serialize_pd(item.diagram.to_pd()),
                    "crossings": item.diagram.n,
                }
                for item in items
            ],
        },
        text,
    )


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Entry point with the documented exit codes."""
    try:
        cli.main(args=list(argv) if argv is not None else None,
                 standalone_mode=False)
    except click.exceptions.Exit as e:
        return e.exit_code
    except click.UsageError as e:
        click.echo(f"usage error: {e.format_message()}", err=True)
        return 1
    except InputError as e:
        click.echo(json.dumps(_jsonable(_error_object(e)), sort_keys=True,
                              indent=2), err=True)
        return 2
    except HypothesisError as e:
        click.echo(json.dumps(_jsonable(_error_object(e)), sort_keys=True,
                              indent=2), err=True)
        return 3
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
