"""Command-line front end."""

import asyncio
import csv
import io
import json
import os
import sys
import tempfile
from functools import wraps
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

import click
import structlog
from pydantic import ValidationError

from .closedforms import CoeffTable, coefficient_table, table_names
from .config import load_settings
from .engine import AlgebraParams, FreeExpr, PBWPoly, Reducer, referenced_symbols, render_pbw, word_parse_free
from .errors import (
    BudgetExhausted,
    DenominatorVanishes,
    InvalidSpecialization,
    ParseError,
    UnknownCase,
    UnknownFamily,
)
from .log_config import configure_logging
from .presets import CASE_IDS, CUSTOM, CasePreset, all_presets, custom_preset, preset
from .scalars import canonical_string, default_field, parse_rational, scalar_field, substitute, symbol_names
from .verify import CheckSpec, VerificationReport, Verdict, verify_all

logger = structlog.get_logger()

USAGE_ERRORS = (ParseError, UnknownCase, UnknownFamily, InvalidSpecialization, DenominatorVanishes, ValidationError)

# relation pair -> the swapped pair carrying the unit coefficient and the param prefix
RELATIONS = {"yz": ("zy", "alpha", "lam"), "zx": ("xz", "beta", "mu"), "xy": ("yx", "gamma", "nu")}
AFFINE_WORDS = ("x", "y", "z", "")


def handle_errors(func):
    """Map toolkit errors to exit codes 2 (usage) and 3 (budget)"""

    @wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except USAGE_ERRORS as e:
            logger.warning("Command failed", error=str(e))
            click.echo(f"error: {e}", err=True)
            sys.exit(2)
        except BudgetExhausted as e:
            click.echo(f"error: {e}", err=True)
            sys.exit(3)

    return wrapper


def parse_bindings(items: Sequence[str]) -> Dict[str, str]:
    """--set sym=rat pairs"""
    bindings = {}
    for item in items:
        name, sep, value = item.partition("=")
        if not sep or not name.strip():
            raise ParseError(f"expected sym=rational, got {item!r}", 0)
        parse_rational(value.strip())
        bindings[name.strip()] = value.strip()
    return bindings


def parse_relation(text: str, K) -> Tuple[str, Dict[str, Any]]:
    """'yz=alpha*z*y + x + 1' style relation into its unit and affine coefficients"""
    pair, sep, rhs = text.partition("=")
    pair = pair.strip()
    if not sep or pair not in RELATIONS:
        raise ParseError(f"relation must start with yz=, zx= or xy=, got {text!r}", 0)
    swapped, unit, prefix = RELATIONS[pair]
    expr = word_parse_free(rhs, K)
    extra = set(expr.terms) - set(AFFINE_WORDS) - {swapped}
    if extra:
        raise ParseError(f"relation {pair} may only contain {swapped} and affine terms, got {sorted(extra)}", 0)
    if not expr.terms.get(swapped):
        raise ParseError(f"relation {pair} needs a nonzero {swapped} coefficient", 0)
    values = {unit: expr.terms[swapped]}
    for word, suffix in zip(AFFINE_WORDS, ("x", "y", "z", "1")):
        values[f"{prefix}_{suffix}"] = expr.terms.get(word, K.zero)
    return pair, values


def command_field(expressions: Iterable[str], relations: Sequence[str], bindings: Dict[str, str]):
    """Coefficient field over the base symbols and every other name the command mentions"""
    extra = set(bindings)
    for text in expressions:
        extra |= referenced_symbols(text)
    for text in relations:
        extra |= referenced_symbols(text.partition("=")[2])
    extra -= set(symbol_names(default_field()))
    return scalar_field(tuple(sorted(extra)))


def resolve_preset(
    case: str, relations: Sequence[str], bindings: Dict[str, str], expressions: Sequence[str] = ()
) -> CasePreset:
    K = command_field(expressions, relations, bindings)
    if case == CUSTOM:
        values: Dict[str, Any] = {}
        seen = set()
        for text in relations:
            pair, parsed = parse_relation(text, K)
            seen.add(pair)
            values.update(parsed)
        missing = sorted(set(RELATIONS) - seen)
        if missing:
            raise ParseError(f"custom case needs all three relations, missing {', '.join(missing)}", 0)
        chosen = custom_preset(AlgebraParams(**values))
    else:
        if relations:
            raise ParseError("--rel is only valid with --case custom", 0)
        chosen = preset(case, K)
    if not bindings:
        return chosen
    params = chosen.params.substitute(bindings)
    return CasePreset(id=chosen.id, params=params, free_symbols=frozenset(params.free_symbols()))


def parse_expression(text: str, chosen: CasePreset, bindings: Dict[str, str]) -> FreeExpr:
    K = chosen.params.field
    expr = word_parse_free(text, K)
    if bindings:
        expr = FreeExpr(K, {word: substitute(coeff, bindings) for word, coeff in expr.terms.items()})
    return expr


# -- output

def pbw_json(poly: PBWPoly) -> Dict[str, Any]:
    return {
        "terms": [
            {"i": mono.i, "j": mono.j, "k": mono.k, "coeff": canonical_string(coeff)} for mono, coeff in poly.items()
        ]
    }


def table_json(table: CoeffTable) -> Dict[str, Any]:
    return {
        "case": table.case,
        "family": table.family,
        "index_names": list(table.index_names),
        "entries": [{"index": list(index), "value": value} for index, value in table.rows()],
    }


def emit_json(value: Any, chosen: Optional[CasePreset] = None) -> str:
    """JSON text for a PBWPoly, CoeffTable or VerificationReport"""
    if isinstance(value, PBWPoly):
        body: Dict[str, Any] = {}
        if chosen is not None:
            body["case"] = chosen.id
            body["params"] = chosen.params.as_strings()
        body.update(pbw_json(value))
    elif isinstance(value, CoeffTable):
        body = table_json(value)
    elif isinstance(value, VerificationReport):
        body = value.model_dump(mode="json")
    else:
        raise TypeError(f"cannot emit {type(value).__name__} as JSON")
    return json.dumps(body, indent=2)


def emit_csv(header: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def write_output(text: str, out: Optional[str]) -> None:
    """Echo, or replace ``out`` atomically"""
    if out is None:
        click.echo(text.rstrip("\n"))
        return
    directory = os.path.dirname(os.path.abspath(out))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".skewpbw-")
    try:
        with os.fdopen(fd, "w") as handle:
            handle.write(text if text.endswith("\n") else text + "\n")
        os.replace(tmp, out)
    except BaseException:
        os.unlink(tmp)
        raise


def emit_poly(poly: PBWPoly, chosen: CasePreset, fmt: str, out: Optional[str]) -> None:
    if fmt == "json":
        text = emit_json(poly, chosen)
    elif fmt == "csv":
        text = emit_csv(
            ("i", "j", "k", "coeff"),
            ((m.i, m.j, m.k, canonical_string(c)) for m, c in poly.items()),
        )
    else:
        text = render_pbw(poly)
    write_output(text, out)


def report_text(report: VerificationReport) -> str:
    lines: List[str] = []
    for entry in report.entries:
        if entry.verdict in (Verdict.AGREE, Verdict.ROUTE_UNAVAILABLE):
            continue
        indices = ",".join(str(i) for i in entry.indices)
        lines.append(f"{entry.case:<5} {entry.family.value:<10} ({indices}) {entry.routes[1]:<12} {entry.verdict.value}")
        if entry.difference:
            lines.append(f"      difference: {entry.difference}")
    for check in report.confluence:
        if not check.passed:
            lines.append(f"{check.case:<5} confluence failed: {'; '.join(check.failures)}")
    if report.missing_expected:
        lines.append(f"expected discrepancies not realized: {', '.join(report.missing_expected)}")
    counts = ", ".join(f"{name}={count}" for name, count in report.summary.items())
    lines.append(f"{'OK' if report.ok else 'FAILED'}: {counts}")
    return "\n".join(lines)


# -- commands

def output_format(as_json: bool, as_csv: bool) -> str:
    if as_json and as_csv:
        raise click.UsageError("--json and --csv are exclusive")
    return "json" if as_json else "csv" if as_csv else "text"


case_option = click.option(
    "--case", "case", default="1", show_default=True, help=f"One of {', '.join(CASE_IDS)} or {CUSTOM}"
)
rel_option = click.option("--rel", "relations", multiple=True, help='Custom relation, e.g. "yz=alpha*z*y + x"')
set_option = click.option("--set", "bindings", multiple=True, help="Specialize a symbol, sym=rational")
budget_option = click.option("--budget", type=click.IntRange(min=1), default=None, help="Rewrite step budget")
json_option = click.option("--json", "as_json", is_flag=True, help="JSON output")
csv_option = click.option("--csv", "as_csv", is_flag=True, help="CSV output")
out_option = click.option("--out", type=click.Path(dir_okay=False), default=None, help="Write output to a file")


@click.group()
def cli():
    """Exact PBW normal forms in three-dimensional skew polynomial algebras."""
    try:
        settings = load_settings()
    except ValidationError as e:
        click.echo(f"error: {e}", err=True)
        sys.exit(2)
    configure_logging(settings.log_level)


@cli.command()
@click.argument("expression")
@case_option
@rel_option
@set_option
@budget_option
@json_option
@csv_option
@out_option
@handle_errors
def nf(expression, case, relations, bindings, budget, as_json, as_csv, out):
    """Normal form of EXPRESSION."""
    fmt = output_format(as_json, as_csv)
    values = parse_bindings(bindings)
    chosen = resolve_preset(case, relations, values, (expression,))
    poly = Reducer(chosen.params, budget).normal_form(parse_expression(expression, chosen, values))
    emit_poly(poly, chosen, fmt, out)


@cli.command()
@click.argument("left")
@click.argument("right")
@case_option
@rel_option
@set_option
@budget_option
@json_option
@csv_option
@out_option
@handle_errors
def mul(left, right, case, relations, bindings, budget, as_json, as_csv, out):
    """Normal form of LEFT * RIGHT."""
    fmt = output_format(as_json, as_csv)
    values = parse_bindings(bindings)
    chosen = resolve_preset(case, relations, values, (left, right))
    reducer = Reducer(chosen.params, budget)
    a = reducer.normal_form(parse_expression(left, chosen, values))
    b = reducer.normal_form(parse_expression(right, chosen, values))
    emit_poly(reducer.mul(a, b), chosen, fmt, out)


@cli.command("pow")
@click.argument("expression")
@click.argument("exponent", type=click.IntRange(min=0))
@case_option
@rel_option
@set_option
@budget_option
@json_option
@csv_option
@out_option
@handle_errors
def power(expression, exponent, case, relations, bindings, budget, as_json, as_csv, out):
    """Normal form of EXPRESSION^EXPONENT."""
    fmt = output_format(as_json, as_csv)
    values = parse_bindings(bindings)
    chosen = resolve_preset(case, relations, values, (expression,))
    reducer = Reducer(chosen.params, budget)
    base = reducer.normal_form(parse_expression(expression, chosen, values))
    emit_poly(reducer.pow(base, exponent), chosen, fmt, out)


@cli.command()
@click.option("--case", "case", default="2ii", show_default=True, type=click.Choice(CASE_IDS))
@click.option("--family", required=True, help="Coefficient array name, e.g. W, V, Theta")
@click.option("--max", "bound", type=click.IntRange(min=0), default=2, show_default=True)
@set_option
@json_option
@csv_option
@out_option
@handle_errors
def table(case, family, bound, bindings, as_json, as_csv, out):
    """Coefficient array FAMILY of a case, every index up to --max."""
    fmt = output_format(as_json, as_csv)
    values = parse_bindings(bindings)
    params = preset(case).params.substitute(values) if values else None
    if family not in table_names(case):
        raise UnknownFamily(f"case {case} has no table {family!r}; expected one of {', '.join(table_names(case))}")
    result = coefficient_table(case, family, params=params, default=bound)
    if fmt == "json":
        text = emit_json(result)
    elif fmt == "csv":
        text = emit_csv(result.index_names + ("value",), (index + (value,) for index, value in result.rows()))
    else:
        names = ",".join(result.index_names)
        text = "\n".join(
            [f"{result.family}[{names}]"]
            + [f"{result.family}[{','.join(map(str, index))}] = {value}" for index, value in result.rows()]
        )
    write_output(text, out)


@cli.command()
@click.option("--case", "cases", multiple=True, default=("all",), show_default=True, help="Case tag or all")
@click.option("--family", "families", multiple=True, help="Identity family; all when omitted")
@click.option("--max", "bound", type=click.IntRange(min=0), default=3, show_default=True)
@click.option("--max-s", "bound_s", type=click.IntRange(min=0), default=None, help="Power bound; --max when omitted")
@click.option("--sweeps", type=click.IntRange(min=0), default=0, show_default=True)
@set_option
@budget_option
@json_option
@out_option
@handle_errors
def verify(cases, families, bound, bound_s, sweeps, bindings, budget, as_json, out):
    """Check recursions and closed forms against the rewriting engine."""
    chosen = CASE_IDS if "all" in cases else tuple(cases)
    unknown = [case for case in chosen if case not in CASE_IDS]
    if unknown:
        raise UnknownCase(f"unknown cases {', '.join(unknown)}")
    fields: Dict[str, Any] = dict(
        cases=chosen,
        max_n=bound,
        max_m=bound,
        max_t=bound,
        max_s=bound if bound_s is None else bound_s,
        sweeps=sweeps,
        budget=budget,
        specialization=parse_bindings(bindings) or None,
    )
    if families:
        fields["families"] = families
    report = asyncio.run(verify_all(CheckSpec(**fields)))
    write_output(emit_json(report) if as_json else report_text(report), out)
    if report.unexpected() or report.missing_expected:
        sys.exit(1)
    exhausted = report.summary.get("budget-exhausted") or any(
        check.obstruction == "budget-exhausted" for check in report.confluence
    )
    if exhausted:
        sys.exit(3)
    if not report.ok:
        sys.exit(1)


@cli.command()
@json_option
@handle_errors
def presets(as_json):
    """List the case catalog with its relations."""
    catalog = all_presets()
    if as_json:
        body = [
            {
                "case": p.id,
                "relations": list(p.relations()),
                "free_symbols": sorted(p.free_symbols),
                "params": p.params.as_strings(),
            }
            for p in catalog
        ]
        click.echo(json.dumps(body, indent=2))
        return
    for p in catalog:
        click.echo(p.id)
        for relation in p.relations():
            click.echo(f"    {relation}")
