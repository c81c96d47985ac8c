"""Command-line frontend for the decomposition engine.

Three subcommands: `decompose` turns a manifold spec into a report with
any of the tree, factors, series, and ranks sections; `equivalent`
decides loop-space equivalence of two specs; `verify` runs the property
suites.  Input is inline JSON or @file; output is JSON by default and
sorted-key deterministic, with a plain-text rendering behind
--format text.  Exit codes: 0 success, 1 validation or usage error,
2 verification failure.
"""

import json

import click

from .api import handle_decompose, handle_equivalent, handle_verify
from .decompose import DEFAULT_CAP
from .errors import LoopcalcError, UsageError
from .verify import SUITE_NAMES


def _load_input(raw):
    if raw.startswith("@"):
        path = raw[1:]
        try:
            with open(path, "r", encoding="utf-8") as handle:
                text = handle.read()
        except OSError as err:
            raise UsageError("cannot read input file %s: %s" % (path, err))
    else:
        text = raw
    try:
        return json.loads(text)
    except ValueError as err:
        raise UsageError("input is not valid JSON: %s" % (err,))


def _dump(obj):
    return json.dumps(obj, sort_keys=True)


def _fail(err):
    click.echo(_dump({"error": {"code": err.code, "message": str(err)}}))
    raise SystemExit(1)


def _sorted_items(table):
    return sorted(table.items(), key=lambda kv: int(kv[0]))


def _factors_text(f):
    parts = []
    if f["circles"]:
        parts.append("circles %d" % f["circles"])
    if f["spheres"]:
        body = " ".join("%s:%s" % kv for kv in _sorted_items(f["spheres"]))
        parts.append("spheres %s" % body)
    if f["loop_spheres"]:
        body = " ".join("%s:%s" % kv for kv in _sorted_items(f["loop_spheres"]))
        parts.append("loop spheres %s" % body)
    if f["truncated"]:
        parts.append("truncated")
    return "; ".join(parts) if parts else "trivial"


def _decompose_text(report):
    lines = []
    if "tree" in report:
        lines.append("tree: %s" % report["tree"])
    if "factors" in report:
        lines.append("factors: %s" % _factors_text(report["factors"]))
    if "series" in report:
        lines.append("series: %s" % " ".join(str(c) for c in report["series"]))
    if "ranks" in report:
        body = " ".join("%s:%s" % kv for kv in _sorted_items(report["ranks"]["ranks"]))
        lines.append("ranks: %s" % (body if body else "none"))
    return "\n".join(lines)


def _verify_text(report):
    lines = []
    for check in report["checks"]:
        line = "%s: instances %d, failures %d" % (
            check["check"],
            check["instances"],
            check["failures"],
        )
        if check.get("first_failure"):
            line += " (first: %s)" % check["first_failure"]
        lines.append(line)
    lines.append("total failures: %d" % report["failures"])
    return "\n".join(lines)


def _split_emit(emit):
    parts = []
    for item in emit:
        parts.extend(p.strip() for p in item.split(",") if p.strip())
    return parts or None


@click.group()
def main():
    """Symbolic loop-space decomposition calculator."""


@main.command()
@click.option("--input", "-i", "raw", required=True, help="Spec JSON or @file.")
@click.option("--cap", default=DEFAULT_CAP, show_default=True, type=int)
@click.option(
    "--emit",
    multiple=True,
    help="Sections to report (tree, factors, series, ranks); default all.",
)
@click.option("--format", "fmt", type=click.Choice(("json", "text")), default="json")
def decompose(raw, cap, emit, fmt):
    """Decompose a manifold spec and report the result."""
    try:
        report = handle_decompose(_load_input(raw), cap, _split_emit(emit))
    except LoopcalcError as err:
        _fail(err)
    click.echo(_dump(report) if fmt == "json" else _decompose_text(report))


@main.command()
@click.option("--input", "-i", "raw", required=True, help="Two specs JSON or @file.")
@click.option("--format", "fmt", type=click.Choice(("json", "text")), default="json")
def equivalent(raw, fmt):
    """Decide loop-space equivalence of two specs.

    The input is either a two-element array or an object with keys
    "a" and "b".
    """
    try:
        obj = _load_input(raw)
        if isinstance(obj, list) and len(obj) == 2:
            a, b = obj
        elif isinstance(obj, dict) and set(obj) == {"a", "b"}:
            a, b = obj["a"], obj["b"]
        else:
            raise UsageError(
                'equivalent input must be a two-element array or {"a": ..., "b": ...}'
            )
        report = handle_equivalent(a, b)
    except LoopcalcError as err:
        _fail(err)
    if fmt == "json":
        click.echo(_dump(report))
    else:
        click.echo("equivalent: %s" % ("yes" if report["equivalent"] else "no"))


@main.command()
@click.option(
    "--suite",
    type=click.Choice(SUITE_NAMES + ("all",)),
    default="all",
    show_default=True,
)
@click.option("--seed", default=0, show_default=True, type=int)
@click.option("--format", "fmt", type=click.Choice(("json", "text")), default="json")
def verify(suite, seed, fmt):
    """Run a property suite; exit 2 if any check fails."""
    try:
        report = handle_verify(suite, seed)
    except LoopcalcError as err:
        _fail(err)
    click.echo(_dump(report) if fmt == "json" else _verify_text(report))
    if report["failures"]:
        raise SystemExit(2)


if __name__ == "__main__":
    main()
