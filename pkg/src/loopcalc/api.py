"""Request models and shared handlers for the service and the CLI.

Both frontends funnel into the same three handlers so that a report
computed over HTTP is byte-identical to the one printed by the command
line.  Handlers return plain JSON-ready dicts; integers too wide for
64-bit consumers are rendered as decimal strings.
"""

from pydantic import BaseModel

from .decompose import (
    DEFAULT_CAP,
    _check_cap,
    decompose_spec,
    loop_equivalent,
    parse_manifold_spec,
)
from .errors import UsageError
from .expr import canonicalize, product, render
from .homotopy import rational_ranks, to_base
from .normalize import factor_series, normal_form
from .verify import run_suite

EMIT_SECTIONS = ("tree", "factors", "series", "ranks")

_INT_LIMIT = 1 << 63


class DecomposeRequest(BaseModel):
    spec: dict
    cap: int = DEFAULT_CAP
    emit: list = None


class EquivalentRequest(BaseModel):
    a: dict
    b: dict


class VerifyRequest(BaseModel):
    suite: str = "all"
    seed: int = 0


def jsonable(value):
    """Deep-copy a report, stringifying integers at or past 2^63."""
    if isinstance(value, bool):
        return value
    if isinstance(value, int):
        return str(value) if abs(value) >= _INT_LIMIT else value
    if isinstance(value, dict):
        return {key: jsonable(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable(item) for item in value]
    return value


def _chosen_sections(emit):
    if emit is None:
        return EMIT_SECTIONS
    chosen = []
    for section in emit:
        if section not in EMIT_SECTIONS:
            raise UsageError(
                "unknown emit section %r (expected subset of %s)"
                % (section, ", ".join(EMIT_SECTIONS))
            )
        if section not in chosen:
            chosen.append(section)
    if not chosen:
        raise UsageError("emit selection is empty")
    return tuple(chosen)


def handle_decompose(spec_obj, cap=DEFAULT_CAP, emit=None):
    _check_cap(cap)
    chosen = _chosen_sections(emit)
    spec = parse_manifold_spec(spec_obj)
    result = decompose_spec(spec, cap)
    if isinstance(result, list):
        # configuration decomposition: report the merged product
        expr = canonicalize(product(*result))
    else:
        expr = result
    report = {}
    factors = None
    if {"factors", "series", "ranks"} & set(chosen):
        factors = normal_form(expr, cap)
    if "tree" in chosen:
        report["tree"] = render(expr)
    if "factors" in chosen:
        report["factors"] = factors.to_json()
    if "series" in chosen:
        series = factor_series(factors)
        report["series"] = [series[d] for d in range(cap + 1)]
    if "ranks" in chosen:
        report["ranks"] = to_base(rational_ranks(factors)).to_json()
    return jsonable(report)


def handle_equivalent(a_obj, b_obj):
    a = parse_manifold_spec(a_obj)
    b = parse_manifold_spec(b_obj)
    return {"equivalent": loop_equivalent(a, b)}


def handle_verify(suite="all", seed=0):
    results = run_suite(suite, seed)
    failures = sum(r.failures for r in results)
    return jsonable(
        {
            "suite": suite,
            "seed": seed,
            "checks": [r.to_json() for r in results],
            "failures": failures,
            "ok": failures == 0,
        }
    )
