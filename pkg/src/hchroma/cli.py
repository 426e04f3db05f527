"""Command-line frontend.

Every subcommand writes one JSON document to stdout (or LaTeX with
--latex where supported) and is fully deterministic: identical
invocations produce byte-identical output. Counts and coefficients are
serialized as strings so consumers never lose precision. Errors are a
single machine-parsable JSON line on stderr with a nonzero exit code.
"""

from __future__ import annotations

import json
import sys

import click

from . import galois, indices, symfunc
from .graphs import GraphError, parse_graph6, to_graph6
from .homomorphism import (
    BudgetExhausted,
    chromatic_polynomial,
    count_hom,
    count_weak_hom,
    hom_generating_function,
)
from .hosts import host_from_spec
from .hypermulti import enumerate_classes


def _emit(payload):
    click.echo(json.dumps(payload, sort_keys=True))


def _parse_series(text, ground_factor):
    if text.startswith("paley:"):
        return indices.PaleySeries(int(text.split(":", 1)[1]))
    if text == "kneser":
        return indices.KneserSeries(ground_factor)
    raise GraphError(f"unknown series spec {text!r}; use paley:P or kneser")


@click.group()
@click.option(
    "--threads",
    default=1,
    show_default=True,
    type=click.IntRange(min=1),
    help="Upper bound on worker parallelism; results never depend on it.",
)
def cli(threads):
    """Chromatic functions over universal graph series."""
    # All computations are deterministic and currently run sequentially;
    # the flag is accepted as an upper bound.


@cli.group()
def chroma():
    """Chromatic polynomial and symmetric-function expansions."""


@chroma.command("poly")
@click.argument("graph6")
def chroma_poly(graph6):
    g = parse_graph6(graph6)
    coeffs = chromatic_polynomial(g)
    _emit(
        {
            "operation": "chromatic_polynomial",
            "graph": to_graph6(g),
            "coefficients": [str(c) for c in coeffs],
        }
    )


@chroma.command("symfn")
@click.option("--k", "k", required=True, type=click.IntRange(min=1, max=3))
@click.option("--basis", type=click.Choice(["m", "p"]), default="p", show_default=True)
@click.option("--latex", is_flag=True, help="Render the terms as LaTeX.")
@click.argument("graph6")
def chroma_symfn(k, basis, latex, graph6):
    g = parse_graph6(graph6)
    f = symfunc.power_sum_expansion(g, k)
    if basis == "m":
        f = symfunc.p_to_m(f)
    if latex:
        click.echo(symfunc.to_latex(f))
    else:
        _emit(symfunc.to_json(f))


_COMPARE_METHODS = {
    "chi": "chromatic_poly",
    "k1": "x_k1",
    "k2": "x_k2",
    "profile": "hom_profile",
}


@chroma.command("compare")
@click.option(
    "--method",
    required=True,
    type=click.Choice(sorted(_COMPARE_METHODS)),
)
@click.option("--max-host", default=5, show_default=True, type=click.IntRange(1, 6))
@click.argument("graph6_a")
@click.argument("graph6_b")
def chroma_compare(method, max_host, graph6_a, graph6_b):
    g1, g2 = parse_graph6(graph6_a), parse_graph6(graph6_b)
    verdict = indices.distinguish(
        g1, g2, _COMPARE_METHODS[method], max_host_order=max_host
    )
    _emit(verdict.to_json())


@cli.group()
def hom():
    """Homomorphism counts and generating functions."""


def _hom_args(hostspec, graph6):
    return parse_graph6(graph6), host_from_spec(hostspec)


@hom.command("count")
@click.option("--host", "hostspec", required=True)
@click.option("--budget", default=None, type=int)
@click.argument("graph6")
def hom_count_cmd(hostspec, budget, graph6):
    g, host = _hom_args(hostspec, graph6)
    _emit(
        {
            "operation": "count_hom",
            "count": str(count_hom(g, host, budget=budget)),
        }
    )


@hom.command("weak")
@click.option("--host", "hostspec", required=True)
@click.option("--budget", default=None, type=int)
@click.argument("graph6")
def hom_weak_cmd(hostspec, budget, graph6):
    g, host = _hom_args(hostspec, graph6)
    _emit(
        {
            "operation": "count_weak_hom",
            "count": str(count_weak_hom(g, host, budget=budget)),
        }
    )


@hom.command("xh")
@click.option("--host", "hostspec", required=True)
@click.option("--budget", default=None, type=int)
@click.argument("graph6")
def hom_xh_cmd(hostspec, budget, graph6):
    g, host = _hom_args(hostspec, graph6)
    poly = hom_generating_function(g, host, budget=budget)
    _emit({"operation": "hom_generating_function", **poly.to_json(host)})


@cli.group()
def paley():
    """Quadratic-residue hosts and their constructive embeddings."""


def _field(p, d):
    return galois.find_irreducible(p, d)


@paley.command("gen")
@click.option("--p", "p", required=True, type=int)
@click.option("--d", "d", default=1, show_default=True, type=int)
def paley_gen(p, d):
    spec = _field(p, d)
    host = galois.paley_graph(spec)
    if host.order > 2048:
        raise GraphError(f"refusing to materialize {host.order} vertices as JSON")
    graph = host.to_simple_graph()
    _emit(
        {
            "operation": "paley_graph",
            "field": spec.to_json(),
            **graph.to_json(),
        }
    )


@paley.command("pancyclic")
@click.option("--p", "p", required=True, type=int)
@click.option("--d", "d", default=1, show_default=True, type=int)
@click.option("--budget", default=10**7, show_default=True, type=int)
def paley_pancyclic(p, d, budget):
    host = galois.paley_graph(_field(p, d))
    report = indices.pancyclicity_certificate(host, budget=budget)
    _emit({"operation": "pancyclicity_certificate", **report.to_json()})


def _emit_embedding(operation, result, host):
    if not hasattr(result, "mapping"):
        _emit({"operation": operation, "result": "not_found"})
    else:
        _emit({"operation": operation, "result": "found", **result.to_json(host)})


@paley.command("embed-bipartite")
@click.option("--p", "p", required=True, type=int)
@click.option("--d", "d", required=True, type=int)
@click.option("--base-d", default=1, show_default=True, type=int)
def paley_embed_bipartite(p, d, base_d):
    host = galois.paley_graph(_field(p, d))
    sub = _field(p, base_d)
    result = galois.complete_bipartite_embedding(sub, host)
    _emit_embedding("complete_bipartite_embedding", result, host)


@paley.command("embed-cycle")
@click.option("--p", "p", required=True, type=int)
@click.option("--d", "d", required=True, type=int)
@click.option("--base-d", default=1, show_default=True, type=int)
@click.option("--length", default=None, type=int, help="Even cycle length.")
@click.option("--path-order", default=None, type=int, help="Path order instead.")
def paley_embed_cycle(p, d, base_d, length, path_order):
    if length is not None and path_order is not None:
        raise GraphError("choose either --length or --path-order")
    host = galois.paley_graph(_field(p, d))
    sub = _field(p, base_d)
    if path_order is not None:
        target = ("path", path_order)
    elif length is not None:
        target = ("cycle", length)
    else:
        target = None
    result = galois.even_cycle_embedding(sub, host, target)
    _emit_embedding("even_cycle_embedding", result, host)


@paley.command("embed-oddcycle")
@click.option("--p", "p", required=True, type=int)
@click.option("--d", "d", required=True, type=int)
@click.option("--base-d", default=1, show_default=True, type=int)
@click.option("--k", "k", required=True, type=int, help="Target cycle is C_(2k+1).")
def paley_embed_oddcycle(p, d, base_d, k):
    host = galois.paley_graph(_field(p, d))
    sub = _field(p, base_d)
    result = galois.odd_cycle_embedding(sub, host, k)
    _emit_embedding("odd_cycle_embedding", result, host)


@cli.group()
def index():
    """Series indices."""


@index.command("induced")
@click.option("--series", "series_spec", required=True)
@click.option("--cap", default=2, show_default=True, type=int)
@click.option("--budget", default=indices.DEFAULT_BUDGET, show_default=True, type=int)
@click.argument("graph6")
def index_induced(series_spec, cap, budget, graph6):
    g = parse_graph6(graph6)
    series = _parse_series(series_spec, g.n)
    res = indices.induced_index(g, series, cap=cap, budget=budget)
    host = series.level_host(res.value) if res.value is not None else None
    _emit(
        res.to_json(
            "induced_index",
            {"graph": to_graph6(g), **series.describe()},
            host,
        )
    )


@index.command("subgraph")
@click.option("--series", "series_spec", required=True)
@click.option("--cap", default=2, show_default=True, type=int)
@click.option("--budget", default=indices.DEFAULT_BUDGET, show_default=True, type=int)
@click.argument("graph6")
def index_subgraph(series_spec, cap, budget, graph6):
    g = parse_graph6(graph6)
    series = _parse_series(series_spec, g.n)
    res = indices.subgraph_index(g, series, cap=cap, budget=budget)
    host = None
    if res.value is not None and series.level_order(res.value) <= indices.SEARCH_CAP:
        host = series.level_host(res.value)
    _emit(
        res.to_json(
            "subgraph_index",
            {"graph": to_graph6(g), **series.describe()},
            host,
        )
    )


@index.command("functional")
@click.option("--series", "series_spec", required=True)
@click.option(
    "--kind",
    default="xh",
    show_default=True,
    type=click.Choice(["xh", "profile"]),
)
@click.option("--max-levels", default=4, show_default=True, type=int)
@click.argument("graphs", nargs=-1, required=True)
def index_functional(series_spec, kind, max_levels, graphs):
    family = [parse_graph6(text) for text in graphs]
    ground = max((g.n for g in family), default=1)
    series = _parse_series(series_spec, ground)
    res = indices.functional_index(family, series, invariant=kind, max_levels=max_levels)
    _emit(res.to_json())


@cli.group()
def classes():
    """Hyper-multigraph class enumeration."""


@classes.command("enum")
@click.option("--n", "n", required=True, type=int)
@click.option("--k", "k", required=True, type=int)
@click.option("--connected", is_flag=True)
def classes_enum(n, k, connected):
    out = enumerate_classes(n, k, connected=connected)
    _emit(
        {
            "operation": "enumerate_classes",
            "n": n,
            "k": k,
            "connected": connected,
            "count": len(out),
            "classes": [h.to_json() for h in out],
        }
    )


@cli.command("bounds")
@click.option(
    "--kind",
    required=True,
    type=click.Choice(sorted(galois.BOUND_KINDS)),
)
@click.option("--q", "q", required=True, type=int)
@click.option("--k", "k", default=None, type=int)
def bounds(kind, q, k):
    params = {"q": q}
    if k is not None:
        params["k"] = k
    try:
        value = galois.BOUND_KINDS[kind](params)
    except KeyError as missing:
        raise GraphError(f"bound {kind} needs parameter {missing}")
    _emit({"operation": "bounds", "kind": kind, "params": params, "value": str(value)})


@cli.group()
def scan():
    """Exhaustive experimental scans."""


@scan.command("trees")
@click.option("--max-order", required=True, type=click.IntRange(1, 9))
def scan_trees(max_order):
    _emit({"operation": "tree_scan", **indices.tree_collision_scan(max_order)})


def main(argv=None):
    try:
        cli.main(args=argv, standalone_mode=False)
        return 0
    except click.exceptions.Exit as exc:  # --help and friends
        return exc.exit_code
    except click.ClickException as exc:
        print(json.dumps({"error": exc.format_message()}), file=sys.stderr)
        return 2
    except (GraphError, galois.FieldError, BudgetExhausted, ValueError) as exc:
        print(json.dumps({"error": str(exc)}), file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
