"""Command-line surface: analyze, verify, hall, census, cache."""

import os
import sys

import click

from . import __version__
from .cache import InvariantCache, entry_key
from .catalog import build, census, parse_group_file, parse_name, serialize_group_file
from .classes import conjugacy_classes
from .config import Config
from .errors import PiclassError
from .group import PermGroup
from .invariants import d_pi, group_primes
from .numtheory import pi_part, validate_pi
from .reporting import (
    document,
    render_analysis_csv,
    render_analysis_text,
    render_json,
    render_verdicts_csv,
    render_verdicts_text,
)
from .suite import (
    FAIL,
    Limits,
    replay_counterexample,
    resolve_suites,
    run_census_campaign,
    run_group_suite,
    write_counterexample_bundle,
)


def _load_group(source: str, config: Config) -> tuple[str, PermGroup]:
    """A group source is a path to a group file if it exists, else a census name."""
    if os.path.exists(source):
        with open(source) as fh:
            group = parse_group_file(fh.read(), config.max_degree)
        name = os.path.splitext(os.path.basename(source))[0]
        return name, group
    try:
        spec = parse_name(source)
    except ValueError as exc:
        raise click.ClickException(
            f"{source!r} is neither a readable file nor a known group name: {exc}")
    return spec.name, build(spec, config.max_degree)


def _parse_pi(values) -> list[frozenset[int]]:
    sets = []
    for value in values:
        primes = [int(tok) for tok in str(value).replace(",", " ").split()]
        sets.append(validate_pi(primes))
    return sets


def _limits(config: Config) -> Limits:
    return Limits(
        max_elements=config.max_elements,
        subgroup_cap=config.subgroup_cap,
        max_quotient_degree=config.max_quotient_degree,
        hall_budget=config.hall_budget,
        seed=config.seed,
    )


def _config_from(ctx_params) -> Config:
    base = Config.from_file(ctx_params["config"]) if ctx_params.get("config") else Config()
    overrides = {}
    for key in ("seed", "workers", "max_order", "cache_dir"):
        if ctx_params.get(key) is not None:
            overrides[key] = ctx_params[key]
    if ctx_params.get("fmt") is not None:
        overrides["output_format"] = ctx_params["fmt"]
    if overrides:
        base = Config.from_dict({**base.to_dict(), **overrides})
    return base


_common = [
    click.option("--config", type=click.Path(exists=True), default=None,
                 help="JSON config file; flags override it."),
    click.option("--format", "fmt", type=click.Choice(["json", "csv", "text"]),
                 default=None, help="Output format (default json)."),
    click.option("--seed", type=int, default=None, help="Deterministic seed."),
    click.option("--cache-dir", type=click.Path(), default=None,
                 help="Enable the on-disk invariant cache in this directory."),
]


def _with_common(fn):
    for option in reversed(_common):
        fn = option(fn)
    return fn


@click.group()
@click.version_option(version=__version__, prog_name="piclass")
def main():
    """Exact class-counting invariants of finite permutation groups."""


@main.command()
@click.argument("group_source")
@click.option("--pi", "pi_values", multiple=True,
              help="Prime set like '2' or '2,3'; repeatable. Default: each "
                   "prime of |G| plus the full prime set.")
@_with_common
def analyze(group_source, pi_values, **params):
    """Class table summary and exact profiles for GROUP_SOURCE."""
    config = _config_from(params)
    try:
        name, group = _load_group(group_source, config)
        pi_sets = _parse_pi(pi_values) if pi_values else None
        body = _analysis_body(name, group, pi_sets, config)
    except PiclassError as exc:
        raise click.ClickException(str(exc))
    if config.output_format == "json":
        click.echo(render_json(document("analysis", config, body)), nl=False)
    elif config.output_format == "csv":
        click.echo(render_analysis_csv(body), nl=False)
    else:
        click.echo(render_analysis_text(body), nl=False)


def _analysis_body(name, group, pi_sets, config: Config, use_cache: bool = True) -> dict:
    cache = InvariantCache(config.cache_dir) if (config.cache_dir and use_cache) else None
    if pi_sets is None:
        primes = sorted(group_primes(group))
        pi_sets = [frozenset([p]) for p in primes]
        if len(primes) > 1:
            pi_sets.append(frozenset(primes))
        if not pi_sets:
            pi_sets = [frozenset([2])]
    ordered_pi = [sorted(s) for s in pi_sets]
    key = None
    if cache is not None:
        key = entry_key(group, "analysis", {"pi": ordered_pi})
        hit = cache.get(key)
        if hit is not None:
            return hit["body"]
    table = conjugacy_classes(group, config.max_elements)
    body = {
        "group": {
            "name": name,
            "degree": group.degree,
            "order": group.order,
            "generators": [g.cycle_string() for g in group.generators],
        },
        "class_summary": {"k": table.k, "sizes": sorted(table.sizes())},
        "sylow_orders": {
            str(p): pi_part(group.order, frozenset([p]))
            for p in sorted(group_primes(group))
        },
        "profiles": [
            d_pi(group, pi, config.max_elements, name).as_dict() for pi in pi_sets
        ],
    }
    if cache is not None:
        cache.put(key, {
            "invariant": "analysis",
            "group_file": serialize_group_file(group),
            "pi_sets": ordered_pi,
            "name": name,
            "body": body,
        })
    return body


@main.command()
@click.argument("group_source", required=False)
@click.option("--census", "use_census", is_flag=True, help="Run over the default census.")
@click.option("--suite", "suites", multiple=True, default=("all",),
              help="Suite selector; repeatable. One of "
                   "main/complement/cap/quotient/structure/commuting/selftest/all.")
@click.option("--pi", "pi_values", multiple=True, help="Restrict per-pi suites to these prime sets.")
@click.option("--workers", type=int, default=None, help="Worker threads for the campaign.")
@click.option("--max-order", type=int, default=None, help="Census order cap.")
@click.option("--bundle-dir", type=click.Path(), default="counterexamples",
              help="Where failure replay bundles are written.")
@click.option("--replay", type=click.Path(exists=True), default=None,
              help="Replay a counterexample bundle directory instead.")
@_with_common
def verify(group_source, use_census, suites, pi_values, bundle_dir, replay, **params):
    """Run theorem checkers; exit 0 iff no check fails."""
    config = _config_from(params)
    limits = _limits(config)
    by_name: dict[str, PermGroup] = {}
    try:
        suites = resolve_suites(list(suites))
        if replay:
            reports = [replay_counterexample(replay, limits)]
            summary = {reports[0].status: 1}
        elif use_census or not group_source:
            entries = list(census(config.census_ranges(), config.max_degree))
            by_name = dict(entries)
            result = run_census_campaign(entries, suites, limits, workers=config.workers)
            reports, summary = result.reports, result.summary
        else:
            name, group = _load_group(group_source, config)
            by_name = {name: group}
            pi_sets = _parse_pi(pi_values) if pi_values else None
            reports = run_group_suite(group, name, suites, limits, pi_sets)
            summary = {}
            for r in reports:
                summary[r.status] = summary.get(r.status, 0) + 1
    except PiclassError as exc:
        raise click.ClickException(str(exc))

    failures = [r for r in reports if r.status == FAIL]
    for i, failure in enumerate(failures):
        grp = by_name.get(failure.group)
        if grp is None:
            continue
        path = os.path.join(bundle_dir, f"{failure.result_id}-{i}")
        write_counterexample_bundle(path, grp, failure, config.to_dict())
        click.echo(f"counterexample bundle: {path}", err=True)

    body = {"results": [r.as_dict() for r in reports], "summary": summary}
    if config.output_format == "json":
        click.echo(render_json(document("verify", config, body)), nl=False)
    elif config.output_format == "csv":
        click.echo(render_verdicts_csv(reports), nl=False)
    else:
        click.echo(render_verdicts_text(reports, summary), nl=False)
    sys.exit(1 if failures else 0)


@main.command()
@click.argument("group_source")
@click.option("--pi", "pi_values", multiple=True, required=True,
              help="Prime set, e.g. --pi 3,5.")
@click.option("--budget", type=int, default=None, help="Randomized-tier attempts.")
@_with_common
def hall(group_source, pi_values, budget, **params):
    """Search for a Hall subgroup for the given prime set."""
    from .subgroups import hall_search

    config = _config_from(params)
    try:
        name, group = _load_group(group_source, config)
        outcomes = []
        for pi in _parse_pi(pi_values):
            out = hall_search(
                group, pi,
                budget=budget if budget is not None else config.hall_budget,
                subgroup_cap=config.subgroup_cap,
                cap=config.max_elements, seed=config.seed)
            entry = {
                "pi": sorted(pi),
                "status": out.status,
                "method": out.method,
                "route": out.route,
            }
            if out.found:
                entry["order"] = out.subgroup.order
                entry["abelian"] = out.abelian
                entry["generators"] = [g.cycle_string() for g in out.subgroup.generators]
            outcomes.append(entry)
    except PiclassError as exc:
        raise click.ClickException(str(exc))
    body = {"group": name, "outcomes": outcomes}
    if config.output_format == "json":
        click.echo(render_json(document("hall", config, body)), nl=False)
    else:
        for entry in outcomes:
            pi = ",".join(map(str, entry["pi"]))
            line = f"pi={{{pi}}}: {entry['status']}"
            if "order" in entry:
                line += f" order={entry['order']} abelian={entry['abelian']}"
            line += f" ({entry['method']}: {entry['route']})"
            click.echo(line)


@main.command(name="census")
@click.option("--max-order", type=int, default=None, help="Census order cap.")
@_with_common
def census_cmd(**params):
    """List the configured census (names, orders, degrees), in census order."""
    config = _config_from(params)
    rows = [
        {"name": name, "order": group.order, "degree": group.degree}
        for name, group in census(config.census_ranges(), config.max_degree)
    ]
    if config.output_format == "json":
        click.echo(render_json(document("census", config, {"groups": rows})), nl=False)
    elif config.output_format == "csv":
        click.echo("name,order,degree")
        for row in rows:
            click.echo(f"{row['name']},{row['order']},{row['degree']}")
    else:
        for row in rows:
            click.echo(f"{row['name']:16} order {row['order']:6} degree {row['degree']}")


@main.command(name="cache")
@click.argument("action", type=click.Choice(["stats", "clear", "verify"]))
@click.option("--verify-cache", is_flag=True, hidden=True,
              help="Alias for the verify action.")
@_with_common
def cache_cmd(action, verify_cache, **params):
    """Inspect, clear, or verify the on-disk invariant cache."""
    config = _config_from(params)
    if not config.cache_dir:
        raise click.ClickException("no cache directory configured (--cache-dir)")
    store = InvariantCache(config.cache_dir)
    if verify_cache:
        action = "verify"
    if action == "stats":
        click.echo(f"entries: {len(store.keys())}")
    elif action == "clear":
        click.echo(f"removed: {store.clear()}")
    else:
        def recompute(key):
            value = store.get(key)
            if not isinstance(value, dict) or value.get("invariant") != "analysis":
                return None
            group = parse_group_file(value["group_file"], config.max_degree)
            pi_sets = [frozenset(p) for p in value["pi_sets"]]
            body = _analysis_body(value["name"], group, pi_sets, config, use_cache=False)
            return {**value, "body": body}

        bad = store.verify(recompute)
        click.echo(f"checked: {len(store.keys())}, mismatched or corrupt: {len(bad)}")
        if bad:
            sys.exit(1)


if __name__ == "__main__":
    main()
