"""Command line interface for classifying submodules and running property suites."""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Any

import typer
from rich.console import Console
from rich.logging import RichHandler
from rich.panel import Panel
from rich.progress import (
    BarColumn,
    MofNCompleteColumn,
    Progress,
    SpinnerColumn,
    TextColumn,
    TimeElapsedColumn,
)
from rich.table import Table

from . import __version__
from .errors import AlgebraError, InputError
from .language import execute, format_document, parse_document, render_json
from .settings import Limits, load_limits, use_limits
from .verify import (
    REGISTRY,
    FamilyMode,
    InstanceFamily,
    RingVariant,
    SearchBounds,
    SuiteResult,
    run_suite,
    search_separation,
)

app = typer.Typer(
    help='Classify submodules of finite modules, run property suites and separation searches.',
    no_args_is_help=False,
)

EXIT_SUITE_FAILURE = 1
EXIT_INPUT_ERROR = 2

FILE_ARGUMENT = typer.Argument(
    ...,
    help='UTF-8 input document with ring, module, set, sub and query statements.',
    dir_okay=False,
    file_okay=True,
)

JSON_OPTION = typer.Option(
    default=False,
    help='Emit canonical JSON instead of tables.',
)
JSON_OPTION.param_decls = ('--json',)

PROPERTY_OPTION = typer.Option(
    ...,
    '--property',
    '-p',
    help='Registered property to check (see `alg properties`).',
)

TARGET_OPTION = typer.Option(
    ...,
    '--target',
    '-t',
    help='Separation target: s-primary-not-primary, s-primary-not-s-prime or '
    'localized-primary-not-s-primary (alias converse-4c-failure).',
)

MAX_RING_OPTION = typer.Option(8, '--max-ring', min=2, help='Largest ring cardinality.')

MAX_MODULE_OPTION = typer.Option(8, '--max-module', min=1, help='Largest module cardinality.')

WORKERS_OPTION = typer.Option(
    None,
    '--workers',
    '-w',
    min=1,
    help='Worker processes for suite evaluation (defaults to the configured limit).',
)

VARIANT_OPTION = typer.Option(
    None,
    '--variant',
    help='Ring families to include: zmod, product, idealization (option can be repeated).',
)

SAMPLED_OPTION = typer.Option(
    default=False,
    help='Check a seeded random sample instead of every instance.',
)
SAMPLED_OPTION.param_decls = ('--sampled',)

SEED_OPTION = typer.Option(0, '--seed', help='Seed for sampled runs.')

SAMPLES_OPTION = typer.Option(200, '--samples', min=1, help='Sample size for sampled runs.')

SKIP_TRIVIAL_OPTION = typer.Option(
    default=False,
    help='Ignore the trivial set S = {1} while searching.',
)
SKIP_TRIVIAL_OPTION.param_decls = ('--skip-trivial-set',)

VERBOSE_OPTION = typer.Option(
    default=False,
    help='Log debug output to stderr.',
)
VERBOSE_OPTION.param_decls = ('--verbose',)

VERSION_OPTION = typer.Option(
    default=False,
    help='Show version and exit.',
)
VERSION_OPTION.param_decls = ('--version', '-V')


@dataclass
class CLIState:
    """Holds the consoles and the enumeration limits for one invocation."""

    console: Console
    err_console: Console
    limits: Limits


def _get_state(ctx: typer.Context) -> CLIState:
    state = ctx.obj
    if isinstance(state, CLIState):
        return state
    return CLIState(console=Console(), err_console=Console(stderr=True), limits=load_limits())


def _configure_logging(console: Console, *, verbose: bool) -> None:
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format='%(message)s',
        datefmt='[%X]',
        handlers=[RichHandler(console=console, show_path=False, rich_tracebacks=True)],
        force=True,
    )


def _fail(console: Console, message: str, code: int = EXIT_INPUT_ERROR) -> typer.Exit:
    console.print(f'[red]✗[/] {message}')
    return typer.Exit(code=code)


def _emit_json(payload: Any) -> None:  # noqa: ANN401
    typer.echo(json.dumps(payload, sort_keys=True, indent=2))


@app.callback(invoke_without_command=True)
def main(
    ctx: typer.Context,
    verbose: bool = VERBOSE_OPTION,  # noqa: FBT001
    version: bool = VERSION_OPTION,  # noqa: FBT001
) -> None:
    """Initialise logging and the enumeration limits."""
    console = Console()
    err_console = Console(stderr=True)
    if version:
        console.print(f'alg version {__version__}')
        raise typer.Exit(0)
    _configure_logging(err_console, verbose=verbose)
    try:
        limits = load_limits()
    except ValueError as error:
        raise _fail(err_console, str(error)) from None
    if ctx.invoked_subcommand is None:
        console.print('[yellow]No command specified. Use --help to see available commands.[/]')
        raise typer.Exit(0)
    ctx.obj = CLIState(console=console, err_console=err_console, limits=limits)


def _read_document_text(state: CLIState, path: Path) -> str:
    try:
        return path.read_text(encoding='utf-8')
    except (OSError, UnicodeDecodeError) as error:
        raise _fail(state.err_console, f'{path}: {error}') from None


def _yes_no(value: object) -> str:
    if value is None:
        return '-'
    if isinstance(value, bool):
        return '[green]yes[/]' if value else '[red]no[/]'
    return str(value)


def _render_verdict(verdict: dict[str, Any]) -> str:
    witness = verdict.get('witness')
    suffix = '' if witness is None else f' (s = {json.dumps(witness)})'
    return f'{_yes_no(verdict["holds"])}{suffix}'


def _render_classification(console: Console, record: dict[str, Any]) -> None:
    instance = record['instance']
    table = Table(title=f'query {record["kind"]}', show_header=False)
    table.add_column('Field', style='cyan')
    table.add_column('Value', overflow='fold')
    table.add_row('module', json.dumps(instance['module']))
    table.add_row('P', json.dumps(instance['sub']))
    table.add_row('S', json.dumps(instance['set']))
    table.add_row('applicable', _yes_no(record['applicable']))
    if record['kind'] == 'classify':
        table.add_row('prime', _yes_no(record['prime']))
        table.add_row('primary', _yes_no(record['primary']))
        table.add_row('S-prime', _render_verdict(record['s_prime']))
        table.add_row('S-primary', _render_verdict(record['s_primary']))
        variants = record['variants']
        table.add_row(
            'variants',
            '-' if variants is None else ', '.join(f'{k}={v}' for k, v in sorted(variants.items())),
        )
    else:
        table.add_row('holds', _render_verdict(record))
    console.print(table)


def _render_suite(console: Console, record: dict[str, Any]) -> None:
    style = 'green' if record['passed'] else 'red'
    failures = record['failures']
    lines = [f'{record["checked"]} instances checked, {len(failures)} failures']
    lines.extend(f'#{f["index"]}: {f["detail"]}' for f in failures[:10])
    console.print(
        Panel('\n'.join(lines), title=f'suite {record["property"]}', border_style=style)
    )


def _render_search(console: Console, record: dict[str, Any]) -> None:
    found = record['found']
    if found is None:
        body = f'[yellow]No instance found[/]; {record["examined"]} instances examined.'
    else:
        body = (
            f'[green]Found[/] after {record["examined"]} instances:\n'
            f'module {json.dumps(found["module"])}\n'
            f'P = {json.dumps(found["sub"])}\nS = {json.dumps(found["set"])}'
        )
    console.print(Panel(body, title=f'search {record["target"]}'))


def _render_record(console: Console, record: dict[str, Any]) -> None:
    if record['kind'] == 'suite':
        _render_suite(console, record)
    elif record['kind'] == 'search':
        _render_search(console, record)
    else:
        _render_classification(console, record)


@app.command('classify')
def classify_command(
    ctx: typer.Context,
    path: Path = FILE_ARGUMENT,
    *,
    as_json: bool = JSON_OPTION,
) -> None:
    """Run every query in an input document."""
    state = _get_state(ctx)
    text = _read_document_text(state, path)
    try:
        report = execute(parse_document(text), limits=state.limits)
    except InputError as error:
        raise _fail(state.err_console, f'{path}:{error}') from None
    if as_json:
        typer.echo(render_json(report), nl=False)
    else:
        for record in report.records:
            _render_record(state.console, record)
    if report.exit_code:
        raise typer.Exit(code=report.exit_code)


@app.command('check')
def check_command(ctx: typer.Context, path: Path = FILE_ARGUMENT) -> None:
    """Parse a document without executing it and print its canonical form."""
    state = _get_state(ctx)
    text = _read_document_text(state, path)
    try:
        document = parse_document(text)
    except InputError as error:
        raise _fail(state.err_console, f'{path}:{error}') from None
    typer.echo(format_document(document), nl=False)


def _family(  # noqa: PLR0913
    max_ring: int,
    max_module: int,
    variants: list[str] | None,
    *,
    sampled: bool,
    seed: int,
    samples: int,
) -> InstanceFamily:
    try:
        ring_variants = tuple(RingVariant(v) for v in variants) if variants else None
    except ValueError as error:
        raise typer.BadParameter(str(error), param_hint='--variant') from None
    return InstanceFamily(
        name='cli',
        max_ring=max_ring,
        max_module=max_module,
        ring_variants=ring_variants or (RingVariant.ZMOD,),
        mode=FamilyMode.SAMPLED if sampled else FamilyMode.EXHAUSTIVE,
        seed=seed,
        samples=samples,
    )


def _run_with_progress(
    console: Console, name: str, family: InstanceFamily, workers: int | None, limits: Limits
) -> SuiteResult:
    with Progress(
        SpinnerColumn(),
        TextColumn('[progress.description]{task.description}'),
        BarColumn(),
        MofNCompleteColumn(),
        TimeElapsedColumn(),
        console=console,
        transient=True,
    ) as progress:
        task = progress.add_task(f'Checking {name}', total=None)
        return run_suite(
            name,
            family,
            workers=workers,
            limits=limits,
            progress=lambda count: progress.advance(task, count),
        )


@app.command('suite')
def suite_command(  # noqa: PLR0913
    ctx: typer.Context,
    name: str = PROPERTY_OPTION,
    max_ring: int = MAX_RING_OPTION,
    max_module: int = MAX_MODULE_OPTION,
    workers: int | None = WORKERS_OPTION,
    variant: list[str] | None = VARIANT_OPTION,
    seed: int = SEED_OPTION,
    samples: int = SAMPLES_OPTION,
    *,
    sampled: bool = SAMPLED_OPTION,
    as_json: bool = JSON_OPTION,
) -> None:
    """Check one registered property over an instance family."""
    state = _get_state(ctx)
    family = _family(max_ring, max_module, variant, sampled=sampled, seed=seed, samples=samples)
    try:
        if as_json:
            result = run_suite(name, family, workers=workers, limits=state.limits)
        else:
            result = _run_with_progress(state.err_console, name, family, workers, state.limits)
    except AlgebraError as error:
        raise _fail(state.err_console, str(error)) from None
    if as_json:
        _emit_json(result.to_json_dict())
    else:
        _render_suite(state.console, {'kind': 'suite', **result.to_json_dict()})
        state.console.print(f'[dim]elapsed {result.elapsed:.2f}s[/]')
    if not result.passed:
        raise typer.Exit(code=EXIT_SUITE_FAILURE)


@app.command('search')
def search_command(
    ctx: typer.Context,
    target: str = TARGET_OPTION,
    max_ring: int = MAX_RING_OPTION,
    max_module: int = MAX_MODULE_OPTION,
    *,
    skip_trivial_set: bool = SKIP_TRIVIAL_OPTION,
    as_json: bool = JSON_OPTION,
) -> None:
    """Find the first instance separating two notions, in canonical order."""
    state = _get_state(ctx)
    bounds = SearchBounds(
        max_ring=max_ring, max_module=max_module, skip_trivial_set=skip_trivial_set
    )
    try:
        with use_limits(state.limits):
            result = search_separation(target, bounds)
    except AlgebraError as error:
        raise _fail(state.err_console, str(error)) from None
    if as_json:
        _emit_json(result.to_json_dict())
    else:
        _render_search(state.console, {'kind': 'search', **result.to_json_dict()})


@app.command('properties')
def properties_command(ctx: typer.Context, *, as_json: bool = JSON_OPTION) -> None:
    """List the registered properties with their references and aliases."""
    state = _get_state(ctx)
    if as_json:
        _emit_json({'properties': [REGISTRY[name].as_dict() for name in sorted(REGISTRY)]})
        return
    table = Table(title='Registered properties')
    table.add_column('Name', style='cyan', no_wrap=True)
    table.add_column('Reference', style='magenta')
    table.add_column('Aliases')
    table.add_column('Checks', overflow='fold')
    for name in sorted(REGISTRY):
        prop = REGISTRY[name]
        table.add_row(name, prop.reference or '-', ', '.join(prop.aliases), prop.summary)
    state.console.print(table)


def run() -> None:
    """Entry point for the CLI script."""
    app()
