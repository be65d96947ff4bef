"""CLI for partition-algebra."""

from contextlib import contextmanager
from pathlib import Path
from typing import Iterable, Iterator, List, Optional

import typer
from pydantic import BaseModel, ConfigDict
from rich.console import Console

from . import __version__
from .config import Config
from .diagrams.relations import half_relation_suite, relation_suite
from .diagrams.seatplan import (
    compose,
    enumerate_all,
    format_seatplan,
    has_fixed_last_strand,
    parse_seatplan,
    to_dot,
)
from .diagrams.standardform import (
    eval_word,
    format_word,
    parse_word,
    round_trip_report,
    standard_word,
)
from .models import (
    DiagramRecord,
    DimensionRecord,
    MatrixEntryRecord,
    ProductRecord,
    RankRecord,
    Record,
    Report,
    SumRecord,
    TraceRecord,
    VerdictRecord,
    WordRecord,
)
from .representations.bratteli import dims as dimension_table
from .representations.bratteli import format_level, graph_export, parse_shape, to_doubled
from .representations.matrices import format_grid
from .representations.seminormal import SeminormalForm, faithfulness_rank
from .representations.verify import verify_rep_relations
from .utils.exceptions import BoundExceededError, PartitionAlgebraError, ParseError
from .utils.set_partitions import bell_number

app = typer.Typer(
    name="partalg",
    help="Exact computation in the partition algebras A_n(Q) and A_{n-1/2}(Q)",
    add_completion=False,
)

console = Console()
err_console = Console(stderr=True)

VERIFY_TARGETS = ("diagram-relations", "half-relations", "rep-relations", "round-trip")


class CliState(BaseModel):
    """Global options shared by every command."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    config: Config
    json_output: bool = False
    quiet: bool = False

    @property
    def progress_console(self) -> Optional[Console]:
        return None if self.quiet or self.json_output else err_console


def _out(text: str) -> None:
    console.print(text, markup=False, highlight=False, soft_wrap=True)


def _emit(state: CliState, records: Iterable[Record]) -> None:
    for record in records:
        _out(record.model_dump_json() if state.json_output else record.line())


@contextmanager
def _domain_errors() -> Iterator[None]:
    """Report library errors as ``Error [code]: message`` and exit 1."""
    try:
        yield
    except PartitionAlgebraError as e:
        err_console.print(f"Error [{e.code}]: {e}", markup=False, highlight=False, soft_wrap=True)
        raise typer.Exit(1)


def _state(ctx: typer.Context) -> CliState:
    if ctx.obj is None:
        ctx.obj = CliState(config=Config())
    return ctx.obj


def _check_level(state: CliState, level: str) -> None:
    bound = state.config.level_bound
    if to_doubled(level) > 2 * bound:
        hint = "" if state.config.unsafe_bounds else " (use --unsafe-bounds to raise it)"
        raise BoundExceededError(f"Level {level} exceeds the representation bound {bound}{hint}")


@app.callback()
def main(
    ctx: typer.Context,
    config_path: Optional[Path] = typer.Option(
        None, "--config", help="YAML file overriding the default settings"
    ),
    json_output: bool = typer.Option(
        False, "--json", help="Emit one JSON record per result line"
    ),
    seed: Optional[int] = typer.Option(None, "--seed", help="Seed for randomized sweeps"),
    unsafe_bounds: bool = typer.Option(
        False, "--unsafe-bounds", help="Allow n and levels above the default bounds"
    ),
    quiet: bool = typer.Option(False, "--quiet", "-q", help="Hide progress bars"),
) -> None:
    """Partition algebra diagrams, relations and seminormal representations."""
    with _domain_errors():
        config = Config.load_from_file(config_path) if config_path else Config()
        config = config.with_overrides(seed=seed, unsafe_bounds=unsafe_bounds or None)
    ctx.obj = CliState(config=config, json_output=json_output, quiet=quiet)


@app.command()
def multiply(
    ctx: typer.Context,
    left: str = typer.Argument(..., help="Upper diagram, e.g. \"{{1,1'},{2,2'}}\""),
    right: str = typer.Argument(..., help="Lower diagram"),
    n: Optional[int] = typer.Option(None, "--n", "-n", help="Strand count (default: inferred)"),
    dot: bool = typer.Option(False, "--dot", help="Print the product as a DOT graph"),
) -> None:
    """Multiply two seat-plans: the first is stacked on top of the second."""
    state = _state(ctx)
    with _domain_errors():
        result = compose(parse_seatplan(left, n), parse_seatplan(right, n))
        if dot:
            _out(to_dot(result.diagram))
            return
        record = ProductRecord(power=result.removed, diagram=format_seatplan(result.diagram))
        _emit(state, [record])


@app.command("standard-word")
def standard_word_command(
    ctx: typer.Context,
    diagram: str = typer.Argument(..., help="Seat-plan text"),
    n: Optional[int] = typer.Option(None, "--n", "-n", help="Strand count (default: inferred)"),
) -> None:
    """Print the standard word of a seat-plan (empty for the identity)."""
    state = _state(ctx)
    with _domain_errors():
        w = parse_seatplan(diagram, n)
        record = WordRecord(diagram=format_seatplan(w), word=format_word(standard_word(w)))
        _emit(state, [record])


@app.command("eval-word")
def eval_word_command(
    ctx: typer.Context,
    word: str = typer.Argument(..., help="Letters such as \"s1 f2 e3\""),
    n: int = typer.Option(..., "--n", "-n", help="Strand count"),
) -> None:
    """Evaluate a word to ``Q^p * diagram``."""
    state = _state(ctx)
    with _domain_errors():
        diagram, power = eval_word(parse_word(word), n)
        _emit(state, [ProductRecord(power=power, diagram=format_seatplan(diagram))])


@app.command("enumerate")
def enumerate_command(
    ctx: typer.Context,
    n: int = typer.Option(..., "--n", "-n", help="Strand count"),
    fixed_last: bool = typer.Option(
        False, "--fixed-last", help="Only diagrams joining n and n' (the A_{n-1/2} basis)"
    ),
    count: bool = typer.Option(False, "--count", help="Print only the number of diagrams"),
) -> None:
    """List every seat-plan on n strands in canonical order."""
    state = _state(ctx)
    with _domain_errors():
        state.config.check_strands(n)
        diagrams = enumerate_all(n, bound=state.config.enumerate_bound)
        if fixed_last:
            diagrams = (w for w in diagrams if has_fixed_last_strand(w))
        if count:
            _out(str(sum(1 for _ in diagrams)))
            return
        _emit(state, (DiagramRecord(diagram=format_seatplan(w)) for w in diagrams))


@app.command()
def dims(
    ctx: typer.Context,
    level: str = typer.Option(..., "--level", "--n", "-n", help="Level, e.g. 3 or 5/2"),
) -> None:
    """Dimensions of the irreducible modules at a level, and the sum of their squares."""
    state = _state(ctx)
    with _domain_errors():
        state.config.check_strands((to_doubled(level) + 1) // 2)
        table = dimension_table(level)
        _emit(state, [DimensionRecord(shape=str(v), dimension=d) for v, d in table.items()])
        _emit(state, [SumRecord(sum_of_squares=sum(d * d for d in table.values()))])


@app.command("bratteli-dot")
def bratteli_dot(
    ctx: typer.Context,
    level: str = typer.Option(..., "--level", "--n", "-n", help="Top level, e.g. 2 or 5/2"),
) -> None:
    """Print the Bratteli graph up to a level as DOT."""
    state = _state(ctx)
    with _domain_errors():
        _out(graph_export(level, bound=state.config.enumerate_bound))


@app.command("rep-matrix")
def rep_matrix(
    ctx: typer.Context,
    level: str = typer.Option(..., "--level", help="Level, e.g. 3 or 5/2"),
    shape: str = typer.Option(..., "--shape", help="Target shape, e.g. \"~[1]\""),
    gen: str = typer.Option(..., "--gen", help="Generator or word, e.g. s2 or \"s1 e1 s1\""),
    c: Optional[str] = typer.Option(None, "--c", help="Off-diagonal scale (default: config)"),
    grid: bool = typer.Option(False, "--grid", help="Print a dense grid instead of entries"),
) -> None:
    """Print the seminormal matrix of a generator (or word) on one module."""
    state = _state(ctx)
    with _domain_errors():
        config = state.config.with_overrides(c=c)
        _check_level(state, level)
        target = parse_shape(shape)
        word = parse_word(gen)
        form = SeminormalForm(c=config.c_value)
        matrix = form.word(word, target, level)
        if not state.json_output:
            letters = word.letters
            if len(letters) == 1:
                header = form.generator(letters[0], target, level).header()
            else:
                header = [f"# {format_word(word)} on {target} at level {level}"]
            for line in header:
                _out(line)
        if grid and not state.json_output:
            for line in format_grid(matrix):
                _out(line)
            return
        records = [
            MatrixEntryRecord(row=i, col=j, value=str(entry))
            for i, row in enumerate(matrix, start=1)
            for j, entry in enumerate(row, start=1)
            if not entry.is_zero()
        ]
        _emit(state, records)


def _parse_targets(what: str) -> List[str]:
    targets = [t.strip() for t in what.split(",") if t.strip()]
    unknown = [t for t in targets if t not in VERIFY_TARGETS]
    if unknown or not targets:
        raise ParseError(
            f"Unknown verify target(s) {', '.join(unknown) or '(none)'}; "
            f"choose from {', '.join(VERIFY_TARGETS)}"
        )
    return targets


@app.command()
def verify(
    ctx: typer.Context,
    n: int = typer.Option(..., "--n", "-n", help="Strand count"),
    what: str = typer.Option(
        "diagram-relations,rep-relations",
        "--what",
        help=f"Comma-separated suites: {', '.join(VERIFY_TARGETS)}",
    ),
    level: Optional[str] = typer.Option(
        None, "--level", help="Level for rep-relations (default: n)"
    ),
    c: Optional[str] = typer.Option(None, "--c", help="Off-diagonal scale (default: config)"),
    show_all: bool = typer.Option(False, "--all", help="Print passing records too"),
) -> None:
    """Run relation and round-trip suites; exit 1 if any record fails."""
    state = _state(ctx)
    progress_console = state.progress_console
    with _domain_errors():
        config = state.config.with_overrides(c=c)
        targets = _parse_targets(what)
        reports: List[Report] = []
        for target in targets:
            if target == "diagram-relations":
                config.check_strands(n)
                reports.append(relation_suite(n, console=progress_console))
            elif target == "half-relations":
                config.check_strands(n)
                reports.append(half_relation_suite(n, console=progress_console))
            elif target == "rep-relations":
                rep_level = level if level is not None else str(n)
                _check_level(state, rep_level)
                reports.append(
                    verify_rep_relations(
                        rep_level,
                        c=config.c_value,
                        max_level=config.level_bound,
                        console=progress_console,
                    )
                )
            else:
                exhaustive = n <= 3
                if not exhaustive:
                    config.check_strands(n)
                reports.append(
                    round_trip_report(
                        n,
                        exhaustive=exhaustive,
                        sample_size=config.sample_size,
                        seed=config.seed,
                        console=progress_console,
                    )
                )

    failed = 0
    for report in reports:
        shown = report.checks if show_all else report.failures
        _emit(state, shown)
        summary = report.summary()
        failed += summary.failed
        if state.json_output:
            _out(summary.model_dump_json())
        else:
            for note in report.notes:
                _out(f"note: {note}")
            _out(f"{summary.title}: {summary.passed}/{summary.total} passed")
    _emit(state, [VerdictRecord(failed=failed)])
    if failed:
        raise typer.Exit(1)


@app.command()
def rank(
    ctx: typer.Context,
    level: str = typer.Option("3", "--level", help="Level, e.g. 3 or 5/2"),
    q0: Optional[int] = typer.Option(None, "--q0", help="Specialization point (default: 101)"),
    c: Optional[str] = typer.Option(None, "--c", help="Off-diagonal scale (default: config)"),
) -> None:
    """Rank of the diagram basis in the sum of all modules, specialized at Q = q0."""
    state = _state(ctx)
    with _domain_errors():
        config = state.config.with_overrides(c=c, q0=q0)
        _check_level(state, level)
        doubled = to_doubled(level)
        result = faithfulness_rank(
            level, q0=config.q0, c=config.c_value, console=state.progress_console
        )
        rows = bell_number(doubled)
        _emit(
            state,
            [
                RankRecord(
                    level=format_level(doubled), q0=config.q0, c=config.c, rows=rows, rank=result
                )
            ],
        )


@app.command()
def trace(
    ctx: typer.Context,
    word: str = typer.Argument("", help="Letters such as \"s1 e1\" (empty: identity)"),
    level: str = typer.Option(..., "--level", help="Level, e.g. 3 or 5/2"),
    c: Optional[str] = typer.Option(None, "--c", help="Off-diagonal scale (default: config)"),
) -> None:
    """Trace of a word on every irreducible module at a level."""
    state = _state(ctx)
    with _domain_errors():
        config = state.config.with_overrides(c=c)
        _check_level(state, level)
        traces = SeminormalForm(c=config.c_value).traces(parse_word(word), level)
        _emit(state, [TraceRecord(shape=str(v), trace=str(t)) for v, t in traces.items()])


@app.command()
def version() -> None:
    """Show version information."""
    console.print(f"partition-algebra version {__version__}")


if __name__ == "__main__":
    app()
