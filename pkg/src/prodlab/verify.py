"""CLI command for running the named verification suites."""

from __future__ import annotations

import os
import sys
from pathlib import Path
from typing import Optional

import typer
from dotenv.main import DotEnv
from rich.console import Console
from rich.table import Table
from typing_extensions import Annotated

from .lab.exceptions import UnknownSuiteError
from .lab.reporting import dumps, write_json
from .lab.suites import report_passed, run_suite, suite_names

console = Console()

SEED_ENV = "PRODLAB_SEED"

# Common option types
SeedOption = Annotated[
    Optional[int],
    typer.Option("--seed", help=f"Random seed (default: ${SEED_ENV}, then .env, then 0)"),
]
JsonOption = Annotated[
    bool,
    typer.Option("--json", "-j", help="Print the report as JSON (no Rich formatting)"),
]


def _get_seed_from_env_file(env_file: str = ".env") -> Optional[str]:
    path = Path(env_file)
    if not path.exists():
        return None
    return DotEnv(path, verbose=False, encoding="utf-8").get(SEED_ENV)


def _resolve_seed(seed: Optional[int] = None) -> int:
    """Get the seed from the argument, env var, or .env file."""
    if seed is not None:
        return seed
    raw = os.environ.get(SEED_ENV) or _get_seed_from_env_file()
    if not raw:
        return 0
    try:
        return int(raw)
    except ValueError:
        console.print(f"❌ [bold red]Error:[/bold red] {SEED_ENV} must be an integer, got '{raw}'.")
        raise typer.Exit(2)


def _print_json(data: object) -> None:
    """Print JSON to stdout (no Rich formatting)."""
    sys.stdout.write(dumps(data))


def _status_color(status: str) -> str:
    colors = {"holds": "green", "fails": "red", "inconclusive": "yellow"}
    return colors.get(status, "white")


def verify(
    suite: Annotated[
        str,
        typer.Option("--suite", "-s", help=f"Suite to run: {', '.join(suite_names())}"),
    ] = "all",
    seed: SeedOption = None,
    out: Annotated[
        Optional[Path],
        typer.Option("--out", "-o", help="Report path (default: reports/<suite>.json)"),
    ] = None,
    as_json: JsonOption = False,
):
    """Run a verification suite and write its JSON report.

    Exits 0 when every verdict matches its expectation, 1 otherwise.
    """
    resolved = _resolve_seed(seed)
    try:
        report = run_suite(suite, resolved)
    except UnknownSuiteError as e:
        console.print(f"❌ [bold red]Error:[/bold red] {e}")
        raise typer.Exit(2)

    path = write_json(report, out or Path("reports") / f"{suite}.json")
    passed = report_passed(report)

    if as_json:
        _print_json(report)
    else:
        table = Table(show_header=True, header_style="bold")
        table.add_column("Item", style="bold")
        table.add_column("Verdict")
        table.add_column("Expected", style="dim")
        table.add_column("Pass", justify="center")
        for item in report["items"]:
            color = _status_color(item["verdict"])
            table.add_row(
                item["name"],
                f"[{color}]{item['verdict']}[/{color}]",
                item["expected"],
                "[green]✓[/green]" if item["pass"] else "[red]✗[/red]",
            )
        console.print(table)
        failed = sum(not item["pass"] for item in report["items"])
        if passed:
            console.print(f"[green]✓ {len(report['items'])} items passed[/green] (seed {resolved})")
        else:
            console.print(f"[red]{failed} of {len(report['items'])} items deviated[/red] (seed {resolved})")
        console.print(f"[dim]Report: {path}[/dim]")

    if not passed:
        raise typer.Exit(1)
