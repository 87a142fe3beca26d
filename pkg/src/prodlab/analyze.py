"""CLI command for config-driven analyses."""

from __future__ import annotations

from pathlib import Path
from typing import Optional

import typer
from rich.console import Console
from typing_extensions import Annotated

from .lab.config import load_config, run_experiment
from .lab.exceptions import ConfigError, ProdlabError
from .lab.reporting import write_json, write_trace_csv
from .verify import JsonOption, SeedOption, _print_json, _resolve_seed, _status_color

console = Console()


def analyze(
    config: Annotated[Path, typer.Option("--config", "-c", help="Experiment config (JSON)")],
    csv: Annotated[
        bool, typer.Option("--csv", help="Also write the distance trace as CSV")
    ] = False,
    out: Annotated[
        Optional[Path],
        typer.Option(
            "--out", "-o", help="Output prefix (default: the config's output, else reports/<config>)"
        ),
    ] = None,
    seed: SeedOption = None,
    as_json: JsonOption = False,
):
    """Run the analysis named in a config file."""
    try:
        experiment = load_config(config)
    except ConfigError as e:
        console.print(f"❌ [bold red]Error:[/bold red] {e}")
        raise typer.Exit(2)

    try:
        report, trace = run_experiment(experiment, _resolve_seed(seed))
    except ConfigError as e:
        console.print(f"❌ [bold red]Error:[/bold red] {e}")
        raise typer.Exit(2)
    except ProdlabError as e:
        console.print(f"❌ [bold red]Error:[/bold red] {e}")
        raise typer.Exit(1)

    prefix = out or (Path(experiment.output) if experiment.output else Path("reports") / config.stem)
    json_path = write_json(report, prefix.with_name(prefix.name + ".json"))
    csv_path = None
    if csv:
        if trace:
            csv_path = write_trace_csv(trace, prefix.with_name(prefix.name + ".csv"))
        elif not as_json:
            console.print(f"[yellow]{report['analysis']} produces no distance trace.[/yellow]")

    if as_json:
        _print_json(report)
        return

    verdict = report["verdict"]
    color = _status_color(verdict["status"])
    console.print(f"  Analysis:  [bold]{report['analysis']}[/bold]")
    console.print(f"  Verdict:   [{color}]{verdict['status']}[/{color}]")
    console.print(f"  Horizon:   {report['horizon']}")
    console.print(f"  Tolerance: {report['tolerance']}")
    if verdict.get("note"):
        console.print(f"  Note:      {verdict['note']}")
    if verdict.get("witness"):
        console.print(f"  Witness:   [dim]{verdict['witness']}[/dim]")
    console.print(f"[dim]Report: {json_path}[/dim]")
    if csv_path:
        console.print(f"[dim]Trace:  {csv_path}[/dim]")
