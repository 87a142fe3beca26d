from __future__ import annotations

import logging

import typer
from rich import print
from rich.console import Console
from rich.logging import RichHandler
from typing_extensions import Annotated

from . import analyze, construct, verify

app = typer.Typer(
    help="Exact-arithmetic lab for productive sequences in topological groups.",
    no_args_is_help=True,
)
app.command("verify")(verify.verify)
app.command("analyze")(analyze.analyze)
app.add_typer(construct.app, name="construct")


def _setup_logging(verbose: bool) -> None:
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format="%(message)s",
        handlers=[RichHandler(console=Console(stderr=True), show_path=False)],
        force=True,
    )


@app.callback(invoke_without_command=True)
def main(
    ctx: typer.Context,
    verbose: Annotated[bool, typer.Option("--verbose", "-v", help="Debug logging on stderr")] = False,
):
    _setup_logging(verbose)
    if ctx.invoked_subcommand is None:
        print(
            """[orange_red1]
    ╭──────────────────────────────────────────────────────────────────────╮
    │   prodlab: productive and summable sequences, checked exactly.       │
    ╰──────────────────────────────────────────────────────────────────────╯
[/orange_red1]
"""
        )
        typer.echo(ctx.get_help())


if __name__ == "__main__":
    app()
