"""CLI commands that materialise constructions as JSON."""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from pathlib import Path
from typing import Optional

import typer
from rich.console import Console
from rich.table import Table
from typing_extensions import Annotated

from .lab.concrete import CirclePoint
from .lab.constructions import cantor_scheme
from .lab.exceptions import ProdlabError
from .lab.families import build_a_n, family_S, family_T, kp_prime, linked_witnesses
from .lab.groups import GroupSequence, circle_group
from .lab.reporting import write_json
from .verify import JsonOption, _print_json

app = typer.Typer(help="Build constructions and write them as JSON.")
console = Console()

DepthOption = Annotated[int, typer.Option("--depth", "-d", help="Depth or window size", min=0)]
OutOption = Annotated[
    Optional[Path],
    typer.Option("--out", "-o", help="Output path (default: constructions/<name>.json)"),
]


def _finish(name: str, data: dict, out: Optional[Path], as_json: bool, rows: list[tuple[str, str]]) -> None:
    path = write_json(data, out or Path("constructions") / f"{name}.json")
    if as_json:
        _print_json(data)
        return
    table = Table(show_header=False)
    table.add_column("Key", style="bold")
    table.add_column("Value")
    for key, value in rows:
        table.add_row(key, value)
    console.print(table)
    console.print(f"[dim]Written to {path}[/dim]")


@app.command("hp")
def hp(
    depth: DepthOption = 16,
    count: Annotated[int, typer.Option("--count", "-n", help="Number of a_n to emit")] = 8,
    out: OutOption = None,
    as_json: JsonOption = False,
):
    """Emit the a_n generators on a depth × depth window of K_P."""
    if depth < 1:
        console.print("❌ [bold red]Error:[/bold red] --depth must be at least 1 for hp.")
        raise typer.Exit(2)
    primes = [[kp_prime(i, j) for j in range(depth)] for i in range(depth)]
    a_n = [list(build_a_n(n, depth).coords) for n in range(count)]
    data = {"depth": depth, "count": count, "primes": primes, "a_n": a_n}
    _finish(
        "hp",
        data,
        out,
        as_json,
        [
            ("Window", f"{depth} × {depth}"),
            ("Largest prime", str(primes[-1][-1])),
            ("Generators", str(count)),
        ],
    )


@app.command("cantor")
def cantor(
    depth: DepthOption = 6,
    base: Annotated[int, typer.Option("--base", "-b", help="Sequence a_n = 1/base^(n+1)", min=2)] = 3,
    out: OutOption = None,
    as_json: JsonOption = False,
):
    """Build the Cantor scheme of balls for a geometric circle sequence."""
    seq = GroupSequence(
        circle_group(), lambda n: CirclePoint(Fraction(1, base ** (n + 1))), f"1/{base}^(n+1)"
    )
    try:
        tree = cantor_scheme(seq, depth)
    except ProdlabError as e:
        console.print(f"❌ [bold red]Error:[/bold red] {e}")
        raise typer.Exit(1)
    rows = [("Leaves", str(len(tree.leaves)))]
    rows += [(name, "[green]ok[/green]" if ok else "[red]violated[/red]") for name, ok in tree.checks.items()]
    _finish("cantor", tree.to_dict(), out, as_json, rows)
    if not tree.ok:
        raise typer.Exit(1)


@app.command("families")
def families(
    depth: DepthOption = 64,
    count: Annotated[int, typer.Option("--count", "-n", help="Number of sets per family")] = 8,
    out: OutOption = None,
    as_json: JsonOption = False,
):
    """Emit the S and T families on [0, depth) with linked witnesses."""
    S = family_S(count, depth)
    T = family_T(count, depth)
    linked = {f"{n},{m}": linked_witnesses(n, m, 3) for n, m in combinations(range(count), 2)}
    data = {
        "window": depth,
        "S": [sorted(s) for s in S],
        "T": [sorted(t) for t in T],
        "linked": linked,
    }
    _finish(
        "families",
        data,
        out,
        as_json,
        [("Window", str(depth)), ("Sets", str(count)), ("Linked pairs", str(len(linked)))],
    )
