import sys
from typing import Dict, Optional, Sequence

from rich.console import Console
from rich.panel import Panel
from rich.rule import Rule
from rich.table import Table
from rich.text import Text

from .harness import HarnessReport, Outcome
from .structures import FiniteNearRing

# Initialize console
console = Console()
error_console = Console(stderr=True)

OUTCOME_STYLES = {
    Outcome.PASS: "green",
    Outcome.FAIL: "bold red",
    Outcome.EXPECTED_FAIL: "yellow",
    Outcome.NOT_APPLICABLE: "dim",
    Outcome.DIVERGED: "magenta",
}


def print_header(title: str):
    """Print a section header rule"""
    console.print(Rule(title, style="cyan"))


def print_raw(text: str):
    """Write machine-readable output straight to stdout, bypassing rich markup"""
    sys.stdout.write(text)
    sys.stdout.flush()


def print_error(message: str):
    error_console.print(f"[bold red]Error:[/bold red] {message}", highlight=False)


def print_diagnostics(name: str, diagnostics: Dict[str, object], grading: Optional[Dict[str, object]] = None):
    """Show the result of `validate` for one structure"""
    table = Table(title=f"{name}: valid", show_header=False)
    table.add_column("Property", style="cyan")
    table.add_column("Value", style="green")
    for key, value in diagnostics.items():
        table.add_row(key.replace("_", " "), "-" if value is None else str(value))
    for key, value in (grading or {}).items():
        table.add_row(key.replace("_", " "), str(value))
    console.print(table)


def print_subsets(near_ring: FiniteNearRing, rows: Sequence[int], title: str,
                  extra: Optional[Dict[str, Sequence[object]]] = None):
    """Tabulate a list of subset masks with optional extra columns"""
    table = Table(title=f"{title} ({len(rows)})")
    table.add_column("#", style="dim")
    table.add_column("Size", style="yellow")
    table.add_column("Elements", style="cyan", no_wrap=False)
    for column in (extra or {}):
        table.add_column(column, style="green")
    for i, mask in enumerate(rows):
        cells = [str(values[i]) for values in (extra or {}).values()]
        table.add_row(str(i + 1), str(bin(mask).count("1")), Text(near_ring.format(mask)), *cells)
    console.print(table)


def print_harness_report(report: HarnessReport):
    """Tabulate harness outcomes and summarise unexpected failures"""
    table = Table(title=f"Theorem checks (scope: {report.scope.value})")
    table.add_column("Structure", style="cyan")
    table.add_column("Id", style="bold")
    table.add_column("Check", no_wrap=False)
    table.add_column("Outcome")
    table.add_column("Detail", style="dim", no_wrap=False)
    for c in report.checks:
        style = OUTCOME_STYLES[c.outcome]
        table.add_row(c.structure, c.check_id, c.title, Text(c.outcome.value, style=style), Text(c.detail))
    console.print(table)
    summary = ", ".join(f"{k}: {v}" for k, v in report.counts().items() if v)
    if report.failures:
        lines = [f"{c.check_id} on {c.structure}: {c.detail} {c.witnesses[:1]}" for c in report.failures]
        console.print(Panel(Text("\n".join(lines)), title="Unexpected failures", border_style="red"))
    console.print(f"[bold]Summary:[/bold] {summary}")
