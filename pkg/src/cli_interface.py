"""
Command-line interface for berkram.

Parses flags into a job, runs it through the dispatcher, writes any CSV,
SVG or JSON file outputs and prints the report: a rich table for people, or with
--json the deterministic JSON report for machines.

Exit status: 0 when the command's assertions hold, 1 when they do not,
2 for library and input errors (with a JSON error object on stdout), 3 for
I/O errors.

Author: Tom Pravetz
License: MIT
"""

import argparse
import json
import logging
import sys
from typing import Any, Dict, List, Optional

from rich.console import Console
from rich.panel import Panel
from rich.table import Table
from rich.text import Text

from .config import Config, setup_logging
from .dispatcher import CommandDispatcher, CommandResult
from .errors import BerkramError, SchemaError
from .fixtures import BUILTIN_MAPS
from .job_spec import (
    COMMANDS,
    JobSpec,
    emit_json,
    job_from_dict,
    load_map_file,
    parse_input,
    profile_rows,
    write_csv,
    write_json,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_ERROR = 2
EXIT_IO = 3

# Flags copied verbatim into job parameters.
PARAM_FLAGS = ("point", "center", "s0", "s1", "which", "r", "delta", "y", "shift", "ref", "of", "samples", "seed", "n", "m")


class CLIInterface:
    """Human-readable rendering of reports."""

    def __init__(self, console: Optional[Console] = None) -> None:
        self.console = console or Console()

    def render(self, report: Dict[str, Any], passed: bool) -> None:
        """Print a report as a panel of key/value rows."""
        title = Text(f"berkram {report.get('command', '')}", style="bold magenta")
        status = Text("passed" if passed else "FAILED", style="green" if passed else "bold red")

        table = Table(show_header=False, box=None, padding=(0, 1))
        table.add_column("Key", style="bold")
        table.add_column("Value", style="cyan")
        for key in sorted(report):
            if key in ("command", "checks"):
                continue
            table.add_row(key, self._format(report[key]))

        self.console.print(Panel(table, title=title, subtitle=status, style="bright_blue", padding=(1, 1)))
        if "checks" in report:
            self.console.print(self._checks_table(report["checks"]))

    def _checks_table(self, checks: List[Dict[str, Any]]) -> Table:
        table = Table(title="Checks")
        table.add_column("Check", style="bold")
        table.add_column("Expected")
        table.add_column("Actual")
        table.add_column("")
        for check in checks:
            mark = "✅" if check["passed"] else "❌"
            table.add_row(check["name"], self._format(check["expected"]), self._format(check["actual"]), mark)
        return table

    @staticmethod
    def _format(value: Any) -> str:
        if isinstance(value, str):
            return value
        return json.dumps(value, sort_keys=True)


def build_parser() -> argparse.ArgumentParser:
    """Build the argument parser."""
    parser = argparse.ArgumentParser(
        prog="berkram",
        description="Ramification invariants of rational maps on the Berkovich line.",
    )
    parser.add_argument("command", choices=COMMANDS, help="Computation to run")
    parser.add_argument("name", nargs="?", help="Example name for the example command (6.1, 6.2, 6.3 or ex61..)")
    parser.add_argument("--map", help=f"Builtin map ({', '.join(sorted(BUILTIN_MAPS))}) or a JSON map file")
    parser.add_argument("--p", type=int, default=3, help="Residue characteristic (default: 3)")
    parser.add_argument("--domain", choices=("qp", "fpt"), default="qp", help="Q with the p-adic valuation or GF(p)(t)")
    parser.add_argument("--n", type=int, help="Family parameter for ex62 and example 6.2")
    parser.add_argument("--m", type=int, help="Single m for binomlemma (default: sweep 2..200)")
    parser.add_argument("--point", help="Point 'a,s': the disk ord(z - a) >= s; s may be inf")
    parser.add_argument("--center", help="Center of a segment or a Newton polygon shift")
    parser.add_argument("--s0", help="Segment start")
    parser.add_argument("--s1", help="Segment end")
    parser.add_argument("--which", choices=("tfrak", "tau"), help="Profile quantity (default: tfrak)")
    parser.add_argument("--r", help="Tube radius")
    parser.add_argument("--delta", help="Perturbed center for fuzz")
    parser.add_argument("--y", help="Probe for bound")
    parser.add_argument("--shift", help="Forced disk enlargement for rolle")
    parser.add_argument("--ref", help="Reference radius for the locus reach (default: s0)")
    parser.add_argument("--of", choices=("f", "g", "wronskian"), help="Polynomial for newton (default: f)")
    parser.add_argument("--samples", type=int, help="Sample count for thmD and thmE (default: 100)")
    parser.add_argument("--seed", type=int, help="Random seed for thmD and thmE (default: 0)")
    parser.add_argument("--input", help="Read the whole job as JSON from a file, or - for stdin")
    parser.add_argument("--json", action="store_true", help="Print the JSON report")
    parser.add_argument("--csv", help="Write the profile as CSV columns s,value")
    parser.add_argument("--plot", help="Write the profile as an SVG plot")
    parser.add_argument("--json-out", help="Also write the JSON report to this file")
    parser.add_argument("--log-level", help="Override LOG_LEVEL")
    return parser


def job_from_args(args: argparse.Namespace) -> JobSpec:
    """
    Turn parsed flags into a validated job.

    Raises:
        SchemaError: If the flags do not describe a valid job
        OSError: If a map file cannot be read
    """
    data: Dict[str, Any] = {
        "domain": {"tag": "Qp" if args.domain == "qp" else "Fpt", "p": args.p},
        "command": args.command,
        "params": {flag: getattr(args, flag) for flag in PARAM_FLAGS if getattr(args, flag) is not None},
        "output": {"json": bool(args.json)},
    }
    if args.command == "example":
        if not args.name:
            raise SchemaError("example needs a name: 6.1, 6.2 or 6.3")
        data["params"]["name"] = args.name
    elif args.name:
        raise SchemaError(f"unexpected argument {args.name!r} for {args.command}")
    if args.csv:
        data["output"]["csv"] = args.csv
    if args.plot:
        data["output"]["plot"] = args.plot
    if args.json_out:
        data["output"]["jsonOut"] = args.json_out
    if args.map:
        if args.map in BUILTIN_MAPS:
            data["map"] = {"builtin": args.map}
        else:
            data["map"] = load_map_file(args.map)
    return job_from_dict(data)


def emit_side_outputs(job: JobSpec, result: CommandResult, config: Config) -> None:
    """
    Write the CSV, SVG and JSON file outputs requested by the job.

    Raises:
        SchemaError: If an output is requested for a report without a profile
        OSError: If a file cannot be written
    """
    pieces = result.report.get("profile")
    for kind in ("csv", "plot"):
        if job.output.get(kind) and pieces is None:
            raise SchemaError(f"--{kind} needs a command that produces a profile (profile or locus)")
    if job.output.get("csv"):
        write_csv(config.resolve_output(job.output["csv"]), profile_rows(pieces))
    if job.output.get("plot"):
        from .plotting import plot_profile

        plot_profile(
            pieces,
            config.resolve_output(job.output["plot"]),
            which=result.report.get("which", "tfrak"),
            title=f"{job.command}: {job.phi}",
            cells=result.report.get("cells"),
        )
    if job.output.get("jsonOut"):
        path = config.resolve_output(job.output["jsonOut"])
        write_json(path, result.report)
        logger.info(f"Wrote {path}")


def main(argv: Optional[List[str]] = None, config: Optional[Config] = None) -> int:
    """
    Run the command line and return the exit status.

    Args:
        argv: Arguments without the program name; defaults to sys.argv[1:]
        config: Limits and output directory; read from the environment if None
    """
    args = build_parser().parse_args(argv)
    if args.log_level:
        setup_logging(args.log_level)
    config = config or Config()
    want_json = args.json

    try:
        job = parse_input(args.input) if args.input else job_from_args(args)
        want_json = want_json or bool(job.output.get("json"))
        result = CommandDispatcher(config).run(job)
        emit_side_outputs(job, result, config)
    except BerkramError as e:
        logger.error(f"{e.code}: {e}")
        sys.stdout.write(emit_json({"error": e.to_json()}))
        return EXIT_ERROR
    except OSError as e:
        logger.error(f"I/O error: {e}")
        sys.stdout.write(emit_json({"error": {"code": "io_error", "message": str(e)}}))
        return EXIT_IO

    if want_json:
        sys.stdout.write(emit_json(result.report))
    else:
        CLIInterface().render(result.report, result.passed)
    return EXIT_OK if result.passed else EXIT_FAILED
