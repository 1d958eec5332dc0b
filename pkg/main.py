"""
Coxeter Genus Tool - Main Entry Point
Command-line front end for minimal generating pairs and the strong symmetric genus of finite Coxeter groups
"""

import argparse
import logging
import os
import sys
from typing import List, Mapping, Optional, TextIO

from commands import CommandResult, GenusCommands
from ui.output_panel import OutputPanel
from ui.system_info import format_system_info, gather_system_info
from utils.config import FORMATS, TIERS, resolve_settings
from utils.errors import EXIT_INVARIANT, GenusError


logger = logging.getLogger("coxeter_genus")

TABLES = ("sporadic", "exceptional", "all")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tier", choices=TIERS, default=None, help="table tier (default: standard)")
    common.add_argument("--threshold", type=int, default=None,
                        help="largest group order searched exhaustively (default: 5000000)")
    common.add_argument("--heuristic", action="store_const", const=True, default=None,
                        help="allow seeded random search above the threshold")
    common.add_argument("--budget", type=int, default=None, help="trials per heuristic search (default: 20000)")
    common.add_argument("--seed", type=int, default=None, help="heuristic seed (default: 0)")
    common.add_argument("--jobs", type=int, default=None, help="worker processes (default: physical cores)")
    common.add_argument("--format", choices=FORMATS, default=None, help="output format (default: text)")
    common.add_argument("--witness-out", dest="witness_out", default=None, help="write the witness pair here")
    common.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")

    parser = argparse.ArgumentParser(
        prog="coxeter-genus",
        description="Minimal (p,q,r) generating pairs and the strong symmetric genus of finite Coxeter groups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    genus = sub.add_parser("genus", parents=[common], help="genus of one group")
    genus.add_argument("spec", help='group spec: "Dih<n>", "S<n>", "B<n>", "D<n>", G2, H3/I3, H4/I4, F4, E6, E7')

    table = sub.add_parser("table", parents=[common], help="recompute the published tables")
    table.add_argument("--reproduce", choices=TABLES, default="all")
    table.add_argument("--only", nargs="*", default=None, metavar="SPEC", help="restrict to these rows")

    lift = sub.add_parser("lift", parents=[common], help="lift an S_n pair to D_n")
    lift.add_argument("n", type=int)
    lift.add_argument("p", type=int)
    lift.add_argument("q", type=int)
    lift.add_argument("r", type=int)

    spectrum = sub.add_parser("spectrum", parents=[common], help="element orders and candidate triples")
    spectrum.add_argument("spec")

    verify = sub.add_parser("verify", parents=[common], help="re-verify a witness file")
    verify.add_argument("witness")
    return parser


class GenusApp:
    """Main application class for the Coxeter Genus Tool"""

    def __init__(self, argv: Optional[List[str]] = None, stdout: Optional[TextIO] = None,
                 stderr: Optional[TextIO] = None, environ: Optional[Mapping[str, str]] = None):
        self.args = build_parser().parse_args(argv)
        self.stdout = stdout if stdout is not None else sys.stdout
        self.stderr = stderr if stderr is not None else sys.stderr
        self.environ = os.environ if environ is None else environ

    def _configure_logging(self):
        logging.basicConfig(
            stream=self.stderr,
            level=logging.DEBUG if self.args.verbose else logging.WARNING,
            format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        )

    def _dispatch(self, commands: GenusCommands) -> CommandResult:
        args = self.args
        if args.command == "genus":
            return commands.cmd_genus(args.spec)
        if args.command == "table":
            return commands.cmd_table(args.reproduce, only=args.only)
        if args.command == "lift":
            return commands.cmd_lift(args.n, args.p, args.q, args.r)
        if args.command == "spectrum":
            return commands.cmd_spectrum(args.spec)
        return commands.cmd_verify(args.witness)

    def run(self) -> int:
        self._configure_logging()
        flags = {name: getattr(self.args, name, None) for name in
                 ("tier", "threshold", "heuristic", "budget", "seed", "jobs", "format", "witness_out")}
        try:
            settings = resolve_settings(flags, self.environ)
        except GenusError as exc:
            OutputPanel(self.stderr).append_error(str(exc))
            return exc.exit_code

        # Machine-readable formats keep stdout clean for the report body
        status_stream = self.stdout if settings.format == "text" else self.stderr
        panel = OutputPanel(status_stream)
        commands = GenusCommands(settings, output_callback=panel.append_output,
                                 show_progress=getattr(self.stderr, "isatty", lambda: False)())

        if self.args.command == "table" and settings.format == "text":
            panel.append_separator()
            panel.append_output("Coxeter Genus Tool - table reproduction", "#00ffff")
            panel.append_output(format_system_info(gather_system_info(), settings.engine_parameters()))
            panel.append_separator()

        try:
            result = self._dispatch(commands)
        except GenusError as exc:
            logger.debug("command failed", exc_info=True)
            OutputPanel(self.stderr).append_error(str(exc))
            return exc.exit_code
        except Exception as exc:
            logger.exception("internal error")
            OutputPanel(self.stderr).append_error(f"internal error: {exc}")
            return EXIT_INVARIANT

        if result.output:
            self.stdout.write(result.output.rstrip("\n") + "\n")
            self.stdout.flush()
        if result.error:
            OutputPanel(self.stderr).append_error(result.error)
        return result.exit_code


def main(argv: Optional[List[str]] = None) -> int:
    return GenusApp(argv).run()


if __name__ == "__main__":
    sys.exit(main())
