"""
NucleusKit CLI - Command-line interface for nuclei, completions and verification suites
"""

import asyncio
import sys
from typing import Any, Callable, Dict, List, Optional

import click
from rich.console import Console

from nucleuskit.core.config import OUTPUT_FORMATS
from nucleuskit.core.engine import NucleusEngine
from nucleuskit.core.errors import NucleusKitError, VerificationFailure
from nucleuskit.tester.suites import SUITES

err_console = Console(stderr=True)


class NucleusCLI:
    """Runs one subcommand against a freshly configured engine"""

    def __init__(self, options: Dict[str, Any]):
        self.workspace = options.pop("workspace", None)
        self.output = options.pop("output", None)
        self.config = {key: value for key, value in options.items() if value is not None}

    async def run(self, command: str, args: List[str], inputs: List[str]) -> int:
        """
        Run the command and return its exit code.

        Args:
            command: subcommand name
            args: positional arguments of the subcommand
            inputs: the arguments that are input files, checked to exist
        """
        try:
            engine = NucleusEngine(
                workspace=self.workspace,
                config={**self.config, "subcommand": command, "inputs": inputs},
            )
            handler: Callable = getattr(self, f"_cmd_{command}")
            return await handler(engine, *args)
        except KeyboardInterrupt:
            err_console.print("\nInterrupted by user")
            return 130
        except NucleusKitError as e:
            err_console.print(f"Error: {e}", style="red", markup=False)
            return e.exit_code

    async def _emit(self, engine: NucleusEngine, result: Dict[str, Any]) -> None:
        text = await engine.save(result, self.output)
        if self.output is None:
            click.echo(text, nl=False)

    def _banner(self, title: str, lines: List[str]) -> None:
        err_console.print("=" * 60, markup=False)
        err_console.print(title, markup=False)
        err_console.print("=" * 60, markup=False)
        for line in lines:
            err_console.print(line, markup=False)

    async def _cmd_nucleus(self, engine: NucleusEngine, input_path: str) -> int:
        """Execute nucleus command"""
        result = await engine.compute_nucleus(input_path)
        await self._emit(engine, result)
        if self.output:
            self._banner("Nucleus", [f"{result['size']} fixpoints", f"Written to {self.output}"])
        return 0

    async def _cmd_dm(self, engine: NucleusEngine, poset_path: str) -> int:
        """Execute dm command"""
        result = await engine.compute_dm(poset_path)
        await self._emit(engine, result)
        if self.output:
            self._banner("Dedekind-MacNeille completion", [f"{result['size']} cuts"])
        return 0

    async def _cmd_verify(self, engine: NucleusEngine, suite: str) -> int:
        """Execute verify command"""
        result = await engine.verify(suite)
        await self._emit(engine, result)
        report = result["report"]
        self._banner(
            f"Suite {suite}",
            [
                f"{len(report.claims) - result['failures']}/{len(report.claims)} claims passed",
                *[f"  FAIL {claim.id}" for claim in report.failures()],
            ],
        )
        if result["status"] != "success":
            raise VerificationFailure(f"{result['failures']} claim(s) failed in suite {suite}")
        return 0

    async def _cmd_extend(self, engine: NucleusEngine, category_path: str, profunctor_path: str) -> int:
        """Execute extend command"""
        result = await engine.extend(category_path, profunctor_path)
        await self._emit(engine, result)
        if self.output:
            self._banner("Extension", [f"{result['loose']} loose, {result['tight']} tight"])
        return 0


def run_options(f: Callable) -> Callable:
    """Caps, tolerances and output flags shared by every subcommand"""
    options = [
        click.option("--max-size", type=int, default=None, help="Largest poset, G-set or orbit count swept (default 5)"),
        click.option("--budget", type=int, default=None, help="Enumeration budget (default 10000000)"),
        click.option("--carrier-cap", type=int, default=None, help="Largest algebra carrier tried (default 3)"),
        click.option("--eps", type=float, default=None, help="Tolerance for quantale comparisons (default 1e-9)"),
        click.option("--jobs", "-j", type=int, default=None, help="Parallel workers for sweeps"),
        click.option("--witnesses", is_flag=True, default=None, help="Include witnesses in artifacts"),
        click.option("--format", "output_format", type=click.Choice(OUTPUT_FORMATS), default=None),
        click.option("--output", "-o", type=click.Path(dir_okay=False), default=None),
        click.option("--workspace", "-w", type=click.Path(file_okay=False), default=None, help="Directory for logs"),
        click.option("--verbose", "-v", is_flag=True, default=None, help="Verbose output"),
    ]
    for option in reversed(options):
        f = option(f)
    return f


def _run(
    ctx: click.Context,
    command: str,
    args: List[str],
    options: Dict[str, Any],
    inputs: Optional[List[str]] = None,
) -> None:
    inputs = args if inputs is None else inputs
    code = asyncio.run(NucleusCLI(options).run(command, args, inputs))
    ctx.exit(code)


@click.group(
    epilog="""
\b
Examples:
  nucleuskit nucleus context.cxt --format dot
  nucleuskit dm poset.json
  nucleuskit verify --suite posets --max-size 5
  nucleuskit extend category.json profunctor.json --witnesses
"""
)
@click.version_option("0.1.0", prog_name="nucleuskit")
def cli() -> None:
    """NucleusKit - nuclei and bicompletions of finite matrices"""


@cli.command()
@click.argument("input_path")
@run_options
@click.pass_context
def nucleus(ctx: click.Context, input_path: str, **options: Any) -> None:
    """Concept lattice of a context, or fixpoints of a quantale matrix"""
    _run(ctx, "nucleus", [input_path], options)


@cli.command()
@click.argument("poset_path")
@run_options
@click.pass_context
def dm(ctx: click.Context, poset_path: str, **options: Any) -> None:
    """Dedekind-MacNeille completion of a poset"""
    _run(ctx, "dm", [poset_path], options)


@cli.command()
@click.option("--suite", required=True, help=f"One of: {', '.join(SUITES)}")
@run_options
@click.pass_context
def verify(ctx: click.Context, suite: str, **options: Any) -> None:
    """Run a verification suite; exits 1 when a claim fails"""
    _run(ctx, "verify", [suite], options, inputs=[])


@cli.command()
@click.argument("category_path")
@click.argument("profunctor_path")
@run_options
@click.pass_context
def extend(ctx: click.Context, category_path: str, profunctor_path: str, **options: Any) -> None:
    """Loose and tight extension matrices of a profunctor"""
    _run(ctx, "extend", [category_path, profunctor_path], options)


def main(argv: Optional[List[str]] = None) -> None:
    """Main entry point"""
    cli.main(args=argv, prog_name="nucleuskit")


if __name__ == "__main__":
    main(sys.argv[1:])
