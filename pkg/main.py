"""IE growth toolkit command-line entry point."""

import sys
from typing import List, Optional

import click
from dotenv import load_dotenv

from commands import COMMANDS
from config import configure_structlog, rescue_from
from exceptions.exit_codes import SUCCESS

load_dotenv()


@click.group(name="ie-growth")
@click.option("--verbose", is_flag=True, help="Log progress at INFO level to stderr.")
def cli(verbose: bool) -> None:
    """Information-entropy growth analysis of annual macroeconomic series."""
    configure_structlog(verbose=verbose)


for command in COMMANDS:
    cli.add_command(command)


def main(argv: Optional[List[str]] = None) -> int:
    """Run the CLI and return its exit code."""
    try:
        result = cli.main(args=argv, prog_name="ie-growth", standalone_mode=False)
    except click.exceptions.Abort:
        click.echo("Aborted!", err=True)
        return 1
    except Exception as exc:  # pylint: disable=broad-exception-caught
        return rescue_from(exc)
    return result if isinstance(result, int) else SUCCESS


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
