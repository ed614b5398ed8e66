"""version: print the tool version."""

import click

from config import APP_VERSION


@click.command("version")
def version() -> None:
    click.echo(APP_VERSION)
