import click

from src.cli.commands import bounds, construct, oracle, verify

cli_router = click.Group(
    "workbench",
    help="Counting bounds, exact oracles and certified random constructions.",
)
cli_router.add_command(bounds.router)
cli_router.add_command(oracle.router)
cli_router.add_command(construct.router)
cli_router.add_command(verify.router)
