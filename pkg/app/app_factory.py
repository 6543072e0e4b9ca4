import click

from settings import settings  # noqa
from logger import configure_logger
from src.bounds.magnitude import allow_long_digit_strings


def app_factory() -> click.Group:
    configure_logger()
    allow_long_digit_strings()
    from src.cli.cli import cli_router

    return cli_router
