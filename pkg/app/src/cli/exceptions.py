import functools
from enum import IntEnum

import click

from src.core.exceptions import WorkbenchException


class ExitCode(IntEnum):
    OK = 0
    VERIFY_FAILED = 1
    INVALID_INPUT = 2
    BOUND_VIOLATED = 3
    RESOURCE_LIMIT = 4
    TRIALS_EXHAUSTED = 5


class CommandException(click.ClickException):
    def __init__(self, message: str, exit_code: int = ExitCode.INVALID_INPUT):
        super().__init__(message)
        self.exit_code = int(exit_code)


def workbench_errors(command):
    """
    Translate workbench errors raised by a command into its exit code.
    """

    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except WorkbenchException as e:
            raise CommandException(e.detail, e.exit_code) from e

    return wrapper
