class WorkbenchException(Exception):
    """Base error of the workbench; `exit_code` is what the CLI exits with."""

    exit_code = 2

    def __init__(self, detail: str):
        super().__init__(detail)
        self.detail = detail


class InvalidInputException(WorkbenchException):
    exit_code = 2


class ResourceLimitException(WorkbenchException):
    exit_code = 4
