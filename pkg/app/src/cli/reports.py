import json
from typing import Any, Dict

import click

from src.bounds.counting import BadCountBound
from src.bounds.magnitude import Magnitude, Verdict
from src.cli.instances import FORMAT_VERSION


HOLDS = "HOLDS"
VIOLATED = "VIOLATED"


def report(command: str, **fields: Any) -> Dict[str, Any]:
    return {"version": FORMAT_VERSION, "command": command, **fields}


def emit(document: Dict[str, Any]):
    """
    Write a report to stdout as JSON; key order is insertion order, so output is stable.
    """
    click.echo(json.dumps(document, indent=2))


def finding(holds: bool) -> str:
    return HOLDS if holds else VIOLATED


def quantity(value: int) -> Dict[str, str]:
    """
    An exact count as digits, or as a lower log2 bound past the display cap.
    """
    return Magnitude.of(value).to_document()


def bad_count_document(bound: BadCountBound) -> Dict[str, Any]:
    verdict = {
        Verdict.TRUE: "bad < total: a good object exists",
        Verdict.FALSE: "bad >= total: the counting argument does not apply",
        Verdict.INDETERMINATE: "indeterminate at this precision",
    }[bound.verdict]
    return {
        "bad_bound": bound.bad_bound.to_document(),
        "total": bound.total.to_document(),
        "verdict": bound.verdict.value,
        "arithmetic": bound.arithmetic.value,
        "line": verdict,
    }
