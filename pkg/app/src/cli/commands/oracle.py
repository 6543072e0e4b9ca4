from typing import Optional

import click

from logger import get_logger
from settings import settings
from src.bounds.formulas import discrepancy_guarantee
from src.cli.exceptions import CommandException, ExitCode, workbench_errors
from src.cli.instances import read_instance, to_document
from src.cli.reports import HOLDS, bad_count_document, emit, finding, quantity, report
from src.core.entities import SetSystem, mask_of
from src.core.exceptions import InvalidInputException
from src.oracle.colorings import (
    CountMode,
    bad_coloring_report,
    count_exceeding_colorings,
    min_max_discrepancy,
)
from src.oracle.graphs import count_ramsey_graphs


# Global Objects
router = click.Group("oracle", help="Count bad objects exactly at desk scale.")
logger = get_logger(__name__)

force_option = click.option("--force", is_flag=True, help="Ignore the enumeration caps.")
workers_option = click.option(
    "--workers",
    type=int,
    default=None,
    help="Worker processes; defaults to the WORKERS setting.",
)

# Effectively unbounded, for --force
NO_CAP = 1 << 16


def _cap(force: bool) -> Optional[int]:
    return NO_CAP if force else None


def _finish(document: dict, holds: bool):
    emit(document)
    if not holds:
        raise CommandException(
            f"{document['command']}: bound VIOLATED by an exact count",
            ExitCode.BOUND_VIOLATED,
        )


def _parse_set(text: str, n: int) -> int:
    try:
        members = [int(token) for token in text.split(",") if token.strip()]
    except ValueError as e:
        raise InvalidInputException(f"--set must be comma separated integers, got {text!r}") from e
    for j in members:
        if not 1 <= j <= n:
            raise InvalidInputException(f"--set element {j} is outside [1, {n}]")
    return mask_of(j - 1 for j in members)


@router.command("count-bad")
@click.option("--n", type=int, required=True, help="Ground set size.")
@click.option("--set", "members", default="", help="1-based elements of M, comma separated.")
@click.option("--a", type=int, required=True, help="Threshold.")
@click.option(
    "--mode",
    type=click.Choice([m.value for m in CountMode]),
    default=CountMode.ENUMERATE.value,
    show_default=True,
)
@force_option
@workers_option
@workbench_errors
def count_bad(n: int, members: str, a: int, mode: str, force: bool, workers: Optional[int]):
    """#{x : delta_M(x) >= a} next to 2^(n - a^2/(2n))."""
    if n < 1:
        raise InvalidInputException(f"ground set size must be positive, got n={n}")
    result = bad_coloring_report(n, _parse_set(members, n), a, mode, _cap(force), workers)
    _finish(
        report(
            "oracle count-bad",
            n=n,
            size=result.size,
            a=a,
            mode=CountMode(mode).value,
            count=quantity(result.count),
            bound=f"2^{result.bound_log2:g}",
            finding=finding(result.holds),
        ),
        result.holds,
    )


@router.command("count-exceeding")
@click.option("--in", "path", type=click.Path(dir_okay=False), required=True, help="Set system file.")
@click.option("--a", type=int, required=True, help="Threshold.")
@force_option
@workers_option
@workbench_errors
def count_exceeding(path: str, a: int, force: bool, workers: Optional[int]):
    """#{x : some |delta_{M_k}(x)| >= a} against the union bound."""
    system = read_instance(path, SetSystem)
    result = count_exceeding_colorings(system, a, _cap(force), workers)
    _finish(
        report(
            "oracle count-exceeding",
            n=result.n,
            s=result.s,
            a=a,
            count=quantity(result.count),
            total=quantity(result.total),
            per_set=[quantity(c) for c in result.per_set],
            union_sum=quantity(result.union_sum),
            guaranteed=result.guaranteed,
            finding=finding(result.holds),
        ),
        result.holds,
    )


@router.command("exact-discrepancy")
@click.option("--in", "path", type=click.Path(dir_okay=False), required=True, help="Set system file.")
@force_option
@workers_option
@workbench_errors
def exact_discrepancy(path: str, force: bool, workers: Optional[int]):
    """The exact min over x of max_k |delta_{M_k}(x)|, with the first optimal x."""
    system = read_instance(path, SetSystem)
    result = min_max_discrepancy(system, _cap(force), workers)
    document = report(
        "oracle exact-discrepancy",
        n=system.n,
        s=system.s,
        value=result.value,
        witness=to_document(result.witness).dict(),
    )
    holds = True
    if system.n and system.s:
        a = discrepancy_guarantee(system.n, system.s)
        holds = result.value < a
        document.update(guarantee=a, finding=finding(holds))
    else:
        document.update(finding=HOLDS)
    _finish(document, holds)


@router.command("count-ramsey")
@click.option("--r", type=int, required=True, help="Vertex count.")
@click.option("--n", type=int, required=True, help="Clique size.")
@force_option
@workers_option
@workbench_errors
def count_ramsey(r: int, n: int, force: bool, workers: Optional[int]):
    """Graphs on r labeled vertices with an n-clique or an n-anticlique."""
    max_edge_bits = NO_CAP if force else settings.ENUMERATION_MAX_EDGE_BITS
    result = count_ramsey_graphs(r, n, max_edge_bits, workers)
    document = report(
        "oracle count-ramsey",
        r=r,
        n=n,
        count=quantity(result.count),
        total=quantity(result.total),
        line=f"{result.count} of {result.total}",
    )
    if result.bound is not None:
        document["bad_count"] = bad_count_document(result.bound)
    document["finding"] = finding(result.holds)
    _finish(document, result.holds)
