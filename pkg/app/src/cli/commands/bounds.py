from typing import Optional, Tuple

import click

from logger import get_logger
from src.bounds.counting import (
    Arithmetic,
    hypergraph_bad_count_bound,
    multicolor_bad_count_bound,
    ramsey_bad_count_bound,
)
from src.bounds.formulas import (
    discrepancy_guarantee,
    erdos_graph_bound,
    erdos_hypergraph_bound,
    erdos_multicolor_bound,
    relaxed_discrepancy_threshold,
    satisfies_discrepancy_condition,
)
from src.bounds.magnitude import Magnitude
from src.cli.exceptions import workbench_errors
from src.cli.reports import bad_count_document, emit, report


# Global Objects
router = click.Group("bounds", help="Evaluate the closed-form bounds.")
logger = get_logger(__name__)

arithmetic_option = click.option(
    "--arithmetic",
    type=click.Choice([a.value for a in Arithmetic]),
    default=Arithmetic.AUTO.value,
    show_default=True,
    help="Tier deciding the bad-count verdict.",
)


def _size_for_verdict(given: Optional[int], bound: Magnitude) -> Optional[int]:
    if given is not None:
        return given
    return bound.exact if bound.is_exact else None


@router.command("ramsey")
@click.option("--n", type=int, required=True, help="Clique size.")
@click.option("--r", type=int, default=None, help="Vertex count for the bad-count verdict.")
@arithmetic_option
@workbench_errors
def ramsey(n: int, r: Optional[int], arithmetic: str):
    """Vertices of a graph with no n-clique and no n-anticlique."""
    vertices = erdos_graph_bound(n)
    document = report(
        "bounds ramsey", n=n, formula="2^floor((n-2)/2)", vertices=vertices.to_document()
    )
    r = _size_for_verdict(r, vertices)
    if r is not None and 2 <= n <= r:
        document["bad_count"] = {"r": r, **bad_count_document(ramsey_bad_count_bound(r, n, arithmetic))}
    emit(document)


@router.command("multicolor")
@click.option("--n", type=int, required=True, help="Clique size.")
@click.option("--k", type=int, required=True, help="Color count.")
@click.option("--r", type=int, default=None, help="Vertex count for the bad-count verdict.")
@arithmetic_option
@workbench_errors
def multicolor(n: int, k: int, r: Optional[int], arithmetic: str):
    """Vertices of a complete graph k-colorable with no monochromatic n-clique."""
    vertices = erdos_multicolor_bound(n, k)
    document = report(
        "bounds multicolor", n=n, k=k, formula="k^floor((n-2)/2)", vertices=vertices.to_document()
    )
    r = _size_for_verdict(r, vertices)
    if r is not None and 2 <= n <= r:
        document["bad_count"] = {
            "r": r,
            **bad_count_document(multicolor_bad_count_bound(r, n, k, arithmetic)),
        }
    emit(document)


@router.command("hyper")
@click.option("--n", type=int, required=True, help="Hyperclique size.")
@click.option("--k", type=int, required=True, help="Color count.")
@click.option("--l", type=int, required=True, help="Subset size.")
@click.option("--m", type=int, default=None, help="Ground set size for the bad-count verdict.")
@arithmetic_option
@workbench_errors
def hyper(n: int, k: int, l: int, m: Optional[int], arithmetic: str):
    """Ground set whose l-subsets are k-colorable with no monochromatic n-hyperclique."""
    elements = erdos_hypergraph_bound(n, k, l)
    document = report(
        "bounds hyper",
        n=n,
        k=k,
        l=l,
        formula="k^floor((n-l+1)^(l-1)/l!)",
        elements=elements.to_document(),
    )
    m = _size_for_verdict(m, elements)
    if m is not None and l <= n <= m:
        document["bad_count"] = {
            "m": m,
            **bad_count_document(hypergraph_bad_count_bound(m, n, l, k, arithmetic)),
        }
    emit(document)


@router.command("discrepancy")
@click.option("--n", type=int, required=True, help="Ground set size.")
@click.option("--s", type=int, required=True, help="Number of sets.")
@click.option("--a", "candidates", type=int, multiple=True, help="Threshold to check; repeatable.")
@workbench_errors
def discrepancy(n: int, s: int, candidates: Tuple[int, ...]):
    """Smallest a with 2^(a^2) >= (2s)^(2n), and the round threshold reached by hand."""
    a = discrepancy_guarantee(n, s)
    relaxed = relaxed_discrepancy_threshold(n, s)
    checks = []
    for candidate in dict.fromkeys((a - 1, a, relaxed) + candidates):
        if candidate < 1:
            continue
        holds = satisfies_discrepancy_condition(candidate, n, s)
        checks.append(
            f"a={candidate} satisfies condition" if holds else f"a={candidate} does not satisfy condition"
        )
    emit(
        report(
            "bounds discrepancy",
            n=n,
            s=s,
            formula="2^(a^2) >= (2s)^(2n)",
            a=a,
            relaxed=relaxed,
            checks=checks,
        )
    )
