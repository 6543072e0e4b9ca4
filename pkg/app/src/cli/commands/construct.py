from typing import Optional

import click

from logger import get_logger
from src.cli.exceptions import CommandException, ExitCode, workbench_errors
from src.cli.instances import dump_instance, parse_instance, read_instance, to_document, write_instance
from src.cli.reports import emit, report
from src.construct.constructors import (
    find_hypergraph_coloring,
    find_low_discrepancy_coloring,
    find_multicolor_coloring,
    find_ramsey_graph,
)
from src.construct.sampler import random_set_system
from src.core.certificates import CertificateKind, verify_certificate
from src.core.entities import SetSystem, TrialReport


# Global Objects
router = click.Group("construct", help="Build certified witnesses by seeded random sampling.")
logger = get_logger(__name__)


def trial_options(command):
    command = click.option("--seed", type=int, default=0, show_default=True)(command)
    command = click.option("--max-trials", type=int, default=None, help="Defaults to CONSTRUCT_MAX_TRIALS.")(command)
    command = click.option("--out", type=click.Path(dir_okay=False), default=None, help="Certificate file.")(command)
    command = click.option(
        "--exhaust-budget", is_flag=True, help="Keep sampling after the first success to measure the success rate."
    )(command)
    return command


def _finish(command: str, trials: TrialReport, kind: CertificateKind, out: Optional[str], **check):
    """
    Report a run; a witness is re-read from its serialized form and re-verified before exit 0.
    """
    document = report(
        command,
        parameters=dict(trials.parameters),
        seed=trials.seed,
        generator=trials.generator,
        trials_run=trials.trials_run,
        successes=trials.successes,
        success_rate=trials.success_rate,
        failures=[{"trial": f.trial, "reason": f.reason} for f in trials.failures[:10]],
    )
    if not trials.succeeded:
        document["outcome"] = "exhausted"
        emit(document)
        raise CommandException(
            f"no witness in {trials.trials_run} trials at seed {trials.seed}",
            ExitCode.TRIALS_EXHAUSTED,
        )

    reread = parse_instance(dump_instance(trials.witness))
    verification = verify_certificate(kind, reread, **check)
    if not verification.valid:
        raise CommandException(f"witness failed re-verification: {verification.reason}", ExitCode.VERIFY_FAILED)

    document.update(outcome="success", witness_trial=trials.witness_trial, verification=verification.reason)
    if out is None:
        document["certificate"] = to_document(reread).dict()
    else:
        write_instance(reread, out)
        document["certificate"] = out
    emit(document)


@router.command("ramsey")
@click.option("--n", type=int, required=True, help="Clique size.")
@click.option("--r", type=int, default=None, help="Vertex count; defaults to 2^floor((n-2)/2).")
@trial_options
@workbench_errors
def ramsey(n: int, r: Optional[int], seed: int, max_trials: Optional[int], out: Optional[str], exhaust_budget: bool):
    """A graph with no n-clique and no n-anticlique."""
    trials = find_ramsey_graph(n, r, seed, max_trials, exhaust_budget)
    _finish("construct ramsey", trials, CertificateKind.RAMSEY_GRAPH, out, n=n)


@router.command("multicolor")
@click.option("--n", type=int, required=True, help="Clique size.")
@click.option("--k", type=int, required=True, help="Color count.")
@click.option("--r", type=int, default=None, help="Vertex count; defaults to k^floor((n-2)/2).")
@trial_options
@workbench_errors
def multicolor(
    n: int, k: int, r: Optional[int], seed: int, max_trials: Optional[int], out: Optional[str], exhaust_budget: bool
):
    """A k-coloring of the edges of K_r with no monochromatic n-clique."""
    trials = find_multicolor_coloring(n, k, r, seed, max_trials, exhaust_budget)
    _finish("construct multicolor", trials, CertificateKind.MULTICOLOR, out, n=n)


@router.command("hyper")
@click.option("--n", type=int, required=True, help="Hyperclique size.")
@click.option("--k", type=int, required=True, help="Color count.")
@click.option("--l", type=int, required=True, help="Subset size.")
@click.option("--m", type=int, default=None, help="Ground set size; defaults to the guaranteed one.")
@trial_options
@workbench_errors
def hyper(
    n: int,
    k: int,
    l: int,
    m: Optional[int],
    seed: int,
    max_trials: Optional[int],
    out: Optional[str],
    exhaust_budget: bool,
):
    """A k-coloring of the l-subsets of [m] with no monochromatic n-hyperclique."""
    trials = find_hypergraph_coloring(n, k, l, m, seed, max_trials, exhaust_budget)
    _finish("construct hyper", trials, CertificateKind.HYPER, out, n=n)


@router.command("coloring")
@click.option("--in", "path", type=click.Path(dir_okay=False), required=True, help="Set system file.")
@click.option("--a", type=int, default=None, help="Threshold; defaults to the guaranteed one.")
@trial_options
@workbench_errors
def coloring(
    path: str, a: Optional[int], seed: int, max_trials: Optional[int], out: Optional[str], exhaust_budget: bool
):
    """A red/blue coloring keeping every |delta(M_k)| below a."""
    system = read_instance(path, SetSystem)
    trials = find_low_discrepancy_coloring(system, a, seed, max_trials, exhaust_budget)
    _finish(
        "construct coloring", trials, CertificateKind.DISCREPANCY, out, a=trials.parameters["a"], system=system
    )


@router.command("system")
@click.option("--n", type=int, required=True, help="Ground set size.")
@click.option("--s", type=int, required=True, help="Number of sets.")
@click.option("--size", type=int, required=True, help="Elements per set.")
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), required=True, help="Set system file.")
@workbench_errors
def system(n: int, s: int, size: int, seed: int, out: str):
    """A pseudo-random set system, each set uniform among the size-subsets of [n]."""
    write_instance(random_set_system(n, s, size, seed), out)
    emit(report("construct system", n=n, s=s, size=size, seed=seed, out=out))
