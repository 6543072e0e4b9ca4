"""
Las Vegas constructors: sample uniformly at random, verify, repeat.

A witness is only ever returned after verify_certificate accepted it; the
randomness decides how many trials that takes, never whether the answer is right.
"""
from math import comb
from typing import Callable, Dict, List, Optional

import numpy as np

from logger import get_logger
from settings import settings
from src.bounds.formulas import (
    discrepancy_guarantee,
    erdos_graph_bound,
    erdos_hypergraph_bound,
    erdos_multicolor_bound,
)
from src.bounds.magnitude import Magnitude
from src.core.certificates import CertificateKind, Verification, verify_certificate
from src.core.discrepancy import worst_set
from src.core.entities import SetSystem, SignColoring, TrialFailure, TrialReport, Witness, check_color_count
from src.core.exceptions import InvalidInputException, ResourceLimitException
from src.construct.sampler import (
    GENERATOR,
    check_seed,
    sample_edge_coloring,
    sample_graph,
    sample_signs,
    sample_subset_coloring,
    trial_generator,
)


logger = get_logger(__name__)


def _run_trials(
    sample: Callable[[np.random.Generator], Witness],
    verify: Callable[[Witness], Verification],
    seed: int,
    max_trials: Optional[int],
    parameters: Dict[str, int],
    exhaust_budget: bool,
) -> TrialReport:
    max_trials = settings.CONSTRUCT_MAX_TRIALS if max_trials is None else max_trials
    if max_trials < 1:
        raise InvalidInputException(f"max_trials must be positive, got {max_trials}")
    check_seed(seed)

    witness, witness_trial, verification = None, None, None
    successes = 0
    failures: List[TrialFailure] = []
    trials_run = 0
    for trial in range(max_trials):
        trials_run += 1
        candidate = sample(trial_generator(seed, trial))
        result = verify(candidate)
        if result.valid:
            successes += 1
            if witness is None:
                witness, witness_trial, verification = candidate, trial, result.reason
            if not exhaust_budget:
                break
        else:
            failures.append(TrialFailure(trial, result.reason))
            logger.debug("trial_failed", trial=trial, reason=result.reason)

    logger.info(
        "trials_finished",
        seed=seed,
        trials_run=trials_run,
        successes=successes,
        witness_trial=witness_trial,
        **parameters,
    )
    return TrialReport(
        seed=seed,
        generator=GENERATOR,
        trials_run=trials_run,
        witness=witness,
        witness_trial=witness_trial,
        successes=successes,
        failures=tuple(failures),
        parameters=parameters,
        verification=verification,
    )


def _default_size(bound: Magnitude, cap: int, what: str) -> int:
    if not bound.is_exact or bound.exact > cap:
        raise ResourceLimitException(
            f"the guaranteed {what} {bound.describe()} exceeds the practicality cap of {cap}; pass it explicitly"
        )
    return bound.exact


def find_ramsey_graph(
    n: int,
    r: Optional[int] = None,
    seed: int = 0,
    max_trials: Optional[int] = None,
    exhaust_budget: bool = False,
) -> TrialReport:
    """
    A graph on r vertices (default 2^floor((n-2)/2)) with no n-clique and no n-anticlique.
    """
    if n < 2:
        raise InvalidInputException(f"clique size must be at least 2, got n={n}")
    if r is None:
        r = _default_size(erdos_graph_bound(n), settings.CONSTRUCT_MAX_VERTICES, "vertex count")
    if r < 1:
        raise InvalidInputException(f"vertex count must be positive, got r={r}")
    return _run_trials(
        lambda rng: sample_graph(rng, r),
        lambda g: verify_certificate(CertificateKind.RAMSEY_GRAPH, g, n=n),
        seed,
        max_trials,
        {"n": n, "r": r},
        exhaust_budget,
    )


def find_multicolor_coloring(
    n: int,
    k: int,
    r: Optional[int] = None,
    seed: int = 0,
    max_trials: Optional[int] = None,
    exhaust_budget: bool = False,
) -> TrialReport:
    """
    A k-coloring of the edges of K_r (default r = k^floor((n-2)/2)) with no monochromatic n-clique.
    """
    check_color_count(k)
    if n < 2:
        raise InvalidInputException(f"clique size must be at least 2, got n={n}")
    if r is None:
        r = _default_size(erdos_multicolor_bound(n, k), settings.CONSTRUCT_MAX_VERTICES, "vertex count")
    if r < 1:
        raise InvalidInputException(f"vertex count must be positive, got r={r}")
    return _run_trials(
        lambda rng: sample_edge_coloring(rng, r, k),
        lambda c: verify_certificate(CertificateKind.MULTICOLOR, c, n=n),
        seed,
        max_trials,
        {"n": n, "k": k, "r": r},
        exhaust_budget,
    )


def find_hypergraph_coloring(
    n: int,
    k: int,
    l: int,
    m: Optional[int] = None,
    seed: int = 0,
    max_trials: Optional[int] = None,
    exhaust_budget: bool = False,
) -> TrialReport:
    """
    A k-coloring of the l-subsets of [m] (default m = k^floor((n-l+1)^(l-1)/l!))
    with no monochromatic n-hyperclique.
    """
    check_color_count(k)
    if not n >= l >= 1:
        raise InvalidInputException(f"need n >= l >= 1, got n={n}, l={l}")
    if m is None:
        bound = erdos_hypergraph_bound(n, max(k, 2), l)
        if not bound.is_exact or comb(bound.exact, l) > settings.CONSTRUCT_MAX_SUBSETS:
            raise ResourceLimitException(
                f"the guaranteed ground set {bound.describe()} has more than "
                f"{settings.CONSTRUCT_MAX_SUBSETS} subsets of size {l}; pass m explicitly"
            )
        m = bound.exact
    if m < 0:
        raise InvalidInputException(f"ground set size must be nonnegative, got m={m}")
    return _run_trials(
        lambda rng: sample_subset_coloring(rng, m, l, k),
        lambda c: verify_certificate(CertificateKind.HYPER, c, n=n),
        seed,
        max_trials,
        {"n": n, "k": k, "l": l, "m": m},
        exhaust_budget,
    )


def find_low_discrepancy_coloring(
    sys: SetSystem,
    a: Optional[int] = None,
    seed: int = 0,
    max_trials: Optional[int] = None,
    exhaust_budget: bool = False,
) -> TrialReport:
    """
    A coloring x of [n] with |delta(M_k, x)| < a for every set of the system.

    a defaults to the smallest value with 2^(a^2) >= (2s)^(2n), where such a
    coloring is guaranteed to exist.
    """
    if a is None:
        a = discrepancy_guarantee(max(sys.n, 1), max(sys.s, 1))
    if a < 1:
        raise InvalidInputException(f"discrepancy threshold must be positive, got a={a}")
    return _run_trials(
        lambda rng: sample_signs(rng, sys.n),
        lambda x: _verify_discrepancy(sys, x, a),
        seed,
        max_trials,
        {"n": sys.n, "s": sys.s, "a": a},
        exhaust_budget,
    )


def _verify_discrepancy(sys: SetSystem, x: SignColoring, a: int) -> Verification:
    """
    verify_certificate, with failures naming the worst set instead of the first one.
    """
    result = verify_certificate(CertificateKind.DISCREPANCY, x, a=a, system=sys)
    if result.valid:
        return result
    k, value = worst_set(sys, x)
    return Verification(False, f"worst set M_{k + 1} has |delta| = {abs(value)} >= a = {a}")
