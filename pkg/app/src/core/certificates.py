from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence

from src.core.cliques import (
    find_anticlique,
    find_clique,
    find_monochromatic_clique,
    find_monochromatic_hyperclique,
)
from src.core.discrepancy import first_violation
from src.core.entities import EdgeColoring, Graph, SetSystem, SignColoring, SubsetColoring, Witness
from src.core.exceptions import InvalidInputException


class CertificateKind(str, Enum):
    RAMSEY_GRAPH = "ramsey-graph"
    MULTICOLOR = "multicolor"
    HYPER = "hyper"
    DISCREPANCY = "discrepancy"


@dataclass(frozen=True)
class Verification:
    valid: bool
    reason: str


def _vertices(vertices: Sequence[int]) -> str:
    return "{" + ",".join(str(v + 1) for v in vertices) + "}"


def verify_certificate(
    kind: CertificateKind,
    witness: Witness,
    *,
    n: Optional[int] = None,
    a: Optional[int] = None,
    system: Optional[SetSystem] = None,
) -> Verification:
    """
    Re-check the defining property of a witness. Reasons print 1-based indices.
    """
    kind = CertificateKind(kind)
    if kind is CertificateKind.DISCREPANCY:
        if not isinstance(witness, SignColoring) or system is None or a is None:
            raise InvalidInputException("discrepancy certificates need a sign coloring, a set system and a")
        violation = first_violation(system, witness, a)
        if violation is not None:
            k, value = violation
            return Verification(False, f"M_{k + 1} has |delta| = {abs(value)} >= a = {a}")
        return Verification(True, f"all {system.s} sets have |delta| < {a}")

    if n is None:
        raise InvalidInputException(f"{kind.value} certificates need the clique size n")

    if kind is CertificateKind.RAMSEY_GRAPH:
        if not isinstance(witness, Graph):
            raise InvalidInputException("ramsey-graph certificates must be graphs")
        clique = find_clique(witness, n)
        if clique is not None:
            return Verification(False, f"{n}-clique on vertices {_vertices(clique)}")
        anticlique = find_anticlique(witness, n)
        if anticlique is not None:
            return Verification(False, f"{n}-anticlique on vertices {_vertices(anticlique)}")
        return Verification(True, f"no {n}-clique and no {n}-anticlique on {witness.r} vertices")

    if kind is CertificateKind.MULTICOLOR:
        if not isinstance(witness, EdgeColoring):
            raise InvalidInputException("multicolor certificates must be edge colorings")
        found = find_monochromatic_clique(witness, n)
        what = "clique"
    else:
        if not isinstance(witness, SubsetColoring):
            raise InvalidInputException("hyper certificates must be subset colorings")
        found = find_monochromatic_hyperclique(witness, n)
        what = "hyperclique"

    if found is not None:
        return Verification(
            False, f"monochromatic {n}-{what} of color {found.color + 1} on {_vertices(found.vertices)}"
        )
    return Verification(True, f"no monochromatic {n}-{what} in {witness.k} colors")
