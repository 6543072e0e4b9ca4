import click

from logger import get_logger
from src.cli.exceptions import CommandException, ExitCode, workbench_errors
from src.cli.instances import read_instance
from src.cli.reports import emit, report
from src.core.certificates import CertificateKind, Verification, verify_certificate
from src.core.entities import EdgeColoring, Graph, SetSystem, SignColoring, SubsetColoring


# Global Objects
router = click.Group("verify", help="Re-check a certificate file; exit 0 iff it is valid.")
logger = get_logger(__name__)

certificate_argument = click.argument("certificate", type=click.Path(dir_okay=False))


def _finish(kind: CertificateKind, path: str, verification: Verification, **parameters):
    emit(
        report(
            f"verify {kind.value}",
            certificate=path,
            parameters=parameters,
            valid=verification.valid,
            reason=verification.reason,
        )
    )
    if not verification.valid:
        raise CommandException(verification.reason, ExitCode.VERIFY_FAILED)


@router.command("ramsey")
@certificate_argument
@click.option("--n", type=int, required=True, help="Clique size.")
@workbench_errors
def ramsey(certificate: str, n: int):
    """A graph with no n-clique and no n-anticlique."""
    graph = read_instance(certificate, Graph)
    verification = verify_certificate(CertificateKind.RAMSEY_GRAPH, graph, n=n)
    _finish(CertificateKind.RAMSEY_GRAPH, certificate, verification, n=n)


@router.command("multicolor")
@certificate_argument
@click.option("--n", type=int, required=True, help="Clique size.")
@workbench_errors
def multicolor(certificate: str, n: int):
    """An edge coloring with no monochromatic n-clique."""
    c = read_instance(certificate, EdgeColoring)
    verification = verify_certificate(CertificateKind.MULTICOLOR, c, n=n)
    _finish(CertificateKind.MULTICOLOR, certificate, verification, n=n)


@router.command("hyper")
@certificate_argument
@click.option("--n", type=int, required=True, help="Hyperclique size.")
@workbench_errors
def hyper(certificate: str, n: int):
    """A subset coloring with no monochromatic n-hyperclique."""
    c = read_instance(certificate, SubsetColoring)
    verification = verify_certificate(CertificateKind.HYPER, c, n=n)
    _finish(CertificateKind.HYPER, certificate, verification, n=n)


@router.command("discrepancy")
@certificate_argument
@click.option("--in", "path", type=click.Path(dir_okay=False), required=True, help="Set system file.")
@click.option("--a", type=int, required=True, help="Threshold.")
@workbench_errors
def discrepancy(certificate: str, path: str, a: int):
    """A sign coloring keeping every |delta(M_k)| below a."""
    x = read_instance(certificate, SignColoring)
    system = read_instance(path, SetSystem)
    verification = verify_certificate(CertificateKind.DISCREPANCY, x, a=a, system=system)
    _finish(CertificateKind.DISCREPANCY, certificate, verification, a=a, system=path)
