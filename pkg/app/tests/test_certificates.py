import pytest

from src.core.certificates import CertificateKind, verify_certificate
from src.core.entities import EdgeColoring, Graph, SetSystem, SignColoring, SubsetColoring
from src.core.exceptions import InvalidInputException


def test_c5_is_a_ramsey_certificate_for_triangles(c5):
    result = verify_certificate(CertificateKind.RAMSEY_GRAPH, c5, n=3)
    assert result.valid
    assert "no 3-clique" in result.reason


def test_ramsey_failures_name_the_clique(k4):
    result = verify_certificate("ramsey-graph", k4, n=3)
    assert not result.valid
    assert result.reason == "3-clique on vertices {1,2,3}"

    result = verify_certificate(CertificateKind.RAMSEY_GRAPH, Graph.empty(4), n=3)
    assert result.reason == "3-anticlique on vertices {1,2,3}"


def test_multicolor_and_hyper():
    c = EdgeColoring(3, 2, (0, 0, 0))
    result = verify_certificate(CertificateKind.MULTICOLOR, c, n=3)
    assert not result.valid
    assert result.reason == "monochromatic 3-clique of color 1 on {1,2,3}"
    assert verify_certificate(CertificateKind.MULTICOLOR, EdgeColoring(3, 2, (0, 1, 0)), n=3).valid

    h = SubsetColoring(4, 3, 2, (1, 1, 1, 1))
    result = verify_certificate(CertificateKind.HYPER, h, n=4)
    assert result.reason == "monochromatic 4-hyperclique of color 2 on {1,2,3,4}"
    assert verify_certificate(CertificateKind.HYPER, SubsetColoring(4, 3, 2, (1, 0, 1, 1)), n=4).valid


def test_discrepancy_certificate(singleton_system, all_red_2):
    result = verify_certificate(CertificateKind.DISCREPANCY, all_red_2, a=1, system=singleton_system)
    assert not result.valid
    assert result.reason.startswith("M_1 ")

    result = verify_certificate(CertificateKind.DISCREPANCY, all_red_2, a=2, system=singleton_system)
    assert result.valid


def test_discrepancy_of_the_empty_system():
    result = verify_certificate(CertificateKind.DISCREPANCY, SignColoring(()), a=1, system=SetSystem(0, ()))
    assert result.valid


def test_mismatched_certificates_are_rejected(c5):
    with pytest.raises(InvalidInputException):
        verify_certificate(CertificateKind.MULTICOLOR, c5, n=3)
    with pytest.raises(InvalidInputException):
        verify_certificate(CertificateKind.RAMSEY_GRAPH, c5)
    with pytest.raises(InvalidInputException):
        verify_certificate(CertificateKind.DISCREPANCY, SignColoring.all_red(5), a=1)
    with pytest.raises(ValueError):
        verify_certificate("planar", c5, n=3)
