import json

import pytest

from src.cli.instances import (
    dump_instance,
    parse_instance,
    read_instance,
    to_document,
    write_instance,
)
from src.core.entities import EdgeColoring, Graph, SetSystem, SignColoring, SubsetColoring
from src.core.exceptions import InvalidInputException


@pytest.mark.parametrize(
    "entity",
    [
        SetSystem.from_lists(5, [[0, 4], [], [1, 2, 3]]),
        Graph.cycle(5),
        EdgeColoring(4, 3, (0, 1, 2, 2, 1, 0)),
        SubsetColoring(4, 3, 2, (1, 0, 0, 1)),
        SignColoring((1, -1, -1, 1)),
    ],
)
def test_documents_survive_a_round_trip(entity):
    assert parse_instance(dump_instance(entity)) == entity


def test_indices_are_one_based(c5):
    document = json.loads(dump_instance(c5))
    assert document["version"] == 1
    assert document["kind"] == "graph"
    assert document["edges"][0] == [1, 2]
    assert to_document(EdgeColoring(3, 2, (0, 1, 0))).colors == [1, 2, 1]
    assert to_document(SetSystem.from_lists(3, [[2]])).sets == [[3]]


@pytest.mark.parametrize(
    "text",
    [
        '{"version": 1, "kind": "set-system", "n": 3, "sets": [[1, 2]',
        '{"version": 2, "kind": "set-system", "n": 3, "sets": []}',
        '{"kind": "set-system", "n": 3, "sets": []}',
        '{"version": 1, "kind": "hypergraph", "n": 3}',
        '{"version": 1, "kind": "set-system", "n": 3, "sets": [[0, 1]]}',
        '{"version": 1, "kind": "set-system", "n": 3, "sets": [[4]]}',
        '{"version": 1, "kind": "graph", "r": 3, "edges": [[1, 1]]}',
        '{"version": 1, "kind": "edge-coloring", "r": 3, "k": 2, "colors": [1, 2]}',
        '{"version": 1, "kind": "edge-coloring", "r": 3, "k": 2, "colors": [1, 2, 3]}',
        '{"version": 1, "kind": "sign-coloring", "n": 2, "x": [1]}',
        '{"version": 1, "kind": "sign-coloring", "n": 2, "x": [1, 0]}',
    ],
)
def test_malformed_documents_are_rejected(text):
    with pytest.raises(InvalidInputException):
        parse_instance(text)


def test_files(tmp_path, c5):
    path = tmp_path / "c5.json"
    write_instance(c5, path)
    assert read_instance(path) == c5
    assert read_instance(str(path), Graph) == c5
    with pytest.raises(InvalidInputException):
        read_instance(path, SetSystem)
    with pytest.raises(InvalidInputException):
        read_instance(tmp_path / "missing.json")
    with pytest.raises(InvalidInputException, match="cannot write"):
        write_instance(c5, tmp_path / "missing" / "c5.json")
