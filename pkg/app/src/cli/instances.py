"""
Instance and certificate files: versioned JSON documents with a `kind` field.

Indices and colors are 1-based here and 0-based everywhere else.
"""
import json
from pathlib import Path
from typing import List, Literal, Optional, Union

from pydantic import BaseModel, Field, ValidationError, conint, validator

from src.core.entities import (
    EdgeColoring,
    Graph,
    SetSystem,
    SignColoring,
    SubsetColoring,
    Witness,
)
from src.core.exceptions import InvalidInputException


FORMAT_VERSION = 1


class Document(BaseModel):
    version: int

    @validator("version")
    def supported_version(cls, version):
        if version != FORMAT_VERSION:
            raise ValueError(f"unsupported format version {version}, expected {FORMAT_VERSION}")
        return version


class SetSystemDocument(Document):
    kind: Literal["set-system"]
    n: conint(ge=0)
    sets: List[List[int]]

    @validator("sets")
    def within_ground_set(cls, sets, values):
        n = values.get("n", 0)
        for k, members in enumerate(sets):
            for j in members:
                if not 1 <= j <= n:
                    raise ValueError(f"set {k + 1} contains {j}, outside [1, {n}]")
        return sets

    @classmethod
    def from_entity(cls, sys: SetSystem) -> "SetSystemDocument":
        return cls(
            version=FORMAT_VERSION,
            kind="set-system",
            n=sys.n,
            sets=[[j + 1 for j in sys.members(k)] for k in range(sys.s)],
        )

    def to_entity(self) -> SetSystem:
        return SetSystem.from_lists(self.n, ([j - 1 for j in members] for members in self.sets))


class GraphDocument(Document):
    kind: Literal["graph"]
    r: conint(ge=1)
    edges: List[List[int]]

    @validator("edges")
    def within_vertices(cls, edges, values):
        r = values.get("r", 0)
        for edge in edges:
            if len(edge) != 2 or edge[0] == edge[1] or not all(1 <= v <= r for v in edge):
                raise ValueError(f"edge {edge} is not a pair of distinct vertices of [1, {r}]")
        return edges

    @classmethod
    def from_entity(cls, g: Graph) -> "GraphDocument":
        return cls(
            version=FORMAT_VERSION,
            kind="graph",
            r=g.r,
            edges=[[i + 1, j + 1] for i, j in g.edges()],
        )

    def to_entity(self) -> Graph:
        return Graph.from_edges(self.r, ((i - 1, j - 1) for i, j in self.edges))


class EdgeColoringDocument(Document):
    kind: Literal["edge-coloring"]
    r: conint(ge=1)
    k: conint(ge=1)
    colors: List[int]

    @classmethod
    def from_entity(cls, c: EdgeColoring) -> "EdgeColoringDocument":
        return cls(
            version=FORMAT_VERSION,
            kind="edge-coloring",
            r=c.r,
            k=c.k,
            colors=[color + 1 for color in c.colors],
        )

    def to_entity(self) -> EdgeColoring:
        return EdgeColoring(self.r, self.k, tuple(color - 1 for color in self.colors))


class SubsetColoringDocument(Document):
    kind: Literal["subset-coloring"]
    m: conint(ge=0)
    l: conint(ge=1)
    k: conint(ge=1)
    colors: List[int]

    @classmethod
    def from_entity(cls, c: SubsetColoring) -> "SubsetColoringDocument":
        return cls(
            version=FORMAT_VERSION,
            kind="subset-coloring",
            m=c.m,
            l=c.l,
            k=c.k,
            colors=[color + 1 for color in c.colors],
        )

    def to_entity(self) -> SubsetColoring:
        return SubsetColoring(self.m, self.l, self.k, tuple(color - 1 for color in self.colors))


class SignColoringDocument(Document):
    kind: Literal["sign-coloring"]
    n: conint(ge=0)
    x: List[int]

    @validator("x")
    def matches_length(cls, x, values):
        if "n" in values and len(x) != values["n"]:
            raise ValueError(f"x has {len(x)} entries, expected n={values['n']}")
        return x

    @classmethod
    def from_entity(cls, x: SignColoring) -> "SignColoringDocument":
        return cls(version=FORMAT_VERSION, kind="sign-coloring", n=x.n, x=list(x.x))

    def to_entity(self) -> SignColoring:
        return SignColoring(tuple(self.x))


AnyDocument = Union[
    SetSystemDocument,
    GraphDocument,
    EdgeColoringDocument,
    SubsetColoringDocument,
    SignColoringDocument,
]

_DOCUMENTS = {
    SetSystem: SetSystemDocument,
    Graph: GraphDocument,
    EdgeColoring: EdgeColoringDocument,
    SubsetColoring: SubsetColoringDocument,
    SignColoring: SignColoringDocument,
}


class InstanceFile(BaseModel):
    __root__: AnyDocument = Field(..., discriminator="kind")


def to_document(entity: Union[SetSystem, Witness]) -> AnyDocument:
    return _DOCUMENTS[type(entity)].from_entity(entity)


def parse_instance(text: str) -> Union[SetSystem, Witness]:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise InvalidInputException(f"instance file is not valid JSON: {e}") from e
    try:
        document = InstanceFile.parse_obj(data).__root__
    except ValidationError as e:
        raise InvalidInputException(f"instance file is malformed: {e}") from e
    return document.to_entity()


def dump_instance(entity: Union[SetSystem, Witness]) -> str:
    return json.dumps(to_document(entity).dict(), indent=2) + "\n"


def read_instance(path: Union[str, Path], expected: Optional[type] = None) -> Union[SetSystem, Witness]:
    try:
        text = Path(path).read_text()
    except OSError as e:
        raise InvalidInputException(f"cannot read {path}: {e.strerror}") from e
    entity = parse_instance(text)
    if expected is not None and not isinstance(entity, expected):
        raise InvalidInputException(
            f"{path} holds a {type(entity).__name__}, expected a {expected.__name__}"
        )
    return entity


def write_instance(entity: Union[SetSystem, Witness], path: Union[str, Path]):
    text = dump_instance(entity)
    try:
        Path(path).write_text(text)
    except OSError as e:
        raise InvalidInputException(f"cannot write {path}: {e.strerror}") from e
