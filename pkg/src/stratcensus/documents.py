"""JSON graph documents and DOT export."""

from __future__ import annotations

import json
from typing import List, Literal, Optional

from pydantic import BaseModel, ConfigDict, ValidationError, model_validator

from .graph import Color, Edge, StratGraph, Vertex


class VertexDoc(BaseModel):
    model_config = ConfigDict(extra="forbid")

    id: str
    color: Literal["white", "black"]
    genus: Optional[int] = None

    @model_validator(mode="after")
    def _genus_matches_color(self) -> "VertexDoc":
        if self.color == "white" and self.genus is None:
            raise ValueError(f"white vertex {self.id!r} needs a genus")
        if self.color == "black" and self.genus is not None:
            raise ValueError(f"black vertex {self.id!r} must not carry a genus")
        return self


class EdgeDoc(BaseModel):
    model_config = ConfigDict(extra="forbid")

    white: str
    black: str
    label: int


class GraphDocument(BaseModel):
    model_config = ConfigDict(extra="forbid")

    vertices: List[VertexDoc]
    edges: List[EdgeDoc] = []

    def to_graph(self) -> StratGraph:
        return StratGraph.build(
            (Vertex(v.id, Color(v.color), v.genus) for v in self.vertices),
            (Edge(e.white, e.black, e.label) for e in self.edges),
        )

    @classmethod
    def from_graph(cls, g: StratGraph) -> "GraphDocument":
        return cls(
            vertices=[VertexDoc(id=v.id, color=v.color.value, genus=v.genus) for v in g.vertices],
            edges=[EdgeDoc(white=e.white, black=e.black, label=e.label) for e in g.edges],
        )


class DocumentError(ValueError):
    pass


def parse_document(text: str) -> StratGraph:
    try:
        return GraphDocument.model_validate_json(text).to_graph()
    except ValidationError as exc:
        raise DocumentError(str(exc)) from exc


def dump_document(g: StratGraph) -> str:
    return json.dumps(GraphDocument.from_graph(g).model_dump(exclude_none=True), indent=2) + "\n"


def to_dot(g: StratGraph, name: str = "G") -> str:
    lines = [f'graph "{name}" {{']
    for v in g.vertices:
        if v.color is Color.WHITE:
            lines.append(f'  "{v.id}" [shape=circle, label="{v.genus}"];')
        else:
            lines.append(f'  "{v.id}" [shape=point, style=filled, width=0.15];')
    for e in g.edges:
        lines.append(f'  "{e.white}" -- "{e.black}" [label="{e.label}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
