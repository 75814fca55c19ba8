"""
DOT, JSON and CSV rendering of graphs, reports and surveys.

Every renderer walks vertices and edges in ascending label order so the
same input always produces the same bytes.
"""
import csv
import io
import json
import logging
from typing import Any, Dict, Iterable, List, Optional, Sequence

from pydantic import BaseModel

from models import GraphDocument, GraphFamily, OutputDocument, OutputFormat, PropertyReport
from services.errors import InvalidInput
from services.graph import LabeledGraph, label_text

logger = logging.getLogger(__name__)


def _quoted(label) -> str:
    return f'"{label_text(label)}"'


def to_dot(g: LabeledGraph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    for label in g.labels:
        lines.append(f"  {_quoted(label)};")
    loops = set(g.loop_labels())
    pairs = sorted(
        [(g.index_of(u), g.index_of(v)) for u, v in g.edges()]
        + [(g.index_of(x), g.index_of(x)) for x in loops]
    )
    for i, j in pairs:
        lines.append(f"  {_quoted(g.labels[i])} -- {_quoted(g.labels[j])};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _dump(model: Optional[BaseModel]) -> Optional[Dict[str, Any]]:
    if model is None:
        return None
    return model.model_dump(mode="json", exclude_none=True)


def graph_document(
    family: GraphFamily,
    g: LabeledGraph,
    n: Optional[int] = None,
    dims: Optional[Sequence[int]] = None,
    strong: Optional[bool] = None,
    properties: Optional[PropertyReport] = None,
    closed_form: Optional[BaseModel] = None,
) -> GraphDocument:
    return GraphDocument(
        family=family,
        n=n,
        dims=list(dims) if dims is not None else None,
        strong=strong,
        vertices=list(g.labels),
        edges=g.edges(),
        loops=g.loop_labels() if g.has_loops else None,
        properties=_dump(properties),
        closed_form=_dump(closed_form),
    )


def to_json(document: BaseModel) -> str:
    return document.model_dump_json(exclude_none=True, indent=2) + "\n"


def _cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (list, tuple, dict)):
        return json.dumps(value, separators=(",", ":"))
    return str(value)


def _write_csv(header: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([_cell(value) for value in row])
    return buffer.getvalue()


def document_csv(document: GraphDocument) -> str:
    """Property rows when a report is attached, otherwise the edge list"""
    if document.properties:
        rows = [("property", key, value) for key, value in document.properties.items()]
        if document.closed_form:
            rows += [("closed_form", key, value) for key, value in document.closed_form.items()]
        return _write_csv(("source", "name", "value"), rows)
    rows = [(label_text(u), label_text(v)) for u, v in document.edges]
    rows += [(label_text(x), label_text(x)) for x in document.loops or []]
    return _write_csv(("u", "v"), rows)


def survey_csv(rows: List[Dict[str, Any]], columns: Sequence[str]) -> str:
    return _write_csv(columns, ([row.get(column) for column in columns] for row in rows))


def render(document: GraphDocument, g: LabeledGraph, fmt: OutputFormat) -> OutputDocument:
    if fmt == OutputFormat.DOT:
        payload = to_dot(g)
    elif fmt == OutputFormat.JSON:
        payload = to_json(document)
    elif fmt == OutputFormat.CSV:
        payload = document_csv(document)
    else:
        raise InvalidInput(f"unsupported format {fmt!r}")
    logger.debug("rendered %s document with %d vertices", fmt.value, g.order)
    return OutputDocument(format=fmt, payload=payload)
