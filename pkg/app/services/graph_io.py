"""
Edge-list text format.

    line 1: n
    every following non-empty line: "u v w" (decimal, 0 <= u, v < n)
    lines starting with '#' are comments; LF or CRLF line endings
"""

import logging
from pathlib import Path
from typing import List, Tuple, Union

from app.core.exceptions import GraphParseError
from app.models.graph import WeightedGraph
from app.schemas.graph import GraphDocument

logger = logging.getLogger(__name__)


def parse_graph_text(text: str) -> WeightedGraph:
    n = None
    edges: List[Tuple[int, int, int]] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith('#'):
            continue
        fields = line.split()

        if n is None:
            if len(fields) != 1:
                raise GraphParseError(f"expected node count, got {line!r}", line_no)
            n = _parse_int(fields[0], line_no)
            continue

        if len(fields) != 3:
            raise GraphParseError(f"expected 'u v w', got {line!r}", line_no)
        u, v, w = (_parse_int(field, line_no) for field in fields)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphParseError(f"edge ({u}, {v}) references a node outside 0..{n - 1}", line_no)
        edges.append((u, v, w))

    if n is None:
        raise GraphParseError("missing node count")
    return WeightedGraph.from_edges(n, edges)


def _parse_int(token: str, line_no: int) -> int:
    try:
        return int(token, 10)
    except ValueError:
        raise GraphParseError(f"not a decimal integer: {token!r}", line_no) from None


def load_graph(path: Union[str, Path]) -> WeightedGraph:
    """Read and validate a graph file"""
    data = Path(path).read_bytes()
    try:
        text = data.decode('utf-8')
    except UnicodeDecodeError as e:
        raise GraphParseError("file is not valid UTF-8", data.count(b"\n", 0, e.start) + 1) from None
    g = parse_graph_text(text)
    logger.info(f"Loaded graph {path}: n={g.n}, edges={g.edge_count}")
    return g


def format_graph(g: WeightedGraph) -> str:
    lines = [str(g.n)]
    lines.extend(f"{u} {v} {w}" for u, v, w in g.edges)
    return "\n".join(lines) + "\n"


def write_graph(g: WeightedGraph, path: Union[str, Path]) -> None:
    Path(path).write_text(format_graph(g), encoding='utf-8', newline='\n')
    logger.info(f"Wrote graph {path}: n={g.n}, edges={g.edge_count}")


def graph_from_document(doc: GraphDocument) -> WeightedGraph:
    return WeightedGraph.from_edges(doc.n, doc.edges)


def graph_to_document(g: WeightedGraph) -> GraphDocument:
    return GraphDocument(n=g.n, edges=[tuple(edge) for edge in g.edges])
