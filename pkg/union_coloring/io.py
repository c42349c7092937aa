"""Text, JSON and DOT formats for graphs and colorings.

Graph text: a header ``n m`` followed by ``m`` lines ``u v`` (0-based).
Coloring text: one line ``u v : c1 c2 ...`` per edge (1-based colors).
Blank lines and lines starting with ``#`` are ignored in both.
"""

import json
import logging
from pathlib import Path
from typing import Any, Dict, Iterator, List, Optional, Tuple, Union

import graphviz

from .exceptions import FormatError, InvalidGraphError
from .graph import build_graph, codes
from .models import Coloring, Graph
from .utils import mask_from_colors

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]


def _lines(text: str) -> Iterator[Tuple[int, str]]:
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield number, line


def _ints(tokens: List[str], number: int) -> List[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise FormatError(f"line {number}: expected integers, got {' '.join(tokens)!r}", line=number) from None


def parse_graph(text: str) -> Graph:
    """
    Parse the graph text format.

    Raises:
        FormatError: On a malformed header, edge line or edge count
    """
    lines = list(_lines(text))
    if not lines:
        raise FormatError("empty graph file")
    number, header = lines[0]
    fields = _ints(header.split(), number)
    if len(fields) != 2:
        raise FormatError(f"line {number}: header must be 'n m'", line=number)
    n, m = fields

    edges = []
    for number, line in lines[1:]:
        pair = _ints(line.split(), number)
        if len(pair) != 2:
            raise FormatError(f"line {number}: edge must be 'u v'", line=number)
        edges.append((pair[0], pair[1]))
    if len(edges) != m:
        raise FormatError(f"header announces {m} edges, found {len(edges)}")
    try:
        return build_graph(n, edges)
    except InvalidGraphError as exc:
        raise FormatError(exc.message) from None


def format_graph(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def parse_coloring(text: str, g: Graph, k: Optional[int] = None) -> Coloring:
    """
    Parse the coloring text format against ``g``.

    Lines may come in any edge order; the palette defaults to the largest
    color used.

    Raises:
        FormatError: On a malformed line, an unknown or repeated edge, or a
            line count different from the number of edges
    """
    masks: List[Optional[int]] = [None] * g.m
    count = 0
    for number, line in _lines(text):
        left, sep, right = line.partition(":")
        if not sep:
            raise FormatError(f"line {number}: expected 'u v : colors'", line=number)
        pair = _ints(left.split(), number)
        if len(pair) != 2:
            raise FormatError(f"line {number}: edge must be 'u v'", line=number)
        colors = _ints(right.split(), number)
        if not g.has_edge(*pair):
            raise FormatError(f"line {number}: {pair[0]} {pair[1]} is not an edge of the graph", line=number)
        index = g.edge_index(*pair)
        if masks[index] is not None:
            raise FormatError(f"line {number}: edge {pair[0]} {pair[1]} colored twice", line=number)
        try:
            masks[index] = mask_from_colors(colors)
        except ValueError as exc:
            raise FormatError(f"line {number}: {exc}", line=number) from None
        count += 1
    if count != g.m:
        raise FormatError(f"coloring has {count} edges, graph has {g.m}")

    resolved = [mask or 0 for mask in masks]
    if k is None:
        k = max((mask.bit_length() for mask in resolved), default=0) or 1
    return Coloring.from_masks(k, resolved)


def format_coloring(g: Graph, c: Coloring) -> str:
    lines = []
    for (u, v), s in zip(g.edges, c.sets):
        lines.append(f"{u} {v} : {' '.join(str(color) for color in s.colors)}".rstrip())
    return "\n".join(lines) + "\n"


def to_dict(g: Graph, c: Optional[Coloring] = None) -> Dict[str, Any]:
    data = g.to_dict()
    if c is not None:
        data.update(c.to_dict())
    return data


def to_json(g: Graph, c: Optional[Coloring] = None) -> str:
    return json.dumps(to_dict(g, c), indent=2) + "\n"


def from_json(text: str) -> Tuple[Graph, Optional[Coloring]]:
    """
    Parse ``{"n", "edges", "k"?, "colors"?}``.

    ``colors[i]`` belongs to ``edges[i]`` as written, whatever the order.

    Raises:
        FormatError: On invalid JSON or a malformed document
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc.msg}", line=exc.lineno) from None
    if not isinstance(data, dict) or "n" not in data or "edges" not in data:
        raise FormatError("JSON document needs 'n' and 'edges'")

    raw_edges = data["edges"]
    if not isinstance(raw_edges, list) or any(not isinstance(e, list) or len(e) != 2 for e in raw_edges):
        raise FormatError("'edges' must be a list of pairs")
    try:
        g = Graph.from_dict(data)
    except InvalidGraphError as exc:
        raise FormatError(exc.message) from None

    if "colors" not in data:
        return g, None
    colors = data["colors"]
    if not isinstance(colors, list) or len(colors) != len(raw_edges):
        raise FormatError(f"'colors' must have one entry per edge ({len(raw_edges)})")
    if len(raw_edges) != g.m:
        raise FormatError("'edges' lists an edge twice")

    masks = [0] * g.m
    try:
        for (u, v), entry in zip(raw_edges, colors):
            masks[g.edge_index(u, v)] = mask_from_colors(entry)
    except (TypeError, ValueError) as exc:
        raise FormatError(f"bad color list: {exc}") from None
    k = data.get("k")
    if k is None:
        k = max((mask.bit_length() for mask in masks), default=0) or 1
    return g, Coloring.from_masks(k, masks)


def to_dot(g: Graph, c: Coloring, name: str = "G") -> str:
    """
    DOT source with color sets on edges and codes on vertices.

    Edges are labelled ``{1,2}``, vertices ``id={1,2}``.
    """
    dot = graphviz.Graph(name=name)
    for v, code in enumerate(codes(g, c)):
        dot.node(str(v), label=f"id={code}")
    for (u, v), s in zip(g.edges, c.sets):
        dot.edge(str(u), str(v), label=str(s))
    return dot.source


def read_text(path: PathLike) -> str:
    return Path(path).read_text(encoding="utf-8")


def write_text(path: PathLike, text: str) -> Path:
    target = Path(path)
    target.write_text(text, encoding="utf-8")
    logger.debug(f"wrote {target}")
    return target


def read_graph(path: PathLike) -> Graph:
    """Read a graph from a text or ``.json`` file."""
    text = read_text(path)
    if str(path).endswith(".json"):
        return from_json(text)[0]
    return parse_graph(text)


def read_coloring(path: PathLike, g: Graph) -> Coloring:
    """Read a coloring of ``g`` from a text or ``.json`` file."""
    text = read_text(path)
    if str(path).endswith(".json"):
        other, coloring = from_json(text)
        if coloring is None:
            raise FormatError(f"{path} has no 'colors'")
        if other != g:
            raise FormatError(f"{path} describes a different graph")
        return coloring
    return parse_coloring(text, g)
