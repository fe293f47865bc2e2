import logging
import math
import os
import re
import shlex
from typing import *

import networkx as nx

from .errors import GraphParseError, NonPositiveWeightError
from .graph import Graph

__all__ = [
    "FORMATS",
    "parse_graph",
    "serialize_graph",
    "load_graph_file",
    "infer_format",
]

logger = logging.getLogger(__name__)

FORMATS = ("edgelist", "pajek", "gml")

_EXTENSIONS = {".gml": "gml", ".net": "pajek", ".paj": "pajek"}

# networkx reports GML syntax errors as "... at (line, column)"
_gml_position = re.compile(r"at \((\d+), (\d+)\)")
_raw_hash = re.compile(r"(?<!&)#")


def _decode(text: Union[bytes, str]) -> str:
    if isinstance(text, bytes):
        try:
            # utf-8-sig also strips the BOM some editors put in front of text exports
            return text.decode("utf-8-sig")
        except UnicodeDecodeError as e:
            raise GraphParseError(f"input is not valid UTF-8 ({e.reason})") from e
    return text


def _parse_weight(token: str, lineno: int) -> float:
    try:
        w = float(token)
    except ValueError:
        raise GraphParseError(f"invalid weight {token!r}", lineno) from None
    if not w > 0:
        raise NonPositiveWeightError(f"non-positive weight {token!r}", lineno)
    if not math.isfinite(w):
        raise GraphParseError(f"weight must be finite, got {token!r}", lineno)
    return w


def parse_edgelist(text: str) -> Graph:
    """Whitespace-separated `u v [w]` lines.

    Blank lines and lines starting with '#' are skipped. A line holding a single
    label declares a (possibly isolated) vertex.
    """
    order: List[str] = []
    edges: List[Tuple[str, str, float]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) == 1:
            order.append(tokens[0])
        elif len(tokens) in (2, 3):
            u, v = tokens[0], tokens[1]
            w = _parse_weight(tokens[2], lineno) if len(tokens) == 3 else 1.0
            order += (u, v)
            edges.append((u, v, w))
        else:
            raise GraphParseError(
                f"expected 'u v [w]', got {len(tokens)} fields", lineno
            )
    return Graph.from_edges(edges, nodes=order)


def _from_networkx(G: nx.Graph, weight_keys: Sequence[str]) -> Graph:
    if G.is_directed():
        logger.warning("input is directed; arcs are symmetrized")

    def weight(data: Dict[str, Any]) -> float:
        for key in weight_keys:
            if key in data:
                try:
                    return float(data[key])
                except (TypeError, ValueError):
                    raise GraphParseError(f"invalid weight {data[key]!r}") from None
        return 1.0

    labels = {node: str(node) for node in G.nodes}
    if len(set(labels.values())) != len(labels):
        raise GraphParseError("vertex labels are not unique")
    return Graph.from_edges(
        ((labels[u], labels[v], weight(d)) for u, v, d in G.edges(data=True)),
        nodes=labels.values(),
    )


def _check_pajek_weights(text: str) -> None:
    # nx.parse_pajek falls back to weight 1 when a weight does not parse
    in_edges = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("%"):
            continue
        if line.startswith("*"):
            in_edges = line.split()[0].lower() in ("*edges", "*arcs")
            continue
        if not in_edges:
            continue
        try:
            tokens = shlex.split(line)
        except ValueError as e:
            raise GraphParseError(f"malformed Pajek line ({e})", lineno) from None
        if len(tokens) < 2:
            raise GraphParseError("expected 'u v [w]'", lineno)
        if len(tokens) > 2:
            _parse_weight(tokens[2], lineno)


_gml_token = re.compile(r'"[^"]*"|\[|\]|#.*$|[^\s\[\]"]+')


def _check_gml_weights(text: str) -> None:
    # only edge weights are checked here; syntax is left to networkx
    blocks: List[Optional[str]] = []
    key: Optional[str] = None
    for lineno, line in enumerate(text.splitlines(), start=1):
        for token in _gml_token.findall(line):
            if token.startswith("#"):
                break
            if token == "[":
                blocks.append(key)
                key = None
            elif token == "]":
                if blocks:
                    blocks.pop()
                key = None
            elif key is None:
                key = token
            else:
                if key in ("value", "weight") and blocks[-1:] == ["edge"]:
                    _parse_weight(token.strip('"'), lineno)
                key = None


def parse_pajek(text: str) -> Graph:
    """`*Vertices` block with optional quoted names, then `*Edges` or `*Arcs`."""
    _check_pajek_weights(text)
    try:
        G = nx.parse_pajek(text.splitlines())
    except nx.NetworkXError as e:
        raise GraphParseError(str(e)) from e
    except (ValueError, IndexError) as e:
        raise GraphParseError(f"malformed Pajek input ({e})") from e
    return _from_networkx(G, weight_keys=("weight",))


def parse_gml(text: str) -> Graph:
    """`graph [ node [ id N ] ... edge [ source A target B value W ] ... ]`.

    Nodes are labelled by their `label` attribute when every node has one,
    otherwise by their id.
    """
    _check_gml_weights(text)
    # Parallel edges are legal input for us; let networkx keep them so the graph
    # model can merge them.
    text = re.sub(r"\bgraph\s*\[", "graph [ multigraph 1", text, count=1)
    try:
        G = nx.parse_gml(text, label="id")
    except nx.NetworkXError as e:
        position = _gml_position.search(str(e))
        line = int(position.group(1)) if position else None
        raise GraphParseError(str(e), line) from e
    except (ValueError, KeyError) as e:
        raise GraphParseError(f"malformed GML input ({e})") from e

    names = [G.nodes[node].get("label") for node in G.nodes]
    if all(name is not None for name in names) and len(set(map(str, names))) == len(names):
        G = nx.relabel_nodes(G, dict(zip(G.nodes, map(str, names))))
    return _from_networkx(G, weight_keys=("value", "weight"))


_PARSERS = {"edgelist": parse_edgelist, "pajek": parse_pajek, "gml": parse_gml}


def parse_graph(text: Union[bytes, str], format: str = "edgelist") -> Graph:
    try:
        parser = _PARSERS[format]
    except KeyError:
        raise ValueError(f"unknown graph format {format!r}, expected one of {FORMATS}")
    return parser(_decode(text))


def _edgelist_line(u: str, v: str) -> str:
    # the reader skips lines that start with '#'
    if u.startswith("#"):
        if v.startswith("#"):
            raise ValueError(f"edge {u!r} - {v!r} cannot be written as an edge list")
        u, v = v, u
    return f"{u} {v}"


def serialize_graph(g: Graph, format: str = "edgelist") -> str:
    if format == "edgelist":
        for label in g.node_labels:
            if not label or any(c.isspace() for c in label):
                raise ValueError(f"label {label!r} cannot be written as an edge list")
        lines = []
        for i, label in enumerate(g.node_labels):
            if not g.adjacency[i]:
                if label.startswith("#"):
                    raise ValueError(f"isolated vertex {label!r} cannot be written as an edge list")
                lines.append(label)
        for u, v, w in g.labelled_edges():
            line = _edgelist_line(u, v)
            lines.append(f"{line} {w!r}" if g.is_weighted else line)
        return "\n".join(lines) + "\n"
    if format == "gml":
        # networkx escapes '&' itself, so any other '#' is a raw one
        return "\n".join(
            _raw_hash.sub("&#35;", line) for line in nx.generate_gml(g.to_networkx())
        ) + "\n"
    raise ValueError(f"cannot serialize to {format!r}")


def infer_format(path: str) -> str:
    _, ext = os.path.splitext(path)
    return _EXTENSIONS.get(ext.lower(), "edgelist")


def load_graph_file(path: str, format: Optional[str] = None) -> Graph:
    try:
        with open(path, "rb") as f:
            data = f.read()
    except OSError as e:
        raise GraphParseError(f"cannot read graph file {path}: {e.strerror}") from e
    try:
        return parse_graph(data, format or infer_format(path))
    except GraphParseError as e:
        located = type(e)(f"{path}: {e}")
        located.line = e.line
        raise located from e
