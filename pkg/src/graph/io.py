from pathlib import Path
from typing import List, Tuple, Union

from src.core.exceptions import GraphFormatException
from src.core.logger import get_logger
from src.graph.core import Graph, build_graph

logger = get_logger(__name__)


def read_edge_list(text: str) -> Graph:
    """Parse the edge-list format.

    One edge per line as two whitespace-separated labels, a single label
    declares an isolated vertex, ``#`` lines and blank lines are skipped.
    """
    edges: List[Tuple[str, str]] = []
    isolated: List[str] = []
    for line_number, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) == 1:
            isolated.append(tokens[0])
        elif len(tokens) == 2:
            edges.append((tokens[0], tokens[1]))
        else:
            raise GraphFormatException(f"Line {line_number}: expected one or two labels, got {len(tokens)}")
    return build_graph(edges, isolated)


def load_graph(path: Union[str, Path]) -> Graph:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as e:
        raise GraphFormatException(f"Cannot read graph file '{path}': {e}")
    graph = read_edge_list(text)
    logger.info(f"Loaded {graph!r} from {path}")
    return graph


def write_edge_list(graph: Graph) -> str:
    """Serialize a graph; isolated vertices become single-label lines."""
    lines = [f"{graph.label(u)} {graph.label(v)}" for u, v in graph.edges()]
    lines.extend(graph.label(v) for v in graph.vertices() if graph.degree(v) == 0)
    return "\n".join(lines) + "\n" if lines else ""


def save_graph(graph: Graph, path: Union[str, Path]) -> None:
    Path(path).write_text(write_edge_list(graph), encoding="utf-8")
