"""Deterministic graph fixtures: the named example graphs g1..g5 and parametric families."""

from typing import Callable, Dict, List, Optional, Tuple

import networkx as nx

from src.core.exceptions import GeneratorException
from src.graph.bfs import connected_components
from src.graph.core import Graph, build_graph, induced_subgraph

FIXTURE_GRAPHS: Dict[str, List[Tuple[str, str]]] = {
    # a dominating diametral path [a,b,c,d,h]; (a,f,h) is an AT
    "g1": [("a", "b"), ("b", "c"), ("c", "d"), ("c", "e"), ("e", "f"),
           ("f", "d"), ("c", "g"), ("g", "h"), ("h", "d")],
    # AT-free, [a,b,c,d,e] is diametral but not dominating
    "g2": [("a", "b"), ("b", "c"), ("c", "d"), ("d", "e"), ("c", "f"),
           ("f", "e"), ("f", "g"), ("f", "d")],
    # strongly 1-laminar, (g,i,d) is an AT
    "g3": [("a", "b"), ("b", "c"), ("c", "d"), ("d", "e"), ("a", "f"),
           ("f", "g"), ("g", "h"), ("h", "i"), ("i", "j"), ("e", "j"),
           ("a", "g"), ("g", "c"), ("g", "b"), ("b", "h"), ("i", "e"), ("d", "j")],
    "g4": [("a", "b"), ("c", "d"), ("b", "e"), ("b", "f"), ("c", "e"),
           ("c", "f"), ("e", "g")],
    "g5": [("a", "b"), ("b", "c"), ("c", "d"), ("d", "e"), ("e", "f"),
           ("f", "g"), ("g", "h"), ("h", "a"), ("a", "i"), ("b", "i"),
           ("c", "i"), ("d", "i"), ("e", "i"), ("f", "i"), ("g", "i"),
           ("h", "i"), ("i", "j"), ("j", "k"), ("k", "l"), ("i", "m"),
           ("m", "n"), ("n", "o")],
}


def fixture_graph(name: str) -> Graph:
    try:
        return build_graph(FIXTURE_GRAPHS[name])
    except KeyError:
        raise GeneratorException(f"Unknown fixture '{name}'")


def path_graph(n: int) -> Graph:
    if n < 1:
        raise GeneratorException("A path needs at least one vertex")
    return build_graph([(str(i), str(i + 1)) for i in range(n - 1)], isolated=["0"])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GeneratorException("A cycle needs at least three vertices")
    return build_graph([(str(i), str((i + 1) % n)) for i in range(n)])


def spider_graph(legs: int, length: int) -> Graph:
    """A center with ``legs`` pendant paths of ``length`` edges each."""
    if legs < 1 or length < 1:
        raise GeneratorException("A spider needs at least one leg of positive length")
    edges = []
    for leg in range(1, legs + 1):
        previous = "c"
        for step in range(1, length + 1):
            current = f"l{leg}_{step}"
            edges.append((previous, current))
            previous = current
    return build_graph(edges)


def path_power(n: int, r: int) -> Graph:
    """P_n with an edge between every two vertices at path distance at most r."""
    if n < 1 or r < 1:
        raise GeneratorException("path power needs n >= 1 and r >= 1")
    edges = [(str(i), str(j)) for i in range(n) for j in range(i + 1, min(n, i + r + 1))]
    return build_graph(edges, isolated=["0"])


def gnp(n: int, p: float, seed: int) -> Graph:
    """Seeded Erdős–Rényi G(n, p); isolated vertices are kept."""
    if n < 1 or not 0.0 <= p <= 1.0:
        raise GeneratorException(f"Invalid G(n,p) parameters n={n}, p={p}")
    nx_graph = nx.gnp_random_graph(n, p, seed=seed)
    return build_graph(
        [(str(u), str(v)) for u, v in sorted(nx_graph.edges())],
        isolated=[str(v) for v in range(n)],
    )


def largest_component(graph: Graph) -> Graph:
    """Induced subgraph on the largest component, ties to the lowest vertex id."""
    components = connected_components(graph)
    best = max(components, key=len)
    return induced_subgraph(graph, best)


def _int_args(name: str, parts: List[str], count: int) -> List[int]:
    if len(parts) != count:
        raise GeneratorException(f"Generator '{name}' expects {count} parameters")
    try:
        return [int(part) for part in parts]
    except ValueError:
        raise GeneratorException(f"Generator '{name}' expects integer parameters")


def generate(name: str, seed: Optional[int] = None) -> Graph:
    """Resolve a generator name such as ``g1``, ``path:5`` or ``gnp:10:0.3:42``.

    ``seed`` completes a ``gnp:N:P`` name that leaves the seed out.
    """
    family, *parts = name.strip().split(":")
    family = family.lower()
    if family in FIXTURE_GRAPHS and not parts:
        return fixture_graph(family)

    builders: Dict[str, Callable[[List[str]], Graph]] = {
        "path": lambda ps: path_graph(*_int_args(family, ps, 1)),
        "cycle": lambda ps: cycle_graph(*_int_args(family, ps, 1)),
        "spider": lambda ps: spider_graph(*_int_args(family, ps, 2)),
        "pathpower": lambda ps: path_power(*_int_args(family, ps, 2)),
        "gnp": lambda ps: _gnp_from_parts(ps, seed),
    }
    if family not in builders:
        raise GeneratorException(f"Unknown generator '{name}'")
    return builders[family](parts)


def _gnp_from_parts(parts: List[str], seed: Optional[int] = None) -> Graph:
    if len(parts) == 2 and seed is not None:
        parts = parts + [str(seed)]
    if len(parts) != 3:
        raise GeneratorException("Generator 'gnp' expects N:P:SEED")
    try:
        return gnp(int(parts[0]), float(parts[1]), int(parts[2]))
    except ValueError:
        raise GeneratorException("Generator 'gnp' expects integer N, float P and integer SEED")
