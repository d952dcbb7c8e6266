"""Cubic graphs, their proper word encodings, and a small domination toolkit.

A labeled 3-regular graph on n vertices becomes a lexicon of n words of
length 4 over n symbols: each vertex contributes one word starting with its
own label followed by its three neighbors in a fixed color order.  The
neighbor order comes from decomposing the bipartite double cover into three
perfect matchings; because each matching hits every vertex exactly once,
every label lands exactly once in every position.  An encoding with that
property is *proper*, and properness is exactly what makes any revealed
cell identify the whole word.

The domination routine is an exhaustive oracle for small graphs, nothing
more; it exists to referee the game-value reduction.
"""

from __future__ import annotations

import itertools
import random
from collections import deque
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Mapping

from .core import InstanceTooLargeError, Lexicon, Mask

DOMINATION_MAX_VERTICES = 20

RED, GREEN, BLUE = "red", "green", "blue"


@dataclass(frozen=True)
class CubicGraph:
    """Simple undirected graph, every vertex of degree exactly 3.

    Vertices are the symbols 1..n; `names` keeps the original text labels
    when the graph came from a file.
    """

    n: int
    adjacency: tuple[tuple[int, int, int], ...]
    names: tuple[str, ...] | None = None

    def __post_init__(self):
        if self.n < 4 or self.n % 2:
            raise ValueError("a cubic graph needs an even vertex count >= 4")
        if len(self.adjacency) != self.n:
            raise ValueError("adjacency must list every vertex")
        for v, nbrs in enumerate(self.adjacency, 1):
            if len(set(nbrs)) != 3 or v in nbrs:
                raise ValueError(f"vertex {v} must have 3 distinct neighbors, not itself")
            if any(not 1 <= u <= self.n for u in nbrs):
                raise ValueError("neighbor out of range")
            if tuple(sorted(nbrs)) != nbrs:
                raise ValueError("neighbor triples must be sorted")
            if any(v not in self.adjacency[u - 1] for u in nbrs):
                raise ValueError("adjacency must be symmetric")
        if self.names is not None and len(self.names) != self.n:
            raise ValueError("names must cover every vertex")

    def neighbors(self, v: int) -> tuple[int, int, int]:
        return self.adjacency[v - 1]

    def edges(self) -> list[tuple[int, int]]:
        return [(v, u) for v in range(1, self.n + 1) for u in self.adjacency[v - 1] if v < u]


def cubic_graph_from_edges(
    edges: Iterable[tuple[int, int]], n: int | None = None, names: tuple[str, ...] | None = None
) -> CubicGraph:
    edge_set = {(min(u, v), max(u, v)) for u, v in edges}
    if n is None:
        n = max(max(e) for e in edge_set)
    nbrs: list[list[int]] = [[] for _ in range(n)]
    for u, v in edge_set:
        if u == v:
            raise ValueError("self-loops are not allowed")
        nbrs[u - 1].append(v)
        nbrs[v - 1].append(u)
    for v, lst in enumerate(nbrs, 1):
        if len(lst) != 3:
            raise ValueError(f"vertex {v} has degree {len(lst)}, expected 3")
    return CubicGraph(n, tuple(tuple(sorted(lst)) for lst in nbrs), names)


# ---------------------------------------------------------------------------
# named instances


def _k4() -> CubicGraph:
    return cubic_graph_from_edges(itertools.combinations(range(1, 5), 2))


def _k33() -> CubicGraph:
    return cubic_graph_from_edges((u, v) for u in (1, 2, 3) for v in (4, 5, 6))


def _cube() -> CubicGraph:
    # vertices 1..8 are the 3-bit strings 000..111; edges flip one bit
    edges = []
    for x in range(8):
        for bit in (1, 2, 4):
            y = x ^ bit
            if x < y:
                edges.append((x + 1, y + 1))
    return cubic_graph_from_edges(edges)


def _petersen() -> CubicGraph:
    edges = []
    for i in range(5):
        edges.append((i + 1, (i + 1) % 5 + 1))          # outer cycle
        edges.append((i + 6, (i + 2) % 5 + 6))          # inner pentagram
        edges.append((i + 1, i + 6))                    # spokes
    return cubic_graph_from_edges(edges)


NAMED_GRAPHS = {"k4": _k4, "k33": _k33, "cube": _cube, "petersen": _petersen}


def named_graph(name: str) -> CubicGraph:
    try:
        return NAMED_GRAPHS[name]()
    except KeyError:
        raise ValueError(f"unknown graph {name!r}; built-ins: {', '.join(sorted(NAMED_GRAPHS))}")


# ---------------------------------------------------------------------------
# matchings and the double cover


def perfect_matching(adjacency: Mapping) -> dict:
    """One perfect matching of a regular bipartite graph.

    `adjacency` maps each left node to its right neighbors.  Runs the
    layered augmenting-path search (Hopcroft-Karp); regularity plus Hall's
    condition guarantee the matching covers every node.
    """
    adj = {u: sorted(vs) for u, vs in sorted(adjacency.items())}
    degrees = {len(vs) for vs in adj.values()}
    right: dict = {}
    for u, vs in adj.items():
        for v in vs:
            right[v] = right.get(v, 0) + 1
    if len(degrees) != 1 or degrees == {0} or set(right.values()) != degrees or len(right) != len(adj):
        raise ValueError("input graph is not regular bipartite")

    match_l: dict = {}
    match_r: dict = {}
    INF = float("inf")

    def bfs():
        dist = {}
        q = deque()
        for u in adj:
            if u not in match_l:
                dist[u] = 0
                q.append(u)
            else:
                dist[u] = INF
        shortest = INF
        while q:
            u = q.popleft()
            if dist[u] >= shortest:
                continue
            for v in adj[u]:
                w = match_r.get(v)
                if w is None:
                    shortest = min(shortest, dist[u] + 1)
                elif dist[w] is INF:
                    dist[w] = dist[u] + 1
                    q.append(w)
        return dist, shortest

    def dfs(u, dist, shortest):
        for v in adj[u]:
            w = match_r.get(v)
            if w is None:
                if dist[u] + 1 != shortest:
                    continue
            elif dist[w] != dist[u] + 1 or not dfs(w, dist, shortest):
                continue
            match_l[u] = v
            match_r[v] = u
            return True
        dist[u] = INF
        return False

    while True:
        dist, shortest = bfs()
        if shortest is INF:
            break
        for u in adj:
            if u not in match_l:
                dfs(u, dist, shortest)
    if len(match_l) != len(adj):
        raise RuntimeError("no perfect matching found; input cannot have been regular")
    return match_l


def _matching_decomposition(g: CubicGraph) -> tuple[dict, dict, dict]:
    """Split the double cover into red, blue and green perfect matchings.

    The double cover joins the minus-copy of every vertex to the plus-copies
    of its neighbors, so a left-to-right matching is a map u -> v over
    directed edges of g.  After removing red the cover is 2-regular, after
    blue the remainder is itself the green matching.
    """
    full = {u: list(g.neighbors(u)) for u in range(1, g.n + 1)}
    red = perfect_matching(full)
    rest = {u: [v for v in vs if v != red[u]] for u, vs in full.items()}
    blue = perfect_matching(rest)
    last = {u: [v for v in vs if v != blue[u]] for u, vs in rest.items()}
    if any(len(vs) != 1 for vs in last.values()):
        raise RuntimeError("remainder after two matchings is not 1-regular")
    green = {u: vs[0] for u, vs in last.items()}
    return red, blue, green


def three_color(g: CubicGraph) -> dict[tuple[int, int], str]:
    """Color every directed edge so each vertex sees all three colors out and in."""
    red, blue, green = _matching_decomposition(g)
    coloring: dict[tuple[int, int], str] = {}
    for u in range(1, g.n + 1):
        coloring[(u, red[u])] = RED
        coloring[(u, blue[u])] = BLUE
        coloring[(u, green[u])] = GREEN
    for v in range(1, g.n + 1):
        if {coloring[(v, u)] for u in g.neighbors(v)} != {RED, GREEN, BLUE}:
            raise RuntimeError("outgoing colors incomplete")
        if {coloring[(u, v)] for u in g.neighbors(v) if (u, v) in coloring} != {RED, GREEN, BLUE}:
            raise RuntimeError("incoming colors incomplete")
    return coloring


def proper_encode(g: CubicGraph) -> Lexicon:
    """One word per vertex: its label, then the red, green and blue targets."""
    red, blue, green = _matching_decomposition(g)
    words = tuple(Mask((u, red[u], green[u], blue[u])) for u in range(1, g.n + 1))
    lexicon = Lexicon(words, sigma=g.n)
    if not properness_check(lexicon):
        raise RuntimeError("matching decomposition produced a non-proper encoding")
    return lexicon


def properness_check(lexicon: Lexicon) -> bool:
    """True when every symbol occupies every position in exactly one word."""
    if lexicon.k != 4:
        raise ValueError("graph encodings are words of length 4")
    if lexicon.n != lexicon.sigma:
        return False
    expected = list(range(1, lexicon.sigma + 1))
    return all(
        sorted(w.cells[p] for w in lexicon.words) == expected for p in range(4)
    )


# ---------------------------------------------------------------------------
# domination oracle


@dataclass(frozen=True)
class DominationCertificate:
    gamma: int
    witness: frozenset[int]


def dominating_number(g: CubicGraph) -> DominationCertificate:
    """Minimum dominating set by increasing-size exhaustive search."""
    if g.n > DOMINATION_MAX_VERTICES:
        raise InstanceTooLargeError(
            f"domination oracle is exhaustive; limit is n<={DOMINATION_MAX_VERTICES}"
        )
    closed = [
        1 << (v - 1) | sum(1 << (u - 1) for u in g.neighbors(v))
        for v in range(1, g.n + 1)
    ]
    everyone = (1 << g.n) - 1
    for size in range(1, g.n + 1):
        for combo in itertools.combinations(range(g.n), size):
            covered = 0
            for i in combo:
                covered |= closed[i]
            if covered == everyone:
                return DominationCertificate(size, frozenset(i + 1 for i in combo))
    raise RuntimeError("unreachable: the full vertex set always dominates")


# ---------------------------------------------------------------------------
# random instances and the text format


def random_cubic(n: int, seed: int) -> CubicGraph:
    """Sample a simple cubic graph by the pairing model; deterministic in seed.

    Three stubs per vertex are shuffled and paired; samples with loops or
    doubled edges are rejected and redrawn.
    """
    if n < 4 or n % 2:
        raise ValueError("a cubic graph needs an even vertex count >= 4")
    rng = random.Random(seed)
    stubs = [v for v in range(1, n + 1) for _ in range(3)]
    for _ in range(100_000):
        rng.shuffle(stubs)
        edges = set()
        ok = True
        for u, v in zip(stubs[::2], stubs[1::2]):
            e = (min(u, v), max(u, v))
            if u == v or e in edges:
                ok = False
                break
            edges.add(e)
        if ok:
            return cubic_graph_from_edges(edges, n=n)
    raise RuntimeError("pairing model kept producing loops or doubled edges")


def parse_graph(text: str) -> CubicGraph:
    """Edge list, one "u v" per line; '#' comments; must come out 3-regular.

    Vertex names are arbitrary tokens, assigned ids in first-appearance order.
    """
    ids: dict[str, int] = {}
    edges: list[tuple[int, int]] = []

    def vid(token: str) -> int:
        if token not in ids:
            ids[token] = len(ids) + 1
        return ids[token]

    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"expected 'u v' edge line, got {line!r}")
        u, v = vid(parts[0]), vid(parts[1])
        edges.append((u, v))
    if not edges:
        raise ValueError("graph file declares no edges")
    return cubic_graph_from_edges(edges, n=len(ids), names=tuple(ids))


def load_graph(path: str | Path) -> CubicGraph:
    return parse_graph(Path(path).read_text(encoding="utf-8"))


def resolve_graph(spec: str) -> CubicGraph:
    """A built-in name or a path to an edge-list file."""
    if spec in NAMED_GRAPHS:
        return named_graph(spec)
    if Path(spec).exists():
        return load_graph(spec)
    raise ValueError(f"{spec!r} is neither a built-in graph nor a readable file")
