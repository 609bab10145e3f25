"""Outerplanar host graphs and exact subgraph counting.

The universal host representation is `Mop`: a maximal outerplanar graph
stored as a convex polygon 0..n-1 plus a non-crossing chord set of size
exactly n-3.  Every outerplanar graph extends to one of these, and
subgraph counts only grow under edge addition, so all maximization runs
range over polygon triangulations.

Counting is deliberately dumb and trustworthy: backtracking enumeration
with canonical keys (cycles keyed by their smallest vertex and its smaller
cycle-neighbour, paths by their lesser endpoint), plus a generic injective
embedding counter divided by the pattern's automorphism count.  The point
of this module is to be an oracle, not to be fast.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import comb
from typing import Iterable, Iterator

from .guards import check_limit

__all__ = [
    "MopError",
    "InvalidChord",
    "DuplicateChord",
    "CrossingChords",
    "WrongChordCount",
    "Graph",
    "Mop",
    "PatternGraph",
    "cycle_pattern",
    "path_pattern",
    "enumerate_mops",
    "count_cycles",
    "cycle_histogram",
    "count_paths",
    "path_histogram",
    "count_paths_between",
    "paths_between_histogram",
    "subgraph_count",
    "is_outerplanar_small",
    "fan",
    "fan_path_count",
    "triple_fan",
    "star_blowup",
    "leaf_count",
    "canonical_chords",
    "parse_edge_list",
    "format_edge_list",
    "graph_to_dot",
]

MOP_ENUM_LIMIT = 16  # polygon size guard for exhaustive triangulation sweeps


class MopError(ValueError):
    """Invalid polygon-plus-chords data."""


class InvalidChord(MopError):
    pass


class DuplicateChord(MopError):
    pass


class CrossingChords(MopError):
    pass


class WrongChordCount(MopError):
    pass


class Graph:
    """Immutable simple undirected graph on vertices 0..n-1."""

    __slots__ = ("n", "edges", "_adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 0:
            raise ValueError(f"vertex count must be >= 0, got {n}")
        norm = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) outside vertex range 0..{n - 1}")
            norm.add((u, v) if u < v else (v, u))
        self.n = n
        self.edges = frozenset(norm)
        adj = [[] for _ in range(n)]
        for u, v in norm:
            adj[u].append(v)
            adj[v].append(u)
        self._adj = tuple(tuple(sorted(a)) for a in adj)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def adjacent(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self.edges

    def edge_count(self) -> int:
        return len(self.edges)

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted((len(a) for a in self._adj), reverse=True))

    def relabel(self, perm: Iterable[int]) -> "Graph":
        """New graph with vertex i renamed to perm[i]."""
        p = list(perm)
        if sorted(p) != list(range(self.n)):
            raise ValueError("relabeling must be a permutation of 0..n-1")
        return Graph(self.n, ((p[u], p[v]) for u, v in self.edges))

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, m={len(self.edges)})"


def _normalize_chord(n: int, pair) -> tuple[int, int]:
    a, b = pair
    if not (0 <= a < n and 0 <= b < n):
        raise InvalidChord(f"chord ({a},{b}) outside vertex range 0..{n - 1}")
    if a > b:
        a, b = b, a
    if a == b:
        raise InvalidChord(f"chord ({a},{b}) is a loop")
    if b - a < 2 or n - (b - a) < 2:
        raise InvalidChord(f"chord ({a},{b}) is not a diagonal of the {n}-gon")
    return a, b


def _check_noncrossing(n: int, chords: list[tuple[int, int]]) -> None:
    """Laminarity sweep: walk the polygon once, matching chord endpoints
    like parentheses.  A chord forced to close while a later-opened chord
    is still on top of the stack crosses that chord.  O(m log m).
    """
    opens: dict[int, list[tuple[int, int]]] = {}
    closes: dict[int, list[tuple[int, int]]] = {}
    for c in chords:
        opens.setdefault(c[0], []).append(c)
        closes.setdefault(c[1], []).append(c)
    stack: list[tuple[int, int]] = []
    for v in range(n):
        # Inner chords close first: larger opening endpoint means deeper.
        for c in sorted(closes.get(v, ()), key=lambda c: -c[0]):
            if not stack or stack[-1] != c:
                other = stack[-1] if stack else None
                raise CrossingChords(f"chords {other} and {c} cross")
            stack.pop()
        # Chords reaching further close later, so push them first.
        for c in sorted(opens.get(v, ()), key=lambda c: -c[1]):
            stack.append(c)
    if stack:  # cannot happen: every chord closes within 0..n-1
        raise CrossingChords(f"unmatched chord {stack[-1]}")


@dataclass(frozen=True)
class Mop:
    """Maximal outerplanar graph: convex polygon plus a full non-crossing
    chord set (n-3 chords, hence 2n-3 edges and n-2 triangular faces).

    Construction validates everything and raises a MopError subclass naming
    the offending chord pair otherwise.
    """

    n: int
    chords: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if self.n < 3:
            raise MopError(f"polygon needs at least 3 vertices, got {self.n}")
        seen = set()
        norm = []
        for pair in self.chords:
            c = _normalize_chord(self.n, pair)
            if c in seen:
                raise DuplicateChord(f"chord {c} given twice")
            seen.add(c)
            norm.append(c)
        object.__setattr__(self, "chords", frozenset(norm))
        _check_noncrossing(self.n, sorted(norm))
        if len(norm) != self.n - 3:
            raise WrongChordCount(
                f"{len(norm)} chords on a {self.n}-gon; a triangulation has {self.n - 3}"
            )

    @property
    def graph(self) -> Graph:
        return _mop_graph(self.n, self.chords)

    def triangles(self) -> tuple[tuple[int, int, int], ...]:
        """The n-2 triangular faces, each a sorted vertex triple, in sorted
        order.  Recovered by repeatedly clipping ears of the polygon."""
        return _mop_triangles(self.n, self.chords)

    def sorted_chords(self) -> list[tuple[int, int]]:
        return sorted(self.chords)

    def to_json_obj(self) -> dict:
        return {"n": self.n, "chords": [list(c) for c in self.sorted_chords()]}

    @classmethod
    def from_json_obj(cls, obj: dict) -> "Mop":
        return cls(int(obj["n"]), frozenset((int(a), int(b)) for a, b in obj["chords"]))

    def __repr__(self):
        return f"Mop(n={self.n}, chords={self.sorted_chords()})"


@lru_cache(maxsize=4096)
def _mop_graph(n: int, chords: frozenset) -> Graph:
    edges = [(i, (i + 1) % n) for i in range(n)]
    edges.extend(chords)
    return Graph(n, edges)


@lru_cache(maxsize=4096)
def _mop_triangles(n: int, chords: frozenset) -> tuple[tuple[int, int, int], ...]:
    g = _mop_graph(n, chords)
    nxt = {i: (i + 1) % n for i in range(n)}
    prv = {i: (i - 1) % n for i in range(n)}
    alive = n
    triangles = []
    candidates = list(range(n))
    while alive > 3:
        v = candidates.pop(0)
        if v not in nxt:
            continue
        u, w = prv[v], nxt[v]
        if not g.adjacent(u, w):
            candidates.append(v)
            continue
        triangles.append(tuple(sorted((u, v, w))))
        nxt[u], prv[w] = w, u
        del nxt[v], prv[v]
        alive -= 1
        candidates.extend((u, w))
    last = next(iter(nxt))
    triangles.append(tuple(sorted((last, nxt[last], nxt[nxt[last]]))))
    return tuple(sorted(triangles))


# ---------------------------------------------------------------------------
# Triangulation enumeration
# ---------------------------------------------------------------------------

def _triangulation_chords(vs: tuple[int, ...]) -> Iterator[frozenset]:
    """All triangulations of the convex polygon on the (cyclically ordered)
    vertex labels vs, as chord sets.  Recursion on the edge (vs[0], vs[-1]):
    pick the apex of its triangle, then triangulate both sides.
    """
    if len(vs) < 3:
        yield frozenset()
        return
    a, b = vs[0], vs[-1]
    for i in range(1, len(vs) - 1):
        m = vs[i]
        extra = []
        if i >= 2:
            extra.append((min(a, m), max(a, m)))
        if len(vs) - 1 - i >= 2:
            extra.append((min(m, b), max(m, b)))
        for left in _triangulation_chords(vs[: i + 1]):
            for right in _triangulation_chords(vs[i:]):
                yield left | right | frozenset(extra)


def enumerate_mops(n: int, limit: int | None = MOP_ENUM_LIMIT,
                   first_apex: int | None = None) -> Iterator[Mop]:
    """Every labeled triangulation of the convex n-gon, exactly once
    (catalan(n-2) of them).

    first_apex restricts the stream to triangulations whose triangle on the
    polygon edge (0, n-1) has the given apex; the full stream is the
    disjoint union over apexes 1..n-2, which is how parallel sweeps
    partition the work.
    """
    if n < 3:
        raise ValueError(f"polygon needs at least 3 vertices, got {n}")
    check_limit(n, limit, "polygon size n")
    vs = tuple(range(n))
    if first_apex is None:
        for chords in _triangulation_chords(vs):
            yield Mop(n, chords)
        return
    if not (1 <= first_apex <= n - 2):
        raise ValueError(f"first_apex must be in 1..{n - 2}, got {first_apex}")
    i = first_apex
    extra = []
    if i >= 2:
        extra.append((0, i))
    if n - 1 - i >= 2:
        extra.append((i, n - 1))
    for left in _triangulation_chords(vs[: i + 1]):
        for right in _triangulation_chords(vs[i:]):
            yield Mop(n, left | right | frozenset(extra))


# ---------------------------------------------------------------------------
# Cycle and path counting
# ---------------------------------------------------------------------------

def cycle_histogram(g: Graph, max_k: int | None = None) -> dict[int, int]:
    """Counts of simple cycles by length.

    Each cycle is seen exactly once: root the search at the cycle's
    smallest vertex, extend only through larger vertices, and accept the
    orientation whose second vertex is smaller than its last.
    """
    top = g.n if max_k is None else min(max_k, g.n)
    hist: dict[int, int] = {}
    if top < 3:
        return hist
    adj = g._adj
    for s in range(g.n):
        in_path = [False] * g.n
        in_path[s] = True
        path = [s]

        def extend():
            v = path[-1]
            depth = len(path)
            for w in adj[v]:
                if w <= s:
                    if w == s and depth >= 3 and path[1] < path[-1]:
                        hist[depth] = hist.get(depth, 0) + 1
                    continue
                if in_path[w] or depth == top:
                    continue
                in_path[w] = True
                path.append(w)
                extend()
                path.pop()
                in_path[w] = False

        extend()
    return hist


def count_cycles(g: Graph, k: int) -> int:
    """Number of k-vertex cycle subgraphs."""
    if k < 3:
        raise ValueError(f"cycle length must be >= 3, got {k}")
    return cycle_histogram(g, max_k=k).get(k, 0)


def path_histogram(g: Graph, max_edges: int | None = None) -> dict[int, int]:
    """Counts of simple paths by edge count, each path seen once (runs
    starting from its lesser endpoint are the ones accepted)."""
    top = (g.n - 1) if max_edges is None else min(max_edges, g.n - 1)
    hist: dict[int, int] = {}
    if top < 1:
        return hist
    adj = g._adj
    for s in range(g.n):
        in_path = [False] * g.n
        in_path[s] = True
        path = [s]

        def extend():
            v = path[-1]
            for w in adj[v]:
                if in_path[w]:
                    continue
                if w > s:
                    e = len(path)
                    hist[e] = hist.get(e, 0) + 1
                if len(path) == top:
                    continue
                in_path[w] = True
                path.append(w)
                extend()
                path.pop()
                in_path[w] = False

        extend()
    return hist


def count_paths(g: Graph, k: int) -> int:
    """Number of simple path subgraphs with exactly k edges."""
    if k < 1:
        raise ValueError(f"path edge count must be >= 1, got {k}")
    return path_histogram(g, max_edges=k).get(k, 0)


def paths_between_histogram(g: Graph, u: int) -> dict[tuple[int, int], int]:
    """For a fixed start u: counts of simple paths keyed by (endpoint, edge
    count).  One DFS sweep shared by all endpoints."""
    hist: dict[tuple[int, int], int] = {}
    adj = g._adj
    in_path = [False] * g.n
    in_path[u] = True
    path = [u]

    def extend():
        v = path[-1]
        for w in adj[v]:
            if in_path[w]:
                continue
            key = (w, len(path))
            hist[key] = hist.get(key, 0) + 1
            in_path[w] = True
            path.append(w)
            extend()
            path.pop()
            in_path[w] = False

    extend()
    return hist


def count_paths_between(g: Graph, u: int, v: int, k: int) -> int:
    """Number of simple u-v paths with exactly k edges."""
    if u == v:
        raise ValueError("endpoints must differ")
    if k < 1:
        raise ValueError(f"path edge count must be >= 1, got {k}")
    count = 0
    adj = g._adj
    in_path = [False] * g.n
    in_path[u] = True
    path = [u]

    def extend():
        nonlocal count
        w0 = path[-1]
        remaining = k - (len(path) - 1)
        if remaining == 0:
            return
        for w in adj[w0]:
            if in_path[w]:
                continue
            if w == v:
                if remaining == 1:
                    count += 1
                continue
            if remaining == 1:
                continue
            in_path[w] = True
            path.append(w)
            extend()
            path.pop()
            in_path[w] = False

    extend()
    return count


# ---------------------------------------------------------------------------
# Generic pattern counting
# ---------------------------------------------------------------------------

PATTERN_SIZE_LIMIT = 10  # automorphism search is plain backtracking


def _automorphism_count(g: Graph) -> int:
    """Order of the automorphism group, by backtracking over degree-
    compatible assignments (fine for the small patterns used here)."""
    n = g.n
    deg = [g.degree(v) for v in range(n)]
    order = sorted(range(n), key=lambda v: (-deg[v], v))
    image = [-1] * n
    used = [False] * n
    count = 0

    def place(i: int):
        nonlocal count
        if i == n:
            count += 1
            return
        v = order[i]
        for w in range(n):
            if used[w] or deg[w] != deg[v]:
                continue
            ok = True
            for x in g.neighbors(v):
                if image[x] != -1 and not g.adjacent(image[x], w):
                    ok = False
                    break
            if ok:
                # preserve non-edges too: check mapped non-neighbours
                for y in order[:i]:
                    if not g.adjacent(v, y) and g.adjacent(w, image[y]):
                        ok = False
                        break
            if ok:
                image[v] = w
                used[w] = True
                place(i + 1)
                used[w] = False
                image[v] = -1

    place(0)
    return count


def _is_connected(g: Graph) -> bool:
    if g.n == 0:
        return False
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for w in g.neighbors(v):
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == g.n


@dataclass(frozen=True)
class PatternGraph:
    """A small connected pattern together with its automorphism count."""

    graph: Graph
    automorphisms: int = 0

    def __post_init__(self):
        if self.graph.n > PATTERN_SIZE_LIMIT:
            raise ValueError(
                f"pattern on {self.graph.n} vertices exceeds the guard {PATTERN_SIZE_LIMIT}"
            )
        if not _is_connected(self.graph):
            raise ValueError("pattern must be connected")
        if self.automorphisms == 0:
            object.__setattr__(self, "automorphisms", _automorphism_count(self.graph))

    @property
    def n(self) -> int:
        return self.graph.n


def cycle_pattern(k: int) -> PatternGraph:
    """The k-vertex cycle as a pattern."""
    if k < 3:
        raise ValueError(f"cycle length must be >= 3, got {k}")
    return PatternGraph(Graph(k, [(i, (i + 1) % k) for i in range(k)]))


def path_pattern(edges: int) -> PatternGraph:
    """The path with the given edge count as a pattern."""
    if edges < 1:
        raise ValueError(f"path edge count must be >= 1, got {edges}")
    return PatternGraph(Graph(edges + 1, [(i, i + 1) for i in range(edges)]))


def _embedding_order(h: Graph) -> list[int]:
    """Pattern vertices ordered so each one after the first touches an
    earlier one (patterns are connected)."""
    order = [max(range(h.n), key=lambda v: (h.degree(v), -v))]
    placed = set(order)
    while len(order) < h.n:
        nxt = max(
            (v for v in range(h.n) if v not in placed
             and any(w in placed for w in h.neighbors(v))),
            key=lambda v: (sum(w in placed for w in h.neighbors(v)), h.degree(v), -v),
        )
        order.append(nxt)
        placed.add(nxt)
    return order


def _count_injective_maps(g: Graph, h: Graph, stop_at: int | None = None) -> int:
    """Injective maps V(h) -> V(g) sending every pattern edge to a host
    edge.  stop_at short-circuits existence queries."""
    order = _embedding_order(h)
    anchor = []  # earlier-placed pattern neighbours, per position
    for i, v in enumerate(order):
        before = set(order[:i])
        anchor.append([w for w in h.neighbors(v) if w in before])
    image = {}
    used = [False] * g.n
    count = 0

    def place(i: int):
        nonlocal count
        if stop_at is not None and count >= stop_at:
            return
        if i == len(order):
            count += 1
            return
        v = order[i]
        if anchor[i]:
            cands = g.neighbors(image[anchor[i][0]])
        else:
            cands = range(g.n)
        for w in cands:
            if used[w] or g.degree(w) < h.degree(v):
                continue
            if all(g.adjacent(w, image[x]) for x in anchor[i]):
                image[v] = w
                used[w] = True
                place(i + 1)
                used[w] = False
                del image[v]

    place(0)
    return count


def subgraph_count(g: Graph, pattern: PatternGraph) -> int:
    """Number of subgraphs of g isomorphic to the pattern: injective
    edge-preserving maps divided by the pattern's automorphism count."""
    if pattern.n > g.n:
        return 0
    maps = _count_injective_maps(g, pattern.graph)
    q, r = divmod(maps, pattern.automorphisms)
    if r:  # cannot happen; embeddings come in automorphism orbits
        raise ArithmeticError("embedding count not divisible by automorphism count")
    return q


def is_outerplanar_small(g: Graph) -> bool:
    """Desk-scale outerplanarity test: a connected graph on n >= 3 vertices
    is outerplanar iff it embeds into some triangulation of the n-gon."""
    if g.n > 8:
        raise ValueError(f"outerplanarity check guarded at 8 vertices, got {g.n}")
    if g.n <= 2:
        return True
    if len(g.edges) > 2 * g.n - 3:
        return False
    pat = PatternGraph(g, automorphisms=1)  # existence only, Aut irrelevant
    for mop in enumerate_mops(g.n):
        if _count_injective_maps(mop.graph, pat.graph, stop_at=1):
            return True
    return False


# ---------------------------------------------------------------------------
# Named constructions
# ---------------------------------------------------------------------------

def fan(n: int) -> Mop:
    """Polygon 0..n-1 with every diagonal from vertex 0: the join of a hub
    with a path on n-1 vertices."""
    if n < 3:
        raise ValueError(f"fan needs at least 3 vertices, got {n}")
    return Mop(n, frozenset((0, j) for j in range(2, n - 1)))


def fan_path_count(n: int, k: int) -> int:
    """Closed-form count of k-edge paths in fan(n), for n > k >= 3.

    Split by how the hub occurs: not at all (subpaths of the rim path),
    as an endpoint (a rim interval walked either way), or inside (two
    disjoint rim intervals, each walked either way, with the two interval
    lengths 1 contributing half).
    """
    if not (n > k >= 3):
        raise ValueError(f"need n > k >= 3, got n={n}, k={k}")
    return 4 * (k - 2) * comb(n + 1 - k, 2) + 3 * (n - k) - 1


def triple_fan(n: int) -> Mop:
    """Three fans on n/3+1 vertices glued in a ring, each hub identified
    with the far rim end of the previous fan.

    Laid out on the polygon with hubs at 0, n/3, 2n/3; the three hub-to-hub
    chords bound the central triangular face.
    """
    if n % 3 != 0 or n < 6:
        raise ValueError(f"triple fan needs n divisible by 3 and >= 6, got {n}")
    m = n // 3
    chords = set()
    for hub in (0, m, 2 * m):
        for j in range(hub + 2, hub + m + 1):
            a, b = hub, j % n
            chords.add((a, b) if a < b else (b, a))
    return Mop(n, frozenset(chords))


def leaf_count(g: Graph) -> int:
    """Number of degree-one vertices."""
    return sum(1 for v in range(g.n) if g.degree(v) == 1)


def star_blowup(pattern: PatternGraph, s: int) -> Graph:
    """Replace every pendant edge of the pattern by a star of s fresh
    leaves on the pendant edge's internal endpoint.

    Any of the s leaves can play the original leaf's role, so the result
    carries at least s^(number of leaves) copies of the pattern.  Requires
    an outerplanar pattern with at least one internal vertex.
    """
    if s < 1:
        raise ValueError(f"star size must be >= 1, got {s}")
    h = pattern.graph
    if not is_outerplanar_small(h):
        raise ValueError("pattern is not outerplanar")
    leaves = [v for v in range(h.n) if h.degree(v) == 1]
    if h.n - len(leaves) < 1:
        raise ValueError("pattern has no internal vertex to anchor the stars")
    keep = [v for v in range(h.n) if h.degree(v) > 1]
    new_id = {v: i for i, v in enumerate(keep)}
    edges = [(new_id[u], new_id[v]) for u, v in h.edges
             if h.degree(u) > 1 and h.degree(v) > 1]
    nxt = len(keep)
    for v in leaves:
        (center,) = h.neighbors(v)
        for _ in range(s):
            edges.append((new_id[center], nxt))
            nxt += 1
    return Graph(nxt, edges)


# ---------------------------------------------------------------------------
# Canonical form and serialization
# ---------------------------------------------------------------------------

def canonical_chords(n: int, chords: Iterable[tuple[int, int]]) -> tuple:
    """Least chord set over the 2n dihedral relabelings of the polygon.

    Two triangulations are isomorphic graphs iff their canonical chord
    sets agree: for n >= 4 the polygon boundary is the unique Hamiltonian
    cycle of a maximal outerplanar graph, so every isomorphism respects it.
    """
    cs = [tuple(sorted(c)) for c in chords]
    best = None
    for reflect in (False, True):
        for shift in range(n):
            mapped = []
            for a, b in cs:
                a2 = (shift - a) % n if reflect else (a + shift) % n
                b2 = (shift - b) % n if reflect else (b + shift) % n
                mapped.append((a2, b2) if a2 < b2 else (b2, a2))
            key = tuple(sorted(mapped))
            if best is None or key < best:
                best = key
    return best


def parse_edge_list(text: str) -> Graph:
    """Edge-list format: first line n, then one 'u v' line per edge."""
    lines = [ln for ln in (raw.strip() for raw in text.splitlines())
             if ln and not ln.startswith("#")]
    if not lines:
        raise ValueError("empty edge list")
    n = int(lines[0])
    edges = []
    for ln in lines[1:]:
        u, v = ln.split()
        edges.append((int(u), int(v)))
    return Graph(n, edges)


def format_edge_list(g: Graph) -> str:
    lines = [str(g.n)]
    lines.extend(f"{u} {v}" for u, v in sorted(g.edges))
    return "\n".join(lines) + "\n"


def graph_to_dot(g: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    lines.extend(f"  {v};" for v in range(g.n))
    lines.extend(f"  {u} -- {v};" for u, v in sorted(g.edges))
    lines.append("}")
    return "\n".join(lines) + "\n"
