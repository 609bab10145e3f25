"""Bounded-degree trees: duals of triangulations, subtree counting, and
exhaustive generation.

The bridge that makes cycle maximization tractable: a k-cycle in a
triangulated outerplanar host corresponds to a connected (k-2)-vertex
subtree of the host's weak dual (the tree on triangular faces, adjacent
when two faces share a chord), and the correspondence is one-to-one.
Maximizing cycles over hosts therefore means maximizing k-subtree counts
over trees with degrees at most 3, where breadth-first "greedy" trees are
the known winners.

Subtree counting is a rooted dynamic programme over truncated polynomials;
everything else is plain breadth-first plumbing.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Iterator, NamedTuple

from .graph_core import Graph, Mop, count_cycles
from .guards import check_limit

__all__ = [
    "Tree",
    "weak_dual",
    "greedy_tree",
    "count_subtrees",
    "count_subtrees_all",
    "count_subtrees_total",
    "wiener",
    "enumerate_bounded_trees",
    "tree_canonical_form",
    "CycleSubtreeCounts",
    "cycle_subtree_counts",
    "parse_tree_text",
    "format_tree_text",
    "tree_to_dot",
]

TREE_ENUM_LIMIT = 12


class Tree:
    """Immutable tree on vertices 0..n-1."""

    __slots__ = ("n", "_adj", "max_degree")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 1:
            raise ValueError(f"tree needs at least 1 vertex, got {n}")
        es = set()
        for u, v in edges:
            if u == v or not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"bad tree edge ({u},{v})")
            es.add((u, v) if u < v else (v, u))
        if len(es) != n - 1:
            raise ValueError(f"{len(es)} edges on {n} vertices; a tree has {n - 1}")
        adj = [[] for _ in range(n)]
        for u, v in es:
            adj[u].append(v)
            adj[v].append(u)
        self._adj = tuple(tuple(sorted(a)) for a in adj)
        self.n = n
        self.max_degree = max((len(a) for a in self._adj), default=0)
        # n-1 edges + connectivity = acyclic; verify connectivity
        seen = [False] * n
        seen[0] = True
        stack = [0]
        reached = 1
        while stack:
            v = stack.pop()
            for w in self._adj[v]:
                if not seen[w]:
                    seen[w] = True
                    reached += 1
                    stack.append(w)
        if reached != n:
            raise ValueError("edge set is not connected")

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def edges(self) -> list[tuple[int, int]]:
        return sorted(
            (v, w) for v in range(self.n) for w in self._adj[v] if v < w
        )

    def as_graph(self) -> Graph:
        return Graph(self.n, self.edges())

    def __repr__(self):
        return f"Tree(n={self.n}, edges={self.edges()})"


def weak_dual(mop: Mop) -> Tree:
    """Tree on the n-2 triangular faces of a triangulation, adjacent when
    two faces share an edge.  Faces are numbered in sorted order of their
    vertex triples; the result has maximum degree at most 3."""
    tris = mop.triangles()
    index = {t: i for i, t in enumerate(tris)}
    edge_owner: dict[tuple[int, int], int] = {}
    dual_edges = []
    for t in tris:
        i = index[t]
        for a, b in ((t[0], t[1]), (t[0], t[2]), (t[1], t[2])):
            if (a, b) in edge_owner:
                dual_edges.append((edge_owner[(a, b)], i))
            else:
                edge_owner[(a, b)] = i
    return Tree(len(tris), dual_edges)


def greedy_tree(degree: int, n: int) -> Tree:
    """First n vertices of a breadth-first search on the infinite
    degree-regular tree: the root takes up to `degree` children, every
    later vertex up to degree-1, levels filling left to right."""
    if degree < 2:
        raise ValueError(f"degree bound must be >= 2, got {degree}")
    if n < 1:
        raise ValueError(f"vertex count must be >= 1, got {n}")
    edges = []
    capacity = [degree]
    head = 0
    nxt = 1
    while nxt < n:
        if capacity[head] == 0:
            head += 1
            continue
        capacity[head] -= 1
        edges.append((head, nxt))
        capacity.append(degree - 1)
        nxt += 1
    return Tree(n, edges)


def _postorder(tree: Tree, root: int = 0) -> list[tuple[int, int]]:
    """(vertex, parent) pairs, children before parents, without recursion."""
    order = []
    stack = [(root, -1)]
    while stack:
        v, parent = stack.pop()
        order.append((v, parent))
        for w in tree.neighbors(v):
            if w != parent:
                stack.append((w, v))
    order.reverse()
    return order


def _subtree_polys(tree: Tree, top: int) -> list[list[int]]:
    """poly[v][j] = number of j-vertex subtrees whose vertex closest to the
    root (vertex 0) is v, for j < top.

    Bottom-up: the product over children of (1 + child polynomial), shifted
    by one for v itself, truncated throughout.
    """
    poly: list[list[int]] = [[]] * tree.n
    for v, parent in _postorder(tree):
        acc = [1]
        for w in tree.neighbors(v):
            if w == parent:
                continue
            child = poly[w]
            out = [0] * min(len(acc) + len(child) - 1, top)
            for i, a in enumerate(acc):
                out[i] += a
                for j, c in enumerate(child):
                    if i + j >= top:
                        break
                    out[i + j] += a * c
            acc = out
        poly[v] = [0] + acc[: top - 1]
    return poly


def count_subtrees(tree: Tree, k: int) -> int:
    """Number of connected k-vertex subtrees, by summing over the unique
    topmost vertex of each subtree in a fixed rooting."""
    if not (1 <= k <= tree.n):
        raise ValueError(f"subtree size {k} outside 1..{tree.n}")
    poly = _subtree_polys(tree, k + 1)
    return sum(p[k] if len(p) > k else 0 for p in poly)


def count_subtrees_all(tree: Tree) -> list[int]:
    """Counts of connected subtrees of every size in one sweep: entry k is
    the k-vertex count, entry 0 is 0."""
    poly = _subtree_polys(tree, tree.n + 1)
    out = [0] * (tree.n + 1)
    for p in poly:
        for j, c in enumerate(p):
            out[j] += c
    return out


def count_subtrees_total(tree: Tree) -> int:
    """Total number of connected subtrees of every size."""
    return sum(count_subtrees_all(tree))


def wiener(tree: Tree) -> int:
    """Sum of distances over all unordered vertex pairs."""
    total = 0
    for s in range(tree.n):
        dist = [-1] * tree.n
        dist[s] = 0
        frontier = [s]
        while frontier:
            nxt = []
            for v in frontier:
                for w in tree.neighbors(v):
                    if dist[w] < 0:
                        dist[w] = dist[v] + 1
                        nxt.append(w)
            frontier = nxt
        total += sum(d for v, d in enumerate(dist) if v > s)
    return total


# ---------------------------------------------------------------------------
# Isomorphism-free generation
# ---------------------------------------------------------------------------

def _rooted_form(tree: Tree, v: int, parent: int):
    return tuple(sorted(_rooted_form(tree, w, v)
                        for w in tree.neighbors(v) if w != parent))


def tree_canonical_form(tree: Tree):
    """Canonical nested-tuple form: root at the centroid, or combine the
    two rooted halves when a centroid edge exists.  Equal forms mean
    isomorphic trees."""
    n = tree.n
    if n == 1:
        return ("v", ())
    best_weight = None
    centroids = []
    for v in range(n):
        weight = _max_component_without(tree, v)
        if best_weight is None or weight < best_weight:
            best_weight = weight
            centroids = [v]
        elif weight == best_weight:
            centroids.append(v)
    if len(centroids) == 1:
        return ("v", _rooted_form(tree, centroids[0], -1))
    a, b = centroids
    return ("e", tuple(sorted((_rooted_form(tree, a, b), _rooted_form(tree, b, a)))))


def _max_component_without(tree: Tree, v: int) -> int:
    best = 0
    seen = [False] * tree.n
    seen[v] = True
    for w in tree.neighbors(v):
        if seen[w]:
            continue
        count = 0
        stack = [w]
        seen[w] = True
        while stack:
            x = stack.pop()
            count += 1
            for y in tree.neighbors(x):
                if not seen[y]:
                    seen[y] = True
                    stack.append(y)
        best = max(best, count)
    return best


@lru_cache(maxsize=64)
def _bounded_tree_classes(n: int, max_degree: int) -> tuple[Tree, ...]:
    if n == 1:
        return (Tree(1, []),)
    smaller = _bounded_tree_classes(n - 1, max_degree)
    out: dict = {}
    for t in smaller:
        for v in range(t.n):
            if t.degree(v) >= max_degree:
                continue
            grown = Tree(n, t.edges() + [(v, n - 1)])
            out.setdefault(tree_canonical_form(grown), grown)
    return tuple(out[key] for key in sorted(out))


def enumerate_bounded_trees(n: int, max_degree: int,
                            limit: int | None = TREE_ENUM_LIMIT) -> Iterator[Tree]:
    """Every isomorphism class of trees on n vertices with maximum degree
    at most max_degree, exactly once, grown leaf by leaf and deduplicated
    by canonical form."""
    if n < 1:
        raise ValueError(f"vertex count must be >= 1, got {n}")
    if max_degree < 1 and n > 1:
        raise ValueError("max_degree must be >= 1 for trees with edges")
    check_limit(n, limit, "tree size n")
    yield from _bounded_tree_classes(n, max_degree)


class CycleSubtreeCounts(NamedTuple):
    cycles: int
    subtrees: int


def cycle_subtree_counts(mop: Mop, k: int) -> CycleSubtreeCounts:
    """Pair (k-cycles of the host, (k-2)-subtrees of its weak dual); the two
    components agree, one face-set at a time."""
    if not (3 <= k <= mop.n):
        raise ValueError(f"cycle length {k} outside 3..{mop.n}")
    return CycleSubtreeCounts(
        cycles=count_cycles(mop.graph, k),
        subtrees=count_subtrees(weak_dual(mop), k - 2),
    )


# ---------------------------------------------------------------------------
# Text and DOT formats
# ---------------------------------------------------------------------------

def parse_tree_text(text: str) -> Tree:
    """Tree format: first line n, then n-1 lines 'parent child'."""
    lines = [ln for ln in (raw.strip() for raw in text.splitlines())
             if ln and not ln.startswith("#")]
    if not lines:
        raise ValueError("empty tree file")
    n = int(lines[0])
    edges = []
    for ln in lines[1:]:
        u, v = ln.split()
        edges.append((int(u), int(v)))
    return Tree(n, edges)


def format_tree_text(tree: Tree) -> str:
    """Emit with parents first along a breadth-first order from vertex 0."""
    lines = [str(tree.n)]
    seen = [False] * tree.n
    seen[0] = True
    frontier = [0]
    while frontier:
        nxt = []
        for v in frontier:
            for w in tree.neighbors(v):
                if not seen[w]:
                    seen[w] = True
                    lines.append(f"{v} {w}")
                    nxt.append(w)
        frontier = nxt
    return "\n".join(lines) + "\n"


def tree_to_dot(tree: Tree, name: str = "T") -> str:
    lines = [f"graph {name} {{"]
    lines.extend(f"  {v};" for v in range(tree.n))
    lines.extend(f"  {u} -- {v};" for u, v in tree.edges())
    lines.append("}")
    return "\n".join(lines) + "\n"
