"""Brute-force extremal counts over all triangulations, the handful of
closed forms that have been pinned down exactly, and named verification
suites that reconcile every module against an independent oracle.

The suites are the operational heart of the package: each one re-derives a
claimed identity or bound from scratch (exhaustive enumeration, a second
counting route, or an exact rational comparison) and reports expected
versus actual per case.  Reports are pure functions of their parameters
with a fixed case order, so two runs are byte-identical and parallel
execution cannot perturb them.
"""

from __future__ import annotations

import multiprocessing
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import isqrt
from typing import Callable, Iterable, NamedTuple

from . import exactmath, numeral_paths
from .exactmath import catalan, cycle_density, fixed_vertex_subtree_count
from .graph_core import (
    Graph,
    Mop,
    PatternGraph,
    canonical_chords,
    count_paths,
    cycle_histogram,
    enumerate_mops,
    fan,
    fan_path_count,
    path_histogram,
    paths_between_histogram,
    subgraph_count,
    star_blowup,
    path_pattern,
    triple_fan,
)
from .guards import check_limit
from .tree_engine import (
    Tree,
    count_subtrees,
    count_subtrees_all,
    enumerate_bounded_trees,
    greedy_tree,
    weak_dual,
)

__all__ = [
    "Pattern",
    "NotCovered",
    "NOT_COVERED",
    "ExtremalResult",
    "brute_force_maximum",
    "closed_form_maximum",
    "max_fixed_endpoint_paths",
    "TripleFanComparison",
    "triple_fan_comparison",
    "CaseResult",
    "VerificationReport",
    "verify_suite",
    "suite_names",
]

BRUTE_FORCE_LIMIT = 11       # host size for cycle/path sweeps
BRUTE_FORCE_TREE_LIMIT = 9   # host size for generic tree patterns


# ---------------------------------------------------------------------------
# Patterns
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Pattern:
    """What to count in a host: a cycle by vertex count, a path by edge
    count, or an arbitrary connected tree given by its edges."""

    kind: str
    size: int = 0
    n: int = 0
    edges: tuple = ()

    def __post_init__(self):
        if self.kind == "cycle":
            if self.size < 3:
                raise ValueError(f"cycle length must be >= 3, got {self.size}")
        elif self.kind == "path":
            if self.size < 1:
                raise ValueError(f"path edge count must be >= 1, got {self.size}")
        elif self.kind == "tree":
            tree = Tree(self.n, self.edges)  # validates shape
            object.__setattr__(self, "edges", tuple(tree.edges()))
        else:
            raise ValueError(f"unknown pattern kind {self.kind!r}")

    @classmethod
    def cycle(cls, k: int) -> "Pattern":
        return cls(kind="cycle", size=k)

    @classmethod
    def path(cls, edges: int) -> "Pattern":
        return cls(kind="path", size=edges)

    @classmethod
    def tree(cls, tree: Tree) -> "Pattern":
        return cls(kind="tree", n=tree.n, edges=tuple(tree.edges()))

    @classmethod
    def parse(cls, text: str) -> "Pattern":
        """cycle:K | path:K (K = edge count) | patterns read from files are
        built with Pattern.tree by the caller."""
        kind, _, arg = text.partition(":")
        if kind in ("cycle", "path") and arg.isdigit():
            return cls.cycle(int(arg)) if kind == "cycle" else cls.path(int(arg))
        raise ValueError(f"cannot parse pattern {text!r}; want cycle:K or path:K")

    def describe(self) -> str:
        if self.kind == "cycle":
            return f"cycle:{self.size}"
        if self.kind == "path":
            return f"path:{self.size}"
        return f"tree:n={self.n}"

    def pattern_graph(self) -> PatternGraph:
        if self.kind == "cycle":
            return PatternGraph(Graph(self.size, [(i, (i + 1) % self.size)
                                                  for i in range(self.size)]))
        if self.kind == "path":
            return PatternGraph(Graph(self.size + 1, [(i, i + 1)
                                                      for i in range(self.size)]))
        return PatternGraph(Graph(self.n, self.edges))


class NotCovered:
    """Sentinel: no exact closed form is on record for the request."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "NOT_COVERED"


NOT_COVERED = NotCovered()


@dataclass(frozen=True)
class ExtremalResult:
    """Outcome of a brute-force sweep: the maximum count and every
    triangulation attaining it (canonical representatives when deduped)."""

    n: int
    pattern: Pattern
    maximum: int
    maximizers: tuple
    deduped: bool

    def to_json_obj(self) -> dict:
        return {
            "n": self.n,
            "pattern": self.pattern.describe(),
            "maximum": self.maximum,
            "deduped": self.deduped,
            "maximizers": [[list(c) for c in chords] for chords in self.maximizers],
        }


def _counts_for(g: Graph, patterns: tuple[Pattern, ...],
                pattern_graphs: dict) -> list[int]:
    cyc = [p.size for p in patterns if p.kind == "cycle"]
    pth = [p.size for p in patterns if p.kind == "path"]
    chist = cycle_histogram(g, max_k=max(cyc)) if cyc else {}
    phist = path_histogram(g, max_edges=max(pth)) if pth else {}
    out = []
    for i, p in enumerate(patterns):
        if p.kind == "cycle":
            out.append(chist.get(p.size, 0))
        elif p.kind == "path":
            out.append(phist.get(p.size, 0))
        else:
            out.append(subgraph_count(g, pattern_graphs[i]))
    return out


def _scan_partition(n: int, patterns: tuple[Pattern, ...],
                    first_apex: int | None) -> list[tuple[int, list]]:
    pattern_graphs = {i: p.pattern_graph() for i, p in enumerate(patterns)
                      if p.kind == "tree"}
    best = [-1] * len(patterns)
    arg: list[list] = [[] for _ in patterns]
    for mop in enumerate_mops(n, limit=None, first_apex=first_apex):
        counts = _counts_for(mop.graph, patterns, pattern_graphs)
        for i, c in enumerate(counts):
            if c > best[i]:
                best[i] = c
                arg[i] = [tuple(mop.sorted_chords())]
            elif c == best[i]:
                arg[i].append(tuple(mop.sorted_chords()))
    return list(zip(best, arg))


def _scan_worker(args):
    n, patterns, apex = args
    return _scan_partition(n, patterns, apex)


def _scan_all(n: int, patterns: tuple[Pattern, ...], jobs: int) -> list[tuple[int, list]]:
    if jobs <= 1 or n < 4:
        return _scan_partition(n, patterns, None)
    apexes = list(range(1, n - 1))
    with multiprocessing.Pool(min(jobs, len(apexes))) as pool:
        parts = pool.map(_scan_worker, [(n, patterns, a) for a in apexes])
    merged: list[tuple[int, list]] = [(-1, []) for _ in patterns]
    for part in parts:  # apex order keeps the merge deterministic
        for i, (b, a) in enumerate(part):
            mb, ma = merged[i]
            if b > mb:
                merged[i] = (b, list(a))
            elif b == mb:
                ma.extend(a)
    return merged


def brute_force_many(n: int, patterns: Iterable[Pattern], *, dedup: bool = True,
                     jobs: int = 1, limit: int | None = 0) -> list[ExtremalResult]:
    """Shared enumeration sweep for several patterns at once.

    limit=0 picks the guard matching the pattern kinds; None disables it.
    """
    patterns = tuple(patterns)
    if limit == 0:
        limit = (BRUTE_FORCE_TREE_LIMIT if any(p.kind == "tree" for p in patterns)
                 else BRUTE_FORCE_LIMIT)
    check_limit(n, limit, "brute-force host size n")
    results = []
    for pattern, (best, argmax) in zip(patterns, _scan_all(n, patterns, jobs)):
        if dedup:
            reps = sorted(set(canonical_chords(n, chords) for chords in argmax))
        else:
            reps = sorted(set(argmax))
        results.append(ExtremalResult(n=n, pattern=pattern, maximum=best,
                                      maximizers=tuple(reps), deduped=dedup))
    return results


def brute_force_maximum(n: int, pattern: Pattern, *, dedup: bool = True,
                        jobs: int = 1, limit: int | None = 0) -> ExtremalResult:
    """Exact maximum of the pattern count over all triangulations of the
    n-gon, with the attaining triangulations."""
    return brute_force_many(n, [pattern], dedup=dedup, jobs=jobs, limit=limit)[0]


def closed_form_maximum(n: int, pattern: Pattern):
    """The exact closed forms on record (short cycles and the 2-edge path);
    NOT_COVERED for everything else."""
    if pattern.kind == "cycle":
        k = pattern.size
        if k == 3 and n >= 3:
            return n - 2
        if k == 4 and n >= 4:
            return n - 3
        if k == 5 and n >= 5:
            return (3 * n - 12) // 2
        if k == 6 and n >= 6:
            return (5 * n - 28) // 2
        return NOT_COVERED
    if pattern.kind == "path" and pattern.size == 2 and n >= 3:
        return (n * n + 3 * n - 12) // 2
    return NOT_COVERED


@lru_cache(maxsize=32)
def _fixed_endpoint_maxima(n: int) -> tuple[int, ...]:
    """max over triangulations and vertex pairs of the number of equal-
    length paths between the pair, indexed by edge count (0..n-1)."""
    best = [0] * n
    for mop in enumerate_mops(n):
        g = mop.graph
        for u in range(n - 1):
            hist = paths_between_histogram(g, u)
            for (v, e), c in hist.items():
                if v > u and c > best[e]:
                    best[e] = c
    return tuple(best)


def max_fixed_endpoint_paths(n: int, k: int, limit: int | None = 10) -> int:
    """Largest number of k-edge paths between any fixed vertex pair in any
    triangulation of the n-gon."""
    check_limit(n, limit, "fixed-endpoint host size n")
    if not (1 <= k <= n - 1):
        raise ValueError(f"edge count {k} outside 1..{n - 1}")
    return _fixed_endpoint_maxima(n)[k]


class TripleFanComparison(NamedTuple):
    triple: int
    fan: int


def triple_fan_comparison(n: int, k: int) -> TripleFanComparison:
    """Direct counts of paths on k vertices (k-1 edges) in the glued
    triple fan versus the plain fan on n vertices."""
    if k < 2:
        raise ValueError(f"path vertex count must be >= 2, got {k}")
    edges = k - 1
    return TripleFanComparison(
        triple=count_paths(triple_fan(n).graph, edges),
        fan=count_paths(fan(n).graph, edges),
    )


# ---------------------------------------------------------------------------
# Verification suites
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CaseResult:
    case: str
    expected: object
    actual: object
    passed: bool
    detail: str = ""


def _jsonify(value):
    if isinstance(value, Fraction):
        return exactmath.rational_to_json(value)
    if isinstance(value, bool) or isinstance(value, int) or isinstance(value, str):
        return value
    if isinstance(value, (list, tuple)):
        return [_jsonify(v) for v in value]
    return str(value)


def _textify(value) -> str:
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(_textify(v) for v in value) + "]"
    return str(value)


@dataclass
class VerificationReport:
    suite: str
    params: dict
    cases: list[CaseResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.cases)

    def to_json_obj(self) -> dict:
        return {
            "suite": self.suite,
            "params": {k: _jsonify(v) for k, v in sorted(self.params.items())},
            "passed": self.passed,
            "cases": [
                {
                    "case": c.case,
                    "expected": _jsonify(c.expected),
                    "actual": _jsonify(c.actual),
                    "passed": c.passed,
                    **({"detail": c.detail} if c.detail else {}),
                }
                for c in self.cases
            ],
        }

    def to_text(self) -> str:
        rows = [("case", "expected", "actual", "status", "")]
        for c in self.cases:
            rows.append((c.case, _textify(c.expected), _textify(c.actual),
                         "pass" if c.passed else "FAIL", c.detail))
        widths = [max(len(r[i]) for r in rows) for i in range(4)]
        lines = [f"suite: {self.suite}"]
        if self.params:
            joined = ", ".join(f"{k}={_textify(v)}"
                               for k, v in sorted(self.params.items()))
            lines.append(f"params: {joined}")
        for i, r in enumerate(rows):
            line = "  ".join(r[j].ljust(widths[j]) for j in range(4)).rstrip()
            if r[4]:
                line += f"  ({r[4]})"
            lines.append(line)
            if i == 0:
                lines.append("  ".join("-" * w for w in widths))
        lines.append(f"overall: {'pass' if self.passed else 'FAIL'}")
        return "\n".join(lines) + "\n"


KNOWN_CYCLE_DENSITIES = {
    3: Fraction(1), 4: Fraction(1), 5: Fraction(3, 2), 6: Fraction(5, 2),
    7: Fraction(5), 8: Fraction(21, 2), 9: Fraction(95, 4),
    10: Fraction(227, 4), 11: Fraction(141), 12: Fraction(1447, 4),
}


def _suite_c_table(params, jobs):
    cases = []
    for k in sorted(KNOWN_CYCLE_DENSITIES):
        expected = KNOWN_CYCLE_DENSITIES[k]
        actual = cycle_density(k)
        cases.append(CaseResult(f"cycle-density-k{k}", expected, actual,
                                expected == actual))
    return cases


def _suite_catalan_identity(params, jobs):
    cases = []
    for k in range(1, params["max_k"] + 1):
        expected = catalan(k + 1) - catalan(k)
        actual = fixed_vertex_subtree_count(k)
        cases.append(CaseResult(f"fixed-vertex-subtrees-k{k}", expected, actual,
                                expected == actual))
    return cases


def _cycle_range(k: int):
    return {3: 3, 4: 4, 5: 5, 6: 6}[k]


def _suite_cycle_closed_forms(params, jobs):
    cases = []
    for n in range(3, params["max_n"] + 1):
        ks = [k for k in (3, 4, 5, 6) if n >= _cycle_range(k)]
        patterns = [Pattern.cycle(k) for k in ks]
        results = brute_force_many(n, patterns, dedup=True, jobs=jobs)
        for k, res in zip(ks, results):
            expected = closed_form_maximum(n, Pattern.cycle(k))
            cases.append(CaseResult(f"n{n}-C{k}", expected, res.maximum,
                                    expected == res.maximum))
            if k == 5 and n >= 7:
                want = (n - 4) // 2  # degree-3 vertices in some maximizing dual
                got = []
                for chords in res.maximizers:
                    dual = weak_dual(Mop(n, frozenset(chords)))
                    got.append(sum(1 for v in range(dual.n) if dual.degree(v) == 3))
                cases.append(CaseResult(
                    f"n{n}-C5-dual-degree3", want, max(got), want in got,
                    detail="some maximizer's dual has this many degree-3 vertices",
                ))
            if k == 6 and n >= 8:
                # duals without degree-2 vertices (or with a single one next
                # to a leaf) should all attain the maximum
                off = 0
                for tree in enumerate_bounded_trees(n - 2, 3):
                    deg2 = [v for v in range(tree.n) if tree.degree(v) == 2]
                    shaped = (not deg2) or (
                        len(deg2) == 1
                        and any(tree.degree(w) == 1
                                for w in tree.neighbors(deg2[0]))
                    )
                    if shaped and count_subtrees(tree, 4) != res.maximum:
                        off += 1
                cases.append(CaseResult(
                    f"n{n}-C6-extremal-shape", 0, off, off == 0,
                    detail="shaped duals below the maximum",
                ))
    return cases


def _suite_cycle_bijection(params, jobs):
    cases = []
    for n in range(3, params["max_n"] + 1):
        mismatches = 0
        total = 0
        for mop in enumerate_mops(n):
            hist = cycle_histogram(mop.graph)
            gs = count_subtrees_all(weak_dual(mop))
            total += 1
            for k in range(3, n + 1):
                if hist.get(k, 0) != gs[k - 2]:
                    mismatches += 1
        cases.append(CaseResult(f"n{n}-cycles-equal-dual-subtrees", 0, mismatches,
                                mismatches == 0,
                                detail=f"{total} triangulations, all k"))
    return cases


def _suite_greedy_optimality(params, jobs):
    cases = []
    for n in range(3, params["max_n"] + 1):
        patterns = [Pattern.cycle(k) for k in range(3, n + 1)]
        results = brute_force_many(n, patterns, dedup=True, jobs=jobs)
        trees = list(enumerate_bounded_trees(n - 2, 3)) if n >= 3 else []
        greedy = greedy_tree(3, n - 2) if n - 2 >= 1 else None
        for k, res in zip(range(3, n + 1), results):
            tree_max = max(count_subtrees(t, k - 2) for t in trees)
            greedy_val = count_subtrees(greedy, k - 2)
            ok = res.maximum == tree_max == greedy_val
            cases.append(CaseResult(
                f"n{n}-k{k}", "all equal",
                f"brute={res.maximum} trees={tree_max} greedy={greedy_val}", ok))
    return cases


def _suite_p3_exact(params, jobs):
    cases = []
    for n in range(4, params["max_n"] + 1):
        res = brute_force_maximum(n, Pattern.path(2), dedup=True, jobs=jobs)
        expected = (n * n + 3 * n - 12) // 2
        cases.append(CaseResult(f"n{n}-value", expected, res.maximum,
                                expected == res.maximum))
        fan_canon = canonical_chords(n, fan(n).chords)
        actual = [list(map(list, m)) for m in res.maximizers]
        cases.append(CaseResult(
            f"n{n}-unique-maximizer", [list(map(list, fan_canon))], actual,
            res.maximizers == (fan_canon,),
            detail="maximizers up to isomorphism",
        ))
    return cases


def _suite_fan_formula(params, jobs):
    cases = []
    for n in range(4, params["max_n"] + 1):
        g = fan(n).graph
        hist = path_histogram(g, max_edges=n - 1)
        for k in range(3, n):
            expected = fan_path_count(n, k)
            actual = hist.get(k, 0)
            cases.append(CaseResult(f"n{n}-k{k}", expected, actual,
                                    expected == actual))
    return cases


def _suite_counterexample_6(params, jobs):
    res = brute_force_maximum(6, Pattern.path(3), dedup=True, jobs=jobs)
    tf = count_paths(triple_fan(6).graph, 3)
    fn = count_paths(fan(6).graph, 3)
    tf_canon = canonical_chords(6, triple_fan(6).chords)
    return [
        CaseResult("brute-max-3edge-paths", 33, res.maximum, res.maximum == 33),
        CaseResult("triple-fan-count", 33, tf, tf == 33),
        CaseResult("fan-count", 32, fn, fn == 32),
        CaseResult("triple-fan-is-maximizer", True, tf_canon in res.maximizers,
                   tf_canon in res.maximizers),
    ]


def _suite_triple_fan_beats_fan(params, jobs):
    n, k = params["n"], params["k"]
    cmp = triple_fan_comparison(n, k)
    cases = [
        CaseResult(f"n{n}-P{k}-dominance", "triple > fan",
                   f"triple={cmp.triple} fan={cmp.fan}", cmp.triple > cmp.fan),
        CaseResult(f"n{n}-fan-closed-form", fan_path_count(n, k - 1), cmp.fan,
                   cmp.fan == fan_path_count(n, k - 1)),
    ]
    return cases


def _suite_gamma(params, jobs):
    cases = []
    for t in range(2, params["max_t"] + 1):
        for length in range(0, params["max_l"] + 1):
            expected = numeral_paths.count_schedules(length, t)
            actual = sum(1 for _ in numeral_paths.enumerate_schedules(length, t))
            cases.append(CaseResult(f"count-vs-enumeration-L{length}-t{t}",
                                    expected, actual, expected == actual))
    for length in range(1, params["max_l_products"] + 1):
        buckets: dict[tuple, int] = {}
        top = 0
        for sched in numeral_paths.enumerate_schedules(length, length + 1):
            mx = max(sched.values)
            top = max(top, mx)
            key = tuple(sched.values.count(v) for v in range(mx + 1))
            buckets[key] = buckets.get(key, 0) + 1
        mismatches = 0
        for key, count in sorted(buckets.items()):
            if numeral_paths.count_schedules_with_multiplicities(key) != count:
                mismatches += 1
        cases.append(CaseResult(f"multiplicity-products-L{length}", 0, mismatches,
                                mismatches == 0,
                                detail=f"{len(buckets)} multiplicity vectors"))
    for length in range(0, params["max_l"] + 1):
        expected = catalan(length)
        width = max(length + 1, 2)  # smallest width whose cap is inactive
        actual = numeral_paths.count_schedules(length, width)
        wide = numeral_paths.count_schedules(length, width + 3)
        cases.append(CaseResult(f"uncapped-catalan-L{length}", expected,
                                actual, expected == actual == wide,
                                detail="cap inactive once width-2 >= length-1"))
    return cases


def _suite_injection(params, jobs):
    cases = []
    for base, width, k in params["triples"]:
        graph = numeral_paths.numeral_graph(base, width)
        edges = graph.graph.edges
        schedules = list(numeral_paths.enumerate_schedules(k - 2 * width, width))
        expected_per_pair = numeral_paths.count_schedules(k - 2 * width, width)
        pairs = numeral_paths.admissible_pairs(base, width, k)
        violations = 0
        for a, b in pairs:
            seen = set()
            for sched in schedules:
                path = numeral_paths.schedule_to_path(a, b, sched, base, width, k)
                ok = (
                    len(path) == k + 1
                    and path[0] == a
                    and path[-1] == b
                    and len(set(path)) == len(path)
                    and all(((x, y) if x < y else (y, x)) in edges
                            for x, y in zip(path, path[1:]))
                )
                if not ok:
                    violations += 1
                seen.add(tuple(path))
            if len(seen) != expected_per_pair:
                violations += 1
        cases.append(CaseResult(
            f"N{base}-t{width}-k{k}", 0, violations, violations == 0,
            detail=f"{len(pairs)} endpoint pairs x {expected_per_pair} schedules",
        ))
    return cases


def _suite_bounds_4k(params, jobs):
    cases = []
    bounds = exactmath.path_count_bounds(params["max_k_f"])
    bad = [k for k in range(params["max_k_f"] + 1)
           if bounds.any_pair(k) > 4**k]
    cases.append(CaseResult("path-bound-below-4^k", 0, len(bad), not bad,
                            detail=f"k = 0..{params['max_k_f']}"))
    for n in range(3, params["max_n_paths"] + 1):
        bad_ks = [k for k in range(1, n)
                  if max_fixed_endpoint_paths(n, k) > bounds.any_pair(k)]
        cases.append(CaseResult(f"fixed-endpoint-max-below-bound-n{n}", 0,
                                len(bad_ks), not bad_ks,
                                detail="all edge counts, all pairs"))
    bad_density = [k for k in range(1, params["max_k_density"] + 1)
                   if exactmath.subtree_density(k) >= 4**k]
    cases.append(CaseResult("subtree-density-below-4^k", 0, len(bad_density),
                            not bad_density,
                            detail=f"k = 1..{params['max_k_density']}"))
    for k in params["gamma_ks"]:
        t = isqrt(k)
        count = numeral_paths.count_schedules(k - 2 * t, t)
        floor = numeral_paths.schedule_count_lower_bound_exact(k)
        cases.append(CaseResult(f"schedule-count-above-floor-k{k}",
                                "count > floor",
                                f"count={count} floor={_textify(floor)}",
                                count > floor))
    return cases


def _suite_limit_bounds(params, jobs):
    cases = []
    bad = []
    for k in range(16, params["max_k"] + 1):
        density = exactmath.subtree_density(k)
        if not (exactmath.density_lower_exact(k) <= density < Fraction(4)**k):
            bad.append(k)
    cases.append(CaseResult("family-bound-brackets-density", 0, len(bad), not bad,
                            detail=f"k = 16..{params['max_k']}, exact rationals"))
    k = params["root_check_k"]
    density = exactmath.subtree_density(k)
    cases.append(CaseResult(f"kth-root-below-4-k{k}", True,
                            density < Fraction(4)**k, density < Fraction(4)**k,
                            detail="density^(1/k) < 4 checked as density < 4^k"))
    return cases


def _suite_star_blowup(params, jobs):
    probes = [
        ("P4", path_pattern(3), 5, 25),
        ("P3", path_pattern(2), 3, 9),
        ("K13", PatternGraph(Graph(4, [(0, 1), (0, 2), (0, 3)])), 2, 8),
    ]
    cases = []
    for name, pattern, s, floor in probes:
        blown = star_blowup(pattern, s)
        got = subgraph_count(blown, pattern)
        cases.append(CaseResult(f"{name}-s{s}", f">= {floor}", got, got >= floor))
    return cases


def _suite_constructions(params, jobs):
    cases = []
    for width in range(1, params["max_t"] + 1):
        for base in range(2, params["max_n_base"] + 1):
            if base**width < 3:
                continue
            graph = numeral_paths.numeral_graph(base, width)
            n = graph.n
            edge_count = graph.graph.edge_count()
            cases.append(CaseResult(
                f"N{base}-t{width}-triangulation", 2 * n - 3, edge_count,
                edge_count == 2 * n - 3,
                detail="construction already validated as polygon + chords",
            ))
    mismatched = [base for base in range(3, params["max_n_base"] + 1)
                  if numeral_paths.numeral_graph(base, 1).graph.edges
                  != fan(base).graph.edges]
    cases.append(CaseResult("width-1-equals-fan", 0, len(mismatched),
                            not mismatched,
                            detail=f"bases 3..{params['max_n_base']}"))
    g42 = numeral_paths.numeral_graph(4, 2)
    expected_chords = [(0, 2), (0, 3), (0, 4), (0, 8), (0, 12), (4, 6), (4, 7),
                       (4, 8), (8, 10), (8, 11), (8, 12), (12, 14), (12, 15)]
    actual_chords = g42.mop.sorted_chords()
    cases.append(CaseResult("base4-width2-chords",
                            [list(c) for c in expected_chords],
                            [list(c) for c in actual_chords],
                            actual_chords == expected_chords))
    return cases


_SUITES: dict[str, tuple[Callable, dict]] = {
    "c-table": (_suite_c_table, {}),
    "catalan-identity": (_suite_catalan_identity, {"max_k": 50}),
    "cycle-closed-forms": (_suite_cycle_closed_forms, {"max_n": 11}),
    "cycle-bijection": (_suite_cycle_bijection, {"max_n": 10}),
    "greedy-optimality": (_suite_greedy_optimality, {"max_n": 10}),
    "p3-exact": (_suite_p3_exact, {"max_n": 10}),
    "fan-formula": (_suite_fan_formula, {"max_n": 14}),
    "counterexample-6": (_suite_counterexample_6, {}),
    "triple-fan-beats-fan": (_suite_triple_fan_beats_fan, {"n": 45, "k": 6}),
    "gamma": (_suite_gamma, {"max_l": 12, "max_t": 6, "max_l_products": 10}),
    "injection": (_suite_injection,
                  {"triples": ((10, 2, 8), (12, 2, 10), (30, 3, 14))}),
    "bounds-4k": (_suite_bounds_4k,
                  {"max_k_f": 30, "max_n_paths": 10, "max_k_density": 60,
                   "gamma_ks": (16, 25, 36)}),
    "limit-bounds": (_suite_limit_bounds, {"max_k": 60, "root_check_k": 36}),
    "star-blowup": (_suite_star_blowup, {}),
    "constructions": (_suite_constructions, {"max_t": 3, "max_n_base": 12}),
}


def suite_names() -> list[str]:
    return sorted(_SUITES)


def verify_suite(name: str, *, jobs: int = 1, **overrides) -> VerificationReport:
    """Run a named suite with its default parameters (overridable) and
    return the deterministic report."""
    if name not in _SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {suite_names()}")
    func, defaults = _SUITES[name]
    params = dict(defaults)
    for key, value in overrides.items():
        if key not in defaults:
            raise ValueError(f"suite {name!r} takes no parameter {key!r}")
        params[key] = value
    cases = func(params, jobs)
    return VerificationReport(suite=name, params=params, cases=cases)
