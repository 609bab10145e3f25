"""Tree machinery, checked against exhaustive subset enumeration and the
networkx free-tree generator."""

import itertools

import networkx as nx
import pytest

from opturan.graph_core import Mop, enumerate_mops, fan, triple_fan
from opturan.guards import ScaleLimitError
from opturan.tree_engine import (
    Tree,
    count_subtrees,
    count_subtrees_all,
    count_subtrees_total,
    cycle_subtree_counts,
    enumerate_bounded_trees,
    format_tree_text,
    greedy_tree,
    parse_tree_text,
    tree_canonical_form,
    tree_to_dot,
    weak_dual,
    wiener,
)


def path_tree(n):
    return Tree(n, [(i, i + 1) for i in range(n - 1)])


def star_tree(leaves):
    return Tree(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def subtree_count_oracle(tree, k):
    """Connected k-subsets by direct enumeration."""
    count = 0
    for subset in itertools.combinations(range(tree.n), k):
        inside = set(subset)
        seen = {subset[0]}
        stack = [subset[0]]
        while stack:
            v = stack.pop()
            for w in tree.neighbors(v):
                if w in inside and w not in seen:
                    seen.add(w)
                    stack.append(w)
        if len(seen) == k:
            count += 1
    return count


# ---------------------------------------------------------------------------
# Tree basics
# ---------------------------------------------------------------------------

def test_tree_validation():
    with pytest.raises(ValueError):
        Tree(3, [(0, 1)])
    with pytest.raises(ValueError):
        Tree(4, [(0, 1), (2, 3), (0, 1)])
    with pytest.raises(ValueError):
        Tree(4, [(0, 1), (1, 2), (0, 2)])
    assert Tree(1, []).n == 1
    assert star_tree(3).max_degree == 3


# ---------------------------------------------------------------------------
# Weak dual
# ---------------------------------------------------------------------------

def test_weak_dual_examples():
    assert weak_dual(Mop(3)).n == 1
    dual5 = weak_dual(fan(5))
    assert tree_canonical_form(dual5) == tree_canonical_form(path_tree(3))
    dual_tf = weak_dual(triple_fan(6))
    assert tree_canonical_form(dual_tf) == tree_canonical_form(star_tree(3))


def test_weak_dual_shape_for_all_small_hosts():
    for n in range(3, 9):
        for m in enumerate_mops(n):
            dual = weak_dual(m)
            assert dual.n == n - 2
            assert dual.max_degree <= 3
            assert len(dual.edges()) == n - 3


# ---------------------------------------------------------------------------
# Greedy trees
# ---------------------------------------------------------------------------

def test_greedy_tree_small():
    assert tree_canonical_form(greedy_tree(3, 4)) == tree_canonical_form(star_tree(3))
    assert greedy_tree(3, 2).edges() == [(0, 1)]
    assert greedy_tree(2, 5).max_degree == 2  # degree bound 2 gives a path


def test_greedy_tree_levels():
    tree = greedy_tree(3, 10)
    depth = {0: 0}
    frontier = [0]
    while frontier:
        nxt = []
        for v in frontier:
            for w in tree.neighbors(v):
                if w not in depth:
                    depth[w] = depth[v] + 1
                    nxt.append(w)
        frontier = nxt
    sizes = {}
    for d in depth.values():
        sizes[d] = sizes.get(d, 0) + 1
    assert sizes == {0: 1, 1: 3, 2: 6}
    assert tree.degree(0) <= 3
    assert all(tree.degree(v) <= 3 for v in range(tree.n))


def test_greedy_tree_rejects_bad_args():
    with pytest.raises(ValueError):
        greedy_tree(1, 5)
    with pytest.raises(ValueError):
        greedy_tree(3, 0)


# ---------------------------------------------------------------------------
# Subtree counting
# ---------------------------------------------------------------------------

def test_count_subtrees_examples():
    star = star_tree(3)
    assert count_subtrees(star, 3) == 3
    assert count_subtrees_total(Tree(1, [])) == 1
    assert count_subtrees_total(Tree(2, [(0, 1)])) == 3
    assert count_subtrees_total(path_tree(3)) == 6


def test_count_subtrees_bounds_and_sanity():
    for tree in (path_tree(7), star_tree(3), greedy_tree(3, 9)):
        gs = count_subtrees_all(tree)
        assert gs[1] == tree.n
        assert gs[2] == tree.n - 1
        assert gs[tree.n] == 1
        assert sum(gs) == count_subtrees_total(tree)
    with pytest.raises(ValueError):
        count_subtrees(path_tree(4), 5)


def test_count_subtrees_matches_exhaustive_oracle():
    for n in range(2, 9):
        for tree in enumerate_bounded_trees(n, 4):
            for k in range(1, n + 1):
                assert count_subtrees(tree, k) == subtree_count_oracle(tree, k)


# ---------------------------------------------------------------------------
# Wiener index
# ---------------------------------------------------------------------------

def test_wiener_examples():
    assert wiener(Tree(2, [(0, 1)])) == 1
    assert wiener(path_tree(4)) == 10
    assert wiener(star_tree(3)) == 9


def test_maximal_total_subtrees_minimize_wiener():
    # the same degree-3 trees maximize total subtree count and minimize
    # the Wiener index, checked exhaustively
    for n in range(4, 11):
        trees = list(enumerate_bounded_trees(n, 3))
        totals = [count_subtrees_total(t) for t in trees]
        wieners = [wiener(t) for t in trees]
        argmax = {i for i, v in enumerate(totals) if v == max(totals)}
        argmin = {i for i, v in enumerate(wieners) if v == min(wieners)}
        assert argmax == argmin


# ---------------------------------------------------------------------------
# Bounded-degree enumeration
# ---------------------------------------------------------------------------

def nx_bounded_canon_forms(n, d):
    forms = set()
    for g in nx.nonisomorphic_trees(n):
        if max(deg for _, deg in g.degree()) <= d:
            relabeled = nx.convert_node_labels_to_integers(g)
            forms.add(tree_canonical_form(Tree(n, list(relabeled.edges()))))
    return forms


def test_enumerate_bounded_trees_small_counts():
    assert len(list(enumerate_bounded_trees(4, 3))) == 2
    assert len(list(enumerate_bounded_trees(5, 3))) == 2
    assert len(list(enumerate_bounded_trees(7, 3))) == 6


def test_enumerate_bounded_trees_matches_networkx():
    for n in range(2, 11):
        for d in (3, 4):
            ours = [tree_canonical_form(t) for t in enumerate_bounded_trees(n, d)]
            assert len(ours) == len(set(ours))  # no repeats
            assert set(ours) == nx_bounded_canon_forms(n, d)


def test_enumerate_bounded_trees_respects_bound_and_guard():
    for t in enumerate_bounded_trees(8, 3):
        assert t.max_degree <= 3
    with pytest.raises(ScaleLimitError):
        list(enumerate_bounded_trees(13, 3))


def test_greedy_tree_attains_subtree_maxima():
    for n in range(2, 9):
        trees = list(enumerate_bounded_trees(n, 3))
        greedy = greedy_tree(3, n)
        for k in range(1, n + 1):
            best = max(count_subtrees(t, k) for t in trees)
            assert count_subtrees(greedy, k) == best


# ---------------------------------------------------------------------------
# Cycle/subtree correspondence
# ---------------------------------------------------------------------------

def test_cycle_subtree_counts_examples():
    assert cycle_subtree_counts(fan(5), 3) == (3, 3)
    assert cycle_subtree_counts(fan(6), 5) == (2, 2)
    assert cycle_subtree_counts(triple_fan(6), 5) == (3, 3)


def test_cycle_subtree_counts_agree_everywhere_small():
    for n in range(3, 9):
        for m in enumerate_mops(n):
            for k in range(3, n + 1):
                pair = cycle_subtree_counts(m, k)
                assert pair.cycles == pair.subtrees


# ---------------------------------------------------------------------------
# Formats
# ---------------------------------------------------------------------------

def test_tree_text_round_trip():
    tree = greedy_tree(3, 7)
    again = parse_tree_text(format_tree_text(tree))
    assert tree_canonical_form(again) == tree_canonical_form(tree)
    assert again.edges() == tree.edges()
    with pytest.raises(ValueError):
        parse_tree_text("")


def test_tree_dot():
    dot = tree_to_dot(star_tree(3))
    assert "0 -- 1;" in dot and dot.startswith("graph T {")
