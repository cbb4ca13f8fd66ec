from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from oracles import isomorphic, trees
from treenorm import _kernels
from treenorm.canon import canonical_code, centroids, rooted_code, tree_from_code
from treenorm.constructions import path, star
from treenorm.enumeration import labeled_trees_prufer
from treenorm.graph import Graph, GraphError, NotATreeError


def _balanced_blocks(code):
    depth, blocks = 0, 0
    for ch in code:
        depth += 1 if ch == "(" else -1
        if depth == 0:
            blocks += 1
    return blocks


def test_path4_relabelled():
    a = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    b = Graph.from_edges(4, [(2, 0), (0, 3), (3, 1)])
    assert canonical_code(a) == canonical_code(b)


def test_path_vs_star():
    assert canonical_code(path(4)) != canonical_code(star(4))


def test_labelled_trees_on_four_vertices():
    codes = {canonical_code(t) for t in labeled_trees_prufer(4)}
    assert len(codes) == 2


def test_small_codes():
    assert canonical_code(Graph.from_edges(1, [])) == "()"
    assert canonical_code(path(2)) == "()()"
    assert canonical_code(path(3)) == "(()())"


def test_rejects_non_tree():
    with pytest.raises(NotATreeError):
        canonical_code(Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)]))


@pytest.mark.parametrize("bad", ["", "(", "())(", "(()", "()()()", "(x)"])
def test_tree_from_code_rejects(bad):
    with pytest.raises(GraphError):
        tree_from_code(bad)


@given(trees(max_n=12), st.data())
def test_relabel_invariance(t, data):
    perm = data.draw(st.permutations(range(t.n)))
    assert canonical_code(t.relabel(perm)) == canonical_code(t)


@given(trees(max_n=14))
def test_code_shape(t):
    code = canonical_code(t)
    assert len(code) == 2 * t.n
    assert _balanced_blocks(code) == (1 if len(centroids(t)) == 1 else 2)


@given(trees(max_n=14))
def test_decode_round_trip(t):
    code = canonical_code(t)
    back = tree_from_code(code)
    assert back.n == t.n and canonical_code(back) == code


@pytest.mark.parametrize("n", range(1, 8))
def test_codes_separate_classes(n):
    reps = {}
    for t in labeled_trees_prufer(n):
        reps.setdefault(canonical_code(t), t)
    for a, b in combinations(reps.values(), 2):
        assert not isomorphic(a, b)


@pytest.mark.parametrize("n, classes", list(zip(range(1, 10), [1, 1, 1, 2, 3, 6, 11, 23, 47])))
def test_prufer_class_counts(n, classes):
    assert len(_kernels.prufer_class_codes(n)) == classes


@given(trees(min_n=2, max_n=10), st.data())
def test_centroid_definition(t, data):
    # a centroid minimises the largest component left after deleting it
    def worst(v):
        sizes = []
        for start in t.adjacency[v]:
            seen, stack = {v, start}, [start]
            while stack:
                for u in t.adjacency[stack.pop()]:
                    if u not in seen:
                        seen.add(u)
                        stack.append(u)
            sizes.append(len(seen) - 1)
        return max(sizes)
    best = min(worst(v) for v in range(t.n))
    assert sorted(centroids(t)) == [v for v in range(t.n) if worst(v) == best]


def test_marked_rooted_code_distinguishes_positions():
    p = path(5)
    assert rooted_code(p, 0, marked=4) != rooted_code(p, 0, marked=3)
    assert rooted_code(p, 0, marked=4) == rooted_code(p, 4, marked=0)


@pytest.mark.skipif(_kernels.BACKEND != "cython", reason="compiled kernels not built")
@given(trees(max_n=20))
def test_compiled_code_matches(t):
    from treenorm import _ckernels

    indptr, indices = t.csr
    assert _ckernels.tree_code(t.n, indptr, indices) == canonical_code(t)
