"""Increasing labelings and the permutation-to-shape fiber law.

A labeling of an n-vertex tree with 1..n is increasing when every vertex
carries a smaller label than all of its descendants.  The count per tree is
n! divided by the product of the hook lengths, always an exact integer.
Summed over all shapes of one size these counts partition the n!
permutations: bucketing permutations by the shape of the binary search tree
they build recovers exactly the labeling count of each shape.
"""

from __future__ import annotations

from collections import Counter
from itertools import permutations
from math import factorial, prod
from typing import Iterator, Mapping, Sequence

from .identities import DEFAULT_BRUTE_CAP
from .trees import Node, Tree, encode, iter_trees, subtree_sizes

DEFAULT_LABELING_CAP = 10
DEFAULT_FIBER_CAP = 8  # 8! = 40320 permutations


def increasing_labelings_count(t: Tree) -> int:
    """Number of increasing labelings: n! over the product of hook lengths."""
    if t is None:
        raise ValueError("the empty tree has no labelings")
    hooks = subtree_sizes(t)
    count, remainder = divmod(factorial(len(hooks)), prod(hooks))
    if remainder:
        raise ArithmeticError("hook product does not divide n!")
    return count


def _parent_child_pairs(t: Node) -> tuple[list[tuple[int, int]], int]:
    # Vertices are numbered in preorder; returns the (parent, child) index
    # pairs and the vertex count.
    pairs: list[tuple[int, int]] = []
    stack: list[tuple[Tree, int]] = [(t, -1)]
    counter = 0
    while stack:
        node, parent = stack.pop()
        if node is None:
            continue
        index = counter
        counter += 1
        if parent >= 0:
            pairs.append((parent, index))
        stack.append((node.right, index))
        stack.append((node.left, index))
    return pairs, counter


def increasing_labelings_brute(t: Tree, *, cap: int = DEFAULT_LABELING_CAP) -> int:
    """Count increasing labelings by checking all n! label assignments.

    A labeling is increasing exactly when every parent's label is smaller
    than both children's, so each assignment is checked pairwise.  Oracle
    for :func:`increasing_labelings_count`; refuses trees larger than cap.
    """
    if t is None:
        raise ValueError("the empty tree has no labelings")
    pairs, n = _parent_child_pairs(t)
    if n > cap:
        raise ValueError(f"tree size {n} exceeds the labeling cap {cap}")
    count = 0
    for labels in permutations(range(n)):
        for parent, child in pairs:
            if labels[parent] > labels[child]:
                break
        else:
            count += 1
    return count


def bst_shape(values: Sequence[int]) -> Tree:
    """Shape of the binary search tree built by inserting values in order.

    The first value becomes the root; strictly smaller values descend left,
    all others right.  Only the relative order of the values matters.
    """
    if not values:
        return None
    pivot = values[0]
    rest = values[1:]
    smaller = [v for v in rest if v < pivot]
    other = [v for v in rest if v >= pivot]
    return Node(bst_shape(smaller), bst_shape(other))


def shape_fiber_histogram(n: int, *, cap: int = DEFAULT_FIBER_CAP) -> dict[str, int]:
    """Bucket all n! permutations of 1..n by the code of their search-tree shape.

    The bucket of a shape has exactly increasing_labelings_count(shape)
    members, and the buckets sum to n!.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if n > cap:
        raise ValueError(f"n={n} exceeds the fiber cap {cap} ({factorial(cap)} permutations)")
    histogram: Counter[str] = Counter()
    for perm in permutations(range(1, n + 1)):
        histogram[encode(bst_shape(perm))] += 1
    return dict(histogram)


def verify_eq2(n: int, *, cap: int = DEFAULT_BRUTE_CAP) -> bool:
    """Exact check that labeling counts over all n-vertex shapes sum to n!."""
    if n < 1:
        raise ValueError("n must be positive")
    if n > cap:
        raise ValueError(f"n={n} exceeds the brute-force cap {cap}")
    total = sum(increasing_labelings_count(t) for t in iter_trees(n))
    return total == factorial(n)


def histogram_lines(histogram: Mapping[str, int]) -> Iterator[str]:
    """Serialize a fiber histogram as 'code<TAB>count', sorted by code."""
    for code in sorted(histogram):
        yield f"{code}\t{histogram[code]}"


def parse_permutation(text: str) -> tuple[int, ...]:
    """Parse a comma-separated permutation of 1..n, e.g. '2,1,3'."""
    if not text.strip():
        return ()
    try:
        values = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise ValueError(f"permutation must be comma-separated integers, got {text!r}") from None
    if sorted(values) != list(range(1, len(values) + 1)):
        raise ValueError(f"values must be a rearrangement of 1..{len(values)}, got {text!r}")
    return values
