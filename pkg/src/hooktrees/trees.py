"""Binary trees: enumeration, hook lengths, and a canonical bit-string codec.

Trees with n vertices are ordered by the size k of the root's left subtree
(k = 0, 1, ..., n-1 ascending), then recursively by the left subtree's
position, then the right's.  This mirrors the root split used by the
convolution recurrence, so enumeration, ranking and recurrence evaluation
all share one decomposition.  ``rank`` and ``unrank`` address positions in
this order using Catalan prefix counts only; the enumeration is never
materialized.

The codec emits one '1' per vertex in preorder and one '0' per absent
child, recursing left then right; the final '0' is forced and dropped,
giving exactly 2n bits with the ballot property (every prefix has at least
as many ones as zeros).  The single vertex encodes as "10", the empty tree
as "".

Traversals use explicit stacks throughout: tree shapes can be chains, and
call-stack recursion would cap the usable size.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Iterator, Optional


@dataclass(frozen=True, slots=True)
class Node:
    """A vertex with optional left and right children.

    The empty tree is represented by ``None``, so ``Node()`` is the single
    isolated vertex.  Instances are immutable after construction and safe
    to share between trees and between concurrent workers.
    """

    left: Optional["Node"] = None
    right: Optional["Node"] = None

    def __repr__(self) -> str:
        return f"<tree {encode(self)}>"


Tree = Optional[Node]


@lru_cache(maxsize=None)
def catalan(n: int) -> int:
    """Number of binary trees with n vertices: C(2n, n) / (n + 1), exactly."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return comb(2 * n, n) // (n + 1)


def size(t: Tree) -> int:
    """Vertex count; the empty tree has size 0."""
    total = 0
    stack = [t]
    while stack:
        node = stack.pop()
        if node is not None:
            total += 1
            stack.append(node.left)
            stack.append(node.right)
    return total


def _preorder(t: Tree) -> list[Node]:
    # Root first, then the right branch, then the left.  Shared subtrees
    # appear once per occurrence.
    order: list[Node] = []
    stack = [t]
    while stack:
        node = stack.pop()
        if node is not None:
            order.append(node)
            stack.append(node.left)
            stack.append(node.right)
    return order


def subtree_sizes(t: Tree) -> list[int]:
    """Size of the subtree rooted at each vertex, one entry per vertex.

    These are exactly the hook lengths, in no particular order.
    """
    order = _preorder(t)
    sizes: dict[int, int] = {}
    out: list[int] = []
    for node in reversed(order):
        s = 1
        if node.left is not None:
            s += sizes[id(node.left)]
        if node.right is not None:
            s += sizes[id(node.right)]
        sizes[id(node)] = s
        out.append(s)
    return out


def hook_lengths(t: Tree) -> tuple[int, ...]:
    """Sorted multiset of hook lengths of a nonempty tree.

    The hook length of a vertex is the number of its descendants, itself
    included, i.e. the size of the subtree rooted there.  The root of an
    n-vertex tree always contributes the entry n.
    """
    if t is None:
        raise ValueError("the empty tree has no hook lengths")
    return tuple(sorted(subtree_sizes(t)))


@lru_cache(maxsize=None)
def _tree_table(n: int) -> tuple[Tree, ...]:
    # Shared pool of every tree with n vertices, in canonical order.
    # Subtrees are drawn from the smaller pools; sharing is safe because
    # nodes are immutable.
    if n == 0:
        return (None,)
    return tuple(
        Node(left, right)
        for k in range(n)
        for left in _tree_table(k)
        for right in _tree_table(n - 1 - k)
    )


def iter_trees(n: int) -> Iterator[Tree]:
    """Yield every binary tree with n vertices exactly once, in canonical order.

    The top level is streamed; pools for sizes below n are built once and
    cached for reuse, so repeated enumeration costs one new root node per
    yielded tree.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        yield None
        return
    for k in range(n):
        for left in _tree_table(k):
            for right in _tree_table(n - 1 - k):
                yield Node(left, right)


def encode(t: Tree) -> str:
    """Canonical 2n-bit code of a tree; inverse of :func:`decode`."""
    bits: list[str] = []
    stack: list[Tree] = [t]
    while stack:
        node = stack.pop()
        if node is None:
            bits.append("0")
        else:
            bits.append("1")
            stack.append(node.right)
            stack.append(node.left)
    bits.pop()  # the last bit of the full preorder word is always 0
    return "".join(bits)


_UNSET = object()


def decode(code: str) -> Tree:
    """Rebuild the tree from its canonical code.

    Raises ValueError when the input is not a valid code: characters other
    than '0'/'1', or a violation of the ballot property (some prefix with
    more zeros than ones, or unbalanced totals).
    """
    if set(code) - {"0", "1"}:
        raise ValueError("tree code must consist of '0' and '1' only")
    frames: list[object] = []  # per open vertex: _UNSET, or its finished left child
    root: object = _UNSET
    for pos, bit in enumerate(code + "0"):  # restore the dropped final 0
        if root is not _UNSET:
            raise ValueError(
                f"invalid tree code: complete at position {pos}, ballot property violated"
            )
        if bit == "1":
            frames.append(_UNSET)
            continue
        subtree: Tree = None
        while True:
            if not frames:
                root = subtree
                break
            if frames[-1] is _UNSET:
                frames[-1] = subtree
                break
            subtree = Node(frames.pop(), subtree)
    if root is _UNSET:
        raise ValueError("invalid tree code: ran out of bits with unclosed vertices")
    return root


def _size_map(t: Tree) -> dict[int, int]:
    # Subtree size keyed by id(node); shared nodes agree, so overwrites
    # are harmless.
    order = _preorder(t)
    sizes: dict[int, int] = {}
    for node in reversed(order):
        s = 1
        if node.left is not None:
            s += sizes[id(node.left)]
        if node.right is not None:
            s += sizes[id(node.right)]
        sizes[id(node)] = s
    return sizes


def _left_block_offset(n: int, k: int) -> int:
    # Trees of size n whose left subtree is smaller than k all come first.
    return sum(catalan(j) * catalan(n - 1 - j) for j in range(k))


def rank(t: Tree) -> int:
    """Position of the tree in the canonical order of its size class."""
    sizes = _size_map(t)
    total = 0
    stack: list[tuple[Tree, int]] = [(t, 1)]
    while stack:
        node, weight = stack.pop()
        if node is None:
            continue
        n = sizes[id(node)]
        k = sizes[id(node.left)] if node.left is not None else 0
        total += weight * _left_block_offset(n, k)
        stack.append((node.right, weight))
        stack.append((node.left, weight * catalan(n - 1 - k)))
    return total


def unrank(n: int, i: int) -> Tree:
    """Tree at position i in the canonical order on n-vertex trees.

    Inverse of :func:`rank`.  Works from Catalan prefix counts alone.
    """
    total = catalan(n)
    if not 0 <= i < total:
        raise ValueError(f"rank {i} out of range: there are {total} trees with {n} vertices")
    bits: list[str] = []
    tasks: list[tuple[int, int]] = [(n, i)]
    while tasks:
        m, j = tasks.pop()
        if m == 0:
            bits.append("0")
            continue
        bits.append("1")
        k = 0
        while True:
            block = catalan(k) * catalan(m - 1 - k)
            if j < block:
                break
            j -= block
            k += 1
        left_index, right_index = divmod(j, catalan(m - 1 - k))
        tasks.append((m - 1 - k, right_index))
        tasks.append((k, left_index))
    bits.pop()
    return decode("".join(bits))
