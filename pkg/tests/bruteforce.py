"""Independent brute-force oracles used to validate the library.

Everything in this module is deliberately written against raw
``(parents, colours)`` arrays and nested tuples, without importing the
package under test.  The canonical encodings here are throwaway and only
serve to deduplicate isomorphism classes; they share no code with the
library's own canonical forms.
"""

from __future__ import annotations

from itertools import permutations, product


# ---------------------------------------------------------------------------
# raw rooted trees: vertex 0 is the root, parents[i] < i for i >= 1,
# colours[i] is the colour of the edge from vertex i to its parent.
# ---------------------------------------------------------------------------


def raw_trees(n_colours: int, m: int):
    """Yield every (parents, colours) pair on m vertices.

    Each isomorphism class shows up at least once (usually many times):
    any rooted tree can be labelled so that parents precede children.
    """
    if m == 1:
        yield (), ()
        return
    parent_choices = [range(i) for i in range(1, m)]
    colour_choices = [range(1, n_colours + 1)] * (m - 1)
    for parents in product(*parent_choices):
        for colours in product(*colour_choices):
            yield parents, colours


def _children(parents, m):
    kids = [[] for _ in range(m)]
    for i, p in enumerate(parents, start=1):
        kids[p].append(i)
    return kids


def raw_encoding(parents, colours):
    """Order-insensitive nested-tuple encoding of a raw tree (root = 0)."""
    m = len(parents) + 1
    kids = _children(parents, m)

    def enc(v):
        return tuple(sorted((colours[c - 1], enc(c)) for c in kids[v]))

    return enc(0)


def count_trees(n_colours: int, m: int) -> int:
    """Number of isomorphism classes of n-coloured rooted trees on m vertices."""
    return len({raw_encoding(p, c) for p, c in raw_trees(n_colours, m)})


def isomorphic(tree_a, tree_b) -> bool:
    """Explicit bijection search between two raw trees (root to root).

    Exponential; fine for the handful of vertices the tests use.
    """
    pa, ca = tree_a
    pb, cb = tree_b
    m = len(pa) + 1
    if len(pb) + 1 != m:
        return False
    for perm in permutations(range(1, m)):
        pi = (0,) + perm  # pi[v] = image of v, root fixed
        ok = True
        for i in range(1, m):
            parent_img = pi[pa[i - 1]]
            if pb[pi[i] - 1] != parent_img or cb[pi[i] - 1] != ca[i - 1]:
                ok = False
                break
        if ok:
            return True
    return False


def automorphism_count(parents, colours) -> int:
    """Count root-fixing colour-preserving self-bijections of a raw tree."""
    m = len(parents) + 1
    total = 0
    for perm in permutations(range(1, m)):
        pi = (0,) + perm
        if all(
            parents[pi[i] - 1] == pi[parents[i - 1]]
            and colours[pi[i] - 1] == colours[i - 1]
            for i in range(1, m)
        ):
            total += 1
    return total


# ---------------------------------------------------------------------------
# ordered (planar, one colour) rooted trees via nested tuples
# ---------------------------------------------------------------------------


def ordered_trees(m: int):
    """All ordered rooted trees on m vertices as nested tuples.

    An ordered tree is a tuple of its child subtrees, in order.  Each
    tree is produced exactly once, so the count is Catalan(m - 1).
    """
    if m == 1:
        yield ()
        return
    # first child takes k vertices, the rest form the remaining order
    for k in range(1, m):
        for first in ordered_trees(k):
            for rest in ordered_trees(m - k):
                yield (first,) + rest


def count_ordered_trees(m: int) -> int:
    return len(set(ordered_trees(m)))
