"""Dual-side products on tree coefficients and the free pre-Lie algebra.

The graded dual of the forest bialgebra has primitive part spanned by
functionals D_t, one per tree.  Two products act on these:

* ``bullet`` — the convolution-induced product, computed by enumerating
  every candidate tree w of the right size and every vertex subset of w
  inducing the second factor with complement the first.  Uniformly
  correct for any parameter values, but enumeration-bounded: it raises
  :class:`~treehopf.trees.BudgetError` beyond its declared degree budget
  instead of silently truncating.
* ``bullet_prime`` — the grafting product: attach the second factor
  below each vertex of the first by a new edge, one colour from the
  allowed set at a time.  Constructive, no enumeration.

``aut_rescale`` (D_t ↦ |Aut t|·D_t) converts one product into the other,
and ``phi`` embeds the dual primitives into the free pre-Lie algebra on
n generators, modelled on vertex-labelled trees.
"""

from __future__ import annotations

from typing import Iterable

from .algebra import Coeff, Combination, ONE, evaluate_exponents, _format_terms
from .hopf import HopfContext, _split_table
from .trees import (
    BudgetError,
    ColouredTree,
    ColourMismatchError,
    Forest,
    Scanner,
    aut_order,
    enumerate_trees,
)

DEFAULT_BULLET_BUDGET = 6


class DualElement(Combination):
    """A combination of dual tree functionals Σ c_t D_t (trees, not forests)."""

    def _check_key(self, key, n):
        if not isinstance(key, ColouredTree):
            raise TypeError(f"DualElement keys must be trees, got {key!r}")
        if key.max_colour > n:
            raise ColourMismatchError(f"tree {key} uses colour {key.max_colour} > n = {n}")

    @staticmethod
    def _term_sort_key(key: ColouredTree):
        return key.sort_key()

    @classmethod
    def zero(cls, n: int) -> "DualElement":
        return cls(n)

    @classmethod
    def basis(cls, tree: ColouredTree, n: int) -> "DualElement":
        return cls(n, {tree: ONE})

    def __str__(self):
        return _format_terms(self.terms(), lambda t: f"D{t}")


# ---------------------------------------------------------------------------
# the enumeration product
# ---------------------------------------------------------------------------

# per (n, m): map (induced part, induced complement) -> ((tree, exponents), ...)
# exponents are parameter-independent, so one table serves every QSpec
_DUAL_TABLE: dict[tuple[int, int], dict] = {}


def _dual_split_table(n: int, m: int):
    table = _DUAL_TABLE.get((n, m))
    if table is None:
        table = {}
        for w in enumerate_trees(n, m):
            for _, part, comp, exps in _split_table(Forest.single(w)):
                key = (part, comp)
                table.setdefault(key, []).append((w, tuple(sorted(exps.items()))))
        table = {k: tuple(v) for k, v in table.items()}
        _DUAL_TABLE[(n, m)] = table
    return table


def bullet(
    a: DualElement,
    b: DualElement,
    ctx: HopfContext,
    budget: int = DEFAULT_BULLET_BUDGET,
) -> DualElement:
    """The dual product: D_t • D_s sums q(s,w)·D_w over trees w carrying
    a vertex subset that induces s with complement t.

    Extended bilinearly.  Every basis pair costs an exhaustive sweep of
    the trees of size |t|+|s|; pairs beyond ``budget`` total vertices
    raise :class:`BudgetError` rather than degrade silently.
    """
    n = _common_n(a, b, ctx)
    out: dict[ColouredTree, Coeff] = {}
    for t, ct in a.data.items():
        for s, cs in b.data.items():
            m = t.size + s.size
            if m > budget:
                raise BudgetError(
                    f"bullet on degree {t.size}+{s.size} exceeds its budget of "
                    f"{budget} total vertices (raise the budget to proceed)"
                )
            scale = ct * cs
            table = _dual_split_table(n, m)
            for w, exps in table.get((Forest.single(s), Forest.single(t)), ()):
                coeff = evaluate_exponents(ctx.qspec, dict(exps)) * scale
                if coeff.is_zero():
                    continue
                prev = out.get(w)
                total = coeff if prev is None else prev + coeff
                if total.is_zero():
                    out.pop(w, None)
                else:
                    out[w] = total
    return DualElement(n, out)


def lie_bracket(
    a: DualElement,
    b: DualElement,
    ctx: HopfContext,
    budget: int = DEFAULT_BULLET_BUDGET,
) -> DualElement:
    """[D_s, D_t] with the convention D_t•D_s − D_s•D_t: the bracket of
    (a, b) is bullet(b, a) − bullet(a, b).

    For the commutator in the opposite orientation use
    :func:`lie_bracket_opposite`.
    """
    return bullet(b, a, ctx, budget) - bullet(a, b, ctx, budget)


def lie_bracket_opposite(
    a: DualElement,
    b: DualElement,
    ctx: HopfContext,
    budget: int = DEFAULT_BULLET_BUDGET,
) -> DualElement:
    """The opposite orientation, bullet(a, b) − bullet(b, a)."""
    return bullet(a, b, ctx, budget) - bullet(b, a, ctx, budget)


# ---------------------------------------------------------------------------
# the grafting product
# ---------------------------------------------------------------------------


def _graft_everywhere(t: ColouredTree, s: ColouredTree, colour: int):
    """Attach s below each vertex of t by a colour-``colour`` edge.

    Yields one tree per vertex of t (canonically equal results repeat,
    preserving multiplicities in the grafting sum).
    """
    yield ColouredTree(t.children + ((colour, s),))
    for pos, (c, child) in enumerate(t.children):
        for g in _graft_everywhere(child, s, colour):
            yield ColouredTree(t.children[:pos] + ((c, g),) + t.children[pos + 1 :])


def bullet_prime(
    a: DualElement, b: DualElement, p: Iterable[int]
) -> DualElement:
    """Grafting product: D_t •′ D_s = Σ_{v∈t} Σ_{i∈p} D_{t with s attached
    below v by a colour-i edge}.  No enumeration, hence no budget."""
    if a.n != b.n:
        raise ValueError("operands must share n")
    n = a.n
    colours = sorted(set(p))
    if any(not 1 <= i <= n for i in colours):
        raise ColourMismatchError(f"colour set {colours} not within 1..{n}")
    out: dict[ColouredTree, Coeff] = {}
    for t, ct in a.data.items():
        for s, cs in b.data.items():
            scale = ct * cs
            for i in colours:
                for w in _graft_everywhere(t, s, i):
                    prev = out.get(w)
                    total = scale if prev is None else prev + scale
                    if total.is_zero():
                        out.pop(w, None)
                    else:
                        out[w] = total
    return DualElement(n, out)


def aut_rescale(a: DualElement) -> DualElement:
    """D_t ↦ |Aut(t)|·D_t, the invertible change of basis that turns the
    grafting product into the enumeration product:
    aut_rescale(x •′ y) = bullet(aut_rescale(x), aut_rescale(y)) when the
    parameters are the indicator of the grafting colour set on row 1 and
    zero on row 2."""
    return DualElement(a.n, ((t, c * aut_order(t)) for t, c in a.data.items()))


def _common_n(a: DualElement, b: DualElement, ctx: HopfContext) -> int:
    if a.n != b.n or a.n != ctx.n:
        raise ColourMismatchError(
            f"mismatched colour counts: operands n={a.n},{b.n}, context n={ctx.n}"
        )
    return a.n


# ---------------------------------------------------------------------------
# labelled trees and the free pre-Lie algebra
# ---------------------------------------------------------------------------


class LabelledTree:
    """Canonical rooted tree with vertex labels and plain (uncoloured) edges.

    Children are sorted by encoding, so structural equality is equality
    of label-preserving isomorphism classes.
    """

    __slots__ = ("label", "children", "key", "size", "max_label", "_hash")

    def __init__(self, label: int, children: Iterable["LabelledTree"] = ()):
        if not isinstance(label, int) or label < 1:
            raise ValueError(f"vertex label must be an integer >= 1, got {label!r}")
        kids = tuple(sorted(children, key=lambda t: t.key))
        for child in kids:
            if not isinstance(child, LabelledTree):
                raise TypeError("children must be LabelledTree instances")
        self.label = label
        self.children = kids
        self.key = (label, tuple(t.key for t in kids))
        self.size = 1 + sum(t.size for t in kids)
        self.max_label = max([label] + [t.max_label for t in kids])
        self._hash = hash(self.key)

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, LabelledTree):
            return NotImplemented
        return self.key == other.key

    def __hash__(self):
        return self._hash

    def sort_key(self):
        return (self.size, self.key)

    def __str__(self):
        return f"({self.label})[" + ",".join(str(t) for t in self.children) + "]"

    def __repr__(self):
        return f"LabelledTree({self})"

    def vertex_paths(self) -> tuple[tuple[int, ...], ...]:
        """Depth-first preorder addresses; each step is a child position."""
        out = [()]
        for pos, child in enumerate(self.children):
            out.extend((pos,) + p for p in child.vertex_paths())
        return tuple(out)


def parse_labelled_tree(text: str) -> LabelledTree:
    """Parse the ``(label)[child,child,…]`` grammar, e.g. ``(1)[(2)[]]``."""
    sc = Scanner(text)
    tree = _scan_labelled(sc)
    sc.check_done()
    return tree


def _scan_labelled(sc: Scanner) -> LabelledTree:
    sc.skip_ws()
    sc.expect("(")
    sc.skip_ws()
    label = sc.integer()
    sc.skip_ws()
    sc.expect(")")
    sc.skip_ws()
    sc.expect("[")
    kids = []
    sc.skip_ws()
    if not sc.try_take("]"):
        while True:
            kids.append(_scan_labelled(sc))
            sc.skip_ws()
            if sc.try_take("]"):
                break
            sc.expect(",")
    return LabelledTree(label, kids)


class PreLieElement(Combination):
    """A combination of labelled trees (the free pre-Lie algebra on n
    generators, one generator per label)."""

    def _check_key(self, key, n):
        if not isinstance(key, LabelledTree):
            raise TypeError(f"PreLieElement keys must be labelled trees, got {key!r}")
        if key.max_label > n:
            raise ValueError(f"tree {key} uses label {key.max_label} > n = {n}")

    @staticmethod
    def _term_sort_key(key: LabelledTree):
        return key.sort_key()

    @classmethod
    def zero(cls, n: int) -> "PreLieElement":
        return cls(n)

    @classmethod
    def basis(cls, tree: LabelledTree, n: int) -> "PreLieElement":
        return cls(n, {tree: ONE})

    def __str__(self):
        return _format_terms(self.terms(), str)


def free_graft(t: LabelledTree, v: tuple[int, ...], s: LabelledTree) -> LabelledTree:
    """Attach the root of s below the vertex of t addressed by ``v``
    (a child-position path, as produced by ``vertex_paths``)."""
    if not v:
        return LabelledTree(t.label, t.children + (s,))
    pos = v[0]
    if not 0 <= pos < len(t.children):
        raise ValueError(f"vertex path {v} does not address a vertex")
    kids = list(t.children)
    kids[pos] = free_graft(kids[pos], v[1:], s)
    return LabelledTree(t.label, kids)


def _free_graft_everywhere(t: LabelledTree, s: LabelledTree):
    yield LabelledTree(t.label, t.children + (s,))
    for pos, child in enumerate(t.children):
        for g in _free_graft_everywhere(child, s):
            kids = list(t.children)
            kids[pos] = g
            yield LabelledTree(t.label, kids)


def free_bullet(a: PreLieElement, b: PreLieElement) -> PreLieElement:
    """Grafting sum t•s = Σ_{v∈t} (s attached below v), extended bilinearly."""
    if a.n != b.n:
        raise ValueError("operands must share n")
    out: dict[LabelledTree, Coeff] = {}
    for t, ct in a.data.items():
        for s, cs in b.data.items():
            scale = ct * cs
            for w in _free_graft_everywhere(t, s):
                prev = out.get(w)
                total = scale if prev is None else prev + scale
                if total.is_zero():
                    out.pop(w, None)
                else:
                    out[w] = total
    return PreLieElement(a.n, out)


# ---------------------------------------------------------------------------
# moving colours up to labels
# ---------------------------------------------------------------------------


def up_map(i: int, t: ColouredTree) -> LabelledTree:
    """Turn edge colours into vertex labels: every vertex takes the colour
    of the edge below it, and the root takes ``i``.

    A bijection from (root label, coloured tree) to labelled trees; the
    inverse is :func:`down_map`.  Compatibility with grafting exchanges
    the two indices relative to the raw definition: attaching s below v
    with a colour-i edge and then applying ↑_j equals grafting ↑_i(s)
    below v in ↑_j(t).
    """
    if i < 1:
        raise ValueError("root label must be >= 1")
    return LabelledTree(i, (up_map(c, child) for c, child in t.children))


def down_map(t: LabelledTree) -> tuple[int, ColouredTree]:
    """Inverse of :func:`up_map`: returns (root label, coloured tree)."""

    def strip(node: LabelledTree) -> ColouredTree:
        return ColouredTree((child.label, strip(child)) for child in node.children)

    return t.label, strip(t)


def phi(a: DualElement) -> PreLieElement:
    """The embedding D_t ↦ Σ_{j=1..n} ↑_j(t) into the free pre-Lie algebra.

    Injective on the span of the D_t (the images have pairwise disjoint
    supports), and a homomorphism from the grafting product with the
    full colour set to the free grafting product.
    """
    n = a.n
    out: dict[LabelledTree, Coeff] = {}
    for t, c in a.data.items():
        for j in range(1, n + 1):
            key = up_map(j, t)
            prev = out.get(key)
            total = c if prev is None else prev + c
            if total.is_zero():
                out.pop(key, None)
            else:
                out[key] = total
    return PreLieElement(n, out)


def enumerate_labelled_trees(n: int, m: int) -> tuple[LabelledTree, ...]:
    """All canonical labelled trees with m vertices and labels in 1..n.

    Equivalently {↑_j(t)}: one for each root label and n-coloured tree.
    """
    out = []
    for j in range(1, n + 1):
        for t in enumerate_trees(n, m):
            out.append(up_map(j, t))
    return tuple(sorted(out, key=lambda t: t.sort_key()))
