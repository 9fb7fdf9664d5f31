"""The deformed coproduct family on forests, its antipodes, and checks.

The comultiplication sends a forest t to the sum over all vertex subsets
s of q(s,t)·(induced forest of s) ⊗ (induced forest of the complement),
where q(s,t) is a monomial in the 2n parameters determined by colour
counts along root paths (see ``subset_exponents``).  An equivalent
recursive description goes through the root-adjoining constructor and
the weighted product maps sigma_1/sigma_2; both are implemented and the
test-suite pins them against each other.

Everything here is a pure function of immutable values; the module-level
dictionaries are memo tables keyed by canonical forests (and parameter
specifications), filled deterministically.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import product as _iproduct
from typing import Callable, Iterable, Sequence

from .algebra import (
    Coeff,
    Element,
    ONE,
    QSpec,
    TensorElement,
    ZERO,
    evaluate_exponents,
    sigma,
)
from .trees import (
    ColouredTree,
    ColourMismatchError,
    EMPTY_FOREST,
    Forest,
    Subforest,
    add_root,
    decompose,
    enumerate_forests,
    enumerate_forests_up_to,
    indexed,
    induced_structure,
)


@dataclass(frozen=True)
class HopfContext:
    """A member of the coproduct family: colour count plus parameter values."""

    qspec: QSpec

    @property
    def n(self) -> int:
        return self.qspec.n

    @classmethod
    def symbolic(cls, n: int) -> "HopfContext":
        return cls(QSpec.symbolic(n))

    @classmethod
    def rational(cls, n: int, values: Sequence) -> "HopfContext":
        return cls(QSpec.rational(n, values))

    @classmethod
    def connes_kreimer(cls) -> "HopfContext":
        return cls(QSpec.connes_kreimer())

    @classmethod
    def indicator(cls, n: int, p: Iterable[int]) -> "HopfContext":
        return cls(QSpec.indicator(n, p))


# ---------------------------------------------------------------------------
# q-coefficients
# ---------------------------------------------------------------------------

# induced (parent, colour) maps per (forest, host-mask); the same host mask
# is revisited constantly by the partition antipode
_STRUCT_CACHE: dict[tuple[Forest, int], tuple[dict, dict]] = {}

# induced forest per (forest, mask)
_INDUCED_CACHE: dict[tuple[Forest, int], Forest] = {}

# per forest: tuple over all masks of (mask, part, complement, exponents)
_SPLIT_CACHE: dict[Forest, tuple] = {}


def _structure(forest: Forest, mask: int):
    out = _STRUCT_CACHE.get((forest, mask))
    if out is None:
        out = induced_structure(indexed(forest), mask)
        _STRUCT_CACHE[(forest, mask)] = out
    return out


def _induced(forest: Forest, mask: int) -> Forest:
    out = _INDUCED_CACHE.get((forest, mask))
    if out is None:
        out = Subforest(forest, mask).induced()
        _INDUCED_CACHE[(forest, mask)] = out
    return out


def subset_exponents(
    forest: Forest, mask: int, host_mask: int | None = None
) -> dict[tuple[int, int], int]:
    """Exponent of each parameter q_{ij} in q(s, host).

    For every selected vertex, walk its root path (inside the induced
    structure of ``host_mask`` when given) and count, per colour, the
    edges whose lower vertex falls outside the subset; complementary
    vertices contribute the same counts relative to the complement, on
    row 2.
    """
    idx = indexed(forest)
    if host_mask is None:
        host_mask = (1 << idx.nverts) - 1
    if mask & ~host_mask:
        raise ValueError("subset must lie inside the host")
    parent_of, colour_of = _structure(forest, host_mask)
    exps: dict[tuple[int, int], int] = {}
    for v in parent_of:
        if mask >> v & 1:
            row, inside = 1, mask
        else:
            row, inside = 2, host_mask & ~mask
        walk = v
        while parent_of[walk] is not None:
            lower = parent_of[walk]
            if not inside >> lower & 1:
                key = (row, colour_of[walk])
                exps[key] = exps.get(key, 0) + 1
            walk = lower
    return exps


def q_coeff(s: Subforest, ctx: HopfContext, within: Subforest | None = None) -> Coeff:
    """The parameter monomial q(s, host) attached to a vertex subset.

    ``within`` restricts the host to an induced subforest (used by the
    ordered-partition antipode); by default the host is the full forest.
    """
    if within is not None and within.host != s.host:
        raise ValueError("s and within must share the same underlying forest")
    host_mask = within.mask if within is not None else None
    exps = subset_exponents(s.host, s.mask, host_mask)
    return evaluate_exponents(ctx.qspec, exps)


def _split_table(forest: Forest):
    """All (mask, induced part, induced complement, exponents) splits."""
    table = _SPLIT_CACHE.get(forest)
    if table is None:
        nv = indexed(forest).nverts
        full = (1 << nv) - 1
        rows = []
        for mask in range(1 << nv):
            rows.append(
                (
                    mask,
                    _induced(forest, mask),
                    _induced(forest, full ^ mask),
                    subset_exponents(forest, mask),
                )
            )
        table = _SPLIT_CACHE[forest] = tuple(rows)
    return table


# ---------------------------------------------------------------------------
# coproducts
# ---------------------------------------------------------------------------

_DELTA_CACHE: dict[tuple[QSpec, Forest], TensorElement] = {}
_DELTA_IND_CACHE: dict[tuple[QSpec, ColouredTree], TensorElement] = {}


def _acc(store: dict, key, coeff: Coeff):
    prev = store.get(key)
    total = coeff if prev is None else prev + coeff
    if total.is_zero():
        store.pop(key, None)
    else:
        store[key] = total


def _delta_forest(forest: Forest, ctx: HopfContext) -> TensorElement:
    cached = _DELTA_CACHE.get((ctx.qspec, forest))
    if cached is None:
        out: dict[tuple[Forest, Forest], Coeff] = {}
        for _, part, comp, exps in _split_table(forest):
            c = evaluate_exponents(ctx.qspec, exps)
            if not c.is_zero():
                _acc(out, (part, comp), c)
        cached = _DELTA_CACHE[(ctx.qspec, forest)] = TensorElement(ctx.n, out)
    return cached


def coproduct(a: Element, ctx: HopfContext) -> TensorElement:
    """Closed-formula comultiplication: sum over all vertex subsets."""
    _check_n(a, ctx)
    out = TensorElement.zero(ctx.n)
    for forest, coeff in a.data.items():
        out = out + _delta_forest(forest, ctx).scale(coeff)
    return out


def coproduct_of_slots(
    slots: Sequence[Element],
    ctx: HopfContext,
    delta: "Callable[[Element], TensorElement] | None" = None,
) -> TensorElement:
    """Comultiplication of a root-adjoined element, from its slot contents.

    Computes Δ(λ(x_1..x_n)) as Σ σ_1(x')⊗λ(x'') + λ(x')⊗σ_2(x''),
    where x' ⊗ x'' ranges over the slotwise coproduct terms.  ``delta``
    overrides the coproduct applied to the slots (used by the verifier).
    """
    n = ctx.n
    if len(slots) != n:
        raise ValueError(f"expected {n} slot elements, got {len(slots)}")
    if delta is None:
        delta = lambda e: coproduct(e, ctx)
    return _combine_slot_deltas([delta(s) for s in slots], ctx)


def _combine_slot_deltas(
    slot_deltas: Sequence[TensorElement], ctx: HopfContext
) -> TensorElement:
    n = ctx.n
    out: dict[tuple[Forest, Forest], Coeff] = {}
    for combo in _iproduct(*(d.data.items() for d in slot_deltas)):
        coeff = ONE
        for _, c in combo:
            coeff = coeff * c
        if coeff.is_zero():
            continue
        lefts = tuple(k[0] for k, _ in combo)
        rights = tuple(k[1] for k, _ in combo)
        w1 = coeff
        prod = EMPTY_FOREST
        for j, f in enumerate(lefts, start=1):
            w1 = w1 * ctx.qspec.q(1, j) ** f.size
            prod = prod * f
        if not w1.is_zero():
            _acc(out, (prod, Forest.single(add_root(rights, n))), w1)
        w2 = coeff
        prod = EMPTY_FOREST
        for j, f in enumerate(rights, start=1):
            w2 = w2 * ctx.qspec.q(2, j) ** f.size
            prod = prod * f
        if not w2.is_zero():
            _acc(out, (Forest.single(add_root(lefts, n)), prod), w2)
    return TensorElement(n, out)


def _delta_tree_inductive(tree: ColouredTree, ctx: HopfContext) -> TensorElement:
    cached = _DELTA_IND_CACHE.get((ctx.qspec, tree))
    if cached is None:
        slots = [
            _delta_forest_inductive(f, ctx) for f in decompose(tree, ctx.n)
        ]
        cached = _combine_slot_deltas(slots, ctx)
        _DELTA_IND_CACHE[(ctx.qspec, tree)] = cached
    return cached


def _delta_forest_inductive(forest: Forest, ctx: HopfContext) -> TensorElement:
    out = TensorElement.unit(ctx.n)
    for tree in forest.trees():
        out = out * _delta_tree_inductive(tree, ctx)
    return out


def coproduct_inductive(a: Element, ctx: HopfContext) -> TensorElement:
    """Comultiplication by structural recursion through the root constructor."""
    _check_n(a, ctx)
    out = TensorElement.zero(ctx.n)
    for forest, coeff in a.data.items():
        out = out + _delta_forest_inductive(forest, ctx).scale(coeff)
    return out


def _check_n(a: Element, ctx: HopfContext):
    if a.n != ctx.n:
        raise ColourMismatchError(
            f"element over n={a.n} used with a context over n={ctx.n}"
        )


# ---------------------------------------------------------------------------
# antipodes
# ---------------------------------------------------------------------------

_ANTIPODE_CACHE: dict[tuple[QSpec, Forest], Element] = {}
_ANTIPODE_PART_CACHE: dict[tuple[QSpec, Forest], Element] = {}


def _reduced_delta(forest: Forest, delta_basis) -> list[tuple[Forest, Forest, Coeff]]:
    """Δ(f) minus f⊗1 and 1⊗f, as a plain term list (f must be nonempty)."""
    out = []
    for (l, r), c in delta_basis(forest).data.items():
        if l.is_empty() or r.is_empty():
            continue
        out.append((l, r, c))
    return out


def antipode_recursive(
    a: Element,
    ctx: HopfContext,
    coproduct_fn: "Callable[[Element], TensorElement] | None" = None,
) -> Element:
    """Antipode via the alternating series of iterated reduced coproducts.

    S(x) = Σ_{k≥0} (−1)^{k+1} μ^{(k)}(Δ̄^{(k)}(x)) for counit-free x,
    extended by S(1) = 1; the series stops once every tensor leg has a
    single vertex.  ``coproduct_fn`` substitutes a different Δ (the
    verifier uses this to test corrupted coproducts honestly).
    """
    _check_n(a, ctx)
    n = ctx.n
    if coproduct_fn is None:
        delta_basis = lambda f: _delta_forest(f, ctx)
        cache = _ANTIPODE_CACHE
        cache_key = lambda f: (ctx.qspec, f)
    else:
        delta_basis = lambda f: coproduct_fn(Element.basis(f, n))
        cache = {}
        cache_key = lambda f: f

    def s_basis(forest: Forest) -> Element:
        if forest.is_empty():
            return Element.unit(n)
        hit = cache.get(cache_key(forest))
        if hit is not None:
            return hit
        acc: dict[Forest, Coeff] = {}
        _acc(acc, forest, Coeff.rational(-1))
        legs: dict[tuple[Forest, ...], Coeff] = {(forest,): ONE}
        sign = -1
        while legs:
            sign = -sign
            nxt: dict[tuple[Forest, ...], Coeff] = {}
            for tup, c in legs.items():
                for l, r, d in _reduced_delta(tup[0], delta_basis):
                    _acc(nxt, (l, r) + tup[1:], c * d)
            for tup, c in nxt.items():
                prod = EMPTY_FOREST
                for f in tup:
                    prod = prod * f
                _acc(acc, prod, c * sign)
            legs = nxt
        out = Element(n, acc)
        cache[cache_key(forest)] = out
        return out

    result = Element.zero(n)
    for forest, coeff in a.data.items():
        result = result + s_basis(forest).scale(coeff)
    return result


def antipode_partitions(a: Element, ctx: HopfContext) -> Element:
    """Antipode as a signed sum over ordered partitions of the vertex set.

    Each ordered partition (s_1, …, s_k) of the vertices of t contributes
    (−1)^k · s_1·…·s_k · Π_{j<k} q(s_j, u_j), where u_j = s_j ∪ … ∪ s_k
    and the q-monomial is taken with host the induced subforest u_j.
    """
    _check_n(a, ctx)
    n = ctx.n

    def s_basis(forest: Forest) -> Element:
        if forest.is_empty():
            return Element.unit(n)
        hit = _ANTIPODE_PART_CACHE.get((ctx.qspec, forest))
        if hit is not None:
            return hit
        full = (1 << indexed(forest).nverts) - 1
        memo: dict[int, dict[Forest, Coeff]] = {}

        def rest(mask: int) -> dict[Forest, Coeff]:
            got = memo.get(mask)
            if got is not None:
                return got
            out: dict[Forest, Coeff] = {}
            _acc(out, _induced(forest, mask), Coeff.rational(-1))
            sub = (mask - 1) & mask
            while sub:
                factor = evaluate_exponents(
                    ctx.qspec, subset_exponents(forest, sub, mask)
                )
                if not factor.is_zero():
                    part = _induced(forest, sub)
                    for tail, c in rest(mask & ~sub).items():
                        _acc(out, part * tail, -(factor * c))
                sub = (sub - 1) & mask
            memo[mask] = out
            return out

        out = Element(n, rest(full))
        _ANTIPODE_PART_CACHE[(ctx.qspec, forest)] = out
        return out

    result = Element.zero(n)
    for forest, coeff in a.data.items():
        result = result + s_basis(forest).scale(coeff)
    return result


# ---------------------------------------------------------------------------
# Connes–Kreimer oracle (independent implementation, single colour)
# ---------------------------------------------------------------------------


def _admissible_cuts(tree: ColouredTree) -> list[tuple[tuple[ColouredTree, ...], ColouredTree]]:
    """All (crown trees, trunk) pairs from cutting an edge antichain.

    Works by direct recursion on the tree structure: each child subtree
    is either severed whole or keeps its edge and is cut internally.
    The empty cut (crown ∅, trunk = tree) is included; the "cut above
    the root" pair is NOT (the caller adds t⊗1 separately).
    """
    per_child: list[list[tuple[tuple[ColouredTree, ...], ColouredTree | None]]] = []
    for _, child in tree.children:
        options: list[tuple[tuple[ColouredTree, ...], ColouredTree | None]] = [
            ((child,), None)  # sever the whole child
        ]
        for crown, trunk in _admissible_cuts(child):
            options.append((crown, trunk))
        per_child.append(options)
    out = []
    for combo in _iproduct(*per_child):
        crown: tuple[ColouredTree, ...] = ()
        kept = []
        for crown_part, trunk_part in combo:
            crown = crown + crown_part
            if trunk_part is not None:
                kept.append((1, trunk_part))
        out.append((crown, ColouredTree(kept)))
    return out


def ck_coproduct_oracle(a: Element) -> TensorElement:
    """Independent single-colour coproduct by admissible edge cuts.

    Used purely as a cross-check against ``coproduct`` at parameter
    values (1, 0); shares only the tree containers with the main code,
    none of the subset/path machinery.
    """
    if a.n != 1:
        raise ColourMismatchError("the cut oracle is defined for n = 1 only")
    out: dict[tuple[Forest, Forest], Coeff] = {}
    for forest, coeff in a.data.items():
        terms: dict[tuple[Forest, Forest], Coeff] = {(EMPTY_FOREST, EMPTY_FOREST): ONE}
        for tree in forest.trees():
            tree_terms: dict[tuple[Forest, Forest], Coeff] = {}
            _acc(tree_terms, (Forest.single(tree), EMPTY_FOREST), ONE)
            for crown, trunk in _admissible_cuts(tree):
                _acc(tree_terms, (Forest(crown), Forest.single(trunk)), ONE)
            nxt: dict[tuple[Forest, Forest], Coeff] = {}
            for (l1, r1), c1 in terms.items():
                for (l2, r2), c2 in tree_terms.items():
                    _acc(nxt, (l1 * l2, r1 * r2), c1 * c2)
            terms = nxt
        for key, c in terms.items():
            _acc(out, key, c * coeff)
    return TensorElement(1, out)


# ---------------------------------------------------------------------------
# simplicial operators
# ---------------------------------------------------------------------------


def simplicial_d(i: int, a: Element) -> Element:
    """Face map: n colours down to n−1.

    d_0 severs all colour-1 edges and shifts the remaining colours down;
    d_n severs colour-n edges; 0 < i < n merges colours i and i+1.  All
    are algebra maps sending basis forests to basis forests.
    """
    n = a.n
    if n < 1:
        raise ValueError("face maps need at least one colour")
    if not 0 <= i <= n:
        raise ValueError(f"face index {i} out of range 0..{n}")

    def d_tree(tree: ColouredTree) -> Forest:
        if 0 < i < n:
            return Forest.single(tree.recolour(lambda c: c if c <= i else c - 1))
        slots = decompose(tree, n)
        if i == 0:
            severed = d_forest(slots[0])
            body = add_root([d_forest(f) for f in slots[1:]], n - 1)
        else:
            severed = d_forest(slots[n - 1])
            body = add_root([d_forest(f) for f in slots[: n - 1]], n - 1)
        return severed * Forest.single(body)

    def d_forest(forest: Forest) -> Forest:
        out = EMPTY_FOREST
        for tree in forest.trees():
            out = out * d_tree(tree)
        return out

    return Element(n - 1, ((d_forest(f), c) for f, c in a.data.items()))


def simplicial_s(i: int, a: Element) -> Element:
    """Degeneracy map: n colours up to n+1, inserting an unused slot.

    Edge colours greater than i shift up by one; colours ≤ i stay.
    """
    n = a.n
    if not 0 <= i <= n:
        raise ValueError(f"degeneracy index {i} out of range 0..{n}")

    def s_forest(forest: Forest) -> Forest:
        return Forest(
            t.recolour(lambda c: c if c <= i else c + 1) for t in forest.trees()
        )

    return Element(n + 1, ((s_forest(f), c) for f, c in a.data.items()))


# ---------------------------------------------------------------------------
# axiom verification
# ---------------------------------------------------------------------------


@dataclass
class CheckOutcome:
    name: str
    cases: int
    failure: str | None = None

    @property
    def passed(self) -> bool:
        return self.failure is None

    def line(self) -> str:
        if self.passed:
            return f"PASS {self.name} ({self.cases} cases)"
        return f"FAIL {self.name} ({self.cases} cases): {self.failure}"


@dataclass
class VerificationReport:
    n: int
    max_degree: int
    checks: list[CheckOutcome] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def first_failure(self) -> CheckOutcome | None:
        for c in self.checks:
            if not c.passed:
                return c
        return None

    def summary(self) -> str:
        head = f"axiom checks (n={self.n}, degrees <= {self.max_degree})"
        lines = [head] + ["  " + c.line() for c in self.checks]
        lines.append("  => " + ("ALL PASSED" if self.passed else "FAILURES FOUND"))
        return "\n".join(lines)


def _sample(cases: list, max_cases: int | None, seed: int) -> list:
    if max_cases is None or len(cases) <= max_cases:
        return cases
    return random.Random(seed).sample(cases, max_cases)


def verify_bialgebra(
    ctx: HopfContext,
    max_degree: int,
    coproduct_fn: "Callable[[Element], TensorElement] | None" = None,
    max_cases: int | None = None,
    seed: int = 0,
) -> VerificationReport:
    """Exhaustively check the bialgebra/Hopf axioms up to a degree bound.

    Runs coassociativity, the counit laws, multiplicativity of Δ, the
    two sigma compatibility conditions, the defining square for the
    root constructor, and both antipode convolution laws, on every
    basis forest (or tuple/pair of forests) within ``max_degree``.
    ``coproduct_fn`` lets callers verify a modified coproduct; the
    antipode used in the convolution check is rebuilt from it, so a
    corrupt Δ is judged by its own axioms.  ``max_cases`` caps each
    check's case list by seeded sampling (exhaustive when ``None``).
    """
    n = ctx.n
    report = VerificationReport(n=n, max_degree=max_degree)
    if coproduct_fn is None:
        coproduct_fn = lambda e: coproduct(e, ctx)
    delta_memo: dict[Forest, TensorElement] = {}

    def delta(f: Forest) -> TensorElement:
        got = delta_memo.get(f)
        if got is None:
            got = delta_memo[f] = coproduct_fn(Element.basis(f, n))
        return got

    forests = list(enumerate_forests_up_to(n, max_degree))

    # 1. coassociativity
    cases = _sample(forests, max_cases, seed)
    failure = None
    for f in cases:
        left: dict[tuple[Forest, Forest, Forest], Coeff] = {}
        right: dict[tuple[Forest, Forest, Forest], Coeff] = {}
        for (l, r), c in delta(f).data.items():
            for (a, b), d in delta(l).data.items():
                _acc(left, (a, b, r), c * d)
            for (a, b), d in delta(r).data.items():
                _acc(right, (l, a, b), c * d)
        if left != right:
            failure = f"(Δ⊗id)Δ ≠ (id⊗Δ)Δ on {f}"
            break
    report.checks.append(CheckOutcome("coassociativity", len(cases), failure))

    # 2. counit laws
    failure = None
    for f in cases:
        d = delta(f)
        ident = Element.basis(f, n)
        if d.left_counit() != ident or d.right_counit() != ident:
            failure = f"counit law fails on {f}"
            break
    report.checks.append(CheckOutcome("counit laws", len(cases), failure))

    # 3. Δ is an algebra morphism
    pairs = [
        (f, g)
        for i, f in enumerate(forests)
        for g in forests[i:]
        if f.size + g.size <= max_degree
    ]
    pairs = _sample(pairs, max_cases, seed + 1)
    failure = None
    for f, g in pairs:
        if delta(f * g) != delta(f) * delta(g):
            failure = f"Δ({f}·{g}) ≠ Δ({f})·Δ({g})"
            break
    report.checks.append(CheckOutcome("Δ multiplicative", len(pairs), failure))

    # tuples of slot forests for the sigma / root-constructor checks
    tuples = [
        combo
        for combo in _iproduct(*([forests] * n))
        if sum(f.size for f in combo) <= max_degree - 1
    ]
    tuples = _sample(tuples, max_cases, seed + 2)

    # 4. sigma compatibility (counit and coproduct conditions)
    failure = None
    for combo in tuples:
        slot_elems = [Element.basis(f, n) for f in combo]
        for side in (1, 2):
            s_elem = sigma(side, ctx.qspec, slot_elems)
            # counit condition
            eps = s_elem.counit()
            expect = ONE if all(f.is_empty() for f in combo) else ZERO
            if eps != expect:
                failure = f"ε∘σ_{side} ≠ ε^⊗n on {tuple(map(str, combo))}"
                break
            # coproduct condition
            lhs = TensorElement.zero(n)
            for forest, coeff in s_elem.data.items():
                lhs = lhs + delta(forest).scale(coeff)
            rhs: dict[tuple[Forest, Forest], Coeff] = {}
            for cross in _iproduct(*(delta(f).data.items() for f in combo)):
                coeff = ONE
                for _, c in cross:
                    coeff = coeff * c
                lefts = EMPTY_FOREST
                rights = EMPTY_FOREST
                for j, (key, _) in enumerate(cross, start=1):
                    coeff = (
                        coeff
                        * ctx.qspec.q(side, j) ** key[0].size
                        * ctx.qspec.q(side, j) ** key[1].size
                    )
                    lefts = lefts * key[0]
                    rights = rights * key[1]
                if not coeff.is_zero():
                    _acc(rhs, (lefts, rights), coeff)
            if lhs != TensorElement(n, rhs):
                failure = f"Δ∘σ_{side} condition fails on {tuple(map(str, combo))}"
                break
        if failure:
            break
    report.checks.append(CheckOutcome("σ compatibility", len(tuples), failure))

    # 5. defining square for the root constructor
    failure = None
    for combo in tuples:
        tree = add_root(combo, n)
        lhs = delta(Forest.single(tree))
        rhs = coproduct_of_slots(
            [Element.basis(f, n) for f in combo],
            ctx,
            delta=lambda e: _apply_linear(e, delta, n),
        )
        if lhs != rhs:
            failure = f"Δ∘λ square fails on {tuple(map(str, combo))}"
            break
    report.checks.append(CheckOutcome("root-constructor square", len(tuples), failure))

    # 6. antipode convolution laws
    failure = None
    s_dict: dict[Forest, Element] = {}

    def s_of(g: Forest) -> Element:
        got = s_dict.get(g)
        if got is None:
            got = s_dict[g] = antipode_recursive(
                Element.basis(g, n), ctx, coproduct_fn=coproduct_fn
            )
        return got

    for f in cases:
        lhs = Element.zero(n)
        rhs = Element.zero(n)
        for (l, r), c in delta(f).data.items():
            lhs = lhs + (s_of(l) * Element.basis(r, n)).scale(c)
            rhs = rhs + (Element.basis(l, n) * s_of(r)).scale(c)
        expect = Element.unit(n) if f.is_empty() else Element.zero(n)
        if lhs != expect or rhs != expect:
            failure = f"S*id = id*S = uε fails on {f}"
            break
    report.checks.append(CheckOutcome("antipode convolution", len(cases), failure))

    return report


def _apply_linear(e: Element, delta, n: int) -> TensorElement:
    out = TensorElement.zero(n)
    for forest, coeff in e.data.items():
        out = out + delta(forest).scale(coeff)
    return out
