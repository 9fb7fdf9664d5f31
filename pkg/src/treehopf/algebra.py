"""Exact coefficient arithmetic and linear combinations of forests.

Coefficients live in the polynomial ring over Q generated by the
symbols ``q{i}{j}`` (``i`` in {1,2}, ``j`` a colour).  A coefficient
specification (:class:`QSpec`) pins each of the 2n symbols to either a
rational constant or a polynomial (usually the symbol itself); constants
are substituted eagerly, so purely rational runs never touch polynomial
arithmetic beyond the constant term.

Printing is canonical: monomials are sorted degree-then-lexicographically
and zero-normalised, so equal coefficients always print identically.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .trees import (
    ColourMismatchError,
    EMPTY_FOREST,
    Forest,
    ParseError,
    Scanner,
)

# a monomial maps no symbols (constant) or symbols (i, j) to exponents;
# stored as a tuple of ((i, j), exp) pairs sorted by symbol
Monomial = tuple[tuple[tuple[int, int], int], ...]

_CONST: Monomial = ()


def _mono_sort_key(mono: Monomial):
    return (sum(e for _, e in mono), mono)


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    exps: dict[tuple[int, int], int] = dict(a)
    for sym, e in b:
        exps[sym] = exps.get(sym, 0) + e
    return tuple(sorted(exps.items()))


class Coeff:
    """A multivariate polynomial over Q in the q-symbols (immutable)."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, Fraction] | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Monomial, Fraction] = {}
        for mono, value in items:
            value = Fraction(value)
            if value:
                acc[mono] = acc.get(mono, Fraction(0)) + value
        self.terms = tuple(
            (m, v) for m, v in sorted(acc.items(), key=lambda kv: _mono_sort_key(kv[0])) if v
        )
        self._hash = hash(self.terms)

    # -- constructors ------------------------------------------------------

    @classmethod
    def rational(cls, value) -> "Coeff":
        return cls({_CONST: Fraction(value)})

    @classmethod
    def variable(cls, i: int, j: int) -> "Coeff":
        if i not in (1, 2) or j < 1:
            raise ValueError(f"no such coefficient symbol q{i}{j}")
        return cls({(((i, j), 1),): Fraction(1)})

    # -- predicates --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_rational(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and self.terms[0][0] == _CONST)

    def as_fraction(self) -> Fraction:
        if not self.terms:
            return Fraction(0)
        if not self.is_rational():
            raise ValueError(f"{self} is not a rational constant")
        return self.terms[0][1]

    # -- ring operations ---------------------------------------------------

    @staticmethod
    def _coerce(value) -> "Coeff":
        if isinstance(value, Coeff):
            return value
        if isinstance(value, (int, Fraction)):
            return Coeff.rational(value)
        raise TypeError(f"cannot treat {value!r} as a coefficient")

    def __add__(self, other):
        other = self._coerce(other)
        return Coeff(list(self.terms) + list(other.terms))

    __radd__ = __add__

    def __neg__(self):
        return Coeff((m, -v) for m, v in self.terms)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) + (-self)

    def __mul__(self, other):
        if not isinstance(other, (Coeff, int, Fraction)):
            return NotImplemented
        other = self._coerce(other)
        acc: dict[Monomial, Fraction] = {}
        for ma, va in self.terms:
            for mb, vb in other.terms:
                m = _mono_mul(ma, mb)
                acc[m] = acc.get(m, Fraction(0)) + va * vb
        return Coeff(acc)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a nonnegative integer")
        out = ONE
        base = self
        while exponent:
            if exponent & 1:
                out = out * base
            base = base * base
            exponent >>= 1
        return out

    def __truediv__(self, other):
        other = self._coerce(other)
        return self * Coeff.rational(1 / other.as_fraction())

    def substitute(self, values: Mapping[tuple[int, int], "Coeff | Fraction | int"]) -> "Coeff":
        """Replace the listed symbols; symbols not mentioned stay symbolic."""
        table = {sym: self._coerce(v) for sym, v in values.items()}
        out = ZERO
        for mono, value in self.terms:
            part = Coeff.rational(value)
            for sym, exp in mono:
                factor = table.get(sym)
                part = part * (factor ** exp if factor is not None
                               else Coeff({((sym, exp),): Fraction(1)}))
            out = out + part
        return out

    # -- ordering / hashing / printing --------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Coeff.rational(other)
        if not isinstance(other, Coeff):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return self._hash

    def __str__(self):
        if not self.terms:
            return "0"
        chunks: list[str] = []
        for mono, value in self.terms:
            body = _format_monomial(mono, value)
            if not chunks:
                chunks.append(body if value > 0 else "-" + body)
            else:
                chunks.append((" + " if value > 0 else " - ") + body)
        return "".join(chunks)

    def __repr__(self):
        return f"Coeff({self})"


def _format_monomial(mono: Monomial, value: Fraction) -> str:
    mag = abs(value)
    factors = [f"q{i}{j}" + (f"^{e}" if e > 1 else "") for (i, j), e in mono]
    if not factors:
        return str(mag)
    if mag != 1:
        factors.insert(0, str(mag))
    return "*".join(factors)


ZERO = Coeff()
ONE = Coeff.rational(1)


def _scan_rational(sc: Scanner) -> Fraction:
    num = sc.integer()
    save = sc.pos
    sc.skip_ws()
    if sc.try_take("/"):
        sc.skip_ws()
        return Fraction(num, sc.integer())
    sc.pos = save
    return Fraction(num)


def _scan_symbol(sc: Scanner) -> tuple[int, int]:
    sc.expect("q")
    digits = sc.pos
    code = sc.integer()
    text = sc.text[digits:sc.pos]
    i = int(text[0])
    if i not in (1, 2) or len(text) < 2:
        raise sc.error(f"bad coefficient symbol q{code}")
    return (i, int(text[1:]))


def _scan_monomial(sc: Scanner) -> Coeff:
    """One signless monomial: rational and/or '*'-joined q-symbol powers."""
    out = ONE
    first = True
    while True:
        sc.skip_ws()
        ch = sc.peek()
        if ch == "q":
            sym = _scan_symbol(sc)
            exp = 1
            if sc.try_take("^"):
                exp = sc.integer()
            out = out * Coeff.variable(*sym) ** exp
        elif ch.isdigit() and first:
            out = out * Coeff.rational(_scan_rational(sc))
        else:
            raise sc.error("expected a coefficient factor")
        first = False
        save = sc.pos
        sc.skip_ws()
        if not sc.try_take("*"):
            sc.pos = save
            return out
        after = sc.pos
        sc.skip_ws()
        if sc.peek() != "q":  # the '*' belonged to a forest, back out
            sc.pos = save
            return out
        sc.pos = after


def parse_coeff(text: str) -> Coeff:
    """Parse a polynomial coefficient, e.g. ``2/3*q11^2*q22 - q21``."""
    sc = Scanner(text)
    sc.skip_ws()
    negative = sc.try_take("-")
    out = _scan_monomial(sc) * (-1 if negative else 1)
    while True:
        sc.skip_ws()
        if sc.try_take("+"):
            sign = 1
        elif sc.try_take("-"):
            sign = -1
        else:
            sc.check_done()
            return out
        out = out + _scan_monomial(sc) * sign


# ---------------------------------------------------------------------------
# coefficient specifications
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class QSpec:
    """Values of the 2n coefficient symbols: row 1 then row 2, colours 1..n."""

    n: int
    entries: tuple[Coeff, ...]

    def __post_init__(self):
        if self.n < 0 or len(self.entries) != 2 * self.n:
            raise ValueError(f"need exactly {2 * self.n} entries for n = {self.n}")

    def q(self, i: int, j: int) -> Coeff:
        if i not in (1, 2) or not 1 <= j <= self.n:
            raise ValueError(f"q{i}{j} is outside the 2x{self.n} specification")
        return self.entries[(i - 1) * self.n + (j - 1)]

    @classmethod
    def symbolic(cls, n: int) -> "QSpec":
        return cls(n, tuple(Coeff.variable(i, j) for i in (1, 2) for j in range(1, n + 1)))

    @classmethod
    def rational(cls, n: int, values: Sequence) -> "QSpec":
        return cls(n, tuple(Coeff.rational(v) for v in values))

    @classmethod
    def connes_kreimer(cls) -> "QSpec":
        """n = 1, q11 = 1, q21 = 0: the Connes-Kreimer coproduct."""
        return cls.rational(1, (1, 0))

    @classmethod
    def indicator(cls, n: int, p: Iterable[int]) -> "QSpec":
        """Row 1 is the indicator of the colour set p, row 2 is zero."""
        chosen = set(p)
        if not chosen <= set(range(1, n + 1)):
            raise ValueError(f"colour set {sorted(chosen)} not within 1..{n}")
        row1 = [Coeff.rational(1 if j in chosen else 0) for j in range(1, n + 1)]
        return cls(n, tuple(row1) + tuple(ZERO for _ in range(n)))

    @classmethod
    def symmetric_symbolic(cls, n: int) -> "QSpec":
        """Both rows share one symbol per colour (forces cocommutativity)."""
        row = tuple(Coeff.variable(1, j) for j in range(1, n + 1))
        return cls(n, row + row)

    @classmethod
    def from_strings(cls, n: int, words: Sequence[str]) -> "QSpec":
        """CLI form: 2n comma-split entries, each a rational or ``sym``."""
        if len(words) != 2 * n:
            raise ValueError(f"--q needs {2 * n} entries for n = {n}, got {len(words)}")
        entries = []
        for pos, word in enumerate(words):
            i, j = divmod(pos, n)
            if word.strip() == "sym":
                entries.append(Coeff.variable(i + 1, j + 1))
            else:
                entries.append(Coeff.rational(Fraction(word.strip())))
        return cls(n, tuple(entries))

    def is_rational(self) -> bool:
        return all(e.is_rational() for e in self.entries)


def evaluate_exponents(qspec: QSpec, exponents: Mapping[tuple[int, int], int]) -> Coeff:
    """Product of spec entries raised to the given powers (0^0 = 1)."""
    out = ONE
    for (i, j), exp in exponents.items():
        if exp:
            out = out * qspec.q(i, j) ** exp
        if out.is_zero():
            break
    return out


# ---------------------------------------------------------------------------
# linear combinations
# ---------------------------------------------------------------------------


class Combination:
    """Shared plumbing for finite linear combinations over a hashable basis."""

    __slots__ = ("n", "data")

    def __init__(self, n: int, data: Mapping | Iterable = ()):
        items = data.items() if isinstance(data, Mapping) else data
        store: dict = {}
        for key, coeff in items:
            coeff = Coeff._coerce(coeff)
            if coeff.is_zero():
                continue
            self._check_key(key, n)
            prev = store.get(key)
            total = coeff if prev is None else prev + coeff
            if total.is_zero():
                store.pop(key, None)
            else:
                store[key] = total
        self.n = n
        self.data = store

    # subclasses override these two
    def _check_key(self, key, n):
        raise NotImplementedError

    @staticmethod
    def _term_sort_key(key):
        raise NotImplementedError

    # -- vector-space structure ---------------------------------------------

    def _require_compatible(self, other):
        if type(other) is not type(self) or other.n != self.n:
            raise ValueError(
                f"cannot combine {type(self).__name__} over n={self.n} "
                f"with {type(other).__name__} over n={getattr(other, 'n', '?')}"
            )

    def __add__(self, other):
        self._require_compatible(other)
        return type(self)(self.n, list(self.data.items()) + list(other.data.items()))

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return type(self)(self.n, ((k, -c) for k, c in self.data.items()))

    def scale(self, factor):
        factor = Coeff._coerce(factor)
        return type(self)(self.n, ((k, c * factor) for k, c in self.data.items()))

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, Coeff)):
            return self.scale(other)
        return NotImplemented

    def coefficient(self, key) -> Coeff:
        return self.data.get(key, ZERO)

    def is_zero(self) -> bool:
        return not self.data

    def terms(self):
        """Deterministically ordered (key, coefficient) pairs."""
        return sorted(self.data.items(), key=lambda kv: self._term_sort_key(kv[0]))

    def support(self):
        return [k for k, _ in self.terms()]

    def map_coefficients(self, fn):
        return type(self)(self.n, ((k, fn(c)) for k, c in self.data.items()))

    def substitute(self, values):
        return self.map_coefficients(lambda c: c.substitute(values))

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self.n == other.n and self.data == other.data

    def __hash__(self):
        return hash((self.n, tuple(self.terms())))

    def __len__(self):
        return len(self.data)

    def __repr__(self):
        return f"{type(self).__name__}({self.n}, {self})"


class Element(Combination):
    """An element of the free commutative algebra on trees: a finite
    Q[q]-linear combination of forests."""

    def _check_key(self, key, n):
        if not isinstance(key, Forest):
            raise TypeError(f"Element keys must be forests, got {key!r}")
        if key.max_colour > n:
            raise ColourMismatchError(f"forest {key} uses colour {key.max_colour} > n = {n}")

    @staticmethod
    def _term_sort_key(key: Forest):
        return key.sort_key()

    @classmethod
    def zero(cls, n: int) -> "Element":
        return cls(n)

    @classmethod
    def unit(cls, n: int) -> "Element":
        return cls(n, {EMPTY_FOREST: ONE})

    @classmethod
    def basis(cls, forest: Forest, n: int) -> "Element":
        return cls(n, {forest: ONE})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Coeff)):
            return self.scale(other)
        self._require_compatible(other)
        acc: dict[Forest, Coeff] = {}
        for fa, ca in self.data.items():
            for fb, cb in other.data.items():
                key = fa * fb
                prod = ca * cb
                prev = acc.get(key)
                acc[key] = prod if prev is None else prev + prod
        return Element(self.n, acc)

    def counit(self) -> Coeff:
        return self.coefficient(EMPTY_FOREST)

    def graded_part(self, degree: int) -> "Element":
        return Element(self.n, {f: c for f, c in self.data.items() if f.size == degree})

    def max_degree(self) -> int:
        return max((f.size for f in self.data), default=0)

    def __str__(self):
        return _format_terms(self.terms(), lambda f: str(f))


class TensorElement(Combination):
    """A finite combination of forest pairs (two-fold tensors)."""

    def _check_key(self, key, n):
        if (
            not isinstance(key, tuple)
            or len(key) != 2
            or not all(isinstance(f, Forest) for f in key)
        ):
            raise TypeError("TensorElement keys must be (Forest, Forest) pairs")
        if max(key[0].max_colour, key[1].max_colour) > n:
            raise ColourMismatchError(f"tensor {key} uses a colour > n = {n}")

    @staticmethod
    def _term_sort_key(key):
        return (key[0].sort_key(), key[1].sort_key())

    @classmethod
    def zero(cls, n: int) -> "TensorElement":
        return cls(n)

    @classmethod
    def unit(cls, n: int) -> "TensorElement":
        return cls(n, {(EMPTY_FOREST, EMPTY_FOREST): ONE})

    @classmethod
    def of(cls, left: Element, right: Element) -> "TensorElement":
        if left.n != right.n:
            raise ValueError("tensor factors must share n")
        return cls(
            left.n,
            {
                (fl, fr): cl * cr
                for fl, cl in left.data.items()
                for fr, cr in right.data.items()
            },
        )

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Coeff)):
            return self.scale(other)
        self._require_compatible(other)
        acc: dict[tuple[Forest, Forest], Coeff] = {}
        for (la, ra), ca in self.data.items():
            for (lb, rb), cb in other.data.items():
                key = (la * lb, ra * rb)
                prod = ca * cb
                prev = acc.get(key)
                acc[key] = prod if prev is None else prev + prod
        return TensorElement(self.n, acc)

    def swap(self) -> "TensorElement":
        return TensorElement(self.n, (((r, l), c) for (l, r), c in self.data.items()))

    def left_counit(self) -> Element:
        """Apply the counit to the left leg."""
        return Element(
            self.n,
            ((r, c) for (l, r), c in self.data.items() if l.is_empty()),
        )

    def right_counit(self) -> Element:
        return Element(
            self.n,
            ((l, c) for (l, r), c in self.data.items() if r.is_empty()),
        )

    def __str__(self):
        return _format_terms(self.terms(), lambda k: f"{k[0]} ⊗ {k[1]}")


def _format_terms(terms, key_str) -> str:
    """Shared element printer: one monomial per printed term."""
    if not terms:
        return "0"
    chunks: list[str] = []
    for key, coeff in terms:
        for mono, value in coeff.terms:
            body = _format_monomial(mono, value)
            if body == "1":
                body = ""
            piece = (body + " " if body else "") + key_str(key)
            if not chunks:
                chunks.append(("-" if value < 0 else "") + piece)
            else:
                chunks.append((" - " if value < 0 else " + ") + piece)
    return "".join(chunks)


# ---------------------------------------------------------------------------
# structure maps
# ---------------------------------------------------------------------------


def sigma(side: int, qspec: QSpec, slots: Sequence[Element]) -> Element:
    """The q-scaled product map for the given row (1 or 2).

    On basis forests: multiply all slots together and weight by the
    product over colours j of ``q(side, j)`` to the size of slot j.
    Extended multilinearly, one graded component at a time.
    """
    if side not in (1, 2):
        raise ValueError("side must be 1 or 2")
    n = qspec.n
    if len(slots) != n:
        raise ValueError(f"sigma needs {n} slot arguments, got {len(slots)}")
    for s in slots:
        if s.n != n:
            raise ValueError("slot elements must live over the same n")
    out: dict[Forest, Coeff] = {}
    items = [list(s.data.items()) for s in slots]
    from itertools import product as iproduct

    for combo in iproduct(*items):
        coeff = ONE
        forest = EMPTY_FOREST
        for j, (f, c) in enumerate(combo, start=1):
            coeff = coeff * c * qspec.q(side, j) ** f.size
            forest = forest * f
        if coeff.is_zero():
            continue
        prev = out.get(forest)
        total = coeff if prev is None else prev + coeff
        if total.is_zero():
            out.pop(forest, None)
        else:
            out[forest] = total
    return Element(n, out)


def parse_element(text: str, n: int) -> Element:
    """Parse ``coef forest (+|-) ...``; omitted coefficients default to 1."""
    sc = Scanner(text)
    out = Element.zero(n)
    sign = 1
    sc.skip_ws()
    if sc.try_take("-"):
        sign = -1
    elif sc.peek() == "0":
        save = sc.pos
        sc.pos += 1
        sc.skip_ws()
        if sc.at_end():
            return out
        sc.pos = save
    while True:
        coeff, forest = _scan_term(sc, n)
        out = out + Element(n, {forest: coeff * sign})
        sc.skip_ws()
        if sc.try_take("+"):
            sign = 1
        elif sc.try_take("-"):
            sign = -1
        else:
            sc.check_done()
            return out


def _scan_term(sc: Scanner, n: int) -> tuple[Coeff, Forest]:
    """One signless term: optional coefficient monomial, then a forest."""
    sc.skip_ws()
    ch = sc.peek()
    if ch == "[":
        return ONE, sc.forest(n)
    if ch == "q":
        coeff = _scan_monomial(sc)
        sc.skip_ws()
        return coeff, sc.forest(n)
    if ch.isdigit():
        save = sc.pos
        coeff = Coeff.rational(_scan_rational(sc))
        probe = sc.pos
        sc.skip_ws()
        nxt = sc.peek()
        if sc.try_take("*") :
            sc.skip_ws()
            if sc.peek() == "q":
                sc.pos = save
                coeff = _scan_monomial(sc)
                sc.skip_ws()
                return coeff, sc.forest(n)
            sc.pos = probe
            raise sc.error("expected a coefficient symbol after '*'")
        if nxt in ("[", "1"):
            return coeff, sc.forest(n)
        # a lone "1" is the empty forest, not a coefficient
        if sc.text[save:probe].strip() == "1":
            sc.pos = probe
            return ONE, EMPTY_FOREST
        raise sc.error("expected a forest after the coefficient")
    raise sc.error("expected a term")


def parse_tensor(text: str, n: int) -> TensorElement:
    """Parse ``coef forest ⊗ forest (+|-) ...`` (``(x)`` accepted for ``⊗``)."""
    sc = Scanner(text)
    out = TensorElement.zero(n)
    sign = 1
    sc.skip_ws()
    if sc.try_take("-"):
        sign = -1
    elif sc.peek() == "0":
        save = sc.pos
        sc.pos += 1
        sc.skip_ws()
        if sc.at_end():
            return out
        sc.pos = save
    while True:
        coeff, left = _scan_term(sc, n)
        sc.skip_ws()
        if not sc.try_take("⊗"):
            sc.expect("(x)")
        sc.skip_ws()
        right = sc.forest(n)
        out = out + TensorElement(n, {(left, right): coeff * sign})
        sc.skip_ws()
        if sc.try_take("+"):
            sign = 1
        elif sc.try_take("-"):
            sign = -1
        else:
            sc.check_done()
            return out
