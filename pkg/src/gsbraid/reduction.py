"""Reduction of polynomials and words modulo an oriented presentation.

A Presentation fixes an alphabet, a monomial order, and an ordered list of
monic relations; each relation's leading word is isolated at construction
time.  Reduction replaces an occurrence of a leading word s̄ inside a term
a.s̄.b by the correspondingly framed tail, i.e. p -> p - c.a.s.b where c is
the term's coefficient.  The deterministic tie-break is: among reducible
term words pick the order-greatest, then the lowest relation index, then
the leftmost position.

For presentations whose relations are all binomial (u - v, coefficients
1 and -1; the constant 1 counts as the empty word) there is a word-level
fast path, ``word_nf``, that rewrites plain words.  Internally words are
encoded as strings of one character per letter id so that substring search
runs at C speed.

``word_nf`` offers three site-selection strategies.  All three return the
same word whenever the relation set is closed under composition (the
result is then the unique irreducible representative); they differ only in
the rewrite path taken, and the path lengths can differ enormously:

* ``canonical`` mirrors ``reduce_once`` on a one-term polynomial exactly:
  lowest relation index first, then leftmost occurrence.  Simple and
  reproducible, but on relation systems that shuttle letters across each
  other (such as the braid presentations in this package) it interleaves
  independent rewriting passages and the path length can blow up
  exponentially in the input length.
* ``rightmost`` works at the rightmost reducible site, with a locality
  window: after each rewrite it keeps working inside the region the
  rewrite disturbed, applying length-decreasing rules leftmost-first and
  other rules rightmost-first, and only rescans the whole word when the
  region is quiet.  This tracks each rewriting passage to completion
  before starting the next and stays near-linear in practice.
* ``leftmost`` is a left-to-right prefix fold: letters are appended one at
  a time onto an already-irreducible prefix, which is renormalised after
  each append.  Work therefore always happens at the left frontier of the
  unread input.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .freealg import Alphabet, Polynomial, Word
from .orders import GREATER, LESS, OrderSpec, compare, compare_ids


class ZeroPolynomial(ValueError):
    """Raised when asking for the leading term of the zero polynomial."""


class NotBinomial(ValueError):
    """Raised by the word-rewriting fast path on a non-binomial presentation."""


class OrientationError(ValueError):
    """Raised when a declared left-hand side is not the order-leading word."""

    def __init__(self, index: int, detail: str = ""):
        super().__init__(f"relation {index}: declared LHS is not order-leading{detail}")
        self.index = index


class FuelExhausted(RuntimeError):
    """Raised when a reduction does not reach a fixpoint within its fuel.

    ``trace`` carries the steps taken so far (polynomial path); ``partial``
    carries the word reached so far (word path).
    """

    def __init__(self, fuel_used: int, trace: Optional["ReductionTrace"] = None,
                 partial: Optional[Word] = None):
        super().__init__(f"reduction did not finish within {fuel_used} steps")
        self.fuel_used = fuel_used
        self.trace = trace
        self.partial = partial


DEFAULT_FUEL = 10**6


@dataclass(frozen=True)
class ReductionStep:
    """One rewrite: the term a.s̄.b of relation ``relation`` at ``position`` = |a|."""

    relation: int
    position: int
    left: Word
    right: Word


@dataclass
class ReductionTrace:
    """Evidence object: replaying ``steps`` from the input reproduces ``result``."""

    steps: list[ReductionStep]
    result: Polynomial
    fuel_used: int

    def replay(self, p: Polynomial, S: "Presentation") -> Polynomial:
        """Re-run the steps on p.  A step whose target term has cancelled out
        of p replays as a no-op (its effective coefficient is zero)."""
        for st in self.steps:
            rel = S.relations[st.relation]
            w = st.left.letters + S.lead(st.relation).letters + st.right.letters
            c = p.terms.get(w)
            if c:
                p = p - rel.left_mul(st.left).right_mul(st.right).scale(c)
        return p


def leading(p: Polynomial, order: OrderSpec) -> tuple[Word, Fraction]:
    """The order-maximal term word of p and its coefficient."""
    if not p.terms:
        raise ZeroPolynomial("the zero polynomial has no leading word")
    best: Optional[tuple[int, ...]] = None
    for t in p.terms:
        if best is None or compare_ids(order, t, best) == GREATER:
            best = t
    return Word(p.alphabet, best), p.terms[best]


def _encode(letters: Sequence[int]) -> str:
    return "".join(map(chr, letters))


def _decode(s: str) -> tuple[int, ...]:
    return tuple(map(ord, s))


class Presentation:
    """An alphabet, an order, and an ordered list of monic oriented relations.

    ``families`` carries one label per relation (used for scoped
    verification reports); labels default to the 1-based relation position.
    Equality compares alphabet, order, and relations; families and the
    optional ``order_text`` annotation are display metadata.
    """

    __slots__ = ("alphabet", "order", "relations", "families", "order_text",
                 "_lead", "_lead_set", "_max_lead", "_rules", "_word_eng")

    def __init__(self, alphabet: Alphabet, order: OrderSpec,
                 relations: Iterable[Polynomial], families: Optional[Sequence[str]] = None,
                 order_text: Optional[str] = None):
        self.alphabet = alphabet
        self.order = order
        rels: list[Polynomial] = []
        leads: list[tuple[int, ...]] = []
        for i, p in enumerate(relations):
            if not p.terms:
                raise ZeroPolynomial(f"relation {i} is the zero polynomial")
            lead, c = leading(p, order)
            if c != 1:
                p = p.scale(Fraction(1, 1) / c)
            rels.append(p)
            leads.append(lead.letters)
        self.relations: tuple[Polynomial, ...] = tuple(rels)
        if families is None:
            families = [str(i + 1) for i in range(len(rels))]
        families = tuple(str(f) for f in families)
        if len(families) != len(rels):
            raise ValueError("families must align with relations")
        self.families: tuple[str, ...] = families
        self.order_text = order_text
        self._lead = tuple(leads)
        self._lead_set = frozenset(leads)
        self._max_lead = max((len(t) for t in leads), default=0)
        # word-rewriting rules exist iff every relation is binomial with coefficients 1, -1
        rules: Optional[list[tuple[str, str]]] = []
        for i, p in enumerate(rels):
            if len(p.terms) != 2:
                rules = None
                break
            (rhs,) = [t for t in p.terms if t != self._lead[i]]
            if p.terms[rhs] != -1:
                rules = None
                break
            rules.append((_encode(self._lead[i]), _encode(rhs)))
        self._rules = tuple(rules) if rules is not None else None
        self._word_eng: Optional[_WordEngine] = None

    @classmethod
    def from_polynomials(cls, alphabet: Alphabet, order: OrderSpec,
                         polys: Iterable[Polynomial], families: Optional[Sequence[str]] = None,
                         order_text: Optional[str] = None) -> "Presentation":
        return cls(alphabet, order, polys, families, order_text)

    @classmethod
    def from_oriented(cls, alphabet: Alphabet, order: OrderSpec,
                      pairs: Iterable[tuple[Word, Word]], families: Optional[Sequence[str]] = None,
                      order_text: Optional[str] = None) -> "Presentation":
        """Build from (LHS, RHS) word pairs; each LHS must be strictly order-leading."""
        polys = []
        for i, (lhs, rhs) in enumerate(pairs):
            if compare(order, lhs, rhs) != GREATER:
                raise OrientationError(i, f" ({lhs} vs {rhs})")
            polys.append(Polynomial.from_word(lhs) - Polynomial.from_word(rhs))
        return cls(alphabet, order, polys, families, order_text)

    @property
    def binomial(self) -> bool:
        return self._rules is not None

    def _engine(self) -> "_WordEngine":
        """The cached word-rewriting scheduler; requires a binomial presentation."""
        if self._rules is None:
            raise NotBinomial("presentation has a relation that is not of the form u - v")
        if self._word_eng is None:
            self._word_eng = _WordEngine(self._rules)
        return self._word_eng

    def lead(self, i: int) -> Word:
        return Word(self.alphabet, self._lead[i])

    def __len__(self) -> int:
        return len(self.relations)

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, Presentation)
                and self.alphabet == other.alphabet
                and self.order == other.order
                and self.relations == other.relations)

    def __repr__(self) -> str:
        return f"Presentation({len(self.relations)} relations over {len(self.alphabet)} letters)"

    def __getstate__(self):
        return (self.alphabet, self.order, self.relations, self.families, self.order_text)

    def __setstate__(self, state):
        self.__init__(*state)


def _find_site(word: tuple[int, ...], S: Presentation) -> Optional[tuple[int, int]]:
    """Lowest relation index, then leftmost position, of a leading-word occurrence."""
    if S._rules is not None:
        s = _encode(word)
        present = set(s)
        for idx, (lhs, _) in enumerate(S._rules):
            if lhs[0] in present:
                p = s.find(lhs)
                if p >= 0:
                    return idx, p
        return None
    n = len(word)
    for idx, lhs in enumerate(S._lead):
        m = len(lhs)
        for p in range(n - m + 1):
            if word[p:p + m] == lhs:
                return idx, p
    return None


def reduce_once(p: Polynomial, S: Presentation,
                check_descent: bool = False) -> Optional[tuple[Polynomial, ReductionStep]]:
    """One deterministic elimination step, or None if p is supported on Irr(S)."""
    best: Optional[tuple[int, ...]] = None
    site: Optional[tuple[int, int]] = None
    for t in p.terms:
        s = _find_site(t, S)
        if s is None:
            continue
        if best is None or compare_ids(S.order, t, best) == GREATER:
            best, site = t, s
    if best is None:
        return None
    idx, pos = site
    lhs = S._lead[idx]
    a, b = best[:pos], best[pos + len(lhs):]
    c = p.terms[best]
    terms = dict(p.terms)
    for t, ct in S.relations[idx].terms.items():
        nt = a + t + b
        if check_descent and t != lhs and compare_ids(S.order, nt, best) != LESS:
            raise AssertionError(f"descent violated: {Word(p.alphabet, nt)} not < {Word(p.alphabet, best)}")
        nc = terms.get(nt, Fraction(0)) - c * ct
        if nc:
            terms[nt] = nc
        else:
            terms.pop(nt, None)
    step = ReductionStep(idx, pos, Word(p.alphabet, a), Word(p.alphabet, b))
    return Polynomial(p.alphabet, terms), step


def normal_form(p: Polynomial, S: Presentation, fuel: int = DEFAULT_FUEL,
                check_descent: bool = False) -> tuple[Polynomial, ReductionTrace]:
    """Iterate reduce_once to a fixpoint; the result is supported on Irr(S)."""
    steps: list[ReductionStep] = []
    used = 0
    cur = p
    while True:
        r = reduce_once(cur, S, check_descent)
        if r is None:
            return cur, ReductionTrace(steps, cur, used)
        if used >= fuel:
            raise FuelExhausted(used, trace=ReductionTrace(steps, cur, used))
        cur, step = r
        steps.append(step)
        used += 1


def _rewrite_canonical(s: str, rules: Sequence[tuple[str, str]], fuel: int) -> tuple[str, int]:
    """Flat schedule: lowest rule index, then leftmost occurrence (reduce_once mirror)."""
    used = 0
    while True:
        hit_idx = -1
        hit_pos = -1
        present = set(s)
        for idx, (lhs, _) in enumerate(rules):
            if lhs[0] in present:
                p = s.find(lhs)
                if p >= 0:
                    hit_idx, hit_pos = idx, p
                    break
        if hit_idx < 0:
            return s, used
        if used >= fuel:
            raise FuelExhausted(used, partial=s)
        lhs, rhs = rules[hit_idx]
        s = s[:hit_pos] + rhs + s[hit_pos + len(lhs):]
        used += 1


# An emitted rewrite: (rule index, position, text left of the site, text right of it).
_Emit = list  # list[tuple[int, int, str, str]]


class _WordEngine:
    """Passage-coherent word rewriting over encoded binomial rules.

    The scheduler keeps an *active region* around the last rewrite (the
    rewritten span padded by the longest left-hand side).  Inside the
    region, length-decreasing rules are applied leftmost-first (they close
    off cancellations as soon as they appear) and the remaining rules
    rightmost-first (they continue the passage of a letter travelling
    through the word).  Only when the region has no reducible site does the
    engine rescan the whole word for the rightmost one.  This keeps each
    rewriting passage coherent instead of interleaving passages, which is
    what makes flat schedules blow up on shuttle-style relation systems.
    """

    __slots__ = ("rules", "trig", "max_lhs")

    def __init__(self, rules: Sequence[tuple[str, str]]):
        self.rules = rules
        self.max_lhs = max((len(lhs) for lhs, _ in rules), default=1)
        trig: dict[str, list[tuple[int, str, str, bool]]] = {}
        for idx, (lhs, rhs) in enumerate(rules):
            trig.setdefault(lhs[0], []).append((idx, lhs, rhs, len(rhs) < len(lhs)))
        self.trig = trig

    def _pick_region(self, s: str, lo: int, hi: int) -> Optional[tuple[int, int, str, str]]:
        trig = self.trig
        lo = max(lo, 0)
        hi = min(hi, len(s) - 1)
        other: Optional[tuple[int, int, str, str]] = None
        for p in range(lo, hi + 1):
            cands = trig.get(s[p])
            if not cands:
                continue
            for idx, lhs, rhs, shrinking in cands:
                if s.startswith(lhs, p):
                    if shrinking:
                        return idx, p, lhs, rhs
                    other = (idx, p, lhs, rhs)
                    break
        return other

    def _pick_global(self, s: str) -> Optional[tuple[int, int, str, str]]:
        trig = self.trig
        for p in range(len(s) - 1, -1, -1):
            cands = trig.get(s[p])
            if not cands:
                continue
            for idx, lhs, rhs, _ in cands:
                if s.startswith(lhs, p):
                    return idx, p, lhs, rhs
        return None

    def run(self, s: str, fuel: int, used: int = 0,
            emit: Optional[_Emit] = None) -> tuple[str, int]:
        """Rewrite to a fixpoint; returns (irreducible word, total steps used)."""
        lo: Optional[int] = None
        hi = 0
        while True:
            hit = self._pick_region(s, lo, hi) if lo is not None else None
            if hit is None:
                hit = self._pick_global(s)
                if hit is None:
                    return s, used
            if used >= fuel:
                raise FuelExhausted(used, partial=s)
            idx, p, lhs, rhs = hit
            if emit is not None:
                emit.append((idx, p, s[:p], s[p + len(lhs):]))
            s = s[:p] + rhs + s[p + len(lhs):]
            used += 1
            lo = p - self.max_lhs
            hi = p + len(rhs)

    def run_prefix(self, s: str, fuel: int, used: int = 0,
                   emit: Optional[_Emit] = None) -> tuple[str, int]:
        """Left-to-right fold: renormalise after appending each input letter."""
        acc = ""
        for i, ch in enumerate(s):
            try:
                acc, used = self.run(acc + ch, fuel, used, emit)
            except FuelExhausted as e:
                raise FuelExhausted(e.fuel_used, partial=e.partial + s[i + 1:]) from None
        return acc, used


_STRATEGIES = ("canonical", "leftmost", "rightmost")


def word_nf(w: Word, S: Presentation, fuel: int = DEFAULT_FUEL, strategy: str = "canonical") -> Word:
    """Normal form of a single word by pure string rewriting.

    Equals the unique term word of normal_form on the one-term polynomial w.
    Requires every relation of S to be binomial u - v.  ``strategy`` picks
    the rewrite schedule (see the module docstring); all schedules agree on
    the result when the relation set is closed under composition.
    """
    if S._rules is None:
        raise NotBinomial("presentation has a relation that is not of the form u - v")
    try:
        if strategy == "canonical":
            s, _ = _rewrite_canonical(_encode(w.letters), S._rules, fuel)
        elif strategy == "rightmost":
            s, _ = S._engine().run(_encode(w.letters), fuel)
        elif strategy == "leftmost":
            s, _ = S._engine().run_prefix(_encode(w.letters), fuel)
        else:
            raise ValueError(f"unknown strategy {strategy!r}; expected one of {_STRATEGIES}")
    except FuelExhausted as e:
        raise FuelExhausted(e.fuel_used, partial=Word(S.alphabet, _decode(e.partial))) from None
    return Word(S.alphabet, _decode(s))


def format_polynomial(p: Polynomial, order: OrderSpec) -> str:
    """Deterministic display with terms sorted descending under the order."""
    if not p.terms:
        return "0"
    import functools
    keys = sorted(p.terms, key=functools.cmp_to_key(lambda a, b: compare_ids(order, a, b)), reverse=True)
    parts: list[str] = []
    for t in keys:
        c = p.terms[t]
        word = " ".join(p.alphabet.letters[i].name for i in t) if t else "1"
        mag = abs(c)
        body = word if mag == 1 else f"{mag} {word}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts)
