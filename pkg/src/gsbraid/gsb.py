"""Composition enumeration, triviality checking, basis verification, completion.

A pair of relations f, g with leading words f̄, ḡ meets in two ways:

- intersection: a proper suffix of f̄ equals a proper prefix of ḡ, giving
  w = f̄.b = a.ḡ with |w| < |f̄| + |ḡ| and composition (f,g)_w = f.b - a.g;
- inclusion: ḡ occurs inside f̄, giving w = f̄ = a.ḡ.b and composition
  (f,g)_w = f - a.g.b.

The case where ḡ is a full suffix of f̄ satisfies both definitions with
the same composition polynomial; it is classified as an inclusion at the
trailing position.  Self-pairs are enumerated, except the degenerate
full-length self-inclusion (zero polynomial).

A composition is trivial when it reduces to zero; since every reduction
step rewrites below w, a zero normal form witnesses the required
expansion sum(alpha_i a_i s_i b_i) with a_i s̄_i b_i < w.  verify_gsb
checks every ambiguity of every ordered relation pair; the report is
deterministic regardless of worker count.  For binomial presentations
the triviality check rewrites the two branch words of the composition
on the word fast path and compares their normal forms; the evidence
trace concatenates both rewrite sequences and replays soundly on the
composition polynomial (steps on cancelled terms are no-ops).
"""

from __future__ import annotations

import functools
from collections import deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .freealg import Polynomial, Word
from .orders import LESS, OrderSpec, compare_ids
from .reduction import (DEFAULT_FUEL, FuelExhausted, Presentation,
                        ReductionStep, ReductionTrace, _decode, _encode,
                        format_polynomial, leading, normal_form)


class InconsistentAmbiguity(ValueError):
    """Raised when an ambiguity does not factor against the leading words."""


class Diverged(RuntimeError):
    """Raised when completion hits max_new; carries the partial basis and log."""

    def __init__(self, partial: Presentation, log: list["CompletionEvent"]):
        super().__init__(f"completion did not converge within {len(log)} added relations")
        self.partial = partial
        self.log = log


@dataclass(frozen=True)
class Ambiguity:
    """One overlap of two leading words: w = f̄.b = a.ḡ or w = f̄ = a.ḡ.b."""

    kind: str  # "intersection" or "inclusion"
    left_rel: int
    right_rel: int
    a: Word
    b: Word
    w: Word


@dataclass(frozen=True)
class VerificationFailure:
    """A nontrivial (or fuel-starved) composition with its evidence."""

    ambiguity: Ambiguity
    remainder: Polynomial
    trace: ReductionTrace
    reason: str = "nontrivial"  # or "fuel"


@dataclass
class VerificationReport:
    pairs_checked: int
    ambiguities_checked: int
    failures: tuple[VerificationFailure, ...]
    family_matrix: dict[tuple[str, str], int]
    order: OrderSpec = None

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json_dict(self) -> dict:
        return {
            "pairs_checked": self.pairs_checked,
            "ambiguities_checked": self.ambiguities_checked,
            "failures": [
                {
                    "kind": f.ambiguity.kind,
                    "left": f.ambiguity.left_rel,
                    "right": f.ambiguity.right_rel,
                    "w": str(f.ambiguity.w),
                    "remainder": format_polynomial(f.remainder, self.order),
                }
                for f in self.failures
            ],
            "family_matrix": {f"{i},{j}": c for (i, j), c in sorted(self.family_matrix.items())},
        }

    def summary(self) -> str:
        lines = [
            f"pairs checked: {self.pairs_checked}",
            f"ambiguities checked: {self.ambiguities_checked}",
            f"failures: {len(self.failures)}",
        ]
        for f in self.failures:
            lines.append(f"  [{f.reason}] ({f.ambiguity.left_rel},{f.ambiguity.right_rel})"
                         f" {f.ambiguity.kind} w = {f.ambiguity.w}:"
                         f" {format_polynomial(f.remainder, self.order)}")
        return "\n".join(lines)


@dataclass(frozen=True)
class MinimalityReport:
    ok: bool
    containments: tuple[tuple[int, int, int], ...]   # lead of rel j inside lead of rel i at pos
    reducible_tails: tuple[tuple[int, Word, int], ...]  # tail of rel i reducible by rel j


@dataclass(frozen=True)
class CompletionEvent:
    left_rel: int
    right_rel: int
    ambiguity: Ambiguity
    added: Polynomial
    index: int


def enumerate_ambiguities(fbar: Word, gbar: Word, left_rel: int = 0, right_rel: int = 0) -> list[Ambiguity]:
    """All compositions of the ordered pair: intersections first (overlap
    length ascending), then inclusions (position ascending)."""
    f, g = fbar.letters, gbar.letters
    if not f or not g:
        raise ValueError("leading words must be nonempty")
    out: list[Ambiguity] = []
    for t in range(1, min(len(f), len(g))):
        if f[len(f) - t:] == g[:t]:
            b = gbar[t:]
            out.append(Ambiguity("intersection", left_rel, right_rel,
                                 fbar[:len(f) - t], b, fbar * b))
    if len(g) <= len(f):
        for p in range(len(f) - len(g) + 1):
            if f[p:p + len(g)] == g:
                if left_rel == right_rel and len(g) == len(f):
                    continue  # degenerate self-inclusion: zero composition
                out.append(Ambiguity("inclusion", left_rel, right_rel,
                                     fbar[:p], fbar[p + len(g):], fbar))
    return out


def composition(f: Polynomial, g: Polynomial, amb: Ambiguity, order: OrderSpec) -> Polynomial:
    """(f,g)_w: f.b - a.g for intersections, f - a.g.b for inclusions."""
    fbar, _ = leading(f, order)
    gbar, _ = leading(g, order)
    a, b, w = amb.a, amb.b, amb.w
    if amb.kind == "intersection":
        if w != fbar * b or w != a * gbar:
            raise InconsistentAmbiguity(f"w = {w} does not factor as f̄.b = a.ḡ")
        return f.right_mul(b) - g.left_mul(a)
    if amb.kind == "inclusion":
        if w != fbar or w != a * gbar * b:
            raise InconsistentAmbiguity(f"w = {w} does not factor as f̄ = a.ḡ.b")
        return f - g.left_mul(a).right_mul(b)
    raise InconsistentAmbiguity(f"unknown ambiguity kind {amb.kind!r}")


def check_trivial(f: Polynomial, g: Polynomial, amb: Ambiguity, S: Presentation,
                  fuel: int = DEFAULT_FUEL) -> tuple[bool, ReductionTrace]:
    """Whether (f,g)_w reduces to zero modulo S; the trace is the evidence.

    When S and the composition are binomial, the two branch words are
    rewritten independently on the word fast path and their normal forms
    compared; the returned trace concatenates both rewrite sequences (it
    replays on the composition polynomial, where the sign of each branch
    is picked up from the term being rewritten).  Otherwise the
    composition is reduced on the polynomial path.
    """
    comp = composition(f, g, amb, S.order)
    if comp.is_zero():
        return True, ReductionTrace([], comp, 0)
    lead, _ = leading(comp, S.order)
    if compare_ids(S.order, lead.letters, amb.w.letters) != LESS:
        raise InconsistentAmbiguity(f"composition leading word {lead} is not below w = {amb.w}")
    if S._rules is not None and sorted(comp.terms.values()) == [Fraction(-1), Fraction(1)]:
        (pos_t,) = (t for t, c in comp.terms.items() if c == 1)
        (neg_t,) = (t for t, c in comp.terms.items() if c == -1)
        eng = S._engine()
        emit: list = []
        try:
            su, used = eng.run(_encode(pos_t), fuel, 0, emit)
            sv, used = eng.run(_encode(neg_t), fuel, used, emit)
        except FuelExhausted as e:
            raise FuelExhausted(e.fuel_used,
                                partial=Word(S.alphabet, _decode(e.partial))) from None
        steps = [ReductionStep(idx, p, Word(S.alphabet, _decode(a)), Word(S.alphabet, _decode(b)))
                 for idx, p, a, b in emit]
        result = (Polynomial.from_word(Word(S.alphabet, _decode(su)))
                  - Polynomial.from_word(Word(S.alphabet, _decode(sv))))
        return su == sv, ReductionTrace(steps, result, used)
    nf, trace = normal_form(comp, S, fuel)
    return nf.is_zero(), trace


def _scope_set(scope) -> Optional[set[tuple[str, str]]]:
    if scope is None:
        return None
    if (isinstance(scope, tuple) and len(scope) == 2
            and all(isinstance(x, str) for x in scope)):
        return {scope}
    return {tuple(p) for p in scope}


def _check_pair(S: Presentation, i: int, j: int, fuel: int):
    """Check all ambiguities of one ordered pair; returns (count, failures).

    Failures are returned as (ordinal, reason); evidence is recomputed by
    the caller on the polynomial path so that worker payloads stay small.
    """
    li, lj = S.lead(i), S.lead(j)
    ambs = enumerate_ambiguities(li, lj, i, j)
    failures: list[tuple[int, str]] = []
    if S._rules is not None:
        eng = S._engine()
        rf = _tail(S, i)
        rg = _tail(S, j)
        for o, amb in enumerate(ambs):
            if amb.kind == "intersection":
                u = amb.a.letters + rg
                v = rf + amb.b.letters
            else:
                u = amb.a.letters + rg + amb.b.letters
                v = rf
            try:
                nu, used = eng.run(_encode(u), fuel)
                nv, _ = eng.run(_encode(v), fuel, used)
            except FuelExhausted:
                failures.append((o, "fuel"))
                continue
            if nu != nv:
                failures.append((o, "nontrivial"))
        return len(ambs), failures
    for o, amb in enumerate(ambs):
        try:
            ok, _ = check_trivial(S.relations[i], S.relations[j], amb, S, fuel)
        except FuelExhausted:
            failures.append((o, "fuel"))
            continue
        if not ok:
            failures.append((o, "nontrivial"))
    return len(ambs), failures


def _tail(S: Presentation, i: int) -> tuple[int, ...]:
    """The non-leading word of a binomial relation u - v."""
    (t,) = [t for t in S.relations[i].terms if t != S._lead[i]]
    return t


_WORKER_STATE: dict = {}


def _init_worker(S: Presentation, fuel: int) -> None:
    _WORKER_STATE["S"] = S
    _WORKER_STATE["fuel"] = fuel


def _check_pair_task(pair: tuple[int, int]):
    S, fuel = _WORKER_STATE["S"], _WORKER_STATE["fuel"]
    i, j = pair
    return _check_pair(S, i, j, fuel)


def verify_gsb(S: Presentation, fuel: int = DEFAULT_FUEL,
               scope=None, jobs: int = 1) -> VerificationReport:
    """Check triviality of every composition of every ordered relation pair.

    scope, when given, is one (family_i, family_j) label pair or an
    iterable of such pairs; only matching ordered pairs are checked.
    Fuel exhaustion is recorded as a failure with reason "fuel" and never
    aborts the run.  The report does not depend on ``jobs``.
    """
    scopes = _scope_set(scope)
    fams = S.families
    m = len(S.relations)
    pairs = [(i, j) for i in range(m) for j in range(m)
             if scopes is None or (fams[i], fams[j]) in scopes]
    if jobs > 1 and len(pairs) > 1:
        with ProcessPoolExecutor(max_workers=jobs, initializer=_init_worker,
                                 initargs=(S, fuel)) as pool:
            chunk = max(1, len(pairs) // (jobs * 8))
            results = list(pool.map(_check_pair_task, pairs, chunksize=chunk))
    else:
        results = [_check_pair(S, i, j, fuel) for i, j in pairs]

    ambiguities = 0
    matrix: dict[tuple[str, str], int] = {}
    failures: list[VerificationFailure] = []
    for (i, j), (count, fails) in zip(pairs, results):
        ambiguities += count
        if count:
            key = (fams[i], fams[j])
            matrix[key] = matrix.get(key, 0) + count
        for ordinal, reason in fails:
            amb = enumerate_ambiguities(S.lead(i), S.lead(j), i, j)[ordinal]
            try:
                _, trace = check_trivial(S.relations[i], S.relations[j], amb, S, fuel)
                remainder = trace.result
            except FuelExhausted as e:
                if e.trace is not None:
                    remainder, trace = e.trace.result, e.trace
                else:
                    # word path ran dry: report the composition unreduced
                    remainder = composition(S.relations[i], S.relations[j], amb, S.order)
                    trace = ReductionTrace([], remainder, e.fuel_used)
            failures.append(VerificationFailure(amb, remainder, trace, reason))
    return VerificationReport(pairs_checked=len(pairs), ambiguities_checked=ambiguities,
                              failures=tuple(failures), family_matrix=matrix, order=S.order)


def verify_minimal(S: Presentation) -> MinimalityReport:
    """Interreducedness: no lead contains another lead; all tails irreducible."""
    leads = S._lead
    containments: list[tuple[int, int, int]] = []
    reducible: list[tuple[int, Word, int]] = []
    for i, li in enumerate(leads):
        for j, lj in enumerate(leads):
            if i == j:
                continue
            m = len(lj)
            for p in range(len(li) - m + 1):
                if li[p:p + m] == lj:
                    containments.append((i, j, p))
                    break
    for i, rel in enumerate(S.relations):
        for t in rel.terms:
            if t == leads[i]:
                continue
            hit = _reducible_by(t, S, skip=i)
            if hit is not None:
                reducible.append((i, Word(S.alphabet, t), hit))
    return MinimalityReport(ok=not containments and not reducible,
                            containments=tuple(containments),
                            reducible_tails=tuple(reducible))


def _reducible_by(word: tuple[int, ...], S: Presentation, skip: int) -> Optional[int]:
    for j, lead in enumerate(S._lead):
        if j == skip:
            continue
        m = len(lead)
        for p in range(len(word) - m + 1):
            if word[p:p + m] == lead:
                return j
    return None


def complete(S: Presentation, max_new: int = 100, fuel: int = DEFAULT_FUEL
             ) -> tuple[Presentation, list[CompletionEvent]]:
    """Shirshov completion: adjoin normal forms of nontrivial compositions.

    New relations are appended in normal form with respect to the current
    system (so their leading words are fresh) and labeled c1, c2, ...;
    earlier relations are never rewritten.  Raises Diverged when more than
    max_new additions would be needed.
    """
    cur = S
    log: list[CompletionEvent] = []
    queue: deque[tuple[int, int]] = deque(
        (i, j) for i in range(len(S.relations)) for j in range(len(S.relations)))
    while queue:
        i, j = queue.popleft()
        for amb in enumerate_ambiguities(cur.lead(i), cur.lead(j), i, j):
            comp = composition(cur.relations[i], cur.relations[j], amb, cur.order)
            if comp.is_zero():
                continue
            nf, _ = normal_form(comp, cur, fuel)
            if nf.is_zero():
                continue
            if len(log) >= max_new:
                raise Diverged(cur, log)
            _, c = leading(nf, cur.order)
            added = nf.scale(Fraction(1) / c)
            new_index = len(cur.relations)
            cur = Presentation(cur.alphabet, cur.order,
                               list(cur.relations) + [added],
                               list(cur.families) + [f"c{len(log) + 1}"],
                               order_text=cur.order_text)
            log.append(CompletionEvent(i, j, amb, added, new_index))
            for k in range(new_index):
                queue.append((k, new_index))
                queue.append((new_index, k))
            queue.append((new_index, new_index))
    return cur, log


def enumerate_irr(S: Presentation, max_len: int) -> list[Word]:
    """All words of length <= max_len avoiding every leading word, order-ascending."""
    lead_set = S._lead_set
    max_lead = S._max_lead
    alphabet_size = len(S.alphabet)
    frontier: list[tuple[int, ...]] = [()]
    all_words: list[tuple[int, ...]] = [()]
    for _ in range(max_len):
        nxt: list[tuple[int, ...]] = []
        for w in frontier:
            for x in range(alphabet_size):
                w2 = w + (x,)
                n2 = len(w2)
                # w is already clean, so any new occurrence ends at the last letter
                for ln in range(1, min(n2, max_lead) + 1):
                    if w2[n2 - ln:] in lead_set:
                        break
                else:
                    nxt.append(w2)
        frontier = nxt
        all_words.extend(nxt)
        if not frontier:
            break
    key = functools.cmp_to_key(lambda a, b: compare_ids(S.order, a, b))
    return [Word(S.alphabet, t) for t in sorted(all_words, key=key)]
