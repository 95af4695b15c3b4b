"""Monomial orders on free-monoid words.

Four order specs are provided:

- DegLex: compare by length, then letter ranks from the first position.
- InLex: compare letter ranks from the LAST position backwards; on a
  common suffix the shorter word is smaller (the empty word is minimal).
- DegInLex: compare by length, then from the last position backwards.
- Tower: the inverse tower order over a partitioned alphabet X = Y u Z.
  A word factors uniquely as u = u_0 z_1 u_1 ... z_k u_k with z_i in Z and
  u_i free of Z letters; its inverse weight is the tuple
  inwt(u) = (k, u_k, z_k, ..., u_1, z_1, u_0), and words compare by their
  inverse weights lexicographically: k as integers, factors u_i
  recursively by the Y order (itself possibly a Tower), letters z_i by the
  Z ranking.

Rankings map letter ids to rank integers; a larger rank is a larger
letter.  Every spec is an immutable value; ``compare`` returns one of the
module constants LESS, EQUAL, GREATER.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Union

from .freealg import Word

LESS, EQUAL, GREATER = -1, 0, 1


class ForeignLetter(ValueError):
    """Raised when a word contains a letter outside the order's alphabet."""


def ranking_of(ids: Iterable[int]) -> dict[int, int]:
    """Ranking that orders the given ids ascending in iteration order."""
    return {x: r for r, x in enumerate(ids)}


@dataclass(frozen=True)
class DegLex:
    ranking: Mapping[int, int]


@dataclass(frozen=True)
class InLex:
    ranking: Mapping[int, int]


@dataclass(frozen=True)
class DegInLex:
    ranking: Mapping[int, int]


@dataclass(frozen=True)
class Tower:
    y_order: "OrderSpec"
    z_ranking: Mapping[int, int]
    z_level: int = 0

    def __post_init__(self):
        overlap = set(self.z_ranking) & domain(self.y_order)
        if overlap:
            raise ValueError(f"tower Y and Z letter sets overlap: {sorted(overlap)}")


OrderSpec = Union[DegLex, InLex, DegInLex, Tower]


@dataclass(frozen=True)
class InverseWeight:
    """The tuple (k, u_k, z_k, ..., u_1, z_1, u_0) of a word under a Tower spec.

    components holds Words at even positions and Z Letters at odd ones,
    in exactly the displayed order; components[-1] is u_0.
    """

    k: int
    components: tuple

    def reassemble(self) -> Word:
        parts = list(self.components)[::-1]  # u_0, z_1, u_1, ..., z_k, u_k
        alphabet = parts[0].alphabet
        letters: list[int] = []
        for i, piece in enumerate(parts):
            if i % 2 == 0:
                letters.extend(piece.letters)
            else:
                letters.append(alphabet.id_of(piece.name))
        return Word(alphabet, tuple(letters))


def domain(spec: OrderSpec) -> frozenset[int]:
    """The set of letter ids the spec can compare."""
    if isinstance(spec, Tower):
        return domain(spec.y_order) | frozenset(spec.z_ranking)
    return frozenset(spec.ranking)


def _split(letters: tuple[int, ...], z_ranking: Mapping[int, int]):
    """Partition a raw word into Z letters and the Z-free factors between them."""
    zs: list[int] = []
    factors: list[tuple[int, ...]] = []
    cur: list[int] = []
    for x in letters:
        if x in z_ranking:
            zs.append(x)
            factors.append(tuple(cur))
            cur = []
        else:
            cur.append(x)
    factors.append(tuple(cur))
    return zs, factors


def compare_ids(spec: OrderSpec, u: tuple[int, ...], v: tuple[int, ...]) -> int:
    """Comparison on raw letter-id tuples; membership validation is the caller's job."""
    if isinstance(spec, Tower):
        zu, fu = _split(u, spec.z_ranking)
        zv, fv = _split(v, spec.z_ranking)
        if len(zu) != len(zv):
            return LESS if len(zu) < len(zv) else GREATER
        y = spec.y_order
        zrank = spec.z_ranking
        for i in range(len(zu), 0, -1):
            c = compare_ids(y, fu[i], fv[i])
            if c:
                return c
            ru, rv = zrank[zu[i - 1]], zrank[zv[i - 1]]
            if ru != rv:
                return LESS if ru < rv else GREATER
        return compare_ids(y, fu[0], fv[0])
    rank = spec.ranking
    if isinstance(spec, (DegLex, DegInLex)):
        if len(u) != len(v):
            return LESS if len(u) < len(v) else GREATER
        pairs = zip(u, v) if isinstance(spec, DegLex) else zip(reversed(u), reversed(v))
        for a, b in pairs:
            if a != b:
                return LESS if rank[a] < rank[b] else GREATER
        return EQUAL
    # InLex: from the last letter backwards; on a common suffix, shorter is smaller
    for a, b in zip(reversed(u), reversed(v)):
        if a != b:
            return LESS if rank[a] < rank[b] else GREATER
    if len(u) != len(v):
        return LESS if len(u) < len(v) else GREATER
    return EQUAL


def _check_domain(spec: OrderSpec, w: Word) -> None:
    dom = domain(spec)
    for x in w.letters:
        if x not in dom:
            raise ForeignLetter(f"letter {w.alphabet.letters[x].name!r} is outside the order's alphabet")


def compare(spec: OrderSpec, u: Word, v: Word) -> int:
    """Strict total order; returns LESS, EQUAL, or GREATER (EQUAL iff u = v letterwise)."""
    _check_domain(spec, u)
    _check_domain(spec, v)
    return compare_ids(spec, u.letters, v.letters)


def decompose(spec: Tower, w: Word) -> InverseWeight:
    """The inverse weight of w under a Tower spec."""
    if not isinstance(spec, Tower):
        raise TypeError("decompose requires a Tower spec")
    _check_domain(spec, w)
    zs, factors = _split(w.letters, spec.z_ranking)
    alphabet = w.alphabet
    components: list = [Word(alphabet, factors[-1])]
    for i in range(len(zs), 0, -1):
        if i < len(zs):
            components.append(Word(alphabet, factors[i]))
        components.append(alphabet.letters[zs[i - 1]])
    # components currently (u_k, z_k, u_{k-1}, ..., z_1); append u_0
    if zs:
        components.append(Word(alphabet, factors[0]))
    return InverseWeight(k=len(zs), components=tuple(components))


def is_monomial_witness(spec: OrderSpec, u: Word, v: Word, a: Word, b: Word) -> bool:
    """One probe of the monomial-order property: compare(u,v) == compare(a.u.b, a.v.b)."""
    return compare(spec, u, v) == compare(spec, a * u * b, a * v * b)
