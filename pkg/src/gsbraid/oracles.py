"""Independent equality oracles for braid words.

Three cross-checks that do not touch the rewriting engine at all: the
projection B_n -> S_n, the Burau representation over Laurent polynomials
Z[t, t^-1] (unreduced, plus the reduced quotient, which is faithful for
n <= 3), and a seeded fuzzer that rewrites a word by one defining
relation without changing the group element.

Artin words are sequences of signed integers: +k for sigma_k, -k for
sigma_k^-1.  Words act left-to-right; concretely, start from the identity
arrangement (1, ..., n) and let each sigma_k^{+-1} swap the entries at
positions k, k+1.  Under this convention sigma_1 . sigma_2 maps 1 -> 2,
2 -> 3, 3 -> 1.

The reduced Burau variant is the quotient of the unreduced action by the
invariant column (1, ..., 1)^T: in the quotient basis [e_1], ..., [e_{n-1}]
the matrix entry is R[r][c] = M[r][c] - M[n][c].  Every unreduced image
fixes that column exactly, so the quotient is multiplicative.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence


class IndexOutOfRange(ValueError):
    """Raised when an Artin generator index is invalid for the strand count."""


ArtinWord = Sequence[int]


@dataclass(frozen=True)
class Permutation:
    """A bijection of {1..n}; image[i-1] is the image of i."""

    image: tuple[int, ...]

    def __post_init__(self):
        n = len(self.image)
        if sorted(self.image) != list(range(1, n + 1)):
            raise ValueError(f"not a bijection of 1..{n}: {self.image}")

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    def is_identity(self) -> bool:
        return all(v == i + 1 for i, v in enumerate(self.image))

    def then(self, other: Permutation) -> Permutation:
        """The permutation of a concatenated word u.v given those of u and v."""
        return Permutation(tuple(self.image[other.image[i] - 1] for i in range(len(self.image))))

    def __str__(self) -> str:
        return "(" + " ".join(map(str, self.image)) + ")"


def _check_index(x: int, n: int) -> int:
    k = abs(x)
    if x == 0 or k > n - 1:
        raise IndexOutOfRange(f"Artin generator index {x} invalid for n={n}")
    return k


def perm_image(w: ArtinWord, n: int) -> Permutation:
    """The image of an Artin word in S_n (sign of the generator is irrelevant)."""
    arr = list(range(1, n + 1))
    for x in w:
        k = _check_index(x, n)
        arr[k - 1], arr[k] = arr[k], arr[k - 1]
    return Permutation(tuple(arr))


class LaurentPoly:
    """A Laurent polynomial in t with exact integer coefficients.

    Stored as a map exponent -> nonzero coefficient; normalized, so
    structural equality is exact equality.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: dict[int, int] = None):
        cleaned = {e: c for e, c in (coeffs or {}).items() if c}
        self.coeffs = cleaned

    @classmethod
    def zero(cls) -> LaurentPoly:
        return cls({})

    @classmethod
    def one(cls) -> LaurentPoly:
        return cls({0: 1})

    @classmethod
    def t(cls, exponent: int = 1, coeff: int = 1) -> LaurentPoly:
        return cls({exponent: coeff})

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: LaurentPoly) -> LaurentPoly:
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly({e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other: LaurentPoly) -> LaurentPoly:
        return self + (-other)

    def __mul__(self, other: LaurentPoly) -> LaurentPoly:
        out: dict[int, int] = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly(out)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, LaurentPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(tuple(sorted(self.coeffs.items())))

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for e in sorted(self.coeffs):
            c = self.coeffs[e]
            if e == 0:
                body = str(abs(c))
            else:
                tpow = "t" if e == 1 else f"t^{e}"
                body = tpow if abs(c) == 1 else f"{abs(c)}{tpow}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly({str(self)})"


@dataclass(frozen=True)
class LaurentMatrix:
    """A square matrix of Laurent polynomials with exact arithmetic."""

    rows: tuple[tuple[LaurentPoly, ...], ...]

    @classmethod
    def identity(cls, n: int) -> LaurentMatrix:
        one, zero = LaurentPoly.one(), LaurentPoly.zero()
        return cls(tuple(tuple(one if r == c else zero for c in range(n)) for r in range(n)))

    @property
    def size(self) -> int:
        return len(self.rows)

    def __mul__(self, other: LaurentMatrix) -> LaurentMatrix:
        n = self.size
        cols = list(zip(*other.rows))
        out = []
        for r in range(n):
            row = []
            for c in range(n):
                acc = LaurentPoly.zero()
                for k in range(n):
                    acc = acc + self.rows[r][k] * cols[c][k]
                row.append(acc)
            out.append(tuple(row))
        return LaurentMatrix(tuple(out))

    def __str__(self) -> str:
        return "\n".join("[" + ", ".join(map(str, row)) + "]" for row in self.rows)


def _unreduced_generator(k: int, n: int, inverse: bool) -> LaurentMatrix:
    one, zero = LaurentPoly.one(), LaurentPoly.zero()
    rows = [[one if r == c else zero for c in range(n)] for r in range(n)]
    t = LaurentPoly.t()
    tinv = LaurentPoly.t(-1)
    i = k - 1
    if not inverse:
        rows[i][i] = one - t
        rows[i][i + 1] = t
        rows[i + 1][i] = one
        rows[i + 1][i + 1] = zero
    else:
        rows[i][i] = zero
        rows[i][i + 1] = one
        rows[i + 1][i] = tinv
        rows[i + 1][i + 1] = one - tinv
    return LaurentMatrix(tuple(tuple(row) for row in rows))


def _quotient(m: LaurentMatrix) -> LaurentMatrix:
    n = m.size
    return LaurentMatrix(tuple(
        tuple(m.rows[r][c] - m.rows[n - 1][c] for c in range(n - 1))
        for r in range(n - 1)))


_GEN_CACHE: dict[tuple[int, str], dict[int, LaurentMatrix]] = {}


def _generators(n: int, variant: str) -> dict[int, LaurentMatrix]:
    key = (n, variant)
    if key not in _GEN_CACHE:
        gens: dict[int, LaurentMatrix] = {}
        for k in range(1, n):
            for x, inv in ((k, False), (-k, True)):
                m = _unreduced_generator(k, n, inv)
                gens[x] = _quotient(m) if variant == "reduced" else m
        _GEN_CACHE[key] = gens
    return _GEN_CACHE[key]


def burau(w: ArtinWord, n: int, variant: str = "unreduced") -> LaurentMatrix:
    """The Burau image of an Artin word; a homomorphism on concatenation."""
    if variant not in ("unreduced", "reduced"):
        raise ValueError(f"unknown variant {variant!r}")
    if n < 2:
        raise ValueError("the Burau representation needs n >= 2")
    gens = _generators(n, variant)
    acc = LaurentMatrix.identity(n if variant == "unreduced" else n - 1)
    for x in w:
        _check_index(x, n)
        acc = acc * gens[x]
    return acc


def relator_perturb(w: ArtinWord, n: int, seed: int) -> tuple[int, ...]:
    """Apply one relator-derived rewrite at a random position, seeded.

    Moves: insert a cancelling pair x.x^-1; replace a.b.a by b.a.b where
    |i-j| = 1 and the three letters share a sign; swap two adjacent
    letters whose indices differ by >= 2.  The chosen move falls back to
    the next applicable one (insertion always applies), so the output is
    always a genuine rewrite of the same group element.
    """
    if n < 2:
        raise ValueError("perturbation needs n >= 2")
    w = tuple(w)
    for x in w:
        _check_index(x, n)
    rng = random.Random(seed)
    first = rng.choice(("insert", "braid", "swap"))
    moves = [first] + [m for m in ("insert", "braid", "swap") if m != first]
    for move in moves:
        if move == "braid":
            sites = [p for p in range(len(w) - 2)
                     if w[p] == w[p + 2]
                     and abs(abs(w[p]) - abs(w[p + 1])) == 1
                     and (w[p] > 0) == (w[p + 1] > 0)]
            if not sites:
                continue
            p = rng.choice(sites)
            a, b = w[p], w[p + 1]
            return w[:p] + (b, a, b) + w[p + 3:]
        if move == "swap":
            sites = [p for p in range(len(w) - 1)
                     if abs(abs(w[p]) - abs(w[p + 1])) >= 2]
            if not sites:
                continue
            p = rng.choice(sites)
            return w[:p] + (w[p + 1], w[p]) + w[p + 2:]
        pos = rng.randrange(len(w) + 1)
        k = rng.randrange(1, n)
        sgn = rng.choice((1, -1))
        return w[:pos] + (sgn * k, -sgn * k) + w[pos:]
    raise AssertionError("unreachable: insertion always applies")
