"""Close a relation system under compositions, or watch it diverge.

When a system is not yet a basis, some composition leaves a nonzero
remainder; adjoining that remainder (in normal form) as a new relation
and repeating either terminates in a basis or runs forever.  This script
closes a one-relation system in a single step, then shows a famous
one-relation system whose closure never terminates, and finally uses the
closed system to count irreducible words.
"""

from __future__ import annotations

from gsbraid.freealg import Alphabet, Letter, Polynomial
from gsbraid.gsb import Diverged, complete, enumerate_irr, verify_gsb
from gsbraid.orders import DegLex, ranking_of
from gsbraid.reduction import Presentation, format_polynomial


def binomial_system(names: str, *pairs: tuple[str, str]) -> Presentation:
    """Relations u - v over the given letters; earlier names rank higher."""
    ab = Alphabet([Letter(x) for x in reversed(names.split())])
    order = DegLex(ranking_of(range(len(ab))))
    rels = [Polynomial.from_word(ab.word(u)) - Polynomial.from_word(ab.word(v))
            for u, v in pairs]
    return Presentation(ab, order, rels)


S = binomial_system("a b", ("a b a", "b"))
print("start from the single relation  a.b.a = b  (deglex, b < a)")
done, log = complete(S)
for event in log:
    print(f"  overlap at w = {event.ambiguity.w} adjoined: "
          f"{format_polynomial(event.added, done.order)} = 0")
print(f"closed after {len(log)} addition(s); now a basis: {verify_gsb(done).ok}")

words = enumerate_irr(done, 4)
print(f"irreducible words of length <= 4: {len(words)}")
print("  " + ", ".join(str(w) for w in words[:12]) + ", ...")

print("\nnow the relation  x.x = x.y  (deglex, y < x):")
try:
    complete(binomial_system("x y", ("x x", "x y")), max_new=8)
except Diverged as stuck:
    print(f"  gave up after {len(stuck.log)} additions; the last few leads:")
    for event in stuck.log[-3:]:
        print(f"    {format_polynomial(event.added, stuck.partial.order)} = 0")
    print("  each new relation overlaps the first one again, one letter "
          "longer each time - no finite basis arises this way")
