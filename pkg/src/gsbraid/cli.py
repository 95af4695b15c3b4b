"""Command-line front end.

Subcommands: verify-gsb, nf, compositions, complete, irr,
dump-presentation.  A presentation comes either from --n (the braid
system for n strands) or from --presentation FILE; the two are mutually
exclusive.

Presentation file grammar (clauses separated by newlines or ';', comments
start with '#'):

    letters: a > b > c          ranked declaration, greatest first
    inv(a, b)                   a and b are inverse partners
    level(a) = 2                block level (0 if omitted)
    order: deglex               order spec, see below
    LHS = RHS                   one relation per clause; '.' concatenates
                                letters and '1' is the empty word

Order specs:  deglex | inlex | deginlex, optionally with a letter group
in parentheses, or tower(SPEC, GROUP, ...).  A group is ``sigma`` or
``S<k>`` or ``L<k>`` (the letters of level 1 resp. level k) or ``all``;
a base spec without a group covers every letter not claimed by an
enclosing tower.  Tower groups are listed innermost first, so the braid
scheme order reads ``tower(deginlex(S3), S2, sigma)``.

Exit codes: 0 success; 1 verification failure (a nontrivial composition,
or completion diverged); 2 parse or usage error; 3 fuel exhausted (every
reported failure ran out of fuel, or nf/complete hit the fuel bound).

JSON reports (--json) are schema-stable and byte-identical for every
--jobs setting.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from typing import Optional, Sequence

from .braid import artin_markov, artin_to_s, braid_scheme
from .freealg import Alphabet, Letter, Word
from .gsb import (Diverged, check_trivial, enumerate_ambiguities,
                  enumerate_irr, verify_gsb)
from .orders import DegInLex, DegLex, InLex, OrderSpec, Tower, ranking_of
from .reduction import (DEFAULT_FUEL, FuelExhausted, NotBinomial,
                        OrientationError, Presentation, ZeroPolynomial,
                        format_polynomial, word_nf)


class ParseError(ValueError):
    """A presentation-text error, carrying the 1-based source line."""

    def __init__(self, line: int, reason: str):
        super().__init__(f"line {line}: {reason}")
        self.line = line
        self.reason = reason


_INV_RE = re.compile(r"^inv\(\s*([^\s,()]+)\s*,\s*([^\s,()]+)\s*\)$")
_LEVEL_RE = re.compile(r"^level\(\s*([^\s,()]+)\s*\)\s*=\s*(-?\d+)$")


def _parse_order_text(text: str, line: int, alphabet: Alphabet) -> OrderSpec:
    tokens = re.findall(r"[A-Za-z_]\w*|[(),]", text)
    pos = 0

    def peek() -> Optional[str]:
        return tokens[pos] if pos < len(tokens) else None

    def take(expected: Optional[str] = None) -> str:
        nonlocal pos
        if pos >= len(tokens):
            raise ParseError(line, f"order spec ended unexpectedly in {text!r}")
        tok = tokens[pos]
        if expected is not None and tok != expected:
            raise ParseError(line, f"expected {expected!r}, found {tok!r} in order spec")
        pos += 1
        return tok

    def group_ids(name: str) -> list[int]:
        low = name.lower()
        if low == "all":
            return list(range(len(alphabet)))
        if low == "sigma":
            level = 1
        elif low[0] in "sl" and low[1:].isdigit():
            level = int(low[1:])
        else:
            raise ParseError(line, f"unknown letter group {name!r}")
        ids = [i for i in range(len(alphabet)) if alphabet.levels[i] == level]
        if not ids:
            raise ParseError(line, f"letter group {name!r} is empty")
        return ids

    def parse_expr() -> tuple:
        head = take().lower()
        if head == "tower":
            take("(")
            inner = parse_expr()
            groups = []
            while peek() == ",":
                take(",")
                groups.append(take())
            take(")")
            if not groups:
                raise ParseError(line, "tower needs at least one letter group")
            return ("tower", inner, groups)
        if head not in ("deglex", "inlex", "deginlex"):
            raise ParseError(line, f"unknown order {head!r}")
        group = None
        if peek() == "(":
            take("(")
            group = take()
            take(")")
        return (head, group)

    tree = parse_expr()
    if pos != len(tokens):
        raise ParseError(line, f"trailing tokens in order spec {text!r}")

    base_classes = {"deglex": DegLex, "inlex": InLex, "deginlex": DegInLex}

    def bind(node: tuple, taken: set[int]) -> OrderSpec:
        if node[0] == "tower":
            _, inner, groups = node
            resolved = [group_ids(gname) for gname in groups]
            claimed = set().union(*[set(r) for r in resolved])
            spec = bind(inner, taken | claimed)
            for gname, ids in zip(groups, resolved):
                levels = {alphabet.levels[i] for i in ids}
                spec = Tower(spec, ranking_of(sorted(ids)),
                             z_level=levels.pop() if len(levels) == 1 else 0)
            return spec
        head, gname = node
        if gname is None:
            ids = [i for i in range(len(alphabet)) if i not in taken]
        else:
            ids = group_ids(gname)
        return base_classes[head](ranking_of(sorted(ids)))

    return bind(tree, set())


def parse_presentation(text: str) -> Presentation:
    """Parse the presentation file grammar; see the module docstring."""
    letters_decl: Optional[list[str]] = None
    letters_line = 0
    inverses: dict[str, str] = {}
    levels: dict[str, int] = {}
    order_clause: Optional[tuple[int, str]] = None
    relation_clauses: list[tuple[int, str]] = []

    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        for clause in body.split(";"):
            clause = clause.strip()
            if not clause:
                continue
            if clause.startswith("letters:"):
                if letters_decl is not None:
                    raise ParseError(lineno, "duplicate letters declaration")
                names = [p.strip() for p in clause[len("letters:"):].split(">")]
                if any(not p for p in names):
                    raise ParseError(lineno, "empty name in letters declaration")
                letters_decl, letters_line = names, lineno
                continue
            if clause.startswith("order:"):
                if order_clause is not None:
                    raise ParseError(lineno, "duplicate order declaration")
                order_clause = (lineno, clause[len("order:"):].strip())
                continue
            m = _INV_RE.match(clause)
            if m:
                a, b = m.group(1), m.group(2)
                if inverses.setdefault(a, b) != b or inverses.setdefault(b, a) != a:
                    raise ParseError(lineno, f"conflicting inverse pairing for {a!r}/{b!r}")
                continue
            m = _LEVEL_RE.match(clause)
            if m:
                levels[m.group(1)] = int(m.group(2))
                continue
            if "=" in clause:
                relation_clauses.append((lineno, clause))
                continue
            raise ParseError(lineno, f"cannot parse clause {clause!r}")

    if letters_decl is None:
        raise ParseError(1, "missing letters declaration")
    if len(set(letters_decl)) != len(letters_decl):
        raise ParseError(letters_line, "duplicate letter in letters declaration")
    for name in list(inverses) + list(levels):
        if name not in letters_decl:
            raise ParseError(letters_line, f"undeclared letter {name!r} in header")
    ascending = list(reversed(letters_decl))
    alphabet = Alphabet([
        Letter(name, level=levels.get(name, 0), inverse=inverses.get(name))
        for name in ascending
    ])
    if order_clause is None:
        raise ParseError(letters_line, "missing order declaration")
    order = _parse_order_text(order_clause[1], order_clause[0], alphabet)

    def parse_word(tok: str, lineno: int) -> Word:
        tok = tok.strip()
        if tok == "1":
            return alphabet.empty_word()
        names = [p.strip() for p in tok.split(".")]
        for nm in names:
            if nm == "1":
                raise ParseError(lineno, "'1' cannot appear inside a product")
            if nm not in alphabet:
                raise ParseError(lineno, f"undeclared letter {nm!r}")
        return alphabet.word(names)

    pairs: list[tuple[Word, Word]] = []
    for lineno, clause in relation_clauses:
        left, _, right = clause.partition("=")
        if not left.strip() or not right.strip():
            raise ParseError(lineno, f"malformed relation {clause!r}")
        pairs.append((parse_word(left, lineno), parse_word(right, lineno)))

    return Presentation.from_oriented(alphabet, order, pairs,
                                      order_text=order_clause[1])


def dump_presentation(S: Presentation, title: Optional[str] = None) -> str:
    """Render a binomial presentation in the parseable file format."""
    if S._rules is None:
        raise NotBinomial("only binomial presentations have a textual dump")
    lines: list[str] = []
    if title:
        lines.append(f"# {title}")
    names = [let.name for let in S.alphabet.letters]
    lines.append("letters: " + " > ".join(reversed(names)))
    seen = set()
    inv_clauses = []
    for i, let in enumerate(S.alphabet.letters):
        if let.inverse is not None and i not in seen:
            j = S.alphabet.inverse[i]
            seen.update((i, j))
            inv_clauses.append(f"inv({let.name}, {let.inverse})")
    if inv_clauses:
        lines.append("; ".join(inv_clauses))
    level_clauses = [f"level({let.name})={let.level}" for let in S.alphabet.letters if let.level]
    if level_clauses:
        lines.append("; ".join(level_clauses))
    order_text = S.order_text or _format_order(S.order, S.alphabet)
    lines.append(f"order: {order_text}")
    for i in range(len(S.relations)):
        lhs = " . ".join(S.lead(i).names()) or "1"
        tail = [t for t in S.relations[i].terms if t != S._lead[i]][0]
        rhs = " . ".join(S.alphabet.letters[x].name for x in tail) or "1"
        lines.append(f"{lhs} = {rhs}")
    return "\n".join(lines) + "\n"


def _format_order(spec: OrderSpec, alphabet: Alphabet) -> str:
    def group_name(ids) -> str:
        levels = {alphabet.levels[i] for i in ids}
        if len(levels) == 1:
            lv = levels.pop()
            return "sigma" if lv == 1 else f"S{lv}"
        return "all"

    if isinstance(spec, Tower):
        groups = []
        node = spec
        while isinstance(node, Tower):
            groups.append(group_name(node.z_ranking))
            node = node.y_order
        return f"tower({_format_order(node, alphabet)}, " + ", ".join(reversed(groups)) + ")"
    name = {DegLex: "deglex", InLex: "inlex", DegInLex: "deginlex"}[type(spec)]
    if set(spec.ranking) == set(range(len(alphabet))):
        return name
    return f"{name}({group_name(spec.ranking)})"


def _json_out(payload: dict) -> None:
    sys.stdout.write(json.dumps(payload, sort_keys=True, indent=2) + "\n")


def _load_presentation(args) -> tuple[Presentation, Optional[int]]:
    if args.n is not None:
        if args.n < 2:
            raise ParseError(0, "--n must be at least 2")
        return artin_markov(args.n), args.n
    with open(args.presentation, "r", encoding="utf-8") as fh:
        text = fh.read()
    S = parse_presentation(text)
    if args.order:
        order = _parse_order_text(args.order, 0, S.alphabet)
        # re-validate the file's declared sides against the override order:
        # flipping a relation silently would change which side rewrites
        pairs = []
        for i in range(len(S.relations)):
            (tail,) = [t for t in S.relations[i].terms if t != S._lead[i]]
            pairs.append((S.lead(i), Word(S.alphabet, tail)))
        S = Presentation.from_oriented(S.alphabet, order, pairs, S.families,
                                       order_text=args.order)
    return S, None


def _scope_arg(args) -> Optional[tuple[str, str]]:
    if not args.scope:
        return None
    parts = [p.strip() for p in args.scope.split(",")]
    if len(parts) != 2 or not all(parts):
        raise ParseError(0, f"--scope must be 'FAM,FAM', got {args.scope!r}")
    return (parts[0], parts[1])


def _cmd_verify(args) -> int:
    S, _ = _load_presentation(args)
    report = verify_gsb(S, fuel=args.fuel, scope=_scope_arg(args), jobs=args.jobs)
    if args.json:
        _json_out(report.to_json_dict())
    else:
        print(report.summary())
    if report.ok:
        return 0
    return 3 if all(f.reason == "fuel" for f in report.failures) else 1


def _parse_cli_word(text: str, S: Presentation, n: Optional[int]) -> Word:
    tokens = text.split()
    if n is None:
        for tok in tokens:
            if tok not in S.alphabet:
                raise ParseError(0, f"undeclared letter {tok!r} in --word")
        return S.alphabet.word(tokens)
    scheme = braid_scheme(n)
    ids: list[int] = []
    for tok in tokens:
        if tok in scheme.alphabet:
            ids.append(scheme.alphabet.id_of(tok))
        elif re.fullmatch(r"g\d+", tok):
            k = int(tok[1:])
            if not 1 <= k <= n - 1:
                raise ParseError(0, f"generator {tok!r} out of range for n={n}")
            ids.extend(artin_to_s((k,), scheme).letters)
        else:
            raise ParseError(0, f"cannot read token {tok!r} as a letter for n={n}")
    return Word(scheme.alphabet, tuple(ids))


def _cmd_nf(args) -> int:
    S, n = _load_presentation(args)
    word = _parse_cli_word(args.word, S, n)
    result = word_nf(word, S, fuel=args.fuel, strategy=args.strategy)
    if args.json:
        _json_out({"input": args.word, "normal_form": str(result)})
    else:
        print(result)
    return 0


def _cmd_compositions(args) -> int:
    S, _ = _load_presentation(args)
    scope = _scope_arg(args)
    fams = S.families
    instances = []
    exhausted = 0
    nontrivial = 0
    for i in range(len(S.relations)):
        for j in range(len(S.relations)):
            if scope is not None and (fams[i], fams[j]) != scope:
                continue
            for amb in enumerate_ambiguities(S.lead(i), S.lead(j), i, j):
                try:
                    ok, trace = check_trivial(S.relations[i], S.relations[j], amb, S, args.fuel)
                    reason = None if ok else "nontrivial"
                except FuelExhausted as e:
                    ok, trace = False, e.trace
                    reason = "fuel"
                if not ok:
                    if reason == "fuel":
                        exhausted += 1
                    else:
                        nontrivial += 1
                if ok:
                    remainder = "0"
                elif trace is not None:
                    remainder = format_polynomial(trace.result, S.order)
                else:
                    remainder = "(fuel exhausted)"
                instances.append({
                    "families": f"{fams[i]},{fams[j]}",
                    "kind": amb.kind,
                    "left": i,
                    "right": j,
                    "w": str(amb.w),
                    "trivial": ok,
                    "remainder": remainder,
                })
    if args.json:
        _json_out({"scope": f"{scope[0]},{scope[1]}" if scope else "all",
                   "ambiguities_checked": len(instances),
                   "instances": instances})
    else:
        for inst in instances:
            status = "trivial" if inst["trivial"] else f"NONTRIVIAL: {inst['remainder']}"
            print(f"({inst['families']}) {inst['kind']} w = {inst['w']} -> {status}")
        print(f"ambiguities checked: {len(instances)}, nontrivial: {nontrivial}")
    if nontrivial:
        return 1
    return 3 if exhausted else 0


def _cmd_complete(args) -> int:
    from .gsb import complete as run_complete
    S, n = _load_presentation(args)
    try:
        result, log = run_complete(S, max_new=args.max_new, fuel=args.fuel)
        converged = True
    except Diverged as e:
        result, log = e.partial, e.log
        converged = False
    if args.json:
        _json_out({
            "converged": converged,
            "added": [{"index": ev.index,
                       "relation": format_polynomial(ev.added, S.order),
                       "from_pair": [ev.left_rel, ev.right_rel],
                       "w": str(ev.ambiguity.w)} for ev in log],
            "relations": len(result.relations),
        })
    else:
        for ev in log:
            print(f"added [{ev.index}] {format_polynomial(ev.added, S.order)}"
                  f"  (from pair {ev.left_rel},{ev.right_rel} at w = {ev.ambiguity.w})")
        print(f"{'converged' if converged else 'DIVERGED'}: "
              f"{len(result.relations)} relations, {len(log)} added")
    return 0 if converged else 1


def _cmd_irr(args) -> int:
    S, _ = _load_presentation(args)
    words = enumerate_irr(S, args.max_len)
    if args.json:
        _json_out({"max_len": args.max_len, "count": len(words),
                   "words": [str(w) for w in words]})
    else:
        for w in words:
            print(w)
    return 0


def _cmd_dump(args) -> int:
    S, n = _load_presentation(args)
    title = f"braid relation system, n = {n}" if n is not None else "presentation"
    if args.json:
        _json_out({
            "title": title,
            "letters": [let.name for let in reversed(S.alphabet.letters)],
            "order": S.order_text or _format_order(S.order, S.alphabet),
            "relations": [{"lhs": str(S.lead(i)), "family": S.families[i]}
                          for i in range(len(S.relations))],
        })
    else:
        sys.stdout.write(dump_presentation(S, title))
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gsbraid",
        description="Groebner-Shirshov basis verification and braid normal forms.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, word=False, max_len=False, max_new=False):
        src = p.add_mutually_exclusive_group(required=True)
        src.add_argument("--n", type=int, help="strand count; use the braid system")
        src.add_argument("--presentation", help="presentation file")
        p.add_argument("--order", help="order spec, overrides the file's order")
        p.add_argument("--fuel", type=int, default=DEFAULT_FUEL, help="reduction step budget")
        p.add_argument("--jobs", type=int, default=1, help="parallel worker count")
        p.add_argument("--scope", help="family pair filter 'iFAM,jFAM'")
        p.add_argument("--json", action="store_true", help="machine-readable report")
        if word:
            p.add_argument("--word", required=True, help="whitespace-separated letters")
            p.add_argument("--strategy", default="rightmost",
                           choices=("canonical", "leftmost", "rightmost"),
                           help="rewriting schedule (rightmost scales to long words)")
        if max_len:
            p.add_argument("--max-len", type=int, required=True, dest="max_len")
        if max_new:
            p.add_argument("--max-new", type=int, default=100, dest="max_new",
                           help="completion addition budget")

    add_common(sub.add_parser("verify-gsb", help="check all compositions"))
    add_common(sub.add_parser("nf", help="normal form of a word"), word=True)
    add_common(sub.add_parser("compositions", help="list compositions, optionally scoped"))
    add_common(sub.add_parser("complete", help="Shirshov completion"), max_new=True)
    add_common(sub.add_parser("irr", help="irreducible words up to a length"), max_len=True)
    add_common(sub.add_parser("dump-presentation", help="print the presentation file"))
    return parser


_HANDLERS = {
    "verify-gsb": _cmd_verify,
    "nf": _cmd_nf,
    "compositions": _cmd_compositions,
    "complete": _cmd_complete,
    "irr": _cmd_irr,
    "dump-presentation": _cmd_dump,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code not in (0, None) else 0
    try:
        return _HANDLERS[args.command](args)
    except (ParseError, OrientationError, NotBinomial, ZeroPolynomial, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except FuelExhausted as e:
        print(f"error: {e}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
