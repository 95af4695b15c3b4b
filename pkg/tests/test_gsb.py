"""Tests for composition enumeration, triviality, verification, completion."""

from __future__ import annotations

import pytest

from gsbraid.braid import artin_markov, braid_scheme
from gsbraid.freealg import Alphabet, Letter, Polynomial, Word
from gsbraid.gsb import (
    Ambiguity,
    Diverged,
    InconsistentAmbiguity,
    check_trivial,
    complete,
    composition,
    enumerate_ambiguities,
    enumerate_irr,
    verify_gsb,
    verify_minimal,
)
from gsbraid.orders import DegLex, ranking_of
from gsbraid.reduction import FuelExhausted, Presentation

S3 = artin_markov(3)
SCH3 = braid_scheme(3)
W3 = SCH3.alphabet.word


def _toy(names: str):
    """Alphabet from space-separated names, deglex with rank = listed position."""
    ab = Alphabet([Letter(x) for x in names.split()])
    return ab, DegLex(ranking_of(range(len(ab))))


def _binomial(ab, order, *pairs):
    rels = [Polynomial.from_word(ab.word(u)) - Polynomial.from_word(ab.word(v))
            for u, v in pairs]
    return Presentation(ab, order, rels)


# --- enumerate_ambiguities ------------------------------------------------

def test_ambiguities_intersections_come_first_overlap_ascending():
    ab, _ = _toy("a")
    w = ab.word("a a a")
    ambs = enumerate_ambiguities(w, w, 0, 1)
    # overlaps of length 1 and 2, then the inclusion at position 0
    assert [x.kind for x in ambs] == ["intersection", "intersection", "inclusion"]
    assert [len(x.w) for x in ambs] == [5, 4, 3]


def test_ambiguities_degenerate_self_inclusion_is_dropped():
    ab, _ = _toy("a")
    w = ab.word("a a a")
    ambs = enumerate_ambiguities(w, w, 2, 2)
    assert [x.kind for x in ambs] == ["intersection", "intersection"]


def test_ambiguities_inclusions_position_ascending_with_factors():
    ab, _ = _toy("a b")
    f = ab.word("a b a b a")
    g = ab.word("a b a")
    ambs = enumerate_ambiguities(f, g, 0, 1)
    assert [x.kind for x in ambs] == ["intersection", "inclusion", "inclusion"]
    inter, inc0, inc2 = ambs
    assert (inter.a, inter.b, inter.w) == (ab.word("a b a b"), ab.word("b a"),
                                           ab.word("a b a b a b a"))
    assert (inc0.a, inc0.b) == (ab.empty_word(), ab.word("b a"))
    assert (inc2.a, inc2.b) == (ab.word("a b"), ab.empty_word())
    assert inc0.w == inc2.w == f


def test_ambiguities_require_nonempty_words():
    ab, _ = _toy("a")
    with pytest.raises(ValueError):
        enumerate_ambiguities(ab.empty_word(), ab.word("a"))


def test_no_ambiguities_between_disjoint_words():
    ab, _ = _toy("a b")
    assert enumerate_ambiguities(ab.word("a a"), ab.word("b b"), 0, 1) == []


# --- composition ----------------------------------------------------------

def test_intersection_composition_value():
    ab, order = _toy("a b")
    S = _binomial(ab, order, ("b a", "a"), ("a b", "b"))
    (amb,) = enumerate_ambiguities(S.lead(0), S.lead(1), 0, 1)
    comp = composition(S.relations[0], S.relations[1], amb, order)
    # (ba - a).b - b.(ab - b) = bb - ab
    expected = (Polynomial.from_word(ab.word("b b"))
                - Polynomial.from_word(ab.word("a b")))
    assert comp == expected


def test_inclusion_composition_value():
    ab, order = _toy("a b")
    S = _binomial(ab, order, ("a b a", "b"), ("b", "a"))
    ambs = enumerate_ambiguities(S.lead(0), S.lead(1), 0, 1)
    (inc,) = [x for x in ambs if x.kind == "inclusion"]
    comp = composition(S.relations[0], S.relations[1], inc, order)
    # (aba - b) - a.(b - a).a = aaa - b
    expected = (Polynomial.from_word(ab.word("a a a"))
                - Polynomial.from_word(ab.word("b")))
    assert comp == expected


def test_composition_rejects_inconsistent_factorization():
    ab, order = _toy("a b")
    S = _binomial(ab, order, ("a a", "b"))
    bogus = Ambiguity("intersection", 0, 0, ab.word("a"), ab.word("a"), ab.word("a a b"))
    with pytest.raises(InconsistentAmbiguity):
        composition(S.relations[0], S.relations[0], bogus, order)


def test_composition_rejects_unknown_kind():
    ab, order = _toy("a b")
    S = _binomial(ab, order, ("a a", "b"))
    bogus = Ambiguity("overlap", 0, 0, ab.word("a"), ab.word("a"), ab.word("a a a"))
    with pytest.raises(InconsistentAmbiguity):
        composition(S.relations[0], S.relations[0], bogus, order)


def test_braid_composition_concrete_value():
    # the far-commutation lead g1^-1 g3^-1 meets the square lead g3^-1 g3^-1
    S = artin_markov(4)
    w4 = braid_scheme(4).alphabet.word
    i = next(k for k in range(len(S.relations)) if S.families[k] == "14")
    j = next(k for k in range(len(S.relations))
             if S.families[k] == "16" and S.lead(k) == w4("g3^-1 g3^-1"))
    (amb,) = enumerate_ambiguities(S.lead(i), S.lead(j), i, j)
    assert amb.kind == "intersection" and amb.w == w4("g1^-1 g3^-1 g3^-1")
    comp = composition(S.relations[i], S.relations[j], amb, S.order)
    expected = (Polynomial.from_word(w4("g1^-1 s34^-1"))
                - Polynomial.from_word(w4("g3^-1 g1^-1 g3^-1")))
    assert comp == expected
    ok, trace = check_trivial(S.relations[i], S.relations[j], amb, S)
    assert ok and trace.result.is_zero()
    assert trace.replay(comp, S).is_zero()


# --- check_trivial --------------------------------------------------------

def test_check_trivial_zero_composition_short_circuits():
    ab, order = _toy("a b")
    rel = (Polynomial.from_word(ab.word("a a"))
           - Polynomial.from_word(ab.word("b")))
    S = Presentation(ab, order, [rel, rel])
    inc = Ambiguity("inclusion", 0, 1, ab.empty_word(), ab.empty_word(), ab.word("a a"))
    ok, trace = check_trivial(S.relations[0], S.relations[1], inc, S)
    assert ok and trace.steps == [] and trace.fuel_used == 0


def test_check_trivial_nontrivial_remainder_on_polynomial_path():
    # non-unit coefficients force the polynomial path even in a binomial system
    ab, order = _toy("y x")
    rel = (Polynomial.from_word(ab.word("x x"))
           - Polynomial.from_word(ab.word("y y"), 2))
    S = Presentation(ab, order, [rel])
    (amb,) = enumerate_ambiguities(S.lead(0), S.lead(0), 0, 0)
    ok, trace = check_trivial(S.relations[0], S.relations[0], amb, S)
    assert not ok
    expected = (Polynomial.from_word(ab.word("x y y"), 2)
                - Polynomial.from_word(ab.word("y y x"), 2))
    assert trace.result == expected


def test_check_trivial_fuel_exhaustion_carries_partial_word():
    S = artin_markov(4)
    i = next(k for k in range(len(S.relations)) if S.families[k] == "14")
    j = next(k for k in range(len(S.relations))
             if S.families[k] == "16" and S.lead(k)[0] == S.lead(i)[1])
    (amb,) = enumerate_ambiguities(S.lead(i), S.lead(j), i, j)
    with pytest.raises(FuelExhausted) as exc:
        check_trivial(S.relations[i], S.relations[j], amb, S, fuel=1)
    assert exc.value.trace is None
    assert isinstance(exc.value.partial, Word)


# --- verify_gsb -----------------------------------------------------------

def test_verification_clean_on_three_strands():
    report = verify_gsb(S3)
    assert report.ok
    assert report.pairs_checked == len(S3.relations) ** 2 == 841
    assert report.ambiguities_checked == 73
    assert report.failures == ()
    assert sum(report.family_matrix.values()) == 73
    assert report.family_matrix[("16", "16")] == 2
    assert report.family_matrix[("17", "17")] == 6
    assert ("1", "1") not in report.family_matrix


def test_verification_report_is_worker_count_independent():
    seq = verify_gsb(S3)
    par = verify_gsb(S3, jobs=2)
    assert (par.pairs_checked, par.ambiguities_checked) == (841, 73)
    assert par.failures == seq.failures == ()
    assert par.family_matrix == seq.family_matrix


def test_verification_scope_restricts_pairs():
    report = verify_gsb(S3, scope=("16", "2"))
    assert report.ok
    assert report.pairs_checked == 8          # two squares x four commutations
    assert report.ambiguities_checked == 4    # g_i^-1 g_i^-1 s_{i,i+1}^{+-1}
    assert report.family_matrix == {("16", "2"): 4}


def test_verification_scope_accepts_iterables_of_pairs():
    report = verify_gsb(S3, scope=[("16", "2"), ("16", "17")])
    assert report.ok
    assert report.pairs_checked == 8 + 12
    assert report.ambiguities_checked == 4    # squares never meet cancellations


def test_verification_flags_missing_commutation_family():
    keep = [i for i in range(len(S3.relations)) if S3.families[i] != "2"]
    crippled = Presentation(S3.alphabet, S3.order,
                            [S3.relations[i] for i in keep],
                            [S3.families[i] for i in keep],
                            order_text=S3.order_text)
    report = verify_gsb(crippled)
    assert not report.ok
    assert all(f.reason == "nontrivial" and not f.remainder.is_zero()
               for f in report.failures)
    fams = crippled.families
    expected = (Polynomial.from_word(W3("g1^-1 s12^-1"))
                - Polynomial.from_word(W3("s12^-1 g1^-1")))
    assert any(fams[f.ambiguity.left_rel] == fams[f.ambiguity.right_rel] == "16"
               and f.remainder == expected
               for f in report.failures)
    text = report.summary()
    assert "failures: %d" % len(report.failures) in text and "[nontrivial]" in text
    blob = report.to_json_dict()
    assert blob["pairs_checked"] == len(keep) ** 2
    assert len(blob["failures"]) == len(report.failures)
    assert all(set(e) == {"kind", "left", "right", "w", "remainder"}
               for e in blob["failures"])


# --- verify_minimal -------------------------------------------------------

def test_braid_bases_are_interreduced():
    assert verify_minimal(S3) == verify_minimal(S3)  # deterministic
    assert verify_minimal(S3).ok
    assert verify_minimal(artin_markov(4)).ok


def test_minimality_detects_lead_containment():
    ab, order = _toy("a b")
    S = _binomial(ab, order, ("b a b", "a"), ("a b", "a"))
    report = verify_minimal(S)
    assert not report.ok
    assert report.containments == ((0, 1, 1),)
    assert report.reducible_tails == ()


def test_minimality_detects_reducible_tail():
    ab, order = _toy("y x")
    S = _binomial(ab, order, ("x x", "y y"), ("y y", "x"))
    report = verify_minimal(S)
    assert not report.ok
    assert report.containments == ()
    assert report.reducible_tails == ((0, ab.word("y y"), 1),)


# --- complete -------------------------------------------------------------

def test_completion_closes_single_overlap_system():
    ab, order = _toy("b a")  # b < a, so abb leads bba
    S = _binomial(ab, order, ("a b a", "b"))
    done, log = complete(S)
    assert len(log) == 1 and len(done.relations) == 2
    event = log[0]
    assert (event.left_rel, event.right_rel, event.index) == (0, 0, 1)
    assert event.ambiguity.w == ab.word("a b a b a")
    expected = (Polynomial.from_word(ab.word("a b b"))
                - Polynomial.from_word(ab.word("b b a")))
    assert event.added == expected
    assert done.families == ("1", "c1")
    assert verify_gsb(done).ok


def test_completion_is_a_no_op_on_a_closed_system():
    done, log = complete(artin_markov(2))
    assert log == [] and done == artin_markov(2)


def test_completion_divergence_reports_partial_progress():
    ab, order = _toy("y x")
    S = _binomial(ab, order, ("x x", "x y"))
    with pytest.raises(Diverged) as exc:
        complete(S, max_new=5)
    assert len(exc.value.log) == 5
    assert len(exc.value.partial.relations) == 6
    # every adjoined relation is monic and genuinely new
    leads = {exc.value.partial.lead(i) for i in range(6)}
    assert len(leads) == 6


# --- enumerate_irr --------------------------------------------------------

def test_irreducible_words_up_to_length_one():
    words = enumerate_irr(S3, 1)
    assert [str(w) for w in words] == [
        "1", "s13^-1", "s13", "s23^-1", "s23", "s12^-1", "s12", "g1^-1", "g2^-1"]


def test_irreducible_word_count_up_to_length_two():
    # 28 of the 64 two-letter words are leading words of relations
    assert len(enumerate_irr(S3, 2)) == 9 + (64 - 28)


def test_irreducible_enumeration_stops_when_frontier_empties():
    ab, order = _toy("x")
    S = _binomial(ab, order, ("x x", "x"))
    words = enumerate_irr(S, 10)
    assert [str(w) for w in words] == ["1", "x"]
