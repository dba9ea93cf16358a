import json
import random

import pytest

from platkit.braids import BraidWord, free_reduce
from platkit.errors import StrandMismatchError
from platkit.invariants import certificate
from platkit.plats import apply_move, hilden_generators, plat_closure, stabilize
from platkit.search import (DestabilizationFound, DistinctCertificates,
                            Exhausted, Found, Move, MoveTrace, SearchBudget,
                            apply_move_to_word, default_budget,
                            destabilization_search, equivalence_search,
                            verify_trace)

from conftest import CORPUS_25, random_plat


def scramble(rng, p, moves):
    names = hilden_generators(p.bridges).names()
    for _ in range(moves):
        p = apply_move(p, rng.choice(("top", "bottom")), rng.choice(names),
                       inverse=rng.choice((False, True)))
    return p


# -- budgets --------------------------------------------------------------------

def test_budget_validation():
    with pytest.raises(ValueError):
        SearchBudget(max_nodes=0)
    with pytest.raises(ValueError):
        SearchBudget(max_seconds=-1)
    b = SearchBudget()
    assert b.resolved_length(10) == 18


def test_budget_env_override(monkeypatch):
    monkeypatch.setenv("PLATKIT_BUDGET_NODES", "1234")
    assert default_budget().max_nodes == 1234
    monkeypatch.delenv("PLATKIT_BUDGET_NODES")
    assert default_budget().max_nodes == 1_000_000


# -- moves / traces ----------------------------------------------------------------

def test_move_json_round_trip():
    moves = [
        Move("hilden-left", ("cross_1", True)),
        Move("hilden-right", ("sigma1", False)),
        Move("braid-relation", ("commute", 3)),
        Move("free-insert", (0, 2)),
        Move("free-delete", (4,)),
    ]
    for m in moves:
        assert Move.from_json_dict(json.loads(json.dumps(m.to_json_dict()))) == m


def test_apply_move_to_word_kinds():
    w = free_reduce(BraidWord(4, (1, 3)))
    out = apply_move_to_word(w, Move("hilden-left", ("sigma1", False)))
    assert out.letters == (1, 1, 3)
    out = apply_move_to_word(w, Move("braid-relation", ("commute", 0)))
    assert out.letters == (3, 1)
    out = apply_move_to_word(w, Move("free-insert", (1, 2)))
    assert out.letters == (1, 3)  # the inserted pair cancels on reduction
    with pytest.raises(ValueError):
        apply_move_to_word(w, Move("free-delete", (0,)))
    with pytest.raises(ValueError):
        apply_move_to_word(w, Move("braid-relation", ("triangle", 0)))


def test_empty_trace_verifies():
    p = plat_closure(BraidWord(4, (1,)))
    assert verify_trace(MoveTrace(start=p, moves=(), end=p))


def test_corrupted_trace_fails():
    p1 = plat_closure(BraidWord(2, (1,)))
    p2 = plat_closure(BraidWord(2, ()))
    result = equivalence_search(p1, p2)
    assert isinstance(result, Found)
    trace = result.trace
    assert verify_trace(trace)
    # corrupt one move
    bad_moves = tuple(
        Move("hilden-left", ("sigma1", False)) if i == 0 else m
        for i, m in enumerate(trace.moves))
    corrupted = MoveTrace(start=trace.start, moves=bad_moves, end=trace.end)
    assert not verify_trace(corrupted)
    # or claim a different endpoint
    lied = MoveTrace(start=trace.start, moves=trace.moves,
                     end=plat_closure(BraidWord(2, (1,))))
    assert not verify_trace(lied)


def test_trace_json_round_trip():
    p1 = plat_closure(BraidWord(2, (1,)))
    p2 = plat_closure(BraidWord(2, ()))
    trace = equivalence_search(p1, p2).trace
    back = MoveTrace.from_json_dict(json.loads(json.dumps(trace.to_json_dict())))
    assert back == trace and verify_trace(back)


# -- equivalence search ---------------------------------------------------------------

def test_single_generator_found():
    result = equivalence_search(plat_closure(BraidWord(2, (1,))),
                                plat_closure(BraidWord(2, ())))
    assert isinstance(result, Found)
    assert len(result.trace.moves) == 1
    assert verify_trace(result.trace)


def test_equal_plats_found_immediately():
    p = plat_closure(BraidWord(4, (2, 2)))
    result = equivalence_search(p, p)
    assert isinstance(result, Found) and len(result.trace.moves) == 0


def test_distinct_certificates():
    result = equivalence_search(plat_closure(BraidWord(4, ())),
                                plat_closure(BraidWord(4, (2, 2, 2))))
    assert isinstance(result, DistinctCertificates)
    assert "component" in result.reason


def test_strand_mismatch():
    with pytest.raises(StrandMismatchError):
        equivalence_search(plat_closure(BraidWord(2, ())),
                           plat_closure(BraidWord(4, ())))


def test_scramble_and_solve(rng):
    for trial in range(12):
        strands = rng.choice((4, 6))
        trivial = plat_closure(BraidWord(strands, ()))
        scrambled = scramble(rng, trivial, rng.randint(1, 3))
        result = equivalence_search(scrambled, trivial)
        assert isinstance(result, Found), scrambled.word.letters
        assert verify_trace(result.trace)
        assert result.trace.start == scrambled and result.trace.end == trivial


def test_search_is_deterministic(rng):
    p1 = scramble(rng, plat_closure(BraidWord(4, ())), 3)
    p2 = plat_closure(BraidWord(4, ()))
    r1 = equivalence_search(p1, p2)
    r2 = equivalence_search(p1, p2)
    assert r1.trace.moves == r2.trace.moves


def test_exhausted_monotone(rng):
    # enlarging the node budget never flips Found to Exhausted
    for _ in range(6):
        p1 = scramble(rng, plat_closure(BraidWord(4, ())), 2)
        p2 = plat_closure(BraidWord(4, ()))
        small = equivalence_search(p1, p2, SearchBudget(max_nodes=4))
        big = equivalence_search(p1, p2, SearchBudget(max_nodes=100_000))
        if isinstance(small, Found):
            assert isinstance(big, Found)


def test_exhausted_on_tiny_budget(rng):
    base = plat_closure(BraidWord(6, (2, 4, 1, 3, 1)))
    p1 = scramble(rng, base, 4)
    p2 = scramble(rng, base, 4)
    assert certificate(p1) == certificate(p2)
    result = equivalence_search(p1, p2, SearchBudget(max_nodes=3))
    assert isinstance(result, (Exhausted, Found))
    if isinstance(result, Exhausted):
        assert result.nodes_expanded <= 3


# -- destabilization search --------------------------------------------------------------

def test_destab_search_syntactic_case():
    result = destabilization_search(plat_closure(BraidWord(4, (1, 2))))
    assert isinstance(result, DestabilizationFound)
    assert result.plat.word.letters == (1,)
    assert len(result.trace.moves) == 0


def test_destab_search_after_scramble(rng):
    for _ in range(8):
        p = random_plat(rng, 4, 6)
        hidden = scramble(rng, stabilize(p), rng.randint(0, 3))
        result = destabilization_search(hidden)
        assert isinstance(result, DestabilizationFound), hidden.word.letters
        assert verify_trace(result.trace)
        assert result.plat.strands == 4


def test_destab_search_needs_four_strands():
    with pytest.raises(StrandMismatchError):
        destabilization_search(plat_closure(BraidWord(2, (1,))))


def test_destab_exhausted_small_budget():
    p = plat_closure(BraidWord(8, CORPUS_25))
    result = destabilization_search(p, SearchBudget(max_nodes=200,
                                                    max_seconds=10))
    assert isinstance(result, Exhausted)
