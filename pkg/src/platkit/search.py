"""Desk-scale decision procedures over the plat move graph.

Nodes are free-reduced braid words; edges are single Hilden multiplications
(either side, either sign) and single braid-relation rewrites, each
followed by free reduction.  On reduced words a free insertion cancels
immediately and a free deletion never applies, so those move kinds appear
only in replayed traces, never as search edges.

equivalence_search is sound both ways it can decide: a Found trace replays
and verifies, and DistinctCertificates means the two closures are different
link types.  Exhausted proves nothing.
"""

from __future__ import annotations

import heapq
import os
import time
from dataclasses import dataclass
from typing import Iterator, Mapping

from .braids import BraidWord, apply_relation, free_reduce, invert, relation_sites
from .errors import ParseError, StrandMismatchError
from .invariants import certificate
from .plats import (HildenCatalog, Plat, destabilize_syntactic,
                    hilden_generators, plat_closure)

DEFAULT_MAX_NODES = 1_000_000
DEFAULT_EXTRA_LENGTH = 8
DEFAULT_MAX_SECONDS = 30.0
_CERT_SAMPLE_EVERY = 512
# memory guard: above this many frontier entries a side stops growing and
# the search continues unidirectionally from the other end
_FRONTIER_CAP = 200_000


@dataclass(frozen=True)
class SearchBudget:
    max_nodes: int = DEFAULT_MAX_NODES
    max_word_length: int = 0  # 0 means: input length + DEFAULT_EXTRA_LENGTH
    max_seconds: float = DEFAULT_MAX_SECONDS

    def __post_init__(self):
        object.__setattr__(self, "max_seconds", float(self.max_seconds))
        if self.max_nodes <= 0 or self.max_seconds <= 0 or self.max_word_length < 0:
            raise ValueError("budget fields must be positive")

    def resolved_length(self, input_length: int) -> int:
        if self.max_word_length:
            return self.max_word_length
        return input_length + DEFAULT_EXTRA_LENGTH

    def to_json_dict(self) -> dict:
        return {"max_nodes": self.max_nodes,
                "max_word_length": self.max_word_length,
                "max_seconds": self.max_seconds}

    @classmethod
    def from_json_dict(cls, data: Mapping) -> "SearchBudget":
        return cls(max_nodes=int(data.get("max_nodes", DEFAULT_MAX_NODES)),
                   max_word_length=int(data.get("max_word_length", 0)),
                   max_seconds=float(data.get("max_seconds", DEFAULT_MAX_SECONDS)))


def default_budget() -> SearchBudget:
    nodes = int(os.environ.get("PLATKIT_BUDGET_NODES", DEFAULT_MAX_NODES))
    return SearchBudget(max_nodes=nodes)


# ---------------------------------------------------------------------------
# moves and traces
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Move:
    """One replayable elementary move.

    kinds and payloads:
      hilden-left / hilden-right : (generator name, inverse flag)
      braid-relation             : (rule "commute"|"triangle", position)
      free-insert                : (position, letter)
      free-delete                : (position,)
    """

    kind: str
    payload: tuple

    def to_json_dict(self) -> dict:
        if self.kind in ("hilden-left", "hilden-right"):
            gen, inv = self.payload
            return {"kind": self.kind, "payload": {"gen": gen, "inverse": inv}}
        if self.kind == "braid-relation":
            rule, pos = self.payload
            return {"kind": self.kind, "payload": {"rule": rule, "pos": pos}}
        if self.kind == "free-insert":
            pos, letter = self.payload
            return {"kind": self.kind, "payload": {"pos": pos, "letter": letter}}
        if self.kind == "free-delete":
            return {"kind": self.kind, "payload": {"pos": self.payload[0]}}
        raise ValueError(f"unknown move kind {self.kind!r}")

    @classmethod
    def from_json_dict(cls, data: Mapping) -> "Move":
        kind = data["kind"]
        p = data["payload"]
        if kind in ("hilden-left", "hilden-right"):
            return cls(kind, (p["gen"], bool(p["inverse"])))
        if kind == "braid-relation":
            return cls(kind, (p["rule"], int(p["pos"])))
        if kind == "free-insert":
            return cls(kind, (int(p["pos"]), int(p["letter"])))
        if kind == "free-delete":
            return cls(kind, (int(p["pos"]),))
        raise ParseError(f"unknown move kind {kind!r}")


def apply_move_to_word(word: BraidWord, move: Move,
                       catalog: HildenCatalog | None = None) -> BraidWord:
    """Replay one move on a (reduced) word; the result is free-reduced."""
    catalog = catalog or hilden_generators(word.strands // 2)
    letters = word.letters
    if move.kind in ("hilden-left", "hilden-right"):
        name, inv = move.payload
        gw = catalog.get(name).word
        if inv:
            gw = invert(gw)
        if move.kind == "hilden-left":
            letters = gw.letters + letters
        else:
            letters = letters + gw.letters
    elif move.kind == "braid-relation":
        rule, pos = move.payload
        letters = apply_relation(letters, rule, pos)
    elif move.kind == "free-insert":
        pos, letter = move.payload
        if not 0 <= pos <= len(letters):
            raise ValueError(f"insert position {pos} out of range")
        letters = letters[:pos] + (letter, -letter) + letters[pos:]
    elif move.kind == "free-delete":
        pos = move.payload[0]
        if not (0 <= pos < len(letters) - 1 and letters[pos] == -letters[pos + 1]):
            raise ValueError(f"no cancelling pair at position {pos}")
        letters = letters[:pos] + letters[pos + 2:]
    else:
        raise ValueError(f"unknown move kind {move.kind!r}")
    return free_reduce(BraidWord(word.strands, letters))


@dataclass(frozen=True)
class MoveTrace:
    start: Plat
    moves: tuple[Move, ...]
    end: Plat

    def __len__(self) -> int:
        return len(self.moves)

    def to_json_dict(self) -> dict:
        return {"start": self.start.to_json_dict(),
                "moves": [m.to_json_dict() for m in self.moves],
                "end": self.end.to_json_dict()}

    @classmethod
    def from_json_dict(cls, data: Mapping) -> "MoveTrace":
        return cls(start=Plat.from_json_dict(data["start"]),
                   moves=tuple(Move.from_json_dict(m) for m in data["moves"]),
                   end=Plat.from_json_dict(data["end"]))


def verify_trace(trace: MoveTrace) -> bool:
    """Independently replay every move; True only if the replay lands on the
    end word and the endpoint certificates agree."""
    if trace.start.strands != trace.end.strands:
        return False
    catalog = hilden_generators(trace.start.bridges)
    word = free_reduce(trace.start.word)
    try:
        for move in trace.moves:
            word = apply_move_to_word(word, move, catalog)
    except ValueError:
        return False
    if word.letters != free_reduce(trace.end.word).letters:
        return False
    return certificate(trace.start) == certificate(trace.end)


# ---------------------------------------------------------------------------
# results
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Found:
    trace: MoveTrace


@dataclass(frozen=True)
class Exhausted:
    nodes_expanded: int
    reason: str


@dataclass(frozen=True)
class DistinctCertificates:
    reason: str


@dataclass(frozen=True)
class DestabilizationFound:
    plat: Plat          # the smaller plat after destabilizing
    trace: MoveTrace    # path from the input to the destabilizable representative


# ---------------------------------------------------------------------------
# neighbor generation
# ---------------------------------------------------------------------------

def _neighbors(letters: tuple[int, ...], strands: int, catalog: HildenCatalog,
               max_len: int) -> Iterator[tuple[tuple[int, ...], Move]]:
    for gen in catalog:
        base = gen.word.letters
        inv_base = tuple(-x for x in reversed(base))
        for flag, gl in ((False, base), (True, inv_base)):
            left = _reduce(gl + letters)
            if len(left) <= max_len:
                yield left, Move("hilden-left", (gen.name, flag))
            right = _reduce(letters + gl)
            if len(right) <= max_len:
                yield right, Move("hilden-right", (gen.name, flag))
    for rule, pos in relation_sites(letters):
        new = _reduce(apply_relation(letters, rule, pos))
        if len(new) <= max_len:
            yield new, Move("braid-relation", (rule, pos))


def _reduce(letters: tuple[int, ...]) -> tuple[int, ...]:
    stack: list[int] = []
    for x in letters:
        if stack and stack[-1] == -x:
            stack.pop()
        else:
            stack.append(x)
    return tuple(stack)


def _invert_edge(move: Move, before: tuple[int, ...],
                 after: tuple[int, ...]) -> Move | None:
    """The move taking `after` back to `before`, when one exists as a single
    move (Hilden moves always; relation moves only when nothing cancelled)."""
    if move.kind in ("hilden-left", "hilden-right"):
        name, inv = move.payload
        return Move(move.kind, (name, not inv))
    if move.kind == "braid-relation" and len(after) == len(before):
        return move
    return None


class _Frontier:
    """Deterministic best-first frontier ordered by (length, word)."""

    def __init__(self):
        self.heap: list[tuple[int, tuple[int, ...]]] = []

    def push(self, letters: tuple[int, ...]):
        heapq.heappush(self.heap, (len(letters), letters))

    def pop(self) -> tuple[int, ...]:
        return heapq.heappop(self.heap)[1]

    def peek_key(self):
        return self.heap[0][:2] if self.heap else None

    def __len__(self):
        return len(self.heap)


# ---------------------------------------------------------------------------
# equivalence search
# ---------------------------------------------------------------------------

def equivalence_search(p1: Plat, p2: Plat,
                       budget: SearchBudget | None = None,
                       certificate_checks: str = "sample"):
    """Connect two plats by a verified move trace, or soundly refuse.

    Returns Found(trace) on a meet-in-the-middle connection,
    DistinctCertificates when the certificates (hence link types) differ,
    and Exhausted when the budget ran out; Exhausted is not a proof.
    """
    if p1.strands != p2.strands:
        raise StrandMismatchError(
            f"equivalence search needs equal strand counts "
            f"({p1.strands} vs {p2.strands}); stabilize first")
    budget = budget or default_budget()
    cert1 = certificate(p1)
    cert2 = certificate(p2)
    diff = cert1.describe_difference(cert2)
    if diff is not None:
        return DistinctCertificates(reason=diff)

    catalog = hilden_generators(p1.bridges)
    strands = p1.strands
    start = free_reduce(p1.word).letters
    goal = free_reduce(p2.word).letters
    max_len = budget.resolved_length(max(len(start), len(goal)))

    if start == goal:
        return Found(MoveTrace(start=p1, moves=(), end=p2))

    # parents_f[w] = (previous word, move previous -> w)
    parents_f: dict[tuple[int, ...], tuple | None] = {start: None}
    # parents_b[w] = (next word, move w -> next), chaining toward the goal
    parents_b: dict[tuple[int, ...], tuple | None] = {goal: None}
    front_f, front_b = _Frontier(), _Frontier()
    front_f.push(start)
    front_b.push(goal)
    expanded = [0, 0]
    deadline = time.monotonic() + budget.max_seconds

    def make_trace(meet: tuple[int, ...]) -> MoveTrace:
        moves: list[Move] = []
        node = meet
        while parents_f[node] is not None:
            prev, mv = parents_f[node]
            moves.append(mv)
            node = prev
        moves.reverse()
        node = meet
        while parents_b[node] is not None:
            nxt, mv = parents_b[node]
            moves.append(mv)
            node = nxt
        return MoveTrace(start=p1, moves=tuple(moves), end=p2)

    sample_counter = 0
    while front_f or front_b:
        if expanded[0] + expanded[1] >= budget.max_nodes:
            return Exhausted(nodes_expanded=sum(expanded), reason="node budget")
        if time.monotonic() > deadline:
            return Exhausted(nodes_expanded=sum(expanded), reason="time budget")
        # expand the side with fewer expansions; ties go forward; a side
        # whose frontier blows past the memory cap stops being expanded
        if not front_f:
            forward = False
        elif not front_b:
            forward = True
        elif len(front_f) > _FRONTIER_CAP:
            forward = False
        elif len(front_b) > _FRONTIER_CAP:
            forward = True
        else:
            forward = expanded[0] <= expanded[1]
        frontier = front_f if forward else front_b
        current = frontier.pop()
        expanded[0 if forward else 1] += 1

        if certificate_checks != "off":
            sample_counter += 1
            if certificate_checks == "debug" or sample_counter % _CERT_SAMPLE_EVERY == 0:
                node_cert = certificate(plat_closure(BraidWord(strands, current)))
                if node_cert != cert1:
                    raise AssertionError(
                        "search neighbor does not preserve the certificate; "
                        f"word {current} differs: {node_cert.describe_difference(cert1)}")

        for nxt, move in _neighbors(current, strands, catalog, max_len):
            if forward:
                if nxt in parents_f:
                    continue
                parents_f[nxt] = (current, move)
                if nxt in parents_b:
                    return Found(make_trace(nxt))
                front_f.push(nxt)
            else:
                rev = _invert_edge(move, current, nxt)
                if rev is None or nxt in parents_b:
                    continue
                parents_b[nxt] = (current, rev)
                if nxt in parents_f:
                    return Found(make_trace(nxt))
                front_b.push(nxt)
    return Exhausted(nodes_expanded=sum(expanded), reason="frontier empty")


# ---------------------------------------------------------------------------
# destabilization search
# ---------------------------------------------------------------------------

def destabilization_search(p: Plat, budget: SearchBudget | None = None):
    """Hunt the move graph of p for a representative on which the syntactic
    destabilization fires.  Returns DestabilizationFound or Exhausted."""
    if p.strands < 4:
        raise StrandMismatchError("destabilization needs at least 4 strands")
    budget = budget or default_budget()
    catalog = hilden_generators(p.bridges)
    strands = p.strands
    start = free_reduce(p.word).letters
    max_len = budget.resolved_length(len(start))

    def check(letters: tuple[int, ...]):
        return destabilize_syntactic(plat_closure(BraidWord(strands, letters)))

    parents: dict[tuple[int, ...], tuple | None] = {start: None}

    def make_trace(node: tuple[int, ...]) -> MoveTrace:
        moves = []
        cur = node
        while parents[cur] is not None:
            prev, mv = parents[cur]
            moves.append(mv)
            cur = prev
        moves.reverse()
        return MoveTrace(start=p,
                         moves=tuple(moves),
                         end=plat_closure(BraidWord(strands, node)))

    smaller = check(start)
    if smaller is not None:
        return DestabilizationFound(plat=smaller, trace=make_trace(start))

    frontier = _Frontier()
    frontier.push(start)
    expanded = 0
    deadline = time.monotonic() + budget.max_seconds
    while frontier:
        if expanded >= budget.max_nodes:
            return Exhausted(nodes_expanded=expanded, reason="node budget")
        if time.monotonic() > deadline:
            return Exhausted(nodes_expanded=expanded, reason="time budget")
        current = frontier.pop()
        expanded += 1
        for nxt, move in _neighbors(current, strands, catalog, max_len):
            if nxt in parents:
                continue
            parents[nxt] = (current, move)
            smaller = check(nxt)
            if smaller is not None:
                return DestabilizationFound(plat=smaller, trace=make_trace(nxt))
            frontier.push(nxt)
    return Exhausted(nodes_expanded=expanded, reason="frontier empty")
