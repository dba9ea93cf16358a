"""Bounded exploration of the graph of plat classes under (de)stabilization.

Vertices approximate double-coset classes: two representatives merge only
when a verified move trace connects them; they stay distinct when their
certificates differ; certificate-equal pairs without a witness are marked
unresolved and never silently merged.  Edges record witnessed single
stabilizations, so they always join adjacent bridge levels.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from typing import Mapping

from .braids import free_reduce
from .errors import GraphBoundsError
from .invariants import InvariantCertificate, certificate
from .plats import Plat, apply_move, hilden_generators, plat_closure, stabilize
from .search import (DestabilizationFound, Found, SearchBudget,
                     default_budget, destabilization_search, equivalence_search)

HARD_LEVEL_CAP = 6


@dataclass
class PlatGraphVertex:
    class_id: int
    representative: Plat
    bridge_level: int
    certificate: InvariantCertificate
    dead_end_candidate: bool = False
    unresolved_with: tuple[int, ...] = ()

    def to_json_dict(self) -> dict:
        return {
            "class_id": self.class_id,
            "representative": self.representative.to_json_dict(),
            "bridge_level": self.bridge_level,
            "certificate": self.certificate.to_json_dict(),
            "dead_end_candidate": self.dead_end_candidate,
            "unresolved_with": list(self.unresolved_with),
        }

    @classmethod
    def from_json_dict(cls, data: Mapping) -> "PlatGraphVertex":
        return cls(
            class_id=int(data["class_id"]),
            representative=Plat.from_json_dict(data["representative"]),
            bridge_level=int(data["bridge_level"]),
            certificate=InvariantCertificate.from_json_dict(data["certificate"]),
            dead_end_candidate=bool(data.get("dead_end_candidate", False)),
            unresolved_with=tuple(data.get("unresolved_with", ())),
        )


@dataclass
class PlatGraph:
    vertices: list[PlatGraphVertex] = field(default_factory=list)
    edges: set[tuple[int, int]] = field(default_factory=set)
    provenance: list[dict] = field(default_factory=list)
    budget: SearchBudget = field(default_factory=default_budget)

    def vertex(self, class_id: int) -> PlatGraphVertex:
        for v in self.vertices:
            if v.class_id == class_id:
                return v
        raise KeyError(f"no vertex with class id {class_id}")

    def add_edge(self, a: int, b: int):
        va, vb = self.vertex(a), self.vertex(b)
        if abs(va.bridge_level - vb.bridge_level) != 1:
            raise GraphBoundsError(
                f"edge ({a}, {b}) would join non-adjacent bridge levels "
                f"{va.bridge_level} and {vb.bridge_level}")
        self.edges.add((min(a, b), max(a, b)))

    def levels(self) -> dict[int, list[int]]:
        out: dict[int, list[int]] = {}
        for v in self.vertices:
            out.setdefault(v.bridge_level, []).append(v.class_id)
        return {lvl: sorted(ids) for lvl, ids in sorted(out.items())}

    def resolved_classes(self, level: int) -> list[int]:
        return [v.class_id for v in self.vertices
                if v.bridge_level == level and not v.unresolved_with]

    def unresolved_pair_count(self) -> int:
        return sum(1 for entry in self.provenance if entry["kind"] == "unresolved")


def _scramble(rng: random.Random, p: Plat, moves: int) -> Plat:
    names = hilden_generators(p.bridges).names()
    for _ in range(moves):
        p = apply_move(p,
                       rng.choice(("top", "bottom")),
                       rng.choice(names),
                       inverse=rng.choice((False, True)))
    return p


def explore(seed: Plat, max_level: int, budget: SearchBudget | None = None,
            rng_seed: int = 0, scrambles_per_level: int = 2,
            scramble_moves: int = 2) -> PlatGraph:
    """Grow the graph from a seed plat up to max_level bridges.

    Per level: stabilize each known class, then try a few Hilden-scrambled
    variants to probe for distinct classes.  Candidates merge into an
    existing class only on a Found search result; otherwise they become new
    vertices, flagged unresolved against certificate-equal classes.
    """
    seed_level = seed.bridges
    if max_level < seed_level:
        raise GraphBoundsError(
            f"max_level {max_level} is below the seed bridge level {seed_level}")
    if max_level > HARD_LEVEL_CAP:
        raise GraphBoundsError(
            f"max_level {max_level} exceeds the hard cap {HARD_LEVEL_CAP}")
    budget = budget or default_budget()
    rng = random.Random(rng_seed)
    graph = PlatGraph(budget=budget)

    def classify(p: Plat, level: int, parent: int | None) -> int:
        """Identify the candidate with an existing class or create one."""
        cert = certificate(p)
        unresolved: list[int] = []
        for v in graph.vertices:
            if v.bridge_level != level:
                continue
            if v.certificate != cert:
                continue
            result = equivalence_search(p, v.representative, budget)
            if isinstance(result, Found):
                graph.provenance.append({
                    "kind": "merged", "class_id": v.class_id,
                    "candidate": p.to_json_dict(),
                    "trace": result.trace.to_json_dict(),
                    "trace_moves": len(result.trace.moves)})
                return v.class_id
            graph.provenance.append({
                "kind": "unresolved", "class_id": v.class_id,
                "candidate": p.to_json_dict(),
                "nodes_expanded": getattr(result, "nodes_expanded", None)})
            unresolved.append(v.class_id)
        new_id = len(graph.vertices)
        graph.vertices.append(PlatGraphVertex(
            class_id=new_id, representative=p, bridge_level=level,
            certificate=cert, unresolved_with=tuple(unresolved)))
        if unresolved:
            for other in unresolved:
                v = graph.vertex(other)
                v.unresolved_with = tuple(sorted(set(v.unresolved_with) | {new_id}))
        else:
            graph.provenance.append({
                "kind": "certificate-distinct-or-first", "class_id": new_id,
                "bridge_level": level})
        return new_id

    classify(plat_closure(free_reduce(seed.word)), seed_level, None)

    for level in range(seed_level + 1, max_level + 1):
        parent_ids = [v.class_id for v in graph.vertices
                      if v.bridge_level == level - 1]
        for pid in parent_ids:
            parent = graph.vertex(pid)
            base = stabilize(parent.representative)
            candidates = [base]
            for _ in range(scrambles_per_level):
                candidates.append(_scramble(rng, base, scramble_moves))
            for cand in candidates:
                cid = classify(cand, level, pid)
                graph.add_edge(pid, cid)
                graph.provenance.append({
                    "kind": "stabilization-edge", "from": pid, "to": cid})

    _mark_dead_ends(graph, budget)
    return graph


def _mark_dead_ends(graph: PlatGraph, budget: SearchBudget):
    """Vertices with no witnessed edge downward get a destabilization
    search; Exhausted flags them as dead-end candidates (not a proof)."""
    for v in list(graph.vertices):
        if v.representative.strands < 4:
            continue
        has_down = any(
            (a == v.class_id and graph.vertex(b).bridge_level < v.bridge_level) or
            (b == v.class_id and graph.vertex(a).bridge_level < v.bridge_level)
            for a, b in graph.edges)
        if has_down:
            continue
        result = destabilization_search(v.representative, budget)
        if isinstance(result, DestabilizationFound):
            lower = result.plat
            cert = certificate(lower)
            target = None
            for u in graph.vertices:
                if (u.bridge_level == v.bridge_level - 1
                        and u.certificate == cert):
                    connect = equivalence_search(lower, u.representative, budget)
                    if isinstance(connect, Found):
                        target = u.class_id
                        break
            if target is None:
                target = len(graph.vertices)
                graph.vertices.append(PlatGraphVertex(
                    class_id=target, representative=lower,
                    bridge_level=v.bridge_level - 1, certificate=cert))
            graph.add_edge(v.class_id, target)
            graph.provenance.append({
                "kind": "destabilization-edge", "from": v.class_id, "to": target,
                "trace_moves": len(result.trace.moves)})
        else:
            v.dead_end_candidate = True
            graph.provenance.append({
                "kind": "dead-end-candidate", "class_id": v.class_id,
                "nodes_expanded": result.nodes_expanded})


# ---------------------------------------------------------------------------
# queries
# ---------------------------------------------------------------------------

def distance(graph: PlatGraph, v: int, w: int) -> int | None:
    """Shortest path length in edges; None when unreachable."""
    graph.vertex(v), graph.vertex(w)
    if v == w:
        return 0
    adjacency: dict[int, list[int]] = {}
    for a, b in graph.edges:
        adjacency.setdefault(a, []).append(b)
        adjacency.setdefault(b, []).append(a)
    frontier = [v]
    dist = {v: 0}
    while frontier:
        nxt = []
        for node in frontier:
            for other in sorted(adjacency.get(node, ())):
                if other in dist:
                    continue
                dist[other] = dist[node] + 1
                if other == w:
                    return dist[other]
                nxt.append(other)
        frontier = nxt
    return None


@dataclass(frozen=True)
class CycleReport:
    status: str                      # "acyclic" | "cycle"
    witness: tuple[int, ...] | None  # closed path of class ids
    audit_required: bool             # cycle among resolved vertices of a knot seed


def cycle_check(graph: PlatGraph) -> CycleReport:
    """Look for a cycle among resolved vertices; for a knot seed a cycle
    contradicts tree-ness and is flagged for audit."""
    resolved = {v.class_id for v in graph.vertices if not v.unresolved_with}
    adjacency: dict[int, list[int]] = {cid: [] for cid in resolved}
    for a, b in sorted(graph.edges):
        if a in resolved and b in resolved:
            adjacency[a].append(b)
            adjacency[b].append(a)
    seen: set[int] = set()
    for root in sorted(resolved):
        if root in seen:
            continue
        stack = [(root, None)]
        parent: dict[int, int | None] = {root: None}
        while stack:
            node, par = stack.pop()
            if node in seen:
                continue
            seen.add(node)
            for other in adjacency[node]:
                if other == par:
                    continue
                if other in parent:
                    # found a cycle: walk both branches up to the common root
                    path_a = [node]
                    while path_a[-1] is not None and parent[path_a[-1]] is not None:
                        path_a.append(parent[path_a[-1]])
                    path_b = [other]
                    while path_b[-1] is not None and parent[path_b[-1]] is not None:
                        path_b.append(parent[path_b[-1]])
                    common = set(path_a) & set(path_b)
                    cut_a = [x for x in path_a if x not in common]
                    cut_b = [x for x in path_b if x not in common]
                    anchor = next(x for x in path_a if x in common)
                    witness = tuple(cut_a + [anchor] + list(reversed(cut_b)))
                    knot = any(v.certificate.components == 1
                               for v in graph.vertices if v.class_id == witness[0])
                    return CycleReport("cycle", witness, audit_required=knot)
                parent[other] = node
                stack.append((other, node))
    return CycleReport("acyclic", None, audit_required=False)


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------

def to_json_dict(graph: PlatGraph) -> dict:
    order = sorted(graph.vertices, key=lambda v: (v.bridge_level, v.class_id))
    return {
        "vertices": [v.to_json_dict() for v in order],
        "edges": sorted(list(e) for e in graph.edges),
        "provenance": graph.provenance,
        "budget": graph.budget.to_json_dict(),
    }


def to_json(graph: PlatGraph) -> str:
    return json.dumps(to_json_dict(graph), indent=2, sort_keys=True)


def graph_from_json(text: str) -> PlatGraph:
    data = json.loads(text)
    graph = PlatGraph(budget=SearchBudget.from_json_dict(data.get("budget", {})))
    graph.vertices = [PlatGraphVertex.from_json_dict(v) for v in data["vertices"]]
    graph.edges = {(int(a), int(b)) for a, b in data["edges"]}
    graph.provenance = list(data.get("provenance", []))
    return graph


def to_dot(graph: PlatGraph) -> str:
    lines = ["graph platgraph {", "  rankdir=BT;"]
    for level, ids in graph.levels().items():
        names = " ".join(f"c{cid};" for cid in ids)
        lines.append(f"  {{ rank=same; {names} }}")
    for v in sorted(graph.vertices, key=lambda v: (v.bridge_level, v.class_id)):
        flags = []
        if v.dead_end_candidate:
            flags.append("dead-end?")
        if v.unresolved_with:
            flags.append("unresolved")
        extra = f"\\n{' '.join(flags)}" if flags else ""
        lines.append(
            f'  c{v.class_id} [label="c{v.class_id}\\nlevel {v.bridge_level}{extra}"];')
    for a, b in sorted(graph.edges):
        lines.append(f"  c{a} -- c{b};")
    lines.append("}")
    return "\n".join(lines) + "\n"
