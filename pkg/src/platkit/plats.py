"""Plat closures of braid words and the moves that preserve their link type.

A 2n-strand braid word is closed into a plat by capping strands 2i-1, 2i
with cups below and caps above (the standard matching).  Left/right
multiplication by Hilden subgroup elements, braid rewrites, stabilization
and pocket moves all preserve the closure's link type; this module holds
the move catalog and the diagram tracing used by the invariants.

Conventions, pinned once here:
  * letters act bottom-to-top, first letter nearest the bottom cups;
  * for a positive letter sigma_i the strand entering at position i
    passes over the strand entering at position i+1;
  * stabilization appends sigma_{2n} (positive by default) on a new
    strand pair at the right edge.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal, Sequence

from .braids import BraidWord, free_reduce, invert, permutation_of
from .errors import HildenMoveError, OddStrandsError, PathRangeError

Side = Literal["top", "bottom"]


@dataclass(frozen=True)
class Matching:
    """A perfect matching of {1..2k}, stored as sorted disjoint pairs."""

    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        norm = tuple(sorted((min(a, b), max(a, b)) for a, b in self.pairs))
        object.__setattr__(self, "pairs", norm)
        seen: set[int] = set()
        for a, b in norm:
            if a == b or a in seen or b in seen:
                raise ValueError(f"pairs are not disjoint: {norm}")
            seen.add(a)
            seen.add(b)
        if seen and seen != set(range(1, 2 * len(norm) + 1)):
            raise ValueError(f"pairs do not cover 1..{2 * len(norm)}: {norm}")

    @classmethod
    def standard(cls, points: int) -> "Matching":
        if points % 2:
            raise ValueError("a matching needs an even number of points")
        return cls(tuple((i, i + 1) for i in range(1, points, 2)))

    @property
    def points(self) -> int:
        return 2 * len(self.pairs)

    def partner(self, point: int) -> int:
        for a, b in self.pairs:
            if point == a:
                return b
            if point == b:
                return a
        raise KeyError(point)

    def involution(self) -> tuple[int, ...]:
        """partner table, 1-based (index 0 unused)."""
        table = [0] * (self.points + 1)
        for a, b in self.pairs:
            table[a], table[b] = b, a
        return tuple(table)

    def is_noncrossing(self) -> bool:
        """No two pairs interleave as a < c < b < d."""
        for a, b in self.pairs:
            for c, d in self.pairs:
                if a < c < b < d:
                    return False
        return True


@dataclass(frozen=True)
class Plat:
    """An even-strand braid word with the standard cup/cap matchings."""

    word: BraidWord
    top: Matching
    bottom: Matching

    @property
    def strands(self) -> int:
        return self.word.strands

    @property
    def bridges(self) -> int:
        return self.word.strands // 2

    def to_json_dict(self) -> dict:
        return {"strands": self.strands, "word": list(self.word.letters),
                "convention": "standard-cups"}

    @classmethod
    def from_json_dict(cls, data) -> "Plat":
        return plat_closure(BraidWord.from_json_dict(data))

    def to_text(self, header: bool = True) -> str:
        return self.word.to_text(header=header)


def plat_closure(w: BraidWord) -> Plat:
    if w.strands % 2:
        raise OddStrandsError(
            f"plat closure needs an even strand count, got {w.strands}")
    m = Matching.standard(w.strands)
    return Plat(word=w, top=m, bottom=m)


def component_count(p: Plat) -> int:
    """Number of link components of the closure.

    Endpoint graph on the 4n braid-boundary points: strand edges join
    bottom i to top pi(i), cup and cap edges pair adjacent points; every
    point has degree two so the components are the link's circles.
    """
    m = p.strands
    pi = permutation_of(p.word)
    parent = list(range(2 * m))  # 0..m-1 bottom, m..2m-1 top

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def union(a: int, b: int):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb

    for i in range(1, m + 1):
        union(i - 1, m + pi(i) - 1)
    for a, b in p.bottom.pairs:
        union(a - 1, b - 1)
    for a, b in p.top.pairs:
        union(m + a - 1, m + b - 1)
    return len({find(x) for x in range(2 * m)})


# ---------------------------------------------------------------------------
# Hilden move catalog
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class HildenGenerator:
    name: str
    word: BraidWord


@dataclass(frozen=True)
class HildenCatalog:
    """Named generating moves of the Hilden subgroup of B_2n.

    sigma1       : one half-twist of the first bridge,
    twist_i      : the same half-twist on bridge i (i >= 2),
    slide_1      : the first bridge slides around the second strand pair,
    cross_i      : bridges i and i+1 trade places.
    """

    n: int
    generators: tuple[HildenGenerator, ...]

    def names(self) -> list[str]:
        return [g.name for g in self.generators]

    def get(self, name: str) -> HildenGenerator:
        for g in self.generators:
            if g.name == name:
                return g
        raise HildenMoveError(f"no catalog generator named {name!r} for n={self.n}")

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)


def hilden_generators(n: int) -> HildenCatalog:
    if n < 1:
        raise ValueError(f"bridge count must be >= 1, got {n}")
    strands = 2 * n
    gens: list[HildenGenerator] = [
        HildenGenerator("sigma1", BraidWord(strands, (1,)))]
    for i in range(2, n + 1):
        gens.append(HildenGenerator(f"twist_{i}", BraidWord(strands, (2 * i - 1,))))
    if n >= 2:
        gens.append(HildenGenerator("slide_1", BraidWord(strands, (2, 1, 1, 2))))
    for i in range(1, n):
        gens.append(HildenGenerator(
            f"cross_{i}",
            BraidWord(strands, (2 * i, 2 * i - 1, 2 * i + 1, 2 * i))))
    return HildenCatalog(n=n, generators=tuple(gens))


HildenStep = tuple[str, bool]  # (generator name, inverse?)


def resolve_hilden_word(p_or_n, g, inverse: bool = False) -> BraidWord:
    """Turn a catalog name, a (name, inverse) trace, or an explicit catalog
    word into the braid word to multiply by."""
    n = p_or_n if isinstance(p_or_n, int) else p_or_n.bridges
    catalog = hilden_generators(n)
    if isinstance(g, str):
        word = catalog.get(g).word
        return invert(word) if inverse else word
    if isinstance(g, BraidWord):
        reduced = free_reduce(g)
        for gen in catalog:
            if reduced == free_reduce(gen.word):
                return invert(gen.word) if inverse else gen.word
            if reduced == free_reduce(invert(gen.word)):
                return gen.word if inverse else invert(gen.word)
        raise HildenMoveError(
            "explicit word is not a catalog generator; pass a (name, inverse) trace")
    # trace: iterable of names or (name, inverse) steps, applied left to right
    word = BraidWord(2 * n, ())
    for step in g:
        name, inv = step if isinstance(step, tuple) else (step, False)
        piece = catalog.get(name).word
        if inv:
            piece = invert(piece)
        word = BraidWord(2 * n, word.letters + piece.letters)
    return invert(word) if inverse else word


def apply_move(p: Plat, side: Side, g, inverse: bool = False) -> Plat:
    """Multiply by a Hilden word on the chosen side and free-reduce.

    side="bottom" prepends (the move happens just above the cups),
    side="top" appends (just below the caps).
    """
    gword = resolve_hilden_word(p, g, inverse)
    if side == "bottom":
        letters = gword.letters + p.word.letters
    elif side == "top":
        letters = p.word.letters + gword.letters
    else:
        raise ValueError(f"side must be 'top' or 'bottom', got {side!r}")
    return plat_closure(free_reduce(BraidWord(p.strands, letters)))


def stabilize(p: Plat, sign: int = 1) -> Plat:
    """Add a trivial strand pair at the right edge with one crossing."""
    if sign not in (1, -1):
        raise ValueError("stabilization sign must be +1 or -1")
    old = p.strands
    word = BraidWord(old + 2, p.word.letters + (sign * old,))
    return plat_closure(word)


def destabilize_syntactic(p: Plat) -> Plat | None:
    """Strip a trailing sigma_{2n-2}^{+-1} when the rest of the reduced word
    stays on the first 2n-2 strands; otherwise return None."""
    if p.strands < 4:
        return None
    reduced = free_reduce(p.word)
    if not reduced.letters:
        return None
    last = reduced.letters[-1]
    edge = p.strands - 2
    if abs(last) != edge:
        return None
    body = reduced.letters[:-1]
    if any(abs(x) > edge - 1 for x in body):
        return None
    return plat_closure(BraidWord(p.strands - 2, body))


def flip(p: Plat) -> Plat:
    """Rotate the diagram by pi about a horizontal axis: reverse the word,
    reflect indices i -> 2n - i, keep signs."""
    m = p.strands
    letters = tuple(
        (1 if x > 0 else -1) * (m - abs(x)) for x in reversed(p.word.letters))
    return plat_closure(BraidWord(m, letters))


PocketStep = tuple[Literal["left", "right"], Literal["over", "under"]]


def pocket_move(p: Plat, side: Side, bridge: int,
                path: Sequence[PocketStep]) -> tuple[Plat, tuple[tuple[str, bool, str], ...]]:
    """Drag one bridge along a path of unit steps, emitting the equivalent
    catalog-move trace.

    Each unit step is one cross generator: stepping right from bridge b is
    cross_b (inverse for the under layer); stepping back along the same
    layer retraces and cancels.  The returned trace entries are
    (generator name, inverse, side) in application order, and replaying
    them through apply_move reproduces the returned plat exactly.
    """
    n = p.bridges
    if not 1 <= bridge <= n:
        raise PathRangeError(f"bridge {bridge} outside 1..{n}")
    current = p
    pos = bridge
    trace: list[tuple[str, bool, str]] = []
    for step_idx, (direction, layer) in enumerate(path):
        if direction == "right":
            if pos + 1 > n:
                raise PathRangeError(
                    f"step {step_idx}: bridge would leave the strand range")
            name, inv = f"cross_{pos}", (layer == "under")
            pos += 1
        elif direction == "left":
            if pos - 1 < 1:
                raise PathRangeError(
                    f"step {step_idx}: bridge would leave the strand range")
            name, inv = f"cross_{pos - 1}", (layer == "over")
            pos -= 1
        else:
            raise ValueError(f"step direction must be 'left' or 'right', got {direction!r}")
        current = apply_move(current, side, name, inverse=inv)
        trace.append((name, inv, side))
    return current, tuple(trace)


# ---------------------------------------------------------------------------
# diagram tracing
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DiagramCrossing:
    position: int        # generator index i (between columns i and i+1)
    sign: int            # letter sign
    height: int          # 1-based position in the word
    oriented_sign: int   # crossing sign under the traced orientation
    over_arc: int
    under_in_arc: int
    under_out_arc: int


@dataclass(frozen=True)
class DiagramArc:
    index: int
    component: int


@dataclass(frozen=True)
class PlatDiagram:
    n_bridges: int
    crossings: tuple[DiagramCrossing, ...]
    arcs: tuple[DiagramArc, ...]
    components: int
    # strand_columns[path][level] = column of the strand starting at bottom
    # column path+1, for levels 0..len(word)
    strand_columns: tuple[tuple[int, ...], ...]
    # +1 if the strand is traversed upward by the traced orientation
    strand_directions: tuple[int, ...]
    writhe: int       # total oriented writhe under the traced orientation
    self_writhe: int  # orientation-independent part: same-component crossings only


def diagram_of(p: Plat) -> PlatDiagram:
    """Trace the plat diagram: crossings, oriented writhe, and the arcs of
    the underlying link (arcs break at undercrossings), enough for a
    Wirtinger presentation and for rendering."""
    word = p.word
    m = word.strands
    length = len(word.letters)

    occ = list(range(-1, m))          # occ[c] = strand currently in column c
    col_of = list(range(1, m + 1))    # col_of[strand] = current column
    columns = [[s + 1] for s in range(m)]
    raw = []                          # (position, sign, left strand, right strand)
    for x in word.letters:
        i = abs(x)
        lp, rp = occ[i], occ[i + 1]
        raw.append((i, 1 if x > 0 else -1, lp, rp))
        occ[i], occ[i + 1] = rp, lp
        col_of[lp], col_of[rp] = i + 1, i
        for s in range(m):
            columns[s].append(col_of[s])

    top_col = [col_of[s] for s in range(m)]
    strand_at_top = [0] * (m + 1)
    for s in range(m):
        strand_at_top[top_col[s]] = s

    cup = p.bottom.involution()
    cap = p.top.involution()

    # passes[s] = [(crossing index, role)] in height order; role True = over
    passes: list[list[tuple[int, bool]]] = [[] for _ in range(m)]
    for k, (i, sign, lp, rp) in enumerate(raw):
        over_left = sign > 0
        passes[lp].append((k, over_left))
        passes[rp].append((k, not over_left))

    direction = [0] * m
    component_of_strand = [-1] * m
    comps: list[list[tuple[int, int]]] = []
    for start in range(m):
        if direction[start]:
            continue
        comp: list[tuple[int, int]] = []
        strand, d = start, 1
        while True:
            direction[strand] = d
            component_of_strand[strand] = len(comps)
            comp.append((strand, d))
            if d == 1:
                nxt_col = cap[top_col[strand]]
                strand, d = strand_at_top[nxt_col], -1
            else:
                nxt_col = cup[strand + 1]
                strand, d = nxt_col - 1, 1
            if strand == start and d == 1:
                break
        comps.append(comp)

    oriented = []
    writhe = 0
    self_writhe = 0
    for (i, sign, lp, rp) in raw:
        s = sign if direction[lp] == direction[rp] else -sign
        oriented.append(s)
        writhe += s
        if component_of_strand[lp] == component_of_strand[rp]:
            self_writhe += s

    # walk each component, cutting arcs at undercrossings
    arcs: list[DiagramArc] = []
    over_arc = [-1] * length
    under_in = [-1] * length
    under_out = [-1] * length
    for ci, comp in enumerate(comps):
        seq: list[tuple[int, bool]] = []
        for strand, d in comp:
            seq.extend(passes[strand] if d == 1 else reversed(passes[strand]))
        unders = [idx for idx, (_, over) in enumerate(seq) if not over]
        if not unders:
            arc = DiagramArc(len(arcs), ci)
            arcs.append(arc)
            for k, _ in seq:
                over_arc[k] = arc.index
            continue
        comp_arcs = [DiagramArc(len(arcs) + j, ci) for j in range(len(unders))]
        arcs.extend(comp_arcs)
        j = 0
        total = len(seq)
        for step in range(total):
            idx = (unders[0] + 1 + step) % total
            k, over = seq[idx]
            if over:
                over_arc[k] = comp_arcs[j].index
            else:
                under_in[k] = comp_arcs[j].index
                j = (j + 1) % len(comp_arcs)
                under_out[k] = comp_arcs[j].index

    crossings = tuple(
        DiagramCrossing(position=i, sign=sign, height=k + 1,
                        oriented_sign=oriented[k], over_arc=over_arc[k],
                        under_in_arc=under_in[k], under_out_arc=under_out[k])
        for k, (i, sign, lp, rp) in enumerate(raw))

    return PlatDiagram(
        n_bridges=m // 2,
        crossings=crossings,
        arcs=tuple(arcs),
        components=len(comps),
        strand_columns=tuple(tuple(c) for c in columns),
        strand_directions=tuple(direction),
        writhe=writhe,
        self_writhe=self_writhe,
    )


def oriented_writhe(p: Plat) -> int:
    """Sum of crossing signs under the link's orientation (not, in general,
    the exponent sum: plat strands are not coherently oriented)."""
    return diagram_of(p).writhe
