"""Shipped corpus of reference plats and the self-contained check suite.

The corpus file holds one plat per line in the canonical text format; the
comment line above each entry names it.  `verify_corpus` runs exact checks
against the entries and reports one result per check; it needs no network
and finishes under the default search budget.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources

from .braids import exponent_sum, parse_braid_word
from .errors import ParseError
from .invariants import certificate
from .plats import Plat, component_count, destabilize_syntactic, flip, plat_closure
from .search import SearchBudget


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    note: str
    plat: Plat


def load_corpus() -> list[CorpusEntry]:
    text = (resources.files("platkit") / "data" / "corpus.txt").read_text()
    entries: list[CorpusEntry] = []
    pending: tuple[str, str] | None = None
    for line in text.splitlines():
        line = line.strip()
        if not line:
            continue
        if line.startswith("#"):
            body = line.lstrip("#").strip()
            if "--" in body:
                name, _, note = body.partition("--")
                pending = (name.strip(), note.strip())
            continue
        plat = plat_closure(parse_braid_word(line))
        if pending is None:
            raise ParseError("corpus entry without a preceding name comment")
        entries.append(CorpusEntry(pending[0], pending[1], plat))
        pending = None
    return entries


def corpus_entry(name: str) -> CorpusEntry:
    for entry in load_corpus():
        if entry.name == name:
            return entry
    raise KeyError(f"no corpus entry named {name!r}")


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str

    def to_json_dict(self) -> dict:
        return {"name": self.name, "ok": self.ok, "detail": self.detail}


def verify_corpus(budget: SearchBudget | None = None) -> list[CheckResult]:
    """Run the shipped corpus checks; results are reported, not raised."""
    results: list[CheckResult] = []

    def check(name: str, ok: bool, detail: str):
        results.append(CheckResult(name, bool(ok), detail))

    example = corpus_entry("example-6plat").plat
    check("example-6plat-info",
          example.strands == 6 and example.bridges == 3
          and component_count(example) == 1 and exponent_sum(example.word) == 5,
          f"strands={example.strands} bridges={example.bridges} "
          f"components={component_count(example)} writhe={exponent_sum(example.word)}")

    four = corpus_entry("fourbridge-nodestab").plat
    three = corpus_entry("threebridge-partner").plat
    c4, c3 = certificate(four), certificate(three)
    check("pair-components",
          c4.components == 1 and c3.components == 1,
          f"components {c4.components} and {c3.components}")
    # bridge counts differ, so only the strand-count-free fields compare
    jones_ok = c4.jones == c3.jones
    alex_ok = c4.alexander_normalized == c3.alexander_normalized
    check("pair-jones-equal", jones_ok,
          "equal" if jones_ok else f"{c4.jones}  vs  {c3.jones}")
    check("pair-alexander-equal", alex_ok,
          "equal" if alex_ok else
          f"{c4.alexander_normalized}  vs  {c3.alexander_normalized}")

    check("fourbridge-no-syntactic-destabilization",
          destabilize_syntactic(four) is None,
          "destabilize_syntactic returned nothing"
          if destabilize_syntactic(four) is None else "unexpectedly destabilized")

    for k in (3, 5, 7):
        entry = corpus_entry(f"torus-k{k}").plat
        same = certificate(entry) == certificate(flip(entry))
        check(f"torus-k{k}-flip-invariant", same,
              "certificate(flip(p)) == certificate(p)" if same else "flip changed the certificate")

    unknot = corpus_entry("unknot-2plat").plat
    cu = certificate(unknot)
    check("unknot-certificate",
          cu.components == 1 and cu.coset_type.to_list() == [1]
          and cu.jones.terms == {0: 1} and cu.alexander_normalized.terms == {0: 1},
          f"certificate {cu.to_json_dict()}")

    return results
