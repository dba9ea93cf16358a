"""Exact braid words and their elementary rewriting.

A braid word in B_m is a sequence of signed generator letters: the integer
``k`` (k >= 1) stands for sigma_k and ``-k`` for its inverse.  Letters act
bottom-to-top of the diagram, the first letter nearest the bottom.
Permutations use 1-based point labels matching the sigma subscripts.

The canonical text form is whitespace-separated signed integers with an
optional leading header ``strands=<m>;``.  Generator notation ("s2",
"s5^-1") is accepted on input.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .errors import ParseError, StrandMismatchError


@dataclass(frozen=True)
class Permutation:
    """A bijection of {1..m}, stored as the tuple of images."""

    images: tuple[int, ...]

    def __post_init__(self):
        m = len(self.images)
        if sorted(self.images) != list(range(1, m + 1)):
            raise ValueError(f"not a permutation of 1..{m}: {self.images}")

    @classmethod
    def identity(cls, m: int) -> "Permutation":
        return cls(tuple(range(1, m + 1)))

    @classmethod
    def transposition(cls, m: int, i: int) -> "Permutation":
        """The adjacent transposition (i, i+1) in S_m."""
        images = list(range(1, m + 1))
        images[i - 1], images[i] = images[i], images[i - 1]
        return cls(tuple(images))

    def __call__(self, point: int) -> int:
        return self.images[point - 1]

    def __len__(self) -> int:
        return len(self.images)

    def compose_after(self, first: "Permutation") -> "Permutation":
        """self o first: apply ``first``, then ``self``."""
        return Permutation(tuple(self.images[i - 1] for i in first.images))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for i, img in enumerate(self.images, start=1):
            inv[img - 1] = i
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(img == i for i, img in enumerate(self.images, start=1))

    def cycles(self, include_fixed: bool = False) -> list[tuple[int, ...]]:
        seen = [False] * len(self.images)
        out = []
        for start in range(1, len(self.images) + 1):
            if seen[start - 1]:
                continue
            cyc = [start]
            seen[start - 1] = True
            p = self(start)
            while p != start:
                cyc.append(p)
                seen[p - 1] = True
                p = self(p)
            if len(cyc) > 1 or include_fixed:
                out.append(tuple(cyc))
        return out


@dataclass(frozen=True)
class BraidWord:
    """A word in B_strands as a tuple of signed generator letters."""

    strands: int
    letters: tuple[int, ...] = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(int(x) for x in self.letters))
        if self.strands < 2:
            raise ValueError(f"strands must be >= 2, got {self.strands}")
        for x in self.letters:
            if x == 0:
                raise ValueError("letter index 0 is not a generator")
            if abs(x) >= self.strands:
                raise ValueError(
                    f"letter {x} needs index <= {self.strands - 1} in B_{self.strands}")

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def with_letters(self, letters: Sequence[int]) -> "BraidWord":
        return BraidWord(self.strands, tuple(letters))

    # -- serialization -------------------------------------------------------

    def to_text(self, header: bool = False) -> str:
        body = " ".join(str(x) for x in self.letters)
        return f"strands={self.strands}; {body}".rstrip() if header else body

    def to_json_dict(self) -> dict:
        return {"strands": self.strands, "word": list(self.letters)}

    @classmethod
    def from_json_dict(cls, data) -> "BraidWord":
        try:
            strands = int(data["strands"])
            word = [int(x) for x in data["word"]]
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"bad braid word object: {exc}") from exc
        try:
            return cls(strands, tuple(word))
        except ValueError as exc:
            raise ParseError(str(exc)) from exc

    def __str__(self) -> str:
        return self.to_text(header=True)


def _parse_token(tok: str) -> int:
    if tok.startswith("s") or tok.startswith("S"):
        body = tok[1:]
        power = 1
        if "^" in body:
            body, _, exp = body.partition("^")
            try:
                power = int(exp)
            except ValueError:
                raise ParseError(f"bad exponent in token {tok!r}")
            if power not in (1, -1):
                raise ParseError(f"token {tok!r}: only ^1 and ^-1 are single letters")
        try:
            idx = int(body)
        except ValueError:
            raise ParseError(f"unparseable token {tok!r}")
        val = idx * power
    else:
        try:
            val = int(tok)
        except ValueError:
            raise ParseError(f"unparseable token {tok!r}")
    if val == 0:
        raise ParseError("generator index 0 is not allowed")
    return val


def parse_braid_word(text: str, strands: int | None = None) -> BraidWord:
    """Parse whitespace-separated letters, inferring strand count if omitted.

    Inference: (max letter index) + 1, rounded up to the next even number.
    A ``strands=<m>;`` header in the text takes the role of the argument.
    """
    text = text.strip()
    if text.startswith("strands="):
        head, _, rest = text.partition(";")
        try:
            header_strands = int(head[len("strands="):])
        except ValueError:
            raise ParseError(f"bad strands header {head!r}")
        if strands is not None and strands != header_strands:
            raise ParseError(
                f"strands argument {strands} conflicts with header {header_strands}")
        strands = header_strands
        text = rest.strip()
    letters = [_parse_token(tok) for tok in text.split()] if text else []
    max_index = max((abs(x) for x in letters), default=1)
    if strands is None:
        strands = max_index + 1
        if strands % 2:
            strands += 1
    elif strands < max_index + 1:
        raise ParseError(
            f"strands={strands} too small for generator index {max_index}")
    if strands < 2:
        raise ParseError(f"strands must be >= 2, got {strands}")
    return BraidWord(strands, tuple(letters))


def free_reduce(w: BraidWord) -> BraidWord:
    """Delete adjacent cancelling pairs until none remain."""
    stack: list[int] = []
    for x in w.letters:
        if stack and stack[-1] == -x:
            stack.pop()
        else:
            stack.append(x)
    if len(stack) == len(w.letters):
        return w
    return w.with_letters(stack)


def reduced_letters(letters: Iterable[int]) -> tuple[int, ...]:
    """free_reduce on a raw letter sequence (used by the search hot path)."""
    stack: list[int] = []
    for x in letters:
        if stack and stack[-1] == -x:
            stack.pop()
        else:
            stack.append(x)
    return tuple(stack)


def permutation_of(w: BraidWord) -> Permutation:
    """Image under B_m -> S_m, sigma_i -> (i, i+1), first letter acting first."""
    images = list(range(1, w.strands + 1))
    # images[p-1] tracks where point p has been sent so far; applying the
    # next transposition (i, i+1) post-composes, i.e. swaps the *values* i, i+1.
    pos = list(range(w.strands + 1))  # pos[v] = current preimage slot of value v
    for x in w.letters:
        i = abs(x)
        a, b = pos[i], pos[i + 1]
        images[a - 1], images[b - 1] = i + 1, i
        pos[i], pos[i + 1] = b, a
    return Permutation(tuple(images))


def exponent_sum(w: BraidWord) -> int:
    """Sum of letter signs (the algebraic crossing count of the word)."""
    return sum(1 if x > 0 else -1 for x in w.letters)


def invert(w: BraidWord) -> BraidWord:
    return w.with_letters(tuple(-x for x in reversed(w.letters)))


def mirror(w: BraidWord) -> BraidWord:
    """Flip every letter sign (the mirror-image diagram)."""
    return w.with_letters(tuple(-x for x in w.letters))


def concat(w1: BraidWord, w2: BraidWord) -> BraidWord:
    if w1.strands != w2.strands:
        raise StrandMismatchError(
            f"cannot concatenate words in B_{w1.strands} and B_{w2.strands}")
    return BraidWord(w1.strands, w1.letters + w2.letters)


def insertion_alphabet(w: BraidWord, extra: Iterable[int] = ()) -> set[int]:
    """Indices present in w, their neighbors, and any extras, clipped to range."""
    base = {abs(x) for x in w.letters}
    widened = set(base)
    for i in base:
        widened.add(i - 1)
        widened.add(i + 1)
    widened.update(extra)
    return {i for i in widened if 1 <= i <= w.strands - 1}


def relation_sites(letters: Sequence[int]) -> list[tuple[str, int]]:
    """Positions where a braid relation applies: ("commute", p) swaps letters
    p, p+1 with far indices; ("triangle", p) rewrites an x y x pattern with
    adjacent indices and matching signs."""
    sites = []
    for p in range(len(letters) - 1):
        if abs(abs(letters[p]) - abs(letters[p + 1])) >= 2:
            sites.append(("commute", p))
    for p in range(len(letters) - 2):
        a, b, c = letters[p], letters[p + 1], letters[p + 2]
        if a == c and abs(abs(a) - abs(b)) == 1 and (a > 0) == (b > 0):
            sites.append(("triangle", p))
    return sites


def cancel_sites(letters: Sequence[int]) -> list[int]:
    """Positions p where letters p, p+1 are an inverse pair."""
    return [p for p in range(len(letters) - 1) if letters[p] == -letters[p + 1]]


def apply_relation(letters: tuple[int, ...], kind: str, p: int) -> tuple[int, ...]:
    """Apply one relation rewrite at a recorded site.  Raises on a stale site."""
    if kind == "commute":
        if not (0 <= p < len(letters) - 1
                and abs(abs(letters[p]) - abs(letters[p + 1])) >= 2):
            raise ValueError(f"no far-commutation site at position {p}")
        return letters[:p] + (letters[p + 1], letters[p]) + letters[p + 2:]
    if kind == "triangle":
        if not (0 <= p < len(letters) - 2):
            raise ValueError(f"no braid-relation site at position {p}")
        a, b, c = letters[p], letters[p + 1], letters[p + 2]
        if not (a == c and abs(abs(a) - abs(b)) == 1 and (a > 0) == (b > 0)):
            raise ValueError(f"no braid-relation site at position {p}")
        return letters[:p] + (b, a, b) + letters[p + 3:]
    raise ValueError(f"unknown relation kind {kind!r}")


def braid_rewrites(w: BraidWord, extra_letters: Iterable[int] = ()) -> set[BraidWord]:
    """All words one elementary rewrite away from w.

    Rewrites: far commutation, the triangle relation (matching signs), one
    free deletion of a cancelling pair, and one free insertion at each
    position over the bounded alphabet (indices occurring in w +- 1).
    """
    out: set[BraidWord] = set()
    L = w.letters
    for kind, p in relation_sites(L):
        out.add(w.with_letters(apply_relation(L, kind, p)))
    for p in cancel_sites(L):
        out.add(w.with_letters(L[:p] + L[p + 2:]))
    for i in sorted(insertion_alphabet(w, extra_letters)):
        for p in range(len(L) + 1):
            out.add(w.with_letters(L[:p] + (i, -i) + L[p:]))
            out.add(w.with_letters(L[:p] + (-i, i) + L[p:]))
    return out
