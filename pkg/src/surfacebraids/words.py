"""Free-group words over indexed generator alphabets.

Conventions shared by the whole package: commutators are
``[a, b] = a^-1 b^-1 a b``, conjugation is ``a^b = b^-1 a b`` and
``^b a = b a b^-1``, and an empty product is the identity.  Words are kept
freely reduced at all times; every constructor reduces its input, so word
equality is plain structural equality.

The canonical text syntax is ``a[2,1] b[1,1]^-1 t[1,2]``: a kind letter,
bracketed indices, and an optional integer power.  ``t`` abbreviates the
``tau`` kind and ``s`` the ``sigma`` kind; ``1`` denotes the empty word.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

KINDS = ("A", "a", "b", "tau", "c", "d", "sigma", "x")

_ARITY = {"A": 2, "a": 2, "b": 2, "tau": 2, "c": 1, "d": 1, "sigma": 1, "x": 1}
_KIND_RANK = {kind: rank for rank, kind in enumerate(KINDS)}
_SYMBOL = {"A": "A", "a": "a", "b": "b", "tau": "t",
           "c": "c", "d": "d", "sigma": "s", "x": "x"}
_KIND_OF_SYMBOL = {sym: kind for kind, sym in _SYMBOL.items()}

_TOKEN_RE = re.compile(r"^([A-Za-z])\[(\d+)(?:,(\d+))?\](?:\^(-?\d+))?$")


class WordSyntaxError(ValueError):
    """Raised for malformed word text or invalid generator data."""


@dataclass(frozen=True, order=False)
class GeneratorId:
    """A single generator: a kind tag plus one or two positive indices."""

    kind: str
    indices: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.kind not in _ARITY:
            raise WordSyntaxError(f"unknown generator kind {self.kind!r}")
        if len(self.indices) != _ARITY[self.kind]:
            raise WordSyntaxError(
                f"kind {self.kind!r} takes {_ARITY[self.kind]} indices, "
                f"got {self.indices!r}")
        if any(i < 1 for i in self.indices):
            raise WordSyntaxError(f"indices must be >= 1, got {self.indices!r}")
        if self.kind == "tau" and not self.indices[0] < self.indices[1]:
            raise WordSyntaxError(f"tau requires p < q, got {self.indices!r}")
        if self.kind == "A" and not self.indices[0] < self.indices[1]:
            raise WordSyntaxError(f"A requires i < j, got {self.indices!r}")

    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        return (_KIND_RANK[self.kind], self.indices)

    def __lt__(self, other: "GeneratorId") -> bool:
        return self.sort_key() < other.sort_key()

    def __repr__(self) -> str:
        inner = ",".join(str(i) for i in self.indices)
        return f"{_SYMBOL[self.kind]}[{inner}]"

    @staticmethod
    def parse(text: str) -> "GeneratorId":
        gid, exp = parse_letter(text)
        if exp != 1:
            raise WordSyntaxError(f"expected a bare generator, got {text!r}")
        return gid


Letter = tuple[GeneratorId, int]


def parse_letter(token: str) -> Letter:
    m = _TOKEN_RE.match(token)
    if m is None:
        raise WordSyntaxError(f"cannot parse letter {token!r}")
    sym, i, j, exp = m.groups()
    if sym not in _KIND_OF_SYMBOL:
        raise WordSyntaxError(f"unknown generator symbol {sym!r}")
    indices = (int(i),) if j is None else (int(i), int(j))
    e = 1 if exp is None else int(exp)
    if e == 0:
        raise WordSyntaxError(f"zero exponent in {token!r}")
    return GeneratorId(_KIND_OF_SYMBOL[sym], indices), e


def format_letter(letter: Letter) -> str:
    gid, exp = letter
    return repr(gid) + (f"^{exp}" if exp != 1 else "")


def reduce_letters(raw: Iterable[Letter]) -> tuple[Letter, ...]:
    """Freely reduce a letter sequence (exponents get split into +-1)."""
    stack: list[Letter] = []
    for gid, exp in raw:
        if exp == 0:
            continue
        sign = 1 if exp > 0 else -1
        for _ in range(abs(exp)):
            if stack and stack[-1][0] == gid and stack[-1][1] == -sign:
                stack.pop()
            else:
                stack.append((gid, sign))
    return tuple(stack)


@dataclass(frozen=True)
class Word:
    """A freely reduced word; the empty tuple is the identity."""

    letters: tuple[Letter, ...] = ()

    def __post_init__(self) -> None:
        for k, (gid, exp) in enumerate(self.letters):
            if exp not in (1, -1):
                raise WordSyntaxError(f"letter exponent must be +-1, got {exp}")
            if k and self.letters[k - 1] == (gid, -exp):
                raise WordSyntaxError("word is not freely reduced")

    @staticmethod
    def identity() -> "Word":
        return Word()

    @staticmethod
    def of(raw: Iterable[Letter]) -> "Word":
        return Word(reduce_letters(raw))

    @staticmethod
    def gen(gid: GeneratorId, exp: int = 1) -> "Word":
        return Word.of([(gid, exp)])

    @property
    def is_identity(self) -> bool:
        return not self.letters

    def __len__(self) -> int:
        return len(self.letters)

    def __bool__(self) -> bool:
        return bool(self.letters)

    def __mul__(self, other: "Word") -> "Word":
        return Word(reduce_letters(self.letters + other.letters))

    def __invert__(self) -> "Word":
        return Word(tuple((g, -e) for g, e in reversed(self.letters)))

    def __pow__(self, n: int) -> "Word":
        if n < 0:
            return (~self) ** (-n)
        result = Word()
        for _ in range(n):
            result = result * self
        return result

    def __repr__(self) -> str:
        return format_word(self)


def reduce(raw: Iterable[Letter] | Word) -> Word:
    if isinstance(raw, Word):
        return raw
    return Word.of(raw)


def multiply(w1: Word, w2: Word) -> Word:
    return w1 * w2


def invert(w: Word) -> Word:
    return ~w


def commutator(a: Word, b: Word) -> Word:
    """[a, b] = a^-1 b^-1 a b."""
    return ~a * ~b * a * b


def conj_upper(b: Word, a: Word) -> Word:
    """^b a = b a b^-1."""
    return b * a * ~b


def conj_lower(a: Word, b: Word) -> Word:
    """a^b = b^-1 a b."""
    return ~b * a * b


def exponent_vector(w: Word, alphabet: Sequence[GeneratorId]) -> tuple[int, ...]:
    """Signed letter counts of ``w`` against an ordered alphabet."""
    index = {gid: k for k, gid in enumerate(alphabet)}
    vec = [0] * len(alphabet)
    for gid, exp in w.letters:
        if gid not in index:
            raise ValueError(f"letter {gid!r} outside alphabet")
        vec[index[gid]] += exp
    return tuple(vec)


def substitute(w: Word, mapping: Mapping[GeneratorId, Word]) -> Word:
    """Homomorphic image of ``w``; every letter of ``w`` must be mapped."""
    out: list[Letter] = []
    for gid, exp in w.letters:
        if gid not in mapping:
            raise ValueError(f"unmapped generator {gid!r}")
        image = mapping[gid]
        out.extend(image.letters if exp == 1 else (~image).letters)
    return Word.of(out)


def parse_word(text: str) -> Word:
    text = text.strip()
    if text in ("", "1"):
        return Word.identity()
    return Word.of(parse_letter(tok) for tok in text.split())


def format_word(w: Word) -> str:
    if w.is_identity:
        return "1"
    return " ".join(format_letter(letter) for letter in w.letters)
