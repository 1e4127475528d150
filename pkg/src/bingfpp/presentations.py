"""Finite group presentations and words in free groups.

Text grammar::

    presentation := "<" names "|" relators ">"
    names        := name ("," name)*
    relators     := [word ("," word)*]
    word         := factor*            (juxtaposition, whitespace optional)
    factor       := ["-"] atom ["^" ["-"] digits]
    atom         := name | "[" word "," word "]" | "(" word ")"

``[x,y]`` expands to ``x y x^-1 y^-1``.  A leading ``-`` inverts the atom.
Names are ASCII alphanumerics starting with a letter; inside a word a run of
letters is split greedily into the longest declared generator names, so
``abc`` over generators ``a, b, c`` reads as ``a b c``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .intlinalg import IntMatrix

Letter = tuple[int, int]  # (generator index, nonzero exponent)


def _reduce(letters: Iterable[Letter]) -> tuple[Letter, ...]:
    out: list[Letter] = []
    for g, e in letters:
        if e == 0:
            continue
        if out and out[-1][0] == g:
            s = out[-1][1] + e
            out.pop()
            if s:
                out.append((g, s))
        else:
            out.append((g, e))
    return tuple(out)


@dataclass(frozen=True)
class Word:
    """An element of a free group, stored freely reduced."""

    letters: tuple[Letter, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", _reduce((int(g), int(e)) for g, e in self.letters))

    @classmethod
    def gen(cls, index: int, exponent: int = 1) -> Word:
        return cls(((index, exponent),))

    def __mul__(self, other: Word) -> Word:
        return Word(self.letters + other.letters)

    def __pow__(self, k: int) -> Word:
        if k < 0:
            return self.inverse() ** (-k)
        return Word(self.letters * k)

    def inverse(self) -> Word:
        return Word(tuple((g, -e) for g, e in reversed(self.letters)))

    def __len__(self) -> int:
        return sum(abs(e) for _, e in self.letters)

    def is_identity(self) -> bool:
        return not self.letters

    def exponent_sums(self, generator_count: int) -> list[int]:
        sums = [0] * generator_count
        for g, e in self.letters:
            sums[g] += e
        return sums

    def substitute(self, images: Sequence[Word]) -> Word:
        """Image under the homomorphism sending generator ``i`` to ``images[i]``."""
        out = Word()
        for g, e in self.letters:
            out = out * images[g] ** e
        return out

    def format(self, names: Sequence[str]) -> str:
        if not self.letters:
            return "1"
        return " ".join(names[g] if e == 1 else f"{names[g]}^{e}" for g, e in self.letters)


def free_reduce(w: Word | Iterable[Letter]) -> Word:
    # Word construction already reduces; this accepts raw letter sequences too.
    return Word(tuple(w.letters if isinstance(w, Word) else w))


def commutator(x: Word, y: Word) -> Word:
    return x * y * x.inverse() * y.inverse()


@dataclass(frozen=True)
class Presentation:
    generator_names: tuple[str, ...]
    relators: tuple[Word, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "generator_names", tuple(self.generator_names))
        object.__setattr__(self, "relators", tuple(self.relators))
        seen = set()
        for name in self.generator_names:
            _check_name(name)
            if name in seen:
                raise ValueError(f"duplicate generator name {name!r}")
            seen.add(name)
        n = len(self.generator_names)
        for r in self.relators:
            for g, _ in r.letters:
                if not 0 <= g < n:
                    raise ValueError(f"generator index {g} out of range for {n} generators")

    @property
    def generator_count(self) -> int:
        return len(self.generator_names)

    def format(self) -> str:
        gens = ", ".join(self.generator_names)
        rels = ", ".join(r.format(self.generator_names) for r in self.relators)
        return f"<{gens} | {rels}>"

    def __str__(self) -> str:
        return self.format()


def _check_name(name: str) -> None:
    if not name:
        raise PresentationSyntaxError("empty generator name", 0)
    if not (name.isascii() and name[0].isalpha() and name.isalnum()):
        raise PresentationSyntaxError(f"invalid generator name {name!r}", 0)


class PresentationSyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class UnknownGeneratorError(PresentationSyntaxError):
    pass


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0
        self.names: list[str] = []
        self.index: dict[str, int] = {}

    def error(self, msg: str, cls=PresentationSyntaxError):
        raise cls(msg, self.pos)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str):
        if self.peek() != ch:
            found = self.peek() or "end of input"
            self.error(f"expected {ch!r}, found {found!r}")
        self.pos += 1

    def parse(self) -> Presentation:
        self.expect("<")
        self.parse_names()
        self.expect("|")
        relators = []
        if self.peek() != ">":
            relators.append(self.parse_word(top=True))
            while self.peek() == ",":
                self.pos += 1
                relators.append(self.parse_word(top=True))
        self.expect(">")
        if self.peek():
            self.error("trailing characters after '>'")
        return Presentation(tuple(self.names), tuple(relators))

    def parse_names(self):
        while True:
            self.skip_ws()
            start = self.pos
            while self.pos < len(self.text) and self.text[self.pos].isascii() and self.text[self.pos].isalnum():
                self.pos += 1
            name = self.text[start:self.pos]
            if not name:
                if self.peek() == "|" and not self.names:
                    return  # no generators at all
                self.error("empty generator name")
            if not name[0].isalpha():
                self.pos = start
                self.error(f"generator name {name!r} must start with a letter")
            if name in self.index:
                self.pos = start
                self.error(f"duplicate generator name {name!r}")
            self.index[name] = len(self.names)
            self.names.append(name)
            if self.peek() != ",":
                return
            self.pos += 1

    def parse_word(self, top: bool = False) -> Word:
        w = Word()
        while True:
            ch = self.peek()
            if ch == "" or ch in ",|>])":
                if top and ch in "])":
                    self.error(f"unbalanced {ch!r}")
                return w
            w = w * self.parse_factor()

    def parse_factor(self) -> Word:
        ch = self.peek()
        invert = False
        if ch == "-":
            invert = True
            self.pos += 1
            ch = self.peek()
        if ch == "[":
            self.pos += 1
            x = self.parse_word()
            self.expect(",")
            y = self.parse_word()
            self.expect("]")
            atom = commutator(x, y)
        elif ch == "(":
            self.pos += 1
            atom = self.parse_word()
            self.expect(")")
        elif ch == "1":
            self.pos += 1
            atom = Word()
        elif ch.isascii() and ch.isalpha():
            atom = self.parse_generator()
        elif ch == "":
            self.error("unexpected end of input")
        else:
            self.error(f"unexpected character {ch!r}")
        if invert:
            atom = atom.inverse()
        if self.peek() == "^":
            self.pos += 1
            atom = atom ** self.parse_int()
        return atom

    def parse_generator(self) -> Word:
        start = self.pos
        end = start
        while end < len(self.text) and self.text[end].isascii() and self.text[end].isalnum():
            end += 1
        run = self.text[start:end]
        for k in range(len(run), 0, -1):
            if run[:k] in self.index:
                self.pos = start + k
                return Word.gen(self.index[run[:k]])
        self.error(f"unknown generator in {run!r}", UnknownGeneratorError)

    def parse_int(self) -> int:
        self.skip_ws()
        start = self.pos
        if self.pos < len(self.text) and self.text[self.pos] in "+-":
            self.pos += 1
        digits_start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == digits_start:
            self.pos = start
            self.error("expected an integer exponent")
        return int(self.text[start:self.pos])


def parse_presentation(text: str) -> Presentation:
    """Parse ``"<a,b | a^2, b^3, [a,b]>"``-style text.

    Raises :class:`PresentationSyntaxError` (with ``position``) on malformed
    input and :class:`UnknownGeneratorError` for undeclared names.
    """
    return _Parser(text).parse()


def exponent_sum_matrix(p: Presentation) -> IntMatrix:
    """Relators x generators matrix of total exponents."""
    n = p.generator_count
    return IntMatrix.from_rows([r.exponent_sums(n) for r in p.relators], n)


def deficiency(p: Presentation) -> int:
    return len(p.relators) - p.generator_count
