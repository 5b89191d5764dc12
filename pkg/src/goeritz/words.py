"""Words over the generators alpha, beta, gamma, delta of the genus-2 Goeritz group.

alpha and gamma are involutions, so the alphabet has six letters:
``a`` (alpha), ``b``/``B`` (beta and its inverse), ``g`` (gamma),
``d``/``D`` (delta and its inverse).  Upper-case ``A`` and ``G`` are
accepted on input and read as ``a`` and ``g``.
"""

from __future__ import annotations

import random
from enum import Enum

__all__ = [
    "Letter",
    "Word",
    "WordParseError",
    "LETTERS",
    "inverse",
    "invert_word",
    "parse_word",
    "render",
    "free_reduce",
    "random_word",
]


class Letter(str, Enum):
    ALPHA = "a"
    BETA = "b"
    BETA_INV = "B"
    GAMMA = "g"
    DELTA = "d"
    DELTA_INV = "D"

    def __repr__(self):
        return self.value


Word = tuple[Letter, ...]

LETTERS: tuple[Letter, ...] = tuple(Letter)

_INVERSE = {
    Letter.ALPHA: Letter.ALPHA,
    Letter.GAMMA: Letter.GAMMA,
    Letter.BETA: Letter.BETA_INV,
    Letter.BETA_INV: Letter.BETA,
    Letter.DELTA: Letter.DELTA_INV,
    Letter.DELTA_INV: Letter.DELTA,
}

_FROM_CHAR = {l.value: l for l in Letter}
_FROM_CHAR["A"] = Letter.ALPHA
_FROM_CHAR["G"] = Letter.GAMMA


class WordParseError(ValueError):
    pass


def inverse(letter: Letter) -> Letter:
    return _INVERSE[letter]


def invert_word(w: Word) -> Word:
    return tuple(_INVERSE[l] for l in reversed(w))


def parse_word(text: str) -> Word:
    """Read a word, ignoring whitespace.  No free reduction is done."""
    out = []
    for pos, ch in enumerate(text):
        if ch.isspace():
            continue
        try:
            out.append(_FROM_CHAR[ch])
        except KeyError:
            raise WordParseError(f"unexpected character {ch!r} at position {pos} in {text!r}") from None
    return tuple(out)


def render(w: Word) -> str:
    return "".join(l.value for l in w)


def free_reduce(w: Word) -> Word:
    stack: list[Letter] = []
    for l in w:
        if stack and stack[-1] is _INVERSE[l]:
            stack.pop()
        else:
            stack.append(l)
    return tuple(stack)


def random_word(length: int, seed: int) -> Word:
    """Draw ``length`` uniform letters from a generator seeded by ``seed``, then freely reduce."""
    if length < 1:
        raise ValueError("length must be positive")
    rng = random.Random(seed)
    return free_reduce(tuple(rng.choices(LETTERS, k=length)))
