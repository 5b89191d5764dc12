"""Normal forms in the amalgamated product H_2 = H_P *_{H_E} H_M.

Every element has a unique expression

    s_1 s_2 ... s_r * e

where the s_i are nontrivial transversal representatives (beta^n, n != 0, or
delta^k, k in {1, 2}) from alternating factors, and e is in H_E = <alpha, gamma>.
Two words are equal in H_2 exactly when their normal forms agree.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple

from . import factors as F
from .factors import E_ID, EElem
from .words import Letter, Word, parse_word

__all__ = [
    "Syllable",
    "AmalgamElem",
    "IDENTITY",
    "Membership",
    "push_letter",
    "push_word",
    "normal_form",
    "amal_mul",
    "amal_inv",
    "is_identity",
    "equal",
    "order",
    "membership",
    "relators",
    "theta_twist",
    "render_elem",
    "elem_to_json",
    "elem_from_json",
]


class Syllable(NamedTuple):
    factor: str  # "P" or "M"
    exp: int

    def __repr__(self):
        return f"{self.factor}:{self.exp}"


@dataclass(frozen=True)
class AmalgamElem:
    syllables: tuple[Syllable, ...] = ()
    tail: EElem = E_ID

    def __mul__(self, other: "AmalgamElem") -> "AmalgamElem":
        return amal_mul(self, other)

    def __str__(self):
        return render_elem(self) or "1"


IDENTITY = AmalgamElem()


def _mul_into(syls: list[Syllable], tail: EElem, factor: str, n: int, a: int, c: int) -> EElem:
    """Right-multiply ``syls * tail`` by the factor element ``(n, a, c)``.

    ``syls`` is updated in place; the new tail is returned.  The tail is
    absorbed into the factor, merged with the last syllable when it shares the
    factor, and the product is re-split along the transversal.  If the
    representative collapses to 1 the syllable disappears and the H_E residue
    is already a valid tail for the shorter prefix.
    """
    if factor == "P":
        # embed(tail) * (n, a, c) in H_P
        y = F.PElem(n, tail.a ^ a ^ (tail.c & n & 1), tail.c ^ c)
        if syls and syls[-1].factor == "P":
            y = F.PElem(syls.pop().exp + y.n, y.a, y.c)
        rep, e = F.p_decompose(y)
    else:
        k = (-n) % 3 if tail.c else n % 3
        y = F.MElem(k, tail.a ^ a, tail.c ^ c)
        if syls and syls[-1].factor == "M":
            y = F.MElem((syls.pop().exp + y.k) % 3, y.a, y.c)
        rep, e = F.m_decompose(y)
    if rep:
        syls.append(Syllable(factor, rep))
    return e


# letter -> (factor, n, a, c); involutions act on the tail only.
_LETTER_ACTION = {
    Letter.BETA: ("P", 1, 0, 0),
    Letter.BETA_INV: ("P", -1, 0, 0),
    Letter.DELTA: ("M", 1, 0, 0),
    Letter.DELTA_INV: ("M", 2, 0, 0),
}


def push_word(x: AmalgamElem, w: Word) -> AmalgamElem:
    # _mul_into specialised to single letters.  Moving the tail e = a^ta g^tc
    # past beta^s turns it into beta^s a^(ta^tc) g^tc; past delta^k it gives
    # delta^(-k if tc else k) e.  Syllables are kept as [factor, exp] pairs.
    stack = [[s.factor, s.exp] for s in x.syllables]
    ta, tc = x.tail
    for l in w:
        if l is Letter.ALPHA:
            ta ^= 1
        elif l is Letter.GAMMA:
            tc ^= 1
        elif l is Letter.BETA or l is Letter.BETA_INV:
            ta ^= tc
            step = 1 if l is Letter.BETA else -1
            if stack and stack[-1][0] == "P":
                stack[-1][1] += step
                if not stack[-1][1]:
                    stack.pop()
            else:
                stack.append(["P", step])
        else:
            k = 1 if l is Letter.DELTA else 2
            if tc:
                k = 3 - k
            if stack and stack[-1][0] == "M":
                e = (stack[-1][1] + k) % 3
                if e:
                    stack[-1][1] = e
                else:
                    stack.pop()
            else:
                stack.append(["M", k])
    return AmalgamElem(tuple(Syllable(f, e) for f, e in stack), EElem(ta, tc))


def _push_word_general(x: AmalgamElem, w: Word) -> AmalgamElem:
    # reference path through the factor arithmetic
    syls = list(x.syllables)
    tail = x.tail
    for l in w:
        if l is Letter.ALPHA:
            tail = EElem(tail.a ^ 1, tail.c)
        elif l is Letter.GAMMA:
            tail = EElem(tail.a, tail.c ^ 1)
        else:
            tail = _mul_into(syls, tail, *_LETTER_ACTION[l])
    return AmalgamElem(tuple(syls), tail)


def push_letter(x: AmalgamElem, l: Letter) -> AmalgamElem:
    return push_word(x, (l,))


def normal_form(w: Word | str) -> AmalgamElem:
    if isinstance(w, str):
        w = parse_word(w)
    return push_word(IDENTITY, w)


def amal_mul(x: AmalgamElem, y: AmalgamElem) -> AmalgamElem:
    syls = list(x.syllables)
    tail = x.tail
    for s in y.syllables:
        tail = _mul_into(syls, tail, s.factor, s.exp, 0, 0)
    return AmalgamElem(tuple(syls), F.e_mul(tail, y.tail))


def amal_inv(x: AmalgamElem) -> AmalgamElem:
    # (s_1 ... s_r e)^-1 = e s_r^-1 ... s_1^-1
    syls: list[Syllable] = []
    tail = x.tail
    for s in reversed(x.syllables):
        if s.factor == "P":
            tail = _mul_into(syls, tail, "P", -s.exp, 0, 0)
        else:
            tail = _mul_into(syls, tail, "M", 3 - s.exp, 0, 0)
    return AmalgamElem(tuple(syls), tail)


def is_identity(x: AmalgamElem) -> bool:
    return x == IDENTITY


def equal(w1: Word | str, w2: Word | str) -> bool:
    return normal_form(w1) == normal_form(w2)


def order(w: Word | str | AmalgamElem) -> float | int:
    """Order of an element of H_2, or ``math.inf``.

    A finite-order element of an amalgam fixes a vertex of the Bass-Serre
    tree, so it is conjugate into H_P or H_M.  Element orders there are
    1, 2, 3 or 6, all dividing 6, so x^6 != 1 already proves infinite order.
    """
    x = w if isinstance(w, AmalgamElem) else normal_form(w)
    power = x
    for k in range(1, 7):
        if power == IDENTITY:
            return k
        power = amal_mul(power, x)
    return math.inf


class Membership(str, Enum):
    IN_HE = "InHE"
    IN_HP_ONLY = "InHPOnly"
    IN_HM_ONLY = "InHMOnly"
    NOT_IN_FACTORS = "NotInFactors"


def membership(w: Word | str | AmalgamElem) -> Membership:
    x = w if isinstance(w, AmalgamElem) else normal_form(w)
    if not x.syllables:
        return Membership.IN_HE
    if len(x.syllables) == 1:
        return Membership.IN_HP_ONLY if x.syllables[0].factor == "P" else Membership.IN_HM_ONLY
    return Membership.NOT_IN_FACTORS


_RELATORS = ("aa", "gg", "ddd", "agag", "adaD", "abaB", "gbgBA", "DgddG")


def relators() -> list[Word]:
    """Relator words of the defining presentation of H_2."""
    return [parse_word(r) for r in _RELATORS]


_THETA = {
    Letter.ALPHA: (Letter.ALPHA,),
    Letter.BETA: (Letter.ALPHA, Letter.BETA),
    Letter.BETA_INV: (Letter.BETA_INV, Letter.ALPHA),
    Letter.GAMMA: (Letter.ALPHA, Letter.GAMMA),
    Letter.DELTA: (Letter.DELTA,),
    Letter.DELTA_INV: (Letter.DELTA_INV,),
}


def theta_twist(w: Word | str) -> Word:
    """Letterwise substitution beta -> alpha beta, gamma -> alpha gamma.

    alpha and delta are fixed.  This is how conjugation by the V <-> W swap
    homeomorphism acts on generators.
    """
    if isinstance(w, str):
        w = parse_word(w)
    return tuple(l2 for l in w for l2 in _THETA[l])


def render_elem(x: AmalgamElem) -> str:
    parts = []
    for s in x.syllables:
        if s.factor == "P":
            parts.append(("b" if s.exp > 0 else "B") * abs(s.exp))
        else:
            parts.append("d" * s.exp)
    parts.append("a" * x.tail.a + "g" * x.tail.c)
    return "".join(parts)


def elem_to_json(x: AmalgamElem) -> dict:
    return {
        "syllables": [{"factor": s.factor, "exp": s.exp} for s in x.syllables],
        "tail": {"alpha": x.tail.a, "gamma": x.tail.c},
    }


def elem_from_json(d: dict) -> AmalgamElem:
    syls = tuple(Syllable(s["factor"], int(s["exp"])) for s in d["syllables"])
    for s, t in zip(syls, syls[1:]):
        if s.factor == t.factor:
            raise ValueError("syllables must alternate between factors")
    for s in syls:
        if s.factor not in ("P", "M") or s.exp == 0 or (s.factor == "M" and s.exp not in (1, 2)):
            raise ValueError(f"invalid syllable {s!r}")
    a, c = int(d["tail"]["alpha"]), int(d["tail"]["gamma"])
    if a not in (0, 1) or c not in (0, 1):
        raise ValueError("tail exponents must be 0 or 1")
    return AmalgamElem(syls, EElem(a, c))
