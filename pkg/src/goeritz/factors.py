"""Closed-form arithmetic in the vertex and edge stabilizers H_P, H_M, H_E.

Normal forms:

* H_P = <alpha, beta, gamma>:  beta^n alpha^a gamma^c, n in Z, a, c in {0, 1}.
  gamma beta gamma = alpha beta gives gamma beta^m = alpha^m beta^m gamma, hence
  (n, a, c)(m, b, d) = (n + m, a ^ b ^ (c*m mod 2), c ^ d).
* H_M = <delta, alpha, gamma>: delta^k alpha^a gamma^c, k in Z/3.
  gamma delta gamma = delta^2 and alpha central give
  (k, a, c)(m, b, d) = (k + (-1)^c m mod 3, a ^ b, c ^ d).
* H_E = <alpha, gamma> = Z/2 + Z/2.

The left transversals of H_E are {beta^n} in H_P and {1, delta, delta^2} in H_M,
so every element splits as ``transversal * embed(tail)``.
"""

from __future__ import annotations

import math
from typing import NamedTuple, Optional

from .words import Letter, Word, parse_word

__all__ = [
    "PElem",
    "MElem",
    "EElem",
    "P_ID",
    "M_ID",
    "E_ID",
    "p_mul",
    "m_mul",
    "e_mul",
    "p_inv",
    "m_inv",
    "e_inv",
    "embed_P",
    "embed_M",
    "p_decompose",
    "m_decompose",
    "letter_image_P",
    "letter_image_M",
    "element_order_P",
    "element_order_M",
    "p_eval",
    "m_eval",
    "e_eval",
    "all_M",
    "all_E",
    "P_RELATORS",
    "M_RELATORS",
    "E_RELATORS",
]


class PElem(NamedTuple):
    n: int
    a: int
    c: int


class MElem(NamedTuple):
    k: int
    a: int
    c: int


class EElem(NamedTuple):
    a: int
    c: int


P_ID = PElem(0, 0, 0)
M_ID = MElem(0, 0, 0)
E_ID = EElem(0, 0)

# Relator words of the stabilizer presentations.
P_RELATORS = ("aa", "gg", "agag", "abaB", "gbgBA")
M_RELATORS = ("ddd", "aa", "gg", "adaD", "agag", "DgddG")
E_RELATORS = ("aa", "gg", "agag")


def p_mul(x: PElem, y: PElem) -> PElem:
    return PElem(x.n + y.n, x.a ^ y.a ^ (x.c & y.n & 1), x.c ^ y.c)


def m_mul(x: MElem, y: MElem) -> MElem:
    k = (x.k - y.k) % 3 if x.c else (x.k + y.k) % 3
    return MElem(k, x.a ^ y.a, x.c ^ y.c)


def e_mul(x: EElem, y: EElem) -> EElem:
    return EElem(x.a ^ y.a, x.c ^ y.c)


def p_inv(x: PElem) -> PElem:
    return PElem(-x.n, x.a ^ (x.c & x.n & 1), x.c)


def m_inv(x: MElem) -> MElem:
    # gamma inverts delta, so (delta^k gamma)^2 = 1.
    k = x.k if x.c else (-x.k) % 3
    return MElem(k, x.a, x.c)


def e_inv(x: EElem) -> EElem:
    return x


def embed_P(e: EElem) -> PElem:
    return PElem(0, e.a, e.c)


def embed_M(e: EElem) -> MElem:
    return MElem(0, e.a, e.c)


def p_decompose(x: PElem) -> tuple[int, EElem]:
    """Split ``x`` as ``beta^rep * tail`` with ``tail`` in H_E."""
    return x.n, EElem(x.a, x.c)


def m_decompose(x: MElem) -> tuple[int, EElem]:
    return x.k, EElem(x.a, x.c)


_P_IMAGE = {
    Letter.ALPHA: PElem(0, 1, 0),
    Letter.GAMMA: PElem(0, 0, 1),
    Letter.BETA: PElem(1, 0, 0),
    Letter.BETA_INV: PElem(-1, 0, 0),
}

_M_IMAGE = {
    Letter.ALPHA: MElem(0, 1, 0),
    Letter.GAMMA: MElem(0, 0, 1),
    Letter.DELTA: MElem(1, 0, 0),
    Letter.DELTA_INV: MElem(2, 0, 0),
}


def letter_image_P(l: Letter) -> Optional[PElem]:
    return _P_IMAGE.get(l)


def letter_image_M(l: Letter) -> Optional[MElem]:
    return _M_IMAGE.get(l)


def _eval(w, images, mul, identity, name):
    if isinstance(w, str):
        w = parse_word(w)
    x = identity
    for l in w:
        try:
            x = mul(x, images[l])
        except KeyError:
            raise ValueError(f"letter {l.value!r} does not lie in {name}") from None
    return x


def p_eval(w: Word | str) -> PElem:
    return _eval(w, _P_IMAGE, p_mul, P_ID, "H_P")


def m_eval(w: Word | str) -> MElem:
    return _eval(w, _M_IMAGE, m_mul, M_ID, "H_M")


def e_eval(w: Word | str) -> EElem:
    images = {Letter.ALPHA: EElem(1, 0), Letter.GAMMA: EElem(0, 1)}
    return _eval(w, images, e_mul, E_ID, "H_E")


def element_order_P(x: PElem) -> float | int:
    """Order of ``x`` in H_P; ``math.inf`` when the beta-exponent is nonzero.

    The beta-exponent of x^k is k*n, so only n == 0 can give torsion, and
    then x^2 = 1.
    """
    if x.n:
        return math.inf
    y, k = x, 1
    while y != P_ID:
        y, k = p_mul(y, x), k + 1
    return k


def element_order_M(x: MElem) -> int:
    y, k = x, 1
    while y != M_ID:
        y, k = m_mul(y, x), k + 1
    return k


def all_M() -> list[MElem]:
    return [MElem(k, a, c) for k in range(3) for a in (0, 1) for c in (0, 1)]


def all_E() -> list[EElem]:
    return [EElem(a, c) for a in (0, 1) for c in (0, 1)]
