"""Action of H_2 on H_1(T; Z), as 4x4 integer matrices.

Ordered basis ([B], [Z], [C], [Y]); matrices act on column vectors, so column
j is the image of basis class j.  [A] = -[B] - [C] and [X] = -[Z] - [Y].

    alpha   -I                      (hyperelliptic involution)
    beta    diag(1, 1, -1, -1)      (fixes T^-, reverses C and Y)
    gamma   [B] -> -[C], [C] -> -[B], [Z] -> [Y], [Y] -> [Z]
    delta   [B] -> [C], [C] -> -[B]-[C], [Y] -> [Z], [Z] -> -[Z]-[Y]

delta follows the orientation convention delta^2(A) = delta(B) = C,
delta^2(X) = delta(Y) = Z.  gamma is pinned down by the relators together
with two requirements: it preserves a nondegenerate intersection form, and
it reverses A.  The unsigned swap B <-> C, Z <-> Y also satisfies every
relator but preserves no nonzero antisymmetric form.  The one other sign
choice that does preserve a form is gamma*alpha, and it sends A to +A.

The representation is not faithful (beta has order 2 here).  It only serves
as a consistency check: words with different matrices are different
elements of H_2.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Mapping

import numpy as np

from .words import Letter, Word, parse_word

__all__ = [
    "HomMatrix",
    "NoInvariantFormError",
    "IDENTITY_MATRIX",
    "generator_matrix",
    "represent",
    "invariant_form",
    "preserves_form",
]

_INT64_MAX = np.iinfo(np.int64).max


class NoInvariantFormError(ArithmeticError):
    pass


class HomMatrix:
    """Immutable 4x4 integer matrix; products fail loudly instead of wrapping."""

    __slots__ = ("entries", "_bound")

    def __init__(self, entries):
        arr = np.array(entries, dtype=np.int64)
        if arr.shape != (4, 4):
            raise ValueError(f"expected a 4x4 matrix, got shape {arr.shape}")
        arr.setflags(write=False)
        self.entries = arr
        self._bound = int(np.abs(arr).max())

    def __matmul__(self, other: "HomMatrix") -> "HomMatrix":
        if 4 * self._bound * other._bound > _INT64_MAX:
            raise OverflowError("homology matrix entries exceed int64")
        return HomMatrix(self.entries @ other.entries)

    def __eq__(self, other):
        if not isinstance(other, HomMatrix):
            return NotImplemented
        return bool(np.array_equal(self.entries, other.entries))

    def __hash__(self):
        return hash(self.entries.tobytes())

    def __repr__(self):
        return f"HomMatrix({self.tolist()})"

    def tolist(self) -> list[list[int]]:
        return [[int(v) for v in row] for row in self.entries]

    @property
    def T(self) -> "HomMatrix":
        return HomMatrix(self.entries.T)

    def det(self) -> int:
        import sympy

        return int(sympy.Matrix(self.tolist()).det())


IDENTITY_MATRIX = HomMatrix(np.eye(4, dtype=np.int64))

_ALPHA = HomMatrix(-np.eye(4, dtype=np.int64))
_BETA = HomMatrix(np.diag([1, 1, -1, -1]))
_GAMMA = HomMatrix(
    [
        [0, 0, -1, 0],
        [0, 0, 0, 1],
        [-1, 0, 0, 0],
        [0, 1, 0, 0],
    ]
)
_DELTA = HomMatrix(
    [
        [0, 0, -1, 0],
        [0, -1, 0, 1],
        [1, 0, -1, 0],
        [0, -1, 0, 0],
    ]
)

_GENERATORS = {
    Letter.ALPHA: _ALPHA,
    Letter.BETA: _BETA,
    Letter.BETA_INV: _BETA,  # beta acts as an involution on homology
    Letter.GAMMA: _GAMMA,
    Letter.DELTA: _DELTA,
    Letter.DELTA_INV: _DELTA @ _DELTA,
}


def generator_matrix(l: Letter) -> HomMatrix:
    return _GENERATORS[l]


# products of every run of up to three letters, so represent() does a third
# of the matrix multiplications
_CHUNK = 3
_CHUNKS: dict[Word, HomMatrix] = {}


def _chunk_table() -> dict[Word, HomMatrix]:
    if not _CHUNKS:
        runs: list[Word] = [()]
        for _ in range(_CHUNK):
            runs = [r + (l,) for r in runs for l in _GENERATORS]
            for r in runs:
                _CHUNKS[r] = _CHUNKS[r[:-1]] @ _GENERATORS[r[-1]] if len(r) > 1 else _GENERATORS[r[0]]
    return _CHUNKS


def represent(w: Word | str) -> HomMatrix:
    w = parse_word(w) if isinstance(w, str) else tuple(w)
    table = _chunk_table()
    m = IDENTITY_MATRIX.entries
    bound = 1  # upper bound on |entries of m|
    for i in range(0, len(w), _CHUNK):
        g = table[w[i : i + _CHUNK]]
        bound *= 4 * g._bound
        if bound > _INT64_MAX:
            bound = 4 * int(np.abs(m).max()) * g._bound
            if bound > _INT64_MAX:
                raise OverflowError("homology matrix entries exceed int64")
        m = m @ g.entries
    return HomMatrix(m)


def preserves_form(m: HomMatrix, form: HomMatrix) -> bool:
    return m.T @ form @ m == form


def invariant_form(matrices: Mapping[Letter, HomMatrix] | Iterable[HomMatrix] | None = None) -> HomMatrix:
    """A primitive nonzero antisymmetric integer J with M^T J M = J for every M.

    Defaults to the four generator matrices.  The solution space is computed
    exactly; its first basis vector is scaled to coprime integers with a
    positive leading entry.  Raises ``NoInvariantFormError`` when only J = 0
    is invariant.
    """
    if matrices is None:
        return _default_form()
    if isinstance(matrices, Mapping):
        matrices = matrices.values()
    return _solve_form(tuple(matrices))


@lru_cache(maxsize=1)
def _default_form() -> HomMatrix:
    return _solve_form((_ALPHA, _BETA, _GAMMA, _DELTA))


def _solve_form(mats: tuple[HomMatrix, ...]) -> HomMatrix:
    import sympy

    js = sympy.symbols("j0:6")
    J = sympy.Matrix(
        [
            [0, js[0], js[1], js[2]],
            [-js[0], 0, js[3], js[4]],
            [-js[1], -js[3], 0, js[5]],
            [-js[2], -js[4], -js[5], 0],
        ]
    )
    eqs = []
    for m in mats:
        M = sympy.Matrix(m.tolist())
        eqs.extend(M.T * J * M - J)
    system, _ = sympy.linear_eq_to_matrix(eqs, js)
    basis = system.nullspace()
    if not basis:
        raise NoInvariantFormError("no nonzero antisymmetric form is preserved by the generator matrices")
    v = basis[0]
    denom = sympy.ilcm(*[sympy.fraction(x)[1] for x in v])
    ints = [int(x * denom) for x in v]
    g = sympy.igcd(*ints)
    ints = [x // g for x in ints]
    if next(x for x in ints if x) < 0:
        ints = [-x for x in ints]
    return HomMatrix(J.subs(dict(zip(js, ints))).tolist())
