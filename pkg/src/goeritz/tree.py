"""The tree of reducing spheres as a coset graph.

Sphere vertices are cosets w H_P, barycenters are cosets w H_M, and w H_P is
joined to w H_M (the translates of the base edge E).  A vertex is stored by
its canonical label: the normal form of a coset representative with the H_E
tail dropped and, when the last syllable lies in the vertex's own stabilizer,
that syllable dropped too.  So a P-vertex label ends in an M-syllable and an
M-vertex label ends in a P-syllable (or is empty).

Sphere vertices at tree distance 2 share a barycenter, i.e. they span an edge
of the 2-complex; tree distance therefore stands in for intersection number
when comparing how far apart reducing spheres are.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import islice
from typing import Iterator, NamedTuple, Optional

from .amalgam import (
    AmalgamElem,
    Syllable,
    _mul_into,
    amal_inv,
    amal_mul,
    elem_to_json,
    normal_form,
    render_elem,
)
from .factors import E_ID
from .words import Word, WordParseError, parse_word

__all__ = [
    "Vertex",
    "BASE_P",
    "BASE_M",
    "PreconditionError",
    "TreeBall",
    "canonical",
    "vertex_of",
    "parse_vertex",
    "render_vertex",
    "vertex_to_json",
    "label_elem",
    "distance",
    "geodesic",
    "neighbors",
    "gamma_adjacent",
    "gamma_neighbors",
    "triangle",
    "descend",
    "enumerate_ball",
]


class PreconditionError(ValueError):
    pass


class Vertex(NamedTuple):
    kind: str  # "P" (sphere vertex) or "M" (barycenter)
    label: tuple[Syllable, ...] = ()

    def __str__(self):
        return render_vertex(self)


BASE_P = Vertex("P")
BASE_M = Vertex("M")


def _other(kind: str) -> str:
    return "M" if kind == "P" else "P"


def _check_kind(kind: str) -> None:
    if kind not in ("P", "M"):
        raise ValueError(f"vertex kind must be 'P' or 'M', got {kind!r}")


def canonical(x: AmalgamElem, kind: str) -> Vertex:
    """The vertex ``x . v_kind``."""
    _check_kind(kind)
    syls = x.syllables
    if syls and syls[-1].factor == kind:
        syls = syls[:-1]
    return Vertex(kind, syls)


def vertex_of(w: Word | str, kind: str) -> Vertex:
    return canonical(normal_form(w), kind)


def label_elem(v: Vertex) -> AmalgamElem:
    return AmalgamElem(v.label, E_ID)


def _step(v: Vertex, factor: str, exp: int, kind: str) -> Vertex:
    # label(v) * (factor generator)^exp, seen as a vertex of the given kind
    syls = list(v.label)
    _mul_into(syls, E_ID, factor, exp, 0, 0)
    if syls and syls[-1].factor == kind:
        syls.pop()
    return Vertex(kind, tuple(syls))


def parse_vertex(text: str) -> Vertex:
    """Read the ``P:<word>`` / ``M:<word>`` literal.  ``1`` spells the empty word."""
    kind, sep, word = text.partition(":")
    if not sep or kind not in ("P", "M"):
        raise WordParseError(f"vertex literal must look like P:<word> or M:<word>, got {text!r}")
    if word.strip() == "1":
        word = ""
    return vertex_of(parse_word(word), kind)


def render_vertex(v: Vertex) -> str:
    return f"{v.kind}:{render_elem(label_elem(v))}"


def vertex_to_json(v: Vertex) -> dict:
    return {"kind": v.kind, "label": elem_to_json(label_elem(v))}


def _syllable_inv(s: Syllable) -> Syllable:
    return Syllable("P", -s.exp) if s.factor == "P" else Syllable("M", 3 - s.exp)


def _merge(s: Syllable, t: Syllable) -> Optional[Syllable]:
    # product of two representatives from the same factor, None if trivial
    if s.factor == "P":
        e = s.exp + t.exp
    else:
        e = (s.exp + t.exp) % 3
    return Syllable(s.factor, e) if e else None


def _concat(a: tuple[Syllable, ...], b: tuple[Syllable, ...]) -> tuple[Syllable, ...]:
    """Normal form of a*b for two trivially-tailed normal forms.

    Transversal representatives multiply to transversal representatives, so
    no H_E part ever appears; only the junction can cancel.
    """
    head = list(a)
    j = 0
    while head and j < len(b) and head[-1].factor == b[j].factor:
        m = _merge(head.pop(), b[j])
        j += 1
        if m is not None:
            head.append(m)
            break
    return tuple(head) + b[j:]


def _inverse_label(a: tuple[Syllable, ...]) -> tuple[Syllable, ...]:
    return tuple(_syllable_inv(s) for s in reversed(a))


def _common_prefix(a: tuple[Syllable, ...], b: tuple[Syllable, ...]) -> int:
    i = 0
    n = min(len(a), len(b))
    while i < n and a[i] == b[i]:
        i += 1
    return i


def _relative(u: Vertex, v: Vertex) -> tuple[Syllable, ...]:
    """Canonical label of v after translating u to its base vertex."""
    i = _common_prefix(u.label, v.label)
    rel = _concat(_inverse_label(u.label[i:]), v.label[i:])
    if rel and rel[-1].factor == v.kind:
        rel = rel[:-1]
    return rel


def _relative_general(u: Vertex, v: Vertex) -> tuple[Syllable, ...]:
    # reference path through the amalgam arithmetic
    x = amal_mul(amal_inv(label_elem(u)), label_elem(v))
    return canonical(x, v.kind).label


def distance(u: Vertex, v: Vertex) -> int:
    """Tree distance, read off the syllable counts of the relative label.

    A P-to-P path crosses one barycenter per M-syllable (and dually for
    M-to-M); a mixed path adds the odd edge at the barycenter end.
    """
    # hot path: syllables are indexed (s[0] is the factor) rather than read
    # by attribute, and the two counts are plain ints
    a, b = u[1], v[1]
    la, lb = len(a), len(b)
    n = la if la < lb else lb
    i = 0
    while i < n and a[i] == b[i]:
        i += 1
    # after cancelling the common prefix, label(u)^-1 label(v) is the reversed
    # inverse of a[i:] followed by b[i:]; at most the two syllables a[i], b[i]
    # merge (they differ, so the product is nontrivial)
    p = m = 0
    for s in a[i:]:
        if s[0] == "P":
            p += 1
        else:
            m += 1
    for s in b[i:]:
        if s[0] == "P":
            p += 1
        else:
            m += 1
    if i < n and a[i][0] == b[i][0]:
        if a[i][0] == "P":
            p -= 1
        else:
            m -= 1
    kind = v[0]
    if i < lb:
        last = b[-1][0]
    elif i < la:
        last = a[i][0]
    else:
        last = None
    if last == kind:
        if kind == "P":
            p -= 1
        else:
            m -= 1
    if u[0] == kind:
        return 2 * (m if kind == "P" else p)
    return 2 * (p if kind == "P" else m) + 1


def _relative_path(start_kind: str, rel: tuple[Syllable, ...], end_kind: str) -> Iterator[tuple[tuple[Syllable, ...], str]]:
    kind = start_kind
    prefix: tuple[Syllable, ...] = ()
    yield prefix, kind
    for s in rel:
        if s.factor != kind:
            # s does not fix the current vertex; cross to the vertex it does fix
            kind = s.factor
            yield prefix, kind
        prefix = prefix + (s,)
        kind = _other(s.factor)
        yield prefix, kind
    if kind != end_kind:
        yield prefix, end_kind


def _walk(u: Vertex, v: Vertex, steps: Optional[int] = None) -> list[Vertex]:
    out = []
    for prefix, kind in islice(_relative_path(u.kind, _relative(u, v), v.kind), steps):
        label = _concat(u.label, prefix)
        if label and label[-1].factor == kind:
            label = label[:-1]
        out.append(Vertex(kind, label))
    return out


def geodesic(u: Vertex, v: Vertex) -> list[Vertex]:
    """The unique shortest path from u to v, both endpoints included."""
    return _walk(u, v)


def neighbors(v: Vertex, twist_bound: int) -> list[Vertex]:
    """Adjacent vertices, sorted by the exponent of the stepping generator.

    A barycenter has exactly three neighbours.  A sphere vertex has infinitely
    many, w beta^n H_M for all n; only |n| <= twist_bound are listed.
    """
    # the label never ends in the stepping factor, so exponent 0 drops the
    # last syllable (back along the label) and any other exponent appends one
    back = Vertex(_other(v.kind), v.label[:-1] if v.label else ())
    if v.kind == "M":
        return [back, Vertex("P", v.label + (Syllable("M", 1),)), Vertex("P", v.label + (Syllable("M", 2),))]
    if twist_bound < 1:
        raise ValueError("twist_bound must be >= 1")
    out = [Vertex("M", v.label + (Syllable("P", n),)) for n in range(-twist_bound, twist_bound + 1) if n]
    out.insert(twist_bound, back)
    return out


def triangle(m: Vertex) -> tuple[Vertex, Vertex, Vertex]:
    if m.kind != "M":
        raise PreconditionError("triangle() needs a barycenter (M) vertex")
    p0, p1, p2 = neighbors(m, 1)
    return p0, p1, p2


def gamma_adjacent(u: Vertex, v: Vertex) -> bool:
    if u.kind != "P" or v.kind != "P":
        raise PreconditionError("gamma_adjacent() compares sphere (P) vertices")
    return distance(u, v) == 2


def gamma_neighbors(v: Vertex, twist_bound: int) -> Iterator[Vertex]:
    """Sphere vertices sharing a 2-simplex with v, within the twist truncation."""
    for m in neighbors(v, twist_bound):
        for p in triangle(m):
            if p != v:
                yield p


def descend(v: Vertex, target: Vertex) -> tuple[Vertex, Vertex]:
    """The neighbour of v one triangle closer to target, and its triangle mate.

    Returns ``(u, mate)`` where u is the sphere vertex two steps along the
    geodesic from v and mate is the third corner of the triangle through v
    and u.  Every other sphere vertex sharing a triangle with v is two steps
    farther from target than v.
    """
    if v.kind != "P" or target.kind != "P":
        raise PreconditionError("descend() works on sphere (P) vertices")
    d = distance(v, target)
    if d < 4:
        raise PreconditionError(f"descend() needs distance >= 4, got {d}")
    _, m, u = _walk(v, target, 3)
    (mate,) = [p for p in triangle(m) if p != v and p != u]
    return u, mate


@dataclass
class TreeBall:
    radius: int
    twist_bound: int
    depth: dict[Vertex, int] = field(default_factory=dict)
    parent: dict[Vertex, Optional[Vertex]] = field(default_factory=dict)
    # (vertex, rediscovered neighbour) pairs reached along a non-parent edge
    cycle_witnesses: list[tuple[Vertex, Vertex]] = field(default_factory=list)

    @property
    def vertices(self) -> set[Vertex]:
        return set(self.depth)

    def __len__(self):
        return len(self.depth)

    def __contains__(self, v):
        return v in self.depth

    def children(self) -> dict[Vertex, list[Vertex]]:
        out: dict[Vertex, list[Vertex]] = {v: [] for v in self.depth}
        for v, p in self.parent.items():
            if p is not None:
                out[p].append(v)
        return out


def enumerate_ball(radius: int, twist_bound: int) -> TreeBall:
    """Breadth-first search from v_P out to ``radius`` edges."""
    if radius < 0:
        raise ValueError("radius must be nonnegative")
    if twist_bound < 1:
        raise ValueError("twist_bound must be >= 1")
    ball = TreeBall(radius, twist_bound)
    ball.depth[BASE_P] = 0
    ball.parent[BASE_P] = None
    queue = deque([BASE_P])
    while queue:
        v = queue.popleft()
        d = ball.depth[v]
        if d == radius:
            continue
        up = ball.parent[v]
        for nb in neighbors(v, twist_bound):
            if nb == up:
                continue
            if nb in ball.depth:
                ball.cycle_witnesses.append((v, nb))
                continue
            ball.depth[nb] = d + 1
            ball.parent[nb] = v
            queue.append(nb)
    return ball
