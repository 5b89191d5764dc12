"""Exit criteria.  Every check is exact; a summary line per criterion is
printed at the end of the pytest run."""

import io
import math
import random

import pytest

from goeritz import cli
from goeritz.amalgam import (
    IDENTITY,
    amal_mul,
    equal,
    is_identity,
    normal_form,
    order,
    relators,
    render_elem,
    theta_twist,
)
from goeritz.factors import (
    E_ID,
    E_RELATORS,
    M_ID,
    M_RELATORS,
    P_RELATORS,
    EElem,
    MElem,
    e_mul,
    element_order_M,
    m_mul,
)
from goeritz.homology import IDENTITY_MATRIX, generator_matrix, invariant_form, preserves_form, represent
from goeritz.tree import (
    BASE_M,
    BASE_P,
    descend,
    distance,
    gamma_adjacent,
    gamma_neighbors,
    geodesic,
    neighbors,
    vertex_of,
)
from goeritz.words import LETTERS, free_reduce, invert_word, parse_word

from bfs import all_pairs_distances

N_RANDOM = 10_000
MAX_LEN = 40


def _closure(gens, mul, identity):
    seen, frontier = {identity}, [identity]
    while frontier:
        x = frontier.pop()
        for g in gens:
            y = mul(x, g)
            if y not in seen:
                seen.add(y)
                frontier.append(y)
    return seen


def _random_words(seed, count):
    # one generator for the whole batch; random_word reseeds per call
    rng = random.Random(seed)
    return [free_reduce(tuple(rng.choices(LETTERS, k=rng.randint(1, MAX_LEN)))) for _ in range(count)]


@pytest.mark.acceptance(1, "relator suite: 8 + 5 + 6 + 3 relators trivial, relcheck exits 0")
def test_relator_suite():
    families = [[r for r in relators()], P_RELATORS, M_RELATORS, E_RELATORS]
    assert [len(f) for f in families] == [8, 5, 6, 3]
    for family in families:
        for r in family:
            assert is_identity(normal_form(r)), r
    assert cli.run(["relcheck"], out=io.StringIO(), err=io.StringIO()) == 0


@pytest.mark.acceptance(2, "exact constants: |H_E| = 4, |H_M| = 12, H_M orders {1,2,3,6}, generator orders")
def test_exact_constants():
    h_e = _closure([EElem(1, 0), EElem(0, 1)], e_mul, E_ID)
    h_m = _closure([MElem(1, 0, 0), MElem(0, 1, 0), MElem(0, 0, 1)], m_mul, M_ID)
    assert len(h_e) == 4
    assert len(h_m) == 12
    assert {element_order_M(x) for x in h_m} == {1, 2, 3, 6}
    assert order("a") == order("g") == order("ag") == 2
    assert order("d") == 3
    assert order("b") == math.inf


@pytest.mark.acceptance(3, "normal-form soundness on 10^4 random pairs, inverse law, render fixed point")
def test_normal_form_soundness():
    us = _random_words(101, N_RANDOM)
    vs = _random_words(202, N_RANDOM)
    failures = 0
    for u, v in zip(us, vs):
        nu, nv = normal_form(u), normal_form(v)
        if normal_form(u + v) != amal_mul(nu, nv):
            failures += 1
        if normal_form(u + invert_word(u)) != IDENTITY:
            failures += 1
        if normal_form(render_elem(nu)) != nu:
            failures += 1
    assert failures == 0


@pytest.mark.acceptance(4, "tree: ball(8,3) acyclic, distance = BFS on ball(6,2), degree laws")
def test_tree_acyclicity_and_metric(ball_8_3, ball_6_2):
    assert ball_8_3.cycle_witnesses == []
    assert len(ball_8_3) == len(set(ball_8_3.depth))

    mismatches = 0
    for i, (vs, oracle) in enumerate(all_pairs_distances(ball_6_2)):
        u = vs[i]
        for j in range(i, len(vs)):
            v = vs[j]
            d = distance(u, v)
            if d != oracle[j] or d != distance(v, u):
                mismatches += 1
    assert mismatches == 0

    for ball in (ball_8_3, ball_6_2):
        n = ball.twist_bound
        for v, d in ball.depth.items():
            nbrs = neighbors(v, n)
            assert len(set(nbrs)) == len(nbrs) == (3 if v.kind == "M" else 2 * n + 1)
            if d < ball.radius:
                # interior vertices see their whole truncated star inside the ball
                assert all(w in ball for w in nbrs)


@pytest.mark.acceptance(5, "descent: unique closer vertex, one equal-distance mate, rest farther by 2")
def test_descent(ball_8_3):
    n = ball_8_3.twist_bound
    checked = 0
    for v, depth in ball_8_3.depth.items():
        if v.kind != "P" or depth < 4:
            continue
        d = distance(v, BASE_P)
        assert d == depth
        u, mate = descend(v, BASE_P)
        assert ball_8_3.depth[u] == d - 2
        assert gamma_adjacent(v, u) and gamma_adjacent(v, mate)
        assert gamma_adjacent(mate, u)
        closer, level, farther = [], [], []
        for w in gamma_neighbors(v, n):
            dw = distance(w, BASE_P)
            if dw == d - 2:
                closer.append(w)
            elif dw == d:
                level.append(w)
            elif dw == d + 2:
                farther.append(w)
            else:
                raise AssertionError(f"{w} at distance {dw} from v_P, v at {d}")
        assert closer == [u]
        assert level == [mate]
        assert len(farther) == 2 * (2 * n + 1) - 2
        checked += 1
    assert checked == 168 + 2016 + 24192


@pytest.mark.acceptance(6, "homology oracle: 10^4 words consistent, relators trivial, det J != 0")
def test_homology_oracle():
    for w in _random_words(303, N_RANDOM):
        assert represent(w) == represent(render_elem(normal_form(w)))
    for r in relators():
        assert represent(r) == IDENTITY_MATRIX
    J = invariant_form()
    assert J.T.tolist() == [[-x for x in row] for row in J.tolist()]
    assert J.det() != 0
    assert all(preserves_form(generator_matrix(l), J) for l in LETTERS)


@pytest.mark.acceptance(7, "theta twist sends every relator to a trivial word")
def test_theta_twist():
    for r in relators():
        assert is_identity(normal_form(theta_twist(r)))


@pytest.mark.acceptance(8, "geodesic spot checks")
def test_geodesic_spot_checks():
    P = lambda w: vertex_of(w, "P")  # noqa: E731
    assert distance(BASE_P, P("d")) == 2
    path = geodesic(BASE_P, P("dbd"))
    assert len(path) == 5
    assert path == [BASE_P, BASE_M, P("d"), vertex_of("db", "M"), P("dbd")]
    assert distance(BASE_P, BASE_M) == 1
    assert equal(parse_word("gbg"), parse_word("ab"))
