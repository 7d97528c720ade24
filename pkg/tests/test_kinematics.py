from __future__ import annotations

import csv
import io
import json
import random

import pytest

from cliffordfactor.algebra import DH, H, S
from cliffordfactor.errors import DegenerateLine, NonRealFactorNorm, NotInvertible, VerificationFailed
from cliffordfactor.factor import LinearFactorization, all_factorizations, factor_by_projection
from cliffordfactor.kinematics import (
    PlueckerLine,
    act,
    fixed_element,
    linkage_csv,
    linkage_from_factorizations,
    linkage_json,
    pluecker_line,
    trajectory,
    trajectory_csv,
)
from cliffordfactor.polynomial import AlgebraPolynomial
from cliffordfactor.rational import rat
from cliffordfactor.textio import parse_element, parse_polynomial

from helpers import rand_element, rand_study_dh

H_QUADRATIC = "t^2 - (2i + j + 2)t + 2i + j + 2k + 1"
CIRCULAR = "t^2 + 1 - eps*(j t - i)"


def sq_dist(p, q):
    return sum((a - b) ** 2 for a, b in zip(p, q))


def proportional(u, v) -> bool:
    """Exact projective equality: u = lambda v for some nonzero rational lambda."""
    if not any(u) or not any(v):
        return not any(u) and not any(v)
    i = next(k for k, x in enumerate(v) if x != 0)
    lam = u[i] / v[i]
    return lam != 0 and all(a == lam * b for a, b in zip(u, v))


# --------------------------------------------------------------------------
# fixed elements and lines


def test_fixed_element_of_a_quaternion():
    fe = fixed_element(parse_element("2i + 1", "H"))
    assert fe.c == parse_element("4i", "H") and fe.kind == "rotation-center"


def test_real_h_is_degenerate():
    assert fixed_element(parse_element("3", "H")).kind == "degenerate"


def test_fixed_element_of_circular_translation_factor():
    for a, b in [(0, 0), (1, 2), (-3, 5)]:
        fe = fixed_element(parse_element(f"k - eps*(({a})i + ({b})j)", "DH"))
        assert fe.kind == "line"
        assert pluecker_line(fe).direction == (0, 0, 1)


def test_non_study_factor_rejected():
    with pytest.raises(NonRealFactorNorm):
        fixed_element(parse_element("i + eps*i", "DH"))


def test_pluecker_examples():
    line = pluecker_line(parse_element("4i", "DH"))
    assert line.direction == (1, 0, 0) and line.moment == (0, 0, 0)
    line = pluecker_line(parse_element("2k + eps*(2j)", "DH"))
    assert line.direction == (0, 0, 1) and line.moment == (0, -1, 0)
    with pytest.raises(DegenerateLine):
        pluecker_line(parse_element("i + eps*i", "DH"))
    with pytest.raises(DegenerateLine):
        pluecker_line(parse_element("eps*i", "DH"))
    with pytest.raises(DegenerateLine):
        PlueckerLine((1, 0, 0), (1, 0, 0))


def test_pluecker_identity_and_fixed_axis():
    rng = random.Random(1)
    for _ in range(200):
        h = rand_study_dh(rng)
        line = pluecker_line(fixed_element(h))
        assert sum(a * b for a, b in zip(line.direction, line.moment)) == 0
        # every point of the axis is fixed by the rotation t0 - h
        p = line.point()
        assert line.contains(p)
        t0 = rat(rng.randint(-5, 5))
        r = DH.element([t0, 0, 0, 0, 0, 0, 0, 0]) - h
        assert act(r, p) == p


def test_fixed_element_is_fixed_by_the_sandwich():
    rng = random.Random(2)
    for alg in (H, S):
        for _ in range(200):
            h = rand_element(rng, alg)
            c = fixed_element(h).c
            r = alg.element([rat(rng.randint(-5, 5)), 0, 0, 0]) - h
            if r.norm() == 0:
                continue
            image = r * c * r.conj()
            assert proportional(image.c, c.c)


# --------------------------------------------------------------------------
# actions


def test_half_turn_about_z():
    assert act(parse_element("k", "H"), (1, 0, 0)) == (-1, 0, 0)


def test_identity_action():
    for alg in (H, S, DH):
        assert act(alg.one, (1, 2, 3)) == (1, 2, 3)


def test_pure_translation():
    # the sign is fixed by composing with rotations below
    assert act(parse_element("1 + 1/2eps*i", "DH"), (0, 0, 0)) == (-1, 0, 0)


def test_action_is_a_homomorphism():
    rng = random.Random(3)
    for alg in (H, S, DH):
        for _ in range(100):
            r1, r2 = rand_element(rng, alg), rand_element(rng, alg)
            x = tuple(rat(rng.randint(-4, 4)) for _ in range(3))
            try:
                assert act(r1 * r2, x) == act(r1, act(r2, x))
            except NotInvertible:
                pass


def test_isometries():
    rng = random.Random(4)
    for _ in range(300):
        q = rand_element(rng, H)
        x = tuple(rat(rng.randint(-4, 4)) for _ in range(3))
        if q.norm() == 0:
            continue
        assert sq_dist(act(q, x), (0, 0, 0)) == sq_dist(x, (0, 0, 0))
        s = rand_element(rng, S)
        if s.norm() == 0:
            continue
        y = act(s, x)
        # vector part of the split norm: -x1^2 - x2^2 + x3^2
        assert -y[0] ** 2 - y[1] ** 2 + y[2] ** 2 == -x[0] ** 2 - x[1] ** 2 + x[2] ** 2
        d = rand_study_dh(rng)
        if d.primal.norm() == 0:
            continue
        z = tuple(rat(rng.randint(-4, 4)) for _ in range(3))
        assert sq_dist(act(d, x), act(d, z)) == sq_dist(x, z)


def test_vanishing_norm_rejected():
    with pytest.raises(NotInvertible):
        act(parse_element("1 + is", "S"), (1, 0, 0))
    with pytest.raises(NotInvertible):
        act(parse_element("eps*i", "DH"), (1, 0, 0))


# --------------------------------------------------------------------------
# linkages and trajectories


def test_four_bar_from_two_factorizations():
    C = parse_polynomial(H_QUADRATIC, "H")
    res = all_factorizations(C)
    link = linkage_from_factorizations(C, list(res))
    assert link.topology == "four-bar" and len(link.joints) == 4
    (h1, h2), (k1, k2) = [f.zeros for f in res]
    assert [j.h for j in link.joints] == [h1, h2, k2, k1]


def test_parallelogram_family():
    C = parse_polynomial(CIRCULAR, "DH")
    fam = factor_by_projection(C, LinearFactorization.from_zeros([parse_element("-k", "H"), parse_element("k", "H")]))
    link = linkage_from_factorizations(C, [fam])
    assert link.topology == "parallelogram-family"
    assert len(link.legs) == 3
    assert all(j.kind == "line" for j in link.joints)
    # all axes are parallel to z (orientation may differ)
    assert {pluecker_line(j).direction for j in link.joints} <= {(0, 0, 1), (0, 0, -1)}


def test_open_chain():
    C = parse_polynomial(H_QUADRATIC, "H")
    link = linkage_from_factorizations(C, [next(iter(all_factorizations(C)))])
    assert link.topology == "open-chain" and len(link.joints) == 2


def test_linkage_rejects_wrong_factorization():
    C = parse_polynomial(H_QUADRATIC, "H")
    bad = LinearFactorization.from_zeros([parse_element("j + 1", "H"), parse_element("2i + 1", "H")])
    with pytest.raises(VerificationFailed):
        linkage_from_factorizations(C, [bad])


def test_rotation_trajectory():
    pts = trajectory(parse_polynomial("t - k", "H"), (1, 0, 0), [0, 1])
    assert pts == [(-1, 0, 0), (0, -1, 0)]
    assert all(sq_dist(p, (0, 0, 0)) == 1 for p in pts)


def test_constant_trajectory():
    assert trajectory(AlgebraPolynomial([H.one], H), (1, 2, 3), [0, 5, -1]) == [(1, 2, 3)] * 3


def test_circular_translation_trajectory_is_a_circle():
    C = parse_polynomial(CIRCULAR, "DH")
    ts = [0, 1, 2, -3, rat(1) / 2, rat(-7) / 3]
    pts = trajectory(C, (0, 0, 0), ts)
    center = (-1, 0, 0)
    assert {sq_dist(p, center) for p in pts} == {1}
    # a second point moves along a congruent circle (curvilinear translation)
    shifted = trajectory(C, (1, 2, 3), ts)
    offset = {tuple(b - a for a, b in zip(p, q)) for p, q in zip(pts, shifted)}
    assert len(offset) == 1


def test_trajectory_at_a_zero_of_the_norm():
    with pytest.raises(NotInvertible):
        trajectory(parse_polynomial("t^2 - 1", "S"), (1, 0, 0), [1])


def test_exports():
    C = parse_polynomial(H_QUADRATIC, "H")
    link = linkage_from_factorizations(C, list(all_factorizations(C)))
    rows = list(csv.reader(io.StringIO(linkage_csv(link))))
    assert rows[0][:2] == ["joint", "kind"] and len(rows) == 5
    data = json.loads(linkage_json(link))
    assert data["topology"] == "four-bar" and len(data["joints"]) == 4
    text = trajectory_csv([(rat(1) / 2, 0, 0)], [1])
    assert text == "t,x,y,z\n1,1/2,0,0\n"
