"""Geometric reading of linear factors.

For a factor ``t - h`` the element ``c = h - conj(h)`` is fixed by every
displacement ``t0 - h``. Over H and S, ``c`` is a rotation center (a point of
the sphere or of the hyperbolic plane). Over DH with a real factor norm,
``c = a + eps b`` is the rotation axis with Plücker coordinates ``[a, -b]``.
"""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from math import gcd, lcm
from typing import Optional, Sequence, Union

from .algebra import DH, H, S, AlgebraElement
from .errors import DegenerateLine, NonRealFactorNorm, NotInvertible, VerificationFailed
from .factor import AffineFamily, LinearFactorization, verify
from .polynomial import AlgebraPolynomial, is_real_norm
from .rational import ZERO, Rational, fmt, rat

Vector = tuple


def _primitive(v: Sequence[Rational]) -> tuple:
    """Scale by a positive rational to coprime integers (zero stays zero)."""
    v = [rat(x) for x in v]
    if not any(v):
        return tuple(v)
    den = lcm(*(int(x.denominator) for x in v))
    ints = [int(x * den) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, x)
    return tuple(rat(x // g) for x in ints)


@dataclass(frozen=True)
class FixedElement:
    """``c = h - conj(h)`` together with its geometric kind.

    ``kind`` is ``rotation-center`` (H, S), ``line`` (DH), ``translation``
    (DH with vanishing primal part) or ``degenerate`` (``c = 0``, ``h``
    real).
    """

    c: AlgebraElement
    kind: str
    h: Optional[AlgebraElement] = None

    def normalized(self) -> tuple:
        """Projective coordinates as coprime integers (positive scaling only)."""
        return _primitive(self.c.c)

    def __str__(self):
        return f"{self.kind}: {self.c}"


@dataclass(frozen=True)
class PlueckerLine:
    direction: Vector
    moment: Vector

    def __post_init__(self):
        if not any(self.direction):
            raise DegenerateLine("a line needs a nonzero direction")
        if sum(a * b for a, b in zip(self.direction, self.moment)) != 0:
            raise DegenerateLine("direction and moment are not orthogonal")

    def point(self) -> Vector:
        """The point of the line closest to the origin, ``d x m / |d|^2``."""
        d, m = self.direction, self.moment
        n = sum(x * x for x in d)
        cr = _cross(d, m)
        return tuple(x / n for x in cr)

    def contains(self, p: Sequence) -> bool:
        """True if ``p`` lies on the line (``p x d = m``)."""
        return _cross(tuple(rat(x) for x in p), self.direction) == tuple(self.moment)


@dataclass(frozen=True)
class Linkage:
    """Joints of a linkage built from factorizations of one polynomial.

    ``legs`` holds the joint axes of each factorization in factor order.
    ``joints`` lists the closed loop: the first leg in order, followed by
    the remaining legs reversed (h1, h2, k2, k1 for two quadratic
    factorizations).
    """

    joints: tuple
    topology: str
    legs: tuple = ()
    polynomial: Optional[AlgebraPolynomial] = field(default=None, compare=False, repr=False)


def _cross(a, b) -> tuple:
    return (
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    )


def fixed_element(h: AlgebraElement) -> FixedElement:
    """The element fixed by all displacements ``t0 - h``."""
    alg = h.algebra
    if alg is DH and is_real_norm(AlgebraPolynomial.linear(h)) is None:
        raise NonRealFactorNorm(f"nu(t - {h}) is not real")
    c = h - h.conj()
    if c.is_zero():
        kind = "degenerate"
    elif alg is DH:
        kind = "line" if any(c.c[1:4]) else "translation"
    else:
        kind = "rotation-center"
    return FixedElement(c, kind, h)


def pluecker_line(fe: Union[FixedElement, AlgebraElement]) -> PlueckerLine:
    """Plücker coordinates ``[a, -b]`` of ``c = a + eps b``, scaled to coprime integers."""
    c = fe.c if isinstance(fe, FixedElement) else fe
    if c.algebra is not DH:
        raise DegenerateLine("Plücker lines come from dual quaternions")
    a, b = c.c[1:4], c.c[5:8]
    if not any(a):
        raise DegenerateLine(f"{c} has no primal vector part")
    if c.c[0] != 0 or c.c[4] != 0:
        raise DegenerateLine(f"{c} is not a pure dual vector")
    if sum(x * y for x, y in zip(a, b)) != 0:
        raise DegenerateLine(f"{c} violates the Study condition")
    coords = _primitive(tuple(a) + tuple(-x for x in b))
    return PlueckerLine(coords[:3], coords[3:])


def act(r: AlgebraElement, x: Sequence) -> Vector:
    """Apply the transformation of ``r`` to the point/vector ``x``.

    H and S use the normalized sandwich ``r x conj(r) / N(r)``. DH uses the
    rigid-body action ``y = (a x conj(a) + a conj(b) - b conj(a)) / N(a)`` for
    ``r = a + eps b``.
    """
    x = tuple(rat(v) for v in x)
    alg = r.algebra
    if alg is DH:
        a, b = r.primal, r.dual
        n = a.norm()
        if n == 0:
            raise NotInvertible(f"{r} has a non-invertible norm")
        X = H.element((ZERO,) + x)
        y = a * X * a.conj() + a * b.conj() - b * a.conj()
        return tuple(v / n for v in y.c[1:4])
    n = r.norm()
    if n == 0:
        raise NotInvertible(f"{r} has a vanishing norm")
    X = alg.element((ZERO,) + x)
    y = r * X * r.conj()
    return tuple(v / n for v in y.c[1:4])


def linkage_from_factorizations(
    C: AlgebraPolynomial,
    facts: Sequence[Union[LinearFactorization, AffineFamily]],
    samples: Optional[Sequence[Sequence]] = None,
) -> Linkage:
    """Collect the joints of each factorization into a linkage.

    One factorization gives an open chain. Two or more give a closed loop
    (a four-bar for two quadratic factorizations). An :class:`AffineFamily`
    is sampled: at the base point and at each unit parameter unless
    ``samples`` is given. The result is tagged ``parallelogram-family``.
    """
    legs_f: list[LinearFactorization] = []
    family = False
    for f in facts:
        if isinstance(f, AffineFamily):
            family = True
            pts = samples
            if pts is None:
                k = f.dimension
                pts = [[0] * k] + [[1 if i == j else 0 for i in range(k)] for j in range(k)]
            for p in pts:
                legs_f.append(f.sample(p))
        else:
            legs_f.append(f)
    for f in legs_f:
        if not verify(C, f):
            raise VerificationFailed(f"{f} is not a factorization of {C}")
    legs = tuple(tuple(fixed_element(h) for h in f.zeros) for f in legs_f)
    if not legs:
        raise ValueError("at least one factorization is required")
    joints = list(legs[0])
    for leg in legs[1:]:
        joints.extend(reversed(leg))
    if family:
        topology = "parallelogram-family"
    elif len(legs) == 1:
        topology = "open-chain"
    elif len(legs) == 2 and all(len(leg) == 2 for leg in legs):
        topology = "four-bar"
    else:
        topology = "closed-loop"
    return Linkage(tuple(joints), topology, legs, C)


def trajectory(C: AlgebraPolynomial, x: Sequence, ts: Sequence) -> list[Vector]:
    """Exact positions of ``x`` under ``C(t)`` for each parameter value in ``ts``."""
    out = []
    for t0 in ts:
        t0 = rat(t0)
        value = C.algebra.zero
        for coeff in reversed(C.coeffs):
            value = value * t0 + coeff
        try:
            out.append(act(value, x))
        except NotInvertible as exc:
            raise NotInvertible(f"nu(C) vanishes at t = {fmt(t0)}") from exc
    return out


# --------------------------------------------------------------------------
# export


def trajectory_csv(points: Sequence[Vector], ts: Optional[Sequence] = None) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["t", "x", "y", "z"] if ts is not None else ["x", "y", "z"])
    for i, p in enumerate(points):
        row = [fmt(v) for v in p]
        w.writerow(([fmt(rat(ts[i]))] if ts is not None else []) + row)
    return buf.getvalue()


def _joint_record(fe: FixedElement) -> dict:
    rec = {"kind": fe.kind, "element": str(fe.c), "coordinates": [fmt(v) for v in fe.normalized()]}
    if fe.kind == "line":
        line = pluecker_line(fe)
        rec["direction"] = [fmt(v) for v in line.direction]
        rec["moment"] = [fmt(v) for v in line.moment]
    return rec


def linkage_to_dict(link: Linkage) -> dict:
    return {
        "topology": link.topology,
        "joints": [_joint_record(j) for j in link.joints],
        "legs": [[str(j.h) for j in leg] for leg in link.legs],
    }


def linkage_csv(link: Linkage) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["joint", "kind", "c0", "c1", "c2", "c3", "c4", "c5", "c6", "c7"])
    for i, j in enumerate(link.joints):
        w.writerow([i, j.kind] + [fmt(v) for v in j.normalized()])
    return buf.getvalue()


def linkage_json(link: Linkage) -> str:
    return json.dumps(linkage_to_dict(link), indent=2)
