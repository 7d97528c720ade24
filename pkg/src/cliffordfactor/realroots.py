"""Real polynomials: factorization into linear and quadratic pieces.

Exact mode never guesses. Numeric root approximations are used only to
*propose* rational roots and rational quadratic factors. Every proposal is
then confirmed by exact division, and anything left unexplained is reported
as :class:`ExactFactorizationUnsupported`.

Numeric mode clusters approximate roots and records the exact residual
between the input and the reconstructed product.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Literal, Optional, Sequence, Union

import mpmath
import numpy as np
from gmpy2 import is_square, isqrt

from .errors import ExactFactorizationUnsupported, ZeroPolynomial
from .polynomial import RealPolynomial
from .rational import ONE, ZERO, Rational, rat

Mode = Literal["exact", "numeric"]


@dataclass(frozen=True)
class FloatContext:
    """Tolerances for numeric mode."""

    epsilon: float = 1e-9
    root_tolerance: float = 1e-6

    def __post_init__(self):
        if not (self.epsilon > 0 and self.root_tolerance > 0):
            raise ValueError("FloatContext tolerances must be positive")


DEFAULT_CONTEXT = FloatContext()


@dataclass(frozen=True)
class RealFactorization:
    """``unit * prod (t - r)^m * prod (t^2 + b t + c)^m``.

    ``quadratics`` hold the irreducible factors (``b^2 - 4c < 0``).
    ``real_quadratics`` hold rational quadratics with two irrational real
    roots, such as ``t^2 - 2``. They cannot be split over the rationals but
    are still legitimate quadratic real factors. In numeric mode the entries
    are floats and ``residual`` is the exact difference between the input and
    the reconstructed product.
    """

    unit: Rational
    linear: tuple = ()
    quadratics: tuple = ()
    real_quadratics: tuple = ()
    residual: Optional[RealPolynomial] = None
    mode: Mode = "exact"
    source: Optional[RealPolynomial] = field(default=None, compare=False)

    def __post_init__(self):
        for b, c, _ in self.quadratics:
            if b * b - 4 * c >= 0:
                raise ValueError(f"t^2 + ({b})t + ({c}) is not irreducible")
        if self.mode == "exact":
            for b, c, _ in self.real_quadratics:
                d = rat(b) * b - 4 * rat(c)
                if d <= 0 or _is_rational_square(d):
                    raise ValueError(f"t^2 + ({b})t + ({c}) does not have irrational real roots")
            if self.source is not None and self.expand() != self.source:
                raise ArithmeticError("factorization does not reconstruct its input")

    @property
    def degree(self) -> int:
        return sum(m for _, m in self.linear) + 2 * sum(
            m for _, _, m in self.quadratics + self.real_quadratics
        )

    def expand(self) -> RealPolynomial:
        """Multiply everything back together (exact mode only)."""
        if self.mode != "exact":
            raise TypeError("expand() is exact-mode only; use the residual in numeric mode")
        out = RealPolynomial([self.unit])
        for r, m in self.linear:
            out = out * RealPolynomial([-r, 1]) ** m
        for b, c, m in self.quadratics + self.real_quadratics:
            out = out * RealPolynomial([c, b, 1]) ** m
        return out

    @property
    def max_residual(self) -> float:
        if self.residual is None:
            return 0.0
        return max((abs(float(c)) for c in self.residual.coeffs), default=0.0)

    def real_root_count(self) -> int:
        """Number of distinct real roots."""
        return len(self.linear) + 2 * len(self.real_quadratics)


@dataclass(frozen=True)
class QuadraticChoice:
    """A monic quadratic divisor ``M`` together with where it came from.

    ``provenance`` is ``("roots", r1, r2)`` for a product of two rational
    linear factors, ``("irreducible",)`` or ``("real-quadratic",)``.
    """

    M: RealPolynomial
    provenance: tuple

    def __post_init__(self):
        if self.M.degree != 2 or not self.M.is_monic():
            raise ValueError(f"{self.M} is not a monic quadratic")

    def __str__(self):
        return str(self.M)


# --------------------------------------------------------------------------
# helpers


def _is_rational_square(x: Rational) -> bool:
    x = rat(x)
    return x >= 0 and is_square(x.numerator) and is_square(x.denominator)


def _as_poly(P) -> RealPolynomial:
    return P if isinstance(P, RealPolynomial) else RealPolynomial(P)


def square_free_decomposition(P: RealPolynomial) -> list[tuple[RealPolynomial, int]]:
    """Yun's algorithm: monic, pairwise coprime, square-free ``A_i`` with ``monic(P) = prod A_i^i``."""
    P = _as_poly(P)
    if P.is_zero():
        raise ZeroPolynomial("square-free decomposition of the zero polynomial")
    P = P.monic()
    if P.degree < 1:
        return []
    out = []
    dP = P.derivative()
    a = P.gcd(dP)
    b = P.exact_div(a)
    c = dP.exact_div(a) if a.degree > 0 else dP * (1 / a.leading)
    d = c - b.derivative()
    i = 1
    while b.degree > 0:
        g = b.gcd(d)
        if g.degree > 0:
            out.append((g, i))
        b = b.exact_div(g)
        c = d.exact_div(g)
        d = c - b.derivative()
        i += 1
    return out


def _integer_leading(P: RealPolynomial) -> int:
    """Leading coefficient of the primitive integer multiple of ``P``."""
    den = lcm(*(int(c.denominator) for c in P.coeffs))
    ints = [int(c * den) for c in P.coeffs]
    g = 0
    for x in ints:
        g = gcd(g, x)
    return abs(ints[-1] // g)


def _numeric_roots(P: RealPolynomial, engine: str) -> list[complex]:
    if engine == "numpy":
        coeffs = [float(c) for c in reversed(P.coeffs)]
        return [complex(z) for z in np.roots(coeffs)]
    dps = {"mp50": 50, "mp120": 120}[engine]
    with mpmath.workdps(dps):
        coeffs = [mpmath.mpf(int(c.numerator)) / int(c.denominator) for c in reversed(P.coeffs)]
        try:
            roots = mpmath.polyroots(coeffs, maxsteps=200 + 20 * P.degree, extraprec=2 * dps)
        except mpmath.libmp.NoConvergence:
            roots = mpmath.polyroots(coeffs, maxsteps=2000, extraprec=6 * dps, error=False)
        return [mpmath.mpc(z) for z in roots]


def _snap(x, L: int) -> Rational:
    """Nearest rational with denominator dividing ``L``."""
    return rat(Fraction(int(mpmath.nint(mpmath.mpf(x) * L)), L))


_ENGINES = ("numpy", "mp50", "mp120")


def _real_part(z):
    return z.real


def _imag_part(z):
    return z.imag


def _peel_rational_roots(A: RealPolynomial, roots: Sequence) -> tuple[list[Rational], RealPolynomial]:
    """Certify rational roots of square-free ``A`` proposed by ``roots``."""
    L = _integer_leading(A)
    found: list[Rational] = []
    for z in roots:
        scale = 1 + abs(z)
        if abs(_imag_part(z)) > 1e-6 * scale:
            continue
        x = _snap(_real_part(z), L)
        if x in found:
            continue
        if A(x) == 0:
            found.append(x)
    rest = A
    for x in found:
        rest = rest.exact_div(RealPolynomial([-x, 1]))
    return found, rest


def _split_quadratic(b: Rational, c: Rational):
    """Classify monic ``t^2 + bt + c``: ("roots", r1, r2) | ("irreducible",) | ("real",)."""
    d = b * b - 4 * c
    if d < 0:
        return ("irreducible",)
    if _is_rational_square(d):
        s = rat(Fraction(int(isqrt(d.numerator)), int(isqrt(d.denominator))))
        return ("roots", (-b - s) / 2, (-b + s) / 2)
    return ("real",)


def _factor_square_free(A: RealPolynomial) -> tuple[list, list, list]:
    """Split square-free monic ``A``: rational roots, irreducible and real quadratics."""
    linear: list[Rational] = []
    irreducible: list[tuple] = []
    real: list[tuple] = []
    if A.degree <= 0:
        return linear, irreducible, real
    if A.degree == 1:
        return [-A.coeffs[0]], irreducible, real
    if A.degree == 2:
        c, b, _ = A.coeffs
        kind = _split_quadratic(b, c)
        if kind[0] == "roots":
            return [kind[1], kind[2]], irreducible, real
        (irreducible if kind[0] == "irreducible" else real).append((b, c))
        return linear, irreducible, real

    last_error = None
    for engine in _ENGINES:
        roots = _numeric_roots(A, engine)
        lin, rest = _peel_rational_roots(A, roots)
        remaining = [z for z in roots if not _matches_any(z, lin)]
        try:
            irr, rq = _pair_quadratics(rest, remaining)
        except ExactFactorizationUnsupported as exc:
            last_error = exc
            continue
        return lin, irr, rq
    raise last_error


def _matches_any(z, xs) -> bool:
    return any(abs(z - complex(float(x), 0)) < 1e-6 * (1 + abs(z)) for x in xs)


def _pair_quadratics(R: RealPolynomial, roots: list):
    """Split ``R`` (square-free, no rational roots) into certified rational quadratics."""
    irreducible: list[tuple] = []
    real: list[tuple] = []
    if R.degree <= 0:
        return irreducible, real
    if R.degree == 2:
        c, b, _ = R.coeffs
        kind = _split_quadratic(b, c)
        (irreducible if kind[0] == "irreducible" else real).append((b, c))
        return irreducible, real
    if R.degree % 2 or len(roots) != R.degree:
        raise ExactFactorizationUnsupported(
            f"{R} has a factor that does not split into rational linear and quadratic pieces"
        )
    L = _integer_leading(R)
    pool = list(roots)
    rest = R
    while pool:
        z = pool.pop(0)
        candidates = sorted(range(len(pool)), key=lambda k: abs(pool[k] - z.conjugate()))
        partner = None
        for k in candidates:
            w = pool[k]
            b = _snap(_real_part(-(z + w)), L)
            c = _snap(_real_part(z * w), L)
            M = RealPolynomial([c, b, 1])
            if M.divides(rest):
                partner = k
                break
        if partner is None:
            raise ExactFactorizationUnsupported(
                f"{R} has an irreducible factor of degree > 2 or a quadratic factor with irrational coefficients"
            )
        pool.pop(partner)
        rest = rest.exact_div(M)
        kind = _split_quadratic(b, c)
        (irreducible if kind[0] == "irreducible" else real).append((b, c))
    return irreducible, real


# --------------------------------------------------------------------------
# public API


def factor_real(
    P: RealPolynomial, mode: Mode = "exact", ctx: FloatContext = DEFAULT_CONTEXT
) -> RealFactorization:
    """Factor ``P`` into rational roots and quadratic pieces.

    >>> F = factor_real(RealPolynomial.from_roots([0, -1, 2, 3]))
    >>> [(str(r), m) for r, m in F.linear]
    [('-1', 1), ('0', 1), ('2', 1), ('3', 1)]
    """
    P = _as_poly(P)
    if P.is_zero():
        raise ZeroPolynomial("cannot factor the zero polynomial")
    if mode == "numeric":
        return _factor_numeric(P, ctx)
    if mode != "exact":
        raise ValueError(f"unknown mode {mode!r}")
    linear: dict = {}
    quad: dict = {}
    realq: dict = {}
    for A, m in square_free_decomposition(P):
        lin, irr, rq = _factor_square_free(A)
        for r in lin:
            linear[r] = linear.get(r, 0) + m
        for bc in irr:
            quad[bc] = quad.get(bc, 0) + m
        for bc in rq:
            realq[bc] = realq.get(bc, 0) + m
    return RealFactorization(
        unit=P.leading,
        linear=tuple(sorted(linear.items())),
        quadratics=tuple(sorted((b, c, m) for (b, c), m in quad.items())),
        real_quadratics=tuple(sorted((b, c, m) for (b, c), m in realq.items())),
        mode="exact",
        source=P,
    )


def _factor_numeric(P: RealPolynomial, ctx: FloatContext) -> RealFactorization:
    # multiplicities come from the exact square-free decomposition; numerics
    # only locate the roots of each square-free part
    unit = P.leading
    linear = []
    quadratics = []
    for A, m in square_free_decomposition(P):
        roots = [complex(z) for z in np.roots([float(c) for c in reversed(A.coeffs)])]
        while roots:
            z = roots.pop(0)
            tol = ctx.root_tolerance * max(1.0, abs(z))
            if abs(z.imag) <= tol:
                linear.append((float(z.real), m))
                continue
            if roots:
                k = min(range(len(roots)), key=lambda i: abs(roots[i] - z.conjugate()))
                roots.pop(k)
            quadratics.append((float(-2 * z.real) + 0.0, float(abs(z) ** 2), m))
    linear.sort()
    quadratics.sort()
    recon = RealPolynomial([unit])
    for r, m in linear:
        recon = recon * RealPolynomial([-rat(Fraction(r)), 1]) ** m
    for b, c, m in quadratics:
        recon = recon * RealPolynomial([rat(Fraction(c)), rat(Fraction(b)), 1]) ** m
    residual = P - recon
    if any(abs(float(c)) > ctx.epsilon * max(1.0, max(abs(float(x)) for x in P.coeffs)) for c in residual.coeffs):
        raise ExactFactorizationUnsupported(
            f"numeric factorization of {P} misses the tolerance (residual {residual})"
        )
    return RealFactorization(
        unit=unit,
        linear=tuple(linear),
        quadratics=tuple(quadratics),
        residual=residual,
        mode="numeric",
    )


def quadratic_choices(F: Union[RealFactorization, RealPolynomial]) -> list[QuadraticChoice]:
    """All monic quadratic divisors obtainable from ``F``, sorted and deduplicated.

    These are every irreducible quadratic, every product of two rational
    linear factors (a square only when the root has multiplicity at least
    two) and every certified real quadratic.
    """
    if isinstance(F, RealPolynomial):
        F = factor_real(F)
    if F.mode != "exact":
        raise TypeError("quadratic_choices needs an exact factorization")
    seen: dict[RealPolynomial, QuadraticChoice] = {}
    for b, c, _ in F.quadratics:
        M = RealPolynomial([c, b, 1])
        seen.setdefault(M, QuadraticChoice(M, ("irreducible",)))
    for b, c, _ in F.real_quadratics:
        M = RealPolynomial([c, b, 1])
        seen.setdefault(M, QuadraticChoice(M, ("real-quadratic",)))
    lin = F.linear
    for i, (r1, m1) in enumerate(lin):
        for r2, m2 in lin[i:]:
            if r1 == r2 and m1 < 2:
                continue
            M = RealPolynomial.from_roots([r1, r2])
            seen.setdefault(M, QuadraticChoice(M, ("roots", r1, r2)))
    return [seen[M] for M in sorted(seen)]


def real_gcd(P: RealPolynomial, Q: RealPolynomial) -> RealPolynomial:
    """Monic exact gcd; ``real_gcd(P, 0) = monic(P)``."""
    P, Q = _as_poly(P), _as_poly(Q)
    if P.is_zero() and Q.is_zero():
        raise ZeroPolynomial("gcd(0, 0) is undefined")
    return P.gcd(Q)


def sturm_sequence(P: RealPolynomial) -> list[RealPolynomial]:
    P = _as_poly(P)
    seq = [P, P.derivative()]
    while not seq[-1].is_zero():
        r = -(seq[-2] % seq[-1])
        if r.is_zero():
            break
        seq.append(r)
    return [p for p in seq if not p.is_zero()]


def _sign_changes(values: Iterable) -> int:
    signs = [v > 0 for v in values if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_real_roots(P: RealPolynomial) -> int:
    """Number of distinct real roots (Sturm's theorem)."""
    P = _as_poly(P)
    if P.is_zero():
        raise ZeroPolynomial("the zero polynomial has infinitely many roots")
    if P.degree <= 0:
        return 0
    seq = sturm_sequence(P)
    at_minus = _sign_changes(p.leading * (-1) ** p.degree for p in seq)
    at_plus = _sign_changes(p.leading for p in seq)
    return at_minus - at_plus


def has_real_root(P: RealPolynomial) -> bool:
    return count_real_roots(P) > 0


@dataclass(frozen=True)
class RealLinearPart:
    """Rational real roots with multiplicities, plus irrational ones.

    ``irrational`` lists ``(multiplicity, count)`` pairs: how many distinct
    irrational real roots occur with each multiplicity. Unpacks as
    ``roots, multiplicities``.
    """

    roots: tuple
    multiplicities: tuple
    irrational: tuple = ()

    def __iter__(self):
        yield self.roots
        yield self.multiplicities

    @property
    def has_irrational(self) -> bool:
        return bool(self.irrational)


def rational_roots(P: RealPolynomial) -> dict:
    """Exact rational roots of ``P`` with multiplicities (never raises on hard factors)."""
    out = {}
    for A, m in square_free_decomposition(P):
        rest = A
        for engine in _ENGINES:
            if rest.degree <= 0 or count_real_roots(rest) == 0:
                break
            found, rest = _peel_rational_roots(rest, _numeric_roots(rest, engine))
            for r in found:
                out[r] = out.get(r, 0) + m
    return dict(sorted(out.items()))


def square_free_real_linear_part(P: RealPolynomial) -> RealLinearPart:
    """Rational real roots of ``P`` and a count of the irrational ones, by multiplicity."""
    P = _as_poly(P)
    if P.is_zero():
        raise ZeroPolynomial("the zero polynomial has infinitely many roots")
    roots = rational_roots(P)
    irrational = []
    for A, m in square_free_decomposition(P):
        rest = A
        for r in roots:
            if rest(r) == 0:
                rest = rest.exact_div(RealPolynomial([-r, 1]))
        n = count_real_roots(rest) if rest.degree > 0 else 0
        if n:
            irrational.append((m, n))
    return RealLinearPart(tuple(roots), tuple(roots.values()), tuple(irrational))
