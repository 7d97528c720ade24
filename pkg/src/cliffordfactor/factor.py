"""Factorization of left polynomials into monic linear factors.

The workhorse is :func:`gfactor`. It chooses a monic quadratic real factor
``M`` of the norm polynomial and computes the right zero
``h = czero(C, M)``. It then divides ``t - h`` off on the right and recurses.
On top of it sit exhaustive enumeration over all choices, the complete
quaternion case with its sphere families, motion-polynomial classification,
a decision procedure for quadratic split-quaternion polynomials, reduction
of unbounded motion polynomials and factorization by projection.
"""
from __future__ import annotations

import string
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence, Union

from gmpy2 import is_square, isqrt

from .algebra import DH, H, S, Algebra, AlgebraElement, DualNumber
from .errors import (
    CliffordFactorError,
    ExactFactorizationUnsupported,
    InvalidOrdering,
    IrrationalRealRoot,
    MrpfNotTrivial,
    MultiplicityViolation,
    NonInvertibleLeading,
    NonRealNorm,
    NotInvertible,
    PrimalMismatch,
    Pseudofactor,
    VerificationFailed,
    ZeroPolynomial,
)
from .linalg import rank, solve_affine
from .polynomial import (
    eval_right,
    AlgebraPolynomial,
    RealPolynomial,
    is_real_norm,
    lquo,
    lrem,
    mrpf,
    norm_poly,
    product,
    shift,
)
from .rational import ONE, ZERO, Rational, rat
from .realroots import (
    QuadraticChoice,
    factor_real,
    has_real_root,
    quadratic_choices,
    square_free_real_linear_part,
)

OrderingEntry = Union[QuadraticChoice, RealPolynomial]


def _key(h: AlgebraElement) -> tuple:
    return tuple(h.c)


def _as_M(entry) -> RealPolynomial:
    return entry.M if isinstance(entry, QuadraticChoice) else entry


# --------------------------------------------------------------------------
# result types


@dataclass(frozen=True)
class LinearFactorization:
    """``leading * (t - h_1)(t - h_2)...(t - h_n)``, verified when ``target`` is given."""

    leading: AlgebraElement
    factors: tuple
    target: Optional[AlgebraPolynomial] = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(self.factors))
        for f in self.factors:
            if f.degree != 1 or not f.is_monic():
                raise ValueError(f"{f} is not a monic linear polynomial")
        if self.target is not None and self.expand() != self.target:
            raise VerificationFailed(f"{self} does not multiply out to {self.target}")

    @classmethod
    def from_zeros(cls, hs: Iterable[AlgebraElement], target=None, leading=None) -> "LinearFactorization":
        hs = list(hs)
        alg = hs[0].algebra if hs else (target.algebra if target is not None else None)
        if alg is None:
            raise ValueError("cannot infer the algebra of an empty factorization")
        if leading is None:
            leading = alg.one
        return cls(leading, tuple(AlgebraPolynomial.linear(h) for h in hs), target)

    @property
    def algebra(self) -> Algebra:
        return self.leading.algebra

    @property
    def zeros(self) -> tuple:
        """The ``h_i`` in factor order (left to right)."""
        return tuple(-f.coefficient(0) for f in self.factors)

    def expand(self) -> AlgebraPolynomial:
        return AlgebraPolynomial([self.leading], self.algebra) * product(self.factors, self.algebra)

    def sort_key(self) -> tuple:
        return tuple(_key(h) for h in self.zeros)

    def __len__(self):
        return len(self.factors)

    def __iter__(self):
        return iter(self.factors)

    def __str__(self):
        body = "".join(f"({f})" for f in self.factors) or "1"
        return body if self.leading == 1 else f"({self.leading}){body}"


@dataclass(frozen=True)
class SphereFamily:
    """The factor pair ``(t - x - g)(t - x + g)``, where ``g`` is any pure quaternion with ``nu(g) = y^2``.

    This is the two-slot family ``(t - h)(t - conj(h))`` with ``h = x + y u``
    and ``u`` a unit imaginary quaternion. ``y`` itself may be irrational, so
    ``y_squared`` is stored. ``slot`` is the 0-based position of the first of
    the two factors inside the full factorization.
    """

    x: Rational
    y_squared: Rational
    slot: int = 0

    def __post_init__(self):
        if self.y_squared <= 0:
            raise ValueError("a sphere family needs y > 0")

    @property
    def quadratic(self) -> RealPolynomial:
        """``(t - x)^2 + y^2``."""
        return RealPolynomial([self.x * self.x + self.y_squared, -2 * self.x, 1])

    @property
    def y(self) -> Rational:
        n, d = self.y_squared.numerator, self.y_squared.denominator
        if not (is_square(n) and is_square(d)):
            raise ArithmeticError(f"y = sqrt({self.y_squared}) is irrational")
        return rat(int(isqrt(n))) / int(isqrt(d))

    def member(self, g: AlgebraElement) -> tuple[AlgebraPolynomial, AlgebraPolynomial]:
        """The two factors for the pure quaternion ``g``; requires ``nu(g) = y^2``."""
        if g.scalar_part != 0 or g.norm() != self.y_squared:
            raise ValueError(f"{g} is not a pure quaternion of norm {self.y_squared}")
        h = H.scalar(self.x) + g
        return AlgebraPolynomial.linear(h), AlgebraPolynomial.linear(h.conj())

    def member_unit(self, u: AlgebraElement) -> tuple[AlgebraPolynomial, AlgebraPolynomial]:
        """Factors for ``h = x + y u`` with ``u^2 = -1`` (``y`` must be rational)."""
        return self.member(u * self.y)

    def default_g(self) -> AlgebraElement:
        """A rational pure quaternion of norm ``y^2`` found by a small search."""
        q = self.y_squared
        d = int(q.denominator)
        target = int(q.numerator) * d  # a^2+b^2+c^2 = q d^2
        for a in range(int(isqrt(target)) + 1):
            for b in range(a + 1):
                rest = target - a * a - b * b
                if rest < 0:
                    break
                if is_square(rest):
                    c = int(isqrt(rest))
                    return H.element([0, rat(a) / d, rat(b) / d, rat(c) / d])
        raise ArithmeticError(f"{q} is not a sum of three rational squares with denominator {d}")


@dataclass(frozen=True)
class FamilyFactorization:
    """A quaternion factorization whose real part may contain sphere families.

    ``slots`` is a tuple of fixed monic linear factors and
    :class:`SphereFamily` entries. Each family accounts for two consecutive
    factors.
    """

    slots: tuple
    target: Optional[AlgebraPolynomial] = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        if self.target is not None and not verify(self.target, self.sample()):
            raise VerificationFailed("family factorization does not verify at its default sample")

    @property
    def families(self) -> tuple:
        return tuple(s for s in self.slots if isinstance(s, SphereFamily))

    @property
    def is_fixed(self) -> bool:
        return not self.families

    def sample(self, gs: Optional[Sequence[AlgebraElement]] = None) -> LinearFactorization:
        """Instantiate every family (``gs`` in family order, defaults by search)."""
        fams = self.families
        if gs is None:
            gs = [f.default_g() for f in fams]
        if len(gs) != len(fams):
            raise ValueError(f"expected {len(fams)} family parameters")
        it = iter(gs)
        factors = []
        for s in self.slots:
            if isinstance(s, SphereFamily):
                factors.extend(s.member(next(it)))
            else:
                factors.append(s)
        return LinearFactorization(H.one, tuple(factors), self.target)

    def to_linear(self) -> LinearFactorization:
        if not self.is_fixed:
            raise ValueError("factorization contains sphere families")
        return self.sample([])

    def __str__(self):
        parts = []
        for s in self.slots:
            if isinstance(s, SphereFamily):
                parts.append(f"[(t - {s.x} - g)(t - {s.x} + g), nu(g) = {s.y_squared}]")
            else:
                parts.append(f"({s})")
        return "".join(parts)


@dataclass(frozen=True)
class AffineFamily:
    """Factorizations ``h_i(p) = base_i + sum_k p_k * directions[k][i]`` for all real ``p``.

    On construction the family is checked at the base point, at each unit
    direction and at each pair of directions. When every direction is purely
    dual (as in projection results), the product is affine in the
    parameters, so these checks prove the identity for every assignment.
    """

    base: LinearFactorization
    parameters: tuple
    directions: tuple
    target: Optional[AlgebraPolynomial] = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "parameters", tuple(self.parameters))
        object.__setattr__(self, "directions", tuple(tuple(d) for d in self.directions))
        if len(self.parameters) != len(self.directions):
            raise ValueError("one direction per parameter is required")
        n = len(self.base.factors)
        if any(len(d) != n for d in self.directions):
            raise ValueError("each direction needs one entry per factor")
        target = self.target if self.target is not None else self.base.expand()
        k = len(self.parameters)
        points = [[0] * k]
        for a in range(k):
            e = [0] * k
            e[a] = 1
            points.append(e)
            for b in range(a + 1, k):
                e2 = list(e)
                e2[b] = 1
                points.append(e2)
        for p in points:
            if self.sample(p).expand() != target:
                raise VerificationFailed(f"affine family fails at parameters {p}")

    @property
    def dimension(self) -> int:
        return len(self.parameters)

    def zeros_at(self, values: Sequence) -> tuple:
        if len(values) != len(self.parameters):
            raise ValueError(f"expected {len(self.parameters)} parameter values")
        hs = list(self.base.zeros)
        for v, d in zip(values, self.directions):
            v = rat(v)
            hs = [h + dh * v for h, dh in zip(hs, d)]
        return tuple(hs)

    def sample(self, values: Sequence) -> LinearFactorization:
        return LinearFactorization.from_zeros(self.zeros_at(values), leading=self.base.leading)

    def _flat(self, hs) -> list:
        return [x for h in hs for x in h.c]

    def contains(self, f: LinearFactorization) -> bool:
        if len(f.factors) != len(self.base.factors):
            return False
        diff = [a - b for a, b in zip(self._flat(f.zeros), self._flat(self.base.zeros))]
        dirs = [self._flat(d) for d in self.directions]
        if not any(diff):
            return True
        return rank(dirs + [diff]) == rank(dirs) if dirs else False

    def same_set(self, other: "AffineFamily") -> bool:
        """True when both families describe the same affine set of factor tuples."""
        if len(other.base.factors) != len(self.base.factors) or not self.contains(other.base):
            return False
        mine = [self._flat(d) for d in self.directions]
        theirs = [self._flat(d) for d in other.directions]
        r = rank(mine) if mine else 0
        return r == (rank(theirs) if theirs else 0) and (rank(mine + theirs) if mine + theirs else 0) == r

    def __str__(self):
        terms = []
        for i, h in enumerate(self.base.zeros):
            extra = "".join(
                f" + {p}*({d[i]})" for p, d in zip(self.parameters, self.directions) if not d[i].is_zero()
            )
            terms.append(f"(t - ({h}{extra}))")
        return "".join(terms)


@dataclass(frozen=True)
class ChoiceCertificate:
    """Why one quadratic choice ``M`` produced no right factor."""

    M: RealPolynomial
    reason: str
    remainder: Optional[AlgebraPolynomial] = None


@dataclass(frozen=True)
class NoFactorization:
    """Certificate that no monic linear factorization exists.

    ``complete`` is True when every candidate norm of a rational right factor
    was examined exactly, so the absence claim is proven (for rational
    factors).
    """

    polynomial: AlgebraPolynomial
    certificate: tuple
    complete: bool
    reason: str = "exhausted-choices"

    def __bool__(self):
        return False


@dataclass(frozen=True)
class NoSolution:
    """The projection system is inconsistent for the given primal factorization."""

    polynomial: AlgebraPolynomial
    primal: LinearFactorization
    rank_matrix: int
    rank_augmented: int

    def __bool__(self):
        return False


@dataclass(frozen=True)
class Diagnostic:
    """One branch of the enumeration: a full ordering or the point where it failed."""

    ordering: tuple
    step: Optional[int]
    status: str
    remainder: Optional[AlgebraPolynomial] = None
    message: str = ""

    @property
    def ok(self) -> bool:
        return self.status == "ok"


@dataclass(frozen=True)
class EnumerationResult:
    """Output of :func:`all_factorizations`: canonically sorted factorizations plus diagnostics."""

    polynomial: AlgebraPolynomial
    factorizations: tuple
    diagnostics: tuple

    def __iter__(self):
        return iter(self.factorizations)

    def __len__(self):
        return len(self.factorizations)

    def __contains__(self, f):
        if isinstance(f, LinearFactorization):
            return any(g.zeros == f.zeros for g in self.factorizations)
        return False

    @property
    def successes(self) -> tuple:
        return tuple(d for d in self.diagnostics if d.ok)

    @property
    def failures(self) -> tuple:
        return tuple(d for d in self.diagnostics if not d.ok)


@dataclass(frozen=True)
class MotionClassification:
    is_motion: bool
    is_generic: bool
    is_bounded: Optional[bool]
    norm: Optional[RealPolynomial]
    primal_mrpf: RealPolynomial

    def __post_init__(self):
        if self.is_generic and not self.is_motion:
            raise ValueError("generic implies motion")
        if not self.is_motion and self.is_bounded is not None:
            raise ValueError("boundedness is only defined for motion polynomials")


# --------------------------------------------------------------------------
# czero and Algorithm 2


def _lift(M, C: AlgebraPolynomial) -> AlgebraPolynomial:
    return AlgebraPolynomial.from_real(_as_M(M), C.algebra)


def _norm_is_zero(S: AlgebraPolynomial) -> bool:
    return norm_poly(S).is_zero()


def czero(C: AlgebraPolynomial, M) -> AlgebraElement:
    """The unique right zero ``h = -s1^{-1} s0`` of ``S = lrem(C, M) = s1 t + s0``.

    ``M`` must be a monic quadratic real factor of ``nu(C)``. Raises
    :class:`Pseudofactor` when ``nu(S) = 0`` and
    :class:`NonInvertibleLeading` when ``s1`` is a zero divisor.
    """
    M = _as_M(M)
    if M.degree != 2 or not M.is_monic():
        raise ValueError(f"{M} is not a monic quadratic")
    N = is_real_norm(C)
    if N is not None and not M.divides(N):
        raise InvalidOrdering(f"{M} does not divide nu(C) = {N}")
    return _czero(C, M)


def _czero(C: AlgebraPolynomial, M: RealPolynomial) -> AlgebraElement:
    """:func:`czero` for callers that already know ``M | nu(C)``."""
    Srem = lrem(C, _lift(M, C))
    if _norm_is_zero(Srem):
        raise Pseudofactor(f"{M} is a pseudofactor: nu(lrem(C, M)) = 0", M=M, remainder=Srem)
    s1, s0 = Srem.coefficient(1), Srem.coefficient(0)
    try:
        inv = s1.inverse()
    except NotInvertible as exc:
        raise NonInvertibleLeading(
            f"leading coefficient {s1} of the remainder is not invertible", M=M, remainder=Srem
        ) from exc
    h = -(inv * s0)
    # lrem(P, t - h) = P(h), so right evaluation certifies both factors
    if not (eval_right(C, h).is_zero() and eval_right(_lift(M, C), h).is_zero()):
        raise VerificationFailed(f"czero candidate {h} is not a right zero of C and M")
    return h


def is_real_pseudofactor(C: AlgebraPolynomial, M: RealPolynomial) -> bool:
    """True iff ``nu(lrem(C, M)) = 0``."""
    if M.degree < 1 or not M.is_monic():
        raise ValueError("M must be monic of positive degree")
    return _norm_is_zero(lrem(C, _lift(M, C)))


def _prepare(C: AlgebraPolynomial) -> tuple[AlgebraElement, AlgebraPolynomial]:
    """Split off a real-normed leading coefficient; return (leading, monic part)."""
    if C.is_zero():
        raise ZeroPolynomial("cannot factor the zero polynomial")
    lc = C.leading
    if lc == 1:
        return lc, C
    n = lc.norm()
    scalar = n.eps == 0 if isinstance(n, DualNumber) else True
    try:
        inv = lc.inverse()
    except NotInvertible as exc:
        raise NonInvertibleLeading(f"leading coefficient {lc} is not invertible") from exc
    if not scalar:
        raise NonRealNorm(f"leading coefficient {lc} has non-real norm {n}")
    return lc, AlgebraPolynomial([inv], C.algebra) * C


def _require_real_norm(C: AlgebraPolynomial) -> RealPolynomial:
    N = is_real_norm(C)
    if N is None:
        raise NonRealNorm(f"nu({C}) is not a real polynomial")
    if N.is_zero():
        raise NonRealNorm(f"nu({C}) vanishes")
    return N


def gfactor(C: AlgebraPolynomial, ordering: Optional[Sequence[OrderingEntry]] = None, *, check_mrpf: bool = True) -> LinearFactorization:
    """Algorithm 2 with an explicit sequence of quadratic factors.

    ``ordering[k]`` is the norm of the ``(k+1)``-th factor from the right.
    With ``ordering=None`` a depth-first search takes the first choice that
    works at every level.
    """
    lead, Cm = _prepare(C)
    if check_mrpf and Cm.degree > 0 and mrpf(Cm).degree > 0:
        raise MrpfNotTrivial(f"mrpf({C}) = {mrpf(Cm)} is not 1")
    _require_real_norm(Cm)
    if ordering is None:
        hs = _greedy(Cm)
        if hs is None:
            res = all_factorizations(Cm, check_mrpf=False, limit=1)
            raise Pseudofactor(
                f"no ordering of quadratic factors succeeds for {C}",
                M=res.failures[0].ordering[-1] if res.failures else None,
                remainder=res.failures[0].remainder if res.failures else None,
                step=res.failures[0].step if res.failures else None,
            )
        return LinearFactorization.from_zeros(hs, target=C, leading=lead)
    ordering = list(ordering)
    n = Cm.degree
    if len(ordering) < n - 1:
        raise InvalidOrdering(f"need at least {n - 1} quadratic factors, got {len(ordering)}")
    hs: list = []
    cur = Cm
    for step in range(1, n + 1):
        N = _require_real_norm(cur)
        if cur.degree == 1:
            if len(ordering) >= step and _as_M(ordering[step - 1]) != N:
                raise InvalidOrdering(f"last entry {_as_M(ordering[step - 1])} is not nu of the final factor {N}")
            hs.insert(0, -cur.coefficient(0))
            break
        M = _as_M(ordering[step - 1])
        if not M.divides(N):
            raise InvalidOrdering(f"step {step}: {M} does not divide {N}")
        try:
            h = _czero(cur, M)
        except (Pseudofactor, NonInvertibleLeading) as exc:
            exc.step = step
            raise
        hs.insert(0, h)
        cur = lquo(cur, AlgebraPolynomial.linear(h))
    return LinearFactorization.from_zeros(hs, target=C, leading=lead)


def _greedy(C: AlgebraPolynomial):
    if C.degree == 0:
        return []
    if C.degree == 1:
        return [-C.coefficient(0)]
    N = _require_real_norm(C)
    for choice in quadratic_choices(factor_real(N)):
        try:
            h = czero(C, choice)
        except (Pseudofactor, NonInvertibleLeading):
            continue
        rest = _greedy(lquo(C, AlgebraPolynomial.linear(h)))
        if rest is not None:
            return rest + [h]
    return None


def all_factorizations(C: AlgebraPolynomial, *, check_mrpf: bool = True, limit: Optional[int] = None) -> EnumerationResult:
    """Run Algorithm 2 over every choice of quadratic factor at every level.

    Successful orderings are logged with their full ``(M_1, ..., M_n)``,
    including the norm of the final (leftmost) factor. Failed branches are
    logged with the failing step and the offending remainder.
    """
    lead, Cm = _prepare(C)
    if check_mrpf and Cm.degree > 0 and mrpf(Cm).degree > 0:
        raise MrpfNotTrivial(f"mrpf({C}) = {mrpf(Cm)} is not 1")
    found: dict = {}
    diags: list[Diagnostic] = []
    N0 = _require_real_norm(Cm)
    # every monic quadratic divisor of a later norm divides nu(C), so one
    # real factorization serves all levels
    top_choices = [c.M for c in quadratic_choices(factor_real(N0))] if Cm.degree > 1 else []

    def rec(cur: AlgebraPolynomial, N: RealPolynomial, hs: list, ordering: tuple):
        if limit is not None and len(found) >= limit:
            return
        if cur.degree == 0:
            key = tuple(_key(h) for h in hs)
            if key not in found:
                found[key] = hs
            diags.append(Diagnostic(ordering, None, "ok"))
            return
        if cur.degree == 1:
            rec(AlgebraPolynomial([cur.algebra.one], cur.algebra), N, [-cur.coefficient(0)] + hs, ordering + (N,))
            return
        step = len(ordering) + 1
        for M in top_choices:
            rest, r = divmod(N, M)
            if r:
                continue
            try:
                h = _czero(cur, M)
            except (Pseudofactor, NonInvertibleLeading) as exc:
                diags.append(Diagnostic(ordering + (M,), step, exc.code, exc.remainder, str(exc)))
                continue
            rec(lquo(cur, AlgebraPolynomial.linear(h)), rest, [h] + hs, ordering + (M,))

    rec(Cm, N0, [], ())
    facts = sorted(
        (LinearFactorization.from_zeros(hs, target=C, leading=lead) for hs in found.values()),
        key=LinearFactorization.sort_key,
    )
    return EnumerationResult(C, tuple(facts), tuple(diags))


# --------------------------------------------------------------------------
# quaternions


def quaternion_factorizations(C: AlgebraPolynomial) -> list[FamilyFactorization]:
    """All factorizations of a monic quaternion polynomial.

    With ``F = mrpf C`` and ``C = F G``: real roots of ``F`` become fixed
    factors, its irreducible quadratics become sphere families, and every
    factorization of ``G`` is appended.
    """
    if C.algebra is not H:
        raise ValueError("quaternion_factorizations expects a polynomial over H")
    if not C.is_monic():
        raise ValueError("C must be monic")
    F = mrpf(C)
    G = lquo(C, AlgebraPolynomial.from_real(F, H))
    prefix: list = []
    if F.degree > 0:
        RF = factor_real(F)
        if RF.real_quadratics:
            raise ExactFactorizationUnsupported(
                f"mrpf {F} has irrational real roots; the corresponding factors are not rational"
            )
        for r, m in RF.linear:
            prefix.extend([AlgebraPolynomial.linear(H.scalar(r))] * m)
        for b, c, m in RF.quadratics:
            x = -b / 2
            for _ in range(m):
                prefix.append(SphereFamily(x, c - x * x, 0))
    # fix slot indices
    slots = []
    pos = 0
    for s in prefix:
        if isinstance(s, SphereFamily):
            slots.append(SphereFamily(s.x, s.y_squared, pos))
            pos += 2
        else:
            slots.append(s)
            pos += 1
    tails = [()] if G.degree == 0 else [f.factors for f in all_factorizations(G)]
    return [FamilyFactorization(tuple(slots) + tuple(tail), C) for tail in tails]


# --------------------------------------------------------------------------
# motion polynomials


def _as_dh(C: AlgebraPolynomial) -> AlgebraPolynomial:
    if C.algebra is DH:
        return C
    if C.algebra is H:
        return C.lift(DH)
    raise ValueError(f"motion polynomials live in DH, not {C.algebra}")


def classify_motion(C: AlgebraPolynomial) -> MotionClassification:
    """Motion (real nonzero norm), generic (trivial primal mrpf) and bounded flags."""
    C = _as_dh(C)
    if C.is_zero():
        raise ZeroPolynomial("cannot classify the zero polynomial")
    N = is_real_norm(C)
    is_motion = N is not None and not N.is_zero()
    P = C.primal()
    pm = mrpf(P) if P else RealPolynomial()
    generic = is_motion and pm.degree == 0
    bounded = (not has_real_root(pm)) if is_motion and pm else (False if is_motion else None)
    return MotionClassification(is_motion, generic, bounded, N if is_motion else None, pm)


def factor_generic_motion(C: AlgebraPolynomial) -> LinearFactorization:
    """Factor a generic motion polynomial with Algorithm 2 (always succeeds)."""
    C = _as_dh(C)
    cls = classify_motion(C)
    if not cls.is_generic:
        raise MrpfNotTrivial(f"{C} is not a generic motion polynomial (primal mrpf {cls.primal_mrpf})")
    return gfactor(C, None, check_mrpf=True)


def unbounded_reduce(C: AlgebraPolynomial) -> tuple[list, AlgebraPolynomial]:
    """Peel the right factors belonging to real roots of the primal mrpf.

    Returns ``(peeled, residue)`` with ``C = residue * prod(peeled)`` and a
    bounded ``residue``.
    """
    C = _as_dh(C)
    cls = classify_motion(C)
    if not cls.is_motion:
        raise NonRealNorm(f"{C} is not a motion polynomial")
    if not C.is_monic():
        raise ValueError("C must be monic")
    part = square_free_real_linear_part(cls.primal_mrpf)
    bad = [(r, m) for r, m in zip(part.roots, part.multiplicities) if m > 1]
    if bad or any(m > 1 for m, _ in part.irrational):
        raise MultiplicityViolation(f"primal mrpf {cls.primal_mrpf} has repeated real linear factors {bad}")
    if part.irrational:
        raise IrrationalRealRoot(f"primal mrpf {cls.primal_mrpf} has irrational real roots")
    peeled: list = []
    cur = C
    for step, r in enumerate(part.roots, 1):
        M = RealPolynomial.from_roots([r, r])
        try:
            h = _czero(cur, M)
        except (Pseudofactor, NonInvertibleLeading) as exc:
            exc.step = step
            raise
        f = AlgebraPolynomial.linear(h)
        peeled.insert(0, f)
        cur = lquo(cur, f)
    if product([cur] + peeled, DH) != C:
        raise VerificationFailed("unbounded reduction does not reproduce C")
    return peeled, cur


# --------------------------------------------------------------------------
# projection


def projection_system(C: AlgebraPolynomial, primal_factorization: LinearFactorization) -> tuple[list, list]:
    """The square system ``rows * b = rhs`` for the stacked dual parts ``b_1 .. b_n``.

    Row ``4k + l`` compares component ``l`` of the ``t^k`` coefficient of the
    dual part; column ``4i + l`` is component ``l`` of ``b_i``.
    """
    pf = primal_factorization
    n = len(pf.factors)
    lefts = [product(pf.factors[:i], H) for i in range(n)]
    rights = [product(pf.factors[i + 1:], H) for i in range(n)]
    columns = []
    for i in range(n):
        for e in H.basis():
            contrib = -(lefts[i] * AlgebraPolynomial([e], H) * rights[i])
            columns.append([x for k in range(n) for x in contrib.coefficient(k).c])
    rows = [[col[r] for col in columns] for r in range(4 * n)]
    D = _as_dh(C).dual()
    rhs = [x for k in range(n) for x in D.coefficient(k).c]
    return rows, rhs


def factor_by_projection(
    C: AlgebraPolynomial, primal_factorization: LinearFactorization
) -> Union[LinearFactorization, AffineFamily, NoSolution]:
    """Solve for the dual parts ``b_i`` of ``C = prod (t - a_i - eps b_i)``.

    The primal parts ``a_i`` come from ``primal_factorization``. The dual
    part of the product is linear in the ``b_i``. Comparing the coefficients
    of ``t^0 .. t^(n-1)`` gives ``4n`` equations in ``4n`` unknowns.
    """
    C = _as_dh(C)
    pf = primal_factorization
    if pf.algebra is not H:
        raise ValueError("the primal factorization must be over H")
    if not C.is_monic() or pf.leading != 1:
        raise ValueError("C and its primal factorization must be monic")
    n = len(pf.factors)
    if C.primal() != pf.expand():
        raise PrimalMismatch(f"primal part {C.primal()} differs from {pf.expand()}")
    rows, rhs = projection_system(C, pf)
    if C.dual().degree >= n:
        return NoSolution(C, pf, rank(rows), rank(rows) + 1)
    particular, basis = solve_affine(rows, rhs)
    if particular is None:
        return NoSolution(C, pf, rank(rows), rank([r + [b] for r, b in zip(rows, rhs)]))

    def zeros_from(vec, with_primal=True):
        out = []
        for i, a in enumerate(pf.zeros):
            b = vec[4 * i: 4 * i + 4]
            primal = a.c if with_primal else (ZERO,) * 4
            out.append(DH.element(tuple(primal) + tuple(b)))
        return out

    base = LinearFactorization.from_zeros(zeros_from(particular), target=C)
    if not basis:
        return base
    names = _parameter_names(len(basis))
    dirs = [zeros_from(v, with_primal=False) for v in basis]
    return AffineFamily(base, names, dirs, C)


def _parameter_names(k: int) -> tuple:
    letters = string.ascii_lowercase
    if k <= len(letters):
        return tuple(letters[:k])
    return tuple(f"p{i}" for i in range(k))


# --------------------------------------------------------------------------
# quadratic split quaternion polynomials


@dataclass(frozen=True)
class BranchRecord:
    """What happened for one quadratic choice in :func:`factor_quadratic_split`."""

    M: RealPolynomial
    branch: str
    remainder: AlgebraPolynomial
    zeros: tuple
    note: str = ""


@dataclass(frozen=True)
class SplitQuadraticResult:
    factorizations: tuple
    trace: tuple

    @property
    def branches(self) -> set:
        return {r.branch for r in self.trace if r.zeros}

    def __iter__(self):
        return iter(self.factorizations)

    def __len__(self):
        return len(self.factorizations)


def _left_matrix(s: AlgebraElement) -> list[list[Rational]]:
    """Matrix of ``h -> s h`` in the basis (1, is, js, ks)."""
    cols = [(s * e).c for e in s.algebra.basis()]
    return [[cols[j][i] for j in range(4)] for i in range(4)]


def _split_form(u, v) -> Rational:
    """Polar form of the split norm on pure vectors: -x x' - y y' + z z'."""
    return -u[0] * v[0] - u[1] * v[1] + u[2] * v[2]


def _rational_sqrt(x: Rational) -> Optional[Rational]:
    if x < 0:
        return None
    n, d = x.numerator, x.denominator
    if is_square(n) and is_square(d):
        return rat(int(isqrt(n))) / int(isqrt(d))
    return None


def _common_right_zeros(Srem: AlgebraPolynomial, M: RealPolynomial) -> tuple[list, bool, str]:
    """Exact common right zeros of ``S = s1 t + s0`` and ``M`` in S.

    Returns ``(zeros, complete, note)``. ``complete`` is False when zeros
    may exist that exact rational arithmetic cannot list (irrational points
    or a positive-dimensional solution set).
    """
    alg = Srem.algebra
    s1, s0 = Srem.coefficient(1), Srem.coefficient(0)
    A = _left_matrix(s1)
    rhs = [-x for x in s0.c]
    c, b, _ = M.coeffs
    zeros: list = []
    complete = True
    notes = []
    # real zeros of M
    part = factor_real(M)
    for r, _m in part.linear:
        if (s1 * r + s0).is_zero():
            zeros.append(alg.scalar(r))
    if part.real_quadratics and s1.is_zero() and s0.is_zero():
        complete = False
        notes.append("irrational real zeros")
    # zeros with scalar part -b/2 and nu(vector) = c - b^2/4
    h0 = -b / 2
    target = c - b * b / 4
    rows = A + [[ONE, ZERO, ZERO, ZERO]]
    particular, basis = solve_affine(rows, rhs + [h0])
    if particular is not None:
        p = particular[1:]
        B = [v[1:] for v in basis]
        if not B:
            if _split_form(p, p) == target:
                zeros.append(alg.element([h0] + p))
        elif len(B) == 1:
            d = B[0]
            qa = _split_form(d, d)
            qb = 2 * _split_form(p, d)
            qc = _split_form(p, p) - target
            lams = []
            if qa != 0:
                disc = qb * qb - 4 * qa * qc
                if disc >= 0:
                    sq = _rational_sqrt(disc)
                    if sq is None:
                        complete = False
                        notes.append("irrational zeros on a line")
                    else:
                        lams = sorted({(-qb - sq) / (2 * qa), (-qb + sq) / (2 * qa)})
            elif qb != 0:
                lams = [-qc / qb]
            elif qc == 0:
                complete = False
                notes.append("a whole line of zeros")
                lams = [ZERO]
            for lam in lams:
                zeros.append(alg.element([h0] + [x + lam * y for x, y in zip(p, d)]))
        else:
            complete = False
            notes.append(f"{len(B)}-dimensional solution set")
    uniq = {}
    for z in zeros:
        uniq.setdefault(_key(z), z)
    return list(uniq.values()), complete, "; ".join(notes)


def _ruling(x: AlgebraElement):
    """``(alpha, beta, cos, sin)`` with ``x = alpha a + beta b`` for the e = -1 ruling, or None."""
    x0, x1, x2, x3 = x.c
    alpha, beta = x0, -x3
    n = alpha * alpha + beta * beta
    if n == 0:
        return alpha, beta, None, None
    return alpha, beta, (alpha * x1 + beta * x2) / n, (alpha * x2 - beta * x1) / n


def _null_line_zero(Srem: AlgebraPolynomial, M: RealPolynomial) -> Optional[AlgebraElement]:
    """Closed-form common right zero of a null-line remainder and ``M``.

    After the shift ``t -> t + u`` that makes ``M = t^2 + m``, both
    coefficients of ``S`` are written in the e = -1 ruling basis
    ``a = 1 + cos(phi) is + sin(phi) js`` and
    ``b = -sin(phi) is + cos(phi) js - ks``. The zero then follows from the
    closed formula. Returns None when the decomposition does not exist.
    """
    _, b, _ = M.coeffs
    u = -b / 2
    Ms = M.compose(RealPolynomial([u, 1]))
    m = Ms.coeffs[0]
    s1 = Srem.coefficient(1)
    s0 = Srem.coefficient(0) + s1 * u
    r0, r1 = _ruling(s0), _ruling(s1)
    cs = r1[2:] if r1[2] is not None else r0[2:]
    if cs[0] is None:
        return None
    cos, sin = cs
    if cos * cos + sin * sin != 1:
        return None
    alg = Srem.algebra
    for (al, be, _, _), s in ((r0, s0), (r1, s1)):
        a_vec = alg.element([1, cos, sin, 0])
        b_vec = alg.element([0, -sin, cos, -1])
        if a_vec * al + b_vec * be != s:
            return None
    a0, b0 = r0[0], r0[1]
    a1, b1 = r1[0], r1[1]
    den = 2 * (a0 * b1 - a1 * b0)
    if den == 0:
        return None
    k = a1 * b1 * m + a0 * b0
    h1 = ((a1 * a1 - b1 * b1) * m + a0 * a0 - b0 * b0) * sin + 2 * k * cos
    h2 = ((b1 * b1 - a1 * a1) * m - a0 * a0 + b0 * b0) * cos + 2 * k * sin
    h3 = -a0 * a0 - b0 * b0 - (a1 * a1 + b1 * b1) * m
    hp = alg.element([0, h1 / den, h2 / den, h3 / den])
    # h' is a right zero of the shifted M and S; undo the shift
    if not (s1 * hp + s0).is_zero() or not (hp * hp + m).is_zero():
        return None
    return hp + u


def _linearly_independent(C: AlgebraPolynomial) -> bool:
    return rank([list(C.coefficient(i).c) for i in range(3)]) == 3


def factor_quadratic_split(C: AlgebraPolynomial) -> Union[SplitQuadraticResult, NoFactorization]:
    """Decide factorizability of a monic quadratic split-quaternion polynomial.

    Each quadratic factor ``M`` of ``nu(C)`` is tried in turn:

    * ``nu(lrem(C, M)) != 0`` -- czero gives the unique right zero;
    * the remainder parameterizes a null line -- the partner pair
      ``M2 = M + S + conj(S)``, ``S2 = -conj(S)`` is formed, the remainder
      that has right zeros is selected and the closed-form zero is used;
    * anything else (dependent coefficients, a zero-divisor leading
      coefficient) -- common right zeros of ``S`` and ``M`` are solved for
      exactly.

    Any right factor ``t - h`` has ``nu(t - h) | nu(C)``, so exhausting the
    choices is a decision procedure for rational ``h``.
    """
    if C.algebra is not S:
        raise ValueError("factor_quadratic_split expects a polynomial over S")
    if C.degree != 2 or not C.is_monic():
        raise ValueError("C must be a monic quadratic")
    N = _require_real_norm(C)
    choices = quadratic_choices(factor_real(N))
    independent = _linearly_independent(C)
    trace: list[BranchRecord] = []
    certs: list[ChoiceCertificate] = []
    complete = True
    zeros: dict = {}
    for choice in choices:
        M = choice.M
        Srem = lrem(C, _lift(M, C))
        if not _norm_is_zero(Srem):
            try:
                h = czero(C, M)
                trace.append(BranchRecord(M, "czero", Srem, (h,)))
                zeros.setdefault(_key(h), h)
                continue
            except NonInvertibleLeading:
                pass
            hs, ok, note = _common_right_zeros(Srem, M)
            complete &= ok
            trace.append(BranchRecord(M, "fallback", Srem, tuple(hs), note or "non-invertible leading coefficient"))
        elif independent:
            hs = []
            M2 = M + RealPolynomial(
                [2 * Srem.coefficient(0).scalar_part, 2 * Srem.coefficient(1).scalar_part]
            )
            S2 = -Srem.conj()
            for MM, SS in ((M, Srem), (M2, S2)):
                if not _has_right_zero(SS):
                    continue
                h = _null_line_zero(SS, MM)
                if h is None:
                    found, ok, note = _common_right_zeros(SS, MM)
                    complete &= ok
                    hs.extend(found)
                else:
                    hs.append(h)
            trace.append(BranchRecord(M, "null-line", Srem, tuple(hs), f"partner M2 = {M2}"))
        else:
            hs, ok, note = _common_right_zeros(Srem, M)
            complete &= ok
            trace.append(BranchRecord(M, "fallback", Srem, tuple(hs), note or "linearly dependent coefficients"))
        for h in hs:
            if not lrem(C, AlgebraPolynomial.linear(h)):
                zeros.setdefault(_key(h), h)
        if not hs:
            certs.append(ChoiceCertificate(M, "no common right zero of S and M", Srem))
    facts = []
    for h in zeros.values():
        right = AlgebraPolynomial.linear(h)
        left = lquo(C, right)
        facts.append(LinearFactorization(C.algebra.one, (left, right), C))
    facts.sort(key=LinearFactorization.sort_key)
    if not facts:
        return NoFactorization(C, tuple(certs), complete)
    return SplitQuadraticResult(tuple(facts), tuple(trace))


def _has_right_zero(Srem: AlgebraPolynomial) -> bool:
    s1, s0 = Srem.coefficient(1), Srem.coefficient(0)
    particular, _ = solve_affine(_left_matrix(s1), [-x for x in s0.c])
    return particular is not None


# --------------------------------------------------------------------------
# verification


def verify(C: AlgebraPolynomial, f) -> bool:
    """Exact check that ``f`` multiplies out to ``C``.

    ``f`` may be a :class:`LinearFactorization`, an :class:`AffineFamily`
    (checked at its base point and unit directions), a
    :class:`FamilyFactorization` (checked at its default sample) or a plain
    sequence of polynomials.
    """
    try:
        if isinstance(f, LinearFactorization):
            return f.expand() == C
        if isinstance(f, AffineFamily):
            AffineFamily(f.base, f.parameters, f.directions, C)
            return True
        if isinstance(f, FamilyFactorization):
            return f.sample().expand() == C
        factors = list(f)
        return product(factors, C.algebra) == C
    except (CliffordFactorError, ArithmeticError, ValueError):
        return False
