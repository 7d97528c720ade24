"""Left polynomials over the algebras of :mod:`cliffordfactor.algebra`.

Coefficients sit to the left of the indeterminate ``t``, which commutes with
everything. Evaluation at a ring element is *right* evaluation
``C(r) = sum c_i r^i``; it is additive but not multiplicative.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Literal, Optional, Sequence

from .algebra import DH, H, Algebra, AlgebraElement, DualNumber
from .errors import (
    AlgebraMismatch,
    DegenerateTransformation,
    LeadingCoefficientNotInvertible,
    NotInvertible,
    VerificationFailed,
    ZeroPolynomial,
)
from .rational import ONE, ZERO, Rational, fmt, is_scalar_like, rat


def _trim(coeffs: list, is_zero) -> tuple:
    while coeffs and is_zero(coeffs[-1]):
        coeffs.pop()
    return tuple(coeffs)


def _tpow(k: int) -> str:
    return "" if k == 0 else ("t" if k == 1 else f"t^{k}")


class RealPolynomial:
    """Dense polynomial with exact rational coefficients, index = power of t."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        self.coeffs = _trim([rat(c) for c in coeffs], lambda c: c == 0)

    @classmethod
    def from_roots(cls, roots: Iterable) -> "RealPolynomial":
        out = cls([1])
        for r in roots:
            out = out * cls([-rat(r), 1])
        return out

    @classmethod
    def t(cls) -> "RealPolynomial":
        return cls([0, 1])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Rational:
        if not self.coeffs:
            raise ZeroPolynomial("the zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def coefficient(self, i: int) -> Rational:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else ZERO

    def monic(self) -> "RealPolynomial":
        lc = self.leading
        return RealPolynomial(c / lc for c in self.coeffs)

    def _coerce(self, other):
        if isinstance(other, RealPolynomial):
            return other
        if is_scalar_like(other):
            return RealPolynomial([other])
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = max(len(self.coeffs), len(o.coeffs))
        return RealPolynomial(self.coefficient(i) + o.coefficient(i) for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return RealPolynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        if is_scalar_like(other):
            s = rat(other)
            return RealPolynomial(c * s for c in self.coeffs)
        if isinstance(other, AlgebraPolynomial) or isinstance(other, AlgebraElement):
            return NotImplemented
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not self.coeffs or not o.coeffs:
            return RealPolynomial()
        out = [ZERO] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    out[i + j] += a * b
        return RealPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = RealPolynomial([1])
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __divmod__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        dq = len(rem) - len(o.coeffs)
        if dq < 0:
            return RealPolynomial(), RealPolynomial(rem)
        q = [ZERO] * (dq + 1)
        inv = 1 / o.coeffs[-1]
        for k in range(dq, -1, -1):
            f = rem[k + len(o.coeffs) - 1] * inv
            q[k] = f
            if f:
                for j, b in enumerate(o.coeffs):
                    rem[k + j] -= f * b
        return RealPolynomial(q), RealPolynomial(rem[: len(o.coeffs) - 1])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def divides(self, other: "RealPolynomial") -> bool:
        return (other % self).is_zero()

    def exact_div(self, other) -> "RealPolynomial":
        q, r = divmod(self, other)
        if r:
            raise ArithmeticError(f"{other} does not divide {self}")
        return q

    def __call__(self, x):
        acc = ZERO if is_scalar_like(x) else 0 * x
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "RealPolynomial":
        return RealPolynomial(i * c for i, c in enumerate(self.coeffs) if i)

    def gcd(self, other: "RealPolynomial") -> "RealPolynomial":
        a, b = self, other
        while b:
            a, b = b, a % b
        return a.monic() if a else a

    def compose(self, other: "RealPolynomial") -> "RealPolynomial":
        acc = RealPolynomial()
        for c in reversed(self.coeffs):
            acc = acc * other + c
        return acc

    def __eq__(self, other):
        if isinstance(other, RealPolynomial):
            return self.coeffs == other.coeffs
        if is_scalar_like(other):
            return self.coeffs == RealPolynomial([other]).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(("RealPolynomial", self.coeffs))

    def __lt__(self, other):
        return _real_key(self) < _real_key(other)

    def __repr__(self):
        return f"RealPolynomial({self})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            neg = c < 0
            a = -c if neg else c
            body = _tpow(k) if (a == 1 and k) else fmt(a) + _tpow(k)
            if not parts:
                parts.append(("-" if neg else "") + body)
            else:
                parts.append((" - " if neg else " + ") + body)
        return "".join(parts)


def _real_key(p: RealPolynomial):
    return (p.degree, tuple(reversed(p.coeffs)))


class AlgebraPolynomial:
    """Dense left polynomial ``sum c_i t^i`` over one algebra."""

    __slots__ = ("algebra", "coeffs")

    def __init__(self, coeffs: Iterable, algebra: Optional[Algebra] = None):
        cs = list(coeffs)
        if algebra is None:
            for c in cs:
                if isinstance(c, AlgebraElement):
                    algebra = c.algebra
                    break
            else:
                raise ValueError("cannot infer the algebra of a scalar-only polynomial")
        self.algebra = algebra
        self.coeffs = _trim([algebra.coerce(c) for c in cs], lambda c: c.is_zero())

    @classmethod
    def _trusted(cls, coeffs: list, algebra: Algebra) -> "AlgebraPolynomial":
        """Internal constructor for coefficient lists already in ``algebra``."""
        obj = object.__new__(cls)
        obj.algebra = algebra
        obj.coeffs = _trim(coeffs, lambda c: c.is_zero())
        return obj

    # constructors -------------------------------------------------------
    @classmethod
    def t(cls, algebra: Algebra) -> "AlgebraPolynomial":
        return cls([algebra.zero, algebra.one], algebra)

    @classmethod
    def constant(cls, x, algebra: Algebra) -> "AlgebraPolynomial":
        return cls([x], algebra)

    @classmethod
    def linear(cls, h: AlgebraElement) -> "AlgebraPolynomial":
        """The monic linear polynomial ``t - h``."""
        return cls([-h, h.algebra.one], h.algebra)

    @classmethod
    def from_real(cls, P: RealPolynomial, algebra: Algebra) -> "AlgebraPolynomial":
        return cls([algebra.scalar(c) for c in P.coeffs], algebra)

    @classmethod
    def from_components(cls, comps: Sequence[RealPolynomial], algebra: Algebra) -> "AlgebraPolynomial":
        n = max((p.degree for p in comps), default=-1) + 1
        return cls([algebra.element(p.coefficient(i) for p in comps) for i in range(n)], algebra)

    # basic properties ---------------------------------------------------
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> AlgebraElement:
        if not self.coeffs:
            raise ZeroPolynomial("the zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coefficient(self, i: int) -> AlgebraElement:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self.algebra.zero

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def is_real(self) -> bool:
        return all(c.is_scalar() for c in self.coeffs)

    def to_real(self) -> RealPolynomial:
        if not self.is_real():
            raise ValueError(f"{self} is not a real polynomial")
        return RealPolynomial(c.scalar_part for c in self.coeffs)

    def component_polys(self) -> list[RealPolynomial]:
        """One real polynomial per basis component."""
        return [RealPolynomial(c.components()[k] for c in self.coeffs) for k in range(self.algebra.dim)]

    def primal(self) -> "AlgebraPolynomial":
        """Quaternion polynomial of the primal parts (DH only)."""
        self._require_dh()
        return AlgebraPolynomial([c.primal for c in self.coeffs], H)

    def dual(self) -> "AlgebraPolynomial":
        self._require_dh()
        return AlgebraPolynomial([c.dual for c in self.coeffs], H)

    def _require_dh(self):
        if self.algebra is not DH:
            raise AlgebraMismatch("primal/dual split is defined for DH polynomials")

    def lift(self, algebra: Algebra) -> "AlgebraPolynomial":
        """Embed an H polynomial into DH (primal part)."""
        if self.algebra is algebra:
            return self
        if self.algebra is H and algebra is DH:
            return AlgebraPolynomial([DH.element(c.c + (ZERO,) * 4) for c in self.coeffs], DH)
        raise AlgebraMismatch(f"cannot lift {self.algebra} polynomials into {algebra}")

    # arithmetic -------------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, AlgebraPolynomial):
            if other.algebra != self.algebra:
                raise AlgebraMismatch(f"cannot combine {self.algebra} and {other.algebra} polynomials")
            return other
        if isinstance(other, RealPolynomial):
            return AlgebraPolynomial.from_real(other, self.algebra)
        if isinstance(other, (AlgebraElement, DualNumber)) or is_scalar_like(other):
            return AlgebraPolynomial([self.algebra.coerce(other)], self.algebra)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return AlgebraPolynomial._trusted(out, self.algebra)

    __radd__ = __add__

    def __neg__(self):
        return AlgebraPolynomial._trusted([-c for c in self.coeffs], self.algebra)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        if is_scalar_like(other):
            s = rat(other)
            return AlgebraPolynomial([c * s for c in self.coeffs], self.algebra)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return mul(self, o)

    def __rmul__(self, other):
        if is_scalar_like(other):
            return self * other
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return mul(o, self)

    def __pow__(self, n: int):
        out = AlgebraPolynomial([self.algebra.one], self.algebra)
        for _ in range(n):
            out = out * self
        return out

    def conj(self) -> "AlgebraPolynomial":
        return AlgebraPolynomial._trusted([c.conj() for c in self.coeffs], self.algebra)

    def right_scale(self, g: AlgebraElement) -> "AlgebraPolynomial":
        """Coefficient-wise ``c_i * g``."""
        return AlgebraPolynomial._trusted([c * g for c in self.coeffs], self.algebra)

    def left_scale(self, g: AlgebraElement) -> "AlgebraPolynomial":
        return AlgebraPolynomial._trusted([g * c for c in self.coeffs], self.algebra)

    def shift_degree(self, k: int) -> "AlgebraPolynomial":
        """Multiply by ``t^k``."""
        if not self.coeffs:
            return self
        return AlgebraPolynomial([self.algebra.zero] * k + list(self.coeffs), self.algebra)

    def eval_right(self, r) -> AlgebraElement:
        return eval_right(self, r)

    def eval_left(self, r) -> AlgebraElement:
        return eval_left(self, r)

    def __call__(self, r):
        return eval_right(self, r)

    def __eq__(self, other):
        if isinstance(other, AlgebraPolynomial):
            return self.algebra == other.algebra and self.coeffs == other.coeffs
        if isinstance(other, RealPolynomial):
            return self.is_real() and self.to_real() == other
        if is_scalar_like(other) or isinstance(other, AlgebraElement):
            o = self._coerce(other)
            return self.coeffs == o.coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.algebra.name, self.coeffs))

    def __repr__(self):
        return f"AlgebraPolynomial[{self.algebra}]({self})"

    def __str__(self):
        return render_polynomial(self)


def render_polynomial(C: AlgebraPolynomial) -> str:
    """``t^2 - (2 + 2i + j)t + (1 + 2i + j + 2k)``."""
    if not C.coeffs:
        return "0"
    parts = []
    for k in range(len(C.coeffs) - 1, -1, -1):
        c = C.coeffs[k]
        if c.is_zero():
            continue
        comps = c.components()
        neg = next(x for x in comps if x != 0) < 0
        a = -c if neg else c
        tp = _tpow(k)
        if a.is_scalar():
            s = a.scalar_part
            body = tp if (s == 1 and k) else fmt(s) + tp
        else:
            txt = str(a)
            simple = sum(1 for x in a.components() if x != 0) == 1 and "eps" not in txt
            if k == 0:
                body = txt if simple else f"({txt})"
            else:
                body = f"({txt}){tp}"
        if not parts:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append((" - " if neg else " + ") + body)
    return "".join(parts)


def mul(A: AlgebraPolynomial, B: AlgebraPolynomial) -> AlgebraPolynomial:
    """Noncommutative convolution ``c_i = sum_{j+k=i} a_j b_k``."""
    if A.algebra != B.algebra:
        raise AlgebraMismatch(f"cannot multiply {A.algebra} and {B.algebra} polynomials")
    alg = A.algebra
    if not A.coeffs or not B.coeffs:
        return AlgebraPolynomial([], alg)
    kernel = getattr(alg, "raw_mul", None)
    if kernel is not None:
        return _mul_raw(A, B, kernel)
    out = [alg.zero] * (len(A.coeffs) + len(B.coeffs) - 1)
    bs = [(j, b) for j, b in enumerate(B.coeffs) if not b.is_zero()]
    for i, a in enumerate(A.coeffs):
        if a.is_zero():
            continue
        for j, b in bs:
            out[i + j] = out[i + j] + a * b
    return AlgebraPolynomial._trusted(out, alg)


def _mul_raw(A: AlgebraPolynomial, B: AlgebraPolynomial, kernel) -> AlgebraPolynomial:
    """Convolution on bare coefficient tuples (fixed-layout algebras)."""
    alg = A.algebra
    dim = alg.dim
    acc = [[ZERO] * dim for _ in range(len(A.coeffs) + len(B.coeffs) - 1)]
    bs = [(j, b.c) for j, b in enumerate(B.coeffs) if any(b.c)]
    for i, a in enumerate(A.coeffs):
        ac = a.c
        if not any(ac):
            continue
        for j, bc in bs:
            row = acc[i + j]
            for k, v in enumerate(kernel(ac, bc)):
                row[k] += v
    make = alg.element_class._from_tuple
    return AlgebraPolynomial._trusted([make(tuple(row), alg) for row in acc], alg)


def product(polys: Iterable[AlgebraPolynomial], algebra: Algebra) -> AlgebraPolynomial:
    out = AlgebraPolynomial([algebra.one], algebra)
    for p in polys:
        out = out * p
    return out


def eval_right(C: AlgebraPolynomial, r) -> AlgebraElement:
    """``sum c_i r^i`` (Horner with r multiplied on the right)."""
    r = C.algebra.coerce(r)
    acc = C.algebra.zero
    for c in reversed(C.coeffs):
        acc = acc * r + c
    return acc


def eval_left(C: AlgebraPolynomial, r) -> AlgebraElement:
    """``sum r^i c_i``."""
    r = C.algebra.coerce(r)
    acc = C.algebra.zero
    for c in reversed(C.coeffs):
        acc = r * acc + c
    return acc


# ---------------------------------------------------------------------------
# division


@dataclass(frozen=True)
class DivisionResult:
    quotient: AlgebraPolynomial
    remainder: AlgebraPolynomial
    side: Literal["left", "right"]
    dividend: AlgebraPolynomial
    divisor: AlgebraPolynomial

    def __post_init__(self):
        if self.remainder.degree >= self.divisor.degree:
            raise VerificationFailed(f"{self.side} division of {self.dividend} by {self.divisor} left a high remainder")

    def check(self) -> bool:
        """Recompute ``Q G + S`` (or ``G Q + S``) and compare with the dividend."""
        if self.side == "left":
            rebuilt = self.quotient * self.divisor + self.remainder
        else:
            rebuilt = self.divisor * self.quotient + self.remainder
        return rebuilt == self.dividend

    def __iter__(self):
        yield self.quotient
        yield self.remainder


def divide(F: AlgebraPolynomial, G: AlgebraPolynomial, side: Literal["left", "right"] = "left") -> DivisionResult:
    """Euclidean division: ``F = Q G + S`` (left) or ``F = G Q + S`` (right)."""
    if F.algebra != G.algebra:
        raise AlgebraMismatch("dividend and divisor live in different algebras")
    if side not in ("left", "right"):
        raise ValueError("side must be 'left' or 'right'")
    alg = F.algebra
    if G.is_zero():
        raise LeadingCoefficientNotInvertible("division by the zero polynomial")
    g = G.leading
    try:
        ginv = g.inverse()
    except NotInvertible as exc:
        raise LeadingCoefficientNotInvertible(f"leading coefficient {g} of {G} is not invertible") from exc
    left = side == "left"
    kernel = getattr(alg, "raw_mul", None)
    if kernel is not None:
        Q, S = _divide_raw(F, G, ginv, left, kernel)
        return DivisionResult(Q, S, side, F, G)
    if left:
        S = list(F.right_scale(ginv).coeffs)
        G0 = G.right_scale(ginv).coeffs
    else:
        S = list(F.left_scale(ginv).coeffs)
        G0 = G.left_scale(ginv).coeffs
    n = len(G0) - 1
    Q = [alg.zero] * max(len(S) - n, 0)

    def deg():
        while S and S[-1].is_zero():
            S.pop()
        return len(S) - 1

    m = deg()
    while m >= n:
        r = S[m]
        Q[m - n] = Q[m - n] + r
        for j, b in enumerate(G0):
            S[m - n + j] = S[m - n + j] - (r * b if left else b * r)
        if not S[m].is_zero():
            # G0 is monic, so the top term cancels exactly
            raise AssertionError("Euclidean step failed to cancel the leading term")
        m = deg()
    Sp = AlgebraPolynomial._trusted(S, alg)
    rem = Sp.right_scale(g) if left else Sp.left_scale(g)
    return DivisionResult(AlgebraPolynomial._trusted(Q, alg), rem, side, F, G)


def _divide_raw(F: AlgebraPolynomial, G: AlgebraPolynomial, ginv, left: bool, kernel):
    """:func:`divide` on bare coefficient tuples; ``ginv`` is the inverse of G's leading coefficient."""
    alg = F.algebra
    dim = alg.dim
    gi = ginv.c
    g = G.leading.c
    one = g[0] == 1 and not any(g[1:])
    if left:
        S = [list(c.c) if one else list(kernel(c.c, gi)) for c in F.coeffs]
        G0 = [b.c if one else kernel(b.c, gi) for b in G.coeffs]
    else:
        S = [list(c.c) if one else list(kernel(gi, c.c)) for c in F.coeffs]
        G0 = [b.c if one else kernel(gi, b.c) for b in G.coeffs]
    n = len(G0) - 1
    Q = [None] * max(len(S) - n, 0)
    m = len(S) - 1
    while m >= n:
        r = tuple(S[m])
        if any(r):
            Q[m - n] = r
            for j in range(n):
                prod = kernel(r, G0[j]) if left else kernel(G0[j], r)
                row = S[m - n + j]
                for k in range(dim):
                    row[k] -= prod[k]
        S.pop()
        m -= 1
    make = alg.element_class._from_tuple
    zero = (ZERO,) * dim
    Qp = AlgebraPolynomial._trusted([make(q if q is not None else zero, alg) for q in Q], alg)
    while S and not any(S[-1]):
        S.pop()
    if one:
        rows = [tuple(r) for r in S]
    elif left:
        rows = [kernel(tuple(r), g) for r in S]
    else:
        rows = [kernel(g, tuple(r)) for r in S]
    return Qp, AlgebraPolynomial._trusted([make(tuple(r), alg) for r in rows], alg)


def lquo(F, G) -> AlgebraPolynomial:
    return divide(_as_poly(F, G), _as_poly(G, F), "left").quotient


def lrem(F, G) -> AlgebraPolynomial:
    return divide(_as_poly(F, G), _as_poly(G, F), "left").remainder


def rquo(F, G) -> AlgebraPolynomial:
    return divide(_as_poly(F, G), _as_poly(G, F), "right").quotient


def rrem(F, G) -> AlgebraPolynomial:
    return divide(_as_poly(F, G), _as_poly(G, F), "right").remainder


def _as_poly(x, other) -> AlgebraPolynomial:
    if isinstance(x, AlgebraPolynomial):
        return x
    alg = other.algebra
    if isinstance(x, RealPolynomial):
        return AlgebraPolynomial.from_real(x, alg)
    return AlgebraPolynomial([x], alg)


# ---------------------------------------------------------------------------
# norm polynomial and real factors


def norm_poly(C: AlgebraPolynomial) -> AlgebraPolynomial:
    """``C * conj(C)``."""
    metric = getattr(C.algebra, "norm_metric", None)
    if metric is None:
        return C * C.conj()
    # quaternion-like case: the coefficient of t^k is sum_{i+j=k} c_i conj(c_j),
    # and pairing (i, j) with (j, i) leaves twice a real bilinear form
    cs = [c.c for c in C.coeffs]
    out = [0] * max(2 * len(cs) - 1, 0)
    for i, x in enumerate(cs):
        out[2 * i] += sum(g * a * a for g, a in zip(metric, x))
        for j in range(i + 1, len(cs)):
            out[i + j] += 2 * sum(g * a * b for g, a, b in zip(metric, x, cs[j]))
    return AlgebraPolynomial.from_real(RealPolynomial(out), C.algebra)


def is_real_norm(C: AlgebraPolynomial) -> Optional[RealPolynomial]:
    """The norm polynomial as a :class:`RealPolynomial` if it is real, else ``None``."""
    N = norm_poly(C)
    if not N.is_real():
        return None
    return N.to_real()


def mrpf(C: AlgebraPolynomial) -> RealPolynomial:
    """Maximal real monic polynomial factor: monic gcd of the component polynomials."""
    if C.is_zero():
        raise ZeroPolynomial("mrpf of the zero polynomial is undefined")
    g = RealPolynomial()
    for p in C.component_polys():
        if p:
            g = p.monic() if g.is_zero() else g.gcd(p)
            if g.degree == 0:
                break
    return g


def moebius(C: AlgebraPolynomial, alpha, beta, gamma, delta) -> AlgebraPolynomial:
    """``(gamma t + delta)^deg(C) * C((alpha t + beta) / (gamma t + delta))``."""
    alpha, beta, gamma, delta = map(rat, (alpha, beta, gamma, delta))
    if alpha * delta - beta * gamma == 0:
        raise DegenerateTransformation("alpha*delta - beta*gamma vanishes")
    d = C.degree
    if d < 0:
        return C
    num = RealPolynomial([beta, alpha])
    den = RealPolynomial([delta, gamma])
    num_pows = [RealPolynomial([1])]
    den_pows = [RealPolynomial([1])]
    for _ in range(d):
        num_pows.append(num_pows[-1] * num)
        den_pows.append(den_pows[-1] * den)
    alg = C.algebra
    acc = [alg.zero] * (d + 1)
    for i, c in enumerate(C.coeffs):
        if c.is_zero():
            continue
        w = num_pows[i] * den_pows[d - i]
        for k, x in enumerate(w.coeffs):
            acc[k] = acc[k] + c * x
    return AlgebraPolynomial(acc, alg)


def shift(C: AlgebraPolynomial, u) -> AlgebraPolynomial:
    """``C(t + u)``."""
    return moebius(C, 1, u, 0, 1)
