"""Exact elements of Clifford algebras and of the quaternion-like algebras.

Three named algebras get hand-written fixed-layout products:

* ``H``  -- quaternions, the even subalgebra of Cl(0,3,0) with
  ``i = e12``, ``j = e13``, ``k = e23``;
* ``S``  -- split quaternions, the even subalgebra of Cl(1,2,0) with
  ``is = e12``, ``js = e13``, ``ks = e23``;
* ``DH`` -- dual quaternions ``p + eps*d``, isomorphic to the even subalgebra
  of Cl(3,0,1).

:class:`MultiVector` is the generic sparse engine for any Cl(p,q,r). The named
products are cross-checked against it through :func:`to_even_clifford` /
:func:`from_even_clifford`.

The involution ``conj`` is Clifford conjugation (reverse the blade, negate odd
grades). On H and S it negates the vector part; on DH it conjugates primal and
dual part and fixes ``eps``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .errors import AlgebraMismatch, NotInvertible, OddBladePresent, SignatureMismatch
from .linalg import solve_affine
from .rational import ONE, ZERO, Rational, fmt, is_scalar_like, rat

MAX_GENERATORS = 8


# --------------------------------------------------------------------------
# scalar helpers


@dataclass(frozen=True)
class DualNumber:
    """``re + eps*eps_part`` with ``eps**2 == 0``."""

    re: Rational
    eps: Rational = ZERO

    def __post_init__(self):
        object.__setattr__(self, "re", rat(self.re))
        object.__setattr__(self, "eps", rat(self.eps))

    def __add__(self, other):
        o = _as_dual(other)
        return DualNumber(self.re + o.re, self.eps + o.eps)

    __radd__ = __add__

    def __neg__(self):
        return DualNumber(-self.re, -self.eps)

    def __sub__(self, other):
        return self + (-_as_dual(other))

    def __rsub__(self, other):
        return _as_dual(other) - self

    def __mul__(self, other):
        o = _as_dual(other)
        return DualNumber(self.re * o.re, self.re * o.eps + self.eps * o.re)

    __rmul__ = __mul__

    def is_invertible(self) -> bool:
        return self.re != 0

    def inverse(self) -> "DualNumber":
        if self.re == 0:
            raise NotInvertible(f"dual number {self} has zero real part")
        return DualNumber(1 / self.re, -self.eps / (self.re * self.re))

    def __bool__(self):
        return bool(self.re) or bool(self.eps)

    def __eq__(self, other):
        if is_scalar_like(other):
            return self.eps == 0 and self.re == rat(other)
        if isinstance(other, DualNumber):
            return self.re == other.re and self.eps == other.eps
        return NotImplemented

    def __hash__(self):
        return hash(self.re) if self.eps == 0 else hash((self.re, self.eps))

    def __str__(self):
        if self.eps == 0:
            return fmt(self.re)
        return f"{fmt(self.re)} + eps*({fmt(self.eps)})"


def _as_dual(x) -> DualNumber:
    if isinstance(x, DualNumber):
        return x
    return DualNumber(rat(x), ZERO)


# --------------------------------------------------------------------------
# algebra descriptors


class Algebra:
    """Descriptor shared by all elements of one algebra."""

    name: str
    dim: int
    labels: tuple  # unit symbol per component, "" for the scalar slot
    element_class: type

    def element(self, components: Iterable) -> "AlgebraElement":
        return self.element_class._from_tuple(tuple(rat(x) for x in components), self)

    @property
    def zero(self):
        return self.element([ZERO] * self.dim)

    @property
    def one(self):
        return self.scalar(ONE)

    def scalar(self, x):
        c = [ZERO] * self.dim
        c[0] = rat(x)
        return self.element(c)

    def basis(self) -> list:
        out = []
        for idx in range(self.dim):
            c = [ZERO] * self.dim
            c[idx] = ONE
            out.append(self.element(c))
        return out

    def symbols(self) -> dict:
        """Unit name -> element, as accepted by the text parser."""
        return {lab: b for lab, b in zip(self.labels, self.basis()) if lab}

    def coerce(self, x) -> "AlgebraElement":
        if isinstance(x, AlgebraElement):
            if x.algebra is self:
                return x
            if x.algebra != self:
                raise AlgebraMismatch(f"element of {x.algebra} used in {self}")
            return x
        if isinstance(x, DualNumber):
            if self.name != "DH":
                raise AlgebraMismatch("dual numbers live in DH")
            return self.element([x.re, 0, 0, 0, x.eps, 0, 0, 0])
        return self.scalar(x)

    def __repr__(self):
        return self.name

    def __str__(self):
        return self.name

    def __reduce__(self):
        return (algebra_from_name, (self.name,))


class AlgebraElement:
    """Common arithmetic for the fixed-layout elements and multivectors."""

    __slots__ = ("c",)
    algebra: Algebra

    @classmethod
    def _from_tuple(cls, c: tuple, algebra: Algebra):
        obj = object.__new__(cls)
        obj.c = c
        return obj

    def _new(self, c):
        return type(self)._from_tuple(tuple(c), self.algebra)

    def components(self) -> tuple:
        return self.c

    @property
    def scalar_part(self) -> Rational:
        return self.c[0]

    def is_zero(self) -> bool:
        return not any(self.c)

    def __bool__(self):
        return not self.is_zero()

    def is_scalar(self) -> bool:
        return not any(self.c[1:])

    def _coerce(self, other):
        if isinstance(other, AlgebraElement):
            if other.algebra != self.algebra:
                raise AlgebraMismatch(f"cannot combine {self.algebra} and {other.algebra}")
            return other
        if is_scalar_like(other) or isinstance(other, DualNumber):
            return self.algebra.coerce(other)
        return None

    def __add__(self, other):
        if other.__class__ is self.__class__ and other.algebra is self.algebra:
            return self._new([a + b for a, b in zip(self.c, other.c)])
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._new(a + b for a, b in zip(self.c, o.c))

    __radd__ = __add__

    def __neg__(self):
        return self._new(-a for a in self.c)

    def __sub__(self, other):
        if other.__class__ is self.__class__ and other.algebra is self.algebra:
            return self._new([a - b for a, b in zip(self.c, other.c)])
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._new(a - b for a, b in zip(self.c, o.c))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        if other.__class__ is self.__class__ and other.algebra is self.algebra:
            return self._mul(other)
        if is_scalar_like(other):
            s = rat(other)
            return self._new(a * s for a in self.c)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._mul(o)

    def __rmul__(self, other):
        if is_scalar_like(other):
            s = rat(other)
            return self._new(s * a for a in self.c)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o._mul(self)

    def __truediv__(self, other):
        if is_scalar_like(other):
            s = rat(other)
            if s == 0:
                raise NotInvertible("division by zero")
            return self._new(a / s for a in self.c)
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = self.algebra.one
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, AlgebraElement):
            return self.algebra == other.algebra and self.c == other.c
        if is_scalar_like(other):
            return self.is_scalar() and self.c[0] == rat(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.algebra.name, self.c))

    def __repr__(self):
        return f"{type(self).__name__}({self})"

    def __str__(self):
        return render_element(self)

    def __reduce__(self):
        return (_rebuild, (self.algebra.name, self.c))

    # subclass hooks
    def _mul(self, other):
        raise NotImplementedError

    def conj(self):
        raise NotImplementedError

    def norm(self):
        raise NotImplementedError

    def inverse(self):
        raise NotImplementedError

    def vector(self) -> tuple:
        """Coefficients of the last three (imaginary) quaternion slots."""
        return self.c[1:4]


def _rebuild(name, c):
    return algebra_from_name(name).element(c)


# --------------------------------------------------------------------------
# quaternions and split quaternions


def _qmul(a, b):
    a0, a1, a2, a3 = a
    b0, b1, b2, b3 = b
    return (
        a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
        a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
        a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
        a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
    )


def _smul(a, b):
    # is^2 = js^2 = 1, ks^2 = -1, is js = -ks, js ks = is, ks is = js
    a0, a1, a2, a3 = a
    b0, b1, b2, b3 = b
    return (
        a0 * b0 + a1 * b1 + a2 * b2 - a3 * b3,
        a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
        a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
        a0 * b3 - a1 * b2 + a2 * b1 + a3 * b0,
    )


class Quaternion(AlgebraElement):
    __slots__ = ()

    def __new__(cls, w=0, x=0, y=0, z=0):
        return cls._from_tuple((rat(w), rat(x), rat(y), rat(z)), H)

    w = property(lambda self: self.c[0])
    x = property(lambda self: self.c[1])
    y = property(lambda self: self.c[2])
    z = property(lambda self: self.c[3])

    def _mul(self, other):
        return self._new(_qmul(self.c, other.c))

    def conj(self):
        w, x, y, z = self.c
        return self._new((w, -x, -y, -z))

    def norm(self) -> Rational:
        return sum((a * a for a in self.c), ZERO)

    def inverse(self):
        n = self.norm()
        if n == 0:
            raise NotInvertible("the zero quaternion is not invertible")
        return self.conj() / n


class SplitQuaternion(AlgebraElement):
    __slots__ = ()

    def __new__(cls, w=0, x=0, y=0, z=0):
        return cls._from_tuple((rat(w), rat(x), rat(y), rat(z)), S)

    w = property(lambda self: self.c[0])
    x = property(lambda self: self.c[1])
    y = property(lambda self: self.c[2])
    z = property(lambda self: self.c[3])

    def _mul(self, other):
        return self._new(_smul(self.c, other.c))

    def conj(self):
        w, x, y, z = self.c
        return self._new((w, -x, -y, -z))

    def norm(self) -> Rational:
        w, x, y, z = self.c
        return w * w - x * x - y * y + z * z

    def inverse(self):
        n = self.norm()
        if n == 0:
            raise NotInvertible(f"split quaternion {self} has null norm")
        return self.conj() / n


class DualQuaternion(AlgebraElement):
    """``primal + eps*dual`` stored as eight slots."""

    __slots__ = ()

    def __new__(cls, primal=None, dual=None):
        p = _quat_tuple(primal)
        d = _quat_tuple(dual)
        return cls._from_tuple(p + d, DH)

    @property
    def primal(self) -> Quaternion:
        return Quaternion._from_tuple(self.c[:4], H)

    @property
    def dual(self) -> Quaternion:
        return Quaternion._from_tuple(self.c[4:], H)

    def _mul(self, other):
        return self._new(_dqmul(self.c, other.c))

    def conj(self):
        c = self.c
        return self._new((c[0], -c[1], -c[2], -c[3], c[4], -c[5], -c[6], -c[7]))

    def norm(self) -> DualNumber:
        p, d = self.c[:4], self.c[4:]
        return DualNumber(
            sum((a * a for a in p), ZERO), 2 * sum((a * b for a, b in zip(p, d)), ZERO)
        )

    def scale(self, s: DualNumber) -> "DualQuaternion":
        s = _as_dual(s)
        p, d = self.c[:4], self.c[4:]
        return self._new(tuple(s.re * a for a in p) + tuple(s.re * b + s.eps * a for a, b in zip(p, d)))

    def inverse(self):
        n = self.norm()
        if not n.is_invertible():
            raise NotInvertible(f"dual quaternion {self} has norm {n} with zero real part")
        return self.conj().scale(n.inverse())

    def is_dual_scalar(self) -> bool:
        c = self.c
        return not (c[1] or c[2] or c[3] or c[5] or c[6] or c[7])


def _quat_tuple(q) -> tuple:
    if q is None:
        return (ZERO,) * 4
    if isinstance(q, AlgebraElement):
        if len(q.c) != 4:
            raise AlgebraMismatch("expected a quaternion")
        return q.c
    if is_scalar_like(q):
        return (rat(q), ZERO, ZERO, ZERO)
    q = tuple(q)
    if len(q) != 4:
        raise ValueError("quaternions have four components")
    return tuple(rat(x) for x in q)


def _dqmul(a, b):
    p1, d1 = a[:4], a[4:]
    p2, d2 = b[:4], b[4:]
    x = _qmul(p1, d2)
    y = _qmul(d1, p2)
    return _qmul(p1, p2) + (x[0] + y[0], x[1] + y[1], x[2] + y[2], x[3] + y[3])


class _NamedAlgebra(Algebra):
    def __init__(self, name, labels, element_class, raw_mul):
        self.name = name
        self.labels = tuple(labels)
        self.dim = len(labels)
        self.element_class = element_class
        # product on bare coefficient tuples, used by polynomial kernels
        self.raw_mul = raw_mul
        # For the 4-dimensional algebras x conj(y) + y conj(x) = 2 sum g_a x_a y_a
        # with a diagonal metric g = scalar part of e_a conj(e_a).
        self.norm_metric = None
        if self.dim == 4:
            basis = [tuple(1 if a == b else 0 for b in range(4)) for a in range(4)]
            conj = [tuple(x if b == 0 else -x for b, x in enumerate(e)) for e in basis]
            self.norm_metric = tuple(raw_mul(e, ce)[0] for e, ce in zip(basis, conj))

    def symbols(self):
        out = super().symbols()
        if self.name == "DH":
            out = {k: v for k, v in out.items() if "*" not in k}
        return out


H = _NamedAlgebra("H", ("", "i", "j", "k"), Quaternion, _qmul)
S = _NamedAlgebra("S", ("", "is", "js", "ks"), SplitQuaternion, _smul)
DH = _NamedAlgebra("DH", ("", "i", "j", "k", "eps", "eps*i", "eps*j", "eps*k"), DualQuaternion, _dqmul)

EPS = DH.element([0, 0, 0, 0, 1, 0, 0, 0])


# --------------------------------------------------------------------------
# generic Clifford algebras


@dataclass(frozen=True)
class Signature:
    p: int
    q: int
    r: int = 0

    def __post_init__(self):
        if min(self.p, self.q, self.r) < 0:
            raise ValueError("signature counts must be non-negative")
        if self.n > MAX_GENERATORS:
            raise ValueError(f"at most {MAX_GENERATORS} generators are supported")

    @property
    def n(self) -> int:
        return self.p + self.q + self.r

    @property
    def squares(self) -> tuple:
        return (1,) * self.p + (-1,) * self.q + (0,) * self.r


def blade_indices(mask: int) -> tuple:
    """Bit mask -> strictly increasing generator indices (1-based)."""
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def blade_mask(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << (i - 1)
    return m


def blade_product(a: int, b: int, squares: Sequence[int]) -> tuple[int, int]:
    """``e_a * e_b = sign * e_(a xor b)``.

    Reordering into increasing index order costs one sign per adjacent
    transposition; equal generators then contract to their square.
    """
    swaps = 0
    x = a >> 1
    while x:
        swaps += bin(x & b).count("1")
        x >>= 1
    sign = -1 if swaps & 1 else 1
    common = a & b
    i = 0
    while common:
        if common & 1:
            sign *= squares[i]
            if sign == 0:
                return 0, a ^ b
        common >>= 1
        i += 1
    return sign, a ^ b


class Clifford(Algebra):
    """Cl(p,q,r); use :func:`clifford` to get the cached instance."""

    element_class = None  # set below

    def __init__(self, sig: Signature):
        self.signature = sig
        self.name = f"Cl({sig.p},{sig.q},{sig.r})"
        n = sig.n
        self.dim = 1 << n
        self.masks = tuple(sorted(range(self.dim), key=lambda m: (bin(m).count("1"), blade_indices(m))))
        self.position = {m: i for i, m in enumerate(self.masks)}
        self.labels = tuple("" if m == 0 else "e" + "".join(map(str, blade_indices(m))) for m in self.masks)
        self._table = {}

    def product(self, a: int, b: int):
        key = (a, b)
        try:
            return self._table[key]
        except KeyError:
            val = self._table[key] = blade_product(a, b, self.signature.squares)
            return val

    def element(self, components):
        comps = list(components)
        if len(comps) != self.dim:
            raise ValueError(f"{self} has dimension {self.dim}")
        return MultiVector(self, {m: c for m, c in zip(self.masks, comps)})

    def blade(self, indices: Sequence[int], coeff=1) -> "MultiVector":
        idx = list(indices)
        if any(not 1 <= i <= self.signature.n for i in idx):
            raise ValueError(f"generator index out of range for {self}")
        # build through products so unsorted index lists pick up their sign
        out = MultiVector(self, {0: rat(coeff)})
        for i in idx:
            out = out * MultiVector(self, {1 << (i - 1): ONE})
        return out

    def symbols(self):
        return {lab: self.blade(blade_indices(m)) for m, lab in zip(self.masks, self.labels) if lab}

    def __eq__(self, other):
        return isinstance(other, Clifford) and other.signature == self.signature

    def __hash__(self):
        return hash(self.signature)


@lru_cache(maxsize=None)
def clifford(p: int, q: int, r: int = 0) -> Clifford:
    return Clifford(Signature(p, q, r))


class MultiVector(AlgebraElement):
    """Sparse element of Cl(p,q,r): blade mask -> coefficient."""

    __slots__ = ("algebra", "blades")

    def __init__(self, algebra: Clifford, blades: Mapping[int, object]):
        self.algebra = algebra
        self.blades = {m: rat(v) for m, v in blades.items() if v != 0}

    @classmethod
    def _from_tuple(cls, c, algebra):
        return cls(algebra, dict(zip(algebra.masks, c)))

    @property
    def signature(self) -> Signature:
        return self.algebra.signature

    @property
    def c(self):
        pos = self.algebra.position
        out = [ZERO] * self.algebra.dim
        for m, v in self.blades.items():
            out[pos[m]] = v
        return tuple(out)

    def _new(self, c):
        return MultiVector._from_tuple(tuple(c), self.algebra)

    def coefficient(self, indices: Sequence[int]) -> Rational:
        return self.blades.get(blade_mask(indices), ZERO)

    def is_zero(self):
        return not self.blades

    def is_scalar(self):
        return all(m == 0 for m in self.blades)

    @property
    def scalar_part(self):
        return self.blades.get(0, ZERO)

    def _coerce(self, other):
        if isinstance(other, MultiVector):
            if other.algebra != self.algebra:
                raise SignatureMismatch(f"cannot combine {self.algebra} and {other.algebra}")
            return other
        if isinstance(other, AlgebraElement):
            raise AlgebraMismatch(f"cannot combine {self.algebra} and {other.algebra}")
        if is_scalar_like(other):
            return MultiVector(self.algebra, {0: rat(other)})
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self.blades)
        for m, v in o.blades.items():
            out[m] = out.get(m, ZERO) + v
        return MultiVector(self.algebra, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiVector(self.algebra, {m: -v for m, v in self.blades.items()})

    def __sub__(self, other):
        if other.__class__ is self.__class__ and other.algebra is self.algebra:
            return self._new([a - b for a, b in zip(self.c, other.c)])
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __mul__(self, other):
        if other.__class__ is self.__class__ and other.algebra is self.algebra:
            return self._mul(other)
        if is_scalar_like(other):
            s = rat(other)
            return MultiVector(self.algebra, {m: v * s for m, v in self.blades.items()})
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._mul(o)

    def __rmul__(self, other):
        if is_scalar_like(other):
            return self * other
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o._mul(self)

    def __truediv__(self, other):
        if is_scalar_like(other):
            s = rat(other)
            if s == 0:
                raise NotInvertible("division by zero")
            return MultiVector(self.algebra, {m: v / s for m, v in self.blades.items()})
        return NotImplemented

    def _mul(self, other):
        prod = self.algebra.product
        out: dict = {}
        for ma, va in self.blades.items():
            for mb, vb in other.blades.items():
                sign, m = prod(ma, mb)
                if sign:
                    out[m] = out.get(m, ZERO) + (va * vb if sign > 0 else -(va * vb))
        return MultiVector(self.algebra, out)

    def __eq__(self, other):
        if isinstance(other, MultiVector):
            return self.algebra == other.algebra and self.blades == other.blades
        if is_scalar_like(other):
            return self.is_scalar() and self.scalar_part == rat(other)
        if isinstance(other, AlgebraElement):
            return False
        return NotImplemented

    def __hash__(self):
        return hash((self.algebra.name, tuple(sorted(self.blades.items()))))

    def __reduce__(self):
        return (_rebuild_mv, (self.signature, self.blades))

    def grade(self, k: int) -> "MultiVector":
        return MultiVector(self.algebra, {m: v for m, v in self.blades.items() if bin(m).count("1") == k})

    def is_even(self) -> bool:
        return all(bin(m).count("1") % 2 == 0 for m in self.blades)

    def conj(self):
        out = {}
        for m, v in self.blades.items():
            k = bin(m).count("1")
            # (-1)^k for the grade, (-1)^(k(k-1)/2) for the reversal
            sign = -1 if (k + k * (k - 1) // 2) % 2 else 1
            out[m] = v if sign > 0 else -v
        return MultiVector(self.algebra, out)

    def norm(self) -> "MultiVector":
        return self * self.conj()

    def inverse(self):
        nu = self.norm()
        if nu.is_scalar():
            if nu.scalar_part == 0:
                raise NotInvertible(f"{self} has vanishing norm")
            return self.conj() / nu.scalar_part
        # norm not scalar: solve the left multiplication system x with self*x = 1
        alg = self.algebra
        basis = alg.basis()
        cols = [(self * b).c for b in basis]
        matrix = [[cols[j][i] for j in range(alg.dim)] for i in range(alg.dim)]
        rhs = [ONE] + [ZERO] * (alg.dim - 1)
        sol, null = solve_affine(matrix, rhs)
        if sol is None or null:
            raise NotInvertible(f"{self} is not invertible in {alg}")
        return alg.element(sol)


def _rebuild_mv(sig, blades):
    return MultiVector(clifford(sig.p, sig.q, sig.r), blades)


Clifford.element_class = MultiVector


def algebra_from_name(name: str) -> Algebra:
    """``"H"``, ``"S"``, ``"DH"`` or ``"Cl(p,q,r)"`` / ``"cl(p,q,r)"``."""
    key = name.strip()
    named = {"H": H, "S": S, "DH": DH}
    if key.upper() in named:
        return named[key.upper()]
    low = key.lower().replace(" ", "")
    if low.startswith("cl(") and low.endswith(")"):
        parts = low[3:-1].split(",")
        if len(parts) in (2, 3):
            nums = [int(x) for x in parts]
            return clifford(*nums)
    raise ValueError(f"unknown algebra {name!r}")


# --------------------------------------------------------------------------
# embeddings into even Clifford subalgebras

_E12, _E13, _E23 = blade_mask((1, 2)), blade_mask((1, 3)), blade_mask((2, 3))
_E14, _E24, _E34 = blade_mask((1, 4)), blade_mask((2, 4)), blade_mask((3, 4))
_E1234 = blade_mask((1, 2, 3, 4))

# component index of (H|S|DH) -> (blade mask, sign)
_QUAT_LAYOUT = ((0, 1), (_E12, 1), (_E13, 1), (_E23, 1))
# DH -> Cl+(3,0,1). The primal part uses i = e23, j = e13, k = e12, which is
# an algebra isomorphism (ij = k); the dual unit is eps = -e1234 and the dual
# slots follow as eps*u.
_DH_LAYOUT = (
    (0, 1), (_E23, 1), (_E13, 1), (_E12, 1),
    (_E1234, -1), (_E14, 1), (_E24, -1), (_E34, 1),
)
_EMBEDDINGS = {
    "H": (Signature(0, 3, 0), _QUAT_LAYOUT),
    "S": (Signature(1, 2, 0), _QUAT_LAYOUT),
    "DH": (Signature(3, 0, 1), _DH_LAYOUT),
}
_BY_SIGNATURE = {sig: name for name, (sig, _) in _EMBEDDINGS.items()}


def to_even_clifford(x: AlgebraElement) -> MultiVector:
    """Image of an H, S or DH element in Cl+(0,3,0), Cl+(1,2,0), Cl+(3,0,1)."""
    name = x.algebra.name
    if name not in _EMBEDDINGS:
        raise AlgebraMismatch(f"no even Clifford embedding for {name}")
    sig, layout = _EMBEDDINGS[name]
    alg = clifford(sig.p, sig.q, sig.r)
    return MultiVector(alg, {m: s * v for (m, s), v in zip(layout, x.c) if v})


def from_even_clifford(x: MultiVector) -> AlgebraElement:
    """Inverse of :func:`to_even_clifford`, chosen by the signature of ``x``."""
    name = _BY_SIGNATURE.get(x.signature)
    if name is None:
        raise SignatureMismatch(f"{x.algebra} is not Cl(0,3,0), Cl(1,2,0) or Cl(3,0,1)")
    if not x.is_even():
        raise OddBladePresent(f"{x} has odd-grade blades")
    _, layout = _EMBEDDINGS[name]
    inv = {m: (i, s) for i, (m, s) in enumerate(layout)}
    c = [ZERO] * len(layout)
    for m, v in x.blades.items():
        if m not in inv:
            raise SignatureMismatch(f"blade e{''.join(map(str, blade_indices(m)))} outside the embedded subalgebra")
        i, s = inv[m]
        c[i] = s * v
    return algebra_from_name(name).element(c)


# --------------------------------------------------------------------------
# text rendering


def _render_terms(pairs) -> str:
    """``pairs`` = [(coefficient, unit label)] -> ``1 + 2i - 3/4k``."""
    parts = []
    for coeff, label in pairs:
        if coeff == 0:
            continue
        neg = coeff < 0
        a = -coeff if neg else coeff
        if label:
            body = label if a == 1 else f"{fmt(a)}{label}"
        else:
            body = fmt(a)
        if not parts:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append((" - " if neg else " + ") + body)
    return "".join(parts) if parts else "0"


def render_element(x: AlgebraElement) -> str:
    alg = x.algebra
    if alg.name == "DH":
        lab = ("", "i", "j", "k")
        primal = list(zip(x.c[:4], lab))
        dual = list(zip(x.c[4:], lab))
        ptxt = _render_terms(primal)
        if not any(x.c[4:]):
            return ptxt
        dtxt = f"eps*({_render_terms(dual)})"
        if not any(x.c[:4]):
            return dtxt
        return f"{ptxt} + {dtxt}"
    return _render_terms(zip(x.c, alg.labels))


Quaternion.algebra = H
SplitQuaternion.algebra = S
DualQuaternion.algebra = DH
