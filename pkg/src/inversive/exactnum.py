"""Scalar backends for exact inversive geometry.

Three backends coexist: rationals (int or fractions.Fraction), the real
quartic field Q(t) with t = 2**(1/4), and IEEE floats with a single
module-level tolerance that only predicates consult.
"""

from __future__ import annotations

import math
from enum import Enum
from fractions import Fraction
from functools import total_ordering
from typing import Iterable, Optional, Tuple, Union

EPSILON = 1e-9


def set_epsilon(eps: float) -> None:
    global EPSILON
    if eps <= 0:
        raise ValueError("epsilon must be positive")
    EPSILON = float(eps)


def get_epsilon() -> float:
    return EPSILON


class BackendMismatch(TypeError):
    """Raised when float data meets exact data in one computation."""


RatLike = Union[int, Fraction]

# Q(s), s = sqrt(2), as coefficient pairs (p, q) ~ p + q*s. Used internally
# for quartic inversion, which factors through the subfield.


def _mul2(x: Tuple[Fraction, Fraction], y: Tuple[Fraction, Fraction]):
    return (x[0] * y[0] + 2 * x[1] * y[1], x[0] * y[1] + x[1] * y[0])


@total_ordering
class Quartic2:
    """Element c0 + c1*t + c2*t**2 + c3*t**3 of Q(2**(1/4)), t**4 = 2."""

    __slots__ = ("coeffs",)

    def __init__(self, c0: RatLike = 0, c1: RatLike = 0, c2: RatLike = 0, c3: RatLike = 0):
        self.coeffs: Tuple[Fraction, Fraction, Fraction, Fraction] = (
            Fraction(c0), Fraction(c1), Fraction(c2), Fraction(c3))

    @classmethod
    def from_rational(cls, q: RatLike) -> "Quartic2":
        return cls(q, 0, 0, 0)

    @classmethod
    def _coerce(cls, other) -> Optional["Quartic2"]:
        if isinstance(other, Quartic2):
            return other
        if isinstance(other, (int, Fraction)):
            return cls(other, 0, 0, 0)
        return None

    @property
    def is_rational(self) -> bool:
        c = self.coeffs
        return c[1] == 0 and c[2] == 0 and c[3] == 0

    def to_fraction(self) -> Fraction:
        if not self.is_rational:
            raise ValueError("not a rational element: %r" % (self,))
        return self.coeffs[0]

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        return Quartic2(a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3])

    __radd__ = __add__

    def __neg__(self):
        a = self.coeffs
        return Quartic2(-a[0], -a[1], -a[2], -a[3])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        # convolution folded once through t**4 = 2
        return Quartic2(
            a[0] * b[0] + 2 * (a[1] * b[3] + a[2] * b[2] + a[3] * b[1]),
            a[0] * b[1] + a[1] * b[0] + 2 * (a[2] * b[3] + a[3] * b[2]),
            a[0] * b[2] + a[1] * b[1] + a[2] * b[0] + 2 * (a[3] * b[3]),
            a[0] * b[3] + a[1] * b[2] + a[2] * b[1] + a[3] * b[0],
        )

    __rmul__ = __mul__

    def inverse(self) -> "Quartic2":
        if not self:
            raise ZeroDivisionError("quartic division by zero")
        a = self.coeffs
        # self = A + t*B with A, B in Q(s), s = t**2
        A = (a[0], a[2])
        B = (a[1], a[3])
        # (A + tB)(A - tB) = A*A - s*B*B =: C in Q(s)
        A2 = _mul2(A, A)
        B2 = _mul2(B, B)
        C = (A2[0] - 2 * B2[1], A2[1] - B2[0])
        norm = C[0] * C[0] - 2 * C[1] * C[1]
        # conjugate over Q(s), then over Q: 1/self = (A - tB)*(C0 - C1 s)/norm
        Cc = (C[0], -C[1])
        top_even = _mul2(A, Cc)
        top_odd = _mul2((-B[0], -B[1]), Cc)
        return Quartic2(top_even[0] / norm, top_odd[0] / norm,
                        top_even[1] / norm, top_odd[1] / norm)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = Quartic2(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __bool__(self) -> bool:
        return any(c != 0 for c in self.coeffs)

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __lt__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return quartic_sign(self - o) < 0

    def __hash__(self):
        if self.is_rational:
            return hash(self.coeffs[0])
        return hash(self.coeffs)

    def __abs__(self):
        return -self if quartic_sign(self) < 0 else self

    def __float__(self) -> float:
        t = 2.0 ** 0.25
        c = self.coeffs
        return float(c[0]) + float(c[1]) * t + float(c[2]) * t * t + float(c[3]) * t ** 3

    def __repr__(self) -> str:
        c = self.coeffs
        return "Quartic2(%s, %s, %s, %s)" % (c[0], c[1], c[2], c[3])


THETA = Quartic2(0, 1, 0, 0)
SQRT2 = Quartic2(0, 0, 1, 0)

# Certified rational bracket for t = 2**(1/4), refined on demand. 1 < t < 3/2.
_theta_lo = Fraction(1)
_theta_hi = Fraction(3, 2)


def _refine_theta(steps: int = 8) -> None:
    global _theta_lo, _theta_hi
    lo, hi = _theta_lo, _theta_hi
    for _ in range(steps):
        mid = (lo + hi) / 2
        if mid ** 4 < 2:  # mid**4 == 2 is impossible for rational mid
            lo = mid
        else:
            hi = mid
    _theta_lo, _theta_hi = lo, hi


def _scaled_interval(c: Fraction, lo: Fraction, hi: Fraction):
    return (c * lo, c * hi) if c >= 0 else (c * hi, c * lo)


def quartic_sign(x: Quartic2) -> int:
    """Exact sign of a quartic field element.

    Zero is decided from the coefficient vector; otherwise the bracket for
    2**(1/4) is refined until interval evaluation of the cubic in t excludes
    zero, which terminates because t has degree 4 over Q.
    """
    c = x.coeffs
    if all(ci == 0 for ci in c):
        return 0
    while True:
        lo, hi = _theta_lo, _theta_hi
        lo2, hi2 = lo * lo, hi * hi
        lo3, hi3 = lo2 * lo, hi2 * hi
        plo, phi = c[0], c[0]
        for ci, pl, ph in ((c[1], lo, hi), (c[2], lo2, hi2), (c[3], lo3, hi3)):
            sl, sh = _scaled_interval(ci, pl, ph)
            plo += sl
            phi += sh
        if plo > 0:
            return 1
        if phi < 0:
            return -1
        _refine_theta()


class NormClass(Enum):
    """Multiplicative classes of nonzero field elements modulo Q*."""

    Q_STAR = "1"
    ROOT2_Q_STAR = "sqrt2"
    QUARTIC_Q_STAR = "2^(1/4)"
    INV_QUARTIC_Q_STAR = "2^(-1/4)"


# t**3 = 2/t, so the t**3 monomials are exactly the 2**(-1/4) class.
_MONOMIAL_CLASS = {
    0: NormClass.Q_STAR,
    1: NormClass.QUARTIC_Q_STAR,
    2: NormClass.ROOT2_Q_STAR,
    3: NormClass.INV_QUARTIC_Q_STAR,
}


def norm_class_of(x) -> Optional[NormClass]:
    """Class of a nonzero exact scalar among Q*, sqrt2*Q*, 2**(1/4)*Q*,
    2**(-1/4)*Q*, or None for elements in none of them."""
    if isinstance(x, float):
        raise BackendMismatch("norm classes are defined for exact scalars only")
    if isinstance(x, (int, Fraction)):
        if x == 0:
            raise ValueError("zero has no norm class")
        return NormClass.Q_STAR
    if not isinstance(x, Quartic2):
        raise TypeError("not a scalar: %r" % (x,))
    nz = [i for i, c in enumerate(x.coeffs) if c != 0]
    if not nz:
        raise ValueError("zero has no norm class")
    if len(nz) == 1:
        return _MONOMIAL_CLASS[nz[0]]
    return None


def kind(x) -> str:
    if isinstance(x, bool):
        raise TypeError("bool is not a scalar")
    if isinstance(x, (int, Fraction)):
        return "rational"
    if isinstance(x, Quartic2):
        return "quartic"
    if isinstance(x, float):
        return "float"
    raise TypeError("not a scalar: %r" % (x,))


def common_kind(xs: Iterable) -> str:
    seen = {kind(x) for x in xs}
    if not seen:
        return "rational"
    if "float" in seen:
        if seen != {"float"}:
            raise BackendMismatch("cannot mix float with exact scalars")
        return "float"
    return "quartic" if "quartic" in seen else "rational"


def promote(x, target_kind: str):
    k = kind(x)
    if k == target_kind:
        return Fraction(x) if target_kind == "rational" and isinstance(x, int) else x
    if k == "rational" and target_kind == "quartic":
        return Quartic2.from_rational(x)
    if target_kind == "float" and k == "rational":
        return float(x)
    raise BackendMismatch("cannot promote %s scalar to %s" % (k, target_kind))


def sign_of(x) -> int:
    """Sign of a scalar; the float backend treats |x| <= EPSILON as zero."""
    if isinstance(x, Quartic2):
        return quartic_sign(x)
    if isinstance(x, float):
        if abs(x) <= EPSILON:
            return 0
        return 1 if x > 0 else -1
    if x == 0:
        return 0
    return 1 if x > 0 else -1


def is_zero(x) -> bool:
    return sign_of(x) == 0


def _rational_sqrt(q: Fraction) -> Optional[Fraction]:
    if q < 0:
        return None
    num, den = q.numerator, q.denominator
    rn, rd = math.isqrt(num), math.isqrt(den)
    if rn * rn == num and rd * rd == den:
        return Fraction(rn, rd)
    return None


def sqrt_in_field(x):
    """Exact square root within the scalar's own field, or None.

    Rationals: perfect squares, and 2*m**2 maps into the quartic field as
    m*t**2. Quartic monomials q*t**2 with square or twice-square q have roots
    m*t and m*t**3. Anything else returns None.
    """
    if isinstance(x, float):
        return math.sqrt(x) if x >= 0 else None
    if isinstance(x, (int, Fraction)):
        return _rational_sqrt(Fraction(x))
    if not isinstance(x, Quartic2):
        raise TypeError("not a scalar: %r" % (x,))
    c = x.coeffs
    if x.is_rational:
        r = _rational_sqrt(c[0])
        if r is not None:
            return Quartic2.from_rational(r)
        half = _rational_sqrt(c[0] / 2)
        if half is not None:
            return Quartic2(0, 0, half, 0)
        return None
    if c[0] == 0 and c[1] == 0 and c[3] == 0:
        r = _rational_sqrt(c[2])
        if r is not None:
            return Quartic2(0, r, 0, 0)
        half = _rational_sqrt(c[2] / 2)
        if half is not None:
            return Quartic2(0, 0, 0, half)
        return None
    return None
