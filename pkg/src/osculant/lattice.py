"""Rank-10 numerical divisor lattice of the blown-up ruled surface, and
the half-pairing calculus of its rational quotient.

The ambient surface is an eight-point blow-up of a ruled surface over an
elliptic curve.  Its numerical Picard group is free of rank 10 with basis

    C  : pullback of the zero section,
    F  : a ruling fiber,
    s0..s3, r0..r3 : the eight exceptional classes,

and intersection form

    C.C = 0,  C.F = 1,  F.F = 0,
    s_i.s_j = r_i.r_j = -delta_ij,
    every other pairing of basis elements = 0.

The canonical class is K = -2C + sum_i (s_i + r_i), of self-intersection
-8.  Adjunction reads g(D) = 1 + (D.D + D.K)/2 and the numerator is even
for every integer class, so arithmetic genus is exact integer arithmetic.

The surface carries an involution whose quotient is rational; numerical
classes downstairs are handled through their pullbacks.  The projection
formula makes the quotient pairing *half* the upstairs pairing of the
pullbacks, so a genuine pair of quotient classes always pairs evenly
upstairs.  QuotientClass performs that division and raises OddPairing
when it does not come out exact, which is the cheap certificate that an
operand was not actually a pullback.  The quotient canonical class
pulls back to -2C.
"""

from dataclasses import dataclass

from .errors import OddPairing
from .vectors import Vec4, vec4


@dataclass(frozen=True)
class DivisorClass:
    """Integer class a*C + b*F - sum x_i s_i - sum y_i r_i ... except that
    the stored s/r coefficients are the plain basis coefficients, signs
    included.  DivisorClass(c=2, s=(1,0,0,0)) is 2C + s0."""

    c: int = 0
    f: int = 0
    s: Vec4 = (0, 0, 0, 0)
    r: Vec4 = (0, 0, 0, 0)

    def __post_init__(self):
        object.__setattr__(self, "c", int(self.c))
        object.__setattr__(self, "f", int(self.f))
        object.__setattr__(self, "s", vec4(self.s))
        object.__setattr__(self, "r", vec4(self.r))

    # -- module structure ------------------------------------------------

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        if not isinstance(other, DivisorClass):
            return NotImplemented
        return DivisorClass(
            self.c + other.c,
            self.f + other.f,
            tuple(a + b for a, b in zip(self.s, other.s)),
            tuple(a + b for a, b in zip(self.r, other.r)),
        )

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        if not isinstance(other, DivisorClass):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "DivisorClass":
        return -1 * self

    def __mul__(self, n: int) -> "DivisorClass":
        if not isinstance(n, int):
            return NotImplemented
        return DivisorClass(
            n * self.c,
            n * self.f,
            tuple(n * x for x in self.s),
            tuple(n * x for x in self.r),
        )

    __rmul__ = __mul__

    # -- intersection theory ----------------------------------------------

    def dot(self, other: "DivisorClass") -> int:
        """Intersection number under the hyperbolic-plus-diagonal form."""
        return (
            self.c * other.f
            + self.f * other.c
            - sum(a * b for a, b in zip(self.s, other.s))
            - sum(a * b for a, b in zip(self.r, other.r))
        )

    def self_intersection(self) -> int:
        return self.dot(self)

    def genus(self) -> int:
        """Arithmetic genus by adjunction, 1 + (D.D + D.K)/2."""
        num = self.dot(self) + self.dot(K)
        assert num % 2 == 0, f"adjunction numerator odd for {self}"
        return 1 + num // 2

    def is_zero(self) -> bool:
        return self == ZERO

    def coefficients(self) -> tuple[int, ...]:
        return (self.c, self.f, *self.s, *self.r)


def _unit(i: int) -> Vec4:
    return tuple(1 if j == i else 0 for j in range(4))  # type: ignore[return-value]


ZERO = DivisorClass()
C = DivisorClass(c=1)
F = DivisorClass(f=1)
S = tuple(DivisorClass(s=_unit(i)) for i in range(4))
R = tuple(DivisorClass(r=_unit(i)) for i in range(4))


def canonical_class() -> DivisorClass:
    """K = -2C + s0+s1+s2+s3 + r0+r1+r2+r3, self-intersection -8."""
    return DivisorClass(c=-2, s=(1, 1, 1, 1), r=(1, 1, 1, 1))


K = canonical_class()
assert K.dot(K) == -8


def intersect(a: DivisorClass, b: DivisorClass) -> int:
    return a.dot(b)


def arithmetic_genus(d: DivisorClass) -> int:
    return d.genus()


@dataclass(frozen=True)
class QuotientClass:
    """Numerical class on the rational quotient, stored by its pullback.

    Pairings divide the upstairs pairing of the pullbacks by two; an odd
    upstairs pairing means some operand was not a pullback and raises
    OddPairing.  Validity is checked lazily, at pairing time, so classes
    can be assembled freely (sums and differences of pullbacks are again
    pullbacks, hence close under the arithmetic).
    """

    pullback: DivisorClass

    def dot(self, other: "QuotientClass") -> int:
        up = self.pullback.dot(other.pullback)
        if up % 2:
            raise OddPairing(
                f"upstairs pairing {up} is odd; an operand is not a pullback"
            )
        return up // 2

    def self_intersection(self) -> int:
        return self.dot(self)

    def genus(self) -> int:
        """Arithmetic genus downstairs: 1 + (D.D + D.K)/2 with both
        pairings taken on the quotient."""
        num = self.dot(self) + self.dot(K_TILDE)
        assert num % 2 == 0, f"adjunction numerator odd for {self}"
        return 1 + num // 2

    def __add__(self, other: "QuotientClass") -> "QuotientClass":
        if not isinstance(other, QuotientClass):
            return NotImplemented
        return QuotientClass(self.pullback + other.pullback)

    def __sub__(self, other: "QuotientClass") -> "QuotientClass":
        if not isinstance(other, QuotientClass):
            return NotImplemented
        return QuotientClass(self.pullback - other.pullback)

    def __neg__(self) -> "QuotientClass":
        return QuotientClass(-self.pullback)

    def __mul__(self, n: int) -> "QuotientClass":
        if not isinstance(n, int):
            return NotImplemented
        return QuotientClass(n * self.pullback)

    __rmul__ = __mul__


K_TILDE = QuotientClass(DivisorClass(c=-2))


def quotient_intersect(a: QuotientClass, b: QuotientClass) -> int:
    return a.dot(b)


def quotient_genus(a: QuotientClass) -> int:
    return a.genus()
