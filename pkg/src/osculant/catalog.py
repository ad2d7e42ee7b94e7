"""Named curve classes: the exceptional family on the quotient, the
(-2)-configuration, fiber components, and the upstairs cover class.

Downstairs the negative curves come in two flavours.  There is a finite
(-2)-configuration: the section image C~o, the eight half-branch classes
s~0..s~3 and r~0..r~3 (whose pullbacks are 2*s_i and 2*r_i, the factor 2
because the branch divisor is fixed by the involution), and in odd
characteristic p one extra member C~p pulling back to p*C - sum r_i.
And there is an infinite family of (-1)-classes G~alpha indexed by
alpha in N^4 with odd square sum:

    pullback(G~alpha) = a*C + F - s_k - sum_i alpha_i r_i,
    a = (alpha^(2) - 1)/2,
    k = the index whose coordinate parity disagrees with the rest.

Each G~alpha has self-intersection -1 and canonical degree -1, so genus
0 by adjunction.  In characteristic p only those with alpha^(1) <= p
survive.  The unit vectors alpha = e_i recover the fiber-component
images: pullback F - s_i - r_i.
"""

from dataclasses import dataclass
from math import isqrt

from .errors import CharPExcluded, ParityViolation, RhoEven, RhoOutOfRange, DomainError
from .lattice import C, F, S, R, DivisorClass, QuotientClass
from .vectors import Vec4, coord_sum, fmt_vec, minority_index, norm_sq, vec4


def validate_char_p(p: int | None) -> int | None:
    """Characteristic config: None (char 0) or an odd prime >= 3."""
    if p is None:
        return None
    p = int(p)
    if p < 3 or p % 2 == 0:
        raise DomainError(f"characteristic must be an odd prime >= 3, got {p}",
                          constraint="char-p-config")
    for q in range(3, isqrt(p) + 1, 2):
        if p % q == 0:
            raise DomainError(f"characteristic {p} is not prime",
                              constraint="char-p-config")
    return p


@dataclass(frozen=True)
class ExceptionalSpec:
    """Index data of one exceptional class: the vector alpha together
    with the derived a = (alpha^(2)-1)/2 and odd-one-out index k."""

    alpha: Vec4
    a: int
    k: int

    @classmethod
    def from_alpha(cls, alpha, p: int | None = None) -> "ExceptionalSpec":
        alpha = vec4(alpha)
        if any(x < 0 for x in alpha):
            raise DomainError(f"alpha={fmt_vec(alpha)} must be nonnegative",
                              constraint="alpha-nonnegative")
        sq = norm_sq(alpha)
        if sq % 2 == 0:
            raise ParityViolation(
                f"alpha={fmt_vec(alpha)} has even square sum {sq}")
        p = validate_char_p(p)
        if p is not None and coord_sum(alpha) > p:
            raise CharPExcluded(
                f"alpha={fmt_vec(alpha)} has coordinate sum "
                f"{coord_sum(alpha)} > p = {p}")
        return cls(alpha, (sq - 1) // 2, minority_index(alpha))

    def pullback(self) -> DivisorClass:
        return self.a * C + F - S[self.k] - sum(
            (a * R[i] for i, a in enumerate(self.alpha)), DivisorClass())

    def quotient_class(self) -> QuotientClass:
        return QuotientClass(self.pullback())


def exceptional_class(alpha, p: int | None = None) -> QuotientClass:
    """The (-1)-class G~alpha, as a quotient class."""
    return ExceptionalSpec.from_alpha(alpha, p).quotient_class()


def enumerate_exceptional(max_sq: int, p: int | None = None) -> list[ExceptionalSpec]:
    """All alpha in N^4 with odd alpha^(2) <= max_sq (and alpha^(1) <= p
    in characteristic p), in lexicographic order of alpha."""
    p = validate_char_p(p)
    out = []
    m = isqrt(max(max_sq, 0))
    for a0 in range(m + 1):
        q0 = a0 * a0
        for a1 in range(isqrt(max_sq - q0) + 1):
            q1 = q0 + a1 * a1
            for a2 in range(isqrt(max_sq - q1) + 1):
                q2 = q1 + a2 * a2
                for a3 in range(isqrt(max_sq - q2) + 1):
                    if (q2 + a3 * a3) % 2 == 0:
                        continue
                    if p is not None and a0 + a1 + a2 + a3 > p:
                        continue
                    out.append(ExceptionalSpec.from_alpha((a0, a1, a2, a3)))
    return out


# -- the (-2)-configuration ------------------------------------------------

def section_image() -> QuotientClass:
    """C~o: image of the zero section, pullback C - s0-s1-s2-s3."""
    return QuotientClass(C - S[0] - S[1] - S[2] - S[3])


def s_branch(i: int) -> QuotientClass:
    """s~i, pullback 2*s_i (branch component, fixed by the involution)."""
    return QuotientClass(2 * S[i])


def r_branch(i: int) -> QuotientClass:
    """r~i, pullback 2*r_i."""
    return QuotientClass(2 * R[i])


def char_p_section(p: int) -> QuotientClass:
    """C~p: the extra (-2)-section in odd characteristic p,
    pullback p*C - r0-r1-r2-r3."""
    p = validate_char_p(p)
    assert p is not None
    return QuotientClass(p * C - R[0] - R[1] - R[2] - R[3])


def negative_curve_catalog(p: int | None = None) -> list[tuple[str, QuotientClass, int]]:
    """The finite (-2)-catalog as (name, class, self-intersection) rows.

    Nine entries in characteristic 0; C~p joins in characteristic p.
    Self-intersections are recomputed here, not hardcoded, so the list
    doubles as a sanity check on the lattice arithmetic.
    """
    p = validate_char_p(p)
    rows = [("C~o", section_image())]
    rows += [(f"s~{i}", s_branch(i)) for i in range(4)]
    rows += [(f"r~{i}", r_branch(i)) for i in range(4)]
    if p is not None:
        rows.append((f"C~{p}", char_p_section(p)))
    return [(name, cls, cls.self_intersection()) for name, cls in rows]


def fiber_component_class(i: int) -> DivisorClass:
    """Strict transform of the fiber through marked pair i: F - s_i - r_i.

    Upstairs class; its image downstairs is G~alpha for alpha = e_i.
    """
    if not 0 <= i <= 3:
        raise DomainError(f"fiber index {i} out of range 0..3",
                          constraint="fiber-index")
    return F - S[i] - R[i]


def gamma_perp_class(n: int, d: int, rho: int, gamma) -> DivisorClass:
    """Upstairs class of a cover curve:

        n*C + (2d-1)*F - rho*s_0 - sum_i gamma_i r_i.

    rho must be odd and within 1..2d-1; gamma in N^4.
    """
    n, d, rho = int(n), int(d), int(rho)
    gamma = vec4(gamma)
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}", constraint="degree-min")
    if d < 1:
        raise DomainError(f"d must be >= 1, got {d}", constraint="degree-min")
    if rho % 2 == 0:
        raise RhoEven(f"rho={rho} must be odd")
    if not 1 <= rho <= 2 * d - 1:
        raise RhoOutOfRange(f"rho={rho} outside 1..{2 * d - 1}")
    if any(g < 0 for g in gamma):
        raise DomainError(f"gamma={fmt_vec(gamma)} must be nonnegative",
                          constraint="gamma-nonnegative")
    return n * C + (2 * d - 1) * F - rho * S[0] - sum(
        (g * R[i] for i, g in enumerate(gamma)), DivisorClass())
