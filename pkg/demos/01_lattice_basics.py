"""Divisor-class arithmetic on the blown-up surface and its quotient.

The ambient surface is an eight-point blow-up of a ruled surface over an
elliptic curve; its numerical Picard group has the basis C, F, s0..s3,
r0..r3.  Classes on the rational quotient are handled through their
pullbacks, with the quotient pairing equal to half the upstairs pairing.
"""

from osculant import (
    C, F, K, K_TILDE, R, S,
    DivisorClass, OddPairing, QuotientClass,
    arithmetic_genus, canonical_class, format_divisor, parse_divisor,
    section_image,
)

print("== upstairs lattice ==")
print(f"C.C = {C.dot(C)},  C.F = {C.dot(F)},  F.F = {F.dot(F)}")
print(f"s0.s0 = {S[0].dot(S[0])},  s0.r0 = {S[0].dot(R[0])}")

print(f"\ncanonical class K = {format_divisor(canonical_class())}")
print(f"K.K = {K.dot(K)}, genus {arithmetic_genus(K)}")
print(f"genus of C: {arithmetic_genus(C)} (a copy of the base curve)")
print(f"genus of F: {arithmetic_genus(F)} (a rational fiber)")

lam = parse_divisor("e*(4*Co + 3*So) - s0 - 3*r0 - 2*r1 - 2*r2 - 2*r3")
print(f"\na typical pullback class: {format_divisor(lam)}")
print(f"self-intersection {lam.self_intersection()}, "
      f"genus {arithmetic_genus(lam)}")

print("\n== quotient pairing (half the upstairs one) ==")
co = section_image()
print(f"image of the section: pullback {format_divisor(co.pullback)}")
print(f"C~o . C~o = {co.self_intersection()}")
print(f"K~ . K~ = {K_TILDE.self_intersection()}, "
      f"genus of C~o: {co.genus()}")

print("\nNot every upstairs class is a pullback.  The pairing certifies")
print("that cheaply: an odd upstairs product cannot be halved.")
try:
    QuotientClass(DivisorClass(c=1)).dot(QuotientClass(DivisorClass(f=1)))
except OddPairing as exc:
    print(f"  C as a 'quotient class' against F raises: {exc}")
