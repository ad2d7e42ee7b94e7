"""Explicit families and the construction kit.

Two generators produce infinite supplies of nef and non-nef types from
a free pattern vector mu.  The construction kit then realizes the
pullback of Lambda as sums of effective template divisors, checking the
defining identities on every run.
"""

from osculant import (
    construction_kit, format_divisor, generate_nef_types,
    generate_non_nef_types,
)

print("== nef family at d=3, k=0, mu=(1,0,0,0) ==")
for n, gamma, eps in generate_nef_types(3, 0, (1, 0, 0, 0)):
    print(f"  n={n:3d}  gamma={gamma}  eps={eps}")

print("\n== non-nef family at d=3, mu=(1,0,0,0) ==")
rows = generate_non_nef_types(3, (1, 0, 0, 0), bound=2)
for n, gamma, eps in rows:
    print(f"  n={n:3d}  gamma={gamma}  eps={eps}")
print(f"({len(rows)} types, every one fails the eps-norm condition)")

print("\n== construction kit for d=2, mu=(1,0,0,0) ==")
kit = construction_kit(2, (1, 0, 0, 0))
print(f"realizes gamma={kit.gamma}, n={kit.n}, genus g={kit.genus}")
for name, dclass in kit.named_divisors():
    print(f"  {name:17s} {format_divisor(dclass)}")
print("identities D0 = D1 and F[j] = G = pullback(Lambda) verified "
      "during assembly.")

print("\n== the mu_0 = 0 variant swaps one template for Zbar + 2*r0 ==")
kit0 = construction_kit(2, (0, 1, 1, 1))
print(f"mu=(0,1,1,1): gamma={kit0.gamma}, n={kit0.n}, genus {kit0.genus}")
print(f"  Zbar   {format_divisor(kit0.zbar)}")
print(f"  Zunder {format_divisor(kit0.zunder)}")
