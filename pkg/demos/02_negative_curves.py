"""The catalog of negative curves on the quotient surface.

Two families matter for nefness: a fixed finite list of (-2)-classes,
and an infinite family of (-1)-classes G~alpha indexed by integer
vectors alpha with odd square sum.  In odd characteristic p the list
gains one member and the exceptional family is truncated.
"""

from osculant import (
    K_TILDE, enumerate_exceptional, exceptional_class, format_divisor,
    negative_curve_catalog,
)

print("== the fixed (-2)-catalog ==")
for name, qc, self_sq in negative_curve_catalog():
    print(f"  {name:5s} self {self_sq:3d}   pullback "
          f"{format_divisor(qc.pullback)}")

print("\n== the same catalog in characteristic 3 ==")
for name, qc, self_sq in negative_curve_catalog(3):
    marker = "  <- new" if name == "C~3" else ""
    print(f"  {name:5s} self {self_sq:3d}{marker}")

print("\n== exceptional classes by square sum ==")
for max_sq in (1, 3):
    specs = enumerate_exceptional(max_sq)
    print(f"alpha^(2) <= {max_sq}: {len(specs)} classes")
    for es in specs:
        print(f"  alpha={es.alpha}  a={es.a}  k={es.k}")

print("\nEach is a (-1)-class meeting K~ in -1:")
qc = exceptional_class((1, 2, 0, 0))
print(f"  alpha=(1,2,0,0): self {qc.self_intersection()}, "
      f"K~-degree {qc.dot(K_TILDE)}")
print(f"  pullback {format_divisor(qc.pullback)}")

print("\nCharacteristic p truncates the family at alpha^(1) <= p:")
small = enumerate_exceptional(11, p=3)
print(f"  alpha^(2) <= 11 at p=3: {len(small)} classes "
      f"(vs {len(enumerate_exceptional(11))} at characteristic zero)")
