"""Deciding nefness of Lambda two independent ways.

A cover spec (n, d, gamma) with rho = 1 determines the class Lambda on
the quotient.  The closed route tests three integer inequalities on the
eps part of gamma = (2d-1)mu + 2eps; the brute route minimizes the
pairing against the full negative-curve catalog over a certified box.
The two verdicts are computed separately and compared, never merged.
"""

from osculant import (
    LambdaSpec, decompose_type, lambda_dot_exceptional_closed,
    linear_system_dims, moduli_dimension, nef_check,
    verify_minimizer_claim, z_divisor,
)

spec = LambdaSpec(4, 2, (3, 2, 2, 2))
print(f"spec: n={spec.n}, d={spec.d}, gamma={spec.gamma}")

dec = decompose_type(spec.gamma, spec.d)
print(f"\ndecomposition: mu={dec.mu}, eps={dec.eps}")
print(f"perturbed candidates: nat_mu={dec.nat_mu}, "
      f"flat_mu={list(dec.flat_mu_set)}")

report = nef_check(spec, mode="both")
print(f"\nverdict: {report.verdict} (routes agree: {report.agreement})")
for cond in report.conditions:
    state = "ok " if cond.passed else "FAIL"
    print(f"  [{state}] {cond.id}: {cond.lhs} vs {cond.rhs}")
print(f"boundary contacts: {list(report.boundary_contacts)}")

print("\nThe minimal pairing value over all exceptional classes is")
print("attained at one of the decomposition candidates:")
mini = verify_minimizer_claim(spec)
print(f"  min value {mini.min_value}, attained at {list(mini.argmins)}")
for name, alpha, value in mini.candidates:
    print(f"  {name:11s} alpha={alpha}  Lambda.G~alpha = {value}")

print("\ncontact divisor (one exceptional contact per branch index):")
for comp in z_divisor(spec).components:
    print(f"  k={comp.k}: alpha={comp.alpha}")

dims = linear_system_dims(spec)
print(f"\ndim |Lambda| = {dims[0]}, dim |Lambda - C~o| = {dims[1]}, "
      f"moduli dimension {moduli_dimension(spec)}")

print("\n== a non-nef spec ==")
bad = LambdaSpec(6, 3, (7, 2, 0, 0))
report = nef_check(bad, mode="both")
print(f"gamma={bad.gamma}: {report.verdict}, "
      f"failing condition {report.failing_constraint!r}, "
      f"witness alpha={report.witness}")
value = lambda_dot_exceptional_closed(bad.d, bad.gamma, report.witness)
print(f"closed-form pairing at the witness: {value}")
