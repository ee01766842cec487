"""Finite fields GF(q): deterministic construction and exact arithmetic.

Every field is pinned down by q alone: the modulus is the smallest-encoded
monic irreducible and alpha the smallest-encoded generator, so the element
encodings below come out the same on every machine.
"""

from griesmer import field, field_create

# GF(9) = GF(3^2): elements are encoded as c0 + 3*c1 for the polynomial
# c0 + c1*x modulo the canonical irreducible
spec = field_create(9)
print(f"GF(9): p={spec.p}, h={spec.h}")
print(f"modulus coefficients (low to high): {spec.modulus}")  # x^2 + 1
print(f"primitive element encoding: {spec.alpha}")            # x + 1

F = field(9)
print("\npowers of alpha cover every nonzero element exactly once:")
print([F.alpha_power(i) for i in range(8)])

# arithmetic is table-driven and exact
a, b = 5, 7
print(f"\n{a} + {b} = {F.add(a, b)}")
print(f"{a} * {b} = {F.mul(a, b)}")
print(f"inverse of {a}: {F.inv(a)}, check: {F.mul(a, F.inv(a))}")

# prime fields are the h = 1 case of the same machinery
F5 = field(5)
print(f"\nGF(5): alpha = {F5.spec.alpha}, inv(2) = {F5.inv(2)}")

# a quick exhaustive distributivity check, the kind the test suite runs
# for every prime power up to 9
violations = sum(
    F.mul(x, F.add(y, z)) != F.add(F.mul(x, y), F.mul(x, z))
    for x in range(9)
    for y in range(9)
    for z in range(9)
)
print(f"\ndistributivity violations over all 729 triples of GF(9): {violations}")
