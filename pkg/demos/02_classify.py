"""Certificates and rejection reasons for a spread of integers.

Odd values are attainable iff they are 1 mod 16 or carry a set-A
factorization (three primes 5 mod 8 with a parity-constrained cofactor
split); even values need 2-adic valuation 15 with a 5-mod-8 prime in the
odd part, or valuation at least 16.
"""

from c4x4det import NotInS, classify

samples = [17, 1, -15, -375, 1625, 5625, 9, -7, 3,
           2**16, 2**16 * -3, 2**15 * 5, 2**15 * 3, 2**14, 0]

for n in samples:
    cls = classify(n)
    tag = "not in S" if isinstance(cls, NotInS) else "in S    "
    print(f"{n:>12}  {tag}  {cls}")

print()
print("certificates reconstruct their value exactly; for example")
cls = classify(1625)
print(f"1625 = (8*{cls.j}+1) * (8*{cls.k}-3) * {cls.p1} * {cls.p2} * {cls.p3}")
value = (8 * cls.j + 1) * (8 * cls.k - 3) * cls.p1 * cls.p2 * cls.p3
print("     =", value)
