#!/usr/bin/env python3
"""No uniform bound on certificate size: the equivalence-relation family.

One column kind encodes "x equals b", the other "x is equivalent to b".
Take the type of a fresh element whose class contains n picked elements:
pinning it down requires saying "equivalent to the class" (one literal) and
"not equal to b" for each of the n picks.  The minimum certificate size is
n + 1, growing without bound as n does, even though the independence
dimension stays 1 and extensions stay within their 2K budget.
"""

import philab as pl

print("target class holds n picked elements plus one fresh element\n")
sizes = []
for n in (1, 2, 3):
    spec = pl.EqRelSpec([n + 1, 1], [n, 1])
    s = pl.gen_eqrel(spec)
    p = pl.eqrel_target_type(s, 0)
    cert = pl.find_isolating_subtype(s, p)
    oracle = pl.oracle_min_isolating(s, p)
    dim = pl.independence_dimension(s).id_value
    sizes.append(cert.size)
    print(f"  n={n}: |Y| = {s.n} compiled triples, dimension {dim},"
          f" certificate size {cert.size} (oracle agrees: {oracle == cert.size})")

print("\ncertificate sizes", sizes, "grow with n: no uniform bound exists")

print("\nthe single combined model (one from one class, two from another,")
print("three from a third) shows all three growth stages at once:")
s = pl.gen_eqrel(pl.EqRelSpec([2, 3, 4], [1, 2, 3]))
for ci, n in ((0, 1), (1, 2), (2, 3)):
    p = pl.eqrel_target_type(s, ci)
    print(f"  class with {n} picks: certificate size"
          f" {pl.find_isolating_subtype(s, p).size}")

print("\nextension cannot shrink these certificates (the fresh parameters")
print("carry no new equality information), so the pipeline flags it:")
s = pl.gen_eqrel(pl.EqRelSpec([3, 1], [2, 1]))
result = pl.isolated_extension(s, pl.eqrel_target_type(s, 0))
print("  diagnostic:", result.diagnostic,
      "| base certificate", result.base_certificate.size,
      "| extension certificate", result.certificate.size)

print("\nembedding a row: the defining formula reproduces it on the base:")
formula, _ = pl.embed_trace(s, 2)
row = [int(formula.holds(b)) for b in s.base_members()]
truth = [s.truth[2][b] for b in s.base_members()]
print("  psi on base:", row, "| matrix row:", truth, "| agree:", row == truth)
