#!/usr/bin/env python3
"""Shattering and the independence dimension.

A parameter set is independent when every sign pattern over it is realized.
The independence dimension is the largest such set; it is what bounds every
good configuration and hence the isolating-extension budget.
"""

import philab as pl

print("A chain never shatters two thresholds (nested columns):")
chain = pl.gen_linear_order(6, [1, 3])
print("  pair {1, 3} independent?", pl.is_phi_independent(chain, [1, 3]))
print("  dimension:", pl.independence_dimension(chain).id_value)

print("\nThe shattered family is the explicit worst case:")
for k in range(1, 5):
    s = pl.gen_shattered(k)
    report = pl.independence_dimension(s)
    print(f"  k={k}: dimension {report.id_value}, witness {list(report.witness)}")

print("\nGeometric families have certifiably small dimension:")
for seed in range(5):
    s = pl.gen_random_bounded(seed, 20, 6, pl.generators.INTERVALS)
    u = pl.gen_random_bounded(seed, 20, 6, pl.generators.UNIONS)
    print(f"  seed {seed}: intervals -> {pl.independence_dimension(s).id_value}"
          f" (<= 2), unions of two -> {pl.independence_dimension(u).id_value} (<= 4)")

print("\nCapped search reports when the truth lies above the cap:")
s = pl.gen_shattered(4)
capped = pl.independence_dimension(s, cap=2)
print(f"  cap=2 on a 4-dimensional structure: value {capped.id_value},"
      f" capped={capped.capped}")

print("\nThe layered search always agrees with the unpruned oracle:")
for seed in range(5):
    s = pl.gen_random_bounded(seed, 16, 6, pl.generators.UNIONS)
    assert pl.independence_dimension(s).id_value == pl.oracle_vc(s)
print("  checked 5 seeds: agree")
