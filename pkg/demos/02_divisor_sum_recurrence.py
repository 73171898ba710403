#!/usr/bin/env python3
"""The divisor-sum recurrence over pentagonal subtrahends.

sigma(n) looks hopelessly irregular, yet it satisfies an exact recurrence
whose subtrahends are the pentagonal values 1, 2, 5, 7, 12, 15, ... with signs
+, +, -, -.  When a subtrahend hits n itself, the number n steps in for the
missing sigma(0) -- and the recurrence dies without that rule.
"""

from pentafold import recurrence_terms, sigma_brute, sigma_recurrence, sigma_table

print("sigma(1..11) by trial division:")
print(" ", [sigma_brute(n) for n in range(1, 12)])
print()

table = sigma_table(14, "brute")


def show_trace(n):
    terms = recurrence_terms(n, table)
    chain = str(terms[0]) + "".join(f"+{t}" if t > 0 else str(t) for t in terms[1:])
    print(f"  sigma({n}) = {chain} = {sum(terms)}   (brute: {sigma_brute(n)})")


print("Worked traces (the last +n comes from the boundary rule):")
show_trace(12)
show_trace(13)
print()

print("Dropping the boundary rule breaks exactly the pentagonal n:")
for n in (11, 12, 13, 15):
    crippled = sigma_recurrence(n, table, boundary_rule=False)
    status = "ok" if crippled == sigma_brute(n) else "WRONG"
    print(f"  sigma({n}) without rule: {crippled:3d}  [{status}]")
print()

limit = 2000
full = sigma_table(limit, "recurrence")
agree = all(full[n] == sigma_brute(n) for n in range(1, limit + 1))
print(f"Recurrence vs brute force for every n <= {limit}: {'exact match' if agree else 'MISMATCH'}")
