#!/usr/bin/env python3
"""Tour of the generalized pentagonal numbers.

Both quadratic branches, the merged stream with its signs, the ragged-looking
difference progression, the interpolation that turns everything into
triangular numbers over 3, and exact recognition of arbitrary values.
"""

from pentafold import (
    Branch,
    differences,
    interpolated_sequence,
    is_pentagonal,
    pentagonal,
    term_stream,
)

print("The two branches, indices 0..6:")
print("  minus:", [pentagonal(k, Branch.MINUS) for k in range(7)])
print("  plus: ", [pentagonal(k, Branch.PLUS) for k in range(7)])
print()

print("Merged into one stream by magnitude, with series signs -,-,+,+:")
terms = term_stream(12)
print(" ", "  ".join(f"{'-' if t.sign < 0 else '+'}{t.value}" for t in terms))
print()

merged = [0] + [t.value for t in terms]
print("Differences of the merged sequence (natural numbers, interleaved):")
print(" ", differences(merged))
print()

print("Interpolating a fraction after every branch pair smooths the growth:")
seq = interpolated_sequence(12)
print(" ", ", ".join(str(v) for v in seq))
print("  ...and times 3 these are consecutive triangular numbers:")
print(" ", [int(v * 3) for v in seq])
print()

print("Recognition by inverting the quadratic:")
for value in (22, 26, 13, 100, 925, 0):
    hit = is_pentagonal(value)
    if hit:
        k, branch = hit
        print(f"  {value:4d} = branch {branch.value:>5} at k = {k}")
    else:
        print(f"  {value:4d} is not generalized pentagonal")
