"""Constructing and verifying perfect codes.

A code is e-perfect when the radius-e balls around its codewords tile the
space: every point decodes to exactly one codeword. Nontrivial perfect
codes exist only over binary alphabets (for every ell >= 2e+1) and ternary
alphabets (exactly two codes, only when ell = 3e+1).
"""

from simplexcode import (
    Code,
    SimplexSpace,
    ball_size,
    construct_binary_perfect,
    construct_ternary_perfect,
    count_binary_perfect,
    decode,
    dumps_code,
    format_point,
    is_perfect,
    min_distance,
)

# Binary alphabet: codewords sit at spacing 2e+1 along a path.
print("binary, ell=8, e=1:")
code = construct_binary_perfect(8, 1)
print(" ", " ".join(format_point(c) for c in code))
print("  perfect:", bool(is_perfect(code, 1)), " min distance:", min_distance(code))

# When ell mod (2e+1) allows some slack, several anchorings work.
print("\nbinary, ell=7, e=1 admits", count_binary_perfect(7, 1), "codes:")
for m in (1, 2):
    c = construct_binary_perfect(7, 1, m)
    print(f"  m={m}:", " ".join(format_point(w) for w in c))

# Ternary alphabet: the two mirror-image codes in Delta_{3e+1}^2.
print("\nternary, e=2 (so ell = 7):")
for variant in (1, 2):
    c = construct_ternary_perfect(2, variant)
    ok = is_perfect(c, 2)
    print(f"  variant {variant}:", " ".join(format_point(w) for w in c), "perfect:", bool(ok))

# The sphere-packing identity is exact for perfect codes: ball sizes sum
# to the whole space.
c22 = construct_ternary_perfect(2, 2)
total = sum(ball_size(w, 2) for w in c22)
print("\nsphere packing: sum of ball sizes =", total, "= space size =", c22.space.size())

# Decoding returns the unique nearest codeword; a failed verification
# produces a concrete witness instead of a bare False.
word, dist = decode(c22, (4, 2, 1))
print("decode (4,2,1) ->", format_point(word), "at distance", dist)

broken = Code(SimplexSpace(2, 7), c22.codewords[:2])
print("dropping a codeword:", is_perfect(broken, 2).describe())

overfull = Code(SimplexSpace(1, 8), ((7, 1), (5, 3), (1, 7)))
print("packing too tightly:", is_perfect(overfull, 1).describe())

# Codes serialize to a canonical one-line JSON form.
print("\ncode file form:", dumps_code(c22), end="")
