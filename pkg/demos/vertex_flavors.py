"""Compare the two three-leg vertex formulas on a few triples.

Run: python demos/vertex_flavors.py
"""
from vertexcalc import vertex
from vertexcalc.partitions import encode_triple, triple, triples_with_leg_bound
from vertexcalc.serialization import render

# A single box on every leg: both formulas give the same q-rational function.
t = triple((1,), (1,), (1,))
print("W_(1),(1),(1) =", render(vertex.w_three_physical(t)))
print("math form     =", render(vertex.w_three_math(t)))

# Sweep every triple with legs of size <= 2 and count disagreements.
triples = triples_with_leg_bound(2)
bad = [encode_triple(t) for t in triples if vertex.w_three_physical(t) != vertex.w_three_math(t)]
print(f"{len(triples)} triples checked, {len(bad)} mismatches")

# Connected framed amplitudes come from the logarithm over triple partitions.
F = vertex.connected(vertex.framed_table(3))
for t in (triple((1,)), triple((1,), (1,)), triple((1,), (1,), (1,))):
    print(f"F~[{encode_triple(t)}] =", render(F[t]))
