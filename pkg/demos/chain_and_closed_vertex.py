"""Two routes to the same partition function.

Run: python demos/chain_and_closed_vertex.py
"""
from vertexcalc import ftcy
from vertexcalc.exact_algebra import series_exp, series_log
from vertexcalc.serialization import render_series

# Gluing two-leg vertices along a chain matches the closed form.
for N in (2, 3, 4):
    print(f"N={N}: glued == exp(f2):", ftcy.z_chain_direct(N, 3) == series_exp(ftcy.f2(N, 3)))

# With unit legs the vertex sum collapses to the closed topological vertex.
z = ftcy.z_trivalent(ftcy.trivalent((1, 1, 1), 3))
print("unit legs == closed vertex:", z == ftcy.z_closed_vertex(3))
print(render_series(series_log(z)))
