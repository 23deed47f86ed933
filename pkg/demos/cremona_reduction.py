"""Reduce curve classes on blowups of P^3 and compare with free energies.

Run: python demos/cremona_reduction.py
"""
from vertexcalc import cremona, ftcy, gv

for text in ("3;1,1,1,1,1,1", "2;2,1,1", "1;-1,3", "4;2,2,1,1,1,1"):
    C = cremona.CurveClass.parse(text)
    out = cremona.reduce(C)
    print(f"{C} -> {out} in {len(out.trace)} steps")

# The chain class (2,2,0) of a length-3 chain is a doubled super-rigid line.
config = ftcy.ConfigSpec(ftcy.CHAIN, (3,), 6, {(1, 3): 0})
C = cremona.class_of_degrees(config, {(1, 1): 2, (1, 2): 2})
out = cremona.reduce(C)
predicted = cremona.local_invariants(out, 2)
F = ftcy.free_energy(config)
computed = gv.gw_invariants(F, (2, 2, 0), 2)
print(f"{C}: {out}; predicted {predicted}; from F {computed}")
