"""Gopakumar-Vafa invariants of three length-two chains meeting at a point.

Run: python demos/gv_table.py   (about ten seconds)
"""
import time

from vertexcalc import ftcy, gv

config = ftcy.trivalent((2, 2, 2), 9)
start = time.perf_counter()
F = ftcy.free_energy(config)
table = gv.gv_extract(F, 3)
print(f"free energy and extraction took {time.perf_counter() - start:.1f}s")

classes = [
    ((1, 1), (1, 1), (1, 1)),
    ((2, 1), (1, 1), (1, 1)),
    ((1, 0), (2, 1), (2, 1)),
    ((1, 1), (2, 1), (2, 1)),
    ((2, 1), (2, 1), (2, 1)),
]
for legs in classes:
    row = []
    for shift in range(3):
        rotated = legs[shift:] + legs[:shift]
        d = tuple(a for leg in rotated for a in leg)
        row.append(table.invariants(d))
    print(legs, row[0], "(same under rotation)" if row.count(row[0]) == 3 else row)

# Resumming the table gives back the free energy exactly.
print("resum reproduces F:", gv.gv_resum(table, F) == F)
