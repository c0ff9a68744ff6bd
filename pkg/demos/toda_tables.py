"""Degree bookkeeping for May spectral sequence generators.

Enumerates the p = 7 table, searches single degrees, and runs the skeleton
scans used to rule out classes in the relevant range.
"""
from chromverify.degrees import beta_residue
from chromverify.may_tables import (
    enumerate_entries, nonempty, permanence_obstructions, search, skeleton_cells,
    validity_bound, vanishing_scan,
)

p = 7
bound = validity_bound(p)
entries = enumerate_entries(p, bound)
print(f"p={p}: {len(entries)} entries below degree {bound}")
for e in entries[:8]:
    print(f"  {e.name:<12} w={e.w:<5} u={e.u}")

for w in (656, 657, 698):
    print(f"search({w}):", [h.name for h in search(p, bound, w)], "residue", beta_residue(p, w)[1])
print("obstructions at 656:", [h.name for h in permanence_obstructions(p, bound, 656)])

cells = skeleton_cells(p, 3)
print(f"\nV(3) cells at p=7: {len(cells)} cells, top {cells[-1]}")
high = [c for c in cells if c > 686]
for offset in (-740, -1):
    scan = vanishing_scan(p, bound, high, high, offset)
    print(f"high cells, offset {offset}: {len(scan)} degrees scanned, hits {nonempty(scan)}")
