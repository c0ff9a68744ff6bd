"""Degree scan for H*L(3,3) at p = 5 and the invariant-ideal criterion."""
from chromverify import l33
from chromverify.degrees import IdealSpec, is_invariant

print("generators in degree 120:", l33.l33_scan(120) or "none")
print("generators in degree 56:", l33.l33_scan(56))
report = l33.derive_l33_degrees()
print(f"re-derived {report['compared']} degrees, {len(report['mismatches'])} mismatches")

for text in ("1;1,1", "1;1,5", "2;1*p^0"):
    spec = IdealSpec.parse(5, text)
    print(f"ideal {text:<8} exponents {spec.exponents()} invariant={is_invariant(spec)}")
