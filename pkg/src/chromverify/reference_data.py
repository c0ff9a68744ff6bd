"""Published degree tables, transcribed verbatim, used as targets for the derivations.

Names use ASCII tokens: ``b10`` for beta_{1,0}, ``l2`` for l_2, ``h0`` for h_0 and
so on; a product is the concatenation of its factors (``b20^2k0h0``).  At
p = 5 the generators written h_{10}, h_{11} elsewhere are the Table-1 classes
``h0``, ``h1``.
"""

# (name, w, u) with w = t - s and u = w mod 82, p = 7, w <= 1591
TABLE_P7 = [
    ("1", 0, 0), ("h0", 11, 11), ("h1", 83, 1), ("g0", 106, 24),
    ("k0", 178, 14), ("k0h0", 189, 25), ("b11", 586, 12), ("h2", 587, 13),
    ("b11h0", 597, 23), ("h2h0", 598, 24), ("b11h1", 669, 13), ("b20", 670, 14),
    ("b20h0", 681, 25), ("b11g0", 692, 36), ("b20h1", 753, 15), ("g1", 754, 16),
    ("b11k0", 764, 26), ("b11k0h0", 775, 37), ("b20g0", 776, 38), ("l1", 789, 51),
    ("b20k0", 848, 28), ("l2", 849, 29), ("b20k0h0", 859, 39), ("l1h1", 872, 52),
    ("b11^2", 1172, 24), ("b11h2", 1173, 25), ("b11^2h0", 1183, 35), ("b11h2h0", 1184, 36),
    ("b11^2h1", 1255, 25), ("b11b20", 1256, 26), ("b20h2", 1257, 27), ("k1", 1258, 28),
    ("b11b20h0", 1267, 37), ("b20h2h0", 1268, 38), ("b11^2g0", 1278, 48), ("l3", 1281, 51),
    ("b11b20h1", 1339, 27), ("b20^2", 1340, 28), ("b11g1", 1340, 28), ("k1h1", 1341, 29),
    ("b11^2k0", 1350, 38), ("b20^2h0", 1351, 39), ("b11^2k0h0", 1361, 49), ("b11b20g0", 1362, 50),
    ("b11l1", 1375, 63), ("l1h2", 1376, 64), ("b20^2h1", 1423, 29), ("b20g1", 1424, 30),
    ("b20b11k0", 1434, 40), ("b11l2", 1435, 41), ("b20b11k0h0", 1445, 51), ("b20^2g0", 1446, 52),
    ("b11l1h1", 1458, 64), ("b20l1", 1459, 65), ("b20^2k0", 1518, 42), ("b20l2", 1519, 43),
    ("b20^2k0h0", 1529, 53), ("m1", 1532, 56), ("b20l1h1", 1542, 66), ("m1h0", 1543, 67),
]

# (name, w), p = 5, w <= 121
TABLE_P5 = [
    ("1", 0), ("h0", 7), ("b10", 38), ("h1", 39), ("h0b10", 45), ("g0", 54),
    ("b10^2", 76), ("h1b10", 77), ("h0b10^2", 83), ("k0", 86), ("g0b10", 92),
    ("k0h0", 93), ("b10^3", 114), ("h1b10^2", 115), ("h0b10^3", 121),
]

CELLS_P5_V2 = [0, 1, 9, 10, 49, 50, 58, 59]
CELLS_P7_V3 = [0, 1, 13, 14, 97, 98, 110, 111, 685, 686, 698, 699, 782, 783, 795, 796]

# high cells of V(3) at p = 7 and their residues mod 82
HIGH_CELL_RESIDUES_P7 = {698: 42, 699: 43, 782: 44, 783: 45, 795: 57, 796: 58}

# hits among s + a - 740 and s + a - 1 for s, a high cells of V(3), p = 7
HITS_OFFSET_740 = {656: ["b10^8"], 657: ["h1b10^7"], 753: ["b20h1"], 754: ["g1"]}
HITS_OFFSET_1 = {1395: ["h1b10^16"], 1492: ["g1b10^9"]}

# degrees listed as scanned (with their residues) for the two offsets
SCANNED_OFFSET_740 = [656, 657, 740, 741, 753, 754, 658, 742, 755, 824, 825, 837, 838,
                      826, 839, 850, 851, 852]
SCANNED_OFFSET_1 = [1395, 1396, 1479, 1480, 1492, 1493, 1397, 1481, 1494, 1563, 1564,
                    1576, 1577, 1565, 1578, 1589, 1590, 1591]

# H^* L(3,3) at p = 5: degrees mod 248 as printed (negative values kept)
L33_A2 = {"g0": 56, "k0": 88, "b10": 40, "g1": 32, "k1": 192, "b11": 200,
          "g2": 160, "k2": -32, "b12": 8}
L33_A3 = {
    "g0h11": 96, "l10": 56, "l20": 16, "l30": 48, "l40": -32, "l50": 0,
    "g1h12": 232, "l11": 32, "l21": 80, "l31": 240, "l41": 88, "l51": 0,
    "g2h10": 168, "l12": 160, "l22": 152, "l32": -40, "l42": 192, "l52": 0,
}
L33_A4 = {"m0,j": 96, "m'0": 8, "m1,j": 232, "m'1": 40, "m2,j": 168, "m'2": 200}

# dual degrees, rows i = 0, 1, 2: six (A^3 z3)* entries then two (A^4)* entries
L33_DUAL_ROWS = [
    [152, 192, 232, 200, 32, 0, 152, 240],
    [16, 216, 168, 8, 160, 0, 16, 208],
    [80, 88, 96, 40, 56, 0, 80, 48],
]


# C(4)^{3,-12} at p = 7, as generator words
C4_BASIS_3_M12 = (
    [f"h3,1 h4,{i} h4,{j}" for i in range(4) for j in range(i + 1, 4)]
    + [f"h1,1 h2,2 h4,{i}" for i in range(4)]
    + [f"h1,3 h2,1 h4,{i}" for i in range(4)]
    + ["h1,1 h1,2 h1,3", "h1,1 h3,1 h3,2", "h1,2 h3,1 h3,3", "h1,3 h3,0 h3,1",
       "h2,0 h2,2 h3,1", "h2,1 h2,2 h3,3", "h2,1 h2,3 h3,1"]
)

# the sixteen classes of C(4)^{12,12} whose images span a 16-dim subspace of C(4)^{13,12};
# each is the star-dual of the listed degree-4 word
C4_A_DUALS = (
    [f"h1,1 h2,2 h4,{i} h4,{j}" for i in range(4) for j in range(i + 1, 4)]
    + [f"h1,1 h1,2 h1,3 h4,{k}" for k in range(4)]
    + ["h1,0 h1,3 h2,1 h3,1", "h1,0 h1,1 h2,2 h3,1", "h1,1 h1,2 h2,2 h3,3",
       "h1,1 h2,1 h2,2 h2,3", "h1,1 h1,2 h2,3 h3,1", "h1,3 h2,0 h2,1 h2,2"]
)

# B: star-duals spanning the image of d on C(4)^{13,12}
C4_B_DUALS = [f"h3,1 h4,{i}" for i in range(4)] + ["h2,1 h1,3", "h1,1 h2,2"]
