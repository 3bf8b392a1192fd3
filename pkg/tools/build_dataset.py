"""Regenerate src/bvatlas/data/k3_atlas.json from the compact tables below.

Borcea rows store F = x^2 - f; every other equation keeps the printed signs.
Run from the repository root: python3 tools/build_dataset.py
"""

import json
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from bvatlas.wps import Weight, WPolynomial, parse_polynomial  # noqa: E402

# Y#, B#, weight, f, r, a, terms removed
BORCEA = {
    1: [
        (5, 1, (3, 1, 1, 1), "y^6+z^6+w^6", 1, 1, ""),
        (6, 2, (5, 2, 2, 1), "y^5+z^5+w^10", 6, 4, ""),
        (42, 3, (5, 3, 1, 1), "y^3z+z^10+w^10", 3, 1, "y^3w"),
        (32, 4, (7, 3, 2, 2), "y^4z+z^7+w^7", 10, 6, "y^4w"),
        (40, 5, (7, 4, 2, 1), "y^3z+z^7+w^14", 7, 3, "y^3w^2"),
        (33, 6, (9, 4, 3, 2), "y^4w+z^6+w^9", 10, 6, "y^3z^2"),
        (39, 7, (9, 5, 3, 1), "y^3z+z^6+w^18", 7, 3, "y^3w^3"),
        (12, 8, (9, 6, 2, 1), "y^3+z^9+w^18", 6, 2, ""),
        (75, 9, (11, 5, 4, 2), "y^4w+z^5w+w^11", 13, 5, "y^2z^3"),  # see QUASI_SMOOTH_FIX
        (78, 10, (11, 6, 4, 1), "y^3z+yz^4+w^22", 10, 2, "y^3w^4, z^5w^2"),
        (82, 11, (11, 7, 3, 1), "y^3w+yz^5+w^22", 9, 1, "z^7w"),
        (76, 12, (13, 6, 5, 2), "y^4w+yz^4+w^13", 14, 4, "z^4w^3"),
        (77, 13, (13, 7, 5, 1), "y^3z+z^5w+w^26", 11, 1, "y^3w^5"),
        (81, 14, (13, 8, 3, 2), "y^3w+yz^6+w^13", 13, 3, "z^8w"),
        (29, 15, (15, 6, 5, 4), "y^5+z^6+yw^6", 12, 6, "z^2w^5"),
        (34, 16, (15, 7, 6, 2), "y^4w+z^5+w^15", 14, 4, ""),
        (38, 17, (15, 8, 6, 1), "y^3z+z^5+w^30", 11, 1, "y^3w^6"),
        (11, 18, (15, 10, 3, 2), "y^3+z^10+w^15", 10, 4, ""),
        (50, 19, (15, 10, 4, 1), "y^3+yz^5+w^30", 9, 1, "z^7w^2"),
        (90, 20, (17, 7, 6, 4), "y^4z+y^2w^5+z^5w+zw^7", 17, 3, "no Delsarte form"),
        (93, 21, (17, 10, 4, 3), "y^3z+yz^6+yw^8+z^7w^2+zw^10", 16, 2, "no Delsarte form"),
        (91, 22, (19, 8, 6, 5), "y^4z+yz^5+yw^6+z^3w^4", 18, 2, "no Delsarte form"),
        (92, 23, (19, 11, 5, 3), "y^3z+yw^9+z^7w", 17, 1, "zw^11"),
        (47, 24, (21, 14, 4, 3), "y^3+yz^7+w^14", 13, 3, "z^9w^2"),
        (49, 25, (21, 14, 5, 2), "y^3+z^8w+w^21", 14, 2, ""),
        (14, 26, (21, 14, 6, 1), "y^3+z^7+w^42", 10, 0, ""),
        (73, 27, (25, 10, 8, 7), "y^5+yz^5+zw^6", 19, 1, ""),
        (83, 28, (27, 18, 5, 4), "y^3+yw^9+z^10w", 17, 1, "z^2w^11"),
        (46, 29, (33, 22, 6, 5), "y^3+z^11+zw^12", 18, 0, ""),
    ],
    2: [
        (7, 30, (4, 2, 1, 1), "y^4+z^8+w^8", 2, 2, ""),
        (37, 31, (8, 4, 3, 1), "y^4+yz^4+w^16", 6, 4, "z^5w"),
        (44, 32, (8, 5, 2, 1), "y^3w+z^8+w^16", 6, 2, "y^2z^3"),
        (36, 33, (10, 5, 3, 2), "y^4+yz^5+w^10", 8, 6, "z^6w"),
        (9, 34, (10, 5, 4, 1), "y^4+z^5+w^20", 6, 4, ""),
        (35, 35, (14, 7, 4, 3), "y^4+z^7+yw^7", 10, 6, "zw^8"),
        (45, 36, (14, 9, 4, 1), "y^3w+z^7+w^28", 10, 0, ""),
        (74, 37, (16, 7, 5, 4), "y^4w+yz^5+w^8", 14, 4, "z^4w^3"),
        (79, 38, (16, 9, 5, 2), "y^3z+z^6w+w^16", 14, 2, "y^2w^7"),
        (30, 39, (20, 8, 7, 5), "y^5+z^5w+w^8", 14, 4, ""),
        (80, 40, (22, 13, 5, 4), "y^3z+z^8w+w^11", 18, 0, ""),
    ],
    3: [
        (8, 41, (6, 3, 2, 1), "y^4+z^6+w^12", 4, 4, ""),
        (10, 42, (6, 4, 1, 1), "y^3+z^12+w^12", 2, 0, ""),
        (31, 43, (12, 5, 4, 3), "y^4z+z^6+w^8", 10, 6, "y^3w^3"),
        (41, 44, (12, 7, 3, 2), "y^3z+z^8+w^12", 10, 4, "y^2w^5"),
        (13, 45, (12, 8, 3, 1), "y^3+z^8+w^24", 6, 2, ""),
        (43, 46, (18, 11, 4, 3), "y^3w+z^9+w^12", 14, 2, ""),
        (51, 47, (18, 12, 5, 1), "y^3+z^7w+w^36", 10, 0, ""),
        (48, 48, (24, 16, 5, 3), "y^3+z^9w+w^16", 14, 2, ""),
    ],
}

# printed equations that are not quasi-smooth: restore the removed term
QUASI_SMOOTH_FIX = {75: "y^4w+y^2z^3+z^5w+w^11"}

# Y#, weight, F, r, a, terms removed/changed
NON_BORCEA = {
    4: [
        (1, (1, 1, 1, 1), "x^4+y^4+z^4+w^4", 8, 8, ""),
        (19, (3, 2, 2, 1), "x^2y+y^4+z^4+w^8", 10, 6, "x^2w^2 and x^2z"),
        (20, (9, 8, 6, 1), "x^2z+y^3+z^4+w^24", 10, 6, "x^2w^6"),
        (21, (2, 1, 1, 1), "x^2y+y^5+z^5+w^5", 6, 4, "x^2z, x^2w"),
        (22, (6, 5, 3, 1), "x^2z+y^3+z^5+w^15", 10, 4, "x^2w^3"),
        (23, (5, 3, 2, 2), "x^2z+y^4+z^6+w^6", 12, 6, "x^2w"),
        (24, (5, 4, 2, 1), "x^2z+y^3+z^6+w^12", 10, 4, "x^2w^2"),
        (25, (4, 3, 1, 1), "x^2z+y^3+z^9+w^9", 6, 2, "x^2w"),
        (26, (9, 5, 4, 2), "x^2w+y^4+z^5+w^10", 14, 4, ""),
        (27, (11, 8, 3, 2), "x^2w+y^3+z^8+w^12", 14, 2, ""),
        (28, (10, 7, 3, 1), "x^2w+y^3+z^7+w^21", 11, 1, ""),
        (55, (7, 6, 5, 2), "x^2y+y^3w+z^4+w^10", 14, 4, "x^2w^3"),
        (56, (11, 8, 6, 5), "x^2y+y^3z+z^5+w^6", 19, 1, ""),
        (57, (9, 6, 5, 4), "x^2y+y^4+z^4w+w^6", 18, 2, "xz^3"),
        (58, (6, 5, 4, 1), "x^2z+y^3w+z^4+w^16", 14, 2, "x^2w^4, xy^2"),
        (59, (8, 7, 5, 1), "x^2z+y^3+z^4w+w^21", 14, 2, "x^2w^5"),
        (60, (7, 6, 4, 1), "x^2z+y^3+yz^3+w^18", 13, 3, "x^2w^4, z^4w^2"),
        (61, (11, 7, 6, 4), "x^2z+y^4+z^4w+w^7", 18, 2, ""),
        (62, (8, 5, 4, 3), "x^2z+y^4+yw^5+z^5", 14, 4, "xw^4, z^2w^4"),
        (63, (4, 3, 2, 1), "x^2z+y^3w+z^5+w^10", 10, 4, "x^2w^2, xy^2, y^2z^2"),
        (64, (10, 7, 4, 3), "x^2z+y^3w+z^6+w^8", 18, 0, "xy^2"),
        (65, (14, 11, 5, 3), "x^2z+y^3+z^6w+w^11", 18, 0, ""),
        (66, (3, 2, 1, 1), "x^2z+y^3w+z^7+w^7", 7, 3, "x^2w, xy^2, y^3z"),
        (67, (9, 7, 3, 2), "x^2z+y^3+yw^7+z^7", 13, 3, "xw^6, zw^9"),
        (68, (13, 10, 4, 3), "x^2z+y^3+yz^5+w^10", 17, 1, "z^6w^2"),
        (69, (7, 4, 3, 2), "x^2w+y^4+yz^4+w^8", 14, 4, "xz^3, z^4w^2"),
        (70, (8, 5, 3, 2), "x^2w+y^3z+z^6+w^9", 14, 2, "xy^2, y^2w^4"),
        (71, (7, 4, 3, 1), "x^2w+y^3z+z^5+w^15", 11, 1, "xy^2, y^3w^3"),
        (72, (7, 5, 2, 1), "x^2w+y^3+yz^5+w^15", 9, 1, "xz^4, z^7w"),
        (86, (9, 7, 5, 4), "x^2y+y^3w+z^5+zw^5", 19, 1, "xw^4"),
        (87, (5, 4, 3, 1), "x^2z+y^3w+yz^3+w^13", 13, 3, "x^2w^3, xy^2, z^4w"),
        (88, (11, 9, 5, 2), "x^2z+y^3+yw^9+z^5w", 17, 1, "xw^8, zw^11"),
        (89, (5, 3, 2, 1), "x^2w+y^3z+yz^4+w^11", 10, 2, "xy^2, xz^3, y^3w^2, z^5w"),
    ],
    5: [
        (3, (2, 2, 1, 1), "x^2y+y^3+z^6+w^6", 7, 7, "x^3 -> x^2y"),
        (4, (4, 4, 3, 1), "x^2y+y^3+z^4+w^12", 7, 7, "x^3 -> x^2y"),
        (17, (5, 5, 3, 2), "x^2y+y^3+z^5+zw^6", 12, 6, "xw^5, yw^5, x^3 -> x^2y"),
        (18, (3, 3, 2, 1), "x^2y+y^3+z^4w+w^9", 10, 6, "xz^3, yz^3, x^3 -> x^2y"),
    ],
}

# Y#, weight, F, r, a, terms removed, involution variable
TABLE6 = [
    (2, (4, 3, 3, 2), "x^3+y^4+z^4+w^6", 10, 8, "none", 1),
    (16, (8, 7, 6, 3), "x^3+y^3w+z^4+w^8", 14, 6, "none", 2),
    (52, (12, 9, 8, 7), "x^3+y^4+xz^3+zw^4", 19, 3, "none", 1),
    (84, (9, 7, 6, 5), "x^3+xz^3+y^3z+yw^4", 20, 2, "z^2w^3", 3),
]

# sigma(x) = -x but no quasi-smooth Delsarte form; 90, 91, 93 repeat Table 1 rows
TABLE7 = [
    (85, (5, 4, 3, 2), "x^2y+x^2w^2+y^3w+y^2z^2+yw^5+z^4w+w^7", 15, 5),
    (90, (17, 7, 6, 4), "x^2+y^4z+y^2w^5+z^5w+zw^7", 17, 3),
    (91, (19, 8, 6, 5), "x^2+y^4z+yz^5+yw^6+z^3w^4", 18, 2),
    (93, (17, 10, 4, 3), "x^2+y^3z+yz^6+yw^8+z^7w^2+zw^10", 16, 2),
    (94, (7, 5, 4, 3), "x^2y+y^3z+y^2w^3+z^4w+zw^5", 18, 2),
    (95, (7, 5, 3, 2), "x^2z+y^3w+yz^4+yw^6+z^5w+zw^7", 16, 2),
]

NO_INVOLUTION = [
    (15, (5, 4, 3, 3), "x^3+y^3z+y^3w+z^5+w^5"),
    (53, (6, 5, 4, 3), "x^3+y^3w+y^2z^2+xz^3+z^3w^2+w^6"),
    (54, (7, 6, 5, 3), "x^3+y^3w+yz^3+z^3w^2+w^7"),
]

# Y#, equation (signs as printed), involution letter, r, a
TABLE8 = [
    (2, "x^3+y^4+z^4+w^6", "y", 10, 8),
    (2, "x^3+y^4+z^4+w^6", "w", 18, 4),
    (3, "x^2y+y^3+z^6+w^6", "z", 10, 8),
    (4, "x^2y+y^3+z^4+w^12", "z", 14, 6),
    (5, "x^2+y^6+z^6+w^6", "y", 9, 9),
    (6, "x^2+y^5+z^5+w^10", "w", 6, 4),
    (6, "x^2+y^5+yz^4+w^10", "z", 10, 8),
    (7, "x^2+y^4+z^8+w^8", "y", 10, 6),
    (7, "x^2+y^4+z^8+w^8", "w", 10, 8),
    (8, "x^2+y^4+z^6+w^12", "y", 12, 6),
    (8, "x^2+y^4+z^6+w^12", "z", 12, 8),
    (9, "x^2+y^4+z^5+w^20", "y", 14, 4),
    (9, "x^2+y^4+z^5+w^20", "w", 14, 4),
    (10, "x^2+y^3+z^12+w^12", "z", 10, 8),
    (12, "x^2+y^3+z^9+w^18", "w", 6, 2),
    (13, "x^2+y^3+z^8+w^24", "z", 14, 6),
    (16, "x^3+y^3w+z^4+w^8", "z", 14, 6),
    (17, "x^2y+y^3+z^5+zw^6", "w", 17, 5),
    (18, "x^2y+y^3+z^4w+w^9", "z", 14, 6),
    (19, "x^2y+y^4+z^4+w^8", "z", 10, 8),
    (23, "x^2z+y^4+z^6+w^6", "w", 12, 6),
    (29, "x^2+y^5+z^6+yw^6", "w", 18, 4),
    (31, "x^2+y^4z+z^6+w^8", "y", 18, 4),
    (33, "x^2+y^4w+z^6+w^9", "y", 14, 6),
    (33, "x^2+y^4w+z^6+w^9", "z", 10, 6),
    (36, "x^2+y^4+yz^5+w^10", "w", 16, 6),
    (37, "x^2+y^4+yz^4+w^16", "z", 10, 8),
    (39, "x^2+y^3z+z^6+w^18", "w", 15, 7),
    (40, "x^2+y^3z+z^7+w^14", "w", 7, 3),
    (41, "x^2+y^3z+z^8+w^12", "w", 15, 7),
    (42, "x^2+y^3z+z^10+w^10", "w", 11, 9),
    (44, "x^2+y^3w+z^8+w^16", "z", 14, 6),
    (52, "x^3+y^4+xz^3+zw^4", "y", 20, 2),
    (52, "x^3+y^4+xz^3+zw^4", "w", 19, 3),
    (75, "x^2+y^4w+y^2z^3+z^5w+w^11", "y", 13, 5),
    (84, "x^3+xz^3+y^3z+yw^4", "w", 20, 2),
]

# Tables 9-10: Y#, printed B#, printed weight, rank r, partners (Y#, B#, 20-r, printed weight)
MIRROR = {
    9: [
        (1, None, (1, 1, 1, 1), 8, [(56, None, 12, (11, 8, 6, 5)), (73, 27, 12, (25, 10, 8, 7))]),
        (4, None, (4, 4, 3, 1), 10, [(4, None, 10, (4, 4, 3, 1))]),
        (5, 1, (3, 1, 1, 1), 1, [(52, None, 19, (12, 9, 8, 7))]),
        (6, 2, (5, 2, 2, 1), 6, [(26, None, 14, (9, 5, 4, 2)), (34, 16, 14, (15, 7, 6, 2)), (76, 12, 14, (13, 6, 5, 2))]),
        (8, 41, (6, 3, 2, 1), 3, [(64, None, 17, (10, 7, 4, 5))]),
        (9, None, (10, 5, 4, 1), 10, [(9, None, 10, (10, 5, 4, 1)), (71, None, 10, (7, 4, 3, 1))]),
        (10, 42, (6, 4, 1, 1), 2, [(65, None, 18, (14, 11, 5, 3)), (46, 29, 18, (53, 22, 6, 5)), (80, 40, 18, (22, 13, 5, 4))]),
        (11, 17, (15, 10, 3, 2), 12, [(24, None, 8, (5, 4, 2, 1))]),
        (12, 8, (9, 6, 2, 1), 6, [(27, None, 14, (11, 8, 3, 2)), (49, 25, 14, (21, 14, 5, 2))]),
        (13, 45, (12, 7, 3, 1), 8, [(20, None, 12, (9, 8, 6, 1)), (59, None, 12, (8, 7, 5, 1))]),
        (14, 26, (21, 14, 6, 1), 10, [(14, 26, 10, (21, 14, 6, 1)), (28, None, 10, (10, 7, 3, 1)), (45, 36, 10, (14, 9, 4, 1)), (51, 47, 10, (18, 12, 5, 1))]),
        (20, None, (9, 8, 6, 1), 12, [(17, None, 8, (12, 8, 3, 1)), (72, None, 8, (7, 5, 2, 1))]),
        (21, None, (2, 1, 1, 1), 2, [(30, 39, 18, (20, 8, 7, 5)), (86, None, 18, (9, 7, 5, 4))]),
        (22, None, (6, 5, 3, 1), 10, [(22, None, 10, (6, 5, 3, 1))]),
        (24, None, (5, 4, 2, 1), 8, [(11, 18, 12, (15, 10, 3, 2))]),
        (25, None, (4, 3, 1, 1), 8, [(43, 46, 12, (18, 11, 4, 3)), (48, 48, 12, (24, 16, 5, 3)), (88, None, 12, "(11,9.5,2)")]),
        (26, None, (9, 5, 4, 2), 14, [(6, 2, 6, (5, 2, 2, 1))]),
        (27, None, (11, 8, 3, 2), 14, [(12, 8, 6, (9, 6, 2, 1))]),
        (28, None, (10, 7, 3, 1), 10, [(14, 26, 10, (21, 14, 6, 1)), (28, None, 10, (10, 7, 3, 1)), (45, 36, 10, (14, 9, 4, 1)), (51, 47, 10, (18, 12, 5, 1))]),
        (30, 39, (20, 8, 7, 5), 18, [(21, None, 2, (2, 1, 1, 1))]),
        (32, 4, (7, 3, 2, 2), 10, [(10, 42, 10, (7, 3, 2, 2))]),
        (34, 16, (15, 7, 6, 2), 14, [(6, 2, 6, (5, 2, 2, 1))]),
        (35, 35, (14, 7, 4, 3), 16, [(66, None, 4, (3, 2, 1, 1))]),
        (37, 31, (8, 4, 3, 1), 9, [(58, None, 11, (6, 5, 4, 1))]),
        (38, 17, (15, 8, 6, 1), 11, [(50, 19, 9, (15, 10, 4, 1)), (82, 11, 9, (11, 7, 3, 1))]),
        (39, 7, (9, 5, 3, 1), 9, [(60, None, 11, (7, 6, 4, 1))]),
        (40, 5, (7, 4, 2, 1), 7, [(81, 14, 13, (13, 8, 3, 2))]),
    ],
    10: [
        (42, 3, (5, 3, 1, 1), 3, [(68, None, 17, (13, 10, 4, 3)), (83, 28, 17, (27, 18, 5, 4)), (92, 23, 17, (19, 11, 5, 3))]),
        (43, 46, (18, 11, 4, 3), 16, [(25, None, 4, (4, 3, 1, 1))]),
        (45, 36, (14, 9, 4, 1), 10, [(14, 26, 10, (21, 14, 6, 1)), (28, None, 10, (10, 7, 3, 1)), (45, 36, 10, (14, 9, 4, 1)), (51, 47, 10, (18, 12, 5, 1))]),
        (46, 29, (33, 22, 6, 5), 18, [(10, 42, 2, (6, 4, 1, 1))]),
        (48, 48, (24, 16, 5, 3), 16, [(25, None, 4, (4, 3, 1, 1))]),
        (49, 25, (21, 14, 5, 2), 14, [(12, 8, 6, (9, 6, 2, 1))]),
        (50, 19, (15, 10, 4, 1), 9, [(38, 17, 11, (15, 8, 6, 1)), (77, 13, 11, (13, 7, 5, 1))]),
        (51, 47, (18, 12, 5, 1), 10, [(14, 26, 10, (21, 12, 6, 1)), (28, None, 10, (10, 7, 3, 1)), (45, 36, 10, (14, 9, 4, 1)), (51, 47, 10, (18, 12, 5, 1))]),
        (52, None, (12, 9, 8, 7), 19, [(5, None, 1, (3, 1, 1, 1))]),
        (56, None, (11, 8, 6, 5), 19, [(1, None, 1, (1, 1, 1, 1))]),
        (58, None, (6, 5, 4, 1), 11, [(37, 31, 9, (8, 4, 3, 1))]),
        (59, None, (8, 7, 5, 1), 12, [(13, 45, 8, (12, 8, 3, 1)), (72, None, 8, (7, 5, 2, 1))]),
        (60, None, (7, 6, 4, 1), 11, [(39, 7, 9, "(9,5,3.1)")]),
        (64, None, (10, 7, 4, 3), 17, [(7, 30, 3, (4, 2, 1, 1))]),
        (65, None, (14, 11, 5, 3), 17, [(10, 42, 3, (6, 4, 1, 1))]),
        (66, None, (3, 2, 1, 1), 4, [(35, 35, 16, (14, 7, 4, 3))]),
        (68, None, (13, 10, 4, 3), 17, [(42, 3, 3, (5, 3, 1, 1))]),
        (71, None, (7, 4, 3, 1), 10, [(9, 34, 10, (10, 5, 4, 1)), (71, None, 10, (7, 4, 3, 1))]),
        (72, None, (7, 5, 2, 1), 8, [(20, None, 12, (9, 8, 6, 1)), (59, None, 12, (8, 7, 5, 1))]),
        (73, 27, (25, 10, 8, 7), 19, [(1, None, 1, (1, 1, 1, 1))]),
        (76, 12, (13, 6, 5, 2), 14, [(6, 2, 6, (5, 2, 2, 1))]),
        (77, 13, (13, 7, 5, 1), 11, [(50, 19, 9, (15, 10, 4, 1)), (82, 11, 9, (11, 7, 3, 1))]),
        (78, 10, (11, 6, 4, 1), 10, [(10, 42, 10, (11, 6, 4, 1))]),
        (80, 40, (22, 13, 5, 4), 18, [(10, 42, 2, (6, 4, 1, 1))]),
        (81, 14, (13, 8, 3, 2), 13, [(40, 5, 7, (7, 4, 2, 1))]),
        (82, 11, (11, 7, 3, 1), 9, [(38, 17, 11, (15, 8, 6, 1)), (77, 13, 11, (13, 7, 5, 1))]),
        (83, 28, (27, 18, 5, 4), 17, [(42, 3, 3, (5, 3, 1, 1))]),
        (86, None, (9, 7, 5, 4), 18, [(21, None, 2, (2, 1, 1, 1))]),
        (87, None, (5, 4, 3, 1), 10, [(87, None, 10, "(1,3,4,5)")]),
        (92, 23, (19, 11, 5, 3), 17, [(42, 3, 3, (5, 3, 1, 1))]),
    ],
}

# (row Y#, partner Y# as printed or None for the row itself) -> correction
MIRROR_ERRATA = {
    (8, 64): {"weight": (10, 7, 4, 3), "printed": "(10,7,4,5)"},
    (10, 46): {"weight": (33, 22, 6, 5), "printed": "(53,22,6,5)"},
    (25, 88): {"weight": (11, 9, 5, 2), "printed": "(11,9.5,2)"},
    (51, 14): {"weight": (21, 14, 6, 1), "printed": "(21,12,6,1)"},
    (60, 39): {"weight": (9, 5, 3, 1), "printed": "(9,5,3.1)"},
    (87, 87): {"weight": (5, 4, 3, 1), "printed": "(1,3,4,5)"},
    (13, None): {"weight": (12, 8, 3, 1), "printed": "(12,7,3,1)"},
    (11, None): {"borcea_id": 18, "printed": "B#17"},
    (20, 17): {"id": 13, "borcea_id": 45, "printed": "Y#17"},
    (32, 10): {"id": 32, "borcea_id": 4, "printed": "Y#10, B#42"},
    (78, 10): {"id": 78, "borcea_id": 10, "printed": "Y#10, B#42"},
}

LETTERS = "xyzw"


def monomials(F):
    return [{"coef": c, "exp": list(e)} for c, e in zip(F.coefficients, F.exponents)]


def borcea_equation(w, f):
    g = parse_polynomial(f, w)
    exps = [(2, 0, 0, 0)] + list(g.exponents)
    coefs = [1] + [-c for c in g.coefficients]
    return WPolynomial(Weight(w), tuple(coefs), tuple(exps))


def record(yid, bid, w, F, var, r, a, table, extra=None):
    rec = {
        "id": yid,
        "borcea_id": bid,
        "weight": list(w),
        "degree": sum(w),
        "monomials": monomials(F) if F is not None else [],
        "involution_var": var,
        "expected": {"r": r, "a": a} if r is not None else None,
        "table": table,
        "mirror_ids": None,
    }
    rec.update(extra or {})
    return rec


def build():
    recs = {}
    for table, rows in BORCEA.items():
        for yid, bid, w, f, r, a, removed in rows:
            F = borcea_equation(w, QUASI_SMOOTH_FIX.get(yid, f))
            extra = {"terms_removed": removed, "delsarte": F.is_delsarte}
            if yid in QUASI_SMOOTH_FIX:
                extra["printed_monomials"] = monomials(borcea_equation(w, f))
                extra["delsarte"] = True
                extra["errata"] = "printed equation is not quasi-smooth; removed term y^2z^3 restored"
            if yid in (90, 91, 93):
                extra["also_in_tables"] = [7]
            recs[yid] = record(yid, bid, w, F, 0, r, a, table, extra)
    for table, rows in NON_BORCEA.items():
        for yid, w, f, r, a, removed in rows:
            F = parse_polynomial(f, w)
            recs[yid] = record(yid, None, w, F, 0, r, a, table, {"terms_removed": removed, "delsarte": True})
    for yid, w, f, r, a, removed, var in TABLE6:
        F = parse_polynomial(f, w)
        recs[yid] = record(yid, None, w, F, var, r, a, 6, {"terms_removed": removed, "delsarte": True})
    for yid, w, f, r, a in TABLE7:
        if yid in recs:
            continue
        F = parse_polynomial(f, w)
        recs[yid] = record(yid, None, w, F, 0, r, a, 7, {"delsarte": False})
    for yid, w, f in NO_INVOLUTION:
        F = parse_polynomial(f, w)
        recs[yid] = record(yid, None, w, F, None, None, None, 0, {"delsarte": False})

    weights = {yid: tuple(rec["weight"]) for yid, rec in recs.items()}
    mirror_rows = []
    for table, rows in MIRROR.items():
        for yid, bid, w, rank, partners in rows:
            row = {"id": yid, "table": table, "rank": rank, "printed_borcea_id": bid,
                   "printed_weight": list(w), "partners": [], "errata": []}
            fix = MIRROR_ERRATA.get((yid, None))
            if fix:
                row["errata"].append(dict(fix, weight=list(fix.get("weight", w))))
            for pid, pbid, prank, pw in partners:
                entry = {"id": pid, "borcea_id": pbid, "rank": prank,
                         "weight": list(pw) if isinstance(pw, tuple) else None}
                fix = MIRROR_ERRATA.get((yid, pid))
                if fix:
                    entry["erratum"] = {"printed": fix["printed"]}
                    if "weight" in fix:
                        entry["weight"] = list(fix["weight"])
                    if "id" in fix:
                        entry["id"] = fix["id"]
                        entry["borcea_id"] = fix["borcea_id"]
                row["partners"].append(entry)
            mirror_rows.append(row)
            recs[yid]["mirror_ids"] = [p["id"] for p in row["partners"]]

    extra = []
    for yid, f, letter, r, a in TABLE8:
        F = parse_polynomial(f, weights[yid])
        extra.append({"id": yid, "monomials": monomials(F), "involution_var": LETTERS.index(letter),
                      "expected": {"r": r, "a": a}})

    return {
        "version": "1",
        "records": [recs[k] for k in sorted(recs)],
        "extra_involutions": extra,
        "mirror_table": mirror_rows,
    }


if __name__ == "__main__":
    out = Path(__file__).resolve().parents[1] / "src" / "bvatlas" / "data" / "k3_atlas.json"
    out.write_text(json.dumps(build(), indent=1) + "\n")
    print(f"wrote {out}")
