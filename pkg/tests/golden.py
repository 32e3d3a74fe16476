"""Frozen reference tables for the three worked matrix examples.

These literals are the source of truth the generators are checked against;
they were transcribed independently of the closed forms in the package.
"""

GRID_5X2K_K6 = (
    (1, 7, 8, 9, 10, 11, 2, 3, 4, 5, 6, 12),
    (36, 37, 38, 39, 40, 41, 43, 44, 45, 46, 47, 48),
    (42, 35, 33, 31, 29, 27, 34, 32, 30, 28, 26, 19),
    (60, 54, 53, 52, 51, 50, 59, 58, 57, 56, 55, 49),
    (25, 24, 23, 22, 21, 20, 18, 17, 16, 15, 14, 13),
)

# evaluated by hand from the symbolic table at k=1 (columns, top to bottom)
COLUMNS_5X2K_K1 = ((1, 6, 7, 10, 5), (2, 8, 4, 9, 3))

SEQUENCES_N6 = (
    (1, 97, 83, 38, 108, 36, 85, 13, 84, 37, 24, 120),
    (2, 98, 81, 40, 107, 35, 86, 14, 82, 39, 23, 119),
    (3, 99, 79, 42, 106, 34, 87, 15, 80, 41, 22, 118),
    (4, 100, 77, 44, 105, 33, 88, 16, 78, 43, 21, 117),
    (5, 101, 75, 46, 104, 32, 89, 17, 76, 45, 20, 116),
    (6, 102, 73, 48, 103, 31, 90, 18, 74, 47, 19, 115),
    (25, 97, 60, 61, 108, 12, 109, 13, 59, 62, 24, 96),
    (26, 98, 58, 63, 107, 11, 110, 14, 57, 64, 23, 95),
    (27, 99, 56, 65, 106, 10, 111, 15, 55, 66, 22, 94),
    (28, 100, 54, 67, 105, 9, 112, 16, 53, 68, 21, 93),
    (29, 101, 52, 69, 104, 8, 113, 17, 51, 70, 20, 92),
    (30, 102, 50, 71, 103, 7, 114, 18, 49, 72, 19, 91),
)

GRID_KX10_K4 = (
    (1, 24, 17, 9, 32, 8, 33, 40, 28, 13),
    (5, 25, 16, 10, 31, 4, 37, 36, 23, 18),
    (6, 26, 15, 11, 30, 3, 38, 35, 21, 20),
    (7, 27, 14, 12, 29, 2, 39, 34, 19, 22),
)

# evaluated by hand from the symbolic k x 10 table at k=1
ROW_KX10_K1 = (1, 6, 5, 3, 8, 2, 9, 10, 7, 4)
