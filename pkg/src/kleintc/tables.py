"""Reference tables for the one-vertex Klein bottle square: cell lists,
degree-4 coboundary matrix, and the edge-cochain value table."""

# Cell representative lists, by dimension.  Each entry is a tuple of
# representatives; a representative is a tuple of two-character vertex-pair
# tokens where "v" stands for the (unique) vertex in a degenerate factor.

CELLS_0 = ((("vv",),),)

CELLS_1 = (
    (('0v', '1v'), ('3v', '5v')),
    (('0v', '2v'), ('4v', '5v')),
    (('1v', '2v'), ('3v', '4v')),
    (('v0', 'v1'), ('v3', 'v5')),
    (('v0', 'v2'), ('v4', 'v5')),
    (('v1', 'v2'), ('v3', 'v4')),
    (('00', '11'), ('30', '51'), ('33', '55'), ('03', '15')),
    (('00', '12'), ('30', '52'), ('34', '55'), ('04', '15')),
    (('01', '12'), ('31', '52'), ('33', '54'), ('03', '14')),
    (('00', '21'), ('40', '51'), ('43', '55'), ('03', '25')),
    (('00', '22'), ('40', '52'), ('44', '55'), ('04', '25')),
    (('01', '22'), ('41', '52'), ('43', '54'), ('03', '24')),
    (('10', '21'), ('30', '41'), ('33', '45'), ('13', '25')),
    (('10', '22'), ('30', '42'), ('34', '45'), ('14', '25')),
    (('11', '22'), ('31', '42'), ('33', '44'), ('13', '24')),
)

CELLS_2 = (
    (('0v', '1v', '2v'),),
    (('3v', '4v', '5v'),),
    (('v0', 'v1', 'v2'),),
    (('v3', 'v4', 'v5'),),
    (('00', '10', '11'), ('30', '50', '51'), ('03', '13', '15'), ('33', '53', '55')),
    (('00', '10', '12'), ('30', '50', '52'), ('04', '14', '15'), ('34', '54', '55')),
    (('01', '11', '12'), ('31', '51', '52'), ('03', '13', '14'), ('33', '53', '54')),
    (('00', '01', '11'), ('30', '31', '51'), ('03', '05', '15'), ('33', '35', '55')),
    (('00', '02', '12'), ('30', '32', '52'), ('04', '05', '15'), ('34', '35', '55')),
    (('01', '02', '12'), ('31', '32', '52'), ('03', '04', '14'), ('33', '34', '54')),
    (('00', '20', '21'), ('40', '50', '51'), ('03', '23', '25'), ('43', '53', '55')),
    (('00', '20', '22'), ('40', '50', '52'), ('04', '24', '25'), ('44', '54', '55')),
    (('01', '21', '22'), ('41', '51', '52'), ('03', '23', '24'), ('43', '53', '54')),
    (('00', '01', '21'), ('40', '41', '51'), ('03', '05', '25'), ('43', '45', '55')),
    (('00', '02', '22'), ('40', '42', '52'), ('04', '05', '25'), ('44', '45', '55')),
    (('01', '02', '22'), ('41', '42', '52'), ('03', '04', '24'), ('43', '44', '54')),
    (('10', '20', '21'), ('30', '40', '41'), ('13', '23', '25'), ('33', '43', '45')),
    (('10', '20', '22'), ('30', '40', '42'), ('14', '24', '25'), ('34', '44', '45')),
    (('11', '21', '22'), ('31', '41', '42'), ('13', '23', '24'), ('33', '43', '44')),
    (('10', '11', '21'), ('30', '31', '41'), ('13', '15', '25'), ('33', '35', '45')),
    (('10', '12', '22'), ('30', '32', '42'), ('14', '15', '25'), ('34', '35', '45')),
    (('11', '12', '22'), ('31', '32', '42'), ('13', '14', '24'), ('33', '34', '44')),
    (('00', '11', '22'),),
    (('30', '41', '52'),),
    (('03', '14', '25'),),
    (('33', '44', '55'),),
    (('00', '01', '22'), ('40', '41', '52')),
    (('30', '31', '52'), ('00', '01', '12')),
    (('03', '04', '25'), ('43', '44', '55')),
    (('33', '34', '55'), ('03', '04', '15')),
    (('00', '10', '22'), ('04', '14', '25')),
    (('30', '40', '52'), ('34', '44', '55')),
    (('03', '13', '25'), ('00', '10', '21')),
    (('33', '43', '55'), ('30', '40', '51')),
    (('00', '21', '22'), ('40', '51', '52')),
    (('03', '24', '25'), ('43', '54', '55')),
    (('30', '51', '52'), ('00', '11', '12')),
    (('33', '54', '55'), ('03', '14', '15')),
    (('00', '12', '22'), ('04', '15', '25')),
    (('30', '42', '52'), ('34', '45', '55')),
    (('03', '15', '25'), ('00', '11', '21')),
    (('33', '45', '55'), ('30', '41', '51')),
    (('01', '12', '22'), ('03', '14', '24')),
    (('31', '42', '52'), ('33', '44', '54')),
    (('03', '13', '24'), ('01', '11', '22')),
    (('33', '43', '54'), ('31', '41', '52')),
    (('10', '21', '22'), ('30', '41', '42')),
    (('13', '24', '25'), ('33', '44', '45')),
    (('10', '11', '22'), ('30', '31', '42')),
    (('13', '14', '25'), ('33', '34', '45')),
)

CELLS_3 = (
    (('00', '10', '21', '22'),),
    (('00', '11', '21', '22'),),
    (('00', '10', '11', '22'),),
    (('00', '11', '12', '22'),),
    (('00', '01', '11', '22'),),
    (('00', '01', '12', '22'),),
    (('30', '40', '51', '52'),),
    (('30', '41', '51', '52'),),
    (('30', '40', '41', '52'),),
    (('30', '41', '42', '52'),),
    (('30', '31', '41', '52'),),
    (('30', '31', '42', '52'),),
    (('03', '13', '24', '25'),),
    (('03', '14', '24', '25'),),
    (('03', '13', '14', '25'),),
    (('03', '14', '15', '25'),),
    (('03', '04', '14', '25'),),
    (('03', '04', '15', '25'),),
    (('33', '43', '54', '55'),),
    (('33', '44', '54', '55'),),
    (('33', '43', '44', '55'),),
    (('33', '44', '45', '55'),),
    (('33', '34', '44', '55'),),
    (('33', '34', '45', '55'),),
    (('00', '10', '20', '21'), ('03', '13', '23', '25')),
    (('00', '10', '11', '21'), ('03', '13', '15', '25')),
    (('00', '01', '11', '21'), ('03', '05', '15', '25')),
    (('00', '10', '20', '22'), ('04', '14', '24', '25')),
    (('00', '10', '12', '22'), ('04', '14', '15', '25')),
    (('00', '02', '12', '22'), ('04', '05', '15', '25')),
    (('01', '11', '21', '22'), ('03', '13', '23', '24')),
    (('01', '11', '12', '22'), ('03', '13', '14', '24')),
    (('01', '02', '12', '22'), ('03', '04', '14', '24')),
    (('00', '01', '02', '12'), ('30', '31', '32', '52')),
    (('00', '01', '11', '12'), ('30', '31', '51', '52')),
    (('00', '10', '11', '12'), ('30', '50', '51', '52')),
    (('00', '01', '02', '22'), ('40', '41', '42', '52')),
    (('00', '01', '21', '22'), ('40', '41', '51', '52')),
    (('00', '20', '21', '22'), ('40', '50', '51', '52')),
    (('10', '11', '12', '22'), ('30', '31', '32', '42')),
    (('10', '11', '21', '22'), ('30', '31', '41', '42')),
    (('10', '20', '21', '22'), ('30', '40', '41', '42')),
    (('30', '40', '50', '51'), ('33', '43', '53', '55')),
    (('30', '40', '41', '51'), ('33', '43', '45', '55')),
    (('30', '31', '41', '51'), ('33', '35', '45', '55')),
    (('30', '40', '50', '52'), ('34', '44', '54', '55')),
    (('30', '40', '42', '52'), ('34', '44', '45', '55')),
    (('30', '32', '42', '52'), ('34', '35', '45', '55')),
    (('31', '41', '51', '52'), ('33', '43', '53', '54')),
    (('31', '41', '42', '52'), ('33', '43', '44', '54')),
    (('31', '32', '42', '52'), ('33', '34', '44', '54')),
    (('03', '04', '05', '15'), ('33', '34', '35', '55')),
    (('03', '04', '14', '15'), ('33', '34', '54', '55')),
    (('03', '13', '14', '15'), ('33', '53', '54', '55')),
    (('03', '04', '05', '25'), ('43', '44', '45', '55')),
    (('03', '04', '24', '25'), ('43', '44', '54', '55')),
    (('03', '23', '24', '25'), ('43', '53', '54', '55')),
    (('13', '14', '15', '25'), ('33', '34', '35', '45')),
    (('13', '14', '24', '25'), ('33', '34', '44', '45')),
    (('13', '23', '24', '25'), ('33', '43', '44', '45')),
)

CELLS_4 = (
    (('00', '10', '20', '21', '22'),),
    (('00', '10', '11', '21', '22'),),
    (('00', '10', '11', '12', '22'),),
    (('00', '01', '11', '21', '22'),),
    (('00', '01', '11', '12', '22'),),
    (('00', '01', '02', '12', '22'),),
    (('30', '40', '50', '51', '52'),),
    (('30', '40', '41', '51', '52'),),
    (('30', '40', '41', '42', '52'),),
    (('30', '31', '41', '51', '52'),),
    (('30', '31', '41', '42', '52'),),
    (('30', '31', '32', '42', '52'),),
    (('03', '13', '23', '24', '25'),),
    (('03', '13', '14', '24', '25'),),
    (('03', '13', '14', '15', '25'),),
    (('03', '04', '14', '24', '25'),),
    (('03', '04', '14', '15', '25'),),
    (('03', '04', '05', '15', '25'),),
    (('33', '43', '53', '54', '55'),),
    (('33', '43', '44', '54', '55'),),
    (('33', '43', '44', '45', '55'),),
    (('33', '34', '44', '54', '55'),),
    (('33', '34', '44', '45', '55'),),
    (('33', '34', '35', '45', '55'),),
)

# Degree-4 coboundary matrix: MATRIX[i][j] for 3-cell row i (1..60) and
# 4-cell column j (1..24); entries are "1", "-1", "b", "b'", "c", "c'".
MATRIX = {
    1: {1: '1', 2: '1'},
    2: {2: '-1', 4: '-1'},
    3: {2: '-1', 3: '-1'},
    4: {3: '-1', 5: '-1'},
    5: {4: '-1', 5: '-1'},
    6: {5: '1', 6: '1'},
    7: {7: '1', 8: '1'},
    8: {8: '-1', 10: '-1'},
    9: {8: '-1', 9: '-1'},
    10: {9: '-1', 11: '-1'},
    11: {10: '-1', 11: '-1'},
    12: {11: '1', 12: '1'},
    13: {13: '1', 14: '1'},
    14: {14: '-1', 16: '-1'},
    15: {14: '-1', 15: '-1'},
    16: {15: '-1', 17: '-1'},
    17: {16: '-1', 17: '-1'},
    18: {17: '1', 18: '1'},
    19: {19: '1', 20: '1'},
    20: {20: '-1', 22: '-1'},
    21: {20: '-1', 21: '-1'},
    22: {21: '-1', 23: '-1'},
    23: {22: '-1', 23: '-1'},
    24: {23: '1', 24: '1'},
    25: {1: '1', 13: '-1'},
    26: {2: '1', 15: '1'},
    27: {4: '1', 18: '-1'},
    28: {1: '-1', 16: "b'"},
    29: {3: '1', 17: "b'"},
    30: {6: '-1', 18: "b'"},
    31: {4: "c'", 13: '1'},
    32: {5: "c'", 14: '1'},
    33: {6: "c'", 16: '1'},
    34: {6: '1', 12: '-1'},
    35: {5: '1', 10: '1'},
    36: {3: '1', 7: '-1'},
    37: {6: '-1', 9: 'b'},
    38: {4: '1', 8: 'b'},
    39: {1: '-1', 7: 'b'},
    40: {3: 'c', 12: '1'},
    41: {2: 'c', 11: '1'},
    42: {1: 'c', 9: '1'},
    43: {7: '1', 19: '-1'},
    44: {8: '1', 21: '1'},
    45: {10: '1', 24: '-1'},
    46: {7: '-1', 22: "b'"},
    47: {9: '1', 23: "b'"},
    48: {12: '-1', 24: "b'"},
    49: {10: "c'", 19: '1'},
    50: {11: "c'", 20: '1'},
    51: {12: "c'", 22: '1'},
    52: {18: '1', 24: '-1'},
    53: {17: '1', 22: '1'},
    54: {15: '1', 19: '-1'},
    55: {18: '-1', 21: 'b'},
    56: {16: '1', 20: 'b'},
    57: {13: '-1', 19: 'b'},
    58: {15: 'c', 24: '1'},
    59: {14: 'c', 23: '1'},
    60: {13: 'c', 21: '1'},
}

# Values of the comparison 1-cochain on the fifteen 1-cells, as basis indices
# (m, n) of the augmentation-ideal basis a^m b^n - 1; None marks the zero value.
F_TABLE = (
    (1, -1), (1, 0), (0, 1), (-1, -1), (-1, 0), (0, -1), None, (0, 1),
    (1, -2), (0, -1), None, (1, -1), (-1, -2), (-1, -1), None,
)


def epsilon(j):
    """Sign attached to the j-th 4-cell (1-based): -1 iff j = 2 mod 3."""
    return -1 if j % 3 == 2 else 1
