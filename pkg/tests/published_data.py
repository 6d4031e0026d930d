"""Published reference data used by the regression and acceptance suites:
the weight-5 real coefficient matrix, the weight-6 imaginary matrix with its
reduced echelon form, the relation rows they yield, and the final weight-5
zeta relations, all with their original row/column orderings."""

from fractions import Fraction

from lsizeta.algebra import LsiMonomial
from lsizeta.indices import Index


def mono(ks, ls, pi=0):
    return LsiMonomial(pi, tuple(ks), tuple(ls))


def fr(rows):
    return [[Fraction(x) for x in row] for row in rows]


W5_COLS = [mono((3, 2), (0, 0)), mono((2, 3), (0, 0)), mono((5,), (1,)),
           mono((5,), (3,)), mono((4,), (0,), 1), mono((4,), (2,), 1),
           mono((3,), (1,), 2), mono((2,), (0,), 3)]
W5_ROWS = [Index((5,)), Index((1, 4)), Index((2, 3)), Index((3, 2))]
W5_MATRIX = fr([
    ["0", "0", "-1/12", "3/16", "1/12", "-1/16", "1/16", "-1/48"],
    ["0", "0", "-1/6", "3/8", "0", "-1/2", "1/8", "0"],
    ["0", "1/2", "1/2", "-7/8", "0", "5/4", "-5/12", "7/216"],
    ["0", "-3/2", "-1/2", "3/8", "0", "-3/4", "1/4", "-1/72"],
])
W5_REDUCED = fr([
    ["0", "0", "-1/12", "3/16", "0", "-1/4", "-1/16", "1/24"],
    ["0", "0", "-1/6", "3/8", "0", "-1/2", "1/8", "0"],
    ["0", "0", "11/24", "-33/32", "0", "11/8", "-13/32", "1/48"],
    ["0", "0", "-3/8", "27/32", "0", "-9/8", "7/32", "1/48"],
])
W5_IM_RELATION_ROWS = fr([
    ["0", "1", "1/12", "5/16", "0", "-1/4", "-1/48", "5/216"],
    ["0", "0", "0", "0", "1", "9/4", "3/2", "-3/4"],
])

W6_COLS = [mono((2, 2, 2), (0, 0, 0)), mono((4, 2), (1, 0)), mono((3, 3), (0, 1)),
           mono((3, 3), (1, 0)), mono((2, 4), (0, 1)), mono((6,), (0,)),
           mono((6,), (2,)), mono((6,), (4,)), mono((3, 2), (0, 0), 1),
           mono((2, 3), (0, 0), 1), mono((5,), (1,), 1), mono((5,), (3,), 1),
           mono((4,), (0,), 2), mono((4,), (2,), 2), mono((3,), (1,), 3),
           mono((2,), (0,), 4)]
W6_ROWS = [Index((6,)), Index((1, 5)), Index((2, 4)), Index((3, 3)),
           Index((4, 2)), Index((1, 3, 2))]
W6_MATRIX = fr([
    ["0", "0", "0", "0", "0", "1/120", "-1/48", "-5/128", "0", "0", "1/24",
     "-1/96", "-1/48", "1/64", "-1/96", "1/384"],
    ["0", "0", "0", "0", "0", "0", "-1/12", "-1/16", "0", "0", "1/12",
     "1/48", "0", "1/16", "-1/48", "0"],
    ["0", "0", "0", "0", "1/4", "0", "7/24", "11/64", "0", "-1/4", "-1/4",
     "-3/16", "0", "-1/24", "1/24", "-23/5184"],
    ["0", "0", "3/4", "3/4", "-3/4", "0", "-3/8", "-9/64", "-1/4", "1/2",
     "1/4", "7/16", "0", "-1/4", "7/144", "-5/1728"],
    ["0", "0", "-3/2", "-3/2", "1/2", "0", "1/4", "3/32", "1/2", "0",
     "-1/6", "-7/24", "1/36", "11/48", "-1/18", "7/2592"],
    ["0", "0", "0", "0", "-1", "0", "-1/4", "0", "0", "0", "0", "5/24",
     "0", "-13/48", "1/12", "-7/1296"],
])
W6_RREF = fr([
    ["0", "0", "1", "1", "0", "0", "0", "0", "-1/3", "0", "1/36", "5/48",
     "0", "-1/12", "25/432", "-1/72"],
    ["0", "0", "0", "0", "1", "0", "0", "-3/16", "0", "0", "1/4", "-7/48",
     "0", "11/24", "-7/48", "7/1296"],
    ["0", "0", "0", "0", "0", "1", "0", "-45/16", "0", "0", "5/2", "-15/8",
     "0", "45/8", "25/8", "-25/16"],
    ["0", "0", "0", "0", "0", "0", "1", "3/4", "0", "0", "-1", "-1/4",
     "0", "-3/4", "1/4", "0"],
    ["0", "0", "0", "0", "0", "0", "0", "0", "0", "1", "1/12", "5/16",
     "0", "-1/4", "-1/48", "5/216"],
    ["0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "1",
     "9/4", "3/2", "-3/4"],
])

W4_IM_COLS = [mono((4,), (0,)), mono((4,), (2,)), mono((3,), (1,), 1),
              mono((2,), (0,), 2)]
W4_IM_ROW = fr([["1/6", "3/8", "1/4", "-1/8"]])[0]

# final weight-5 relations over (zeta(5), zeta(1,4), zeta(2,3), zeta(3,2))
W5_RELATION_VECTORS = fr([
    ["-1/2", "3", "1", "0"],
    ["-1/2", "-2", "0", "1"],
])

# the l_k table: weight -> published rank bound
LK_TABLE = {2: 1, 3: 1, 4: 1, 5: 2, 6: 2, 7: 4, 8: 4}
LK_STRETCH = {9: 9, 10: 9}
