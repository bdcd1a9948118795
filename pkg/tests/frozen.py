"""Reference values fixed before the implementation was written.

Each value was obtained by hand or by a small computation independent of
the package (plain binomials, direct enumeration) and is never recomputed
through the library.
"""

from fractions import Fraction

# Worked pair v = (1, 0, -3), w = (1, 6, 3).
WORKED_V = (1, 0, -3)
WORKED_W = (1, 6, 3)
WORKED_D_V = 3
WORKED_D_W = 33
WORKED_DELTA = 3
WORKED_SLOPE = (Fraction(2), Fraction(-6), Fraction(-1))
WORKED_SUMMAND_RANK = 1
WORKED_MULTIPLICITIES = {1: 25, 3: 22}
WORKED_COUNTS = {1: 1, 3: 80}
WORKED_TOTAL = 1785
WORKED_TRACES = {1: 1785, 3: 3}
WORKED_INDEX_PAIR = (1, 2)
WORKED_THETA_CLASS = (18, -6, -3)

# Verlinde numbers d_v^2/(d_v+d_w) C(d_v+d_w, d_v).
VERLINDE_NUMBERS = {(1, 1): 1, (1, 3): 1, (3, 33): 1785, (3, 6): 84, (3, 3): 30, (5, 5): 630}

# Degree-zero minus example v = (3, 0, -1), w = (3, 3, 1).
MINUS_V = (3, 0, -1)
MINUS_W = (3, 3, 1)
MINUS_MULTIPLICITIES = {1: 4, 3: 1}
MINUS_TOTAL = 84

# Jordan symbols {lam/h}.
JORDAN = {(0, 1): Fraction(1), (5, 1): Fraction(1), (3, 3): Fraction(80, 81), (1, 3): Fraction(-1, 81),
          (0, 9): Fraction(80, 81), (3, 9): Fraction(-1, 81), (1, 9): Fraction(0),
          (15, 15): Fraction(80, 81) * Fraction(624, 625), (3, 15): Fraction(80, 81) * Fraction(-1, 625)}

# Character sums over order-delta elements of (Z/3)^4.
CHARSUM_3 = {(1, 1): 1, (1, 3): 80, (3, 1): 1, (3, 3): -1}

# Semihomogeneous invariants.
TRIPLE_A = (Fraction(1, 3), Fraction(1, 5), Fraction(0))
TRIPLE_A_DATA = dict(det=Fraction(1, 15), rank=15, euler=1, w_rank=225, w_euler=1, sigma=50625, k=1, index=2)
TRIPLE_B = (Fraction(2), Fraction(-6), Fraction(-1))
TRIPLE_B_DATA = dict(det=Fraction(-11), rank=1, euler=-11, w_rank=1, w_euler=121, sigma=1, k=14641, index=0)
TRIPLE_B_INVERSE = (Fraction(-2, 11), Fraction(6, 11), Fraction(-1, 11))

# Pullback along Phi_(5,3,0).
PHI_530_R = ((0, -25, 0), (-9, 0, 0), (0, 0, -15))

# Congruence pair example.
A1_EXAMPLE = ((2, 1, 3, 5), (2, 1))
