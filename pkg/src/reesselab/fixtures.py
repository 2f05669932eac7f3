"""Frozen reference cases for the reproduction harness.

Five published counterexample scenarios and one full scan table, kept as
immutable inputs. Decimal strings are the digits as printed in the source
material; the reproduction checks them against exact rationals.
"""

from __future__ import annotations

from .keys import (
    OmegaFamily,
    PrivateKey,
    PublicKey,
    SystemParams,
    build_omega,
)

# Case 1: a rational whose convergent 2/13 violates the 1/(2*s**2) bound,
# showing the bound is sufficient but not necessary for convergents.
CASE1_ALPHA = (2039, 13001)
CASE1_RS = (2, 13)
CASE1_DIFF_STR = "0.002987935839"
CASE1_BOUND_STR = "0.002958579882"
CASE1_QUOTIENT_PREFIX = (0, 6, 2, 1)
CASE1_LAST_QUOTIENT = 3

# Cases 2 and 4 share one six-element key; the scans of (1,3,5) and
# (1,3,6) both fire although neither triple satisfies a lever relation.
CASE2_N = 6
CASE2_RHO = 17
CASE2_A = (11, 10, 3, 7, 17, 13)
CASE2_W = 17797
CASE2_F = (9, 6, 10, 5, 7, 8)
CASE2_M = 510931
CASE2_C = (113101, 79182, 175066, 433093, 501150, 389033)
CASE2_C_INV = (266775, 236469, 435654, 149312, 434038, 425203)
CASE2_Z = 186640
CASE2_QUOTIENT_PREFIX = (0, 2, 1, 2, 1, 4)
CASE2_HIT_U = 4
CASE2_HIT = (4, 11)
CASE2_DIFF_STR = "0.0016575801"
CASE2_BOUND_STR = "0.0041322314"
CASE2_TRUE_A5 = 17

CASE4_Z = 425865
CASE4_QUOTIENTS = (0, 1, 5, 159, 535)
CASE4_HIT_U = 2
CASE4_HIT = (5, 6)
CASE4_Q_NEXT = 955
CASE4_A_NEXT = 159
CASE4_DIFF_STR = "0.000174518"
CASE4_BOUND_STR = "0.0138889"
CASE4_MAX_A = 221
CASE4_DELTA_STR = "3.8729"
CASE4_DELTA_RATIO_ROUNDED = 15
CASE4_TRUE_A6 = 13

# Case 3: a twelve-element key (flattened from a grouped encoding, modulus
# taken as given) where a two-target scan pins the product A_6 * A_7 while
# the partial quotients show no jump at the hit.
CASE3_N = 12
CASE3_A = (23, 11, 17, 41, 29, 26, 15, 19, 37, 31, 7, 43)
CASE3_W = 1507351
CASE3_F = (6, 14, 9, 11, 12, 10, 8, 16, 5, 13, 15, 7)
CASE3_M = 2022169
CASE3_C = (
    572402, 1930240, 374715,
    25128, 265158, 350520,
    1674837, 1231458, 1448214,
    110225, 1198155, 757620,
)
CASE3_C6_C7_INV = (93176, 1591882)
CASE3_Z = 689616
CASE3_HIT = (133, 390)
CASE3_QUOTIENT_PREFIX = (0, 2, 1, 13, 1, 3)
CASE3_DIFF_STR = "2.235477262e-6"
CASE3_BOUND_STR = "3.287310979e-6"
CASE3_FACTOR_PAIRS = (
    (2, 195), (3, 130), (5, 78), (6, 65), (10, 39), (13, 30), (15, 26),
)
CASE3_FACTOR_BOUND = 43
CASE3_FACTOR_PAIRS_BOUNDED = ((10, 39), (13, 30), (15, 26))
CASE3_TRUE_A6_A7 = (26, 15)

# Case 5: a ten-element key whose full scan output is TABLE2_ROWS below.
CASE5_N = 10
CASE5_RHO = 43
CASE5_A = (437, 221, 77, 43, 37, 29, 41, 31, 15, 2)
CASE5_W = 944516391
CASE5_F = (11, 14, 13, 8, 10, 5, 9, 7, 12, 6)
CASE5_M = 13082761331670077
CASE5_A_PRODUCT = 13082761331670030
# C[5] is pinned by the transform and by the scan table; the source text
# shows a nine where the transform gives a zero (single-digit slip).
CASE5_C = (
    3534250731208421,
    12235924019299910,
    8726060645493642,
    10110020851673707,
    2328792308267710,
    8425476748083036,
    6187583147203887,
    10200412235916586,
    9359330740489342,
    5977236088006743,
)
CASE5_DELTA_PRINTED = 506
CASE5_MAX_A_PRINTED = 58642670

# The published scan table for case 5: (k, candidate value, (i, j) pairs),
# transcribed row by row including both orders of each symmetric pair.
TABLE2_ROWS = (
    (1, 187125, ((1, 1),)),
    (1, 121089, ((2, 1), (1, 2))),
    (1, 77, ((5, 3), (3, 5))),
    (1, 23, ((8, 6), (6, 8), (10, 10))),
    (1, 437, ((10, 6), (6, 10))),
    (2, 1251, ((1, 1),)),
    (2, 187125, ((2, 1), (1, 2))),
    (2, 121089, ((2, 2),)),
    (2, 17, ((8, 4), (6, 5), (5, 6), (10, 7), (4, 8), (7, 10))),
    (2, 221, ((10, 4), (7, 6), (6, 7), (8, 8), (4, 10))),
    (2, 77, ((9, 8), (8, 9))),
    (2, 4204, ((10, 10),)),
    (3, 187125, ((3, 1), (1, 3))),
    (3, 12, ((7, 1), (1, 7))),
    (3, 121089, ((3, 2), (2, 3))),
    (3, 77, ((6, 4), (4, 6), (10, 8), (8, 10))),
    (3, 11, ((10, 4), (7, 6), (6, 7), (8, 8), (4, 10))),
    (3, 2113, ((8, 7), (7, 8))),
    (3, 769, ((9, 8), (8, 9))),
    (4, 187125, ((4, 1), (1, 4))),
    (4, 121089, ((4, 2), (2, 4))),
    (4, 76, ((10, 6), (6, 10))),
    (4, 56, ((10, 9), (9, 10))),
    (5, 187125, ((5, 1), (1, 5))),
    (5, 630269, ((6, 1), (1, 6))),
    (5, 121089, ((5, 2), (2, 5))),
    (5, 41, ((8, 2), (2, 8))),
    (5, 97, ((4, 3), (3, 4))),
    (5, 37, ((6, 6), (10, 6), (6, 10))),
    (6, 187125, ((6, 1), (1, 6))),
    (6, 121089, ((6, 2), (2, 6))),
    (7, 187125, ((7, 1), (1, 7))),
    (7, 121089, ((7, 2), (2, 7))),
    (7, 3, ((9, 3), (3, 9))),
    (8, 187125, ((8, 1), (1, 8))),
    (8, 34945619, ((6, 2), (2, 6))),
    (8, 121089, ((8, 2), (2, 8))),
    (9, 187125, ((9, 1), (1, 9))),
    (9, 121089, ((9, 2), (2, 9))),
    (9, 5, ((6, 4), (4, 6), (10, 8), (8, 10))),
    (9, 15, ((8, 6), (6, 8), (10, 10))),
    (10, 259970, ((4, 1), (1, 4))),
    (10, 187125, ((10, 1), (1, 10))),
    (10, 121089, ((10, 2), (2, 10))),
    (10, 7629, ((8, 3), (3, 8))),
)

# Spot groups whose tuple sets the reproduction checks for exact equality.
TABLE2_EXACT_GROUPS = (
    (2, 17),
    (1, 437),
    (7, 3),
)

# Tuple-count observations attached to the table: the six-tuple candidate
# 17 exceeds what any single lever relation could produce for n = 10.
TABLE2_OBSERVATIONS = (
    (2, 17, 6),
    (5, 37, 3),
    (3, 11, 5),
    (9, 5, 4),
)


def _key(n, rho, A, W, f, M, C) -> tuple[PrivateKey, PublicKey]:
    omega = build_omega(OmegaFamily.SCALED, n, 1)
    params = SystemParams(n=n, rho=rho, omega=omega)
    return PrivateKey(params, A, W, f, M), PublicKey(n, M, rho, C)


def case2_keypair() -> tuple[PrivateKey, PublicKey]:
    return _key(CASE2_N, CASE2_RHO, CASE2_A, CASE2_W, CASE2_F, CASE2_M, CASE2_C)


def case3_keypair() -> tuple[PrivateKey, PublicKey]:
    # rho is not stated for this case; 43 covers every prime factor used.
    return _key(CASE3_N, 43, CASE3_A, CASE3_W, CASE3_F, CASE3_M, CASE3_C)


def case5_keypair() -> tuple[PrivateKey, PublicKey]:
    return _key(CASE5_N, CASE5_RHO, CASE5_A, CASE5_W, CASE5_F, CASE5_M, CASE5_C)
