"""Static order data: the 26 sporadic groups and the Tits group.

Each record carries the order both as an integer and as a factor table; the
module self-checks at import that the two agree, so a transcription slip in
either column cannot survive.  ``out_order`` is 1 or 2 throughout.
"""

SPORADIC = {
    "M11": (7920, {2: 4, 3: 2, 5: 1, 11: 1}, 1),
    "M12": (95040, {2: 6, 3: 3, 5: 1, 11: 1}, 2),
    "M22": (443520, {2: 7, 3: 2, 5: 1, 7: 1, 11: 1}, 2),
    "M23": (10200960, {2: 7, 3: 2, 5: 1, 7: 1, 11: 1, 23: 1}, 1),
    "M24": (244823040, {2: 10, 3: 3, 5: 1, 7: 1, 11: 1, 23: 1}, 1),
    "J1": (175560, {2: 3, 3: 1, 5: 1, 7: 1, 11: 1, 19: 1}, 1),
    "J2": (604800, {2: 7, 3: 3, 5: 2, 7: 1}, 2),
    "J3": (50232960, {2: 7, 3: 5, 5: 1, 17: 1, 19: 1}, 2),
    "J4": (
        86775571046077562880,
        {2: 21, 3: 3, 5: 1, 7: 1, 11: 3, 23: 1, 29: 1, 31: 1, 37: 1, 43: 1},
        1,
    ),
    "Co1": (
        4157776806543360000,
        {2: 21, 3: 9, 5: 4, 7: 2, 11: 1, 13: 1, 23: 1},
        1,
    ),
    "Co2": (42305421312000, {2: 18, 3: 6, 5: 3, 7: 1, 11: 1, 23: 1}, 1),
    "Co3": (495766656000, {2: 10, 3: 7, 5: 3, 7: 1, 11: 1, 23: 1}, 1),
    "McL": (898128000, {2: 7, 3: 6, 5: 3, 7: 1, 11: 1}, 2),
    "HS": (44352000, {2: 9, 3: 2, 5: 3, 7: 1, 11: 1}, 2),
    "Suz": (448345497600, {2: 13, 3: 7, 5: 2, 7: 1, 11: 1, 13: 1}, 2),
    "He": (4030387200, {2: 10, 3: 3, 5: 2, 7: 3, 17: 1}, 2),
    "HN": (273030912000000, {2: 14, 3: 6, 5: 6, 7: 1, 11: 1, 19: 1}, 2),
    "Th": (
        90745943887872000,
        {2: 15, 3: 10, 5: 3, 7: 2, 13: 1, 19: 1, 31: 1},
        1,
    ),
    "Fi22": (64561751654400, {2: 17, 3: 9, 5: 2, 7: 1, 11: 1, 13: 1}, 2),
    "Fi23": (
        4089470473293004800,
        {2: 18, 3: 13, 5: 2, 7: 1, 11: 1, 13: 1, 17: 1, 23: 1},
        1,
    ),
    "Fi24'": (
        1255205709190661721292800,
        {2: 21, 3: 16, 5: 2, 7: 3, 11: 1, 13: 1, 17: 1, 23: 1, 29: 1},
        2,
    ),
    "ON": (460815505920, {2: 9, 3: 4, 5: 1, 7: 3, 11: 1, 19: 1, 31: 1}, 2),
    "Ly": (
        51765179004000000,
        {2: 8, 3: 7, 5: 6, 7: 1, 11: 1, 31: 1, 37: 1, 67: 1},
        1,
    ),
    "Ru": (145926144000, {2: 14, 3: 3, 5: 3, 7: 1, 13: 1, 29: 1}, 1),
    "B": (
        4154781481226426191177580544000000,
        {
            2: 41, 3: 13, 5: 6, 7: 2, 11: 1, 13: 1, 17: 1, 19: 1,
            23: 1, 31: 1, 47: 1,
        },
        1,
    ),
    "M": (
        808017424794512875886459904961710757005754368000000000,
        {
            2: 46, 3: 20, 5: 9, 7: 6, 11: 2, 13: 3, 17: 1, 19: 1, 23: 1,
            29: 1, 31: 1, 41: 1, 47: 1, 59: 1, 71: 1,
        },
        1,
    ),
}

TITS = ("Tits", 17971200, {2: 11, 3: 3, 5: 2, 13: 1}, 2)


def _selfcheck():
    for name, (order, factors, out) in SPORADIC.items():
        prod = 1
        for prime, exponent in factors.items():
            prod *= prime**exponent
        if prod != order:
            raise AssertionError(f"static order table broken at {name}")
        if out not in (1, 2):
            raise AssertionError(f"out order out of range at {name}")
    _, order, factors, _ = TITS
    prod = 1
    for prime, exponent in factors.items():
        prod *= prime**exponent
    if prod != order:
        raise AssertionError("static order table broken at Tits")


_selfcheck()
