"""Published polynomial values of r_{k,n}, r^0_{k,n} and r^+_{k,n} for n <= 8.

Each entry maps n -> {k: f(p, q)}; only printed entries are listed.
"""

FREE = {
    1: {0: lambda p, q: q, 1: lambda p, q: p},
    2: {0: lambda p, q: q, 1: lambda p, q: 0, 2: lambda p, q: p},
    3: {
        0: lambda p, q: q**2 * (p + 1),
        1: lambda p, q: p**2 * q,
        2: lambda p, q: p * q**2,
        3: lambda p, q: p**2 * (q + 1),
    },
    4: {
        0: lambda p, q: q**2 * (p + 1),
        1: lambda p, q: 0,
        2: lambda p, q: p * q,
        3: lambda p, q: 0,
        4: lambda p, q: p**2 * (q + 1),
    },
    5: {
        0: lambda p, q: q**3 * (2 * p**2 + 2 * p + 1),
        1: lambda p, q: 2 * p**3 * q**2,
        2: lambda p, q: p * q**3 * (2 * p + 1),
        3: lambda p, q: p**3 * q * (2 * q + 1),
        4: lambda p, q: 2 * p**2 * q**3,
        5: lambda p, q: p**3 * (2 * q**2 + 2 * q + 1),
    },
    6: {
        0: lambda p, q: q**3 * (2 * p**2 + 2 * p + 1),
        1: lambda p, q: 0,
        2: lambda p, q: p * q**2 * (p + 1),
        3: lambda p, q: 0,
        4: lambda p, q: p**2 * q * (q + 1),
        5: lambda p, q: 0,
        6: lambda p, q: p**3 * (2 * q**2 + 2 * q + 1),
    },
    7: {
        0: lambda p, q: q**4 * (5 * p**3 + 5 * p**2 + 3 * p + 1),
        1: lambda p, q: 5 * p**4 * q**3,
        2: lambda p, q: p * q**4 * (5 * p**2 + 3 * p + 1),
        3: lambda p, q: p**4 * q**2 * (5 * q + 2),
        4: lambda p, q: p**2 * q**4 * (5 * p + 2),
        5: lambda p, q: p**4 * q * (5 * q**2 + 3 * q + 1),
        6: lambda p, q: 5 * p**3 * q**4,
        7: lambda p, q: p**4 * (5 * q**3 + 5 * q**2 + 3 * q + 1),
    },
    8: {
        0: lambda p, q: q**4 * (5 * p**3 + 5 * p**2 + 3 * p + 1),
        1: lambda p, q: 0,
        2: lambda p, q: p * q**3 * (2 * p**2 + 2 * p + 1),
        3: lambda p, q: 0,
        4: lambda p, q: p**2 * q**2 * (-(p**2) + p + 2),
        5: lambda p, q: 0,
        6: lambda p, q: p**3 * q * (2 * q**2 + 2 * q + 1),
        7: lambda p, q: 0,
        8: lambda p, q: p**4 * (5 * q**3 + 5 * q**2 + 3 * q + 1),
    },
}

BRIDGE = {
    2: {k: (lambda p, q: p * q) for k in (0, 2)},
    4: {k: (lambda p, q: 2 * p**2 * q**2) for k in (0, 2, 4)},
    6: {k: (lambda p, q: 5 * p**3 * q**3) for k in (0, 2, 4, 6)},
    8: {k: (lambda p, q: 14 * p**4 * q**4) for k in (0, 2, 4, 6, 8)},
}

_zero = lambda p, q: 0  # noqa: E731

POSITIVE = {
    1: {0: _zero, 1: lambda p, q: p},
    2: {0: _zero, 1: _zero, 2: lambda p, q: p**2},
    3: {0: _zero, 2: _zero, 1: lambda p, q: p**2 * q, 3: lambda p, q: p**2 * (q + 1)},
    4: {
        0: _zero,
        1: _zero,
        3: _zero,
        2: lambda p, q: p**3 * q,
        4: lambda p, q: p**3 * (2 * q + 1),
    },
    5: {
        0: _zero,
        2: _zero,
        4: _zero,
        1: lambda p, q: 2 * p**3 * q**2,
        3: lambda p, q: p**3 * q * (2 * q + 1),
        5: lambda p, q: p**3 * (2 * q**2 + 2 * q + 1),
    },
    6: {
        0: _zero,
        1: _zero,
        3: _zero,
        5: _zero,
        2: lambda p, q: 2 * p**4 * q**2,
        4: lambda p, q: p**4 * q * (3 * q + 1),
        6: lambda p, q: p**4 * (5 * q**2 + 3 * q + 1),
    },
    7: {
        0: _zero,
        2: _zero,
        4: _zero,
        6: _zero,
        1: lambda p, q: 5 * p**4 * q**3,
        3: lambda p, q: p**4 * q**2 * (5 * q + 2),
        5: lambda p, q: p**4 * q * (5 * q**2 + 3 * q + 1),
        7: lambda p, q: p**4 * (5 * q**3 + 5 * q**2 + 3 * q + 1),
    },
    8: {
        0: _zero,
        1: _zero,
        3: _zero,
        5: _zero,
        7: _zero,
        2: lambda p, q: 5 * p**5 * q**3,
        4: lambda p, q: p**5 * q**2 * (7 * q + 2),
        6: lambda p, q: p**5 * q * (9 * q**2 + 4 * q + 1),
        8: lambda p, q: p**5 * (14 * q**3 + 9 * q**2 + 4 * q + 1),
    },
}
