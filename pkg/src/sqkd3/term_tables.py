"""Term tables for the alternative-basis error expansions and the X bound.

Each alternative-basis error probability p[(i, j)] (prepared state i,
measured state j, i != j, in the T or K basis) expands into

    1/3 + (1/9) * sum over (phase, m, n) of Re(omega**phase * <f_m|f_n>)

where the f_m are the nine round-trip record vectors and omega is the
primitive third root of unity.  The tables below list the (phase, m, n)
triples for each of the six error probabilities, for both alternative
bases.  They are pure data; their correctness is pinned by the test that
evaluates them against the direct squared norms of the T/K record vectors
on random attacks.

X_SQRT_POS / X_SQRT_NEG are the square-root product terms of the
statistic X: each entry pairs two (i, j, k) cells of the 27-entry
probability table.  X evaluates as

    X = 3 - (3/2) * sum(basis errors)
          + c54 * sum sqrt(p_a * p_b) over X_SQRT_POS
          -       sum sqrt(p_a * p_b) over X_SQRT_NEG

with c54 = X54_COEFFICIENT[variant].
"""

# ---------------------------------------------------------------------------
# T-basis error expansions (variant phi1)
# ---------------------------------------------------------------------------

_T_01 = (
    [(0, m, n) for m, n in
     [(3, 1), (5, 1), (6, 1), (8, 1), (1, 3), (5, 3), (8, 3), (1, 5), (3, 5),
      (6, 5), (1, 6), (5, 6), (8, 6), (1, 8), (3, 8), (6, 8), (2, 0), (0, 2)]]
    + [(-1, m, n) for m, n in
       [(0, 1), (2, 1), (2, 3), (0, 5), (2, 6), (0, 8), (4, 0), (7, 0), (4, 2),
        (7, 2), (3, 4), (5, 4), (6, 4), (8, 4), (3, 7), (5, 7), (6, 7), (8, 7)]]
    + [(1, m, n) for m, n in
       [(4, 3), (7, 3), (4, 5), (7, 5), (4, 6), (7, 6), (4, 8), (7, 8), (1, 0),
        (5, 0), (8, 0), (1, 2), (3, 2), (6, 2), (0, 4), (2, 4), (0, 7), (2, 7)]]
)

_T_02 = (
    [(0, m, n) for m, n in
     [(1, 0), (0, 1), (3, 2), (4, 2), (6, 2), (7, 2), (2, 3), (4, 3), (7, 3),
      (2, 4), (3, 4), (6, 4), (2, 6), (4, 6), (7, 6), (2, 7), (3, 7), (6, 7)]]
    + [(1, m, n) for m, n in
       [(2, 0), (4, 0), (7, 0), (2, 1), (3, 1), (6, 1), (5, 3), (8, 3), (5, 4),
        (8, 4), (0, 5), (1, 5), (5, 6), (8, 6), (5, 7), (8, 7), (0, 8), (1, 8)]]
    + [(-1, m, n) for m, n in
       [(5, 0), (8, 0), (5, 1), (8, 1), (0, 2), (1, 2), (1, 3), (0, 4), (3, 5),
        (4, 5), (6, 5), (7, 5), (1, 6), (0, 7), (3, 8), (4, 8), (6, 8), (7, 8)]]
)

_T_10 = (
    [(0, m, n) for m, n in
     [(2, 1), (3, 1), (8, 1), (1, 2), (3, 2), (7, 2), (1, 3), (2, 3), (7, 3),
      (8, 3), (5, 4), (4, 5), (2, 7), (3, 7), (8, 7), (1, 8), (3, 8), (7, 8)]]
    + [(-1, m, n) for m, n in
       [(1, 0), (2, 0), (7, 0), (8, 0), (5, 1), (4, 2), (4, 3), (5, 3), (0, 4),
        (6, 4), (0, 5), (6, 5), (1, 6), (2, 6), (7, 6), (8, 6), (5, 7), (4, 8)]]
    + [(1, m, n) for m, n in
       [(4, 0), (5, 0), (0, 1), (6, 1), (0, 2), (6, 2), (2, 4), (3, 4), (8, 4),
        (1, 5), (3, 5), (7, 5), (4, 6), (5, 6), (0, 7), (6, 7), (0, 8), (6, 8)]]
)

_T_12 = (
    [(0, m, n) for m, n in
     [(1, 0), (5, 0), (7, 0), (0, 1), (5, 1), (6, 1), (4, 3), (3, 4), (0, 5),
      (1, 5), (6, 5), (7, 5), (1, 6), (5, 6), (7, 6), (0, 7), (5, 7), (6, 7)]]
    + [(-1, m, n) for m, n in
       [(4, 0), (3, 1), (0, 2), (1, 2), (6, 2), (7, 2), (2, 3), (8, 3), (2, 4),
        (8, 4), (3, 5), (4, 5), (4, 6), (3, 7), (0, 8), (1, 8), (6, 8), (7, 8)]]
    + [(1, m, n) for m, n in
       [(2, 0), (8, 0), (2, 1), (8, 1), (3, 2), (4, 2), (1, 3), (5, 3), (7, 3),
        (0, 4), (5, 4), (6, 4), (2, 6), (8, 6), (2, 7), (8, 7), (3, 8), (4, 8)]]
)

_T_20 = (
    [(0, m, n) for m, n in
     [(2, 1), (5, 1), (6, 1), (1, 2), (4, 2), (6, 2), (2, 4), (5, 4), (6, 4),
      (1, 5), (4, 5), (6, 5), (1, 6), (2, 6), (4, 6), (5, 6), (8, 7), (7, 8)]]
    + [(-1, m, n) for m, n in
       [(1, 0), (2, 0), (4, 0), (5, 0), (8, 1), (7, 2), (1, 3), (2, 3), (4, 3),
        (5, 3), (8, 4), (7, 5), (7, 6), (8, 6), (0, 7), (3, 7), (0, 8), (3, 8)]]
    + [(1, m, n) for m, n in
       [(7, 0), (8, 0), (0, 1), (3, 1), (0, 2), (3, 2), (7, 3), (8, 3), (0, 4),
        (3, 4), (0, 5), (3, 5), (0, 6), (1, 7), (2, 7), (5, 7), (6, 7), (1, 8),
        (2, 8), (4, 8), (6, 8)]]
)

_T_21 = (
    [(0, m, n) for m, n in
     [(2, 0), (5, 0), (7, 0), (0, 2), (3, 2), (7, 2), (0, 3), (2, 3), (5, 3),
      (7, 3), (1, 4), (0, 5), (2, 5), (3, 5), (7, 5), (8, 6), (0, 7), (2, 7),
      (3, 7), (5, 7), (6, 8)]]
    + [(-1, m, n) for m, n in
       [(8, 0), (0, 1), (2, 1), (3, 1), (5, 1), (6, 2), (8, 3), (0, 4), (2, 4),
        (3, 4), (5, 4), (6, 5), (1, 6), (4, 6), (6, 7), (8, 7), (1, 8), (4, 8)]]
    + [(1, m, n) for m, n in
       [(1, 0), (4, 0), (6, 1), (8, 1), (1, 2), (4, 2), (1, 3), (4, 3), (6, 4),
        (8, 4), (1, 5), (4, 5), (2, 6), (5, 6), (7, 6), (0, 8), (3, 8), (7, 8)]]
)

T_ERROR_TERMS = {(0, 1): _T_01, (0, 2): _T_02, (1, 0): _T_10,
                 (1, 2): _T_12, (2, 0): _T_20, (2, 1): _T_21}

# ---------------------------------------------------------------------------
# K-basis error expansions (variant phi2)
# ---------------------------------------------------------------------------

_K_PLUS = [(1, 0), (4, 0), (7, 0), (2, 1), (5, 1), (8, 1), (0, 2), (3, 2),
           (6, 2), (1, 3), (4, 3), (7, 3), (2, 4), (5, 4), (8, 4), (0, 5),
           (3, 5), (6, 5), (1, 6), (4, 6), (7, 6), (2, 7), (5, 7), (8, 7),
           (0, 8), (3, 8), (6, 8)]
_K_MINUS = [(2, 0), (5, 0), (8, 0), (0, 1), (3, 1), (6, 1), (1, 2), (4, 2),
            (7, 2), (2, 3), (5, 3), (8, 3), (0, 4), (3, 4), (6, 4), (1, 5),
            (4, 5), (7, 5), (2, 6), (5, 6), (8, 6), (0, 7), (3, 7), (6, 7),
            (1, 8), (4, 8), (7, 8)]

_K_01 = [(1, m, n) for m, n in _K_PLUS] + [(-1, m, n) for m, n in _K_MINUS]
_K_02 = [(1, m, n) for m, n in _K_MINUS] + [(-1, m, n) for m, n in _K_PLUS]

_K_10 = (
    [(0, m, n) for m, n in
     [(1, 0), (2, 0), (0, 1), (2, 1), (0, 2), (1, 2), (4, 3), (5, 3), (3, 4),
      (5, 4), (3, 5), (4, 5), (7, 6), (8, 6), (6, 7), (8, 7), (6, 8), (7, 8)]]
    + [(-1, m, n) for m, n in
       [(4, 0), (5, 0), (3, 1), (5, 1), (3, 2), (4, 2), (7, 3), (8, 3), (6, 4),
        (8, 4), (6, 5), (7, 5), (1, 6), (2, 6), (0, 7), (2, 7), (0, 8), (1, 8)]]
    + [(1, m, n) for m, n in
       [(7, 0), (8, 0), (6, 1), (8, 1), (6, 2), (7, 2), (1, 3), (2, 3), (0, 4),
        (2, 4), (0, 5), (1, 5), (4, 6), (5, 6), (3, 7), (5, 7), (4, 8), (3, 8)]]
)

_K_12 = (
    [(0, m, n) for m, n in
     [(5, 0), (7, 0), (3, 1), (8, 1), (4, 2), (6, 2), (1, 3), (8, 3), (2, 4),
      (6, 4), (0, 5), (7, 5), (2, 6), (4, 6), (0, 7), (5, 7), (1, 8), (3, 8)]]
    + [(-1, m, n) for m, n in
       [(1, 0), (8, 0), (2, 1), (6, 1), (0, 2), (7, 2), (2, 3), (4, 3), (0, 4),
        (5, 4), (1, 5), (3, 5), (5, 6), (7, 6), (3, 7), (8, 7), (4, 8), (6, 8)]]
    + [(1, m, n) for m, n in
       [(2, 0), (4, 0), (0, 1), (5, 1), (1, 2), (3, 2), (5, 3), (7, 3), (3, 4),
        (8, 4), (4, 5), (6, 5), (1, 6), (8, 6), (2, 7), (6, 7), (0, 8), (7, 8)]]
)

_K_20 = (
    [(0, m, n) for m, n in
     [(2, 1), (5, 3), (0, 1), (1, 2), (4, 3), (0, 2), (2, 0), (5, 4), (3, 4),
      (1, 0), (4, 5), (3, 5), (7, 6), (8, 6), (6, 7), (6, 8), (8, 7), (7, 8)]]
    + [(1, m, n) for m, n in
       [(1, 6), (2, 6), (4, 0), (5, 0), (1, 8), (2, 7), (3, 1), (3, 2), (4, 2),
        (5, 1), (8, 4), (7, 5), (6, 4), (6, 5), (0, 7), (7, 3), (0, 8), (8, 3)]]
    + [(-1, m, n) for m, n in
       [(7, 0), (8, 0), (6, 1), (1, 3), (6, 2), (2, 3), (3, 7), (3, 8), (0, 4),
        (2, 4), (0, 5), (1, 5), (4, 6), (5, 6), (7, 2), (5, 7), (8, 1), (4, 8)]]
)

_K_21 = (
    [(0, m, n) for m, n in
     [(5, 0), (7, 0), (3, 1), (8, 1), (4, 2), (6, 2), (1, 3), (8, 3), (2, 4),
      (6, 4), (0, 5), (7, 5), (2, 6), (4, 6), (0, 7), (5, 7), (1, 8), (3, 8)]]
    + [(1, m, n) for m, n in
       [(1, 0), (8, 0), (2, 1), (6, 1), (0, 2), (7, 2), (2, 3), (4, 3), (0, 4),
        (5, 4), (1, 5), (3, 5), (5, 6), (7, 6), (3, 7), (8, 7), (6, 8), (4, 8)]]
    + [(-1, m, n) for m, n in
       [(2, 0), (4, 0), (0, 1), (5, 1), (1, 2), (3, 2), (5, 3), (7, 3), (3, 4),
        (8, 4), (4, 5), (6, 5), (1, 6), (8, 6), (2, 7), (6, 7), (0, 8), (7, 8)]]
)

K_ERROR_TERMS = {(0, 1): _K_01, (0, 2): _K_02, (1, 0): _K_10,
                 (1, 2): _K_12, (2, 0): _K_20, (2, 1): _K_21}

ERROR_TERMS = {"phi1": T_ERROR_TERMS, "phi2": K_ERROR_TERMS}

# ---------------------------------------------------------------------------
# X-bound square-root products over the 27-entry table
# ---------------------------------------------------------------------------

X_SQRT_POS = [
    ((0, 0, 1), (1, 0, 2)), ((0, 1, 1), (1, 0, 2)), ((0, 2, 1), (1, 0, 2)),
    ((0, 0, 1), (1, 1, 2)), ((0, 1, 1), (1, 1, 2)), ((0, 2, 1), (1, 1, 2)),
    ((0, 0, 1), (1, 2, 2)), ((0, 1, 1), (1, 2, 2)), ((0, 2, 1), (1, 2, 2)),
    ((0, 0, 1), (2, 0, 0)), ((0, 1, 1), (2, 0, 0)), ((0, 2, 1), (2, 0, 0)),
    ((0, 0, 1), (2, 1, 0)), ((0, 1, 1), (2, 1, 0)), ((0, 2, 1), (2, 1, 0)),
    ((0, 0, 1), (2, 2, 0)), ((0, 1, 1), (2, 2, 0)), ((0, 2, 1), (2, 2, 0)),
    ((0, 0, 2), (1, 0, 0)), ((0, 1, 2), (1, 0, 0)), ((0, 2, 2), (1, 0, 0)),
    ((0, 0, 2), (1, 1, 0)), ((0, 1, 2), (1, 1, 0)), ((0, 2, 2), (1, 1, 0)),
    ((0, 0, 2), (1, 2, 0)), ((0, 1, 2), (1, 2, 0)), ((0, 2, 2), (1, 2, 0)),
    ((0, 0, 2), (2, 0, 1)), ((0, 1, 2), (2, 0, 1)), ((0, 2, 2), (2, 0, 1)),
    ((0, 0, 2), (2, 1, 1)), ((0, 1, 2), (2, 1, 1)), ((0, 2, 2), (2, 1, 1)),
    ((0, 0, 2), (2, 2, 1)), ((0, 1, 2), (2, 2, 1)), ((0, 2, 2), (2, 2, 1)),
    ((1, 0, 0), (2, 0, 1)), ((1, 1, 0), (2, 0, 1)), ((1, 2, 0), (2, 0, 1)),
    ((1, 0, 0), (2, 1, 1)), ((1, 1, 0), (2, 1, 1)), ((1, 2, 0), (2, 1, 1)),
    ((1, 0, 0), (2, 2, 1)), ((1, 1, 0), (2, 2, 1)), ((1, 2, 0), (2, 2, 1)),
    ((1, 0, 2), (2, 0, 0)), ((1, 1, 2), (2, 0, 0)), ((1, 2, 2), (2, 0, 0)),
    ((1, 0, 2), (2, 1, 0)), ((1, 1, 2), (2, 1, 0)), ((1, 2, 2), (2, 1, 0)),
    ((1, 0, 2), (2, 2, 0)), ((1, 1, 2), (2, 2, 0)), ((1, 2, 2), (2, 2, 0)),
]

X_SQRT_NEG = [
    ((0, 0, 0), (1, 0, 1)), ((0, 1, 0), (1, 0, 1)), ((0, 2, 0), (1, 0, 1)),
    ((0, 1, 0), (1, 1, 1)), ((0, 2, 0), (1, 1, 1)),
    ((0, 0, 0), (1, 2, 1)), ((0, 1, 0), (1, 2, 1)), ((0, 2, 0), (1, 2, 1)),
    ((0, 0, 0), (2, 0, 2)), ((0, 1, 0), (2, 0, 2)), ((0, 2, 0), (2, 0, 2)),
    ((0, 0, 0), (2, 1, 2)), ((0, 1, 0), (2, 1, 2)), ((0, 2, 0), (2, 1, 2)),
    ((0, 1, 0), (2, 2, 2)), ((0, 2, 0), (2, 2, 2)),
    ((1, 0, 1), (2, 0, 2)), ((1, 1, 1), (2, 0, 2)), ((1, 2, 1), (2, 0, 2)),
    ((1, 0, 1), (2, 1, 2)), ((1, 1, 1), (2, 1, 2)), ((1, 2, 1), (2, 1, 2)),
    ((1, 0, 1), (2, 2, 2)), ((1, 2, 1), (2, 2, 2)),
]

X54_COEFFICIENT = {"phi1": 0.5, "phi2": -1.0}

BASIS_ERROR_ORDER = [(0, 1), (0, 2), (1, 0), (1, 2), (2, 0), (2, 1)]
