"""Independent oracles for the test suite.

Everything here recomputes expected values by brute force or by a
different route than the code under test: linear solving over Z4,
direct locator construction from error patterns, exhaustive
nearest-codeword search, and exhaustive enumeration of key-equation
solution modules.
"""

from __future__ import annotations

import itertools
import random

from z4negacyclic.negacyclic import LEE, Code, encode, lee_distance
from z4negacyclic.polynomial import poly_coeff, poly_mul, poly_strip


# ---------------------------------------------------------------- Z4 linear algebra

def _gf2_solve(rows: list[list[int]], ncols: int):
    """Particular solution of an augmented GF(2) system, or None."""
    rows = [row[:] for row in rows]
    piv = {}
    rank_row = 0
    for col in range(ncols):
        sel = None
        for i in range(rank_row, len(rows)):
            if rows[i][col]:
                sel = i
                break
        if sel is None:
            continue
        rows[rank_row], rows[sel] = rows[sel], rows[rank_row]
        for i in range(len(rows)):
            if i != rank_row and rows[i][col]:
                rows[i] = [a ^ b for a, b in zip(rows[i], rows[rank_row])]
        piv[col] = rank_row
        rank_row += 1
    for i in range(rank_row, len(rows)):
        if rows[i][-1]:
            return None
    x = [0] * ncols
    for col, i in piv.items():
        x[col] = rows[i][-1]
    return x


def z4_solve(matrix: list[list[int]], rhs: list[int]):
    """A solution x of matrix @ x = rhs over Z4, or None.

    Unit pivots are eliminated first (full reduction); the leftover
    rows have all coefficients in {0,2} and reduce to a GF(2) system
    over the remaining unknowns.
    """
    if not matrix:
        return []
    ncols = len(matrix[0])
    rows = [[v % 4 for v in row] + [b % 4] for row, b in zip(matrix, rhs)]
    piv = {}
    used = set()
    while True:
        found = None
        for col in range(ncols):
            if col in piv:
                continue
            for i, row in enumerate(rows):
                if i not in used and row[col] % 2 == 1:
                    found = (i, col)
                    break
            if found:
                break
        if not found:
            break
        i, col = found
        scale = rows[i][col]  # 1 and 3 are self-inverse
        rows[i] = [v * scale % 4 for v in rows[i]]
        for j, row in enumerate(rows):
            if j != i and row[col]:
                f = row[col]
                rows[j] = [(a - f * b) % 4 for a, b in zip(row, rows[i])]
        piv[col] = i
        used.add(i)

    sub = []
    for i, row in enumerate(rows):
        if i in used:
            continue
        assert all(v % 2 == 0 for v in row[:-1])
        if row[-1] % 2:
            return None
        sub.append([v // 2 for v in row])
    x2 = _gf2_solve([[v % 2 for v in row] for row in sub], ncols) if sub else [0] * ncols
    if x2 is None:
        return None

    x = list(x2)
    for col, i in piv.items():
        row = rows[i]
        s = row[-1]
        for c in range(ncols):
            if c != col and row[c]:
                s = (s - row[c] * x[c]) % 4
        x[col] = s
    for row, b in zip(matrix, rhs):
        assert sum(r * v for r, v in zip(row, x)) % 4 == b % 4
    return x


# ---------------------------------------------------------------- error patterns

def locator_from_error(code: Code, error) -> list:
    """sigma = prod (1 - X_i z)^lee(e_i), X_i = alpha^i or alpha^(i+n)."""
    ring = code.ring
    sigma = [ring.one]
    for i, e in enumerate(error):
        e = int(e) % 4
        if not e:
            continue
        x = code.alpha_pow(i) if e in (1, 2) else code.alpha_pow(i + code.n)
        for _ in range(LEE[e]):
            sigma = poly_mul(ring, sigma, [ring.one, -x])
    return sigma


def power_sums(code: Code, error, kmax: int) -> list:
    """s_k = sum_j lee(e_j) X_j^k for k = 1..kmax."""
    ring = code.ring
    out = []
    for k in range(1, kmax + 1):
        acc = ring.zero
        for i, e in enumerate(error):
            e = int(e) % 4
            if not e:
                continue
            x = code.alpha_pow(i * k) if e in (1, 2) else code.alpha_pow((i + code.n) * k)
            acc = acc + x * LEE[e]
        out.append(acc)
    return out


def random_error(rng: random.Random, n: int, weight: int) -> list[int]:
    """Uniform support/sign pattern of exact Lee weight."""
    error = [0] * n
    doubles = rng.randint(0, weight // 2)
    positions = rng.sample(range(n), doubles + (weight - 2 * doubles))
    for p in positions[:doubles]:
        error[p] = 2
    for p in positions[doubles:]:
        error[p] = rng.choice((1, 3))
    return error


def all_error_patterns(n: int, max_weight: int) -> list[list[int]]:
    """Every pattern of Lee weight <= max_weight (desk scale: max_weight <= 2)."""
    assert max_weight <= 2
    out = [[0] * n]
    if max_weight >= 1:
        for p in range(n):
            for val in (1, 3):
                e = [0] * n
                e[p] = val
                out.append(e)
    if max_weight >= 2:
        for p in range(n):
            e = [0] * n
            e[p] = 2
            out.append(e)
        for p1 in range(n):
            for p2 in range(p1 + 1, n):
                for v1 in (1, 3):
                    for v2 in (1, 3):
                        e = [0] * n
                        e[p1], e[p2] = v1, v2
                        out.append(e)
    return out


def all_codewords(code: Code) -> list[list[int]]:
    """Every codeword, message-lexicographic (use on small ranks only)."""
    assert code.k <= 7
    out = []
    for msg in itertools.product(range(4), repeat=code.k):
        out.append(encode(list(msg), code))
    return out


def nearest_codeword_distance(code: Code, word) -> int:
    """Exhaustive Lee distance from word to the code."""
    return min(lee_distance(word, c) for c in all_codewords(code))


# ---------------------------------------------------------------- solution modules

def module_members(ring, series: list, precision: int, deg_limit: int):
    """All [a, b] with component degrees <= deg_limit and a*series = b mod z^precision.

    Enumerates every a over the full ring; b is pinned to a*series on
    coefficients below the precision and free above it.  Feasible for
    GR(4,2) and deg_limit <= 3.
    """
    elements = [ring.element(c) for c in itertools.product(range(4), repeat=ring.m)]
    width = deg_limit + 1
    for a_coeffs in itertools.product(elements, repeat=width):
        a = poly_strip(list(a_coeffs))
        prod = poly_mul(ring, a, series)
        if any(poly_coeff(ring, prod, i) for i in range(width, precision)):
            continue  # b would need a nonzero coefficient past deg_limit
        fixed = [poly_coeff(ring, prod, i) for i in range(min(precision, width))]
        free_slots = width - len(fixed)
        if free_slots == 0:
            yield a, poly_strip(fixed)
        else:
            for tail in itertools.product(elements, repeat=free_slots):
                yield a, poly_strip(fixed + list(tail))


def lm_divides(lm1, lm2, ring) -> bool:
    """Monomial divisibility in R[z]^2: same side, lower degree, coefficient divides."""
    (side1, d1), c1 = lm1
    (side2, d2), c2 = lm2
    if side1 != side2 or d1 > d2:
        return False
    if ring.is_unit(c1):
        return True
    return all(v % 2 == 0 for v in c2.coeffs)  # c1 in 2R: needs c2 in 2R
