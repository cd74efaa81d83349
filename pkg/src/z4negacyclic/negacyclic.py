"""Negacyclic codes over Z4: construction, encoding, Lee metric, distance scan.

A negacyclic code of odd length n is an ideal of Z4[x]/<x^n + 1>.
The codes built here are the free codes <g> whose generator has the
roots alpha, alpha^3, ..., alpha^(2t-1) for a primitive 2n-th root of
unity alpha (alpha^n = -1) in GR(4,m), m the order of 2 mod n.  Words
are length-n sequences of Z4 digits, position 0 first.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .galois_ring import GaloisRing, RingElement, make_ring, negacyclic_root
from .polynomial import Z4, poly_divmod, poly_mul, poly_strip

__all__ = [
    "Code", "build_code", "encode",
    "lee_weight", "lee_distance", "min_distance_exhaustive",
    "lambda_map", "negacyclic_reduce",
    "word_to_str", "word_from_str",
]

LEE = (0, 1, 2, 1)

MAX_SCAN_RANK = 12


@dataclass(frozen=True)
class Code:
    """A negacyclic code with designed correction capability t."""

    n: int
    t: int
    ring: GaloisRing
    alpha: RingElement
    generator: tuple[int, ...]
    k: int
    _alpha_pows: tuple = field(repr=False, default=())

    def alpha_pow(self, j: int) -> RingElement:
        """alpha^j from the cached table (j taken mod 2n)."""
        return self._alpha_pows[j % (2 * self.n)]

    def field(self):
        return self.ring.residue_field()


def _order_of_two(n: int) -> int:
    m, p = 1, 2 % n
    while p != 1:
        p = (2 * p) % n
        m += 1
    return m


def _cyclotomic_coset(i: int, n: int) -> tuple[int, ...]:
    out = []
    j = i % n
    while j not in out:
        out.append(j)
        j = (2 * j) % n
    return tuple(sorted(out))


def build_code(n: int, t: int) -> Code:
    """Construct the length-n code correcting Lee weight up to t.

    The generator is the product over the cyclotomic cosets of the odd
    exponents 1..2t-1 of the minimal polynomials of beta^i (beta = -alpha,
    a primitive n-th root of unity), pushed through x -> -x; every
    coefficient of the coset products must land in Z4, which is checked.
    """
    if n < 3 or n % 2 == 0:
        raise ValueError(f"length n={n} must be odd and at least 3")
    if t < 1 or 2 * t - 1 >= n:
        raise ValueError(f"need 1 <= t with 2t-1 < n; got n={n}, t={t}")
    m = _order_of_two(n)
    if m > 10:
        raise ValueError(f"order of 2 mod {n} is {m}; supported rings stop at m=10")
    ring = make_ring(m)
    alpha = negacyclic_root(ring, n)
    beta = -alpha

    beta_pows = [ring.one]
    for _ in range(n - 1):
        beta_pows.append(beta_pows[-1] * beta)

    seen = set()
    f = [ring.one]
    for i in range(1, 2 * t, 2):
        coset = _cyclotomic_coset(i, n)
        if coset in seen:
            continue
        seen.add(coset)
        factor = [ring.one]
        for j in coset:
            factor = poly_mul(ring, factor, [-beta_pows[j], ring.one])
        f = poly_mul(ring, f, factor)

    f_z4 = []
    for c in f:
        if any(c.coeffs[1:]):
            raise AssertionError(f"coset product coefficient {c!r} is not in Z4")
        f_z4.append(c.coeffs[0])

    g = lambda_map(f_z4, n)
    if g[-1] == 3:
        g = [(-c) % 4 for c in g]
    assert g[-1] == 1, "generator failed to normalize monic"

    alpha_pows = [ring.one]
    for _ in range(2 * n - 1):
        alpha_pows.append(alpha_pows[-1] * alpha)

    code = Code(n=n, t=t, ring=ring, alpha=alpha,
                generator=tuple(g), k=n - (len(g) - 1),
                _alpha_pows=tuple(alpha_pows))

    for i in range(1, 2 * t, 2):
        root_val = sum((code.alpha_pow(i * j) * int(c) for j, c in enumerate(g)),
                       ring.zero)
        assert not root_val, f"generator does not vanish at alpha^{i}"
    _, rem = poly_divmod(Z4, [1] + [0] * (n - 1) + [1], list(g))
    assert not rem, "generator does not divide x^n + 1"
    return code


def negacyclic_reduce(f: list[int], n: int) -> list[int]:
    """Reduce a Z4 polynomial mod x^n + 1 (wrapped terms negate)."""
    out = [0] * n
    for i, c in enumerate(f):
        q, r = divmod(i, n)
        out[r] = (out[r] + (c if q % 2 == 0 else -c)) % 4
    return out


def encode(msg, code: Code) -> list[int]:
    """Multiply the message polynomial by the generator, reduced mod x^n + 1."""
    msg = [int(c) % 4 for c in msg]
    if len(msg) != code.k:
        raise ValueError(f"message length {len(msg)} != rank {code.k}")
    prod = poly_mul(Z4, msg, list(code.generator))
    return negacyclic_reduce(prod, code.n)


def lee_weight(word) -> int:
    return sum(LEE[int(c) % 4] for c in word)


def lee_distance(u, v) -> int:
    if len(u) != len(v):
        raise ValueError("words have different lengths")
    return sum(LEE[(int(a) - int(b)) % 4] for a, b in zip(u, v))


def lambda_map(f: list[int], n: int) -> list[int]:
    """The isometry x -> -x between the cyclic and negacyclic quotients."""
    if len(f) > n:
        raise ValueError(f"degree {len(f) - 1} is not below n={n}")
    return poly_strip([(c if i % 2 == 0 else -c) % 4 for i, c in enumerate(f)])


def min_distance_exhaustive(code: Code, max_rank: int = MAX_SCAN_RANK) -> int:
    """Minimum Lee weight over all 4^k nonzero codewords, by full enumeration.

    Message blocks are scanned in lexicographic chunks (vectorized);
    the result is the true minimum, with no early exit.  Refuses codes
    with k above max_rank to keep the scan at desk scale.
    """
    k, n = code.k, code.n
    if k > max_rank:
        raise ValueError(
            f"rank {k} exceeds the enumeration bound {max_rank} (4^{k} codewords)")
    gen = np.zeros((k, n), dtype=np.int16)
    g = np.array(code.generator, dtype=np.int16)
    for i in range(k):
        gen[i, i:i + len(g)] = g  # i + deg g <= n-1: shifts never wrap
    lee = np.array(LEE, dtype=np.int16)
    total = 4 ** k
    chunk = 1 << 18
    best = None
    shifts = np.arange(k, dtype=np.int64) * 2
    for start in range(0, total, chunk):
        idx = np.arange(start, min(start + chunk, total), dtype=np.int64)
        msgs = ((idx[:, None] >> shifts) & 3).astype(np.int16)
        words = (msgs @ gen) % 4
        weights = lee[words].sum(axis=1)
        if start == 0:
            weights[0] = np.iinfo(np.int16).max  # zero codeword
        m = int(weights.min())
        best = m if best is None else min(best, m)
    return best


def word_to_str(word) -> str:
    return "".join(str(int(c) % 4) for c in word)


def word_from_str(text: str, n: int | None = None) -> list[int]:
    word = []
    for i, ch in enumerate(text):
        if ch not in "0123":
            raise ValueError(f"invalid digit {ch!r} at position {i}; expected 0-3")
        word.append(int(ch))
    if n is not None and len(word) != n:
        raise ValueError(f"word length {len(word)} != code length {n}")
    return word
