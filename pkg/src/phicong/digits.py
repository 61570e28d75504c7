"""Base-p digit combinatorics behind the congruence exponents.

The exponent gamma_p(m, alpha) of the main congruence is read off the
rightmost alpha base-p digits of m: writing them a_1 (least significant)
through a_alpha and letting i' be the index of the rightmost nonzero digit,

    gamma_3 = 3 - a_i' + 2*#{i > i' : a_i = 0} + #{i > i' : a_i = 1}
    gamma_5 = gamma_7 = [a_i' in {1,2}] + #{i > i' : a_i in {0,1}}

with gamma = 0 when all alpha digits vanish (in particular for alpha = 0).
The counts range over i' < i <= alpha only; digits beyond position alpha
never contribute.

Also here: the ceiling iteration m -> ceil(m/p) that tracks the lowest
phi-degree under repeated U_p, the single-application constants c_m, the
digit/residue counting lemma that ties the two together, and fast p-adic
valuations of big integers.
"""

from __future__ import annotations

from dataclasses import dataclass

GAMMA_PRIMES = (3, 5, 7)


def p_adic_valuation(n: int, p: int) -> int:
    """Exponent of the largest power of p dividing n (n must be nonzero).

    Strips exponentially large chunks first so that coefficients divisible
    by very high powers of p cost O(v / chunk) big divisions, not O(v).
    """
    if not isinstance(p, int) or p < 2:
        raise ValueError("p must be an integer >= 2")
    if n == 0:
        raise ValueError("valuation of zero is undefined")
    n = abs(n)
    v = 0
    for step in (64, 8, 1):
        pk = p**step
        while True:
            q, r = divmod(n, pk)
            if r:
                break
            n = q
            v += step
    return v


@dataclass(frozen=True)
class DigitProfile:
    """Rightmost ``alpha`` base-p digits of m, least significant first.

    ``i_prime`` is the 1-based index of the rightmost nonzero digit among
    them, or -1 when p^alpha divides m.
    """

    p: int
    m: int
    alpha: int
    digits: tuple[int, ...]
    i_prime: int


def digit_profile(p: int, m: int, alpha: int) -> DigitProfile:
    if not isinstance(p, int) or p < 2:
        raise ValueError("p must be an integer >= 2")
    if not isinstance(m, int) or m < 1:
        raise ValueError("m must be a positive integer")
    if not isinstance(alpha, int) or alpha < 0:
        raise ValueError("alpha must be a nonnegative integer")
    digits = []
    r = m
    for _ in range(alpha):
        r, d = divmod(r, p)
        digits.append(d)
    i_prime = -1
    for i, d in enumerate(digits, start=1):
        if d:
            i_prime = i
            break
    return DigitProfile(p, m, alpha, tuple(digits), i_prime)


def gamma(p: int, m: int, alpha: int) -> int:
    """Congruence exponent gamma_p(m, alpha); zero when i' = -1."""
    if p not in GAMMA_PRIMES:
        raise ValueError(f"gamma undefined for this prime: {p}")
    prof = digit_profile(p, m, alpha)
    if prof.i_prime < 0:
        return 0
    rightmost = prof.digits[prof.i_prime - 1]
    above = prof.digits[prof.i_prime :]
    if p == 3:
        return 3 - rightmost + 2 * above.count(0) + above.count(1)
    return (1 if rightmost in (1, 2) else 0) + sum(
        1 for d in above if d in (0, 1)
    )


def f_iter(p: int, m: int, alpha: int) -> int:
    """alpha-fold iteration of the ceiling map ell -> ceil(ell/p)."""
    if not isinstance(p, int) or p < 2:
        raise ValueError("p must be an integer >= 2")
    if not isinstance(m, int) or m < 1:
        raise ValueError("m must be a positive integer")
    if not isinstance(alpha, int) or alpha < 0:
        raise ValueError("alpha must be a nonnegative integer")
    for _ in range(alpha):
        m = -(-m // p)
    return m


def c_m(p: int, m: int) -> int:
    """Extra p-divisibility of a single U_p application, by residue of m.

    For p = 3 the values are 2, 1, 0 as m is 1, 2, 0 mod 3; for p in {5, 7}
    the value is 1 when m is 1 or 2 mod p and 0 otherwise.
    """
    if p not in GAMMA_PRIMES:
        raise ValueError(f"c_m undefined for this prime: {p}")
    if not isinstance(m, int) or m < 1:
        raise ValueError("m must be a positive integer")
    r = m % p
    if p == 3:
        return {1: 2, 2: 1}.get(r, 0)
    return 1 if r in (1, 2) else 0


@dataclass(frozen=True)
class DigitResidueCounts:
    zeros_above: int
    ones_above: int
    res1_in_list: int
    res2_in_list: int
    rightmost_digit: int


def digit_residue_counts(p: int, m: int, alpha: int) -> DigitResidueCounts:
    """Digit counts above i' versus residue counts along the ceiling orbit.

    Counts the 0s and 1s strictly left of the rightmost nonzero digit within
    the first ``alpha`` digits, and the entries congruent to 1 and 2 mod p in
    the length-alpha list m, f(m), ..., f^(alpha-1)(m).  The two agree except
    that a rightmost nonzero digit of 1 (resp. 2) adds one extra entry to the
    residue-1 (resp. residue-2) count.

    Requires p^alpha not to divide m; otherwise there is no rightmost
    nonzero digit to anchor the counts.
    """
    if not isinstance(alpha, int) or alpha < 1:
        raise ValueError("alpha must be a positive integer")
    prof = digit_profile(p, m, alpha)
    if prof.i_prime < 0:
        raise ValueError("lemma precondition fails: p^alpha divides m")
    above = prof.digits[prof.i_prime :]
    res1 = res2 = 0
    k = m
    for _ in range(alpha):
        r = k % p
        if r == 1:
            res1 += 1
        elif r == 2:
            res2 += 1
        k = -(-k // p)
    return DigitResidueCounts(
        zeros_above=above.count(0),
        ones_above=above.count(1),
        res1_in_list=res1,
        res2_in_list=res2,
        rightmost_digit=prof.digits[prof.i_prime - 1],
    )


def lehner_bound(m: int, j: int, alpha: int) -> int:
    """Classical level-3 valuation bound 4(j-1) + alpha*(2 - 4(m-1)).

    Returned as-is; for m >= 2 the alpha term is negative, so the bound can
    be negative, in which case it carries no information and callers clamp
    it at zero before using it as a divisibility requirement.
    """
    return 4 * (j - 1) + alpha * (2 - 4 * (m - 1))
