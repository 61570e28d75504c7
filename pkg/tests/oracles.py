"""Independent brute-force oracles used by the tests.

Everything here works on plain ``{exponent: coefficient}`` dicts and avoids
the package's own series type, pentagonal shortcut, and Kronecker product,
so agreement between an oracle and the library is a genuine cross-check.
Only small precisions are practical; that is the point.
"""

from __future__ import annotations


def poly_mul(a: dict[int, int], b: dict[int, int], prec: int) -> dict[int, int]:
    out: dict[int, int] = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            e = e1 + e2
            if e < prec:
                out[e] = out.get(e, 0) + c1 * c2
    return {e: c for e, c in out.items() if c}


def poly_pow(a: dict[int, int], e: int, prec: int) -> dict[int, int]:
    out = {0: 1}
    for _ in range(e):
        out = poly_mul(out, a, prec)
    return out


def euler_product(stride: int, prec: int) -> dict[int, int]:
    """prod (1 - q^(stride*n)) multiplied out factor by factor."""
    out = {0: 1}
    n = stride
    while n < prec:
        out = poly_mul(out, {0: 1, n: -1}, prec)
        n += stride
    return out


def geometric_inverse(n: int, prec: int) -> dict[int, int]:
    """(1 - q^n)^(-1) = 1 + q^n + q^(2n) + ... truncated."""
    return {k: 1 for k in range(0, prec, n)}


def naive_phi(p: int, prec: int) -> dict[int, int]:
    """Hauptmodul by direct factor-by-factor products, no shortcuts.

    q * prod (1 - q^(pn))^e * prod (1 - q^n)^(-e) with e = 24/(p-1); the
    inverse factors are expanded geometric series.
    """
    e = 24 // (p - 1)
    inner = prec - 1
    out = {0: 1}
    n = p
    while n < inner:
        out = poly_mul(out, poly_pow({0: 1, n: -1}, e, inner), inner)
        n += p
    n = 1
    while n < inner:
        out = poly_mul(out, poly_pow(geometric_inverse(n, inner), e, inner), inner)
        n += 1
    return {k + 1: c for k, c in out.items()}


def naive_tau(n_max: int) -> list[int]:
    """tau(1..n_max) from q * prod_{k <= n_max} (1 - q^k)^24, no shortcuts."""
    prec = n_max
    out = {0: 1}
    for k in range(1, n_max + 1):
        out = poly_mul(out, poly_pow({0: 1, k: -1}, 24, prec), prec)
    return [out.get(n - 1, 0) for n in range(1, n_max + 1)]
