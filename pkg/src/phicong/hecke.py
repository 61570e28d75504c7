"""The U_p operator on q-expansions: every p-th coefficient, reindexed.

U_p maps sum a(n) q^n to sum a(pn) q^n.  On truncated series this is pure
index extraction, which keeps it exact; the precision of the result is the
largest N such that all of a(p*0), ..., a(p*(N-1)) were known, i.e.
floor((prec - 1)/p) + 1.
"""

from __future__ import annotations

from .series import QSeries


def u_p(f: QSeries, p: int) -> QSeries:
    """Apply U_p once: coefficient of q^n in the result is f's at q^(p*n)."""
    if not isinstance(p, int) or p < 2:
        raise ValueError("p must be an integer >= 2")
    new_prec = (f.prec - 1) // p + 1
    return QSeries(new_prec, {e // p: c for e, c in f.items() if e % p == 0})


def u_p_iter(f: QSeries, p: int, alpha: int) -> QSeries:
    """alpha-fold application of U_p; alpha = 0 returns f unchanged."""
    if not isinstance(alpha, int) or alpha < 0:
        raise ValueError("alpha must be a nonnegative integer")
    for _ in range(alpha):
        f = u_p(f, p)
    return f
