"""Eta-quotient series: level-p Hauptmoduln, their reciprocals, Ramanujan tau.

The Hauptmodul for the genus-zero prime levels p in {2, 3, 5, 7, 13} is the
eta quotient (eta(pz)/eta(z))^(24/(p-1)) = q + 24/(p-1) q^2 + ..., which
vanishes at infinity.  Its reciprocal starts q^-1 - 24/(p-1) + ... and has a
pole at infinity instead.  Both are assembled here from integer-exponent
Euler factors, so no fractional q-powers ever appear.
"""

from __future__ import annotations

from dataclasses import dataclass

from .series import QSeries, euler_factor

SUPPORTED_PRIMES = (2, 3, 5, 7, 13)


@dataclass(frozen=True)
class HauptmodulSpec:
    """A genus-zero prime level p and the eta-quotient exponent 24/(p-1)."""

    p: int
    e: int

    def __post_init__(self) -> None:
        if self.p not in SUPPORTED_PRIMES:
            raise ValueError(f"unsupported prime level: {self.p}")
        if self.e * (self.p - 1) != 24:
            raise ValueError(f"exponent {self.e} does not satisfy e*(p-1) = 24")

    @classmethod
    def for_prime(cls, p: int) -> "HauptmodulSpec":
        if p not in SUPPORTED_PRIMES:
            raise ValueError(f"unsupported prime level: {p}")
        return cls(p, 24 // (p - 1))


def phi_series(p: int, out_prec: int) -> QSeries:
    """q-expansion of the level-p Hauptmodul, exact through ``out_prec``.

    The result has valuation exactly 1 and leading coefficient 1.
    """
    spec = HauptmodulSpec.for_prime(p)
    if not isinstance(out_prec, int) or out_prec < 2:
        raise ValueError("out_prec must be an integer >= 2")
    inner = out_prec - 1  # the unit part is shifted by q afterwards
    numer = euler_factor(p, inner) ** spec.e
    denom = euler_factor(1, inner).invert(inner) ** spec.e
    return (numer * denom).shift(1)


def psi_series(p: int, out_prec: int) -> QSeries:
    """Reciprocal of the Hauptmodul: q^-1 - 24/(p-1) + ... to ``out_prec``."""
    # invert() needs two extra known exponents because the valuation is 1.
    return phi_series(p, out_prec + 2).invert(out_prec)


def tau(n_max: int) -> list[int]:
    """Ramanujan tau values tau(1..n_max), from q * prod (1 - q^n)^24."""
    if not isinstance(n_max, int) or n_max < 1:
        raise ValueError("n_max must be a positive integer")
    delta = (euler_factor(1, n_max) ** 24).shift(1)
    return [delta.coefficient(n) for n in range(1, n_max + 1)]
