"""The algebra Z[phi]: polynomials in the level-p Hauptmodul.

U_p applied to a power of the Hauptmodul is again an integer polynomial in
it, with no constant term.  :class:`PhiPoly` holds such a polynomial as a
sparse map degree -> coefficient; :func:`decompose` recovers it from a
q-expansion by greedy elimination from the lowest exponent, and
:func:`evaluate` goes back.  The valuation-pattern predicates ``in_R`` and
``in_P`` classify polynomials by how fast the p-adic valuations of their
coefficients grow with the degree; ``p_contains`` is the sufficient
containment test between two such patterns.

Decomposition repeatedly needs phi^v as a q-series, so powers are cached per
(p, precision), computed incrementally, and optionally persisted to disk.
"""

from __future__ import annotations

import json
import os
import threading
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

from .digits import p_adic_valuation
from .eta import phi_series
from .series import QSeries

_DELTA = {3: 4, 5: 1, 7: 1}


def delta_p(p: int) -> int:
    """Valuation slope: 4 for p = 3, 1 for p in {5, 7}."""
    try:
        return _DELTA[p]
    except KeyError:
        raise ValueError(f"valuation slope undefined for p={p}") from None


class PhiPoly:
    """Integer polynomial in the level-p Hauptmodul, degrees >= 1 only.

    A constant term never legitimately arises from U_p of a positive power
    of the Hauptmodul, so attempting to store degree 0 (or lower) raises.
    """

    __slots__ = ("p", "_c")

    def __init__(self, p: int, coeffs: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        if not isinstance(p, int) or p < 2:
            raise ValueError("p must be an integer >= 2")
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        c: dict[int, int] = {}
        for j, d in items:
            if not isinstance(j, int) or not isinstance(d, int):
                raise TypeError("degrees and coefficients must be integers")
            if j < 1:
                raise ValueError(f"phi-polynomial degree must be >= 1, got {j}")
            if d:
                c[j] = c.get(j, 0) + d
                if not c[j]:
                    del c[j]
        self.p = p
        self._c = c

    # -- queries -------------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self._c

    @property
    def degree(self) -> int | None:
        return max(self._c) if self._c else None

    @property
    def min_degree(self) -> int | None:
        return min(self._c) if self._c else None

    def coefficient(self, j: int) -> int:
        return self._c.get(j, 0)

    def degrees(self) -> tuple[int, ...]:
        return tuple(sorted(self._c))

    def items(self) -> Iterator[tuple[int, int]]:
        return iter(self._c.items())

    def terms(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted(self._c.items()))

    def __len__(self) -> int:
        return len(self._c)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PhiPoly):
            return NotImplemented
        return self.p == other.p and self._c == other._c

    def __hash__(self) -> int:
        return hash((self.p, frozenset(self._c.items())))

    def __repr__(self) -> str:
        shown = sorted(self._c.items())[:6]
        body = " + ".join(f"{d}*phi^{j}" for j, d in shown) or "0"
        if len(self._c) > 6:
            body += " + ..."
        return f"PhiPoly(p={self.p}, {body})"

    # -- arithmetic ------------------------------------------------------------

    def _check_same(self, other: "PhiPoly") -> None:
        if self.p != other.p:
            raise ValueError("cannot combine phi-polynomials of different levels")

    def __add__(self, other: "PhiPoly") -> "PhiPoly":
        if not isinstance(other, PhiPoly):
            return NotImplemented
        self._check_same(other)
        out = dict(self._c)
        for j, d in other._c.items():
            s = out.get(j, 0) + d
            if s:
                out[j] = s
            elif j in out:
                del out[j]
        return PhiPoly(self.p, out)

    def __neg__(self) -> "PhiPoly":
        return PhiPoly(self.p, {j: -d for j, d in self._c.items()})

    def __sub__(self, other: "PhiPoly") -> "PhiPoly":
        if not isinstance(other, PhiPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: "PhiPoly | int") -> "PhiPoly":
        if isinstance(other, int):
            if not other:
                return PhiPoly(self.p)
            return PhiPoly(self.p, {j: d * other for j, d in self._c.items()})
        if not isinstance(other, PhiPoly):
            return NotImplemented
        self._check_same(other)
        out: dict[int, int] = {}
        for j1, d1 in self._c.items():
            for j2, d2 in other._c.items():
                j = j1 + j2
                out[j] = out.get(j, 0) + d1 * d2
        return PhiPoly(self.p, out)

    __rmul__ = __mul__

    def exact_div(self, k: int) -> "PhiPoly":
        """Divide every coefficient by k, raising unless division is exact."""
        if k == 0:
            raise ZeroDivisionError("division of phi-polynomial by zero")
        out = {}
        for j, d in self._c.items():
            q, r = divmod(d, k)
            if r:
                raise ValueError(f"coefficient at degree {j} not divisible by {k}")
            out[j] = q
        return PhiPoly(self.p, out)

    # -- serialization ----------------------------------------------------------

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "coeffs": [[j, str(d)] for j, d in sorted(self._c.items())],
        }

    @classmethod
    def from_dict(cls, data: Mapping) -> "PhiPoly":
        return cls(int(data["p"]), [(int(j), int(d)) for j, d in data["coeffs"]])


@dataclass(frozen=True)
class PSetSpec:
    """Valuation pattern: lowest degree ``ell`` with base valuation ``a``.

    Membership requires degrees below ``ell`` to vanish and the degree-k
    coefficient to be divisible by p^(delta*(k - ell) + a) for k >= ell,
    where delta is the level's valuation slope.
    """

    p: int
    ell: int
    a: int
    delta: int | None = None

    def __post_init__(self) -> None:
        if not isinstance(self.ell, int) or self.ell < 1:
            raise ValueError("ell must be a positive integer")
        if not isinstance(self.a, int) or self.a < 0:
            raise ValueError("a must be a nonnegative integer")
        expected = delta_p(self.p)
        if self.delta is None:
            object.__setattr__(self, "delta", expected)
        elif self.delta != expected:
            raise ValueError(f"delta must be {expected} for p={self.p}")


def in_R(poly: PhiPoly) -> bool:
    """Degree-n coefficient divisible by p^(delta*(n-1)) for all n >= 2.

    Degree 1 is unconstrained; the zero polynomial qualifies vacuously.
    """
    d = delta_p(poly.p)
    return all(
        p_adic_valuation(c, poly.p) >= d * (n - 1)
        for n, c in poly.items()
        if n >= 2
    )


def in_P(poly: PhiPoly, spec: PSetSpec) -> bool:
    """Membership in the valuation pattern described by ``spec``.

    The lowest degree is read inclusively: a polynomial whose actual lowest
    degree exceeds ``spec.ell`` still qualifies, since missing coefficients
    are zero and divisible by everything.
    """
    if poly.p != spec.p:
        raise ValueError("polynomial and pattern have different levels")
    for k, c in poly.items():
        if k < spec.ell:
            return False
        if p_adic_valuation(c, poly.p) < spec.delta * (k - spec.ell) + spec.a:
            return False
    return True


def p_contains(p: int, outer: tuple[int, int], inner: tuple[int, int]) -> bool:
    """Sufficient test that pattern ``outer`` contains pattern ``inner``.

    True iff ell' >= ell and a' >= a + delta*(ell' - ell); every polynomial
    satisfying the inner constraints then satisfies the outer ones.
    """
    d = delta_p(p)
    ell, a = outer
    ell2, a2 = inner
    for value, name in ((ell, "ell"), (ell2, "ell'")):
        if not isinstance(value, int) or value < 1:
            raise ValueError(f"{name} must be a positive integer")
    if a < 0 or a2 < 0:
        raise ValueError("base valuations must be nonnegative")
    return ell2 >= ell and a2 >= a + d * (ell2 - ell)


def phi_precision_budget(p: int, m: int, alpha: int, guard: int = 8) -> int:
    """Hauptmodul precision sufficient to decompose U_p^alpha of its m-th power.

    The decomposition has degree p^alpha * m and is checked through a guard
    window beyond it; U_p^alpha divides the usable precision by p^alpha.
    """
    return p**alpha * (p**alpha * m + guard + 1)


class PhiPowerCache:
    """Powers of the Hauptmodul as q-series, keyed by (p, precision).

    Powers are extended incrementally: phi^(j+1) is phi^j * phi truncated
    back to the entry's precision.  Reads and writes are serialized by a
    lock, so the cache can be shared between threads.  When a directory is
    attached (see ``attach_directory``), entries are loaded from and flushed
    to ``phi_powers_p{p}_prec{prec}.json`` files inside it.
    """

    def __init__(self, directory: str | None = None):
        self._entries: dict[tuple[int, int], list[QSeries]] = {}
        self._lock = threading.Lock()
        self._dir = directory
        self._dirty: set[tuple[int, int]] = set()

    def attach_directory(self, directory: str | None) -> None:
        with self._lock:
            self._dir = directory

    def clear(self) -> None:
        with self._lock:
            self._entries.clear()
            self._dirty.clear()

    def _path(self, key: tuple[int, int]) -> str | None:
        if self._dir is None:
            return None
        p, prec = key
        return os.path.join(self._dir, f"phi_powers_p{p}_prec{prec}.json")

    def _load_locked(self, key: tuple[int, int]) -> list[QSeries] | None:
        path = self._path(key)
        if path is None or not os.path.exists(path):
            return None
        with open(path, "r", encoding="utf-8") as fh:
            payload = json.load(fh)
        if payload.get("p") != key[0] or payload.get("prec") != key[1]:
            return None
        return [QSeries.from_dict(d) for d in payload["powers"]]

    def _entry_locked(self, p: int, prec: int) -> list[QSeries]:
        key = (p, prec)
        entry = self._entries.get(key)
        if entry is None:
            entry = self._load_locked(key)
            if entry is None:
                entry = [phi_series(p, prec)]
                self._dirty.add(key)
            self._entries[key] = entry
        return entry

    def power(self, p: int, prec: int, j: int) -> QSeries:
        """phi^j at the given precision, computing anything missing."""
        if j < 1:
            raise ValueError("power must be >= 1")
        with self._lock:
            entry = self._entry_locked(p, prec)
            while len(entry) < j:
                entry.append((entry[-1] * entry[0]).truncate(prec))
                self._dirty.add((p, prec))
            return entry[j - 1]

    def powers(self, p: int, prec: int, up_to: int) -> list[QSeries]:
        self.power(p, prec, up_to)
        with self._lock:
            return list(self._entries[(p, prec)][:up_to])

    def flush(self) -> None:
        """Write entries touched since the last flush to the attached directory."""
        with self._lock:
            if self._dir is None:
                return
            os.makedirs(self._dir, exist_ok=True)
            for key in sorted(self._dirty):
                payload = {
                    "p": key[0],
                    "prec": key[1],
                    "powers": [s.to_dict() for s in self._entries[key]],
                }
                path = self._path(key)
                assert path is not None
                with open(path, "w", encoding="utf-8") as fh:
                    json.dump(payload, fh)
            self._dirty.clear()


DEFAULT_CACHE = PhiPowerCache()


def evaluate(
    poly: PhiPoly, out_prec: int, *, cache: PhiPowerCache | None = None
) -> QSeries:
    """Sum of d_j * phi^j as a q-series, exact through ``out_prec``."""
    if not isinstance(out_prec, int) or out_prec < 2:
        raise ValueError("out_prec must be an integer >= 2")
    cache = cache if cache is not None else DEFAULT_CACHE
    acc = QSeries.zero(out_prec)
    for j, d in sorted(poly.items()):
        acc = acc + d * cache.power(poly.p, out_prec, j).truncate(out_prec)
    return acc


def decompose(
    s: QSeries,
    p: int,
    max_deg: int,
    guard: int = 8,
    *,
    cache: PhiPowerCache | None = None,
    powers_prec: int | None = None,
) -> PhiPoly:
    """Write ``s`` as an integer polynomial in the level-p Hauptmodul.

    Greedy elimination from the lowest exponent: the valuation v of the
    running residual names the next degree, phi^v times the residual's
    leading coefficient is subtracted, and the valuation strictly rises.
    The residual must vanish at every exponent through
    ``max_deg + guard`` (the guard window is a hard check, not a warning);
    a nonzero residual needing a degree beyond ``max_deg`` raises.

    ``powers_prec`` lets a caller reuse one cache entry of higher precision
    for many decompositions; it must cover the guard window.
    """
    if not isinstance(max_deg, int) or max_deg < 1:
        raise ValueError("max_deg must be a positive integer")
    if not isinstance(guard, int) or guard < 0:
        raise ValueError("guard must be a nonnegative integer")
    window = max_deg + guard
    need = window + 1
    if s.prec < need:
        raise ValueError(
            f"insufficient precision: need series precision >= {need}, have {s.prec}"
        )
    if powers_prec is None:
        powers_prec = need
    elif powers_prec < need:
        raise ValueError(
            f"insufficient precision: power cache precision {powers_prec} "
            f"is below the guard window {need}"
        )
    cache = cache if cache is not None else DEFAULT_CACHE
    cur = s.truncate(need)
    if not cur.is_zero and cur.valuation < 1:
        raise ValueError("series must have valuation >= 1 to be a phi-polynomial")
    out: dict[int, int] = {}
    while not cur.is_zero:
        v = cur.valuation
        if v > max_deg:
            raise ValueError(
                f"not a phi-polynomial within budget: nonzero residual at "
                f"exponent {v} with degree budget {max_deg}"
            )
        d = cur.coefficient(v)
        out[v] = d
        cur = cur - d * cache.power(p, powers_prec, v).truncate(need)
    return PhiPoly(p, out)


def val_profile(poly: PhiPoly) -> tuple[tuple[int, int], ...]:
    """(degree, p-adic valuation of its coefficient), degrees ascending."""
    return tuple(
        (j, p_adic_valuation(d, poly.p)) for j, d in sorted(poly.items())
    )
