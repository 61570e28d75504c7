"""Exact truncated power series in q over the integers.

A :class:`QSeries` is a finite piece of a Laurent-style expansion
``sum c_n * q^n`` with arbitrary-precision integer coefficients.  The field
``prec`` is an *exclusive* upper exponent bound: coefficients are stored, and
claimed correct, only for exponents ``n < prec``.  Exponents may be negative
(the reciprocal of a Hauptmodul starts at ``q^-1``).

Every operation recomputes the precision of its result from the precisions
and valuations of its inputs, so a coefficient is never reported unless it is
fully determined by the stored data:

* ``a + b``      has precision ``min(a.prec, b.prec)``;
* ``a * b``      has precision ``min(a.prec + val(b), b.prec + val(a))``,
  where a series that is identically zero below its precision counts with
  ``val = prec``;
* ``a ** e``     (e >= 1) therefore has precision ``a.prec + (e-1)*val(a)``,
  independent of the multiplication order; ``a ** 0`` is 1 at ``a.prec``.

Coefficients are plain Python ints throughout; there are no floats and no
rationals anywhere.  Zero coefficients are never stored, so the valuation of
a nonzero series is ``min`` over the stored exponents.

Large products are computed by Kronecker substitution: both factors are
packed into single big integers with fixed-width slots, multiplied once
(through gmpy2/GMP when available), and unpacked.  This keeps the heavy
sweeps (thousands of terms with coefficients of thousands of bits) fast
without leaving exact integer arithmetic.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Mapping

try:
    from gmpy2 import mpz as _mpz

    def _mul_int(a: int, b: int) -> int:
        return int(_mpz(a) * _mpz(b))

except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    def _mul_int(a: int, b: int) -> int:
        return a * b

# Products with at most this many coefficient pairs use the plain
# schoolbook loop; larger ones go through Kronecker packing.
_SCHOOLBOOK_LIMIT = 4096


class QSeries:
    """Truncated q-expansion with exact integer coefficients.

    ``QSeries(prec, coeffs)`` normalises its input: zero coefficients are
    dropped and every exponent must be an integer below ``prec``.  Instances
    are immutable and safe to share between threads.
    """

    __slots__ = ("_prec", "_c")

    def __init__(self, prec: int, coeffs: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        if not isinstance(prec, int):
            raise TypeError("precision must be an integer")
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        c: dict[int, int] = {}
        for e, v in items:
            if not isinstance(e, int) or not isinstance(v, int):
                raise TypeError("exponents and coefficients must be integers")
            if e >= prec:
                raise ValueError(f"exponent {e} is beyond precision (prec={prec})")
            if v:
                c[e] = c.get(e, 0) + v
                if not c[e]:
                    del c[e]
        self._prec = prec
        self._c = c

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, prec: int) -> "QSeries":
        return cls(prec)

    @classmethod
    def one(cls, prec: int) -> "QSeries":
        # At precision <= 0 even the constant term is beyond the window.
        return cls(prec, {0: 1} if prec > 0 else {})

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1, *, prec: int) -> "QSeries":
        return cls(prec, {exponent: coeff})

    # -- basic queries -----------------------------------------------------

    @property
    def prec(self) -> int:
        return self._prec

    @property
    def is_zero(self) -> bool:
        return not self._c

    @property
    def valuation(self) -> int:
        """Least stored exponent; undefined (raises) for the zero series."""
        if not self._c:
            raise ValueError("zero series has no valuation")
        return min(self._c)

    def _valz(self) -> int:
        # Valuation extended to the zero series: the first unknown exponent.
        return min(self._c) if self._c else self._prec

    def coefficient(self, n: int) -> int:
        """Coefficient of q^n.  Raises for n at or beyond the precision."""
        if n >= self._prec:
            raise ValueError(f"exponent {n} is beyond precision (prec={self._prec})")
        return self._c.get(n, 0)

    def terms(self) -> tuple[tuple[int, int], ...]:
        """Stored (exponent, coefficient) pairs, exponents ascending."""
        return tuple(sorted(self._c.items()))

    def items(self) -> Iterator[tuple[int, int]]:
        return iter(self._c.items())

    def __len__(self) -> int:
        return len(self._c)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QSeries):
            return NotImplemented
        return self._prec == other._prec and self._c == other._c

    def __hash__(self) -> int:
        return hash((self._prec, frozenset(self._c.items())))

    def __repr__(self) -> str:
        shown = sorted(self._c.items())[:8]
        body = " + ".join(f"{c}*q^{e}" for e, c in shown) or "0"
        if len(self._c) > 8:
            body += " + ..."
        return f"QSeries(prec={self._prec}, {body})"

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "QSeries | int") -> "QSeries":
        if isinstance(other, int):
            terms = {0: other} if other and self._prec > 0 else {}
            other = QSeries(self._prec, terms)
        if not isinstance(other, QSeries):
            return NotImplemented
        prec = min(self._prec, other._prec)
        out = {e: c for e, c in self._c.items() if e < prec}
        for e, c in other._c.items():
            if e < prec:
                s = out.get(e, 0) + c
                if s:
                    out[e] = s
                elif e in out:
                    del out[e]
        return QSeries(prec, out)

    __radd__ = __add__

    def __neg__(self) -> "QSeries":
        return QSeries(self._prec, {e: -c for e, c in self._c.items()})

    def __sub__(self, other: "QSeries | int") -> "QSeries":
        if isinstance(other, int):
            return self + (-other)
        if not isinstance(other, QSeries):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: int) -> "QSeries":
        return (-self) + other

    def __mul__(self, other: "QSeries | int") -> "QSeries":
        if isinstance(other, int):
            if not other:
                return QSeries.zero(self._prec)
            return QSeries(self._prec, {e: c * other for e, c in self._c.items()})
        if not isinstance(other, QSeries):
            return NotImplemented
        return _mul_series(self, other)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "QSeries":
        if not isinstance(e, int) or e < 0:
            raise ValueError("exponent must be a nonnegative integer")
        if e == 0:
            return QSeries.one(self._prec)
        result: QSeries | None = None
        base = self
        while True:
            if e & 1:
                result = base if result is None else result * base
            e >>= 1
            if not e:
                break
            base = base * base
        assert result is not None
        return result

    def invert(self, out_prec: int) -> "QSeries":
        """Multiplicative inverse, exact to ``out_prec``.

        The leading coefficient must be a unit (+1 or -1) for the inverse to
        have integer coefficients.  The input must be known through exponent
        ``out_prec + 2*val - 1``; shallower input raises rather than silently
        returning a less precise result.
        """
        if not self._c:
            raise ValueError("not invertible over the integers")
        v = self.valuation
        lead = self._c[v]
        if lead not in (1, -1):
            raise ValueError("not invertible over the integers")
        n = out_prec + v  # number of unit-part coefficients in the output
        if n <= 0:
            # 1/self has valuation -v >= out_prec: nothing representable.
            return QSeries.zero(out_prec)
        need = out_prec + 2 * v
        if self._prec < need:
            raise ValueError(
                f"insufficient precision: inverse to {out_prec} needs input "
                f"precision >= {need}, have {self._prec}"
            )
        # Unit part u = lead * q^-v * self has u_0 = 1; invert by the usual
        # recurrence c_k = -sum_j u_j c_{k-j}, exact because u_0 = 1.
        support = sorted(
            (e - v, lead * c) for e, c in self._c.items() if 0 < e - v < n
        )
        c = [0] * n
        c[0] = 1
        for k in range(1, n):
            s = 0
            for j, uj in support:
                if j > k:
                    break
                ck = c[k - j]
                if ck:
                    s += uj * ck
            if s:
                c[k] = -s
        return QSeries(out_prec, {k - v: lead * ck for k, ck in enumerate(c) if ck})

    # -- structural helpers -------------------------------------------------

    def shift(self, k: int) -> "QSeries":
        """Multiply by the exact monomial q^k (precision moves with it)."""
        return QSeries(self._prec + k, {e + k: c for e, c in self._c.items()})

    def truncate(self, prec: int) -> "QSeries":
        """Forget coefficients at exponents >= prec; never extends precision."""
        if prec >= self._prec:
            return self
        return QSeries(prec, {e: c for e, c in self._c.items() if e < prec})

    # -- serialization ------------------------------------------------------

    def to_dict(self) -> dict:
        """JSON form: coefficients as decimal strings (they exceed 64 bits)."""
        return {
            "prec": self._prec,
            "terms": [[e, str(c)] for e, c in sorted(self._c.items())],
        }

    @classmethod
    def from_dict(cls, data: Mapping) -> "QSeries":
        return cls(int(data["prec"]), [(int(e), int(c)) for e, c in data["terms"]])


def _mul_series(a: QSeries, b: QSeries) -> QSeries:
    prec = min(a.prec + b._valz(), b.prec + a._valz())
    if a.is_zero or b.is_zero:
        return QSeries.zero(prec)
    va = a.valuation
    vb = b.valuation
    # Terms that can only influence exponents >= prec are dead weight.
    a_items = [(e, c) for e, c in a.items() if e + vb < prec]
    b_items = [(e, c) for e, c in b.items() if e + va < prec]
    if not a_items or not b_items:
        return QSeries.zero(prec)
    if len(a_items) * len(b_items) <= _SCHOOLBOOK_LIMIT:
        out: dict[int, int] = {}
        for e1, c1 in a_items:
            for e2, c2 in b_items:
                e = e1 + e2
                if e < prec:
                    out[e] = out.get(e, 0) + c1 * c2
        return QSeries(prec, out)
    return _kronecker_mul(a_items, b_items, prec)


def _pack(items: list[tuple[int, int]], base: int, nslots: int, sb: int) -> int:
    # Positive and negative parts are packed separately so each slot can be
    # written with to_bytes; the difference is the signed packed integer.
    pos = bytearray(nslots * sb)
    neg = bytearray(nslots * sb)
    for e, c in items:
        i = (e - base) * sb
        if c > 0:
            pos[i : i + sb] = c.to_bytes(sb, "little")
        else:
            neg[i : i + sb] = (-c).to_bytes(sb, "little")
    return int.from_bytes(pos, "little") - int.from_bytes(neg, "little")


def _kronecker_mul(
    a_items: list[tuple[int, int]], b_items: list[tuple[int, int]], prec: int
) -> QSeries:
    va = min(e for e, _ in a_items)
    vb = min(e for e, _ in b_items)
    na = max(e for e, _ in a_items) - va + 1
    nb = max(e for e, _ in b_items) - vb + 1
    ma = max(abs(c) for _, c in a_items)
    mb = max(abs(c) for _, c in b_items)
    # Slot width: any convolution coefficient is bounded by
    # min(na, nb) * ma * mb in absolute value; +2 bits for sign and slack.
    bits = ma.bit_length() + mb.bit_length() + min(na, nb).bit_length() + 2
    sb = (bits + 7) // 8
    slot_bits = 8 * sb
    half = 1 << (slot_bits - 1)

    packed = _mul_int(
        _pack(a_items, va, na, sb), _pack(b_items, vb, nb, sb)
    )
    nslots = na + nb - 1
    base = va + vb
    take = min(nslots, prec - base)
    if take <= 0:
        return QSeries.zero(prec)
    # Adding half to every slot makes the packed product nonnegative without
    # inter-slot carries, so slots can be sliced back out of the byte form.
    offset = int.from_bytes((b"\x00" * (sb - 1) + b"\x80") * nslots, "little")
    data = (packed + offset).to_bytes(nslots * sb, "little")
    out: dict[int, int] = {}
    for i in range(take):
        c = int.from_bytes(data[i * sb : (i + 1) * sb], "little") - half
        if c:
            out[base + i] = c
    return QSeries(prec, out)


def euler_factor(stride: int, out_prec: int) -> QSeries:
    """Expansion of ``prod_{n>=1} (1 - q^(stride*n))`` to ``out_prec``.

    Computed from the pentagonal number theorem, so the result is sparse:
    coefficients +-1 at exponents ``stride * k(3k -+ 1)/2``.
    """
    if not isinstance(stride, int) or stride < 1:
        raise ValueError("stride must be a positive integer")
    if not isinstance(out_prec, int) or out_prec < 1:
        raise ValueError("out_prec must be a positive integer")
    terms = {0: 1}
    k = 1
    while True:
        g1 = stride * (k * (3 * k - 1) // 2)
        if g1 >= out_prec:
            break
        sign = -1 if k & 1 else 1
        terms[g1] = sign
        g2 = stride * (k * (3 * k + 1) // 2)
        if g2 < out_prec:
            terms[g2] = sign
        k += 1
    return QSeries(out_prec, terms)
