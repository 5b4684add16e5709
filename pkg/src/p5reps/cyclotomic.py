"""Exact arithmetic in prime-power cyclotomic fields Q(zeta_n), n = p^k.

Values are stored in the power basis {zeta_n^i : 0 <= i < phi(n)} with exact
rational coefficients, always at the smallest order containing the value, so
equality is a plain component comparison.  Supported orders are 1 and p^k for
an odd prime p with k <= 4.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Union

Rational = Union[int, Fraction]

MAX_POWER = 4


class CyclotomicError(ValueError):
    """Invalid order, incompatible operands, or a broken field invariant."""


def _is_odd_prime(p: int) -> bool:
    if p < 3 or p % 2 == 0:
        return False
    return all(p % q for q in range(3, int(p**0.5) + 1, 2))


@lru_cache(maxsize=None)
def _order_data(n: int) -> tuple[int, int, int]:
    """Validate an order and return (p, k, phi(n)); order 1 gives (1, 0, 1)."""
    if n == 1:
        return (1, 0, 1)
    for p in (3, 5, 7, 11, 13):
        if n % p == 0:
            k = 0
            m = n
            while m % p == 0:
                m //= p
                k += 1
            if m != 1:
                raise CyclotomicError(f"order {n} is not a prime power")
            if k > MAX_POWER:
                raise CyclotomicError(f"order {n} exceeds the p^{MAX_POWER} cap")
            return (p, k, n - n // p)
    if _is_odd_prime(n):
        return (n, 1, n - 1)
    raise CyclotomicError(f"order {n} is not an odd prime power")


def _norm_coeff(c: Rational) -> Rational:
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


def _reduce(n: int, dense: list[Rational]) -> tuple[Rational, ...]:
    """Reduce a coefficient list on powers zeta_n^i to the power basis.

    Exponents >= n are folded by zeta^n = 1; exponents in [phi(n), n) are
    rewritten with zeta^m = -sum_{j=0}^{p-2} zeta^{m - phi(n) + j*p^(k-1)},
    which lands every term below phi(n) in a single top-down pass.
    """
    p, k, phi = _order_data(n)
    if n == 1:
        return (_norm_coeff(sum(dense, 0)),)
    step = n // p  # p^(k-1)
    out: list[Rational] = [0] * n
    for e, c in enumerate(dense):
        if c:
            out[e % n] += c
    for m in range(n - 1, phi - 1, -1):
        c = out[m]
        if c:
            out[m] = 0
            base = m - phi
            for j in range(p - 1):
                out[base + j * step] -= c
    return tuple(_norm_coeff(c) for c in out[:phi])


class CycNumber:
    """An exact element of Q(zeta_n), canonically stored at minimal order."""

    __slots__ = ("n", "coeffs", "_hash")

    def __init__(self, n: int, coeffs: Iterable[Rational], *, reduce: bool = True):
        coeff_list = [Fraction(c) if not isinstance(c, (int, Fraction)) else c for c in coeffs]
        if reduce:
            reduced = _reduce(n, coeff_list)
        else:
            reduced = tuple(_norm_coeff(c) for c in coeff_list)
        # Demote to a subfield while the support allows it.
        while n > 1:
            p, k, phi = _order_data(n)
            if k == 1:
                if any(reduced[1:]):
                    break
                reduced = (reduced[0],)
                n = 1
            else:
                if any(reduced[i] for i in range(len(reduced)) if i % p):
                    break
                reduced = reduced[::p]
                n //= p
        self.n = n
        self.coeffs = reduced
        self._hash: int | None = None

    # -- constructors ----------------------------------------------------

    @staticmethod
    def rational(value: Rational) -> "CycNumber":
        return CycNumber(1, [value], reduce=False)

    # -- predicates and conversions --------------------------------------

    def is_zero(self) -> bool:
        return self.n == 1 and self.coeffs[0] == 0

    def is_rational(self) -> bool:
        return self.n == 1

    def rational_value(self) -> Rational:
        if self.n != 1:
            raise CyclotomicError(f"value lies in Q(zeta_{self.n}), not Q")
        return self.coeffs[0]

    def promoted(self, n: int) -> tuple[Rational, ...]:
        """Coefficient vector of this value in the basis of Q(zeta_n)."""
        if n == self.n:
            return self.coeffs
        if self.n == 1:
            _order_data(n)
            phi = _order_data(n)[2]
            out: list[Rational] = [0] * phi
            out[0] = self.coeffs[0]
            return tuple(out)
        p, _, _ = _order_data(self.n)
        pn, _, phi = _order_data(n)
        if pn != p or n % self.n:
            raise CyclotomicError(f"cannot promote order {self.n} to order {n}")
        ratio = n // self.n
        out = [0] * phi
        for i, c in enumerate(self.coeffs):
            out[i * ratio] = c
        return tuple(out)

    # -- arithmetic -------------------------------------------------------

    def _common(self, other: "CycNumber") -> tuple[int, tuple[Rational, ...], tuple[Rational, ...]]:
        if self.n == other.n:
            return self.n, self.coeffs, other.coeffs
        if self.n == 1 or other.n == 1 or (max(self.n, other.n) % min(self.n, other.n) == 0):
            n = max(self.n, other.n)
            return n, self.promoted(n), other.promoted(n)
        raise CyclotomicError(f"incompatible cyclotomic orders {self.n} and {other.n}")

    def __add__(self, other: "CycNumber") -> "CycNumber":
        n, a, b = self._common(other)
        return CycNumber(n, [x + y for x, y in zip(a, b)], reduce=False)

    def __sub__(self, other: "CycNumber") -> "CycNumber":
        n, a, b = self._common(other)
        return CycNumber(n, [x - y for x, y in zip(a, b)], reduce=False)

    def __neg__(self) -> "CycNumber":
        return CycNumber(self.n, [-c for c in self.coeffs], reduce=False)

    def __mul__(self, other: "CycNumber") -> "CycNumber":
        n, a, b = self._common(other)
        if n == 1:
            return CycNumber(1, [a[0] * b[0]], reduce=False)
        dense: list[Rational] = [0] * (2 * len(a) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        dense[i + j] += x * y
        return CycNumber(n, dense)

    def scaled(self, q: Rational) -> "CycNumber":
        return CycNumber(self.n, [c * q for c in self.coeffs], reduce=False)

    def __pow__(self, e: int) -> "CycNumber":
        if e < 0:
            raise CyclotomicError("negative powers are not supported")
        result = CycNumber.rational(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # -- Galois action ----------------------------------------------------

    def conj_by(self, t: int) -> "CycNumber":
        """Apply the automorphism zeta_n -> zeta_n^t (t coprime to n)."""
        if self.n == 1:
            return self
        t %= self.n
        if gcd(t, self.n) != 1:
            raise CyclotomicError(f"{t} is not coprime to {self.n}")
        if t == 1:
            return self
        dense: list[Rational] = [0] * self.n
        for i, c in enumerate(self.coeffs):
            if c:
                dense[i * t % self.n] += c
        return CycNumber(self.n, dense)

    # -- identity ----------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CycNumber):
            return NotImplemented
        return self.n == other.n and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, tuple(map(Fraction, self.coeffs))))
        return self._hash

    def __repr__(self) -> str:
        return f"CycNumber({self.n}, {list(self.coeffs)})"


ZERO = CycNumber.rational(0)
ONE = CycNumber.rational(1)


def root_of_unity(n: int, e: int) -> CycNumber:
    """The canonical form of zeta_n^e."""
    _order_data(n)
    e %= n
    phi = _order_data(n)[2]
    if e < phi:
        out: list[Rational] = [0] * phi
        out[e] = 1
        return CycNumber(n, out, reduce=False)
    dense = [0] * (e + 1)
    dense[e] = 1
    return CycNumber(n, dense)


def detect_order(v: CycNumber) -> int | None:
    """Order of v inside the cyclic group <zeta_n>, or None if v lies outside.

    Only odd p-power orders occur as linear-character values of odd p-groups,
    so values such as -zeta_n (order 2n) deliberately report None.
    """
    n = v.n
    if n == 1:
        return 1 if v.coeffs[0] == 1 else None
    for e in range(n):
        if gcd(e, n) > 1:
            continue
        if v == root_of_unity(n, e):
            return n
    return None


def field_of_values(values: Iterable[CycNumber]) -> int:
    """The d with Q(values) = Q(zeta_d); errors when no such d exists.

    The Galois stabilizer of the value set inside Gal(Q(zeta_e)/Q) must be
    {t : t = 1 mod d} for a divisor d of the common order e; anything else
    means the generated field is not cyclotomic, which breaks the theory
    this package relies on, so it aborts loudly.
    """
    vals = [v for v in values]
    e = 1
    for v in vals:
        if v.n > e:
            if e > 1 and v.n % e:
                raise CyclotomicError(f"incompatible value orders {e} and {v.n}")
            e = v.n
        elif v.n > 1 and e % v.n:
            raise CyclotomicError(f"incompatible value orders {e} and {v.n}")
    if e == 1:
        return 1
    nontrivial = [v for v in vals if v.n > 1]
    stabilizer = [
        t
        for t in range(1, e)
        if gcd(t, e) == 1 and all(v.conj_by(t % v.n) == v for v in nontrivial)
    ]
    p = _order_data(e)[0]
    d = e
    while d >= 1:
        expected = [t for t in range(1, e) if gcd(t, e) == 1 and t % d == 1 % d]
        if stabilizer == expected:
            return d
        d //= p
    raise CyclotomicError("fixed field of the value set is not cyclotomic")
