"""Exact arithmetic in GF(p^m) with a canonical integer element encoding.

Element ``e`` in [0, q) encodes the polynomial whose GF(p) coefficients are
the base-p digits of ``e`` (digit i = coefficient of x^i).  0 and 1 are the
additive and multiplicative identities; for GF(4) with modulus x^2+x+1 the
encodings 0,1,2,3 are 0, 1, a, a^2 for a primitive element a.

Extension fields of order up to 2^16 get log/antilog tables at construction
time; larger orders (with a caller-supplied modulus) fall back to polynomial
arithmetic.  Fields are immutable after construction and safe to share
across workers.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from .errors import (
    DivisionByZeroError,
    FieldMismatchError,
    NotPrimeError,
    ReduciblePolynomialError,
    UnsupportedOrderError,
)

TABLE_ORDER_LIMIT = 1 << 16


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def _distinct_prime_factors(n: int) -> list[int]:
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


def _digits(e: int, p: int, m: int) -> tuple[int, ...]:
    """Base-p digits of e, lowest first, padded to length m."""
    out = []
    for _ in range(m):
        out.append(e % p)
        e //= p
    return tuple(out)


def _poly_rem(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    """Remainder of a modulo monic b, coefficients low-to-high over GF(p)."""
    a = list(a)
    db = len(b) - 1
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i] % p
        if c:
            for j in range(db + 1):
                a[i - db + j] = (a[i - db + j] - c * b[j]) % p
    out = [c % p for c in a[:db]]
    while len(out) < db:
        out.append(0)
    return out


def _poly_mulmod(a: Sequence[int], b: Sequence[int], mod: Sequence[int], p: int) -> list[int]:
    res = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    res[i + j] = (res[i + j] + ai * bj) % p
    return _poly_rem(res, mod, p)


def is_irreducible(poly: Sequence[int], p: int) -> bool:
    """Test a monic polynomial over GF(p) (coefficients low-to-high) for
    irreducibility by root search plus trial division up to half degree."""
    poly = [c % p for c in poly]
    deg = len(poly) - 1
    if deg < 1 or poly[-1] != 1:
        return False
    if deg == 1:
        return True
    for x in range(p):
        acc = 0
        for c in reversed(poly):
            acc = (acc * x + c) % p
        if acc == 0:
            return False
    # no linear factors; for degree <= 3 that settles it
    if deg <= 3:
        return True
    for ddeg in range(2, deg // 2 + 1):
        for e in range(p ** ddeg):
            divisor = list(_digits(e, p, ddeg)) + [1]
            if not any(_poly_rem(poly, divisor, p)):
                return False
    return True


_DEFAULT_MODULUS_CACHE: dict[tuple[int, int], tuple[int, ...]] = {}


def default_modulus(p: int, m: int) -> tuple[int, ...]:
    """First monic irreducible of degree m over GF(p), scanning the non-leading
    coefficient vector as a base-p counter.  Deterministic; cached."""
    key = (p, m)
    if key not in _DEFAULT_MODULUS_CACHE:
        for e in range(p ** m):
            cand = _digits(e, p, m) + (1,)
            if is_irreducible(cand, p):
                _DEFAULT_MODULUS_CACHE[key] = cand
                break
        else:  # cannot happen: irreducibles exist for every (p, m)
            raise UnsupportedOrderError(f"no irreducible polynomial found for GF({p}^{m})")
    return _DEFAULT_MODULUS_CACHE[key]


class Field:
    """GF(p^m) arithmetic on canonically encoded integers.

    Field identity (equality, hashing) is the (p, m, modulus) triple, so
    elements of structurally different fields never silently mix.
    """

    __slots__ = ("p", "m", "q", "modulus_poly", "_exp", "_log", "_hash")

    def __init__(self, p: int, m: int = 1, modulus_poly: Optional[Sequence[int]] = None):
        if not isinstance(p, int) or not is_prime(p):
            raise NotPrimeError(f"characteristic must be prime, got {p!r}")
        if not isinstance(m, int) or m < 1:
            raise ValueError(f"extension degree must be a positive integer, got {m!r}")
        q = p ** m
        if m == 1:
            if modulus_poly not in (None, (), []):
                raise ValueError("prime fields take no modulus polynomial")
            modulus: tuple[int, ...] = ()
        else:
            if modulus_poly is None:
                if q > TABLE_ORDER_LIMIT:
                    raise UnsupportedOrderError(
                        f"GF({p}^{m}) is beyond the built-in modulus range "
                        f"(order {TABLE_ORDER_LIMIT}); supply modulus_poly")
                modulus = default_modulus(p, m)
            else:
                modulus = tuple(int(c) % p for c in modulus_poly)
                if len(modulus) != m + 1 or modulus[-1] != 1:
                    raise ReduciblePolynomialError(
                        f"modulus must be monic of degree {m}, got {tuple(modulus_poly)}")
                if not is_irreducible(modulus, p):
                    raise ReduciblePolynomialError(
                        f"modulus {modulus} is reducible over GF({p})")
        self.p = p
        self.m = m
        self.q = q
        self.modulus_poly = modulus
        self._hash = hash((p, m, modulus))
        self._exp: Optional[list[int]] = None
        self._log: Optional[list[int]] = None
        if m > 1 and q <= TABLE_ORDER_LIMIT:
            self._build_tables()

    # -- construction helpers ------------------------------------------

    def _raw_mul(self, a: int, b: int) -> int:
        """Table-free product, used to bootstrap the tables."""
        if self.m == 1:
            return (a * b) % self.p
        pa = _digits(a, self.p, self.m)
        pb = _digits(b, self.p, self.m)
        digits = _poly_mulmod(pa, pb, self.modulus_poly, self.p)
        enc = 0
        for c in reversed(digits):
            enc = enc * self.p + c
        return enc

    def _raw_pow(self, a: int, e: int) -> int:
        r = 1
        while e:
            if e & 1:
                r = self._raw_mul(r, a)
            a = self._raw_mul(a, a)
            e >>= 1
        return r

    def _build_tables(self) -> None:
        order = self.q - 1
        factors = _distinct_prime_factors(order)
        gen = 0
        for g in range(2, self.q):
            if all(self._raw_pow(g, order // r) != 1 for r in factors):
                gen = g
                break
        exp = [1] * order
        x = 1
        for i in range(1, order):
            x = self._raw_mul(x, gen)
            exp[i] = x
        log = [0] * self.q
        for i, v in enumerate(exp):
            log[v] = i
        self._exp = exp
        self._log = log

    # -- scalar arithmetic on encodings ----------------------------------

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if self.m == 1:
            return (a + b) % self.p
        s, mult = 0, 1
        for _ in range(self.m):
            s += ((a + b) % self.p) * mult
            a //= self.p
            b //= self.p
            mult *= self.p
        return s

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        if self.m == 1:
            return (-a) % self.p
        s, mult = 0, 1
        for _ in range(self.m):
            s += ((-a) % self.p) * mult
            a //= self.p
            mult *= self.p
        return s

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a * b) % self.p
        if self._exp is not None:
            if a == 0 or b == 0:
                return 0
            return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]
        return self._raw_mul(a, b)

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZeroError(f"0 has no inverse in {self!r}")
        if self.m == 1:
            return pow(a, self.p - 2, self.p)
        if self._exp is not None:
            return self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)]
        return self._raw_pow(a, self.q - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow(self.inv(a), -e)
        if a == 0:
            return 1 if e == 0 else 0
        if self._log is not None:
            return self._exp[(self._log[a] * e) % (self.q - 1)]
        if self.m == 1:
            return pow(a, e, self.p)
        return self._raw_pow(a, e)

    # -- elements ---------------------------------------------------------

    def element(self, value: int) -> "FieldElement":
        return FieldElement(value, self)

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(0, self)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(1, self)

    def elements(self) -> Iterator["FieldElement"]:
        for v in range(self.q):
            yield FieldElement(v, self)

    # -- identity ----------------------------------------------------------

    def __eq__(self, other) -> bool:
        return (isinstance(other, Field)
                and (self.p, self.m, self.modulus_poly)
                == (other.p, other.m, other.modulus_poly))

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        if self.m == 1:
            return f"GF({self.q})"
        return f"GF({self.q}, poly={','.join(map(str, self.modulus_poly))})"


@dataclass(frozen=True)
class FieldElement:
    """A single element of a Field, by canonical encoding.

    Integer operands are taken as encodings of the same field.
    """

    value: int
    field: Field

    def __post_init__(self):
        if not 0 <= self.value < self.field.q:
            raise ValueError(f"encoding {self.value} outside [0, {self.field.q})")

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldMismatchError(
                    f"operands from {self.field!r} and {other.field!r}")
            return other.value
        if isinstance(other, int):
            if not 0 <= other < self.field.q:
                raise ValueError(f"encoding {other} outside [0, {self.field.q})")
            return other
        return NotImplemented

    def _wrap(self, value: int) -> "FieldElement":
        return FieldElement(value, self.field)

    def __add__(self, other):
        v = self._coerce(other)
        return NotImplemented if v is NotImplemented else self._wrap(self.field.add(self.value, v))

    __radd__ = __add__

    def __sub__(self, other):
        v = self._coerce(other)
        return NotImplemented if v is NotImplemented else self._wrap(self.field.sub(self.value, v))

    def __rsub__(self, other):
        v = self._coerce(other)
        return NotImplemented if v is NotImplemented else self._wrap(self.field.sub(v, self.value))

    def __mul__(self, other):
        v = self._coerce(other)
        return NotImplemented if v is NotImplemented else self._wrap(self.field.mul(self.value, v))

    __rmul__ = __mul__

    def __truediv__(self, other):
        v = self._coerce(other)
        return NotImplemented if v is NotImplemented else self._wrap(self.field.div(self.value, v))

    def __rtruediv__(self, other):
        v = self._coerce(other)
        return NotImplemented if v is NotImplemented else self._wrap(self.field.div(v, self.value))

    def __neg__(self):
        return self._wrap(self.field.neg(self.value))

    def __pow__(self, e: int):
        return self._wrap(self.field.pow(self.value, e))

    def __bool__(self) -> bool:
        return self.value != 0

    def __repr__(self) -> str:
        return f"{self.value}@{self.field!r}"


def make_field(p: int, m: int = 1, modulus_poly: Optional[Sequence[int]] = None) -> Field:
    """Construct GF(p^m), verifying primality and modulus irreducibility."""
    return Field(p, m, modulus_poly)


def GF(q: int, modulus_poly: Optional[Sequence[int]] = None) -> Field:
    """Construct the field of order q, factoring q as a prime power."""
    if q < 2:
        raise NotPrimeError(f"field order must be >= 2, got {q}")
    p = 2
    while q % p:
        p += 1
        if p * p > q:
            p = q
            break
    m = 0
    r = q
    while r % p == 0:
        r //= p
        m += 1
    if r != 1:
        raise NotPrimeError(f"{q} is not a prime power")
    return Field(p, m, modulus_poly)
