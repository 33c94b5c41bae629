"""Exact scalar fields: the rationals and prime fields.

Arrays over a field are numpy arrays. Rationals use object arrays of
``fractions.Fraction``; prime fields use ``int64`` arrays kept reduced mod p
(object arrays of Python ints once p is too large for int64 products).
"""
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Optional, Sequence, Union

import numpy as np

from qhopf.utils.errors import FieldError, NotInvertible

Scalar = Union[int, Fraction]

_INT64_LIMIT = 2 ** 20


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class Field:
    """Either the rationals (``p is None``) or GF(p)."""

    p: Optional[int] = None

    def __post_init__(self):
        if self.p is not None and not _is_prime(self.p):
            raise FieldError(f"modulus {self.p} is not prime")

    # -- construction -------------------------------------------------
    @classmethod
    def rationals(cls) -> "Field":
        return cls(None)

    @classmethod
    def prime(cls, p: int) -> "Field":
        return cls(int(p))

    @classmethod
    def parse(cls, text: str) -> "Field":
        """Accepts ``q`` or ``fp:<p>`` (also ``F<p>``)."""
        text = text.strip().lower()
        if text in {"q", "qq", "rationals"}:
            return cls.rationals()
        for prefix in ("fp:", "f", "gf"):
            if text.startswith(prefix) and text[len(prefix):].isdigit():
                return cls.prime(int(text[len(prefix):]))
        raise FieldError(f"unknown field descriptor '{text}'")

    @property
    def is_rational(self) -> bool:
        return self.p is None

    @property
    def dtype(self):
        if self.p is not None and self.p < _INT64_LIMIT:
            return np.int64
        return object

    def describe(self) -> str:
        return "q" if self.p is None else f"fp:{self.p}"

    def __str__(self) -> str:
        return "Q" if self.p is None else f"F{self.p}"

    # -- scalars ------------------------------------------------------
    def scalar(self, value) -> Scalar:
        """Coerce an int, Fraction or 'a/b' string into the field."""
        if isinstance(value, str):
            value = Fraction(value.strip())
        if isinstance(value, np.integer):
            value = int(value)
        if isinstance(value, (float, np.floating)):
            raise FieldError("floating point values are not accepted")
        if self.p is None:
            return Fraction(value)
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise FieldError(f"{value} has no image in F{self.p}")
            return (value.numerator * pow(value.denominator, -1, self.p)) % self.p
        return int(value) % self.p

    @property
    def zero(self) -> Scalar:
        return self.scalar(0)

    @property
    def one(self) -> Scalar:
        return self.scalar(1)

    def inv(self, x) -> Scalar:
        x = self.scalar(x)
        if x == 0:
            raise NotInvertible("zero has no inverse")
        if self.p is None:
            return 1 / x
        return pow(int(x), -1, self.p)

    def neg(self, x) -> Scalar:
        return self.scalar(-self.scalar(x))

    def format(self, x) -> str:
        x = self.scalar(x)
        if self.p is None:
            return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
        return str(int(x))

    def root_of_unity(self, n: int) -> Scalar:
        """A primitive n-th root of unity, if the field has one."""
        if n == 1:
            return self.one
        if self.p is None:
            if n == 2:
                return self.scalar(-1)
            raise FieldError(f"Q has no primitive {n}-th root of unity")
        if (self.p - 1) % n != 0:
            raise FieldError(f"F{self.p} has no primitive {n}-th root of unity")
        for g in range(2, self.p):
            z = pow(g, (self.p - 1) // n, self.p)
            if all(pow(z, n // d, self.p) != 1 for d in _prime_factors(n)):
                return z
        raise FieldError(f"no primitive {n}-th root of unity found in F{self.p}")

    def sqrt(self, x) -> Scalar:
        x = self.scalar(x)
        if self.p is None:
            num, den = x.numerator, x.denominator
            rn, rd = _isqrt_exact(num), _isqrt_exact(den)
            if rn is None or rd is None:
                raise FieldError(f"{x} is not a square in Q")
            return Fraction(rn, rd)
        for y in range(self.p):
            if (y * y - x) % self.p == 0:
                return y
        raise FieldError(f"{x} is not a square in F{self.p}")

    # -- arrays -------------------------------------------------------
    def zeros(self, shape) -> np.ndarray:
        if self.dtype is object:
            out = np.empty(shape, dtype=object)
            out.fill(self.zero)
            return out
        return np.zeros(shape, dtype=np.int64)

    def eye(self, d: int) -> np.ndarray:
        out = self.zeros((d, d))
        for i in range(d):
            out[i, i] = self.one
        return out

    def array(self, values) -> np.ndarray:
        """Build a reduced field array from nested sequences of scalars."""
        raw = np.array(values, dtype=object)
        out = np.empty(raw.shape, dtype=object)
        for idx, v in np.ndenumerate(raw):
            out[idx] = self.scalar(v)
        if self.dtype is object:
            return out
        return out.astype(np.int64)

    def reduce(self, arr: np.ndarray) -> np.ndarray:
        if self.p is None:
            return arr
        return np.mod(arr, self.p)

    def equal(self, a: np.ndarray, b: np.ndarray) -> bool:
        a = np.asarray(a)
        b = np.asarray(b)
        if a.shape != b.shape:
            return False
        return bool(np.all(self.reduce(a - b) == 0))

    def is_zero(self, a: np.ndarray) -> bool:
        return bool(np.all(self.reduce(np.asarray(a)) == 0))

    def random(self, rng: np.random.Generator, shape, low: int = -3, high: int = 4) -> np.ndarray:
        """Seeded random array (uniform in F_p; small integers over Q)."""
        if self.p is None:
            ints = rng.integers(low, high, size=shape)
        else:
            ints = rng.integers(0, self.p, size=shape)
        return self.array(ints.tolist()) if np.ndim(ints) else self.scalar(int(ints))

    def format_array(self, arr: np.ndarray) -> str:
        arr = np.asarray(arr)
        flat = [self.format(x) for x in arr.reshape(-1)]
        return f"shape={arr.shape} [" + ", ".join(flat) + "]"


def _prime_factors(n: int) -> Iterable[int]:
    out, d = set(), 2
    while d * d <= n:
        while n % d == 0:
            out.add(d)
            n //= d
        d += 1
    if n > 1:
        out.add(n)
    return out


def _isqrt_exact(n: int):
    if n < 0:
        return None
    r = math.isqrt(n)
    return r if r * r == n else None


@lru_cache(maxsize=None)
def get_field(descriptor: str) -> Field:
    return Field.parse(descriptor)


def scalars(field: Field, values: Sequence) -> list:
    return [field.scalar(v) for v in values]
