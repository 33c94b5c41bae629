"""Elements of H^{(x)k} and the basic tensor operations on them."""
from dataclasses import dataclass
from typing import Any, Sequence

import numpy as np

from qhopf.core import linalg
from qhopf.core.fields import Field
from qhopf.core.legs import LegProgram
from qhopf.utils.errors import ConsistencyFailure, DimensionMismatch, NotInvertible
from qhopf.utils.reports import IdentityResult, VerificationReport


@dataclass(frozen=True, eq=False)
class AlgebraElement:
    """Dense coefficients of an element of H^{(x)k}; axis t is leg t+1."""

    field: Field
    coeffs: np.ndarray

    @property
    def legs(self) -> int:
        return self.coeffs.ndim

    @property
    def dim(self) -> int:
        return self.coeffs.shape[0] if self.coeffs.ndim else 1

    @classmethod
    def scalar(cls, field: Field, value) -> "AlgebraElement":
        return cls(field, field.array(value))

    @classmethod
    def basis(cls, field: Field, n: int, i: int) -> "AlgebraElement":
        c = field.zeros(n)
        c[i] = field.one
        return cls(field, c)

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._check(other)
        return AlgebraElement(self.field, self.field.reduce(self.coeffs + other.coeffs))

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._check(other)
        return AlgebraElement(self.field, self.field.reduce(self.coeffs - other.coeffs))

    def __neg__(self) -> "AlgebraElement":
        return AlgebraElement(self.field, self.field.reduce(-self.coeffs))

    def scale(self, c) -> "AlgebraElement":
        return AlgebraElement(self.field, self.field.reduce(self.coeffs * self.field.scalar(c)))

    def permute(self, order: Sequence[int]) -> "AlgebraElement":
        """Leg t of the result is leg order[t] of self (0-based)."""
        return AlgebraElement(self.field, np.transpose(self.coeffs, list(order)).copy())

    def flip(self) -> "AlgebraElement":
        """x_{21} for a two-leg element."""
        return self.permute([1, 0])

    def equals(self, other: "AlgebraElement") -> bool:
        return self.coeffs.shape == other.coeffs.shape and self.field.equal(self.coeffs, other.coeffs)

    def is_zero(self) -> bool:
        return self.field.is_zero(self.coeffs)

    def _check(self, other: "AlgebraElement") -> None:
        if self.coeffs.shape != other.coeffs.shape:
            raise DimensionMismatch(f"elements of shapes {self.coeffs.shape} and {other.coeffs.shape}")

    def __repr__(self) -> str:
        return f"AlgebraElement(legs={self.legs}, {self.field.format_array(self.coeffs)})"


def unit_element(algebra: Any, legs: int) -> AlgebraElement:
    field = algebra.field
    arr = np.array(field.one, dtype=object if field.dtype is object else field.dtype)
    for _ in range(legs):
        arr = np.multiply.outer(arr, algebra.unit)
    return AlgebraElement(field, field.reduce(arr))


def tensor_embed(algebra: Any, x: AlgebraElement, positions: Sequence[int], total: int) -> AlgebraElement:
    """Place the legs of x on the given 1-based positions, the unit elsewhere.

    ``tensor_embed(H, phi, [3, 1, 2], 3)`` is the permuted reassociator with
    X^1 on leg 3, X^2 on leg 1 and X^3 on leg 2.
    """
    positions = list(positions)
    if len(positions) != x.legs:
        raise DimensionMismatch(f"{x.legs}-leg element needs {x.legs} positions, got {positions}")
    if len(set(positions)) != len(positions):
        raise DimensionMismatch(f"duplicate positions {positions}")
    if any(p < 1 or p > total for p in positions):
        raise DimensionMismatch(f"positions {positions} out of range 1..{total}")
    prog = LegProgram(algebra).load(x, *[f"l{p}" for p in positions])
    rest = [f"l{p}" for p in range(1, total + 1) if p not in positions]
    if rest:
        prog.unit(*rest)
    prog.output(*[f"l{p}" for p in range(1, total + 1)])
    return AlgebraElement(algebra.field, prog.run())


def multiply(algebra: Any, *elements: AlgebraElement) -> AlgebraElement:
    """Componentwise product in H^{(x)k}."""
    k = elements[0].legs
    if any(e.legs != k for e in elements):
        raise DimensionMismatch("all factors must have the same number of legs")
    if k == 0:
        value = algebra.field.one
        for e in elements:
            value = algebra.field.scalar(value * e.coeffs.item())
        return AlgebraElement.scalar(algebra.field, value)
    prog = LegProgram(algebra).load(elements[0], *[f"o{t}" for t in range(k)])
    for i, e in enumerate(elements[1:]):
        prog.load(e, *[f"f{i}_{t}" for t in range(k)])
        for t in range(k):
            prog.mul(f"o{t}", f"f{i}_{t}", out=f"o{t}")
    prog.output(*[f"o{t}" for t in range(k)])
    return AlgebraElement(algebra.field, prog.run())


def left_multiplication_matrix(algebra: Any, x: AlgebraElement, right: bool = False) -> np.ndarray:
    """Matrix of y -> x y (or y -> y x) on H^{(x)k}."""
    k = x.legs
    prog = LegProgram(algebra).load(x, *[f"x{t}" for t in range(k)])
    for t in range(k):
        prog.ident(f"y{t}", f"yin{t}")
    for t in range(k):
        if right:
            prog.mul(f"y{t}", f"x{t}", out=f"o{t}")
        else:
            prog.mul(f"x{t}", f"y{t}", out=f"o{t}")
    prog.output(*[f"o{t}" for t in range(k)], *[f"yin{t}" for t in range(k)])
    return prog.matrix(k)


def invert_element(algebra: Any, x: AlgebraElement) -> AlgebraElement:
    """Two-sided inverse of x in H^{(x)k}, by solving x y = 1."""
    field = algebra.field
    one = unit_element(algebra, x.legs)
    if x.is_zero():
        raise NotInvertible("the zero element is not invertible")
    try:
        y = linalg.solve(field, left_multiplication_matrix(algebra, x), one.coeffs.reshape(-1))
    except NotInvertible:
        raise NotInvertible("element has no right inverse") from None
    inv = AlgebraElement(field, y.reshape(x.coeffs.shape))
    if not multiply(algebra, inv, x).equals(one) or not multiply(algebra, x, inv).equals(one):
        raise NotInvertible("solution of x y = 1 is not a two-sided inverse")
    return inv


def map_algebra(field: Field, src: Any, dst: Any, matrix: np.ndarray, anti: bool = False,
                subject: str = "map") -> VerificationReport:
    """Check that a dst x src matrix is a unital algebra (anti-)homomorphism."""
    report = VerificationReport(subject=subject)
    if matrix.shape != (dst.dim, src.dim):
        raise DimensionMismatch(f"map of shape {matrix.shape} between algebras of dims {src.dim}, {dst.dim}")
    unit_ok = field.equal(linalg.matmul(field, matrix, src.unit), dst.unit)
    report.record("unit", unit_ok, "" if unit_ok else "unit is not preserved",
                  field.format_array(linalg.matmul(field, matrix, src.unit)), field.format_array(dst.unit))
    # f(e_i e_j) against f(e_i) f(e_j) (or f(e_j) f(e_i)), for all i, j at once
    lhs = LegProgram(src).ident("a", "i").ident("b", "j").mul("a", "b").apply("a", matrix) \
        .output("a", "i", "j").run()
    prog = LegProgram(dst).load(matrix, "fa", "i").load(matrix, "fb", "j")
    prog.mul(*(("fb", "fa") if anti else ("fa", "fb")), out="c").output("c", "i", "j")
    rhs = prog.run()
    tag = "anti-multiplicative" if anti else "multiplicative"
    report.add(compare(field, tag, lhs, rhs))
    return report


def compare(field: Field, tag: str, lhs: np.ndarray, rhs: np.ndarray, batch_axes: int = 0):
    """An IdentityResult for lhs == rhs; on failure names the first bad index."""
    lhs = np.asarray(lhs)
    rhs = np.asarray(rhs)
    if lhs.shape != rhs.shape:
        return IdentityResult(tag=tag, passed=False, detail=f"shape {lhs.shape} != {rhs.shape}")
    diff = field.reduce(lhs - rhs)
    bad = np.argwhere(diff != 0)
    if len(bad) == 0:
        return IdentityResult(tag=tag, passed=True)
    first = tuple(int(i) for i in bad[0])
    if batch_axes:
        # report the whole slice for the first failing basis index
        where = first[-batch_axes:]
        sl = (Ellipsis,) + where
        detail = f"fails at basis index {where}"
        return IdentityResult(tag=tag, passed=False, detail=detail,
                              lhs=field.format_array(lhs[sl]), rhs=field.format_array(rhs[sl]))
    return IdentityResult(tag=tag, passed=False, detail=f"first difference at {first}",
                          lhs=field.format_array(lhs), rhs=field.format_array(rhs))


def require(field: Field, tag: str, lhs: np.ndarray, rhs: np.ndarray, batch_axes: int = 0) -> None:
    """Raise ConsistencyFailure unless lhs == rhs."""
    result = compare(field, tag, lhs, rhs, batch_axes)
    if not result.passed:
        raise ConsistencyFailure(tag, result.detail, result.lhs, result.rhs)

