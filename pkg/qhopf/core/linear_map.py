"""Linear maps between coordinate spaces, stored as dst x src matrices."""
from dataclasses import dataclass

import numpy as np

from qhopf.core import linalg
from qhopf.core.fields import Field
from qhopf.utils.errors import DimensionMismatch


@dataclass(frozen=True, eq=False)
class LinearMap:
    field: Field
    matrix: np.ndarray

    def __post_init__(self):
        if self.matrix.ndim != 2:
            raise DimensionMismatch(f"a linear map needs a 2-d matrix, got shape {self.matrix.shape}")

    @property
    def src_dim(self) -> int:
        return self.matrix.shape[1]

    @property
    def dst_dim(self) -> int:
        return self.matrix.shape[0]

    @classmethod
    def identity(cls, field: Field, d: int) -> "LinearMap":
        return cls(field, field.eye(d))

    @classmethod
    def zero(cls, field: Field, dst: int, src: int) -> "LinearMap":
        return cls(field, field.zeros((dst, src)))

    @classmethod
    def swap(cls, field: Field, d1: int, d2: int) -> "LinearMap":
        """The flip V1 (x) V2 -> V2 (x) V1."""
        m = field.zeros((d2 * d1, d1 * d2))
        for i in range(d1):
            for j in range(d2):
                m[j * d1 + i, i * d2 + j] = field.one
        return cls(field, m)

    def __matmul__(self, other: "LinearMap") -> "LinearMap":
        """Composition: (self @ other)(x) = self(other(x))."""
        if self.src_dim != other.dst_dim:
            raise DimensionMismatch(f"cannot compose {self.dst_dim}x{self.src_dim} after "
                                    f"{other.dst_dim}x{other.src_dim}")
        return LinearMap(self.field, linalg.matmul(self.field, self.matrix, other.matrix))

    def tensor(self, other: "LinearMap") -> "LinearMap":
        return LinearMap(self.field, linalg.kron(self.field, self.matrix, other.matrix))

    def __add__(self, other: "LinearMap") -> "LinearMap":
        return LinearMap(self.field, self.field.reduce(self.matrix + other.matrix))

    def __sub__(self, other: "LinearMap") -> "LinearMap":
        return LinearMap(self.field, self.field.reduce(self.matrix - other.matrix))

    def scale(self, c) -> "LinearMap":
        return LinearMap(self.field, self.field.reduce(self.matrix * self.field.scalar(c)))

    def inverse(self) -> "LinearMap":
        return LinearMap(self.field, linalg.inverse(self.field, self.matrix))

    def transpose(self) -> "LinearMap":
        return LinearMap(self.field, self.matrix.T.copy())

    def apply(self, vector: np.ndarray) -> np.ndarray:
        return linalg.matmul(self.field, self.matrix, vector)

    def rank(self) -> int:
        return linalg.rank(self.field, self.matrix)

    def equals(self, other: "LinearMap") -> bool:
        return self.field.equal(self.matrix, other.matrix)

    def is_identity(self) -> bool:
        return self.src_dim == self.dst_dim and self.field.equal(self.matrix, self.field.eye(self.src_dim))

    def __repr__(self) -> str:
        return f"LinearMap({self.dst_dim}x{self.src_dim} over {self.field})"


def identity(field: Field, d: int) -> LinearMap:
    return LinearMap.identity(field, d)
