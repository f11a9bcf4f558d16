"""Dense integer coefficient vectors."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True, eq=False)
class DensePoly:
    """Exact integer polynomial; ``coefficients[k]`` multiplies ``x**k``."""

    coefficients: np.ndarray

    def __post_init__(self) -> None:
        arr = np.asarray(self.coefficients)
        if arr.ndim != 1 or not np.issubdtype(arr.dtype, np.integer):
            raise TypeError("DensePoly needs a 1-d integer array")
        object.__setattr__(self, "coefficients", arr)

    @classmethod
    def from_list(cls, coeffs, dtype=np.int64) -> "DensePoly":
        return cls(np.asarray(list(coeffs), dtype=dtype))

    @property
    def degree(self) -> int:
        nz = np.flatnonzero(self.coefficients)
        return int(nz[-1]) if nz.size else -1

    def height(self) -> int:
        if self.coefficients.size == 0:
            return 0
        return int(np.abs(self.coefficients.astype(np.int64)).max())

    def tolist(self) -> list[int]:
        return [int(c) for c in self.coefficients[: self.degree + 1]]

    def __len__(self) -> int:
        return self.degree + 1

    def __getitem__(self, k: int) -> int:
        if 0 <= k < self.coefficients.size:
            return int(self.coefficients[k])
        return 0

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DensePoly):
            return NotImplemented
        a = self.coefficients[: self.degree + 1]
        b = other.coefficients[: other.degree + 1]
        return a.shape == b.shape and bool(np.array_equal(a, b))

    def __repr__(self) -> str:
        return f"DensePoly({self.tolist()})"

    def substitute_power(self, k: int) -> "DensePoly":
        """Coefficients of ``f(x**k)``."""
        out = np.zeros(self.degree * k + 1, dtype=self.coefficients.dtype)
        out[::k] = self.coefficients[: self.degree + 1]
        return DensePoly(out)

    def negate_variable(self) -> "DensePoly":
        """Coefficients of ``f(-x)``."""
        out = self.coefficients[: self.degree + 1].copy()
        out[1::2] *= -1
        return DensePoly(out)
