"""
The two fixed quantales: ([0,1], *, 1) and ([0,inf], +, 0).

Values are plain floats (or numpy arrays of floats). In the extended
non-negative reals the quantale order is the reverse of the numeric order, so
``leq(a, b)`` means ``a >= b`` there, the quantale infimum is the numeric
maximum and the top element is 0.
"""

from dataclasses import dataclass
from typing import Callable, Dict, Optional

import numpy as np

from nucleuskit.core.errors import ConfigurationError, InputError

UNIT_INTERVAL_PRODUCT = "unit-interval-product"
EXTENDED_NONNEG_PLUS = "extended-nonneg-plus"

GRID_TOLERANCE = 1e-12

Binary = Callable[[np.ndarray, np.ndarray], np.ndarray]


def _product_residual(a, s):
    a = np.asarray(a, dtype=float)
    s = np.asarray(s, dtype=float)
    with np.errstate(divide="ignore", invalid="ignore"):
        ratio = np.where(a > 0, s / np.where(a > 0, a, 1.0), 1.0)
    return np.where(a <= s, 1.0, np.minimum(1.0, ratio))


def _plus_residual(a, s):
    a = np.asarray(a, dtype=float)
    s = np.asarray(s, dtype=float)
    with np.errstate(invalid="ignore"):
        diff = np.where(np.isinf(a), 0.0, s - np.where(np.isinf(a), 0.0, a))
    return np.where(np.isinf(a), 0.0, np.maximum(0.0, diff))


def _plus_tensor(a, b):
    return np.add(np.asarray(a, dtype=float), np.asarray(b, dtype=float))


@dataclass(frozen=True)
class Quantale:
    """
    A commutative unital quantale on an interval of the reals.

    ``tensor`` and ``residual`` broadcast over numpy arrays; ``residual(a, s)``
    is the largest t (in quantale order) with ``tensor(t, a) <= s``.
    """

    tag: str
    unit: float
    bottom: float
    top: float
    reversed_order: bool
    tensor: Binary
    residual: Binary

    def leq(self, a, b):
        if self.reversed_order:
            return np.asarray(a) >= np.asarray(b)
        return np.asarray(a) <= np.asarray(b)

    def leq_tol(self, a, b, tol: float = GRID_TOLERANCE):
        a = np.asarray(a, dtype=float)
        b = np.asarray(b, dtype=float)
        if self.reversed_order:
            return (a >= b) | (a + tol >= b)
        return (a <= b) | (a <= b + tol)

    def infimum(self, values: np.ndarray, axis: int = 0) -> np.ndarray:
        """Quantale meet along an axis; the empty meet is the top element"""
        if self.reversed_order:
            return np.max(values, axis=axis, initial=self.top)
        return np.min(values, axis=axis, initial=self.top)

    def supremum(self, values: np.ndarray, axis: int = 0) -> np.ndarray:
        if self.reversed_order:
            return np.min(values, axis=axis, initial=self.bottom)
        return np.max(values, axis=axis, initial=self.bottom)

    def in_carrier(self, values) -> np.ndarray:
        values = np.asarray(values, dtype=float)
        if self.reversed_order:
            return ~np.isnan(values) & (values >= 0.0)
        return ~np.isnan(values) & (values >= 0.0) & (values <= 1.0)

    def check_values(self, values, what: str = "value") -> np.ndarray:
        array = np.asarray(values, dtype=float)
        if np.isnan(array).any():
            raise InputError(f"{what} contains NaN")
        bad = ~self.in_carrier(array)
        if bad.any():
            raise InputError(f"{what} {array[bad].tolist()} outside the carrier of {self.tag}")
        return array

    def grid(self, points: int = 101) -> np.ndarray:
        if self.reversed_order:
            return np.append(np.linspace(0.0, 10.0, points - 1), np.inf)
        return np.linspace(0.0, 1.0, points)

    def adjunction_witness(self, points: int = 101) -> Optional[Dict[str, float]]:
        """First grid triple where t*r <= s and t <= r -o s disagree"""
        grid = self.grid(points)
        t, r, s = np.meshgrid(grid, grid, grid, indexing="ij")
        left = self.leq_tol(self.tensor(t, r), s)
        right = self.leq_tol(t, self.residual(r, s))
        bad = np.argwhere(left != right)
        if len(bad):
            i, j, k = bad[0]
            return {"t": float(grid[i]), "r": float(grid[j]), "s": float(grid[k])}
        return None

    def law_witness(self, points: int = 21) -> Optional[Dict[str, object]]:
        """Associativity, commutativity, unit and monotonicity of the tensor on a grid"""
        grid = self.grid(points)
        a, b, c = np.meshgrid(grid, grid, grid, indexing="ij")
        ab_c = self.tensor(self.tensor(a, b), c)
        a_bc = self.tensor(a, self.tensor(b, c))
        if not np.allclose(ab_c, a_bc, atol=GRID_TOLERANCE, equal_nan=False):
            return {"law": "associativity"}
        if not np.allclose(self.tensor(a, b), self.tensor(b, a), atol=GRID_TOLERANCE):
            return {"law": "commutativity"}
        if not np.allclose(self.tensor(grid, self.unit), grid, atol=GRID_TOLERANCE):
            return {"law": "unit"}
        monotone = ~self.leq(a, b) | self.leq_tol(self.tensor(a, c), self.tensor(b, c))
        if not monotone.all():
            return {"law": "monotonicity"}
        return None

    def check_subcarrier(self, values) -> np.ndarray:
        """Sorted finite sub-carrier closed under tensor and residual"""
        sub = np.unique(self.check_values(values, "sub-carrier"))
        if len(sub) == 0:
            raise ConfigurationError("sub-carrier must not be empty")
        a, b = np.meshgrid(sub, sub, indexing="ij")
        for name, produced in (("tensor", self.tensor(a, b)), ("residual", self.residual(a, b))):
            for value in np.unique(produced):
                if not np.isclose(sub, value, atol=GRID_TOLERANCE, rtol=0.0).any():
                    raise ConfigurationError(
                        f"sub-carrier {sub.tolist()} is not closed under {name}: {value}"
                    )
        return sub


UNIT_INTERVAL = Quantale(
    tag=UNIT_INTERVAL_PRODUCT,
    unit=1.0,
    bottom=0.0,
    top=1.0,
    reversed_order=False,
    tensor=np.multiply,
    residual=_product_residual,
)

EXTENDED_REALS = Quantale(
    tag=EXTENDED_NONNEG_PLUS,
    unit=0.0,
    bottom=float("inf"),
    top=0.0,
    reversed_order=True,
    tensor=_plus_tensor,
    residual=_plus_residual,
)

QUANTALES: Dict[str, Quantale] = {q.tag: q for q in (UNIT_INTERVAL, EXTENDED_REALS)}


def quantale_for(tag: str) -> Quantale:
    try:
        return QUANTALES[tag]
    except KeyError:
        raise InputError(f"unknown quantale {tag!r}; expected one of {sorted(QUANTALES)}")
