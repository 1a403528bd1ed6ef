"""
Quantale-valued matrices, their derivation operators and nuclei.
"""

import itertools
import logging
import math
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np

from nucleuskit.core.config import DEFAULT_LIMITS
from nucleuskit.core.errors import (
    CapExceeded,
    ConfigurationError,
    InputError,
    NonConvergence,
    ParseError,
)
from nucleuskit.quantale.quantale import (
    EXTENDED_REALS,
    UNIT_INTERVAL,
    Quantale,
    quantale_for,
)

logger = logging.getLogger(__name__)

DEFAULT_EPS = 1e-9
DEFAULT_ITERATION_CAP = 10_000

FixpointPair = Tuple[np.ndarray, np.ndarray]


@dataclass(eq=False)
class QuantaleMatrix:
    """
    An m x k matrix of quantale values, optionally restricted to a finite
    sub-carrier for exact nucleus enumeration.
    """

    quantale: Quantale
    entries: np.ndarray
    subcarrier: Optional[np.ndarray] = None

    def __post_init__(self):
        entries = np.array(self.entries, dtype=float)
        if entries.size == 0:
            entries = entries.reshape(entries.shape if entries.ndim == 2 else (0, 0))
        if entries.ndim != 2:
            raise InputError(f"entries must form a matrix, got shape {entries.shape}")
        self.entries = self.quantale.check_values(entries, "matrix entry")
        if self.subcarrier is not None:
            self.subcarrier = self.quantale.check_subcarrier(self.subcarrier)
            for value in np.unique(self.entries):
                if not np.isclose(self.subcarrier, value, rtol=0.0, atol=1e-12).any():
                    raise ConfigurationError(f"entry {value} is not in the sub-carrier")

    @property
    def shape(self) -> Tuple[int, int]:
        return self.entries.shape

    @property
    def m(self) -> int:
        return self.entries.shape[0]

    @property
    def k(self) -> int:
        return self.entries.shape[1]

    @classmethod
    def from_json(cls, data: Dict[str, Any], source: str = "<matrix>") -> "QuantaleMatrix":
        if not isinstance(data, dict) or "quantale" not in data or "entries" not in data:
            raise ParseError("matrix JSON needs 'quantale' and 'entries'", 1, 1, source)
        quantale = quantale_for(data["quantale"])
        try:
            entries = [[_parse_value(v) for v in row] for row in data["entries"]]
            sub = data.get("subcarrier")
            subcarrier = None if sub is None else [_parse_value(v) for v in sub]
        except (TypeError, ValueError) as e:
            raise ParseError(f"bad matrix value: {e}", 1, 1, source)
        width = len(entries[0]) if entries else 0
        if any(len(row) != width for row in entries):
            raise ParseError("matrix rows have different lengths", 1, 1, source)
        array = np.array(entries, dtype=float).reshape(len(entries), width)
        return cls(quantale, array, None if subcarrier is None else np.array(subcarrier))

    def to_json(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "quantale": self.quantale.tag,
            "entries": [[_format_value(v) for v in row] for row in self.entries],
        }
        if self.subcarrier is not None:
            data["subcarrier"] = [_format_value(v) for v in self.subcarrier]
        return data


def _parse_value(value: Any) -> float:
    if isinstance(value, str):
        if value.strip().lower() in ("inf", "+inf", "infinity"):
            return math.inf
        raise ValueError(f"unexpected string {value!r}")
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise TypeError(f"expected a number, got {value!r}")
    return float(value)


def _format_value(value: float) -> Any:
    return "inf" if math.isinf(value) else float(value)


def _vector(M: QuantaleMatrix, values: Sequence[float], length: int, what: str) -> np.ndarray:
    array = np.asarray(values, dtype=float).reshape(-1)
    if array.shape[0] != length:
        raise InputError(f"{what} must have length {length}, got {array.shape[0]}")
    return M.quantale.check_values(array, what)


def qderive_up(M: QuantaleMatrix, alpha: Sequence[float]) -> np.ndarray:
    """
    beta(u) = inf over x of residual(alpha(x), M(x, u)).

    The infimum is taken in quantale order: numeric min on [0,1], numeric max
    on [0,inf]. With no objects every beta(u) is the top element.
    """
    a = _vector(M, alpha, M.m, "alpha")
    q = M.quantale
    return q.infimum(q.residual(a[:, None], M.entries), axis=0)


def qderive_down(M: QuantaleMatrix, beta: Sequence[float]) -> np.ndarray:
    """alpha(x) = inf over u of residual(beta(u), M(x, u))"""
    b = _vector(M, beta, M.k, "beta")
    q = M.quantale
    return q.infimum(q.residual(b[None, :], M.entries), axis=1)


def _snap(values: np.ndarray, sub: np.ndarray) -> np.ndarray:
    finite_sub = np.where(np.isinf(sub), np.finfo(float).max, sub)
    finite_values = np.where(np.isinf(values), np.finfo(float).max, values)
    nearest = np.abs(finite_values[:, None] - finite_sub[None, :]).argmin(axis=1)
    return sub[nearest]


def _distance(a: np.ndarray, b: np.ndarray) -> float:
    if a.size == 0:
        return 0.0
    same_inf = np.isinf(a) & np.isinf(b) & (np.sign(a) == np.sign(b))
    with np.errstate(invalid="ignore"):
        diff = np.where(same_inf, 0.0, np.abs(a - b))
    return float(np.max(diff))


def _dedup(pairs: List[FixpointPair], eps: float) -> List[FixpointPair]:
    def key(pair: FixpointPair) -> Tuple[float, ...]:
        return tuple(pair[0].tolist()) + tuple(pair[1].tolist())

    unique: List[FixpointPair] = []
    for pair in sorted(pairs, key=key):
        if not any(
            _distance(pair[0], other[0]) <= eps and _distance(pair[1], other[1]) <= eps
            for other in unique
        ):
            unique.append(pair)
    return unique


def _check_enumeration_size(base: int, exponent: int, limit: int, point: str) -> None:
    size = base ** exponent
    if size > limit:
        raise CapExceeded(point, size, limit)


def q_nucleus(
    M: QuantaleMatrix,
    mode: Optional[str] = None,
    eps: float = DEFAULT_EPS,
    iteration_cap: int = DEFAULT_ITERATION_CAP,
    budget: int = DEFAULT_LIMITS.budget,
) -> List[FixpointPair]:
    """
    All fixpoint pairs (alpha, beta) of the Galois connection of M.

    Args:
        M: the matrix
        mode: "exact" (needs a sub-carrier) or "approximate"; defaults to exact
            when the matrix carries a sub-carrier
        eps: tolerance for convergence and deduplication
        iteration_cap: closure iterations allowed per generator
        budget: maximal number of generators

    Returns:
        Pairs sorted lexicographically by (alpha, beta)
    """
    if eps <= 0:
        raise ConfigurationError(f"eps must be positive, got {eps}")
    mode = mode or ("exact" if M.subcarrier is not None else "approximate")
    if mode == "exact":
        return _exact_nucleus(M, eps, budget)
    if mode == "approximate":
        return _approximate_nucleus(M, eps, iteration_cap, budget)
    raise ConfigurationError(f"unknown nucleus mode {mode!r}")


def _exact_nucleus(M: QuantaleMatrix, eps: float, budget: int) -> List[FixpointPair]:
    if M.subcarrier is None:
        raise ConfigurationError("exact mode needs a finite sub-carrier")
    sub = M.subcarrier
    pairs: List[FixpointPair] = []
    if M.m <= M.k:
        _check_enumeration_size(len(sub), M.m, budget, "exact nucleus (objects)")
        for values in itertools.product(sub, repeat=M.m):
            alpha = _snap(qderive_down(M, qderive_up(M, np.array(values))), sub)
            pairs.append((alpha, _snap(qderive_up(M, alpha), sub)))
    else:
        _check_enumeration_size(len(sub), M.k, budget, "exact nucleus (attributes)")
        for values in itertools.product(sub, repeat=M.k):
            alpha = _snap(qderive_down(M, np.array(values)), sub)
            pairs.append((alpha, _snap(qderive_up(M, alpha), sub)))
    result = _dedup(pairs, eps)
    logger.debug(f"exact nucleus: {len(result)} fixpoints over {len(sub)} values")
    return result


def q_nucleus_bruteforce(M: QuantaleMatrix, eps: float = DEFAULT_EPS) -> List[FixpointPair]:
    """Every sub-carrier vector alpha with down(up(alpha)) = alpha"""
    if M.subcarrier is None:
        raise ConfigurationError("brute force needs a finite sub-carrier")
    pairs = []
    for values in itertools.product(M.subcarrier, repeat=M.m):
        alpha = np.array(values, dtype=float)
        beta = qderive_up(M, alpha)
        if _distance(qderive_down(M, beta), alpha) <= eps:
            pairs.append((alpha, _snap(beta, M.subcarrier)))
    return _dedup(pairs, eps)


def _crisp_generators(M: QuantaleMatrix, budget: int) -> List[np.ndarray]:
    q = M.quantale
    _check_enumeration_size(2, M.m, budget, "approximate nucleus generators")
    generators = [
        np.array([q.top if mask >> x & 1 else q.bottom for x in range(M.m)], dtype=float)
        for mask in range(1 << M.m)
    ]
    if M.k <= M.m:
        for mask in range(1 << M.k):
            beta = np.array([q.top if mask >> u & 1 else q.bottom for u in range(M.k)], dtype=float)
            generators.append(qderive_down(M, beta))
    return generators


def _approximate_nucleus(
    M: QuantaleMatrix, eps: float, iteration_cap: int, budget: int
) -> List[FixpointPair]:
    pairs: List[FixpointPair] = []
    for start in _crisp_generators(M, budget):
        alpha = start
        for iteration in range(iteration_cap):
            closed = qderive_down(M, qderive_up(M, alpha))
            change = _distance(closed, alpha)
            alpha = closed
            if change <= eps:
                break
        else:
            raise NonConvergence("approximate nucleus", iteration_cap, change)
        pairs.append((alpha, qderive_up(M, alpha)))
    result = _dedup(pairs, eps)
    logger.debug(f"approximate nucleus: {len(result)} fixpoints from {len(pairs)} generators")
    return result


def transfer_values(source: Quantale, values) -> np.ndarray:
    """exp(-x) from [0,inf] to [0,1]; -ln(x) with 0 -> inf the other way"""
    array = np.asarray(values, dtype=float)
    if source is EXTENDED_REALS:
        return np.exp(-array)
    with np.errstate(divide="ignore"):
        return -np.log(array) + 0.0


def transfer_enrichment(M: QuantaleMatrix) -> QuantaleMatrix:
    """The same matrix read in the other quantale"""
    target = UNIT_INTERVAL if M.quantale is EXTENDED_REALS else EXTENDED_REALS
    entries = transfer_values(M.quantale, M.entries)
    subcarrier = None
    if M.subcarrier is not None:
        subcarrier = transfer_values(M.quantale, M.subcarrier)
    return QuantaleMatrix(target, entries, subcarrier)


def nucleus_to_json(M: QuantaleMatrix, pairs: List[FixpointPair]) -> Dict[str, Any]:
    return {
        "quantale": M.quantale.tag,
        "fixpoints": [
            {
                "alpha": [_format_value(v) for v in alpha],
                "beta": [_format_value(v) for v in beta],
            }
            for alpha, beta in pairs
        ],
    }


def random_matrix(
    quantale: Quantale, m: int, k: int, rng: np.random.Generator, inf_rate: float = 0.1
) -> QuantaleMatrix:
    if quantale is UNIT_INTERVAL:
        entries = rng.random((m, k))
        entries[rng.random((m, k)) < inf_rate] = 0.0
    else:
        entries = rng.exponential(2.0, (m, k))
        entries[rng.random((m, k)) < inf_rate] = np.inf
    return QuantaleMatrix(quantale, entries)
