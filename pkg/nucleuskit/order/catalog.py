"""
Posets up to isomorphism, and random posets for sampled sweeps.
"""

import logging
import random
from functools import lru_cache
from typing import Dict, List, Tuple

import networkx as nx

from nucleuskit.core.errors import ConfigurationError
from nucleuskit.order.poset import FinPoset

logger = logging.getLogger(__name__)

CATALOG_LIMIT = 7


def _strict_digraph(P: FinPoset) -> nx.DiGraph:
    graph = nx.DiGraph()
    graph.add_nodes_from(range(P.n))
    graph.add_edges_from((x, y) for x in range(P.n) for y in range(P.n) if x != y and P.leq[x][y])
    return graph


def _invariant(P: FinPoset) -> Tuple[Tuple[int, int], ...]:
    return tuple(sorted((bin(P.down[x]).count("1"), bin(P.up[x]).count("1")) for x in range(P.n)))


def _extend_by_maximal(P: FinPoset, ideal: int) -> FinPoset:
    n = P.n
    rows = [list(row) + [bool(ideal >> x & 1)] for x, row in enumerate(P.leq)]
    rows.append([False] * n + [True])
    return FinPoset(n + 1, tuple(tuple(row) for row in rows))


@lru_cache(maxsize=None)
def poset_catalog(n: int) -> Tuple[FinPoset, ...]:
    """
    One representative of every isomorphism class of n-element posets.

    Every (n+1)-element poset arises from an n-element one by adding a maximal
    element above some order ideal, so classes are grown level by level and
    deduplicated with networkx isomorphism tests inside invariant buckets.
    """
    if n < 0 or n > CATALOG_LIMIT:
        raise ConfigurationError(f"poset catalog supports 0..{CATALOG_LIMIT} elements, got {n}")
    if n == 0:
        return (FinPoset(0, ()),)

    buckets: Dict[Tuple[Tuple[int, int], ...], List[Tuple[FinPoset, nx.DiGraph]]] = {}
    ordered: List[FinPoset] = []
    for base in poset_catalog(n - 1):
        for ideal in range(1 << base.n):
            if not base.is_lower_closed(ideal):
                continue
            candidate = _extend_by_maximal(base, ideal)
            key = _invariant(candidate)
            graph = _strict_digraph(candidate)
            bucket = buckets.setdefault(key, [])
            if any(nx.is_isomorphic(graph, other) for _, other in bucket):
                continue
            bucket.append((candidate, graph))
            ordered.append(candidate)
    logger.debug(f"catalog of {n}-element posets has {len(ordered)} classes")
    return tuple(ordered)


def random_poset(n: int, rng: random.Random, density: float = 0.35) -> FinPoset:
    """Transitive closure of a random DAG on 0..n-1 with edges i -> j for i < j"""
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < density]
    return FinPoset.from_relation(n, pairs)
