"""Disjoint sets with union by rank and path compression"""

from typing import Callable, Dict, Hashable, Iterable, List


class UnionFind:
    def __init__(self, items: Iterable[Hashable]):
        self.parent: Dict[Hashable, Hashable] = {x: x for x in items}
        self.rank: Dict[Hashable, int] = {x: 0 for x in self.parent}

    def find(self, x: Hashable) -> Hashable:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x: Hashable, y: Hashable) -> None:
        x, y = self.find(x), self.find(y)
        if x == y:
            return
        if self.rank[x] < self.rank[y]:
            x, y = y, x
        elif self.rank[x] == self.rank[y]:
            self.rank[x] += 1
        self.parent[y] = x
        del self.rank[y]

    def classes(self) -> List[List[Hashable]]:
        """Equivalence classes, each sorted, ordered by first member"""
        groups: Dict[Hashable, List[Hashable]] = {}
        for x in self.parent:
            groups.setdefault(self.find(x), []).append(x)
        return sorted((sorted(group) for group in groups.values()), key=lambda g: g[0])

    def __len__(self) -> int:
        return len(self.rank)


def find_orbits(gens: Iterable, space: Iterable, action: Callable) -> List[List[Hashable]]:
    """Orbits of a group action given by generators"""
    space = list(space)
    uf = UnionFind(space)
    for g in gens:
        for x in space:
            uf.union(x, action(g, x))
    return uf.classes()
