"""Disjoint-set forest with union by rank and path compression."""

from __future__ import annotations

from collections import Counter
from collections.abc import Hashable


class UnionFind:
    """Disjoint sets over hashable items; unseen items are singletons.

    Examples
    --------
    >>> uf = UnionFind()
    >>> uf.union(1, 2)
    True
    >>> uf.union(2, 1)
    False
    >>> uf.connected(1, 2)
    True
    """

    def __init__(self) -> None:
        self.parent: dict[Hashable, Hashable] = {}
        self.rank: Counter[Hashable] = Counter()

    def find(self, x: Hashable) -> Hashable:
        parent = self.parent
        root = parent.setdefault(x, x)
        while parent[root] != root:
            root = parent[root]
        # path compression
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(self, x: Hashable, y: Hashable) -> bool:
        """Merge the sets of x and y; False if they were already one set."""
        px = self.find(x)
        py = self.find(y)
        if px == py:
            return False
        if self.rank[px] < self.rank[py]:
            px, py = py, px
        self.parent[py] = px
        if self.rank[px] == self.rank[py]:
            self.rank[px] += 1
        return True

    def connected(self, x: Hashable, y: Hashable) -> bool:
        return self.find(x) == self.find(y)
