class UnionFind:
    def __init__(self, size: int):
        self.parent = list(range(size))

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x: int, y: int) -> None:
        x, y = self.find(x), self.find(y)
        if x != y:
            # smaller root wins so roots are class minima
            if y < x:
                x, y = y, x
            self.parent[y] = x


def union_find_quotient(size: int, pairs) -> tuple[int, tuple[int, ...]]:
    """Quotient of ``range(size)`` by the equivalence generated by ``pairs``.

    Classes are numbered by ascending minimal representative.
    """
    uf = UnionFind(size)
    for a, b in pairs:
        if not (0 <= a < size and 0 <= b < size):
            raise IndexError(f"pair {(a, b)} out of range for size {size}")
        uf.union(a, b)
    labels: dict[int, int] = {}
    projection = []
    for x in range(size):
        root = uf.find(x)
        if root not in labels:
            labels[root] = len(labels)
        projection.append(labels[root])
    return len(labels), tuple(projection)
