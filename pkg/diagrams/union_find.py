class UnionFind:
    """Disjoint sets over arbitrary hashable vertices."""

    def __init__(self, vertices=()):
        self.parent = {}
        self.size = {}
        for vertex in vertices:
            self.add(vertex)

    def add(self, vertex):
        if vertex not in self.parent:
            self.parent[vertex] = vertex
            self.size[vertex] = 1

    def find(self, vertex):
        root = vertex
        while self.parent[root] != root:
            root = self.parent[root]
        # path compression
        while self.parent[vertex] != root:
            self.parent[vertex], vertex = root, self.parent[vertex]
        return root

    def union(self, a, b):
        root_a, root_b = self.find(a), self.find(b)
        if root_a == root_b:
            return False
        if self.size[root_a] < self.size[root_b]:
            root_a, root_b = root_b, root_a
        self.parent[root_b] = root_a
        self.size[root_a] += self.size[root_b]
        return True

    def connected(self, a, b):
        return self.find(a) == self.find(b)

    def groups(self):
        """Classes as sorted tuples, ordered by their smallest member."""
        buckets = {}
        for vertex in self.parent:
            buckets.setdefault(self.find(vertex), []).append(vertex)
        return sorted((tuple(sorted(members)) for members in buckets.values()), key=lambda g: g[0])
