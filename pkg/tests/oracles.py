"""Independent brute-force reference implementations used only by the tests.

Everything here is written from first principles with explicit loops, rank
matrices and tie sets, deliberately sharing no code path with the library.
"""
from __future__ import annotations

import itertools
import math
from collections import deque


def bfs_distances(n_nodes: int, edges: list[tuple[int, int]]) -> list[list[int]]:
    """All-pairs shortest path lengths by breadth-first search."""
    adj = [[] for _ in range(n_nodes)]
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)
    out = []
    for s in range(n_nodes):
        dist = [-1] * n_nodes
        dist[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for v in adj[u]:
                if dist[v] < 0:
                    dist[v] = dist[u] + 1
                    queue.append(v)
        out.append(dist)
    return out


def min_path_cost_exhaustive(n_nodes: int, edges: dict[tuple[int, int], float],
                             start: int, goal: int) -> float:
    """Cheapest start-to-goal path cost by enumerating every simple path."""
    adj = [[] for _ in range(n_nodes)]
    for (a, b), w in edges.items():
        adj[a].append((b, w))
        adj[b].append((a, w))
    best = math.inf

    def walk(node: int, cost: float, seen: set[int]) -> None:
        nonlocal best
        if node == goal:
            best = min(best, cost)
            return
        for nxt, w in adj[node]:
            if nxt not in seen:
                seen.add(nxt)
                walk(nxt, cost + w, seen)
                seen.remove(nxt)

    walk(start, 0.0, {start})
    return best


def trust_np_bruteforce(samples, bmus, unit_distances, k: int) -> tuple[float, float]:
    """(trustworthiness, neighborhood preservation) with explicit ranks and tie sets.

    samples: list of vectors; bmus: BMU unit per sample; unit_distances: map
    distance lookup between units.
    """
    n = len(samples)

    def sqdist(a, b) -> float:
        return sum((x - y) ** 2 for x, y in zip(a, b))

    trust_pen = 0.0
    np_pen = 0.0
    for i in range(n):
        others = [j for j in range(n) if j != i]
        din = {j: sqdist(samples[i], samples[j]) for j in others}
        dmap = {j: unit_distances[bmus[i]][bmus[j]] for j in others}

        rank_in = {j: 1 + sum(1 for l in others if din[l] < din[j]) for j in others}
        rank_map = {j: 1 + sum(1 for l in others if dmap[l] < dmap[j]) for j in others}

        by_input = sorted(others, key=lambda j: (din[j], j))
        input_knn = set(by_input[:k])

        by_map = sorted(others, key=lambda j: (dmap[j], j))
        cut = dmap[by_map[k - 1]]
        projected = {j for j in others if dmap[j] <= cut}
        size = len(projected)

        trust_pen += (k / size) * sum(rank_in[j] - k for j in projected - input_knn)
        np_pen += (size / k) * sum(rank_map[j] - k for j in input_knn - projected)

    factor = 2.0 / (n * k * (2 * n - 3 * k - 1))
    return 1.0 - factor * trust_pen, 1.0 - factor * np_pen


def topographic_product_bruteforce(prototypes, unit_distances) -> float:
    """Direct evaluation of the neighbor-order ratio products."""
    K = len(prototypes)

    def dist(a, b) -> float:
        return math.sqrt(sum((x - y) ** 2 for x, y in zip(a, b)))

    total = 0.0
    for j in range(K):
        others = [l for l in range(K) if l != j]
        by_map = sorted(others, key=lambda l: (unit_distances[j][l], l))
        by_input = sorted(others, key=lambda l: (dist(prototypes[j], prototypes[l]), l))
        for k in range(1, K):
            prod = 1.0
            for l in range(1, k + 1):
                q1 = dist(prototypes[j], prototypes[by_map[l - 1]]) / dist(prototypes[j], prototypes[by_input[l - 1]])
                q2 = unit_distances[j][by_map[l - 1]] / unit_distances[j][by_input[l - 1]]
                prod *= q1 * q2
            total += math.log(prod ** (1.0 / (2.0 * k)))
    return total / (K * (K - 1))


def clustering_accuracy_bruteforce(assignments, labels) -> float:
    """Best accuracy over every one-to-one id mapping, by full enumeration."""
    n = len(assignments)
    ids = max(max(assignments), max(labels)) + 1
    best = 0
    for perm in itertools.permutations(range(ids)):
        hits = sum(1 for a, y in zip(assignments, labels) if perm[a] == y)
        best = max(best, hits)
    return best / n


class UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, a: int) -> int:
        while self.parent[a] != a:
            self.parent[a] = self.parent[self.parent[a]]
            a = self.parent[a]
        return a

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra


def component_count_unionfind(marked: list[int], edges: list[tuple[int, int]]) -> int:
    """Connected components among marked nodes given the full edge list."""
    marked_set = set(marked)
    index = {u: i for i, u in enumerate(sorted(marked_set))}
    uf = UnionFind(len(index))
    for a, b in edges:
        if a in marked_set and b in marked_set:
            uf.union(index[a], index[b])
    return len({uf.find(i) for i in range(len(index))})
