"""Dinic max-flow on exact integer capacities.

Capacities are Python ints, so parametric density searches can scale
rational test ratios to integers without rounding.
"""

from __future__ import annotations

from collections import deque


class FlowNetwork:
    def __init__(self, n_nodes: int):
        self.n = n_nodes
        self.head: list[list[int]] = [[] for _ in range(n_nodes)]
        self.to: list[int] = []
        self.cap: list[int] = []

    def add_arc(self, u: int, v: int, capacity: int) -> None:
        self.head[u].append(len(self.to))
        self.to.append(v)
        self.cap.append(capacity)
        self.head[v].append(len(self.to))
        self.to.append(u)
        self.cap.append(0)

    def max_flow(self, s: int, t: int) -> int:
        flow = 0
        while True:
            level = self._levels(s, t)
            if level[t] < 0:
                return flow
            ptr = [0] * self.n
            while True:
                pushed = self._dfs(s, t, level, ptr)
                if pushed == 0:
                    break
                flow += pushed

    def _levels(self, s: int, t: int) -> list[int]:
        level = [-1] * self.n
        level[s] = 0
        dq = deque([s])
        while dq:
            u = dq.popleft()
            for a in self.head[u]:
                v = self.to[a]
                if self.cap[a] > 0 and level[v] < 0:
                    level[v] = level[u] + 1
                    dq.append(v)
        return level

    def _dfs(self, u, t, level, ptr) -> int:
        # iterative blocking-flow walk along level-increasing arcs
        path: list[int] = []
        node = u
        while True:
            if node == t:
                pushed = min(self.cap[a] for a in path)
                for a in path:
                    self.cap[a] -= pushed
                    self.cap[a ^ 1] += pushed
                return pushed
            advanced = False
            while ptr[node] < len(self.head[node]):
                a = self.head[node][ptr[node]]
                v = self.to[a]
                if self.cap[a] > 0 and level[v] == level[node] + 1:
                    path.append(a)
                    node = v
                    advanced = True
                    break
                ptr[node] += 1
            if advanced:
                continue
            level[node] = -1
            if not path:
                return 0
            a = path.pop()
            node = self.to[a ^ 1]

    def source_side(self, s: int) -> set:
        """Nodes reachable from s in the residual graph (after max_flow)."""
        seen = {s}
        dq = deque([s])
        while dq:
            u = dq.popleft()
            for a in self.head[u]:
                v = self.to[a]
                if self.cap[a] > 0 and v not in seen:
                    seen.add(v)
                    dq.append(v)
        return seen
