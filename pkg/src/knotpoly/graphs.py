"""Multigraphs, the ladder-with-apex family, and two Tutte polynomial routes.

``tutte_oracle`` sums over every spanning subgraph; it is slow but has no
moving parts and is used to check ``tutte_delcon``, the memoized
deletion-contraction evaluator that everything else relies on.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .algebra import BivarPoly
from .errors import InvalidParameter, ResourceLimit, TooLarge

ORACLE_MAX_EDGES = 24
DELCON_MAX_EDGES = 40
DELCON_MEMO_BUDGET = 2_000_000


@dataclass(frozen=True)
class Multigraph:
    """Undirected multigraph on vertices ``0 .. vertex_count-1``.

    Parallel edges are repeated in ``edges``; a self-loop is ``(v, v)``.
    """

    vertex_count: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        norm = []
        for u, v in self.edges:
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise InvalidParameter(f"edge ({u}, {v}) outside 0..{self.vertex_count - 1}")
            norm.append((u, v) if u <= v else (v, u))
        object.__setattr__(self, "edges", tuple(norm))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Multigraph:
        return cls(n, tuple(edges))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def to_text(self) -> str:
        lines = [f"n={self.vertex_count}"]
        lines += [f"{u} {v}" for u, v in self.edges]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> Multigraph:
        lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
        if not lines or not lines[0].startswith("n="):
            raise ValueError("graph text must start with 'n=<int>'")
        n = int(lines[0][2:])
        edges = []
        for ln in lines[1:]:
            u, v = ln.split()
            edges.append((int(u), int(v)))
        return cls(n, tuple(edges))


def build_S(m: int) -> Multigraph:
    """Ladder of ``m`` squares with one rail joined to an apex vertex.

    Rails are ``u_0..u_m`` (vertices ``0..m``) and ``v_0..v_m`` (vertices
    ``m+1..2m+1``); the apex ``w`` is vertex ``2m+2`` and is adjacent to
    every ``v_i``.  The result has ``2m+3`` vertices and ``4m+2`` edges.
    """
    if not isinstance(m, int) or m < 1:
        raise InvalidParameter(f"m must be a positive integer, got {m!r}")
    u = list(range(m + 1))
    v = list(range(m + 1, 2 * m + 2))
    w = 2 * m + 2
    edges = [(u[i], v[i]) for i in range(m + 1)]
    edges += [(u[i], u[i + 1]) for i in range(m)]
    edges += [(v[i], v[i + 1]) for i in range(m)]
    edges += [(v[i], w) for i in range(m + 1)]
    return Multigraph(2 * m + 3, tuple(edges))


class _DSU:
    __slots__ = ("parent",)

    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, a):
        p = self.parent
        while p[a] != a:
            p[a] = p[p[a]]
            a = p[a]
        return a

    def union(self, a, b) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[ra] = rb
        return True


def _components(n: int, edges: Iterable[tuple[int, int]]) -> int:
    dsu = _DSU(n)
    k = n
    for a, b in edges:
        if dsu.union(a, b):
            k -= 1
    return k


def graph_stats(g: Multigraph) -> tuple[int, int, int, int]:
    """Return ``(n, e, k, c)`` with cyclomatic number ``c = e + k - n``."""
    n, e = g.vertex_count, g.edge_count
    k = _components(n, g.edges)
    return n, e, k, e + k - n


def _expand_shifted(counts: dict[tuple[int, int], int]) -> BivarPoly:
    # sum N_ij (x-1)^i (y-1)^j, expanded with binomial coefficients
    out: dict[tuple[int, int], int] = {}
    for (i, j), cnt in counts.items():
        for a in range(i + 1):
            ca = math.comb(i, a) * (-1) ** (i - a)
            for b in range(j + 1):
                cb = math.comb(j, b) * (-1) ** (j - b)
                out[(a, b)] = out.get((a, b), 0) + cnt * ca * cb
    return BivarPoly(out)


def tutte_oracle(g: Multigraph) -> BivarPoly:
    """Tutte polynomial by direct enumeration of all 2^e spanning subgraphs."""
    n, e = g.vertex_count, g.edge_count
    if e > ORACLE_MAX_EDGES:
        raise TooLarge(f"{e} edges exceeds the enumeration guard of {ORACLE_MAX_EDGES}")
    k0 = _components(n, g.edges)
    counts: dict[tuple[int, int], int] = {}
    for mask in range(1 << e):
        sub = [g.edges[i] for i in range(e) if mask >> i & 1]
        k = _components(n, sub)
        key = (k - k0, len(sub) + k - n)
        counts[key] = counts.get(key, 0) + 1
    return _expand_shifted(counts)


def spanning_tree_count(g: Multigraph) -> int:
    """Number of spanning trees via the matrix-tree theorem (exact)."""
    n = g.vertex_count
    if n == 0:
        return 0
    if n == 1:
        return 1
    lap = [[Fraction(0)] * n for _ in range(n)]
    for a, b in g.edges:
        if a == b:
            continue
        lap[a][a] += 1
        lap[b][b] += 1
        lap[a][b] -= 1
        lap[b][a] -= 1
    mat = [row[1:] for row in lap[1:]]
    size = n - 1
    det = Fraction(1)
    for col in range(size):
        piv = next((r for r in range(col, size) if mat[r][col] != 0), None)
        if piv is None:
            return 0
        if piv != col:
            mat[col], mat[piv] = mat[piv], mat[col]
            det = -det
        det *= mat[col][col]
        for r in range(col + 1, size):
            f = mat[r][col] / mat[col][col]
            if f:
                for c in range(col, size):
                    mat[r][c] -= f * mat[col][c]
    return int(det)


# -- deletion-contraction -----------------------------------------------------


def _bridges(n: int, edges: list[tuple[int, int]]) -> set[int]:
    """Indices of bridge edges; parallel copies are never bridges."""
    adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for idx, (a, b) in enumerate(edges):
        adj[a].append((b, idx))
        adj[b].append((a, idx))
    disc = [-1] * n
    low = [0] * n
    out: set[int] = set()
    timer = 0
    for root in range(n):
        if disc[root] != -1 or not adj[root]:
            continue
        disc[root] = low[root] = timer
        timer += 1
        stack = [(root, -1, iter(adj[root]))]
        while stack:
            v, via, it = stack[-1]
            advanced = False
            for w, idx in it:
                if idx == via:
                    continue
                if disc[w] == -1:
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, idx, iter(adj[w])))
                    advanced = True
                    break
                low[v] = min(low[v], disc[w])
            if not advanced:
                stack.pop()
                if stack:
                    p = stack[-1][0]
                    low[p] = min(low[p], low[v])
                    if low[v] > disc[p]:
                        out.add(via)
    return out


def _contract(n: int, edges: list[tuple[int, int]], a: int, b: int):
    """Identify vertex ``b`` into ``a`` and renumber to ``0..n-2``."""
    def relabel(v):
        if v == b:
            v = a
        return v - 1 if v > b else v

    out = []
    for p, q in edges:
        p, q = relabel(p), relabel(q)
        out.append((p, q) if p <= q else (q, p))
    return n - 1, out


_EXHAUSTIVE_VERTEX_LIMIT = 9
_EXHAUSTIVE_PERM_LIMIT = 720


def canonical_key(n: int, edges: list[tuple[int, int]]) -> tuple:
    """Relabel-invariant-ish key: an exact relabeled copy of the graph.

    Vertices are ordered by iterated degree refinement.  Below
    ``_EXHAUSTIVE_VERTEX_LIMIT`` vertices the remaining ties are broken by
    trying every permutation inside each colour class and keeping the
    lexicographically smallest edge list.  Equal keys always mean isomorphic
    graphs; non-canonical ties only cost cache hits.
    """
    used = sorted({v for e in edges for v in e})
    index = {v: i for i, v in enumerate(used)}
    m = len(used)
    es = [(index[a], index[b]) for a, b in edges]
    nbrs: list[list[int]] = [[] for _ in range(m)]
    for a, b in es:
        nbrs[a].append(b)
        if a != b:
            nbrs[b].append(a)
    colour = [len(x) for x in nbrs]
    n_classes = len(set(colour))
    while True:
        sig = [(colour[v], tuple(sorted(colour[w] for w in nbrs[v]))) for v in range(m)]
        palette = {s: i for i, s in enumerate(sorted(set(sig)))}
        new = [palette[s] for s in sig]
        k = len(palette)
        colour = new
        if k == n_classes:
            break
        n_classes = k

    classes: dict[int, list[int]] = {}
    for v in range(m):
        classes.setdefault(colour[v], []).append(v)
    ordered = [classes[c] for c in sorted(classes)]

    def key_for(order: list[int]) -> tuple:
        pos = {v: i for i, v in enumerate(order)}
        return tuple(sorted((min(pos[a], pos[b]), max(pos[a], pos[b])) for a, b in es))

    n_perms = math.prod(math.factorial(len(c)) for c in ordered)
    if m < _EXHAUSTIVE_VERTEX_LIMIT and n_perms <= _EXHAUSTIVE_PERM_LIMIT:
        best = None
        for combo in itertools.product(*(itertools.permutations(c) for c in ordered)):
            cand = key_for([v for part in combo for v in part])
            if best is None or cand < best:
                best = cand
        return (m, best)
    return (m, key_for([v for part in ordered for v in part]))


class _DelCon:
    def __init__(self, memo_budget: int):
        self.memo: dict[tuple, BivarPoly] = {}
        self.budget = memo_budget
        self.x = BivarPoly.x()
        self.y = BivarPoly.y()

    def run(self, n: int, edges: list[tuple[int, int]]) -> BivarPoly:
        loops = sum(1 for a, b in edges if a == b)
        edges = [e for e in edges if e[0] != e[1]]
        factor = self.y**loops if loops else BivarPoly(1)
        if not edges:
            return factor
        key = canonical_key(n, edges)
        hit = self.memo.get(key)
        if hit is not None:
            return factor * hit
        value = self._reduce(n, edges)
        if len(self.memo) >= self.budget:
            raise ResourceLimit(f"deletion-contraction memo exceeded {self.budget} entries")
        self.memo[key] = value
        return factor * value

    def _reduce(self, n: int, edges: list[tuple[int, int]]) -> BivarPoly:
        bridges = _bridges(n, edges)
        if bridges:
            # contract every bridge at once: T = x^B T(G / bridges)
            dsu = _DSU(n)
            for i in bridges:
                dsu.union(*edges[i])
            roots = sorted({dsu.find(v) for v in range(n)})
            label = {r: i for i, r in enumerate(roots)}
            rest = []
            for i, (a, b) in enumerate(edges):
                if i in bridges:
                    continue
                p, q = label[dsu.find(a)], label[dsu.find(b)]
                rest.append((p, q) if p <= q else (q, p))
            return self.x ** len(bridges) * self.run(len(roots), rest)

        deg = [0] * n
        for a, b in edges:
            deg[a] += 1
            deg[b] += 1
        pick = max(range(len(edges)), key=lambda i: (deg[edges[i][0]] + deg[edges[i][1]], -i))
        a, b = edges[pick]
        deleted = edges[:pick] + edges[pick + 1:]
        return self.run(n, deleted) + self.run(*_contract(n, deleted, a, b))


def tutte_delcon(g: Multigraph, memo_budget: int = DELCON_MEMO_BUDGET) -> BivarPoly:
    """Tutte polynomial by memoized deletion-contraction.

    Loops contribute a factor ``y``, bridges a factor ``x``; any other edge
    ``e`` splits as ``T(G-e) + T(G/e)``.  The memo is local to the call.
    """
    if g.edge_count > DELCON_MAX_EDGES:
        raise ResourceLimit(f"{g.edge_count} edges exceeds the practical guard of {DELCON_MAX_EDGES}")
    return _DelCon(memo_budget).run(g.vertex_count, list(g.edges))
