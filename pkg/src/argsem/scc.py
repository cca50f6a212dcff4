"""SCC decomposition and the SCC-recursive semantics CF1, CF2, AD1 and AD2.

The generic schema walks the condensation DAG of a framework in topological
order.  For each component ``S`` the choices made so far (``E``) split ``S``
into defeated, provisionally defeated and undefeated arguments; the schema
then recurses on the framework restricted to the surviving part of ``S``,
bottoming out in a base function once a framework has a single component.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Iterable

from ._order import label_key, sorted_sets
from .af import ArgumentationFramework, conflict_free_sets, is_admissible, maximal_sets


class BaseFunction(str, Enum):
    MAXIMAL_CONFLICT_FREE = "maximal-conflict-free"
    MAXIMAL_ADMISSIBLE_IN_C = "maximal-admissible-in-c"


class Mode(str, Enum):
    U_ONLY = "U"
    U_AND_P = "UP"


@dataclass(frozen=True)
class SccPartition:
    components: tuple[frozenset[str], ...]
    component_of: dict[str, int]

    def __hash__(self):
        return hash(self.components)


@dataclass(frozen=True)
class SccGraph:
    nodes: tuple[int, ...]
    edges: frozenset[tuple[int, int]]
    topo_order: tuple[int, ...]

    def parents(self, node: int) -> frozenset[int]:
        return frozenset(a for a, b in self.edges if b == node)

    def initial(self) -> tuple[int, ...]:
        targets = {b for _, b in self.edges}
        return tuple(n for n in self.topo_order if n not in targets)


@dataclass(frozen=True)
class DpuPartition:
    defeated: frozenset[str]
    provisionally_defeated: frozenset[str]
    undefeated: frozenset[str]


def _tarjan(af: ArgumentationFramework) -> list[frozenset[str]]:
    # iterative, so deep attack chains cannot hit the recursion limit
    index: dict[str, int] = {}
    low: dict[str, int] = {}
    on_stack: set[str] = set()
    stack: list[str] = []
    found = []
    counter = 0
    succ = {a: sorted(af.attacked_by[a], key=label_key) for a in af.args}
    for root in af.order:
        if root in index:
            continue
        work = [(root, iter(succ[root]))]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack.add(root)
        while work:
            v, it = work[-1]
            advanced = False
            for w in it:
                if w not in index:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack.add(w)
                    work.append((w, iter(succ[w])))
                    advanced = True
                    break
                if w in on_stack:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
            if low[v] == index[v]:
                comp = set()
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    comp.add(w)
                    if w == v:
                        break
                found.append(frozenset(comp))
    return found


def _condense(af, comps):
    of = {a: i for i, c in enumerate(comps) for a in c}
    edges = frozenset((of[a], of[b]) for a, b in af.attacks if of[a] != of[b])
    return of, edges


def _topological(n, edges, comps):
    indeg = [0] * n
    out = [[] for _ in range(n)]
    for a, b in edges:
        indeg[b] += 1
        out[a].append(b)
    key = [min(label_key(x) for x in c) for c in comps]
    ready = [(key[i], i) for i in range(n) if indeg[i] == 0]
    heapq.heapify(ready)
    order = []
    while ready:
        _, i = heapq.heappop(ready)
        order.append(i)
        for j in out[i]:
            indeg[j] -= 1
            if indeg[j] == 0:
                heapq.heappush(ready, (key[j], j))
    if len(order) != n:
        raise AssertionError("condensation graph has a cycle")
    return order


def sccs(af: ArgumentationFramework) -> SccPartition:
    """Components numbered along a deterministic topological order of the condensation."""
    comps = _tarjan(af)
    _, edges = _condense(af, comps)
    order = _topological(len(comps), edges, comps)
    ordered = tuple(comps[i] for i in order)
    return SccPartition(ordered, {a: i for i, c in enumerate(ordered) for a in c})


def scc_graph(af: ArgumentationFramework, part: SccPartition | None = None) -> SccGraph:
    part = part if part is not None else sccs(af)
    comps = list(part.components)
    _, edges = _condense(af, comps)
    order = _topological(len(comps), edges, comps)
    return SccGraph(tuple(range(len(comps))), edges, tuple(order))


def restrict(af: ArgumentationFramework, s: Iterable[str]) -> ArgumentationFramework:
    s = frozenset(s)
    return ArgumentationFramework(s, frozenset((a, b) for a, b in af.attacks if a in s and b in s))


def dpu(af: ArgumentationFramework, s: Iterable[str], e: Iterable[str]) -> DpuPartition:
    """Split component ``s`` by the outside choices ``e``.

    Defeated: attacked by a member of ``e`` outside ``s``.  Undefeated: not
    defeated, and every attacker from outside ``s`` is attacked by ``e``.
    Provisionally defeated: the rest.
    """
    s = frozenset(s)
    e = frozenset(e)
    outside_e = e - s
    hit_by_e = set()
    for a in e:
        hit_by_e |= af.attacked_by[a]
    defeated, provisional, undefeated = set(), set(), set()
    for a in s:
        outside = af.attackers[a] - s
        if outside & outside_e:
            defeated.add(a)
        elif outside <= hit_by_e:
            undefeated.add(a)
        else:
            provisional.add(a)
    return DpuPartition(frozenset(defeated), frozenset(provisional), frozenset(undefeated))


def maximal_conflict_free(af: ArgumentationFramework) -> list[frozenset[str]]:
    return maximal_sets(conflict_free_sets(af))


def maximal_admissible_within(af: ArgumentationFramework, c: Iterable[str]) -> list[frozenset[str]]:
    c = frozenset(c)
    return maximal_sets(s for s in conflict_free_sets(restrict(af, c & af.args)) if is_admissible(af, s))


def _base(af, c, base):
    if base is BaseFunction.MAXIMAL_CONFLICT_FREE:
        return maximal_conflict_free(af)
    return maximal_admissible_within(af, c)


@lru_cache(maxsize=4096)
def _gf(af, c, base, mode):
    if not af.args:
        return frozenset([frozenset()])
    part = sccs(af)
    if len(part.components) == 1:
        return frozenset(_base(af, c, base))
    partial = [frozenset()]
    # components are already numbered in topological order
    for comp in part.components:
        grown = []
        for e in partial:
            split = dpu(af, comp, e)
            if mode is Mode.U_ONLY:
                keep = split.undefeated
                # members attacked from P cannot be defended once P is dropped
                hit_by_p = set()
                for p in split.provisionally_defeated:
                    hit_by_p |= af.attacked_by[p]
                c_next = (split.undefeated & c) - hit_by_p
            else:
                keep = split.undefeated | split.provisionally_defeated
                c_next = split.undefeated & c
            for piece in _gf(restrict(af, keep), frozenset(c_next), base, mode):
                grown.append(e | piece)
        partial = grown
    return frozenset(partial)


def gf(af: ArgumentationFramework, c: Iterable[str], base, mode) -> list[frozenset[str]]:
    """Generic SCC-recursive extensions of ``af`` with candidate set ``c``."""
    return sorted_sets(_gf(af, frozenset(c) & af.args, BaseFunction(base), Mode(mode)))


def cf1(af: ArgumentationFramework) -> list[frozenset[str]]:
    return gf(af, af.args, BaseFunction.MAXIMAL_CONFLICT_FREE, Mode.U_ONLY)


def cf2(af: ArgumentationFramework) -> list[frozenset[str]]:
    return gf(af, af.args, BaseFunction.MAXIMAL_CONFLICT_FREE, Mode.U_AND_P)


def ad1(af: ArgumentationFramework) -> list[frozenset[str]]:
    return gf(af, af.args, BaseFunction.MAXIMAL_ADMISSIBLE_IN_C, Mode.U_ONLY)


def ad2(af: ArgumentationFramework) -> list[frozenset[str]]:
    return gf(af, af.args, BaseFunction.MAXIMAL_ADMISSIBLE_IN_C, Mode.U_AND_P)
