"""Oriented hypergraphs: data model, validation, generators and transforms.

Vertices are the dense indices ``0..n-1``. A hyperedge is a pair of disjoint
vertex sets (inputs, outputs); the hyperedge list is ordered and may contain
repeats. Every transform below documents how it renumbers vertices.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, NamedTuple, Sequence

import numpy as np


class HypergraphError(ValueError):
    """Raised for malformed hypergraphs or invalid generator parameters."""


@dataclass(frozen=True)
class Hyperedge:
    inputs: frozenset[int] = frozenset()
    outputs: frozenset[int] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "inputs", frozenset(int(v) for v in self.inputs))
        object.__setattr__(self, "outputs", frozenset(int(v) for v in self.outputs))

    @property
    def members(self) -> frozenset[int]:
        return self.inputs | self.outputs

    @property
    def cardinality(self) -> int:
        return len(self.inputs) + len(self.outputs)

    @property
    def is_empty(self) -> bool:
        return not self.inputs and not self.outputs

    @property
    def balance(self) -> int:
        """``#inputs - #outputs``."""
        return len(self.inputs) - len(self.outputs)

    def sign(self, v: int) -> int:
        """+1 if ``v`` is an input, -1 if an output, 0 otherwise."""
        if v in self.inputs:
            return 1
        if v in self.outputs:
            return -1
        return 0

    def reversed(self) -> Hyperedge:
        return Hyperedge(self.outputs, self.inputs)

    def restrict(self, keep: Iterable[int]) -> Hyperedge:
        keep = set(keep)
        return Hyperedge(self.inputs & keep, self.outputs & keep)

    def __repr__(self):
        return f"Hyperedge(in={sorted(self.inputs)}, out={sorted(self.outputs)})"


@dataclass(frozen=True)
class OrientedHypergraph:
    """Finite oriented hypergraph on vertices ``0..n-1``.

    Construction does not reject invalid data so that :func:`validate` can
    report every problem at once; the spectral operators check their own
    preconditions.
    """

    n: int
    hyperedges: tuple[Hyperedge, ...] = ()
    allow_isolated: bool = False
    name: str | None = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "n", int(self.n))
        object.__setattr__(self, "hyperedges", tuple(self.hyperedges))

    @classmethod
    def from_pairs(
        cls,
        n: int,
        pairs: Iterable[tuple[Iterable[int], Iterable[int]]],
        allow_isolated: bool = False,
        name: str | None = None,
    ) -> OrientedHypergraph:
        """Build from ``(inputs, outputs)`` pairs."""
        edges = tuple(Hyperedge(frozenset(i), frozenset(o)) for i, o in pairs)
        return cls(n, edges, allow_isolated=allow_isolated, name=name)

    @property
    def m(self) -> int:
        return len(self.hyperedges)

    @cached_property
    def degrees(self) -> np.ndarray:
        deg = np.zeros(self.n, dtype=np.int64)
        for h in self.hyperedges:
            for v in h.members:
                if 0 <= v < self.n:
                    deg[v] += 1
        deg.setflags(write=False)
        return deg

    def degree(self, i: int) -> int:
        _check_vertex(self, i)
        return int(self.degrees[i])

    def vol(self, subset: Iterable[int]) -> int:
        total = 0
        for i in set(subset):
            _check_vertex(self, i)
            total += int(self.degrees[i])
        return total

    @property
    def max_cardinality(self) -> int:
        return max((h.cardinality for h in self.hyperedges), default=0)

    @property
    def only_inputs(self) -> bool:
        return all(not h.outputs for h in self.hyperedges)

    @property
    def is_balanced(self) -> bool:
        """Every hyperedge has as many inputs as outputs."""
        return all(h.balance == 0 for h in self.hyperedges)

    def is_regular(self) -> int | None:
        """The common degree, or None if degrees differ."""
        values = set(self.degrees.tolist())
        return values.pop() if len(values) == 1 else None

    def is_uniform(self) -> int | None:
        values = {h.cardinality for h in self.hyperedges}
        return values.pop() if len(values) == 1 else None

    def is_graph(self) -> bool:
        """Every hyperedge has exactly one input and one output."""
        return all(len(h.inputs) == 1 and len(h.outputs) == 1 for h in self.hyperedges)

    def reverse_hyperedge(self, index: int) -> OrientedHypergraph:
        edges = list(self.hyperedges)
        edges[index] = edges[index].reversed()
        return OrientedHypergraph(self.n, edges, self.allow_isolated, self.name)

    def reverse_all(self) -> OrientedHypergraph:
        edges = [h.reversed() for h in self.hyperedges]
        return OrientedHypergraph(self.n, edges, self.allow_isolated, self.name)

    def with_name(self, name: str) -> OrientedHypergraph:
        return OrientedHypergraph(self.n, self.hyperedges, self.allow_isolated, name)

    def __repr__(self):
        label = f"{self.name!r}, " if self.name else ""
        return f"OrientedHypergraph({label}n={self.n}, m={self.m})"


def _check_vertex(g: OrientedHypergraph, i: int) -> None:
    if not 0 <= i < g.n:
        raise IndexError(f"vertex {i} out of range for n={g.n}")


class Violation(NamedTuple):
    rule: str
    where: str
    detail: str

    def __str__(self):
        return f"{self.where}: {self.detail} [{self.rule}]"


def validate(g: OrientedHypergraph) -> list[Violation]:
    """Every invariant violation of ``g``; an empty list means valid."""
    out: list[Violation] = []
    if g.n < 0:
        out.append(Violation("vertex-count", "graph", f"negative vertex count {g.n}"))
    for k, h in enumerate(g.hyperedges):
        for v in sorted(h.inputs & h.outputs):
            out.append(
                Violation("overlap", f"hyperedge {k}", f"vertex {v} is both input and output")
            )
        for v in sorted(h.members):
            if not 0 <= v < g.n:
                out.append(Violation("range", f"hyperedge {k}", f"vertex {v} not in [0, {g.n})"))
    if not g.allow_isolated:
        for i in range(max(g.n, 0)):
            if g.degrees[i] == 0:
                out.append(Violation("degree-zero", f"vertex {i}", "has degree 0"))
    return out


def connected_components(g: OrientedHypergraph) -> list[list[int]]:
    """Vertex classes of the "share a hyperedge" relation, ordered by least member."""
    return components_from_sets(g.n, (h.members for h in g.hyperedges))


def components_from_sets(n: int, groups: Iterable[Iterable[int]]) -> list[list[int]]:
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for grp in groups:
        grp = list(grp)
        if not grp:
            continue
        root = find(grp[0])
        for v in grp[1:]:
            r = find(v)
            if r != root:
                parent[r] = root

    classes: dict[int, list[int]] = {}
    for v in range(n):
        classes.setdefault(find(v), []).append(v)
    return sorted(classes.values(), key=lambda c: c[0])


def is_connected(g: OrientedHypergraph) -> bool:
    return len(connected_components(g)) <= 1


# ---------------------------------------------------------------- transforms


def weak_delete(g: OrientedHypergraph, vertices: Iterable[int]) -> OrientedHypergraph:
    """Remove ``vertices`` from V and from every hyperedge.

    Hyperedges are kept even when they become empty. Surviving vertices keep
    their relative order and are renumbered ``0..n-r-1``; see
    :func:`surviving_vertices` for the map.
    """
    drop = set(vertices)
    for v in drop:
        _check_vertex(g, v)
    keep = surviving_vertices(g, drop)
    index = {v: k for k, v in enumerate(keep)}
    edges = []
    for h in g.hyperedges:
        edges.append(
            Hyperedge(
                frozenset(index[v] for v in h.inputs if v not in drop),
                frozenset(index[v] for v in h.outputs if v not in drop),
            )
        )
    return OrientedHypergraph(len(keep), edges, g.allow_isolated, g.name)


def surviving_vertices(g: OrientedHypergraph, deleted: Iterable[int]) -> list[int]:
    """Old indices of the vertices left by :func:`weak_delete`, in new order."""
    drop = set(deleted)
    return [v for v in range(g.n) if v not in drop]


def restrict(g: OrientedHypergraph, subset: Iterable[int]) -> OrientedHypergraph:
    """Restricted sub-hypergraph ``(S, {h ∩ S})``, the weak deletion of ``V \\ S``."""
    keep = set(subset)
    return weak_delete(g, [v for v in range(g.n) if v not in keep])


def dual(g: OrientedHypergraph) -> OrientedHypergraph:
    """Transpose the incidence structure.

    Hyperedge ``j`` of ``g`` becomes vertex ``j`` of the dual and vertex ``i``
    becomes hyperedge ``i``, keeping its role (input/output) in each.
    """
    for k, h in enumerate(g.hyperedges):
        if h.is_empty:
            raise HypergraphError(f"hyperedge {k} is empty; its dual vertex would have degree 0")
    ins: list[set[int]] = [set() for _ in range(g.n)]
    outs: list[set[int]] = [set() for _ in range(g.n)]
    for j, h in enumerate(g.hyperedges):
        for v in h.inputs:
            ins[v].add(j)
        for v in h.outputs:
            outs[v].add(j)
    name = f"dual({g.name})" if g.name else None
    return OrientedHypergraph.from_pairs(g.m, zip(ins, outs), allow_isolated=g.allow_isolated, name=name)


def disjoint_union(*graphs: OrientedHypergraph) -> OrientedHypergraph:
    """Place the graphs side by side; graph ``t`` is shifted by the sizes before it."""
    offset = 0
    edges = []
    for g in graphs:
        for h in g.hyperedges:
            edges.append(
                Hyperedge(
                    frozenset(v + offset for v in h.inputs),
                    frozenset(v + offset for v in h.outputs),
                )
            )
        offset += g.n
    flag = any(g.allow_isolated for g in graphs)
    return OrientedHypergraph(offset, edges, allow_isolated=flag)


def cartesian_product(g1: OrientedHypergraph, g2: OrientedHypergraph) -> OrientedHypergraph:
    """Cartesian product with vertex ``(i, j)`` stored at ``i * g2.n + j``.

    Hyperedges are listed as ``{v} x h2`` for every ``v`` in V1 and ``h2`` in
    H2 (``v`` outermost), followed by ``h1 x {u}`` for every ``h1`` in H1 and
    ``u`` in V2.
    """
    n2 = g2.n
    edges = []
    for v in range(g1.n):
        for h in g2.hyperedges:
            edges.append(
                Hyperedge(
                    frozenset(v * n2 + j for j in h.inputs),
                    frozenset(v * n2 + j for j in h.outputs),
                )
            )
    for h in g1.hyperedges:
        for u in range(n2):
            edges.append(
                Hyperedge(
                    frozenset(i * n2 + u for i in h.inputs),
                    frozenset(i * n2 + u for i in h.outputs),
                )
            )
    flag = g1.allow_isolated or g2.allow_isolated
    name = f"{g1.name}□{g2.name}" if g1.name and g2.name else None
    return OrientedHypergraph(g1.n * n2, edges, allow_isolated=flag, name=name)


def weak_add(g: OrientedHypergraph, memberships: Sequence[int]) -> OrientedHypergraph:
    """Append a new vertex ``n`` with sign ``memberships[k]`` in hyperedge ``k``.

    ``memberships`` holds +1 (input), -1 (output) or 0 per hyperedge.
    """
    if len(memberships) != g.m:
        raise HypergraphError("need one membership entry per hyperedge")
    new = g.n
    edges = []
    for h, s in zip(g.hyperedges, memberships):
        if s > 0:
            edges.append(Hyperedge(h.inputs | {new}, h.outputs))
        elif s < 0:
            edges.append(Hyperedge(h.inputs, h.outputs | {new}))
        else:
            edges.append(h)
    return OrientedHypergraph(g.n + 1, edges, allow_isolated=g.allow_isolated or not any(memberships))


# ---------------------------------------------------------------- generators


def complete_graph(n: int) -> OrientedHypergraph:
    """K_n; each edge has its lower endpoint as input."""
    if n < 2:
        raise HypergraphError("complete_graph needs n >= 2")
    pairs = [({i}, {j}) for i, j in itertools.combinations(range(n), 2)]
    return OrientedHypergraph.from_pairs(n, pairs, name=f"K{n}")


def cycle_graph(n: int) -> OrientedHypergraph:
    """C_n with edges ``(i, i+1 mod n)``, ``i`` the input."""
    if n < 3:
        raise HypergraphError("cycle_graph needs n >= 3")
    return OrientedHypergraph.from_pairs(
        n, [({i}, {(i + 1) % n}) for i in range(n)], name=f"C{n}"
    )


def c_complete_signless(n: int, c: int) -> OrientedHypergraph:
    """All c-subsets of ``range(n)`` as all-input hyperedges."""
    if not 1 <= c <= n:
        raise HypergraphError(f"need 1 <= c <= n, got n={n}, c={c}")
    pairs = [(s, ()) for s in itertools.combinations(range(n), c)]
    return OrientedHypergraph.from_pairs(n, pairs, name=f"signless_{c}_complete({n})")


def symmetric_2c_complete(n: int, c: int) -> OrientedHypergraph:
    """One hyperedge per unordered split of a 2c-subset into two c-sets.

    The side holding the least vertex of the 2c-subset is the input side.
    """
    if c < 1 or 2 * c > n:
        raise HypergraphError(f"need c >= 1 and 2c <= n, got n={n}, c={c}")
    pairs = []
    for block in itertools.combinations(range(n), 2 * c):
        first, rest = block[0], block[1:]
        for others in itertools.combinations(rest, c - 1):
            a = {first, *others}
            pairs.append((a, set(block) - a))
    return OrientedHypergraph.from_pairs(n, pairs, name=f"symmetric_2c_complete({n},{c})")


def singleton_hyperedges(n: int) -> OrientedHypergraph:
    """n hyperedges, the k-th holding vertex k alone as input."""
    if n < 1:
        raise HypergraphError("singleton_hyperedges needs n >= 1")
    return OrientedHypergraph.from_pairs(n, [({i}, ()) for i in range(n)], name=f"singletons({n})")


def full_hyperedge(n: int) -> OrientedHypergraph:
    """A single hyperedge with every vertex as input."""
    if n < 1:
        raise HypergraphError("full_hyperedge needs n >= 1")
    return OrientedHypergraph.from_pairs(n, [(range(n), ())], name=f"full_hyperedge({n})")


# all vertices inputs; 1-based labels of the source shifted to 0-based
_REMARK_4_3_EDGES = [
    (1, 2, 3, 4), (3, 4, 5, 6), (5, 6, 7, 8), (7, 8, 1, 2),
    (1, 3), (1, 4), (3, 5), (3, 6), (5, 7), (5, 8),
]


def remark_4_3() -> OrientedHypergraph:
    """8 vertices, 10 all-input hyperedges; signed nodal domains exceed k+r-1."""
    pairs = [({v - 1 for v in e}, ()) for e in _REMARK_4_3_EDGES]
    return OrientedHypergraph.from_pairs(8, pairs, name="remark_4_3")


REMARK_4_3_EIGENFUNCTION = np.array([1.0, 1.0, -1.0, -1.0, 1.0, 1.0, -1.0, -1.0])


def copies(g: OrientedHypergraph, r: int) -> OrientedHypergraph:
    if r < 1:
        raise HypergraphError("need at least one copy")
    out = disjoint_union(*([g] * r))
    return out.with_name(f"{r}x{g.name}") if g.name else out


FAMILIES = {
    "complete_graph": complete_graph,
    "cycle_graph": cycle_graph,
    "c_complete_signless": c_complete_signless,
    "symmetric_2c_complete": symmetric_2c_complete,
    "singleton_hyperedges": singleton_hyperedges,
    "full_hyperedge": full_hyperedge,
    "remark_4_3": remark_4_3,
    "disjoint_union": copies,
}


def generate(family: str, *args, **params) -> OrientedHypergraph:
    """Build a named instance, e.g. ``generate("symmetric_2c_complete", n=5, c=2)``."""
    try:
        build = FAMILIES[family]
    except KeyError:
        raise HypergraphError(
            f"unknown family {family!r}; choose from {sorted(FAMILIES)}"
        ) from None
    try:
        return build(*args, **params)
    except TypeError as exc:
        raise HypergraphError(f"bad parameters for {family}: {exc}") from None


# ---------------------------------------------------------------- random corpora


def random_hypergraph(
    rng: np.random.Generator,
    n: int,
    m: int,
    *,
    only_inputs: bool = False,
    balanced: bool = False,
    max_size: int | None = None,
) -> OrientedHypergraph:
    """Random valid instance with ``n`` vertices and ``m`` nonempty hyperedges.

    Vertices left uncovered are then dropped into random hyperedges so that
    no degree is zero; ``balanced`` keeps ``#in == #out`` by adding uncovered
    vertices in input/output pairs, appending a fresh 2-vertex hyperedge when
    no existing one has room (so the result may have more than ``m``).
    """
    if m < 1 or n < 1:
        raise HypergraphError("need n >= 1 and m >= 1")
    max_size = min(max_size or n, n)
    if balanced and max_size < 2:
        raise HypergraphError("balanced hyperedges need room for two vertices")
    ins: list[set[int]] = []
    outs: list[set[int]] = []
    for _ in range(m):
        if balanced:
            half = int(rng.integers(1, max_size // 2 + 1))
            picked = rng.choice(n, size=2 * half, replace=False).tolist()
            ins.append(set(picked[:half]))
            outs.append(set(picked[half:]))
        else:
            size = int(rng.integers(1, max_size + 1))
            picked = rng.choice(n, size=size, replace=False).tolist()
            if only_inputs:
                ins.append(set(picked))
                outs.append(set())
            else:
                roles = rng.integers(0, 2, size=size)
                ins.append({v for v, r in zip(picked, roles) if r == 0})
                outs.append({v for v, r in zip(picked, roles) if r == 1})
    covered = set().union(*ins, *outs)
    missing = [v for v in range(n) if v not in covered]
    if balanced:
        rng.shuffle(missing)
        while missing:
            a = missing.pop()
            if missing:
                b = missing.pop()
            else:
                choices = [v for v in range(n) if v != a]
                b = int(rng.choice(choices))
            # put a and b in a hyperedge that holds neither
            order = rng.permutation(m).tolist()
            for k in order:
                if a not in ins[k] | outs[k] and b not in ins[k] | outs[k]:
                    ins[k].add(a)
                    outs[k].add(b)
                    break
            else:
                ins.append({a})
                outs.append({b})
    else:
        for v in missing:
            k = int(rng.integers(0, m))
            if only_inputs or rng.integers(0, 2) == 0:
                ins[k].add(v)
            else:
                outs[k].add(v)
    return OrientedHypergraph.from_pairs(n, zip(ins, outs))


def random_corpus(
    seed: int,
    count: int,
    *,
    max_n: int = 8,
    max_m: int = 10,
    min_n: int = 2,
    only_inputs: bool = False,
) -> list[OrientedHypergraph]:
    """Seeded list of random instances with ``min_n <= n <= max_n``, ``1 <= m <= max_m``."""
    rng = np.random.default_rng(seed)
    out = []
    for k in range(count):
        n = int(rng.integers(min_n, max_n + 1))
        m = int(rng.integers(1, max_m + 1))
        g = random_hypergraph(rng, n, m, only_inputs=only_inputs)
        out.append(g.with_name(f"random[{seed}:{k}]"))
    return out
