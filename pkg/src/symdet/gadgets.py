"""Weighted graphs whose adjacency matrices are symmetric determinantal representations.

In characteristic 2 the determinant of a symmetric matrix is a sum over
partial matchings of its graph: matched edges contribute the square of their
weight and unmatched vertices the weight of their loop.  The constructions
here (square gadget, wheel, edge and loop substitution) all rely on that
reading.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Sequence

from .errors import ContextMismatch, InvalidEntry, UnsupportedCharacteristic
from .field import FieldElement, FieldSpec
from .poly import Polynomial, _literal
from .symmat import PolyMatrix, SdrMatrix, det


def _edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


class WeightedGraph:
    """Undirected graph with polynomial weights on edges and loops.

    Zero weights are never stored.  Vertices are ``0 .. nvertices-1``.
    """

    def __init__(self, field: FieldSpec, variables: Sequence[str], nvertices: int = 0, loops=None, edges=None):
        self.field = field
        self.variables = tuple(variables)
        self.nvertices = nvertices
        self.loops: dict[int, Polynomial] = {}
        self.edges: dict[tuple[int, int], Polynomial] = {}
        for v, w in (loops or {}).items():
            self.set_loop(v, w)
        for (u, v), w in (edges or {}).items():
            self.set_edge(u, v, w)

    def _weight(self, w) -> Polynomial:
        if isinstance(w, Polynomial):
            if w.field != self.field or w.variables != self.variables:
                raise ContextMismatch("weight belongs to a different ring")
            return w
        return Polynomial.constant(self.field, self.variables, w)

    def _vertex(self, v: int):
        if not 0 <= v < self.nvertices:
            raise IndexError(f"vertex {v} out of range")

    def add_vertex(self) -> int:
        self.nvertices += 1
        return self.nvertices - 1

    def set_loop(self, v: int, w):
        self._vertex(v)
        w = self._weight(w)
        if w:
            self.loops[v] = w
        else:
            self.loops.pop(v, None)

    def set_edge(self, u: int, v: int, w):
        self._vertex(u)
        self._vertex(v)
        if u == v:
            raise ValueError("use set_loop for loops")
        w = self._weight(w)
        if w:
            self.edges[_edge(u, v)] = w
        else:
            self.edges.pop(_edge(u, v), None)

    def copy(self) -> "WeightedGraph":
        return WeightedGraph(self.field, self.variables, self.nvertices, self.loops, self.edges)

    @classmethod
    def from_matrix(cls, M: PolyMatrix) -> "WeightedGraph":
        if not M.is_symmetric():
            raise InvalidEntry("only symmetric matrices have a graph")
        G = cls(M.field, M.variables, M.n)
        for i in range(M.n):
            G.set_loop(i, M[i, i])
            for j in range(i + 1, M.n):
                G.set_edge(i, j, M[i, j])
        return G

    def adjacency(self) -> PolyMatrix:
        z = Polynomial.zero(self.field, self.variables)
        n = self.nvertices
        rows = [[z] * n for _ in range(n)]
        for v, w in self.loops.items():
            rows[v][v] = w
        for (u, v), w in self.edges.items():
            rows[u][v] = rows[v][u] = w
        return PolyMatrix(self.field, self.variables, rows)

    def to_sdr(self) -> SdrMatrix:
        return SdrMatrix.of(self.adjacency())

    def det(self) -> Polynomial:
        return det(self.adjacency())

    def remove_vertices(self, drop) -> "WeightedGraph":
        """Induced subgraph on the remaining vertices, relabelled in order."""
        drop = set(drop)
        keep = [v for v in range(self.nvertices) if v not in drop]
        new = {v: k for k, v in enumerate(keep)}
        G = WeightedGraph(self.field, self.variables, len(keep))
        for v, w in self.loops.items():
            if v in new:
                G.loops[new[v]] = w
        for (u, v), w in self.edges.items():
            if u in new and v in new:
                G.edges[_edge(new[u], new[v])] = w
        return G

    def without_edge(self, u: int, v: int) -> "WeightedGraph":
        G = self.copy()
        G.edges.pop(_edge(u, v), None)
        return G

    def attach(self, other: "WeightedGraph", glue: dict[int, int]) -> "WeightedGraph":
        """Disjoint union with ``other``, identifying ``other``'s vertex k with our glue[k].

        Weights landing on the same edge or loop are added.
        """
        if other.field != self.field or other.variables != self.variables:
            raise ContextMismatch("graphs belong to different rings")
        G = self.copy()
        where = {}
        for k in range(other.nvertices):
            where[k] = glue[k] if k in glue else G.add_vertex()
        for k, w in other.loops.items():
            v = where[k]
            G.set_loop(v, G.loops[v] + w if v in G.loops else w)
        for (a, b), w in other.edges.items():
            e = _edge(where[a], where[b])
            G.set_edge(*e, G.edges[e] + w if e in G.edges else w)
        return G

    def to_dot(self, name: str = "G") -> str:
        lines = [f"graph {name} {{"]
        for v in range(self.nvertices):
            lines.append(f"  {v};")
        for v in sorted(self.loops):
            lines.append(f'  {v} -- {v} [label="{self.loops[v]}"];')
        for u, v in sorted(self.edges):
            lines.append(f'  {u} -- {v} [label="{self.edges[(u, v)]}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"

    def __repr__(self):
        return f"WeightedGraph({self.nvertices} vertices, {len(self.edges)} edges, {len(self.loops)} loops)"


@dataclass
class SquareGadget:
    """A graph with determinant P^2 and two distinguished vertices s, t."""

    graph: WeightedGraph
    s: int
    t: int


@dataclass(frozen=True)
class QuadraticForm:
    """The polynomial P_0^2 + x_1 P_1^2 + ... + x_m P_m^2."""

    components: tuple

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(self.components))
        if not self.components:
            raise ValueError("a quadratic form needs at least the component P_0")
        first = self.components[0]
        if len(self.components) != first.nvars + 1:
            raise ValueError(f"expected {first.nvars + 1} components, got {len(self.components)}")
        for c in self.components:
            if c.field != first.field or c.variables != first.variables:
                raise ContextMismatch("components belong to different rings")

    @property
    def field(self):
        return self.components[0].field

    @property
    def variables(self):
        return self.components[0].variables

    def value(self) -> Polynomial:
        P0 = self.components[0]
        total = P0 * P0
        for i, Pi in enumerate(self.components[1:]):
            if Pi:
                total = total + Polynomial.variable(self.field, self.variables, i) * Pi * Pi
        return total


@dataclass
class GsdrMatrix:
    """Symmetric matrix with arbitrary off-diagonals and constant or quadratic-form diagonals.

    ``diag[i]`` is a Polynomial (a constant, or as a shortcut a bare
    variable) or a :class:`QuadraticForm`.  ``offdiag[i][i]`` is ignored.
    """

    field: FieldSpec
    variables: tuple
    offdiag: list
    diag: list = dc_field(default_factory=list)

    def __post_init__(self):
        self.variables = tuple(self.variables)
        n = len(self.offdiag)
        if len(self.diag) != n or any(len(r) != n for r in self.offdiag):
            raise ValueError("inconsistent GsdrMatrix dimensions")
        for i in range(n):
            for j in range(i):
                if self.offdiag[i][j] != self.offdiag[j][i]:
                    raise InvalidEntry("a gSDR must be symmetric")
            d = self.diag[i]
            if isinstance(d, Polynomial) and not (d.is_constant() or d.is_variable()):
                raise InvalidEntry(f"diagonal entry {d} must be a constant, a variable or a QuadraticForm")

    @property
    def n(self) -> int:
        return len(self.diag)

    @classmethod
    def from_matrix(cls, M: PolyMatrix) -> "GsdrMatrix":
        rows = M.entries()
        return cls(M.field, M.variables, rows, [rows[i][i] for i in range(M.n)])

    def diagonal_value(self, i: int) -> Polynomial:
        d = self.diag[i]
        return d.value() if isinstance(d, QuadraticForm) else d

    def to_poly_matrix(self) -> PolyMatrix:
        rows = [list(r) for r in self.offdiag]
        for i in range(self.n):
            rows[i][i] = self.diagonal_value(i)
        return PolyMatrix(self.field, self.variables, rows)

    def det(self) -> Polynomial:
        return det(self.to_poly_matrix())


# -- constructions -------------------------------------------------------


def gadget_product(M: PolyMatrix, N: PolyMatrix) -> SdrMatrix:
    """Block-diagonal join; det is multiplicative."""
    return SdrMatrix.of(PolyMatrix.block_diag(M, N))


def gadget_square(P: Polynomial) -> SquareGadget:
    """A graph representing P^2 (see module docstring).

    Each monomial c x^a becomes a path s - . - ... - t whose pair edges carry
    c, then the variables (ascending, repeated by exponent), with weight-1
    links between consecutive pairs.  All paths share s = 0 and t = 1.
    """
    G = WeightedGraph(P.field, P.variables, 2)
    s, t = 0, 1
    one = Polynomial.constant(P.field, P.variables, 1)
    for mono, c in P.sorted_terms():
        weights = [Polynomial.constant(P.field, P.variables, c)]
        for i, e in enumerate(mono):
            weights += [Polynomial.variable(P.field, P.variables, i)] * e
        prev = s
        for k, w in enumerate(weights):
            left = prev if k == 0 else G.add_vertex()
            if k > 0:
                G.set_edge(prev, left, one)
            right = t if k == len(weights) - 1 else G.add_vertex()
            G.set_edge(left, right, w)
            prev = right
    return SquareGadget(G, s, t)


def _wheel(field, variables, directions) -> WeightedGraph:
    # directions: list of (variable index or None for the constant, spoke weight)
    G = WeightedGraph(field, variables, 1)
    for idx, lam in directions:
        a = G.add_vertex()
        b = G.add_vertex()
        G.set_edge(0, a, lam)
        G.set_edge(a, b, 1)
        G.set_loop(b, 1 if idx is None else Polynomial.variable(field, variables, idx))
    return G


def wheel_graph(field: FieldSpec, variables: Sequence[str], lam: Sequence) -> WeightedGraph:
    """Center 0; direction i has vertices 2i+1 (spoke weight lam[i]) and 2i+2 (loop)."""
    variables = tuple(variables)
    if len(lam) != len(variables) + 1:
        raise ValueError(f"need {len(variables) + 1} spoke weights, got {len(lam)}")
    lam = [_literal(field, v) for v in lam]
    return _wheel(field, variables, [(None, lam[0])] + [(i, lam[i + 1]) for i in range(len(variables))])


def gadget_wheel(field: FieldSpec, variables: Sequence[str], lam: Sequence) -> SdrMatrix:
    """SDR of lam_0^2 + x_1 lam_1^2 + ... + x_m lam_m^2."""
    return wheel_graph(field, variables, lam).to_sdr()


def gadget_replace_edge(G: WeightedGraph, e: tuple[int, int], S: SquareGadget) -> WeightedGraph:
    """Drop edge e = (u, v) and glue S with s on u and t on v."""
    u, v = e
    if u == v:
        raise ValueError("gadget_replace_edge needs an edge, not a loop")
    return G.without_edge(u, v).attach(S.graph, {S.s: u, S.t: v})


def gadget_replace_loop(G: WeightedGraph, v: int, W: WeightedGraph, center: int = 0) -> WeightedGraph:
    """Drop the loop on v and glue the wheel W with its center on v."""
    if v not in G.loops:
        raise ValueError(f"vertex {v} carries no loop")
    H = G.copy()
    del H.loops[v]
    return H.attach(W, {center: v})


def _needs_char2(field):
    if field.p != 2:
        raise UnsupportedCharacteristic("matching-based gadgets need characteristic 2")


def _keep_as_entry(w: Polynomial) -> bool:
    return w.is_constant() or w.is_variable()


def gsdr_to_sdr(A: GsdrMatrix) -> SdrMatrix:
    """Compile a gSDR into an SDR with the same determinant."""
    _needs_char2(A.field)
    F, V = A.field, A.variables
    G = WeightedGraph(F, V, A.n)
    for i in range(A.n):
        d = A.diag[i]
        if isinstance(d, Polynomial):
            G.set_loop(i, d)
        for j in range(i + 1, A.n):
            G.set_edge(i, j, A.offdiag[i][j])
    for (u, v), w in list(G.edges.items()):
        if not _keep_as_entry(w):
            G = gadget_replace_edge(G, (u, v), gadget_square(w))
    for i in range(A.n):
        d = A.diag[i]
        if not isinstance(d, QuadraticForm):
            continue
        directions = [(None if k == 0 else k - 1, c) for k, c in enumerate(d.components) if c]
        spokes = [c.constant_term().value if c.is_constant() else 1 for _, c in directions]
        W = _wheel(F, V, [(idx, lam) for (idx, _), lam in zip(directions, spokes)])
        for k, (_, c) in enumerate(directions):
            if not c.is_constant():
                W = gadget_replace_edge(W, (0, 2 * k + 1), gadget_square(c))
        G.set_loop(i, 1)  # placeholder, replaced right away
        G = gadget_replace_loop(G, i, W)
    return G.to_sdr()


def linear_sdr(L: Polynomial) -> SdrMatrix:
    """Wheel SDR of a linear polynomial, with only the directions that occur."""
    _needs_char2(L.field)
    if not L.is_linear():
        raise InvalidEntry(f"{L} is not linear")
    F = L.field
    directions = []
    c0 = L.constant_term()
    if c0:
        directions.append((None, c0.sqrt().value))
    for i in range(L.nvars):
        mono = tuple(1 if j == i else 0 for j in range(L.nvars))
        ci = L.coeff(mono)
        if ci:
            directions.append((i, ci.sqrt().value))
    return _wheel(F, L.variables, directions).to_sdr()
