"""Deletion-contraction graph invariants.

Implements the two-variable state sum h(G; x, y) over spanning subgraphs,
its nonnegative rescaling g~ and the shifted polynomial g(t, w), the
five-coefficient recursion determined by (A, B, C, D, E), closed forms
for trees, bouquets, multi-edges and cycles, the classical
specializations (Tutte, chromatic, flow, Negami, and the state sum
itself), and a brute-force proper-coloring oracle.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Literal

from .laurent import ONE, X, Y, ZERO, BivariateLaurent, geometric_sum, substitute_shift
from .multigraph import Multigraph, all_states, classify_edge, reduce, state_stats

FamilyKind = Literal["tree", "bouquet", "multiedge", "cycle"]
SpecializationName = Literal["tutte", "chromatic", "flow", "negami", "yamada"]


@dataclass(frozen=True)
class InvariantParams:
    """The five coefficients of a deletion-contraction invariant.

    a, b weight the contraction/deletion branches; c is the one-vertex
    gluing unit (must be invertible, i.e. a +-monomial); d and e are the
    values on the one-edge tree and the one-loop graph.
    """

    a: BivariateLaurent
    b: BivariateLaurent
    c: BivariateLaurent
    d: BivariateLaurent
    e: BivariateLaurent

    def __post_init__(self) -> None:
        if not self.c.is_unit_monomial():
            raise ValueError("coefficient C must be a unit (+-x^a*y^b)")

    @property
    def c_inverse(self) -> BivariateLaurent:
        return self.c.inverse()


def yamada_state_sum(G: Multigraph) -> BivariateLaurent:
    """h(G; x, y): sum over S of (-x)^(|S|-|E|) x^b0([G:S]) y^b1([G:S])."""
    n = G.edge_count
    out: dict[tuple[int, int], int] = {}
    for S in all_states(G):
        st = state_stats(G, S)
        sign = -1 if (n - S.size()) % 2 else 1
        key = (S.size() - n + st.b0, st.b1)
        out[key] = out.get(key, 0) + sign
    return BivariateLaurent(out)


def g_polynomials(G: Multigraph) -> tuple[BivariateLaurent, BivariateLaurent]:
    """(g~, g): the (-x)^|E| rescaling of h, and its value at (1+t, 1+w).

    g~ = sum over S of (-1)^|S| x^(|S|+b0) y^b1 has nonnegative exponents
    by construction; that is asserted before shifting.
    """
    out: dict[tuple[int, int], int] = {}
    for S in all_states(G):
        st = state_stats(G, S)
        sign = -1 if S.size() % 2 else 1
        key = (S.size() + st.b0, st.b1)
        out[key] = out.get(key, 0) + sign
    g_tilde = BivariateLaurent(out)
    assert not g_tilde.has_negative_exponents()
    return g_tilde, substitute_shift(g_tilde)


def eval_del_con(G: Multigraph, params: InvariantParams) -> BivariateLaurent:
    """Recursive deletion-contraction value of G under the given coefficients.

    Ordinary edge: a*f(G/e) + b*f(G-e). A loop splits off as c*e*f(G-e),
    an isthmus as c*d*f(G/e). A graph with no edges is worth c^(-|V|):
    the single vertex must be c^(-1) for consistency with the one-edge
    base cases, and the value is multiplicative over disjoint unions.
    """
    if G.edge_count == 0:
        return params.c_inverse ** G.vertex_count
    kind = classify_edge(G, 0)
    if kind == "loop":
        return params.c * params.e * eval_del_con(reduce(G, 0, "delete"), params)
    if kind == "isthmus":
        return params.c * params.d * eval_del_con(reduce(G, 0, "contract"), params)
    return params.a * eval_del_con(reduce(G, 0, "contract"), params) + params.b * eval_del_con(
        reduce(G, 0, "delete"), params
    )


def closed_form(kind: FamilyKind, n: int, params: InvariantParams) -> BivariateLaurent:
    """Value on the named n-edge family, division-free.

    tree:      c^(n-1) d^n
    bouquet:   c^(n-1) e^n
    multiedge: b^(n-1) d + a e * sum_k b^k (c e)^(n-2-k)
    cycle:     a^(n-1) e + b d * sum_k a^k (c d)^(n-2-k)
    """
    if n < 1:
        raise ValueError("n must be positive")
    a, b, c, d, e = params.a, params.b, params.c, params.d, params.e
    if kind == "tree":
        return c ** (n - 1) * d ** n
    if kind == "bouquet":
        return c ** (n - 1) * e ** n
    if kind == "multiedge":
        return b ** (n - 1) * d + a * e * geometric_sum(b, c * e, n)
    if kind == "cycle":
        return a ** (n - 1) * e + b * d * geometric_sum(a, c * d, n)
    raise ValueError(f"unknown family {kind!r}")


def specialization(name: SpecializationName, negami_t: int = 1) -> InvariantParams:
    """Coefficient row of a classical invariant.

    The chromatic and flow rows read the engine's x variable as lambda.
    The Negami row has a third variable t; it is supported with t pinned
    to an integer in {1, -1} (C = 1/t must stay invertible over integer
    coefficients).
    """
    if name == "tutte":
        return InvariantParams(ONE, ONE, ONE, X, Y)
    if name == "chromatic":
        return InvariantParams(
            BivariateLaurent.from_int(-1),
            ONE,
            X.inverse(),
            X * X - X,
            ZERO,
        )
    if name == "flow":
        return InvariantParams(ONE, BivariateLaurent.from_int(-1), ONE, ZERO, X - 1)
    if name == "negami":
        if negami_t not in (1, -1):
            raise ValueError("negami requires t in {1, -1}: C = 1/t must be a unit")
        t = negami_t
        # D = t(x + t*y) = t*x + y and C = 1/t = t, using t^2 = 1.
        return InvariantParams(
            X,
            Y,
            BivariateLaurent.from_int(t),
            t * X + Y,
            t * X + t * Y,
        )
    if name == "yamada":
        return InvariantParams(ONE, -X.inverse(), X.inverse(), ZERO, X * Y - 1)
    raise ValueError(f"unknown specialization {name!r}")


def chromatic_count(G: Multigraph, lam: int) -> int:
    """Brute-force number of proper colorings with lam colors.

    Independent oracle for the chromatic row; limited to lam <= 8 and
    |V| <= 8.
    """
    if lam < 0:
        raise ValueError("lambda must be nonnegative")
    if lam > 8 or G.vertex_count > 8:
        raise ValueError("brute force limited to lambda <= 8 and |V| <= 8")
    if any(u == v for u, v in G.edges):
        return 0
    count = 0
    for coloring in itertools.product(range(lam), repeat=G.vertex_count):
        if all(coloring[u] != coloring[v] for u, v in G.edges):
            count += 1
    return count
