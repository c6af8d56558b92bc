"""Reed-Solomon style b-simple hypergraphs over k copies of a prime field.

Vertices are pairs (copy, element) with copy in 1..k and element in
0..p-1.  Edges are the solutions (x_1, ..., x_k) of the power-sum system

    sum_i i^j * x_i = 0 (mod p),   j = 0 .. k-b-2,

one vertex per copy.  Any k-b-1 columns of the coefficient matrix form a
Vandermonde matrix on the distinct nonzero nodes 1..k (p > k), so fixing
any b+1 coordinates determines the rest uniquely: the hypergraph has
p^(b+1) edges, every two edges share at most b vertices, every vertex
lies in p^b edges, and every b-set of vertices in distinct copies lies in
exactly p edges.  The boundary b = k-1 (no equations, all p^k tuples) is
accepted for testing.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations, product

import numpy as np

MAX_PRIME = 1 << 20

FANO_LINES = ((1, 2, 3), (1, 4, 5), (1, 6, 7), (2, 4, 6),
              (2, 5, 7), (3, 4, 7), (3, 5, 6))


class NotPrimeError(ValueError):
    pass


class PTooSmallError(ValueError):
    pass


class NoPrimeInWindowError(ValueError):
    pass


class MapNotInjectiveError(ValueError):
    pass


class BadPlacesError(ValueError):
    pass


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class BSimpleHypergraph:
    """k-uniform hypergraph on k disjoint copies of Z_p; edges are tuples
    of field elements indexed by copy."""

    p: int
    k: int
    b: int
    edges: tuple[tuple[int, ...], ...]

    @property
    def n_vertices(self) -> int:
        return self.p * self.k

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    def vertices(self) -> list[tuple[int, int]]:
        return [(copy, x) for copy in range(1, self.k + 1) for x in range(self.p)]

    def to_dict(self) -> dict:
        return {"p": self.p, "k": self.k, "b": self.b,
                "edges": [[[i + 1, x] for i, x in enumerate(e)] for e in self.edges]}

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)


def _solve_mod_p(matrix, rhs, p):
    """Gaussian elimination mod p for a square nonsingular system."""
    n = len(rhs)
    aug = [row[:] + [rhs[i]] for i, row in enumerate(matrix)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] % p != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = pow(aug[col][col], p - 2, p)
        aug[col] = [(x * inv) % p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [(a - f * b) % p for a, b in zip(aug[r], aug[col])]
    return [aug[i][n] % p for i in range(n)]


def rs_construct(p: int, k: int, b: int) -> BSimpleHypergraph:
    """All solutions of the k-b-1 power-sum equations as edges."""
    if not is_prime(p):
        raise NotPrimeError(f"p={p} is not prime")
    if p > MAX_PRIME:
        raise ValueError(f"p={p} above the cap {MAX_PRIME}")
    if p <= k:
        raise PTooSmallError(f"need p > k, got p={p}, k={k}")
    if not 1 <= b <= k - 1:
        raise ValueError(f"need 1 <= b <= k-1, got b={b}, k={k}")
    n_eq = k - b - 1
    free = list(range(n_eq, k))          # 0-based coordinates left free
    head = list(range(n_eq))             # solved coordinates
    matrix = [[pow(i + 1, jj, p) for i in head] for jj in range(n_eq)]
    edges = []
    for assignment in product(range(p), repeat=len(free)):
        if n_eq:
            rhs = []
            for jj in range(n_eq):
                s = sum(pow(i + 1, jj, p) * x for i, x in zip(free, assignment))
                rhs.append((-s) % p)
            head_vals = _solve_mod_p(matrix, rhs, p)
        else:
            head_vals = []
        edges.append(tuple(head_vals) + tuple(assignment))
    edges.sort()
    return BSimpleHypergraph(p, k, b, tuple(edges))


def verify_b_simple(h: BSimpleHypergraph):
    """Exhaustive pairwise intersection check.

    Returns None when every two edges share at most b vertices, else the
    (i, j) indices of the first violating edge pair.
    """
    E = np.array(h.edges, dtype=np.int64)
    m = len(E)
    for i in range(m - 1):
        shares = (E[i + 1:] == E[i]).sum(axis=1)
        bad = np.nonzero(shares > h.b)[0]
        if bad.size:
            return (i, i + 1 + int(bad[0]))
    return None


def vertex_degrees(h: BSimpleHypergraph) -> dict[tuple[int, int], int]:
    deg = {v: 0 for v in h.vertices()}
    for e in h.edges:
        for i, x in enumerate(e):
            deg[(i + 1, x)] += 1
    return deg


def b_codegree_table(h: BSimpleHypergraph) -> dict[tuple, int]:
    """Edge count through every b-set of vertices in distinct copies.

    Keys are ((copy, elem), ...) tuples sorted by copy; b-sets covered by
    no edge are present with count 0.
    """
    counts = {}
    for copies in combinations(range(1, h.k + 1), h.b):
        for values in product(range(h.p), repeat=h.b):
            counts[tuple(zip(copies, values))] = 0
    for e in h.edges:
        for copies in combinations(range(1, h.k + 1), h.b):
            key = tuple((c, e[c - 1]) for c in copies)
            counts[key] += 1
    return counts


def choose_prime(n: int, k: int):
    """Largest prime in [n/(2k), n/k], plus whether p-1 > 2^k.

    The flag reports whether the codegree margin needed by the averaging
    argument holds for this prime.
    """
    if n <= 4 * k:
        raise ValueError(f"need n > 4k, got n={n}, k={k}")
    lo = (n + 2 * k - 1) // (2 * k)     # ceil(n / 2k)
    hi = n // k
    for p in range(hi, lo - 1, -1):
        if is_prime(p):
            return p, (p - 1) > (1 << k)
    raise NoPrimeInWindowError(f"no prime in [{n}/(2*{k}), {n}/{k}]")


def embed_hypergraph_supports(h: BSimpleHypergraph, place_map: dict) -> list[frozenset[int]]:
    """Translate edges to supports in [n] through an injective vertex map.

    `place_map` maps (copy, element) pairs to places; composing the result
    with families.induced_on_supports realizes the subgraph on hypergraph
    supports.
    """
    values = list(place_map.values())
    if len(set(values)) != len(values):
        raise MapNotInjectiveError("place map is not injective")
    out = []
    for e in h.edges:
        out.append(frozenset(place_map[(i + 1, x)] for i, x in enumerate(e)))
    return out


def identity_place_map(h: BSimpleHypergraph) -> dict:
    """(copy, x) -> (copy-1)*p + x + 1, packing vertices into 1..pk."""
    return {(copy, x): (copy - 1) * h.p + x + 1
            for copy in range(1, h.k + 1) for x in range(h.p)}


def fano_supports(seven_places) -> list[frozenset[int]]:
    """The 7 lines of the Fano plane relabeled onto the given places."""
    places = list(seven_places)
    if len(places) != 7 or len(set(places)) != 7:
        raise BadPlacesError(f"need 7 distinct places, got {places}")
    if not all(isinstance(p, int) and p >= 1 for p in places):
        raise BadPlacesError(f"places must be positive integers, got {places}")
    return [frozenset(places[i - 1] for i in line) for line in FANO_LINES]
