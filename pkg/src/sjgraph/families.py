"""Signed Johnson-type distance graph families.

Vertices are vectors in {-1, 0, +1}^n with a fixed number of nonzero
entries; edges are defined by a condition on the scalar product of the
endpoints.  Supported family kinds:

  jpm(n, k, t)          signed vectors, k nonzeros, edges at product == t
  j(n, k, t)            0/1 vectors, k ones, edges at product == t
  kpm(n, k, t)          signed vectors, k nonzeros, edges at product <= t
  jkl(n, k, l, s)       exactly k entries +1 and l entries -1, product == s
  jparity(n, k, p)      0/1 vectors, edges at even/odd product
  jpmparity(n, k, p)    signed vectors, edges at even/odd product

Places (coordinates) are numbered 1..n.  The canonical vertex order sorts
by the support bitmask (place 1 = least significant bit, ascending) and
then by the negative-sign bitmask ascending, so vertex indices are
identical across runs and platforms.  All graphs are loop-free: the parity
kinds would otherwise give every vertex of matching self-product parity a
loop, and independence is a statement about distinct pairs.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

import numpy as np

MAX_PLACES = 64
DEFAULT_VERTEX_CAP = 200_000

KINDS = ("jpm", "j", "kpm", "jkl", "jparity", "jpmparity")
SIGNED_KINDS = ("jpm", "kpm", "jkl", "jpmparity")
PARITY_KINDS = ("jparity", "jpmparity")


class InvalidSpecError(ValueError):
    """Family parameters outside the supported ranges."""


class TooLargeError(ValueError):
    """Requested object exceeds a hard size cap."""


class DimensionMismatchError(ValueError):
    """Operands live in different dimensions."""


class BadSupportError(ValueError):
    """A support set has the wrong size or is out of range."""


class UnknownVertexError(KeyError):
    """A vertex does not belong to the graph it is used with."""


def places_to_mask(places) -> int:
    mask = 0
    for p in places:
        mask |= 1 << (p - 1)
    return mask


def mask_to_places(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length())
        mask ^= low
    return tuple(out)


@dataclass(frozen=True, slots=True)
class SignedVector:
    """A {-1,0,+1}^n vector stored as disjoint positive/negative place masks.

    Bit p-1 of a mask corresponds to place p.
    """

    n: int
    pos_mask: int
    neg_mask: int

    def __post_init__(self):
        if not 1 <= self.n <= MAX_PLACES:
            raise InvalidSpecError(f"dimension {self.n} outside 1..{MAX_PLACES}")
        full = (1 << self.n) - 1
        if self.pos_mask & self.neg_mask:
            raise InvalidSpecError("positive and negative places overlap")
        if (self.pos_mask | self.neg_mask) & ~full:
            raise InvalidSpecError("place outside 1..n")

    @classmethod
    def from_places(cls, n: int, pos, neg=()) -> "SignedVector":
        return cls(n, places_to_mask(pos), places_to_mask(neg))

    @classmethod
    def from_string(cls, s: str) -> "SignedVector":
        """Parse '+-0...' with place 1 leftmost."""
        pos = 0
        neg = 0
        for i, ch in enumerate(s):
            if ch == "+":
                pos |= 1 << i
            elif ch == "-":
                neg |= 1 << i
            elif ch != "0":
                raise ValueError(f"bad sign character {ch!r} in {s!r}")
        return cls(len(s), pos, neg)

    def to_string(self) -> str:
        out = []
        for i in range(self.n):
            if self.pos_mask >> i & 1:
                out.append("+")
            elif self.neg_mask >> i & 1:
                out.append("-")
            else:
                out.append("0")
        return "".join(out)

    @property
    def support_mask(self) -> int:
        return self.pos_mask | self.neg_mask

    @property
    def pos(self) -> frozenset[int]:
        return frozenset(mask_to_places(self.pos_mask))

    @property
    def neg(self) -> frozenset[int]:
        return frozenset(mask_to_places(self.neg_mask))

    def support(self) -> frozenset[int]:
        return frozenset(mask_to_places(self.support_mask))

    def support_size(self) -> int:
        return self.support_mask.bit_count()

    def scalar_product(self, other: "SignedVector") -> int:
        return scalar_product(self, other)

    def __str__(self) -> str:
        return self.to_string()


def scalar_product(u: SignedVector, v: SignedVector) -> int:
    """Dot product of the expanded vectors: agreements minus disagreements."""
    if u.n != v.n:
        raise DimensionMismatchError(f"dimensions differ: {u.n} != {v.n}")
    agree = (u.pos_mask & v.pos_mask) | (u.neg_mask & v.neg_mask)
    clash = (u.pos_mask & v.neg_mask) | (u.neg_mask & v.pos_mask)
    return agree.bit_count() - clash.bit_count()


@dataclass(frozen=True, slots=True)
class GraphSpec:
    """Symbolic description of one family instance.

    `t` holds the scalar-product parameter for jpm/j/kpm and the edge
    product `s` for jkl; `l` is the count of -1 entries (jkl only);
    `parity` is 'even' or 'odd' for the parity kinds.
    """

    kind: str
    n: int
    k: int
    t: int | None = None
    l: int | None = None
    parity: str | None = None

    def validate(self) -> "GraphSpec":
        if self.kind not in KINDS:
            raise InvalidSpecError(f"unknown family kind {self.kind!r}")
        if not 1 <= self.k <= self.n <= MAX_PLACES:
            raise InvalidSpecError(
                f"need 1 <= k <= n <= {MAX_PLACES}, got k={self.k}, n={self.n}")
        n, k, t = self.n, self.k, self.t
        if self.kind == "jpm":
            # -k <= t < k; for k = n with n - t odd the edge set is empty
            # (full-support products have the parity of n) but the vertex
            # set is not, so the spec is accepted.
            if t is None or not -k <= t < k:
                raise InvalidSpecError(f"jpm needs -k <= t < k, got t={t}, k={k}")
        elif self.kind == "j":
            if t is None or not 0 <= t < k:
                raise InvalidSpecError(f"j needs 0 <= t < k, got t={t}, k={k}")
        elif self.kind == "kpm":
            if t is None or not -k <= t < k:
                raise InvalidSpecError(f"kpm needs -k <= t < k, got t={t}, k={k}")
        elif self.kind == "jkl":
            if self.l is None or t is None:
                raise InvalidSpecError("jkl needs both l and s")
            if not 0 <= self.l <= k or k + self.l > n:
                raise InvalidSpecError(
                    f"jkl needs 0 <= l <= k and k + l <= n, got k={k}, l={self.l}, n={n}")
        else:
            if self.parity not in ("even", "odd"):
                raise InvalidSpecError(f"parity must be 'even' or 'odd', got {self.parity!r}")
        return self

    @property
    def s(self) -> int | None:
        """Edge product for jkl specs (alias of t)."""
        return self.t

    def support_size(self) -> int:
        return self.k + self.l if self.kind == "jkl" else self.k

    def sign_patterns_per_support(self) -> int:
        if self.kind in ("jpm", "kpm", "jpmparity"):
            return 1 << self.k
        if self.kind == "jkl":
            return comb(self.k + self.l, self.l)
        return 1

    def vertex_count(self) -> int:
        return comb(self.n, self.support_size()) * self.sign_patterns_per_support()

    def describe(self) -> str:
        if self.kind == "jkl":
            return f"jkl({self.n},{self.k},{self.l},{self.t})"
        if self.kind in PARITY_KINDS:
            return f"{self.kind}({self.n},{self.k},{self.parity})"
        return f"{self.kind}({self.n},{self.k},{self.t})"

    def to_dict(self) -> dict:
        return {"kind": self.kind, "n": self.n, "k": self.k,
                "t": self.t, "l": self.l, "parity": self.parity}

    @classmethod
    def from_dict(cls, d: dict) -> "GraphSpec":
        return cls(kind=d["kind"], n=d["n"], k=d["k"], t=d.get("t"),
                   l=d.get("l"), parity=d.get("parity")).validate()

    def __str__(self) -> str:
        return self.describe()


def jpm(n: int, k: int, t: int) -> GraphSpec:
    return GraphSpec("jpm", n, k, t=t).validate()


def j(n: int, k: int, t: int) -> GraphSpec:
    return GraphSpec("j", n, k, t=t).validate()


def kpm(n: int, k: int, t: int) -> GraphSpec:
    return GraphSpec("kpm", n, k, t=t).validate()


def jkl(n: int, k: int, l: int, s: int) -> GraphSpec:
    return GraphSpec("jkl", n, k, t=s, l=l).validate()


def jparity(n: int, k: int, parity: str) -> GraphSpec:
    return GraphSpec("jparity", n, k, parity=parity).validate()


def jpmparity(n: int, k: int, parity: str) -> GraphSpec:
    return GraphSpec("jpmparity", n, k, parity=parity).validate()


def enumerate_vertices(spec: GraphSpec) -> list[SignedVector]:
    """All vertices of the family in canonical order."""
    spec.validate()
    ss = spec.support_size()
    signed = spec.kind in ("jpm", "kpm", "jpmparity")
    out = []
    for places in combinations(range(1, spec.n + 1), ss):
        smask = places_to_mask(places)
        if signed:
            for bits in range(1 << ss):
                neg = 0
                for i in range(ss):
                    if bits >> i & 1:
                        neg |= 1 << (places[i] - 1)
                out.append(SignedVector(spec.n, smask ^ neg, neg))
        elif spec.kind == "jkl":
            for neg_places in combinations(places, spec.l):
                neg = places_to_mask(neg_places)
                out.append(SignedVector(spec.n, smask ^ neg, neg))
        else:
            out.append(SignedVector(spec.n, smask, 0))
    out.sort(key=lambda v: (v.support_mask, v.neg_mask))
    return out


def edge_predicate(spec: GraphSpec, u: SignedVector, v: SignedVector) -> bool:
    """Whether distinct family vertices u, v are adjacent under spec.

    Symmetric in u and v; callers are responsible for u != v.
    """
    p = scalar_product(u, v)
    if spec.kind in ("jpm", "j", "jkl"):
        return p == spec.t
    if spec.kind == "kpm":
        return p <= spec.t
    want = 0 if spec.parity == "even" else 1
    return p % 2 == want


class DistanceGraph:
    """Materialized vertex list plus adjacency bit rows.

    `adjacency[i]` is an integer whose bit j is set iff vertices i and j
    are adjacent; rows are symmetric with an empty diagonal.  Instances
    are immutable after construction and safe for shared concurrent
    reads.  `spec` is either a GraphSpec or a string label for external
    or derived graphs; `vertices` is None for graphs without vertex data
    (for example, DIMACS imports).
    """

    __slots__ = ("spec", "vertices", "adjacency", "n_edges", "_index")

    def __init__(self, spec, vertices, adjacency):
        self.spec = spec
        self.vertices = tuple(vertices) if vertices is not None else None
        self.adjacency = tuple(adjacency)
        self.n_edges = sum(row.bit_count() for row in self.adjacency) // 2
        self._index = (
            {v: i for i, v in enumerate(self.vertices)}
            if self.vertices is not None else None)

    def __len__(self) -> int:
        return len(self.adjacency)

    @property
    def n_vertices(self) -> int:
        return len(self.adjacency)

    def label(self) -> str:
        return self.spec.describe() if isinstance(self.spec, GraphSpec) else str(self.spec)

    def has_edge(self, i: int, j: int) -> bool:
        return bool(self.adjacency[i] >> j & 1)

    def degree(self, i: int) -> int:
        return self.adjacency[i].bit_count()

    def index_of(self, v) -> int:
        """Canonical index of a vertex given as SignedVector, string, or index."""
        if isinstance(v, (int, np.integer)):
            if not 0 <= v < len(self.adjacency):
                raise UnknownVertexError(f"index {v} out of range")
            return int(v)
        if isinstance(v, str):
            v = SignedVector.from_string(v)
        if self._index is None:
            raise UnknownVertexError("graph carries no vertex data; use indices")
        try:
            return self._index[v]
        except KeyError:
            raise UnknownVertexError(f"{v} is not a vertex of {self.label()}") from None

    def encode_vertex(self, i: int) -> str:
        """Witness encoding: sign string, or 1-based index for external graphs."""
        if self.vertices is not None:
            return self.vertices[i].to_string()
        return str(i + 1)


def _pack_bool_row(row: np.ndarray) -> int:
    return int.from_bytes(np.packbits(row, bitorder="little").tobytes(), "little")


def build_graph(spec: GraphSpec, max_vertices: int = DEFAULT_VERTEX_CAP) -> DistanceGraph:
    """Materialize the family instance as a DistanceGraph."""
    spec.validate()
    count = spec.vertex_count()
    if count > max_vertices:
        raise TooLargeError(
            f"{spec.describe()} has {count} vertices, above the cap {max_vertices}")
    verts = enumerate_vertices(spec)
    m = len(verts)
    pos = np.array([v.pos_mask for v in verts], dtype=np.uint64)
    neg = np.array([v.neg_mask for v in verts], dtype=np.uint64)
    adjacency = []
    for i in range(m):
        agree = (np.bitwise_count(pos[i] & pos).astype(np.int16)
                 + np.bitwise_count(neg[i] & neg).astype(np.int16))
        clash = (np.bitwise_count(pos[i] & neg).astype(np.int16)
                 + np.bitwise_count(neg[i] & pos).astype(np.int16))
        prod = agree - clash
        if spec.kind in ("jpm", "j", "jkl"):
            row = prod == spec.t
        elif spec.kind == "kpm":
            row = prod <= spec.t
        else:
            want = 0 if spec.parity == "even" else 1
            row = (prod % 2) == want
        row[i] = False
        adjacency.append(_pack_bool_row(row))
    return DistanceGraph(spec, verts, adjacency)


def induced_on_supports(g: DistanceGraph, supports) -> DistanceGraph:
    """Induced subgraph on all vertices whose support is in `supports`.

    Vertex order is inherited from g.  Each support must be a set of
    places of the family's support size.
    """
    if g.vertices is None:
        raise BadSupportError("graph carries no vertex data")
    n = g.vertices[0].n
    ss = (g.spec.support_size() if isinstance(g.spec, GraphSpec)
          else g.vertices[0].support_size())
    masks = set()
    for supp in supports:
        places = tuple(supp)
        if len(set(places)) != ss:
            raise BadSupportError(f"support {sorted(places)} is not a {ss}-set")
        if not all(1 <= p <= n for p in places):
            raise BadSupportError(f"support {sorted(places)} not within 1..{n}")
        masks.add(places_to_mask(places))
    keep = [i for i, v in enumerate(g.vertices) if v.support_mask in masks]
    if len(keep) == len(g.vertices):
        return DistanceGraph(g.spec, g.vertices, g.adjacency)
    sub_adj = []
    for i in keep:
        row = g.adjacency[i]
        new_row = 0
        for newj, oldj in enumerate(keep):
            if row >> oldj & 1:
                new_row |= 1 << newj
        sub_adj.append(new_row)
    label = f"{g.label()}|induced[{len(masks)} supports]"
    return DistanceGraph(label, [g.vertices[i] for i in keep], sub_adj)
