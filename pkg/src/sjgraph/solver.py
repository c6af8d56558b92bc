"""Exact maximum independent set computation with certificates.

`solve_exact` runs a branch-and-bound maximum-clique search on the
complement graph: vertices are ordered by non-increasing complement degree
(canonical index as tie-break), suffixes are processed with the incremental
bound c[i] (the best clique using only vertices from suffix i onward), and
every node is greedily colored, branching on the highest color classes
first.  The search is warm-started from deterministic greedy independent
sets, so the certificate is identical from run to run.

Two engines implement the identical algorithm: a pure-Python one on
arbitrary-width integer masks and a numba kernel on 64-bit word arrays.
The numba engine is picked automatically for graphs large enough to be
worth the JIT; results are cross-checked in the test suite.  Execution is
single-threaded either way: the `threads` budget field is accepted for
interface stability, and the reported alpha is trivially independent of
it.
"""

from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import _kernel
from .families import (DistanceGraph, GraphSpec, SignedVector, TooLargeError,
                       UnknownVertexError)

DEFAULT_TIME_LIMIT = 3600.0
DEFAULT_NODE_LIMIT = 10 ** 9
BRUTE_FORCE_CAP = 24
_KERNEL_MIN_VERTICES = 40
_KERNEL_MAX_VERTICES = 4096
_CHUNK_START = 50_000
_CHUNK_MAX = 4_000_000

STATUS_VERIFIED = "verified"
STATUS_UNVERIFIED = "unverified"
STATUS_FAILED = "failed"


class BudgetError(ValueError):
    """A budget field is not strictly positive."""


@dataclass(frozen=True)
class SolveBudget:
    time_limit: float = DEFAULT_TIME_LIMIT
    node_limit: int = DEFAULT_NODE_LIMIT
    threads: int = 1

    def validate(self) -> "SolveBudget":
        if self.time_limit <= 0 or self.node_limit <= 0 or self.threads <= 0:
            raise BudgetError(f"budget fields must be positive: {self}")
        return self


@dataclass
class IndependenceCertificate:
    """Claimed independence number with a witness vertex set.

    status 'verified' means the search completed within budget and the
    witness was re-checked pairwise non-adjacent, so alpha is exact;
    'unverified' means the budget ran out and alpha is only the best
    known lower bound; 'failed' records a witness verification failure
    together with the offending pair.
    """

    spec: GraphSpec | str
    alpha: int
    witness: tuple[str, ...]
    status: str
    search_nodes: int = 0
    elapsed: float = 0.0
    failed_pair: tuple[str, str] | None = None

    @property
    def verified(self) -> bool:
        return self.status == STATUS_VERIFIED

    def to_dict(self) -> dict:
        return {
            "spec": self.spec.to_dict() if isinstance(self.spec, GraphSpec) else str(self.spec),
            "alpha": self.alpha,
            "witness": list(self.witness),
            "verified": self.verified,
            "status": self.status,
            "nodes": self.search_nodes,
            "millis": int(self.elapsed * 1000),
        }

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)

    @classmethod
    def from_dict(cls, d: dict) -> "IndependenceCertificate":
        spec = d["spec"]
        if isinstance(spec, dict):
            spec = GraphSpec.from_dict(spec)
        status = d.get("status")
        if status is None:
            status = STATUS_VERIFIED if d.get("verified") else STATUS_UNVERIFIED
        return cls(spec=spec, alpha=d["alpha"], witness=tuple(d["witness"]),
                   status=status, search_nodes=d.get("nodes", 0),
                   elapsed=d.get("millis", 0) / 1000.0)

    @classmethod
    def from_json(cls, text: str) -> "IndependenceCertificate":
        return cls.from_dict(json.loads(text))


def load_certificate(path) -> IndependenceCertificate:
    return IndependenceCertificate.from_json(Path(path).read_text())


def verify_independent(g: DistanceGraph, witness):
    """None if the witness is pairwise non-adjacent, else the first
    violating pair of canonical indices (lexicographic order)."""
    idx = sorted(g.index_of(v) for v in witness)
    for a in range(len(idx)):
        row = g.adjacency[idx[a]]
        for b in range(a + 1, len(idx)):
            if row >> idx[b] & 1:
                return (idx[a], idx[b])
    return None


def _certificate(g, alpha, witness_idx, nodes, elapsed, complete) -> IndependenceCertificate:
    bad = verify_independent(g, witness_idx)
    if bad is not None or len(witness_idx) != alpha:
        pair = (g.encode_vertex(bad[0]), g.encode_vertex(bad[1])) if bad else None
        status = STATUS_FAILED
    else:
        status = STATUS_VERIFIED if complete else STATUS_UNVERIFIED
        pair = None
    witness = tuple(g.encode_vertex(i) for i in sorted(witness_idx))
    return IndependenceCertificate(spec=g.spec, alpha=alpha, witness=witness,
                                   status=status, search_nodes=nodes,
                                   elapsed=elapsed, failed_pair=pair)


# ---------------------------------------------------------------------------
# greedy lower bound

def _greedy_over_order(adjacency, order):
    chosen = []
    forbidden = 0
    for v in order:
        if not forbidden >> v & 1:
            chosen.append(v)
            forbidden |= adjacency[v] | (1 << v)
    return chosen


def _warm_start_orders(g: DistanceGraph):
    m = len(g)
    yield range(m)
    yield range(m - 1, -1, -1)
    yield sorted(range(m), key=lambda i: (g.adjacency[i].bit_count(), i))
    if g.vertices is not None:
        yield sorted(range(m), key=lambda i: (g.vertices[i].neg_mask.bit_count(), i))


def greedy_lower_bound(g: DistanceGraph, seed: int = 0) -> IndependenceCertificate:
    """Maximal (not necessarily maximum) independent set from a seeded
    random vertex order; alpha holds its size, a lower bound."""
    t0 = time.monotonic()
    order = list(range(len(g)))
    random.Random(seed).shuffle(order)
    chosen = _greedy_over_order(g.adjacency, order)
    return _certificate(g, len(chosen), chosen, 0, time.monotonic() - t0,
                        complete=True)


# ---------------------------------------------------------------------------
# exact search

def _complement_order(g: DistanceGraph):
    m = len(g)
    full = (1 << m) - 1
    comp = [~g.adjacency[i] & full & ~(1 << i) for i in range(m)]
    order = sorted(range(m), key=lambda i: (-comp[i].bit_count(), i))
    pos_of = [0] * m
    for newi, oldi in enumerate(order):
        pos_of[oldi] = newi
    remapped = []
    for oldi in order:
        mask = comp[oldi]
        nm = 0
        while mask:
            low = mask & -mask
            nm |= 1 << pos_of[low.bit_length() - 1]
            mask ^= low
        remapped.append(nm)
    return remapped, order, pos_of


def _solve_python(N, m, best, best_mask, deadline, node_limit):
    """Reference engine: identical search on Python integer masks."""
    c = [0] * (m + 1)
    nodes = 0
    found = False
    aborted = 0
    cur = [0] * (m + 1)

    import sys
    old_limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old_limit, m + 100))

    def expand(U, level):
        nonlocal best, best_mask, nodes, found, aborted
        nodes += 1
        if nodes >= node_limit:
            aborted = 1
            return
        if nodes & 2047 == 0 and time.monotonic() > deadline:
            aborted = 2
            return
        if level + c[(U & -U).bit_length() - 1] <= best:
            return
        limit = best - level
        branch = []
        rest = U
        color = 0
        earlier = 0
        while rest:
            color += 1
            avail = rest
            cls = 0
            while avail:
                low = avail & -avail
                cls |= low
                avail &= ~N[low.bit_length() - 1] & ~low
            rest &= ~cls
            if color > limit:
                mask = cls
                while mask:
                    low = mask & -mask
                    branch.append((low.bit_length() - 1, earlier | (cls & (low - 1))))
                    mask ^= low
            earlier |= cls
        for v, pool in reversed(branch):
            cur[level] = v
            child = pool & N[v]
            if child:
                expand(child, level + 1)
            elif level + 1 > best:
                best = level + 1
                best_mask = 0
                for d in range(level + 1):
                    best_mask |= 1 << cur[d]
                found = True
            if found or aborted:
                return

    try:
        for i in range(m - 1, -1, -1):
            found = False
            cur[0] = i
            root = N[i] >> i << i
            if root:
                expand(root, 1)
            elif best < 1:
                best = 1
                best_mask = 1 << i
            if aborted:
                break
            c[i] = min(c[i + 1] + 1, best)
    finally:
        sys.setrecursionlimit(old_limit)
    return best, best_mask, nodes, aborted


def _solve_numba(N, m, best, best_mask, deadline, node_limit):
    W = (m + 63) >> 6
    Nw = np.zeros((m, W), dtype=np.uint64)
    for i, mask in enumerate(N):
        w = 0
        while mask:
            Nw[i, w] = np.uint64(mask & 0xFFFFFFFFFFFFFFFF)
            mask >>= 64
            w += 1
    st = np.zeros(6, dtype=np.int64)
    st[_kernel.BEST] = best
    st[_kernel.SUFFIX] = m
    bm = np.zeros(W, dtype=np.uint64)
    mask = best_mask
    w = 0
    while mask:
        bm[w] = np.uint64(mask & 0xFFFFFFFFFFFFFFFF)
        mask >>= 64
        w += 1
    c = np.zeros(m + 2, dtype=np.int64)
    ustack = np.zeros((m + 2, W), dtype=np.uint64)
    brver = np.zeros((m + 2, m), dtype=np.int32)
    brptr = np.full(m + 2, -1, dtype=np.int64)
    cur = np.zeros(m + 2, dtype=np.int32)
    rest = np.zeros(W, dtype=np.uint64)
    avail = np.zeros(W, dtype=np.uint64)
    chunk = _CHUNK_START
    aborted = 0
    while True:
        limit = min(node_limit, st[_kernel.NODES] + chunk)
        _kernel._run(Nw, c, ustack, brver, brptr, cur, rest, avail, st, bm, limit)
        if st[_kernel.DONE]:
            break
        if st[_kernel.NODES] >= node_limit:
            aborted = 1
            break
        if time.monotonic() > deadline:
            aborted = 2
            break
        chunk = min(chunk * 4, _CHUNK_MAX)
    out_mask = 0
    for w in range(W):
        out_mask |= int(bm[w]) << (64 * w)
    return int(st[_kernel.BEST]), out_mask, int(st[_kernel.NODES]), aborted


def solve_exact(g: DistanceGraph, budget: SolveBudget | None = None,
                engine: str = "auto") -> IndependenceCertificate:
    """Exact independence number of g, or the best lower bound found
    within budget (status 'unverified')."""
    m = len(g)
    if m == 0:
        raise ValueError("graph has no vertices")
    budget = (budget or SolveBudget()).validate()
    t0 = time.monotonic()
    deadline = t0 + budget.time_limit

    best_set = []
    for order in _warm_start_orders(g):
        cand = _greedy_over_order(g.adjacency, order)
        if len(cand) > len(best_set):
            best_set = cand

    N, order, pos_of = _complement_order(g)
    best = len(best_set)
    best_mask = 0
    for v in best_set:
        best_mask |= 1 << pos_of[v]

    if engine == "auto":
        use_kernel = (_kernel.HAVE_NUMBA
                      and _KERNEL_MIN_VERTICES <= m <= _KERNEL_MAX_VERTICES)
    elif engine == "numba":
        if not _kernel.HAVE_NUMBA:
            raise RuntimeError("numba engine requested but numba is unavailable")
        use_kernel = True
    elif engine == "python":
        use_kernel = False
    else:
        raise ValueError(f"unknown engine {engine!r}")

    run = _solve_numba if use_kernel else _solve_python
    best, best_mask, nodes, aborted = run(N, m, best, best_mask,
                                          deadline, budget.node_limit)
    witness = []
    mask = best_mask
    while mask:
        low = mask & -mask
        witness.append(order[low.bit_length() - 1])
        mask ^= low
    return _certificate(g, best, witness, nodes, time.monotonic() - t0,
                        complete=(aborted == 0))


def solve_brute_force(g: DistanceGraph) -> IndependenceCertificate:
    """Ground-truth oracle: exact alpha by enumeration over the subset
    lattice (memoized), independent of the branch-and-bound path."""
    m = len(g)
    if m > BRUTE_FORCE_CAP:
        raise TooLargeError(f"brute force caps at {BRUTE_FORCE_CAP} vertices, got {m}")
    t0 = time.monotonic()
    adjacency = g.adjacency
    memo: dict[int, tuple[int, int]] = {}

    def best_in(mask):
        if mask == 0:
            return 0, 0
        hit = memo.get(mask)
        if hit is not None:
            return hit
        low = mask & -mask
        v = low.bit_length() - 1
        rest = mask ^ low
        size0, set0 = best_in(rest)
        size1, set1 = best_in(rest & ~adjacency[v])
        result = (size1 + 1, set1 | low) if size1 + 1 > size0 else (size0, set0)
        memo[mask] = result
        return result

    alpha, chosen = best_in((1 << m) - 1)
    witness = [i for i in range(m) if chosen >> i & 1]
    return _certificate(g, alpha, witness, len(memo), time.monotonic() - t0,
                        complete=True)
