"""Bit-parallel branch-and-bound kernel for maximum clique (numba).

The solver searches cliques in the complement graph.  The kernel runs the
suffix loop with the incremental per-suffix bound c[i] plus greedy-coloring
pruning, iteratively with an explicit stack so the whole search state lives
in caller-owned arrays.  That keeps the compiled function cacheable (numba
cannot reliably cache self-recursive functions) and lets the wrapper
suspend the search every few million nodes to enforce wall-clock budgets.

Masks are rows of 64-bit words; vertex v lives in word v >> 6, bit v & 63.

State vector layout (int64):
  st[0] best clique size      st[3] suffix index being processed
  st[1] nodes expanded        st[4] stack pointer (0 = between suffixes)
  st[2] found flag            st[5] finished flag
"""

from __future__ import annotations

import numpy as np

try:
    from numba import njit, types
    from numba.extending import intrinsic

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    HAVE_NUMBA = False

BEST, NODES, FOUND, SUFFIX, SP, DONE = 0, 1, 2, 3, 4, 5

if HAVE_NUMBA:

    @intrinsic
    def _cttz(typingctx, src):
        """Trailing-zero count of a nonzero uint64 (hardware tzcnt)."""
        sig = types.uint64(types.uint64)

        def codegen(context, builder, signature, args):
            from llvmlite import ir

            return builder.cttz(args[0], ir.Constant(ir.IntType(1), 1))

        return sig, codegen

    @njit(cache=True)
    def _prepare(level, N, c, ustack, brver, brptr, st, rest, avail):
        """Bound-check and color a new node; fill its branch list.

        Returns False when the node is pruned or has no branchable vertex.
        """
        W = N.shape[1]
        one = np.uint64(1)
        zero = np.uint64(0)
        U = ustack[level]
        lo = -1
        for w in range(W):
            if U[w] != zero:
                lo = (w << 6) + int(_cttz(U[w]))
                break
        if level + c[lo] <= st[BEST]:
            return False
        limit = st[BEST] - level
        for w in range(W):
            rest[w] = U[w]
        bl = 0
        color = 0
        while True:
            nz = False
            for w in range(W):
                if rest[w] != zero:
                    nz = True
                    break
            if not nz:
                break
            color += 1
            for w in range(W):
                avail[w] = rest[w]
            while True:
                vw = -1
                for w in range(W):
                    if avail[w] != zero:
                        vw = w
                        break
                if vw < 0:
                    break
                v = (vw << 6) + int(_cttz(avail[vw]))
                bit = one << np.uint64(v & 63)
                rest[v >> 6] &= ~bit
                avail[vw] &= ~bit
                for w in range(W):
                    avail[w] &= ~N[v, w]
                if color > limit:
                    brver[level, bl] = v
                    bl += 1
        if bl == 0:
            return False
        brptr[level] = bl - 1
        return True

    @njit(cache=True)
    def _record(level, cur, st, bestmask):
        W = bestmask.shape[0]
        zero = np.uint64(0)
        one = np.uint64(1)
        st[BEST] = level + 1
        for w in range(W):
            bestmask[w] = zero
        for d in range(level + 1):
            u = cur[d]
            bestmask[u >> 6] |= one << np.uint64(u & 63)
        st[FOUND] = 1

    @njit(cache=True)
    def _run(N, c, ustack, brver, brptr, cur, rest, avail, st, bestmask, chunk_limit):
        """Advance the search until finished or chunk_limit nodes expanded."""
        m = N.shape[0]
        W = N.shape[1]
        one = np.uint64(1)
        zero = np.uint64(0)
        while True:
            if st[NODES] >= chunk_limit:
                return
            sp = st[SP]
            if sp == 0:
                i = st[SUFFIX] - 1
                if i < 0:
                    st[DONE] = 1
                    return
                st[SUFFIX] = i
                st[FOUND] = 0
                cur[0] = i
                U = ustack[1]
                wlo = i >> 6
                nz = False
                for w in range(W):
                    if w < wlo:
                        U[w] = zero
                    else:
                        U[w] = N[i, w]
                U[wlo] &= ~((one << np.uint64(i & 63)) - one)
                for w in range(W):
                    if U[w] != zero:
                        nz = True
                        break
                if not nz:
                    if st[BEST] < 1:
                        st[BEST] = 1
                        for w in range(W):
                            bestmask[w] = zero
                        bestmask[i >> 6] |= one << np.uint64(i & 63)
                else:
                    st[NODES] += 1
                    if _prepare(1, N, c, ustack, brver, brptr, st, rest, avail):
                        st[SP] = 1
                        continue
                ci = c[i + 1] + 1
                if st[BEST] < ci:
                    ci = st[BEST]
                c[i] = ci
                continue
            # inside a suffix search
            if st[FOUND] != 0:
                st[SP] = 0
                i = st[SUFFIX]
                ci = c[i + 1] + 1
                if st[BEST] < ci:
                    ci = st[BEST]
                c[i] = ci
                continue
            L = sp
            if brptr[L] < 0:
                st[SP] = L - 1
                if L == 1:
                    i = st[SUFFIX]
                    ci = c[i + 1] + 1
                    if st[BEST] < ci:
                        ci = st[BEST]
                    c[i] = ci
                continue
            v = brver[L, brptr[L]]
            brptr[L] -= 1
            ustack[L, v >> 6] &= ~(one << np.uint64(v & 63))
            cur[L] = v
            child = ustack[L + 1]
            nz = False
            for w in range(W):
                child[w] = ustack[L, w] & N[v, w]
                if child[w] != zero:
                    nz = True
            if not nz:
                if L + 1 > st[BEST]:
                    _record(L, cur, st, bestmask)
                continue
            st[NODES] += 1
            if _prepare(L + 1, N, c, ustack, brver, brptr, st, rest, avail):
                st[SP] = L + 1
