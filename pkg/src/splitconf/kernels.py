"""Compiled sweep over all ``H(n,{0,a,b})`` hexagon splitting sets.

The kernel recomputes everything from scratch for each ``(a, b)``: the two
residue lists, the candidate set, the distance-2 test, the girth test by
repeated differences, and a BFS of ``H(n,S) - sigma`` over arrays.  It
shares no code with the Python path it is compared against in the tests.
"""
from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True)
def _distinct12(vals, n, stamp, mark):
    for i in range(12):
        x = vals[i]
        if stamp[x] == mark:
            return False
        stamp[x] = mark
    return True


@njit(cache=True)
def sweep_one_n(n):
    """Returns ``(admissible, failures, fail_a, fail_b, sigma_rows)``.

    ``sigma_rows`` lists ``(a, b, s0..s5)`` for each admissible pair.
    """
    S = np.zeros(3, np.int64)
    vals = np.zeros(12, np.int64)
    stamp = np.zeros(n, np.int64)
    mark = 0
    in_sigma = np.zeros(2 * n, np.int64)
    seen = np.zeros(2 * n, np.int64)
    queue = np.zeros(2 * n, np.int64)
    sigma = np.zeros(6, np.int64)
    sig_mark = 0
    bfs_mark = 0
    admissible = 0
    failures = 0
    fail_a = -1
    fail_b = -1
    rows = np.zeros(((n - 1) * (n - 2) // 2 + 1, 8), np.int64)
    for b in range(2, n):
        for a in range(1, b):
            w = (0, a, b, 2 * b, b + a, b - a, 2 * b - a, 2 * b - 2 * a, 3 * b - a, 3 * b - 2 * a, 2 * b + a, 3 * b)
            for i in range(12):
                vals[i] = w[i] % n
            mark += 1
            if not _distinct12(vals, n, stamp, mark):
                continue
            bl = (0, a, b, 2 * b, b + a, b - a, 2 * b - a, 2 * b - 2 * a, 3 * b - a, 3 * b - 2 * a, -a, b - 2 * a)
            for i in range(12):
                vals[i] = bl[i] % n
            mark += 1
            if not _distinct12(vals, n, stamp, mark):
                continue
            rows[admissible, 0] = a
            rows[admissible, 1] = b
            admissible += 1
            S[0] = 0
            S[1] = a
            S[2] = b
            sigma[0] = 0
            sigma[1] = (2 * b) % n
            sigma[2] = (2 * b - 2 * a) % n
            sigma[3] = n + (b - a) % n
            sigma[4] = n + (b + a) % n
            sigma[5] = n + (3 * b - a) % n
            for i in range(6):
                rows[admissible - 1, 2 + i] = sigma[i]
            ok = True
            # girth 6: the six differences s - t are distinct
            mark += 1
            for i in range(3):
                for j in range(3):
                    if i != j:
                        d = (S[i] - S[j]) % n
                        if stamp[d] == mark:
                            ok = False
                        stamp[d] = mark
            # pairwise distance >= 3: closed neighbourhoods disjoint
            if ok:
                bfs_mark += 1
                for i in range(6):
                    v = sigma[i]
                    if seen[v] == bfs_mark:
                        ok = False
                    seen[v] = bfs_mark
                    for k in range(3):
                        u = n + (v + S[k]) % n if v < n else (v - n - S[k]) % n
                        if seen[u] == bfs_mark:
                            ok = False
                        seen[u] = bfs_mark
            # G - sigma disconnected
            if ok:
                sig_mark += 1
                for i in range(6):
                    in_sigma[sigma[i]] = sig_mark
                start = 0
                while in_sigma[start] == sig_mark:
                    start += 1
                bfs_mark += 1
                seen[start] = bfs_mark
                head = 0
                tail = 1
                queue[0] = start
                while head < tail:
                    v = queue[head]
                    head += 1
                    for k in range(3):
                        u = n + (v + S[k]) % n if v < n else (v - n - S[k]) % n
                        if in_sigma[u] != sig_mark and seen[u] != bfs_mark:
                            seen[u] = bfs_mark
                            queue[tail] = u
                            tail += 1
                if tail == 2 * n - 6:
                    ok = False
            if not ok:
                failures += 1
                if fail_a < 0:
                    fail_a = a
                    fail_b = b
    return admissible, failures, fail_a, fail_b, rows[:admissible]


# -- transfer-matrix decision for H(n, S) with a short span ----------------------------
#
# Column i holds (i+, i-).  Each vertex is labelled A, B or Z (the removed
# set).  A labelling is a splitting witness iff no A-B edge, no two Z
# vertices at distance <= 2, and both A and B occur.  With S inside [0, b]
# every constraint joins columns at most b apart, so a window of b columns
# is a finite state and the cyclic labellings are closed walks of length n.

_A, _B, _Z = 0, 1, 2


@njit(cache=True)
def _edge_ok(x, y):
    if x == _Z and y == _Z:
        return False
    return not ((x == _A and y == _B) or (x == _B and y == _A))


@njit(cache=True)
def _col_ok(c, zero_in_s, z_plus, z_minus):
    p, m = c // 3, c % 3
    if p == _Z and not z_plus:
        return False
    if m == _Z and not z_minus:
        return False
    if zero_in_s and not _edge_ok(p, m):
        return False
    return True


@njit(cache=True)
def _pair_ok(new, old, d, adj, shared):
    """``old`` sits ``d`` columns before ``new``."""
    pn, mn = new // 3, new % 3
    po, mo = old // 3, old % 3
    if adj[d] and not _edge_ok(po, mn):
        return False
    if shared[d]:
        if pn == _Z and po == _Z:
            return False
        if mn == _Z and mo == _Z:
            return False
    return True


@njit(cache=True)
def _transfer_decide(n, b, adj, shared, zero_in_s, z_plus, z_minus):
    nstates = 9 ** b
    top = 9 ** (b - 1)
    # trans[w, c]: window after appending column c, or -1
    trans = np.full((nstates, 9), -1, np.int64)
    cols = np.zeros(b, np.int64)
    for w in range(nstates):
        x = w
        for k in range(b):
            cols[k] = x % 9
            x //= 9
        for c in range(9):
            if not _col_ok(c, zero_in_s, z_plus, z_minus):
                continue
            ok = True
            for k in range(b):
                if not _pair_ok(c, cols[k], b - k, adj, shared):
                    ok = False
                    break
            if ok:
                trans[w, c] = w // 9 + c * top
    # windows that are consistent as a linear run of b columns
    start_ok = np.zeros(nstates, np.bool_)
    for w in range(nstates):
        x = w
        for k in range(b):
            cols[k] = x % 9
            x //= 9
        ok = True
        for k in range(b):
            if not _col_ok(cols[k], zero_in_s, z_plus, z_minus):
                ok = False
            for j in range(k):
                if not _pair_ok(cols[k], cols[j], k - j, adj, shared):
                    ok = False
        start_ok[w] = ok
    flag_of = np.zeros(9, np.int64)
    for c in range(9):
        p, m = c // 3, c % 3
        f = 0
        if p == _A or m == _A:
            f |= 1
        if p == _B or m == _B:
            f |= 2
        flag_of[c] = f
    words = (nstates + 63) // 64
    reach = np.zeros((nstates, 4, words), np.uint64)
    for w in range(nstates):
        if start_ok[w]:
            x = w
            f = 0
            for k in range(b):
                f |= flag_of[x % 9]
                x //= 9
            reach[w, f, w >> 6] |= np.uint64(1) << np.uint64(w & 63)
    for _ in range(n - b):
        nxt = np.zeros_like(reach)
        for w in range(nstates):
            for f in range(4):
                row = reach[w, f]
                live = False
                for q in range(words):
                    if row[q]:
                        live = True
                        break
                if not live:
                    continue
                for c in range(9):
                    w2 = trans[w, c]
                    if w2 < 0:
                        continue
                    f2 = f | flag_of[c]
                    for q in range(words):
                        nxt[w2, f2, q] |= row[q]
        reach = nxt
    # close the cycle: the first b columns must follow the last b
    for w in range(nstates):
        for q in range(words):
            word = reach[w, 3, q]
            while word:
                low = word & (~word + np.uint64(1))
                bit = 0
                t = low
                while t > np.uint64(1):
                    t >>= np.uint64(1)
                    bit += 1
                s = q * 64 + bit
                x = w
                y = s
                ok = True
                for k in range(b):
                    x = trans[x, y % 9]
                    y //= 9
                    if x < 0:
                        ok = False
                        break
                if ok:
                    return True
                word ^= low
    return False


def short_span_form(n: int, S) -> tuple[int, ...]:
    """An affine image ``{a*s + t}`` of ``S`` containing 0 with the smallest maximum."""
    from math import gcd

    best = None
    for a in range(1, n):
        if gcd(a, n) != 1:
            continue
        scaled = sorted({a * s % n for s in S})
        for t in scaled:
            cand = tuple(sorted((x - t) % n for x in scaled))
            if best is None or (cand[-1], cand) < (best[-1], best):
                best = cand
    return best


def transfer_splittable(n: int, S, black: bool = True, white: bool = True, max_span: int = 4) -> bool:
    """Exact splittability of ``H(n, S)`` by a closed-walk search over column windows.

    ``black``/``white`` say whether removed vertices may be ``i+``/``i-``.
    Needs an affine form of ``S`` inside ``[0, b]`` with ``b <= max_span``
    and ``n > 2b``; raises ``ValueError`` otherwise.
    """
    T = short_span_form(n, S)
    b = T[-1]
    if b == 0 or b > max_span or n <= 2 * b:
        raise ValueError(f"span {b} unsupported for n = {n}")
    diffs = {(x - y) % n for x in T for y in T if x != y}
    adj = np.array([d in T for d in range(b + 1)], np.bool_)
    shared = np.array([d in diffs for d in range(b + 1)], np.bool_)
    return bool(_transfer_decide(n, b, adj, shared, True, black, white))
