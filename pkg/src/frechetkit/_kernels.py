"""Compiled numerical kernels shared across the library.

All kernels are numba-compiled without fastmath: comparisons against a
threshold must be plain IEEE comparisons so that independently computed
references agree with these kernels even on exact ties.
"""
from __future__ import annotations

import numpy as np
from numba import njit

# norm codes: 0 = Linf, 1 = L1, 2 = L2 (see geometry.Norm)

_INT_INF = np.int64(1) << 60


@njit(cache=True)
def _dist(p, q, code):
    if code == 2:
        s = 0.0
        for c in range(p.shape[0]):
            d = p[c] - q[c]
            s += d * d
        return np.sqrt(s)
    if code == 1:
        s = 0.0
        for c in range(p.shape[0]):
            s += abs(p[c] - q[c])
        return s
    m = 0.0
    for c in range(p.shape[0]):
        d = abs(p[c] - q[c])
        if d > m:
            m = d
    return m


@njit(cache=True)
def point_dist(p, q, code):
    return _dist(p, q, code)


@njit(cache=True)
def _ball_segment_core(W, V, r, code):
    """Solve dist(0, W + tau*V) <= r for tau in [0, 1].

    W is (segment start - center), V the segment direction.  Returns
    (ok, lo, hi); when ok is False the interval is empty.
    """
    d = W.shape[0]
    if code == 2:
        vv = 0.0
        wv = 0.0
        ww = 0.0
        for c in range(d):
            vv += V[c] * V[c]
            wv += W[c] * V[c]
            ww += W[c] * W[c]
        if vv == 0.0:
            if ww <= r * r:
                return True, 0.0, 1.0
            return False, 0.0, 0.0
        disc = wv * wv - vv * (ww - r * r)
        if disc < 0.0:
            return False, 0.0, 0.0
        sq = np.sqrt(disc)
        lo = (-wv - sq) / vv
        hi = (-wv + sq) / vv
        if lo < 0.0:
            lo = 0.0
        if hi > 1.0:
            hi = 1.0
        if lo > hi:
            return False, 0.0, 0.0
        return True, lo, hi
    if code == 0:
        lo = 0.0
        hi = 1.0
        for c in range(d):
            w = W[c]
            v = V[c]
            if v == 0.0:
                if abs(w) > r:
                    return False, 0.0, 0.0
            else:
                t1 = (-r - w) / v
                t2 = (r - w) / v
                if t1 > t2:
                    t1, t2 = t2, t1
                if t1 > lo:
                    lo = t1
                if t2 < hi:
                    hi = t2
        if lo > hi:
            return False, 0.0, 0.0
        return True, lo, hi
    # L1: the distance along the segment is piecewise linear and convex;
    # evaluate at 0, 1 and interior breakpoints, then cut the sublevel set.
    ts = np.empty(d + 2, np.float64)
    k = 0
    ts[k] = 0.0
    k += 1
    for c in range(d):
        if V[c] != 0.0:
            t = -W[c] / V[c]
            if 0.0 < t < 1.0:
                ts[k] = t
                k += 1
    ts[k] = 1.0
    k += 1
    ts[:k].sort()
    fs = np.empty(k, np.float64)
    for idx in range(k):
        s = 0.0
        t = ts[idx]
        for c in range(d):
            s += abs(W[c] + t * V[c])
        fs[idx] = s
    lo = np.nan
    for idx in range(k):
        if fs[idx] <= r:
            if idx == 0:
                lo = ts[0]
            else:
                fa = fs[idx - 1]
                fb = fs[idx]
                lo = ts[idx - 1] + (fa - r) * (ts[idx] - ts[idx - 1]) / (fa - fb)
            break
    if np.isnan(lo):
        return False, 0.0, 0.0
    hi = 1.0
    for idx in range(k - 1, -1, -1):
        if fs[idx] <= r:
            if idx == k - 1:
                hi = ts[k - 1]
            else:
                fa = fs[idx]
                fb = fs[idx + 1]
                hi = ts[idx] + (r - fa) * (ts[idx + 1] - ts[idx]) / (fb - fa)
            break
    return True, lo, hi


@njit(cache=True)
def ball_segment_interval(center, seg_a, seg_b, r, code):
    """Parameters tau in [0, 1] of the segment seg_a->seg_b within distance
    r of center.

    The closed-form interval is widened to include the segment endpoints
    whenever their point distances (computed exactly like the discrete DP
    computes them) pass the threshold, so boundary ties agree bit-for-bit
    with vertex-distance comparisons elsewhere.
    """
    ok, lo, hi = _ball_segment_core(seg_a - center, seg_b - seg_a, r, code)
    in0 = _dist(center, seg_a, code) <= r
    in1 = _dist(center, seg_b, code) <= r
    if in0 and in1:
        return True, 0.0, 1.0
    if in0:
        if not ok or hi < 0.0:
            return True, 0.0, 0.0
        return True, 0.0, hi
    if in1:
        if not ok or lo > 1.0:
            return True, 1.0, 1.0
        return True, lo, 1.0
    return ok, lo, hi


@njit(cache=True)
def dfd_value(P, Q, code):
    """Discrete Frechet distance by the min-max DP, one rolling row."""
    n = P.shape[0]
    m = Q.shape[0]
    if m > n:
        P, Q = Q, P
        n, m = m, n
    row = np.empty(m, np.float64)
    row[0] = _dist(P[0], Q[0], code)
    for j in range(1, m):
        d = _dist(P[0], Q[j], code)
        row[j] = row[j - 1] if row[j - 1] > d else d
    for i in range(1, n):
        diag = row[0]
        d = _dist(P[i], Q[0], code)
        row[0] = row[0] if row[0] > d else d
        for j in range(1, m):
            best = row[j]
            if row[j - 1] < best:
                best = row[j - 1]
            if diag < best:
                best = diag
            d = _dist(P[i], Q[j], code)
            diag = row[j]
            row[j] = best if best > d else d
    return row[m - 1]


@njit(cache=True)
def dfd_decide(P, Q, delta, code):
    """Reachability propagation for d_dF(P, Q) <= delta."""
    n = P.shape[0]
    m = Q.shape[0]
    if m > n:
        P, Q = Q, P
        n, m = m, n
    row = np.zeros(m, np.uint8)
    row[0] = 1 if _dist(P[0], Q[0], code) <= delta else 0
    for j in range(1, m):
        row[j] = 1 if row[j - 1] == 1 and _dist(P[0], Q[j], code) <= delta else 0
    for i in range(1, n):
        diag = row[0]
        row[0] = 1 if row[0] == 1 and _dist(P[i], Q[0], code) <= delta else 0
        for j in range(1, m):
            ok = row[j] == 1 or row[j - 1] == 1 or diag == 1
            diag = row[j]
            row[j] = 1 if ok and _dist(P[i], Q[j], code) <= delta else 0
    return row[m - 1] == 1


@njit(cache=True)
def dfd_brute(P, Q, code):
    """Exhaustive DFS over all monotone matchings (independent test oracle)."""
    n = P.shape[0]
    m = Q.shape[0]
    cap = 3 * (n + m) + 8
    si = np.empty(cap, np.int64)
    sj = np.empty(cap, np.int64)
    sv = np.empty(cap, np.float64)
    top = 0
    si[top] = 0
    sj[top] = 0
    sv[top] = _dist(P[0], Q[0], code)
    top += 1
    best = np.inf
    while top > 0:
        top -= 1
        i = si[top]
        j = sj[top]
        v = sv[top]
        if i == n - 1 and j == m - 1:
            if v < best:
                best = v
            continue
        if i + 1 < n:
            d = _dist(P[i + 1], Q[j], code)
            si[top] = i + 1
            sj[top] = j
            sv[top] = v if v > d else d
            top += 1
        if j + 1 < m:
            d = _dist(P[i], Q[j + 1], code)
            si[top] = i
            sj[top] = j + 1
            sv[top] = v if v > d else d
            top += 1
        if i + 1 < n and j + 1 < m:
            d = _dist(P[i + 1], Q[j + 1], code)
            si[top] = i + 1
            sj[top] = j + 1
            sv[top] = v if v > d else d
            top += 1
    return best


@njit(cache=True)
def continuous_decide(P, Q, delta, code):
    """Free-space reachability decision for the continuous distance."""
    n = P.shape[0]
    m = Q.shape[0]
    if _dist(P[0], Q[0], code) > delta:
        return False
    if _dist(P[n - 1], Q[m - 1], code) > delta:
        return False
    if n == 1:
        for j in range(m):
            if _dist(P[0], Q[j], code) > delta:
                return False
        return True
    if m == 1:
        for i in range(n):
            if _dist(P[i], Q[0], code) > delta:
                return False
        return True
    ne = n - 1
    me = m - 1
    # reachable intervals on the bottom boundary of the current row,
    # expressed as local parameters of each P-edge
    blo = np.full(ne, np.inf)
    bhi = np.full(ne, -np.inf)
    connected = True
    for i in range(ne):
        ok, lo, hi = ball_segment_interval(Q[0], P[i], P[i + 1], delta, code)
        if connected and ok and lo == 0.0:
            blo[i] = 0.0
            bhi[i] = hi
            if hi < 1.0:
                connected = False
        else:
            connected = False
    lconn = True
    top_ok = False
    right_ok = False
    for j in range(me):
        ok, lo, hi = ball_segment_interval(P[0], Q[j], Q[j + 1], delta, code)
        if lconn and ok and lo == 0.0:
            vlo = 0.0
            vhi = hi
            if hi < 1.0:
                lconn = False
        else:
            vlo = np.inf
            vhi = -np.inf
            lconn = False
        for i in range(ne):
            has_b = blo[i] <= bhi[i]
            has_l = vlo <= vhi
            # right boundary of cell (i, j): P-vertex i+1 across Q-edge j
            okr, flo, fhi = ball_segment_interval(
                P[i + 1], Q[j], Q[j + 1], delta, code
            )
            nvlo = np.inf
            nvhi = -np.inf
            if okr and (has_b or has_l):
                rlo = flo if has_b else (flo if flo > vlo else vlo)
                if rlo <= fhi:
                    nvlo = rlo
                    nvhi = fhi
            # top boundary of cell (i, j): Q-vertex j+1 across P-edge i
            okt, glo, ghi = ball_segment_interval(
                Q[j + 1], P[i], P[i + 1], delta, code
            )
            if okt and (has_b or has_l):
                tlo = glo if has_l else (glo if glo > blo[i] else blo[i])
                if tlo <= ghi:
                    blo[i] = tlo
                    bhi[i] = ghi
                else:
                    blo[i] = np.inf
                    bhi[i] = -np.inf
            else:
                blo[i] = np.inf
                bhi[i] = -np.inf
            vlo = nvlo
            vhi = nvhi
        if j == me - 1 and vlo <= vhi and vhi >= 1.0:
            right_ok = True
    if blo[ne - 1] <= bhi[ne - 1] and bhi[ne - 1] >= 1.0:
        top_ok = True
    return top_ok or right_ok


@njit(cache=True)
def greedy_blocks(vals, delta, centers, breaks):
    """Greedy maximal-block 1D simplification; returns the block count.

    centers/breaks must be preallocated with length >= n; breaks holds the
    1-based index of each block's last vertex.  The block test compares
    value differences against 2*delta so its decision points coincide
    exactly with the half-pairwise-difference candidate set under floats.
    """
    n = vals.shape[0]
    two = 2.0 * delta
    ell = 0
    a = vals[0]
    b = vals[0]
    for i in range(n):
        v = vals[i]
        if v - a <= two and b - v <= two:
            if v < a:
                a = v
            if v > b:
                b = v
        else:
            centers[ell] = 0.5 * (a + b)
            breaks[ell] = i
            ell += 1
            a = v
            b = v
    centers[ell] = 0.5 * (a + b)
    breaks[ell] = n
    return ell + 1


@njit(cache=True)
def greedy_block_count(vals, delta):
    """Block count of the greedy simplification without storing blocks."""
    n = vals.shape[0]
    two = 2.0 * delta
    ell = 1
    a = vals[0]
    b = vals[0]
    for i in range(n):
        v = vals[i]
        if v - a <= two and b - v <= two:
            if v < a:
                a = v
            if v > b:
                b = v
        else:
            ell += 1
            a = v
            b = v
    return ell


@njit(cache=True)
def smallest_diff_above(s, x):
    """Smallest floating-point pairwise difference of the ascending array s
    strictly greater than x.  The predicate is evaluated on the rounded
    difference itself, so the result is always an exactly attainable value."""
    n = s.shape[0]
    best = np.inf
    for j in range(1, n):
        sj = s[j]
        if not (sj - s[0] > x):
            continue
        # fl(sj - s[i]) is nonincreasing in i: find the last i with diff > x
        lo = 0
        hi = j - 1
        while lo < hi:
            mid = (lo + hi + 1) // 2
            if sj - s[mid] > x:
                lo = mid
            else:
                hi = mid - 1
        d = sj - s[lo]
        if d < best:
            best = d
    return best


@njit(cache=True)
def min_complexity_restricted(vals, delta, grid):
    """Minimum vertex count of a curve over `grid` values within discrete
    distance delta of the 1D curve `vals` (exhaustive DP test oracle)."""
    n = vals.shape[0]
    g = grid.shape[0]
    big = _INT_INF
    f = np.full(g, big, np.int64)
    for t in range(g):
        if abs(vals[0] - grid[t]) <= delta:
            f[t] = 1
    for i in range(1, n):
        best_prev = big
        for t in range(g):
            if f[t] < best_prev:
                best_prev = f[t]
        fn = np.full(g, big, np.int64)
        for t in range(g):
            if abs(vals[i] - grid[t]) <= delta:
                stay = f[t]
                new = best_prev + 1 if best_prev < big else big
                fn[t] = stay if stay < new else new
        f = fn
    best = big
    for t in range(g):
        if f[t] < best:
            best = f[t]
    return best


@njit(cache=True)
def greedy_optimality_scan(n_max, nvals):
    """Compare the greedy block count against the exhaustive restricted DP
    for every 1D curve with up to n_max vertices over the integer alphabet
    {0..nvals-1} and every half-integer tolerance.  Returns (checked,
    violations) where a violation is a curve/tolerance with a shorter
    simplification than the greedy one."""
    checked = 0
    viol = 0
    vals = np.empty(n_max, np.float64)
    grid = np.empty(2 * (nvals - 1) + 1, np.float64)
    for k in range(grid.shape[0]):
        grid[k] = 0.5 * k
    for n in range(1, n_max + 1):
        total = 1
        for _ in range(n):
            total *= nvals
        for idx in range(total):
            c = idx
            for i in range(n):
                vals[i] = float(c % nvals)
                c //= nvals
            for k in range(nvals):
                delta = 0.5 * k
                ell = greedy_block_count(vals[:n], delta)
                opt = min_complexity_restricted(vals[:n], delta, grid)
                checked += 1
                if opt < ell:
                    viol += 1
    return checked, viol


@njit(cache=True)
def scan_compressed(centers, counts, signs, half, q, T):
    """Run-compressed reachability scan: decide d_dF(P', Q) <= T.

    P' is the expansion of (centers, counts, signs) with vertex offsets
    +-half around each center.  Per column the run's vertices are either
    all inside the T-ball of Q(j), alternately inside, or all outside;
    the scan tracks the reachable run offsets through a progression start
    `a`, boundary-entry markers A with shift counter u, and the reachable
    run-boundary sets F_pre/F_new.
    """
    ell = centers.shape[0]
    mq = q.shape[0]
    fpre = np.zeros(mq + 1, np.uint8)
    fnew = np.zeros(mq + 1, np.uint8)
    fnew[0] = 1
    A = np.empty(mq + 2, np.int64)
    for i in range(ell):
        p = centers[i]
        k = counts[i]
        z = signs[i]
        for t in range(mq + 1):
            fpre[t] = fnew[t]
            fnew[t] = 0
        head = 0
        tail = 0
        a = _INT_INF
        u = np.int64(0)
        prev_alt = False
        prev_par = 0
        vhi = p + half
        vlo = p - half
        for j in range(1, mq + 1):
            qa = q[j - 1]
            fh = abs(qa - vhi) <= T
            fl = abs(qa - vlo) <= T
            if not fh and not fl:
                head = tail
                a = _INT_INF
                u = 0
                prev_alt = False
                continue
            if fh != fl:
                # alternating column: exactly one offset parity is free
                if fh:
                    par = 0 if z > 0 else 1
                else:
                    par = 0 if z < 0 else 1
                if prev_alt and prev_par != par:
                    # side change: reachable offsets shift up by one
                    if a < _INT_INF:
                        a += 1
                    u += 1
                if a < _INT_INF and (a & 1) != par:
                    # progression start must sit on the free parity
                    a += 1
                prev_alt = True
                prev_par = par
            else:
                prev_alt = False
            first_free = fh if z > 0 else fl
            if first_free and (fpre[j] == 1 or fpre[j - 1] == 1):
                A[tail] = u
                tail += 1
            if fh and fl:
                # all offsets free: reachable offsets become an up-set
                if tail > head:
                    cand = u - A[tail - 1]
                    if cand < a:
                        a = cand
                head = tail
                u = 0
            while tail > head and A[head] <= u - k:
                head += 1
            if (k & 1) == 1:
                last_free = fh if z > 0 else fl
            else:
                last_free = fl if z > 0 else fh
            if last_free and (a < k or (tail > head and A[head] == u - k + 1)):
                fnew[j] = 1
    return fnew[mq] == 1


@njit(cache=True)
def compress_runs(vals, centers, breaks, half, counts, signs):
    """Snap each vertex to its block center +- half (ties to +), merge
    consecutive equal values, and count survivors per block."""
    ell = centers.shape[0]
    start = 0
    for b in range(ell):
        end = breaks[b]
        p = centers[b]
        cnt = 0
        prev = 0.0
        sgn = np.int64(1)
        for x in range(start, end):
            r = p - half if vals[x] < p else p + half
            if cnt == 0:
                sgn = np.int64(-1) if vals[x] < p else np.int64(1)
                prev = r
                cnt = 1
            elif r != prev:
                prev = r
                cnt += 1
        counts[b] = cnt
        signs[b] = sgn
        start = end


@njit(cache=True)
def expand_runs(centers, counts, signs, half):
    """Explicit vertex values of the run-compressed curve."""
    total = 0
    for i in range(counts.shape[0]):
        total += counts[i]
    out = np.empty(total, np.float64)
    pos = 0
    for i in range(centers.shape[0]):
        p = centers[i]
        z = signs[i]
        vhi = p + half
        vlo = p - half
        for x in range(counts[i]):
            if x % 2 == 0:
                out[pos] = vhi if z > 0 else vlo
            else:
                out[pos] = vlo if z > 0 else vhi
            pos += 1
    return out


# ---------------------------------------------------------------------------
# query-dependent simplification kernels


@njit(cache=True)
def scan_next_anchor(P, Q, delta, code, ppoint, e_start):
    """Earliest Q parameter s >= e_start with dist(ppoint, Q(s)) <= delta.

    Returns (found, e, tau): s = e + tau with 1 <= e <= m-1, or e == m with
    tau == 0 for the final vertex.
    """
    m = Q.shape[0]
    for e in range(e_start, m):
        ok, lo, hi = ball_segment_interval(ppoint, Q[e - 1], Q[e], delta, code)
        if ok:
            return True, e, lo
    if e_start == m:
        if _dist(ppoint, Q[m - 1], code) <= delta:
            return True, m, 0.0
    return False, 0, 0.0


@njit(cache=True)
def _lp_max_alpha(G, nrows, entry_a, entry_t):
    """Max alpha over a 2D polytope {g_a*alpha + g_t*tau <= rhs}.

    Vertex enumeration with a small relative feasibility slack; returns
    (alpha, tau) of the best vertex, falling back to the entry point.
    """
    best_a = entry_a
    best_t = entry_t
    for r1 in range(nrows):
        a1 = G[r1, 0]
        t1 = G[r1, 1]
        c1 = G[r1, 2]
        for r2 in range(r1 + 1, nrows):
            a2 = G[r2, 0]
            t2 = G[r2, 1]
            c2 = G[r2, 2]
            det = a1 * t2 - a2 * t1
            if det == 0.0:
                continue
            x = (c1 * t2 - c2 * t1) / det
            y = (a1 * c2 - a2 * c1) / det
            if not (np.isfinite(x) and np.isfinite(y)):
                continue
            feas = True
            for rr in range(nrows):
                slack = 1e-9 * (1.0 + abs(G[rr, 2]))
                if G[rr, 0] * x + G[rr, 1] * y > G[rr, 2] + slack:
                    feas = False
                    break
            if feas and x > best_a:
                best_a = x
                best_t = y
    return best_a, best_t


@njit(cache=True)
def _cell_max_alpha(PA, PB, QA, QB, tlo, thi, delta, code, a_entry):
    """Supremum alpha in [a_entry, 1] with some tau in [tlo, thi] such that
    dist(PA + alpha*(PB-PA), QA + tau*(QB-QA)) <= delta.

    Closed forms: quadratic case analysis for L2, a small vertex-enumerated
    linear program for L1/Linf.  Returns (alpha, tau witness)."""
    d = PA.shape[0]
    if code == 2:
        best_a = a_entry
        best_t = tlo
        # slice tau = tlo
        qpt = np.empty(d, np.float64)
        for c in range(d):
            qpt[c] = QA[c] + tlo * (QB[c] - QA[c])
        ok, alo, ahi = ball_segment_interval(qpt, PA, PB, delta, code)
        if ok and ahi > best_a:
            best_a = ahi
            best_t = tlo
        # slice tau = thi
        if thi > tlo:
            for c in range(d):
                qpt[c] = QA[c] + thi * (QB[c] - QA[c])
            ok, alo, ahi = ball_segment_interval(qpt, PA, PB, delta, code)
            if ok and ahi > best_a:
                best_a = ahi
                best_t = thi
        # interior optimum of the ellipse slice
        vv = 0.0
        uu = 0.0
        uv = 0.0
        wv = 0.0
        wu = 0.0
        ww = 0.0
        for c in range(d):
            u = PB[c] - PA[c]
            v = QB[c] - QA[c]
            w = PA[c] - QA[c]
            vv += v * v
            uu += u * u
            uv += u * v
            wv += w * v
            wu += w * u
            ww += w * w
        if vv > 0.0:
            A = uu - uv * uv / vv
            B = 2.0 * (wu - wv * uv / vv)
            C = ww - wv * wv / vv - delta * delta
            cand = -np.inf
            if A > 0.0:
                disc = B * B - 4.0 * A * C
                if disc >= 0.0:
                    cand = (-B + np.sqrt(disc)) / (2.0 * A)
            else:
                if B < 0.0:
                    cand = np.inf
                elif B > 0.0:
                    cand = -C / B
                elif C <= 0.0:
                    cand = np.inf
            if cand > best_a:
                if cand > 1.0:
                    cand = 1.0
                tw = (wv + cand * uv) / vv
                if tlo < tw < thi and cand > best_a:
                    best_a = cand
                    best_t = tw
        if best_a > 1.0:
            best_a = 1.0
        return best_a, best_t
    # L1 / Linf: assemble half-plane rows g_a*alpha + g_t*tau <= rhs
    if code == 0:
        nrows = 2 * d + 4
        G = np.empty((nrows, 3), np.float64)
        r = 0
        for c in range(d):
            u = PB[c] - PA[c]
            v = QB[c] - QA[c]
            w = PA[c] - QA[c]
            G[r, 0] = u
            G[r, 1] = -v
            G[r, 2] = delta - w
            r += 1
            G[r, 0] = -u
            G[r, 1] = v
            G[r, 2] = delta + w
            r += 1
    else:
        npat = 1 << d
        nrows = npat + 4
        G = np.empty((nrows, 3), np.float64)
        r = 0
        for pat in range(npat):
            ga = 0.0
            gt = 0.0
            gw = 0.0
            for c in range(d):
                sgn = 1.0 if (pat >> c) & 1 == 0 else -1.0
                ga += sgn * (PB[c] - PA[c])
                gt -= sgn * (QB[c] - QA[c])
                gw += sgn * (PA[c] - QA[c])
            G[r, 0] = ga
            G[r, 1] = gt
            G[r, 2] = delta - gw
            r += 1
    G[r, 0] = 0.0
    G[r, 1] = -1.0
    G[r, 2] = -tlo
    r += 1
    G[r, 0] = 0.0
    G[r, 1] = 1.0
    G[r, 2] = thi
    r += 1
    G[r, 0] = 1.0
    G[r, 1] = 0.0
    G[r, 2] = 1.0
    r += 1
    G[r, 0] = -1.0
    G[r, 1] = 0.0
    G[r, 2] = 0.0
    r += 1
    best_a, best_t = _lp_max_alpha(G, r, a_entry, tlo)
    if best_a > 1.0:
        best_a = 1.0
    return best_a, best_t


@njit(cache=True)
def extend_continuous(P, Q, delta, code, a_param, e, tau_s):
    """Longest prefix extension of P against the Q sub-edge starting at e+tau_s.

    Walks P's edges from parameter a_param propagating the reachable tau
    interval; returns (finished, a_next, t_local) where t_local is the
    chosen segment parameter of the matched sub-edge end.
    """
    n = P.shape[0]
    m = Q.shape[0]
    qa = Q[e - 1]
    if e < m:
        qb = Q[e]
        thi = 1.0
    else:
        qb = Q[e - 1]
        thi = tau_s
    min_r = tau_s
    if a_param >= n:
        # P already exhausted: pick the deepest reachable parameter
        ok, lo, hi = ball_segment_interval(P[n - 1], qa, qb, delta, code)
        t = tau_s
        if ok:
            t = hi if hi < thi else thi
            if t < min_r:
                t = min_r
        return True, float(n), t
    k = int(np.floor(a_param))
    if k >= n:
        k = n - 1
    alpha0 = a_param - k
    while True:
        PAv = P[k - 1]
        PBv = P[k]
        ok, flo, fhi = ball_segment_interval(PBv, qa, qb, delta, code)
        if ok:
            lo = flo if flo > min_r else min_r
            hi = fhi if fhi < thi else thi
            if lo <= hi:
                min_r = lo
                if k + 1 == n:
                    return True, float(n), hi
                k += 1
                alpha0 = 0.0
                continue
        amax, tw = _cell_max_alpha(PAv, PBv, qa, qb, min_r, thi, delta, code, alpha0)
        ppt = np.empty(P.shape[1], np.float64)
        for c in range(P.shape[1]):
            ppt[c] = PAv[c] + amax * (PBv[c] - PAv[c])
        ok2, l2, h2 = ball_segment_interval(ppt, qa, qb, delta, code)
        t_local = tw
        if ok2:
            hh = h2 if h2 < thi else thi
            ll = l2 if l2 > min_r else min_r
            if ll <= hh:
                t_local = hh
        return False, k + amax, t_local


@njit(cache=True)
def eval_param(P, t):
    """Point of P at 1-based parameter t (no bounds checks)."""
    n = P.shape[0]
    i = int(np.floor(t))
    if i >= n:
        i = n - 1
    a = t - i
    out = np.empty(P.shape[1], np.float64)
    for c in range(P.shape[1]):
        out[c] = (1.0 - a) * P[i - 1][c] + a * P[i][c]
    return out
