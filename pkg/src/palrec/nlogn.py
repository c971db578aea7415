"""O(n log n) engine: walk leading suffix-palindromes only.

Non-leading suffix-palindromes come in series behind a cubic leading one.
``z[i]`` gathers the ``m`` bits of a whole series so that one read covers it:

    z[i] = m[i] | m[i + p_i] | ... | m[j_i - d_i - p_i]

where ``text[i+1..j_i]`` is the longest leading palindrome starting at
``i + 1``, ``p_i`` its minimal period and ``d_i`` the length of its longest
proper suffix-palindrome that is leading.
"""

import math

from .combinatorics import leading_lengths_from, min_period
from .engine import Engine
from .oracle import palindrome_starts_by_end


class NLogNEngine(Engine):
    kind = "nlogn"

    def __init__(self, m0=1, trace=False):
        super().__init__(m0)
        self.m = bytearray([1 if m0 else 0])
        self.z = bytearray(self.m)
        self.res = bytearray(1)
        self.loop_iters = 0
        self.max_loop = 0
        self.trace = trace
        self.last_steps = []
        self.z_violation = None

    def append(self, a, b):
        it = self.it
        it.append(a)
        n = self.n = it.n
        b = 1 if b else 0
        m = self.m
        z = self.z
        m.append(b)
        z.append(b)
        r = it.r
        nxt = it.nxt
        s = it.s
        end = 2 * n + 1
        x = s
        out = 0
        steps = 0
        trace = [] if self.trace else None
        while x != end:
            steps += 1
            # pal_len inlined: x may lie right of s, then reflect and clip
            rx = r[x] if x <= s else min(r[2 * s - x], n - (x >> 1))
            L = 2 * rx + 1 - (x & 1)
            y = nxt[x]
            ry = r[y] if y <= s else min(r[2 * s - y], n - (y >> 1))
            p = L - (2 * ry + 1 - (y & 1))
            d = min(p + L % p, L - p)
            j = n - L
            if 3 * p > L:
                z[j] = m[j]
            else:
                z[j] |= m[n - d - p]
            out |= z[j]
            if trace is not None:
                trace.append((p, d))
            x = 2 * n - d + 1
        self.loop_iters += steps
        if steps > self.max_loop:
            self.max_loop = steps
        if trace is not None:
            self.last_steps = trace
        self.res.append(out)
        return out

    def res_at(self, i):
        self._check_index(i)
        return self.res[i]

    def m_at(self, i):
        self._check_index(i)
        return self.m[i]

    def z_at(self, i):
        self._check_index(i)
        return self.z[i]

    def counters(self):
        c = super().counters()
        c["loop_iters"] = self.loop_iters
        c["max_loop"] = self.max_loop
        return c

    def debug_check_z(self):
        """Recompute every ``z[i]`` from scratch.

        Returns True iff all of them match; otherwise the first offending
        position is left in ``z_violation``.
        """
        w = bytes(self.it.text[1:])
        self.z_violation = first_z_violation(w, self.m, self.z)
        return self.z_violation is None


def leading_spans(w):
    """For each ``i`` return ``(j_i, p_i, d_i)`` computed from definitions."""
    n = len(w)
    ends = palindrome_starts_by_end(w)
    period_cache = {}

    def period(j, L):
        key = (j, L)
        if key not in period_cache:
            period_cache[key] = min_period(w[j - L:j])
        return period_cache[key]

    best = list(range(n + 1))  # j_i, empty palindrome by default
    lead_at_end = {0: [0]}
    for j in range(1, n + 1):
        lengths = sorted((j - st for st in ends[j]), reverse=True) + [0]
        periods = [period(j, L) if L else math.inf for L in lengths]
        leading = leading_lengths_from(lengths, periods)
        lead_at_end[j] = leading
        for L in leading:
            if j > best[j - L]:
                best[j - L] = j
    out = []
    for i in range(n + 1):
        j = best[i]
        L = j - i
        if L == 0:
            out.append((j, None, 0))
            continue
        p = period(j, L)
        d = max(x for x in lead_at_end[j] if x < L)
        out.append((j, p, d))
    return out


def first_z_violation(w, m, z):
    for i, (j, p, d) in enumerate(leading_spans(w)):
        if p is None:
            want = m[i]
        else:
            want = m[i]
            k = i + p
            while k <= j - d - p:
                want |= m[k]
                k += p
        if z[i] != want:
            return i
    return None
