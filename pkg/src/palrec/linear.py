"""Linear-time engine using word-parallel predictions.

An append is *predictable* when it keeps the center of the longest
suffix-palindrome (``maxPal``).  For predictable appends the future of every
current suffix-palindrome is known by symmetry, so ``res[n..n+f]`` is filled
in advance (the *prediction*, ``f <= beta``).  Predictable calls then only
account for the two new suffix-palindromes (one letter and empty) with a
couple of word operations.  Any other call recomputes the prediction by
walking the leading suffix-palindromes; series of non-leading ones are
handled through ``z`` in O(1) each:

    z[i] = m[i] | m[i + p] | ... | m[i + l*p],   l = (n - i) // p

for the positions ``i`` of the period block ``z[j_t..j_t + p - 1]`` of every
long cubic series, where ``t`` is the longest suffix with period ``p``.

``m`` and ``z`` are read as backward windows, ``res`` as a forward window
extended ``beta`` bits past ``n``.
"""

from array import array
from dataclasses import dataclass

from .bitblocks import FULL, BitArray
from .engine import Engine
from .errors import ContractError


@dataclass
class SeriesGeometry:
    """Layout of a long cubic series ``w = (uv)^e u`` with period ``p``."""

    p: int
    w_len: int
    u_len: int
    t_len: int
    j_t: int
    j_t2: int  # j_t + p - 1
    j_w: int
    r0: int
    r1: int
    q: int


def replicate(params, pattern, p):
    """Copy a ``p``-bit pattern at stride ``p`` across the word with one multiplication.

    For ``p = beta + 1`` the pattern already fills the word.
    """
    if p <= params.beta:
        return pattern * params.g[p]
    return pattern


class LinearEngine(Engine):
    kind = "linear"

    def __init__(self, m0=1, params=FULL, debug=False):
        super().__init__(m0)
        self.params = params
        self.beta = beta = params.beta
        width = beta + 1
        self.m = BitArray(1, width)
        self.m.set(0, 1 if m0 else 0)
        self.z = BitArray(1, width)
        self.z_period = array("i", [0])
        self.z_upto = array("i", [0])
        self.res = BitArray(1 + width, width)
        self.f = 0
        self.n0 = 0
        self.debug = debug
        self.z_violations = []
        self.predictable = 0
        self.recalcs = 0
        self.predictable_recalcs = 0
        self.loop_iters = 0
        self.max_loop = 0
        self.series_z = 0
        self.series_short = 0
        self.z_words = 0
        self.z_rebuilds = 0
        self.work = 0

    # -- small helpers -------------------------------------------------

    def rad(self, x):
        it = self.it
        s = it.s
        if x <= s:
            return it.r[x]
        return min(it.r[2 * s - x], it.n - (x >> 1))

    def pal_len(self, x):
        return 2 * self.rad(x) + 1 - (x & 1)

    def pr(self, x):
        """Prediction horizon of suffix-palindrome center ``x``."""
        if not self.it.is_suffix_center(x):
            raise ContractError(f"center {x}/2 is not a suffix-palindrome center")
        return self._pr(x)

    def _pr(self, x):
        # x is a suffix center, so rad(x) = n - x // 2 and refl(x, s) < s
        it = self.it
        s = it.s
        f = self.f
        if x == s:
            return f
        p = it.r[2 * s - x] - it.n + (x >> 1)
        return p if p < f else f

    # -- append --------------------------------------------------------

    def append(self, a, b):
        it = self.it
        s_old = it.s
        it.append(a)
        n = self.n = it.n
        # grow m, z and res by one bit each; a new word every 64 letters
        m = self.m
        z = self.z
        res = self.res
        m.length = z.length = n + 1
        res.length += 1
        if not n & 63:
            m.words.append(0)
            z.words.append(0)
        if res.length > len(res.words) << 6:
            res.words.append(0)
        if b:
            m.words[n >> 6] |= 1 << (n & 63)
        self.z_period.append(0)
        self.z_upto.append(0)
        s = it.s
        f = self.f
        if s == s_old and f > 0:
            self.predictable += 1
            f = self.f = f - 1
            # one-letter suffix 2n and empty suffix 2n + 1, both right of s
            r = it.r
            p1 = r[2 * s - 2 * n]
            p2 = r[2 * s - 2 * n - 1]
            x = m.peek_backward(n - 1 - (p1 if p1 < f else f), n - 1)
            if p2:
                x |= m.peek_backward(n - (p2 if p2 < f else f), n - 1) << 1
            if x:
                res._deposit(n, f + 1, x, True)
            self.work += 1
        else:
            if s == s_old:
                self.predictable += 1
                self.predictable_recalcs += 1
            cap = n - (2 * it.r[s] + 1 - (s & 1))
            self.f = self.beta if self.beta < cap else cap
            self.recalc_prediction()
        return (res.words[n >> 6] >> (n & 63)) & 1

    def extend(self, letters, bits):
        return [self.append(a, b) for a, b in zip(letters, bits)]

    # -- prediction recalculation --------------------------------------

    def recalc_prediction(self):
        self.recalcs += 1
        it = self.it
        n = it.n
        s = it.s
        f = self.f
        beta = self.beta
        m = self.m
        peek = m.peek_backward
        r = it.r
        nxt = it.nxt
        res = self.res
        res._deposit(n, beta + 1, 0, False)
        two_s = 2 * s
        acc = 0
        end = 2 * n + 1
        x = s
        # the longest suffix-palindrome: pr = f
        L = 2 * r[s] + 1 - (s & 1)
        pr_x = f
        steps = 0
        while x != end:
            steps += 1
            y = nxt[x]
            if y == end:
                Ly = 0
                pr_y = r[two_s - y] if y != s else f
            else:
                ry = n - (y >> 1)
                Ly = 2 * ry + 1 - (y & 1)
                pr_y = r[two_s - y] - ry
            p = L - Ly
            d = L - p
            e = p + L % p
            if e < d:
                d = e
            j = n - L
            acc |= peek(j - pr_x, j)
            if 3 * p <= L:
                if x == s or L > 2 * beta:
                    acc |= self.series_contribution(self.series_geometry(x, L, p))
                    self.series_z += 1
                else:
                    # short series: one window per non-leading member
                    stop = 2 * n - d + 1
                    c = y
                    while c != stop:
                        rc = n - (c >> 1)
                        jc = n - 2 * rc - 1 + (c & 1)
                        pc = r[two_s - c] - rc
                        acc |= peek(jc - (pc if pc < f else f), jc)
                        c = nxt[c]
                        self.work += 1
                    self.series_short += 1
            x = 2 * n - d + 1
            if x == y:
                L = Ly
                pr_x = pr_y if pr_y < f else f
            elif x != end:
                rx = n - (x >> 1)
                L = 2 * rx + 1 - (x & 1)
                pr_x = r[two_s - x] - rx
                if pr_x > f:
                    pr_x = f
        pe = r[two_s - end]
        if pe > f:
            pe = f
        if pe:
            acc |= peek(n - pe, n - 1) << 1
        if acc:
            res._deposit(n, f + 1, acc, True)
        self.n0 = n
        self.loop_iters += steps
        self.work += steps + 1
        if steps > self.max_loop:
            self.max_loop = steps

    def series_geometry(self, x, L, p):
        n = self.it.n
        s = self.it.s
        f = self.f
        beta = self.beta
        u_len = L % p
        ck = 2 * n - u_len + 1
        rad_ck = u_len >> 1
        t_len = L + self.rad(2 * x - ck) - rad_ck
        q = self.rad(2 * s - ck) - rad_ck
        if q > f:
            q = f
        j_t = n - t_len
        j_t2 = j_t + p - 1
        j_w = n - L
        r0 = min(beta, j_w - j_t) + 1
        r1 = min(beta + 1 - r0, j_t2 - j_w)
        return SeriesGeometry(p, L, u_len, t_len, j_t, j_t2, j_w, r0, r1, q)

    def series_contribution(self, g):
        """Prediction bits for a long cubic series, as a word aligned at ``res[n]``."""
        self.recalc_z(g)
        z = self.z
        width = self.beta + 1
        if g.p > width:
            word = z.read_backward(g.j_w - g.r0 + 1, g.j_w)
            if g.r1 > 0:
                word |= z.read_backward(g.j_t2 - g.r1 + 1, g.j_t2) << g.r0
        else:
            word = z.read_backward(g.j_t, g.j_w)
            if g.j_t2 > g.j_w:
                word |= z.read_backward(g.j_w + 1, g.j_t2) << g.r0
            word = replicate(self.params, word, g.p)
        word &= (1 << (g.q + 1)) - 1
        if g.q < self.f:
            # the one member that may outlive the break of the period
            n = self.it.n
            L2 = g.t_len - g.q
            if L2 >= g.u_len and (L2 - g.u_len) % g.p == 0:
                j = n - L2
                word |= self.m.read_backward(j - self._pr(2 * n - L2 + 1), j)
        return word

    def recalc_z(self, g):
        """Bring the z positions read for this series up to date at the current length.

        ``z_period[i]`` and ``z_upto[i]`` record which period ``z[i]`` was
        built for and the length of ``m`` it covers.  A segment whose
        positions all carry the right period is caught up by OR-ing in the
        terms that appeared since its oldest coverage; anything else is
        rebuilt from ``m``.
        """
        p = g.p
        if p > self.beta + 1:
            self._refresh_segment(g.j_w - g.r0 + 1, g.j_w, p)
            if g.r1 > 0:
                self._refresh_segment(g.j_t2 - g.r1 + 1, g.j_t2, p)
        else:
            self._refresh_segment(g.j_t, g.j_t2, p)
        if self.debug:
            self._check_z_block(g)

    def _refresh_segment(self, lo, hi, p):
        n = self.it.n
        m = self.m
        z = self.z
        span = hi - lo + 1
        per = self.z_period
        upto = self.z_upto
        if per[lo] == p and per[lo:hi + 1].count(p) == span:
            # z[i] depends only on i, p and n, so any older coverage can be
            # extended; terms already present are OR-ed in again harmlessly
            u = min(upto[lo:hi + 1])
            k = (u - hi + p - 1) // p if u > hi else 0
            word = 0
        else:
            k = 0
            word = None
        a = lo + k * p
        acc = 0
        while a < n:
            acc |= m.read_forward(a, min(a + span - 1, n - 1))
            a += p
            self.z_words += 1
        if word is None:
            z.write_forward(lo, hi, acc)
            self.z_rebuilds += 1
            per[lo:hi + 1] = array("i", [p]) * span
        elif acc:
            z.or_forward(lo, hi, acc)
        upto[lo:hi + 1] = array("i", [n]) * span

    def _check_z_block(self, g):
        n = self.it.n
        p = g.p
        if p > self.beta + 1:
            spans = [(g.j_w - g.r0 + 1, g.j_w)]
            if g.r1 > 0:
                spans.append((g.j_t2 - g.r1 + 1, g.j_t2))
        else:
            spans = [(g.j_t, g.j_t2)]
        for lo, hi in spans:
            for i in range(lo, hi + 1):
                want = 0
                k = i
                while k < n:
                    want |= self.m.get(k)
                    k += p
                if self.z.get(i) != want:
                    self.z_violations.append((n, i, p))

    # -- accessors -----------------------------------------------------

    def res_at(self, i):
        self._check_index(i)
        return self.res.get(i)

    def m_at(self, i):
        self._check_index(i)
        return self.m.get(i)

    def counters(self):
        c = super().counters()
        c.update(
            predictable=self.predictable,
            recalcs=self.recalcs,
            predictable_recalcs=self.predictable_recalcs,
            loop_iters=self.loop_iters,
            max_loop=self.max_loop,
            series_z=self.series_z,
            series_short=self.series_short,
            z_words=self.z_words,
            z_rebuilds=self.z_rebuilds,
            work=self.work,
        )
        return c
