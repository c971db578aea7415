"""Online palindromic iterator.

Centers are handled as doubled integers: the center of ``text[i..j]``
(1-based, inclusive) is ``i + j``.  Even values are letter positions
(odd-length palindromes), odd values sit between letters.  The center of the
empty suffix of a length-``n`` text is ``2n + 1``.

The structure keeps

* ``s``: center of the longest suffix-palindrome,
* ``r``: radius of the longest palindrome around every center ``<= s``,
* ``lend``: for each start position, the centers below ``s`` whose maximal
  palindrome begins right after it (stored as singly linked buckets),
* an intrusive doubly linked list of suffix-palindrome centers, read from
  ``s`` to ``2n + 1``.  Nodes below ``s`` are stale and never traversed.
"""

from array import array

from .errors import ContractError


def refl(x, y):
    """Position symmetric to ``x`` around ``y`` (works for doubled centers too)."""
    return y + (y - x)


def to_center(x):
    """Doubled integer for a center given as int/float (``8.5 -> 17``)."""
    d = round(2 * x)
    if d < 1 or abs(d - 2 * x) > 1e-9:
        raise ContractError(f"{x!r} is not a valid center")
    return d


def from_center(d):
    return d // 2 if d % 2 == 0 else d / 2


class PalIterator:
    """Text under appends with O(1) ``max_pal``, ``rad``, ``next_pal``, ``pal_len``."""

    def __init__(self):
        self.text = bytearray(b"\0")  # text[0] is a placeholder, letters are 1-based
        self.n = 0
        self.s = 1
        self.r = array("i", [0, 0])
        self.nxt = array("i", [0, 0])
        self.prv = array("i", [0, 0])
        self.tail = 1
        self.lend_head = array("i", [-1])
        self.lend_next = array("i", [-1, -1])
        self.manacher_iters = 0
        self.manacher_checks = 0
        self.unlinks = 0

    def __len__(self):
        return self.n

    def append(self, a):
        """Append letter ``a`` (an int in 0..255); amortized O(1)."""
        text = self.text
        r = self.r
        n = self.n
        s0 = self.s
        S = s0
        limit = 2 * n + 2
        lend_head = self.lend_head
        lend_next = self.lend_next
        checks = 0
        while S < limit:
            checks += 1
            R = r[2 * s0 - S]
            cap = n - (S >> 1)
            if cap < R:
                R = cap
            st = ((S + 1) >> 1) - R - 1
            if (S >> 1) + R == n and st and text[st] == a:
                r[S] = R + 1
                break
            r[S] = R
            lend_next[S] = lend_head[st]
            lend_head[st] = S
            S += 1
        # iterations that advance s (at most 2n overall) and all loop bodies
        self.manacher_iters += S - s0
        self.manacher_checks += checks
        text.append(a)
        n += 1
        self.n = n
        self.s = S
        r.append(0)
        r.append(0)
        lend_next.append(-1)
        lend_next.append(-1)
        lend_head.append(-1)
        nxt = self.nxt
        prv = self.prv
        # link the one-letter and the empty suffix-palindromes
        tail = self.tail
        nxt.append(2 * n + 1)
        nxt.append(0)
        prv.append(tail)
        prv.append(2 * n)
        nxt[tail] = 2 * n
        self.tail = 2 * n + 1
        # unlink centers whose palindrome stopped being a suffix
        x = lend_head[((S + 1) >> 1) - r[S]]
        unl = 0
        while x != -1:
            y = 2 * S - x
            p = prv[y]
            q = nxt[y]
            nxt[p] = q
            prv[q] = p
            unl += 1
            x = lend_next[x]
        self.unlinks += unl

    def extend(self, letters):
        for a in letters:
            self.append(a)

    def max_pal(self):
        if self.n == 0:
            raise ContractError("max_pal on empty text")
        return self.s

    def _check_center(self, x):
        if not 0 < x <= 2 * self.n + 1:
            raise ContractError(f"center {x}/2 outside (0, {self.n}.5]")

    def rad(self, x):
        """Radius of the longest palindrome centered at doubled center ``x``."""
        self._check_center(x)
        s = self.s
        if x <= s:
            return self.r[x]
        return min(self.r[2 * s - x], self.n - (x >> 1))

    def pal_len(self, x):
        """Length of the longest palindrome centered at ``x``."""
        return 2 * self.rad(x) + (1 - (x & 1))

    def is_suffix_center(self, x):
        self._check_center(x)
        return x >= self.s and (x >> 1) + self.rad(x) == self.n

    def next_pal(self, x):
        """Center of the longest proper suffix-palindrome of the one centered at ``x``."""
        if x == 2 * self.n + 1 or not self.is_suffix_center(x):
            raise ContractError(f"center {x}/2 is not a nonempty suffix-palindrome center")
        return self.nxt[x]

    def suffix_centers(self):
        """All suffix-palindrome centers, increasing, ending with the empty one."""
        out = [self.s]
        x = self.s
        end = 2 * self.n + 1
        nxt = self.nxt
        while x != end:
            x = nxt[x]
            out.append(x)
        return out


# functional aliases
def append_i(it, a):
    it.append(a)


def max_pal(it):
    return it.max_pal()


def rad(it, x):
    return it.rad(x)


def next_pal(it, x):
    return it.next_pal(x)


def pal_len(it, x):
    return it.pal_len(x)
