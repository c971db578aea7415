"""Palindromic engine contract and the quadratic reference engine.

An engine holds a text together with bit arrays ``m`` and ``res`` of length
``n + 1``.  ``append(a, b)`` adds letter ``a``, stores ``m[n] = b`` and
returns ``res[n]``, where ``res[i] = 1`` iff some ``j < i`` has ``m[j] = 1``
and ``text[j+1..i]`` is a nonempty palindrome.  ``m[0]`` is fixed when the
engine is built.  If ``m`` marks the prefixes that belong to a language
``L``, then ``res`` marks the prefixes in ``L·Pal``.
"""

from .errors import ContractError
from .iterator import PalIterator


class Engine:
    kind = "abstract"

    def __init__(self, m0=1):
        self.it = PalIterator()
        self.n = 0

    def append(self, a, b):
        raise NotImplementedError

    def extend(self, letters, bits):
        return [self.append(a, b) for a, b in zip(letters, bits)]

    def text_len(self):
        return self.n

    def _check_index(self, i):
        if not 0 <= i <= self.n:
            raise ContractError(f"index {i} outside 0..{self.n}")

    def res_at(self, i):
        raise NotImplementedError

    def m_at(self, i):
        raise NotImplementedError

    def counters(self):
        return {
            "manacher_iters": self.it.manacher_iters,
            "manacher_checks": self.it.manacher_checks,
            "unlinks": self.it.unlinks,
        }


class NaiveEngine(Engine):
    """Visits every nonempty suffix-palindrome on each append: O(n^2) overall."""

    kind = "naive"

    def __init__(self, m0=1):
        super().__init__(m0)
        self.m = bytearray([1 if m0 else 0])
        self.res = bytearray(1)
        self.loop_iters = 0

    def append(self, a, b):
        it = self.it
        it.append(a)
        n = self.n = it.n
        m = self.m
        m.append(1 if b else 0)
        nxt = it.nxt
        end = 2 * n + 1
        x = it.s
        out = 0
        steps = 0
        while x != end:
            steps += 1
            if not out and m[n - it.pal_len(x)]:
                out = 1
            x = nxt[x]
        self.loop_iters += steps
        self.res.append(out)
        return out

    def res_at(self, i):
        self._check_index(i)
        return self.res[i]

    def m_at(self, i):
        self._check_index(i)
        return self.m[i]

    def counters(self):
        c = super().counters()
        c["loop_iters"] = self.loop_iters
        return c


ENGINE_KINDS = ("naive", "nlogn", "linear")


def new_engine(m0=1, kind="linear", **options):
    """Build an empty engine of the given kind with ``m[0] = m0``."""
    if kind == "naive":
        return NaiveEngine(m0)
    if kind == "nlogn":
        from .nlogn import NLogNEngine

        return NLogNEngine(m0, **options)
    if kind == "linear":
        from .linear import LinearEngine

        return LinearEngine(m0, **options)
    raise ValueError(f"unknown engine kind {kind!r}; expected one of {ENGINE_KINDS}")
