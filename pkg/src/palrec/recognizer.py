"""Online recognizers for L·Pal and Pal^k built from palindromic engines.

Wrapping: for every letter, the inner recognizer is fed first and its
verdict for the new prefix becomes the ``m`` bit of the engine's append.
The engine's ``res`` bit is then the verdict for ``L·Pal``.
"""

from .engine import new_engine
from .errors import ContractError


def _letter(a):
    if isinstance(a, str):
        a = a.encode("latin-1")
    if isinstance(a, (bytes, bytearray)):
        if len(a) != 1:
            raise ContractError(f"expected a single letter, got {a!r}")
        return a[0]
    return a


class OnlineRecognizer:
    """Decides membership of each prefix right after its last letter arrives."""

    def feed(self, a):
        raise NotImplementedError

    def accepts_empty(self):
        raise NotImplementedError

    def feed_all(self, letters):
        return [self.feed(a) for a in letters]


class EmptyWordRecognizer(OnlineRecognizer):
    """The language {ε}: accepts only the empty prefix."""

    def feed(self, a):
        return 0

    def accepts_empty(self):
        return 1


class VerdictStub(OnlineRecognizer):
    """Replays a fixed verdict sequence; handy for testing wrappers."""

    def __init__(self, verdicts):
        self.verdicts = list(verdicts)
        self.pos = 0

    def feed(self, a):
        self.pos += 1
        return 1 if self.verdicts[self.pos] else 0

    def accepts_empty(self):
        return 1 if self.verdicts[0] else 0


class PalWrapped(OnlineRecognizer):
    def __init__(self, inner, engine_kind="linear", **options):
        self.inner = inner
        self.engine = new_engine(inner.accepts_empty(), engine_kind, **options)

    def feed(self, a):
        a = _letter(a)
        b = self.inner.feed(a)
        return self.engine.append(a, b)

    def accepts_empty(self):
        return 0


def lpal_wrap(inner, engine_kind="linear", **options):
    """Recognizer for ``L·Pal`` given an online recognizer for ``L``."""
    return PalWrapped(inner, engine_kind, **options)


class PalPowerRecognizer(OnlineRecognizer):
    """Accepts prefixes that split into exactly ``k`` nonempty palindromes.

    Engine 1 starts with ``m[0] = 1`` and is always fed ``b = 0``; engine
    ``j + 1`` starts with ``m[0] = 0`` and is fed engine ``j``'s verdict.
    """

    def __init__(self, k, engine="linear", **options):
        if not isinstance(k, int) or k < 1:
            raise ContractError(f"k must be a positive integer, got {k!r}")
        self.k = k
        self.engine_kind = engine
        self.engines = [new_engine(1 if j == 0 else 0, engine, **options) for j in range(k)]
        self.levels = [0] * k

    def feed(self, a):
        a = _letter(a)
        b = 0
        levels = self.levels
        for j, e in enumerate(self.engines):
            b = e.append(a, b)
            levels[j] = b
        return b

    def accepts_empty(self):
        return 0

    def level_verdicts(self):
        """Verdicts of the current prefix for Pal^1, ..., Pal^k."""
        return list(self.levels)

    def counters(self):
        total = {}
        for e in self.engines:
            for key, v in e.counters().items():
                total[key] = total.get(key, 0) + v
        return total


def recognize(w, k, engine="linear", **options):
    """Per-prefix Pal^k verdicts for ``w``, with the empty prefix first."""
    r = PalPowerRecognizer(k, engine, **options)
    if isinstance(w, str):
        w = w.encode("latin-1")
    return [0] + [r.feed(a) for a in w]
