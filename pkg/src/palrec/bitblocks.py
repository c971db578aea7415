"""Growable bit arrays with windowed word access.

A window covers at most ``beta + 1`` consecutive positions, which is the
width of a machine word in the word-RAM model the engines are written for.
Storage is a list of 64-bit words, so any window touches at most two of them.
Forward windows put ``a[i0]`` in bit 0; backward windows put ``a[i1]`` in
bit 0.  Positions outside ``[0, length - 1]`` read as zero.
"""

from .errors import ContractError

WORD = 64
_WMASK = (1 << WORD) - 1

_REV16 = [0] * 65536
for _i in range(1, 65536):
    _REV16[_i] = (_REV16[_i >> 1] >> 1) | ((_i & 1) << 15)
del _i


def reverse_bits(x, width):
    """Reverse the low ``width`` bits of ``x`` (``x`` must fit in ``width`` bits)."""
    if width <= 16:
        return _REV16[x] >> (16 - width)
    r = 0
    k = 0
    while k < width:
        r = (r << 16) | _REV16[x & 0xFFFF]
        x >>= 16
        k += 16
    return r >> (k - width)


class WordParams:
    """Word width ``beta + 1`` plus the replication masks ``g[1..beta]``.

    ``g[i]`` has ones at every bit position that is a multiple of ``i`` and
    at most ``beta``; multiplying a pattern of fewer than ``i`` bits by it
    copies the pattern at stride ``i`` across the word.
    """

    def __init__(self, beta=WORD - 1):
        if not 1 <= beta < WORD:
            raise ContractError(f"beta must be in 1..{WORD - 1}, got {beta}")
        self.beta = beta
        self.width = beta + 1
        self.g = [0] * (beta + 1)
        for i in range(1, beta + 1):
            mask = 0
            for j in range(beta // i + 1):
                mask |= 1 << (i * j)
            self.g[i] = mask

    def mask_g(self, i):
        if not 1 <= i <= self.beta:
            raise ContractError(f"g index {i} outside 1..{self.beta}")
        return self.g[i]

    def __repr__(self):
        return f"WordParams(beta={self.beta})"


TOY = WordParams(7)
FULL = WordParams(WORD - 1)


class BitArray:
    """Bit array that only grows at the high end."""

    __slots__ = ("words", "length", "maxwidth")

    def __init__(self, length=0, maxwidth=WORD):
        if not 1 <= maxwidth <= WORD:
            raise ContractError(f"window width must be in 1..{WORD}")
        self.words = [0] * ((length + WORD - 1) // WORD)
        self.length = length
        self.maxwidth = maxwidth

    def __len__(self):
        return self.length

    def grow(self, count=1):
        """Append ``count`` zero bits."""
        self.length += count
        need = (self.length + WORD - 1) // WORD
        words = self.words
        if need > len(words):
            words.extend([0] * (need - len(words)))

    def get(self, i):
        if i < 0 or i >= self.length:
            return 0
        return (self.words[i >> 6] >> (i & 63)) & 1

    def set(self, i, bit):
        if i < 0 or i >= self.length:
            raise ContractError(f"position {i} outside bit array of length {self.length}")
        q = i >> 6
        if bit:
            self.words[q] |= 1 << (i & 63)
        else:
            self.words[q] &= ~(1 << (i & 63))

    def __getitem__(self, i):
        return self.get(i)

    def __setitem__(self, i, bit):
        self.set(i, bit)

    def tolist(self):
        return [self.get(i) for i in range(self.length)]

    def _check(self, i0, i1):
        if not 0 <= i1 - i0 < self.maxwidth:
            raise ContractError(f"window [{i0}..{i1}] wider than {self.maxwidth} bits or reversed")

    def _extract(self, lo, w):
        # lo >= 0; bits past the stored words are zero
        words = self.words
        q = lo >> 6
        if q >= len(words):
            return 0
        r = lo & 63
        x = words[q] >> r
        if r + w > WORD and q + 1 < len(words):
            x |= words[q + 1] << (WORD - r)
        return x & ((1 << w) - 1)

    def _deposit(self, lo, w, x, keep):
        # write the w low bits of x at lo; keep=True ORs, keep=False assigns
        words = self.words
        q = lo >> 6
        r = lo & 63
        mask = (1 << w) - 1
        x &= mask
        if keep:
            words[q] |= (x << r) & _WMASK
            if r + w > WORD:
                words[q + 1] |= x >> (WORD - r)
        else:
            words[q] = (words[q] & ~((mask << r) & _WMASK)) | ((x << r) & _WMASK)
            if r + w > WORD:
                words[q + 1] = (words[q + 1] & ~(mask >> (WORD - r))) | (x >> (WORD - r))

    def read_forward(self, i0, i1):
        """Bit j of the result is a[i0 + j] for i0 + j in [0, min(length - 1, i1)]."""
        self._check(i0, i1)
        if i1 < 0:
            return 0
        if i0 < 0:
            return self._extract(0, i1 + 1) << -i0
        return self._extract(i0, i1 - i0 + 1)

    def read_backward(self, i0, i1):
        """Bit j of the result is a[i1 - j] for i1 - j in [max(0, i0), length - 1]."""
        self._check(i0, i1)
        if i1 < 0:
            return 0
        w = i1 - i0 + 1
        if i0 < 0:
            return reverse_bits(self._extract(0, i1 + 1), i1 + 1)
        return reverse_bits(self._extract(i0, w), w)

    def peek_backward(self, i0, i1):
        """``read_backward`` without the window checks, for callers that guarantee them."""
        if i1 < 0:
            return 0
        if i0 < 0:
            i0 = 0
        w = i1 - i0 + 1
        words = self.words
        q = i0 >> 6
        if q >= len(words):
            return 0
        r = i0 & 63
        x = words[q] >> r
        if r + w > WORD and q + 1 < len(words):
            x |= words[q + 1] << (WORD - r)
        x &= (1 << w) - 1
        if w <= 16:
            return _REV16[x] >> (16 - w)
        return reverse_bits(x, w)

    def _check_write(self, i0, i1):
        self._check(i0, i1)
        if i0 < 0 or i1 >= self.length:
            raise ContractError(f"window [{i0}..{i1}] outside bit array of length {self.length}")

    def write_forward(self, i0, i1, x):
        self._check_write(i0, i1)
        self._deposit(i0, i1 - i0 + 1, x, False)

    def or_forward(self, i0, i1, x):
        """a[i0 + j] |= bit j of x, for j in 0..i1 - i0."""
        self._check_write(i0, i1)
        self._deposit(i0, i1 - i0 + 1, x, True)

    def write_backward(self, i0, i1, x):
        self._check_write(i0, i1)
        w = i1 - i0 + 1
        self._deposit(i0, w, reverse_bits(x & ((1 << w) - 1), w), False)

    def or_backward(self, i0, i1, x):
        """a[i1 - j] |= bit j of x, for j in 0..i1 - i0."""
        self._check_write(i0, i1)
        w = i1 - i0 + 1
        self._deposit(i0, w, reverse_bits(x & ((1 << w) - 1), w), True)

    # names used by callers that think in OR-assignments
    or_assign_forward = or_forward
    or_assign_backward = or_backward

    def __repr__(self):
        bits = "".join(str(b) for b in self.tolist()[:80])
        more = "..." if self.length > 80 else ""
        return f"BitArray({bits}{more})"


def read_forward(a, i0, i1):
    return a.read_forward(i0, i1)


def read_backward(a, i0, i1):
    return a.read_backward(i0, i1)


def or_assign_forward(a, i0, i1, x):
    a.or_forward(i0, i1, x)


def mask_g(params, i):
    return params.mask_g(i)
