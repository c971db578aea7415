"""Brute-force references that every engine is checked against.

Palindromes are found by expanding around each center, so the cost is the
string length plus the number of subpalindromes (quadratic in the worst
case, near linear on random text).
"""

from .errors import ContractError


def as_bytes(w):
    if isinstance(w, str):
        return w.encode("latin-1")
    return bytes(w)


def palindrome_starts_by_end(w):
    """``ends[i]`` lists every ``j`` with ``w[j+1..i]`` a nonempty palindrome (1-based)."""
    w = as_bytes(w)
    n = len(w)
    ends = [[] for _ in range(n + 1)]
    for c in range(2 * n - 1):
        lo = c // 2
        hi = lo + (c & 1)
        while lo >= 0 and hi < n and w[lo] == w[hi]:
            ends[hi + 1].append(lo)
            lo -= 1
            hi += 1
    return ends


def suffix_palindrome_centers(w):
    """Doubled centers of all suffix-palindromes of ``w`` (empty one included), increasing."""
    w = as_bytes(w)
    n = len(w)
    out = []
    for length in range(n, -1, -1):
        tail = w[n - length:]
        if tail == tail[::-1]:
            out.append(2 * n - length + 1)
    return out


def lpal_prefix_bits(m, w):
    """``bits[i] = 1`` iff some ``j < i`` has ``m[j] = 1`` and ``w[j+1..i]`` a palindrome."""
    w = as_bytes(w)
    if len(m) != len(w) + 1:
        raise ContractError(f"need |m| = |w| + 1, got {len(m)} and {len(w)}")
    ends = palindrome_starts_by_end(w)
    bits = [0] * (len(w) + 1)
    for i in range(1, len(w) + 1):
        for j in ends[i]:
            if m[j]:
                bits[i] = 1
                break
    return bits


def pal_power_prefix_bits(w, k):
    """``bits[i] = 1`` iff ``w[1..i]`` is a concatenation of exactly ``k`` nonempty palindromes."""
    if k < 1:
        raise ContractError(f"k must be >= 1, got {k}")
    w = as_bytes(w)
    n = len(w)
    ends = palindrome_starts_by_end(w)
    layer = [1] + [0] * n
    for _ in range(k):
        nxt = [0] * (n + 1)
        for i in range(1, n + 1):
            for j in ends[i]:
                if layer[j]:
                    nxt[i] = 1
                    break
        layer = nxt
    return layer


def pal_power_split(w, k):
    """One split of ``w`` into ``k`` nonempty palindromes, or None.

    Parts have the type of ``w`` (``str`` in, ``str`` out).
    """
    text_in = isinstance(w, str)
    w = as_bytes(w)
    n = len(w)
    ends = palindrome_starts_by_end(w)
    layers = [[1] + [0] * n]
    for _ in range(k):
        prev = layers[-1]
        layers.append([0] + [int(any(prev[j] for j in ends[i])) for i in range(1, n + 1)])
    if not layers[k][n]:
        return None
    parts = []
    i = n
    for level in range(k, 0, -1):
        j = next(j for j in ends[i] if layers[level - 1][j])
        parts.append(w[j:i])
        i = j
    parts.reverse()
    if text_in:
        return [p.decode("latin-1") for p in parts]
    return parts
