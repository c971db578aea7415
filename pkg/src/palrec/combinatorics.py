"""Periods, canonical decompositions and leading suffix-palindromes.

These are reference computations on whole strings.  The engines never call
them on their hot paths; tests and debug checks do.
"""

import math
from dataclasses import dataclass

from .errors import ContractError


def is_palindrome(w):
    return w == w[::-1]


def border_array(w):
    """Prefix function: ``pi[i]`` is the longest proper border of ``w[:i + 1]``."""
    pi = [0] * len(w)
    k = 0
    for i in range(1, len(w)):
        while k and w[i] != w[k]:
            k = pi[k - 1]
        if w[i] == w[k]:
            k += 1
        pi[i] = k
    return pi


def min_period(w):
    if not w:
        raise ContractError("min_period of the empty string")
    return len(w) - border_array(w)[-1]


def is_primitive(w):
    if not w:
        raise ContractError("is_primitive of the empty string")
    p = min_period(w)
    return p == len(w) or len(w) % p != 0


@dataclass(frozen=True)
class CanonicalDecomposition:
    u: object
    v: object
    e: int
    p: int

    def rebuild(self):
        return (self.u + self.v) * self.e + self.u


def canonical_decomposition(w):
    """Split a palindrome as ``(uv)^e u`` with ``u``, ``v`` palindromes and ``|uv|`` minimal."""
    if not w or not is_palindrome(w):
        raise ContractError("canonical decomposition needs a nonempty palindrome")
    p = min_period(w)
    e, ulen = divmod(len(w), p)
    return CanonicalDecomposition(w[:ulen], w[ulen:p], e, p)


def next_leading_length(length, p):
    """Length of the next leading suffix-palindrome after one of ``length`` with min period ``p``."""
    return min(length - p, p + length % p)


def suffix_palindrome_lengths(w):
    """Lengths of all suffix-palindromes of ``w``, longest first, ending with 0."""
    n = len(w)
    return [k for k in range(n, -1, -1) if is_palindrome(w[n - k:])]


def leading_lengths_from(lengths, periods):
    """Filter descending suffix-palindrome lengths down to the leading ones.

    ``periods[k]`` is the minimal period of the palindrome of length
    ``lengths[k]``.  A palindrome of length ``L`` is leading when every longer
    one has minimal period ``p`` with ``2p > L``.
    """
    out = []
    smallest = math.inf  # least minimal period among longer ones
    for L, p in zip(lengths, periods):
        if 2 * smallest > L:
            out.append(L)
        if p < smallest:
            smallest = p
    return out


def leading_suffix_palindromes(w):
    """All leading suffix-palindromes as ``(start, length)``, 1-based start, longest first.

    Quadratic by design; this is a checking oracle.
    """
    n = len(w)
    lengths = suffix_palindrome_lengths(w)
    periods = [min_period(w[n - L:]) if L else math.inf for L in lengths]
    return [(n - L + 1, L) for L in leading_lengths_from(lengths, periods)]


def leading_count_bound(n):
    """Upper bound on leading suffix-palindromes of a length-``n`` string, with +2 slack."""
    if n <= 1:
        return 2
    return math.log(n, 1.5) + 2
