"""Online recognition of L·Pal and Pal^k with palindromic engines."""

from .bitblocks import FULL, TOY, BitArray, WordParams
from .combinatorics import (
    canonical_decomposition,
    is_palindrome,
    is_primitive,
    leading_suffix_palindromes,
    min_period,
    next_leading_length,
)
from .engine import ENGINE_KINDS, NaiveEngine, new_engine
from .errors import ContractError
from .iterator import PalIterator, refl
from .linear import LinearEngine
from .nlogn import NLogNEngine
from .oracle import lpal_prefix_bits, pal_power_prefix_bits, suffix_palindrome_centers
from .recognizer import OnlineRecognizer, PalPowerRecognizer, lpal_wrap, recognize

__all__ = [
    "BitArray",
    "ContractError",
    "ENGINE_KINDS",
    "FULL",
    "LinearEngine",
    "NLogNEngine",
    "NaiveEngine",
    "OnlineRecognizer",
    "PalIterator",
    "PalPowerRecognizer",
    "TOY",
    "WordParams",
    "canonical_decomposition",
    "is_palindrome",
    "is_primitive",
    "leading_suffix_palindromes",
    "lpal_prefix_bits",
    "lpal_wrap",
    "min_period",
    "new_engine",
    "next_leading_length",
    "pal_power_prefix_bits",
    "recognize",
    "refl",
    "suffix_palindrome_centers",
]
