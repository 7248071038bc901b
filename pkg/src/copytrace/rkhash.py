"""Karp-Rabin hash core.

A byte sequence is fingerprinted by the polynomial hash

    (sum of b_i * base^(m-1-i))  mod  modulus

evaluated left to right with Horner's rule in O(m).  Sliding a fixed
window one byte costs O(1): subtract the outgoing byte's contribution,
shift by the base, add the incoming byte.  ``search`` filters candidate
positions by window hash and then verifies bytes directly, so a hash
collision can never produce a false match.  Verification makes the worst
case O(mn); the expected running time is O(n+m).

Defaults: base 257 (above any byte value), modulus 2^61-1 (a Mersenne
prime, giving a per-comparison collision probability below 2^-60).
Python integers are unbounded, so the modular arithmetic is exact at any
operand width.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import EmptyNormalizedSentence, EmptyPattern
from .textnorm import Sentence

DEFAULT_BASE = 257
DEFAULT_MODULUS = (1 << 61) - 1

_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for all n < 3.3e24."""
    if n < 2:
        return False
    for p in _MR_WITNESSES:
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class HashParams:
    """Radix and prime modulus of the polynomial hash."""

    base: int = DEFAULT_BASE
    modulus: int = DEFAULT_MODULUS

    def __post_init__(self) -> None:
        if self.base <= 255:
            raise ValueError("base must exceed the maximum byte value 255")
        if self.base >= self.modulus:
            raise ValueError("base must be smaller than the modulus")
        if not _is_prime(self.modulus):
            raise ValueError("modulus must be prime")


DEFAULT_PARAMS = HashParams()


def hash_full(data: bytes, params: HashParams = DEFAULT_PARAMS) -> int:
    """Polynomial hash of ``data`` in one left-to-right Horner pass.

    The empty sequence hashes to 0 (empty-sum convention).
    """
    base, modulus = params.base, params.modulus
    h = 0
    for byte in data:
        h = (h * base + byte) % modulus
    return h


class RollingWindow:
    """Hash of a fixed-length byte window, slidable one byte at a time.

    The window's bytes are owned by the caller; ``roll`` is told which
    byte leaves the front as the new byte enters at the back.  A window
    instance is single-owner: do not share one mutably across threads.
    """

    __slots__ = ("params", "window_len", "current_hash", "pow_cache")

    def __init__(self, window: bytes, params: HashParams = DEFAULT_PARAMS):
        if len(window) < 1:
            raise ValueError("window must hold at least one byte")
        self.params = params
        self.window_len = len(window)
        self.current_hash = hash_full(window, params)
        self.pow_cache = pow(params.base, self.window_len - 1, params.modulus)

    def roll(self, outgoing: int, incoming: int) -> int:
        """Slide the window one byte; O(1), returns the new hash."""
        modulus = self.params.modulus
        h = (self.current_hash - outgoing * self.pow_cache) % modulus
        h = (h * self.params.base + incoming) % modulus
        self.current_hash = h
        return h


def search(pattern: bytes, text: bytes, params: HashParams = DEFAULT_PARAMS) -> list[int]:
    """All 0-based positions where ``pattern`` occurs in ``text``, left to right.

    Every hash hit is confirmed by a direct byte comparison, so the
    result never contains a spurious position.  Raises EmptyPattern for
    an empty pattern; a pattern longer than the text matches nowhere.
    """
    if not pattern:
        raise EmptyPattern("cannot search for an empty pattern")
    m, n = len(pattern), len(text)
    if m > n:
        return []

    target = hash_full(pattern, params)
    window = RollingWindow(text[:m], params)
    positions: list[int] = []
    if window.current_hash == target and text[:m] == pattern:
        positions.append(0)

    # Hot loop: locals and direct arithmetic, one roll per position.
    base, modulus = params.base, params.modulus
    pow_cache = window.pow_cache
    h = window.current_hash
    for j in range(1, n - m + 1):
        h = ((h - text[j - 1] * pow_cache) * base + text[j + m - 1]) % modulus
        if h == target and text[j : j + m] == pattern:
            positions.append(j)
    return positions


def hash_sentence(sentence: Sentence, params: HashParams = DEFAULT_PARAMS) -> int:
    """Fingerprint of a sentence: hash of the UTF-8 bytes of its normalized form."""
    if not sentence.normalized:
        raise EmptyNormalizedSentence("sentence normalizes to the empty string")
    return hash_full(sentence.normalized.encode("utf-8"), params)
