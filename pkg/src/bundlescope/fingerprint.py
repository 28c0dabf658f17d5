"""Winnowed k-gram fingerprints over token-type sequences.

Each k-gram of a token string is hashed with a polynomial rolling hash;
the winnowing pass keeps, per sliding window of w consecutive k-gram
hashes, the minimal hash (rightmost on ties). Guarantees that any shared
token substring of length >= k + w - 1 produces at least one shared
fingerprint (Schleimer et al., robust winnowing).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from bundlescope.errors import ParamMismatch
from bundlescope.tokens import TokenString

HASH_FN_VERSION = "poly31-mod64-1"

_MASK = (1 << 64) - 1
_BASE = 31

DEFAULT_K = 27
DEFAULT_W = 15


@dataclass(frozen=True)
class FingerprintParams:
    k: int = DEFAULT_K
    w: int = DEFAULT_W
    hash_fn_version: str = HASH_FN_VERSION

    def __post_init__(self):
        if self.k < 1 or self.w < 1:
            raise ValueError("k and w must be >= 1")


@dataclass(frozen=True)
class Fingerprint:
    hash: int
    position: int


@dataclass
class FingerprintSet:
    entries: frozenset  # of Fingerprint
    distinct_hashes: frozenset  # of int
    params: FingerprintParams

    def __len__(self) -> int:
        return len(self.entries)


def kgram_hashes(tokens: list[int], k: int) -> list[int]:
    """Rolling hashes of every k-gram; empty when len(tokens) < k."""
    n = len(tokens)
    if n < k:
        return []
    top = pow(_BASE, k - 1, 1 << 64)
    h = 0
    for t in tokens[:k]:
        h = (h * _BASE + t) & _MASK
    out = [h]
    for i in range(1, n - k + 1):
        h = ((h - tokens[i - 1] * top) * _BASE + tokens[i + k - 1]) & _MASK
        out.append(h)
    return out


def _winnow(hashes: list[int], w: int):
    """Yield (hash, position) selections, rightmost-minimum per window."""
    n = len(hashes)
    if n == 0:
        return
    if n <= w:
        best = n - 1
        for i in range(n - 2, -1, -1):
            if hashes[i] < hashes[best]:
                best = i
        yield hashes[best], best
        return
    # monotone deque of candidate positions; ties keep the rightmost
    from collections import deque

    dq: deque[int] = deque()
    prev = -1
    for i in range(n):
        while dq and hashes[dq[-1]] >= hashes[i]:
            dq.pop()
        dq.append(i)
        if dq[0] <= i - w:
            dq.popleft()
        if i >= w - 1 and dq[0] != prev:
            prev = dq[0]
            yield hashes[prev], prev


def fingerprint(tokens: TokenString | list[int],
                params: FingerprintParams = FingerprintParams(),
                position_offset: int = 0) -> FingerprintSet:
    """Winnowed fingerprint set of a token sequence.

    Degenerate inputs (fewer than k tokens) yield an empty set.
    `position_offset` shifts stored positions, used when fingerprinting
    a slice of a larger document.
    """
    seq = tokens.tokens if isinstance(tokens, TokenString) else tokens
    hashes = kgram_hashes(seq, params.k)
    entries = {Fingerprint(h, p + position_offset)
               for h, p in _winnow(hashes, params.w)}
    return FingerprintSet(entries=frozenset(entries),
                          distinct_hashes=frozenset(f.hash
                                                    for f in entries),
                          params=params)


def _check_params(a: FingerprintSet, b: FingerprintSet):
    if a.params != b.params:
        raise ParamMismatch(f"params {a.params} vs {b.params}")


def shared_count(reference: FingerprintSet, bundle: FingerprintSet) -> int:
    """Number of distinct hashes shared between the two sets."""
    _check_params(reference, bundle)
    return len(reference.distinct_hashes & bundle.distinct_hashes)


def containment_similarity(reference: FingerprintSet,
                           bundle: FingerprintSet) -> float:
    """Fraction of the bundle's distinct fingerprints found in the
    reference; 0.0 when the bundle set is empty."""
    _check_params(reference, bundle)
    if not bundle.distinct_hashes:
        return 0.0
    shared = len(reference.distinct_hashes & bundle.distinct_hashes)
    return shared / len(bundle.distinct_hashes)
