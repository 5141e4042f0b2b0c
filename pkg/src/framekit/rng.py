"""Seeded, reproducible normal streams.

Uniform 64-bit words come from Philox-4x64-10, a counter-based generator
with a published, fixed bit stream (numpy supplies the implementation; the
output is defined by the algorithm, not the numpy version).  The stream is
keyed by the 64-bit seed; logical stream k of a batch owns the counter
blocks [k*b, (k+1)*b) for a fixed per-stream block count b, so streams can
be generated independently, in any order, or all at once.

Words become normals by the exact Box-Muller transform:

    u1 = ((word >> 11) + 1) * 2**-53   in (0, 1]
    u2 = (word >> 11) * 2**-53         in [0, 1)
    z0 = sqrt(-2 ln u1) cos(2 pi u2)
    z1 = sqrt(-2 ln u1) sin(2 pi u2)

Stream k of length ``count`` uses pairs = ceil(count/2) words for u1
followed by pairs words for u2, yielding z0[0], z1[0], z0[1], z1[1], ...
truncated to ``count``.
"""

from __future__ import annotations

import numpy as np

from .errors import InvalidArgument

_MASK64 = (1 << 64) - 1
_WORDS_PER_BLOCK = 4  # Philox-4x64 emits four words per counter increment


def philox_words(seed: int, block_offset: int, count: int) -> np.ndarray:
    """Raw uint64 words starting at the given counter block."""
    key = np.array([int(seed) & _MASK64, 0], dtype=np.uint64)
    counter = np.array([int(block_offset) & _MASK64, 0, 0, 0], dtype=np.uint64)
    return np.random.Philox(key=key, counter=counter).random_raw(count)


def _stream_layout(count: int) -> tuple[int, int]:
    pairs = (count + 1) // 2
    blocks = -(-2 * pairs // _WORDS_PER_BLOCK)
    return pairs, blocks


def _box_muller(words: np.ndarray, pairs: int, count: int) -> np.ndarray:
    u1 = ((words[..., :pairs] >> np.uint64(11)) + np.uint64(1)) * 2.0**-53
    u2 = (words[..., pairs : 2 * pairs] >> np.uint64(11)) * 2.0**-53
    radius = np.sqrt(-2.0 * np.log(u1))
    angle = (2.0 * np.pi) * u2
    out = np.empty(words.shape[:-1] + (2 * pairs,))
    out[..., 0::2] = radius * np.cos(angle)
    out[..., 1::2] = radius * np.sin(angle)
    return out[..., :count]


def seeded_normals(seed: int, stream: int, count: int) -> np.ndarray:
    """``count`` standard normals from logical stream ``stream``."""
    if count < 1:
        raise InvalidArgument("count must be >= 1")
    pairs, blocks = _stream_layout(count)
    words = philox_words(seed, stream * blocks, _WORDS_PER_BLOCK * blocks)
    return _box_muller(words, pairs, count)


def seeded_normal_matrix(seed: int, n_streams: int, count: int) -> np.ndarray:
    """All streams 0..n_streams-1 at once; row k equals seeded_normals(seed, k, count)."""
    if n_streams < 1 or count < 1:
        raise InvalidArgument("n_streams and count must be >= 1")
    pairs, blocks = _stream_layout(count)
    span = _WORDS_PER_BLOCK * blocks
    words = philox_words(seed, 0, n_streams * span).reshape(n_streams, span)
    return _box_muller(words, pairs, count)
