"""PRNG helpers on top of `jax.random`.

All sampling in the schemes consumes an explicit key. Integers are drawn
exactly uniformly by rejection sampling on raw `jax.random.bits`, so Bernoulli
draws with rational probabilities have exactly the requested distribution.
"""

from fractions import Fraction

import jax
import jax.numpy as jnp
import numpy as np

from ..errors import ParameterError


MAX_UNIFORM_BOUND = 2**63


def key_from_seed(seed: int) -> jax.Array:
    """Derive a PRNG key from an unsigned 64-bit seed.

    The two 32-bit halves are folded into a fixed root key, so seeds above
    `2**32` work without enabling 64-bit mode in jax.
    """
    if isinstance(seed, bool) or not isinstance(seed, int) or not 0 <= seed < 2**64:
        raise ParameterError(f"seed must be an integer in [0, 2**64), got {seed!r}")

    key = jax.random.key(0)
    key = jax.random.fold_in(key, np.uint32(seed & 0xFFFFFFFF))
    return jax.random.fold_in(key, np.uint32(seed >> 32))


def uniform_below_stack(key: jax.Array, bound: int, num: int) -> np.ndarray:
    """Draw `num` independent integers uniformly from `[0, bound)`.

    Args:
        key: PRNG key, consumed.
        bound: Exclusive upper bound, `1 <= bound <= 2**63`.
        num: Number of draws.

    Returns:
        np.ndarray: int64 array `(num,)`.
    """
    if not 1 <= bound <= MAX_UNIFORM_BOUND:
        raise ParameterError(f"uniform bound must be in [1, 2**63], got {bound}")

    if bound == 1:
        return np.zeros(num, dtype=np.int64)

    num_bits = (bound - 1).bit_length()
    num_words = 1 if num_bits <= 32 else 2
    mask = np.uint64((1 << num_bits) - 1)

    out = np.zeros(num, dtype=np.int64)
    pending = np.arange(num)

    # expected number of rounds is below 2
    while pending.size:
        key, subkey = jax.random.split(key)
        raw = np.asarray(
            jax.random.bits(subkey, (pending.size, num_words), dtype=jnp.uint32)
        ).astype(np.uint64)

        value_stack = raw[:, 0]
        if num_words == 2:
            value_stack = (value_stack << np.uint64(32)) | raw[:, 1]
        value_stack = value_stack & mask

        accepted = value_stack < np.uint64(bound)
        out[pending[accepted]] = value_stack[accepted].astype(np.int64)
        pending = pending[~accepted]

    return out


def uniform_below(key: jax.Array, bound: int) -> int:
    """Draw one integer uniformly from `[0, bound)`, for any positive bound.

    Words of 32 random bits are concatenated into a Python integer, so the
    bound is not limited to 64 bits.
    """
    if bound < 1:
        raise ParameterError(f"uniform bound must be positive, got {bound}")
    if bound == 1:
        return 0

    num_bits = (bound - 1).bit_length()
    num_words = -(-num_bits // 32)
    mask = (1 << num_bits) - 1

    while True:
        key, subkey = jax.random.split(key)
        words = np.asarray(jax.random.bits(subkey, (num_words,), dtype=jnp.uint32))

        value = 0
        for word in words:
            value = (value << 32) | int(word)
        value &= mask

        if value < bound:
            return value


def bernoulli_zero_stack(key: jax.Array, p: Fraction, num: int) -> np.ndarray:
    """Draw `num` bits that are 0 with probability exactly `p`.

    A uniform integer `u` below the denominator of `p` gives bit 0 iff `u` is
    below the numerator. Denominators above `MAX_UNIFORM_BOUND` are drawn one
    value at a time with `uniform_below`.
    """
    p = Fraction(p)
    if not 0 <= p <= 1:
        raise ParameterError(f"probability must be in [0, 1], got {p}")

    if p.denominator <= MAX_UNIFORM_BOUND:
        u_stack = uniform_below_stack(key, p.denominator, num)
        return (u_stack >= p.numerator).astype(np.int64)

    if num == 0:
        return np.zeros(0, dtype=np.int64)
    bits = [
        int(uniform_below(subkey, p.denominator) >= p.numerator)
        for subkey in jax.random.split(key, num)
    ]
    return np.array(bits, dtype=np.int64)
