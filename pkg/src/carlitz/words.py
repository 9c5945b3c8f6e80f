"""Finite digit words over the alphabet {0, ..., q^h - 1} and the natural
numbers they encode.

A word (a_0, ..., a_r) stands for the integer z = sum a_i * (q^h)^i, i.e. it
is a base-q^h digit string, least significant digit first, allowing leading
(that is, trailing-index) zeros.  Concatenation a * b satisfies

    z(a * b) = z(a) + (q^h)^deg(a) * z(b),

so words form a monoid refining integer addition by digit position.  The
windowing helpers slice an integer's digit string: tail(u, s) drops the s
lowest digits, window(u, r, s) keeps digit positions s .. s+r.

class_set(w, j) collects the lower indices u <= z(w) whose binomial
binom(z(w), u)_C lands in the unit class primitive_root^j mod the prime,
by direct scan; it is deliberately simple, the bulk counting lives in dist.
"""

from __future__ import annotations

from dataclasses import dataclass

from .binom import DigitBinomCache
from .limits import DEFAULT_CLASS_ENUM_LIMIT, GuardrailError


def digits_of(n: int, base: int) -> list[int]:
    """Base-`base` digits of n >= 0, least significant first; [0] for n = 0."""
    if n < 0:
        raise ValueError("digit expansion needs n >= 0")
    if base < 2:
        raise ValueError("digit base must be >= 2")
    out = [n % base]
    n //= base
    while n:
        out.append(n % base)
        n //= base
    return out


@dataclass(frozen=True)
class Word:
    """A nonempty digit word over {0, ..., base-1}, lowest position first."""

    digits: tuple
    base: int

    def __post_init__(self):
        if not self.digits:
            raise ValueError("words must be nonempty")
        if self.base < 2:
            raise ValueError("word base must be >= 2")
        for d in self.digits:
            if not 0 <= d < self.base:
                raise ValueError(f"digit {d} out of range [0, {self.base})")

    @classmethod
    def from_int(cls, n: int, base: int, length: int | None = None) -> "Word":
        ds = digits_of(n, base)
        if length is not None:
            if length < len(ds):
                raise ValueError(f"{n} does not fit in {length} base-{base} digits")
            ds += [0] * (length - len(ds))
        return cls(tuple(ds), base)

    @property
    def degree(self) -> int:
        return len(self.digits)

    def value(self) -> int:
        """The integer this word spells."""
        z = 0
        for d in reversed(self.digits):
            z = z * self.base + d
        return z

    def concat(self, other: "Word") -> "Word":
        if not isinstance(other, Word):
            raise TypeError(f"expected Word, got {type(other).__name__}")
        if self.base != other.base:
            raise ValueError("cannot concatenate words over different alphabets")
        return Word(self.digits + other.digits, self.base)

    def __mul__(self, other):
        return self.concat(other)


def nat_tail(u: int, s: int, base: int) -> int:
    """Drop the s lowest base-`base` digits of u."""
    if u < 0 or s < 0:
        raise ValueError("tail needs u >= 0 and s >= 0")
    return u // base**s


def nat_window(u: int, r: int, s: int, base: int) -> int:
    """The integer spelled by digit positions s .. s+r of u."""
    if r < 0:
        raise ValueError("window needs r >= 0")
    return nat_tail(u, s, base) % base ** (r + 1)


def class_set(word: Word, j: int, cache: DigitBinomCache,
              limit: int = DEFAULT_CLASS_ENUM_LIMIT) -> set[int]:
    """All u in [0, z(word)] with binom(z(word), u)_C in class root^j mod p.

    j may be any integer; it is reduced mod q^h - 1.  Zero binomials belong
    to no class.
    """
    ctx = cache.ctx
    if word.base != ctx.base:
        raise ValueError(f"word base {word.base} does not match the ring's q^h = {ctx.base}")
    z = word.value()
    if z > limit:
        raise GuardrailError(f"class-set scan of z = {z} exceeds the limit {limit}")
    j %= ctx.group_order
    out = set()
    for u in range(z + 1):
        b = cache.binom(z, u)
        if b and ctx.dlog(b) == j:
            out.add(u)
    return out
