"""Carlitz factorials and binomial coefficients over A = F_q[T].

The building blocks are the polynomials

    D_0 = 1,   D_i = prod_{r=0}^{i-1} (T^(q^i) - T^(q^r)),   deg D_i = i*q^i.

For n with base-q digits n = sum n_i q^i the Carlitz factorial is
n!_C = prod D_i^(n_i), and the binomial coefficient is

    binom(n, m)_C = n!_C / (m!_C * (n-m)!_C)   for m <= n, else 0,

which is always itself an element of A.  binom_exact computes it by honest
polynomial division (and treats a nonzero remainder as an internal error);
factorial degrees grow fast, so the exact routines take a degree guardrail.

Modulo a prime p of degree h the binomial reduces digit by digit: writing
n and m in base q^h as (a_0, a_1, ...) and (b_0, b_1, ...),

    binom(n, m)_C  =  prod_i binom(a_i, b_i)_C   (mod p),

zero as soon as some b_i > a_i.  Each single-digit factor binom(a, b)_C with
b <= a < q^h is the unit prod_i (D_i mod p)^(e_i), where e_i = a_i - b_i - g_i
over the base-q digits of a, b and g = a - b (the exponents can be negative;
all D_i with i < h are units mod p).  DigitBinomCache holds the D_i mod p,
their inverses, and a memo of the q^h x q^h single-digit table when small.
"""

from __future__ import annotations

from functools import lru_cache

from .gf import Field
from .limits import DEFAULT_EXACT_DEGREE_LIMIT, MEMO_LIMIT, GuardrailError
from .polyring import Poly
from .residue import Residue, ResidueCtx


@lru_cache(maxsize=64)
def d_poly(i: int, field: Field, degree_limit: int = DEFAULT_EXACT_DEGREE_LIMIT) -> Poly:
    """The exact polynomial D_i."""
    if i < 0:
        raise ValueError("D_i needs i >= 0")
    if i == 0:
        return Poly.one(field)
    q = field.q
    deg = i * q**i
    if deg > degree_limit:
        raise GuardrailError(
            f"deg D_{i} = {deg} exceeds the exact-degree limit {degree_limit}"
        )
    acc = Poly.one(field)
    qi = q**i
    for r in range(i):
        # acc *= T^(q^i) - T^(q^r); both factors are monomials, so shift.
        acc = acc.shift(qi) - acc.shift(q**r)
    return acc


def _base_digits(n, base):
    digits = [n % base]
    n //= base
    while n:
        digits.append(n % base)
        n //= base
    return digits


@lru_cache(maxsize=4096)
def factorial_exact(n: int, field: Field,
                    degree_limit: int = DEFAULT_EXACT_DEGREE_LIMIT) -> Poly:
    """The Carlitz factorial n!_C as an exact polynomial."""
    if n < 0:
        raise ValueError("factorial needs n >= 0")
    q = field.q
    digits = _base_digits(n, q)
    deg = sum(ni * i * q**i for i, ni in enumerate(digits))
    if deg > degree_limit:
        raise GuardrailError(
            f"deg {n}!_C = {deg} exceeds the exact-degree limit {degree_limit}"
        )
    result = Poly.one(field)
    for i, ni in enumerate(digits):
        if ni and i:
            di = d_poly(i, field, degree_limit)
            for _ in range(ni):
                result = result * di
    return result


def binom_exact(n: int, m: int, field: Field,
                degree_limit: int = DEFAULT_EXACT_DEGREE_LIMIT) -> Poly:
    """The Carlitz binomial coefficient as an exact polynomial, by division."""
    if n < 0 or m < 0:
        raise ValueError("binomial indices must be nonnegative")
    if m > n:
        return Poly.zero(field)
    num = factorial_exact(n, field, degree_limit)
    den = factorial_exact(m, field, degree_limit) * factorial_exact(n - m, field, degree_limit)
    quot, rem = divmod(num, den)
    if rem:
        raise ArithmeticError(
            f"binom({n}, {m})_C is not integral: division left remainder {rem}"
        )
    return quot


class DigitBinomCache:
    """Per-context tables for binomial coefficients mod the prime."""

    def __init__(self, ctx: ResidueCtx, memoize: bool | None = None):
        self.ctx = ctx
        h = ctx.h
        q = ctx.q
        # Frobenius powers t_k = T^(q^k) mod prime, k = 0 .. h-1.
        t = [ctx.reduce(Poly.gen(ctx.field))]
        for _ in range(h - 1):
            t.append(t[-1] ** q)
        d_mod = [ctx.one]
        for i in range(1, h):
            cur = ctx.one
            for r in range(i):
                cur = cur * (t[i] - t[r])
            if not cur:
                raise ArithmeticError(f"D_{i} vanished mod {ctx.prime}")  # impossible for i < h
            d_mod.append(cur)
        self.d_mod = tuple(d_mod)
        self.d_inv = tuple(d.inverse() for d in d_mod)
        if memoize is None:
            memoize = ctx.base * ctx.base <= MEMO_LIMIT
        # Insert-only memo of the single-digit table; safe to share.
        self._memo: dict | None = {} if memoize else None

    def digit_binom(self, a: int, b: int) -> Residue:
        """binom(a, b)_C mod the prime for single base-q^h digits a, b."""
        ctx = self.ctx
        if not 0 <= a < ctx.base or not 0 <= b < ctx.base:
            raise ValueError(f"digits must lie in [0, {ctx.base})")
        if b > a:
            return ctx.zero
        memo = self._memo
        if memo is not None:
            hit = memo.get((a, b))
            if hit is not None:
                return hit
        q = ctx.q
        aa, bb, gg = a, b, a - b
        result = ctx.one
        i = 0
        while aa:
            e = aa % q - bb % q - gg % q
            if e:
                result = result * (self.d_mod[i] ** e if e > 0 else self.d_inv[i] ** (-e))
            aa //= q
            bb //= q
            gg //= q
            i += 1
        if memo is not None:
            memo[(a, b)] = result
        return result

    def binom(self, n: int, m: int) -> Residue:
        """binom(n, m)_C mod the prime, via the digitwise product."""
        if n < 0 or m < 0:
            raise ValueError("binomial indices must be nonnegative")
        ctx = self.ctx
        if m > n:
            return ctx.zero
        base = ctx.base
        result = ctx.one
        while n or m:
            a = n % base
            b = m % base
            if b > a:
                return ctx.zero
            result = result * self.digit_binom(a, b)
            n //= base
            m //= base
        return result

    def factorial(self, n: int) -> Residue:
        """n!_C mod the prime: prod (D_i mod p)^(n_i) over base-q digits.
        Beware: unlike the exact factorial this is only a unit product while
        every digit index stays below h; for larger n the true n!_C is
        divisible by the prime, so this reports the zero residue."""
        if n < 0:
            raise ValueError("factorial needs n >= 0")
        ctx = self.ctx
        q = ctx.q
        h = ctx.h
        result = ctx.one
        i = 0
        while n:
            ni = n % q
            if ni:
                if i >= h:
                    return ctx.zero
                result = result * self.d_mod[i] ** ni
            n //= q
            i += 1
        return result
