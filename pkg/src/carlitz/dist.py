"""Counting Carlitz binomial coefficients by residue class.

For a prime p of degree h, primitive root g, and L = q^h - 1, let
eps_j(n) count the m in [0, n] with binom(n, m)_C = g^j mod p.  The
generating polynomial

    G_n(x) = sum_j eps_j(n) x^j   in  Z[x] / (x^L - 1)

multiplies over base-q^h digits: if c_d(n) counts how often digit d occurs
in the base-q^h expansion of n (with c_0(0) = 1 for n = 0), then

    G_n(x) = prod_{d < q^h} G_d(x)^(c_d(n))   mod (x^L - 1).

The single-digit polynomials G_d are tiny brute-force scans, so G_n for
astronomically large n costs only a handful of cyclic multiplications.
gn_fast implements that product; distribution_brute is the independent
linear check that classifies every single m in [0, n]; distribution wraps
both behind a method switch.  Multiplying in Z[x]/(x^L - 1) is a naive
cyclic convolution with exact bigint coefficients throughout.

Binomials that are = 0 mod p belong to no class; their count is
n + 1 - G_n(1) and is reported separately.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .binom import DigitBinomCache
from .limits import DEFAULT_ENUM_LIMIT, GuardrailError
from .polyring import parse_poly, parse_upoly
from .residue import ResidueCtx
from .words import digits_of


class CountPoly:
    """An element of Z[x]/(x^L - 1) with nonnegative integer coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cs = tuple(int(c) for c in coeffs)
        if not cs:
            raise ValueError("a count polynomial needs modulus length >= 1")
        self.coeffs = cs

    @classmethod
    def one(cls, length: int) -> "CountPoly":
        return cls((1,) + (0,) * (length - 1))

    @classmethod
    def from_terms(cls, terms: dict, length: int) -> "CountPoly":
        out = [0] * length
        for j, c in terms.items():
            out[j % length] += c
        return cls(out)

    @property
    def length(self) -> int:
        return len(self.coeffs)

    def coeff(self, j: int) -> int:
        """Coefficient at exponent j, reduced mod the ring length."""
        return self.coeffs[j % len(self.coeffs)]

    def __eq__(self, other):
        return isinstance(other, CountPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __mul__(self, other):
        if not isinstance(other, CountPoly):
            raise TypeError(f"expected CountPoly, got {type(other).__name__}")
        if len(self.coeffs) != len(other.coeffs):
            raise ValueError("count polynomials live in rings of different length")
        L = len(self.coeffs)
        out = [0] * L
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        k = i + j
                        if k >= L:
                            k -= L
                        out[k] += a * b
        return CountPoly(out)

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("count polynomials only take nonnegative powers")
        result = CountPoly.one(len(self.coeffs))
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def eval_one(self) -> int:
        """The total mass G(1) = sum of coefficients."""
        return sum(self.coeffs)

    def __str__(self):
        terms = []
        for j, c in enumerate(self.coeffs):
            if not c:
                continue
            if j == 0:
                terms.append(str(c))
            else:
                mono = "x" if j == 1 else f"x^{j}"
                terms.append(mono if c == 1 else f"{c}{mono}")
        return " + ".join(terms) if terms else "0"

    def __repr__(self):
        return f"CountPoly({self})"


def digit_counts(n: int, ctx: ResidueCtx) -> list[int]:
    """Histogram c_d(n) of the base-q^h digits of n (c_0(0) = 1)."""
    if n < 0:
        raise ValueError("digit counts need n >= 0")
    counts = [0] * ctx.base
    for d in digits_of(n, ctx.base):
        counts[d] += 1
    return counts


class BaseTable:
    """Lazy per-digit data: class rows and single-digit polynomials G_d."""

    def __init__(self, ctx: ResidueCtx, cache: DigitBinomCache, gpolys=None):
        if cache.ctx is not ctx and cache.ctx.key != ctx.key:
            raise ValueError("cache belongs to a different ring")
        self.ctx = ctx
        self.cache = cache
        self._rows: dict[int, tuple] = {}
        self._gpolys: dict[int, CountPoly] = dict(gpolys) if gpolys else {}

    def row(self, d: int) -> tuple:
        """Discrete logs of binom(d, m)_C mod p for m = 0 .. d.

        Single-digit binomials with m <= d are always units, so every entry
        is a genuine exponent.
        """
        hit = self._rows.get(d)
        if hit is None:
            ctx = self.ctx
            cache = self.cache
            hit = tuple(ctx.dlog(cache.digit_binom(d, m)) for m in range(d + 1))
            self._rows[d] = hit
        return hit

    def gpoly(self, d: int) -> CountPoly:
        """The single-digit polynomial G_d(x)."""
        hit = self._gpolys.get(d)
        if hit is None:
            counts = [0] * self.ctx.group_order
            for e in self.row(d):
                counts[e] += 1
            hit = CountPoly(counts)
            self._gpolys[d] = hit
        return hit

    def all(self) -> list[CountPoly]:
        return [self.gpoly(d) for d in range(self.ctx.base)]

    def computed(self) -> dict[int, CountPoly]:
        return dict(self._gpolys)


def base_table(ctx: ResidueCtx, cache: DigitBinomCache) -> list[CountPoly]:
    """All q^h single-digit polynomials G_0 .. G_{q^h - 1}."""
    return BaseTable(ctx, cache).all()


def gn_fast(n: int, ctx: ResidueCtx, cache: DigitBinomCache,
            table: BaseTable | None = None) -> CountPoly:
    """G_n(x) via the digit-product identity; polylogarithmic in n."""
    if n < 0:
        raise ValueError("distributions need n >= 0")
    if table is None:
        table = BaseTable(ctx, cache)
    result = CountPoly.one(ctx.group_order)
    for d, c in enumerate(digit_counts(n, ctx)):
        if c:
            result = result * table.gpoly(d) ** c
    return result


@dataclass
class Distribution:
    """The class-by-class census of binom(n, m)_C mod p over m in [0, n]."""

    n: int
    method: str
    counts: CountPoly
    zero_count: int
    ctx: ResidueCtx = dc_field(repr=False)

    def epsilon(self, j: int) -> int:
        """eps_j(n); j may be any integer and reduces mod q^h - 1."""
        return self.counts.coeff(j)

    def residue_label(self, j: int) -> str:
        return self.ctx.label(j)

    @property
    def residue_labels(self) -> list[str]:
        return [self.ctx.label(j) for j in range(self.ctx.group_order)]

    def nonzero_items(self) -> list[tuple[int, int]]:
        """(exponent, count) pairs for the classes that actually occur."""
        return [(j, c) for j, c in enumerate(self.counts.coeffs) if c]

    def __eq__(self, other):
        return (
            isinstance(other, Distribution)
            and self.n == other.n
            and self.method == other.method
            and self.counts == other.counts
            and self.zero_count == other.zero_count
            and self.ctx.key == other.ctx.key
        )


def distribution_brute(n: int, ctx: ResidueCtx, cache: DigitBinomCache,
                       limit: int = DEFAULT_ENUM_LIMIT,
                       table: BaseTable | None = None) -> Distribution:
    """Classify every m in [0, n] one by one; the linear-time oracle.

    Walks m as a base-q^h odometer, keeping the digitwise discrete-log sum
    of binom(n, m)_C up to date, so no product identity is involved: each m
    is judged only by its own digits against the digits of n.
    """
    if n < 0:
        raise ValueError("distributions need n >= 0")
    if n > limit:
        raise GuardrailError(f"brute scan of n = {n} exceeds the enumeration limit {limit}")
    if table is None:
        table = BaseTable(ctx, cache)
    base = ctx.base
    order = ctx.group_order
    ndigits = digits_of(n, base)
    # rows[i][v]: dlog of binom(n_i, v)_C, or None where v > n_i (zero class).
    rows = []
    for d in ndigits:
        rows.append(list(table.row(d)) + [None] * (base - 1 - d))
    npos = len(ndigits)
    counts = [0] * order
    zero_count = 0
    cur = [0] * npos
    contrib = [0] * npos  # rows[i][0] is always dlog(1) = 0
    tot = 0
    bad = 0
    m = 0
    while True:
        if bad:
            zero_count += 1
        else:
            counts[tot % order] += 1
        if m == n:
            break
        m += 1
        i = 0
        while True:
            v = cur[i] + 1
            if v == base:
                v = 0
            old = contrib[i]
            new = rows[i][v]
            cur[i] = v
            contrib[i] = new
            if old is None:
                bad -= 1
            else:
                tot -= old
            if new is None:
                bad += 1
            else:
                tot += new
            if v:
                break
            i += 1
    return Distribution(n=n, method="brute", counts=CountPoly(counts),
                        zero_count=zero_count, ctx=ctx)


def distribution(n: int, ctx: ResidueCtx, cache: DigitBinomCache,
                 method: str = "fast", table: BaseTable | None = None,
                 limit: int = DEFAULT_ENUM_LIMIT) -> Distribution:
    """The distribution of binom(n, m)_C mod p over m in [0, n]."""
    if method == "fast":
        counts = gn_fast(n, ctx, cache, table)
        return Distribution(n=n, method="fast", counts=counts,
                            zero_count=n + 1 - counts.eval_one(), ctx=ctx)
    if method == "brute":
        return distribution_brute(n, ctx, cache, limit=limit, table=table)
    raise ValueError(f"unknown method {method!r} (expected 'fast' or 'brute')")


# -- JSON interchange ---------------------------------------------------------


def to_json_dict(dist: Distribution) -> dict:
    """The stable JSON form.  Field names are part of the contract; every
    unbounded integer is a decimal string."""
    ctx = dist.ctx
    f = ctx.field
    return {
        "p": f.p,
        "s": f.s,
        "field_modulus": f.modulus_str(),
        "prime": str(ctx.prime),
        "h": ctx.h,
        "primitive_root": str(ctx.primitive_root),
        "group_order": str(ctx.group_order),
        "n": str(dist.n),
        "method": dist.method,
        "counts": [
            {"exponent": str(j), "residue": ctx.label(j), "count": str(c)}
            for j, c in dist.nonzero_items()
        ],
        "zero_count": str(dist.zero_count),
    }


def from_json_dict(doc: dict) -> Distribution:
    """Rebuild a Distribution (and its ring) from the JSON form."""
    from .gf import Field

    p = int(doc["p"])
    s = int(doc["s"])
    modulus = parse_upoly(doc["field_modulus"], p) if doc["field_modulus"] else None
    f = Field(p, s, modulus=modulus)
    prime = parse_poly(doc["prime"], f)
    ctx = ResidueCtx(prime, primitive_root=parse_poly(doc["primitive_root"], f))
    if int(doc["group_order"]) != ctx.group_order:
        raise ValueError("group_order does not match the ring")
    terms = {int(entry["exponent"]): int(entry["count"]) for entry in doc["counts"]}
    counts = CountPoly.from_terms(terms, ctx.group_order)
    for entry in doc["counts"]:
        j = int(entry["exponent"])
        if ctx.label(j) != entry["residue"]:
            raise ValueError(f"residue label mismatch at exponent {j}")
    return Distribution(n=int(doc["n"]), method=doc["method"], counts=counts,
                        zero_count=int(doc["zero_count"]), ctx=ctx)
