"""Dense univariate polynomials over F_q: the ring A = F_q[T].

Coefficients are int-encoded field elements (see gf), stored little-endian
with no trailing zeros, so the zero polynomial has an empty tuple and its
degree is the sentinel NEG_INF rather than an integer.

Text form, both for parsing and canonical output:

    poly  := term ('+' term)*
    term  := coeff | coeff '*' mono | mono
    mono  := 'T' ('^' uint)?
    coeff := uint | '(' upoly ')' | umono

where upoly is the same grammar over the extension generator u with plain
integer coefficients and no parentheses.  Whitespace is ignored and integer
coefficients are taken mod p.  Canonical output lists terms by descending
power, '+'-separated, elides unit coefficients, and parenthesizes extension
coefficients ("T^3+2*T", "(u+1)*T+(u)").

Prime-field multiplication and division switch to numpy (exact int64
arithmetic) once the polynomials are large enough to pay for it.
"""

from __future__ import annotations

import numpy as np

from .gf import Field

NEG_INF = float("-inf")  # degree of the zero polynomial

_NP_MIN_LEN = 32  # below this, schoolbook beats numpy's fixed overhead


class Poly:
    """An element of F_q[T]."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs=()):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        for c in cs:
            if not 0 <= c < field.q:
                raise ValueError(f"coefficient {c} is not an element encoding of F_{field.q}")
        self.field = field
        self.coeffs = tuple(cs)

    @staticmethod
    def _mk(field, trimmed) -> "Poly":
        # Internal constructor for already-normalized coefficient tuples.
        p = object.__new__(Poly)
        p.field = field
        p.coeffs = trimmed
        return p

    # -- constructors --------------------------------------------------

    @classmethod
    def zero(cls, field):
        return cls._mk(field, ())

    @classmethod
    def one(cls, field):
        return cls._mk(field, (1,))

    @classmethod
    def gen(cls, field):
        """The variable T."""
        return cls._mk(field, (0, 1))

    @classmethod
    def constant(cls, field, c):
        field._check(c)
        return cls._mk(field, (c,) if c else ())

    @classmethod
    def monomial(cls, field, k, c=1):
        """c * T^k."""
        field._check(c)
        if c == 0:
            return cls.zero(field)
        return cls._mk(field, (0,) * k + (c,))

    # -- basic structure -------------------------------------------------

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def lead(self):
        if not self.coeffs:
            raise ValueError("the zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def coeff(self, k):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def is_monic(self):
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __eq__(self, other):
        return (
            isinstance(other, Poly)
            and self.field == other.field
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def _same_ring(self, other):
        if not isinstance(other, Poly):
            raise TypeError(f"expected Poly, got {type(other).__name__}")
        if self.field != other.field:
            raise ValueError("polynomials lie over different fields")

    # -- ring operations ---------------------------------------------------

    def __add__(self, other):
        self._same_ring(other)
        f = self.field
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        if f.s == 1:
            p = f.p
            for i, c in enumerate(b):
                out[i] = (out[i] + c) % p
        else:
            for i, c in enumerate(b):
                out[i] = f.add(out[i], c)
        while out and out[-1] == 0:
            out.pop()
        return Poly._mk(f, tuple(out))

    def __neg__(self):
        f = self.field
        return Poly._mk(f, tuple(f.neg(c) for c in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        """Multiply by the field element c."""
        f = self.field
        f._check(c)
        if c == 0:
            return Poly.zero(f)
        if c == 1:
            return self
        if f.s == 1:
            p = f.p
            return Poly._mk(f, tuple(x * c % p for x in self.coeffs))
        return Poly._mk(f, tuple(f.mul(x, c) for x in self.coeffs))

    def shift(self, k):
        """Multiply by T^k."""
        if not self.coeffs:
            return self
        return Poly._mk(self.field, (0,) * k + self.coeffs)

    def __mul__(self, other):
        self._same_ring(other)
        f = self.field
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly.zero(f)
        if f.s == 1:
            p = f.p
            la, lb = len(a), len(b)
            if (
                min(la, lb) >= _NP_MIN_LEN
                and min(la, lb) * (p - 1) * (p - 1) < 2**62
            ):
                conv = np.convolve(
                    np.array(a, dtype=np.int64), np.array(b, dtype=np.int64)
                )
                conv %= p
                return Poly._mk(f, tuple(int(c) for c in conv))
            out = [0] * (la + lb - 1)
            for i, x in enumerate(a):
                if x:
                    for j, y in enumerate(b):
                        out[i + j] += x * y
            return Poly._mk(f, tuple(c % p for c in out))
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        out[i + j] = f.add(out[i + j], f.mul(x, y))
        while out and out[-1] == 0:
            out.pop()
        return Poly._mk(f, tuple(out))

    def __pow__(self, e):
        if e < 0:
            raise ValueError("negative polynomial powers are not defined in A")
        result = Poly.one(self.field)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __divmod__(self, other):
        self._same_ring(other)
        f = self.field
        if not other.coeffs:
            raise ZeroDivisionError("polynomial division by zero")
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            return Poly.zero(f), self
        if f.s == 1:
            return self._divmod_prime(other)
        db = len(b) - 1
        binv = f.inv(b[-1])
        r = list(a)
        qcoeffs = [0] * (len(a) - db)
        for k in range(len(a) - 1 - db, -1, -1):
            c = r[k + db]
            if c:
                qc = f.mul(c, binv)
                qcoeffs[k] = qc
                for j in range(db + 1):
                    if b[j]:
                        r[k + j] = f.sub(r[k + j], f.mul(qc, b[j]))
        rem = r[:db]
        while rem and rem[-1] == 0:
            rem.pop()
        while qcoeffs and qcoeffs[-1] == 0:
            qcoeffs.pop()
        return Poly._mk(f, tuple(qcoeffs)), Poly._mk(f, tuple(rem))

    def _divmod_prime(self, other):
        # Long division over F_p on int64 arrays, reducing mod p lazily.
        f = self.field
        p = f.p
        a, b = self.coeffs, other.coeffs
        db = len(b) - 1
        if db == 0:
            return self.scale(f.inv(b[0])), Poly.zero(f)
        lazy_ok = (db + 2) * (p - 1) * (p - 1) < 2**62
        r = np.array(a, dtype=np.int64)
        barr = np.array(b[:-1], dtype=np.int64)
        binv = pow(b[-1], p - 2, p)
        nq = len(a) - db
        qcoeffs = [0] * nq
        for k in range(nq - 1, -1, -1):
            c = int(r[k + db]) % p
            if c:
                qc = c * binv % p
                qcoeffs[k] = qc
                r[k : k + db] -= qc * barr
                if not lazy_ok:
                    r[k : k + db] %= p
        rem = [int(c) % p for c in r[:db]]
        while rem and rem[-1] == 0:
            rem.pop()
        while qcoeffs and qcoeffs[-1] == 0:
            qcoeffs.pop()
        return Poly._mk(f, tuple(qcoeffs)), Poly._mk(f, tuple(rem))

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self):
        if not self.coeffs:
            return self
        return self.scale(self.field.inv(self.coeffs[-1]))

    # -- text ----------------------------------------------------------

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"Poly({self.field!r}, {format_poly(self)!r})"

    @classmethod
    def parse(cls, text, field):
        return parse_poly(text, field)


# -- gcd family ------------------------------------------------------------


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd; gcd(0, 0) is an error."""
    a._same_ring(b)
    if not a and not b:
        raise ValueError("gcd(0, 0) is undefined")
    while b:
        a, b = b, a % b
    return a.monic()


def poly_xgcd(a: Poly, b: Poly):
    """(g, x, y) with g = gcd monic and x*a + y*b = g."""
    a._same_ring(b)
    if not a and not b:
        raise ValueError("gcd(0, 0) is undefined")
    f = a.field
    r0, r1 = a, b
    x0, x1 = Poly.one(f), Poly.zero(f)
    y0, y1 = Poly.zero(f), Poly.one(f)
    while r1:
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    c = f.inv(r0.lead)
    return r0.scale(c), x0.scale(c), y0.scale(c)


def poly_powmod(base: Poly, e: int, mod: Poly) -> Poly:
    """base^e mod `mod` by square-and-multiply; e must be >= 0."""
    if e < 0:
        raise ValueError("powmod exponent must be nonnegative")
    base._same_ring(mod)
    if not mod:
        raise ZeroDivisionError("powmod modulus is zero")
    result = Poly.one(base.field) % mod
    base = base % mod
    while e:
        if e & 1:
            result = result * base % mod
        base = base * base % mod
        e >>= 1
    return result


# -- irreducibility ----------------------------------------------------------


def _small_prime_factors(d):
    out = []
    ell = 2
    while ell * ell <= d:
        if d % ell == 0:
            out.append(ell)
            while d % ell == 0:
                d //= ell
        ell += 1
    if d > 1:
        out.append(d)
    return out


def is_irreducible(f: Poly) -> bool:
    """Rabin's test: f is irreducible over F_q iff T^(q^d) = T mod f and
    gcd(T^(q^(d/l)) - T, f) = 1 for every prime l dividing d = deg f."""
    if f.degree == NEG_INF or f.degree < 1:
        raise ValueError("irreducibility is only defined for degree >= 1")
    f = f.monic()
    d = f.degree
    q = f.field.q
    t = Poly.gen(f.field)
    if poly_powmod(t, q**d, f) != t % f:
        return False
    for ell in _small_prime_factors(d):
        g = poly_gcd(poly_powmod(t, q ** (d // ell), f) - t, f)
        if g.degree != 0:
            return False
    return True


def find_irreducible(h: int, field: Field) -> Poly:
    """The first monic irreducible of degree h, taking the coefficient tuple
    (c_0, ..., c_{h-1}) ascending in the canonical integer encoding."""
    if h < 1:
        raise ValueError(f"degree must be >= 1, got {h}")
    q = field.q
    for e in range(q**h):
        coeffs = []
        v = e
        for _ in range(h):
            coeffs.append(v % q)
            v //= q
        coeffs.append(1)
        cand = Poly._mk(field, tuple(coeffs))
        if is_irreducible(cand):
            return cand
    raise ArithmeticError(f"no monic irreducible of degree {h} over F_{q}")  # unreachable


# -- parsing / formatting ---------------------------------------------------


class ParseError(ValueError):
    pass


def _tokenize(text):
    toks = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            toks.append(("int", int(text[i:j])))
            i = j
            continue
        if ch in "Tu^*+()":
            toks.append((ch, ch))
            i += 1
            continue
        raise ParseError(f"unexpected character {ch!r} in polynomial text")
    return toks


class _Parser:
    def __init__(self, toks, field, var):
        self.toks = toks
        self.i = 0
        self.field = field
        self.var = var  # 'T' for ring polynomials, 'u' for modulus text

    def peek(self):
        return self.toks[self.i][0] if self.i < len(self.toks) else None

    def take(self, kind=None):
        if self.i >= len(self.toks):
            raise ParseError("unexpected end of polynomial text")
        tok = self.toks[self.i]
        if kind is not None and tok[0] != kind:
            raise ParseError(f"expected {kind!r}, found {tok[1]!r}")
        self.i += 1
        return tok

    def parse(self):
        acc = {}
        while True:
            k, c = self.term()
            if c:
                f = self.field
                acc[k] = f.add(acc.get(k, 0), c)
            if self.peek() != "+":
                break
            self.take("+")
        if self.i != len(self.toks):
            raise ParseError(f"trailing input at {self.toks[self.i][1]!r}")
        if not acc:
            return Poly.zero(self.field)
        deg = max(acc)
        return Poly(self.field, [acc.get(k, 0) for k in range(deg + 1)])

    def term(self):
        """One term; returns (power of the main variable, coefficient encoding)."""
        kind = self.peek()
        if kind is None:
            raise ParseError("empty term")
        if kind == self.var:
            return self.mono(), 1
        coeff = self.coefficient()
        if self.peek() == "*":
            self.take("*")
            return self.mono(), coeff
        return 0, coeff

    def mono(self):
        self.take(self.var)
        if self.peek() == "^":
            self.take("^")
            return self.take("int")[1]
        return 1

    def coefficient(self):
        kind = self.peek()
        f = self.field
        if kind == "int":
            # Plain integers embed as F_p values in any F_q.
            return self.take()[1] % f.p
        if self.var == "u":
            raise ParseError(f"expected an integer coefficient, found {kind!r}")
        if kind == "u":
            return self.u_mono()
        if kind == "(":
            self.take("(")
            val = self.u_poly()
            self.take(")")
            return val
        raise ParseError(f"expected a coefficient, found {kind!r}")

    def u_mono(self):
        f = self.field
        if f.s == 1:
            raise ParseError(f"coefficient outside field: 'u' is not an element of F_{f.p}")
        self.take("u")
        k = 1
        if self.peek() == "^":
            self.take("^")
            k = self.take("int")[1]
        return f.pow(f.from_coords((0, 1)), k)

    def u_poly(self):
        f = self.field
        acc = 0
        while True:
            kind = self.peek()
            if kind == "int":
                c = self.take()[1] % f.p
                if self.peek() == "*":
                    self.take("*")
                    acc = f.add(acc, f.mul(c, self.u_mono()))
                else:
                    acc = f.add(acc, c)
            elif kind == "u":
                acc = f.add(acc, self.u_mono())
            else:
                raise ParseError(f"expected a u-term, found {kind!r}")
            if self.peek() != "+":
                return acc
            self.take("+")


def parse_poly(text: str, field: Field) -> Poly:
    """Parse ring-polynomial text over the given field."""
    return _Parser(_tokenize(text), field, "T").parse()


def parse_upoly(text: str, p: int) -> tuple:
    """Parse extension-modulus text like 'u^2+u+1' into F_p coefficients
    (little-endian, including the leading one)."""
    poly = _Parser(_tokenize(text), Field(p), "u").parse()
    return poly.coeffs


def format_poly(poly: Poly) -> str:
    f = poly.field
    if not poly.coeffs:
        return "0"
    terms = []
    for k in range(len(poly.coeffs) - 1, -1, -1):
        c = poly.coeffs[k]
        if not c:
            continue
        if c < f.p:
            ctext = str(c)
        else:
            ctext = f"({f.element_str(c)})"
        if k == 0:
            terms.append(ctext)
        else:
            mono = "T" if k == 1 else f"T^{k}"
            terms.append(mono if c == 1 else f"{ctext}*{mono}")
    return "+".join(terms)
