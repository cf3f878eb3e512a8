"""Exact scalar arithmetic over Q, cyclotomic fields Q(zeta_n), and prime fields F_p.

All values are exact: rationals are Fractions in lowest terms, cyclotomic
elements are coefficient vectors reduced modulo the n-th cyclotomic
polynomial (power basis 1, z, ..., z^(phi(n)-1)), prime-field elements are
residues in [0, p).  No floating point enters anywhere.

A FieldCtx pins the field; a Scalar pairs a context with a canonical value.
Mixing scalars from different contexts raises MixedContextError rather than
coercing silently.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from math import gcd

DEFAULT_MAX_CYCLOTOMIC = 64
DEFAULT_MAX_PRIME = 97

RATIONALS = "rationals"
CYCLOTOMIC = "cyclotomic"
PRIME = "prime"


class MixedContextError(ValueError):
    """Raised when an operation mixes scalars from different field contexts."""


# ---------------------------------------------------------------------------
# dense polynomial helpers over Fraction, coefficients low degree first


def _poly_trim(c: list) -> list:
    while c and not c[-1]:
        c.pop()
    return c


def _poly_mul(a: list, b: list) -> list:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] += ai * bj
    return _poly_trim(out)


def _poly_divmod(num: list, den: list) -> tuple[list, list]:
    num = list(num)
    assert den, "division by zero polynomial"
    q = [Fraction(0)] * max(0, len(num) - len(den) + 1)
    lead = den[-1]
    for k in range(len(num) - len(den), -1, -1):
        coef = num[k + len(den) - 1] / lead
        if coef:
            q[k] = coef
            for i, di in enumerate(den):
                num[k + i] -= coef * di
    return _poly_trim(q), _poly_trim(num)


def _poly_sub(a: list, b: list) -> list:
    n = max(len(a), len(b))
    out = [(a[i] if i < len(a) else Fraction(0)) - (b[i] if i < len(b) else Fraction(0))
           for i in range(n)]
    return _poly_trim(out)


def _poly_ext_gcd(a: list, b: list) -> tuple[list, list]:
    """Return (g, u) with u*a = g (mod b) and g the monic gcd of a, b."""
    r0, r1 = list(a), list(b)
    u0, u1 = [Fraction(1)], []
    while r1:
        q, r = _poly_divmod(r0, r1)
        r0, r1 = r1, r
        u0, u1 = u1, _poly_sub(u0, _poly_mul(q, u1))
    if not r0:
        raise ZeroDivisionError("polynomial gcd of zero inputs")
    lead = r0[-1]
    return [c / lead for c in r0], [c / lead for c in u0]


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients of Phi_n (low degree first), via (x^n - 1) / prod of Phi_d."""
    assert n >= 1
    num = [Fraction(-1)] + [Fraction(0)] * (n - 1) + [Fraction(1)]
    den = [Fraction(1)]
    for d in range(1, n):
        if n % d == 0:
            den = _poly_mul(den, [Fraction(c) for c in cyclotomic_polynomial(d)])
    q, r = _poly_divmod(num, den)
    assert not r, "cyclotomic division must be exact"
    assert all(c.denominator == 1 for c in q)
    return tuple(c.numerator for c in q)


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


class FieldCtx:
    """One of Q, Q(zeta_n), or F_p, with the data needed to canonicalize elements."""

    __slots__ = ("kind", "n", "p", "degree", "modulus", "_xpow", "_roots")

    def __init__(self, kind: str, n: int = 0, p: int = 0,
                 max_n: int = DEFAULT_MAX_CYCLOTOMIC, max_p: int = DEFAULT_MAX_PRIME):
        self.kind = kind
        self.n = n
        self.p = p
        self._roots: dict[int, "Scalar"] = {}
        if kind == RATIONALS:
            self.degree = 1
            self.modulus = ()
            self._xpow = ()
        elif kind == CYCLOTOMIC:
            if not 1 <= n <= max_n:
                raise ValueError(f"cyclotomic order n={n} outside supported range 1..{max_n}")
            self.modulus = cyclotomic_polynomial(n)
            self.degree = len(self.modulus) - 1
            self._xpow = self._build_xpow()
        elif kind == PRIME:
            if not is_prime(p):
                raise ValueError(f"p={p} is not prime")
            if p > max_p:
                raise ValueError(f"prime p={p} above supported bound {max_p}")
            self.degree = 1
            self.modulus = ()
            self._xpow = ()
        else:
            raise ValueError(f"unknown field kind {kind!r}")

    # -- constructors

    @classmethod
    def rationals(cls) -> "FieldCtx":
        return cls(RATIONALS)

    @classmethod
    def cyclotomic(cls, n: int, max_n: int = DEFAULT_MAX_CYCLOTOMIC) -> "FieldCtx":
        return cls(CYCLOTOMIC, n=n, max_n=max_n)

    @classmethod
    def prime(cls, p: int, max_p: int = DEFAULT_MAX_PRIME) -> "FieldCtx":
        return cls(PRIME, p=p, max_p=max_p)

    def _build_xpow(self):
        # x^k reduced mod Phi_n for k = 0 .. 2*(degree-1); products of reduced
        # elements never need more
        d = self.degree
        neg_top = [Fraction(-c) for c in self.modulus[:d]]
        rows = [[Fraction(0)] * d for _ in range(2 * d - 1)]
        rows[0][0] = Fraction(1)
        for k in range(1, 2 * d - 1):
            prev = rows[k - 1]
            row = [Fraction(0)] + prev[: d - 1]
            top = prev[d - 1]
            if top:
                for i in range(d):
                    row[i] += top * neg_top[i]
            rows[k] = row
        return tuple(tuple(r) for r in rows)

    def _reduce(self, coeffs: list) -> tuple:
        d = self.degree
        assert len(coeffs) <= 2 * d - 1
        out = list(coeffs[:d]) + [Fraction(0)] * max(0, d - len(coeffs))
        for k in range(d, len(coeffs)):
            c = coeffs[k]
            if c:
                row = self._xpow[k]
                for i in range(d):
                    out[i] += c * row[i]
        return tuple(out)

    # -- element construction

    def from_fraction(self, fr) -> "Scalar":
        fr = Fraction(fr)
        if self.kind == RATIONALS:
            return Scalar(self, fr)
        if self.kind == CYCLOTOMIC:
            return Scalar(self, (fr,) + (Fraction(0),) * (self.degree - 1))
        if fr.denominator % self.p == 0:
            raise ZeroDivisionError(f"denominator divisible by p={self.p}")
        return Scalar(self, fr.numerator * pow(fr.denominator, -1, self.p) % self.p)

    def from_int(self, k: int) -> "Scalar":
        return self.from_fraction(Fraction(k))

    def from_str(self, s: str) -> "Scalar":
        return self.from_fraction(Fraction(s.strip()))

    @property
    def zero(self) -> "Scalar":
        return self.from_int(0)

    @property
    def one(self) -> "Scalar":
        return self.from_int(1)

    @property
    def zeta(self) -> "Scalar":
        """The designated generator zeta_n of a cyclotomic context."""
        assert self.kind == CYCLOTOMIC
        if self.degree == 1:
            # Q(zeta_1) and Q(zeta_2): the power basis is just the constants
            return self.from_int(1 if self.n == 1 else -1)
        return Scalar(self, self._reduce([Fraction(0), Fraction(1)]))

    def root_of_unity(self, n: int) -> "Scalar":
        """An element of multiplicative order exactly n, or ValueError."""
        if n in self._roots:
            return self._roots[n]
        if n < 1:
            raise ValueError("order must be positive")
        if self.kind == RATIONALS:
            if n == 1:
                z = self.one
            elif n == 2:
                z = self.from_int(-1)
            else:
                raise ValueError(f"Q contains no root of unity of order {n}")
        elif self.kind == CYCLOTOMIC:
            if self.n % n != 0:
                raise ValueError(f"Q(zeta_{self.n}) has no designated root of order {n}"
                                 f" (n must divide {self.n})")
            z = self.zeta ** (self.n // n)
        else:
            if (self.p - 1) % n != 0:
                raise ValueError(f"F_{self.p} has no element of order {n}"
                                 f" ({n} does not divide p-1={self.p - 1})")
            z = None
            for cand in range(1, self.p):
                s = Scalar(self, cand)
                if multiplicative_order(s, n) == n:
                    z = s
                    break
            assert z is not None
        self._roots[n] = z
        return z

    # -- identity / serialization

    def __eq__(self, other):
        return (isinstance(other, FieldCtx)
                and (self.kind, self.n, self.p) == (other.kind, other.n, other.p))

    def __hash__(self):
        return hash((self.kind, self.n, self.p))

    def __repr__(self):
        if self.kind == RATIONALS:
            return "FieldCtx(Q)"
        if self.kind == CYCLOTOMIC:
            return f"FieldCtx(Q(z{self.n}))"
        return f"FieldCtx(F{self.p})"

    def name(self) -> str:
        if self.kind == RATIONALS:
            return "Q"
        if self.kind == CYCLOTOMIC:
            return f"Q(z{self.n})"
        return f"F{self.p}"

    def to_json(self):
        return self.name()


def parse_field(name: str, max_n: int = DEFAULT_MAX_CYCLOTOMIC,
                max_p: int = DEFAULT_MAX_PRIME) -> FieldCtx:
    """Parse field names: "Q", "Q(zN)" (also "QzN"), "Fp"."""
    s = name.strip()
    if s in ("Q", "q"):
        return FieldCtx.rationals()
    low = s.lower().replace(" ", "")
    if low.startswith("q(z") and low.endswith(")"):
        body = low[3:-1]
    elif low.startswith("qz"):
        body = low[2:]
    elif low.startswith("f"):
        try:
            p = int(low[1:])
        except ValueError:
            raise ValueError(f"cannot parse field name {name!r}")
        return FieldCtx.prime(p, max_p=max_p)
    else:
        raise ValueError(f"cannot parse field name {name!r}")
    try:
        n = int(body)
    except ValueError:
        raise ValueError(f"cannot parse field name {name!r}")
    return FieldCtx.cyclotomic(n, max_n=max_n)


class Scalar:
    """Immutable field element tied to a FieldCtx.

    val is a Fraction (rationals), a tuple of Fractions in the power basis
    (cyclotomic), or an int residue (prime).
    """

    __slots__ = ("ctx", "val")

    def __init__(self, ctx: FieldCtx, val):
        self.ctx = ctx
        self.val = val

    def _coerce(self, other) -> "Scalar":
        if isinstance(other, Scalar):
            if other.ctx != self.ctx:
                raise MixedContextError(
                    f"cannot combine scalars from {self.ctx.name()} and {other.ctx.name()}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ctx.from_fraction(Fraction(other))
        raise TypeError(f"cannot combine Scalar with {type(other).__name__}")

    # -- ring operations

    def __add__(self, other):
        o = self._coerce(other)
        k = self.ctx.kind
        if k == RATIONALS:
            return Scalar(self.ctx, self.val + o.val)
        if k == PRIME:
            return Scalar(self.ctx, (self.val + o.val) % self.ctx.p)
        return Scalar(self.ctx, tuple(a + b for a, b in zip(self.val, o.val)))

    __radd__ = __add__

    def __neg__(self):
        k = self.ctx.kind
        if k == RATIONALS:
            return Scalar(self.ctx, -self.val)
        if k == PRIME:
            return Scalar(self.ctx, (-self.val) % self.ctx.p)
        return Scalar(self.ctx, tuple(-a for a in self.val))

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        o = self._coerce(other)
        ctx = self.ctx
        k = ctx.kind
        if k == RATIONALS:
            return Scalar(ctx, self.val * o.val)
        if k == PRIME:
            return Scalar(ctx, (self.val * o.val) % ctx.p)
        a, b = self.val, o.val
        d = ctx.degree
        conv = [Fraction(0)] * (2 * d - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        conv[i + j] += ai * bj
        return Scalar(ctx, ctx._reduce(conv))

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        ctx = self.ctx
        k = ctx.kind
        if self.is_zero:
            raise ZeroDivisionError("scalar inverse of zero")
        if k == RATIONALS:
            return Scalar(ctx, 1 / self.val)
        if k == PRIME:
            return Scalar(ctx, pow(self.val, -1, ctx.p))
        g, u = _poly_ext_gcd(_poly_trim(list(self.val)),
                             [Fraction(c) for c in ctx.modulus])
        assert len(g) == 1, "cyclotomic modulus is irreducible over Q"
        inv = [c / g[0] for c in u]
        return Scalar(ctx, ctx._reduce(inv))

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, k: int) -> "Scalar":
        if k < 0:
            return self.inverse() ** (-k)
        out = self.ctx.one
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- predicates

    @property
    def is_zero(self) -> bool:
        if self.ctx.kind == CYCLOTOMIC:
            return not any(self.val)
        return not self.val

    def __bool__(self):
        return not self.is_zero

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ctx.from_fraction(Fraction(other))
        if not isinstance(other, Scalar):
            return NotImplemented
        if other.ctx != self.ctx:
            raise MixedContextError(
                f"cannot compare scalars from {self.ctx.name()} and {other.ctx.name()}")
        return self.val == other.val

    def __hash__(self):
        return hash((self.ctx, self.val))

    # -- display

    def __repr__(self):
        return f"Scalar({self})"

    def __str__(self):
        k = self.ctx.kind
        if k == RATIONALS:
            return str(self.val)
        if k == PRIME:
            return str(self.val)
        var = f"z{self.ctx.n}"
        terms = []
        for i, c in enumerate(self.val):
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
                continue
            mon = var if i == 1 else f"{var}^{i}"
            if c == 1:
                terms.append(mon)
            elif c == -1:
                terms.append(f"-{mon}")
            else:
                terms.append(f"{c}*{mon}")
        if not terms:
            return "0"
        out = terms[0]
        for t in terms[1:]:
            out += f" - {t[1:]}" if t.startswith("-") else f" + {t}"
        return out

    # -- serialization

    def to_json(self):
        k = self.ctx.kind
        if k == RATIONALS:
            return str(self.val)
        if k == PRIME:
            return {"p": self.ctx.p, "value": self.val}
        return {"n": self.ctx.n, "coeffs": [str(c) for c in self.val]}


def scalar_from_json(obj, ctx: FieldCtx) -> Scalar:
    if isinstance(obj, str):
        # rational literals embed into any of the three field kinds
        return ctx.from_str(obj)
    if isinstance(obj, (int,)):
        return ctx.from_int(obj)
    if not isinstance(obj, dict):
        raise ValueError(f"cannot parse scalar {obj!r}")
    if "coeffs" in obj:
        if ctx.kind != CYCLOTOMIC or ctx.n != obj.get("n"):
            raise MixedContextError(f"cyclotomic scalar of order {obj.get('n')} "
                                    f"does not live in {ctx.name()}")
        coeffs = [Fraction(s) for s in obj["coeffs"]]
        if len(coeffs) > ctx.degree:
            raise ValueError("cyclotomic coefficient vector longer than field degree")
        coeffs += [Fraction(0)] * (ctx.degree - len(coeffs))
        return Scalar(ctx, tuple(coeffs))
    if "value" in obj:
        if ctx.kind != PRIME or ctx.p != obj.get("p"):
            raise MixedContextError(f"prime-field scalar mod {obj.get('p')} "
                                    f"does not live in {ctx.name()}")
        return Scalar(ctx, int(obj["value"]) % ctx.p)
    raise ValueError(f"cannot parse scalar {obj!r}")


def _parse_term(body: str, ctx: FieldCtx) -> Scalar:
    if "z" not in body.lower():
        return ctx.from_str(body)
    coef_str, _, mono = body.rpartition("*")
    coef = ctx.from_str(coef_str) if coef_str else ctx.one
    mono = mono.lower()
    assert mono.startswith("z")
    nstr, _, kstr = mono[1:].partition("^")
    z = ctx.root_of_unity(int(nstr))
    return coef * (z ** int(kstr) if kstr else z)


def parse_scalar(text: str, ctx: FieldCtx) -> Scalar:
    """Parse a scalar from command-line text or a printed witness.

    Accepts sums of terms like "-1", "2/3", "z6^2", "1/3*z6" in any field
    where the named root exists; a bare residue in a prime field.
    """
    s = text.strip().replace(" ", "")
    if not s:
        raise ValueError("empty scalar")
    terms = re.findall(r"[+-]?[^+-]+", s)
    if "".join(terms) != s:
        raise ValueError(f"cannot parse scalar {text!r}")
    out = ctx.zero
    for term in terms:
        sign = ctx.one
        if term[0] in "+-":
            if term[0] == "-":
                sign = -ctx.one
            term = term[1:]
        out = out + sign * _parse_term(term, ctx)
    return out


def arith(kind: str, a: Scalar, b: Scalar) -> Scalar:
    """Dispatch one arithmetic step by name: add, sub, mul, div."""
    if kind == "add":
        return a + b
    if kind == "sub":
        return a - b
    if kind == "mul":
        return a * b
    if kind == "div":
        return a / b
    raise ValueError(f"unknown operation {kind!r}")


def multiplicative_order(z: Scalar, bound: int) -> int | None:
    """Order of z in the multiplicative group, or None if it exceeds bound."""
    if z.is_zero:
        raise ValueError("zero has no multiplicative order")
    acc = z.ctx.one
    for j in range(1, bound + 1):
        acc = acc * z
        if acc == z.ctx.one:
            return j
    return None


def is_primitive_root(z: Scalar, m: int) -> bool:
    """True when z has multiplicative order exactly m."""
    assert m >= 1
    return multiplicative_order(z, m) == m


def zeta_power(ctx: FieldCtx, n: int, k: int = 1) -> Scalar:
    """k-th power of the designated order-n root of unity in ctx."""
    z = ctx.root_of_unity(n)
    return z ** (k % n)
