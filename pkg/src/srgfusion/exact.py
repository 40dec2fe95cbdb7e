"""Exact arithmetic: rationals, quadratic irrationals, sparse polynomials.

Everything in this package computes exactly, with no floating point.
Rational scalars are stdlib ``Fraction``.  Conference graphs have irrational
eigenvalues living in a real quadratic field, represented componentwise as
``a + b*sqrt(d)`` with squarefree ``d``; a value collapses back to a plain
``Fraction`` whenever its irrational part vanishes, so equality and hashing
are uniform across the two scalar kinds.

Symbolic work uses sparse multivariate polynomials over Q in a fixed,
closed symbol universe::

    k   valency of the graph
    l   valency of the complement, n - k - 1
    r   larger nontrivial eigenvalue
    s   smaller nontrivial eigenvalue
    m   clique-count parameter of the imprimitive family

The module also hosts the nonvanishing sieve: an ordered list of
polynomials, each strictly signed on the primitive parameter region
(k > r > 0, s < -1, l > -1 - s, for which also k + r*s > 0), together with
trial division that certifies a polynomial nonzero on that region by
writing it as a scaled product of sieve members.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

SYMBOLS = ("k", "l", "r", "s", "m")
_SYM_INDEX = {name: i for i, name in enumerate(SYMBOLS)}
_NVARS = len(SYMBOLS)

Rat = Fraction  # the package's rational scalar type


class MissingSymbol(KeyError):
    """A polynomial symbol has no assigned value or substitute."""


class MixedField(ArithmeticError):
    """Arithmetic attempted between values of two distinct quadratic fields."""


class ZeroInput(ValueError):
    """The zero polynomial was passed where a nonzero one is required."""


# ---------------------------------------------------------------------------
# quadratic irrationals
# ---------------------------------------------------------------------------

def _squarefree_split(d: int) -> tuple[int, int]:
    """Return (c, d0) with d = c**2 * d0 and d0 squarefree."""
    if d <= 0:
        raise ValueError(f"radicand must be positive, got {d}")
    c, d0, p = 1, 1, 2
    n = d
    while p * p <= n:
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        c *= p ** (e // 2)
        if e % 2:
            d0 *= p
        p += 1 if p == 2 else 2
    return c, d0 * n


def quad(a, b=0, d: int = 0):
    """Build ``a + b*sqrt(d)`` exactly, collapsing to Fraction when rational.

    ``d`` is normalized squarefree; a perfect-square radicand folds into the
    rational part.
    """
    a = Fraction(a)
    b = Fraction(b)
    if b == 0:
        return a
    c, d0 = _squarefree_split(d)
    b = b * c
    if d0 == 1:
        return a + b
    return QuadraticValue(a, b, d0)


class QuadraticValue:
    """Exact element a + b*sqrt(d) of a real quadratic field, b != 0.

    Values with b == 0 are never constructed; ``quad`` returns a Fraction
    instead, so plain rationals and quadratic values mix freely.
    """

    __slots__ = ("a", "b", "d")

    def __init__(self, a: Fraction, b: Fraction, d: int):
        object.__setattr__(self, "a", Fraction(a))
        object.__setattr__(self, "b", Fraction(b))
        object.__setattr__(self, "d", int(d))

    def __setattr__(self, *args):
        raise AttributeError("QuadraticValue is immutable")

    def _coerce(self, other) -> tuple[Fraction, Fraction]:
        if isinstance(other, QuadraticValue):
            if other.d != self.d:
                raise MixedField(f"sqrt({self.d}) and sqrt({other.d}) do not mix")
            return other.a, other.b
        if isinstance(other, (int, Fraction)):
            return Fraction(other), Fraction(0)
        return NotImplemented, None

    def __add__(self, other):
        oa, ob = self._coerce(other)
        if oa is NotImplemented:
            return NotImplemented
        return quad(self.a + oa, self.b + ob, self.d)

    __radd__ = __add__

    def __neg__(self):
        return QuadraticValue(-self.a, -self.b, self.d)

    def __sub__(self, other):
        return self + (-other if isinstance(other, QuadraticValue) else -Fraction(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        oa, ob = self._coerce(other)
        if oa is NotImplemented:
            return NotImplemented
        return quad(self.a * oa + self.b * ob * self.d, self.a * ob + self.b * oa, self.d)

    __rmul__ = __mul__

    def conjugate(self) -> "QuadraticValue":
        return QuadraticValue(self.a, -self.b, self.d)

    def norm(self) -> Fraction:
        return self.a * self.a - self.b * self.b * self.d

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError
            return quad(self.a / other, self.b / other, self.d)
        oa, ob = self._coerce(other)
        if oa is NotImplemented:
            return NotImplemented
        n = oa * oa - ob * ob * other.d
        if n == 0:
            raise ZeroDivisionError
        return self * QuadraticValue(oa / n, -ob / n, other.d)

    def __rtruediv__(self, other):
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError
        return QuadraticValue(self.a / n, -self.b / n, self.d) * other

    def __pow__(self, e: int):
        if e < 0:
            return 1 / (self ** (-e))
        out = Fraction(1)
        base = self
        while e:
            if e & 1:
                out = base * out
            base = base * base
            e >>= 1
        return out

    def sign(self) -> int:
        """Exact sign of a + b*sqrt(d)."""
        a, b = self.a, self.b
        if a == 0:
            return 1 if b > 0 else -1
        if a > 0 and b > 0:
            return 1
        if a < 0 and b < 0:
            return -1
        # opposite signs: compare a^2 against b^2 d
        lhs, rhs = a * a, b * b * self.d
        if a > 0:  # b < 0
            return 1 if lhs > rhs else -1 if lhs < rhs else 0
        return 1 if rhs > lhs else -1 if rhs < lhs else 0

    def _cmp(self, other) -> int:
        diff = self - other
        if isinstance(diff, Fraction):
            return (diff > 0) - (diff < 0)
        return diff.sign()

    def __eq__(self, other):
        if isinstance(other, QuadraticValue):
            return self.d == other.d and self.a == other.a and self.b == other.b
        if isinstance(other, (int, Fraction)):
            return False  # b != 0 by construction
        return NotImplemented

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    def __hash__(self):
        return hash((self.a, self.b, self.d))

    def __repr__(self):
        return f"quad({self.a!r}, {self.b!r}, {self.d})"

    def __str__(self):
        return f"({self.a}{'+' if self.b >= 0 else ''}{self.b}*sqrt({self.d}))"

    def to_json(self) -> dict:
        return {"a": str(self.a), "b": str(self.b), "d": self.d}


def value_to_json(v):
    """JSON form of an exact scalar: int, 'p/q' string, or quadratic dict."""
    if isinstance(v, QuadraticValue):
        return v.to_json()
    f = Fraction(v)
    return int(f) if f.denominator == 1 else str(f)


def value_from_json(obj):
    if isinstance(obj, dict):
        return quad(Fraction(obj["a"]), Fraction(obj["b"]), obj["d"])
    return Fraction(obj)


# ---------------------------------------------------------------------------
# sparse multivariate polynomials
# ---------------------------------------------------------------------------

def _monomial_key(exps: tuple[int, ...]) -> tuple:
    # graded lexicographic, k > l > r > s > m
    return (sum(exps), exps)


class MultiPoly:
    """Sparse polynomial over Q in the fixed symbols k, l, r, s, m.

    Terms map exponent 5-tuples to nonzero Fraction coefficients; the zero
    polynomial has no terms.  Instances are immutable and hashable, with
    terms kept sorted in graded-lex order (largest first).
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[tuple[int, ...], Fraction] | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[tuple[int, ...], Fraction] = {}
        for exps, coeff in items:
            exps = tuple(exps)
            if len(exps) != _NVARS or any(e < 0 for e in exps):
                raise ValueError(f"bad exponent vector {exps}")
            coeff = Fraction(coeff)
            if coeff:
                c = acc.get(exps, Fraction(0)) + coeff
                if c:
                    acc[exps] = c
                else:
                    acc.pop(exps, None)
        object.__setattr__(
            self,
            "_terms",
            tuple(sorted(acc.items(), key=lambda t: _monomial_key(t[0]), reverse=True)),
        )

    def __setattr__(self, *args):
        raise AttributeError("MultiPoly is immutable")

    # -- constructors -------------------------------------------------------

    @staticmethod
    def const(c) -> "MultiPoly":
        return MultiPoly({(0,) * _NVARS: Fraction(c)})

    @staticmethod
    def var(name: str) -> "MultiPoly":
        if name not in _SYM_INDEX:
            raise MissingSymbol(name)
        exps = [0] * _NVARS
        exps[_SYM_INDEX[name]] = 1
        return MultiPoly({tuple(exps): Fraction(1)})

    # -- basic queries ------------------------------------------------------

    @property
    def terms(self) -> tuple:
        return self._terms

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and sum(self._terms[0][0]) == 0)

    def constant_value(self) -> Fraction:
        if self.is_zero():
            return Fraction(0)
        if not self.is_constant():
            raise ValueError("not a constant polynomial")
        return self._terms[0][1]

    def symbols(self) -> frozenset[str]:
        out = set()
        for exps, _ in self._terms:
            for i, e in enumerate(exps):
                if e:
                    out.add(SYMBOLS[i])
        return frozenset(out)

    def degree(self, name: str | None = None) -> int:
        if self.is_zero():
            return -1
        if name is None:
            return max(sum(e) for e, _ in self._terms)
        i = _SYM_INDEX[name]
        return max(e[i] for e, _ in self._terms)

    def leading(self) -> tuple[tuple[int, ...], Fraction]:
        if self.is_zero():
            raise ZeroInput("zero polynomial has no leading term")
        return self._terms[0]

    # -- arithmetic ---------------------------------------------------------

    def _as_poly(self, other) -> "MultiPoly | None":
        if isinstance(other, MultiPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return MultiPoly.const(other)
        return None

    def __add__(self, other):
        q = self._as_poly(other)
        if q is None:
            return NotImplemented
        acc = dict(self._terms)
        for exps, c in q._terms:
            v = acc.get(exps, Fraction(0)) + c
            if v:
                acc[exps] = v
            else:
                acc.pop(exps, None)
        return MultiPoly(acc)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly({e: -c for e, c in self._terms})

    def __sub__(self, other):
        q = self._as_poly(other)
        if q is None:
            return NotImplemented
        return self + (-q)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        q = self._as_poly(other)
        if q is None:
            return NotImplemented
        acc: dict[tuple[int, ...], Fraction] = {}
        for e1, c1 in self._terms:
            for e2, c2 in q._terms:
                e = tuple(a + b for a, b in zip(e1, e2))
                v = acc.get(e, Fraction(0)) + c1 * c2
                if v:
                    acc[e] = v
                else:
                    acc.pop(e, None)
        return MultiPoly(acc)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        out = MultiPoly.const(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.const(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(self._terms)

    # -- division -----------------------------------------------------------

    def divide_exact(self, divisor: "MultiPoly") -> "MultiPoly | None":
        """Quotient self/divisor when divisor divides exactly, else None."""
        if divisor.is_zero():
            raise ZeroDivisionError
        if self.is_zero():
            return MultiPoly()
        dl_e, dl_c = divisor.leading()
        rem = self
        q: dict[tuple[int, ...], Fraction] = {}
        while not rem.is_zero():
            rl_e, rl_c = rem.leading()
            e = tuple(a - b for a, b in zip(rl_e, dl_e))
            if any(x < 0 for x in e):
                return None
            c = rl_c / dl_c
            q[e] = q.get(e, Fraction(0)) + c
            rem = rem - MultiPoly({e: c}) * divisor
        return MultiPoly(q)

    # -- evaluation / substitution -------------------------------------------

    def evaluate(self, assignment: Mapping[str, object]):
        """Exact value at a {symbol: Fraction|QuadraticValue} assignment."""
        missing = self.symbols() - set(assignment)
        if missing:
            raise MissingSymbol(sorted(missing)[0])
        ds = {
            v.d
            for v in assignment.values()
            if isinstance(v, QuadraticValue)
        }
        if len(ds) > 1:
            raise MixedField(f"assignment mixes radicands {sorted(ds)}")
        total = Fraction(0)
        for exps, coeff in self._terms:
            term = coeff
            for i, e in enumerate(exps):
                if e:
                    term = term * assignment[SYMBOLS[i]] ** e
            total = term + total
        return total

    def substitute(self, mapping: Mapping[str, "MultiPoly"]) -> "MultiPoly":
        """Composed polynomial; every symbol occurring here must be mapped."""
        missing = self.symbols() - set(mapping)
        if missing:
            raise MissingSymbol(sorted(missing)[0])
        total = MultiPoly()
        for exps, coeff in self._terms:
            term = MultiPoly.const(coeff)
            for i, e in enumerate(exps):
                if e:
                    term = term * mapping[SYMBOLS[i]] ** e
            total = total + term
        return total

    # -- normal form ---------------------------------------------------------

    def normalized(self) -> "MultiPoly":
        """Scalar-normalized form: integer coprime coefficients, positive lead."""
        if self.is_zero():
            return self
        from math import gcd, lcm

        den = lcm(*(c.denominator for _, c in self._terms)) if self._terms else 1
        num = gcd(*(abs(c.numerator * (den // c.denominator)) for _, c in self._terms))
        scale = Fraction(den, num if num else 1)
        if self._terms[0][1] < 0:
            scale = -scale
        return self * scale

    def __repr__(self):
        return f"MultiPoly({self})"

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for exps, coeff in self._terms:
            factors = []
            for i, e in enumerate(exps):
                if e == 1:
                    factors.append(SYMBOLS[i])
                elif e > 1:
                    factors.append(f"{SYMBOLS[i]}^{e}")
            mono = "*".join(factors)
            if not mono:
                parts.append(str(coeff))
            elif coeff == 1:
                parts.append(mono)
            elif coeff == -1:
                parts.append(f"-{mono}")
            else:
                parts.append(f"{coeff}*{mono}")
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out


ZERO = MultiPoly()
ONE = MultiPoly.const(1)
K = MultiPoly.var("k")
L = MultiPoly.var("l")
R = MultiPoly.var("r")
S = MultiPoly.var("s")
M = MultiPoly.var("m")

IDENTITY_MAP = {name: MultiPoly.var(name) for name in SYMBOLS}


def poly_eval(p: MultiPoly, assignment: Mapping[str, object]):
    return p.evaluate(assignment)


def poly_substitute(p: MultiPoly, mapping: Mapping[str, MultiPoly]) -> MultiPoly:
    return p.substitute(mapping)


# ---------------------------------------------------------------------------
# the nonvanishing sieve
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SieveMember:
    name: str
    poly: MultiPoly
    sign: int  # strict sign on the primitive region
    note: str


@dataclass(frozen=True)
class NonzeroCertificate:
    """p = constant * product(member^exponent), all members sieve-nonzero."""

    constant: Fraction
    factors: tuple[tuple[str, int], ...]

    def reconstruct(self, sieve: "SieveSet") -> MultiPoly:
        out = MultiPoly.const(self.constant)
        lookup = {mem.name: mem.poly for mem in sieve.members}
        for name, exp in self.factors:
            out = out * lookup[name] ** exp
        return out

    def region_sign(self, sieve: "SieveSet") -> int:
        sign = 1 if self.constant > 0 else -1
        lookup = {mem.name: mem.sign for mem in sieve.members}
        for name, exp in self.factors:
            if exp % 2:
                sign *= lookup[name]
        return sign


class SieveSet:
    """Ordered polynomials, each provably nonzero on the primitive region."""

    def __init__(self, members: Iterable[SieveMember]):
        self.members = tuple(members)
        self._by_name = {mem.name: mem for mem in self.members}
        self._cache: dict[MultiPoly, NonzeroCertificate | None] = {}

    def extended(self, extra: Iterable[SieveMember]) -> "SieveSet":
        return SieveSet(self.members + tuple(extra))

    def member(self, name: str) -> SieveMember:
        return self._by_name[name]

    def certify(self, p: MultiPoly) -> NonzeroCertificate | None:
        """Trial-division certificate that p is nonzero on the primitive region.

        Returns None when p does not factor over the sieve (which says
        nothing about whether p can vanish).
        """
        if p.is_zero():
            raise ZeroInput("zero polynomial is never provably nonzero")
        cached = self._cache.get(p, _CACHE_MISS)
        if cached is not _CACHE_MISS:
            return cached
        rem = p
        factors: list[tuple[str, int]] = []
        progress = True
        while progress and not rem.is_constant():
            progress = False
            for mem in self.members:
                if mem.poly.is_constant():
                    continue
                count = 0
                while True:
                    q = rem.divide_exact(mem.poly)
                    if q is None:
                        break
                    rem = q
                    count += 1
                if count:
                    factors.append((mem.name, count))
                    progress = True
        if rem.is_constant() and not rem.is_zero():
            cert = NonzeroCertificate(rem.constant_value(), tuple(factors))
        else:
            cert = None
        self._cache[p] = cert
        return cert


_CACHE_MISS = object()


def _default_members() -> list[SieveMember]:
    mk = SieveMember
    one = ONE
    items = [
        mk("k", K, +1, "valency is positive"),
        mk("l", L, +1, "complement valency is positive"),
        mk("r", R, +1, "r = 0 only in the complete-multipartite imprimitive case"),
        mk("1+s", one + S, -1, "s < -1 on the primitive region"),
        mk("k-r", K - R, +1, "k = r only in the union-of-cliques imprimitive case"),
        mk("l+1+s", L + 1 + S, +1, "l > -1-s on the primitive region"),
        mk("k+rs", K + R * S, +1,
           "nonnegative structure constant; zero only for disconnected graphs"),
        mk("(1+r)(1+s)", (one + R) * (one + S), -1,
           "product of a positive and a negative factor"),
        mk("r-s", R - S, +1, "eigenvalues are ordered r > s"),
        mk("k-s", K - S, +1, "k > 0 > s"),
        mk("l+1+r", L + 1 + R, +1, "sum of positives"),
        mk("1+r", one + R, +1, "r > 0"),
        mk("1+k", one + K, +1, "k > 0"),
        mk("1+l", one + L, +1, "l > 0"),
        # extensions beyond the base list, each strictly signed on the
        # primitive region
        mk("s", S, -1, "s < -1 < 0"),
        mk("k-1", K - 1, +1, "k - 1 >= -(1+r)(1+s) > 0"),
        mk("l-1", L - 1, +1, "l - 1 >= -rs > 0"),
        mk("l+r-1", L + R - 1, +1, "l > 1 and r > 0"),
        mk("k+r-1", K + R - 1, +1, "k > 1 and r > 0"),
        mk("k-s-2", K - S - 2, +1, "(k-1) + (-1-s) with both parts positive"),
        mk("l-s-2", L - S - 2, +1, "(l-1) + (-1-s) with both parts positive"),
        mk("1+k+l", one + K + L, +1, "the order n of the scheme"),
        mk("k+l-1", K + L - 1, +1, "(k-1) + (l-1) + 1 > 1"),
    ]
    return items


_DEFAULT_SIEVE: SieveSet | None = None


def default_sieve_set() -> SieveSet:
    global _DEFAULT_SIEVE
    if _DEFAULT_SIEVE is None:
        _DEFAULT_SIEVE = SieveSet(_default_members())
    return _DEFAULT_SIEVE


def sieve_nonzero(p: MultiPoly, sieve: SieveSet | None = None) -> NonzeroCertificate | None:
    """Certificate that p cannot vanish on the primitive region, or None."""
    return (sieve or default_sieve_set()).certify(p)
