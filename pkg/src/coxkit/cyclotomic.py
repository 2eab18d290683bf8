"""Exact arithmetic in cyclotomic fields Q(zeta_N).

Elements are stored as rational coordinate vectors in the power basis
1, zeta, ..., zeta^(phi(N)-1) reduced modulo the N-th cyclotomic
polynomial, so equality at a fixed conductor is coefficient equality.
Binary operations embed both operands into the lcm conductor; nothing is
re-reduced to a smaller conductor automatically, but `canonical()`
returns the minimal-conductor form (used for hashing and printing).

All values are immutable and all operations are pure functions.
"""
from __future__ import annotations

import math
import threading
from fractions import Fraction
from functools import lru_cache
from typing import Sequence, Union

from mpmath import iv

INFINITY = math.inf

Rat = Union[int, Fraction]


@lru_cache(maxsize=None)
def phi(n: int) -> int:
    """Euler totient of n >= 1."""
    result = n
    for p in prime_divisors(n):
        result -= result // p
    return result


@lru_cache(maxsize=None)
def prime_divisors(n: int) -> tuple[int, ...]:
    primes = []
    d, m = 2, n
    while d * d <= m:
        if m % d == 0:
            primes.append(d)
            while m % d == 0:
                m //= d
        d += 1
    if m > 1:
        primes.append(m)
    return tuple(primes)


@lru_cache(maxsize=None)
def divisors(n: int) -> tuple[int, ...]:
    small = [d for d in range(1, int(math.isqrt(n)) + 1) if n % d == 0]
    large = [n // d for d in reversed(small) if d * d != n]
    return tuple(small + large)


def _poly_mul(a: Sequence[int], b: Sequence[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


def _poly_divmod_exact(num: Sequence[int], den: Sequence[int]) -> list[int]:
    """Quotient of num by monic-up-to-sign integer polynomial den; remainder must vanish."""
    num = list(num)
    dn = len(den) - 1
    lead = den[-1]
    quot = [0] * (len(num) - dn)
    for k in range(len(num) - 1, dn - 1, -1):
        c = num[k]
        if c == 0:
            continue
        assert c % lead == 0, "non-exact polynomial division"
        q = c // lead
        quot[k - dn] = q
        for j, dj in enumerate(den):
            num[k - dn + j] -= q * dj
    assert all(c == 0 for c in num), "non-exact polynomial division"
    return quot


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_n, low degree first.

    Computed by dividing x^n - 1 by the product of Phi_d over proper
    divisors d of n.
    """
    if n == 1:
        return (-1, 1)
    num = [-1] + [0] * (n - 1) + [1]
    den = [1]
    for d in divisors(n):
        if d < n:
            den = _poly_mul(den, cyclotomic_polynomial(d))
    return tuple(_poly_divmod_exact(num, den))


@lru_cache(maxsize=None)
def _reduction_rows(n: int) -> tuple[tuple[int, ...], ...]:
    """Row k-phi(n) is zeta_n^k expressed in the power basis, for
    k = phi(n) .. max(n-1, 2*phi(n)-2)."""
    d = phi(n)
    top = max(n - 1, 2 * d - 2)
    poly = cyclotomic_polynomial(n)
    # zeta^d = -(poly without leading term)
    base = tuple(-c for c in poly[:d])
    rows = [base]
    for _ in range(d + 1, top + 1):
        prev = rows[-1]
        shifted = [0] + list(prev[: d - 1])
        carry = prev[d - 1]
        if carry:
            shifted = [s + carry * b for s, b in zip(shifted, base)]
        rows.append(tuple(shifted))
    return tuple(rows)


def _reduce_powers(n: int, coeffs: Sequence[Fraction]) -> tuple[Fraction, ...]:
    """Reduce a coefficient list over powers zeta^0..zeta^(len-1) to the basis."""
    d = phi(n)
    out = list(coeffs[:d]) + [Fraction(0)] * max(0, d - len(coeffs))
    if len(coeffs) > d:
        rows = _reduction_rows(n)
        for k in range(d, len(coeffs)):
            c = coeffs[k]
            if c:
                row = rows[k - d]
                for j in range(d):
                    if row[j]:
                        out[j] += c * row[j]
    return tuple(out)


@lru_cache(maxsize=None)
def _embed_rows(n: int, target: int) -> tuple[tuple[int, ...], ...]:
    """Row j is zeta_target^(j*target/n) in the basis of conductor target."""
    assert target % n == 0
    step = target // n
    d = phi(n)
    rows = []
    for j in range(d):
        power = (j * step) % target
        vec = [0] * power + [1]
        rows.append(tuple(int(c) for c in _reduce_powers(target, [Fraction(c) for c in vec])))
    return tuple(rows)


def _embed(coeffs: Sequence[Fraction], n: int, target: int) -> tuple[Fraction, ...]:
    if n == target:
        return tuple(coeffs)
    rows = _embed_rows(n, target)
    out = [Fraction(0)] * phi(target)
    for j, c in enumerate(coeffs):
        if c:
            row = rows[j]
            for i in range(len(out)):
                if row[i]:
                    out[i] += c * row[i]
    return tuple(out)


def _solve_rational(columns: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction] | None:
    """Solve sum_j y_j * columns[j] = rhs exactly; None if inconsistent."""
    rows = len(rhs)
    cols = len(columns)
    aug = [[columns[j][i] for j in range(cols)] + [rhs[i]] for i in range(rows)]
    pivots = []
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if aug[i][c]), None)
        if pivot is None:
            continue
        aug[r], aug[pivot] = aug[pivot], aug[r]
        inv = 1 / aug[r][c]
        aug[r] = [v * inv for v in aug[r]]
        for i in range(rows):
            if i != r and aug[i][c]:
                f = aug[i][c]
                aug[i] = [v - f * w for v, w in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    for i in range(r, rows):
        if aug[i][cols]:
            return None
    solution = [Fraction(0)] * cols
    for i, c in enumerate(pivots):
        solution[c] = aug[i][cols]
    return solution


_sign_lock = threading.Lock()


class CyclotomicNumber:
    """An exact element of Q(zeta_N)."""

    __slots__ = ("conductor", "coeffs", "_canon", "_hash")

    def __init__(self, conductor: int, coeffs: Sequence[Rat]):
        if conductor < 1:
            raise ValueError("conductor must be a positive integer")
        d = phi(conductor)
        vec = [Fraction(c) for c in coeffs]
        if len(vec) < d:
            vec += [Fraction(0)] * (d - len(vec))
        object.__setattr__(self, "conductor", conductor)
        object.__setattr__(self, "coeffs", _reduce_powers(conductor, vec))
        object.__setattr__(self, "_canon", None)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("CyclotomicNumber is immutable")

    @classmethod
    def _raw(cls, conductor: int, coeffs: tuple[Fraction, ...]) -> "CyclotomicNumber":
        """Internal: wrap an already-reduced basis-length coefficient tuple."""
        self = object.__new__(cls)
        object.__setattr__(self, "conductor", conductor)
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "_canon", None)
        object.__setattr__(self, "_hash", None)
        return self

    # -- constructors ------------------------------------------------

    @staticmethod
    def make(conductor: int, poly: Union[Rat, Sequence[Rat]], scale: Rat = 1) -> "CyclotomicNumber":
        """Build scale * p(zeta_conductor) from polynomial coefficients.

        `poly` is a constant or a sequence of coefficients by power of
        zeta; powers past the conductor wrap around (zeta^N = 1).
        """
        if conductor < 1:
            raise ValueError("conductor must be a positive integer")
        if isinstance(poly, (int, Fraction)):
            poly = [poly]
        s = Fraction(scale)
        folded = [Fraction(0)] * conductor
        for k, c in enumerate(poly):
            folded[k % conductor] += Fraction(c) * s
        return CyclotomicNumber(conductor, folded)

    @staticmethod
    def rational(q: Rat) -> "CyclotomicNumber":
        return CyclotomicNumber(1, [Fraction(q)])

    @staticmethod
    def zeta(n: int, power: int = 1) -> "CyclotomicNumber":
        if n < 1:
            raise ValueError("conductor must be a positive integer")
        vec = [Fraction(0)] * n
        vec[power % n] = Fraction(1)
        return CyclotomicNumber(n, vec)

    # -- structure ---------------------------------------------------

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        return self.canonical().conductor == 1

    def as_rational(self) -> Fraction:
        c = self.canonical()
        if c.conductor != 1:
            raise ValueError(f"{self} is not rational")
        return c.coeffs[0]

    def canonical(self) -> "CyclotomicNumber":
        """Equivalent value at the smallest possible conductor."""
        cached = object.__getattribute__(self, "_canon")
        if cached is not None:
            return cached
        if self.conductor == 1:
            object.__setattr__(self, "_canon", self)
            return self
        result = _canonical_cached(self.conductor, self.coeffs)
        object.__setattr__(self, "_canon", result)
        return result

    def _descend(self, target: int) -> "CyclotomicNumber | None":
        n = self.conductor
        cols = [[Fraction(c) for c in row] for row in _embed_rows(target, n)]
        sol = _solve_rational(cols, list(self.coeffs))
        if sol is None:
            return None
        return CyclotomicNumber._raw(target, tuple(sol))

    def embed(self, target: int) -> "CyclotomicNumber":
        """The same value viewed in Q(zeta_target); target must be a multiple."""
        if target % self.conductor != 0:
            raise ValueError("target conductor must be a multiple")
        return CyclotomicNumber._raw(target, _embed(self.coeffs, self.conductor, target))

    # -- arithmetic --------------------------------------------------

    @staticmethod
    def _coerce(value) -> "CyclotomicNumber | None":
        if isinstance(value, CyclotomicNumber):
            return value
        if isinstance(value, (int, Fraction)):
            return CyclotomicNumber.rational(value)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.conductor == other.conductor:
            return CyclotomicNumber._raw(
                self.conductor, tuple(x + y for x, y in zip(self.coeffs, other.coeffs)))
        n = math.lcm(self.conductor, other.conductor)
        a = _embed(self.coeffs, self.conductor, n)
        b = _embed(other.coeffs, other.conductor, n)
        return CyclotomicNumber._raw(n, tuple(x + y for x, y in zip(a, b)))

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicNumber._raw(self.conductor, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return ZERO
        if other.conductor == 1:
            q = other.coeffs[0]
            return CyclotomicNumber._raw(self.conductor,
                                         tuple(c * q for c in self.coeffs))
        if self.conductor == 1:
            q = self.coeffs[0]
            return CyclotomicNumber._raw(other.conductor,
                                         tuple(c * q for c in other.coeffs))
        n = math.lcm(self.conductor, other.conductor)
        a = _embed(self.coeffs, self.conductor, n)
        b = _embed(other.coeffs, other.conductor, n)
        prod = [Fraction(0)] * (2 * len(a) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        prod[i + j] += ai * bj
        return CyclotomicNumber._raw(n, _reduce_powers(n, prod))

    __rmul__ = __mul__

    def inverse(self) -> "CyclotomicNumber":
        """Multiplicative inverse, found by solving x*y = 1 in the power basis."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        n = self.conductor
        if n == 1:
            return CyclotomicNumber.rational(1 / self.coeffs[0])
        d = phi(n)
        cols = []
        shifted = list(self.coeffs)
        for j in range(d):
            cols.append(list(_reduce_powers(n, [Fraction(0)] * j + shifted)))
        rhs = [Fraction(1)] + [Fraction(0)] * (d - 1)
        sol = _solve_rational(cols, rhs)
        assert sol is not None, "nonzero cyclotomic must be invertible"
        return CyclotomicNumber._raw(n, tuple(sol))

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = CyclotomicNumber.rational(1)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    # -- comparisons -------------------------------------------------

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.conductor == other.conductor:
            return self.coeffs == other.coeffs
        n = math.lcm(self.conductor, other.conductor)
        return _embed(self.coeffs, self.conductor, n) == _embed(other.coeffs, other.conductor, n)

    def __hash__(self):
        cached = object.__getattribute__(self, "_hash")
        if cached is None:
            c = self.canonical()
            cached = hash((c.conductor, c.coeffs))
            object.__setattr__(self, "_hash", cached)
        return cached

    def key(self) -> tuple:
        """Hashable canonical identity, equal iff the values are equal."""
        c = self.canonical()
        return (c.conductor, c.coeffs)

    # -- real structure ----------------------------------------------

    def conjugate(self) -> "CyclotomicNumber":
        n = self.conductor
        if n <= 2:
            return self
        folded = [Fraction(0)] * n
        for j, c in enumerate(self.coeffs):
            folded[(n - j) % n] += c
        return CyclotomicNumber(n, folded)

    def is_real(self) -> bool:
        return self == self.conjugate()

    def sign(self) -> int:
        """Sign of a real value: -1, 0 or +1.

        Zero is decided exactly; otherwise the value is evaluated with
        interval arithmetic at doubling precision until the enclosure
        excludes zero (guaranteed to terminate for exact nonzero input).
        """
        if not self.is_real():
            raise ValueError(f"{self} is not real")
        if self.is_zero():
            return 0
        c = self.canonical()
        if c.conductor == 1:
            q = c.coeffs[0]
            return -1 if q < 0 else 1
        with _sign_lock:
            saved = iv.prec
            try:
                prec = 64
                while True:
                    iv.prec = prec
                    total = iv.mpf(0)
                    two_pi = 2 * iv.pi
                    for k, coeff in enumerate(c.coeffs):
                        if coeff:
                            term = iv.mpf(coeff.numerator) / iv.mpf(coeff.denominator)
                            total += term * iv.cos(two_pi * k / c.conductor)
                    if (total > 0) is True:
                        return 1
                    if (total < 0) is True:
                        return -1
                    prec *= 2
                    if prec > 1 << 20:
                        raise RuntimeError(f"sign of {self} did not resolve")
            finally:
                iv.prec = saved

    def order(self) -> Union[int, float]:
        """Smallest d with x^d = 1, or math.inf.

        Roots of unity in Q(zeta_N) have order dividing lcm(2, N).
        """
        if self.is_zero():
            raise ZeroDivisionError("order of zero is undefined")
        bound = math.lcm(2, self.conductor)
        if self ** bound != 1:
            return INFINITY
        for d in divisors(bound):
            if self ** d == 1:
                return d
        raise AssertionError("unreachable")

    # -- display -----------------------------------------------------

    def to_complex(self) -> complex:
        """Floating approximation under zeta_N -> exp(2*pi*i/N); display only."""
        n = self.conductor
        total = 0j
        for k, c in enumerate(self.coeffs):
            if c:
                angle = 2 * math.pi * k / n
                total += float(c) * complex(math.cos(angle), math.sin(angle))
        return total

    def literal(self) -> str:
        """Exact text form, e.g. "-1/2", "zeta(12)^7", "1 + 2*zeta(5)^3"."""
        c = self.canonical()
        if c.conductor == 1:
            return str(c.coeffs[0])
        parts = []
        for k, coeff in enumerate(c.coeffs):
            if not coeff:
                continue
            if k == 0:
                body = str(abs(coeff))
            else:
                z = f"zeta({c.conductor})" if k == 1 else f"zeta({c.conductor})^{k}"
                body = z if abs(coeff) == 1 else f"{abs(coeff)}*{z}"
            parts.append(("-" if coeff < 0 else "+", body))
        sign0, body0 = parts[0]
        text = ("-" if sign0 == "-" else "") + body0
        for sgn, body in parts[1:]:
            text += f" {sgn} {body}"
        return text

    def __repr__(self):
        return self.literal()


@lru_cache(maxsize=1 << 16)
def _canonical_cached(conductor: int, coeffs: tuple) -> CyclotomicNumber:
    current = CyclotomicNumber._raw(conductor, coeffs)
    changed = True
    while changed and current.conductor > 1:
        changed = False
        for p in prime_divisors(current.conductor):
            down = current._descend(current.conductor // p)
            if down is not None:
                current = down
                changed = True
                break
    object.__setattr__(current, "_canon", current)
    return current


# -- module API -------------------------------------------------------

def rational(q: Rat) -> CyclotomicNumber:
    return CyclotomicNumber.rational(q)


def zeta(n: int, power: int = 1) -> CyclotomicNumber:
    return CyclotomicNumber.zeta(n, power)


ZERO = CyclotomicNumber.rational(0)
ONE = CyclotomicNumber.rational(1)


@lru_cache(maxsize=None)
def two_cos(m: int) -> CyclotomicNumber:
    """The exact value 2*cos(pi/m) = zeta_2m + zeta_2m^(2m-1), for m >= 2.

    Returned at its minimal conductor (so e.g. 2cos(pi/3) is the rational 1).
    """
    if m < 2:
        raise ValueError("m must be at least 2")
    n = 2 * m
    vec = [Fraction(0)] * n
    vec[1] = Fraction(1)
    vec[n - 1] = Fraction(1)
    return CyclotomicNumber(n, _reduce_powers(n, vec)).canonical()


def order_of(x: CyclotomicNumber) -> Union[int, float]:
    return x.order()


def is_real(x: CyclotomicNumber) -> bool:
    return x.is_real()


def sign_of_real(x: CyclotomicNumber) -> int:
    return x.sign()


# -- scalar literal parsing -------------------------------------------

class ScalarParseError(ValueError):
    pass


def _tokenize(text: str) -> list:
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            if j < len(text) and text[j] == ".":
                raise ScalarParseError("floating-point literals are not accepted")
            tokens.append(int(text[i:j]))
            i = j
        elif text.startswith("zeta", i):
            tokens.append("zeta")
            i += 4
        elif ch in "+-*/^()":
            tokens.append(ch)
            i += 1
        else:
            raise ScalarParseError(f"unexpected character {ch!r} in scalar literal")
    return tokens


class _Parser:
    def __init__(self, tokens):
        self.tokens = tokens
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self, expected=None):
        tok = self.peek()
        if tok is None:
            raise ScalarParseError("unexpected end of scalar literal")
        if expected is not None and tok != expected:
            raise ScalarParseError(f"expected {expected!r}, found {tok!r}")
        self.pos += 1
        return tok

    def parse_expr(self) -> CyclotomicNumber:
        negate = False
        if self.peek() == "-":
            self.take()
            negate = True
        elif self.peek() == "+":
            self.take()
        value = self.parse_term()
        if negate:
            value = -value
        while self.peek() in ("+", "-"):
            op = self.take()
            rhs = self.parse_term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def parse_term(self) -> CyclotomicNumber:
        value = self.parse_factor()
        while self.peek() in ("*", "/"):
            op = self.take()
            rhs = self.parse_factor()
            value = value * rhs if op == "*" else value / rhs
        return value

    def parse_factor(self) -> CyclotomicNumber:
        base = self.parse_atom()
        if self.peek() == "^":
            self.take()
            sign = 1
            if self.peek() == "-":
                self.take()
                sign = -1
            exp = self.take()
            if not isinstance(exp, int):
                raise ScalarParseError("exponent must be an integer")
            return base ** (sign * exp)
        return base

    def parse_atom(self) -> CyclotomicNumber:
        tok = self.peek()
        if isinstance(tok, int):
            self.take()
            return CyclotomicNumber.rational(tok)
        if tok == "zeta":
            self.take()
            self.take("(")
            n = self.take()
            if not isinstance(n, int) or n < 1:
                raise ScalarParseError("zeta() needs a positive integer conductor")
            self.take(")")
            return CyclotomicNumber.zeta(n)
        if tok == "(":
            self.take()
            value = self.parse_expr()
            self.take(")")
            return value
        raise ScalarParseError(f"unexpected token {tok!r}")


def parse_scalar(text: str) -> CyclotomicNumber:
    """Parse an exact scalar literal: integers, fractions, zeta(N)^k,
    sums and products with parentheses. No floating point."""
    parser = _Parser(_tokenize(text))
    value = parser.parse_expr()
    if parser.peek() is not None:
        raise ScalarParseError(f"trailing input in scalar literal at {parser.peek()!r}")
    return value


def format_approx(x: CyclotomicNumber) -> str:
    """Six-place decimal rendering of the complex value, display only."""
    z = x.to_complex()
    re = 0.0 if abs(z.real) < 5e-13 else z.real
    im = 0.0 if abs(z.imag) < 5e-13 else z.imag
    if im == 0.0:
        return f"{re:.6f}"
    sign = "+" if im >= 0 else "-"
    return f"{re:.6f}{sign}{abs(im):.6f}i"
