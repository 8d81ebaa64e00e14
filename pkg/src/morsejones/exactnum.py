"""Exact arithmetic: integer Laurent polynomials in A and cyclotomic integers.

Both value types are immutable and hashable.  Nothing here ever touches
floating point except :func:`complex_approx`, which is diagnostic only.
"""
from __future__ import annotations

import cmath
from functools import lru_cache
from typing import Iterable, Mapping, Sequence


class NonDivisible(ArithmeticError):
    """Raised when an exact Laurent division leaves a nonzero remainder."""


class LaurentInt:
    """Integer Laurent polynomial in one variable ``A``.

    Stored sparsely as ``{exponent: coefficient}`` with no zero coefficients.

    >>> a = LaurentInt.monomial(1)
    >>> (a + a**-1) * (a - a**-1)
    A^2 - A^-2
    """

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        c = {}
        if coeffs:
            for e, v in coeffs.items():
                if v:
                    c[int(e)] = int(v)
        self._c = c
        self._hash = None

    @classmethod
    def _raw(cls, c: dict) -> "LaurentInt":
        # trusted constructor: c must already be canonical
        obj = cls.__new__(cls)
        obj._c = c
        obj._hash = None
        return obj

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> "LaurentInt":
        return cls({exp: coeff})

    @classmethod
    def const(cls, value: int) -> "LaurentInt":
        return cls({0: value})

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self._c)

    def items(self):
        return sorted(self._c.items())

    def is_zero(self) -> bool:
        return not self._c

    def degree(self) -> int:
        return max(self._c)

    def low_degree(self) -> int:
        return min(self._c)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentInt.const(other)
        if not isinstance(other, LaurentInt):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentInt.const(other)
        if not isinstance(other, LaurentInt):
            return NotImplemented
        c = dict(self._c)
        for e, v in other._c.items():
            s = c.get(e, 0) + v
            if s:
                c[e] = s
            else:
                c.pop(e, None)
        return LaurentInt._raw(c)

    __radd__ = __add__

    def __neg__(self):
        return LaurentInt._raw({e: -v for e, v in self._c.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentInt.const(other)
        if not isinstance(other, LaurentInt):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return LaurentInt()
            return LaurentInt._raw({e: v * other for e, v in self._c.items()})
        if not isinstance(other, LaurentInt):
            return NotImplemented
        c: dict[int, int] = {}
        for e1, v1 in self._c.items():
            for e2, v2 in other._c.items():
                e = e1 + e2
                c[e] = c.get(e, 0) + v1 * v2
        return LaurentInt._raw({e: v for e, v in c.items() if v})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if len(self._c) != 1:
                raise NonDivisible("only monomials are invertible")
            (e, v), = self._c.items()
            if v not in (1, -1):
                raise NonDivisible("only unit monomials are invertible")
            return LaurentInt._raw({e * k: v ** (-k)})
        result = LaurentInt.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int) -> "LaurentInt":
        """Multiply by ``A**k``."""
        return LaurentInt._raw({e + k: v for e, v in self._c.items()})

    def invert_variable(self) -> "LaurentInt":
        """Substitute ``A -> A**-1`` (the mirror image of a bracket)."""
        return LaurentInt._raw({-e: v for e, v in self._c.items()})

    def exact_div(self, divisor: "LaurentInt") -> "LaurentInt":
        """Exact quotient ``self / divisor``; raises :class:`NonDivisible` otherwise."""
        if divisor.is_zero():
            raise ZeroDivisionError("division by zero Laurent polynomial")
        if self.is_zero():
            return LaurentInt()
        rem = dict(self._c)
        dtop = divisor.degree()
        dlow = divisor.low_degree()
        lead = divisor._c[dtop]
        quot: dict[int, int] = {}
        while rem:
            top = max(rem)
            if top - dtop < min(rem) - dlow:
                raise NonDivisible(f"nonzero remainder dividing {self} by {divisor}")
            q, r = divmod(rem[top], lead)
            if r:
                raise NonDivisible(f"leading coefficient {rem[top]} not divisible by {lead}")
            shift = top - dtop
            quot[shift] = q
            for e, v in divisor._c.items():
                k = e + shift
                s = rem.get(k, 0) - q * v
                if s:
                    rem[k] = s
                else:
                    rem.pop(k, None)
        return LaurentInt._raw(quot)

    def __call__(self, value: complex) -> complex:
        return sum(v * value ** e for e, v in self._c.items())

    def __repr__(self):
        return self.format("A")

    def format(self, var: str = "A") -> str:
        if not self._c:
            return "0"
        parts = []
        for e, v in sorted(self._c.items(), reverse=True):
            sign = "-" if v < 0 else "+"
            mag = abs(v)
            if e == 0:
                body = str(mag)
            else:
                mono = var if e == 1 else f"{var}^{e}"
                body = mono if mag == 1 else f"{mag}*{mono}"
            parts.append((sign, body))
        head_sign, head = parts[0]
        out = ("-" if head_sign == "-" else "") + head
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out


# --- integer polynomials, coefficient lists low -> high ----------------------

def _trim(p: list[int]) -> list[int]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_mul(a: Sequence[int], b: Sequence[int]) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _poly_divmod_monic(p: Sequence[int], d: Sequence[int]) -> tuple[list[int], list[int]]:
    p = list(p)
    n = len(d) - 1
    if len(p) <= n:
        return [], _trim(p)
    q = [0] * (len(p) - n)
    for k in range(len(p) - 1, n - 1, -1):
        c = p[k]
        if c:
            q[k - n] = c
            for j in range(n + 1):
                p[k - n + j] -= c * d[j]
    return _trim(q), _trim(p[:n])


@lru_cache(maxsize=None)
def _cyclotomic(m: int) -> tuple[int, ...]:
    num = [-1] + [0] * (m - 1) + [1]
    den = [1]
    for d in range(1, m):
        if m % d == 0:
            den = _poly_mul(den, _cyclotomic(d))
    q, r = _poly_divmod_monic(num, den)
    assert not r
    return tuple(q)


def cyclotomic_poly(m: int) -> list[int]:
    """Coefficients (low to high) of the ``m``-th cyclotomic polynomial."""
    if m < 1:
        raise ValueError(f"cyclotomic order must be positive, got {m}")
    return list(_cyclotomic(m))


class CycloInt:
    """Element of ``Z[x] / Phi_m(x)``, i.e. an integer combination of powers of
    a primitive ``m``-th root of unity, stored as its canonical residue."""

    __slots__ = ("order", "rep")

    def __init__(self, order: int, rep: Iterable[int]):
        rep = tuple(int(v) for v in rep)
        if len(rep) != len(_cyclotomic(order)) - 1:
            raise ValueError(f"rep of order {order} needs {len(_cyclotomic(order)) - 1} entries")
        self.order = order
        self.rep = rep

    @classmethod
    def zero(cls, m: int) -> "CycloInt":
        return cls(m, [0] * (len(_cyclotomic(m)) - 1))

    @classmethod
    def one(cls, m: int) -> "CycloInt":
        return cyclo_reduce([1], m)

    @classmethod
    def zeta(cls, m: int, k: int = 1) -> "CycloInt":
        """The root of unity ``zeta_m ** k``."""
        k %= m
        return cyclo_reduce([0] * k + [1], m)

    def _check(self, other: "CycloInt"):
        if not isinstance(other, CycloInt):
            return NotImplemented
        if other.order != self.order:
            raise ValueError(f"order mismatch: {self.order} vs {other.order}")
        return None

    def _coerce(self, other):
        if isinstance(other, int):
            return cyclo_reduce([other], self.order)
        return other

    def __eq__(self, other):
        other = self._coerce(other)
        if not isinstance(other, CycloInt):
            return NotImplemented
        return self.order == other.order and self.rep == other.rep

    def __hash__(self):
        return hash((self.order, self.rep))

    def __add__(self, other):
        other = self._coerce(other)
        if self._check(other) is NotImplemented:
            return NotImplemented
        return CycloInt(self.order, (a + b for a, b in zip(self.rep, other.rep)))

    __radd__ = __add__

    def __neg__(self):
        return CycloInt(self.order, (-a for a in self.rep))

    def __sub__(self, other):
        other = self._coerce(other)
        if self._check(other) is NotImplemented:
            return NotImplemented
        return CycloInt(self.order, (a - b for a, b in zip(self.rep, other.rep)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if self._check(other) is NotImplemented:
            return NotImplemented
        return cyclo_reduce(_poly_mul(self.rep, other.rep), self.order)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not supported")
        result = CycloInt.one(self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def is_zero(self) -> bool:
        return not any(self.rep)

    def __complex__(self):
        return complex_approx(self)

    def __repr__(self):
        return f"CycloInt({self.order}, {list(self.rep)})"


def cyclo_reduce(p: Sequence[int], m: int) -> CycloInt:
    """Canonical residue of the integer polynomial ``p`` (low to high) mod ``Phi_m``."""
    if m < 1:
        raise ValueError(f"cyclotomic order must be positive, got {m}")
    phi = _cyclotomic(m)
    n = len(phi) - 1
    # x^m = 1 first; it is cheap and keeps the division short
    folded = [0] * m
    for k, v in enumerate(p):
        folded[k % m] += v
    _, r = _poly_divmod_monic(folded, phi)
    r = r + [0] * (n - len(r))
    return CycloInt(m, r)


def eval_at_root(f: LaurentInt, m: int, e: int) -> CycloInt:
    """Substitute ``A -> zeta_m ** e`` into ``f``."""
    if m < 1:
        raise ValueError(f"cyclotomic order must be positive, got {m}")
    folded = [0] * m
    for exp, v in f._c.items():
        folded[(exp * e) % m] += v
    return cyclo_reduce(folded, m)


def complex_approx(c: CycloInt) -> complex:
    z = cmath.exp(2j * cmath.pi / c.order)
    return sum((v * z ** k for k, v in enumerate(c.rep) if v), 0j)
