"""Exact scalars in Q(zeta_N)(t_1, ..., t_k).

An element is stored as ``num / den`` where ``num`` lives in
``Q[zeta, t] / Phi_N(zeta)`` (reduced, zeta-degree below phi(N)) and ``den`` is
a monic polynomial in the indeterminates only.  Denominators involving zeta are
cleared by multiplying with the Galois conjugates ``zeta -> zeta^k``, so the
representation is canonical and equality is structural.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

import flint


def euler_phi(n: int) -> int:
    return sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)


def cyclotomic_coefficients(n: int) -> list[int]:
    """Integer coefficients of Phi_n, lowest degree first."""
    # x^n - 1 = prod_{d | n} Phi_d(x); divide out the proper divisors.
    poly = flint.fmpz_poly([-1] + [0] * (n - 1) + [1])
    for d in range(1, n):
        if n % d == 0:
            poly = poly // flint.fmpz_poly(cyclotomic_coefficients(d))
    return [int(c) for c in poly.coeffs()]


class FieldError(ValueError):
    pass


class Field:
    """The coefficient field Q(zeta_order)(indeterminates).

    Instances are interned: asking twice for the same order and names returns
    the same object, so fields can be compared with ``is``.
    """

    _interned: dict = {}

    def __new__(cls, order: int = 1, indeterminates=(), root_name: str = "zeta"):
        indeterminates = tuple(indeterminates)
        key = (order, indeterminates, root_name)
        hit = cls._interned.get(key)
        if hit is not None:
            return hit
        if order < 1:
            raise FieldError(f"cyclotomic order must be positive, got {order}")
        if len(set(indeterminates)) != len(indeterminates) or root_name in indeterminates:
            raise FieldError(f"duplicate names in {indeterminates}")
        self = super().__new__(cls)
        self.order = order
        self.indeterminates = indeterminates
        self.root_name = root_name
        self.phi = euler_phi(order)
        self.uses_root = self.phi > 1
        names = ((root_name,) if self.uses_root else ()) + indeterminates
        self.ctx = flint.fmpq_mpoly_ctx.get(names, "lex")
        self._names = names
        self._gens = dict(zip(names, self.ctx.gens()))
        self._p_one = self.ctx.from_dict({(0,) * len(names): 1})
        self._p_zero = self.ctx.from_dict({})
        if self.uses_root:
            z = self._gens[root_name]
            coeffs = cyclotomic_coefficients(order)
            self.cyclotomic = sum((c * z**i for i, c in enumerate(coeffs) if c), self._p_zero)
            self._conjugators = [k for k in range(2, order) if gcd(k, order) == 1]
        cls._interned[key] = self
        self.zero = Scalar(self, self._p_zero, self._p_one)
        self.one = Scalar(self, self._p_one, self._p_one)
        return self

    def __repr__(self):
        return f"Field(order={self.order}, indeterminates={self.indeterminates})"

    def __reduce__(self):
        return (Field, (self.order, self.indeterminates, self.root_name))

    # construction ------------------------------------------------------
    @property
    def zeta(self) -> "Scalar":
        """The chosen primitive root of unity exp(2 pi i / N)."""
        if self.uses_root:
            return Scalar(self, self._gens[self.root_name], self._p_one)
        return self.one if self.order == 1 else -self.one

    def gen(self, name: str) -> "Scalar":
        if name == self.root_name:
            return self.zeta
        if name not in self.indeterminates:
            raise FieldError(f"unknown indeterminate {name!r}")
        return Scalar(self, self._gens[name], self._p_one)

    def has_name(self, name: str) -> bool:
        return name == self.root_name or name in self.indeterminates

    def __call__(self, value) -> "Scalar":
        if isinstance(value, Scalar):
            if value.field is self:
                return value
            return self.lift(value)
        if isinstance(value, bool):
            raise TypeError("booleans are not scalars")
        if isinstance(value, int):
            return Scalar(self, self._p_one * value, self._p_one)
        if isinstance(value, Fraction):
            return Scalar(self, self._p_one * flint.fmpq(value.numerator, value.denominator), self._p_one)
        if isinstance(value, flint.fmpq):
            return Scalar(self, self._p_one * value, self._p_one)
        if isinstance(value, str):
            from .parse import parse_scalar

            return parse_scalar(self, value)
        raise TypeError(f"cannot convert {type(value).__name__} to a scalar")

    def extend(self, names) -> "Field":
        """Same cyclotomic order with extra indeterminates appended."""
        extra = [n for n in names if n not in self.indeterminates]
        return Field(self.order, self.indeterminates + tuple(extra), self.root_name)

    def lift(self, x: "Scalar") -> "Scalar":
        """Move a scalar from a field whose names are a subset of ours."""
        src = x.field
        if src.order != self.order:
            raise FieldError("cannot move scalars between different cyclotomic orders")
        idx = [self._names.index(n) for n in src._names]

        def move(p):
            out = {}
            for exps, c in p.to_dict().items():
                e = [0] * len(self._names)
                for i, k in zip(idx, exps):
                    e[i] = k
                out[tuple(e)] = c
            return self.ctx.from_dict(out)

        return Scalar(self, move(x.num), move(x.den))

    def roots_of_unity(self) -> list["Scalar"]:
        """Every root of unity in Q(zeta_N): the values +-zeta^k."""
        z = self.zeta
        out, p = [], self.one
        for _ in range(self.order):
            out.append(p)
            p = p * z
        if self.order % 2:
            out += [-r for r in out]
        return out

    # internals ---------------------------------------------------------
    def _reduce_root(self, p):
        if self.uses_root and p.degrees()[0] >= self.phi:
            return divmod(p, self.cyclotomic)[1]
        return p

    def _conjugate(self, p, k):
        gens = self.ctx.gens()
        return self._reduce_root(p.compose(gens[0] ** k, *gens[1:]))

    def _make(self, num, den) -> "Scalar":
        """Canonical scalar from num/den where den may involve zeta."""
        if num.is_zero():
            return self.zero
        if den.is_zero():
            raise ZeroDivisionError("division by zero scalar")
        if self.uses_root and den.degrees()[0] > 0:
            conj = self._p_one
            for k in self._conjugators:
                conj = self._reduce_root(conj * self._conjugate(den, k))
            num = self._reduce_root(num * conj)
            den = self._reduce_root(den * conj)
            if den.degrees()[0] > 0:
                raise FieldError("norm computation left zeta in a denominator")
        return self._normalize(num, den)

    def _normalize(self, num, den) -> "Scalar":
        if num.is_zero():
            return self.zero
        if not den.is_constant():
            g = num.gcd(den)
            if not g.is_one():
                num = num / g
                den = den / g
        lc = den.leading_coefficient()
        if lc != 1:
            inv = 1 / lc
            num = num * inv
            den = den * inv
        return Scalar(self, num, den)


class Scalar:
    """An element of a :class:`Field`; immutable."""

    __slots__ = ("field", "num", "den")

    def __init__(self, field: Field, num, den):
        self.field = field
        self.num = num
        self.den = den

    # predicates ----------------------------------------------------------
    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self):
        return not self.num.is_zero()

    def is_one(self) -> bool:
        return self.num.is_one() and self.den.is_one()

    def is_constant(self) -> bool:
        return self.num.is_constant() and self.den.is_constant()

    def rational(self) -> Fraction:
        """The value as a Fraction, for constants only."""
        if not self.is_constant():
            raise FieldError(f"{self} is not a rational constant")
        c = self.num.leading_coefficient() if not self.num.is_zero() else flint.fmpq(0)
        c = c / self.den.leading_coefficient()
        return Fraction(int(c.p), int(c.q))

    # arithmetic ----------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, Scalar):
            if other.field is not self.field:
                raise FieldError("scalars from different fields")
            return other
        if isinstance(other, (int, Fraction, flint.fmpq)) and not isinstance(other, bool):
            return self.field(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        f = self.field
        if self.den.is_one() and other.den.is_one():
            return Scalar(f, self.num + other.num, f._p_one)
        if self.den == other.den:
            return f._normalize(self.num + other.num, self.den)
        return f._normalize(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return Scalar(self.field, -self.num, self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        f = self.field
        num = f._reduce_root(self.num * other.num)
        if self.den.is_one() and other.den.is_one():
            if num.is_zero():
                return f.zero
            return Scalar(f, num, f._p_one)
        return f._normalize(num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero scalar")
        return self.field._make(self.den, self.num)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result, base = self.field.one, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # comparison ------------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.field is other.field and self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction, flint.fmpq)) and not isinstance(other, bool):
            return self == self.field(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.num.str(), self.den.str()))

    # substitution ------------------------------------------------------------
    def subs(self, values: dict) -> "Scalar":
        """Replace indeterminates by scalars of the same field."""
        f = self.field
        pos = {n: i for i, n in enumerate(f._names)}

        def ev(p):
            acc = f.zero
            for exps, c in p.to_dict().items():
                term = f(Fraction(int(c.p), int(c.q)))
                for name, e in zip(f._names, exps):
                    if e:
                        base = values.get(name)
                        if base is None:
                            base = f.zeta if name == f.root_name else f.gen(name)
                        term = term * f(base) ** int(e)
                acc = acc + term
            return acc

        del pos
        return ev(self.num) / ev(self.den)

    def free_names(self) -> set:
        f = self.field
        used = set()
        for p in (self.num, self.den):
            for exps in p.to_dict():
                used.update(n for n, e in zip(f._names, exps) if e)
        return used

    # display ------------------------------------------------------------------
    def __str__(self):
        num = self.num.str()
        if self.den.is_one():
            return num
        if len(self.num.to_dict()) > 1:
            num = f"({num})"
        den = self.den.str()
        if len(self.den.to_dict()) > 1 or "*" in den:
            den = f"({den})"
        return f"{num}/{den}"

    def __repr__(self):
        return f"Scalar({self})"
