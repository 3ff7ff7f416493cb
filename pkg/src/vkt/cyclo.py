"""Exact arithmetic in Z[zeta_m] for character evaluation at rational points.

Elements are stored as the canonical residue of an integer polynomial
modulo the m-th cyclotomic polynomial, so is_zero is exactly "equals 0
in the complex numbers".  Mixed-order sums are pushed to the lcm order
before reduction.
"""

from __future__ import annotations

import cmath
from fractions import Fraction
from functools import lru_cache
from math import lcm


# -- integer polynomials (dense tuples, ascending degree) -------------------

def poly_trim(p):
    n = len(p)
    while n and p[n - 1] == 0:
        n -= 1
    return tuple(p[:n])


def poly_mul(p, q):
    if not p or not q:
        return ()
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return poly_trim(out)


def poly_divmod_exact(p, q):
    """Long division of integer polynomials; valid when q is monic."""
    if q[-1] != 1:
        raise ValueError("divisor must be monic")
    rem = list(p)
    quo = [0] * max(len(p) - len(q) + 1, 0)
    dq = len(q) - 1
    for i in range(len(rem) - 1, dq - 1, -1):
        c = rem[i]
        if c:
            quo[i - dq] = c
            for j, b in enumerate(q):
                rem[i - dq + j] -= c * b
    return poly_trim(quo), poly_trim(rem)


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m):
    """The m-th cyclotomic polynomial Phi_m, as a coefficient tuple.

    Computed by dividing x^m - 1 by Phi_d over the proper divisors d of m.

    >>> cyclotomic_polynomial(1)
    (-1, 1)
    >>> cyclotomic_polynomial(4)
    (1, 0, 1)
    """
    if m < 1:
        raise ValueError("order must be >= 1")
    p = tuple([-1] + [0] * (m - 1) + [1])
    for d in range(1, m):
        if m % d == 0:
            p, rem = poly_divmod_exact(p, cyclotomic_polynomial(d))
            assert rem == ()
    return p


class CyclotomicInt:
    """An element of Z[zeta_m], reduced modulo Phi_m."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order, coeffs):
        phi = cyclotomic_polynomial(order)
        _, rem = poly_divmod_exact(tuple(coeffs), phi)
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", rem)

    def __setattr__(self, name, value):
        raise AttributeError("CyclotomicInt is immutable")

    @classmethod
    def zero(cls, order=1):
        return cls(order, ())

    @classmethod
    def integer(cls, n, order=1):
        return cls(order, (n,))

    @classmethod
    def root_power(cls, order, power):
        """zeta_order ** power."""
        power %= order
        return cls(order, (0,) * power + (1,))

    @classmethod
    def from_fraction_exponent(cls, t):
        """exp(2 pi i t) for rational t, at the denominator's order."""
        t = Fraction(t)
        m = t.denominator
        return cls.root_power(m, t.numerator % m)

    def lift(self, order):
        if order == self.order:
            return self
        if order % self.order:
            raise ValueError("can only lift to a multiple order")
        k = order // self.order
        out = [0] * ((len(self.coeffs) - 1) * k + 1) if self.coeffs else []
        for i, c in enumerate(self.coeffs):
            if c:
                out[i * k] = c
        return CyclotomicInt(order, out)

    def _common(self, other):
        if isinstance(other, int):
            other = CyclotomicInt.integer(other)
        m = lcm(self.order, other.order)
        return self.lift(m), other.lift(m), m

    def __add__(self, other):
        a, b, m = self._common(other)
        n = max(len(a.coeffs), len(b.coeffs))
        return CyclotomicInt(m, [
            (a.coeffs[i] if i < len(a.coeffs) else 0)
            + (b.coeffs[i] if i < len(b.coeffs) else 0) for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicInt(self.order, [-c for c in self.coeffs])

    def __sub__(self, other):
        if isinstance(other, int):
            other = CyclotomicInt.integer(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return CyclotomicInt(self.order, [other * c for c in self.coeffs])
        a, b, m = self._common(other)
        return CyclotomicInt(m, poly_mul(a.coeffs, b.coeffs))

    __rmul__ = __mul__

    def is_zero(self):
        return not self.coeffs

    def is_integer(self):
        return len(self.coeffs) <= 1

    def integer_value(self):
        if not self.is_integer():
            raise ValueError(f"{self!r} is not an integer")
        return self.coeffs[0] if self.coeffs else 0

    def __eq__(self, other):
        if isinstance(other, int):
            other = CyclotomicInt.integer(other)
        if not isinstance(other, CyclotomicInt):
            return NotImplemented
        a, b, _ = self._common(other)
        return a.coeffs == b.coeffs

    # equal values can live at different orders, so value hashing is unsafe
    __hash__ = None

    def to_complex(self):
        z = cmath.exp(2j * cmath.pi / self.order)
        return sum(c * z ** i for i, c in enumerate(self.coeffs))

    def __repr__(self):
        return f"CyclotomicInt(order={self.order}, coeffs={self.coeffs})"


# -- evaluation of weights and characters ------------------------------------

def pairing_fraction(weight, point):
    """The rational number <weight, point> for a rational torus point."""
    return sum(Fraction(w) * x for w, x in zip(weight, point))


def eval_weight_at_point(rd, weight, point) -> CyclotomicInt:
    """The value of the character `weight` at the rational torus point,
    exactly: exp(2 pi i <weight, point>) as a root of unity."""
    weight = rd.check_weight(weight)
    return CyclotomicInt.from_fraction_exponent(pairing_fraction(weight, point))


def eval_character_at_point(rd, lam, point) -> CyclotomicInt:
    """The character of the irreducible V_lam at a rational torus point.

    Sums the full weight system at a common cyclotomic order; exact."""
    from .rootdata import weight_multiplicities
    wm = weight_multiplicities(rd, lam)
    pairings = {nu: pairing_fraction(nu, point) for nu in wm}
    m = 1
    for t in pairings.values():
        m = lcm(m, t.denominator)
    counts = [0] * m
    for nu, mult in wm.items():
        t = pairings[nu]
        counts[(t.numerator * (m // t.denominator)) % m] += mult
    return CyclotomicInt(m, counts)


def eval_weight_combination_at_point(rd, combo, point) -> CyclotomicInt:
    """Character of a virtual representation {dominant weight: coeff}."""
    total = CyclotomicInt.zero()
    for lam, c in sorted(combo.items()):
        if c:
            total = total + eval_character_at_point(rd, lam, point) * c
    return total


# -- exact linear algebra over Q(zeta_m) -------------------------------------
# Minimal field arithmetic for the character-table cross-check: elements are
# Fraction-coefficient residues mod Phi_m.  Division only; nothing fancier.

def _fpoly_trim(p):
    n = len(p)
    while n and p[n - 1] == 0:
        n -= 1
    return tuple(p[:n])


def _fpoly_mod(p, phi):
    rem = [Fraction(c) for c in p]
    dq = len(phi) - 1
    for i in range(len(rem) - 1, dq - 1, -1):
        c = rem[i]
        if c:
            for j, b in enumerate(phi):
                rem[i - dq + j] -= c * b
    return _fpoly_trim(rem)


def _fpoly_mul_mod(p, q, phi):
    if not p or not q:
        return ()
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return _fpoly_mod(out, phi)


def _fpoly_sub(p, q):
    n = max(len(p), len(q))
    return _fpoly_trim([(p[i] if i < len(p) else 0) - (q[i] if i < len(q) else 0)
                        for i in range(n)])


def _fpoly_mul(p, q):
    if not p or not q:
        return ()
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return _fpoly_trim(out)


def _fpoly_divmod(p, q):
    """Division with remainder over Q; q need not be monic."""
    rem = [Fraction(c) for c in p]
    quo = [Fraction(0)] * max(len(rem) - len(q) + 1, 1)
    dq = len(q) - 1
    for i in range(len(rem) - 1, dq - 1, -1):
        if rem[i]:
            c = rem[i] / q[-1]
            quo[i - dq] = c
            for j, b in enumerate(q):
                rem[i - dq + j] -= c * b
    return _fpoly_trim(quo), _fpoly_trim(rem)


def _fpoly_inv_mod(p, phi):
    """Inverse of p modulo the irreducible monic phi, by extended Euclid."""
    r0 = tuple(Fraction(c) for c in phi)
    r1 = _fpoly_trim([Fraction(c) for c in p])
    s0, s1 = (), (Fraction(1),)
    while r1:
        q, rem = _fpoly_divmod(r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, _fpoly_sub(s0, _fpoly_mul(q, s1))
    if len(r0) != 1:
        raise ZeroDivisionError("element is not invertible")
    return _fpoly_trim([c / r0[0] for c in s0])


class FieldElement:
    """An element of Q(zeta_m) for the linear solver below."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order, coeffs):
        self.order = order
        phi = cyclotomic_polynomial(order)
        self.coeffs = _fpoly_mod([Fraction(c) for c in coeffs], phi)

    @classmethod
    def from_cyclotomic(cls, x: CyclotomicInt, order):
        return cls(order, x.lift(order).coeffs)

    def __add__(self, o):
        n = max(len(self.coeffs), len(o.coeffs))
        return FieldElement(self.order, [
            (self.coeffs[i] if i < len(self.coeffs) else 0)
            + (o.coeffs[i] if i < len(o.coeffs) else 0) for i in range(n)])

    def __sub__(self, o):
        n = max(len(self.coeffs), len(o.coeffs))
        return FieldElement(self.order, [
            (self.coeffs[i] if i < len(self.coeffs) else 0)
            - (o.coeffs[i] if i < len(o.coeffs) else 0) for i in range(n)])

    def __mul__(self, o):
        phi = cyclotomic_polynomial(self.order)
        return FieldElement(self.order, _fpoly_mul_mod(self.coeffs, o.coeffs, phi))

    def inverse(self):
        phi = cyclotomic_polynomial(self.order)
        return FieldElement(self.order, _fpoly_inv_mod(self.coeffs, phi))

    def is_zero(self):
        return not self.coeffs

    def as_rational(self):
        if len(self.coeffs) > 1:
            raise ValueError("value is not rational")
        return self.coeffs[0] if self.coeffs else Fraction(0)


def solve_field_system(matrix, rhs, order):
    """Solve (matrix) x = rhs over Q(zeta_order); entries are CyclotomicInt.

    Raises ZeroDivisionError when the matrix is singular."""
    n = len(matrix)
    a = [[FieldElement.from_cyclotomic(matrix[i][j], order) for j in range(n)]
         + [FieldElement.from_cyclotomic(rhs[i], order)] for i in range(n)]
    _row_reduce(a, n)
    return [a[i][n] for i in range(n)]


def invert_field_matrix(matrix, order):
    """Inverse of a CyclotomicInt matrix over Q(zeta_order), as FieldElement rows."""
    n = len(matrix)
    a = [[FieldElement.from_cyclotomic(matrix[i][j], order) for j in range(n)]
         + [FieldElement(order, (int(i == j),)) for j in range(n)] for i in range(n)]
    _row_reduce(a, n)
    return [row[n:] for row in a]


def _row_reduce(a, n):
    for col in range(n):
        piv = next((i for i in range(col, n) if not a[i][col].is_zero()), None)
        if piv is None:
            raise ZeroDivisionError("singular character matrix")
        a[col], a[piv] = a[piv], a[col]
        inv = a[col][col].inverse()
        a[col] = [x * inv for x in a[col]]
        for i in range(n):
            if i != col and not a[i][col].is_zero():
                c = a[i][col]
                a[i] = [x - c * y for x, y in zip(a[i], a[col])]
