"""Exact coefficient tower: rationals, Gaussian rationals and truncated hbar-series.

Every structure constant, polynomial coefficient and rewrite-rule coefficient
in this package lives in one of three rings:

* ``Fraction``            -- exact rationals (stdlib),
* ``GaussRational``       -- Q(i), rationals with an exact imaginary part,
* ``HSeries``             -- Q(i)[[hbar]] truncated at a session order N.

All arithmetic is exact; there is no floating point anywhere.  Series keep
track of their own truncation order, operations return the minimum order of
the operands, and equality only compares coefficients up to that minimum
order, so a value divided by hbar can never silently pretend to more
precision than it has.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial


DEFAULT_ORDER = 6


def set_default_order(n):
    """Set the session truncation order used when series are created."""
    global DEFAULT_ORDER
    if n < 1:
        raise ValueError("truncation order must be >= 1")
    DEFAULT_ORDER = n


def get_default_order():
    return DEFAULT_ORDER


class GaussRational:
    """An element p + q*i of Q(i) with exact Fraction parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussRational is immutable")

    @staticmethod
    def _mk(re, im):
        g = object.__new__(GaussRational)
        object.__setattr__(g, "re", re)
        object.__setattr__(g, "im", im)
        return g

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        other = gauss(other)
        return GaussRational._mk(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = gauss(other)
        return GaussRational._mk(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return gauss(other) - self

    def __mul__(self, other):
        other = gauss(other)
        if not self.im and not other.im:
            return GaussRational._mk(self.re * other.re, _FR0)
        return GaussRational._mk(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = gauss(other)
        n = other.re * other.re + other.im * other.im
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(i)")
        return self * GaussRational._mk(other.re / n, -other.im / n)

    def __rtruediv__(self, other):
        return gauss(other) / self

    def __neg__(self):
        return GaussRational._mk(-self.re, -self.im)

    def __pow__(self, k):
        if k < 0:
            return GaussRational(1) / self ** (-k)
        out = GaussRational(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def conjugate(self):
        return GaussRational(self.re, -self.im)

    def norm_sq(self):
        return self.re * self.re + self.im * self.im

    # -- structure --------------------------------------------------------

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        try:
            other = gauss(other)
        except (TypeError, ValueError):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __repr__(self):
        return "GaussRational(%r)" % (str(self),)

    def __str__(self):
        if not self.im:
            return _frac_str(self.re)
        if not self.re:
            return _frac_str(self.im) + "*i"
        sign = "+" if self.im > 0 else "-"
        return "%s%s%s*i" % (_frac_str(self.re), sign, _frac_str(abs(self.im)))

    @staticmethod
    def parse(text):
        """Parse "p/q", "p/q+r/s*i", "i", "-i" or "r/s*i" exactly."""
        s = text.replace(" ", "")
        if not s:
            raise ValueError("empty scalar")
        # split into real/imaginary pieces at a +/- that is not leading
        pieces = []
        start = 0
        for k in range(1, len(s)):
            if s[k] in "+-" and s[k - 1] not in "+-/*":
                pieces.append(s[start:k])
                start = k
        pieces.append(s[start:])
        re = Fraction(0)
        im = Fraction(0)
        for piece in pieces:
            if piece in ("i", "+i"):
                im += 1
            elif piece == "-i":
                im -= 1
            elif piece.endswith("*i"):
                im += Fraction(piece[:-2])
            elif piece.endswith("i"):
                im += Fraction(piece[:-1])
            else:
                re += Fraction(piece)
        return GaussRational(re, im)


def _frac_str(f):
    return str(f)


_FR0 = Fraction(0)
ZERO = GaussRational(0)
ONE = GaussRational(1)
I = GaussRational(0, 1)


def gauss(x):
    """Coerce an int, Fraction, string or GaussRational into Q(i)."""
    if isinstance(x, GaussRational):
        return x
    if isinstance(x, (int, Fraction)):
        return GaussRational(x)
    if isinstance(x, str):
        return GaussRational.parse(x)
    if isinstance(x, HSeries):
        raise TypeError("cannot lower an HSeries to Q(i); use .constant_term()")
    raise TypeError("cannot coerce %r into Q(i)" % (x,))


class HSeries:
    """A formal power series in hbar, truncated at ``order`` (mod hbar^order).

    Coefficients are stored as a tuple of GaussRational with trailing zeros
    trimmed, so plain scalars cost one entry.  ``order`` is the number of
    known coefficients: arithmetic between two series is carried out modulo
    hbar^min(order_a, order_b) and equality likewise only inspects the shared
    window.  Dividing by hbar^k shifts coefficients down and *reduces* the
    order by k; the lost precision is remembered, not papered over.
    """

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs, order=None):
        if order is None:
            order = DEFAULT_ORDER
        if order < 0:
            raise ValueError("series order must be >= 0")
        cs = [gauss(c) for c in coeffs[:order]]
        while cs and not cs[-1]:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))
        object.__setattr__(self, "order", order)

    def __setattr__(self, name, value):
        raise AttributeError("HSeries is immutable")

    @staticmethod
    def _mk(coeffs, order):
        """Fast path: coeffs already GaussRational, possibly untrimmed."""
        n = len(coeffs)
        while n and not coeffs[n - 1]:
            n -= 1
        s = object.__new__(HSeries)
        object.__setattr__(s, "coeffs", tuple(coeffs[:n]))
        object.__setattr__(s, "order", order)
        return s

    # -- constructors -----------------------------------------------------

    @staticmethod
    def from_scalar(x, order=None):
        return HSeries((gauss(x),), order)

    @staticmethod
    def hbar(order=None):
        return HSeries((ZERO, ONE), order)

    @staticmethod
    def zero(order=None):
        return HSeries((), order)

    @staticmethod
    def one(order=None):
        return HSeries((ONE,), order)

    # -- inspection -------------------------------------------------------

    def coeff(self, k):
        """Coefficient of hbar^k; raises if k is beyond the known window."""
        if k >= self.order:
            raise ValueError("coefficient %d not known at order %d" % (k, self.order))
        return self.coeffs[k] if k < len(self.coeffs) else ZERO

    def constant_term(self):
        return self.coeffs[0] if self.coeffs else ZERO

    def valuation(self):
        """Index of the first nonzero coefficient, or ``order`` if none."""
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        return self.order

    def is_zero(self):
        return not self.coeffs

    def is_unit(self):
        return bool(self.coeffs) and bool(self.coeffs[0])

    def truncate(self, m):
        return HSeries(self.coeffs[:m], min(self.order, m))

    # -- ring operations --------------------------------------------------

    def _coerced(self, other):
        if isinstance(other, HSeries):
            return other
        return HSeries((gauss(other),), self.order)

    def __add__(self, other):
        other = self._coerced(other)
        order = min(self.order, other.order)
        n = max(len(self.coeffs), len(other.coeffs))
        out = []
        for k in range(min(n, order)):
            a = self.coeffs[k] if k < len(self.coeffs) else ZERO
            b = other.coeffs[k] if k < len(other.coeffs) else ZERO
            out.append(a + b)
        return HSeries._mk(out, order)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-self._coerced(other))

    def __rsub__(self, other):
        return self._coerced(other) - self

    def __neg__(self):
        return HSeries._mk([-c for c in self.coeffs], self.order)

    def __mul__(self, other):
        other = self._coerced(other)
        order = min(self.order, other.order)
        if not self.coeffs or not other.coeffs:
            return HSeries._mk((), order)
        if len(self.coeffs) == 1 and len(other.coeffs) == 1:
            return HSeries._mk((self.coeffs[0] * other.coeffs[0],), order)
        n = min(order, len(self.coeffs) + len(other.coeffs) - 1)
        out = [ZERO] * n
        for i, a in enumerate(self.coeffs):
            if not a or i >= n:
                continue
            for j, b in enumerate(other.coeffs):
                if i + j >= n:
                    break
                if b:
                    out[i + j] = out[i + j] + a * b
        return HSeries._mk(out, order)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        out = HSeries.one(self.order)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def inverse(self):
        """Multiplicative inverse; defined iff the constant term is nonzero."""
        if not self.is_unit():
            raise ValueError("series with zero constant term is not a unit")
        c0 = self.coeffs[0]
        inv = [ONE / c0]
        for k in range(1, self.order):
            acc = ZERO
            for j in range(1, min(k, len(self.coeffs) - 1) + 1):
                cj = self.coeffs[j] if j < len(self.coeffs) else ZERO
                if cj:
                    acc = acc + cj * inv[k - j]
            inv.append(-acc / c0)
        return HSeries(inv, self.order)

    def __truediv__(self, other):
        other = self._coerced(other)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self._coerced(other) / self

    def divide_by_hbar(self, k=1):
        """Exact division by hbar^k.  Requires valuation >= k.

        The result's order drops to order - k: coefficients beyond the
        original window are unknown and stay unknown.
        """
        if k == 0:
            return self
        v = self.valuation()
        if v < k:
            raise ValuationError(
                "cannot divide by hbar^%d: coefficient of hbar^%d is %s"
                % (k, v, self.coeffs[v])
            )
        return HSeries(self.coeffs[k:], self.order - k)

    def shift(self, k):
        """Multiply by hbar^k (k >= 0); order grows back accordingly."""
        if k < 0:
            return self.divide_by_hbar(-k)
        return HSeries((ZERO,) * k + self.coeffs, self.order + k)

    def exp(self):
        """exp of a series with valuation >= 1 (so the sum is finite mod hbar^N)."""
        if self.valuation() < 1:
            raise ValuationError("series_exp needs valuation >= 1, got constant term %s"
                                 % self.constant_term())
        out = HSeries.one(self.order)
        term = HSeries.one(self.order)
        for k in range(1, self.order):
            term = term * self
            out = out + term * Fraction(1, factorial(k))
        return out

    # -- comparison -------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, GaussRational)):
            other = HSeries((gauss(other),), self.order)
        if not isinstance(other, HSeries):
            return NotImplemented
        order = min(self.order, other.order)
        for k in range(order):
            a = self.coeffs[k] if k < len(self.coeffs) else ZERO
            b = other.coeffs[k] if k < len(other.coeffs) else ZERO
            if a != b:
                return False
        return True

    __hash__ = None

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        return "HSeries(%s; order=%d)" % (str(self), self.order)

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            if k == 0:
                parts.append(str(c))
            else:
                mono = "hbar" if k == 1 else "hbar^%d" % k
                cs = str(c)
                if cs == "1":
                    parts.append(mono)
                elif cs == "-1":
                    parts.append("-" + mono)
                elif "+" in cs[1:] or "-" in cs[1:]:
                    parts.append("(%s)*%s" % (cs, mono))
                else:
                    parts.append("%s*%s" % (cs, mono))
        return " + ".join(parts).replace("+ -", "- ")

    def serialize(self):
        """List of scalar strings, one per coefficient up to the order."""
        return [str(self.coeff(k)) for k in range(self.order)]


class ValuationError(ArithmeticError):
    """Raised when an hbar-division is attempted below the valuation."""


def series(x, order=None):
    """Coerce scalars, scalar strings or coefficient lists into an HSeries."""
    if isinstance(x, HSeries):
        return x
    if isinstance(x, (list, tuple)):
        return HSeries([gauss(c) for c in x], order)
    return HSeries.from_scalar(gauss(x), order)


def series_exp(s):
    return series(s).exp()


def divide_by_hbar(s, k=1):
    return series(s).divide_by_hbar(k)


def hexp(scalar, order=None):
    """exp(scalar * hbar) as a truncated series; scalar is exact."""
    return (HSeries.hbar(order) * gauss(scalar)).exp()
