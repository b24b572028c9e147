"""Multivariate (Laurent-capable) polynomials on a named coordinate chart.

Coefficients are truncated hbar-series, so the same polynomial type serves
the classical layer (where every coefficient is a plain scalar) and the
semiclassical computations.  Negative exponents are only allowed on chart
variables that were explicitly declared invertible; this mirrors localized
coordinate functions like a^-1 without dragging in general rational
functions.
"""

from __future__ import annotations

from fractions import Fraction

from .scalars import HSeries, GaussRational, gauss, series


class Chart:
    """An ordered list of variable names, some of which may be invertible."""

    __slots__ = ("names", "invertible", "_index")

    def __init__(self, names, invertible=()):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise ValueError("duplicate variable names in chart")
        unknown = set(invertible) - set(names)
        if unknown:
            raise ValueError("invertible vars not in chart: %s" % sorted(unknown))
        object.__setattr__(self, "names", names)
        object.__setattr__(self, "invertible", frozenset(invertible))
        object.__setattr__(self, "_index", {n: i for i, n in enumerate(names)})

    def __setattr__(self, name, value):
        raise AttributeError("Chart is immutable")

    def index(self, name):
        try:
            return self._index[name]
        except KeyError:
            raise KeyError("variable %r not in chart %s" % (name, list(self.names)))

    def __len__(self):
        return len(self.names)

    def __eq__(self, other):
        return (isinstance(other, Chart) and self.names == other.names
                and self.invertible == other.invertible)

    def __hash__(self):
        return hash((self.names, self.invertible))

    def __repr__(self):
        inv = (", invertible=%s" % sorted(self.invertible)) if self.invertible else ""
        return "Chart(%s%s)" % (list(self.names), inv)

    def poly(self, x):
        """Build a CoordPoly on this chart from a string, scalar or poly."""
        return poly(x, self)

    def var(self, name):
        n = len(self.names)
        exps = [0] * n
        exps[self.index(name)] = 1
        return CoordPoly(self, {tuple(exps): HSeries.one()})

    def zero(self):
        return CoordPoly(self, {})

    def one(self):
        return CoordPoly(self, {(0,) * len(self.names): HSeries.one()})


class CoordPoly:
    """Exact polynomial: map from exponent vectors to HSeries coefficients."""

    __slots__ = ("chart", "terms")

    def __init__(self, chart, terms):
        clean = {}
        nvars = len(chart.names)
        for exps, coeff in terms.items():
            exps = tuple(exps)
            if len(exps) != nvars:
                raise ValueError("exponent vector %r does not match chart" % (exps,))
            for e, name in zip(exps, chart.names):
                if e < 0 and name not in chart.invertible:
                    raise ValueError("negative exponent on non-invertible %r" % name)
            coeff = series(coeff)
            if coeff.is_zero():
                continue
            if exps in clean:
                s = clean[exps] + coeff
                if s.is_zero():
                    del clean[exps]
                else:
                    clean[exps] = s
            else:
                clean[exps] = coeff
        object.__setattr__(self, "chart", chart)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("CoordPoly is immutable")

    @staticmethod
    def _mk(chart, terms):
        """Fast path: terms already canonical (HSeries values, no zeros)."""
        p = object.__new__(CoordPoly)
        object.__setattr__(p, "chart", chart)
        object.__setattr__(p, "terms", terms)
        return p

    # -- ring operations --------------------------------------------------

    _SCALARS = (int, Fraction, GaussRational, HSeries, str)

    def _coerced(self, other):
        if isinstance(other, CoordPoly):
            if other.chart != self.chart:
                raise ValueError("charts differ: %r vs %r" % (self.chart, other.chart))
            return other
        zero = (0,) * len(self.chart.names)
        return CoordPoly(self.chart, {zero: series(other)})

    def __add__(self, other):
        if not isinstance(other, (CoordPoly,) + self._SCALARS):
            return NotImplemented
        other = self._coerced(other)
        out = dict(self.terms)
        for exps, c in other.terms.items():
            if exps in out:
                s = out[exps] + c
                if s.is_zero():
                    del out[exps]
                else:
                    out[exps] = s
            else:
                out[exps] = c
        return CoordPoly._mk(self.chart, out)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, (CoordPoly,) + self._SCALARS):
            return NotImplemented
        return self + (-self._coerced(other))

    def __rsub__(self, other):
        return self._coerced(other) - self

    def __neg__(self):
        return CoordPoly._mk(self.chart, {e: -c for e, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, self._SCALARS):
            s = series(other) if not isinstance(other, HSeries) else other
            out = {}
            for e, c in self.terms.items():
                p = c * s
                if not p.is_zero():
                    out[e] = p
            return CoordPoly._mk(self.chart, out)
        if not isinstance(other, CoordPoly):
            return NotImplemented
        other = self._coerced(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                c = c1 * c2
                if e in out:
                    out[e] = out[e] + c
                else:
                    out[e] = c
        return CoordPoly._mk(self.chart,
                             {e: c for e, c in out.items() if not c.is_zero()})

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        out = self.chart.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def inverse(self):
        """Inverse of a unit: a single term with unit coefficient whose
        variables are all invertible on the chart."""
        if len(self.terms) != 1:
            raise ValueError("only monomial units are invertible on a chart")
        (exps, coeff), = self.terms.items()
        for e, name in zip(exps, self.chart.names):
            if e != 0 and name not in self.chart.invertible:
                raise ValueError("%r is not invertible on this chart" % name)
        return CoordPoly(self.chart, {tuple(-e for e in exps): coeff.inverse()})

    # -- calculus ---------------------------------------------------------

    def diff(self, var):
        """Exact partial derivative; Laurent exponents handled."""
        i = self.chart.index(var)
        out = {}
        for exps, c in self.terms.items():
            e = exps[i]
            if e == 0:
                continue
            new = list(exps)
            new[i] = e - 1
            out[tuple(new)] = c * Fraction(e)
        return CoordPoly(self.chart, out)

    def subs(self, assignment, target_chart=None):
        """Substitute variables by polynomials (a full or partial map).

        ``assignment`` maps variable names to CoordPoly on the target chart
        (or scalars).  Unassigned variables must exist on the target chart.
        Negative powers require the assigned value to be invertible.
        """
        if target_chart is None:
            target_chart = self.chart
        values = {}
        for name in self.chart.names:
            if name in assignment:
                values[name] = poly(assignment[name], target_chart)
            else:
                values[name] = target_chart.var(name)
        out = target_chart.zero()
        for exps, c in self.terms.items():
            term = CoordPoly(target_chart, {(0,) * len(target_chart.names): c})
            for e, name in zip(exps, self.chart.names):
                if e:
                    term = term * values[name] ** e
            out = out + term
        return out

    def eval_scalar(self, assignment):
        """Evaluate at a scalar point; returns an HSeries."""
        out = HSeries.zero()
        for exps, c in self.terms.items():
            val = c
            for e, name in zip(exps, self.chart.names):
                if e:
                    val = val * series(gauss(assignment[name])) ** e
            out = out + val
        return out

    # -- structure --------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def constant_coefficient(self):
        return self.terms.get((0,) * len(self.chart.names), HSeries.zero())

    def total_degree(self):
        if not self.terms:
            return 0
        return max(sum(abs(e) for e in exps) for exps in self.terms)

    def coefficient_of(self, exps):
        return self.terms.get(tuple(exps), HSeries.zero())

    def monomials(self):
        return sorted(self.terms)

    def map_coefficients(self, fn):
        return CoordPoly(self.chart, {e: fn(c) for e, c in self.terms.items()})

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, GaussRational, HSeries, str)):
            other = self._coerced(other)
        if not isinstance(other, CoordPoly):
            return NotImplemented
        return (self - other).is_zero()

    __hash__ = None

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        return "CoordPoly(%s)" % str(self)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for exps in sorted(self.terms):
            c = self.terms[exps]
            mono = "*".join(
                (n if e == 1 else "%s^%d" % (n, e))
                for n, e in zip(self.chart.names, exps) if e
            )
            cs = str(c)
            if not mono:
                parts.append("(%s)" % cs if " " in cs else cs)
            elif cs == "1":
                parts.append(mono)
            elif cs == "-1":
                parts.append("-" + mono)
            else:
                parts.append("(%s)*%s" % (cs, mono) if " " in cs or "+" in cs[1:]
                             else "%s*%s" % (cs, mono))
        return " + ".join(parts).replace("+ -", "- ")


def poly(x, chart):
    """Coerce a string, scalar or CoordPoly onto the given chart."""
    if isinstance(x, CoordPoly):
        if x.chart == chart:
            return x
        # allow silent transport between charts sharing all needed names
        return x.subs({}, chart)
    if isinstance(x, str):
        return _parse_poly(x, chart)
    zero = (0,) * len(chart.names)
    return CoordPoly(chart, {zero: series(x)})


# ---------------------------------------------------------------------------
# A tiny expression parser so fixtures and JSON files can state polynomials
# the way the tables in the literature do: "1-a^2", "c*(a+d)", "2*i*b*c",
# "hbar*x" ...  Grammar: sum of products of powers of atoms; atoms are
# integers, "i", "hbar", variable names and parenthesized sums.
# ---------------------------------------------------------------------------

class _Tok:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def peek(self):
        while self.pos < len(self.text) and self.text[self.pos] == " ":
            self.pos += 1
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self):
        c = self.peek()
        self.pos += 1
        return c


def _parse_poly(text, chart):
    tok = _Tok(text)
    out = _parse_sum(tok, chart)
    if tok.peek():
        raise ValueError("unexpected %r in %r" % (tok.peek(), text))
    return out


def _parse_sum(tok, chart):
    sign = 1
    c = tok.peek()
    if c in "+-":
        tok.take()
        sign = -1 if c == "-" else 1
    out = _parse_product(tok, chart) * sign
    while True:
        c = tok.peek()
        if c == "+":
            tok.take()
            out = out + _parse_product(tok, chart)
        elif c == "-":
            tok.take()
            out = out - _parse_product(tok, chart)
        else:
            return out


def _parse_product(tok, chart):
    out = _parse_power(tok, chart)
    while True:
        c = tok.peek()
        if c == "*":
            tok.take()
            out = out * _parse_power(tok, chart)
        elif c == "/":
            tok.take()
            out = out * _parse_power(tok, chart).inverse()
        elif c.isalnum() or c == "(":
            out = out * _parse_power(tok, chart)
        else:
            return out


def _parse_power(tok, chart):
    base = _parse_atom(tok, chart)
    if tok.peek() == "^":
        tok.take()
        sign = 1
        if tok.peek() == "-":
            tok.take()
            sign = -1
        digits = ""
        while tok.peek().isdigit():
            digits += tok.take()
        if not digits:
            raise ValueError("missing exponent")
        return base ** (sign * int(digits))
    return base


def _parse_atom(tok, chart):
    c = tok.peek()
    if c == "(":
        tok.take()
        inner = _parse_sum(tok, chart)
        if tok.take() != ")":
            raise ValueError("unbalanced parenthesis")
        return inner
    if c.isdigit():
        digits = ""
        while tok.peek().isdigit():
            digits += tok.take()
        return poly(int(digits), chart)
    if c.isalpha() or c == "_":
        name = ""
        while tok.peek().isalnum() or tok.peek() == "_":
            name += tok.take()
        if name == "i":
            return poly(GaussRational(0, 1), chart)
        if name == "hbar":
            zero = (0,) * len(chart.names)
            return CoordPoly(chart, {zero: HSeries.hbar()})
        return chart.var(name)
    raise ValueError("cannot parse at %r" % tok.text[tok.pos:])
