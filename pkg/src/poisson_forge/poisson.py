"""Polynomial Poisson geometry on a coordinate chart.

Bivectors, vector fields and exterior forms with CoordPoly components, and
the operations between them: Poisson bracket, Jacobi check in coordinates,
Hamiltonian fields, Casimir check, exterior derivative, Lie derivatives and
the Koszul bracket of 1-forms.

Sign conventions, fixed once for the whole package:

* pi(alpha, beta) = sum_ij pi^ij alpha_i beta_j and the sharp map contracts
  the first slot, pi_sharp(alpha)^j = sum_i pi^ij alpha_i;
* the Hamiltonian field is X_f = pi_sharp(df) = {f, .}, which makes
  f -> X_f a Lie algebra homomorphism and [df, dg]_pi = d{f, g} exact.
"""

from __future__ import annotations

import itertools

from .coordpoly import CoordPoly, poly
from .report import Report


class PolyVectorField:
    """A derivation with one CoordPoly component per chart variable."""

    def __init__(self, chart, components):
        self.chart = chart
        comp = {}
        for name, p in components.items():
            p = poly(p, chart)
            if not p.is_zero():
                comp[name] = p
        self.components = comp

    def component(self, name):
        return self.components.get(name, self.chart.zero())

    def apply(self, f):
        f = poly(f, self.chart)
        out = self.chart.zero()
        for name, p in self.components.items():
            out = out + p * f.diff(name)
        return out

    __call__ = apply

    def __add__(self, other):
        out = dict(self.components)
        for name, p in other.components.items():
            out[name] = out.get(name, self.chart.zero()) + p
        return PolyVectorField(self.chart, out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return PolyVectorField(self.chart, {n: -p for n, p in self.components.items()})

    def __mul__(self, f):
        return PolyVectorField(self.chart,
                               {n: p * f for n, p in self.components.items()})

    __rmul__ = __mul__

    def bracket(self, other):
        """Commutator of vector fields: [X, Y]^j = X[Y^j] - Y[X^j]."""
        comp = {}
        for name in self.chart.names:
            comp[name] = self.apply(other.component(name)) \
                - other.apply(self.component(name))
        return PolyVectorField(self.chart, comp)

    def is_zero(self):
        return not self.components

    def __eq__(self, other):
        if not isinstance(other, PolyVectorField):
            return NotImplemented
        return (self - other).is_zero()

    __hash__ = None

    def __repr__(self):
        if not self.components:
            return "0"
        return " + ".join("(%s)*d/d%s" % (p, n)
                          for n, p in sorted(self.components.items()))


def vector_field(chart, components):
    return PolyVectorField(chart, components)


class ExteriorForm:
    """A degree-k form with antisymmetric CoordPoly components.

    Components are stored on strictly increasing index tuples of chart
    positions; access through :meth:`component` applies the sign of the
    sorting permutation.
    """

    def __init__(self, chart, degree, components=None):
        self.chart = chart
        self.degree = degree
        comp = {}
        for idx, p in (components or {}).items():
            idx = tuple(idx)
            if len(idx) != degree:
                raise ValueError("index %r has wrong degree" % (idx,))
            key, sign = _sort_index(idx)
            if key is None:
                continue  # repeated index: zero
            p = poly(p, chart) * sign
            if key in comp:
                comp[key] = comp[key] + p
            else:
                comp[key] = p
        self.components = {k: v for k, v in comp.items() if not v.is_zero()}

    def component(self, *idx):
        key, sign = _sort_index(tuple(idx))
        if key is None:
            return self.chart.zero()
        p = self.components.get(key)
        if p is None:
            return self.chart.zero()
        return p * sign

    def __add__(self, other):
        out = dict(self.components)
        for idx, p in other.components.items():
            out[idx] = out.get(idx, self.chart.zero()) + p
        return ExteriorForm(self.chart, self.degree, out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return ExteriorForm(self.chart, self.degree,
                            {k: -p for k, p in self.components.items()})

    def __mul__(self, f):
        return ExteriorForm(self.chart, self.degree,
                            {k: p * f for k, p in self.components.items()})

    __rmul__ = __mul__

    def is_zero(self):
        return not self.components

    def __eq__(self, other):
        if not isinstance(other, ExteriorForm):
            return NotImplemented
        if self.degree != other.degree:
            return False
        return (self - other).is_zero()

    __hash__ = None

    def d(self):
        """Exterior derivative; d of a k-form is a (k+1)-form, d after d is 0."""
        out = {}
        for idx, p in self.components.items():
            for i, name in enumerate(self.chart.names):
                dp = p.diff(name)
                if dp.is_zero():
                    continue
                nidx = (i,) + idx
                out[nidx] = out.get(nidx, self.chart.zero()) + dp
        return ExteriorForm(self.chart, self.degree + 1, out)

    def wedge(self, other):
        """Wedge product (enough generality for degrees used here)."""
        out = {}
        for i1, p1 in self.components.items():
            for i2, p2 in other.components.items():
                out[i1 + i2] = out.get(i1 + i2, self.chart.zero()) + p1 * p2
        return ExteriorForm(self.chart, self.degree + other.degree, out)

    def contract(self, field):
        """Interior product with a vector field (first slot)."""
        out = {}
        for idx, p in self.components.items():
            for pos, i in enumerate(idx):
                name = self.chart.names[i]
                xc = field.component(name)
                if xc.is_zero():
                    continue
                sign = -1 if pos % 2 else 1
                nidx = idx[:pos] + idx[pos + 1:]
                out[nidx] = out.get(nidx, self.chart.zero()) + xc * p * sign
        return ExteriorForm(self.chart, self.degree - 1, out)

    def scalar(self):
        """A 0-form's unique component as a CoordPoly."""
        if self.degree != 0:
            raise ValueError("not a 0-form")
        return self.components.get((), self.chart.zero())

    def __repr__(self):
        if not self.components:
            return "0"
        names = self.chart.names
        parts = []
        for idx in sorted(self.components):
            mono = "^".join("d%s" % names[i] for i in idx) or "1"
            parts.append("(%s)*%s" % (self.components[idx], mono))
        return " + ".join(parts)


def _sort_index(idx):
    if len(set(idx)) != len(idx):
        return None, 0
    inv = sum(1 for a, b in itertools.combinations(range(len(idx)), 2)
              if idx[a] > idx[b])
    return tuple(sorted(idx)), (-1 if inv % 2 else 1)


def one_form(chart, components):
    """1-form from a dict variable name -> coefficient polynomial."""
    comp = {}
    for name, p in components.items():
        comp[(chart.index(name),)] = poly(p, chart)
    return ExteriorForm(chart, 1, comp)


def differential(f):
    """df as a 1-form."""
    chart = f.chart
    return ExteriorForm(chart, 1,
                        {(i,): f.diff(name)
                         for i, name in enumerate(chart.names)})


def lie_derivative_form(field, form):
    """Cartan formula: L_X = i_X d + d i_X."""
    return form.d().contract(field) + form.contract(field).d()


class PolyBivector:
    """Antisymmetric bivector pi^ij on a chart."""

    def __init__(self, chart, components=None):
        self.chart = chart
        comp = {}
        for key, p in (components or {}).items():
            i, j = key
            if isinstance(i, str):
                i = chart.index(i)
            if isinstance(j, str):
                j = chart.index(j)
            if i == j:
                continue
            p = poly(p, chart)
            if i > j:
                i, j, p = j, i, -p
            if (i, j) in comp:
                comp[(i, j)] = comp[(i, j)] + p
            else:
                comp[(i, j)] = p
        self.components = {k: v for k, v in comp.items() if not v.is_zero()}

    def component(self, i, j):
        if isinstance(i, str):
            i = self.chart.index(i)
        if isinstance(j, str):
            j = self.chart.index(j)
        if i == j:
            return self.chart.zero()
        if i < j:
            return self.components.get((i, j), self.chart.zero())
        return -self.components.get((j, i), self.chart.zero())

    def __add__(self, other):
        out = dict(self.components)
        for k, p in other.components.items():
            out[k] = out.get(k, self.chart.zero()) + p
        return PolyBivector(self.chart, out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return PolyBivector(self.chart, {k: -p for k, p in self.components.items()})

    def __mul__(self, f):
        return PolyBivector(self.chart, {k: p * f for k, p in self.components.items()})

    __rmul__ = __mul__

    def is_zero(self):
        return not self.components

    def __eq__(self, other):
        if not isinstance(other, PolyBivector):
            return NotImplemented
        return (self - other).is_zero()

    __hash__ = None

    def __repr__(self):
        names = self.chart.names
        if not self.components:
            return "0"
        return " + ".join("(%s)*d_%s^d_%s" % (p, names[i], names[j])
                          for (i, j), p in sorted(self.components.items()))

    # -- contraction ------------------------------------------------------

    def pair(self, alpha, beta):
        """pi(alpha, beta) as a polynomial."""
        out = self.chart.zero()
        for (i, j), p in self.components.items():
            ai = alpha.component(i)
            aj = alpha.component(j)
            bi = beta.component(i)
            bj = beta.component(j)
            out = out + p * (ai * bj - aj * bi)
        return out

    def sharp(self, alpha):
        """pi_sharp(alpha)^j = sum_i pi^ij alpha_i."""
        comp = {}
        for (i, j), p in self.components.items():
            ni = self.chart.names[i]
            nj = self.chart.names[j]
            ai = alpha.component(i)
            aj = alpha.component(j)
            if not ai.is_zero():
                comp[nj] = comp.get(nj, self.chart.zero()) + p * ai
            if not aj.is_zero():
                comp[ni] = comp.get(ni, self.chart.zero()) - p * aj
        return PolyVectorField(self.chart, comp)

    def bracket(self, f, g):
        """{f, g} = pi(df, dg)."""
        f = poly(f, self.chart)
        g = poly(g, self.chart)
        out = self.chart.zero()
        names = self.chart.names
        for (i, j), p in self.components.items():
            out = out + p * (f.diff(names[i]) * g.diff(names[j])
                             - f.diff(names[j]) * g.diff(names[i]))
        return out


def poisson_bracket(pi, f, g):
    return pi.bracket(f, g)


def hamiltonian_field(pi, f):
    """X_f = pi_sharp(df) = {f, .}.

    The opposite orientation {., f} differs by a global sign; fixtures that
    quote tables using it record that sign rather than changing this map.
    """
    return pi.sharp(differential(poly(f, pi.chart)))


def check_jacobi_coords(pi):
    """pi^{hi} d_h pi^{jk} + cyclic = 0 for all i<j<k, reported exactly."""
    chart = pi.chart
    names = chart.names
    failures = []
    n = len(names)
    for i, j, k in itertools.combinations(range(n), 3):
        acc = chart.zero()
        for (a, b, c) in ((i, j, k), (j, k, i), (k, i, j)):
            for h in range(n):
                p = pi.component(h, a)
                if p.is_zero():
                    continue
                acc = acc + p * pi.component(b, c).diff(names[h])
        if not acc.is_zero():
            failures.append("jacobi defect at (%s,%s,%s): %s"
                            % (names[i], names[j], names[k], acc))
            break
    return Report.from_failures("jacobi-coords", failures)


def casimir_check(pi, f, eliminate=None):
    """Verify {f, v} = 0 for every chart variable v.

    ``eliminate`` is an optional (variable, replacement) pair used to reduce
    modulo a constraint such as det = 1 before testing for zero.
    """
    chart = pi.chart
    f = poly(f, chart)
    failures = []
    for v in chart.names:
        b = pi.bracket(f, chart.var(v))
        if eliminate is not None:
            var, repl = eliminate
            b = b.subs({var: repl}, repl.chart)
        if not b.is_zero():
            failures.append("{%s, %s} = %s" % (f, v, b))
    return Report.from_failures("casimir", failures)


def lie_derivative_bivector(field, pi):
    """(L_X pi)^{ij} = X[pi^{ij}] - pi^{kj} d_k X^i - pi^{ik} d_k X^j."""
    chart = pi.chart
    names = chart.names
    n = len(names)
    out = {}
    for i in range(n):
        for j in range(i + 1, n):
            acc = field.apply(pi.component(i, j))
            for k in range(n):
                xk = names[k]
                acc = acc - pi.component(k, j) * field.component(names[i]).diff(xk)
                acc = acc - pi.component(i, k) * field.component(names[j]).diff(xk)
            if not acc.is_zero():
                out[(i, j)] = acc
    return PolyBivector(chart, out)


def fields_wedge(x, y):
    """x ^ y as a bivector: components x^i y^j - x^j y^i."""
    chart = x.chart
    out = {}
    names = chart.names
    for i in range(len(names)):
        for j in range(i + 1, len(names)):
            p = x.component(names[i]) * y.component(names[j]) \
                - x.component(names[j]) * y.component(names[i])
            if not p.is_zero():
                out[(i, j)] = p
    return PolyBivector(chart, out)


def koszul_bracket(pi, alpha, beta):
    """[alpha, beta]_pi = L_{pi#alpha} beta - L_{pi#beta} alpha - d(pi(alpha, beta)).

    This is the unique extension of [df, dg]_pi = d{f, g} satisfying
    [alpha, f*beta] = f*[alpha, beta] + (pi#(alpha)f)*beta, and it makes
    pi# a Lie algebra homomorphism into vector fields.
    """
    xa = pi.sharp(alpha)
    xb = pi.sharp(beta)
    pab = pi.pair(alpha, beta)
    return lie_derivative_form(xa, beta) - lie_derivative_form(xb, alpha) \
        - differential(pab)
