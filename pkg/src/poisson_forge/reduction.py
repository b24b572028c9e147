"""Classical Poisson reduction at polynomial scale.

Invariant functions are computed by exact linear algebra on graded monomial
components; ideal membership is multivariate division against the small,
explicit generator sets of the fixtures (no general Groebner machinery).
The two reduction pipelines -- the quotient bracket on invariant
representatives modulo the momentum ideal, and the invariants-of-quotient
algebra -- are built to be cross-checkable on a shared fixture.
"""

from __future__ import annotations

import itertools
import random

from .coordpoly import Chart, CoordPoly, poly
from .errors import CapabilityError
from .linalg import kernel_basis, rref, in_row_span
from .report import Report
from .scalars import ZERO, ONE, gauss


class ReductionSetup:
    """Chart + bivector + action fields + momentum data + ideal generators."""

    def __init__(self, pi, algebra, action, hamiltonians=None, ideal=()):
        self.pi = pi
        self.chart = pi.chart
        self.algebra = algebra
        self.action = action
        self.hamiltonians = hamiltonians or {}
        self.ideal = [poly(g, self.chart) for g in ideal]


def monomial_basis(chart, degree):
    """All monomials of total degree <= degree with nonnegative exponents."""
    n = len(chart.names)
    out = []

    def rec(prefix, remaining):
        if len(prefix) == n:
            out.append(tuple(prefix))
            return
        for e in range(remaining + 1):
            rec(prefix + [e], remaining - e)

    rec([], degree)
    out.sort(key=lambda t: (sum(t), t))
    return out


def _scalar_coeff(series):
    """The Q(i) value of a coefficient that must be hbar-free."""
    for k in range(1, len(series.coeffs)):
        if series.coeffs[k]:
            raise CapabilityError("classical reduction met an hbar-dependent "
                                  "coefficient: %s" % series)
    return series.constant_term()


def _expand(p, basis_index):
    row = [ZERO] * len(basis_index)
    for exps, c in p.terms.items():
        if exps not in basis_index:
            raise CapabilityError("polynomial leaves the graded component: "
                                  "monomial %s" % (exps,))
        row[basis_index[exps]] = _scalar_coeff(c)
    return row


def invariant_functions(setup, degree):
    """Basis of polynomials of degree <= degree killed by all action fields.

    Returns (basis polynomials, closure report): the bracket of any two
    basis elements is verified to lie in the invariant span computed at the
    bracket's actual degree.
    """
    basis, _ = _raw_invariants(setup, degree)
    closure = _check_bracket_closure(setup, basis)
    return basis, closure


def _check_bracket_closure(setup, basis):
    """{f, g} of invariants is invariant: verify membership in the invariant
    span at the bracket's degree."""
    failures = []
    cache = {}
    for f, g in itertools.combinations(basis, 2):
        b = setup.pi.bracket(f, g)
        if b.is_zero():
            continue
        deg = b.total_degree()
        if deg not in cache:
            monos = monomial_basis(setup.chart, deg)
            index = {m: i for i, m in enumerate(monos)}
            inv, _ = _raw_invariants(setup, deg)
            cache[deg] = (index, [_expand(p, index) for p in inv])
        index, span = cache[deg]
        if not in_row_span(span, _expand(b, index)):
            failures.append("{%s, %s} = %s leaves the invariant span"
                            % (f, g, b))
    return Report.from_failures("invariant-closure", failures)


def _raw_invariants(setup, degree):
    chart = setup.chart
    monos = monomial_basis(chart, degree)
    fields = list(setup.action.values())
    max_out = degree
    for f in fields:
        for p in f.components.values():
            max_out = max(max_out, degree - 1 + p.total_degree())
    out_monos = monomial_basis(chart, max_out)
    out_index = {m: i for i, m in enumerate(out_monos)}
    rows = []
    for m in monos:
        mono_poly = CoordPoly(chart, {m: ONE})
        col = []
        for f in fields:
            col.extend(_expand(f.apply(mono_poly), out_index))
        rows.append(col)
    mat = [list(r) for r in zip(*rows)] if rows else []
    kern = kernel_basis(mat, len(monos))
    basis = []
    for v in kern:
        p = chart.zero()
        for coeff, m in zip(v, monos):
            if coeff:
                p = p + CoordPoly(chart, {m: coeff})
        basis.append(p)
    return basis, monos


# ---------------------------------------------------------------------------
# Ideal arithmetic: multivariate division against explicit generators
# ---------------------------------------------------------------------------

def _lead(p):
    """Lex-largest monomial of p with its coefficient."""
    m = max(p.terms)
    return m, p.terms[m]


def _divides(m, t):
    return all(a <= b for a, b in zip(m, t))


def reduce_mod_ideal(p, gens, max_steps=10000):
    """Remainder of p under division by the generators (lex order)."""
    if not gens:
        return p
    p = poly(p, gens[0].chart)
    steps = 0
    changed = True
    while changed and not p.is_zero():
        changed = False
        for g in gens:
            gm, gc = _lead(g)
            for t in sorted(p.terms, reverse=True):
                if _divides(gm, t):
                    shift = tuple(a - b for a, b in zip(t, gm))
                    factor = CoordPoly(p.chart, {shift: p.terms[t] * gc.inverse()})
                    p = p - factor * g
                    changed = True
                    steps += 1
                    if steps > max_steps:
                        raise CapabilityError("ideal reduction did not "
                                              "terminate within %d steps" % max_steps)
                    break
            if changed:
                break
    return p


def in_ideal(p, gens):
    return reduce_mod_ideal(p, gens).is_zero()


def check_ideal_poisson_closed(setup):
    """{I, I} subset I on the generators: each pairwise bracket reduces to 0."""
    failures = []
    gens = setup.ideal
    for f, g in itertools.combinations(gens, 2):
        b = setup.pi.bracket(f, g)
        r = reduce_mod_ideal(b, gens)
        if not r.is_zero():
            failures.append("{%s, %s} = %s escapes the ideal (remainder %s)"
                            % (f, g, b, r))
    return Report.from_failures("ideal-poisson-closed", failures)


def check_ideal_invariant(setup):
    """The action preserves the ideal: each field applied to each generator
    reduces to 0 modulo the ideal."""
    failures = []
    for name, field in setup.action.items():
        for g in setup.ideal:
            r = reduce_mod_ideal(field.apply(g), setup.ideal)
            if not r.is_zero():
                failures.append("%s_M(%s) = %s escapes the ideal"
                                % (name, g, field.apply(g)))
    return Report.from_failures("ideal-invariant", failures)


def reduced_bracket(setup, f, g, perturbations=20, seed=0, perturb_degree=1):
    """Bracket of two invariant-mod-I representatives on the quotient.

    Returns (class representative, well-definedness report): the class is
    re-computed after perturbing each representative by random ideal
    elements and must not move.
    """
    gens = setup.ideal
    chart = setup.chart
    f = poly(f, chart)
    g = poly(g, chart)
    base = reduce_mod_ideal(setup.pi.bracket(f, g), gens)
    rng = random.Random(seed)
    monos = monomial_basis(chart, perturb_degree)
    failures = []
    for trial in range(perturbations):
        fp = f
        gp = g
        for gen in gens:
            fp = fp + _random_poly(rng, chart, monos) * gen
            gp = gp + _random_poly(rng, chart, monos) * gen
        got = reduce_mod_ideal(setup.pi.bracket(fp, gp), gens)
        if not (got - base).is_zero():
            failures.append("perturbation %d moved the class: %s vs %s"
                            % (trial, got, base))
    return base, Report.from_failures("reduced-bracket-well-defined", failures)


def _random_poly(rng, chart, monos):
    out = chart.zero()
    for m in monos:
        c = rng.randint(-2, 2)
        if c:
            out = out + CoordPoly(chart, {m: gauss(c)})
    return out


def sw_reduced_algebra(setup, degree):
    """Basis of (invariants mod I) up to the given degree with the induced
    bracket table.

    Returns (classes, table, report): ``classes`` are reduced representatives
    of a linearly independent set, ``table`` maps index pairs to reduced
    brackets, and the report verifies the induced bracket of classes is
    well defined (representative independence via reduced_bracket) and that
    Jacobi holds for the quotient bracket on tested triples.
    """
    invariants, closure = invariant_functions(setup, degree)
    gens = setup.ideal
    chart = setup.chart
    reduced = [reduce_mod_ideal(p, gens) for p in invariants]
    # independent classes via row reduction over the ambient monomial basis
    max_deg = max([p.total_degree() for p in reduced] + [degree])
    monos = monomial_basis(chart, max_deg)
    index = {m: i for i, m in enumerate(monos)}
    classes = []
    span = []
    for p in reduced:
        if p.is_zero():
            continue
        row = _expand(p, index)
        if not in_row_span(span, row):
            classes.append(p)
            span = [r for r in rref(span + [row])[0] if any(r)]
    table = {}
    failures = []
    for i, j in itertools.combinations(range(len(classes)), 2):
        cls, rep = reduced_bracket(setup, classes[i], classes[j])
        table[(i, j)] = cls
        if not rep.ok:
            failures.extend(rep.failures)
    # Jacobi on the quotient for tested triples
    for i, j, k in itertools.combinations(range(len(classes)), 3):
        acc = chart.zero()
        for (a, b, c) in ((i, j, k), (j, k, i), (k, i, j)):
            inner = reduce_mod_ideal(setup.pi.bracket(classes[a], classes[b]), gens)
            acc = acc + setup.pi.bracket(inner, classes[c])
        if not reduce_mod_ideal(acc, gens).is_zero():
            failures.append("quotient Jacobi fails on classes (%d,%d,%d)"
                            % (i, j, k))
    report = Report.from_failures("sw-reduced-algebra", failures,
                                  notes=closure.failures)
    return classes, table, report
