"""Matrix-group models: Poisson-Lie bivectors, Maurer-Cartan forms, dressing.

A MatrixGroupModel is an n x n matrix of chart variables and scalar
constants, together with an embedded Lie algebra basis of constant matrices
(validated against the declared structure constants) and, optionally, a
determinant-type constraint handled by eliminating one variable on a chart
where some entry is invertible.

The Poisson-Lie bivector built from an r-matrix is the lambda - rho
extension: pi(g) = sum r^{ab} (X^L_a (x) X^L_b - X^R_a (x) X^R_b), where
X^L_e(g) = g.e and X^R_e(g) = e.g entrywise.  Several published tables use
the opposite orientation rho - lambda; fixtures record that constant.
"""

from __future__ import annotations

import itertools

from .coordpoly import Chart, CoordPoly, poly
from .lie import RMatrix
from .poisson import PolyBivector, PolyVectorField, ExteriorForm, one_form
from .report import Report
from .scalars import gauss, ZERO


class MatrixGroupModel:
    """A matrix group chart with an embedded Lie algebra basis."""

    def __init__(self, algebra, entries, chart, basis_matrices,
                 eliminate=None, name=""):
        """``entries``: n x n lists of variable names or scalars.
        ``basis_matrices``: one constant matrix (rows of scalars) per basis
        element of ``algebra``; commutators are validated.
        ``eliminate``: optional (variable, replacement CoordPoly on the
        reduced chart) realizing the group constraint."""
        self.algebra = algebra
        self.n = len(entries)
        self.chart = chart
        self.name = name or "matrix-group"
        self.entries = [
            [e if isinstance(e, str) else gauss(e) for e in row]
            for row in entries
        ]
        self.basis = [[[gauss(x) for x in row] for row in mat]
                      for mat in basis_matrices]
        self.eliminate = eliminate
        self._validate_basis()

    def _validate_basis(self):
        L = self.algebra
        for i in range(L.dim):
            for j in range(L.dim):
                if i == j:
                    continue
                comm = _mat_sub(_mat_mul_const(self.basis[i], self.basis[j]),
                                _mat_mul_const(self.basis[j], self.basis[i]))
                want = _zero_mat(self.n)
                for k, c in L.bracket_basis(i, j).items():
                    want = _mat_add(want, _mat_scale(self.basis[k], c))
                if comm != want:
                    raise ValueError(
                        "matrix basis does not realize [%s,%s]"
                        % (L.basis_names[i], L.basis_names[j]))

    # -- entries as polynomials -------------------------------------------

    def entry_poly(self, i, j):
        e = self.entries[i][j]
        if isinstance(e, str):
            return self.chart.var(e)
        return poly(e, self.chart)

    def matrix_poly(self):
        return [[self.entry_poly(i, j) for j in range(self.n)]
                for i in range(self.n)]

    def variable_positions(self):
        out = {}
        for i in range(self.n):
            for j in range(self.n):
                if isinstance(self.entries[i][j], str):
                    out[self.entries[i][j]] = (i, j)
        return out

    def reduce(self, p):
        """Reduce a polynomial modulo the constraint by elimination."""
        if self.eliminate is None:
            return p
        var, repl = self.eliminate
        if var not in p.chart.names:
            return p
        return p.subs({var: repl}, repl.chart)

    def inverse_matrix(self):
        """Exact inverse via the adjugate; the determinant must be a unit
        monomial on the chart (triangular models, det = 1 charts)."""
        m = self.matrix_poly()
        det = _det(m)
        det_inv = det.inverse()  # raises for non-unit determinants
        n = self.n
        inv = [[None] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                minor = [[m[r][c] for c in range(n) if c != i]
                         for r in range(n) if r != j]
                sign = -1 if (i + j) % 2 else 1
                inv[i][j] = _det(minor) * sign * det_inv if n > 1 else det_inv
        return inv


def _zero_mat(n):
    return [[ZERO] * n for _ in range(n)]


def _mat_mul_const(a, b):
    n = len(a)
    return [[sum((a[i][k] * b[k][j] for k in range(n)), ZERO)
             for j in range(n)] for i in range(n)]


def _mat_add(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def _mat_sub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def _mat_scale(a, c):
    return [[x * c for x in row] for row in a]


def _det(m):
    n = len(m)
    if n == 1:
        return m[0][0]
    first = m[0][0]
    chart = first.chart if isinstance(first, CoordPoly) else None
    out = None
    for j in range(n):
        minor = [row[:j] + row[j + 1:] for row in m[1:]]
        term = m[0][j] * _det(minor)
        term = term if j % 2 == 0 else -term
        out = term if out is None else out + term
    return out


# ---------------------------------------------------------------------------
# Poisson-Lie bivector from an r-matrix
# ---------------------------------------------------------------------------

def _translated_field(model, mat, side):
    """X^L_e(g) = g.e or X^R_e(g) = e.g as a vector field on entry variables."""
    g = model.matrix_poly()
    const = [[poly(x, model.chart) for x in row] for row in mat]
    prod = _poly_mat_mul(g, const) if side == "L" else _poly_mat_mul(const, g)
    comp = {}
    for name, (i, j) in model.variable_positions().items():
        if not prod[i][j].is_zero():
            comp[name] = prod[i][j]
    return PolyVectorField(model.chart, comp)


def _poly_mat_mul(a, b):
    n = len(a)
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            acc = None
            for k in range(n):
                t = a[i][k] * b[k][j]
                acc = t if acc is None else acc + t
            row.append(acc)
        out.append(row)
    return out


def pl_group_bivector(model, r):
    """pi(g) = sum_ab r_a^{ab} (X^L_a (x) X^L_b - X^R_a (x) X^R_b).

    Only the antisymmetric part of r enters.  The result vanishes at the
    identity and is multiplicative as a free polynomial identity in the
    entries.
    """
    if isinstance(r, RMatrix):
        ra = r.antisymmetric
    else:
        ra = r.antisymmetric_part()
    left = [_translated_field(model, mat, "L") for mat in _basis_poly(model)]
    right = [_translated_field(model, mat, "R") for mat in _basis_poly(model)]
    chart = model.chart
    out = PolyBivector(chart)
    from .poisson import fields_wedge
    done = set()
    for (a, b), coeff in ra.components.items():
        if (b, a) in done:
            continue
        done.add((a, b))
        # use antisymmetry: coeff * (Xa (x) Xb - Xb (x) Xa) both sides
        wl = fields_wedge(left[a], left[b])
        wr = fields_wedge(right[a], right[b])
        out = out + (wl - wr) * coeff
    return out


def _basis_poly(model):
    return model.basis


def vanishes_at_identity(model, pi):
    """Evaluate the bivector components at the identity matrix entries."""
    assignment = {}
    for name, (i, j) in model.variable_positions().items():
        assignment[name] = 1 if i == j else 0
    for (i, j), p in pi.components.items():
        if p.eval_scalar(assignment):
            return False
    return True


def check_multiplicative(model, pi):
    """pi(gh) = lambda_g pi(h) + rho_h pi(g) on two disjoint variable sets.

    The identity is free in the matrix entries (no constraint needed): both
    sides are polynomials on the doubled chart and must agree exactly.
    """
    n = model.n
    pos = model.variable_positions()
    gchart = Chart(["g_" + v for v in model.chart.names],
                   ["g_" + v for v in model.chart.invertible])
    hchart = Chart(["h_" + v for v in model.chart.names],
                   ["h_" + v for v in model.chart.invertible])
    both = Chart(gchart.names + hchart.names,
                 gchart.invertible | hchart.invertible)

    def lift(i, j, prefix):
        e = model.entries[i][j]
        if isinstance(e, str):
            return both.var(prefix + e)
        return poly(e, both)

    gm = [[lift(i, j, "g_") for j in range(n)] for i in range(n)]
    hm = [[lift(i, j, "h_") for j in range(n)] for i in range(n)]
    prod = _poly_mat_mul(gm, hm)

    # positions of variable entries, indexed like the bivector components
    names = list(model.chart.names)
    entry_of = {name: pos[name] for name in pos}

    def comp_at(pi_, u, v, matrices):
        """Evaluate pi^{uv} with each chart variable replaced by the entry
        polynomial of the given matrix."""
        assignment = {name: matrices[entry_of[name][0]][entry_of[name][1]]
                      for name in names}
        return pi_.component(u, v).subs(assignment, both)

    failures = []
    for ui in range(len(names)):
        for vi in range(ui + 1, len(names)):
            lhs = comp_at(pi, ui, vi, prod)
            # lambda_g pi(h): sum over source components of pi at h
            acc = both.zero()
            (ri, rj) = entry_of[names[ui]]
            (si, sj) = entry_of[names[vi]]
            for ai in range(len(names)):
                for bi in range(len(names)):
                    p = pi.component(ai, bi)
                    if p.is_zero():
                        continue
                    (ci, cj) = entry_of[names[ai]]
                    (di, dj) = entry_of[names[bi]]
                    # push forward d/dh_{ci cj} along left translation:
                    # (gh)_{r rj'} depends on h_{c cj} with coefficient g_{r c}
                    if cj == rj and dj == sj:
                        hcomp = {name: hm[entry_of[name][0]][entry_of[name][1]]
                                 for name in names}
                        pv = p.subs(hcomp, both)
                        acc = acc + pv * gm[ri][ci] * gm[si][di]
                    # push forward along right translation:
                    # (gh)_{ri j'} depends on g_{ri c}? handled below
            for ai in range(len(names)):
                for bi in range(len(names)):
                    p = pi.component(ai, bi)
                    if p.is_zero():
                        continue
                    (ci, cj) = entry_of[names[ai]]
                    (di, dj) = entry_of[names[bi]]
                    if ci == ri and di == si:
                        gcomp = {name: gm[entry_of[name][0]][entry_of[name][1]]
                                 for name in names}
                        pv = p.subs(gcomp, both)
                        acc = acc + pv * hm[cj][rj] * hm[dj][sj]
            if not (lhs - acc).is_zero():
                failures.append("multiplicativity defect at (%s,%s): %s"
                                % (names[ui], names[vi], lhs - acc))
    return Report.from_failures("multiplicative", failures)


# ---------------------------------------------------------------------------
# Maurer-Cartan forms and dressing fields
# ---------------------------------------------------------------------------

def maurer_cartan_forms(model, dual_basis_names=None):
    """Left-invariant forms from g^-1 dg expanded on the model's algebra basis.

    Returns a dict mapping each basis name of the *dual* pairing side (by
    default the algebra's own names) to the 1-form theta whose value at the
    identity is the corresponding dual basis vector.
    """
    n = model.n
    chart = model.chart
    inv = model.inverse_matrix()
    g = model.matrix_poly()
    pos = model.variable_positions()

    # (g^-1 dg)_{kl} = sum_m inv[k][m] d(g[m][l]) : a matrix of 1-forms
    mc = [[None] * n for _ in range(n)]
    for k in range(n):
        for l in range(n):
            acc = ExteriorForm(chart, 1)
            for m in range(n):
                e = model.entries[m][l]
                if isinstance(e, str):
                    acc = acc + one_form(chart, {e: inv[k][m]})
            mc[k][l] = acc

    # solve mc = sum_a theta_a * E_a positionwise over Q(i)
    from .linalg import solve
    positions = [(i, j) for i in range(n) for j in range(n)]
    rows = []
    for (i, j) in positions:
        rows.append([model.basis[a][i][j] for a in range(model.algebra.dim)])

    names = dual_basis_names or model.algebra.basis_names
    thetas = {name: ExteriorForm(chart, 1) for name in names}
    # expand componentwise: for each chart variable v, the coefficient
    # vector of dv across matrix positions must be solvable in the basis
    for v in chart.names:
        rhs = []
        for (i, j) in positions:
            rhs.append(mc[i][j].component(chart.index(v)))
        # solve with polynomial right-hand side by solving coefficient-wise
        sol = _solve_poly_system(rows, rhs, chart)
        if sol is None:
            raise ValueError("g^-1 dg does not lie in the span of the "
                             "algebra basis (entry d%s)" % v)
        for a, name in enumerate(names):
            if not sol[a].is_zero():
                thetas[name] = thetas[name] + one_form(chart, {v: sol[a]})
    return thetas


def _solve_poly_system(rows, rhs_polys, chart):
    """Solve A x = b where A has scalar entries and b has CoordPoly entries.

    The solution vector has CoordPoly entries; solves independently for each
    monomial/series coefficient.
    """
    from .linalg import solve
    # collect all (monomial, series-slot) into separate scalar systems
    keys = set()
    for p in rhs_polys:
        for exps, c in p.terms.items():
            for k in range(c.order):
                if c.coeff(k):
                    keys.add((exps, k))
    sols = [chart.zero() for _ in range(len(rows[0]))]
    from .scalars import HSeries
    for (exps, k) in sorted(keys):
        b = []
        for p in rhs_polys:
            c = p.terms.get(exps)
            b.append(c.coeff(k) if c is not None and k < c.order else ZERO)
        x = solve(rows, b)
        if x is None:
            return None
        for a, val in enumerate(x):
            if val:
                coeffs = [ZERO] * k + [val]
                sols[a] = sols[a] + CoordPoly(chart, {exps: HSeries(coeffs)})
    return sols


def check_maurer_cartan(thetas, cobracket, names=None):
    """Evaluate both published forms of the structure identity.

    Variant "half": d theta_xi + (1/2) theta^theta o delta(xi) = 0.
    Variant "plain": d theta_xi - theta^theta o delta(xi) = 0.
    Returns a report per variant; the fixture decides which one its tables
    use, the checker reports both.
    """
    L = cobracket.algebra
    names = names or L.basis_names
    reports = {}
    for variant, factor in (("half", gauss("1/2")), ("plain", gauss(-1))):
        failures = []
        for i, name in enumerate(names):
            theta = thetas[name]
            acc = theta.d()
            img = cobracket.image(i)
            for (j, k), c in img.components.items():
                term = thetas[names[j]].wedge(thetas[names[k]]) * (c * factor)
                acc = acc + term
            if not acc.is_zero():
                failures.append("MC(%s) defect for %s: %s" % (variant, name, acc))
        reports[variant] = Report.from_failures("maurer-cartan-%s" % variant,
                                                failures)
    return reports


def dressing_fields(pi, thetas, algebra):
    """l(xi) = pi#(theta_xi); verifies [l(xi), l(eta)] = l([xi,eta])."""
    fields = {name: pi.sharp(theta) for name, theta in thetas.items()}
    failures = []
    names = algebra.basis_names
    for i, j in itertools.combinations(range(len(names)), 2):
        lhs = fields[names[i]].bracket(fields[names[j]])
        rhs = PolyVectorField(pi.chart, {})
        for k, c in algebra.bracket_basis(i, j).items():
            rhs = rhs + fields[names[k]] * poly(c, pi.chart)
        if not (lhs - rhs).is_zero():
            failures.append("[l(%s),l(%s)] != l([%s,%s])"
                            % (names[i], names[j], names[i], names[j]))
    return fields, Report.from_failures("dressing-homomorphism", failures)


def left_invariant_fields(model):
    """X^L_e(g) = g.e for each basis element, as fields on the chart."""
    return {model.algebra.basis_names[a]: _translated_field(model, model.basis[a], "L")
            for a in range(model.algebra.dim)}


def check_theta_translation_identity(model, pi, thetas, dual_algebra,
                                     coad_table):
    """L_X pi(theta_xi, theta_eta) = x([xi,eta]) + pi(theta_{ad*_x xi}, theta_eta)
    + pi(theta_xi, theta_{ad*_x eta}) for left-invariant X with X(e) = x.

    ``coad_table[x][xi]`` is the coefficient vector of ad*_x xi on the basis
    paired with the thetas.  The scalar x([xi,eta]) enters as a constant.
    """
    L = dual_algebra  # the algebra of the pairing side (g), constants c
    names = list(thetas)
    fields = left_invariant_fields(model)
    failures = []
    for xname, X in fields.items():
        for i, j in itertools.combinations(range(len(names)), 2):
            ti, tj = names[i], names[j]
            lhs = X.apply(pi.pair(thetas[ti], thetas[tj]))
            # x([xi, eta]): pairing of the dual-basis vector with the bracket
            xi_idx = model.algebra.basis_names.index(xname)
            acc = poly(L.structure_constant(i, j, xi_idx), pi.chart)
            for k, c in coad_table[xname].get(ti, {}).items():
                acc = acc + pi.pair(thetas[k], thetas[tj]) * c
            for k, c in coad_table[xname].get(tj, {}).items():
                acc = acc + pi.pair(thetas[ti], thetas[k]) * c
            if not (lhs - acc).is_zero():
                failures.append("theta-translation defect at X=%s (%s,%s): %s"
                                % (xname, ti, tj, lhs - acc))
    return Report.from_failures("theta-translation", failures)
