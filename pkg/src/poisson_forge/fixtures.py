"""Shipped example structures and their expected tables.

Each fixture corresponds to a worked example in the Poisson-Lie /
quantum-group literature.  Expected tables are stored together with a
recorded normalization constant per table: our conventions are fixed once
(wedge = (x) - (x) with no 1/2, bivector built as lambda - rho, hamiltonian
field X_f = {f, .}), while published tables mix orientations and 1/2-wedge
factors, so `scale` records exactly the constant by which our derived table
differs.  A scale of 1 means the table is reproduced verbatim.
"""

from __future__ import annotations

from fractions import Fraction

from .scalars import GaussRational, HSeries, gauss, hexp
from .coordpoly import Chart, poly
from .lie import LieAlgebra, Tensor, RMatrix, Cobracket, basis_tensor, wedge


# ---------------------------------------------------------------------------
# Lie algebras
# ---------------------------------------------------------------------------

def axb_algebra():
    """The 2-dimensional nonabelian algebra: [X, Y] = X."""
    return LieAlgebra(["X", "Y"], {(0, 1): {0: 1}})


def sl2_algebra():
    """sl(2): [H,X] = 2X, [H,Y] = -2Y, [X,Y] = H, basis order (H, X, Y)."""
    return LieAlgebra(["H", "X", "Y"], {
        (0, 1): {1: 2},
        (0, 2): {2: -2},
        (1, 2): {0: 1},
    })


def su2_algebra():
    """su(2): [e1,e2] = e3, [e2,e3] = e1, [e3,e1] = e2."""
    return LieAlgebra(["e1", "e2", "e3"], {
        (0, 1): {2: 1},
        (1, 2): {0: 1},
        (0, 2): {1: -1},
    })


def r2_bialgebra():
    """The plane algebra of the running example: [xi, eta] = eta with
    cobracket delta(xi) = 0, delta(eta) = xi ^ eta."""
    L = LieAlgebra(["xi", "eta"], {(0, 1): {1: 1}})
    d = Cobracket.from_tensors(L, {"eta": wedge(L, "xi", "eta")})
    return L, d


def heisenberg_dual_bialgebra():
    """g with dual the Heisenberg algebra: basis xi, eta, zeta and
    delta(zeta) = xi ^ eta, rotation-type brackets [xi,zeta] = eta,
    [eta,zeta] = -xi, [xi,eta] = 0."""
    L = LieAlgebra(["xi", "eta", "zeta"], {
        (0, 2): {1: 1},
        (1, 2): {0: -1},
    })
    d = Cobracket.from_tensors(L, {"zeta": wedge(L, "xi", "eta")})
    return L, d


def so3_algebra():
    """so(3) with [L1,L2] = L3 cyclically (same constants as su(2))."""
    return LieAlgebra(["L1", "L2", "L3"], {
        (0, 1): {2: 1},
        (1, 2): {0: 1},
        (0, 2): {1: -1},
    })


# ---------------------------------------------------------------------------
# r-matrices
# ---------------------------------------------------------------------------

def axb_r():
    """r = X ^ Y, a skew solution of the classical Yang-Baxter equation."""
    L = axb_algebra()
    return L, RMatrix(wedge(L, "X", "Y"))


def sl2_r_quasitriangular():
    """r = (1/8)(H (x) H + 4 X (x) Y), factorisable."""
    L = sl2_algebra()
    t = basis_tensor(L, "H", "H") * Fraction(1, 8) \
        + basis_tensor(L, "X", "Y") * Fraction(1, 2)
    return L, RMatrix(t)


def sl2_r_triangular():
    """r = X (x) H - H (x) X, triangular."""
    L = sl2_algebra()
    t = basis_tensor(L, "X", "H") - basis_tensor(L, "H", "X")
    return L, RMatrix(t)


def su2_r():
    """r = 2 e2 ^ e3."""
    L = su2_algebra()
    return L, RMatrix(wedge(L, "e2", "e3") * 2)


def sl2_casimir():
    """t = (1/8) H (x) H + (1/4)(X (x) Y + Y (x) X), ad-invariant."""
    L = sl2_algebra()
    t = basis_tensor(L, "H", "H") * Fraction(1, 8) \
        + (basis_tensor(L, "X", "Y") + basis_tensor(L, "Y", "X")) * Fraction(1, 4)
    return L, t


# ---------------------------------------------------------------------------
# Expected bialgebra tables.  `scale` relates our derived value to the
# published one: derived = scale * published.
# ---------------------------------------------------------------------------

def axb_expected():
    L, r = axb_r()
    return {
        "algebra": L,
        "r": r,
        "cobracket": {"X": Tensor(L, 2), "Y": -wedge(L, "X", "Y")},
        "cobracket_scale": Fraction(1),
        # [X*, Y*] = -Y*
        "dual_table": {("X*", "Y*"): {"Y*": gauss(-1)}},
        "dual_scale": Fraction(1),
    }


def sl2_expected():
    L, r = sl2_r_quasitriangular()
    return {
        "algebra": L,
        "r": r,
        # delta(H) = 0, delta(X) = (1/4) X ^ H, delta(Y) = (1/4) Y ^ H
        "cobracket": {
            "H": Tensor(L, 2),
            "X": wedge(L, "X", "H") * Fraction(1, 4),
            "Y": wedge(L, "Y", "H") * Fraction(1, 4),
        },
        "cobracket_scale": Fraction(1),
        # published: [H*,X*] = (1/4)X*, [H*,Y*] = (1/4)Y*, [X*,Y*] = 0;
        # the literal transpose of delta gives the opposite sign, recorded
        # here as dual_scale = -1 rather than silently flipped.
        "dual_table": {
            ("H*", "X*"): {"X*": gauss(Fraction(1, 4))},
            ("H*", "Y*"): {"Y*": gauss(Fraction(1, 4))},
            ("X*", "Y*"): {},
        },
        "dual_scale": Fraction(-1),
    }


def sl2_triangular_expected():
    """Derived coboundary table for the triangular r.

    The published display (delta(Y) = 2Y^X, delta(H) = X^H) is not a
    cocycle under any single rescaling; the coboundary of r itself is
    delta(X) = 0, delta(Y) = 2 X ^ Y, delta(H) = 2 X ^ H, which is what we
    store and check.
    """
    L, r = sl2_r_triangular()
    return {
        "algebra": L,
        "r": r,
        "cobracket": {
            "H": wedge(L, "X", "H") * 2,
            "X": Tensor(L, 2),
            "Y": wedge(L, "X", "Y") * 2,
        },
        "cobracket_scale": Fraction(1),
    }


def su2_expected():
    L, r = su2_r()
    return {
        "algebra": L,
        "r": r,
        # published dual table: [e1*,e2*] = e2*, [e1*,e3*] = e3*, [e2*,e3*] = 0.
        # the literal transpose gives -2x that table.
        "dual_table": {
            ("e1*", "e2*"): {"e2*": gauss(1)},
            ("e1*", "e3*"): {"e3*": gauss(1)},
            ("e2*", "e3*"): {},
        },
        "dual_scale": Fraction(-2),
    }


# ---------------------------------------------------------------------------
# Matrix group models and published Poisson bracket tables.
# ---------------------------------------------------------------------------

def sl2_model():
    """The 2x2 chart (a b; c d), det-1 constraint eliminated as
    d = (1 + b c) / a on the chart where a is invertible."""
    from .matgroup import MatrixGroupModel
    L = sl2_algebra()
    chart = Chart(["a", "b", "c", "d"])
    reduced = Chart(["a", "b", "c"], invertible=["a"])
    basis = [
        [[1, 0], [0, -1]],   # H
        [[0, 1], [0, 0]],    # X
        [[0, 0], [1, 0]],    # Y
    ]
    return MatrixGroupModel(
        L, [["a", "b"], ["c", "d"]], chart, basis,
        eliminate=("d", poly("(1+b*c)*a^-1", reduced)),
        name="SL(2)")


def su2_model():
    """Same entry chart, su(2) basis matrices over Q(i); the complexified
    determinant constraint ad - bc = 1 is eliminated like for SL(2)."""
    from .matgroup import MatrixGroupModel
    L = su2_algebra()
    chart = Chart(["a", "b", "c", "d"])
    reduced = Chart(["a", "b", "c"], invertible=["a"])
    half_i = GaussRational(0, Fraction(1, 2))
    half = GaussRational(Fraction(1, 2))
    basis = [
        [[half_i, 0], [0, -half_i]],      # e1
        [[0, half], [-half, 0]],          # e2
        [[0, half_i], [half_i, 0]],       # e3
    ]
    return MatrixGroupModel(
        L, [["a", "b"], ["c", "d"]], chart, basis,
        eliminate=("d", poly("(1+b*c)*a^-1", reduced)),
        name="SU(2)")


def dual_r2_model():
    """G* of the plane bialgebra: matrices (a b; 0 1) with a invertible.
    Its algebra is g* = span(x, y), [x, y] = y, with x, y paired dual to
    xi, eta of r2_bialgebra."""
    from .matgroup import MatrixGroupModel
    Lstar = LieAlgebra(["x", "y"], {(0, 1): {1: 1}})
    chart = Chart(["a", "b"], invertible=["a"])
    basis = [
        [[1, 0], [0, 0]],  # x
        [[0, 1], [0, 0]],  # y
    ]
    return MatrixGroupModel(Lstar, [["a", "b"], [0, 1]], chart, basis,
                            name="dual-R2")


def dual_r2_bivector():
    """pi_{G*} = a b d_a ^ d_b on the dual-group chart."""
    from .poisson import PolyBivector
    model = dual_r2_model()
    return PolyBivector(model.chart, {("a", "b"): "a*b"})


def heisenberg_dual_model():
    """Unitriangular 3x3 model of the Heisenberg dual group.

    The basis matrix attached to the central element is -E13; with that
    orientation the left-invariant forms satisfy d theta_zeta =
    + theta_xi ^ theta_eta (the orientation used in the literature for the
    alpha-identities), while the intrinsic cobracket of the model is
    delta(zeta) = -xi ^ eta.
    """
    from .matgroup import MatrixGroupModel
    Lstar = LieAlgebra(["x", "y", "z"], {(0, 1): {2: -1}})  # [x,y] = -z
    chart = Chart(["u", "v", "w"])
    basis = [
        [[0, 1, 0], [0, 0, 0], [0, 0, 0]],    # x  = E12
        [[0, 0, 0], [0, 0, 1], [0, 0, 0]],    # y  = E23
        [[0, 0, -1], [0, 0, 0], [0, 0, 0]],   # z  = -E13
    ]
    return MatrixGroupModel(
        Lstar, [[1, "u", "w"], [0, 1, "v"], [0, 0, 1]], chart, basis,
        name="Heisenberg-dual")


def abelian_dual_model(L):
    """G* = g* with the Lie-Poisson bivector; thetas are the constant forms.

    Returns (chart, bivector, thetas) where the chart variables m_i are the
    coordinates dual to L's basis and {m_i, m_j} = sum_k c_ijk m_k.
    """
    from .poisson import PolyBivector, one_form
    names = ["m_%s" % n for n in L.basis_names]
    chart = Chart(names)
    comp = {}
    for i in range(L.dim):
        for j in range(i + 1, L.dim):
            acc = chart.zero()
            for k, c in L.bracket_basis(i, j).items():
                acc = acc + chart.var(names[k]) * c
            if not acc.is_zero():
                comp[(i, j)] = acc
    pi = PolyBivector(chart, comp)
    thetas = {L.basis_names[i]: one_form(chart, {names[i]: 1})
              for i in range(L.dim)}
    return chart, pi, thetas


# published multiplicative bracket tables; scale relates our lambda-rho
# derived table to the printed one: derived = scale * printed.
def sl2_quasitriangular_table():
    chart = Chart(["a", "b", "c", "d"])
    return {
        "table": {
            ("a", "b"): poly("(1/4)*a*b", chart),
            ("a", "c"): poly("(1/4)*a*c", chart),
            ("a", "d"): poly("(1/2)*b*c", chart),
            ("b", "c"): poly("0", chart),
            ("b", "d"): poly("(1/4)*b*d", chart),
            ("c", "d"): poly("(1/4)*c*d", chart),
        },
        "scale": Fraction(-1),
        "casimir": poly("a*d-b*c", chart),
    }


def sl2_triangular_table():
    chart = Chart(["a", "b", "c", "d"])
    return {
        "table": {
            ("a", "b"): poly("1-a^2", chart),
            ("a", "c"): poly("c^2", chart),
            ("a", "d"): poly("c*(d-a)", chart),
            ("b", "c"): poly("c*(a+d)", chart),
            ("b", "d"): poly("d^2-1", chart),
            ("c", "d"): poly("-c^2", chart),
        },
        "scale": Fraction(1),
        "casimir": poly("a*d-b*c", chart),
    }


def su2_table():
    chart = Chart(["a", "b", "c", "d"])
    return {
        "table": {
            ("a", "b"): poly("i*a*b", chart),
            ("a", "c"): poly("i*a*c", chart),
            ("a", "d"): poly("2*i*b*c", chart),
            ("b", "c"): poly("0", chart),
            ("b", "d"): poly("i*b*d", chart),
            ("c", "d"): poly("i*c*d", chart),
        },
        "scale": Fraction(-1),
    }


def gl2_plus_bivector():
    """The bivector on GL+(2) in the coordinates (x y; a b)."""
    from .poisson import PolyBivector
    chart = Chart(["x", "y", "a", "b"])
    return PolyBivector(chart, {
        ("x", "y"): "x*y",
        ("a", "b"): "a*b",
        ("x", "b"): "x*b",
        ("a", "y"): "x*b",
    })


# ---------------------------------------------------------------------------
# Momentum-map fixtures
# ---------------------------------------------------------------------------

def canonical_chart(n, q="q", p="p"):
    """T*R^n chart (q1..qn, p1..pn) with pi = sum d_qi ^ d_pi."""
    from .poisson import PolyBivector
    names = ["%s%d" % (q, i + 1) for i in range(n)] + \
            ["%s%d" % (p, i + 1) for i in range(n)]
    chart = Chart(names)
    pi = PolyBivector(chart, {("%s%d" % (q, i + 1), "%s%d" % (p, i + 1)): 1
                              for i in range(n)})
    return chart, pi


def linear_momentum_fixture():
    """Translations of R^3 on T*R^3: H_i = p_i, abelian algebra."""
    from .poisson import hamiltonian_field
    chart, pi = canonical_chart(3)
    L = LieAlgebra(["t1", "t2", "t3"], {})
    hams = {"t%d" % (i + 1): chart.var("p%d" % (i + 1)) for i in range(3)}
    action = {name: hamiltonian_field(pi, h) for name, h in hams.items()}
    return pi, L, hams, action


def angular_momentum_fixture():
    """so(3) lifted to T*R^3: H = components of q x p."""
    from .poisson import hamiltonian_field
    chart, pi = canonical_chart(3)
    L = so3_algebra()
    hams = {
        "L1": poly("q2*p3-q3*p2", chart),
        "L2": poly("q3*p1-q1*p3", chart),
        "L3": poly("q1*p2-q2*p1", chart),
    }
    action = {name: hamiltonian_field(pi, h) for name, h in hams.items()}
    return pi, L, hams, action


def heisenberg_alpha_counterexample():
    """alpha_xi = dx, alpha_eta = dy, alpha_zeta = x dy on canonical R^2:
    the obstruction constant is 1, no momentum map exists."""
    from .poisson import PolyBivector, one_form
    chart = Chart(["x", "y"])
    pi = PolyBivector(chart, {("x", "y"): 1})
    alpha = {
        "xi": one_form(chart, {"x": 1}),
        "eta": one_form(chart, {"y": 1}),
        "zeta": one_form(chart, {"y": "x"}),
    }
    return pi, alpha


def heisenberg_alpha_split():
    """Split fixture on 4 variables with disjoint supports: c = 0."""
    from .poisson import PolyBivector, one_form
    chart = Chart(["x1", "x2", "x3", "x4"])
    pi = PolyBivector(chart, {("x1", "x3"): 1, ("x2", "x4"): 1})
    alpha = {
        "xi": one_form(chart, {"x1": 1}),
        "eta": one_form(chart, {"x2": 1}),
        "zeta": one_form(chart, {"x2": "x1"}),
    }
    return pi, alpha


def r2_action_fixture():
    """The running plane example: {a, b} = a b and candidate generators.

    The published formulas are a{b, .} and a{a^-1, .}; the generator-to-
    basis assignment is not pinned by the source, and with our orientation
    X_f = {f, .} these fields are -a^2 b d/da and -b d/db.  All four
    labelled/sign variants are returned under distinct keys, together with
    the dressing realization xi -> b d/db, eta -> -b d/da coming from
    mu = id (which is the one satisfying every identity).  Checkers report
    the verdict per assignment; nothing is silently chosen.
    """
    from .poisson import PolyBivector, PolyVectorField
    chart = Chart(["a", "b"], invertible=["a"])
    pi = PolyBivector(chart, {("a", "b"): "a*b"})
    field_ab = PolyVectorField(chart, {"a": "-a^2*b"})    # a{b, .}
    field_alog = PolyVectorField(chart, {"b": "-b"})      # a{a^-1, .}
    L, d = r2_bialgebra()
    assignments = {
        "paper": {"xi": field_ab, "eta": field_alog},
        "swapped": {"xi": field_alog, "eta": field_ab},
        "swapped-sign": {"xi": -field_alog, "eta": field_ab},
        "dressing": {"xi": PolyVectorField(chart, {"b": "b"}),
                     "eta": PolyVectorField(chart, {"a": "-b"})},
    }
    return pi, L, d, assignments


# ---------------------------------------------------------------------------
# Quantum fixtures: presented algebras, Hopf data, actions
# ---------------------------------------------------------------------------

def usl2_presentation():
    """Classical U(sl2): order F < H < E, relations from the sl2 brackets."""
    from .ncalg import Presentation
    return Presentation(
        ["F", "H", "E"],
        {
            ("H", "F"): {("F", "H"): 1, ("F",): -2},
            ("E", "H"): {("H", "E"): 1, ("E",): -2},
            ("E", "F"): {("F", "E"): 1, ("H",): 1},
        },
        name="U(sl2)")


def q_number_terms(hname="H", scale=Fraction(1, 4), order=None):
    """Terms dict of (q^H - q^-H)/(q - q^-1) with q = exp(scale * hbar).

    Built from the scalar series oracle: exponentials plus a valuation
    shift and a unit inverse, no rewriting involved.
    """
    from .scalars import get_default_order, HSeries
    order = order or get_default_order()
    den_unit = (hexp(scale, order) - hexp(-scale, order)).divide_by_hbar()
    den_inv = den_unit.inverse()
    terms = {}
    fact = 1
    for k in range(1, order + 1):
        fact *= k
        if k % 2 == 0:
            continue
        # numerator coefficient of H^k: 2 scale^k hbar^k / k!; one hbar
        # cancels against the denominator's
        lead = gauss(2 * Fraction(scale) ** k / fact)
        coeff = HSeries([0] * (k - 1) + [lead], order) * den_inv
        if not coeff.is_zero():
            terms[(hname,) * k] = coeff
    return terms


def uhsl2_presentation():
    """The quantized U(sl2): [H,E] = 2E, [H,F] = -2F, [E,F] = [H]_q with
    q = exp(hbar/4) and q^H represented as the truncated series exp(hbar H/4)
    in the commutative subalgebra generated by H."""
    from .ncalg import Presentation
    ef = {("F", "E"): 1}
    ef.update(q_number_terms())
    return Presentation(
        ["F", "H", "E"],
        {
            ("H", "F"): {("F", "H"): 1, ("F",): -2},
            ("E", "H"): {("H", "E"): 1, ("E",): -2},
            ("E", "F"): ef,
        },
        name="U_hbar(sl2)")


def h_exponential(pres, scale, hname="H", order=None):
    """exp(scale * hbar * H) as an NCPoly in the H-subalgebra."""
    from .scalars import get_default_order, HSeries
    from .ncalg import NCPoly
    order = order or get_default_order()
    terms = {}
    fact = 1
    h = pres.index(hname)
    for k in range(order):
        if k:
            fact *= k
        coeff = HSeries([0] * k + [gauss(Fraction(scale) ** k / fact)], order)
        if not coeff.is_zero():
            terms[(h,) * k] = coeff
    return NCPoly(pres, terms)


def usl2_hopf():
    """Primitive coproduct, zero counit, antipode S(x) = -x."""
    from .hopf import HopfStructure
    from .ncalg import TensorAlgebra, AlgebraMap
    from .scalars import HSeries
    pres = usl2_presentation()
    t2 = TensorAlgebra(pres, 2)

    def primitive(g):
        return t2.element({(g, ()): 1, ((), g): 1})

    cop = AlgebraMap(pres, {g: primitive((g,)) for g in ("F", "H", "E")},
                     t2.one(), name="Delta")
    counit = AlgebraMap(pres, {g: HSeries.zero() for g in ("F", "H", "E")},
                        HSeries.one(), name="epsilon")
    antipode = AlgebraMap(pres, {g: -pres.gen(g) for g in ("F", "H", "E")},
                          pres.one(), anti=True, name="S")
    return HopfStructure(pres, cop, counit, antipode)


def uhsl2_hopf():
    """The quantized Hopf structure on U_hbar(sl2).

    Coproduct: Delta(H) primitive, Delta(E) = E (x) q^{H/2} + q^{-H/2} (x) E
    and likewise for F; antipode S(E) = -qE, S(F) = -q^{-1}F, S(H) = -H;
    counit zero on generators.  These are the mutually consistent
    conventions: every axiom below holds exactly mod hbar^N.
    """
    from .hopf import HopfStructure
    from .ncalg import TensorAlgebra, AlgebraMap
    from .scalars import HSeries
    pres = uhsl2_presentation()
    t2 = TensorAlgebra(pres, 2)
    qh_plus = h_exponential(pres, Fraction(1, 8))    # q^{H/2}
    qh_minus = h_exponential(pres, Fraction(-1, 8))  # q^{-H/2}
    q = hexp(Fraction(1, 4))
    q_inv = hexp(Fraction(-1, 4))

    def twisted(g):
        return t2.from_factors([pres.gen(g), qh_plus]) \
            + t2.from_factors([qh_minus, pres.gen(g)])

    cop = AlgebraMap(pres, {
        "H": t2.element({(("H",), ()): 1, ((), ("H",)): 1}),
        "E": twisted("E"),
        "F": twisted("F"),
    }, t2.one(), name="Delta_hbar")
    counit = AlgebraMap(pres, {g: HSeries.zero() for g in ("F", "H", "E")},
                        HSeries.one(), name="epsilon_hbar")
    antipode = AlgebraMap(pres, {
        "E": pres.gen("E") * (-q),
        "F": pres.gen("F") * (-q_inv),
        "H": -pres.gen("H"),
    }, pres.one(), anti=True, name="S_hbar")
    return HopfStructure(pres, cop, counit, antipode)


def quantum_plane_presentation():
    """[a, b] = -hbar b a, i.e. a b -> (1 - hbar) b a; order b < a < a^-1."""
    from .ncalg import Presentation
    from .scalars import HSeries
    one_minus_h = HSeries([1, -1])
    inv_factor = one_minus_h.inverse()
    return Presentation(
        ["b", "a", "a_inv"],
        {
            ("a", "b"): {("b", "a"): one_minus_h},
            ("a_inv", "b"): {("b", "a_inv"): inv_factor},
        },
        inverses={"a_inv": "a"},
        name="quantum-plane")


def case1_module_algebra():
    """[a, b] = 0 with an extra generator f that fails to commute at order
    hbar: [a, f] = hbar a, [b, f] = hbar b (a solvable deformation), so the
    quantum action (1/hbar) a [b, .] is nonzero while a, b commute."""
    from .ncalg import Presentation
    from .scalars import HSeries
    h = HSeries.hbar()
    return Presentation(
        ["a_inv", "a", "b", "f"],
        {
            ("b", "a"): {("a", "b"): 1},
            ("b", "a_inv"): {("a_inv", "b"): 1},
            ("f", "a"): {("a", "f"): 1, ("a",): -h},
            ("f", "b"): {("b", "f"): 1, ("b",): -h},
            ("f", "a_inv"): {("a_inv", "f"): 1, ("a_inv",): h},
        },
        inverses={"a_inv": "a"},
        name="case1-algebra")


def case2_module_algebra():
    """[a, b] = -hbar (a canonical pair at order hbar); a invertible."""
    from .ncalg import Presentation
    from .scalars import HSeries
    h = HSeries.hbar()
    return Presentation(
        ["a_inv", "a", "b"],
        {
            ("b", "a"): {("a", "b"): 1, (): h},
            ("b", "a_inv"): {("a_inv", "b"): 1, ("a_inv", "a_inv"): -h},
        },
        inverses={"a_inv": "a"},
        name="case2-algebra")


def su2_module_algebra():
    """The 3-dimensional example: a b a^-1 = e^{2 hbar} b,
    a c a^-1 = e^{-2 hbar} c, [b, c] = hbar^2 (e^{-hbar}-e^{hbar})^{-1} a^{-2}
    - (1 - e^{2 hbar}) c b, all encoded as exact truncated series."""
    from .ncalg import Presentation
    e2 = hexp(2)
    em2 = hexp(-2)
    # s = hbar^2 / (e^{-hbar} - e^{hbar}) : valuation 1
    s = HSeries.hbar() * (hexp(-1) - hexp(1)).divide_by_hbar().inverse()
    # c b = e^{-2h} (b c - s a^-2)
    return Presentation(
        ["a_inv", "a", "b", "c"],
        {
            ("b", "a"): {("a", "b"): em2},
            ("b", "a_inv"): {("a_inv", "b"): e2},
            ("c", "a"): {("a", "c"): e2},
            ("c", "a_inv"): {("a_inv", "c"): em2},
            ("c", "b"): {("b", "c"): em2, ("a_inv", "a_inv"): -em2 * s},
        },
        inverses={"a_inv": "a"},
        name="su2-module-algebra")


def r2_quantum_group(commuting=True):
    """U_hbar of the 2-dimensional examples: generators xi, eta; case 1 has
    [xi, eta] = 0, case 2 leaves the bracket undeclared (the checker derives
    the oracle relation instead)."""
    from .ncalg import Presentation
    rules = {("eta", "xi"): {("xi", "eta"): 1}} if commuting else {}
    return Presentation(["xi", "eta"], rules, name="U_hbar(R2)")


def r2_coproducts(pres):
    """Delta(xi) = xi (x) 1 - hbar eta (x) xi + 1 (x) xi and
    Delta(eta) = eta (x) 1 - hbar eta (x) eta + 1 (x) eta."""
    from .ncalg import TensorAlgebra
    from .scalars import HSeries
    t2 = TensorAlgebra(pres, 2)
    h = HSeries.hbar()
    return {
        "xi": t2.element({(("xi",), ()): 1, ((), ("xi",)): 1,
                          (("eta",), ("xi",)): -h}),
        "eta": t2.element({(("eta",), ()): 1, ((), ("eta",)): 1,
                           (("eta",), ("eta",)): -h}),
    }


def r2_primitive_coproducts(pres):
    from .ncalg import TensorAlgebra
    t2 = TensorAlgebra(pres, 2)
    return {
        "xi": t2.element({(("xi",), ()): 1, ((), ("xi",)): 1}),
        "eta": t2.element({(("eta",), ()): 1, ((), ("eta",)): 1}),
    }


def su2_quantum_group():
    """Generators xi, eta, zeta, zeta^-1 with zeta xi zeta^-1 = e^{2hbar} xi
    and zeta eta zeta^-1 = e^{-2hbar} eta; the xi-eta relation is left to
    the operator-level oracle."""
    from .ncalg import Presentation
    e2 = hexp(2)
    em2 = hexp(-2)
    return Presentation(
        ["xi", "eta", "zeta", "zeta_inv"],
        {
            ("zeta", "xi"): {("xi", "zeta"): e2},
            ("zeta_inv", "xi"): {("xi", "zeta_inv"): em2},
            ("zeta", "eta"): {("eta", "zeta"): em2},
            ("zeta_inv", "eta"): {("eta", "zeta_inv"): e2},
        },
        inverses={"zeta_inv": "zeta"},
        name="U_hbar(su2)")


def su2_coproducts(pres):
    """Delta(zeta) = zeta (x) zeta, Delta(xi) = xi (x) 1 + zeta (x) xi,
    Delta(eta) = 1 (x) eta + eta (x) zeta^-1."""
    from .ncalg import TensorAlgebra
    t2 = TensorAlgebra(pres, 2)
    return {
        "zeta": t2.element({(("zeta",), ("zeta",)): 1}),
        "zeta_inv": t2.element({(("zeta_inv",), ("zeta_inv",)): 1}),
        "xi": t2.element({(("xi",), ()): 1, (("zeta",), ("xi",)): 1}),
        "eta": t2.element({((), ("eta",)): 1, (("eta",), ("zeta_inv",)): 1}),
    }


def case_action(case):
    """QuantumAction of the 2-dimensional examples.

    Phi(xi) = (1/hbar) a [b, .], Phi(eta) = (1/hbar) a [a^-1, .] on the
    module algebra of the given case (1, 2 or 3)."""
    from .qmomentum import QuantumAction, hamiltonian_pair
    algebra = {
        1: case1_module_algebra,
        2: case2_module_algebra,
        3: quantum_plane_presentation,
    }[case]()
    group = r2_quantum_group(commuting=(case == 1))
    a = algebra.gen("a")
    a_inv = algebra.gen("a_inv")
    b = algebra.gen("b")
    return QuantumAction(group, algebra, {
        "xi": hamiltonian_pair(a, b),
        "eta": hamiltonian_pair(a, a_inv),
    })


def su2_action():
    """The 3-dimensional example: Phi(xi) = (1/hbar) a [b, .],
    Phi(eta) = (1/hbar) [c, .] a, Phi(zeta) = a (.) a^-1."""
    from .qmomentum import (
        QuantumAction, hamiltonian_pair, conjugation, Compose, RMul,
        Commutator, HbarDiv,
    )
    algebra = su2_module_algebra()
    group = su2_quantum_group()
    a = algebra.gen("a")
    a_inv = algebra.gen("a_inv")
    b = algebra.gen("b")
    c = algebra.gen("c")
    return QuantumAction(group, algebra, {
        "xi": hamiltonian_pair(a, b),
        "eta": HbarDiv(Compose([RMul(a), Commutator(c)]), 1),
        "zeta": conjugation(a, a_inv),
        "zeta_inv": conjugation(a_inv, a),
    })


def su2_commutator_target_for(action):
    """The right side of [Phi(xi), Phi(eta)] for the 3D example, built on
    the same module algebra as the action."""
    from .qmomentum import Scale, Sum, HbarDiv
    u = (hexp(-1) - hexp(1)).divide_by_hbar()
    zeta_inv = action.exprs["zeta_inv"]
    zeta = action.exprs["zeta"]
    return Scale(HbarDiv(Sum([zeta_inv, Scale(zeta, -1)]), 1), u.inverse())


def case1_reduction_algebra():
    """Commutative algebra generated by a (invertible) and b, used for the
    case-1 quantum reduction with ideal <a - 1, b>."""
    from .ncalg import Presentation
    return Presentation(
        ["a_inv", "a", "b"],
        {
            ("b", "a"): {("a", "b"): 1},
            ("b", "a_inv"): {("a_inv", "b"): 1},
        },
        inverses={"a_inv": "a"},
        name="case1-reduction")


def su2_momentum_ideal_generator(alg=None):
    """H = a^-2 + e^hbar (1 - e^{2 hbar})^2 hbar^-2 c b on the 3D module
    algebra; the generator of the quantum momentum ideal.

    The printed version carries a minus on the second term, but the triple
    {[b,c] relation, H, the H-relations} is then inconsistent: with the
    [b,c] relation exactly as printed, only this sign of H satisfies
    a^-1 H a = H, [b,H] = -(1-e^{2hbar}) H b and [c,H] = c (1-e^{2hbar}) H
    simultaneously (and it does so exactly)."""
    alg = alg or su2_module_algebra()
    factor = 1 - hexp(2)            # valuation 1
    coef = hexp(1) * factor.divide_by_hbar() ** 2
    return alg, alg.element([(1, ["a_inv", "a_inv"])]) \
        + alg.element([(coef, ["c", "b"])])
