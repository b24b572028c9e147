"""Lie bialgebras from r-matrices: cobrackets, duals, doubles.

Walks through the three standard low-dimensional examples -- the ax+b
algebra, sl(2) with its factorisable r-matrix, and su(2) -- checking the
classical Yang-Baxter equation, deriving the cobracket delta = ad(r), the
dual bracket and the double, all in exact rational arithmetic.

Run:  python3 demos/01_lie_bialgebras.py
"""

from poisson_forge import fixtures
from poisson_forge.lie import (
    cobracket_from_r, dual_bracket, schouten_rr, check_cocycle,
    check_jacobi, build_double,
)


def show(name, make):
    L, r = make()
    print("=" * 60)
    print("%s on basis %s" % (name, list(L.basis_names)))
    s = schouten_rr(r)
    print("  <r,r> =", s, "(classical Yang-Baxter)" if s.is_zero()
          else "(nonzero, ad-invariance checked separately)")
    d = cobracket_from_r(L, r)
    for i, g in enumerate(L.basis_names):
        print("  delta(%s) = %s" % (g, d.image(i)))
    print("  cocycle identity:", check_cocycle(L, d).verdict)
    dual = dual_bracket(d)
    print("  dual algebra %s" % (list(dual.basis_names),))
    for i in range(dual.dim):
        for j in range(i + 1, dual.dim):
            comps = dual.bracket_basis(i, j)
            if comps:
                rhs = " + ".join("%s*%s" % (v, dual.basis_names[k])
                                 for k, v in sorted(comps.items()))
                print("  [%s, %s] = %s" % (dual.basis_names[i],
                                           dual.basis_names[j], rhs))
    double, pairing = build_double(L, d)
    print("  double: dim %d, jacobi %s, pairing %s"
          % (double.dim, check_jacobi(double).verdict, pairing.verdict))


if __name__ == "__main__":
    show("ax+b ([X,Y] = X, r = X^Y)", fixtures.axb_r)
    show("sl(2) (r = 1/8 H(x)H + 1/2 X(x)Y)", fixtures.sl2_r_quasitriangular)
    show("su(2) (r = 2 e2^e3)", fixtures.su2_r)
    print("=" * 60)
    print("note: our conventions are wedge = (x)-(x) and the literal")
    print("transpose dual bracket; published tables that use the opposite")
    print("orientation are matched through recorded normalization constants")
    print("(see poisson_forge.fixtures).")
