"""Momentum maps: classical, infinitesimal, and the Heisenberg obstruction.

* classical momentum maps on T*R^3 (linear and angular momentum) with the
  vanishing obstruction cocycle;
* the infinitesimal momentum map alpha = theta for the identity map on the
  dual group of the plane algebra: Maurer-Cartan forms, dressing fields,
  the Koszul-bracket identity alpha_[xi,eta] = [alpha_xi, alpha_eta]_pi;
* the Heisenberg-dual obstruction pi(alpha_xi, alpha_eta) = c, with the
  canonical-plane counterexample (c = 1, no momentum map) and a split
  fixture (c = 0).

Run:  python3 demos/03_momentum_maps.py
"""

from poisson_forge import fixtures
from poisson_forge.matgroup import maurer_cartan_forms, dressing_fields
from poisson_forge.momentum import (
    classical_mm_check, check_infinitesimal_mm, heisenberg_obstruction,
    check_poisson_action,
)

if __name__ == "__main__":
    print("=" * 60)
    print("angular momentum on T*R^3")
    pi, L, hams, action = fixtures.angular_momentum_fixture()
    rep = classical_mm_check(pi, hams, action, L)
    print("  verdict:", rep.verdict)
    for key, val in sorted(rep.data.items()):
        print("  %s = %s" % (key, val))

    print("=" * 60)
    print("dressing action and infinitesimal momentum map on G* of the plane")
    model = fixtures.dual_r2_model()
    pi = fixtures.dual_r2_bivector()
    thetas = maurer_cartan_forms(model, dual_basis_names=("xi", "eta"))
    for name, theta in sorted(thetas.items()):
        print("  theta_%s = %r" % (name, theta))
    L, d = fixtures.r2_bialgebra()
    fields, rep = dressing_fields(pi, thetas, L)
    print("  dressing fields:", {n: repr(f) for n, f in sorted(fields.items())})
    print("  [l(xi), l(eta)] = l([xi,eta]):", rep.verdict)
    print("  Poisson-action identity:",
          check_poisson_action(pi, fields, d).verdict)
    imm = check_infinitesimal_mm(pi, d, thetas)
    print("  alpha_[xi,eta] = [alpha_xi, alpha_eta]_pi:",
          imm["bracket"].verdict)
    print("  d alpha + (1/2) alpha^alpha o delta = 0:", imm["half"].verdict)
    print("  d alpha -       alpha^alpha o delta = 0:",
          imm["plain"].verdict, "(the two published variants differ)")

    print("=" * 60)
    print("Heisenberg obstruction")
    pi, alpha = fixtures.heisenberg_alpha_counterexample()
    rep = heisenberg_obstruction(pi, alpha)
    print("  canonical plane fixture: c = %s -> %s"
          % (rep.data["c"], "no momentum map" if not rep.ok else "lifts"))
    pi, alpha = fixtures.heisenberg_alpha_split()
    rep = heisenberg_obstruction(pi, alpha)
    print("  split fixture:           c = %s -> %s"
          % (rep.data["c"], "lifts" if rep.ok else "obstructed"))
