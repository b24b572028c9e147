"""Hopf-algebra structure checks over presented algebras.

A HopfStructure bundles a presentation with a coproduct into the tensor
square, a counit into scalars and an antipode stored as an anti-map on the
same presentation (products reverse; no opposite algebra is constructed).
All axiom checkers quantify over normal-form monomials up to a degree
bound, which is complete for the graded components tested.
"""

from __future__ import annotations

from .ncalg import NCPoly, TensorAlgebra, TensorElement, check_map
from .report import Report
from .scalars import HSeries, series


class HopfStructure:
    def __init__(self, algebra, coproduct, counit, antipode, validate=True):
        self.algebra = algebra
        self.coproduct = coproduct
        self.counit = counit
        self.antipode = antipode
        self.square = TensorAlgebra(algebra, 2)
        if validate:
            for m in (coproduct, counit, antipode):
                rep = check_map(m)
                if not rep.ok:
                    raise ValueError("%s does not preserve the relations: %s"
                                     % (m.name, rep.failures[0]))


# -- tensor plumbing ---------------------------------------------------------

def _acc(out, key, value):
    s = out.get(key)
    s = value if s is None else s + value
    if s.is_zero():
        out.pop(key, None)
    else:
        out[key] = s


def apply_in_slot(amap, element, slot, out_algebra):
    """Apply a map A -> A (x) A to one slot of a tensor element, producing
    an element with one more factor."""
    out = {}
    for key, coeff in element.terms.items():
        img = amap.apply_word(key[slot])  # TensorElement, k = 2
        for (u, v), c in img.terms.items():
            _acc(out, key[:slot] + (u, v) + key[slot + 1:], coeff * c)
    return TensorElement(out_algebra, out)


def counit_in_slot(counit, element, slot, out_algebra):
    """Contract one slot with the counit."""
    out = {}
    for key, coeff in element.terms.items():
        scalar = counit.apply_word(key[slot])
        _acc(out, key[:slot] + key[slot + 1:], coeff * scalar)
    return TensorElement(out_algebra, out)


def multiply_factors(element):
    """m: A (x) A -> A by multiplying the two slots."""
    pres = element.algebra.presentation
    out = {}
    for (u, v), coeff in element.terms.items():
        for w, c in pres.nf_word(u + v).items():
            _acc(out, w, coeff * c)
    return NCPoly(pres, out)


def antipode_in_slot(antipode, element, slot):
    """Apply the antipode to one slot (staying at the same tensor rank)."""
    alg = element.algebra
    out = {}
    for key, coeff in element.terms.items():
        img = antipode.apply_word(key[slot])  # NCPoly
        for w, c in img.terms.items():
            _acc(out, key[:slot] + (w,) + key[slot + 1:], coeff * c)
    return TensorElement(alg, out)


# -- axiom checkers ----------------------------------------------------------

def check_coassociativity(hopf, degree=3):
    """(Delta (x) id) Delta = (id (x) Delta) Delta on monomials <= degree."""
    pres = hopf.algebra
    t3 = TensorAlgebra(pres, 3)
    failures = []
    for word in pres.monomials_up_to(degree):
        d = hopf.coproduct.apply_word(word)
        lhs = apply_in_slot(hopf.coproduct, d, 0, t3)
        rhs = apply_in_slot(hopf.coproduct, d, 1, t3)
        if not (lhs - rhs).is_zero():
            failures.append("coassociativity fails on %s: defect %r"
                            % (pres.word_name(word), lhs - rhs))
            break
    return Report.from_failures("coassociativity", failures)


def check_counit(hopf, degree=3):
    """(eps (x) id) Delta = id = (id (x) eps) Delta on monomials <= degree."""
    pres = hopf.algebra
    t1 = TensorAlgebra(pres, 1)
    failures = []
    for word in pres.monomials_up_to(degree):
        d = hopf.coproduct.apply_word(word)
        left = counit_in_slot(hopf.counit, d, 0, t1)
        right = counit_in_slot(hopf.counit, d, 1, t1)
        target = TensorElement(t1, {(word,): HSeries.one()})
        if not (left - target).is_zero():
            failures.append("(eps x id)Delta != id at %s" % pres.word_name(word))
        if not (right - target).is_zero():
            failures.append("(id x eps)Delta != id at %s" % pres.word_name(word))
        if failures:
            break
    return Report.from_failures("counit", failures)


def check_antipode(hopf, degree=3):
    """m(S (x) id)Delta = iota o eps = m(id (x) S)Delta on monomials."""
    pres = hopf.algebra
    failures = []
    for word in pres.monomials_up_to(degree):
        d = hopf.coproduct.apply_word(word)
        target = pres.one() * hopf.counit.apply_word(word)
        left = multiply_factors(antipode_in_slot(hopf.antipode, d, 0))
        right = multiply_factors(antipode_in_slot(hopf.antipode, d, 1))
        if not (left - target).is_zero():
            failures.append("m(S x id)Delta defect at %s: %r"
                            % (pres.word_name(word), left - target))
        if not (right - target).is_zero():
            failures.append("m(id x S)Delta defect at %s: %r"
                            % (pres.word_name(word), right - target))
        if failures:
            break
    return Report.from_failures("antipode", failures)


def check_delta_hom(hopf, degree=3):
    """Delta(x * y) = Delta(x) * Delta(y), including the rule check."""
    rep = check_map(hopf.coproduct)
    failures = list(rep.failures)
    pres = hopf.algebra
    monos = pres.monomials_up_to(degree)
    for w1 in monos:
        for w2 in monos:
            if len(w1) + len(w2) > degree or not w1 or not w2:
                continue
            x = NCPoly(pres, {w1: HSeries.one()})
            y = NCPoly(pres, {w2: HSeries.one()})
            lhs = hopf.coproduct(x * y)
            rhs = hopf.coproduct(x) * hopf.coproduct(y)
            if not (lhs - rhs).is_zero():
                failures.append("Delta(xy) != Delta(x)Delta(y) at %s, %s"
                                % (pres.word_name(w1), pres.word_name(w2)))
    return Report.from_failures("delta-homomorphism", failures)


def check_all_axioms(hopf, degree=3):
    from . import report as report_mod
    reports = {
        "coassociativity": check_coassociativity(hopf, degree),
        "counit": check_counit(hopf, degree),
        "antipode": check_antipode(hopf, degree),
        "delta-hom": check_delta_hom(hopf, degree),
    }
    reports["all"] = report_mod.merge("hopf-axioms", list(reports.values()))
    return reports


# -- semiclassical limit -----------------------------------------------------

def semiclassical_cobracket(hopf, generators=None):
    """delta(g) = ((Delta - tau Delta)(g) / hbar) mod hbar per generator.

    Returns a dict mapping generator names to {(word, word): GaussRational}
    antisymmetric tables over the classical monomials.
    """
    pres = hopf.algebra
    out = {}
    for g in (generators or pres.gens):
        d = hopf.coproduct.apply_word((pres.index(g),))
        anti = d - d.flip()
        if not anti.is_zero() and anti.hbar_valuation() < 1:
            raise ValueError("Delta - tau Delta has a classical part at %s" % g)
        table = {}
        for key, coeff in anti.divide_by_hbar().terms.items():
            c0 = coeff.constant_term()
            if c0:
                table[key] = c0
        out[g] = table
    return out


def cobracket_table_to_lie(table, limit_algebra, pres):
    """Convert a single-letter semiclassical table into a Cobracket over the
    classical limit algebra (generator g of the presentation is matched to
    the basis element of the same name)."""
    from .lie import Cobracket
    comp = {}
    for g, entries in table.items():
        i = limit_algebra.index(g)
        for (u, v), c in entries.items():
            if len(u) != 1 or len(v) != 1:
                raise ValueError("semiclassical cobracket of %s is not "
                                 "linear in the generators" % g)
            j = limit_algebra.index(pres.gens[u[0]])
            k = limit_algebra.index(pres.gens[v[0]])
            comp[(i, j, k)] = c
    return Cobracket(limit_algebra, comp)


def check_co_poisson_compatibility(hopf, generator_table, degree=3):
    """The semiclassical cobracket extends by co-Leibniz mod hbar.

    For a word x1...xn, delta(x) must equal
    sum_k Delta0(x1..x_{k-1}) * delta(x_k) * Delta0(x_{k+1}..xn) modulo
    hbar, where Delta0 is the primitive coproduct of the classical limit
    and delta(x_k) is the generator table.  Verified for all normal-form
    monomials up to the degree bound.
    """
    pres = hopf.algebra
    t2 = hopf.square
    failures = []

    def primitive(idx):
        return t2.element({((idx,), ()): 1, ((), (idx,)): 1})

    lifted = {}
    for g, entries in generator_table.items():
        lifted[pres.index(g)] = TensorElement(
            t2, {key: series(c) for key, c in entries.items()})

    for word in pres.monomials_up_to(degree):
        if not word:
            continue
        d = hopf.coproduct.apply_word(word)
        anti = d - d.flip()
        got = anti.divide_by_hbar() if anti.is_zero() or anti.hbar_valuation() >= 1 \
            else None
        if got is None:
            failures.append("Delta - tau Delta has classical part at %s"
                            % pres.word_name(word))
            continue
        want = t2.zero()
        for k in range(len(word)):
            term = t2.one()
            for i, g in enumerate(word):
                term = term * (lifted[g] if i == k else primitive(g))
            want = want + term
        defect = got - want
        if not all(c.valuation() >= 1 or c.is_zero()
                   for c in defect.terms.values()):
            failures.append("co-Poisson compatibility fails mod hbar at %s"
                            % pres.word_name(word))
    return Report.from_failures("co-poisson-compatibility", failures)


# -- quasi-triangularity -----------------------------------------------------

def _embed_pair(t3, element, slots):
    """R in A (x) A placed into two of three slots."""
    out = {}
    for (u, v), c in element.terms.items():
        key = [(), (), ()]
        key[slots[0]] = u
        key[slots[1]] = v
        out[tuple(key)] = c
    return TensorElement(t3, out)


def check_quasitriangular(hopf, R, R_inverse=None, degree=3):
    """The two coproduct axioms and the quantum Yang-Baxter equation.

    Returns a dict of reports: "invertible" (when an explicit inverse is
    supplied), "coproduct-1" for (Delta (x) id)R = R13 R23, "coproduct-2"
    for (id (x) Delta)R = R13 R12, "qybe" for R12 R13 R23 = R23 R13 R12,
    and "counit" for (eps (x) id)R = 1 = (id (x) eps)R.  Each report's data
    records the hbar-valuation of the defect, so partial-order statements
    like "holds mod hbar^2" are read off directly.
    """
    pres = hopf.algebra
    t3 = TensorAlgebra(pres, 3)
    t1 = TensorAlgebra(pres, 1)
    reports = {}

    if R_inverse is not None:
        prod = R * R_inverse
        defect = prod - hopf.square.one()
        reports["invertible"] = Report.from_failures(
            "R-invertible",
            [] if defect.is_zero() else ["R * R^-1 - 1 = %r" % defect])

    r12 = _embed_pair(t3, R, (0, 1))
    r13 = _embed_pair(t3, R, (0, 2))
    r23 = _embed_pair(t3, R, (1, 2))

    def _verdict(name, defect):
        val = defect.hbar_valuation()
        reports[name] = Report.from_failures(
            name, [] if defect.is_zero() else ["defect %r" % defect],
            data={"defect_valuation": val})

    _verdict("coproduct-1",
             _cop_axiom_defect(hopf, R, t3, first=True,
                               r13=r13, r23=r23, r12=r12))
    _verdict("coproduct-2",
             _cop_axiom_defect(hopf, R, t3, first=False,
                               r13=r13, r23=r23, r12=r12))
    _verdict("qybe", r12 * r13 * r23 - r23 * r13 * r12)

    eps_left = counit_in_slot(hopf.counit, R, 0, t1)
    eps_right = counit_in_slot(hopf.counit, R, 1, t1)
    one1 = TensorElement(t1, {((),): HSeries.one()})
    failures = []
    if not (eps_left - one1).is_zero():
        failures.append("(eps x id)R != 1")
    if not (eps_right - one1).is_zero():
        failures.append("(id x eps)R != 1")
    reports["counit"] = Report.from_failures("R-counit", failures)
    return reports


def _cop_axiom_defect(hopf, R, t3, first, r13, r23, r12):
    if first:
        lhs = apply_in_slot(hopf.coproduct, R, 0, t3)
        rhs = r13 * r23
    else:
        lhs = apply_in_slot(hopf.coproduct, R, 1, t3)
        rhs = r13 * r12
    return lhs - rhs


def classical_limit_check(hopf, classical_hopf, degree=2):
    """The quantization axioms mod hbar: every rule and coproduct image of
    the deformed structure reduces mod hbar to the classical one."""
    pres = hopf.algebra
    cpres = classical_hopf.algebra
    failures = []
    if pres.gens != cpres.gens:
        return Report("classical-limit", "fail",
                      ["generator lists differ"], [])
    for (a, b), rhs in sorted(pres.rules.items()):
        crhs = cpres.rules.get((a, b))
        if crhs is None:
            failures.append("rule %s*%s missing classically"
                            % (pres.gens[a], pres.gens[b]))
            continue
        words = set(rhs) | set(crhs)
        for w in words:
            qc = rhs.get(w, HSeries.zero()).constant_term()
            cc = crhs.get(w, HSeries.zero()).constant_term()
            if qc != cc:
                failures.append("rule %s*%s differs at hbar^0 on %s"
                                % (pres.gens[a], pres.gens[b],
                                   pres.word_name(w)))
    for g in pres.gens:
        dq = hopf.coproduct.apply_word((pres.index(g),))
        dc = classical_hopf.coproduct.apply_word((cpres.index(g),))
        defect = dq - TensorElement(hopf.square, dc.terms)
        if not all(c.valuation() >= 1 for c in defect.terms.values()):
            failures.append("Delta(%s) differs at hbar^0" % g)
    return Report.from_failures("classical-limit", failures)
