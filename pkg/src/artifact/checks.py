"""Verification suites shared by the command line and the test-suite.

Each suite returns a list of Check records; a suite run outside its
supported range of l returns a single skipped record.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from itertools import product
from math import comb

from . import bimod, frob, iqmod, schur, symfunc, weyl
from . import polyops as P
from .qlaurent import ZERO, LaurentPoly, bar, qbinom, qint


@dataclass
class Check:
    name: str
    ref: str
    ok: bool | None
    witness: str | None = None

    @property
    def status(self):
        if self.ok is None:
            return "skipped"
        return "pass" if self.ok else "fail"

    def to_json(self):
        out = {"name": self.name, "paper_ref": self.ref, "status": self.status}
        if self.status == "fail":
            out["witness"] = self.witness
        return out


def _chk(name, ref, ok, witness=None):
    return Check(name, ref, bool(ok), None if ok else (witness or "mismatch"))


# ---------------------------------------------------------------- symfunc

def suite_symfunc(l, seed=0, order=12):
    out = []
    for r in range(1, l + 1):
        lhs = symfunc.evaluate(symfunc.e2_part(r), l)
        rhs = symfunc.evaluate(symfunc.e(r), l)
        rhs = P.MultiPoly(l, {tuple(2 * a for a in e): c for e, c in rhs.terms.items()})
        out.append(_chk(f"e{r}[2] evaluates to e{r}(x^2)", "squared elementary evaluation",
                        lhs == rhs, f"{lhs} vs {rhs}"))
    ident = symfunc.series_identity(order)
    e, h, q = symfunc.series_e(order), symfunc.series_h(order), symfunc.series_q(order)
    checks = [
        ("series e(-u)h(u) = 1", symfunc.series_mul(symfunc.series_negate_u(e), h, order), ident),
        ("series q(u)q(-u) = 1", symfunc.series_mul(q, symfunc.series_negate_u(q), order), ident),
        ("series e[2](u) = e(u)e(-u)", symfunc.series_e2(order),
         symfunc.series_mul(e, symfunc.series_negate_u(e), order)),
    ]
    for name, lhs, rhs in checks:
        bad = [k for k, (a, b) in enumerate(zip(lhs, rhs)) if a != b]
        out.append(_chk(name, "generating series identity", not bad, f"u^-{bad[0]}" if bad else None))
    gens = symfunc.q_and_e2_generators(order)
    for d in range(1, 9):
        n, rk = symfunc.independence_rank(gens, d)
        out.append(_chk(f"odd q and e[2] generators independent in degree {d}",
                        "generators of the bubble algebra", n == rk, f"{rk} < {n}"))
    return out


# ---------------------------------------------------------------- Demazure and Frobenius

def _reduced_words(l, max_len):
    G = weyl.group(l)
    gens = weyl.all_indices(l)
    by_elt = {}
    frontier = [((), G.index[weyl.SignedPerm.identity(l)])]
    for length in range(1, max_len + 1):
        nxt = []
        for word, k in frontier:
            for i in gens:
                j = G.right[i][k]
                if G.lengths[j] == length:
                    w = word + (i,)
                    nxt.append((w, j))
                    by_elt.setdefault(j, []).append(w)
        frontier = nxt
    return by_elt


def suite_demazure(l, seed=0, pairs=100, braid_len=6):
    rng = random.Random(seed)
    out = []
    gens = weyl.all_indices(l)
    test = [P.random_poly(l, rng, max_deg=5) for _ in range(3)]
    for i in gens:
        ok = all(not P.demazure(i, P.demazure(i, f)) for f in test)
        out.append(_chk(f"Demazure {i} squares to zero", "nil-Hecke relations", ok))
    words = _reduced_words(l, braid_len)
    bad = None
    f = P.random_poly(l, rng, max_deg=braid_len + 2, max_terms=10)
    for k, ws in words.items():
        first = P.demazure_word(ws[0], f)
        for w in ws[1:]:
            if P.demazure_word(w, f) != first:
                bad = (ws[0], w)
                break
        if bad:
            break
    out.append(_chk(f"Demazure words agree on all reduced words up to length {braid_len}",
                    "braid relations", bad is None, str(bad)))
    bad = None
    for _ in range(pairs):
        f, g = P.random_poly(l, rng, max_deg=4), P.random_poly(l, rng, max_deg=4)
        i = rng.choice(gens)
        w = weyl.simple(i, l)
        lhs = P.demazure(i, f * g)
        rhs = P.demazure(i, f) * g + P.act(w, f) * P.demazure(i, g)
        if lhs != rhs:
            bad = f"i={i}"
            break
    out.append(_chk(f"product rule on {pairs} random pairs", "twisted Leibniz rule", bad is None, bad))
    for r in range(l + 4):
        lhs = P.demazure_word(tuple(range(l - 1, 0, -1)), (-P.x(l, 1)) ** r)
        k = r - l + 1
        rhs = P.complete(k, list(range(1, l + 1)), l).scale((-1) ** k) if k >= 0 else P.zero(l)
        out.append(_chk(f"descending Demazure word on (-x1)^{r}", "complete symmetric closed form",
                        lhs == rhs, f"{lhs} vs {rhs}"))
    return out


def _frob_steps(l):
    L = bimod.labels(l)
    steps = [(L.P, L.X), (L.M, L.X), (L.S, L.P), (L.S, L.M), (L.S, L.X)]
    if l >= 3:
        X2 = weyl.lab_hat(L.X, 2)
        steps += [(weyl.lab_pm(X2), weyl.lab_plus(X2)), (L.P, X2)]
    return steps


def _name(I, l):
    return weyl.label_name(I, l)


def _same_tensor(lhs_pairs, rhs_pairs, right_step):
    return frob.tensor_coords(lhs_pairs, right_step) == frob.tensor_coords(rhs_pairs, right_step)


def suite_frobenius(l, seed=0):
    rng = random.Random(seed)
    out = suite_demazure(l, seed)
    for I, J in _frob_steps(l):
        st = frob.step(I, J, l)
        tag = f"{_name(I, l)} in {_name(J, l)}"
        ok = all(st.trace(b * bd) == (1 if a == c else 0)
                 for a, b in enumerate(st.basis) for c, bd in enumerate(st.dual))
        out.append(_chk(f"dual bases pair to delta: {tag}", "trace duality", ok))
        counit = P.zero(l)
        for b, bd in st.coproduct():
            counit = counit + b * st.trace(bd)
        out.append(_chk(f"counit: {tag}", "counit axiom", counit == 1, str(counit)))
        s = P.zero(l)
        for b, bd in st.coproduct():
            s = s + b * bd
        ratio = P.divide_exact(P.mu(I, l), P.mu(J, l))
        out.append(_chk(f"product-coproduct is mu_I/mu_J: {tag}", "product-coproduct element",
                        s == ratio, str(s)))
        f = P.symmetrize(P.random_poly(l, rng, max_deg=3), J)
        lhs = [(b * f, bd) for b, bd in st.coproduct()]
        rhs = [(b, f * bd) for b, bd in st.coproduct()]
        out.append(_chk(f"f moves across the coproduct: {tag}", "coproduct is balanced",
                        _same_tensor(lhs, rhs, st)))
    L = bimod.labels(l)
    chains = [(L.S, L.P, L.X), (L.S, L.M, L.X)]
    if l >= 3:
        chains.append((L.P, L.X, weyl.lab_hat(L.X, 2)))
    for I, J, K in chains:
        tag = f"{_name(I, l)} > {_name(J, l)} > {_name(K, l)}"
        outer, inner = frob.step(I, J, l), frob.step(J, K, l)
        big = frob.product_step(inner, outer)
        ok = all(big.trace(b * bd) == (1 if a == c else 0)
                 for a, b in enumerate(big.basis) for c, bd in enumerate(big.dual))
        out.append(_chk(f"product bases are dual: {tag}", "transitivity of bases", ok))
        g = P.symmetrize(P.random_poly(l, rng, max_deg=4), K)
        ok = frob.trace(I, K, l, g) == frob.trace(I, J, l, frob.trace(J, K, l, g))
        out.append(_chk(f"traces compose: {tag}", "transitivity of traces", ok))
        f = P.symmetrize(P.random_poly(l, rng, max_deg=3), K)
        lhs = [(b, frob.trace(J, K, l, f * bd)) for b, bd in big.coproduct()]
        rhs = [(a * f, ad) for a, ad in outer.coproduct()]
        out.append(_chk(f"trace of the right factor: {tag}", "coproduct and partial trace (right)",
                        _same_tensor(lhs, rhs, outer)))
        lhs = [(frob.trace(J, K, l, b * f), bd) for b, bd in big.coproduct()]
        rhs = [(a, f * ad) for a, ad in outer.coproduct()]
        out.append(_chk(f"trace of the left factor: {tag}", "coproduct and partial trace (left)",
                        _same_tensor(lhs, rhs, big)))
        s = P.zero(l)
        for b, bd in big.coproduct():
            s = s + b * frob.trace(J, K, l, bd)
        ratio = P.divide_exact(P.mu(I, l), P.mu(J, l))
        out.append(_chk(f"partial product-coproduct: {tag}", "partial product-coproduct element",
                        s == ratio, str(s)))
    # explicit dual pairs
    st = frob.step_with_basis(L.P, L.X, l, [(-P.x(l, 1)) ** r for r in range(l)])
    ok = all(st.dual[r] == P.elementary(l - 1 - r, list(range(2, l + 1)), l) for r in range(l))
    out.append(_chk("dual of (-x1)^r is e_{l-1-r}(x2..xl)", "explicit dual bases", ok,
                    str([str(d) for d in st.dual])))
    if l >= 3:
        X2 = weyl.lab_hat(L.X, 2)
        st = frob.step_with_basis(weyl.lab_pm(X2), weyl.lab_plus(X2), l, [P.one(l), P.root(-1, l)])
        ok = list(st.dual) == [P.root(-1, l) / 2, P.one(l) / 2]
        out.append(_chk("dual of (1, alpha_-1) is (alpha_-1/2, 1/2)", "explicit dual bases", ok,
                        str([str(d) for d in st.dual])))
    return out


# ---------------------------------------------------------------- Hecke and Schur

def _schur_labels(l):
    L = bimod.labels(l)
    labs = [L.P, L.M, L.X, L.S]
    if l >= 3:
        labs.append(weyl.lab_hat(L.X, 2))
    return labs


def _double_coset_product_rhs(I, J, d, K, l):
    out = schur.SchurElt(l)
    G = weyl.group(l)
    if I <= J:
        coset = weyl.double_coset(J, G.index[d], K, l)
        top = weyl.coset_length_data(J, d, K, l)
        for d2, _ in weyl.min_double_cosets(I, K, l):
            if G.index[d2] in coset:
                c = LaurentPoly.monomial(top - weyl.coset_length_data(I, d2, K, l))
                out = out + schur.standard_basis_elt(I, d2, K, False, l).scale(c)
        return out
    coset = weyl.double_coset(I, G.index[d], K, l)
    d2 = G.elements[min(coset, key=lambda k: (G.lengths[k], G.elements[k]))]
    num = weyl.poincare(weyl.left_redundancy(I, d2, K, l), l)
    den = weyl.poincare(weyl.left_redundancy(J, d, K, l), l)
    c = LaurentPoly.monomial(weyl.length(d2) - weyl.length(d)) * num.exact_div(den)
    return schur.standard_basis_elt(I, d2, K, False, l).scale(c)


def suite_schur(l, seed=0):
    out = []
    labs = _schur_labels(l)
    for I in labs:
        b = schur.b_longest(I, l)
        ok = schur.hecke_multiply(b, b) == b.scale(weyl.poincare(I, l))
        out.append(_chk(f"b_w squares to pi b_w for {_name(I, l)}", "longest element idempotent", ok))
    fails = []
    count = 0
    for I in labs:
        for J in labs:
            if not (I <= J or J <= I):
                continue
            for K in labs:
                for d, _ in weyl.min_double_cosets(J, K, l):
                    lhs = schur.schur_compose(schur.b_IJ(I, J, l),
                                              schur.standard_basis_elt(J, d, K, False, l))
                    count += 1
                    if lhs != _double_coset_product_rhs(I, J, d, K, l):
                        fails.append((_name(I, l), _name(J, l), tuple(d), _name(K, l)))
    out.append(_chk(f"multiplication rule on {count} triples", "merge and split on standard basis",
                    not fails, str(fails[:3])))
    bad = []
    for I in labs:
        for J in labs:
            for d, LR in weyl.min_double_cosets(I, J, l):
                h = schur.standard_basis_elt(I, d, J, False, l)
                v = schur.bilinear_form(h, h)
                lhs = LaurentPoly.monomial(-weyl.longest_length(I, l)) * v
                rhs = weyl.poincare_plus(J, l).exact_div(weyl.poincare_plus(LR, l))
                diag = LaurentPoly.monomial(weyl.coset_length_data(I, d, J, l) - weyl.length(d)) \
                    * weyl.poincare(J, l).exact_div(weyl.poincare(LR, l))
                if lhs != rhs or v != diag or any(c < 0 for _, c in rhs.items()) \
                        or dict(rhs.items()).get(0) != 1:
                    bad.append((_name(I, l), _name(J, l), tuple(d)))
    out.append(_chk("diagonal values of the form on the standard basis", "form on standard basis",
                    not bad, str(bad[:3])))
    table = weyl.longest_lengths_and_poincare(l)
    bad = []
    for I, (length, pi) in table.items():
        if weyl.longest_length(I, l) != length or weyl.poincare(I, l) != pi:
            bad.append(_name(I, l))
    out.append(_chk("lengths and Poincare polynomials of the parabolic subgroups",
                    "parabolic data table", not bad, str(bad)))
    H = [schur.V_standard(n, l) for n in range(l + 1)]
    bb = schur.b_element(l)
    for n in range(l + 1):
        img = schur.schur_compose(bb, H[n])
        expect = schur.SchurElt(l)
        if n < l:
            expect = expect + H[n + 1].scale(qint(n + 1))
        if n > 0:
            expect = expect + H[n - 1].scale(LaurentPoly.monomial(l - 2 * n + 1) * qint(l - n + 1))
        out.append(_chk(f"b acting on standard element {n}", "b-action on V", img == expect, repr(img)))
    for n in range(l + 1):
        kl = schur.kl_coset_elt(n, l)
        out.append(_chk(f"canonical element {n} is bar invariant", "bar invariance",
                        schur.schur_bar(kl) == kl))
    return out


# ---------------------------------------------------------------- iquantum

def suite_iqmod(l, seed=0):
    out = []
    t = l % 2
    for n in range(l + 3):
        ok = iqmod.icanonical_formula(n, l) == iqmod.icanonical_recursive(n, l)
        out.append(_chk(f"closed formula equals recursion, n={n}", "icanonical closed formula", ok))
    for n in range(9):
        a = iqmod.monomial_expand(n, l)
        b = iqmod.partition_expand(n, l)
        out.append(_chk(f"partition formula for b^{n}", "monomial expansion via partitions",
                        a == b, f"{a} vs {b}"))
    for n in range(l // 2 + 1):
        lhs = iqmod.bilinear_form_l(iqmod.eta(l), iqmod.icanonical(2 * n, l))
        rhs = LaurentPoly.monomial(-n * (l + t - 1)) * qbinom((l - t) // 2, n, "q2")
        out.append(_chk(f"form of eta with canonical vector {2 * n}", "form against eta", lhs == rhs,
                        f"{lhs} vs {rhs}"))
    for n in range(l + 3 if l >= 1 else 0):
        v = iqmod.eta(l)
        for _ in range(n):
            v = iqmod.b_act(v)
        f = iqmod.bilinear_form_l(v, v)
        top = f.top_degree()
        expect = 2 * comb(n, 2) if n <= l else (2 * n - l) * (l - 1)
        ok = top == expect and dict(f.items())[top] == 1
        out.append(_chk(f"top term of (b^{n} eta, b^{n} eta)", "top degree of the form", ok,
                        f"{f}"))
    for n in range(l + 1):
        v = iqmod.icanonical(n, l)
        out.append(_chk(f"ibar fixes canonical vector {n}", "ibar invariance", iqmod.ibar(v) == v))
    if 1 <= l <= schur.MAX_HECKE_RANK:
        for name, ok, w in iqmod.phi_check(l):
            out.append(_chk(name, "comparison with the Hecke model", ok, w))
    return out


# ---------------------------------------------------------------- Grothendieck group

def decomposition(l, n):
    """Multiplicities of B^[m] in B^{(x)n} (zero for m > l or m != n mod 2)."""
    return iqmod.monomial_expand(n, l)


def suite_grothendieck(l, seed=0, max_n=6):
    out = []
    t = l % 2
    for n in range(max_n + 1):
        dec = decomposition(l, n)
        part = iqmod.partition_expand(n, l)
        out.append(_chk(f"decomposition of B^{n} matches the partition formula",
                        "tensor power decomposition", dec == part, f"{dec} vs {part}"))
        if 2 <= l <= schur.MAX_HECKE_RANK:
            coords = schur.kl_coordinates(schur.b_power_hecke(n, l), l)
            padded = (list(dec) + [ZERO] * (l + 1))[:l + 1]
            extra = [c for c in dec[l + 1:] if c]
            out.append(_chk(f"decomposition of B^{n} matches b^{n} in the Schur algebra",
                            "powers of b on canonical elements", coords == padded and not extra,
                            f"{coords} vs {padded}"))
    for n in range(l // 2 + 1):
        expect = LaurentPoly.monomial(n * (l + t - 1)) * qbinom((l - t) // 2, n, "q2")
        via_v = iqmod.bilinear_form_l(iqmod.eta(l), iqmod.icanonical(2 * n, l))
        out.append(_chk(f"graded rank of Hom(A, B^[{2 * n}]) from the form on V(l)",
                        "graded rank of homomorphisms", bar(via_v) == expect, str(bar(via_v))))
        if 2 <= l <= schur.MAX_HECKE_RANK:
            P_lab = weyl.lab_plus(weyl.lab_O(l))
            v = LaurentPoly.monomial(-comb(l, 2)) * schur.bilinear_form(
                schur.identity(P_lab, l), schur.kl_coset_elt(2 * n, l))
            out.append(_chk(f"graded rank of Hom(A, B^[{2 * n}]) from the Hecke model",
                            "graded rank of homomorphisms", v == expect, str(v)))
    return out


# ---------------------------------------------------------------- bimodules

def _relation_checks(l, grid):
    B = bimod
    cup, cap, X = B.theta_cup(l), B.theta_cap(l), B.theta_cross(l)
    I1, I2 = B.identity_map(l, 1), B.identity_map(l, 2)
    T = lambda F, a, b: B.tensor_id(F, l, a, b)
    d1, d2 = B.theta_dot_map(l, 2, 1), B.theta_dot_map(l, 2, 2)
    X1, X2 = B.theta_cross(l, 3, 1), B.theta_cross(l, 3, 2)
    rels = [
        ("zig-zag (cap left)", T(cap, 0, 1) @ T(cup, 1, 0), I1),
        ("zig-zag (cap right)", T(cap, 1, 0) @ T(cup, 0, 1), I1),
        ("crossing squares to zero", X @ X, B.BimodMap.zero(l, X.src, X.tgt)),
        ("braid relation", X1 @ X2 @ X1, X2 @ X1 @ X2),
        ("pitchfork", B.theta_cap(l, 3, 2) @ X1, B.theta_cap(l, 3, 1) @ X2),
        ("curl vanishes", T(cap, 0, 1) @ T(X, 0, 1) @ T(cup, 1, 0),
         B.BimodMap.zero(l, I1.src, I1.tgt)),
        ("dot through a cap changes sign", cap @ d2, -(cap @ d1)),
        ("dot slide", X @ d1 - d2 @ X, I2 - cup @ cap),
        ("dot slide (other side)", d1 @ X - X @ d2, I2 - cup @ cap),
    ]
    out = []
    for name, F, G in rels:
        ok = F.equals(G)
        witness = None if ok else "generator images differ"
        if ok and grid:
            pt = B.maps_agree_on_grid(F, G)
            ok, witness = pt is None, f"grid point {pt}"
        out.append(_chk(name, "nil-Brauer relation", ok, witness))
    bubble = B.dotted_bubble(0, l)
    out.append(_chk("bubble evaluates to t", "nil-Brauer relation", bubble == l % 2, str(bubble)))
    for name, F, deg in [("crossing", X, -2), ("cup", cup, 0), ("cap", cap, 0),
                         ("dot", B.theta_dot_map(l, 1, 1), 2)]:
        out.append(_chk(f"degree of {name}", "degrees of the generators", F.degree() == deg,
                        str(F.degree())))
    out.append(_chk("crossing equals v_2", "crossing via Frobenius steps",
                    X.equals(B.v_map(l, 2)) if l > 2 else X.equals(B.u_map(l, 2))))
    return out


def suite_bimod(l, seed=0, grid=True):
    B = bimod
    rng = random.Random(seed)
    out = _relation_checks(l, grid)
    cup = B.apply_map(B.theta_cup(l), B.TensorElt(l, 0, {(): P.one(l)}))
    expect = {(l - 1 - r,): P.elementary(r, list(range(2, l + 1)), l) for r in range(l)}
    out.append(_chk("cup of 1 is sum e_r(x2..xl) (x) x1^(l-1-r)", "cup formula",
                    cup.coords == expect, str(cup.coords)))
    bad = None
    cap = B.theta_cap(l)
    for r, s in product(range(2 * l + 1), repeat=2):
        got = B.apply_map(cap, B.TensorElt.monomial(l, [r, s])).coords.get((), P.zero(l))
        want = P.demazure_word(tuple(range(l - 1, 0, -1)), P.gamma(P.x(l, 1) ** r) * P.x(l, 1) ** s)
        if got != want:
            bad = (r, s)
            break
    out.append(_chk("cap is the descending Demazure word of gamma(f)g", "cap formula",
                    bad is None, str(bad)))
    for name, ok, w in B.cyclotomic_check(l):
        out.append(_chk(name, "cyclotomic relations", ok, w))
    maps = {
        "cup": B.theta_cup(l), "cap": B.theta_cap(l), "crossing": B.theta_cross(l),
        "dot": B.theta_dot_map(l, 1, 1),
    }
    for n in range(0, l + 1):
        maps[f"f_{n}"] = B.idempotent_f(n, l)
    for name, F in sorted(maps.items()):
        w = B.bilinearity_witness(F, rng)
        out.append(_chk(f"{name} is bilinear", "bimodule maps", w is None, str(w)))
    for n in range(0, l + 2):
        f = B.idempotent_f(n, l)
        if n <= l:
            out.append(_chk(f"f_{n} is idempotent", "primitive idempotents", (f @ f).equals(f)))
            out.append(_chk(f"f_{n} is nonzero", "primitive idempotents", not f.is_zero()))
            out.append(_chk(f"f_{n} has degree 0", "primitive idempotents", f.degree() == 0,
                            str(f.degree())))
        else:
            out.append(_chk(f"f_{n} vanishes", "primitive idempotents", f.is_zero()))
    out.append(_chk(f"longest crossing on {l + 1} strands vanishes", "vanishing beyond level l",
                    B.longest_crossing(l, l + 1).is_zero()))
    out.append(_chk(f"e_{l + 1} image vanishes", "vanishing beyond level l",
                    B.e_image(l, l + 1).is_zero()))
    out.append(_chk(f"v_{l - 1} equals u_{l - 1}", "v equals u one below the level",
                    B.v_map(l, l - 1).equals(B.u_map(l, l - 1))))
    for n in range(1, l + 1):
        v = B.TensorElt.pure(l, [P.one(l)] * n)
        w = B.apply_map(B.v_map(l, n), B.apply_map(B.r_map(l, n), v))
        out.append(_chk(f"v_{n} r_{n} fixes the 1-tensor", "normalization of f_n", w == v))
        uc, uh = B.u_check(l, n), B.u_hat(l, n)
        target = comb(l, 2) - n * (l - 1)
        out.append(_chk(f"degrees of the halves of u_{n}", "degree bookkeeping",
                        uc.degree() == target and uh.degree() == target,
                        f"{uc.degree()}, {uh.degree()}"))
        vd = B.v_map(l, n).degree()
        out.append(_chk(f"degree of v_{n}", "degree bookkeeping", vd == -2 * comb(n, 2), str(vd)))
        rd = B.r_map(l, n).degree()
        out.append(_chk(f"degree of r_{n}", "degree bookkeeping", rd == 2 * comb(n, 2), str(rd)))
        ends = [B.v_map(l, n), B.u_map(l, n), B.r_map(l, n), B.longest_crossing(l, n),
                B.e_image(l, n)]
        degs = [F.degree() for F in ends if not F.is_zero()]
        low = min(degs)
        out.append(_chk(f"no endomorphism of B^{n} below degree -2C({n},2)", "lowest degree",
                        low >= B.lowest_endomorphism_degree(n), str(low)))
    for n in (l - 1, l):
        if n < 1:
            continue
        lhs = B.u_hat(l, n) @ B.r_map(l, n) @ B.u_check(l, n)
        out.append(_chk(f"u-hat r u-check is the identity, n={n}", "sandwich identities",
                        lhs.equals(B.BimodMap.identity(l, B.middle_seq(l, n)))))
        lhs = B.w_map(l, n) @ B.u_map(l, n) @ B.r_map(l, n) @ B.u_check(l, n)
        out.append(_chk(f"w u r u-check, n={n}", "sandwich identities",
                        lhs.equals(B.sandwich_rhs_w(l, n))))
        el = B.alternating_trace_element(l, n)
        want = B.normalize(l, el.seq, [(P.one(l).scale((-1) ** comb(n, 2)), None, None)])
        out.append(_chk(f"iterated alternating traces, n={n}", "iterated traces", el == want))
    for n in range(2, l):
        lhs = B.v_hat(l, n) @ B.r_map(l, n) @ B.u_check(l, n)
        out.append(_chk(f"v-hat r u-check, n={n}", "sandwich identities",
                        lhs.equals(B.sandwich_rhs_hat(l, n))))
        lhs = B.w_map(l, n) @ B.v_map(l, n) @ B.r_map(l, n) @ B.u_check(l, n)
        out.append(_chk(f"w v r u-check, n={n}", "sandwich identities",
                        lhs.equals(B.sandwich_rhs_w(l, n))))
        val = B.eta_power_trace_sum(l, n)
        out.append(_chk(f"trace sum with eta powers, n={n}", "iterated traces", val == 1, str(val)))
    return out


# ---------------------------------------------------------------- registry

SUITES = {
    "symfunc": (suite_symfunc, 1, 8),
    "frobenius": (suite_frobenius, 2, 4),
    "schur": (suite_schur, 2, 4),
    "iqmod": (suite_iqmod, 0, 8),
    "grothendieck": (suite_grothendieck, 1, 6),
    "bimod": (suite_bimod, 2, 3),
}


def run_suite(name, l, seed=0):
    """Report dictionary for one suite."""
    fn, lo, hi = SUITES[name]
    start = time.perf_counter()
    if not lo <= l <= hi:
        checks = [Check(f"{name} suite skipped: l={l} is outside the supported range {lo}..{hi}",
                        "level bound", None)]
    else:
        checks = fn(l, seed)
    checks.sort(key=lambda c: c.name)
    return {
        "suite": name,
        "l": l,
        "checks": [c.to_json() for c in checks],
        "elapsed_ms": int((time.perf_counter() - start) * 1000),
    }
