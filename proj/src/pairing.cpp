#include "hopf_trisect/pairing.hpp"

#include "hopf_trisect/errors.hpp"
#include "hopf_trisect/network.hpp"

namespace ht {

template <class K>
Tensor<K> wildcard(Tensor<K> t) {
    for (std::size_t k = 0; k < t.rank(); ++k) {
        Leg l = t.leg(k);
        l.space = 0;
        t.set_leg(k, l);
    }
    return t;
}

namespace {

template <class K>
Tensor<K> regraded_form(const Tensor<K>& t, int grade) {
    Tensor<K> out = wildcard(t);
    for (std::size_t k = 0; k < out.rank(); ++k) {
        Leg l = out.leg(k);
        l.grade = grade;
        out.set_leg(k, l);
    }
    return out;
}

template <class K>
Tensor<K> otimes3(const Tensor<K>& a, const Tensor<K>& b, const Tensor<K>& c) {
    return otimes(otimes(a, b), c);
}

// Same entries under new leg labels; the flat layouts must agree.
template <class K>
void fill(Tensor<K>& target, const Tensor<K>& source) {
    if (target.size() != source.size()) fail("DimensionMismatch", "reshape between different sizes");
    target.data() = source.data();
}

}  // namespace

// ---- doublets ---------------------------------------------------------------------

template <class K>
Report check_doublet(const HopfGDoublet<K>& d, double tol) {
    Report r;
    const auto& A = d.alg;
    const auto& B = d.co;
    const FiniteGroup& G = *A.group;
    const int n = A.order(), one = A.one();
    if (B.order() != n || static_cast<int>(d.forms.size()) != n)
        fail("DimensionMismatch", "doublet sides use different groups");
    std::vector<Tensor<K>> f;
    for (const auto& t : d.forms) f.push_back(wildcard(t));
    for (int g = 0; g < n; ++g) {
        const int gi = G.inv(g);
        auto split = permute_outputs(otimes3(A.Delta(g), B.id(g), B.id(g)), {0, 2, 1, 3});
        auto lhs = compose(split, otimes(f[g], f[g]));
        auto rhs = compose(otimes(A.id(g), compose(swap_map<K>(B.leg(g), B.leg(g)), B.M(g))), f[g]);
        expect_equal(r, "pairing comultiplication", {g}, lhs, rhs, tol);
        expect_equal(r, "pairing counit", {g}, compose(otimes(A.id(g), B.i(g)), f[g]), A.eps(g), tol);
        expect_equal(r, "pairing antipode", {g}, compose(otimes(A.S(g), B.id(gi)), f[gi]),
                     compose(otimes(A.id(g), B.S(gi)), f[g]), tol);
    }
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h) {
            const int gh = G.mul(g, h);
            auto lhs = compose(otimes(A.M(g, h), B.id(gh)), f[gh]);
            auto split = permute_outputs(otimes3(A.id(g), A.id(h), B.Delta(g, h)), {0, 2, 1, 3});
            expect_equal(r, "pairing multiplication", {g, h}, lhs, compose(split, otimes(f[g], f[h])), tol);
        }
    expect_equal(r, "pairing unit", {one}, compose(otimes(A.i(), B.id(one)), f[one]), B.eps(), tol);
    return r;
}

template <class K>
HopfGDoublet<K> pair_as_doublet(const HopfPair<K>& p) {
    HopfGDoublet<K> d;
    d.alg = as_algebra(identity_sector(p.first));
    d.co = identity_sector(p.second);
    d.forms = {regraded_form(p.form, 0)};
    return d;
}

template <class K>
Report check_hopf_pair(const HopfPair<K>& p, double tol) {
    return check_doublet(pair_as_doublet(p), tol);
}

template <class K>
std::vector<HopfGDoublet<K>> derived_doublets(const HopfGDoublet<K>& d) {
    const FiniteGroup& G = *d.alg.group;
    HopfGDoublet<K> a;
    a.alg = opposite(d.alg);
    a.co = coopposite(d.co);
    for (int g = 0; g < G.order(); ++g) a.forms.push_back(regraded_form(d.forms[G.inv(g)], g));
    HopfGDoublet<K> b;
    b.alg = coopposite(d.alg);
    b.co = opposite(d.co);
    b.forms = d.forms;
    return {a, b};
}

template <class K>
std::vector<HopfPair<K>> derived_pairs(const HopfPair<K>& p) {
    return {
        {opposite(p.first), coopposite(p.second), p.form},
        {coopposite(p.first), opposite(p.second), p.form},
        {opposite(coopposite(p.first)), p.second, p.form},
        {p.first, opposite(coopposite(p.second)), p.form},
    };
}

// ---- T, U, V --------------------------------------------------------------------

namespace {

// T_{g,h}(y ⊗ x) = <x1, y2> y1 ⊗ x2 with Delta'(g,1) y and Delta(1,h) x;
// the inverse applies S_1 to x1 first.
template <class K>
Tensor<K> t_tensor(const HopfPair<K>& p, int g, int h, bool inverse) {
    const auto& low = p.first;
    const auto& top = p.second;
    const int one = low.one();
    Tensor<K> split = otimes(top.Delta(g, one), low.Delta(one, h));
    if (inverse) split = compose(split, otimes(otimes3(top.id(g), top.id(one), low.S(one)), low.id(h)));
    split = permute_outputs(split, {2, 1, 0, 3});
    return compose(split, otimes3(wildcard(p.form), top.id(g), low.id(h)));
}

}  // namespace

template <class K>
TUVTensors<K> build_tuv(const HopfPair<K>& p) {
    const auto& low = p.first;
    const auto& top = p.second;
    const FiniteGroup& G = *low.group;
    const int n = low.order();
    TUVTensors<K> t;
    t.order = n;
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h) {
            t.T.push_back(t_tensor(p, g, h, false));
            t.T_inv.push_back(t_tensor(p, g, h, true));
        }
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h) {
            const int gi = G.inv(g), hi = G.inv(h);
            Tensor<K> u = otimes(top.S(g), low.id(h));
            u = compose(u, t.t_inv(gi, h));
            u = compose(u, otimes(top.S(gi), low.S(h)));
            u = compose(u, t.t(g, hi));
            u = compose(u, otimes(top.id(g), low.S(hi)));
            t.U.push_back(std::move(u));
            Tensor<K> v = otimes(top.S(g), low.S(h));
            v = compose(v, t.t(gi, hi));
            v = compose(v, otimes(top.S(gi), low.id(hi)));
            t.V.push_back(std::move(v));
        }
    return t;
}

template <class K>
Report check_tuv_relations(const HopfPair<K>& p, const TUVTensors<K>& t, double tol) {
    Report r;
    const auto& low = p.first;
    const auto& top = p.second;
    const FiniteGroup& G = *low.group;
    const int n = low.order();
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h) {
            const int gi = G.inv(g), hi = G.inv(h);
            const auto id = otimes(top.id(g), low.id(h));
            expect_equal(r, "T inverse", {g, h}, compose(t.t(g, h), t.t_inv(g, h)), id, tol);
            expect_equal(r, "T inverse", {g, h}, compose(t.t_inv(g, h), t.t(g, h)), id, tol);
            expect_equal(r, "TVU relation 1", {g, h}, compose(t.v(g, h), t.u(g, hi)),
                         compose(t.t(g, h), otimes(top.id(g), low.S(h))), tol);
            const auto s1 = otimes(top.S(g), low.S(h));
            const auto s2 = otimes(top.S(gi), low.S(hi));
            auto lhs = compose(compose(compose(t.t(g, h), s1), t.t_inv(gi, hi)), s2);
            auto rhs = compose(compose(compose(s1, t.t_inv(gi, hi)), s2), t.t(g, h));
            expect_equal(r, "TVU relation 2", {g, h}, lhs, rhs, tol);
        }
    return r;
}

// ---- Drinfeld double --------------------------------------------------------------

template <class K>
HopfGCoalgebra<K> drinfeld_double(const HopfPair<K>& p, const TUVTensors<K>& t) {
    const auto& low = p.first;
    const auto& top = p.second;
    const FiniteGroup& G = *low.group;
    const int n = low.order();
    std::vector<std::size_t> dims(n);
    for (int g = 0; g < n; ++g) dims[g] = low.dims[g] * top.dims[g];
    std::string name;
    if (!low.name.empty() || !top.name.empty()) name = "D(" + low.name + "," + top.name + ")";
    auto D = HopfGCoalgebra<K>::blank(low.group, dims, name);
    for (int g = 0; g < n; ++g) {
        const int gi = G.inv(g);
        // (x ⊗ x') · (y ⊗ y') = x·U_low ⊗ U_top·y' where U_{g,g}(x' ⊗ y) = U_top ⊗ U_low.
        auto m = permute_outputs(otimes3(low.id(g), t.u(g, g), top.id(g)), {0, 2, 1, 3});
        fill(D.mult[g], compose(m, otimes(low.M(g), top.M(g))));
        fill(D.unit[g], otimes(low.i(g), top.i(g)));
        auto s = compose(otimes(low.S(g), top.S(g)), swap_map<K>(low.leg(gi), top.leg(gi)));
        fill(D.antipode[g], permute_outputs(compose(s, t.u(gi, gi)), {1, 0}));
    }
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h)
            fill(D.Delta(g, h), permute_outputs(otimes(low.Delta(g, h), top.Delta(g, h)), {0, 2, 1, 3}));
    fill(D.counit, otimes(low.eps(), top.eps()));
    return D;
}

template <class K>
HopfGCoalgebra<K> drinfeld_double(const HopfPair<K>& p) {
    return drinfeld_double(p, build_tuv(p));
}

// ---- triplets ---------------------------------------------------------------------

template <class K>
HopfPair<K> beta_kappa_pair(const HopfGTriplet<K>& t) {
    return {t.beta, t.kappa, permute(wildcard(t.form_kb), {1, 0})};
}

template <class K>
std::vector<Tensor<K>> triplet_morphism(const HopfGTriplet<K>& t, const HopfGCoalgebra<K>& dbl,
                                        const HopfGCoalgebra<K>& alpha_dual) {
    std::vector<Tensor<K>> phi;
    for (int g = 0; g < t.alpha.order(); ++g) {
        auto split = permute_outputs(otimes3(t.alpha.Delta(g), t.beta.id(g), t.kappa.id(g)), {0, 2, 1, 3});
        auto form = compose(split, otimes(wildcard(t.form_ab[g]), wildcard(t.form_ak[g])));
        Tensor<K> m(std::vector<Leg>{dbl.leg(g), out_leg(alpha_dual.space, g, alpha_dual.dims[g])});
        fill(m, permute(form, {1, 2, 0}));
        phi.push_back(std::move(m));
    }
    return phi;
}

namespace {

template <class K>
Report morphism_report(const HopfGTriplet<K>& t, double tol) {
    Report r;
    const FiniteGroup& G = *t.alpha.group;
    const int n = t.alpha.order(), one = t.alpha.one();
    const auto D = drinfeld_double(beta_kappa_pair(t));
    const auto C = dualize(t.alpha);
    const auto phi = triplet_morphism(t, D, C);
    for (int g = 0; g < n; ++g) {
        expect_equal(r, "morphism multiplication", {g}, compose(D.M(g), phi[g]),
                     compose(otimes(phi[g], phi[g]), C.M(g)), tol);
        expect_equal(r, "morphism unit", {g}, compose(D.i(g), phi[g]), C.i(g), tol);
        expect_equal(r, "morphism antipode", {g}, compose(phi[g], C.S(g)), compose(D.S(g), phi[G.inv(g)]), tol);
        for (int h = 0; h < n; ++h)
            expect_equal(r, "morphism comultiplication", {g, h}, compose(phi[G.mul(g, h)], C.Delta(g, h)),
                         compose(D.Delta(g, h), otimes(phi[g], phi[h])), tol);
    }
    expect_equal(r, "morphism counit", {one}, compose(phi[one], C.eps()), D.eps(), tol);
    return r;
}

}  // namespace

template <class K>
Report check_triplet(const HopfGTriplet<K>& t, double tol) {
    Report r;
    r.merge(check_hopf_pair(HopfPair<K>{t.kappa, t.beta, t.form_kb}, tol), "(a) ");
    r.merge(check_doublet(HopfGDoublet<K>{t.alpha, t.beta, t.form_ab}, tol), "(b) beta ");
    r.merge(check_doublet(HopfGDoublet<K>{t.alpha, t.kappa, t.form_ak}, tol), "(b) kappa ");
    r.merge(morphism_report(t, tol), "(c) ");
    return r;
}

// Both networks split kappa, beta and alpha once, pair (kappa_1, beta_1),
// (alpha, kappa_g) and (alpha, beta_g), and differ only in where the antipodes
// sit. Built as networks: the dense product of three coproducts is too large
// for six-dimensional sectors.
template <class K>
Tensor<K> lemma_network_b(const HopfGTriplet<K>& t, int g) {
    const FiniteGroup& G = *t.alpha.group;
    const int one = G.identity(), gi = G.inv(g);
    TensorNetwork<K> net;
    const auto k = net.add(t.kappa.Delta(g, one));
    const auto b = net.add(t.beta.Delta(one, gi));
    const auto a = net.add(t.alpha.Delta(g));
    const auto sb = net.add(t.beta.S(gi));
    const auto kb = net.add(wildcard(t.form_kb));
    const auto ak = net.add(wildcard(t.form_ak[g]));
    const auto ab = net.add(wildcard(t.form_ab[g]));
    net.link({k, 2}, {kb, 0});
    net.link({b, 1}, {kb, 1});
    net.link({a, 2}, {ak, 0});
    net.link({k, 1}, {ak, 1});
    net.link({b, 2}, {sb, 0});
    net.link({a, 1}, {ab, 0});
    net.link({sb, 1}, {ab, 1});
    net.set_open({{k, 0}, {b, 0}, {a, 0}});
    return contract(net);
}

template <class K>
Tensor<K> lemma_network_c(const HopfGTriplet<K>& t, int g) {
    const FiniteGroup& G = *t.alpha.group;
    const int one = G.identity(), gi = G.inv(g);
    TensorNetwork<K> net;
    const auto k = net.add(t.kappa.Delta(gi, one));
    const auto b = net.add(t.beta.Delta(one, g));
    const auto a = net.add(t.alpha.Delta(g));
    const auto sk = net.add(t.kappa.S(gi));
    const auto sb = net.add(t.beta.S(one));
    const auto kb = net.add(wildcard(t.form_kb));
    const auto ak = net.add(wildcard(t.form_ak[g]));
    const auto ab = net.add(wildcard(t.form_ab[g]));
    net.link({k, 2}, {kb, 0});
    net.link({b, 1}, {sb, 0});
    net.link({sb, 1}, {kb, 1});
    net.link({a, 2}, {ak, 0});
    net.link({k, 1}, {sk, 0});
    net.link({sk, 1}, {ak, 1});
    net.link({a, 1}, {ab, 0});
    net.link({b, 2}, {ab, 1});
    net.set_open({{k, 0}, {b, 0}, {a, 0}});
    return contract(net);
}

template <class K>
LemmaVerdicts check_fundamental_lemma(const HopfGTriplet<K>& t, double tol) {
    LemmaVerdicts v;
    const FiniteGroup& G = *t.alpha.group;
    const auto &A = t.alpha, &B = t.beta, &Kp = t.kappa;
    Report morph = morphism_report(t, tol);
    v.morphism = morph.ok();
    v.report.merge(morph, "definition (c) ");
    Report eqs;
    for (int g = 0; g < G.order(); ++g) {
        const int gi = G.inv(g);
        expect_equal(eqs, "equation (b)", {g}, lemma_network_b(t, g),
                     compose(otimes3(Kp.S(g), B.S(gi), A.S(g)), lemma_network_b(t, gi)), tol);
        expect_equal(eqs, "equation (c)", {g}, lemma_network_c(t, g),
                     compose(otimes3(Kp.S(gi), B.S(g), A.S(g)), lemma_network_c(t, gi)), tol);
    }
    v.equation_b = eqs.ok("equation (b)");
    v.equation_c = eqs.ok("equation (c)");
    v.report.merge(eqs);
    return v;
}

template <class K>
IntegralBundle<K> solve_integral_bundle(const HopfGTriplet<K>& t, double tol) {
    IntegralBundle<K> e;
    e.alpha = solve_g_cointegral(t.alpha, Side::Right, tol).forms;
    e.beta = solve_cointegral(t.beta, Side::Right, tol).element;
    e.kappa = solve_cointegral(t.kappa, Side::Right, tol).element;
    return e;
}

// ---- quasitriangular ----------------------------------------------------------------

template <class K>
RMatrix<K> make_r_matrix(const HopfGAlgebra<K>& H, const Tensor<K>& R) {
    const int one = H.one();
    if (R.rank() != 2 || R.num_out() != 2 || R.leg(0).dim != H.dims[one] || R.leg(1).dim != H.dims[one])
        fail("InvalidRMatrix", "R must be an element of H_1 ⊗ H_1");
    Tensor<K> r(std::vector<Leg>{out_leg(H.space, one, H.dims[one]), out_leg(H.space, one, H.dims[one])});
    fill(r, R);
    return {r, compose(r, otimes(H.S(one), H.id(one)))};
}

template <class K>
Report check_r_matrix(const HopfGAlgebra<K>& H, const RMatrix<K>& R, double tol) {
    Report r;
    const int one = H.one();
    const auto mm = otimes(H.M(one, one), H.M(one, one));
    const auto ii = otimes(H.i(), H.i());
    expect_equal(r, "R-matrix inverse", {one}, compose(permute_outputs(otimes(R.R, R.R_inv), {0, 2, 1, 3}), mm), ii,
                 tol);
    expect_equal(r, "R-matrix inverse", {one}, compose(permute_outputs(otimes(R.R_inv, R.R), {0, 2, 1, 3}), mm), ii,
                 tol);
    for (int g = 0; g < H.order(); ++g) {
        auto lhs = compose(permute_outputs(otimes(R.R, H.Delta(g)), {0, 2, 1, 3}), otimes(H.M(one, g), H.M(one, g)));
        auto rhs = compose(permute_outputs(otimes(H.Delta(g), R.R), {1, 2, 0, 3}), otimes(H.M(g, one), H.M(g, one)));
        expect_equal(r, "R-matrix intertwining", {g}, lhs, rhs, tol);
    }
    return r;
}

template <class K>
HopfGTriplet<K> quasitriangular_triplet(const HopfGAlgebra<K>& H, const RMatrix<K>& R, double tol) {
    Report rep = check_r_matrix(H, R, tol);
    if (!rep.ok()) fail("InvalidRMatrix", rep.first_failure()->axiom);
    const int one = H.one();
    HopfGTriplet<K> t;
    t.alpha = coopposite(H);
    t.beta = dualize(H);
    t.kappa = dualize(H);
    const std::size_t d1 = H.dims[one];
    t.form_kb = Tensor<K>(std::vector<Leg>{in_leg(0, one, d1), in_leg(0, one, d1)});
    for (std::size_t a = 0; a < d1; ++a)
        for (std::size_t b = 0; b < d1; ++b) t.form_kb.at({a, b}) = R.R.at({b, a});
    for (int g = 0; g < H.order(); ++g) {
        Tensor<K> f(std::vector<Leg>{in_leg(0, g, H.dims[g]), in_leg(0, g, H.dims[g])});
        for (std::size_t k = 0; k < H.dims[g]; ++k) f.at({k, k}) = Field<K>::one();
        t.form_ab.push_back(f);
        t.form_ak.push_back(f);
    }
    return t;
}

#define HT_INSTANTIATE(K)                                                                                  \
    template struct HopfPair<K>;                                                                           \
    template struct HopfGDoublet<K>;                                                                       \
    template Tensor<K> wildcard(Tensor<K>);                                                                \
    template Report check_doublet(const HopfGDoublet<K>&, double);                                         \
    template Report check_hopf_pair(const HopfPair<K>&, double);                                           \
    template HopfGDoublet<K> pair_as_doublet(const HopfPair<K>&);                                          \
    template std::vector<HopfGDoublet<K>> derived_doublets(const HopfGDoublet<K>&);                        \
    template std::vector<HopfPair<K>> derived_pairs(const HopfPair<K>&);                                   \
    template TUVTensors<K> build_tuv(const HopfPair<K>&);                                                  \
    template Report check_tuv_relations(const HopfPair<K>&, const TUVTensors<K>&, double);                 \
    template HopfGCoalgebra<K> drinfeld_double(const HopfPair<K>&);                                        \
    template HopfGCoalgebra<K> drinfeld_double(const HopfPair<K>&, const TUVTensors<K>&);                  \
    template HopfPair<K> beta_kappa_pair(const HopfGTriplet<K>&);                                          \
    template std::vector<Tensor<K>> triplet_morphism(const HopfGTriplet<K>&, const HopfGCoalgebra<K>&,     \
                                                     const HopfGCoalgebra<K>&);                            \
    template Report check_triplet(const HopfGTriplet<K>&, double);                                         \
    template LemmaVerdicts check_fundamental_lemma(const HopfGTriplet<K>&, double);                        \
    template Tensor<K> lemma_network_b(const HopfGTriplet<K>&, int);                                       \
    template Tensor<K> lemma_network_c(const HopfGTriplet<K>&, int);                                       \
    template IntegralBundle<K> solve_integral_bundle(const HopfGTriplet<K>&, double);                      \
    template RMatrix<K> make_r_matrix(const HopfGAlgebra<K>&, const Tensor<K>&);                           \
    template Report check_r_matrix(const HopfGAlgebra<K>&, const RMatrix<K>&, double);                     \
    template HopfGTriplet<K> quasitriangular_triplet(const HopfGAlgebra<K>&, const RMatrix<K>&, double);

HT_INSTANTIATE(Rational)
HT_INSTANTIATE(Complex)

#undef HT_INSTANTIATE

}  // namespace ht
