#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hopf_trisect/errors.hpp"
#include "hopf_trisect/examples.hpp"
#include "hopf_trisect/pairing.hpp"

using namespace ht;

namespace {

std::string kind_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    return "none";
}

HopfPair<Rational> trivial_pair() {
    auto one = share(FiniteGroup::trivial());
    auto k = function_coalgebra<Rational>(GroupHom::identity(one), "k");
    Tensor<Rational> f(std::vector<Leg>{in_leg(0, 0, 1), in_leg(0, 0, 1)});
    f[0] = 1;
    return {k, k, f};
}

HopfPair<Rational> d8_pair() { return beta_kappa_pair(d8_fixture<Rational>().triplet); }

bool is_identity(const Tensor<Rational>& t) {
    const std::size_t half = t.rank() / 2;
    std::size_t rows = 1;
    for (std::size_t i = 0; i < half; ++i) rows *= t.leg(i).dim;
    if (rows * rows != t.size()) return false;
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < rows; ++j)
            if (t[i * rows + j] != (i == j ? 1 : 0)) return false;
    return true;
}

}  // namespace

TEST_CASE("pairs: the example pair and the trivial pair pass, a zero form fails") {
    CHECK(check_hopf_pair(trivial_pair()).ok());
    auto p = d8_pair();
    CHECK(check_hopf_pair(p).ok());
    p.form = scaled(p.form, Rational(0));
    CHECK_FALSE(check_hopf_pair(p).ok());
}

TEST_CASE("doublets: Kronecker and standard pairings pass, a corrupted entry fails") {
    const auto m = d8_maps();
    auto d = function_doublet<Rational>(m.phi, m.phi_beta, m.psi);
    CHECK(check_doublet(d).ok());
    auto standard = function_doublet<Rational>(m.phi, m.phi, GroupHom::identity(m.phi.source()));
    CHECK(check_doublet(standard).ok());
    CHECK(check_doublet(standard_doublet<Rational>(share(FiniteGroup::symmetric(3)))).ok());
    d.forms[0].data()[1] += 1;
    CHECK_FALSE(check_doublet(d).ok());
}

TEST_CASE("Kronecker pairing requires phi = phi' after psi") {
    const auto m = d8_maps();
    CHECK(kind_of([&] { kronecker_pairing<Rational>(m.phi, m.phi_kappa, GroupHom::identity(m.phi.source())); }) ==
          "CompatibilityFailure");
}

TEST_CASE("derived pairs and doublets pass their own checks") {
    const auto m = d8_maps();
    for (const auto& dd : derived_doublets(function_doublet<Rational>(m.phi, m.phi_beta, m.psi)))
        CHECK(check_doublet(dd).ok());
    for (const auto& pp : derived_pairs(d8_pair())) CHECK(check_hopf_pair(pp).ok());
    for (const auto& pp : derived_pairs(trivial_pair())) CHECK(pp.form[0] == 1);
}

TEST_CASE("T, U, V on the trivial pair are 1x1 identities") {
    auto p = trivial_pair();
    auto t = build_tuv(p);
    CHECK(t.t(0, 0).size() == 1);
    CHECK(t.t(0, 0)[0] == 1);
    CHECK(t.u(0, 0)[0] == 1);
    CHECK(t.v(0, 0)[0] == 1);
    CHECK(check_tuv_relations(p, t).ok());
}

TEST_CASE("T and its inverse compose to the identity on the example pair") {
    auto p = d8_pair();
    auto t = build_tuv(p);
    const int n = t.order;
    int checked = 0;
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h) {
            const auto& T = t.t(g, h);
            if (T.size() == 0) continue;  // zero sector
            CHECK(is_identity(compose(T, t.t_inv(g, h))));
            CHECK(is_identity(compose(t.t_inv(g, h), T)));
            ++checked;
        }
    CHECK(checked > 0);
    CHECK(check_tuv_relations(p, t).ok());
}

TEST_CASE("a corrupted form breaks the T, U, V relations") {
    auto p = d8_pair();
    auto bad = p;
    bad.form.data()[1] += 1;
    CHECK_FALSE(check_tuv_relations(bad, build_tuv(bad)).ok());
}

TEST_CASE("the Drinfeld double is a Hopf G-coalgebra of product dimension") {
    auto p = d8_pair();
    auto D = drinfeld_double(p);
    auto r = check_hopf_g_coalgebra(D);
    CHECK_MESSAGE(r.ok(), r.summary());
    for (int g = 0; g < D.order(); ++g) CHECK(D.dims[g] == p.first.dims[g] * p.second.dims[g]);
    auto one = identity_sector(D);
    CHECK(check_hopf_g_coalgebra(one).ok());
    CHECK(drinfeld_double(trivial_pair()).dims == std::vector<std::size_t>{1});
}

TEST_CASE("the example triplet passes and a zeroed alpha-beta form fails (b)") {
    auto t = d8_fixture<Rational>().triplet;
    auto r = check_triplet(t);
    CHECK_MESSAGE(r.ok(), r.summary());
    for (auto& f : t.form_ab) f = scaled(f, Rational(0));
    auto bad = check_triplet(t);
    CHECK(bad.ok("(a)"));
    CHECK_FALSE(bad.ok("(b) beta"));
}

TEST_CASE("the all-trivial triplet passes and its lemma equations read 1 = 1") {
    auto one = share(FiniteGroup::trivial());
    auto H = group_algebra<Rational>(one);
    Tensor<Rational> R(std::vector<Leg>{out_leg(H.space, 0, 1), out_leg(H.space, 0, 1)});
    R[0] = 1;
    auto t = quasitriangular_triplet(H, make_r_matrix(H, R));
    CHECK(check_triplet(t).ok());
    CHECK(lemma_network_b(t, 0).value() == 1);
    CHECK(lemma_network_c(t, 0).value() == 1);
    CHECK(check_fundamental_lemma(t).morphism);
}

TEST_CASE("lemma verdicts agree on the valid example") {
    auto L = check_fundamental_lemma(d8_fixture<Rational>().triplet);
    CHECK(L.morphism);
    CHECK(L.equation_b);
    CHECK(L.equation_c);
}

TEST_CASE("a broken kappa-beta form makes all three verdicts false together") {
    auto t = builtin_fixture<Rational>("s3").triplet;
    std::swap(t.form_kb.data()[0], t.form_kb.data()[1]);
    auto L = check_fundamental_lemma(t);
    CHECK_FALSE(L.morphism);
    CHECK_FALSE(L.equation_b);
    CHECK_FALSE(L.equation_c);
}

TEST_CASE("quasitriangular triplets from k[Z/2] and k[S3]") {
    for (const char* name : {"z2", "z2_twisted", "s3"}) {
        CAPTURE(name);
        auto f = builtin_fixture<Rational>(name);
        CHECK(check_triplet(f.triplet).ok());
        auto L = check_fundamental_lemma(f.triplet);
        CHECK(L.morphism);
        CHECK(L.agree());
    }
}

TEST_CASE("an R-matrix without an inverse is rejected") {
    auto Z2 = share(FiniteGroup::cyclic(2));
    auto H = group_algebra<Rational>(Z2);
    Tensor<Rational> R(std::vector<Leg>{out_leg(H.space, 0, 2), out_leg(H.space, 0, 2)});
    R.at({0, 0}) = 1;
    R.at({1, 1}) = 1;  // 1⊗1 + t⊗t squares to 2(1⊗1 + t⊗t), so it has no inverse of the required form
    CHECK(kind_of([&] { quasitriangular_triplet(H, make_r_matrix(H, R)); }) == "InvalidRMatrix");
    Tensor<Rational> wrong(std::vector<Leg>{out_leg(H.space, 0, 2)});
    CHECK(kind_of([&] { make_r_matrix(H, wrong); }) == "InvalidRMatrix");
}

TEST_CASE("solved integral bundles have counit value 1") {
    auto f = builtin_fixture<Rational>("s3");
    const auto& t = f.triplet;
    Rational eb = 0, ek = 0;
    for (std::size_t i = 0; i < f.integrals.beta.size(); ++i) eb += t.beta.eps()[i] * f.integrals.beta[i];
    for (std::size_t i = 0; i < f.integrals.kappa.size(); ++i) ek += t.kappa.eps()[i] * f.integrals.kappa[i];
    CHECK(eb == 1);
    CHECK(ek == 1);
}

TEST_CASE("the float backend agrees with the exact verdicts") {
    auto t = d8_fixture<Complex>().triplet;
    CHECK(check_triplet(t).ok());
    CHECK(check_fundamental_lemma(t).agree());
}
