#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "hopf_trisect/errors.hpp"
#include "hopf_trisect/examples.hpp"
#include "hopf_trisect/invariant.hpp"

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

// phi_kappa: Z/n -> 1, so the whole source is the kernel with generator 1.
// Returns F[m][y] = (1/n) sum over p with rho(p) = y of exp(2 pi i m p / n).
std::vector<std::vector<Complex>> fourier_oracle(int n, const std::vector<int>& rho, int target_order) {
    std::vector<std::vector<Complex>> F(n, std::vector<Complex>(target_order));
    for (int m = 0; m < n; ++m)
        for (int p = 0; p < n; ++p)
            F[m][rho[p]] += std::polar(1.0 / n, 2 * std::numbers::pi * m * p / n);
    return F;
}

GroupHom to_trivial(int n) { return GroupHom::trivial(share(FiniteGroup::cyclic(n)), share(FiniteGroup::trivial())); }

}  // namespace

TEST_CASE("function coalgebra sectors are the fibers") {
    auto Z2 = share(FiniteGroup::cyclic(2));
    auto id = function_coalgebra<Rational>(GroupHom::identity(Z2));
    CHECK(id.dims == std::vector<std::size_t>{1, 1});
    CHECK(check_hopf_g_coalgebra(id).ok());

    const auto m = d8_maps();
    auto Hb = function_coalgebra<Rational>(m.phi_beta);
    for (int a = 0; a < Hb.order(); ++a) CHECK(Hb.dims[a] == (m.phi_beta.preimage(a).empty() ? 0u : 2u));
    CHECK(check_involutory(Hb));
}

TEST_CASE("function coalgebra comultiplication splits x = yz entrywise") {
    const auto m = d8_maps();
    const auto& phi = m.phi_kappa;
    const auto& S = *phi.source();
    auto H = function_coalgebra<Rational>(phi);
    const int n = H.order();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            const auto fa = phi.preimage(a), fb = phi.preimage(b), fab = phi.preimage(H.group->mul(a, b));
            for (std::size_t i = 0; i < fab.size(); ++i)
                for (std::size_t j = 0; j < fa.size(); ++j)
                    for (std::size_t k = 0; k < fb.size(); ++k)
                        CHECK(H.Delta(a, b).at({i, j, k}) == (S.mul(fa[j], fb[k]) == fab[i] ? 1 : 0));
        }
    const auto ker = phi.kernel();
    for (std::size_t i = 0; i < ker.size(); ++i) CHECK(H.eps()[i] == (ker[i] == S.identity() ? 1 : 0));
}

TEST_CASE("the trivial grading recovers the function algebra k^H") {
    auto Z3 = share(FiniteGroup::cyclic(3));
    auto H = function_coalgebra<Rational>(GroupHom::trivial(Z3, share(FiniteGroup::trivial())));
    CHECK(same_structure(H, dualize(group_algebra<Rational>(Z3))));
}

TEST_CASE("Kronecker pairing with psi = id is the delta matrix") {
    const auto m = d8_maps();
    auto forms = kronecker_pairing<Rational>(m.phi, m.phi, GroupHom::identity(m.phi.source()));
    for (const auto& f : forms) {
        if (f.size() == 0) continue;
        const std::size_t d = f.leg(0).dim;
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) CHECK(f.at({i, j}) == (i == j ? 1 : 0));
    }
    auto along = function_doublet<Rational>(m.phi, m.phi_kappa, m.psi_kappa);
    CHECK(check_doublet(along).ok());
}

TEST_CASE("Fourier pairing matches the displayed sum") {
    auto one = to_trivial(1);
    CHECK(fourier_pairing<Rational>(one, one, {0})[0] == 1);

    auto z2 = to_trivial(2);
    for (const std::vector<int>& rho : {std::vector<int>{0, 0}, std::vector<int>{0, 1}}) {
        auto F = fourier_pairing<Rational>(z2, z2, rho);
        auto oracle = fourier_oracle(2, rho, 2);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j)
                CHECK(std::abs(F.at({i, j}).get_d() - oracle[i][j].real()) < 1e-12);
    }
    auto injective = fourier_pairing<Rational>(z2, z2, {0, 1});
    CHECK(injective.at({1, 1}) == Rational(-1, 2));

    auto z3 = to_trivial(3);
    CHECK(kind_of([&] { fourier_pairing<Rational>(z3, z3, {0, 1, 2}); }) == "RequiresFloatBackend");
    auto F3 = fourier_pairing<Complex>(z3, z3, {0, 2, 1});
    auto o3 = fourier_oracle(3, {0, 2, 1}, 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) CHECK(std::abs(F3.at({i, j}) - o3[i][j]) < 1e-12);
}

TEST_CASE("Fourier pairing needs a cyclic kernel and a homomorphic rho") {
    auto klein = GroupHom::trivial(share(FiniteGroup::dihedral(2)), share(FiniteGroup::trivial()));
    CHECK(kind_of([&] { fourier_pairing<Complex>(klein, klein, {0, 1, 2, 3}); }) == "NotCyclic");
    auto z2 = to_trivial(2);
    CHECK(kind_of([&] { fourier_pairing<Rational>(z2, z2, {1, 0}); }) == "CompatibilityFailure");
}

TEST_CASE("the D8 example is a Hopf triplet") {
    auto f = d8_fixture<Rational>();
    CHECK(check_triplet(f.triplet).ok());
    CHECK(check_fundamental_lemma(f.triplet).agree());
    check_example_hypothesis(d8_maps());
    // Shipped integrals agree with the solved and normalized ones.
    auto solved = solve_integral_bundle(f.triplet);
    CHECK(solved.beta == f.integrals.beta);
    CHECK(solved.kappa == f.integrals.kappa);
}

TEST_CASE("kernel elements of order 3 violate the hypothesis") {
    auto Z3 = share(FiniteGroup::cyclic(3));
    auto one = share(FiniteGroup::trivial());
    TripletMaps m{GroupHom::trivial(Z3, one), GroupHom::trivial(Z3, one), GroupHom::trivial(Z3, one),
                  GroupHom::identity(Z3), GroupHom::identity(Z3), {0, 1, 2}};
    CHECK(kind_of([&] { check_example_hypothesis(m); }) == "HypothesisViolated");
    CHECK(kind_of([&] { example_triplet<Complex>(m); }) == "HypothesisViolated");
    // The unchecked build still pairs correctly: the hypothesis is sufficient, not necessary.
    auto t = example_triplet<Complex>(m, false);
    CHECK(check_triplet(t).ok());
    CHECK(check_fundamental_lemma(t).agree());
}

TEST_CASE("non-central kernels violate the hypothesis") {
    auto S3 = share(FiniteGroup::symmetric(3));
    auto Z2 = share(FiniteGroup::cyclic(2));
    std::vector<int> sign(6);
    for (int x = 0; x < 6; ++x) sign[x] = S3->element_order(x) == 2 ? 1 : 0;
    auto phi = GroupHom::from_map(S3, Z2, sign);
    TripletMaps m{phi, phi, phi, GroupHom::identity(S3), GroupHom::identity(S3), phi.kernel()};
    CHECK(kind_of([&] { check_example_hypothesis(m); }) == "HypothesisViolated");
}

TEST_CASE("D8 demo: Z on S1xS3 is zeta^-1 |phi^-1(alpha)|") {
    auto f = d8_fixture<Rational>();
    TrisectionInvariant<Rational> inv(f.triplet, f.integrals);
    const auto d = builtin_diagram("s1_x_s3");
    const auto phi = d8_maps().phi;
    const auto& G = inv.group();
    for (int a = 0; a < G.order(); ++a) {
        CAPTURE(G.name(a));
        const auto fiber = static_cast<long>(phi.preimage(a).size());
        auto r = inv.normalized(d, {a});
        CHECK(r.bracket == fiber);
        ZetaPower<Rational> expect{Rational(fiber), 1, inv.stabilizer()};
        CHECK(r.value.equals(expect));
    }
    CHECK(inv.normalized(d, {G.find("r")}).bracket == 0);
    CHECK(inv.normalized(d, {G.find("r4")}).bracket == 2);
}

TEST_CASE("D8 demo values are invariant under conjugation by the crossing's domain") {
    auto f = d8_fixture<Rational>();
    TrisectionInvariant<Rational> inv(f.triplet, f.integrals);
    const auto& G = inv.group();
    const auto phi = d8_maps().phi;
    auto crossing = conjugation_crossing<Rational>(phi);
    for (const char* name : {"s1_x_s3", "genus2"}) {
        auto d = builtin_diagram(name);
        for (const auto& c : enumerate_colorings(d, G))
            for (int b : phi.image()) {
                REQUIRE(crossing.defined[b]);
                CHECK(inv.bracket(d, c) == inv.bracket(d, conjugate_coloring(c, b, G)));
            }
    }
    // im(phi) is not normal, so conjugating by r leaves the support.
    const auto d = builtin_diagram("s1_x_s3");
    const int s = G.find("s"), r = G.find("r");
    CHECK(inv.bracket(d, {s}) == 2);
    CHECK(inv.bracket(d, conjugate_coloring({s}, r, G)) == 0);
    CHECK_FALSE(crossing.defined[r]);
}

TEST_CASE("unknown fixture names are rejected") {
    CHECK(kind_of([] { builtin_fixture<Rational>("q8"); }) == "UnknownName");
}
