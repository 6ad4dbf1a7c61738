#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hopf_trisect/errors.hpp"
#include "hopf_trisect/examples.hpp"
#include "hopf_trisect/hopf.hpp"
#include "hopf_trisect/io.hpp"

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

// H^phi for phi: D4 -> D8, (s,r) -> (s,r^4).
HopfGCoalgebra<Rational> h_phi() { return function_coalgebra<Rational>(d8_maps().phi, "H^phi"); }

HopfGCoalgebra<Rational> trivial_hopf() {
    auto one = share(FiniteGroup::trivial());
    return function_coalgebra<Rational>(GroupHom::identity(one), "k");
}

}  // namespace

TEST_CASE("H^phi and the trivial Hopf algebra pass every axiom") {
    for (const auto& H : {h_phi(), trivial_hopf()}) {
        auto r = check_hopf_g_coalgebra(H);
        CHECK_MESSAGE(r.ok(), r.summary());
        CHECK(check_involutory(H));
        CHECK(check_antipode_antimorphism(H));
        CHECK(check_ladders(H).ok());
    }
}

TEST_CASE("H^phi multiplication is pointwise on the fiber basis") {
    auto H = h_phi();
    for (int a = 0; a < H.order(); ++a) {
        const std::size_t d = H.dims[a];
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                for (std::size_t k = 0; k < d; ++k) CHECK(H.M(a).at({i, j, k}) == (i == j && j == k ? 1 : 0));
    }
    CHECK(H.dims[0] == 2);
    CHECK(H.dims[1] == 0);  // r is not in the image
}

TEST_CASE("zero antipode fails with a witness") {
    auto H = h_phi();
    for (auto& s : H.antipode) s = scaled(s, Rational(0));
    auto r = check_hopf_g_coalgebra(H);
    REQUIRE_FALSE(r.ok());
    const auto* f = r.first_failure();
    REQUIRE(f != nullptr);
    CHECK(f->witness >= 0);
    CHECK_FALSE(f->grading.empty());
}

TEST_CASE("scaling the identity antipode breaks involutivity and the ladders") {
    auto H = h_phi();
    H.antipode[H.one()] = scaled(H.antipode[H.one()], Rational(2));
    CHECK_FALSE(check_involutory(H));
    CHECK_FALSE(check_ladders(H).ok());
}

TEST_CASE("a corrupted comultiplication breaks the antipode anti-morphism") {
    auto H = h_phi();
    auto& D = H.Delta(H.one(), H.one());
    D.data()[1] += 1;
    CHECK_FALSE(check_antipode_antimorphism(H));
}

TEST_CASE("dualizing twice returns the original entries") {
    auto H = h_phi();
    CHECK(same_structure(dualize(dualize(H)), H));
    auto A = dualize(H);
    CHECK(check_hopf_g_algebra(A).ok());
    CHECK(check_involutory(A));
}

TEST_CASE("the dual of k[Z/2] is the function algebra on Z/2") {
    auto Z2 = share(FiniteGroup::cyclic(2));
    auto one = share(FiniteGroup::trivial());
    auto fun = function_coalgebra<Rational>(GroupHom::trivial(Z2, one));
    CHECK(same_structure(dualize(group_algebra<Rational>(Z2)), fun));
}

TEST_CASE("op and cop are involutions and agree with the definitions") {
    auto H = h_phi();
    CHECK(same_structure(opposite(opposite(H)), H));
    CHECK(same_structure(coopposite(coopposite(H)), H));
    CHECK(check_hopf_g_coalgebra(opposite(H)).ok());
    CHECK(check_hopf_g_coalgebra(coopposite(H)).ok());
    // Cocommutative identity sector over the trivial group.
    auto Z3 = share(FiniteGroup::cyclic(3));
    auto k = as_coalgebra(group_algebra<Rational>(Z3));
    CHECK(same_structure(coopposite(k), k));
}

TEST_CASE("cop of an abelian-graded structure swaps comultiplication legs") {
    auto Z4 = share(FiniteGroup::cyclic(4));
    auto Z2 = share(FiniteGroup::cyclic(2));
    auto H = function_coalgebra<Rational>(GroupHom::from_map(Z4, Z2, {0, 1, 0, 1}));
    auto C = coopposite(H);
    const int n = H.order();
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h) {
            // (H^cop)_g = H_{g^-1}; here every element is its own inverse.
            auto swapped = permute_outputs(H.Delta(h, g), {1, 0});
            CHECK(first_difference(C.Delta(g, h), swapped) < 0);
        }
}

TEST_CASE("the identity sector is an ordinary Hopf algebra") {
    auto one = identity_sector(h_phi());
    CHECK(one.order() == 1);
    CHECK(check_hopf_g_coalgebra(one).ok());
}

TEST_CASE("H^phi integrals take value 1 on every fiber element") {
    auto H = h_phi();
    auto mu = solve_g_integral(H, Side::Right);
    auto e = solve_cointegral(H, Side::Right);
    // e = e'_1: the delta at the identity, which sits first in its fiber.
    REQUIRE(e.element.size() == 2);
    CHECK(e.element[0] == 1);
    CHECK(e.element[1] == 0);
    normalize_pair(H, mu, e);
    for (int a = 0; a < H.order(); ++a)
        for (const auto& c : mu.forms[a]) CHECK(c == 1);
    CHECK(is_g_integral(H, mu, Side::Left));
    CHECK(is_cointegral(H, e.element, Side::Left));
    CHECK(g_integral_nullity(H, Side::Right) == 1);
    CHECK(g_integral_nullity(H, Side::Left) == 1);
    CHECK(cointegral_nullity(H, Side::Right) == 1);
    CHECK(check_cosemisimple(H, mu));
    CHECK(check_cyclicity(H, mu, e).ok());
}

TEST_CASE("k[Z/2] cointegral is the sum of the group elements") {
    auto Z2 = share(FiniteGroup::cyclic(2));
    auto k = as_coalgebra(group_algebra<Rational>(Z2));
    auto e = solve_cointegral(k, Side::Right);
    CHECK(e.element[0] == e.element[1]);
    CHECK(e.element[0] != 0);
    auto t = trivial_hopf();
    CHECK(solve_cointegral(t, Side::Right).element == std::vector<Rational>{1});
    CHECK(solve_g_integral(t, Side::Right).forms[0] == std::vector<Rational>{1});
}

TEST_CASE("normalize_pair restores mu_1(e) = 1 and rejects degenerate pairs") {
    auto H = h_phi();
    auto mu = solve_g_integral(H, Side::Right);
    auto e = solve_cointegral(H, Side::Right);
    for (auto& f : mu.forms)
        for (auto& c : f) c *= 2;
    for (auto& c : e.element) c *= 2;
    normalize_pair(H, mu, e);
    CHECK(integral_on(H, mu, H.one(), e.element) == 1);
    e.element = {0, 1};
    mu.forms[H.one()] = {1, 0};
    CHECK(kind_of([&] { normalize_pair(H, mu, e); }) == "DegeneratePairing");
}

TEST_CASE("a non-integral form fails cyclicity") {
    auto H = h_phi();
    auto mu = solve_g_integral(H, Side::Right);
    auto e = solve_cointegral(H, Side::Right);
    normalize_pair(H, mu, e);
    mu.forms[H.one()][1] = 5;
    CHECK_FALSE(check_cyclicity(H, mu, e).ok());
}

TEST_CASE("crossings: identity on abelian gradings, conjugation on D8") {
    auto Z4 = share(FiniteGroup::cyclic(4));
    auto Z2 = share(FiniteGroup::cyclic(2));
    auto A = function_coalgebra<Rational>(GroupHom::from_map(Z4, Z2, {0, 1, 0, 1}));
    CHECK(check_crossing(A, identity_crossing(A)).ok());

    auto H = h_phi();
    auto mu = solve_g_integral(H, Side::Right);
    auto c = conjugation_crossing<Rational>(d8_maps().phi);
    auto r = check_crossing(H, c, &mu);
    CHECK_MESSAGE(r.ok(), r.summary());
    // Identity maps cannot reach the conjugate sectors of nonabelian D8.
    CHECK(kind_of([&] { identity_crossing(H); }) == "InvalidCrossing");
}

TEST_CASE("structure files round trip") {
    auto H = h_phi();
    Json gref = group_to_json(*H.group);
    auto back = coalgebra_from_json<Rational>(structure_to_json(H, gref));
    CHECK(same_structure(back, H));
    auto A = dualize(H);
    CHECK(same_structure(algebra_from_json<Rational>(structure_to_json(A, gref)), A));
    auto Hf = coalgebra_from_json<Complex>(structure_to_json(H, gref));
    CHECK(check_hopf_g_coalgebra(Hf).ok());
    Json bad = structure_to_json(H, gref);
    bad["dims"] = "two";
    CHECK(kind_of([&] { coalgebra_from_json<Rational>(bad); }) == "ParseError");
}
