#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "hopf_trisect/errors.hpp"
#include "hopf_trisect/examples.hpp"
#include "hopf_trisect/invariant.hpp"
#include "hopf_trisect/properties.hpp"

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

// Z as a complex number for a given real cube root of the stabilizer.
Complex evaluate(const ZetaPower<Rational>& z) {
    const double zeta = std::cbrt(z.cube.get_d());
    return Complex(z.coefficient.get_d() / std::pow(zeta, z.power), 0.0);
}

std::size_t hom_count(int p, const FiniteGroup& G) {
    std::size_t n = 0;
    for (int x = 0; x < G.order(); ++x) n += G.power(x, p) == G.identity();
    return n;
}

}  // namespace

TEST_CASE("the k[Z/2] stabilizer bracket is dim(H_1)^3 = 8") {
    auto f = builtin_fixture<Rational>("z2");
    CHECK(trisection_bracket(builtin_diagram("t_st"), {0, 0, 0}, f.triplet, f.integrals) == 8);
    TrisectionInvariant<Rational> inv(f.triplet, f.integrals);
    CHECK(inv.stabilizer() == 8);
    CHECK(inv.zeta() == 2);
    CHECK(inv.root_choice() == "rational");
}

TEST_CASE("the genus-0 diagram has an empty network and bracket 1") {
    auto f = d8_fixture<Rational>();
    auto a = assign_bracket_network(builtin_diagram("s4_genus0"), {}, f.triplet, f.integrals);
    CHECK(a.network.size() == 0);
    CHECK(contract_assignment(a) == 1);
}

TEST_CASE("ZetaPower arithmetic keeps powers apart") {
    ZetaPower<Rational> a{Rational(2), 1, Rational(2)};
    ZetaPower<Rational> b{Rational(3), 1, Rational(2)};
    a += b;
    CHECK(a.coefficient == 5);
    CHECK(a.str() == "5*zeta^-1 (zeta^3 = 2)");
    ZetaPower<Rational> c{Rational(1), 2, Rational(2)};
    CHECK(kind_of([&] { a += c; }) == "NoRoot");
    CHECK(kind_of([&] { a.scalar(); }) == "NoRoot");
    ZetaPower<Rational> zero{Rational(0), 2, Rational(2)};
    CHECK(zero.equals(ZetaPower<Rational>{}));
    CHECK(zero.is_scalar());
    ZetaPower<Rational> minus{Rational(-5), 1, Rational(2)};
    a += minus;
    CHECK(a.power == 0);
    CHECK(a.scalar() == 0);
}

TEST_CASE("rational cube roots") {
    CHECK(rational_cube_root(Rational(8)) == Rational(2));
    CHECK(rational_cube_root(Rational(-27, 64)) == Rational(-3, 4));
    CHECK(rational_cube_root(Rational(0)) == Rational(0));
    CHECK_FALSE(rational_cube_root(Rational(2)).has_value());
    CHECK_FALSE(rational_cube_root(Rational(1, 216 * 2)).has_value());
}

TEST_CASE("D8 keeps zeta symbolic on the exact backend") {
    auto f = d8_fixture<Rational>();
    TrisectionInvariant<Rational> inv(f.triplet, f.integrals);
    CHECK(inv.stabilizer() == 2);
    CHECK_FALSE(inv.zeta_if_any().has_value());
    CHECK(kind_of([&] { inv.zeta(); }) == "NoRoot");
    CHECK(inv.root_choice() == "symbolic (zeta^3 = 2)");
    auto sum = inv.bundle_sum(builtin_diagram("s1_x_s3"));
    CHECK(sum.coefficient == 8);
    CHECK(sum.power == 1);
}

TEST_CASE("float and exact backends agree") {
    for (const char* name : {"z2", "d8", "z2_twisted", "s3"}) {
        CAPTURE(name);
        auto fe = builtin_fixture<Rational>(name);
        auto ff = builtin_fixture<Complex>(name);
        TrisectionInvariant<Rational> ie(fe.triplet, fe.integrals);
        TrisectionInvariant<Complex> ifl(ff.triplet, ff.integrals, RootBranch::Real);
        for (const char* dn : {"s1_x_s3", "cp2", "genus2"}) {
            auto d = builtin_diagram(dn);
            auto cols = enumerate_colorings(d, ie.group());
            for (std::size_t k = 0; k < cols.size(); k += 3) {
                auto ze = ie.normalized(d, cols[k]).value;
                auto zf = ifl.normalized(d, cols[k]).value;
                CHECK(zf.power == 0);
                CHECK(std::abs(zf.coefficient - evaluate(ze)) < 1e-9);
            }
        }
    }
}

TEST_CASE("the principal branch reports its choice") {
    auto f = d8_fixture<Complex>();
    TrisectionInvariant<Complex> inv(f.triplet, f.integrals);
    CHECK(inv.root_choice() == "principal");
    CHECK(std::abs(inv.zeta() - Complex(std::cbrt(2.0), 0.0)) < 1e-12);
}

TEST_CASE("Z(T_st) = 1 and stabilizing preserves Z") {
    for (const char* name : {"z2", "d8", "s3"}) {
        CAPTURE(name);
        auto f = builtin_fixture<Rational>(name);
        TrisectionInvariant<Rational> inv(f.triplet, f.integrals);
        const auto& G = inv.group();
        CHECK(inv.normalized(builtin_diagram("t_st"), {0, 0, 0}).value.equals({Rational(1), 0, inv.stabilizer()}));
        auto d = builtin_diagram("genus2");
        auto sum = connected_sum(d, builtin_diagram("t_st"));
        for (const auto& c : enumerate_colorings(d, G)) {
            Coloring cc = c;
            cc.insert(cc.end(), 3, G.identity());
            CHECK(inv.normalized(sum, cc).value.equals(inv.normalized(d, c).value));
        }
    }
}

TEST_CASE("brackets multiply under connected sum") {
    auto f = d8_fixture<Rational>();
    TrisectionInvariant<Rational> inv(f.triplet, f.integrals);
    const auto& G = inv.group();
    auto a = builtin_diagram("s1_x_s3"), b = builtin_diagram("cp2");
    auto ab = connected_sum(a, b);
    for (const auto& ca : enumerate_colorings(a, G))
        for (const auto& cb : enumerate_colorings(b, G)) {
            Coloring c = ca;
            c.insert(c.end(), cb.begin(), cb.end());
            CHECK(inv.bracket(ab, c) == inv.bracket(a, ca) * inv.bracket(b, cb));
        }
}

TEST_CASE("bundles: images must satisfy the relators") {
    auto f = d8_fixture<Rational>();
    TrisectionInvariant<Rational> inv(f.triplet, f.integrals);
    const auto& G = inv.group();
    auto d = builtin_diagram("s1_x_s3");
    CHECK(inv.bundle(d, {G.find("s")}).bracket == 2);
    CHECK(kind_of([&] { inv.bundle(d, {}); }) == "NotAMonodromy");
    CHECK(kind_of([&] { inv.bundle(d, {99}); }) == "NotAMonodromy");
    CHECK(kind_of([&] { inv.bracket(heegaard_lens(1, 1), {G.find("r")}); }) == "ColoringInvalid");
}

TEST_CASE("bundle tables follow coloring order and sum to the bundle sum") {
    auto f = d8_fixture<Rational>();
    TrisectionInvariant<Rational> inv(f.triplet, f.integrals);
    auto d = builtin_diagram("genus2");
    auto rows = inv.bundle_table(d);
    auto cols = enumerate_colorings(d, inv.group());
    REQUIRE(rows.size() == cols.size());
    ZetaPower<Rational> total;
    for (std::size_t k = 0; k < rows.size(); ++k) {
        CHECK(rows[k].coloring == cols[k]);
        total += rows[k].result.value;
    }
    CHECK(total.equals(inv.bundle_sum(d)));
}

TEST_CASE("zero integrals give ZeroStabilizer") {
    auto f = builtin_fixture<Rational>("z2");
    auto e = f.integrals;
    for (auto& x : e.beta) x = 0;
    TrisectionInvariant<Rational> inv(f.triplet, e);
    CHECK(inv.stabilizer() == 0);
    CHECK(kind_of([&] { inv.normalized(builtin_diagram("s1_x_s3"), {0}); }) == "ZeroStabilizer");
}

TEST_CASE("a short random walk preserves Z") {
    auto f = builtin_fixture<Rational>("z2_twisted");
    TrisectionInvariant<Rational> inv(f.triplet, f.integrals);
    std::vector<MoveKind> kinds(std::begin(kAllMoveKinds), std::end(kAllMoveKinds));
    ColoredDiagram start{builtin_diagram("genus2"), {0, 0}};  // G = 1
    auto run = verify_move_invariance(inv, start, kinds, 36, 99);
    CHECK(run.ok);
    CHECK(run.applied > 20);
}

TEST_CASE("a broken triplet is caught with a move trace") {
    auto f = d8_fixture<Rational>();
    // Sector r^4: the entry is not mirrored by the antipode, so the lemma equations fail.
    f.triplet.form_ab[4].data()[0] += 1;
    TrisectionInvariant<Rational> inv(f.triplet, f.integrals);
    std::vector<MoveKind> kinds(std::begin(kAllMoveKinds), std::end(kAllMoveKinds));
    const auto& G = inv.group();
    ColoredDiagram start{builtin_diagram("genus2"), {G.identity(), G.find("r4")}};
    auto run = verify_move_invariance(inv, start, kinds, 200, 5);
    CHECK_FALSE(run.ok);
    CHECK_FALSE(run.trace.empty());
    CHECK_FALSE(run.offending.equals(run.reference));
}

TEST_CASE("Heegaard brackets: S3 is 1, lens spaces count homomorphisms") {
    for (int n : {2, 3, 5}) {
        auto Gp = share(FiniteGroup::cyclic(n));
        auto D = standard_doublet<Rational>(Gp);
        auto e = solve_doublet_integrals(D);
        CHECK(heegaard_kuperberg(builtin_diagram("heegaard_s3"), D, e) == 1);
        CHECK(heegaard_kuperberg(builtin_diagram("heegaard_s1xs2"), D, e) == n);
        for (int p = 1; p <= 5; ++p)
            CHECK(heegaard_kuperberg(heegaard_lens(p, 1), D, e) == static_cast<long>(hom_count(p, *Gp)));
    }
    auto S3 = share(FiniteGroup::symmetric(3));
    auto D = standard_doublet<Rational>(S3);
    auto e = solve_doublet_integrals(D);
    CHECK(heegaard_kuperberg(heegaard_lens(2, 1), D, e) == 4);
    CHECK(heegaard_kuperberg(heegaard_lens(3, 1), D, e) == 3);
}

TEST_CASE("the Virelizier bracket at the trivial group equals the Kuperberg bracket") {
    auto D = standard_doublet<Rational>(share(FiniteGroup::symmetric(3)));
    auto e = solve_doublet_integrals(D);
    for (const auto& name : builtin_diagram_names()) {
        if (name.rfind("heegaard_", 0) != 0 || name.find('(') != std::string::npos) continue;
        auto h = builtin_diagram(name);
        CHECK(heegaard_virelizier(h, Coloring(h.family_size(Family::Alpha), 0), D, e) == heegaard_kuperberg(h, D, e));
    }
}

TEST_CASE("Heegaard brackets colored in D8 are conjugation invariant") {
    const auto m = d8_maps();
    auto D = function_doublet<Rational>(m.phi, m.phi_beta, m.psi);
    auto e = solve_doublet_integrals(D);
    auto h = builtin_diagram("heegaard_s1xs2");
    const auto& G = *D.alg.group;
    for (const auto& c : enumerate_colorings(h, G))
        for (int b : m.phi.image())
            CHECK(heegaard_virelizier(h, c, D, e) == heegaard_virelizier(h, conjugate_coloring(c, b, G), D, e));
}
