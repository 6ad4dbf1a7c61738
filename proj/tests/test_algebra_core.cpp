#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hopf_trisect/errors.hpp"
#include "hopf_trisect/group.hpp"
#include "hopf_trisect/io.hpp"
#include "hopf_trisect/linalg.hpp"
#include "hopf_trisect/network.hpp"
#include "hopf_trisect/tensor.hpp"

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

Tensor<Rational> random_map(std::mt19937_64& rng, std::vector<Leg> legs) {
    Tensor<Rational> t(std::move(legs));
    std::uniform_int_distribution<int> d(-3, 3);
    for (auto& x : t.data()) x = d(rng);
    return t;
}

}  // namespace

TEST_CASE("built-in groups satisfy the group axioms") {
    for (const auto& G : {FiniteGroup::trivial(), FiniteGroup::cyclic(5), FiniteGroup::dihedral(4),
                          FiniteGroup::dihedral(8), FiniteGroup::symmetric(3)}) {
        const int n = G.order();
        for (int a = 0; a < n; ++a) {
            CHECK(G.mul(a, G.identity()) == a);
            CHECK(G.mul(G.inv(a), a) == G.identity());
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c) CHECK(G.mul(G.mul(a, b), c) == G.mul(a, G.mul(b, c)));
        }
    }
    CHECK(FiniteGroup::dihedral(8).order() == 16);
    CHECK(FiniteGroup::symmetric(3).order() == 6);
    CHECK_FALSE(FiniteGroup::symmetric(3).is_abelian());
}

TEST_CASE("dihedral names and element orders") {
    auto D8 = FiniteGroup::dihedral(8);
    const int r = D8.find("r"), s = D8.find("s");
    REQUIRE(r >= 0);
    REQUIRE(s >= 0);
    CHECK(D8.element_order(r) == 8);
    CHECK(D8.element_order(s) == 2);
    CHECK(D8.mul(D8.mul(s, r), s) == D8.inv(r));
    CHECK(D8.is_central(D8.power(r, 4)));
    CHECK_FALSE(D8.is_central(r));
}

TEST_CASE("malformed Cayley tables are rejected") {
    CHECK(kind_of([] { FiniteGroup::from_cayley({{0, 1}, {0, 1}}); }) == "NotAGroup");
    CHECK(kind_of([] { FiniteGroup::from_cayley({{0, 1}, {1}}); }) == "NotAGroup");
    CHECK(kind_of([] { FiniteGroup::from_cayley({}); }) == "NotAGroup");
    // Associativity fails: a quasigroup that is not a group.
    CHECK(kind_of([] { FiniteGroup::from_cayley({{0, 1, 2}, {1, 2, 0}, {2, 1, 0}}); }) == "NotAGroup");
}

TEST_CASE("homomorphism fibers partition the source") {
    auto D4 = share(FiniteGroup::dihedral(4));
    auto D8 = share(FiniteGroup::dihedral(8));
    auto phi = GroupHom::from_generators(D4, D8, {{4, 8}, {1, 4}});
    std::size_t total = 0;
    for (int a = 0; a < D8->order(); ++a) {
        auto f = phi.preimage(a);
        for (int x : f) CHECK(phi(x) == a);
        total += f.size();
    }
    CHECK(total == 8);
    CHECK(phi.kernel().size() == 2);
    CHECK(phi.image().size() == 4);
    CHECK(kind_of([&] { GroupHom::from_map(D4, D8, std::vector<int>(8, 1)); }) == "NotAHom");
}

TEST_CASE("permute then inverse permute is the identity") {
    std::mt19937_64 rng(7);
    auto t = random_map(rng, {in_leg(0, 0, 2), in_leg(0, 0, 3), out_leg(0, 0, 4)});
    auto p = permute(t, {2, 0, 1});
    CHECK(p.leg(0).dim == 4);
    auto back = permute(p, {1, 2, 0});
    CHECK(tensors_equal(back, t));
    CHECK(t.at({1, 2, 3}) == p.at({3, 1, 2}));
}

TEST_CASE("compose matches matrix multiplication") {
    std::mt19937_64 rng(11);
    const Leg a = in_leg(0, 0, 2), b = in_leg(0, 0, 3);
    auto f = random_map(rng, {a, out_leg(0, 0, 3)});
    auto g = random_map(rng, {b, out_leg(0, 0, 2)});
    auto gf = compose(f, g);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t k = 0; k < 2; ++k) {
            Rational s = 0;
            for (std::size_t j = 0; j < 3; ++j) s += f.at({i, j}) * g.at({j, k});
            CHECK(gf.at({i, k}) == s);
        }
    CHECK(tensors_equal(compose(identity_map<Rational>(a), f), f));
}

TEST_CASE("otimes of identities is the identity and swap squares to it") {
    const Leg a = in_leg(0, 0, 2), b = in_leg(0, 0, 3);
    auto ida = identity_map<Rational>(a), idb = identity_map<Rational>(b);
    auto both = otimes(ida, idb);
    CHECK(both.num_in() == 2);
    auto sw = swap_map<Rational>(a, b);
    CHECK(tensors_equal(compose(sw, swap_map<Rational>(b, a)), both));
}

TEST_CASE("inverse_map inverts and rejects singular maps") {
    Tensor<Rational> f(std::vector<Leg>{in_leg(0, 0, 2), out_leg(0, 0, 2)});
    f.at({0, 0}) = 2;
    f.at({0, 1}) = 1;
    f.at({1, 1}) = 3;
    auto fi = inverse_map(f);
    CHECK(tensors_equal(compose(f, fi), identity_map<Rational>(in_leg(0, 0, 2))));
    // Rows (1, 1/2) and (4, 2) are proportional.
    f.at({0, 0}) = 1;
    f.at({0, 1}) = Rational(1, 2);
    f.at({1, 0}) = 4;
    f.at({1, 1}) = 2;
    CHECK(kind_of([&] { inverse_map(f); }) == "SingularMap");
}

TEST_CASE("nullspace vectors are annihilated and rank-nullity holds") {
    Matrix<Rational> a = {{1, 2, 3, 4}, {2, 4, 6, 8}, {0, 1, 1, 0}};
    auto ns = nullspace(a, 4);
    CHECK(ns.size() == 2);
    CHECK(matrix_rank(a, 4) == 2);
    for (const auto& v : ns)
        for (const auto& row : a) {
            Rational s = 0;
            for (std::size_t j = 0; j < 4; ++j) s += row[j] * v[j];
            CHECK(s == 0);
        }
    Matrix<Complex> z = {{Complex(1, 1), Complex(2, 2)}};
    CHECK(nullspace(z, 2).size() == 1);
}

TEST_CASE("contraction agrees across every merge order") {
    std::mt19937_64 rng(3);
    TensorNetwork<Rational> net;
    auto a = net.add(random_map(rng, {out_leg(0, 0, 2), out_leg(0, 0, 3)}));
    auto b = net.add(random_map(rng, {in_leg(0, 0, 2), out_leg(0, 0, 4)}));
    auto c = net.add(random_map(rng, {in_leg(0, 0, 3), in_leg(0, 0, 4), out_leg(0, 0, 2)}));
    auto d = net.add(random_map(rng, {in_leg(0, 0, 2)}));
    net.link({a, 0}, {b, 0});
    net.link({a, 1}, {c, 0});
    net.link({b, 1}, {c, 1});
    net.link({c, 2}, {d, 0});
    const auto reference = contract(net);
    const auto plans = all_plans(4);
    CHECK(plans.size() == 18);  // 4!·3!/2^3
    for (const auto& p : plans) CHECK(tensors_equal(contract(net, &p), reference));
    CHECK(plan_cost(net.shape(), exhaustive_plan(net.shape())) <= plan_cost(net.shape(), greedy_plan(net.shape())));
}

TEST_CASE("open legs survive contraction in the listed order") {
    std::mt19937_64 rng(5);
    TensorNetwork<Rational> net;
    auto a = net.add(random_map(rng, {in_leg(0, 0, 2), out_leg(0, 0, 3)}));
    auto b = net.add(random_map(rng, {in_leg(0, 0, 3), out_leg(0, 0, 4)}));
    net.link({a, 1}, {b, 0});
    net.set_open({{b, 1}, {a, 0}});
    auto t = contract(net);
    REQUIRE(t.rank() == 2);
    CHECK(t.leg(0).dim == 4);
    CHECK(t.leg(1).dim == 2);
    auto direct = compose(net.nodes()[0], net.nodes()[1]);
    CHECK(t.at({3, 1}) == direct.at({1, 3}));
}

TEST_CASE("miswired networks are rejected") {
    TensorNetwork<Rational> net;
    auto a = net.add(Tensor<Rational>(std::vector<Leg>{out_leg(0, 0, 2)}));
    auto b = net.add(Tensor<Rational>(std::vector<Leg>{in_leg(0, 0, 3)}));
    net.link({a, 0}, {b, 0});
    CHECK(kind_of([&] { net.validate(); }) == "DimensionMismatch");
}

TEST_CASE("group and homomorphism JSON round trip") {
    auto G = share(FiniteGroup::dihedral(4));
    auto back = group_from_json(group_to_json(*G));
    CHECK(back == *G);
    CHECK(back.names() == G->names());
    auto f = GroupHom::from_generators(G, G, {{4, 4}, {1, 3}});
    Json j = hom_to_json(f);
    CHECK(hom_from_json(j) == f);
    CHECK(kind_of([] { group_from_json(Json::parse(R"({"order": 2})")); }) == "ParseError");
}
