#include "hopf_trisect/examples.hpp"

#include <array>

#include <cmath>
#include <numbers>

#include "hopf_trisect/errors.hpp"

namespace ht {

namespace {

// Position of each source element inside its sector basis.
std::vector<std::size_t> sector_positions(const GroupHom& phi) {
    std::vector<std::size_t> pos(phi.source()->order());
    for (int a = 0; a < phi.target()->order(); ++a) {
        auto pre = phi.preimage(a);
        for (std::size_t i = 0; i < pre.size(); ++i) pos[pre[i]] = i;
    }
    return pos;
}

// exp(2 pi i k / n).
template <class K>
K root_power(long k, long n) {
    const long r = ((k % n) + n) % n;
    if constexpr (Field<K>::exact) {
        if (r == 0) return Field<K>::one();
        if (2 * r == n) return Field<K>::from_int(-1);
        fail("RequiresFloatBackend", "a primitive " + std::to_string(n) + "th root of unity is not rational");
    } else {
        return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(n));
    }
}

}  // namespace

template <class K>
HopfGCoalgebra<K> function_coalgebra(const GroupHom& phi, std::string name) {
    const FiniteGroup& S = *phi.source();
    const int n = phi.target()->order();
    std::vector<std::size_t> dims(n);
    for (int a = 0; a < n; ++a) dims[a] = phi.preimage(a).size();
    auto H = HopfGCoalgebra<K>::blank(phi.target(), dims, std::move(name));
    const auto pos = sector_positions(phi);
    const K one = Field<K>::one();
    for (int x = 0; x < S.order(); ++x) {
        const int a = phi(x);
        const std::size_t i = pos[x];
        H.mult[a].at({i, i, i}) = one;
        H.unit[a][i] = one;
        H.antipode[a].at({i, pos[S.inv(x)]}) = one;
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            auto& D = H.Delta(a, b);
            for (int y : phi.preimage(a))
                for (int z : phi.preimage(b)) D.at({pos[S.mul(y, z)], pos[y], pos[z]}) = one;
        }
    H.counit[pos[S.identity()]] = one;
    return H;
}

template <class K>
HopfGAlgebra<K> group_algebra(const GroupPtr& G, std::string name) {
    const int n = G->order();
    auto A = HopfGAlgebra<K>::blank(share(FiniteGroup::trivial()), {static_cast<std::size_t>(n)}, std::move(name));
    const K one = Field<K>::one();
    for (int x = 0; x < n; ++x) {
        const auto ux = static_cast<std::size_t>(x);
        A.comult[0].at({ux, ux, ux}) = one;
        A.counit[0][ux] = one;
        A.antipode[0].at({ux, static_cast<std::size_t>(G->inv(x))}) = one;
        for (int y = 0; y < n; ++y) A.mult[0].at({ux, static_cast<std::size_t>(y), static_cast<std::size_t>(G->mul(x, y))}) = one;
    }
    A.unit[static_cast<std::size_t>(G->identity())] = one;
    return A;
}

template <class K>
std::vector<Tensor<K>> kronecker_pairing(const GroupHom& phi, const GroupHom& phi_target, const GroupHom& psi) {
    for (int x = 0; x < phi.source()->order(); ++x)
        if (phi(x) != phi_target(psi(x)))
            fail("CompatibilityFailure", "phi differs from phi' ∘ psi at element " + phi.source()->name(x));
    const auto pos = sector_positions(phi_target);
    std::vector<Tensor<K>> forms;
    for (int a = 0; a < phi.target()->order(); ++a) {
        auto pre = phi.preimage(a);
        const std::size_t dt = phi_target.preimage(a).size();
        Tensor<K> f(std::vector<Leg>{in_leg(0, a, pre.size()), in_leg(0, a, dt)});
        for (std::size_t i = 0; i < pre.size(); ++i) f.at({i, pos[psi(pre[i])]}) = Field<K>::one();
        forms.push_back(std::move(f));
    }
    return forms;
}

template <class K>
Tensor<K> fourier_pairing(const GroupHom& phi_kappa, const GroupHom& phi_beta, const std::vector<int>& rho) {
    const FiniteGroup& Hk = *phi_kappa.source();
    const FiniteGroup& Hb = *phi_beta.source();
    const auto ker_k = phi_kappa.kernel();
    const auto ker_b = phi_beta.kernel();
    const int n = static_cast<int>(ker_k.size());
    int gen = -1;
    for (int x : ker_k)
        if (Hk.element_order(x) == n) {
            gen = x;
            break;
        }
    if (gen < 0) fail("NotCyclic", "the kernel of phi_kappa has no element of order " + std::to_string(n));
    if (static_cast<int>(rho.size()) != n) fail("CompatibilityFailure", "rho needs one image per kernel element");
    auto kernel_index = [](const std::vector<int>& ker, int x) -> long {
        for (std::size_t i = 0; i < ker.size(); ++i)
            if (ker[i] == x) return static_cast<long>(i);
        return -1;
    };
    // exponent[i] = m with ker_k[i] = a^m; image[p] = rho(a^p).
    std::vector<long> exponent(n);
    std::vector<int> image(n);
    for (int p = 0; p < n; ++p) {
        const int x = Hk.power(gen, p);
        exponent[kernel_index(ker_k, x)] = p;
        const int y = rho[kernel_index(ker_k, x)];
        if (kernel_index(ker_b, y) < 0) fail("CompatibilityFailure", "rho leaves the kernel of phi_beta");
        image[p] = y;
    }
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q)
            if (image[(p + q) % n] != Hb.mul(image[p], image[q]))
                fail("CompatibilityFailure", "rho is not a homomorphism");
    const int one_k = phi_kappa.target()->identity();
    Tensor<K> F(std::vector<Leg>{in_leg(0, one_k, ker_k.size()), in_leg(0, one_k, ker_b.size())});
    const K scale = Field<K>::from_ratio(1, n);
    for (std::size_t i = 0; i < ker_k.size(); ++i)
        for (std::size_t j = 0; j < ker_b.size(); ++j) {
            K s = Field<K>::zero();
            for (int p = 0; p < n; ++p)
                if (image[p] == ker_b[j]) s += root_power<K>(exponent[i] * p, n);
            F.at({i, j}) = s * scale;
        }
    return F;
}

void check_example_hypothesis(const TripletMaps& m) {
    for (const GroupHom* f : {&m.phi_beta, &m.phi_kappa}) {
        const FiniteGroup& H = *f->source();
        for (int x : f->kernel()) {
            if (H.element_order(x) > 2)
                fail("HypothesisViolated", "kernel element " + H.name(x) + " has order " +
                                               std::to_string(H.element_order(x)));
            if (!H.is_central(x)) fail("HypothesisViolated", "kernel element " + H.name(x) + " is not central");
        }
    }
}

template <class K>
HopfGTriplet<K> example_triplet(const TripletMaps& m, bool check_hypothesis) {
    if (check_hypothesis) check_example_hypothesis(m);
    HopfGTriplet<K> t;
    t.alpha = dualize(function_coalgebra<K>(m.phi, "functions(phi)"));
    t.beta = function_coalgebra<K>(m.phi_beta, "functions(phi_beta)");
    t.kappa = function_coalgebra<K>(m.phi_kappa, "functions(phi_kappa)");
    t.form_kb = fourier_pairing<K>(m.phi_kappa, m.phi_beta, m.rho);
    t.form_ab = kronecker_pairing<K>(m.phi, m.phi_beta, m.psi);
    t.form_ak = kronecker_pairing<K>(m.phi, m.phi_kappa, m.psi_kappa);
    return t;
}

template <class K>
IntegralBundle<K> example_integrals(const TripletMaps& m) {
    IntegralBundle<K> e;
    for (int a = 0; a < m.phi.target()->order(); ++a)
        e.alpha.emplace_back(m.phi.preimage(a).size(), Field<K>::one());
    auto unit_at_identity = [](const GroupHom& f) {
        auto ker = f.kernel();
        std::vector<K> v(ker.size(), Field<K>::zero());
        for (std::size_t i = 0; i < ker.size(); ++i)
            if (ker[i] == f.source()->identity()) v[i] = Field<K>::one();
        return v;
    };
    e.beta = unit_at_identity(m.phi_beta);
    e.kappa = unit_at_identity(m.phi_kappa);
    return e;
}

template <class K>
Crossing<K> conjugation_crossing(const GroupHom& phi) {
    const FiniteGroup& S = *phi.source();
    const FiniteGroup& G = *phi.target();
    const int n = G.order();
    const auto pos = sector_positions(phi);
    Crossing<K> c;
    c.defined.assign(n, 0);
    for (int h = 0; h < n; ++h) {
        auto lifts = phi.preimage(h);
        if (!lifts.empty()) c.defined[h] = 1;
        for (int g = 0; g < n; ++g) {
            const int hg = G.conj(h, g);
            Tensor<K> m(std::vector<Leg>{in_leg(0, g, phi.preimage(g).size()), out_leg(0, hg, phi.preimage(hg).size())});
            if (!lifts.empty())
                for (int x : phi.preimage(g)) m.at({pos[x], pos[S.conj(lifts[0], x)]}) = Field<K>::one();
            c.maps.push_back(std::move(m));
        }
    }
    return c;
}

TripletMaps d8_maps() {
    auto D4 = share(FiniteGroup::dihedral(4));
    auto D8 = share(FiniteGroup::dihedral(8));
    // Index a*n + b holds s^a r^b, so s = n and r = 1.
    const int s4 = 4, r4 = 1, s8 = 8;
    TripletMaps m;
    m.phi = GroupHom::from_generators(D4, D8, {{s4, s8}, {r4, 4}});
    m.phi_beta = m.phi;
    m.phi_kappa = GroupHom::from_generators(D4, D8, {{s4, s8}, {r4, 2}});
    m.psi = GroupHom::identity(D4);
    m.psi_kappa = GroupHom::from_generators(D4, D4, {{s4, s4}, {r4, 2}});
    m.rho = {D4->identity()};
    return m;
}

template <class K>
TripletFixture<K> d8_fixture() {
    const auto m = d8_maps();
    return {"d8", example_triplet<K>(m), example_integrals<K>(m)};
}

template <class K>
TripletFixture<K> z2_fixture() {
    auto Z2 = share(FiniteGroup::cyclic(2));
    auto H = group_algebra<K>(Z2, "k[Z/2]");
    Tensor<K> R(std::vector<Leg>{out_leg(H.space, 0, 2), out_leg(H.space, 0, 2)});
    R.at({0, 0}) = Field<K>::one();
    TripletFixture<K> f;
    f.name = "z2";
    f.triplet = quasitriangular_triplet(H, make_r_matrix(H, R));
    const K half = Field<K>::from_ratio(1, 2);
    f.integrals.alpha = {{half, half}};
    f.integrals.beta = {Field<K>::from_int(2), Field<K>::zero()};
    f.integrals.kappa = f.integrals.beta;
    return f;
}

// Quasitriangular k[G'] with integrals solved, not hand-set. Entries of R are
// given as (x, y, 2 R_xy). Over Z/2 the choice R = (1⊗1 + 1⊗t + t⊗1 - t⊗t)/2
// is the nontrivial one; over S3 only R = 1⊗1 occurs here.
template <class K>
TripletFixture<K> quasitriangular_fixture(const std::string& name, const GroupPtr& Gp, const std::vector<std::array<int, 3>>& r) {
    auto H = group_algebra<K>(Gp, "k[" + name + "]");
    const auto n = static_cast<std::size_t>(Gp->order());
    Tensor<K> R(std::vector<Leg>{out_leg(H.space, 0, n), out_leg(H.space, 0, n)});
    for (auto [x, y, twice] : r) R.at({static_cast<std::size_t>(x), static_cast<std::size_t>(y)}) = Field<K>::from_ratio(twice, 2);
    TripletFixture<K> f;
    f.name = name;
    f.triplet = quasitriangular_triplet(H, make_r_matrix(H, R));
    f.integrals = solve_integral_bundle(f.triplet);
    return f;
}

template <class K>
HopfGDoublet<K> standard_doublet(const GroupPtr& Gp) {
    const auto A = group_algebra<K>(Gp, "k[G']");
    HopfGDoublet<K> d;
    d.alg = as_algebra(dualize(A));
    d.co = as_coalgebra(A);
    const auto n = static_cast<std::size_t>(Gp->order());
    Tensor<K> f(std::vector<Leg>{in_leg(0, 0, n), in_leg(0, 0, n)});
    for (int x = 0; x < Gp->order(); ++x) f.at({static_cast<std::size_t>(x), static_cast<std::size_t>(Gp->inv(x))}) = Field<K>::one();
    d.forms = {f};
    return d;
}

template <class K>
HopfGDoublet<K> function_doublet(const GroupHom& phi, const GroupHom& phi_target, const GroupHom& psi) {
    return {dualize(function_coalgebra<K>(phi, "functions(phi)")),
            function_coalgebra<K>(phi_target, "functions(phi_target)"), kronecker_pairing<K>(phi, phi_target, psi)};
}

template <class K>
TripletFixture<K> builtin_fixture(const std::string& name) {
    if (name == "d8") return d8_fixture<K>();
    if (name == "z2") return z2_fixture<K>();
    if (name == "z2_twisted")
        return quasitriangular_fixture<K>(name, share(FiniteGroup::cyclic(2)), {{0, 0, 1}, {0, 1, 1}, {1, 0, 1}, {1, 1, -1}});
    if (name == "s3") return quasitriangular_fixture<K>(name, share(FiniteGroup::symmetric(3)), {{0, 0, 2}});
    fail("UnknownName", "no built-in triplet named '" + name + "'");
}

#define HT_INSTANTIATE(K)                                                                                    \
    template HopfGCoalgebra<K> function_coalgebra(const GroupHom&, std::string);                             \
    template HopfGAlgebra<K> group_algebra(const GroupPtr&, std::string);                                    \
    template std::vector<Tensor<K>> kronecker_pairing(const GroupHom&, const GroupHom&, const GroupHom&);    \
    template Tensor<K> fourier_pairing(const GroupHom&, const GroupHom&, const std::vector<int>&);           \
    template HopfGTriplet<K> example_triplet(const TripletMaps&, bool);                                      \
    template IntegralBundle<K> example_integrals(const TripletMaps&);                                        \
    template Crossing<K> conjugation_crossing(const GroupHom&);                                              \
    template TripletFixture<K> d8_fixture();                                                                 \
    template TripletFixture<K> z2_fixture();                                                                 \
    template TripletFixture<K> builtin_fixture(const std::string&);                                          \
    template HopfGDoublet<K> standard_doublet(const GroupPtr&);                                              \
    template HopfGDoublet<K> function_doublet(const GroupHom&, const GroupHom&, const GroupHom&);

HT_INSTANTIATE(Rational)
HT_INSTANTIATE(Complex)

#undef HT_INSTANTIATE

}  // namespace ht
