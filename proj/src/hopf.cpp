#include "hopf_trisect/hopf.hpp"

#include <functional>

#include "hopf_trisect/errors.hpp"
#include "hopf_trisect/linalg.hpp"

namespace ht {

std::string side_name(Side s) { return s == Side::Left ? "left" : "right"; }

namespace {

template <class K>
Tensor<K> regrade(Tensor<K> t, int from_space, int to_space, const std::function<int(int)>& f) {
    for (std::size_t k = 0; k < t.rank(); ++k) {
        Leg l = t.leg(k);
        if (l.space == from_space) {
            l.space = to_space;
            l.grade = f(l.grade);
        }
        t.set_leg(k, l);
    }
    return t;
}

template <class K>
Tensor<K> unlabelled(Tensor<K> t) {
    for (std::size_t k = 0; k < t.rank(); ++k) {
        Leg l = t.leg(k);
        l.space = 0;
        t.set_leg(k, l);
    }
    return t;
}

}  // namespace

template <class K>
Tensor<K> as_vector(const std::vector<K>& v, const Leg& leg) {
    Leg o = leg;
    o.dir = Dir::Out;
    Tensor<K> t({o});
    for (std::size_t k = 0; k < v.size(); ++k) t[k] = v[k];
    return t;
}

template <class K>
Tensor<K> as_form(const std::vector<K>& v, const Leg& leg) {
    Leg i = leg;
    i.dir = Dir::In;
    Tensor<K> t({i});
    for (std::size_t k = 0; k < v.size(); ++k) t[k] = v[k];
    return t;
}

template <class K>
HopfGCoalgebra<K> HopfGCoalgebra<K>::blank(GroupPtr group, std::vector<std::size_t> dims, std::string name) {
    HopfGCoalgebra H;
    H.group = std::move(group);
    H.space = new_space_id();
    H.name = std::move(name);
    H.dims = std::move(dims);
    const int n = H.order();
    if (static_cast<int>(H.dims.size()) != n) fail("DimensionMismatch", "one dimension per group element required");
    const FiniteGroup& G = *H.group;
    auto I = [&](int g) { return in_leg(H.space, g, H.dims[g]); };
    auto O = [&](int g) { return out_leg(H.space, g, H.dims[g]); };
    for (int g = 0; g < n; ++g) {
        H.mult.emplace_back(std::vector<Leg>{I(g), I(g), O(g)});
        H.unit.emplace_back(std::vector<Leg>{O(g)});
        H.antipode.emplace_back(std::vector<Leg>{I(g), O(G.inv(g))});
    }
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h) H.comult.emplace_back(std::vector<Leg>{I(G.mul(g, h)), O(g), O(h)});
    H.counit = Tensor<K>(std::vector<Leg>{I(G.identity())});
    return H;
}

template <class K>
HopfGAlgebra<K> HopfGAlgebra<K>::blank(GroupPtr group, std::vector<std::size_t> dims, std::string name) {
    HopfGAlgebra A;
    A.group = std::move(group);
    A.space = new_space_id();
    A.name = std::move(name);
    A.dims = std::move(dims);
    const int n = A.order();
    if (static_cast<int>(A.dims.size()) != n) fail("DimensionMismatch", "one dimension per group element required");
    const FiniteGroup& G = *A.group;
    auto I = [&](int g) { return in_leg(A.space, g, A.dims[g]); };
    auto O = [&](int g) { return out_leg(A.space, g, A.dims[g]); };
    for (int g = 0; g < n; ++g) {
        A.comult.emplace_back(std::vector<Leg>{I(g), O(g), O(g)});
        A.counit.emplace_back(std::vector<Leg>{I(g)});
        A.antipode.emplace_back(std::vector<Leg>{I(g), O(G.inv(g))});
    }
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h) A.mult.emplace_back(std::vector<Leg>{I(g), I(h), O(G.mul(g, h))});
    A.unit = Tensor<K>(std::vector<Leg>{O(G.identity())});
    return A;
}

template <class K>
Report check_hopf_g_coalgebra(const HopfGCoalgebra<K>& H, double tol) {
    Report r;
    const FiniteGroup& G = *H.group;
    const int n = H.order(), e = H.one();
    for (int g = 0; g < n; ++g) {
        if (H.dims[g] == 0) continue;
        const auto id = H.id(g);
        expect_equal(r, "associativity", {g}, compose(otimes(H.M(g), id), H.M(g)),
                     compose(otimes(id, H.M(g)), H.M(g)), tol);
        expect_equal(r, "unit", {g}, compose(otimes(H.i(g), id), H.M(g)), id, tol);
        expect_equal(r, "unit", {g}, compose(otimes(id, H.i(g)), H.M(g)), id, tol);
    }
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h)
            for (int k = 0; k < n; ++k) {
                auto lhs = compose(H.Delta(G.mul(g, h), k), otimes(H.Delta(g, h), H.id(k)));
                auto rhs = compose(H.Delta(g, G.mul(h, k)), otimes(H.id(g), H.Delta(h, k)));
                expect_equal(r, "coassociativity", {g, h, k}, lhs, rhs, tol);
            }
    for (int g = 0; g < n; ++g) {
        expect_equal(r, "counit", {g}, compose(H.Delta(e, g), otimes(H.eps(), H.id(g))), H.id(g), tol);
        expect_equal(r, "counit", {g}, compose(H.Delta(g, e), otimes(H.id(g), H.eps())), H.id(g), tol);
    }
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h) {
            const int gh = G.mul(g, h);
            const auto& D = H.Delta(g, h);
            auto middle = otimes(otimes(H.id(g), swap_map<K>(H.leg(h), H.leg(g))), H.id(h));
            auto rhs = compose(otimes(D, D), compose(middle, otimes(H.M(g), H.M(h))));
            expect_equal(r, "comultiplication multiplicative", {g, h}, compose(H.M(gh), D), rhs, tol);
            expect_equal(r, "comultiplication unital", {g, h}, compose(H.i(gh), D), otimes(H.i(g), H.i(h)), tol);
        }
    expect_equal(r, "counit multiplicative", {e}, compose(H.M(e), H.eps()), otimes(H.eps(), H.eps()), tol);
    expect_equal(r, "counit unital", {e}, compose(H.i(e), H.eps()), Tensor<K>::scalar(Field<K>::one()), tol);
    for (int g = 0; g < n; ++g) {
        const int gi = G.inv(g);
        const auto target = otimes(H.eps(), H.i(g));
        auto left = compose(H.Delta(gi, g), compose(otimes(H.S(gi), H.id(g)), H.M(g)));
        auto right = compose(H.Delta(g, gi), compose(otimes(H.id(g), H.S(gi)), H.M(g)));
        expect_equal(r, "antipode", {g}, left, target, tol);
        expect_equal(r, "antipode", {g}, right, target, tol);
    }
    return r;
}

template <class K>
bool check_involutory(const HopfGCoalgebra<K>& H, double tol) {
    const FiniteGroup& G = *H.group;
    for (int g = 0; g < H.order(); ++g) {
        if (H.dims[g] == 0) continue;
        if (!tensors_equal(compose(H.S(g), H.S(G.inv(g))), H.id(g), tol)) return false;
    }
    return true;
}

template <class K>
Report antipode_antimorphism_report(const HopfGCoalgebra<K>& H, double tol) {
    Report r;
    const FiniteGroup& G = *H.group;
    const int n = H.order();
    for (int g = 0; g < n; ++g) {
        const int gi = G.inv(g);
        auto rhs = compose(swap_map<K>(H.leg(g), H.leg(g)), compose(otimes(H.S(g), H.S(g)), H.M(gi)));
        expect_equal(r, "antipode reverses multiplication", {g}, compose(H.M(g), H.S(g)), rhs, tol);
        expect_equal(r, "antipode preserves unit", {g}, compose(H.i(g), H.S(g)), H.i(gi), tol);
    }
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h) {
            auto lhs = compose(H.S(G.mul(g, h)), H.Delta(G.inv(h), G.inv(g)));
            auto rhs = compose(H.Delta(g, h), compose(swap_map<K>(H.leg(g), H.leg(h)), otimes(H.S(h), H.S(g))));
            expect_equal(r, "antipode reverses comultiplication", {g, h}, lhs, rhs, tol);
        }
    expect_equal(r, "antipode preserves counit", {H.one()}, compose(H.S(H.one()), H.eps()), H.eps(), tol);
    return r;
}

template <class K>
bool check_antipode_antimorphism(const HopfGCoalgebra<K>& H, double tol) {
    return antipode_antimorphism_report(H, tol).ok();
}

template <class K>
Tensor<K> ladder(const HopfGCoalgebra<K>& H, int kind, int g, int h) {
    const FiniteGroup& G = *H.group;
    const int gi = G.inv(g);
    const auto idg = H.id(g), idh = H.id(h);
    auto finish = [&](const Tensor<K>& three) { return compose(three, otimes(H.M(g), idh)); };
    switch (kind) {
        case 1:  // x·y1 ⊗ y2 with Delta(g,h)
            return finish(otimes(idg, H.Delta(g, h)));
        case 2:  // x·S(y1) ⊗ y2 with Delta(g^-1,h)
            return finish(compose(otimes(idg, H.Delta(gi, h)), otimes(otimes(idg, H.S(gi)), idh)));
        case 3:  // x·y2 ⊗ y1 with Delta(h,g)
            return finish(permute_outputs(otimes(idg, H.Delta(h, g)), {0, 2, 1}));
        case 4:  // x·S(y2) ⊗ y1 with Delta(h,g^-1)
            return finish(permute_outputs(
                compose(otimes(idg, H.Delta(h, gi)), otimes(otimes(idg, idh), H.S(gi))), {0, 2, 1}));
        case 5:  // y1·x ⊗ y2 with Delta(g,h)
            return finish(permute_outputs(otimes(idg, H.Delta(g, h)), {1, 0, 2}));
        case 6:  // S(y1)·x ⊗ y2 with Delta(g^-1,h)
            return finish(permute_outputs(
                compose(otimes(idg, H.Delta(gi, h)), otimes(otimes(idg, H.S(gi)), idh)), {1, 0, 2}));
        case 7:  // y2·x ⊗ y1 with Delta(h,g)
            return finish(permute_outputs(otimes(idg, H.Delta(h, g)), {2, 0, 1}));
        case 8:  // S(y2)·x ⊗ y1 with Delta(h,g^-1)
            return finish(permute_outputs(
                compose(otimes(idg, H.Delta(h, gi)), otimes(otimes(idg, idh), H.S(gi))), {2, 0, 1}));
        default:
            fail("InvalidArgument", "ladder kind must be 1..8");
    }
}

std::pair<int, int> ladder_inverse_partner(const FiniteGroup& G, int kind, int g, int h) {
    switch (kind) {
        case 1: return {2, G.mul(g, h)};
        case 2: return {1, G.mul(G.inv(g), h)};
        case 3: return {4, G.mul(h, g)};
        case 4: return {3, G.mul(h, G.inv(g))};
        case 5: return {6, G.mul(g, h)};
        case 6: return {5, G.mul(G.inv(g), h)};
        case 7: return {8, G.mul(h, g)};
        case 8: return {7, G.mul(h, G.inv(g))};
        default: fail("InvalidArgument", "ladder kind must be 1..8");
    }
}

template <class K>
Report check_ladders(const HopfGCoalgebra<K>& H, double tol) {
    Report r;
    const int n = H.order();
    for (int kind = 1; kind <= 8; ++kind)
        for (int g = 0; g < n; ++g)
            for (int h = 0; h < n; ++h) {
                auto L = ladder(H, kind, g, h);
                auto [k2, h2] = ladder_inverse_partner(*H.group, kind, g, h);
                auto back = compose(L, ladder(H, k2, g, h2));
                auto ins = L.in_legs();
                auto id = otimes(identity_map<K>(ins[0]), identity_map<K>(ins[1]));
                expect_equal(r, "ladder " + std::to_string(kind) + " invertible", {g, h}, back, id, tol);
            }
    return r;
}

template <class K>
HopfGAlgebra<K> dualize(const HopfGCoalgebra<K>& H) {
    const FiniteGroup& G = *H.group;
    HopfGAlgebra<K> A;
    A.group = H.group;
    A.space = new_space_id();
    A.name = H.name.empty() ? std::string() : "dual(" + H.name + ")";
    A.dims = H.dims;
    const int n = H.order();
    for (int g = 0; g < n; ++g) {
        A.comult.push_back(transpose_map(H.M(g), H.space, A.space));
        A.counit.push_back(transpose_map(H.i(g), H.space, A.space));
        A.antipode.push_back(transpose_map(H.S(G.inv(g)), H.space, A.space));
    }
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h) A.mult.push_back(transpose_map(H.Delta(g, h), H.space, A.space));
    A.unit = transpose_map(H.eps(), H.space, A.space);
    return A;
}

template <class K>
HopfGCoalgebra<K> dualize(const HopfGAlgebra<K>& A) {
    const FiniteGroup& G = *A.group;
    HopfGCoalgebra<K> H;
    H.group = A.group;
    H.space = new_space_id();
    H.name = A.name.empty() ? std::string() : "dual(" + A.name + ")";
    H.dims = A.dims;
    const int n = A.order();
    for (int g = 0; g < n; ++g) {
        H.mult.push_back(transpose_map(A.Delta(g), A.space, H.space));
        H.unit.push_back(transpose_map(A.eps(g), A.space, H.space));
        H.antipode.push_back(transpose_map(A.S(G.inv(g)), A.space, H.space));
    }
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h) H.comult.push_back(transpose_map(A.M(g, h), A.space, H.space));
    H.counit = transpose_map(A.i(), A.space, H.space);
    return H;
}

template <class K>
Report check_hopf_g_algebra(const HopfGAlgebra<K>& A, double tol) {
    return check_hopf_g_coalgebra(dualize(A), tol);
}

template <class K>
bool check_involutory(const HopfGAlgebra<K>& A, double tol) {
    return check_involutory(dualize(A), tol);
}

template <class K>
HopfGCoalgebra<K> opposite(const HopfGCoalgebra<K>& H) {
    const FiniteGroup& G = *H.group;
    HopfGCoalgebra<K> P = H;
    P.space = new_space_id();
    P.name = H.name.empty() ? std::string() : "op(" + H.name + ")";
    auto same = [](int g) { return g; };
    for (int g = 0; g < H.order(); ++g) {
        P.mult[g] = regrade(compose(swap_map<K>(H.leg(g), H.leg(g)), H.M(g)), H.space, P.space, same);
        P.unit[g] = regrade(H.i(g), H.space, P.space, same);
        P.antipode[g] = regrade(inverse_map(H.S(G.inv(g))), H.space, P.space, same);
    }
    for (auto& t : P.comult) t = regrade(t, H.space, P.space, same);
    P.counit = regrade(H.counit, H.space, P.space, same);
    return P;
}

template <class K>
HopfGCoalgebra<K> coopposite(const HopfGCoalgebra<K>& H) {
    const FiniteGroup& G = *H.group;
    const int n = H.order();
    HopfGCoalgebra<K> C;
    C.group = H.group;
    C.space = new_space_id();
    C.name = H.name.empty() ? std::string() : "cop(" + H.name + ")";
    C.dims.resize(n);
    for (int g = 0; g < n; ++g) C.dims[g] = H.dims[G.inv(g)];
    auto flip = [&](int g) { return G.inv(g); };
    for (int g = 0; g < n; ++g) {
        const int gi = G.inv(g);
        C.mult.push_back(regrade(H.M(gi), H.space, C.space, flip));
        C.unit.push_back(regrade(H.i(gi), H.space, C.space, flip));
        // S^cop_g = (S_g)^{-1}: H_{g^-1} -> H_g, i.e. H^cop_g -> H^cop_{g^-1}.
        C.antipode.push_back(regrade(inverse_map(H.S(g)), H.space, C.space, flip));
    }
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h) {
            auto D = permute_outputs(H.Delta(G.inv(h), G.inv(g)), {1, 0});
            C.comult.push_back(regrade(D, H.space, C.space, flip));
        }
    C.counit = regrade(H.counit, H.space, C.space, flip);
    return C;
}

template <class K>
HopfGAlgebra<K> opposite(const HopfGAlgebra<K>& A) {
    auto out = dualize(coopposite(dualize(A)));
    out.name = A.name.empty() ? std::string() : "op(" + A.name + ")";
    return out;
}

template <class K>
HopfGAlgebra<K> coopposite(const HopfGAlgebra<K>& A) {
    auto out = dualize(opposite(dualize(A)));
    out.name = A.name.empty() ? std::string() : "cop(" + A.name + ")";
    return out;
}

template <class K>
HopfGCoalgebra<K> identity_sector(const HopfGCoalgebra<K>& H) {
    auto G1 = share(FiniteGroup::trivial());
    const int e = H.one();
    HopfGCoalgebra<K> R;
    R.group = G1;
    R.space = new_space_id();
    R.name = H.name.empty() ? std::string() : H.name + "_1";
    R.dims = {H.dims[e]};
    auto to0 = [](int) { return 0; };
    R.mult = {regrade(H.M(e), H.space, R.space, to0)};
    R.unit = {regrade(H.i(e), H.space, R.space, to0)};
    R.comult = {regrade(H.Delta(e, e), H.space, R.space, to0)};
    R.counit = regrade(H.eps(), H.space, R.space, to0);
    R.antipode = {regrade(H.S(e), H.space, R.space, to0)};
    return R;
}

template <class K>
HopfGAlgebra<K> as_algebra(const HopfGCoalgebra<K>& H) {
    if (H.order() != 1) fail("InvalidArgument", "as_algebra needs the trivial group");
    HopfGAlgebra<K> A;
    A.group = H.group;
    A.space = H.space;
    A.name = H.name;
    A.dims = H.dims;
    A.comult = {H.Delta(0, 0)};
    A.counit = {H.eps()};
    A.mult = {H.M(0)};
    A.unit = H.i(0);
    A.antipode = {H.S(0)};
    return A;
}

template <class K>
HopfGCoalgebra<K> as_coalgebra(const HopfGAlgebra<K>& A) {
    if (A.order() != 1) fail("InvalidArgument", "as_coalgebra needs the trivial group");
    HopfGCoalgebra<K> H;
    H.group = A.group;
    H.space = A.space;
    H.name = A.name;
    H.dims = A.dims;
    H.mult = {A.M(0, 0)};
    H.unit = {A.i()};
    H.comult = {A.Delta(0)};
    H.counit = A.eps(0);
    H.antipode = {A.S(0)};
    return H;
}

namespace {

template <class K>
bool all_equal(const std::vector<Tensor<K>>& a, const std::vector<Tensor<K>>& b, double tol) {
    if (a.size() != b.size()) return false;
    for (std::size_t k = 0; k < a.size(); ++k)
        if (!tensors_equal(unlabelled(a[k]), unlabelled(b[k]), tol)) return false;
    return true;
}

}  // namespace

template <class K>
bool same_structure(const HopfGCoalgebra<K>& a, const HopfGCoalgebra<K>& b, double tol) {
    return a.dims == b.dims && all_equal(a.mult, b.mult, tol) && all_equal(a.unit, b.unit, tol) &&
           all_equal(a.comult, b.comult, tol) && all_equal(a.antipode, b.antipode, tol) &&
           tensors_equal(unlabelled(a.counit), unlabelled(b.counit), tol);
}

template <class K>
bool same_structure(const HopfGAlgebra<K>& a, const HopfGAlgebra<K>& b, double tol) {
    return a.dims == b.dims && all_equal(a.mult, b.mult, tol) && all_equal(a.counit, b.counit, tol) &&
           all_equal(a.comult, b.comult, tol) && all_equal(a.antipode, b.antipode, tol) &&
           tensors_equal(unlabelled(a.unit), unlabelled(b.unit), tol);
}

// ---- integrals ----------------------------------------------------------------

namespace {

template <class K>
Matrix<K> integral_system(const HopfGCoalgebra<K>& H, Side side, std::vector<std::size_t>& offset,
                          std::size_t& cols) {
    const FiniteGroup& G = *H.group;
    const int n = H.order();
    offset.assign(n + 1, 0);
    for (int g = 0; g < n; ++g) offset[g + 1] = offset[g] + H.dims[g];
    cols = offset[n];
    Matrix<K> rows;
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h) {
            const int gh = G.mul(g, h);
            const auto& D = H.Delta(g, h);
            // Left: sum_j D[a,i,j] mu_h[j] = mu_gh[a] i_g[i];  Right: sum_i D[a,i,j] mu_g[i] = mu_gh[a] i_h[j].
            const int keep = side == Side::Left ? g : h;
            const int summed = side == Side::Left ? h : g;
            for (std::size_t a = 0; a < H.dims[gh]; ++a)
                for (std::size_t o = 0; o < H.dims[keep]; ++o) {
                    std::vector<K> row(cols, Field<K>::zero());
                    for (std::size_t s = 0; s < H.dims[summed]; ++s) {
                        const K& c = side == Side::Left ? D.at({a, o, s}) : D.at({a, s, o});
                        row[offset[summed] + s] += c;
                    }
                    row[offset[gh] + a] -= H.i(keep)[o];
                    rows.push_back(std::move(row));
                }
        }
    return rows;
}

template <class K>
Matrix<K> cointegral_system(const HopfGCoalgebra<K>& H, Side side) {
    const int e = H.one();
    const std::size_t d = H.dims[e];
    const auto& M = H.M(e);
    Matrix<K> rows;
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t k = 0; k < d; ++k) {
            std::vector<K> row(d, Field<K>::zero());
            for (std::size_t j = 0; j < d; ++j) row[j] += side == Side::Left ? M.at({a, j, k}) : M.at({j, a, k});
            row[k] -= H.eps()[a];
            rows.push_back(std::move(row));
        }
    return rows;
}

}  // namespace

template <class K>
std::size_t g_integral_nullity(const HopfGCoalgebra<K>& H, Side side, double tol) {
    std::vector<std::size_t> offset;
    std::size_t cols = 0;
    auto rows = integral_system(H, side, offset, cols);
    return nullspace(std::move(rows), cols, tol).size();
}

template <class K>
std::size_t cointegral_nullity(const HopfGCoalgebra<K>& H, Side side, double tol) {
    return nullspace(cointegral_system(H, side), H.dims[H.one()], tol).size();
}

template <class K>
K integral_on(const HopfGCoalgebra<K>& H, const GIntegral<K>& mu, int g, const std::vector<K>& x) {
    K s = Field<K>::zero();
    for (std::size_t k = 0; k < H.dims[g]; ++k) s += mu.forms[g][k] * x[k];
    return s;
}

template <class K>
GIntegral<K> solve_g_integral(const HopfGCoalgebra<K>& H, Side side, double tol) {
    std::vector<std::size_t> offset;
    std::size_t cols = 0;
    auto rows = integral_system(H, side, offset, cols);
    auto basis = nullspace(std::move(rows), cols, tol);
    if (basis.empty()) fail("NoIntegral", "the integral system has only the zero solution");
    if (basis.size() > 1)
        fail("AmbiguousIntegral", "solution space has dimension " + std::to_string(basis.size()));
    const auto& v = basis[0];
    GIntegral<K> mu;
    mu.side = side;
    for (int g = 0; g < H.order(); ++g)
        mu.forms.emplace_back(v.begin() + offset[g], v.begin() + offset[g + 1]);
    const int e = H.one();
    K scale = integral_on(H, mu, e, H.i(e).data());
    if (Field<K>::is_zero(scale, tol)) {
        for (const K& c : v)
            if (!Field<K>::is_zero(c, tol)) {
                scale = c;
                break;
            }
    }
    const K inv = Field<K>::inverse(scale);
    for (auto& f : mu.forms)
        for (auto& c : f) c *= inv;
    return mu;
}

template <class K>
Cointegral<K> solve_cointegral(const HopfGCoalgebra<K>& H, Side side, double tol) {
    const std::size_t d = H.dims[H.one()];
    if (d == 0) fail("NoCointegral", "the identity sector is zero");
    auto basis = nullspace(cointegral_system(H, side), d, tol);
    if (basis.empty()) fail("NoCointegral", "the cointegral system has only the zero solution");
    if (basis.size() > 1)
        fail("AmbiguousCointegral", "solution space has dimension " + std::to_string(basis.size()));
    Cointegral<K> c;
    c.side = side;
    c.element = basis[0];
    K scale = Field<K>::zero();
    for (std::size_t k = 0; k < d; ++k) scale += H.eps()[k] * c.element[k];
    if (Field<K>::is_zero(scale, tol)) {
        for (const K& x : c.element)
            if (!Field<K>::is_zero(x, tol)) {
                scale = x;
                break;
            }
    }
    const K inv = Field<K>::inverse(scale);
    for (auto& x : c.element) x *= inv;
    return c;
}

template <class K>
GIntegral<K> solve_g_cointegral(const HopfGAlgebra<K>& A, Side side, double tol) {
    return solve_g_integral(dualize(A), side, tol);
}

template <class K>
bool is_g_integral(const HopfGCoalgebra<K>& H, const GIntegral<K>& mu, Side side, double tol) {
    const FiniteGroup& G = *H.group;
    for (int g = 0; g < H.order(); ++g)
        for (int h = 0; h < H.order(); ++h) {
            const int gh = G.mul(g, h);
            auto lhs = side == Side::Left ? compose(H.Delta(g, h), otimes(H.id(g), as_form(mu.forms[h], H.leg(h))))
                                          : compose(H.Delta(g, h), otimes(as_form(mu.forms[g], H.leg(g)), H.id(h)));
            auto rhs = otimes(as_form(mu.forms[gh], H.leg(gh)), side == Side::Left ? H.i(g) : H.i(h));
            if (!tensors_equal(lhs, rhs, tol)) return false;
        }
    return true;
}

template <class K>
bool is_cointegral(const HopfGCoalgebra<K>& H, const std::vector<K>& e, Side side, double tol) {
    const int one = H.one();
    const auto ev = as_vector(e, H.leg(one));
    auto lhs = side == Side::Left ? compose(otimes(H.id(one), ev), H.M(one)) : compose(otimes(ev, H.id(one)), H.M(one));
    return tensors_equal(lhs, otimes(H.eps(), ev), tol);
}

template <class K>
void normalize_pair(const HopfGCoalgebra<K>& H, GIntegral<K>& mu, Cointegral<K>& e) {
    K c = integral_on(H, mu, H.one(), e.element);
    if (Field<K>::is_zero(c, 0.0)) fail("DegeneratePairing", "mu_1(e) = 0");
    const K inv = Field<K>::inverse(c);
    for (auto& f : mu.forms)
        for (auto& x : f) x *= inv;
}

template <class K>
bool check_cosemisimple(const HopfGCoalgebra<K>& H, const GIntegral<K>& mu, double tol) {
    const int e = H.one();
    K c = integral_on(H, mu, e, H.i(e).data());
    if (Field<K>::is_zero(c, tol)) return false;
    const K inv = Field<K>::inverse(c);
    for (int g = 0; g < H.order(); ++g) {
        if (H.dims[g] == 0) continue;
        if (!Field<K>::near(integral_on(H, mu, g, H.i(g).data()) * inv, Field<K>::one(), tol)) return false;
    }
    return true;
}

template <class K>
Report check_cyclicity(const HopfGCoalgebra<K>& H, const GIntegral<K>& mu, const Cointegral<K>& e, double tol) {
    Report r;
    const FiniteGroup& G = *H.group;
    const int n = H.order(), one = H.one();
    const auto ev = as_vector(e.element, H.leg(one));
    const K mu_e = integral_on(H, mu, one, e.element);
    auto form = [&](int g) { return as_form(mu.forms[g], H.leg(g)); };
    for (int g = 0; g < n; ++g) {
        const int gi = G.inv(g);
        // mu_1(e) S_g(x) = mu_g(e_(1) x) e_(2) with Delta(g, g^-1) e.
        auto split = compose(ev, H.Delta(g, gi));
        auto rhs = permute_outputs(otimes(split, H.id(g)), {0, 2, 1});
        rhs = compose(rhs, otimes(H.M(g), H.id(gi)));
        rhs = compose(rhs, otimes(form(g), H.id(gi)));
        expect_equal(r, "cyclicity lemma", {g}, scaled(H.S(g), mu_e), rhs, tol);
        expect_equal(r, "integral antipode invariance", {g}, compose(H.S(g), form(gi)), form(g), tol);
        auto tr = compose(H.M(g), form(g));
        expect_equal(r, "integral cyclic (2)", {g}, tr, compose(swap_map<K>(H.leg(g), H.leg(g)), tr), tol);
        auto tr3 = compose(otimes(H.M(g), H.id(g)), tr);
        expect_equal(r, "integral cyclic (3)", {g}, tr3, permute_inputs(tr3, {2, 0, 1}), tol);
        expect_equal(r, "cointegral cyclic (2)", {g}, compose(ev, H.Delta(g, gi)),
                     permute_outputs(compose(ev, H.Delta(gi, g)), {1, 0}), tol);
    }
    expect_equal(r, "cointegral antipode invariance", {one}, compose(ev, H.S(one)), ev, tol);
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h) {
            const int k = G.inv(G.mul(g, h));
            auto three = [&](int a, int b, int c) {
                return compose(ev, compose(H.Delta(G.mul(a, b), c), otimes(H.Delta(a, b), H.id(c))));
            };
            expect_equal(r, "cointegral cyclic (3)", {g, h}, three(g, h, k), permute_outputs(three(h, k, g), {2, 0, 1}),
                         tol);
        }
    return r;
}

template <class K>
Crossing<K> identity_crossing(const HopfGCoalgebra<K>& H) {
    const FiniteGroup& G = *H.group;
    const int n = H.order();
    Crossing<K> c;
    c.defined.assign(n, 1);
    for (int h = 0; h < n; ++h)
        for (int g = 0; g < n; ++g) {
            if (G.conj(h, g) != g) fail("InvalidCrossing", "identity crossing needs central gradings");
            c.maps.push_back(H.id(g));
        }
    return c;
}

template <class K>
Report check_crossing(const HopfGCoalgebra<K>& H, const Crossing<K>& phi, const GIntegral<K>* mu, double tol) {
    Report r;
    const FiniteGroup& G = *H.group;
    const int n = H.order(), one = H.one();
    auto P = [&](int h, int g) -> const Tensor<K>& { return phi.phi(h, g, n); };
    if (phi.defined[one])
        for (int g = 0; g < n; ++g) expect_equal(r, "crossing identity", {one, g}, P(one, g), H.id(g), tol);
    for (int h = 0; h < n; ++h) {
        if (!phi.defined[h]) continue;
        for (int g = 0; g < n; ++g) {
            const int c = G.conj(h, g);
            expect_equal(r, "crossing multiplicative", {h, g}, compose(H.M(g), P(h, g)),
                         compose(otimes(P(h, g), P(h, g)), H.M(c)), tol);
            expect_equal(r, "crossing unital", {h, g}, compose(H.i(g), P(h, g)), H.i(c), tol);
            expect_equal(r, "crossing antipode", {h, g}, compose(H.S(g), P(h, G.inv(g))), compose(P(h, g), H.S(c)), tol);
            if (phi.defined[G.inv(h)])
                expect_equal(r, "crossing invertible", {h, g}, compose(P(h, g), P(G.inv(h), c)), H.id(g), tol);
            if (mu)
                expect_equal(r, "crossing preserves integral", {h, g},
                             compose(P(h, g), as_form(mu->forms[c], H.leg(c))), as_form(mu->forms[g], H.leg(g)), tol);
            for (int k = 0; k < n; ++k) {
                auto lhs = compose(H.Delta(g, k), otimes(P(h, g), P(h, k)));
                auto rhs = compose(P(h, G.mul(g, k)), H.Delta(c, G.conj(h, k)));
                expect_equal(r, "crossing comultiplication", {h, g, k}, lhs, rhs, tol);
            }
            for (int k = 0; k < n; ++k) {
                if (!phi.defined[k] || !phi.defined[G.mul(h, k)]) continue;
                expect_equal(r, "crossing homomorphism", {h, k, g}, P(G.mul(h, k), g),
                             compose(P(k, g), P(h, G.conj(k, g))), tol);
            }
        }
        expect_equal(r, "crossing counit", {h}, compose(P(h, one), H.eps()), H.eps(), tol);
    }
    return r;
}

#define HT_INSTANTIATE(K)                                                                                     \
    template struct HopfGCoalgebra<K>;                                                                        \
    template struct HopfGAlgebra<K>;                                                                          \
    template Tensor<K> as_vector(const std::vector<K>&, const Leg&);                                          \
    template Tensor<K> as_form(const std::vector<K>&, const Leg&);                                            \
    template Report check_hopf_g_coalgebra(const HopfGCoalgebra<K>&, double);                                 \
    template bool check_involutory(const HopfGCoalgebra<K>&, double);                                         \
    template bool check_antipode_antimorphism(const HopfGCoalgebra<K>&, double);                              \
    template Report antipode_antimorphism_report(const HopfGCoalgebra<K>&, double);                           \
    template Tensor<K> ladder(const HopfGCoalgebra<K>&, int, int, int);                                       \
    template Report check_ladders(const HopfGCoalgebra<K>&, double);                                          \
    template Report check_hopf_g_algebra(const HopfGAlgebra<K>&, double);                                     \
    template bool check_involutory(const HopfGAlgebra<K>&, double);                                           \
    template HopfGAlgebra<K> dualize(const HopfGCoalgebra<K>&);                                               \
    template HopfGCoalgebra<K> dualize(const HopfGAlgebra<K>&);                                               \
    template HopfGCoalgebra<K> opposite(const HopfGCoalgebra<K>&);                                            \
    template HopfGCoalgebra<K> coopposite(const HopfGCoalgebra<K>&);                                          \
    template HopfGAlgebra<K> opposite(const HopfGAlgebra<K>&);                                                \
    template HopfGAlgebra<K> coopposite(const HopfGAlgebra<K>&);                                              \
    template HopfGCoalgebra<K> identity_sector(const HopfGCoalgebra<K>&);                                     \
    template HopfGAlgebra<K> as_algebra(const HopfGCoalgebra<K>&);                                            \
    template HopfGCoalgebra<K> as_coalgebra(const HopfGAlgebra<K>&);                                          \
    template bool same_structure(const HopfGCoalgebra<K>&, const HopfGCoalgebra<K>&, double);                 \
    template bool same_structure(const HopfGAlgebra<K>&, const HopfGAlgebra<K>&, double);                     \
    template GIntegral<K> solve_g_integral(const HopfGCoalgebra<K>&, Side, double);                           \
    template Cointegral<K> solve_cointegral(const HopfGCoalgebra<K>&, Side, double);                          \
    template GIntegral<K> solve_g_cointegral(const HopfGAlgebra<K>&, Side, double);                           \
    template std::size_t g_integral_nullity(const HopfGCoalgebra<K>&, Side, double);                          \
    template std::size_t cointegral_nullity(const HopfGCoalgebra<K>&, Side, double);                          \
    template bool is_g_integral(const HopfGCoalgebra<K>&, const GIntegral<K>&, Side, double);                 \
    template bool is_cointegral(const HopfGCoalgebra<K>&, const std::vector<K>&, Side, double);               \
    template K integral_on(const HopfGCoalgebra<K>&, const GIntegral<K>&, int, const std::vector<K>&);        \
    template void normalize_pair(const HopfGCoalgebra<K>&, GIntegral<K>&, Cointegral<K>&);                    \
    template bool check_cosemisimple(const HopfGCoalgebra<K>&, const GIntegral<K>&, double);                  \
    template Report check_cyclicity(const HopfGCoalgebra<K>&, const GIntegral<K>&, const Cointegral<K>&,      \
                                    double);                                                                  \
    template Crossing<K> identity_crossing(const HopfGCoalgebra<K>&);                                         \
    template Report check_crossing(const HopfGCoalgebra<K>&, const Crossing<K>&, const GIntegral<K>*, double);

HT_INSTANTIATE(Rational)
HT_INSTANTIATE(Complex)

#undef HT_INSTANTIATE

}  // namespace ht
