#pragma once

#include <string>
#include <vector>

#include "hopf_trisect/group.hpp"
#include "hopf_trisect/report.hpp"
#include "hopf_trisect/tensor.hpp"

namespace ht {

// Family {H_g} of algebras with a graded comultiplication
//   Delta(g,h): H_{gh} -> H_g ⊗ H_h,  counit on H_1,  S(g): H_g -> H_{g^-1}.
// All tensors use map layout (inputs first) and carry this family's space id.
template <class K>
struct HopfGCoalgebra {
    GroupPtr group;
    int space = 0;
    std::string name;
    std::vector<std::size_t> dims;
    std::vector<Tensor<K>> mult;      // [g]        in g, in g -> out g
    std::vector<Tensor<K>> unit;      // [g]        -> out g
    std::vector<Tensor<K>> comult;    // [g*n + h]  in gh -> out g, out h
    Tensor<K> counit;                 //            in 1 ->
    std::vector<Tensor<K>> antipode;  // [g]        in g -> out g^-1

    // Zero-filled family with correctly labelled legs.
    static HopfGCoalgebra blank(GroupPtr group, std::vector<std::size_t> dims, std::string name = {});

    int order() const { return group->order(); }
    int one() const { return group->identity(); }
    Leg leg(int g) const { return in_leg(space, g, dims[g]); }
    Tensor<K> id(int g) const { return identity_map<K>(leg(g)); }
    const Tensor<K>& M(int g) const { return mult[g]; }
    const Tensor<K>& i(int g) const { return unit[g]; }
    const Tensor<K>& Delta(int g, int h) const { return comult[static_cast<std::size_t>(g) * order() + h]; }
    Tensor<K>& Delta(int g, int h) { return comult[static_cast<std::size_t>(g) * order() + h]; }
    const Tensor<K>& eps() const { return counit; }
    const Tensor<K>& S(int g) const { return antipode[g]; }
};

// Family {H_g} of coalgebras with a graded multiplication
//   M(g,h): H_g ⊗ H_h -> H_{gh},  unit into H_1,  S(g): H_g -> H_{g^-1}.
template <class K>
struct HopfGAlgebra {
    GroupPtr group;
    int space = 0;
    std::string name;
    std::vector<std::size_t> dims;
    std::vector<Tensor<K>> comult;    // [g]        in g -> out g, out g
    std::vector<Tensor<K>> counit;    // [g]        in g ->
    std::vector<Tensor<K>> mult;      // [g*n + h]  in g, in h -> out gh
    Tensor<K> unit;                   //            -> out 1
    std::vector<Tensor<K>> antipode;  // [g]        in g -> out g^-1

    static HopfGAlgebra blank(GroupPtr group, std::vector<std::size_t> dims, std::string name = {});

    int order() const { return group->order(); }
    int one() const { return group->identity(); }
    Leg leg(int g) const { return in_leg(space, g, dims[g]); }
    Tensor<K> id(int g) const { return identity_map<K>(leg(g)); }
    const Tensor<K>& Delta(int g) const { return comult[g]; }
    const Tensor<K>& eps(int g) const { return counit[g]; }
    const Tensor<K>& M(int g, int h) const { return mult[static_cast<std::size_t>(g) * order() + h]; }
    Tensor<K>& M(int g, int h) { return mult[static_cast<std::size_t>(g) * order() + h]; }
    const Tensor<K>& i() const { return unit; }
    const Tensor<K>& S(int g) const { return antipode[g]; }
};

// Graded maps phi_h: H_g -> H_{h g h^-1}; `defined[h]` marks the h for which
// a crossing map was supplied (partial crossings are checked on their domain).
template <class K>
struct Crossing {
    std::vector<Tensor<K>> maps;  // [h*n + g]
    std::vector<char> defined;
    const Tensor<K>& phi(int h, int g, int n) const { return maps[static_cast<std::size_t>(h) * n + g]; }
};

// Left: (id ⊗ mu_h) Delta(g,h) = mu_{gh} i_g.  Right: (mu_g ⊗ id) Delta(g,h) = mu_{gh} i_h.
// Cointegrals: left  M_1(x ⊗ e) = eps(x) e;  right  M_1(e ⊗ x) = eps(x) e.
enum class Side { Left, Right };

std::string side_name(Side s);

template <class K>
struct GIntegral {
    std::vector<std::vector<K>> forms;  // forms[g] has dims[g] coefficients
    Side side = Side::Left;
};

template <class K>
struct Cointegral {
    std::vector<K> element;  // coordinates in H_1
    Side side = Side::Left;
};

// ---- checks on Hopf G-coalgebras --------------------------------------------
template <class K>
Report check_hopf_g_coalgebra(const HopfGCoalgebra<K>& H, double tol = kDefaultTolerance);
template <class K>
bool check_involutory(const HopfGCoalgebra<K>& H, double tol = kDefaultTolerance);
template <class K>
bool check_antipode_antimorphism(const HopfGCoalgebra<K>& H, double tol = kDefaultTolerance);
template <class K>
Report antipode_antimorphism_report(const HopfGCoalgebra<K>& H, double tol = kDefaultTolerance);

// Ladder k in 1..8 as a map (x in H_g, y) -> (top, bottom); see hopf.cpp for
// the exact wiring. ladder_inverse_partner gives (kind, second index) of the
// inverse ladder.
template <class K>
Tensor<K> ladder(const HopfGCoalgebra<K>& H, int kind, int g, int h);
std::pair<int, int> ladder_inverse_partner(const FiniteGroup& G, int kind, int g, int h);
template <class K>
Report check_ladders(const HopfGCoalgebra<K>& H, double tol = kDefaultTolerance);

// ---- checks on Hopf G-algebras (via the dual family) --------------------------
template <class K>
Report check_hopf_g_algebra(const HopfGAlgebra<K>& A, double tol = kDefaultTolerance);
template <class K>
bool check_involutory(const HopfGAlgebra<K>& A, double tol = kDefaultTolerance);

// ---- constructions ----------------------------------------------------------
template <class K>
HopfGAlgebra<K> dualize(const HopfGCoalgebra<K>& H);
template <class K>
HopfGCoalgebra<K> dualize(const HopfGAlgebra<K>& A);

template <class K>
HopfGCoalgebra<K> opposite(const HopfGCoalgebra<K>& H);
template <class K>
HopfGCoalgebra<K> coopposite(const HopfGCoalgebra<K>& H);
template <class K>
HopfGAlgebra<K> opposite(const HopfGAlgebra<K>& A);
template <class K>
HopfGAlgebra<K> coopposite(const HopfGAlgebra<K>& A);

// The 1-sector as a Hopf G-coalgebra over the trivial group.
template <class K>
HopfGCoalgebra<K> identity_sector(const HopfGCoalgebra<K>& H);
// Over the trivial group both notions carry the same data.
template <class K>
HopfGAlgebra<K> as_algebra(const HopfGCoalgebra<K>& H);
template <class K>
HopfGCoalgebra<K> as_coalgebra(const HopfGAlgebra<K>& A);

// Entrywise equality of all structure tensors, ignoring space ids.
template <class K>
bool same_structure(const HopfGCoalgebra<K>& a, const HopfGCoalgebra<K>& b, double tol = kDefaultTolerance);
template <class K>
bool same_structure(const HopfGAlgebra<K>& a, const HopfGAlgebra<K>& b, double tol = kDefaultTolerance);

// ---- integrals --------------------------------------------------------------
// Solves the joint homogeneous system over all sectors. Scaled so that
// mu_1(i_1) = 1 when possible; otherwise the first nonzero coefficient is 1.
template <class K>
GIntegral<K> solve_g_integral(const HopfGCoalgebra<K>& H, Side side, double tol = kDefaultTolerance);
// Scaled so that eps(e) = 1 when possible.
template <class K>
Cointegral<K> solve_cointegral(const HopfGCoalgebra<K>& H, Side side, double tol = kDefaultTolerance);
// G-cointegral {e_g} of a Hopf G-algebra: the G-integral of its dual family.
template <class K>
GIntegral<K> solve_g_cointegral(const HopfGAlgebra<K>& A, Side side, double tol = kDefaultTolerance);
// Dimensions of the solution spaces (1 for every finite-type input).
template <class K>
std::size_t g_integral_nullity(const HopfGCoalgebra<K>& H, Side side, double tol = kDefaultTolerance);
template <class K>
std::size_t cointegral_nullity(const HopfGCoalgebra<K>& H, Side side, double tol = kDefaultTolerance);

template <class K>
bool is_g_integral(const HopfGCoalgebra<K>& H, const GIntegral<K>& mu, Side side, double tol = kDefaultTolerance);
template <class K>
bool is_cointegral(const HopfGCoalgebra<K>& H, const std::vector<K>& e, Side side, double tol = kDefaultTolerance);

template <class K>
K integral_on(const HopfGCoalgebra<K>& H, const GIntegral<K>& mu, int g, const std::vector<K>& x);
// Rescales the integral so that mu_1(e) = 1.
template <class K>
void normalize_pair(const HopfGCoalgebra<K>& H, GIntegral<K>& mu, Cointegral<K>& e);
template <class K>
bool check_cosemisimple(const HopfGCoalgebra<K>& H, const GIntegral<K>& mu, double tol = kDefaultTolerance);
template <class K>
Report check_cyclicity(const HopfGCoalgebra<K>& H, const GIntegral<K>& mu, const Cointegral<K>& e,
                       double tol = kDefaultTolerance);

// ---- crossings --------------------------------------------------------------
template <class K>
Crossing<K> identity_crossing(const HopfGCoalgebra<K>& H);
// Checks every axiom on the crossing's domain; with an integral supplied also
// checks mu_{h g h^-1} ∘ phi_h = mu_g.
template <class K>
Report check_crossing(const HopfGCoalgebra<K>& H, const Crossing<K>& phi, const GIntegral<K>* mu = nullptr,
                      double tol = kDefaultTolerance);

// Vector <-> tensor helpers.
template <class K>
Tensor<K> as_vector(const std::vector<K>& v, const Leg& leg);
template <class K>
Tensor<K> as_form(const std::vector<K>& v, const Leg& leg);

}  // namespace ht
