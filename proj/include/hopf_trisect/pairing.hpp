#pragma once

#include <vector>

#include "hopf_trisect/hopf.hpp"

namespace ht {

// Bilinear form on the identity sectors: legs (in first_1, in second_1).
template <class K>
struct HopfPair {
    HopfGCoalgebra<K> first;
    HopfGCoalgebra<K> second;
    Tensor<K> form;
};

// forms[g] has legs (in alg_g, in co_g).
template <class K>
struct HopfGDoublet {
    HopfGAlgebra<K> alg;
    HopfGCoalgebra<K> co;
    std::vector<Tensor<K>> forms;
};

// Per (g,h) maps on second_g ⊗ first_h (second on top, first below).
// V lands in second_g ⊗ first_{h^-1}.
template <class K>
struct TUVTensors {
    int order = 0;
    std::vector<Tensor<K>> T, T_inv, U, V;  // [g*n + h]
    const Tensor<K>& t(int g, int h) const { return T[static_cast<std::size_t>(g) * order + h]; }
    const Tensor<K>& t_inv(int g, int h) const { return T_inv[static_cast<std::size_t>(g) * order + h]; }
    const Tensor<K>& u(int g, int h) const { return U[static_cast<std::size_t>(g) * order + h]; }
    const Tensor<K>& v(int g, int h) const { return V[static_cast<std::size_t>(g) * order + h]; }
};

// The curve families of a trisection diagram feed these slots: alpha curves
// use the algebra side, beta and kappa curves the two coalgebras.
template <class K>
struct HopfGTriplet {
    HopfGAlgebra<K> alpha;
    HopfGCoalgebra<K> beta;
    HopfGCoalgebra<K> kappa;
    Tensor<K> form_kb;                 // (in kappa_1, in beta_1)
    std::vector<Tensor<K>> form_ab;    // [g] (in alpha_g, in beta_g)
    std::vector<Tensor<K>> form_ak;    // [g] (in alpha_g, in kappa_g)
};

// R in H_1 ⊗ H_1 of a Hopf G-algebra, legs (out 1, out 1).
template <class K>
struct RMatrix {
    Tensor<K> R;
    Tensor<K> R_inv;  // (S_1 ⊗ id)(R)
};

// ---- pairs and doublets -------------------------------------------------------
// Morphism identities, with Sweedler notation for the algebra side:
//   <x1,u><x2,v> = <x, M(v⊗u)>,  <M(x⊗x'),z> = <x,z1><x',z2>,
//   <x,i_g> = eps_g(x),  <i,z> = eps(z),  <S_g x, y> = <x, S_{g^-1} y>.
template <class K>
Report check_doublet(const HopfGDoublet<K>& d, double tol = kDefaultTolerance);
// The pair condition is the doublet condition on the identity sectors.
template <class K>
Report check_hopf_pair(const HopfPair<K>& p, double tol = kDefaultTolerance);
template <class K>
HopfGDoublet<K> pair_as_doublet(const HopfPair<K>& p);

// (H^op, H'^cop, <>_{g^-1}) and (H^cop, H'^op, <>).
template <class K>
std::vector<HopfGDoublet<K>> derived_doublets(const HopfGDoublet<K>& d);
// The two doublet-style variants plus (H^{op,cop}, H') and (H, H'^{op,cop}).
template <class K>
std::vector<HopfPair<K>> derived_pairs(const HopfPair<K>& p);

// ---- T, U, V and the double ---------------------------------------------------
template <class K>
TUVTensors<K> build_tuv(const HopfPair<K>& p);
// T·T^-1 = id both ways, and both braid-type relations per (g,h).
template <class K>
Report check_tuv_relations(const HopfPair<K>& p, const TUVTensors<K>& t, double tol = kDefaultTolerance);

// D(first, second)_g = first_g ⊗ second_g.
template <class K>
HopfGCoalgebra<K> drinfeld_double(const HopfPair<K>& p);
template <class K>
HopfGCoalgebra<K> drinfeld_double(const HopfPair<K>& p, const TUVTensors<K>& t);

// ---- triplets -----------------------------------------------------------------
// The pair feeding the double D(beta, kappa): first = beta, second = kappa.
template <class K>
HopfPair<K> beta_kappa_pair(const HopfGTriplet<K>& t);
// Phi_g: D(beta,kappa)_g -> (alpha_g)^*, Phi_g(y⊗z)(x) = <x1,y>^{ab} <x2,z>^{ak}.
template <class K>
std::vector<Tensor<K>> triplet_morphism(const HopfGTriplet<K>& t, const HopfGCoalgebra<K>& dbl,
                                        const HopfGCoalgebra<K>& alpha_dual);

// Axiom names are prefixed "(a) ", "(b) beta ", "(b) kappa ", "(c) ".
template <class K>
Report check_triplet(const HopfGTriplet<K>& t, double tol = kDefaultTolerance);

struct LemmaVerdicts {
    Report report;
    bool morphism = false;    // condition (c) of the definition
    bool equation_b = false;
    bool equation_c = false;
    bool agree() const { return morphism == equation_b && equation_b == equation_c; }
};
template <class K>
LemmaVerdicts check_fundamental_lemma(const HopfGTriplet<K>& t, double tol = kDefaultTolerance);

// Left-hand network of the lemma's equation (b) at grading g, as a form on
// (kappa_g, beta_{g^-1}, alpha_g); equation (c) uses (kappa_{g^-1}, beta_g, alpha_g).
template <class K>
Tensor<K> lemma_network_b(const HopfGTriplet<K>& t, int g);
template <class K>
Tensor<K> lemma_network_c(const HopfGTriplet<K>& t, int g);

// Normalized integral data consumed by the bracket: a G-cointegral of the
// alpha side and cointegrals of the beta and kappa identity sectors.
template <class K>
struct IntegralBundle {
    std::vector<std::vector<K>> alpha;  // [g] coordinates in alpha_g
    std::vector<K> beta;
    std::vector<K> kappa;
};

// Solved right (co)integrals, each scaled so its counit value is 1.
template <class K>
IntegralBundle<K> solve_integral_bundle(const HopfGTriplet<K>& t, double tol = kDefaultTolerance);

// ---- quasitriangular construction ----------------------------------------------
template <class K>
RMatrix<K> make_r_matrix(const HopfGAlgebra<K>& H, const Tensor<K>& R);
// Invertibility and R·Delta_g(x) = Delta^op_g(x)·R; throws InvalidRMatrix.
template <class K>
Report check_r_matrix(const HopfGAlgebra<K>& H, const RMatrix<K>& R, double tol = kDefaultTolerance);
// (H^cop, H^*, H^*, <>_R, <>, <>) with <f_kappa, f_beta>_R = sum f_beta(s_i) f_kappa(t_i)
// for R = sum s_i ⊗ t_i.
template <class K>
HopfGTriplet<K> quasitriangular_triplet(const HopfGAlgebra<K>& H, const RMatrix<K>& R,
                                        double tol = kDefaultTolerance);

// Labels every leg with the wildcard space so forms can meet any family.
template <class K>
Tensor<K> wildcard(Tensor<K> t);

}  // namespace ht
