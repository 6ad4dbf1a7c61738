#pragma once

#include <string>
#include <vector>

#include "hopf_trisect/group.hpp"
#include "hopf_trisect/pairing.hpp"

namespace ht {

// Functions on the source group graded by phi: sector a has basis {e_x : phi(x) = a}
// in increasing element order. Multiplication is pointwise, Delta splits x = yz.
template <class K>
HopfGCoalgebra<K> function_coalgebra(const GroupHom& phi, std::string name = {});

// The group algebra k[G] as a Hopf algebra over the trivial grading group.
template <class K>
HopfGAlgebra<K> group_algebra(const GroupPtr& G, std::string name = {});

// <x, e'_y>_a = [psi(x) = y] between dual(function_coalgebra(phi)) and
// function_coalgebra(phi_target). Requires phi = phi_target ∘ psi.
template <class K>
std::vector<Tensor<K>> kronecker_pairing(const GroupHom& phi, const GroupHom& phi_target, const GroupHom& psi);

// Form on ker(phi_kappa) × ker(phi_beta):
//   F_{a^m, y} = (1/n) sum over a^p in rho^-1(y) of exp(2 pi i m p / n),
// where ker(phi_kappa) = <a> has order n. `rho` lists the image of each kernel
// element of phi_kappa (increasing element order). The exact backend accepts n <= 2.
template <class K>
Tensor<K> fourier_pairing(const GroupHom& phi_kappa, const GroupHom& phi_beta, const std::vector<int>& rho);

struct TripletMaps {
    GroupHom phi;        // alpha side
    GroupHom phi_beta;
    GroupHom phi_kappa;
    GroupHom psi;        // source of phi -> source of phi_beta
    GroupHom psi_kappa;  // source of phi -> source of phi_kappa
    std::vector<int> rho;
};

// Throws HypothesisViolated unless every kernel element of phi_beta and
// phi_kappa has order dividing 2 and is central.
void check_example_hypothesis(const TripletMaps& m);

template <class K>
HopfGTriplet<K> example_triplet(const TripletMaps& m, bool check_hypothesis = true);
// e^alpha_a = sum of the preimage basis, e^beta = e'_1, e^kappa = e''_1.
template <class K>
IntegralBundle<K> example_integrals(const TripletMaps& m);

// phi_h(e_x) = e_{c x c^-1} for a lift c of h; defined only for h in im(phi).
template <class K>
Crossing<K> conjugation_crossing(const GroupHom& phi);

// The D8 maps: phi = phi_beta: D4 -> D8, (s,r) -> (s,r^4); phi_kappa: (s,r) -> (s,r^2);
// psi = id; psi_kappa: D4 -> D4, (s,r) -> (s,r^2); rho trivial.
TripletMaps d8_maps();

template <class K>
struct TripletFixture {
    std::string name;
    HopfGTriplet<K> triplet;
    IntegralBundle<K> integrals;
};

template <class K>
TripletFixture<K> d8_fixture();
// Quasitriangular triplet of k[Z/2] with R = 1 ⊗ 1; e^alpha = (1+t)/2 and
// e^beta = e^kappa = 2 delta_1, so mu(e) = 1 and eps(e) = 1.
template <class K>
TripletFixture<K> z2_fixture();
// (k^G', k[G']) over the trivial group with <delta_x, y> = [x y = 1].
template <class K>
HopfGDoublet<K> standard_doublet(const GroupPtr& Gp);
// (dual(functions(phi)), functions(phi_target), Kronecker form along psi).
template <class K>
HopfGDoublet<K> function_doublet(const GroupHom& phi, const GroupHom& phi_target, const GroupHom& psi);

// Names: "d8", "z2", "z2_twisted" (nontrivial R on k[Z/2]), "s3" (k[S3], R = 1⊗1).
template <class K>
TripletFixture<K> builtin_fixture(const std::string& name);

}  // namespace ht
