#pragma once

#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "hopf_trisect/diagram.hpp"
#include "hopf_trisect/errors.hpp"
#include "hopf_trisect/network.hpp"
#include "hopf_trisect/pairing.hpp"

namespace ht {

// One node per curve and per crossing. Curves without crossings contribute
// eps(e) to `factor` instead of a rank-0 node.
template <class K>
struct BracketAssignment {
    TensorNetwork<K> network;
    std::vector<std::string> provenance;  // per node
    K factor = Field<K>::one();
};

// The Heegaard bracket uses the alpha and beta slots only; the trisection
// bracket fills all three.
template <class K>
struct BracketSlots {
    const HopfGAlgebra<K>* alpha = nullptr;
    const HopfGCoalgebra<K>* beta = nullptr;
    const HopfGCoalgebra<K>* kappa = nullptr;
    const std::vector<Tensor<K>>* form_ab = nullptr;
    const std::vector<Tensor<K>>* form_ak = nullptr;
    const Tensor<K>* form_kb = nullptr;
    const std::vector<std::vector<K>>* e_alpha = nullptr;
    const std::vector<K>* e_beta = nullptr;
    const std::vector<K>* e_kappa = nullptr;
};

// Throws ColoringInvalid or GradingClash.
template <class K>
BracketAssignment<K> assign_network(const TrisectionDiagram& d, const Coloring& c, const BracketSlots<K>& s);
template <class K>
BracketAssignment<K> assign_bracket_network(const TrisectionDiagram& d, const Coloring& c, const HopfGTriplet<K>& t,
                                            const IntegralBundle<K>& e);
template <class K>
K contract_assignment(const BracketAssignment<K>& a);

template <class K>
K trisection_bracket(const TrisectionDiagram& d, const Coloring& c, const HopfGTriplet<K>& t,
                     const IntegralBundle<K>& e);

// Principal: exp(log(z)/3). Real: the real cube root of a real z. The exact
// backend always takes the rational root and throws NoRoot when there is none.
enum class RootBranch { Principal, Real };
std::string root_branch_name(RootBranch b);

// coefficient * zeta^-power with zeta^3 = cube and 0 <= power < 3. When the
// exact backend finds no rational cube root the power stays symbolic; since
// 1, zeta, zeta^2 are then independent over Q, equality is still exact.
template <class K>
struct ZetaPower {
    K coefficient = Field<K>::zero();
    int power = 0;
    K cube = Field<K>::one();

    bool is_scalar() const { return power == 0 || Field<K>::is_zero(coefficient, 0.0); }
    // Throws NoRoot when the value is not in the scalar field.
    K scalar() const;
    bool equals(const ZetaPower& o, double tol = kDefaultTolerance) const;
    ZetaPower& operator+=(const ZetaPower& o);
    std::string str() const;
};

template <class K>
struct InvariantResult {
    K bracket;
    int genus = 0;
    std::optional<K> zeta;  // absent when no root exists in the scalar field
    ZetaPower<K> value;     // zeta^-genus * bracket
    std::string root_choice;
};

// Caches <T_st> and zeta for one (triplet, integrals) pair. The triplet and
// integrals must outlive the evaluator.
template <class K>
class TrisectionInvariant {
public:
    TrisectionInvariant(const HopfGTriplet<K>& t, const IntegralBundle<K>& e, RootBranch branch = RootBranch::Principal,
                        double tol = kDefaultTolerance);

    const HopfGTriplet<K>& triplet() const { return t_; }
    const IntegralBundle<K>& integrals() const { return e_; }
    const FiniteGroup& group() const { return *t_.alpha.group; }

    K bracket(const TrisectionDiagram& d, const Coloring& c) const;
    // <T_st>, computed once.
    K stabilizer() const;
    // Throws NoRoot (no root in the scalar field) or ZeroStabilizer.
    K zeta() const;
    std::optional<K> zeta_if_any() const;
    std::string root_choice() const;
    // Throws ZeroStabilizer.
    InvariantResult<K> normalized(const TrisectionDiagram& d, const Coloring& c) const;
    // Colors alpha_i by images[i]; throws NotAMonodromy unless every relator maps to 1.
    InvariantResult<K> bundle(const TrisectionDiagram& d, const std::vector<int>& images) const;

    struct BundleRow {
        Coloring coloring;
        InvariantResult<K> result;
    };
    // One row per coloring, in enumerate_colorings order; work fans out over
    // HOPF_TRISECT_THREADS threads (default: hardware concurrency).
    std::vector<BundleRow> bundle_table(const TrisectionDiagram& d) const;
    ZetaPower<K> bundle_sum(const TrisectionDiagram& d) const;

private:
    void ensure_zeta() const;

    const HopfGTriplet<K>& t_;
    const IntegralBundle<K>& e_;
    RootBranch branch_;
    double tol_;
    mutable std::once_flag once_;
    mutable K stabilizer_{};
    mutable std::optional<K> zeta_;
    mutable std::optional<Error> zeta_error_;
};

template <class K>
InvariantResult<K> normalized_invariant(const TrisectionDiagram& d, const Coloring& c, const HopfGTriplet<K>& t,
                                        const IntegralBundle<K>& e, RootBranch branch = RootBranch::Principal);
template <class K>
ZetaPower<K> bundle_sum(const TrisectionDiagram& d, const HopfGTriplet<K>& t, const IntegralBundle<K>& e,
                        RootBranch branch = RootBranch::Principal);

// Rational cube root when one exists.
std::optional<Rational> rational_cube_root(const Rational& q);
int parse_thread_count();

// ---- 3-manifold specializations -----------------------------------------------------
// e_alpha[g] in alg_g, e_beta in co_1.
template <class K>
struct DoubletIntegrals {
    std::vector<std::vector<K>> alpha;
    std::vector<K> beta;
};

// Right G-cointegral of the algebra side and right cointegral of co_1, each
// scaled so that its counit value is 1.
template <class K>
DoubletIntegrals<K> solve_doublet_integrals(const HopfGDoublet<K>& d, double tol = kDefaultTolerance);

// <e^alpha_1, e^beta>^-g <D> for a Heegaard diagram colored in the doublet's
// group. Throws DegenerateNormalizer, ColoringInvalid.
template <class K>
K heegaard_virelizier(const HeegaardDiagram& hd, const Coloring& c, const HopfGDoublet<K>& p,
                      const DoubletIntegrals<K>& e);
// Uncolored version over the trivial group.
template <class K>
K heegaard_kuperberg(const HeegaardDiagram& hd, const HopfGDoublet<K>& p, const DoubletIntegrals<K>& e);

}  // namespace ht
