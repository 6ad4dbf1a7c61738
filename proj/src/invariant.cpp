#include "hopf_trisect/invariant.hpp"

#include <atomic>
#include <cstdlib>
#include <thread>

#include "hopf_trisect/errors.hpp"
#include "hopf_trisect/hopf.hpp"

namespace ht {

namespace {

// A curve with n crossings becomes a chain: the integral vector split by n-1
// rank-3 coproducts. Dense iterated coproducts grow as dim^n; the chain lets the
// planner keep intermediates small. leg_of[k] locates crossing slot k.
template <class K>
struct CurveChain {
    std::vector<Tensor<K>> nodes;
    std::vector<std::pair<std::size_t, std::size_t>> leg_of;  // (chain node, leg)
};

// out_grade(k) is the grading of slot k; rest(k) the grading of the remainder
// b_k ... b_n; delta(g, h) splits grading gh into (g, h).
template <class K, class Delta>
CurveChain<K> split_chain(Tensor<K> v, std::size_t n, const std::vector<int>& b, const std::vector<int>& rest,
                          Delta delta) {
    CurveChain<K> c;
    if (n == 1) {
        c.nodes.push_back(std::move(v));
        c.leg_of.emplace_back(0, 0);
        return c;
    }
    c.nodes.push_back(compose(v, delta(b[0], rest[1])));
    c.leg_of.emplace_back(0, 0);
    for (std::size_t k = 1; k + 1 < n; ++k) {
        c.nodes.push_back(delta(b[k], rest[k + 1]));
        c.leg_of.emplace_back(k, 1);  // leg 0 is the in leg
    }
    c.leg_of.emplace_back(n - 2, n == 2 ? 1 : 2);
    return c;
}

template <class K>
K counit_value(const Tensor<K>& eps, const Tensor<K>& v) {
    return compose(v, eps).value();
}

std::string curve_name(const CurveRef& c) { return family_name(c.family) + "[" + std::to_string(c.index) + "]"; }

}  // namespace

template <class K>
BracketAssignment<K> assign_network(const TrisectionDiagram& d, const Coloring& c, const BracketSlots<K>& s) {
    const FiniteGroup& G = *s.alpha->group;
    if (!validate_coloring(d, c, G)) fail("ColoringInvalid", "the colors do not satisfy every curve word");
    if (!d.heegaard && !s.kappa) fail("GradingClash", "a trisection diagram needs the kappa slot");
    const int one = G.identity();
    BracketAssignment<K> out;

    // Node index of each curve; crossing k's legs are wired after all curves exist.
    struct Port {
        std::size_t node;
        std::size_t leg;
        int grade;
    };
    std::vector<std::array<std::optional<Port>, 2>> ports(d.crossings.size());  // [a end, b end]
    auto end_slot = [&](const DiagCrossing& x, const CurveRef& cr) { return x.a == cr ? 0 : 1; };

    for (int f = 0; f < 3; ++f) {
        const Family fam = static_cast<Family>(f);
        for (int i = 0; i < d.family_size(fam); ++i) {
            const CurveRef cr{fam, i};
            const auto& seq = d.sequence(cr);
            std::vector<int> grades;
            for (int id : seq) {
                const auto& x = d.crossings[id];
                const CurveRef o = x.other(cr);
                if (fam == Family::Alpha) grades.push_back(c[i]);
                else if (o.family == Family::Alpha) {
                    const int a = c[o.index];
                    grades.push_back(x.sign_from(o) > 0 ? a : G.inv(a));
                } else grades.push_back(one);
            }
            CurveChain<K> chain;
            if (fam == Family::Alpha) {
                const int a = c[i];
                auto v = as_vector((*s.e_alpha)[a], s.alpha->leg(a));
                if (seq.empty()) {
                    out.factor *= counit_value(s.alpha->eps(a), v);
                    continue;
                }
                chain = split_chain(v, seq.size(), grades, grades, [&](int, int) { return s.alpha->Delta(a); });
            } else {
                const auto& H = fam == Family::Beta ? *s.beta : *s.kappa;
                const auto& e = fam == Family::Beta ? *s.e_beta : *s.e_kappa;
                auto v = as_vector(e, H.leg(H.one()));
                if (seq.empty()) {
                    out.factor *= counit_value(H.eps(), v);
                    continue;
                }
                std::vector<int> rest(grades.size() + 1, one);
                for (std::size_t k = grades.size(); k-- > 0;) rest[k] = G.mul(grades[k], rest[k + 1]);
                if (rest[0] != one) fail("GradingClash", curve_name(cr) + " gradings multiply to a nontrivial element");
                chain = split_chain(v, seq.size(), grades, rest, [&](int g, int h) { return H.Delta(g, h); });
            }
            std::vector<std::size_t> ids;
            for (std::size_t k = 0; k < chain.nodes.size(); ++k) {
                const std::string label = curve_name(cr) + (chain.nodes.size() > 1 ? " #" + std::to_string(k) : "");
                ids.push_back(out.network.add(std::move(chain.nodes[k]), label));
                out.provenance.push_back(label);
            }
            for (std::size_t k = 1; k < ids.size(); ++k) {
                // Previous node's last out leg feeds this coproduct.
                const std::size_t last = k == 1 ? 1 : 2;
                out.network.link({ids[k - 1], last}, {ids[k], 0});
            }
            for (std::size_t k = 0; k < seq.size(); ++k) {
                auto [node, leg] = chain.leg_of[k];
                ports[seq[k]][end_slot(d.crossings[seq[k]], cr)] = Port{ids[node], leg, grades[k]};
            }
        }
    }

    for (const auto& x : d.crossings) {
        // Stored pair order puts alpha first and kappa before beta.
        const bool negative = x.sign < 0;
        Tensor<K> form;
        std::string recipe;
        if (x.a.family == Family::Alpha) {
            const int a = c[x.a.index];
            const bool to_beta = x.b.family == Family::Beta;
            const auto& H = to_beta ? *s.beta : *s.kappa;
            const auto& forms = to_beta ? *s.form_ab : *s.form_ak;
            form = forms[a];
            if (negative) form = compose(otimes(s.alpha->id(a), H.S(G.inv(a))), form);
            recipe = std::string(negative ? "S then " : "") + (to_beta ? "<alpha,beta>" : "<alpha,kappa>");
        } else {
            form = *s.form_kb;
            if (negative) form = compose(otimes(s.kappa->id(one), s.beta->S(one)), form);
            recipe = std::string(negative ? "S then " : "") + "<kappa,beta>";
        }
        const std::size_t node = out.network.add(std::move(form), "crossing " + std::to_string(x.id));
        out.provenance.push_back("crossing " + std::to_string(x.id) + ": " + recipe);
        for (int end = 0; end < 2; ++end) {
            const auto& p = ports[x.id][end];
            if (!p) fail("GradingClash", "crossing " + std::to_string(x.id) + " lost a curve port");
            out.network.link({p->node, p->leg}, {node, static_cast<std::size_t>(end)});
        }
    }
    return out;
}

template <class K>
K contract_assignment(const BracketAssignment<K>& a) {
    if (a.network.size() == 0) return a.factor;
    return a.factor * contract(a.network).value();
}

template <class K>
BracketAssignment<K> assign_bracket_network(const TrisectionDiagram& d, const Coloring& c, const HopfGTriplet<K>& t,
                                            const IntegralBundle<K>& e) {
    BracketSlots<K> s;
    s.alpha = &t.alpha;
    s.beta = &t.beta;
    s.kappa = &t.kappa;
    s.form_ab = &t.form_ab;
    s.form_ak = &t.form_ak;
    s.form_kb = &t.form_kb;
    s.e_alpha = &e.alpha;
    s.e_beta = &e.beta;
    s.e_kappa = &e.kappa;
    return assign_network(d, c, s);
}

template <class K>
K trisection_bracket(const TrisectionDiagram& d, const Coloring& c, const HopfGTriplet<K>& t,
                     const IntegralBundle<K>& e) {
    return contract_assignment(assign_bracket_network(d, c, t, e));
}

// ---- normalization ----------------------------------------------------------------------------

std::string root_branch_name(RootBranch b) { return b == RootBranch::Principal ? "principal" : "real"; }

std::optional<Rational> rational_cube_root(const Rational& q) {
    auto root = [](const mpz_class& z) -> std::optional<mpz_class> {
        mpz_class r;
        if (mpz_root(r.get_mpz_t(), z.get_mpz_t(), 3) == 0) return std::nullopt;
        return r;
    };
    auto n = root(q.get_num());
    auto d = root(q.get_den());
    if (!n || !d) return std::nullopt;
    Rational r(*n, *d);
    r.canonicalize();
    return r;
}

int parse_thread_count() {
    if (const char* s = std::getenv("HOPF_TRISECT_THREADS")) {
        const int n = std::atoi(s);
        if (n > 0) return n;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

template <class K>
TrisectionInvariant<K>::TrisectionInvariant(const HopfGTriplet<K>& t, const IntegralBundle<K>& e, RootBranch branch,
                                            double tol)
    : t_(t), e_(e), branch_(branch), tol_(tol) {}

template <class K>
K TrisectionInvariant<K>::bracket(const TrisectionDiagram& d, const Coloring& c) const {
    return trisection_bracket(d, c, t_, e_);
}

template <class K>
void TrisectionInvariant<K>::ensure_zeta() const {
    std::call_once(once_, [&] {
        stabilizer_ = bracket(standard_stabilization(), Coloring(3, group().identity()));
        try {
            if (Field<K>::is_zero(stabilizer_, tol_)) fail("ZeroStabilizer", "<T_st> = 0, so no normalization exists");
            if constexpr (Field<K>::exact) {
                auto r = rational_cube_root(stabilizer_);
                if (!r) fail("NoRoot", "<T_st> = " + Field<K>::str(stabilizer_) + " is not a rational cube");
                zeta_ = *r;
            } else if (branch_ == RootBranch::Real) {
                if (std::abs(stabilizer_.imag()) > tol_ * (1.0 + std::abs(stabilizer_)))
                    fail("NoRoot", "<T_st> is not real, so the real branch is unavailable");
                zeta_ = Complex(std::cbrt(stabilizer_.real()), 0.0);
            } else {
                zeta_ = std::pow(stabilizer_, 1.0 / 3.0);
            }
        } catch (const Error& e) {
            zeta_error_ = e;
        }
    });
}

template <class K>
K TrisectionInvariant<K>::stabilizer() const {
    ensure_zeta();
    return stabilizer_;
}

template <class K>
K TrisectionInvariant<K>::zeta() const {
    ensure_zeta();
    if (!zeta_) throw *zeta_error_;
    return *zeta_;
}

template <class K>
std::optional<K> TrisectionInvariant<K>::zeta_if_any() const {
    ensure_zeta();
    return zeta_;
}

template <class K>
std::string TrisectionInvariant<K>::root_choice() const {
    ensure_zeta();
    if constexpr (Field<K>::exact) {
        if (zeta_) return "rational";
        return "symbolic (zeta^3 = " + Field<K>::str(stabilizer_) + ")";
    }
    return root_branch_name(branch_);
}

template <class K>
InvariantResult<K> TrisectionInvariant<K>::normalized(const TrisectionDiagram& d, const Coloring& c) const {
    ensure_zeta();
    // Only the exact backend without a rational root goes symbolic.
    if (!zeta_ && (!Field<K>::exact || zeta_error_->kind() != "NoRoot")) throw *zeta_error_;
    InvariantResult<K> r;
    r.bracket = bracket(d, c);
    r.genus = d.genus;
    r.zeta = zeta_;
    r.root_choice = root_choice();
    r.value.cube = stabilizer_;
    K scale = Field<K>::one();
    if (zeta_) {
        for (int k = 0; k < d.genus; ++k) scale *= *zeta_;
    } else {
        for (int k = 0; k < d.genus / 3; ++k) scale *= stabilizer_;
        r.value.power = d.genus % 3;
    }
    r.value.coefficient = r.bracket / scale;
    if (Field<K>::is_zero(r.value.coefficient, 0.0)) r.value.power = 0;
    return r;
}

template <class K>
InvariantResult<K> TrisectionInvariant<K>::bundle(const TrisectionDiagram& d, const std::vector<int>& images) const {
    const auto p = pi1_presentation(d);
    if (static_cast<int>(images.size()) != p.generators)
        fail("NotAMonodromy", "need one image per generator, got " + std::to_string(images.size()));
    for (int a : images)
        if (a < 0 || a >= group().order()) fail("NotAMonodromy", "image outside the group");
    for (std::size_t k = 0; k < p.relators.size(); ++k)
        if (evaluate(p.relators[k], images, group()) != group().identity())
            fail("NotAMonodromy", "relator " + std::to_string(k) + " does not map to 1");
    return normalized(d, images);
}

template <class K>
std::vector<typename TrisectionInvariant<K>::BundleRow> TrisectionInvariant<K>::bundle_table(
    const TrisectionDiagram& d) const {
    const auto colorings = enumerate_colorings(d, group());
    ensure_zeta();  // cache before fan-out
    std::vector<BundleRow> rows(colorings.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_lock;
    auto work = [&] {
        for (std::size_t k; (k = next++) < colorings.size();) {
            try {
                rows[k] = {colorings[k], normalized(d, colorings[k])};
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_lock);
                if (!error) error = std::current_exception();
            }
        }
    };
    const int n = std::min<int>(parse_thread_count(), static_cast<int>(std::max<std::size_t>(colorings.size(), 1)));
    std::vector<std::thread> pool;
    for (int k = 1; k < n; ++k) pool.emplace_back(work);
    work();
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
    return rows;
}

template <class K>
ZetaPower<K> TrisectionInvariant<K>::bundle_sum(const TrisectionDiagram& d) const {
    ZetaPower<K> sum;
    sum.cube = stabilizer();
    for (const auto& row : bundle_table(d)) sum += row.result.value;
    return sum;
}

// ---- ZetaPower -------------------------------------------------------------------------------

template <class K>
K ZetaPower<K>::scalar() const {
    if (is_scalar()) return power == 0 ? coefficient : Field<K>::zero();
    fail("NoRoot", str() + " has no value in the scalar field");
}

template <class K>
bool ZetaPower<K>::equals(const ZetaPower& o, double tol) const {
    const bool z1 = Field<K>::is_zero(coefficient, tol), z2 = Field<K>::is_zero(o.coefficient, tol);
    if (z1 || z2) return z1 && z2;
    return power == o.power && Field<K>::near(coefficient, o.coefficient, tol);
}

template <class K>
ZetaPower<K>& ZetaPower<K>::operator+=(const ZetaPower& o) {
    if (Field<K>::is_zero(o.coefficient, 0.0)) return *this;
    if (Field<K>::is_zero(coefficient, 0.0)) {
        coefficient = o.coefficient;
        power = o.power;
        cube = o.cube;
        return *this;
    }
    if (power != o.power) fail("NoRoot", "cannot add " + str() + " and " + o.str());
    coefficient += o.coefficient;
    if (Field<K>::is_zero(coefficient, 0.0)) power = 0;
    return *this;
}

template <class K>
std::string ZetaPower<K>::str() const {
    if (power == 0) return Field<K>::str(coefficient);
    return Field<K>::str(coefficient) + "*zeta^-" + std::to_string(power) + " (zeta^3 = " + Field<K>::str(cube) + ")";
}

template <class K>
InvariantResult<K> normalized_invariant(const TrisectionDiagram& d, const Coloring& c, const HopfGTriplet<K>& t,
                                        const IntegralBundle<K>& e, RootBranch branch) {
    return TrisectionInvariant<K>(t, e, branch).normalized(d, c);
}

template <class K>
ZetaPower<K> bundle_sum(const TrisectionDiagram& d, const HopfGTriplet<K>& t, const IntegralBundle<K>& e,
                        RootBranch branch) {
    return TrisectionInvariant<K>(t, e, branch).bundle_sum(d);
}

// ---- Heegaard specializations ------------------------------------------------------------------

template <class K>
DoubletIntegrals<K> solve_doublet_integrals(const HopfGDoublet<K>& p, double tol) {
    DoubletIntegrals<K> e;
    auto a = solve_g_cointegral(p.alg, Side::Right, tol);
    const int one = p.alg.group->identity();
    const K ea = counit_value(p.alg.eps(one), as_vector(a.forms[one], p.alg.leg(one)));
    for (auto& v : a.forms)
        if (!Field<K>::is_zero(ea, tol))
            for (auto& x : v) x /= ea;
    e.alpha = std::move(a.forms);
    e.beta = solve_cointegral(p.co, Side::Right, tol).element;
    return e;
}

template <class K>
K heegaard_virelizier(const HeegaardDiagram& hd, const Coloring& c, const HopfGDoublet<K>& p,
                      const DoubletIntegrals<K>& e) {
    if (!hd.heegaard) fail("InvalidDiagram", "expected a Heegaard diagram");
    const int one = p.alg.group->identity();
    const K norm = compose(otimes(as_vector(e.alpha[one], p.alg.leg(one)), as_vector(e.beta, p.co.leg(one))),
                           p.forms[one])
                       .value();
    if (Field<K>::is_zero(norm, kDefaultTolerance)) fail("DegenerateNormalizer", "<e^alpha, e^beta> = 0");
    BracketSlots<K> s;
    s.alpha = &p.alg;
    s.beta = &p.co;
    s.form_ab = &p.forms;
    s.e_alpha = &e.alpha;
    s.e_beta = &e.beta;
    K value = contract_assignment(assign_network(hd, c, s));
    for (int k = 0; k < hd.genus; ++k) value /= norm;
    return value;
}

template <class K>
K heegaard_kuperberg(const HeegaardDiagram& hd, const HopfGDoublet<K>& p, const DoubletIntegrals<K>& e) {
    if (p.alg.group->order() != 1) fail("InvalidArgument", "the Kuperberg bracket needs the trivial grading group");
    return heegaard_virelizier(hd, Coloring(hd.family_size(Family::Alpha), 0), p, e);
}

#define HT_INSTANTIATE(K)                                                                                        \
    template BracketAssignment<K> assign_network(const TrisectionDiagram&, const Coloring&, const BracketSlots<K>&); \
    template BracketAssignment<K> assign_bracket_network(const TrisectionDiagram&, const Coloring&,              \
                                                         const HopfGTriplet<K>&, const IntegralBundle<K>&);      \
    template K contract_assignment(const BracketAssignment<K>&);                                                 \
    template K trisection_bracket(const TrisectionDiagram&, const Coloring&, const HopfGTriplet<K>&,             \
                                  const IntegralBundle<K>&);                                                     \
    template class TrisectionInvariant<K>;                                                                       \
    template InvariantResult<K> normalized_invariant(const TrisectionDiagram&, const Coloring&,                  \
                                                     const HopfGTriplet<K>&, const IntegralBundle<K>&, RootBranch); \
    template struct ZetaPower<K>;                                                                                \
    template ZetaPower<K> bundle_sum(const TrisectionDiagram&, const HopfGTriplet<K>&, const IntegralBundle<K>&,  \
                                     RootBranch);                                                                \
    template DoubletIntegrals<K> solve_doublet_integrals(const HopfGDoublet<K>&, double);                        \
    template K heegaard_virelizier(const HeegaardDiagram&, const Coloring&, const HopfGDoublet<K>&,              \
                                   const DoubletIntegrals<K>&);                                                  \
    template K heegaard_kuperberg(const HeegaardDiagram&, const HopfGDoublet<K>&, const DoubletIntegrals<K>&);

HT_INSTANTIATE(Rational)
HT_INSTANTIATE(Complex)

#undef HT_INSTANTIATE

}  // namespace ht
