#include "hopf_trisect/report.hpp"

#include <map>
#include <sstream>

namespace ht {

bool Report::ok() const { return failures() == 0; }

std::size_t Report::failures() const {
    std::size_t n = 0;
    for (const auto& e : entries) n += e.pass ? 0 : 1;
    return n;
}

bool Report::ok(const std::string& axiom_prefix) const {
    for (const auto& e : entries)
        if (!e.pass && e.axiom.rfind(axiom_prefix, 0) == 0) return false;
    return true;
}

const CheckEntry* Report::first_failure() const {
    for (const auto& e : entries)
        if (!e.pass) return &e;
    return nullptr;
}

void Report::merge(const Report& other, const std::string& prefix) {
    for (CheckEntry e : other.entries) {
        e.axiom = prefix + e.axiom;
        entries.push_back(std::move(e));
    }
}

std::string Report::summary() const {
    // Per axiom: checked count and failure count, in first-seen order.
    std::vector<std::string> order;
    std::map<std::string, std::pair<std::size_t, std::size_t>> tally;
    std::map<std::string, const CheckEntry*> first_bad;
    for (const auto& e : entries) {
        if (!tally.count(e.axiom)) order.push_back(e.axiom);
        auto& t = tally[e.axiom];
        ++t.first;
        if (!e.pass) {
            ++t.second;
            if (!first_bad.count(e.axiom)) first_bad[e.axiom] = &e;
        }
    }
    std::ostringstream os;
    for (const auto& a : order) {
        const auto& t = tally[a];
        os << (t.second == 0 ? "PASS " : "FAIL ") << a << "  (" << t.first << " checked";
        if (t.second) {
            const CheckEntry* b = first_bad[a];
            os << ", " << t.second << " failed; first at grading [";
            for (std::size_t k = 0; k < b->grading.size(); ++k) os << (k ? "," : "") << b->grading[k];
            os << "] index " << b->witness;
            if (!b->residual.empty()) os << ": " << b->residual;
        }
        os << ")\n";
    }
    return os.str();
}

template <class K>
void expect_equal(Report& r, const std::string& axiom, std::vector<int> grading, const Tensor<K>& lhs,
                  const Tensor<K>& rhs, double tol) {
    if (lhs.size() == 0 && rhs.size() == 0 && lhs.rank() == rhs.rank()) return;
    CheckEntry e;
    e.axiom = axiom;
    e.grading = std::move(grading);
    long d = first_difference(lhs, rhs, tol);
    e.pass = d == -1;
    e.witness = d;
    if (d == -2) {
        e.residual = "leg shapes differ";
    } else if (d >= 0) {
        e.residual = "lhs " + Field<K>::str(lhs[d]) + " vs rhs " + Field<K>::str(rhs[d]);
    }
    r.add(std::move(e));
}

template void expect_equal(Report&, const std::string&, std::vector<int>, const Tensor<Rational>&,
                           const Tensor<Rational>&, double);
template void expect_equal(Report&, const std::string&, std::vector<int>, const Tensor<Complex>&,
                           const Tensor<Complex>&, double);

}  // namespace ht
