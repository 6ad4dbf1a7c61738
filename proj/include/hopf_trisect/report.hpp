#pragma once

#include <string>
#include <vector>

#include "hopf_trisect/tensor.hpp"

namespace ht {

struct CheckEntry {
    std::string axiom;
    std::vector<int> grading;
    bool pass = true;
    long witness = -1;  // flat index of the first differing entry
    std::string residual;
};

struct Report {
    std::vector<CheckEntry> entries;

    bool ok() const;
    std::size_t failures() const;
    // True iff no entry whose axiom starts with the prefix failed.
    bool ok(const std::string& axiom_prefix) const;
    const CheckEntry* first_failure() const;
    void add(CheckEntry e) { entries.push_back(std::move(e)); }
    void merge(const Report& other, const std::string& prefix = {});
    std::string summary() const;
};

// Records lhs == rhs as one entry; empty comparisons (zero sectors) are skipped.
template <class K>
void expect_equal(Report& r, const std::string& axiom, std::vector<int> grading, const Tensor<K>& lhs,
                  const Tensor<K>& rhs, double tol = kDefaultTolerance);

}  // namespace ht
