#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hopf_trisect/scalar.hpp"

namespace ht {

enum class Dir : std::uint8_t { In, Out };

inline Dir opposite(Dir d) { return d == Dir::In ? Dir::Out : Dir::In; }

// Leg label: which structure family the vector space belongs to, its group
// grading, and whether the tensor consumes (In) or produces (Out) it.
// Space 0 is a wildcard that matches any space.
struct Leg {
    int space = 0;
    int grade = 0;
    Dir dir = Dir::In;
    std::size_t dim = 0;

    bool operator==(const Leg& o) const {
        return space == o.space && grade == o.grade && dir == o.dir && dim == o.dim;
    }
    bool operator!=(const Leg& o) const { return !(*this == o); }
};

inline Leg in_leg(int space, int grade, std::size_t dim) { return {space, grade, Dir::In, dim}; }
inline Leg out_leg(int space, int grade, std::size_t dim) { return {space, grade, Dir::Out, dim}; }

// Fresh nonzero id for a newly constructed structure family.
int new_space_id();

std::string describe(const Leg& leg);

// Dense row-major multi-array, last leg fastest. Rank 0 holds one scalar.
template <class K>
class Tensor {
public:
    Tensor() : data_(1, Field<K>::zero()) {}
    explicit Tensor(std::vector<Leg> legs);

    static Tensor scalar(const K& v) {
        Tensor t;
        t.data_[0] = v;
        return t;
    }

    const std::vector<Leg>& legs() const { return legs_; }
    const Leg& leg(std::size_t i) const { return legs_[i]; }
    std::size_t rank() const { return legs_.size(); }
    std::size_t size() const { return data_.size(); }
    std::vector<K>& data() { return data_; }
    const std::vector<K>& data() const { return data_; }
    K& operator[](std::size_t i) { return data_[i]; }
    const K& operator[](std::size_t i) const { return data_[i]; }

    std::size_t offset(const std::vector<std::size_t>& idx) const;
    K& at(const std::vector<std::size_t>& idx) { return data_[offset(idx)]; }
    const K& at(const std::vector<std::size_t>& idx) const { return data_[offset(idx)]; }
    std::vector<std::size_t> strides() const;

    // Canonical map layout: every In leg precedes every Out leg.
    std::size_t num_in() const;
    std::size_t num_out() const { return rank() - num_in(); }
    bool is_map_layout() const;
    std::vector<Leg> in_legs() const;
    std::vector<Leg> out_legs() const;

    // Relabels metadata without touching entries.
    void set_leg(std::size_t i, const Leg& l);
    void relabel_space(int from, int to);

    K value() const { return data_[0]; }

private:
    std::vector<Leg> legs_;
    std::vector<K> data_;
};

// Reorders legs: result leg k is input leg perm[k].
template <class K>
Tensor<K> permute(const Tensor<K>& t, const std::vector<std::size_t>& perm);

// Contracts listed (leg of a, leg of b) pairs. Result legs: free legs of a in
// order, then free legs of b in order. Linked legs must have equal dim and
// grade, compatible space, and opposite direction.
template <class K>
Tensor<K> contract_pair(const Tensor<K>& a, const Tensor<K>& b,
                        const std::vector<std::pair<std::size_t, std::size_t>>& links);

// Linear-map algebra on canonical layout tensors.
template <class K>
Tensor<K> identity_map(const Leg& leg);
template <class K>
Tensor<K> swap_map(const Leg& first, const Leg& second);
// g after f: outputs of f feed inputs of g, in order.
template <class K>
Tensor<K> compose(const Tensor<K>& f, const Tensor<K>& g);
// f ⊗ g: inputs (f..., g...), outputs (f..., g...).
template <class K>
Tensor<K> otimes(const Tensor<K>& f, const Tensor<K>& g);
// Reorders outputs (result output k = output perm[k]); inputs untouched.
template <class K>
Tensor<K> permute_outputs(const Tensor<K>& f, const std::vector<std::size_t>& perm);
template <class K>
Tensor<K> permute_inputs(const Tensor<K>& f, const std::vector<std::size_t>& perm);
// Transpose: every leg flips direction; old outputs become inputs, relabelled
// to the dual space id.
template <class K>
Tensor<K> transpose_map(const Tensor<K>& f, int old_space, int new_space);
// Inverse of a square (1,1) map; throws when singular.
template <class K>
Tensor<K> inverse_map(const Tensor<K>& f, double tol = kDefaultTolerance);

template <class K>
Tensor<K> scaled(const Tensor<K>& t, const K& c);
template <class K>
Tensor<K> added(const Tensor<K>& a, const Tensor<K>& b, const K& cb = Field<K>::one());

// Entrywise comparison; exact for Rational, scale-aware tolerance for Complex.
template <class K>
bool tensors_equal(const Tensor<K>& a, const Tensor<K>& b, double tol = kDefaultTolerance);
// First differing flat index or -1; metadata mismatch reports -2.
template <class K>
long first_difference(const Tensor<K>& a, const Tensor<K>& b, double tol = kDefaultTolerance);
template <class K>
double max_abs_entry(const Tensor<K>& t);

std::vector<std::size_t> unflatten(std::size_t flat, const std::vector<Leg>& legs);

}  // namespace ht
