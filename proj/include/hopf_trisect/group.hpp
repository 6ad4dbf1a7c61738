#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace ht {

// Finite group as a validated Cayley table over canonical indices 0..order-1.
class FiniteGroup {
public:
    static FiniteGroup from_cayley(const std::vector<std::vector<int>>& table,
                                   std::vector<std::string> names = {});

    static FiniteGroup trivial();
    static FiniteGroup cyclic(int n);
    // Order 2n, element s^a r^b stored at index a*n + b.
    static FiniteGroup dihedral(int n);
    static FiniteGroup symmetric(int n);

    int order() const { return order_; }
    int identity() const { return identity_; }
    int mul(int a, int b) const { return cayley_[static_cast<std::size_t>(a) * order_ + b]; }
    int inv(int a) const { return inverse_[a]; }
    int conj(int h, int a) const { return mul(mul(h, a), inv(h)); }
    int power(int a, long e) const;
    int element_order(int a) const;
    bool is_abelian() const;
    bool is_central(int a) const;

    const std::string& name(int a) const { return names_[a]; }
    const std::vector<std::string>& names() const { return names_; }
    // Index of a named element, or -1.
    int find(const std::string& name) const;
    std::vector<std::vector<int>> table() const;

    bool operator==(const FiniteGroup& o) const { return order_ == o.order_ && cayley_ == o.cayley_; }

private:
    int order_ = 0;
    int identity_ = 0;
    std::vector<int> cayley_;
    std::vector<int> inverse_;
    std::vector<std::string> names_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

inline GroupPtr share(FiniteGroup g) { return std::make_shared<const FiniteGroup>(std::move(g)); }

class GroupHom {
public:
    static GroupHom from_map(GroupPtr source, GroupPtr target, std::vector<int> images);
    // Extends generator images along the Cayley graph; validates the result.
    static GroupHom from_generators(GroupPtr source, GroupPtr target,
                                    const std::vector<std::pair<int, int>>& gens);
    static GroupHom identity(GroupPtr g);
    static GroupHom trivial(GroupPtr source, GroupPtr target);

    const GroupPtr& source() const { return source_; }
    const GroupPtr& target() const { return target_; }
    int operator()(int x) const { return images_[x]; }
    const std::vector<int>& images() const { return images_; }

    std::vector<int> preimage(int alpha) const;
    std::vector<int> kernel() const { return preimage(target_->identity()); }
    std::vector<int> image() const;
    GroupHom then(const GroupHom& next) const;

    bool operator==(const GroupHom& o) const { return images_ == o.images_; }

private:
    GroupPtr source_;
    GroupPtr target_;
    std::vector<int> images_;
};

}  // namespace ht
