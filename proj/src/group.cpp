#include "hopf_trisect/group.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <sstream>

#include "hopf_trisect/errors.hpp"

namespace ht {

FiniteGroup FiniteGroup::from_cayley(const std::vector<std::vector<int>>& table,
                                     std::vector<std::string> names) {
    const int n = static_cast<int>(table.size());
    if (n == 0) fail("NotAGroup", "empty table");
    FiniteGroup g;
    g.order_ = n;
    g.cayley_.resize(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a) {
        if (static_cast<int>(table[a].size()) != n) fail("NotAGroup", "table is not square");
        for (int b = 0; b < n; ++b) {
            int v = table[a][b];
            if (v < 0 || v >= n) fail("NotAGroup", "entry out of range");
            g.cayley_[static_cast<std::size_t>(a) * n + b] = v;
        }
    }
    int e = -1;
    for (int a = 0; a < n && e < 0; ++a) {
        bool ok = true;
        for (int b = 0; b < n && ok; ++b) ok = g.mul(a, b) == b && g.mul(b, a) == b;
        if (ok) e = a;
    }
    if (e < 0) fail("NotAGroup", "no identity element");
    g.identity_ = e;
    g.inverse_.assign(n, -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b)
            if (g.mul(a, b) == e && g.mul(b, a) == e) g.inverse_[a] = b;
        if (g.inverse_[a] < 0) fail("NotAGroup", "element " + std::to_string(a) + " has no inverse");
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))) {
                    std::ostringstream os;
                    os << "associativity fails at (" << a << "," << b << "," << c << ")";
                    fail("NotAGroup", os.str());
                }
    if (names.empty()) {
        names.resize(n);
        for (int a = 0; a < n; ++a) names[a] = std::to_string(a);
    }
    if (static_cast<int>(names.size()) != n) fail("NotAGroup", "name count differs from order");
    g.names_ = std::move(names);
    return g;
}

FiniteGroup FiniteGroup::trivial() { return from_cayley({{0}}, {"1"}); }

FiniteGroup FiniteGroup::cyclic(int n) {
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    std::vector<std::string> names(n);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
        names[a] = a == 0 ? "1" : (a == 1 ? "t" : "t" + std::to_string(a));
    }
    return from_cayley(t, names);
}

FiniteGroup FiniteGroup::dihedral(int n) {
    // (s^a r^b)(s^c r^d) = s^{a+c} r^{(-1)^c b + d}
    const int m = 2 * n;
    std::vector<std::vector<int>> t(m, std::vector<int>(m));
    std::vector<std::string> names(m);
    for (int x = 0; x < m; ++x) {
        int a = x / n, b = x % n;
        std::string rp = b == 0 ? "" : (b == 1 ? "r" : "r" + std::to_string(b));
        names[x] = a == 0 ? (b == 0 ? "1" : rp) : "s" + rp;
        for (int y = 0; y < m; ++y) {
            int c = y / n, d = y % n;
            int rb = ((c == 0 ? b : -b) + d) % n;
            if (rb < 0) rb += n;
            t[x][y] = ((a + c) % 2) * n + rb;
        }
    }
    return from_cayley(t, names);
}

FiniteGroup FiniteGroup::symmetric(int n) {
    std::vector<std::vector<int>> perms;
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    const int m = static_cast<int>(perms.size());
    auto index_of = [&](const std::vector<int>& q) {
        return static_cast<int>(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
    };
    std::vector<std::vector<int>> t(m, std::vector<int>(m));
    std::vector<std::string> names(m);
    for (int x = 0; x < m; ++x) {
        std::string s;
        for (int v : perms[x]) s += std::to_string(v + 1);
        names[x] = x == 0 ? "1" : s;
        for (int y = 0; y < m; ++y) {
            // (xy)(i) = x(y(i))
            std::vector<int> q(n);
            for (int i = 0; i < n; ++i) q[i] = perms[x][perms[y][i]];
            t[x][y] = index_of(q);
        }
    }
    return from_cayley(t, names);
}

int FiniteGroup::power(int a, long e) const {
    if (e < 0) {
        a = inv(a);
        e = -e;
    }
    int r = identity_;
    for (long k = 0; k < e; ++k) r = mul(r, a);
    return r;
}

int FiniteGroup::element_order(int a) const {
    int k = 1;
    for (int x = a; x != identity_; x = mul(x, a)) ++k;
    return k;
}

bool FiniteGroup::is_abelian() const {
    for (int a = 0; a < order_; ++a)
        for (int b = 0; b < order_; ++b)
            if (mul(a, b) != mul(b, a)) return false;
    return true;
}

bool FiniteGroup::is_central(int a) const {
    for (int b = 0; b < order_; ++b)
        if (mul(a, b) != mul(b, a)) return false;
    return true;
}

int FiniteGroup::find(const std::string& name) const {
    for (int a = 0; a < order_; ++a)
        if (names_[a] == name) return a;
    return -1;
}

std::vector<std::vector<int>> FiniteGroup::table() const {
    std::vector<std::vector<int>> t(order_, std::vector<int>(order_));
    for (int a = 0; a < order_; ++a)
        for (int b = 0; b < order_; ++b) t[a][b] = mul(a, b);
    return t;
}

GroupHom GroupHom::from_map(GroupPtr source, GroupPtr target, std::vector<int> images) {
    if (static_cast<int>(images.size()) != source->order()) fail("NotAHom", "image list length differs from source order");
    for (int v : images)
        if (v < 0 || v >= target->order()) fail("NotAHom", "image index out of range");
    for (int x = 0; x < source->order(); ++x)
        for (int y = 0; y < source->order(); ++y)
            if (images[source->mul(x, y)] != target->mul(images[x], images[y])) {
                std::ostringstream os;
                os << "f(" << x << "*" << y << ") != f(" << x << ")*f(" << y << ")";
                fail("NotAHom", os.str());
            }
    GroupHom f;
    f.source_ = std::move(source);
    f.target_ = std::move(target);
    f.images_ = std::move(images);
    return f;
}

GroupHom GroupHom::from_generators(GroupPtr source, GroupPtr target,
                                   const std::vector<std::pair<int, int>>& gens) {
    std::vector<int> images(source->order(), -1);
    images[source->identity()] = target->identity();
    std::queue<int> todo;
    todo.push(source->identity());
    while (!todo.empty()) {
        int x = todo.front();
        todo.pop();
        for (auto [g, img] : gens) {
            int y = source->mul(x, g);
            int v = target->mul(images[x], img);
            if (images[y] < 0) {
                images[y] = v;
                todo.push(y);
            } else if (images[y] != v) {
                fail("NotAHom", "generator images violate a relation at element " + std::to_string(y));
            }
        }
    }
    if (std::find(images.begin(), images.end(), -1) != images.end())
        fail("NotAHom", "generators do not generate the source");
    return from_map(std::move(source), std::move(target), std::move(images));
}

GroupHom GroupHom::identity(GroupPtr g) {
    std::vector<int> images(g->order());
    std::iota(images.begin(), images.end(), 0);
    return from_map(g, g, std::move(images));
}

GroupHom GroupHom::trivial(GroupPtr source, GroupPtr target) {
    std::vector<int> images(source->order(), target->identity());
    return from_map(std::move(source), std::move(target), std::move(images));
}

std::vector<int> GroupHom::preimage(int alpha) const {
    std::vector<int> out;
    for (int x = 0; x < source_->order(); ++x)
        if (images_[x] == alpha) out.push_back(x);
    return out;
}

std::vector<int> GroupHom::image() const {
    std::vector<int> out(images_);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

GroupHom GroupHom::then(const GroupHom& next) const {
    if (!(*target_ == *next.source_)) fail("NotAHom", "composition of incompatible homomorphisms");
    std::vector<int> images(images_.size());
    for (std::size_t x = 0; x < images_.size(); ++x) images[x] = next(images_[x]);
    return from_map(source_, next.target_, std::move(images));
}

}  // namespace ht
