#include "hopf_trisect/tensor.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <sstream>

#include "hopf_trisect/errors.hpp"

namespace ht {

int new_space_id() {
    static std::atomic<int> next{1};
    return next.fetch_add(1);
}

std::string describe(const Leg& leg) {
    std::ostringstream os;
    os << (leg.dir == Dir::In ? "in" : "out") << "(space " << leg.space << ", grade " << leg.grade
       << ", dim " << leg.dim << ")";
    return os.str();
}

std::vector<std::size_t> unflatten(std::size_t flat, const std::vector<Leg>& legs) {
    std::vector<std::size_t> idx(legs.size());
    for (std::size_t k = legs.size(); k-- > 0;) {
        idx[k] = flat % legs[k].dim;
        flat /= legs[k].dim;
    }
    return idx;
}

namespace {

std::size_t volume(const std::vector<Leg>& legs) {
    std::size_t n = 1;
    for (const Leg& l : legs) n *= l.dim;
    return n;
}

}  // namespace

template <class K>
Tensor<K>::Tensor(std::vector<Leg> legs) : legs_(std::move(legs)), data_(volume(legs_), Field<K>::zero()) {}

template <class K>
std::vector<std::size_t> Tensor<K>::strides() const {
    std::vector<std::size_t> s(legs_.size());
    std::size_t acc = 1;
    for (std::size_t k = legs_.size(); k-- > 0;) {
        s[k] = acc;
        acc *= legs_[k].dim;
    }
    return s;
}

template <class K>
std::size_t Tensor<K>::offset(const std::vector<std::size_t>& idx) const {
    std::size_t off = 0;
    for (std::size_t k = 0; k < legs_.size(); ++k) off = off * legs_[k].dim + idx[k];
    return off;
}

template <class K>
std::size_t Tensor<K>::num_in() const {
    return static_cast<std::size_t>(
        std::count_if(legs_.begin(), legs_.end(), [](const Leg& l) { return l.dir == Dir::In; }));
}

template <class K>
bool Tensor<K>::is_map_layout() const {
    std::size_t n = num_in();
    for (std::size_t k = 0; k < legs_.size(); ++k)
        if ((k < n) != (legs_[k].dir == Dir::In)) return false;
    return true;
}

template <class K>
std::vector<Leg> Tensor<K>::in_legs() const {
    std::vector<Leg> v;
    for (const Leg& l : legs_)
        if (l.dir == Dir::In) v.push_back(l);
    return v;
}

template <class K>
std::vector<Leg> Tensor<K>::out_legs() const {
    std::vector<Leg> v;
    for (const Leg& l : legs_)
        if (l.dir == Dir::Out) v.push_back(l);
    return v;
}

template <class K>
void Tensor<K>::set_leg(std::size_t i, const Leg& l) {
    if (l.dim != legs_[i].dim) fail("DimensionMismatch", "relabel cannot change a dimension");
    legs_[i] = l;
}

template <class K>
void Tensor<K>::relabel_space(int from, int to) {
    for (Leg& l : legs_)
        if (l.space == from) l.space = to;
}

template <class K>
Tensor<K> permute(const Tensor<K>& t, const std::vector<std::size_t>& perm) {
    const std::size_t r = t.rank();
    if (perm.size() != r) fail("DimensionMismatch", "permutation length differs from rank");
    std::vector<Leg> legs(r);
    for (std::size_t k = 0; k < r; ++k) legs[k] = t.leg(perm[k]);
    Tensor<K> out(legs);
    if (out.size() == 0) return out;
    const auto src_strides = t.strides();
    std::vector<std::size_t> stride(r);
    for (std::size_t k = 0; k < r; ++k) stride[k] = src_strides[perm[k]];
    std::vector<std::size_t> idx(r, 0);
    std::size_t src = 0;
    for (std::size_t flat = 0; flat < out.size(); ++flat) {
        out[flat] = t[src];
        for (std::size_t k = r; k-- > 0;) {
            if (++idx[k] < legs[k].dim) {
                src += stride[k];
                break;
            }
            src -= stride[k] * (legs[k].dim - 1);
            idx[k] = 0;
        }
    }
    return out;
}

template <class K>
Tensor<K> contract_pair(const Tensor<K>& a, const Tensor<K>& b,
                        const std::vector<std::pair<std::size_t, std::size_t>>& links) {
    std::vector<char> used_a(a.rank(), 0), used_b(b.rank(), 0);
    for (auto [la, lb] : links) {
        if (la >= a.rank() || lb >= b.rank()) fail("DimensionMismatch", "link refers to a missing leg");
        if (used_a[la] || used_b[lb]) fail("DimensionMismatch", "leg linked twice");
        used_a[la] = used_b[lb] = 1;
        const Leg& x = a.leg(la);
        const Leg& y = b.leg(lb);
        if (x.dim != y.dim) fail("DimensionMismatch", describe(x) + " vs " + describe(y));
        if (x.grade != y.grade) fail("GradingMismatch", describe(x) + " vs " + describe(y));
        if (x.space != 0 && y.space != 0 && x.space != y.space)
            fail("GradingMismatch", "space " + describe(x) + " vs " + describe(y));
        if (x.dir == y.dir) fail("GradingMismatch", "direction " + describe(x) + " vs " + describe(y));
    }
    std::vector<std::size_t> pa, pb;
    std::vector<Leg> result_legs;
    for (std::size_t k = 0; k < a.rank(); ++k)
        if (!used_a[k]) {
            pa.push_back(k);
            result_legs.push_back(a.leg(k));
        }
    std::size_t k_dim = 1;
    for (auto [la, lb] : links) {
        pa.push_back(la);
        pb.push_back(lb);
        k_dim *= a.leg(la).dim;
    }
    for (std::size_t k = 0; k < b.rank(); ++k)
        if (!used_b[k]) {
            pb.push_back(k);
            result_legs.push_back(b.leg(k));
        }
    Tensor<K> out(result_legs);
    if (out.size() == 0 || k_dim == 0) return out;
    const Tensor<K> ap = permute(a, pa);
    const Tensor<K> bp = permute(b, pb);
    const std::size_t m = ap.size() / k_dim;
    const std::size_t n = bp.size() / k_dim;
    // Structure tensors are sparse; skip zero factors on both sides.
    std::vector<std::size_t> nz;
    for (std::size_t kk = 0; kk < k_dim; ++kk) {
        nz.clear();
        for (std::size_t j = 0; j < n; ++j)
            if (!Field<K>::is_zero(bp[kk * n + j], 0.0)) nz.push_back(j);
        if (nz.empty()) continue;
        for (std::size_t i = 0; i < m; ++i) {
            const K& x = ap[i * k_dim + kk];
            if (Field<K>::is_zero(x, 0.0)) continue;
            for (std::size_t j : nz) out[i * n + j] += x * bp[kk * n + j];
        }
    }
    return out;
}

template <class K>
Tensor<K> identity_map(const Leg& leg) {
    Leg i = leg, o = leg;
    i.dir = Dir::In;
    o.dir = Dir::Out;
    Tensor<K> t({i, o});
    for (std::size_t k = 0; k < leg.dim; ++k) t.at({k, k}) = Field<K>::one();
    return t;
}

template <class K>
Tensor<K> swap_map(const Leg& first, const Leg& second) {
    Leg i1 = first, i2 = second, o1 = second, o2 = first;
    i1.dir = i2.dir = Dir::In;
    o1.dir = o2.dir = Dir::Out;
    Tensor<K> t({i1, i2, o1, o2});
    for (std::size_t x = 0; x < first.dim; ++x)
        for (std::size_t y = 0; y < second.dim; ++y) t.at({x, y, y, x}) = Field<K>::one();
    return t;
}

template <class K>
Tensor<K> compose(const Tensor<K>& f, const Tensor<K>& g) {
    const std::size_t fi = f.num_in(), fo = f.num_out();
    if (fo != g.num_in()) fail("DimensionMismatch", "composition arity mismatch");
    std::vector<std::pair<std::size_t, std::size_t>> links;
    for (std::size_t k = 0; k < fo; ++k) links.emplace_back(fi + k, k);
    return contract_pair(f, g, links);
}

template <class K>
Tensor<K> otimes(const Tensor<K>& f, const Tensor<K>& g) {
    const std::size_t fi = f.num_in(), fo = f.num_out(), gi = g.num_in(), go = g.num_out();
    Tensor<K> t = contract_pair(f, g, {});
    std::vector<std::size_t> perm;
    for (std::size_t k = 0; k < fi; ++k) perm.push_back(k);
    for (std::size_t k = 0; k < gi; ++k) perm.push_back(fi + fo + k);
    for (std::size_t k = 0; k < fo; ++k) perm.push_back(fi + k);
    for (std::size_t k = 0; k < go; ++k) perm.push_back(fi + fo + gi + k);
    return permute(t, perm);
}

template <class K>
Tensor<K> permute_outputs(const Tensor<K>& f, const std::vector<std::size_t>& perm) {
    const std::size_t fi = f.num_in();
    std::vector<std::size_t> p(fi);
    std::iota(p.begin(), p.end(), 0);
    for (std::size_t k : perm) p.push_back(fi + k);
    return permute(f, p);
}

template <class K>
Tensor<K> permute_inputs(const Tensor<K>& f, const std::vector<std::size_t>& perm) {
    const std::size_t fi = f.num_in();
    std::vector<std::size_t> p(perm.begin(), perm.end());
    for (std::size_t k = fi; k < f.rank(); ++k) p.push_back(k);
    return permute(f, p);
}

template <class K>
Tensor<K> transpose_map(const Tensor<K>& f, int old_space, int new_space) {
    const std::size_t fi = f.num_in();
    std::vector<std::size_t> perm;
    for (std::size_t k = fi; k < f.rank(); ++k) perm.push_back(k);
    for (std::size_t k = 0; k < fi; ++k) perm.push_back(k);
    Tensor<K> t = permute(f, perm);
    for (std::size_t k = 0; k < t.rank(); ++k) {
        Leg l = t.leg(k);
        l.dir = opposite(l.dir);
        if (l.space == old_space) l.space = new_space;
        t.set_leg(k, l);
    }
    return t;
}

template <class K>
Tensor<K> inverse_map(const Tensor<K>& f, double tol) {
    if (f.num_in() != 1 || f.num_out() != 1 || !f.is_map_layout())
        fail("DimensionMismatch", "inverse needs a (1,1) map");
    const std::size_t d = f.leg(0).dim;
    if (f.leg(1).dim != d) fail("DimensionMismatch", "inverse of a non-square map");
    // a[row=out][col=in] augmented with identity.
    std::vector<std::vector<K>> a(d, std::vector<K>(2 * d, Field<K>::zero()));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) a[j][i] = f.at({i, j});
    for (std::size_t j = 0; j < d; ++j) a[j][d + j] = Field<K>::one();
    for (std::size_t c = 0; c < d; ++c) {
        std::size_t piv = c;
        double best = -1.0;
        for (std::size_t r = c; r < d; ++r) {
            double m = Field<K>::magnitude(a[r][c]);
            if (Field<K>::exact ? !Field<K>::is_zero(a[r][c]) : m > best) {
                best = m;
                piv = r;
                if (Field<K>::exact) break;
            }
        }
        if (Field<K>::is_zero(a[piv][c], tol)) fail("SingularMap", "map is not invertible");
        std::swap(a[piv], a[c]);
        K inv = Field<K>::inverse(a[c][c]);
        for (auto& v : a[c]) v *= inv;
        for (std::size_t r = 0; r < d; ++r) {
            if (r == c || Field<K>::is_zero(a[r][c], 0.0)) continue;
            K factor = a[r][c];
            for (std::size_t k = 0; k < 2 * d; ++k) a[r][k] -= factor * a[c][k];
        }
    }
    Leg in = f.leg(1), out = f.leg(0);
    in.dir = Dir::In;
    out.dir = Dir::Out;
    Tensor<K> g({in, out});
    // g(e_j) = sum_i B[i][j] e_i where B = A^{-1}.
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t i = 0; i < d; ++i) g.at({j, i}) = a[i][d + j];
    return g;
}

template <class K>
Tensor<K> scaled(const Tensor<K>& t, const K& c) {
    Tensor<K> out = t;
    for (auto& v : out.data()) v *= c;
    return out;
}

template <class K>
Tensor<K> added(const Tensor<K>& a, const Tensor<K>& b, const K& cb) {
    if (a.legs() != b.legs()) fail("DimensionMismatch", "sum of tensors with different legs");
    Tensor<K> out = a;
    for (std::size_t k = 0; k < out.size(); ++k) out[k] += cb * b[k];
    return out;
}

template <class K>
double max_abs_entry(const Tensor<K>& t) {
    double m = 0.0;
    for (const K& v : t.data()) m = std::max(m, Field<K>::magnitude(v));
    return m;
}

template <class K>
long first_difference(const Tensor<K>& a, const Tensor<K>& b, double tol) {
    if (a.rank() != b.rank()) return -2;
    for (std::size_t k = 0; k < a.rank(); ++k) {
        const Leg& x = a.leg(k);
        const Leg& y = b.leg(k);
        if (x.dim != y.dim || x.grade != y.grade || x.dir != y.dir) return -2;
        if (x.space != 0 && y.space != 0 && x.space != y.space) return -2;
    }
    if constexpr (Field<K>::exact) {
        for (std::size_t k = 0; k < a.size(); ++k)
            if (a[k] != b[k]) return static_cast<long>(k);
    } else {
        const double scale = 1.0 + std::max(max_abs_entry(a), max_abs_entry(b));
        for (std::size_t k = 0; k < a.size(); ++k)
            if (std::abs(a[k] - b[k]) > tol * scale) return static_cast<long>(k);
    }
    return -1;
}

template <class K>
bool tensors_equal(const Tensor<K>& a, const Tensor<K>& b, double tol) {
    return first_difference(a, b, tol) == -1;
}

std::string Field<Complex>::str(const Complex& a) {
    std::ostringstream os;
    os.precision(12);
    double re = std::abs(a.real()) < 1e-15 ? 0.0 : a.real();
    double im = std::abs(a.imag()) < 1e-15 ? 0.0 : a.imag();
    if (im == 0.0) {
        os << re;
    } else {
        os << re << (im < 0 ? "-" : "+") << std::abs(im) << "i";
    }
    return os.str();
}

#define HT_INSTANTIATE(K)                                                                             \
    template class Tensor<K>;                                                                         \
    template Tensor<K> permute(const Tensor<K>&, const std::vector<std::size_t>&);                    \
    template Tensor<K> contract_pair(const Tensor<K>&, const Tensor<K>&,                              \
                                     const std::vector<std::pair<std::size_t, std::size_t>>&);        \
    template Tensor<K> identity_map<K>(const Leg&);                                                   \
    template Tensor<K> swap_map<K>(const Leg&, const Leg&);                                           \
    template Tensor<K> compose(const Tensor<K>&, const Tensor<K>&);                                   \
    template Tensor<K> otimes(const Tensor<K>&, const Tensor<K>&);                                    \
    template Tensor<K> permute_outputs(const Tensor<K>&, const std::vector<std::size_t>&);            \
    template Tensor<K> permute_inputs(const Tensor<K>&, const std::vector<std::size_t>&);             \
    template Tensor<K> transpose_map(const Tensor<K>&, int, int);                                     \
    template Tensor<K> inverse_map(const Tensor<K>&, double);                                         \
    template Tensor<K> scaled(const Tensor<K>&, const K&);                                            \
    template Tensor<K> added(const Tensor<K>&, const Tensor<K>&, const K&);                           \
    template bool tensors_equal(const Tensor<K>&, const Tensor<K>&, double);                          \
    template long first_difference(const Tensor<K>&, const Tensor<K>&, double);                       \
    template double max_abs_entry(const Tensor<K>&);

HT_INSTANTIATE(Rational)
HT_INSTANTIATE(Complex)

#undef HT_INSTANTIATE

}  // namespace ht
