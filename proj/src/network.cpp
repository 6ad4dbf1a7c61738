#include "hopf_trisect/network.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <random>
#include <tuple>

#include "hopf_trisect/errors.hpp"

namespace ht {

template <class K>
std::size_t TensorNetwork<K>::add(Tensor<K> t, std::string label) {
    nodes_.push_back(std::move(t));
    labels_.push_back(std::move(label));
    return nodes_.size() - 1;
}

template <class K>
void TensorNetwork<K>::link(LegRef from, LegRef to) {
    edges_.push_back({from, to});
}

template <class K>
void TensorNetwork<K>::validate() const {
    std::vector<std::vector<int>> seen(nodes_.size());
    for (std::size_t n = 0; n < nodes_.size(); ++n) seen[n].assign(nodes_[n].rank(), 0);
    auto touch = [&](const LegRef& r) {
        if (r.node >= nodes_.size() || r.leg >= nodes_[r.node].rank())
            fail("MalformedNetwork", "reference to a missing leg");
        if (seen[r.node][r.leg]++) fail("MalformedNetwork", "leg used twice");
    };
    for (const Edge& e : edges_) {
        touch(e.from);
        touch(e.to);
        const Leg& a = nodes_[e.from.node].leg(e.from.leg);
        const Leg& b = nodes_[e.to.node].leg(e.to.leg);
        if (a.dim != b.dim) fail("DimensionMismatch", describe(a) + " vs " + describe(b));
        if (a.grade != b.grade) fail("GradingMismatch", describe(a) + " vs " + describe(b));
        if (a.space != 0 && b.space != 0 && a.space != b.space)
            fail("GradingMismatch", "space " + describe(a) + " vs " + describe(b));
        if (a.dir != Dir::Out || b.dir != Dir::In)
            fail("GradingMismatch", "edge must run from an out leg to an in leg");
    }
    for (const LegRef& r : open_) touch(r);
    for (std::size_t n = 0; n < nodes_.size(); ++n)
        for (std::size_t l = 0; l < seen[n].size(); ++l)
            if (!seen[n][l]) fail("MalformedNetwork", "dangling leg on node " + std::to_string(n));
}

template <class K>
NetworkShape TensorNetwork<K>::shape() const {
    NetworkShape s;
    s.edges = edges_;
    for (const auto& t : nodes_) {
        std::vector<std::size_t> dims;
        for (const Leg& l : t.legs()) dims.push_back(l.dim);
        s.leg_dims.push_back(std::move(dims));
    }
    return s;
}

namespace {

double dim_of(const NetworkShape& s, const LegRef& r) {
    return static_cast<double>(std::max<std::size_t>(1, s.leg_dims[r.node][r.leg]));
}

// Size bookkeeping over clusters of original nodes.
struct ClusterSizes {
    const NetworkShape& shape;
    std::vector<double> node_total;  // product of all leg dims per node

    explicit ClusterSizes(const NetworkShape& s) : shape(s) {
        for (const auto& dims : s.leg_dims) {
            double v = 1.0;
            for (std::size_t d : dims) v *= static_cast<double>(std::max<std::size_t>(1, d));
            node_total.push_back(v);
        }
    }

    // Free size of a member set given per-node cluster labels.
    double free_size(const std::vector<int>& label, int c) const {
        double v = 1.0;
        for (std::size_t n = 0; n < node_total.size(); ++n)
            if (label[n] == c) v *= node_total[n];
        for (const Edge& e : shape.edges)
            if (label[e.from.node] == c && label[e.to.node] == c) {
                double d = dim_of(shape, e.from);
                v /= d * d;
            }
        return v;
    }
};

}  // namespace

namespace {

// One greedy pass over connected pairs. Without an rng the pair with the
// smallest result wins (ties: fewer flops). With an rng the score is
// result - sa - sb and pairs are drawn with Boltzmann weights, as in
// randomized greedy planners.
ContractionPlan greedy_pass(const NetworkShape& shape, std::mt19937_64* rng, double temperature) {
    const std::size_t n = shape.leg_dims.size();
    ContractionPlan plan;
    if (n < 2) return plan;
    ClusterSizes sizes(shape);
    std::vector<int> label(n);
    std::vector<std::size_t> cluster_id(n);  // plan id of each live cluster
    std::vector<double> cluster_size(n);
    std::vector<char> alive(n, 1);
    for (std::size_t k = 0; k < n; ++k) {
        label[k] = static_cast<int>(k);
        cluster_id[k] = k;
        cluster_size[k] = sizes.free_size(label, static_cast<int>(k));
    }
    std::size_t next_id = n;
    for (std::size_t step = 0; step + 1 < n; ++step) {
        std::map<std::pair<int, int>, double> shared;
        for (const Edge& e : shape.edges) {
            int a = label[e.from.node], b = label[e.to.node];
            if (a == b) continue;
            auto key = std::minmax(a, b);
            auto [it, inserted] = shared.emplace(key, 1.0);
            it->second *= dim_of(shape, e.from);
        }
        int best_a = -1, best_b = -1;
        if (rng && !shared.empty()) {
            std::vector<std::pair<int, int>> keys;
            std::vector<double> score;
            for (const auto& [key, s] : shared) {
                double sa = cluster_size[key.first], sb = cluster_size[key.second];
                keys.push_back(key);
                score.push_back(std::log2(sa * sb / (s * s)) - std::log2(sa + sb));
            }
            const double lo = *std::min_element(score.begin(), score.end());
            std::vector<double> w;
            for (double v : score) w.push_back(std::exp(-(v - lo) / temperature));
            std::discrete_distribution<std::size_t> draw(w.begin(), w.end());
            std::tie(best_a, best_b) = keys[draw(*rng)];
        }
        double best_size = std::numeric_limits<double>::infinity(), best_flops = best_size;
        for (const auto& [key, s] : shared) {
            if (rng) break;
            double sa = cluster_size[key.first], sb = cluster_size[key.second];
            double result = sa * sb / (s * s);
            double flops = sa * sb / s;
            if (result < best_size || (result == best_size && flops < best_flops)) {
                best_size = result;
                best_flops = flops;
                best_a = key.first;
                best_b = key.second;
            }
        }
        if (best_a < 0) {
            // Disconnected remainder: outer product of the two smallest clusters.
            for (std::size_t c = 0; c < n; ++c) {
                if (!alive[c]) continue;
                if (best_a < 0 || cluster_size[c] < cluster_size[best_a]) {
                    best_b = best_a;
                    best_a = static_cast<int>(c);
                } else if (best_b < 0 || cluster_size[c] < cluster_size[best_b]) {
                    best_b = static_cast<int>(c);
                }
            }
            if (best_a > best_b) std::swap(best_a, best_b);
        }
        plan.emplace_back(cluster_id[best_a], cluster_id[best_b]);
        for (std::size_t k = 0; k < n; ++k)
            if (label[k] == best_b) label[k] = best_a;
        alive[best_b] = 0;
        cluster_id[best_a] = next_id++;
        cluster_size[best_a] = sizes.free_size(label, best_a);
    }
    return plan;
}

}  // namespace

ContractionPlan greedy_plan(const NetworkShape& shape) { return greedy_pass(shape, nullptr, 1.0); }

ContractionPlan exhaustive_plan(const NetworkShape& shape) {
    const std::size_t n = shape.leg_dims.size();
    if (n > 16) fail("MalformedNetwork", "exhaustive planning limited to 16 nodes");
    ContractionPlan plan;
    if (n < 2) return plan;
    const std::size_t full = (std::size_t{1} << n) - 1;
    ClusterSizes sizes(shape);
    std::vector<double> free_size(full + 1, 1.0);
    for (std::size_t mask = 1; mask <= full; ++mask) {
        std::vector<int> label(n, -1);
        for (std::size_t k = 0; k < n; ++k)
            if (mask >> k & 1) label[k] = 0;
        free_size[mask] = sizes.free_size(label, 0);
    }
    auto shared = [&](std::size_t a, std::size_t b) {
        double v = 1.0;
        for (const Edge& e : shape.edges) {
            bool x = (a >> e.from.node & 1) && (b >> e.to.node & 1);
            bool y = (b >> e.from.node & 1) && (a >> e.to.node & 1);
            if (x || y) v *= dim_of(shape, e.from);
        }
        return v;
    };
    std::vector<double> best(full + 1, std::numeric_limits<double>::infinity());
    std::vector<std::size_t> split(full + 1, 0);
    for (std::size_t mask = 1; mask <= full; ++mask) {
        if ((mask & (mask - 1)) == 0) {
            best[mask] = 0.0;
            continue;
        }
        for (std::size_t sub = (mask - 1) & mask; sub > 0; sub = (sub - 1) & mask) {
            std::size_t rest = mask ^ sub;
            if (sub > rest) continue;
            double cost = best[sub] + best[rest] + free_size[sub] * free_size[rest] / shared(sub, rest);
            if (cost < best[mask]) {
                best[mask] = cost;
                split[mask] = sub;
            }
        }
    }
    std::size_t next_id = n;
    std::function<std::size_t(std::size_t)> emit = [&](std::size_t mask) -> std::size_t {
        if ((mask & (mask - 1)) == 0) {
            std::size_t k = 0;
            while (!(mask >> k & 1)) ++k;
            return k;
        }
        std::size_t a = emit(split[mask]);
        std::size_t b = emit(mask ^ split[mask]);
        plan.emplace_back(a, b);
        return next_id++;
    };
    emit(full);
    return plan;
}

ContractionPlan plan_contraction(const NetworkShape& shape) {
    if (shape.leg_dims.size() <= 8) return exhaustive_plan(shape);
    // Plain greedy can be exponentially off on surface-shaped networks; keep the
    // cheapest of it and a fixed-seed batch of randomized passes.
    ContractionPlan best = greedy_plan(shape);
    double best_cost = plan_cost(shape, best);
    std::mt19937_64 rng(0x7a1c5eedULL);
    for (int k = 0; k < 32; ++k) {
        ContractionPlan p = greedy_pass(shape, &rng, k < 16 ? 0.5 : 1.5);
        const double c = plan_cost(shape, p);
        if (c < best_cost) {
            best_cost = c;
            best = std::move(p);
        }
    }
    return best;
}

double plan_cost(const NetworkShape& shape, const ContractionPlan& plan) {
    const std::size_t n = shape.leg_dims.size();
    ClusterSizes sizes(shape);
    std::vector<int> label(n);
    for (std::size_t k = 0; k < n; ++k) label[k] = static_cast<int>(k);
    std::vector<int> id_to_label(n + plan.size());
    for (std::size_t k = 0; k < n; ++k) id_to_label[k] = static_cast<int>(k);
    double total = 0.0;
    for (std::size_t s = 0; s < plan.size(); ++s) {
        int a = id_to_label[plan[s].first], b = id_to_label[plan[s].second];
        double sa = sizes.free_size(label, a), sb = sizes.free_size(label, b);
        double sh = 1.0;
        for (const Edge& e : shape.edges) {
            int x = label[e.from.node], y = label[e.to.node];
            if ((x == a && y == b) || (x == b && y == a)) sh *= dim_of(shape, e.from);
        }
        total += sa * sb / sh;
        for (std::size_t k = 0; k < n; ++k)
            if (label[k] == b) label[k] = a;
        id_to_label[n + s] = a;
    }
    return total;
}

std::vector<ContractionPlan> all_plans(std::size_t n) {
    std::vector<ContractionPlan> out;
    ContractionPlan cur;
    std::function<void(std::vector<std::size_t>&, std::size_t)> rec = [&](std::vector<std::size_t>& live,
                                                                          std::size_t next_id) {
        if (live.size() < 2) {
            out.push_back(cur);
            return;
        }
        for (std::size_t i = 0; i < live.size(); ++i)
            for (std::size_t j = i + 1; j < live.size(); ++j) {
                std::vector<std::size_t> nl;
                for (std::size_t k = 0; k < live.size(); ++k)
                    if (k != i && k != j) nl.push_back(live[k]);
                nl.push_back(next_id);
                cur.emplace_back(live[i], live[j]);
                rec(nl, next_id + 1);
                cur.pop_back();
            }
    };
    std::vector<std::size_t> live(n);
    for (std::size_t k = 0; k < n; ++k) live[k] = k;
    rec(live, n);
    return out;
}

namespace {

// Sums over the diagonal of each listed (out, in) leg pair of one tensor.
template <class K>
Tensor<K> self_trace(const Tensor<K>& t, const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
    std::vector<char> traced(t.rank(), 0);
    for (auto [a, b] : pairs) traced[a] = traced[b] = 1;
    std::vector<Leg> legs;
    std::vector<std::size_t> keep;
    for (std::size_t k = 0; k < t.rank(); ++k)
        if (!traced[k]) {
            keep.push_back(k);
            legs.push_back(t.leg(k));
        }
    Tensor<K> out(legs);
    for (std::size_t flat = 0; flat < t.size(); ++flat) {
        auto idx = unflatten(flat, t.legs());
        bool diag = true;
        for (auto [a, b] : pairs) diag = diag && idx[a] == idx[b];
        if (!diag) continue;
        std::vector<std::size_t> o;
        for (std::size_t k : keep) o.push_back(idx[k]);
        out.at(o) += t[flat];
    }
    return out;
}

}  // namespace

template <class K>
Tensor<K> contract(const TensorNetwork<K>& net, const ContractionPlan* plan) {
    net.validate();
    const std::size_t n = net.size();
    if (n == 0) return Tensor<K>::scalar(Field<K>::one());
    std::map<std::pair<std::size_t, std::size_t>, std::pair<std::size_t, std::size_t>> partner;
    for (const Edge& e : net.edges()) {
        partner[{e.from.node, e.from.leg}] = {e.to.node, e.to.leg};
        partner[{e.to.node, e.to.leg}] = {e.from.node, e.from.leg};
    }
    struct Item {
        Tensor<K> t;
        std::vector<std::pair<std::size_t, std::size_t>> origin;
        bool alive = false;
    };
    ContractionPlan own;
    if (!plan) {
        own = plan_contraction(net.shape());
        plan = &own;
    }
    std::vector<Item> items(n + plan->size());
    for (std::size_t k = 0; k < n; ++k) {
        const Tensor<K>& t = net.nodes()[k];
        std::vector<std::pair<std::size_t, std::size_t>> loops;
        for (const Edge& e : net.edges())
            if (e.from.node == k && e.to.node == k) loops.emplace_back(e.from.leg, e.to.leg);
        Item it;
        it.t = loops.empty() ? t : self_trace(t, loops);
        std::vector<char> traced(t.rank(), 0);
        for (auto [a, b] : loops) traced[a] = traced[b] = 1;
        for (std::size_t l = 0; l < t.rank(); ++l)
            if (!traced[l]) it.origin.emplace_back(k, l);
        it.alive = true;
        items[k] = std::move(it);
    }
    std::size_t next = n;
    for (auto [x, y] : *plan) {
        if (x >= next || y >= next || x == y || !items[x].alive || !items[y].alive)
            fail("MalformedNetwork", "contraction plan refers to a consumed or missing node");
        Item& a = items[x];
        Item& b = items[y];
        std::map<std::pair<std::size_t, std::size_t>, std::size_t> pos_b;
        for (std::size_t q = 0; q < b.origin.size(); ++q) pos_b[b.origin[q]] = q;
        std::vector<std::pair<std::size_t, std::size_t>> links;
        std::vector<char> linked_a(a.origin.size(), 0), linked_b(b.origin.size(), 0);
        for (std::size_t p = 0; p < a.origin.size(); ++p) {
            auto it = partner.find(a.origin[p]);
            if (it == partner.end()) continue;
            auto jt = pos_b.find(it->second);
            if (jt == pos_b.end()) continue;
            links.emplace_back(p, jt->second);
            linked_a[p] = 1;
            linked_b[jt->second] = 1;
        }
        Item merged;
        merged.t = contract_pair(a.t, b.t, links);
        for (std::size_t p = 0; p < a.origin.size(); ++p)
            if (!linked_a[p]) merged.origin.push_back(a.origin[p]);
        for (std::size_t q = 0; q < b.origin.size(); ++q)
            if (!linked_b[q]) merged.origin.push_back(b.origin[q]);
        merged.alive = true;
        a.alive = b.alive = false;
        a.t = Tensor<K>();
        b.t = Tensor<K>();
        items[next++] = std::move(merged);
    }
    std::size_t live = 0, last = 0;
    for (std::size_t k = 0; k < next; ++k)
        if (items[k].alive) {
            ++live;
            last = k;
        }
    if (live != 1) fail("MalformedNetwork", "contraction plan leaves " + std::to_string(live) + " pieces");
    Item& fin = items[last];
    std::vector<std::size_t> perm;
    for (const LegRef& r : net.open()) {
        auto it = std::find(fin.origin.begin(), fin.origin.end(), std::make_pair(r.node, r.leg));
        perm.push_back(static_cast<std::size_t>(it - fin.origin.begin()));
    }
    return permute(fin.t, perm);
}

template class TensorNetwork<Rational>;
template class TensorNetwork<Complex>;
template Tensor<Rational> contract(const TensorNetwork<Rational>&, const ContractionPlan*);
template Tensor<Complex> contract(const TensorNetwork<Complex>&, const ContractionPlan*);

}  // namespace ht
