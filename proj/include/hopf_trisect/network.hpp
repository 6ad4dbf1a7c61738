#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "hopf_trisect/tensor.hpp"

namespace ht {

struct LegRef {
    std::size_t node = 0;
    std::size_t leg = 0;
    bool operator==(const LegRef& o) const { return node == o.node && leg == o.leg; }
};

struct Edge {
    LegRef from;  // Out leg
    LegRef to;    // In leg
};

// Pairwise merge schedule. Original nodes carry ids 0..n-1; the k-th merge
// creates id n+k.
using ContractionPlan = std::vector<std::pair<std::size_t, std::size_t>>;

// Leg-shape skeleton used by the planner; independent of the scalar type.
struct NetworkShape {
    std::vector<std::vector<std::size_t>> leg_dims;
    std::vector<Edge> edges;
};

template <class K>
class TensorNetwork {
public:
    std::size_t add(Tensor<K> t, std::string label = {});
    void link(LegRef from, LegRef to);
    void set_open(std::vector<LegRef> legs) { open_ = std::move(legs); }

    std::size_t size() const { return nodes_.size(); }
    const std::vector<Tensor<K>>& nodes() const { return nodes_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<LegRef>& open() const { return open_; }

    // Throws DimensionMismatch / GradingMismatch on malformed wiring.
    void validate() const;
    NetworkShape shape() const;

private:
    std::vector<Tensor<K>> nodes_;
    std::vector<std::string> labels_;
    std::vector<Edge> edges_;
    std::vector<LegRef> open_;
};

// Deterministic schedule: exhaustive subset search for at most 8 nodes;
// otherwise the cheapest of the greedy plan and 32 fixed-seed randomized
// greedy passes.
ContractionPlan plan_contraction(const NetworkShape& shape);
ContractionPlan greedy_plan(const NetworkShape& shape);
ContractionPlan exhaustive_plan(const NetworkShape& shape);
// Multiply-add count of a schedule.
double plan_cost(const NetworkShape& shape, const ContractionPlan& plan);
// Every merge sequence over n nodes (for order-independence checks).
std::vector<ContractionPlan> all_plans(std::size_t n);

template <class K>
Tensor<K> contract(const TensorNetwork<K>& net, const ContractionPlan* plan = nullptr);

}  // namespace ht
