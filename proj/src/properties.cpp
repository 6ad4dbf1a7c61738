#include "hopf_trisect/properties.hpp"

#include <random>

#include "hopf_trisect/errors.hpp"

namespace ht {

template <class K>
InvarianceRun<K> verify_move_invariance(const TrisectionInvariant<K>& inv, const ColoredDiagram& start,
                                        const std::vector<MoveKind>& kinds, int trials, std::uint64_t seed,
                                        double tol, int genus_cap, std::size_t crossing_cap) {
    if (kinds.empty()) fail("InvalidArgument", "no move kinds selected");
    InvarianceRun<K> run;
    run.reference = inv.normalized(start.diagram, start.coloring).value;
    std::mt19937_64 rng(seed);
    ColoredDiagram cur = start;
    // A kind with no instance is redrawn, up to a bounded number of attempts.
    const long attempts = 4L * trials + 16;
    for (long k = 0; run.applied < trials && k < attempts; ++k) {
        const MoveKind kind = kinds[static_cast<std::size_t>(run.applied) % kinds.size()];
        MoveOutcome o = random_move(cur, kind, inv.group(), rng);
        if (!o.applied) {
            ++run.skipped;
            continue;
        }
        ++run.applied;
        const auto z = inv.normalized(o.result.diagram, o.result.coloring).value;
        run.trace.push_back(std::to_string(k) + " " + move_kind_name(kind) + ": " + o.trace + " -> " + z.str());
        if (!z.equals(run.reference, tol)) {
            run.ok = false;
            run.offending = z;
            return run;
        }
        cur = std::move(o.result);
        if (cur.diagram.genus > genus_cap || cur.diagram.crossings.size() > crossing_cap) cur = start;
    }
    return run;
}

template InvarianceRun<Rational> verify_move_invariance(const TrisectionInvariant<Rational>&, const ColoredDiagram&,
                                                        const std::vector<MoveKind>&, int, std::uint64_t, double,
                                                        int, std::size_t);
template InvarianceRun<Complex> verify_move_invariance(const TrisectionInvariant<Complex>&, const ColoredDiagram&,
                                                       const std::vector<MoveKind>&, int, std::uint64_t, double, int,
                                                       std::size_t);

}  // namespace ht
