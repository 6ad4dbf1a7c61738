#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hopf_trisect/invariant.hpp"
#include "hopf_trisect/moves.hpp"

namespace ht {

template <class K>
struct InvarianceRun {
    bool ok = true;
    ZetaPower<K> reference;
    int applied = 0;
    int skipped = 0;           // draws that found no applicable instance
    std::vector<std::string> trace;
    ZetaPower<K> offending;    // first differing value when !ok
};

// Random walk from `start` until `trials` moves have applied: move k is a
// random instance of kinds[k % kinds.size()], redrawn when none applies (at
// most 4 * trials + 16 draws), and Z is compared with the starting value. The walk
// restarts from `start` once the genus or crossing count passes the caps, so
// every step stays cheap to evaluate. Stops at the first difference.
template <class K>
InvarianceRun<K> verify_move_invariance(const TrisectionInvariant<K>& inv, const ColoredDiagram& start,
                                        const std::vector<MoveKind>& kinds, int trials, std::uint64_t seed,
                                        double tol = kDefaultTolerance, int genus_cap = 6,
                                        std::size_t crossing_cap = 30);

}  // namespace ht
