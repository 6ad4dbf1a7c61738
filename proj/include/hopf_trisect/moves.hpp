#pragma once

#include <random>
#include <string>

#include "hopf_trisect/diagram.hpp"

namespace ht {

struct ColoredDiagram {
    TrisectionDiagram diagram;
    Coloring coloring;
};

// ---- two-point move ---------------------------------------------------------------
// Removes crossings x, y: both join the same two curves, sit next to each other
// (cyclically) in both sequences and have opposite signs. Throws NotCancellablePair.
TrisectionDiagram apply_two_point(const TrisectionDiagram& d, int x, int y);

struct BigonSpec {
    CurveRef first;
    CurveRef second;
    std::size_t first_at = 0;   // insertion slot in first's sequence
    std::size_t second_at = 0;  // insertion slot in second's sequence
    bool same_order = true;     // second meets the pair in the same order as first
    int sign = 1;               // sign (first, second) of the crossing first meets first
};
// Inverse of apply_two_point; new crossings take the two highest ids.
TrisectionDiagram insert_two_point(const TrisectionDiagram& d, const BigonSpec& s);

// ---- three-point move --------------------------------------------------------------
// Crossings xy = X∩Y, xz = X∩Z, yz = Y∩Z over three distinct families. Each pair
// must sit next to each other in the shared curve, with orders matching a planar
// triangle: o_Y = o_X s_XZ s_YZ and o_Z = o_X s_XY s_YZ, where o is +1 when the
// first-listed crossing comes first. The move swaps each pair. Throws NoTriangle.
TrisectionDiagram apply_three_point(const TrisectionDiagram& d, int xy, int xz, int yz);

struct Triangle {
    int xy, xz, yz;
};
std::vector<Triangle> find_triangles(const TrisectionDiagram& d);

// ---- handle slide ---------------------------------------------------------------------
// Slides `moving` over `over` (same family) along a band that leaves `moving`
// just before position `at` and meets `over` just before position `from`. The
// copy of `over` runs parallel to it on the given side. An alpha slide recolors
// `over`: Right gives a_moving^-1 a_over, Left gives a_over a_moving^-1.
enum class BandSide { Left, Right };
struct SlideSpec {
    CurveRef moving;
    CurveRef over;
    std::size_t at = 0;
    std::size_t from = 0;
    BandSide side = BandSide::Right;
};
// Throws InvalidSlide.
ColoredDiagram apply_handle_slide(const ColoredDiagram& cd, const SlideSpec& s, const FiniteGroup& G);

// ---- stabilization, orientation, base points, sums ----------------------------------
// Connected sum with T_st, marked so it can be removed again; new alpha colors are 1.
ColoredDiagram stabilize(const ColoredDiagram& cd, const FiniteGroup& G);
// Removes the marked summand `mark` (default: the last one). Throws NotAStabilization.
ColoredDiagram destabilize(const ColoredDiagram& cd, int mark = -1);

// Reverses the curve and flips the sign of each of its crossings; inverts an alpha color.
ColoredDiagram reverse_orientation(const ColoredDiagram& cd, const CurveRef& c, const FiniteGroup& G);
// Rotates the sequence so it starts at old position `offset`.
TrisectionDiagram move_basepoint(const TrisectionDiagram& d, const CurveRef& c, std::size_t offset);
// Second diagram's curves follow the first's in every family.
TrisectionDiagram connected_sum(const TrisectionDiagram& a, const TrisectionDiagram& b);
ColoredDiagram connected_sum(const ColoredDiagram& a, const ColoredDiagram& b);

// ---- random moves ---------------------------------------------------------------------
enum class MoveKind { TwoPoint, ThreePoint, HandleSlide, Stabilization, Orientation, BasePoint };
std::string move_kind_name(MoveKind k);
inline constexpr MoveKind kAllMoveKinds[] = {MoveKind::TwoPoint,     MoveKind::ThreePoint,  MoveKind::HandleSlide,
                                            MoveKind::Stabilization, MoveKind::Orientation, MoveKind::BasePoint};

struct MoveOutcome {
    bool applied = false;
    ColoredDiagram result;
    std::string trace;
};

// Picks a random instance of the move kind. Two-point and stabilization moves
// alternate between insertion and removal when both are possible; a three-point
// move inserts a bigon first when no triangle exists.
MoveOutcome random_move(const ColoredDiagram& cd, MoveKind kind, const FiniteGroup& G, std::mt19937_64& rng);

}  // namespace ht
