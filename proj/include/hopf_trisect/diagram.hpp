#pragma once

#include <array>
#include <string>
#include <vector>

#include "hopf_trisect/group.hpp"

namespace ht {

enum class Family : int { Alpha = 0, Beta = 1, Kappa = 2 };

std::string family_name(Family f);
// Throws ParseError on anything but "alpha", "beta", "kappa".
Family parse_family(const std::string& s);

struct CurveRef {
    Family family = Family::Alpha;
    int index = 0;
    bool operator==(const CurveRef& o) const { return family == o.family && index == o.index; }
    bool operator!=(const CurveRef& o) const { return !(*this == o); }
};

// Pairs are stored in the order (alpha,beta), (alpha,kappa), (kappa,beta) and
// `sign` is +1 when the tangents of (a, b) form a positive basis.
struct DiagCrossing {
    int id = 0;
    CurveRef a;
    CurveRef b;
    int sign = 1;

    bool touches(const CurveRef& c) const { return a == c || b == c; }
    CurveRef other(const CurveRef& c) const { return a == c ? b : a; }
    // Sign of the basis (tangent of `from`, tangent of the other curve).
    int sign_from(const CurveRef& from) const { return a == from ? sign : -sign; }
};

// True when (first, second) is one of the stored pair orders.
bool stored_order(Family first, Family second);
// Builds a crossing record with the stored pair order, given the sign of (x, y).
DiagCrossing make_crossing(int id, CurveRef x, CurveRef y, int sign_xy);

// Curve indices of a connected T_st summand, three per family.
struct StabilizationMark {
    std::array<std::array<int, 3>, 3> curves{};
};

// Purely combinatorial diagram: each curve is the cyclic sequence of crossing
// ids met from its base point along its orientation. Crossing ids equal their
// position in `crossings`. A Heegaard diagram is the same record with the
// kappa family absent.
struct TrisectionDiagram {
    int genus = 0;
    bool heegaard = false;
    std::array<std::vector<std::vector<int>>, 3> curves;
    std::vector<DiagCrossing> crossings;
    std::vector<StabilizationMark> marks;

    const std::vector<int>& sequence(const CurveRef& c) const {
        return curves[static_cast<int>(c.family)][c.index];
    }
    std::vector<int>& sequence(const CurveRef& c) { return curves[static_cast<int>(c.family)][c.index]; }
    int family_size(Family f) const { return static_cast<int>(curves[static_cast<int>(f)].size()); }
    std::size_t crossing_count() const { return crossings.size(); }

    bool operator==(const TrisectionDiagram& o) const;
};

using HeegaardDiagram = TrisectionDiagram;

struct ValidationReport {
    std::vector<std::string> problems;
    bool ok() const { return problems.empty(); }
};

ValidationReport validate(const TrisectionDiagram& d);
// Throws InvalidDiagram with the first problem.
void require_valid(const TrisectionDiagram& d);

// ---- words and colorings ------------------------------------------------------
struct Letter {
    int generator = 0;  // alpha curve index
    int exponent = 1;   // ±1
    bool operator==(const Letter& o) const { return generator == o.generator && exponent == o.exponent; }
};
using Word = std::vector<Letter>;

struct CurveWords {
    std::vector<Word> beta;
    std::vector<Word> kappa;
};

CurveWords words(const TrisectionDiagram& d);
// Free reduction in F[alpha].
Word reduce(const Word& w);
int evaluate(const Word& w, const std::vector<int>& colors, const FiniteGroup& G);

// colors[i] colors alpha_i.
using Coloring = std::vector<int>;

bool validate_coloring(const TrisectionDiagram& d, const Coloring& c, const FiniteGroup& G);

struct Presentation {
    int generators = 0;
    std::vector<Word> relators;  // beta words, then kappa words
};
Presentation pi1_presentation(const TrisectionDiagram& d);

// Every coloring in increasing lexicographic order of the color tuple.
std::vector<Coloring> enumerate_colorings(const TrisectionDiagram& d, const FiniteGroup& G);
Coloring conjugate_coloring(const Coloring& c, int b, const FiniteGroup& G);

// ---- built-in diagrams -----------------------------------------------------------
// s4_genus0, t_st, s1_x_s3, cp2, genus2 (cp2 # s1_x_s3), heegaard_s3,
// heegaard_lens(p,q), heegaard_s1xs2. Throws UnknownName.
TrisectionDiagram builtin_diagram(const std::string& name);
std::vector<std::string> builtin_diagram_names();

TrisectionDiagram standard_stabilization();  // T_st
// Genus-1 lens space diagram: beta crosses alpha p times, all positive;
// alpha meets them in steps of q.
HeegaardDiagram heegaard_lens(int p, int q);

// ---- file format ------------------------------------------------------------------
// {"genus", "heegaard"?, "curves": {"alpha": [[ids]], "beta", "kappa"},
//  "crossings": [{"id", "a": [family, idx, slot], "b": [...], "sign"}], "stabilizations"?}
std::string diagram_to_json(const TrisectionDiagram& d);
// Throws ParseError on malformed input and InvalidDiagram on failed validation.
TrisectionDiagram diagram_from_json(const std::string& text);

}  // namespace ht
