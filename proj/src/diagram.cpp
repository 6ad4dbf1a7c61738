#include "hopf_trisect/diagram.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <regex>

#include <json.hpp>

#include "hopf_trisect/errors.hpp"
#include "hopf_trisect/moves.hpp"

namespace ht {

std::string family_name(Family f) {
    switch (f) {
        case Family::Alpha: return "alpha";
        case Family::Beta: return "beta";
        case Family::Kappa: return "kappa";
    }
    return "?";
}

Family parse_family(const std::string& s) {
    if (s == "alpha") return Family::Alpha;
    if (s == "beta") return Family::Beta;
    if (s == "kappa") return Family::Kappa;
    fail("ParseError", "unknown curve family '" + s + "'");
}

bool stored_order(Family first, Family second) {
    return (first == Family::Alpha && second != Family::Alpha) || (first == Family::Kappa && second == Family::Beta);
}

DiagCrossing make_crossing(int id, CurveRef x, CurveRef y, int sign_xy) {
    if (stored_order(x.family, y.family)) return {id, x, y, sign_xy};
    return {id, y, x, -sign_xy};
}

bool TrisectionDiagram::operator==(const TrisectionDiagram& o) const {
    if (genus != o.genus || heegaard != o.heegaard || curves != o.curves) return false;
    if (crossings.size() != o.crossings.size()) return false;
    for (std::size_t k = 0; k < crossings.size(); ++k) {
        const auto &x = crossings[k], &y = o.crossings[k];
        if (x.a != y.a || x.b != y.b || x.sign != y.sign) return false;
    }
    if (marks.size() != o.marks.size()) return false;
    for (std::size_t k = 0; k < marks.size(); ++k)
        if (marks[k].curves != o.marks[k].curves) return false;
    return true;
}

namespace {

std::string curve_label(const CurveRef& c) { return family_name(c.family) + "[" + std::to_string(c.index) + "]"; }

}  // namespace

ValidationReport validate(const TrisectionDiagram& d) {
    ValidationReport r;
    auto problem = [&](std::string s) { r.problems.push_back(std::move(s)); };
    if (d.genus < 0) problem("negative genus");
    for (int f = 0; f < 3; ++f) {
        const int want = (d.heegaard && f == 2) ? 0 : d.genus;
        if (static_cast<int>(d.curves[f].size()) != want)
            problem(family_name(static_cast<Family>(f)) + " family has " + std::to_string(d.curves[f].size()) +
                    " curves, expected " + std::to_string(want));
    }
    if (!r.ok()) return r;
    auto in_range = [&](const CurveRef& c) {
        return c.index >= 0 && c.index < d.family_size(c.family);
    };
    // Each crossing must appear exactly once on each of its two curves.
    std::vector<int> seen_a(d.crossings.size(), 0), seen_b(d.crossings.size(), 0);
    for (std::size_t k = 0; k < d.crossings.size(); ++k) {
        const auto& x = d.crossings[k];
        const std::string name = "crossing " + std::to_string(k);
        if (x.id != static_cast<int>(k)) problem(name + " has id " + std::to_string(x.id));
        if (x.a.family == x.b.family) problem(name + " joins two " + family_name(x.a.family) + " curves");
        else if (!stored_order(x.a.family, x.b.family)) problem(name + " stores its pair in the wrong order");
        if (x.sign != 1 && x.sign != -1) problem(name + " has sign " + std::to_string(x.sign));
        if (!in_range(x.a) || !in_range(x.b)) problem(name + " references a missing curve");
    }
    if (!r.ok()) return r;
    for (int f = 0; f < 3; ++f)
        for (int i = 0; i < d.family_size(static_cast<Family>(f)); ++i) {
            const CurveRef c{static_cast<Family>(f), i};
            for (int id : d.curves[f][i]) {
                if (id < 0 || id >= static_cast<int>(d.crossings.size())) {
                    problem(curve_label(c) + " references missing crossing " + std::to_string(id));
                    continue;
                }
                const auto& x = d.crossings[id];
                if (x.a == c) ++seen_a[id];
                else if (x.b == c) ++seen_b[id];
                else problem(curve_label(c) + " lists crossing " + std::to_string(id) + " which joins other curves");
            }
        }
    for (std::size_t k = 0; k < d.crossings.size(); ++k)
        if (seen_a[k] != 1 || seen_b[k] != 1)
            problem("crossing " + std::to_string(k) + " appears " + std::to_string(seen_a[k]) + " and " +
                    std::to_string(seen_b[k]) + " times on its curves");
    return r;
}

void require_valid(const TrisectionDiagram& d) {
    auto r = validate(d);
    if (!r.ok()) fail("InvalidDiagram", r.problems.front());
}

CurveWords words(const TrisectionDiagram& d) {
    CurveWords w;
    for (Family f : {Family::Beta, Family::Kappa}) {
        auto& out = f == Family::Beta ? w.beta : w.kappa;
        for (int i = 0; i < d.family_size(f); ++i) {
            const CurveRef c{f, i};
            Word word;
            for (int id : d.sequence(c)) {
                const auto& x = d.crossings[id];
                const CurveRef o = x.other(c);
                if (o.family != Family::Alpha) continue;
                word.push_back({o.index, x.sign_from(o)});
            }
            out.push_back(std::move(word));
        }
    }
    return w;
}

Word reduce(const Word& w) {
    Word out;
    for (const Letter& l : w) {
        if (!out.empty() && out.back().generator == l.generator && out.back().exponent == -l.exponent) out.pop_back();
        else out.push_back(l);
    }
    return out;
}

int evaluate(const Word& w, const std::vector<int>& colors, const FiniteGroup& G) {
    int v = G.identity();
    for (const Letter& l : w) {
        const int a = colors.at(l.generator);
        v = G.mul(v, l.exponent > 0 ? a : G.inv(a));
    }
    return v;
}

bool validate_coloring(const TrisectionDiagram& d, const Coloring& c, const FiniteGroup& G) {
    if (static_cast<int>(c.size()) != d.family_size(Family::Alpha)) return false;
    for (int a : c)
        if (a < 0 || a >= G.order()) return false;
    const auto w = words(d);
    for (const auto* fam : {&w.beta, &w.kappa})
        for (const Word& word : *fam)
            if (evaluate(word, c, G) != G.identity()) return false;
    return true;
}

Presentation pi1_presentation(const TrisectionDiagram& d) {
    Presentation p;
    p.generators = d.family_size(Family::Alpha);
    auto w = words(d);
    p.relators = std::move(w.beta);
    for (auto& k : w.kappa) p.relators.push_back(std::move(k));
    return p;
}

std::vector<Coloring> enumerate_colorings(const TrisectionDiagram& d, const FiniteGroup& G) {
    const int g = d.family_size(Family::Alpha);
    const auto p = pi1_presentation(d);
    std::vector<Coloring> out;
    Coloring c(g, 0);
    std::function<void(int)> fill = [&](int k) {
        if (k == g) {
            for (const Word& w : p.relators)
                if (evaluate(w, c, G) != G.identity()) return;
            out.push_back(c);
            return;
        }
        for (int a = 0; a < G.order(); ++a) {
            c[k] = a;
            fill(k + 1);
        }
    };
    fill(0);
    return out;
}

Coloring conjugate_coloring(const Coloring& c, int b, const FiniteGroup& G) {
    Coloring out(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) out[i] = G.conj(b, c[i]);
    return out;
}

// ---- built-ins -------------------------------------------------------------------------

namespace {

// Incremental construction: crossings are appended to both curves in call order
// unless positions are given explicitly afterwards.
struct Builder {
    TrisectionDiagram d;

    Builder(int genus, bool heegaard) {
        d.genus = genus;
        d.heegaard = heegaard;
        for (int f = 0; f < 3; ++f) d.curves[f].assign((heegaard && f == 2) ? 0 : genus, {});
    }
    // Appends a crossing of x and y with sign of (x, y) to the end of both sequences.
    int cross(CurveRef x, CurveRef y, int sign_xy) {
        const int id = static_cast<int>(d.crossings.size());
        d.crossings.push_back(make_crossing(id, x, y, sign_xy));
        d.sequence(x).push_back(id);
        d.sequence(y).push_back(id);
        return id;
    }
    TrisectionDiagram done() {
        require_valid(d);
        return std::move(d);
    }
};

constexpr CurveRef A(int i) { return {Family::Alpha, i}; }
constexpr CurveRef B(int i) { return {Family::Beta, i}; }
constexpr CurveRef C(int i) { return {Family::Kappa, i}; }

// Genus-1 pieces on a torus with longitude (1,0) and meridian (0,1), all
// curves oriented positively; parallel curves never meet.
TrisectionDiagram s1_x_s3_diagram() { return Builder(1, false).done(); }

// One torus per piece: the longitude carries both crossings.
TrisectionDiagram t_st_diagram() {
    Builder b(3, false);
    // alpha_0 = (1,0); beta_0, kappa_0 = (0,1).
    b.cross(A(0), B(0), +1);
    b.cross(A(0), C(0), +1);
    // beta_1 = (1,0); kappa_1, alpha_1 = (0,1).
    b.cross(B(1), C(1), +1);  // (kappa,beta) = det((0,1),(1,0)) = -1
    b.cross(B(1), A(1), +1);  // (alpha,beta) = -1
    // kappa_2 = (1,0); alpha_2, beta_2 = (0,1).
    b.cross(C(2), A(2), +1);  // (alpha,kappa) = -1
    b.cross(C(2), B(2), +1);  // (kappa,beta) = +1
    return b.done();
}

// alpha = (1,0), beta = (0,1), kappa = (1,1): every pair meets once positively.
TrisectionDiagram cp2_diagram() {
    Builder b(1, false);
    b.cross(A(0), B(0), +1);
    b.cross(A(0), C(0), +1);
    b.cross(C(0), B(0), +1);
    return b.done();
}

TrisectionDiagram heegaard_s3_diagram() {
    Builder b(1, true);
    b.cross(A(0), B(0), +1);
    return b.done();
}

TrisectionDiagram heegaard_s1xs2_diagram() { return Builder(1, true).done(); }

}  // namespace

TrisectionDiagram standard_stabilization() { return t_st_diagram(); }

HeegaardDiagram heegaard_lens(int p, int q) {
    if (p < 1 || q < 0) fail("UnknownName", "heegaard_lens needs p >= 1 and q >= 0");
    Builder b(1, true);
    for (int k = 0; k < p; ++k) {
        const int id = static_cast<int>(b.d.crossings.size());
        b.d.crossings.push_back(make_crossing(id, A(0), B(0), +1));
        b.d.sequence(B(0)).push_back(id);
    }
    // alpha visits the beta crossings k*q mod p; fall back to steps of 1 when
    // gcd(p,q) != 1 so the sequence is still a permutation.
    const int step = std::gcd(p, q) == 1 ? q % p : 1;
    auto& a = b.d.sequence(A(0));
    for (int k = 0; k < p; ++k) a.push_back(static_cast<int>((static_cast<long>(k) * step) % p));
    return b.done();
}

TrisectionDiagram builtin_diagram(const std::string& name) {
    if (name == "s4_genus0") return Builder(0, false).done();
    if (name == "t_st") return t_st_diagram();
    if (name == "s1_x_s3") return s1_x_s3_diagram();
    if (name == "cp2") return cp2_diagram();
    if (name == "genus2") return connected_sum(cp2_diagram(), s1_x_s3_diagram());
    if (name == "heegaard_s3") return heegaard_s3_diagram();
    if (name == "heegaard_s1xs2") return heegaard_s1xs2_diagram();
    static const std::regex lens(R"(heegaard_lens\((\d+),(\d+)\))");
    std::smatch m;
    if (std::regex_match(name, m, lens)) return heegaard_lens(std::stoi(m[1]), std::stoi(m[2]));
    fail("UnknownName", "no built-in diagram named '" + name + "'");
}

std::vector<std::string> builtin_diagram_names() {
    return {"s4_genus0",   "t_st",           "s1_x_s3", "cp2", "genus2", "heegaard_s3", "heegaard_lens(p,q)",
            "heegaard_s1xs2"};
}

// ---- JSON -------------------------------------------------------------------------------

using nlohmann::json;

std::string diagram_to_json(const TrisectionDiagram& d) {
    json j;
    j["genus"] = d.genus;
    if (d.heegaard) j["heegaard"] = true;
    json curves = json::object();
    for (int f = 0; f < 3; ++f) curves[family_name(static_cast<Family>(f))] = d.curves[f];
    j["curves"] = curves;
    json xs = json::array();
    for (const auto& x : d.crossings) {
        auto end = [&](const CurveRef& c) {
            const auto& seq = d.sequence(c);
            const auto slot = std::find(seq.begin(), seq.end(), x.id) - seq.begin();
            return json::array({family_name(c.family), c.index, slot});
        };
        xs.push_back({{"id", x.id}, {"a", end(x.a)}, {"b", end(x.b)}, {"sign", x.sign}});
    }
    j["crossings"] = xs;
    if (!d.marks.empty()) {
        json ms = json::array();
        for (const auto& m : d.marks) ms.push_back({{"alpha", m.curves[0]}, {"beta", m.curves[1]}, {"kappa", m.curves[2]}});
        j["stabilizations"] = ms;
    }
    return j.dump(2);
}

TrisectionDiagram diagram_from_json(const std::string& text) {
    TrisectionDiagram d;
    std::vector<std::pair<DiagCrossing, std::pair<int, int>>> raw;
    try {
        const json j = json::parse(text);
        d.genus = j.at("genus").get<int>();
        d.heegaard = j.value("heegaard", false);
        const auto& curves = j.at("curves");
        for (int f = 0; f < 3; ++f) {
            const auto key = family_name(static_cast<Family>(f));
            if (curves.contains(key)) d.curves[f] = curves.at(key).get<std::vector<std::vector<int>>>();
        }
        for (const auto& x : j.at("crossings")) {
            auto end = [](const json& e) {
                return std::make_pair(CurveRef{parse_family(e.at(0).get<std::string>()), e.at(1).get<int>()},
                                      e.at(2).get<int>());
            };
            const auto [a, slot_a] = end(x.at("a"));
            const auto [b, slot_b] = end(x.at("b"));
            DiagCrossing c{x.at("id").get<int>(), a, b, x.at("sign").get<int>()};
            if (!stored_order(a.family, b.family) && a.family != b.family) c = make_crossing(c.id, a, b, c.sign);
            raw.push_back({c, {stored_order(a.family, b.family) ? slot_a : slot_b,
                               stored_order(a.family, b.family) ? slot_b : slot_a}});
        }
        if (j.contains("stabilizations"))
            for (const auto& m : j.at("stabilizations")) {
                StabilizationMark mark;
                for (int f = 0; f < 3; ++f)
                    mark.curves[f] = m.at(family_name(static_cast<Family>(f))).get<std::array<int, 3>>();
                d.marks.push_back(mark);
            }
    } catch (const json::exception& e) {
        fail("ParseError", e.what());
    }
    std::sort(raw.begin(), raw.end(), [](const auto& x, const auto& y) { return x.first.id < y.first.id; });
    for (auto& [c, slots] : raw) d.crossings.push_back(c);
    require_valid(d);
    for (const auto& [c, slots] : raw) {
        const auto& sa = d.sequence(c.a);
        const auto& sb = d.sequence(c.b);
        if (slots.first < 0 || slots.first >= static_cast<int>(sa.size()) || sa[slots.first] != c.id ||
            slots.second < 0 || slots.second >= static_cast<int>(sb.size()) || sb[slots.second] != c.id)
            fail("InvalidDiagram", "slot of crossing " + std::to_string(c.id) + " disagrees with its curve sequence");
    }
    return d;
}

}  // namespace ht
