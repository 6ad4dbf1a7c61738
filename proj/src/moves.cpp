#include "hopf_trisect/moves.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>

#include "hopf_trisect/errors.hpp"

namespace ht {

namespace {

std::string label(const CurveRef& c) { return family_name(c.family) + "[" + std::to_string(c.index) + "]"; }

bool valid_curve(const TrisectionDiagram& d, const CurveRef& c) {
    return c.index >= 0 && c.index < d.family_size(c.family);
}

std::size_t position(const std::vector<int>& seq, int id) {
    return static_cast<std::size_t>(std::find(seq.begin(), seq.end(), id) - seq.begin());
}

// +1 when q directly follows p along the cyclic sequence, -1 when p directly
// follows q; a two-element sequence allows both.
std::vector<int> adjacency(const std::vector<int>& seq, int p, int q) {
    const std::size_t n = seq.size();
    const std::size_t i = position(seq, p), j = position(seq, q);
    std::vector<int> out;
    if (i == n || j == n || i == j) return out;
    if ((i + 1) % n == j) out.push_back(1);
    if ((j + 1) % n == i) out.push_back(-1);
    return out;
}

// Drops the listed crossings and renumbers the rest in order.
TrisectionDiagram without_crossings(const TrisectionDiagram& d, const std::set<int>& gone) {
    std::vector<int> remap(d.crossings.size(), -1);
    TrisectionDiagram out = d;
    out.crossings.clear();
    for (const auto& x : d.crossings) {
        if (gone.count(x.id)) continue;
        remap[x.id] = static_cast<int>(out.crossings.size());
        DiagCrossing y = x;
        y.id = remap[x.id];
        out.crossings.push_back(y);
    }
    for (auto& fam : out.curves)
        for (auto& seq : fam) {
            std::vector<int> kept;
            for (int id : seq)
                if (remap[id] >= 0) kept.push_back(remap[id]);
            seq = std::move(kept);
        }
    return out;
}

int add_crossing(TrisectionDiagram& d, CurveRef x, CurveRef y, int sign_xy) {
    const int id = static_cast<int>(d.crossings.size());
    d.crossings.push_back(make_crossing(id, x, y, sign_xy));
    return id;
}

// The marked curves as a standalone genus-3 diagram, crossings renumbered by
// first appearance; nullopt when a marked curve meets an unmarked one.
std::optional<TrisectionDiagram> extract_summand(const TrisectionDiagram& d, const StabilizationMark& m) {
    TrisectionDiagram s;
    s.genus = 3;
    std::map<std::pair<int, int>, int> slot;  // (family, old index) -> new index
    for (int f = 0; f < 3; ++f)
        for (int k = 0; k < 3; ++k) {
            const int idx = m.curves[f][k];
            if (idx < 0 || idx >= d.family_size(static_cast<Family>(f))) return std::nullopt;
            slot[{f, idx}] = k;
        }
    auto moved = [&](const CurveRef& c) -> std::optional<CurveRef> {
        auto it = slot.find({static_cast<int>(c.family), c.index});
        if (it == slot.end()) return std::nullopt;
        return CurveRef{c.family, it->second};
    };
    std::map<int, int> renumber;
    for (int f = 0; f < 3; ++f) {
        s.curves[f].resize(3);
        for (int k = 0; k < 3; ++k)
            for (int id : d.curves[f][m.curves[f][k]]) {
                const auto& x = d.crossings[id];
                auto a = moved(x.a), b = moved(x.b);
                if (!a || !b) return std::nullopt;
                auto [it, fresh] = renumber.emplace(id, static_cast<int>(s.crossings.size()));
                if (fresh) s.crossings.push_back({it->second, *a, *b, x.sign});
                s.curves[f][k].push_back(it->second);
            }
    }
    return s;
}

}  // namespace

// ---- two-point ---------------------------------------------------------------------------

TrisectionDiagram apply_two_point(const TrisectionDiagram& d, int x, int y) {
    const int n = static_cast<int>(d.crossings.size());
    if (x < 0 || y < 0 || x >= n || y >= n || x == y)
        fail("NotCancellablePair", "crossings " + std::to_string(x) + ", " + std::to_string(y) + " do not exist");
    const auto &cx = d.crossings[x], &cy = d.crossings[y];
    if (cx.a != cy.a || cx.b != cy.b) fail("NotCancellablePair", "the crossings join different curves");
    if (cx.sign == cy.sign) fail("NotCancellablePair", "the crossings have the same sign");
    if (adjacency(d.sequence(cx.a), x, y).empty() || adjacency(d.sequence(cx.b), x, y).empty())
        fail("NotCancellablePair", "the crossings are not adjacent on both curves");
    return without_crossings(d, {x, y});
}

TrisectionDiagram insert_two_point(const TrisectionDiagram& d, const BigonSpec& s) {
    if (s.first.family == s.second.family || !valid_curve(d, s.first) || !valid_curve(d, s.second))
        fail("InvalidMove", "a bigon needs two existing curves from different families");
    if (s.first_at > d.sequence(s.first).size() || s.second_at > d.sequence(s.second).size())
        fail("InvalidMove", "bigon insertion slot out of range");
    if (s.sign != 1 && s.sign != -1) fail("InvalidMove", "bigon sign must be ±1");
    TrisectionDiagram out = d;
    const int p = add_crossing(out, s.first, s.second, s.sign);
    const int q = add_crossing(out, s.first, s.second, -s.sign);
    auto& f = out.sequence(s.first);
    f.insert(f.begin() + static_cast<long>(s.first_at), {p, q});
    auto& g = out.sequence(s.second);
    if (s.same_order) g.insert(g.begin() + static_cast<long>(s.second_at), {p, q});
    else g.insert(g.begin() + static_cast<long>(s.second_at), {q, p});
    return out;
}

// ---- three-point -------------------------------------------------------------------------

namespace {

struct TriangleCurves {
    CurveRef X, Y, Z;
};

std::optional<TriangleCurves> triangle_curves(const TrisectionDiagram& d, int xy, int xz, int yz) {
    const int n = static_cast<int>(d.crossings.size());
    for (int id : {xy, xz, yz})
        if (id < 0 || id >= n) return std::nullopt;
    if (xy == xz || xy == yz || xz == yz) return std::nullopt;
    const auto &a = d.crossings[xy], &b = d.crossings[xz], &c = d.crossings[yz];
    for (const CurveRef& X : {a.a, a.b}) {
        if (!b.touches(X)) continue;
        const CurveRef Y = a.other(X), Z = b.other(X);
        if (Y.family == Z.family) return std::nullopt;
        if (c.touches(Y) && c.touches(Z)) return TriangleCurves{X, Y, Z};
    }
    return std::nullopt;
}

bool planar_triangle(const TrisectionDiagram& d, int xy, int xz, int yz, const TriangleCurves& t) {
    const int sXY = d.crossings[xy].sign_from(t.X);
    const int sXZ = d.crossings[xz].sign_from(t.X);
    const int sYZ = d.crossings[yz].sign_from(t.Y);
    for (int oX : adjacency(d.sequence(t.X), xy, xz))
        for (int oY : adjacency(d.sequence(t.Y), xy, yz))
            for (int oZ : adjacency(d.sequence(t.Z), xz, yz))
                if (oY == oX * sXZ * sYZ && oZ == oX * sXY * sYZ) return true;
    return false;
}

void swap_entries(std::vector<int>& seq, int p, int q) { std::swap(seq[position(seq, p)], seq[position(seq, q)]); }

}  // namespace

TrisectionDiagram apply_three_point(const TrisectionDiagram& d, int xy, int xz, int yz) {
    auto t = triangle_curves(d, xy, xz, yz);
    if (!t) fail("NoTriangle", "the crossings do not pairwise share three distinct curves");
    if (!planar_triangle(d, xy, xz, yz, *t))
        fail("NoTriangle", "the crossings are not adjacent in a triangle pattern");
    TrisectionDiagram out = d;
    swap_entries(out.sequence(t->X), xy, xz);
    swap_entries(out.sequence(t->Y), xy, yz);
    swap_entries(out.sequence(t->Z), xz, yz);
    return out;
}

std::vector<Triangle> find_triangles(const TrisectionDiagram& d) {
    std::vector<Triangle> out;
    std::set<std::array<int, 3>> seen;
    auto neighbours = [&](const CurveRef& c, int id) {
        const auto& seq = d.sequence(c);
        const std::size_t n = seq.size(), i = position(seq, id);
        std::set<int> s;
        if (n >= 2) {
            s.insert(seq[(i + 1) % n]);
            s.insert(seq[(i + n - 1) % n]);
        }
        return s;
    };
    for (const auto& x : d.crossings)
        for (const CurveRef& X : {x.a, x.b}) {
            const CurveRef Y = x.other(X);
            for (int xz : neighbours(X, x.id))
                for (int yz : neighbours(Y, x.id)) {
                    auto t = triangle_curves(d, x.id, xz, yz);
                    if (!t || !planar_triangle(d, x.id, xz, yz, *t)) continue;
                    std::array<int, 3> key{x.id, xz, yz};
                    std::sort(key.begin(), key.end());
                    if (seen.insert(key).second) out.push_back({x.id, xz, yz});
                }
        }
    return out;
}

// ---- handle slide --------------------------------------------------------------------------

ColoredDiagram apply_handle_slide(const ColoredDiagram& cd, const SlideSpec& s, const FiniteGroup& G) {
    const TrisectionDiagram& d = cd.diagram;
    if (s.moving.family != s.over.family) fail("InvalidSlide", "handle slides stay inside one family");
    if (s.moving == s.over) fail("InvalidSlide", "a curve cannot slide over itself");
    if (!valid_curve(d, s.moving) || !valid_curve(d, s.over)) fail("InvalidSlide", "no such curve");
    const auto& over = d.sequence(s.over);
    if (s.at > d.sequence(s.moving).size()) fail("InvalidSlide", "band position on the moving curve out of range");
    if (over.empty() ? s.from != 0 : s.from >= over.size())
        fail("InvalidSlide", "band position on the stationary curve out of range");

    ColoredDiagram out = cd;
    TrisectionDiagram& r = out.diagram;
    std::vector<int> copy;
    for (std::size_t k = 0; k < over.size(); ++k) {
        const int old_id = over[(s.from + k) % over.size()];
        const DiagCrossing old = d.crossings[old_id];
        const CurveRef gamma = old.other(s.over);
        const int sign = old.sign_from(s.over);
        const int id = add_crossing(r, s.moving, gamma, sign);
        copy.push_back(id);
        // gamma runs from the right of `over` to its left at a positive crossing.
        auto& g = r.sequence(gamma);
        const std::size_t at = position(g, old_id);
        const bool after = (sign > 0) == (s.side == BandSide::Left);
        g.insert(g.begin() + static_cast<long>(after ? at + 1 : at), id);
    }
    auto& m = r.sequence(s.moving);
    m.insert(m.begin() + static_cast<long>(s.at), copy.begin(), copy.end());

    if (s.moving.family == Family::Alpha && !out.coloring.empty()) {
        const int ai_inv = G.inv(out.coloring.at(s.moving.index));
        int& aj = out.coloring.at(s.over.index);
        aj = s.side == BandSide::Right ? G.mul(ai_inv, aj) : G.mul(aj, ai_inv);
    }
    return out;
}

// ---- stabilization and the rest -------------------------------------------------------------

TrisectionDiagram connected_sum(const TrisectionDiagram& a, const TrisectionDiagram& b) {
    if (a.heegaard != b.heegaard) fail("InvalidDiagram", "cannot sum a Heegaard and a trisection diagram");
    TrisectionDiagram out = a;
    out.genus = a.genus + b.genus;
    const int shift = static_cast<int>(a.crossings.size());
    auto moved = [&](CurveRef c) {
        c.index += a.family_size(c.family);
        return c;
    };
    for (const auto& x : b.crossings) out.crossings.push_back({x.id + shift, moved(x.a), moved(x.b), x.sign});
    for (int f = 0; f < 3; ++f)
        for (const auto& seq : b.curves[f]) {
            std::vector<int> s;
            for (int id : seq) s.push_back(id + shift);
            out.curves[f].push_back(std::move(s));
        }
    for (StabilizationMark m : b.marks) {
        for (int f = 0; f < 3; ++f)
            for (int& i : m.curves[f]) i += a.family_size(static_cast<Family>(f));
        out.marks.push_back(m);
    }
    return out;
}

ColoredDiagram connected_sum(const ColoredDiagram& a, const ColoredDiagram& b) {
    ColoredDiagram out{connected_sum(a.diagram, b.diagram), a.coloring};
    out.coloring.insert(out.coloring.end(), b.coloring.begin(), b.coloring.end());
    return out;
}

ColoredDiagram stabilize(const ColoredDiagram& cd, const FiniteGroup& G) {
    if (cd.diagram.heegaard) fail("InvalidMove", "stabilization applies to trisection diagrams");
    TrisectionDiagram st = standard_stabilization();
    st.marks.push_back({{{{0, 1, 2}, {0, 1, 2}, {0, 1, 2}}}});
    return connected_sum(cd, ColoredDiagram{st, Coloring(3, G.identity())});
}

ColoredDiagram destabilize(const ColoredDiagram& cd, int mark) {
    const TrisectionDiagram& d = cd.diagram;
    if (d.marks.empty()) fail("NotAStabilization", "no marked T_st summand");
    if (mark < 0) mark = static_cast<int>(d.marks.size()) - 1;
    if (mark >= static_cast<int>(d.marks.size())) fail("NotAStabilization", "no such marked summand");
    const StabilizationMark m = d.marks[mark];
    auto summand = extract_summand(d, m);
    StabilizationMark identity_mark{{{{0, 1, 2}, {0, 1, 2}, {0, 1, 2}}}};
    if (!summand || !(*summand == *extract_summand(standard_stabilization(), identity_mark)))
        fail("NotAStabilization", "the marked curves no longer form T_st");

    std::set<int> gone;
    for (int f = 0; f < 3; ++f)
        for (int i : m.curves[f])
            for (int id : d.curves[f][i]) gone.insert(id);
    TrisectionDiagram r = without_crossings(d, gone);
    // Drop the marked curves and shift the indices above them.
    std::array<std::vector<int>, 3> newindex;
    for (int f = 0; f < 3; ++f) {
        const int n = d.family_size(static_cast<Family>(f));
        newindex[f].assign(n, -1);
        std::vector<std::vector<int>> kept;
        for (int i = 0; i < n; ++i) {
            if (std::find(m.curves[f].begin(), m.curves[f].end(), i) != m.curves[f].end()) continue;
            newindex[f][i] = static_cast<int>(kept.size());
            kept.push_back(r.curves[f][i]);
        }
        r.curves[f] = std::move(kept);
    }
    for (auto& x : r.crossings) {
        x.a.index = newindex[static_cast<int>(x.a.family)][x.a.index];
        x.b.index = newindex[static_cast<int>(x.b.family)][x.b.index];
    }
    r.genus -= 3;
    r.marks.clear();
    for (int k = 0; k < static_cast<int>(d.marks.size()); ++k) {
        if (k == mark) continue;
        StabilizationMark n = d.marks[k];
        bool intact = true;
        for (int f = 0; f < 3; ++f)
            for (int& i : n.curves[f]) {
                i = newindex[f][i];
                intact = intact && i >= 0;
            }
        if (intact) r.marks.push_back(n);
    }
    ColoredDiagram out{r, {}};
    for (std::size_t i = 0; i < cd.coloring.size(); ++i)
        if (newindex[0][i] >= 0) out.coloring.push_back(cd.coloring[i]);
    return out;
}

ColoredDiagram reverse_orientation(const ColoredDiagram& cd, const CurveRef& c, const FiniteGroup& G) {
    if (!valid_curve(cd.diagram, c)) fail("InvalidMove", "no curve " + label(c));
    ColoredDiagram out = cd;
    auto& seq = out.diagram.sequence(c);
    std::reverse(seq.begin(), seq.end());
    for (int id : seq) out.diagram.crossings[id].sign *= -1;
    if (c.family == Family::Alpha && !out.coloring.empty()) out.coloring[c.index] = G.inv(out.coloring[c.index]);
    return out;
}

TrisectionDiagram move_basepoint(const TrisectionDiagram& d, const CurveRef& c, std::size_t offset) {
    if (!valid_curve(d, c)) fail("InvalidMove", "no curve " + label(c));
    TrisectionDiagram out = d;
    auto& seq = out.sequence(c);
    if (seq.empty() ? offset != 0 : offset >= seq.size()) fail("InvalidMove", "base point offset out of range");
    std::rotate(seq.begin(), seq.begin() + static_cast<long>(offset), seq.end());
    return out;
}

// ---- random moves ----------------------------------------------------------------------------

std::string move_kind_name(MoveKind k) {
    switch (k) {
        case MoveKind::TwoPoint: return "two-point";
        case MoveKind::ThreePoint: return "three-point";
        case MoveKind::HandleSlide: return "handle-slide";
        case MoveKind::Stabilization: return "stabilization";
        case MoveKind::Orientation: return "orientation";
        case MoveKind::BasePoint: return "base-point";
    }
    return "?";
}

namespace {

template <class T>
T pick(std::mt19937_64& rng, T lo, T hi) {  // inclusive
    return std::uniform_int_distribution<T>(lo, hi)(rng);
}

std::vector<CurveRef> all_curves(const TrisectionDiagram& d) {
    std::vector<CurveRef> out;
    for (int f = 0; f < 3; ++f)
        for (int i = 0; i < d.family_size(static_cast<Family>(f)); ++i) out.push_back({static_cast<Family>(f), i});
    return out;
}

std::vector<std::pair<int, int>> cancelling_pairs(const TrisectionDiagram& d) {
    std::vector<std::pair<int, int>> out;
    for (const CurveRef& c : all_curves(d)) {
        const auto& seq = d.sequence(c);
        const std::size_t n = seq.size();
        if (n < 2) continue;
        for (std::size_t i = 0; i < (n == 2 ? 1 : n); ++i) {
            const int x = seq[i], y = seq[(i + 1) % n];
            const auto &cx = d.crossings[x], &cy = d.crossings[y];
            if (c != cx.a) continue;  // report each pair once, from its first curve
            if (cx.a != cy.a || cx.b != cy.b || cx.sign == cy.sign) continue;
            if (adjacency(d.sequence(cx.b), x, y).empty()) continue;
            out.push_back({x, y});
        }
    }
    return out;
}

std::optional<BigonSpec> random_bigon(const TrisectionDiagram& d, std::mt19937_64& rng) {
    auto curves = all_curves(d);
    if (curves.size() < 2) return std::nullopt;
    for (int attempt = 0; attempt < 32; ++attempt) {
        const CurveRef a = curves[pick<std::size_t>(rng, 0, curves.size() - 1)];
        const CurveRef b = curves[pick<std::size_t>(rng, 0, curves.size() - 1)];
        if (a.family == b.family) continue;
        BigonSpec s;
        s.first = a;
        s.second = b;
        s.first_at = pick<std::size_t>(rng, 0, d.sequence(a).size());
        s.second_at = pick<std::size_t>(rng, 0, d.sequence(b).size());
        s.same_order = pick(rng, 0, 1) == 1;
        s.sign = pick(rng, 0, 1) == 1 ? 1 : -1;
        return s;
    }
    return std::nullopt;
}

std::string describe(const BigonSpec& s) {
    return "insert bigon " + label(s.first) + "@" + std::to_string(s.first_at) + " x " + label(s.second) + "@" +
           std::to_string(s.second_at) + (s.same_order ? " same" : " reversed") + " sign " + std::to_string(s.sign);
}

}  // namespace

MoveOutcome random_move(const ColoredDiagram& cd, MoveKind kind, const FiniteGroup& G, std::mt19937_64& rng) {
    MoveOutcome o;
    const TrisectionDiagram& d = cd.diagram;
    switch (kind) {
        case MoveKind::TwoPoint: {
            auto pairs = cancelling_pairs(d);
            if (!pairs.empty() && pick(rng, 0, 1) == 0) {
                auto [x, y] = pairs[pick<std::size_t>(rng, 0, pairs.size() - 1)];
                o.result = {apply_two_point(d, x, y), cd.coloring};
                o.trace = "remove bigon " + std::to_string(x) + "," + std::to_string(y);
                o.applied = true;
            } else if (auto s = random_bigon(d, rng)) {
                o.result = {insert_two_point(d, *s), cd.coloring};
                o.trace = describe(*s);
                o.applied = true;
            }
            break;
        }
        case MoveKind::ThreePoint: {
            ColoredDiagram base = cd;
            std::string prep;
            auto tris = find_triangles(base.diagram);
            // Bigons accumulate: a crossing-free region needs two or three before
            // a triangle appears. Start over after four without luck.
            for (int attempt = 0, depth = 0; tris.empty() && attempt < 64; ++attempt, ++depth) {
                if (depth == 4) {
                    base = cd;
                    prep.clear();
                    depth = 0;
                }
                auto s = random_bigon(base.diagram, rng);
                if (!s) break;
                base.diagram = insert_two_point(base.diagram, *s);
                prep += describe(*s) + "; ";
                tris = find_triangles(base.diagram);
            }
            if (tris.empty()) break;
            const Triangle t = tris[pick<std::size_t>(rng, 0, tris.size() - 1)];
            o.result = {apply_three_point(base.diagram, t.xy, t.xz, t.yz), base.coloring};
            o.trace = prep + "three-point " + std::to_string(t.xy) + "," + std::to_string(t.xz) + "," +
                      std::to_string(t.yz);
            o.applied = true;
            break;
        }
        case MoveKind::HandleSlide: {
            ColoredDiagram base = cd;
            std::string prep;
            if (d.genus < 2) {
                if (d.heegaard) break;
                base = stabilize(cd, G);
                prep = "stabilize; ";
            }
            std::vector<Family> fams{Family::Alpha, Family::Beta};
            if (!d.heegaard) fams.push_back(Family::Kappa);
            const Family f = fams[pick<std::size_t>(rng, 0, fams.size() - 1)];
            const int g = base.diagram.family_size(f);
            SlideSpec s;
            s.moving = {f, pick(rng, 0, g - 1)};
            do s.over = {f, pick(rng, 0, g - 1)};
            while (s.over == s.moving);
            s.at = pick<std::size_t>(rng, 0, base.diagram.sequence(s.moving).size());
            const std::size_t n = base.diagram.sequence(s.over).size();
            s.from = n == 0 ? 0 : pick<std::size_t>(rng, 0, n - 1);
            s.side = pick(rng, 0, 1) == 1 ? BandSide::Left : BandSide::Right;
            o.result = apply_handle_slide(base, s, G);
            o.trace = prep + "slide " + label(s.moving) + "@" + std::to_string(s.at) + " over " + label(s.over) + "@" +
                      std::to_string(s.from) + (s.side == BandSide::Left ? " left" : " right");
            o.applied = true;
            break;
        }
        case MoveKind::Stabilization: {
            if (d.heegaard) break;
            if (!d.marks.empty() && pick(rng, 0, 1) == 0) {
                try {
                    o.result = destabilize(cd);
                    o.trace = "destabilize";
                    o.applied = true;
                    break;
                } catch (const Error&) {
                }
            }
            // Round trip so the removal path is exercised on every application.
            ColoredDiagram up = stabilize(cd, G);
            if (pick(rng, 0, 1) == 0) {
                o.result = up;
                o.trace = "stabilize";
            } else {
                o.result = destabilize(up);
                o.trace = "stabilize; destabilize";
            }
            o.applied = true;
            break;
        }
        case MoveKind::Orientation: {
            auto curves = all_curves(d);
            if (curves.empty()) break;
            const CurveRef c = curves[pick<std::size_t>(rng, 0, curves.size() - 1)];
            o.result = reverse_orientation(cd, c, G);
            o.trace = "reverse " + label(c);
            o.applied = true;
            break;
        }
        case MoveKind::BasePoint: {
            ColoredDiagram base = cd;
            std::string prep;
            auto movable = [](const TrisectionDiagram& t) {
                std::vector<CurveRef> out;
                for (const CurveRef& c : all_curves(t))
                    if (t.sequence(c).size() >= 2) out.push_back(c);
                return out;
            };
            auto curves = movable(base.diagram);
            if (curves.empty()) {
                // Nothing to rotate: a bigon gives two curves a pair of crossings.
                auto s = random_bigon(base.diagram, rng);
                if (!s) break;
                base.diagram = insert_two_point(base.diagram, *s);
                prep = describe(*s) + "; ";
                curves = movable(base.diagram);
            }
            const CurveRef c = curves[pick<std::size_t>(rng, 0, curves.size() - 1)];
            const std::size_t off = pick<std::size_t>(rng, 1, base.diagram.sequence(c).size() - 1);
            o.result = {move_basepoint(base.diagram, c, off), base.coloring};
            o.trace = prep + "base point " + label(c) + " +" + std::to_string(off);
            o.applied = true;
            break;
        }
    }
    return o;
}

}  // namespace ht
