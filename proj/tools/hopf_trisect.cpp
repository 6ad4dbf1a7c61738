// Command-line front end. Exit codes: 0 success, 1 domain failure (axioms,
// invariance, invalid coloring, ...), 2 unreadable input or bad usage.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "hopf_trisect/examples.hpp"
#include "hopf_trisect/io.hpp"
#include "hopf_trisect/properties.hpp"

namespace fs = std::filesystem;
using namespace ht;

namespace {

struct RunConfig {
    std::string backend = "exact";
    double tolerance = kDefaultTolerance;
    std::string root_branch = "principal";
    std::string output = "text";
    std::uint64_t seed = 1;
    int trials = 50;
    bool json() const { return output == "json"; }
    RootBranch branch() const { return root_branch == "real" ? RootBranch::Real : RootBranch::Principal; }
};

// Inputs shared by the diagram subcommands.
struct Sources {
    std::string builtin_diagram;
    std::string diagram_file;
    std::string builtin_triplet;
    std::string triplet_file;
    std::string color;
    std::string coloring_file;
    std::string monodromy;
};

template <class K>
Json value_json(const K& v) {
    return scalar_to_json(v);
}

template <class K>
Json zeta_power_json(const ZetaPower<K>& z) {
    return Json{{"coefficient", value_json(z.coefficient)}, {"zeta_power", -z.power}, {"zeta_cube", value_json(z.cube)}};
}

template <class K>
struct LoadedTriplet {
    std::string label;
    HopfGTriplet<K> triplet;
    IntegralBundle<K> integrals;
};

template <class K>
LoadedTriplet<K> load_triplet(const Sources& s) {
    if (!s.triplet_file.empty()) {
        const fs::path p = s.triplet_file;
        Json j = read_json_file(p);
        auto t = triplet_from_json<K>(j, p.parent_path());
        auto e = triplet_integrals_from_json(j, t);
        return {p.filename().string(), std::move(t), std::move(e)};
    }
    auto f = builtin_fixture<K>(s.builtin_triplet.empty() ? "d8" : s.builtin_triplet);
    return {f.name, std::move(f.triplet), std::move(f.integrals)};
}

std::pair<std::string, TrisectionDiagram> load_diagram(const Sources& s) {
    if (!s.diagram_file.empty()) {
        std::ifstream in(s.diagram_file);
        if (!in) fail("ParseError", "cannot open " + s.diagram_file);
        std::stringstream buf;
        buf << in.rdbuf();
        return {fs::path(s.diagram_file).filename().string(), diagram_from_json(buf.str())};
    }
    if (s.builtin_diagram.empty()) fail("ParseError", "give --builtin or --diagram");
    return {s.builtin_diagram, builtin_diagram(s.builtin_diagram)};
}

// Comma-separated element names or indices.
std::vector<int> parse_elements(const std::string& text, const FiniteGroup& G) {
    std::vector<int> out;
    std::stringstream in(text);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        tok.erase(std::remove_if(tok.begin(), tok.end(), ::isspace), tok.end());
        if (tok.empty()) continue;
        int a = G.find(tok);
        if (a < 0) {
            try {
                std::size_t used = 0;
                a = std::stoi(tok, &used);
                if (used != tok.size()) a = -1;
            } catch (const std::exception&) {
                a = -1;
            }
            if (a < 0) fail("ParseError", "unknown group element '" + tok + "'");
            if (a >= G.order()) fail("ColoringInvalid", "element index " + tok + " is outside the group");
        }
        out.push_back(a);
    }
    return out;
}

Coloring load_coloring(const Sources& s, const TrisectionDiagram& d, const FiniteGroup& G) {
    Coloring c;
    if (!s.coloring_file.empty()) c = coloring_from_json(read_json_file(s.coloring_file));
    else if (!s.color.empty()) c = parse_elements(s.color, G);
    else c.assign(d.family_size(Family::Alpha), G.identity());
    if (static_cast<int>(c.size()) != d.family_size(Family::Alpha))
        fail("ColoringInvalid", "need " + std::to_string(d.family_size(Family::Alpha)) + " colors, got " +
                                    std::to_string(c.size()));
    for (int a : c)
        if (a < 0 || a >= G.order()) fail("ColoringInvalid", "color outside the group");
    return c;
}

std::string names_of(const Coloring& c, const FiniteGroup& G) {
    std::string s = "[";
    for (std::size_t k = 0; k < c.size(); ++k) s += (k ? "," : "") + G.name(c[k]);
    return s + "]";
}

Json names_json(const Coloring& c, const FiniteGroup& G) {
    Json a = Json::array();
    for (int x : c) a.push_back(G.name(x));
    return a;
}

template <class K>
int cmd_invariant(const RunConfig& cfg, const Sources& s) {
    auto t = load_triplet<K>(s);
    auto [name, d] = load_diagram(s);
    TrisectionInvariant<K> inv(t.triplet, t.integrals, cfg.branch(), cfg.tolerance);
    const FiniteGroup& G = inv.group();
    InvariantResult<K> r;
    Coloring c;
    if (!s.monodromy.empty()) {
        c = parse_elements(s.monodromy, G);
        r = inv.bundle(d, c);
    } else {
        c = load_coloring(s, d, G);
        r = inv.normalized(d, c);
    }
    if (cfg.json()) {
        Json j{{"diagram", name},
               {"triplet", t.label},
               {"backend", cfg.backend},
               {"genus", r.genus},
               {"coloring", c},
               {"coloring_names", names_json(c, G)},
               {"bracket", value_json(r.bracket)},
               {"stabilizer", value_json(inv.stabilizer())},
               {"zeta", r.zeta ? value_json(*r.zeta) : Json(nullptr)},
               {"root_choice", r.root_choice},
               {"Z", zeta_power_json(r.value)}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "diagram    " << name << " (genus " << r.genus << ")\n"
                  << "triplet    " << t.label << " [" << cfg.backend << "]\n"
                  << "coloring   " << names_of(c, G) << "\n"
                  << "bracket    " << Field<K>::str(r.bracket) << "\n"
                  << "<T_st>     " << Field<K>::str(inv.stabilizer()) << "\n"
                  << "zeta       " << (r.zeta ? Field<K>::str(*r.zeta) + " (" + r.root_choice + ")" : r.root_choice) << "\n"
                  << "Z          " << r.value.str() << "\n";
    }
    return 0;
}

std::vector<MoveKind> parse_kinds(const std::string& text) {
    if (text.empty() || text == "all") return {std::begin(kAllMoveKinds), std::end(kAllMoveKinds)};
    std::vector<MoveKind> out;
    std::stringstream in(text);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        bool found = false;
        for (MoveKind k : kAllMoveKinds)
            if (move_kind_name(k) == tok) {
                out.push_back(k);
                found = true;
            }
        if (!found) fail("ParseError", "unknown move kind '" + tok + "'");
    }
    return out;
}

template <class K>
int cmd_verify_moves(const RunConfig& cfg, const Sources& s, const std::string& kinds) {
    auto t = load_triplet<K>(s);
    auto [name, d] = load_diagram(s);
    TrisectionInvariant<K> inv(t.triplet, t.integrals, cfg.branch(), cfg.tolerance);
    const Coloring c = load_coloring(s, d, inv.group());
    auto run = verify_move_invariance(inv, {d, c}, parse_kinds(kinds), cfg.trials, cfg.seed, cfg.tolerance);
    if (cfg.json()) {
        Json j{{"diagram", name},        {"triplet", t.label},   {"seed", cfg.seed},
               {"trials", cfg.trials},   {"applied", run.applied}, {"skipped", run.skipped},
               {"ok", run.ok},           {"reference", zeta_power_json(run.reference)}, {"trace", run.trace}};
        if (!run.ok) j["offending"] = zeta_power_json(run.offending);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << name << " with " << t.label << ": Z = " << run.reference.str() << "\n"
                  << run.applied << " moves applied, " << run.skipped << " skipped (seed " << cfg.seed << ")\n";
        if (!run.ok) {
            std::cout << "InvarianceViolation: Z became " << run.offending.str() << "\ntrace:\n";
            for (const auto& line : run.trace) std::cout << "  " << line << "\n";
        } else {
            std::cout << "all values equal\n";
        }
    }
    return run.ok ? 0 : 1;
}

template <class K>
int cmd_sum_bundles(const RunConfig& cfg, const Sources& s) {
    auto t = load_triplet<K>(s);
    auto [name, d] = load_diagram(s);
    TrisectionInvariant<K> inv(t.triplet, t.integrals, cfg.branch(), cfg.tolerance);
    const FiniteGroup& G = inv.group();
    const auto rows = inv.bundle_table(d);
    const auto sum = inv.bundle_sum(d);
    if (cfg.json()) {
        Json table = Json::array();
        for (const auto& row : rows)
            table.push_back(Json{{"coloring", row.coloring},
                                 {"coloring_names", names_json(row.coloring, G)},
                                 {"bracket", value_json(row.result.bracket)},
                                 {"Z", zeta_power_json(row.result.value)}});
        std::cout << Json{{"diagram", name}, {"triplet", t.label}, {"rows", table}, {"sum", zeta_power_json(sum)}}.dump(2)
                  << "\n";
    } else {
        std::cout << name << " over " << t.label << ": " << rows.size() << " colorings\n";
        for (const auto& row : rows)
            std::cout << "  " << names_of(row.coloring, G) << "  bracket " << Field<K>::str(row.result.bracket)
                      << "  Z " << row.result.value.str() << "\n";
        std::cout << "sum " << sum.str() << "\n";
    }
    return 0;
}

template <class K>
int cmd_demo_d8(const RunConfig& cfg) {
    const auto m = d8_maps();
    const auto f = d8_fixture<K>();
    TrisectionInvariant<K> inv(f.triplet, f.integrals, cfg.branch(), cfg.tolerance);
    const auto d = builtin_diagram("s1_x_s3");
    const FiniteGroup& G = inv.group();
    Json rows = Json::array();
    if (!cfg.json())
        std::cout << "S1 x S3 bundles over D8, phi = phi': D4 -> D8, (s,r) -> (s,r^4)\n"
                  << "<T_st> = " << Field<K>::str(inv.stabilizer()) << ", zeta: " << inv.root_choice() << "\n"
                  << "alpha    |fiber|  bracket  Z\n";
    for (int a = 0; a < G.order(); ++a) {
        const auto r = inv.normalized(d, {a});
        const auto fiber = m.phi.preimage(a).size();
        if (cfg.json())
            rows.push_back(Json{{"alpha", G.name(a)},
                                {"fiber", fiber},
                                {"in_image", fiber > 0},
                                {"bracket", value_json(r.bracket)},
                                {"Z", zeta_power_json(r.value)}});
        else
            std::cout << "  " << std::left << std::setw(7) << G.name(a) << std::setw(9) << fiber << std::setw(9)
                      << Field<K>::str(r.bracket) << r.value.str() << "\n";
    }
    if (cfg.json())
        std::cout << Json{{"stabilizer", value_json(inv.stabilizer())}, {"root_choice", inv.root_choice()}, {"rows", rows}}
                         .dump(2)
                  << "\n";
    return 0;
}

template <class K>
int cmd_check_hopf(const RunConfig& cfg, const std::string& file, const std::string& builtin) {
    Report r;
    bool involutive = true;
    std::string what;
    if (!builtin.empty()) {
        auto f = builtin_fixture<K>(builtin);
        r.merge(check_hopf_g_algebra(f.triplet.alpha, cfg.tolerance), "alpha ");
        r.merge(check_hopf_g_coalgebra(f.triplet.beta, cfg.tolerance), "beta ");
        r.merge(check_hopf_g_coalgebra(f.triplet.kappa, cfg.tolerance), "kappa ");
        r.merge(check_triplet(f.triplet, cfg.tolerance), "triplet ");
        involutive = check_involutory(f.triplet.alpha, cfg.tolerance) && check_involutory(f.triplet.beta, cfg.tolerance) &&
                     check_involutory(f.triplet.kappa, cfg.tolerance);
        what = "triplet " + builtin;
    } else {
        const fs::path p = file;
        const Json j = read_json_file(p);
        const std::string kind = j.value("kind", std::string("hopf_g_coalgebra"));
        if (kind == "hopf_g_coalgebra") {
            auto H = coalgebra_from_json<K>(j, p.parent_path());
            r = check_hopf_g_coalgebra(H, cfg.tolerance);
            involutive = check_involutory(H, cfg.tolerance);
        } else if (kind == "hopf_g_algebra") {
            auto A = algebra_from_json<K>(j, p.parent_path());
            r = check_hopf_g_algebra(A, cfg.tolerance);
            involutive = check_involutory(A, cfg.tolerance);
        } else if (kind == "hopf_g_triplet") {
            auto t = triplet_from_json<K>(j, p.parent_path());
            r.merge(check_hopf_g_algebra(t.alpha, cfg.tolerance), "alpha ");
            r.merge(check_hopf_g_coalgebra(t.beta, cfg.tolerance), "beta ");
            r.merge(check_hopf_g_coalgebra(t.kappa, cfg.tolerance), "kappa ");
            r.merge(check_triplet(t, cfg.tolerance), "triplet ");
            involutive = check_involutory(t.alpha, cfg.tolerance) && check_involutory(t.beta, cfg.tolerance) &&
                         check_involutory(t.kappa, cfg.tolerance);
        } else {
            fail("ParseError", "unknown structure kind '" + kind + "'");
        }
        what = p.filename().string() + " (" + kind + ")";
    }
    const bool ok = r.ok() && involutive;
    if (cfg.json()) {
        Json entries = Json::array();
        for (const auto& e : r.entries)
            entries.push_back(Json{{"axiom", e.axiom}, {"grading", e.grading}, {"pass", e.pass}, {"witness", e.witness},
                                   {"residual", e.residual}});
        std::cout << Json{{"structure", what}, {"ok", ok}, {"involutory", involutive}, {"entries", entries}}.dump(2)
                  << "\n";
    } else {
        std::cout << what << "\n" << r.summary() << "involutory: " << (involutive ? "yes" : "no") << "\n";
        if (!ok) std::cout << "AxiomFailure\n";
    }
    return ok ? 0 : 1;
}

template <class K>
std::string coeffs(const std::vector<K>& v) {
    std::string s;
    for (std::size_t k = 0; k < v.size(); ++k) s += (k ? " " : "") + Field<K>::str(v[k]);
    return s;
}

template <class K>
Json coeffs_json(const std::vector<K>& v) {
    Json a = Json::array();
    for (const K& x : v) a.push_back(value_json(x));
    return a;
}

template <class K>
int cmd_find_integrals(const RunConfig& cfg, const std::string& file, const std::string& builtin) {
    Json out;
    std::ostringstream text;
    auto per_grade = [&](const std::vector<std::vector<K>>& forms, const FiniteGroup& G, const char* label) {
        Json m;
        for (int g = 0; g < G.order(); ++g) {
            if (forms[g].empty()) continue;
            m[G.name(g)] = coeffs_json(forms[g]);
            text << label << "_" << G.name(g) << ": " << coeffs(forms[g]) << "\n";
        }
        return m;
    };
    auto triplet_integrals = [&](const HopfGTriplet<K>& t) {
        auto e = solve_integral_bundle(t, cfg.tolerance);
        out["alpha"] = per_grade(e.alpha, *t.alpha.group, "e_alpha");
        out["beta"] = coeffs_json(e.beta);
        out["kappa"] = coeffs_json(e.kappa);
        text << "e_beta: " << coeffs(e.beta) << "\ne_kappa: " << coeffs(e.kappa) << "\n";
    };
    if (!builtin.empty()) {
        triplet_integrals(builtin_fixture<K>(builtin).triplet);
    } else {
        const fs::path p = file;
        const Json j = read_json_file(p);
        const std::string kind = j.value("kind", std::string("hopf_g_coalgebra"));
        if (kind == "hopf_g_coalgebra") {
            auto H = coalgebra_from_json<K>(j, p.parent_path());
            auto mu = solve_g_integral(H, Side::Right, cfg.tolerance);
            auto e = solve_cointegral(H, Side::Right, cfg.tolerance);
            normalize_pair(H, mu, e);
            out["mu"] = per_grade(mu.forms, *H.group, "mu");
            out["e"] = coeffs_json(e.element);
            text << "e: " << coeffs(e.element) << "\n";
        } else if (kind == "hopf_g_algebra") {
            auto A = algebra_from_json<K>(j, p.parent_path());
            out["e"] = per_grade(solve_g_cointegral(A, Side::Right, cfg.tolerance).forms, *A.group, "e");
        } else if (kind == "hopf_g_triplet") {
            triplet_integrals(triplet_from_json<K>(j, p.parent_path()));
        } else {
            fail("ParseError", "unknown structure kind '" + kind + "'");
        }
    }
    if (cfg.json()) std::cout << out.dump(2) << "\n";
    else std::cout << text.str();
    return 0;
}

void write_json(const fs::path& p, const Json& j) {
    std::ofstream out(p);
    if (!out) fail("ParseError", "cannot write " + p.string());
    out << j.dump(1) << "\n";
}

// Ships every built-in fixture and diagram as files under `dir`.
int cmd_export(const fs::path& dir) {
    fs::create_directories(dir / "diagrams");
    for (const char* name : {"d8", "z2", "z2_twisted", "s3"}) {
        const auto f = builtin_fixture<Rational>(name);
        const fs::path sub = dir / name;
        fs::create_directories(sub);
        write_json(sub / "group.json", group_to_json(*f.triplet.alpha.group));
        write_json(sub / "alpha.json", structure_to_json(f.triplet.alpha, "group.json"));
        write_json(sub / "beta.json", structure_to_json(f.triplet.beta, "group.json"));
        write_json(sub / "kappa.json", structure_to_json(f.triplet.kappa, "group.json"));
        write_json(sub / "triplet.json",
                   triplet_to_json(f.triplet, "alpha.json", "beta.json", "kappa.json", &f.integrals));
    }
    {
        // The H^phi structure of the D8 example on its own.
        const auto m = d8_maps();
        const fs::path sub = dir / "d8";
        write_json(sub / "h_phi.json", structure_to_json(function_coalgebra<Rational>(m.phi, "H^phi"), "group.json"));
    }
    auto save = [&](const std::string& file, const TrisectionDiagram& d) {
        std::ofstream out(dir / "diagrams" / (file + ".json"));
        out << diagram_to_json(d) << "\n";
    };
    for (const auto& name : builtin_diagram_names())
        if (name.find('(') == std::string::npos) save(name, builtin_diagram(name));
    for (int p = 1; p <= 5; ++p) save("heegaard_lens_" + std::to_string(p) + "_1", heegaard_lens(p, 1));
    std::cout << "wrote fixtures to " << dir.string() << "\n";
    return 0;
}

template <class K>
int dispatch(const std::string& cmd, const RunConfig& cfg, const Sources& s, const std::string& file,
             const std::string& kinds, const std::string& demo) {
    if (cmd == "check-hopf") return cmd_check_hopf<K>(cfg, file, s.builtin_triplet);
    if (cmd == "find-integrals") return cmd_find_integrals<K>(cfg, file, s.builtin_triplet);
    if (cmd == "invariant") return cmd_invariant<K>(cfg, s);
    if (cmd == "verify-moves") return cmd_verify_moves<K>(cfg, s, kinds);
    if (cmd == "sum-bundles") return cmd_sum_bundles<K>(cfg, s);
    if (cmd == "demo") {
        if (demo != "d8") fail("UnknownName", "no demo named '" + demo + "'");
        return cmd_demo_d8<K>(cfg);
    }
    fail("ParseError", "no subcommand given");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hopf G-triplet invariants of trisection diagrams"};
    app.require_subcommand(1);
    app.fallthrough();
    RunConfig cfg;
    Sources src;
    std::string file, kinds = "all", demo, export_dir = "data";

    app.add_option("--backend", cfg.backend, "exact or float")->check(CLI::IsMember({"exact", "float"}));
    app.add_option("--tolerance", cfg.tolerance, "float comparison tolerance")->check(CLI::PositiveNumber);
    app.add_option("--root-branch", cfg.root_branch, "cube root of <T_st> on the float backend")
        ->check(CLI::IsMember({"principal", "real"}));
    app.add_option("--output", cfg.output, "text or json")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--seed", cfg.seed, "seed for randomized move runs");
    app.add_option("--trials", cfg.trials, "number of random moves")->check(CLI::NonNegativeNumber);

    auto add_sources = [&](CLI::App* sub, bool coloring) {
        sub->add_option("--builtin", src.builtin_diagram, "built-in diagram name");
        sub->add_option("--diagram", src.diagram_file, "diagram JSON file");
        sub->add_option("--demo-triplet,--builtin-triplet", src.builtin_triplet, "built-in triplet: d8, z2, z2_twisted, s3");
        sub->add_option("--triplet", src.triplet_file, "triplet JSON file");
        if (coloring) {
            sub->add_option("--color", src.color, "alpha colors, comma-separated names or indices");
            sub->add_option("--coloring", src.coloring_file, "coloring JSON file");
        }
    };

    auto* check = app.add_subcommand("check-hopf", "check the axioms of a structure or triplet file");
    check->add_option("file", file, "structure JSON file");
    check->add_option("--builtin", src.builtin_triplet, "built-in triplet instead of a file");
    auto* integrals = app.add_subcommand("find-integrals", "solve and print normalized integrals");
    integrals->add_option("file", file, "structure JSON file");
    integrals->add_option("--builtin", src.builtin_triplet, "built-in triplet instead of a file");
    auto* invariant = app.add_subcommand("invariant", "bracket, zeta and Z of a colored diagram");
    add_sources(invariant, true);
    invariant->add_option("--monodromy", src.monodromy, "images of the alpha generators; relators are checked");
    auto* verify = app.add_subcommand("verify-moves", "apply random moves and compare Z");
    add_sources(verify, true);
    verify->add_option("--moves", kinds, "comma-separated move kinds or 'all'");
    auto* sums = app.add_subcommand("sum-bundles", "Z for every coloring, and the sum");
    add_sources(sums, false);
    auto* demo_cmd = app.add_subcommand("demo", "worked examples");
    demo_cmd->add_option("name", demo, "d8")->required();
    auto* exp = app.add_subcommand("export", "write the built-in fixtures and diagrams as JSON files");
    exp->add_option("--dir", export_dir, "output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    const std::string cmd = app.get_subcommands().front()->get_name();
    if ((cmd == "check-hopf" || cmd == "find-integrals") && file.empty() && src.builtin_triplet.empty()) {
        std::cerr << "error: ParseError: give a structure file or --builtin\n";
        return 2;
    }
    try {
        if (cmd == "export") return cmd_export(export_dir);
        if (cfg.backend == "float") return dispatch<Complex>(cmd, cfg, src, file, kinds, demo);
        return dispatch<Rational>(cmd, cfg, src, file, kinds, demo);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.kind() == "ParseError" ? 2 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
