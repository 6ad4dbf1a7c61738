#include "hopf_trisect/io.hpp"

#include <fstream>
#include <cstdio>

#include "hopf_trisect/errors.hpp"
#include "hopf_trisect/hopf.hpp"

namespace ht {

namespace {

[[noreturn]] void parse_error(const std::string& what) { fail("ParseError", what); }

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) parse_error(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

std::string key1(int g) { return std::to_string(g); }
std::string key2(int g, int h) { return std::to_string(g) + "," + std::to_string(h); }

template <class K>
Json entries_to_json(const Tensor<K>& t) {
    Json a = Json::array();
    for (const K& v : t.data()) a.push_back(scalar_to_json(v));
    return a;
}

template <class K>
void fill(Tensor<K>& t, const Json& entries, const std::string& where) {
    if (!entries.is_array()) parse_error(where + ": entries must be an array");
    if (entries.size() != t.size())
        parse_error(where + ": expected " + std::to_string(t.size()) + " entries, got " + std::to_string(entries.size()));
    for (std::size_t k = 0; k < t.size(); ++k) t[k] = scalar_from_json<K>(entries[k]);
}

// Missing keys leave zero tensors: zero sectors need no entries.
template <class K>
void fill_keyed(std::vector<Tensor<K>>& ts, const Json& j, const char* name, int n, bool pairs) {
    if (!j.contains(name)) return;
    const Json& m = j.at(name);
    if (!m.is_object()) parse_error(std::string(name) + " must map grading keys to entries");
    for (auto it = m.begin(); it != m.end(); ++it) {
        int g = -1, h = -1;
        char tail = 0;
        const int got = pairs ? std::sscanf(it.key().c_str(), "%d,%d%c", &g, &h, &tail)
                              : std::sscanf(it.key().c_str(), "%d%c", &g, &tail);
        const bool ok = got == (pairs ? 2 : 1) && g >= 0 && g < n && (!pairs || (h >= 0 && h < n));
        if (!ok) parse_error(std::string(name) + ": bad grading key \"" + it.key() + "\"");
        const std::size_t idx = pairs ? static_cast<std::size_t>(g) * n + h : g;
        fill(ts[idx], it.value(), std::string(name) + "[" + it.key() + "]");
    }
}

std::vector<std::size_t> read_dims(const Json& j, int n) {
    const Json& d = field(j, "dims");
    if (!d.is_array() || static_cast<int>(d.size()) != n) parse_error("dims must list one dimension per group element");
    std::vector<std::size_t> dims;
    for (const Json& v : d) {
        if (!v.is_number_integer() || v.get<long>() < 0) parse_error("dims must be non-negative integers");
        dims.push_back(v.get<std::size_t>());
    }
    return dims;
}

void expect_kind(const Json& j, const char* kind) {
    if (!j.is_object()) parse_error("expected a JSON object");
    if (j.contains("kind") && j.at("kind") != kind) parse_error(std::string("expected kind \"") + kind + "\"");
}

}  // namespace

Json read_json_file(const std::filesystem::path& p) {
    std::ifstream in(p);
    if (!in) parse_error("cannot open " + p.string());
    try {
        return Json::parse(in);
    } catch (const Json::exception& e) {
        parse_error(p.string() + ": " + e.what());
    }
}

Json resolve_ref(const Json& ref, const std::filesystem::path& base, std::filesystem::path* ref_base) {
    if (ref.is_string()) {
        const auto p = base / ref.get<std::string>();
        if (ref_base) *ref_base = p.parent_path();
        return read_json_file(p);
    }
    if (ref_base) *ref_base = base;
    if (!ref.is_object()) parse_error("a reference must be a file name or an inline object");
    return ref;
}

Json group_to_json(const FiniteGroup& G) {
    return Json{{"order", G.order()}, {"cayley", G.table()}, {"names", G.names()}};
}

FiniteGroup group_from_json(const Json& j) {
    try {
        const int n = field(j, "order").get<int>();
        auto table = field(j, "cayley").get<std::vector<std::vector<int>>>();
        if (static_cast<int>(table.size()) != n) parse_error("cayley table size differs from order");
        std::vector<std::string> names;
        if (j.contains("names")) names = j.at("names").get<std::vector<std::string>>();
        return FiniteGroup::from_cayley(table, names);
    } catch (const Json::exception& e) {
        parse_error(std::string("group: ") + e.what());
    }
}

Json hom_to_json(const GroupHom& f) {
    return Json{{"source", group_to_json(*f.source())}, {"target", group_to_json(*f.target())}, {"images", f.images()}};
}

GroupHom hom_from_json(const Json& j, const std::filesystem::path& base) {
    auto src = share(group_from_json(resolve_ref(field(j, "source"), base)));
    auto tgt = share(group_from_json(resolve_ref(field(j, "target"), base)));
    try {
        return GroupHom::from_map(src, tgt, field(j, "images").get<std::vector<int>>());
    } catch (const Json::exception& e) {
        parse_error(std::string("hom: ") + e.what());
    }
}

template <>
Json scalar_to_json<Rational>(const Rational& v) {
    return Json::array({v.get_num().get_str(), v.get_den().get_str()});
}

template <>
Json scalar_to_json<Complex>(const Complex& v) {
    return Json::array({v.real(), v.imag()});
}

template <>
Rational scalar_from_json<Rational>(const Json& j) {
    auto part = [](const Json& p) -> mpz_class {
        if (p.is_number_integer()) return mpz_class(std::to_string(p.get<long long>()));
        if (p.is_string()) {
            mpz_class z;
            if (z.set_str(p.get<std::string>(), 10) != 0) parse_error("not an integer: " + p.get<std::string>());
            return z;
        }
        parse_error("exact entries need integer parts; float data needs --backend float");
    };
    if (j.is_number_integer()) return Rational(part(j));
    if (!j.is_array() || j.size() != 2) parse_error("an exact entry is [num, den]");
    mpz_class den = part(j[1]);
    if (den == 0) parse_error("zero denominator");
    Rational q(part(j[0]), den);
    q.canonicalize();
    return q;
}

template <>
Complex scalar_from_json<Complex>(const Json& j) {
    if (j.is_number()) return Complex(j.get<double>(), 0.0);
    if (!j.is_array() || j.size() != 2) parse_error("a float entry is [re, im]");
    if (j[0].is_string() || j[1].is_string()) {
        const Rational q = scalar_from_json<Rational>(j);
        return Complex(q.get_d(), 0.0);
    }
    if (!j[0].is_number() || !j[1].is_number()) parse_error("a float entry is [re, im]");
    return Complex(j[0].get<double>(), j[1].get<double>());
}

template <class K>
Json structure_to_json(const HopfGCoalgebra<K>& H, const Json& group_ref) {
    const int n = H.order();
    Json j{{"kind", "hopf_g_coalgebra"}, {"name", H.name}, {"group", group_ref}, {"dims", H.dims}};
    Json mult, unit, comult, antipode;
    for (int g = 0; g < n; ++g) {
        mult[key1(g)] = entries_to_json(H.mult[g]);
        unit[key1(g)] = entries_to_json(H.unit[g]);
        antipode[key1(g)] = entries_to_json(H.antipode[g]);
        for (int h = 0; h < n; ++h) comult[key2(g, h)] = entries_to_json(H.Delta(g, h));
    }
    j["mult"] = mult;
    j["unit"] = unit;
    j["comult"] = comult;
    j["counit"] = entries_to_json(H.counit);
    j["antipode"] = antipode;
    return j;
}

template <class K>
Json structure_to_json(const HopfGAlgebra<K>& A, const Json& group_ref) {
    const int n = A.order();
    Json j{{"kind", "hopf_g_algebra"}, {"name", A.name}, {"group", group_ref}, {"dims", A.dims}};
    Json comult, counit, mult, antipode;
    for (int g = 0; g < n; ++g) {
        comult[key1(g)] = entries_to_json(A.comult[g]);
        counit[key1(g)] = entries_to_json(A.counit[g]);
        antipode[key1(g)] = entries_to_json(A.antipode[g]);
        for (int h = 0; h < n; ++h) mult[key2(g, h)] = entries_to_json(A.M(g, h));
    }
    j["comult"] = comult;
    j["counit"] = counit;
    j["mult"] = mult;
    j["unit"] = entries_to_json(A.unit);
    j["antipode"] = antipode;
    return j;
}

template <class K>
HopfGCoalgebra<K> coalgebra_from_json(const Json& j, const std::filesystem::path& base) {
    expect_kind(j, "hopf_g_coalgebra");
    auto G = share(group_from_json(resolve_ref(field(j, "group"), base)));
    const int n = G->order();
    auto H = HopfGCoalgebra<K>::blank(G, read_dims(j, n), j.value("name", std::string{}));
    fill_keyed(H.mult, j, "mult", n, false);
    fill_keyed(H.unit, j, "unit", n, false);
    fill_keyed(H.comult, j, "comult", n, true);
    fill_keyed(H.antipode, j, "antipode", n, false);
    if (j.contains("counit")) fill(H.counit, j.at("counit"), "counit");
    return H;
}

template <class K>
HopfGAlgebra<K> algebra_from_json(const Json& j, const std::filesystem::path& base) {
    expect_kind(j, "hopf_g_algebra");
    auto G = share(group_from_json(resolve_ref(field(j, "group"), base)));
    const int n = G->order();
    auto A = HopfGAlgebra<K>::blank(G, read_dims(j, n), j.value("name", std::string{}));
    fill_keyed(A.comult, j, "comult", n, false);
    fill_keyed(A.counit, j, "counit", n, false);
    fill_keyed(A.mult, j, "mult", n, true);
    fill_keyed(A.antipode, j, "antipode", n, false);
    if (j.contains("unit")) fill(A.unit, j.at("unit"), "unit");
    return A;
}

template <class K>
Json triplet_to_json(const HopfGTriplet<K>& t, const Json& alpha_ref, const Json& beta_ref, const Json& kappa_ref,
                     const IntegralBundle<K>* e) {
    const int n = t.alpha.order();
    Json j{{"kind", "hopf_g_triplet"}, {"alpha", alpha_ref}, {"beta", beta_ref}, {"kappa", kappa_ref}};
    j["form_kb"] = entries_to_json(t.form_kb);
    Json ab, ak;
    for (int g = 0; g < n; ++g) {
        ab[key1(g)] = entries_to_json(t.form_ab[g]);
        ak[key1(g)] = entries_to_json(t.form_ak[g]);
    }
    j["form_ab"] = ab;
    j["form_ak"] = ak;
    if (e) {
        Json alpha;
        for (int g = 0; g < n; ++g) {
            Json v = Json::array();
            for (const K& x : e->alpha[g]) v.push_back(scalar_to_json(x));
            alpha[key1(g)] = v;
        }
        Json beta = Json::array(), kappa = Json::array();
        for (const K& x : e->beta) beta.push_back(scalar_to_json(x));
        for (const K& x : e->kappa) kappa.push_back(scalar_to_json(x));
        j["integrals"] = Json{{"alpha", alpha}, {"beta", beta}, {"kappa", kappa}};
    }
    return j;
}

template <class K>
HopfGTriplet<K> triplet_from_json(const Json& j, const std::filesystem::path& base) {
    expect_kind(j, "hopf_g_triplet");
    HopfGTriplet<K> t;
    std::filesystem::path b;
    {
        Json a = resolve_ref(field(j, "alpha"), base, &b);
        t.alpha = algebra_from_json<K>(a, b);
    }
    {
        Json x = resolve_ref(field(j, "beta"), base, &b);
        t.beta = coalgebra_from_json<K>(x, b);
    }
    {
        Json x = resolve_ref(field(j, "kappa"), base, &b);
        t.kappa = coalgebra_from_json<K>(x, b);
    }
    if (!(*t.beta.group == *t.alpha.group) || !(*t.kappa.group == *t.alpha.group))
        parse_error("the three structures must share one grading group");
    t.beta.group = t.kappa.group = t.alpha.group;
    const FiniteGroup& G = *t.alpha.group;
    const int n = G.order(), one = G.identity();
    t.form_kb = Tensor<K>(std::vector<Leg>{in_leg(0, one, t.kappa.dims[one]), in_leg(0, one, t.beta.dims[one])});
    fill(t.form_kb, field(j, "form_kb"), "form_kb");
    for (int g = 0; g < n; ++g) {
        t.form_ab.emplace_back(std::vector<Leg>{in_leg(0, g, t.alpha.dims[g]), in_leg(0, g, t.beta.dims[g])});
        t.form_ak.emplace_back(std::vector<Leg>{in_leg(0, g, t.alpha.dims[g]), in_leg(0, g, t.kappa.dims[g])});
    }
    fill_keyed(t.form_ab, j, "form_ab", n, false);
    fill_keyed(t.form_ak, j, "form_ak", n, false);
    return t;
}

template <class K>
IntegralBundle<K> triplet_integrals_from_json(const Json& j, const HopfGTriplet<K>& t) {
    if (!j.contains("integrals")) return solve_integral_bundle(t);
    const Json& e = j.at("integrals");
    const int n = t.alpha.order(), one = t.alpha.one();
    auto vec = [](const Json& a, std::size_t dim, const std::string& where) {
        if (!a.is_array() || a.size() != dim) parse_error(where + ": expected " + std::to_string(dim) + " coefficients");
        std::vector<K> v;
        for (const Json& x : a) v.push_back(scalar_from_json<K>(x));
        return v;
    };
    IntegralBundle<K> out;
    const Json& alpha = field(e, "alpha");
    for (int g = 0; g < n; ++g) {
        const std::string k = key1(g);
        out.alpha.push_back(alpha.contains(k) ? vec(alpha.at(k), t.alpha.dims[g], "integrals.alpha[" + k + "]")
                                              : std::vector<K>(t.alpha.dims[g], Field<K>::zero()));
    }
    out.beta = vec(field(e, "beta"), t.beta.dims[one], "integrals.beta");
    out.kappa = vec(field(e, "kappa"), t.kappa.dims[one], "integrals.kappa");
    return out;
}

Coloring coloring_from_json(const Json& j) {
    try {
        if (j.is_array()) return j.get<Coloring>();
        return field(j, "colors").get<Coloring>();
    } catch (const Json::exception& e) {
        parse_error(std::string("coloring: ") + e.what());
    }
}

#define HT_INSTANTIATE(K)                                                                                         \
    template Json structure_to_json(const HopfGCoalgebra<K>&, const Json&);                                      \
    template Json structure_to_json(const HopfGAlgebra<K>&, const Json&);                                        \
    template HopfGCoalgebra<K> coalgebra_from_json<K>(const Json&, const std::filesystem::path&);                \
    template HopfGAlgebra<K> algebra_from_json<K>(const Json&, const std::filesystem::path&);                    \
    template Json triplet_to_json(const HopfGTriplet<K>&, const Json&, const Json&, const Json&,                 \
                                  const IntegralBundle<K>*);                                                     \
    template HopfGTriplet<K> triplet_from_json<K>(const Json&, const std::filesystem::path&);                    \
    template IntegralBundle<K> triplet_integrals_from_json(const Json&, const HopfGTriplet<K>&);

HT_INSTANTIATE(Rational)
HT_INSTANTIATE(Complex)

}  // namespace ht
