#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "hopf_trisect/diagram.hpp"
#include "hopf_trisect/group.hpp"
#include "hopf_trisect/pairing.hpp"

namespace ht {

using Json = nlohmann::json;

// Every loader throws ParseError on malformed input. References to other files
// ("group": "d8.json") resolve against `base`; inline objects work too.

// {"order": n, "cayley": [[...]], "names": [...]}
Json group_to_json(const FiniteGroup& G);
FiniteGroup group_from_json(const Json& j);

// {"source": ref, "target": ref, "images": [...]}
Json hom_to_json(const GroupHom& f);
GroupHom hom_from_json(const Json& j, const std::filesystem::path& base = {});

// Scalars: exact values as ["num", "den"], floats as [re, im]. Either form
// loads into the float backend; the exact backend rejects float pairs.
template <class K>
Json scalar_to_json(const K& v);
template <class K>
K scalar_from_json(const Json& j);

// {"kind": "hopf_g_coalgebra", "name", "group": ref, "dims": [...],
//  "mult": {"g": [...]}, "unit": {"g": [...]}, "comult": {"g,h": [...]},
//  "counit": [...], "antipode": {"g": [...]}}
// Entry arrays are row-major over the tensor legs (inputs first).
// "hopf_g_algebra" files carry comult/counit per g, mult per "g,h" and one unit.
template <class K>
Json structure_to_json(const HopfGCoalgebra<K>& H, const Json& group_ref);
template <class K>
Json structure_to_json(const HopfGAlgebra<K>& A, const Json& group_ref);
template <class K>
HopfGCoalgebra<K> coalgebra_from_json(const Json& j, const std::filesystem::path& base = {});
template <class K>
HopfGAlgebra<K> algebra_from_json(const Json& j, const std::filesystem::path& base = {});

// {"kind": "hopf_g_triplet", "alpha": ref, "beta": ref, "kappa": ref,
//  "form_kb": [...], "form_ab": {"g": [...]}, "form_ak": {"g": [...]},
//  "integrals"?: {"alpha": {"g": [...]}, "beta": [...], "kappa": [...]}}
template <class K>
Json triplet_to_json(const HopfGTriplet<K>& t, const Json& alpha_ref, const Json& beta_ref, const Json& kappa_ref,
                     const IntegralBundle<K>* e = nullptr);
template <class K>
HopfGTriplet<K> triplet_from_json(const Json& j, const std::filesystem::path& base = {});
// Integrals stored alongside the triplet, or solved when absent.
template <class K>
IntegralBundle<K> triplet_integrals_from_json(const Json& j, const HopfGTriplet<K>& t);

// {"group": ref, "colors": [...]}; bare arrays are accepted.
Coloring coloring_from_json(const Json& j);

Json read_json_file(const std::filesystem::path& p);
// Resolves a reference: strings load the named file relative to `base`.
Json resolve_ref(const Json& ref, const std::filesystem::path& base, std::filesystem::path* ref_base = nullptr);

}  // namespace ht
