#pragma once

#include <string>

#include <json.hpp>

#include "valence/amalgam.hpp"
#include "valence/automaton.hpp"
#include "valence/classifier.hpp"
#include "valence/monoid.hpp"
#include "valence/semilinear.hpp"
#include "valence/torsion.hpp"

namespace valence {

using Json = nlohmann::ordered_json;

// Monoid descriptors: {"kind": "bicyclic" | "integers" | "grigorchuk"}
//   | {"kind":"perm","degree":n}
//   | {"kind":"direct_product","factors":[...]}
//   | {"kind":"graph_product","vertices":["u",...],"edges":[["u","v"],...],
//      "factors":[...]}
//   | {"kind":"storage_graph","vertices":[{"id":"u","looped":false},...],
//      "edges":[["u","v"],...]}   (sugar: bicyclic/integer factors)
Json descriptor_to_json(const DescriptorPtr& d);
DescriptorPtr descriptor_from_json(const Json& j);

// Elements: bicyclic [a,b]; integers n; permutation [images]; grigorchuk
// "abad"; graph product [{"vertex":"u","sign":"+"},...]; direct product
// [component,...].
Json element_to_json(const MonoidElement& e);
MonoidElement element_from_json(const DescriptorPtr& d, const Json& j);

Json automaton_to_json(const ValenceAutomaton& a);
ValenceAutomaton automaton_from_json(const Json& j);

Json storage_graph_to_json(const StorageGraph& g);
StorageGraph storage_graph_from_json(const Json& j);
AnnotatedProductGraph annotated_graph_from_json(const Json& j);

Json multiset_to_json(const Multiset& m);
Multiset multiset_from_json(const AlphabetPtr& alphabet, const Json& j);
Json semilinear_to_json(const SemilinearSet& s);
SemilinearSet semilinear_from_json(const Json& j);

// {"factors":[{"monoid":{...},"alphabet":[{"symbol":"x","value":...},...]},
//  {...}],
//  "subgroup": null | {"embeddings":[[...],[...]],
//                      "symbols":[["e","t"],["e'","t'"]]}}
AmalgamSpec amalgam_from_json(const Json& j);

Json extraction_to_json(const ExtractionResult& r, bool emit_edge_level);

std::string automaton_to_dot(const ValenceAutomaton& a);
std::string storage_graph_to_dot(const StorageGraph& g);

Json parse_json_text(const std::string& text);  // wraps parse errors with position info
Json load_json_file(const std::string& path);

}  // namespace valence
