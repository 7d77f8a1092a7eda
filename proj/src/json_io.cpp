#include "valence/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace valence {

namespace {

[[noreturn]] void fail(const std::string& msg) {
    throw std::invalid_argument("json: " + msg);
}

const Json& field(const Json& j, const char* name) {
    if (!j.is_object() || !j.contains(name)) fail(std::string("missing field '") + name + "'");
    return j.at(name);
}

std::string element_sign(bool neg) {
    return neg ? "-" : "+";
}

}  // namespace

Json descriptor_to_json(const DescriptorPtr& d) {
    Json j;
    switch (d->kind) {
        case MonoidKind::Bicyclic: j["kind"] = "bicyclic"; break;
        case MonoidKind::Integers: j["kind"] = "integers"; break;
        case MonoidKind::Grigorchuk: j["kind"] = "grigorchuk"; break;
        case MonoidKind::FinitePermGroup:
            j["kind"] = "perm";
            j["degree"] = d->degree;
            break;
        case MonoidKind::DirectProduct: {
            j["kind"] = "direct_product";
            Json fs = Json::array();
            for (const auto& f : d->factors) fs.push_back(descriptor_to_json(f));
            j["factors"] = std::move(fs);
            break;
        }
        case MonoidKind::GraphProduct: {
            j["kind"] = "graph_product";
            j["vertices"] = d->vertex_names;
            Json es = Json::array();
            for (auto [u, v] : d->graph.edges())
                es.push_back(Json::array({d->vertex_names[u], d->vertex_names[v]}));
            j["edges"] = std::move(es);
            Json fs = Json::array();
            for (const auto& f : d->factors) fs.push_back(descriptor_to_json(f));
            j["factors"] = std::move(fs);
            break;
        }
    }
    return j;
}

DescriptorPtr descriptor_from_json(const Json& j) {
    std::string kind = field(j, "kind").get<std::string>();
    if (kind == "bicyclic") return MonoidDescriptor::bicyclic();
    if (kind == "integers") return MonoidDescriptor::integers();
    if (kind == "grigorchuk") return MonoidDescriptor::grigorchuk();
    if (kind == "perm") return MonoidDescriptor::perm_group(field(j, "degree").get<int>());
    if (kind == "direct_product") {
        std::vector<DescriptorPtr> fs;
        for (const auto& f : field(j, "factors")) fs.push_back(descriptor_from_json(f));
        return MonoidDescriptor::direct_product(std::move(fs));
    }
    if (kind == "graph_product" || kind == "storage_graph") {
        std::vector<std::string> names;
        std::vector<DescriptorPtr> fs;
        if (kind == "storage_graph") {
            for (const auto& v : field(j, "vertices")) {
                names.push_back(field(v, "id").get<std::string>());
                fs.push_back(field(v, "looped").get<bool>() ? MonoidDescriptor::integers()
                                                            : MonoidDescriptor::bicyclic());
            }
        } else {
            for (const auto& v : field(j, "vertices")) names.push_back(v.get<std::string>());
            for (const auto& f : field(j, "factors")) fs.push_back(descriptor_from_json(f));
        }
        Adjacency g(static_cast<int>(names.size()));
        auto index_of = [&](const Json& v) {
            std::string name = v.get<std::string>();
            for (std::size_t i = 0; i < names.size(); ++i)
                if (names[i] == name) return static_cast<int>(i);
            fail("unknown vertex '" + name + "'");
            return -1;
        };
        for (const auto& e : field(j, "edges")) {
            if (!e.is_array() || e.size() != 2) fail("edge must be a pair");
            g.add_edge(index_of(e[0]), index_of(e[1]));
        }
        return MonoidDescriptor::graph_product(std::move(g), std::move(fs), std::move(names));
    }
    fail("unknown monoid kind '" + kind + "'");
}

Json element_to_json(const MonoidElement& e) {
    const auto& d = e.descriptor();
    switch (d->kind) {
        case MonoidKind::Bicyclic: {
            auto [a, b] = std::get<MonoidElement::BicyclicPayload>(e.payload());
            return Json::array({a, b});
        }
        case MonoidKind::Integers: return std::get<std::int64_t>(e.payload());
        case MonoidKind::FinitePermGroup: {
            Json out = Json::array();
            for (auto v : std::get<std::vector<std::uint8_t>>(e.payload())) out.push_back(int(v));
            return out;
        }
        case MonoidKind::Grigorchuk: return std::get<std::string>(e.payload());
        case MonoidKind::GraphProduct: {
            Json out = Json::array();
            for (const auto& l : std::get<GenWord>(e.payload())) {
                Json letter;
                letter["vertex"] = d->vertex_names[l.vertex];
                letter["sign"] = element_sign(l.neg);
                out.push_back(std::move(letter));
            }
            return out;
        }
        case MonoidKind::DirectProduct: {
            Json out = Json::array();
            for (const auto& c : std::get<ElementTuple>(e.payload()))
                out.push_back(element_to_json(c));
            return out;
        }
    }
    fail("bad element");
}

MonoidElement element_from_json(const DescriptorPtr& d, const Json& j) {
    switch (d->kind) {
        case MonoidKind::Bicyclic: {
            if (!j.is_array() || j.size() != 2) fail("bicyclic element must be [a,b]");
            return {d, MonoidElement::BicyclicPayload{j[0].get<std::uint64_t>(),
                                                      j[1].get<std::uint64_t>()}};
        }
        case MonoidKind::Integers: return {d, j.get<std::int64_t>()};
        case MonoidKind::FinitePermGroup: {
            std::vector<std::uint8_t> perm;
            for (const auto& v : j) perm.push_back(static_cast<std::uint8_t>(v.get<int>()));
            return {d, std::move(perm)};
        }
        case MonoidKind::Grigorchuk: return {d, j.get<std::string>()};
        case MonoidKind::GraphProduct: {
            GenWord w;
            for (const auto& l : j) {
                int vertex = d->find_vertex(field(l, "vertex").get<std::string>());
                if (vertex < 0) fail("unknown vertex in element");
                std::string sign = field(l, "sign").get<std::string>();
                if (sign != "+" && sign != "-") fail("sign must be '+' or '-'");
                w.push_back(GenLetter{vertex, sign == "-"});
            }
            return {d, std::move(w)};
        }
        case MonoidKind::DirectProduct: {
            if (!j.is_array() || j.size() != d->factors.size())
                fail("direct product element arity mismatch");
            ElementTuple t;
            for (std::size_t i = 0; i < d->factors.size(); ++i)
                t.push_back(element_from_json(d->factors[i], j[i]));
            return {d, std::move(t)};
        }
    }
    fail("bad element kind");
}

Json automaton_to_json(const ValenceAutomaton& a) {
    Json j;
    j["states"] = a.states();
    j["alphabet"] = a.alphabet()->symbols();
    j["monoid"] = descriptor_to_json(a.monoid());
    Json edges = Json::array();
    for (const auto& e : a.edges()) {
        Json je;
        je["from"] = a.states()[e.from];
        je["input"] = e.symbol ? a.alphabet()->symbol(*e.symbol) : std::string{};
        je["element"] = element_to_json(e.element);
        je["to"] = a.states()[e.to];
        edges.push_back(std::move(je));
    }
    j["edges"] = std::move(edges);
    j["initial"] = a.states()[a.initial()];
    Json finals = Json::array();
    for (int f : a.finals()) finals.push_back(a.states()[f]);
    j["finals"] = std::move(finals);
    return j;
}

ValenceAutomaton automaton_from_json(const Json& j) {
    std::vector<std::string> states;
    for (const auto& s : field(j, "states")) states.push_back(s.get<std::string>());
    for (std::size_t i = 0; i < states.size(); ++i)
        for (std::size_t k = i + 1; k < states.size(); ++k)
            if (states[i] == states[k]) fail("duplicate state name '" + states[i] + "'");
    std::vector<std::string> symbols;
    for (const auto& s : field(j, "alphabet")) symbols.push_back(s.get<std::string>());
    auto alphabet = Alphabet::make(std::move(symbols));
    auto monoid = descriptor_from_json(field(j, "monoid"));

    auto state_index = [&](const Json& v) {
        std::string name = v.get<std::string>();
        for (std::size_t i = 0; i < states.size(); ++i)
            if (states[i] == name) return static_cast<int>(i);
        fail("unknown state '" + name + "'");
        return -1;
    };

    std::vector<ValenceAutomaton::RawEdge> edges;
    for (const auto& je : field(j, "edges")) {
        std::vector<int> word;
        const Json& input = field(je, "input");
        if (input.is_string()) {
            word = parse_word(*alphabet, input.get<std::string>());
        } else {
            for (const auto& s : input) {
                int idx = alphabet->index(s.get<std::string>());
                if (idx < 0) fail("unknown input symbol");
                word.push_back(idx);
            }
        }
        edges.push_back(ValenceAutomaton::RawEdge{
            state_index(field(je, "from")), std::move(word),
            element_from_json(monoid, field(je, "element")), state_index(field(je, "to"))});
    }
    int initial = state_index(field(j, "initial"));
    std::vector<int> finals;
    for (const auto& f : field(j, "finals")) finals.push_back(state_index(f));
    return ValenceAutomaton(std::move(states), std::move(alphabet), std::move(monoid),
                            std::move(edges), initial, std::move(finals));
}

Json storage_graph_to_json(const StorageGraph& g) {
    Json j;
    Json vs = Json::array();
    for (int v = 0; v < g.size(); ++v) {
        Json jv;
        jv["id"] = g.names[v];
        jv["looped"] = static_cast<bool>(g.looped[v]);
        vs.push_back(std::move(jv));
    }
    j["vertices"] = std::move(vs);
    Json es = Json::array();
    for (auto [u, v] : g.adj.edges()) es.push_back(Json::array({g.names[u], g.names[v]}));
    j["edges"] = std::move(es);
    return j;
}

namespace {

template <typename PerVertex>
void parse_graph_common(const Json& j, std::vector<std::string>& names, Adjacency& adj,
                        PerVertex per_vertex) {
    for (const auto& v : field(j, "vertices")) {
        names.push_back(field(v, "id").get<std::string>());
        per_vertex(v);
    }
    adj = Adjacency(static_cast<int>(names.size()));
    auto index_of = [&](const Json& v) {
        std::string name = v.get<std::string>();
        for (std::size_t i = 0; i < names.size(); ++i)
            if (names[i] == name) return static_cast<int>(i);
        fail("unknown vertex '" + name + "'");
        return -1;
    };
    for (const auto& e : field(j, "edges")) {
        if (!e.is_array() || e.size() != 2) fail("edge must be a pair");
        adj.add_edge(index_of(e[0]), index_of(e[1]));
    }
}

}  // namespace

StorageGraph storage_graph_from_json(const Json& j) {
    StorageGraph g;
    parse_graph_common(j, g.names, g.adj, [&](const Json& v) {
        g.looped.push_back(v.contains("looped") && v.at("looped").get<bool>());
    });
    return g;
}

AnnotatedProductGraph annotated_graph_from_json(const Json& j) {
    AnnotatedProductGraph g;
    parse_graph_common(j, g.names, g.adj, [&](const Json& v) {
        VertexAnnotation a;
        if (v.contains("annot")) {
            const Json& ja = v.at("annot");
            if (ja.contains("fri")) a.fri = ja.at("fri").get<bool>();
            if (ja.contains("context_free")) a.context_free = ja.at("context_free").get<bool>();
            if (ja.contains("j_trivial")) a.j_trivial = ja.at("j_trivial").get<bool>();
        }
        g.annotations.push_back(a);
    });
    return g;
}

Json multiset_to_json(const Multiset& m) {
    Json j = Json::object();
    for (int i = 0; i < m.alphabet()->size(); ++i)
        if (m.count(i) > 0) j[m.alphabet()->symbol(i)] = m.count(i);
    return j;
}

Multiset multiset_from_json(const AlphabetPtr& alphabet, const Json& j) {
    Multiset m(alphabet);
    for (auto it = j.begin(); it != j.end(); ++it) {
        int idx = alphabet->index(it.key());
        if (idx < 0) fail("multiset symbol '" + it.key() + "' not in alphabet");
        m.count(idx) = it.value().get<std::uint64_t>();
    }
    return m;
}

Json semilinear_to_json(const SemilinearSet& s) {
    Json j;
    j["alphabet"] = s.alphabet()->symbols();
    Json comps = Json::array();
    for (const auto& c : s.components()) {
        Json jc;
        jc["base"] = multiset_to_json(c.base);
        Json periods = Json::array();
        for (const auto& p : c.periods) periods.push_back(multiset_to_json(p));
        jc["periods"] = std::move(periods);
        comps.push_back(std::move(jc));
    }
    j["components"] = std::move(comps);
    return j;
}

SemilinearSet semilinear_from_json(const Json& j) {
    std::vector<std::string> symbols;
    for (const auto& s : field(j, "alphabet")) symbols.push_back(s.get<std::string>());
    auto alphabet = Alphabet::make(std::move(symbols));
    SemilinearSet out(alphabet);
    for (const auto& jc : field(j, "components")) {
        Multiset base = multiset_from_json(alphabet, field(jc, "base"));
        std::vector<Multiset> periods;
        for (const auto& jp : field(jc, "periods"))
            periods.push_back(multiset_from_json(alphabet, jp));
        out.add(LinearSet(std::move(base), std::move(periods)));
    }
    return out;
}

AmalgamSpec amalgam_from_json(const Json& j) {
    const Json& jf = field(j, "factors");
    if (!jf.is_array() || jf.size() != 2) fail("amalgam needs exactly two factors");
    AmalgamFactor factors[2];
    for (int i = 0; i < 2; ++i) {
        factors[i].monoid = descriptor_from_json(field(jf[i], "monoid"));
        for (const auto& js : field(jf[i], "alphabet"))
            factors[i].alphabet.push_back(
                GeneratorSymbol{field(js, "symbol").get<std::string>(),
                                element_from_json(factors[i].monoid, field(js, "value"))});
    }
    std::optional<FiniteSubgroup> subgroup;
    if (j.contains("subgroup") && !j.at("subgroup").is_null()) {
        const Json& js = j.at("subgroup");
        FiniteSubgroup f;
        const Json& embeddings = field(js, "embeddings");
        if (!embeddings.is_array() || embeddings.size() != 2)
            fail("subgroup embeddings must list both factors");
        for (const auto& e : embeddings[0])
            f.embed0.push_back(element_from_json(factors[0].monoid, e));
        for (const auto& e : embeddings[1])
            f.embed1.push_back(element_from_json(factors[1].monoid, e));
        const Json& symbols = field(js, "symbols");
        auto symbol_index = [&](int factor, const Json& name) {
            std::string n = name.get<std::string>();
            for (std::size_t s = 0; s < factors[factor].alphabet.size(); ++s)
                if (factors[factor].alphabet[s].name == n) return static_cast<int>(s);
            fail("unknown designated symbol '" + n + "'");
            return -1;
        };
        for (const auto& n : symbols[0]) f.symbol_of0.push_back(symbol_index(0, n));
        for (const auto& n : symbols[1]) f.symbol_of1.push_back(symbol_index(1, n));
        subgroup = std::move(f);
    }
    return AmalgamSpec(std::move(factors[0]), std::move(factors[1]), std::move(subgroup));
}

Json extraction_to_json(const ExtractionResult& r, bool emit_edge_level) {
    Json j;
    j["assembled"] = semilinear_to_json(r.assembled);
    j["complete"] = r.complete;
    j["complete_within_radius"] = r.complete_within_radius;
    j["audit_violations"] = r.audit_violations;
    if (emit_edge_level) j["edge_level"] = semilinear_to_json(r.edge_level);
    return j;
}

std::string automaton_to_dot(const ValenceAutomaton& a) {
    std::ostringstream os;
    os << "digraph valence {\n  rankdir=LR;\n  node [shape=circle];\n";
    os << "  __start [shape=point];\n";
    for (std::size_t i = 0; i < a.states().size(); ++i) {
        os << "  q" << i << " [label=\"" << a.states()[i] << "\"";
        if (a.is_final(static_cast<int>(i))) os << ", shape=doublecircle";
        os << "];\n";
    }
    os << "  __start -> q" << a.initial() << ";\n";
    for (const auto& e : a.edges()) {
        std::string input = e.symbol ? a.alphabet()->symbol(*e.symbol) : "λ";
        os << "  q" << e.from << " -> q" << e.to << " [label=\"" << input << " / "
           << element_to_json(e.element).dump() << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

std::string storage_graph_to_dot(const StorageGraph& g) {
    std::ostringstream os;
    os << "graph storage {\n  node [shape=circle];\n";
    for (int v = 0; v < g.size(); ++v) {
        os << "  v" << v << " [label=\"" << g.names[v] << (g.looped[v] ? " °" : "") << "\"";
        if (g.looped[v]) os << ", peripheries=2";
        os << "];\n";
    }
    for (auto [u, v] : g.adj.edges()) os << "  v" << u << " -- v" << v << ";\n";
    os << "}\n";
    return os.str();
}

Json parse_json_text(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("json parse error: ") + e.what());
    }
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_json_text(buffer.str());
}

}  // namespace valence
