#include "c4gb/json_io.hpp"

#include <sstream>

namespace c4gb {

namespace {

Exponent exponent_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("exponent must be an array");
    Exponent e;
    for (const auto& v : j) {
        if (!v.is_number_integer() || v.get<long>() < 0)
            throw ParseError("exponent entries must be non-negative integers");
        e.push_back(v.get<int>());
    }
    return e;
}

Exponent exponent_from_key(const std::string& key, int dim) {
    Exponent e;
    std::istringstream is(key);
    std::string piece;
    while (std::getline(is, piece, ',')) {
        try {
            e.push_back(std::stoi(piece));
        } catch (const std::exception&) {
            throw ParseError("bad corner key '" + key + "'");
        }
    }
    if (key.empty()) e.clear();  // dimension-0 corner key
    if (static_cast<int>(e.size()) != dim) throw ParseError("corner key '" + key + "' has wrong arity");
    return e;
}

const Json& field_at(const Json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) throw ParseError(std::string("missing field '") + key + "'");
    return *it;
}

}  // namespace

Json json_of(const StandardSet& s) {
    Json elems = Json::array();
    for (const auto& e : s.elements()) elems.push_back(e);
    return Json{{"dim", s.dim()}, {"elements", std::move(elems)}};
}

StandardSet standard_set_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("standard set must be an object");
    int dim = field_at(j, "dim").get<int>();
    std::vector<Exponent> elems;
    for (const auto& e : field_at(j, "elements")) elems.push_back(exponent_from_json(e));
    try {
        return StandardSet::validated(std::move(elems), dim);
    } catch (const Error& e) {
        throw ParseError(std::string("invalid standard set: ") + e.what());
    }
}

Json json_of(const FieldDesc& fd) {
    switch (fd.kind) {
        case FieldKind::Q: return Json("Q");
        case FieldKind::Fp: return Json{{"Fp", fd.p}};
        case FieldKind::Fp2: break;
    }
    throw ParseError("field " + fd.str() + " has no serialized form");
}

FieldDesc field_from_json(const Json& j) {
    if (j.is_string() && j.get<std::string>() == "Q") return field_q();
    if (j.is_object() && j.contains("Fp")) {
        std::uint64_t p = j["Fp"].get<std::uint64_t>();
        if (!is_prime(p)) throw ParseError("modulus " + std::to_string(p) + " is not prime");
        return field_fp(p);
    }
    throw ParseError("field must be \"Q\" or {\"Fp\": p}");
}

Json json_of_coef(const FieldElement& c) {
    switch (c.field().kind) {
        case FieldKind::Q: return Json(c.str());
        case FieldKind::Fp: return Json(c.residue());
        case FieldKind::Fp2: break;
    }
    throw ParseError("coefficient field has no serialized form");
}

FieldElement coef_from_json(const Json& j, const FieldDesc& fd) {
    if (fd.kind == FieldKind::Fp) {
        if (j.is_number_integer()) {
            long v = j.get<long>();
            return FieldElement::from_integer(v, fd);
        }
        throw ParseError("prime-field coefficient must be an integer");
    }
    if (fd.kind == FieldKind::Q) {
        if (j.is_number_integer()) return FieldElement::rational(j.get<long>());
        if (j.is_string()) {
            try {
                mpq_class v(j.get<std::string>());
                v.canonicalize();
                return FieldElement::rational(std::move(v));
            } catch (const std::exception&) {
                throw ParseError("bad rational literal '" + j.get<std::string>() + "'");
            }
        }
        throw ParseError("rational coefficient must be an integer or \"n/d\" string");
    }
    throw ParseError("unsupported coefficient field");
}

Json json_of(const LexPolynomial& p) {
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms())  // decreasing lex order
        terms.push_back(Json{{"exp", e}, {"coef", json_of_coef(c)}});
    return Json{{"dim", p.dim()}, {"field", json_of(p.field())}, {"terms", std::move(terms)}};
}

LexPolynomial polynomial_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("polynomial must be an object");
    int dim = field_at(j, "dim").get<int>();
    FieldDesc fd = field_from_json(field_at(j, "field"));
    LexPolynomial p(dim, fd);
    for (const auto& t : field_at(j, "terms"))
        p.add_term(exponent_from_json(field_at(t, "exp")), coef_from_json(field_at(t, "coef"), fd));
    return p;
}

Json json_of(const ReducedGB& gb) {
    Json entries = Json::object();
    for (const auto& [corner, f] : gb.entries()) entries[exponent_key(corner)] = json_of(f);
    return Json{{"delta", json_of(gb.delta())}, {"field", json_of(gb.field())}, {"entries", std::move(entries)}};
}

namespace {

ReducedGB gb_from_parts(const StandardSet& delta, FieldDesc fd, const Json& entries_json) {
    std::map<Exponent, LexPolynomial, LexLess> entries;
    for (const auto& [key, value] : entries_json.items()) {
        Exponent corner = exponent_from_key(key, delta.dim());
        LexPolynomial f = value.is_object() && value.contains("terms")
                              ? polynomial_from_json(value)
                              : throw ParseError("basis entry must be a polynomial object");
        entries.emplace(std::move(corner), std::move(f));
    }
    try {
        return ReducedGB(delta, fd, std::move(entries));
    } catch (const Error& e) {
        throw ParseError(std::string("invalid basis: ") + e.what());
    }
}

}  // namespace

ReducedGB gb_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("basis must be an object");
    StandardSet delta = standard_set_from_json(field_at(j, "delta"));
    FieldDesc fd = field_from_json(field_at(j, "field"));
    return gb_from_parts(delta, fd, field_at(j, "entries"));
}

Json json_of(const PointSet& a) {
    Json pts = Json::array();
    for (const auto& pt : a.points) {
        Json row = Json::array();
        for (const auto& c : pt) row.push_back(json_of_coef(c));
        pts.push_back(std::move(row));
    }
    return Json{{"dim", a.dim}, {"field", json_of(a.field)}, {"points", std::move(pts)}};
}

PointSet point_set_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("point set must be an object");
    int dim = field_at(j, "dim").get<int>();
    FieldDesc fd = field_from_json(field_at(j, "field"));
    std::vector<std::vector<FieldElement>> pts;
    for (const auto& row : field_at(j, "points")) {
        std::vector<FieldElement> pt;
        for (const auto& c : row) pt.push_back(coef_from_json(c, fd));
        pts.push_back(std::move(pt));
    }
    try {
        return make_point_set(dim, fd, std::move(pts));
    } catch (const DuplicatePoints&) {
        throw;
    } catch (const Error& e) {
        throw ParseError(std::string("invalid point set: ") + e.what());
    }
}

Json json_of(const Decomposition& d) {
    Json parts = Json::array();
    for (const auto& [part, mult] : d.parts) parts.push_back(Json::array({json_of(part), mult}));
    return Json{{"parent_dim", d.parent_dim}, {"parts", std::move(parts)}};
}

Decomposition decomposition_from_json(const Json& j) {
    Decomposition d;
    d.parent_dim = field_at(j, "parent_dim").get<int>();
    for (const auto& pair : field_at(j, "parts")) {
        if (!pair.is_array() || pair.size() != 2) throw ParseError("part must be [set, multiplicity]");
        d.parts.emplace_back(standard_set_from_json(pair[0]), pair[1].get<int>());
    }
    return d;
}

Json json_of(const SlicedInstance& inst) {
    Json summands = Json::array();
    for (const auto& s : inst.summands()) {
        Json entries = Json::object();
        for (const auto& [corner, f] : s.basis.entries()) entries[exponent_key(corner)] = json_of(f);
        summands.push_back(Json{{"delta", json_of(s.delta)},
                                {"basis", std::move(entries)},
                                {"lambda", json_of_coef(s.lambda)}});
    }
    return Json{{"field", json_of(inst.field())}, {"summands", std::move(summands)}};
}

SlicedInstance instance_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("instance must be an object");
    FieldDesc fd = field_from_json(field_at(j, "field"));
    std::vector<Summand> summands;
    int base_dim = -1;
    for (const auto& sj : field_at(j, "summands")) {
        StandardSet delta = standard_set_from_json(field_at(sj, "delta"));
        if (base_dim < 0) base_dim = delta.dim();
        ReducedGB basis = gb_from_parts(delta, fd, field_at(sj, "basis"));
        FieldElement lambda = coef_from_json(field_at(sj, "lambda"), fd);
        summands.push_back({std::move(delta), std::move(basis), std::move(lambda)});
    }
    if (summands.empty()) throw ParseError("instance needs at least one summand");
    try {
        return SlicedInstance::make(base_dim + 1, fd, std::move(summands));
    } catch (const DuplicateEvaluationPoints&) {
        throw;
    } catch (const Error& e) {
        throw ParseError(std::string("invalid instance: ") + e.what());
    }
}

Json json_of(const ConnectFourResult& r) {
    Json out{{"delta", json_of(r.delta)}, {"psi", json_of(r.psi)}};
    if (r.trace) {
        Json traces = Json::array();
        for (const auto& ct : *r.trace) {
            Json steps = Json::array();
            for (const auto& st : ct.steps) {
                Json reduced = Json::array();
                for (const auto& e : st.reduced) reduced.push_back(e);
                steps.push_back(Json{{"target", st.target}, {"rule", st.rule}, {"reduced", std::move(reduced)}});
            }
            traces.push_back(Json{{"corner", ct.corner}, {"steps", std::move(steps)}});
        }
        out["trace"] = std::move(traces);
    }
    return out;
}

Json json_of(const MembershipReport& r) {
    Json entries = Json::array();
    for (const auto& e : r.entries)
        entries.push_back(Json{{"corner", e.corner}, {"summand", e.summand}, {"ok", e.ok}});
    return Json{{"all_pass", r.all_pass}, {"checks", std::move(entries)}};
}

Json json_of(const StratumReport& r) {
    auto bound = dimension_vs_nr(r.delta);
    return Json{{"delta", json_of(r.delta)},
                {"dimension", r.dimension},
                {"irreducible_components", r.irreducible_components},
                {"connected_components", r.connected_components},
                {"nr_bound", bound.nr},
                {"caveat", r.caveat}};
}

namespace {

Json set_node_to_json(const GraphSetNode& n);

Json dec_node_to_json(const GraphDecompositionNode& d) {
    Json parts = Json::array();
    for (const auto& p : d.parts) parts.push_back(set_node_to_json(p));
    return Json{{"label", d.label}, {"decomposition", json_of(d.decomposition)}, {"children", std::move(parts)}};
}

Json set_node_to_json(const GraphSetNode& n) {
    Json decs = Json::array();
    for (const auto& d : n.decompositions) decs.push_back(dec_node_to_json(d));
    return Json{{"label", n.label},
                {"set", json_of(n.set)},
                {"multiplicity", n.multiplicity},
                {"children", std::move(decs)}};
}

std::string set_label(const StandardSet& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.elements().size(); ++i) {
        if (i) out += " ";
        out += "(" + exponent_key(s.elements()[i]) + ")";
    }
    return out + "}";
}

// Occurrences are expanded so the drawing matches the tree's multiset
// semantics: a part of multiplicity m appears as m sibling nodes.
int dot_set_node(const GraphSetNode& n, std::ostream& os, int& next_id);

int dot_dec_node(const GraphDecompositionNode& d, std::ostream& os, int& next_id) {
    int id = next_id++;
    std::string label;
    for (const auto& [part, mult] : d.decomposition.parts)
        for (int i = 0; i < mult; ++i) label += (label.empty() ? "" : " + ") + set_label(part);
    os << "  n" << id << " [shape=box,label=\"" << label << "\\n(" << d.label << ")\"];\n";
    for (const auto& p : d.parts) {
        for (int copy = 0; copy < p.multiplicity; ++copy) {
            int child = dot_set_node(p, os, next_id);
            os << "  n" << id << " -> n" << child << ";\n";
        }
    }
    return id;
}

int dot_set_node(const GraphSetNode& n, std::ostream& os, int& next_id) {
    int id = next_id++;
    os << "  n" << id << " [label=\"" << set_label(n.set) << "\\n(" << n.label << ")\"];\n";
    for (const auto& d : n.decompositions) {
        int child = dot_dec_node(d, os, next_id);
        os << "  n" << id << " -> n" << child << ";\n";
    }
    return id;
}

}  // namespace

Json graph_to_json(const IteratedGraph& g) {
    return Json{{"truncated", g.truncated}, {"root", set_node_to_json(g.root)}};
}

std::string graph_to_dot(const IteratedGraph& g) {
    std::ostringstream os;
    os << "digraph decompositions {\n  rankdir=TB;\n";
    int next_id = 0;
    dot_set_node(g.root, os, next_id);
    os << "}\n";
    return os.str();
}

}  // namespace c4gb
