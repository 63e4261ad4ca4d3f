#include "lawvere/io.hpp"

#include <cmath>
#include <fstream>
#include <map>

namespace lawvere::io {

namespace {

std::string at(const std::string& field, const std::string& key) { return field.empty() ? key : field + "." + key; }
std::string at(const std::string& field, std::size_t i) { return field + "[" + std::to_string(i) + "]"; }

const Json& require(const Json& j, const std::string& key, const std::string& field) {
    if (!j.is_object()) throw ParseError(field.empty() ? "$" : field, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw ParseError(at(field, key), "missing");
    return *it;
}

std::string get_string(const Json& j, const std::string& field) {
    if (!j.is_string()) throw ParseError(field, "expected a string");
    return j.get<std::string>();
}

std::size_t get_size(const Json& j, const std::string& field) {
    if (!j.is_number_integer() || j.get<long long>() < 0) throw ParseError(field, "expected a nonnegative integer");
    return j.get<std::size_t>();
}

double get_real(const Json& j, const std::string& field) {
    if (j.is_number()) return j.get<double>();
    if (j.is_string() && (j.get<std::string>() == "inf" || j.get<std::string>() == "∞")) return kInfinity;
    if (j.is_string() && j.get<std::string>() == "-inf") return -kInfinity;
    throw ParseError(field, "expected a number or \"inf\"");
}

const Json& require_array(const Json& j, const std::string& field) {
    if (!j.is_array()) throw ParseError(field, "expected an array");
    return j;
}

std::size_t vertex_index(const Graph& g, const Json& j, const std::string& field) {
    std::string id = get_string(j, field);
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
        if (g.vertices[i] == id) return i;
    }
    throw ParseError(field, "unknown vertex '" + id + "'");
}

std::optional<std::size_t> edge_index(const Graph& g, std::size_t a, std::size_t b) {
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        if ((g.edges[e].first == a && g.edges[e].second == b) || (g.edges[e].first == b && g.edges[e].second == a))
            return e;
    }
    return std::nullopt;
}

// Apply x ↦ max(x + c, 0) coordinatewise.
Object shift(const Object& x, double c) {
    Object y(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) y[i] = std::isinf(x[i]) ? x[i] : std::max(x[i] + c, 0.0);
    return y;
}

Matrix parse_matrix(const Json& j, std::size_t rows, std::size_t cols, const std::string& field, bool nonnegative) {
    require_array(j, field);
    if (j.size() != rows) throw ParseError(field, "expected " + std::to_string(rows) + " rows");
    Matrix m(rows);
    for (std::size_t i = 0; i < rows; ++i) {
        const auto f = at(field, i);
        require_array(j[i], f);
        if (j[i].size() != cols) throw ParseError(f, "expected " + std::to_string(cols) + " entries");
        for (std::size_t k = 0; k < cols; ++k) {
            double v = get_real(j[i][k], at(f, k));
            if (nonnegative && (std::isnan(v) || v < 0)) throw ParseError(at(f, k), "delay must be nonnegative or inf");
            m[i].push_back(v);
        }
    }
    return m;
}

struct MapParser {
    const Json& desc;
    std::string field;
    LatticePtr dom;
    LatticePtr cod;

    QFunctor build() const {
        const std::string type = get_string(require(desc, "type", field), at(field, "type"));
        std::string label = type;
        if (type == "identity") {
            return QFunctor{dom, cod, [](const Object& x) { return x; }, "id"};
        }
        if (type == "shift") {
            double c = get_real(require(desc, "c", field), at(field, "c"));
            return QFunctor{dom, cod, [c](const Object& x) { return shift(x, c); }, "shift(" + std::to_string(c) + ")"};
        }
        if (type == "maxplus" || type == "minplus_transpose") {
            const Json& mj = require(desc, "matrix", field);
            require_array(mj, at(field, "matrix"));
            const std::size_t rows = mj.size();
            const std::size_t cols = rows && mj[0].is_array() ? mj[0].size() : 0;
            Matrix a = parse_matrix(mj, rows, cols, at(field, "matrix"), true);
            if (type == "maxplus")
                return QFunctor{dom, cod, [a](const Object& x) { return maxplus_apply(a, x); }, "maxplus"};
            return QFunctor{dom, cod, [a](const Object& y) { return minplus_transpose_apply(a, y); },
                            "minplus_transpose"};
        }
        if (type == "table") {
            auto fd = std::dynamic_pointer_cast<const FiniteLattice>(dom);
            auto fc = std::dynamic_pointer_cast<const FiniteLattice>(cod);
            if (!fd || !fc) throw ParseError(field, "table maps need finite stalks");
            const Json& t = require(desc, "table", field);
            if (!t.is_object()) throw ParseError(at(field, "table"), "expected an object");
            std::vector<std::size_t> table(fd->size());
            for (std::size_t i = 0; i < fd->size(); ++i) {
                const std::string& id = fd->category().ids()[i];
                auto it = t.find(id);
                if (it == t.end()) throw ParseError(at(at(field, "table"), id), "missing image");
                std::string img = get_string(*it, at(at(field, "table"), id));
                try {
                    table[i] = fc->category().index_of(img);
                } catch (const std::exception&) {
                    throw ParseError(at(at(field, "table"), id), "unknown object '" + img + "'");
                }
            }
            return QFunctor{dom, cod, [table](const Object& x) {
                                return FiniteQCategory::object(table.at(static_cast<std::size_t>(x.at(0))));
                            },
                            "table"};
        }
        throw ParseError(at(field, "type"), "unknown map type '" + type + "'");
    }

    // The right adjoint of `build()` when the file leaves it implicit.
    QFunctor adjoint(const QFunctor& left) const {
        const std::string type = get_string(require(desc, "type", field), at(field, "type"));
        if (type == "identity") return QFunctor{cod, dom, [](const Object& x) { return x; }, "id"};
        if (type == "shift") {
            double c = get_real(require(desc, "c", field), at(field, "c"));
            return QFunctor{cod, dom, [c](const Object& x) { return shift(x, -c); }, "shift(" + std::to_string(-c) + ")"};
        }
        if (type == "maxplus") {
            Json d2 = desc;
            d2["type"] = "minplus_transpose";
            return MapParser{d2, field, cod, dom}.build();
        }
        if (type == "table") {
            auto fd = std::dynamic_pointer_cast<const FiniteLattice>(dom);
            auto fc = std::dynamic_pointer_cast<const FiniteLattice>(cod);
            return synthesize_right_adjoint(fd, fc, left);
        }
        throw ParseError(field, "no implicit adjoint for map type '" + type + "'; give a corestriction");
    }
};

}  // namespace

Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("$", "cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw ParseError("$", std::string("invalid JSON: ") + e.what());
    }
}

Quantale parse_quantale(const Json& j, const std::string& field, std::optional<double> tolerance) {
    const std::string kind = get_string(require(j, "kind", field), at(field, "kind"));
    const double tol = tolerance.value_or(1e-9);
    if (kind == "boolean") return Quantale::boolean();
    if (kind == "lawvere_reals") return Quantale::lawvere_reals(tol);
    if (kind == "unit_interval") {
        std::string t = j.contains("tnorm") ? get_string(j["tnorm"], at(field, "tnorm")) : "product";
        if (t == "product") return Quantale::unit_interval(TNorm::Product, tol);
        if (t == "lukasiewicz") return Quantale::unit_interval(TNorm::Lukasiewicz, tol);
        if (t == "min") return Quantale::unit_interval(TNorm::Minimum, tol);
        throw ParseError(at(field, "tnorm"), "unknown t-norm '" + t + "'");
    }
    if (kind == "finite_chain" || kind == "chain") {
        std::size_t n = get_size(require(j, "n", field), at(field, "n"));
        if (n < 2) throw ParseError(at(field, "n"), "a chain needs at least two elements");
        return Quantale::finite_chain(n);
    }
    if (kind == "finite_powerset" || kind == "powerset") {
        std::size_t k = get_size(require(j, "k", field), at(field, "k"));
        if (k > 5) throw ParseError(at(field, "k"), "ground set too large (at most 5)");
        return Quantale::finite_powerset(k);
    }
    if (kind == "table") {
        const Json& el = require_array(require(j, "elements", field), at(field, "elements"));
        std::vector<std::string> labels;
        for (std::size_t i = 0; i < el.size(); ++i) labels.push_back(get_string(el[i], at(at(field, "elements"), i)));
        const std::size_t n = labels.size();
        const Json& lj = require_array(require(j, "leq", field), at(field, "leq"));
        const Json& mj = require_array(require(j, "mul", field), at(field, "mul"));
        if (lj.size() != n || mj.size() != n) throw ParseError(field, "leq and mul must be n×n");
        std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
        std::vector<std::vector<std::size_t>> mul(n, std::vector<std::size_t>(n));
        for (std::size_t a = 0; a < n; ++a) {
            if (!lj[a].is_array() || lj[a].size() != n) throw ParseError(at(at(field, "leq"), a), "expected n entries");
            if (!mj[a].is_array() || mj[a].size() != n) throw ParseError(at(at(field, "mul"), a), "expected n entries");
            for (std::size_t b = 0; b < n; ++b) {
                const auto& lv = lj[a][b];
                if (!lv.is_boolean() && !lv.is_number_integer())
                    throw ParseError(at(at(at(field, "leq"), a), b), "expected a boolean");
                leq[a][b] = lv.is_boolean() ? lv.get<bool>() : lv.get<int>() != 0;
                const auto& mv = mj[a][b];
                const std::string mf = at(at(at(field, "mul"), a), b);
                if (mv.is_string()) {
                    auto it = std::find(labels.begin(), labels.end(), mv.get<std::string>());
                    if (it == labels.end()) throw ParseError(mf, "unknown element");
                    mul[a][b] = static_cast<std::size_t>(it - labels.begin());
                } else {
                    mul[a][b] = get_size(mv, mf);
                    if (mul[a][b] >= n) throw ParseError(mf, "element index out of range");
                }
            }
        }
        std::string name = j.contains("name") ? get_string(j["name"], at(field, "name")) : "table";
        try {
            return Quantale::from_tables(name, leq, mul, labels);
        } catch (const std::exception& e) {
            throw ParseError(field, e.what());
        }
    }
    throw ParseError(at(field, "kind"), "unknown quantale kind '" + kind + "'");
}

Value parse_value(const Quantale& q, const Json& j, const std::string& field) {
    if (j.is_string() && q.finite()) {
        const std::string s = j.get<std::string>();
        for (Value v : q.carrier()) {
            if (q.format(v) == s) return v;
        }
        throw ParseError(field, "'" + s + "' is not an element of " + q.name());
    }
    if (j.is_boolean() && q.kind() == QuantaleKind::Boolean) return j.get<bool>() ? 1.0 : 0.0;
    double v = get_real(j, field);
    if (!q.contains(v)) throw ParseError(field, "value outside " + q.name());
    return v;
}

Json encode_value(const Quantale& q, Value v) {
    if (q.kind() == QuantaleKind::FinitePowerset || q.kind() == QuantaleKind::FiniteTable) return q.format(v);
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    if (v == std::floor(v) && std::fabs(v) < 1e15) return static_cast<long long>(v);
    return v;
}

FiniteQCategory parse_category(const Quantale& q, const Json& j, const std::string& field) {
    const Json& ij = require_array(require(j, "ids", field), at(field, "ids"));
    std::vector<std::string> ids;
    for (std::size_t i = 0; i < ij.size(); ++i) ids.push_back(get_string(ij[i], at(at(field, "ids"), i)));
    const Json& hj = require_array(require(j, "hom", field), at(field, "hom"));
    const std::size_t n = ids.size();
    if (hj.size() != n) throw ParseError(at(field, "hom"), "expected " + std::to_string(n) + " rows");
    std::vector<std::vector<Value>> hom(n);
    for (std::size_t a = 0; a < n; ++a) {
        const std::string f = at(at(field, "hom"), a);
        if (!hj[a].is_array() || hj[a].size() != n) throw ParseError(f, "expected " + std::to_string(n) + " entries");
        for (std::size_t b = 0; b < n; ++b) hom[a].push_back(parse_value(q, hj[a][b], at(f, b)));
    }
    try {
        FiniteQCategory c(q, ids, hom);
        if (j.contains("name")) c.set_name(get_string(j["name"], at(field, "name")));
        return c;
    } catch (const std::invalid_argument& e) {
        throw ParseError(field, e.what());
    }
}

LatticePtr parse_stalk(const Quantale& q, const Json& j, const std::string& field) {
    const std::string type = get_string(require(j, "type", field), at(field, "type"));
    auto flag = [&](const char* key) {
        if (!j.contains(key)) return false;
        if (!j[key].is_boolean()) throw ParseError(at(field, key), "expected a boolean");
        return j[key].get<bool>();
    };
    if (type == "finite") return std::make_shared<FiniteLattice>(parse_category(q, j, field));
    if (type == "underline") return std::make_shared<UnderlineQ>(q, flag("op"));
    if (type == "power") return std::make_shared<PresheafPower>(q, get_size(require(j, "m", field), at(field, "m")), flag("op"));
    if (type == "pref") {
        const Json& aj = require_array(require(j, "alternatives", field), at(field, "alternatives"));
        std::vector<std::string> alts;
        for (std::size_t i = 0; i < aj.size(); ++i) alts.push_back(get_string(aj[i], at(at(field, "alternatives"), i)));
        try {
            return std::make_shared<PreferenceLattice>(q, alts);
        } catch (const std::invalid_argument& e) {
            throw ParseError(at(field, "alternatives"), e.what());
        }
    }
    throw ParseError(at(field, "type"), "unknown stalk type '" + type + "'");
}

Object parse_object(const WeightedLattice& lat, const Json& j, const std::string& field) {
    const auto& q = lat.quantale();
    if (auto fl = dynamic_cast<const FiniteLattice*>(&lat)) {
        if (j.is_string()) {
            try {
                return FiniteQCategory::object(fl->category().index_of(j.get<std::string>()));
            } catch (const std::exception&) {
                throw ParseError(field, "unknown object '" + j.get<std::string>() + "'");
            }
        }
        std::size_t i = get_size(j, field);
        if (i >= fl->size()) throw ParseError(field, "object index out of range");
        return FiniteQCategory::object(i);
    }
    if (dynamic_cast<const UnderlineQ*>(&lat)) {
        if (j.is_array() && j.size() == 1) return Object{parse_value(q, j[0], at(field, 0))};
        return Object{parse_value(q, j, field)};
    }
    if (auto pp = dynamic_cast<const PresheafPower*>(&lat)) {
        require_array(j, field);
        if (j.size() != pp->dimension())
            throw ParseError(field, "expected " + std::to_string(pp->dimension()) + " coordinates");
        Object x;
        for (std::size_t i = 0; i < j.size(); ++i) x.push_back(parse_value(q, j[i], at(field, i)));
        return x;
    }
    if (auto pl = dynamic_cast<const PreferenceLattice*>(&lat)) {
        const std::size_t n = pl->n();
        require_array(j, field);
        if (j.size() != n) throw ParseError(field, "expected " + std::to_string(n) + " rows");
        Object r;
        for (std::size_t a = 0; a < n; ++a) {
            const std::string f = at(field, a);
            if (!j[a].is_array() || j[a].size() != n) throw ParseError(f, "expected " + std::to_string(n) + " entries");
            for (std::size_t b = 0; b < n; ++b) r.push_back(parse_value(q, j[a][b], at(f, b)));
        }
        if (auto w = reflexivity_witness(q, n, r)) throw ParseError(field, "not reflexive: " + *w);
        if (auto w = transitivity_witness(q, n, r)) throw ParseError(field, "not transitive: " + *w);
        return r;
    }
    throw ParseError(field, "objects of " + lat.name() + " cannot be read from JSON");
}

Json encode_object(const WeightedLattice& lat, const Object& x) {
    const auto& q = lat.quantale();
    if (auto fl = dynamic_cast<const FiniteLattice*>(&lat)) return fl->describe(x);
    if (dynamic_cast<const UnderlineQ*>(&lat)) return encode_value(q, x.at(0));
    if (auto pl = dynamic_cast<const PreferenceLattice*>(&lat)) {
        Json rows = Json::array();
        for (std::size_t a = 0; a < pl->n(); ++a) {
            Json row = Json::array();
            for (std::size_t b = 0; b < pl->n(); ++b) row.push_back(encode_value(q, x[a * pl->n() + b]));
            rows.push_back(row);
        }
        return rows;
    }
    Json arr = Json::array();
    for (Value v : x) arr.push_back(encode_value(q, v));
    return arr;
}

Json encode_cochain(const NetworkSheaf& f, const Cochain& x) {
    Json out = Json::object();
    for (std::size_t v = 0; v < x.size(); ++v) out[f.graph().vertices[v]] = encode_object(f.vertex_stalk(v), x[v]);
    return out;
}

Graph parse_graph(const Json& j, const std::string& field, std::vector<Value>* weights) {
    Graph g;
    const Json& vj = require_array(require(j, "vertices", field), at(field, "vertices"));
    for (std::size_t i = 0; i < vj.size(); ++i) g.vertices.push_back(get_string(vj[i], at(at(field, "vertices"), i)));
    const Json& ej = require_array(require(j, "edges", field), at(field, "edges"));
    for (std::size_t e = 0; e < ej.size(); ++e) {
        const std::string f = at(at(field, "edges"), e);
        if (!ej[e].is_array() || ej[e].size() < 2) throw ParseError(f, "expected [v, w] or [v, w, weight]");
        g.edges.push_back({vertex_index(g, ej[e][0], at(f, 0)), vertex_index(g, ej[e][1], at(f, 1))});
        if (weights) {
            if (ej[e].size() < 3) throw ParseError(f, "missing edge weight");
            double w = get_real(ej[e][2], at(f, 2));
            if (std::isnan(w) || w < 0 || std::isinf(w)) throw ParseError(at(f, 2), "edge weight must be finite and nonnegative");
            weights->push_back(w);
        }
    }
    try {
        g.validate();
    } catch (const std::invalid_argument& e) {
        throw ParseError(field, e.what());
    }
    return g;
}

Weighting parse_weighting(const Quantale& q, const Graph& g, const Json& j, const std::string& field) {
    const std::size_t n = g.vertices.size();
    if (!j.is_object()) return Weighting::constant(g, parse_value(q, j, field));
    Value def = j.contains("default") ? parse_value(q, j["default"], at(field, "default")) : q.unit();
    Weighting w = Weighting::constant(g, def);
    for (const char* key : {"pairs", "symmetric"}) {
        if (!j.contains(key)) continue;
        const Json& pj = require_array(j[key], at(field, key));
        for (std::size_t i = 0; i < pj.size(); ++i) {
            const std::string f = at(at(field, key), i);
            if (!pj[i].is_array() || pj[i].size() != 3) throw ParseError(f, "expected [v, w, value]");
            std::size_t a = vertex_index(g, pj[i][0], at(f, 0));
            std::size_t b = vertex_index(g, pj[i][1], at(f, 1));
            Value val = parse_value(q, pj[i][2], at(f, 2));
            if (a >= n || b >= n) throw ParseError(f, "vertex out of range");
            w.w[a][b] = val;
            if (std::string(key) == "symmetric") w.w[b][a] = val;
        }
    }
    return w;
}

Cochain parse_cochain(const NetworkSheaf& f, const Json& j, const std::string& field) {
    const auto& g = f.graph();
    Cochain x(g.vertices.size());
    if (j.is_array()) {
        if (j.size() != x.size()) throw ParseError(field, "expected one entry per vertex");
        for (std::size_t v = 0; v < x.size(); ++v) x[v] = parse_object(f.vertex_stalk(v), j[v], at(field, v));
        return x;
    }
    if (!j.is_object()) throw ParseError(field, "expected an object keyed by vertex");
    for (std::size_t v = 0; v < x.size(); ++v) {
        auto it = j.find(g.vertices[v]);
        if (it == j.end()) throw ParseError(at(field, g.vertices[v]), "missing");
        x[v] = parse_object(f.vertex_stalk(v), *it, at(field, g.vertices[v]));
    }
    return x;
}

SheafSpec parse_sheaf(const Json& j, std::optional<double> tolerance) {
    Quantale q = parse_quantale(require(j, "quantale", ""), "quantale", tolerance);
    Graph g = parse_graph(require(j, "graph", ""), "graph");
    const std::size_t n = g.vertices.size();
    const std::size_t ne = g.edges.size();

    std::map<std::string, LatticePtr> cache;
    auto stalk = [&](const Json& d, const std::string& field) {
        std::string key = d.dump();
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
        return cache[key] = parse_stalk(q, d, field);
    };
    std::vector<LatticePtr> vs(n);
    std::vector<LatticePtr> es(ne);
    if (j.contains("stalk")) {
        LatticePtr s = stalk(j["stalk"], "stalk");
        std::fill(vs.begin(), vs.end(), s);
        std::fill(es.begin(), es.end(), s);
    }
    if (j.contains("vertex_stalks")) {
        const Json& vj = j["vertex_stalks"];
        if (!vj.is_object()) throw ParseError("vertex_stalks", "expected an object keyed by vertex");
        for (auto it = vj.begin(); it != vj.end(); ++it) {
            std::size_t v = vertex_index(g, Json(it.key()), at("vertex_stalks", it.key()));
            vs[v] = stalk(it.value(), at("vertex_stalks", it.key()));
        }
    }
    if (j.contains("edge_stalks")) {
        const Json& ej = require_array(j["edge_stalks"], "edge_stalks");
        for (std::size_t i = 0; i < ej.size(); ++i) {
            const std::string f = at("edge_stalks", i);
            const Json& ed = require_array(require(ej[i], "edge", f), at(f, "edge"));
            if (ed.size() != 2) throw ParseError(at(f, "edge"), "expected [v, w]");
            auto e = edge_index(g, vertex_index(g, ed[0], at(f, "edge")), vertex_index(g, ed[1], at(f, "edge")));
            if (!e) throw ParseError(at(f, "edge"), "not an edge of the graph");
            es[*e] = stalk(require(ej[i], "stalk", f), at(f, "stalk"));
        }
    }
    for (std::size_t v = 0; v < n; ++v) {
        if (!vs[v]) throw ParseError(at("vertex_stalks", g.vertices[v]), "missing stalk");
    }
    for (std::size_t e = 0; e < ne; ++e) {
        if (!es[e]) throw ParseError(at("edge_stalks", e), "missing stalk");
    }

    std::vector<std::array<QFunctor, 2>> res(ne);
    std::vector<std::array<QFunctor, 2>> cores(ne);
    std::vector<bool> given(ne, false);
    if (j.contains("maps")) {
        const Json& mj = require_array(j["maps"], "maps");
        for (std::size_t i = 0; i < mj.size(); ++i) {
            const std::string f = at("maps", i);
            const Json& ed = require_array(require(mj[i], "edge", f), at(f, "edge"));
            if (ed.size() != 2) throw ParseError(at(f, "edge"), "expected [v, w]");
            std::size_t a = vertex_index(g, ed[0], at(at(f, "edge"), 0));
            std::size_t b = vertex_index(g, ed[1], at(at(f, "edge"), 1));
            auto e = edge_index(g, a, b);
            if (!e) throw ParseError(at(f, "edge"), "not an edge of the graph");
            if (given[*e]) throw ParseError(at(f, "edge"), "maps given twice");
            given[*e] = true;
            const bool swap = g.edges[*e].first != a;
            const Json& rj = require_array(require(mj[i], "restriction", f), at(f, "restriction"));
            if (rj.size() != 2) throw ParseError(at(f, "restriction"), "expected two maps");
            const Json* cj = mj[i].contains("corestriction") ? &mj[i]["corestriction"] : nullptr;
            if (cj && (!cj->is_array() || cj->size() != 2)) throw ParseError(at(f, "corestriction"), "expected two maps");
            for (std::size_t k = 0; k < 2; ++k) {
                std::size_t side = swap ? 1 - k : k;
                std::size_t v = side == 0 ? g.edges[*e].first : g.edges[*e].second;
                MapParser mp{rj[k], at(at(f, "restriction"), k), vs[v], es[*e]};
                res[*e][side] = mp.build();
                cores[*e][side] = cj ? MapParser{(*cj)[k], at(at(f, "corestriction"), k), es[*e], vs[v]}.build()
                                     : mp.adjoint(res[*e][side]);
            }
        }
    }
    for (std::size_t e = 0; e < ne; ++e) {
        if (given[e]) continue;
        for (std::size_t k = 0; k < 2; ++k) {
            std::size_t v = k == 0 ? g.edges[e].first : g.edges[e].second;
            res[e][k] = QFunctor{vs[v], es[e], [](const Object& x) { return x; }, "id"};
            cores[e][k] = QFunctor{es[e], vs[v], [](const Object& x) { return x; }, "id"};
        }
    }

    SheafSpec spec{q, Weighting::constant(g, q.unit()), nullptr, std::nullopt};
    if (j.contains("weighting")) spec.weighting = parse_weighting(q, g, j["weighting"], "weighting");
    spec.sheaf = std::make_shared<NetworkSheaf>(g, vs, es, res, cores);
    if (j.contains("initial")) spec.initial = parse_cochain(*spec.sheaf, j["initial"], "initial");
    return spec;
}

DesSpec parse_des(const Json& j, std::optional<double> tolerance) {
    DesSpec spec;
    auto& sys = spec.system;
    sys.m = get_size(require(j, "m", ""), "m");
    if (sys.m == 0) throw ParseError("m", "at least one event required");
    sys.graph = parse_graph(require(j, "graph", ""), "graph");
    const Json& dj = require(j, "delays", "");
    if (!dj.is_object()) throw ParseError("delays", "expected an object keyed by vertex");
    for (const auto& v : sys.graph.vertices) {
        auto it = dj.find(v);
        if (it == dj.end()) throw ParseError(at("delays", v), "missing");
        sys.delays.push_back(parse_matrix(*it, sys.m, sys.m, at("delays", v), true));
    }
    Quantale q = Quantale::lawvere_reals(tolerance.value_or(1e-9));
    sys.weights = j.contains("weighting") ? parse_weighting(q, sys.graph, j["weighting"], "weighting")
                                          : Weighting::constant(sys.graph, 0.0);
    if (j.contains("initial")) {
        const Json& ij = j["initial"];
        if (!ij.is_object()) throw ParseError("initial", "expected an object keyed by vertex");
        Cochain x;
        for (const auto& v : sys.graph.vertices) {
            auto it = ij.find(v);
            if (it == ij.end()) throw ParseError(at("initial", v), "missing");
            require_array(*it, at("initial", v));
            if (it->size() != sys.m) throw ParseError(at("initial", v), "expected m timings");
            Object t;
            for (std::size_t i = 0; i < sys.m; ++i) {
                double val = get_real((*it)[i], at(at("initial", v), i));
                if (std::isnan(val) || val < 0) throw ParseError(at(at("initial", v), i), "timing must be nonnegative");
                t.push_back(val);
            }
            x.push_back(t);
        }
        spec.initial = x;
    }
    return spec;
}

PathProblem parse_paths(const Json& j) {
    PathProblem p;
    p.graph = parse_graph(require(j, "graph", ""), "graph", &p.edge_weights);
    p.source = vertex_index(p.graph, require(j, "source", ""), "source");
    return p;
}

PrefSpec parse_prefs(const Json& j, std::optional<double> tolerance) {
    Quantale q = parse_quantale(require(j, "quantale", ""), "quantale", tolerance);
    Json sd = {{"type", "pref"}, {"alternatives", require(j, "alternatives", "")}};
    auto lat = std::dynamic_pointer_cast<const PreferenceLattice>(parse_stalk(q, sd, ""));
    Graph g = parse_graph(require(j, "graph", ""), "graph");
    PrefSpec spec{q, lat, g, {}, {}};
    const Json& aj = require(j, "agents", "");
    if (!aj.is_object()) throw ParseError("agents", "expected an object keyed by vertex");
    for (const auto& v : g.vertices) {
        auto it = aj.find(v);
        if (it == aj.end()) throw ParseError(at("agents", v), "missing");
        spec.agents.push_back(parse_object(*lat, *it, at("agents", v)));
    }
    const Json& ej = require(j, "eps", "");
    for (const auto& v : g.vertices) {
        if (ej.is_object()) {
            auto it = ej.find(v);
            if (it == ej.end()) throw ParseError(at("eps", v), "missing");
            spec.eps.push_back(parse_value(q, *it, at("eps", v)));
        } else {
            spec.eps.push_back(parse_value(q, ej, "eps"));
        }
    }
    return spec;
}

}  // namespace lawvere::io
