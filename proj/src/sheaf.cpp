#include "lawvere/sheaf.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace lawvere {

void Graph::validate() const {
    std::set<std::string> ids(vertices.begin(), vertices.end());
    if (ids.size() != vertices.size()) throw std::invalid_argument("graph: duplicate vertex id");
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (const auto& [a, b] : edges) {
        if (a >= vertices.size() || b >= vertices.size()) throw std::invalid_argument("graph: edge endpoint out of range");
        if (a == b) throw std::invalid_argument("graph: loop at " + vertices[a]);
        auto key = std::minmax(a, b);
        if (!seen.insert(key).second)
            throw std::invalid_argument("graph: duplicate edge " + vertices[a] + "-" + vertices[b]);
    }
}

std::size_t Graph::index_of(const std::string& id) const {
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (vertices[i] == id) return i;
    }
    throw std::out_of_range("graph: unknown vertex " + id);
}

std::vector<std::vector<std::pair<std::size_t, std::size_t>>> Graph::adjacency() const {
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(vertices.size());
    for (std::size_t e = 0; e < edges.size(); ++e) {
        adj[edges[e].first].push_back({edges[e].second, e});
        adj[edges[e].second].push_back({edges[e].first, e});
    }
    return adj;
}

Weighting Weighting::constant(const Graph& g, Value q) {
    return Weighting{std::vector<std::vector<Value>>(g.vertices.size(), std::vector<Value>(g.vertices.size(), q))};
}

std::vector<Object> default_stalk_sample(const WeightedLattice& lat) {
    if (lat.enumerable()) return lat.objects();
    const auto& Q = lat.quantale();
    std::vector<Value> grid;
    if (Q.kind() == QuantaleKind::LawvereReals) {
        grid = {0.0, 0.5, 1.0, 2.0, 3.0, 5.0, kInfinity};
    } else {
        grid = {0.0, 0.25, 0.5, 0.75, 1.0};
    }
    std::size_t m = 1;
    if (auto* pp = dynamic_cast<const PresheafPower*>(&lat)) m = pp->dimension();
    if (m > 3) grid = {grid.front(), grid[grid.size() / 2], grid.back()};
    std::vector<Object> out{{}};
    for (std::size_t i = 0; i < m; ++i) {
        std::vector<Object> next;
        for (const auto& o : out) {
            for (Value v : grid) {
                auto p = o;
                p.push_back(v);
                next.push_back(std::move(p));
            }
        }
        out = std::move(next);
    }
    return out;
}

NetworkSheaf::NetworkSheaf(Graph g, std::vector<LatticePtr> vertex_stalks, std::vector<LatticePtr> edge_stalks,
                           std::vector<std::array<QFunctor, 2>> restrictions,
                           std::vector<std::array<QFunctor, 2>> corestrictions, const StalkSampler& sampler)
    : graph_(std::move(g)),
      vertex_stalks_(std::move(vertex_stalks)),
      edge_stalks_(std::move(edge_stalks)),
      restrictions_(std::move(restrictions)),
      corestrictions_(std::move(corestrictions)) {
    graph_.validate();
    if (vertex_stalks_.size() != graph_.vertices.size() || vertex_stalks_.empty())
        throw std::invalid_argument("sheaf: one stalk per vertex required");
    if (edge_stalks_.size() != graph_.edges.size() || restrictions_.size() != graph_.edges.size() ||
        corestrictions_.size() != graph_.edges.size())
        throw std::invalid_argument("sheaf: one stalk and two maps each way per edge required");
    const Quantale& Q = quantale();
    for (const auto& s : vertex_stalks_) require_same(Q, s->quantale(), "sheaf vertex stalk");
    for (const auto& s : edge_stalks_) require_same(Q, s->quantale(), "sheaf edge stalk");
    levels_.assign(graph_.edges.size(), {Q.unit(), Q.unit()});
    if (sampler) measure_levels(sampler);
}

std::size_t NetworkSheaf::side(std::size_t e, std::size_t v) const {
    if (graph_.edges[e].first == v) return 0;
    if (graph_.edges[e].second == v) return 1;
    throw std::invalid_argument("sheaf: vertex is not an endpoint of the edge");
}

void NetworkSheaf::measure_levels(const StalkSampler& sampler) {
    for (std::size_t e = 0; e < graph_.edges.size(); ++e) {
        auto ys = sampler(*edge_stalks_[e]);
        for (std::size_t k = 0; k < 2; ++k) {
            std::size_t v = k == 0 ? graph_.edges[e].first : graph_.edges[e].second;
            auto xs = sampler(*vertex_stalks_[v]);
            levels_[e][k] = adjunction_defect(restrictions_[e][k], corestrictions_[e][k], xs, ys);
        }
    }
}

Value NetworkSheaf::epsilon() const {
    const auto& Q = quantale();
    Value acc = Q.top();
    for (const auto& l : levels_) acc = Q.meet(acc, Q.meet(l[0], l[1]));
    return acc;
}

bool NetworkSheaf::crisp() const { return quantale().equal(epsilon(), quantale().unit()); }

LawReport NetworkSheaf::validate(const StalkSampler& sampler) const {
    const auto& Q = quantale();
    LawReport rep;
    rep.declare("restriction-functor");
    rep.declare("corestriction-functor");
    for (std::size_t e = 0; e < graph_.edges.size(); ++e) {
        auto ys = sampler(*edge_stalks_[e]);
        for (std::size_t k = 0; k < 2; ++k) {
            std::size_t v = k == 0 ? graph_.edges[e].first : graph_.edges[e].second;
            auto xs = sampler(*vertex_stalks_[v]);
            Value r = functor_defect_on(restrictions_[e][k], xs);
            Value c = functor_defect_on(corestrictions_[e][k], ys);
            std::string where = graph_.vertices[v] + " on edge " + std::to_string(e);
            rep.record("restriction-functor", Q.equal(r, Q.unit()), [&] { return where + ": defect " + Q.format(r); });
            rep.record("corestriction-functor", Q.equal(c, Q.unit()),
                       [&] { return where + ": defect " + Q.format(c); });
        }
    }
    return rep;
}

NetworkSheaf constant_sheaf(Graph g, LatticePtr stalk) {
    const std::size_t n = g.vertices.size();
    const std::size_t m = g.edges.size();
    auto id = QFunctor::identity(stalk);
    std::vector<std::array<QFunctor, 2>> maps(m, {id, id});
    NetworkSheaf f(std::move(g), std::vector<LatticePtr>(n, stalk), std::vector<LatticePtr>(m, stalk), maps, maps,
                   nullptr);
    return f;
}

Value cochain_hom(const NetworkSheaf& f, const Cochain& x, const Cochain& y) {
    const auto& Q = f.quantale();
    if (x.size() != f.graph().vertices.size() || y.size() != x.size())
        throw std::invalid_argument("cochain_hom: cochain length does not match the vertex count");
    Value acc = Q.top();
    for (std::size_t v = 0; v < x.size(); ++v) acc = Q.meet(acc, f.vertex_stalk(v).hom(x[v], y[v]));
    return acc;
}

bool cochain_approx(const NetworkSheaf& f, const Cochain& x, const Cochain& y, Value q) {
    const auto& Q = f.quantale();
    return Q.geq(cochain_hom(f, x, y), q) && Q.geq(cochain_hom(f, y, x), q);
}

SectionCheck is_fuzzy_global_section(const NetworkSheaf& f, const Weighting& w, const Cochain& x) {
    const auto& Q = f.quantale();
    const auto& g = f.graph();
    SectionCheck out;
    bool first = true;
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        const auto [a, b] = g.edges[e];
        Object ya = f.restriction(e, 0)(x[a]);
        Object yb = f.restriction(e, 1)(x[b]);
        const auto& stalk = f.edge_stalk(e);
        for (int dir = 0; dir < 2; ++dir) {
            std::size_t v = dir == 0 ? a : b;
            std::size_t u = dir == 0 ? b : a;
            Value h = dir == 0 ? stalk.hom(ya, yb) : stalk.hom(yb, ya);
            Value slack = Q.hom(w(v, u), h);
            bool pass = Q.geq(h, w(v, u));
            if (!pass) out.ok = false;
            if (first || (Q.leq(slack, out.slack) && !Q.equal(slack, out.slack))) {
                first = false;
                out.edge = e;
                out.from = v;
                out.to = u;
                out.slack = slack;
                out.witness = "edge " + g.vertices[v] + "->" + g.vertices[u] + ": hom=" + Q.format(h) +
                              " against W=" + Q.format(w(v, u));
            }
        }
    }
    if (first) out.slack = Q.top();
    return out;
}

std::vector<Cochain> enumerate_cochains(const NetworkSheaf& f, std::size_t cap) {
    std::vector<Cochain> out{{}};
    for (std::size_t v = 0; v < f.graph().vertices.size(); ++v) {
        const auto& stalk = f.vertex_stalk(v);
        if (!stalk.enumerable())
            throw std::logic_error("enumerate_cochains: stalk at " + f.graph().vertices[v] + " is not enumerable");
        auto objs = stalk.objects();
        if (out.size() * objs.size() > cap) throw std::length_error("enumerate_cochains: too many cochains");
        std::vector<Cochain> next;
        for (const auto& c : out) {
            for (const auto& o : objs) {
                auto d = c;
                d.push_back(o);
                next.push_back(std::move(d));
            }
        }
        out = std::move(next);
    }
    return out;
}

std::vector<Cochain> global_sections(const NetworkSheaf& f, const Weighting& w) {
    std::vector<Cochain> out;
    for (auto& c : enumerate_cochains(f)) {
        if (is_fuzzy_global_section(f, w, c).ok) out.push_back(std::move(c));
    }
    return out;
}

namespace {

Object transport(const NetworkSheaf& f, std::size_t e, std::size_t from, std::size_t to, const Object& x) {
    return f.corestriction(e, f.side(e, to))(f.restriction(e, f.side(e, from))(x));
}

}  // namespace

Cochain laplacian(const NetworkSheaf& f, const Weighting& w, const Cochain& x) {
    const auto adj = f.graph().adjacency();
    Cochain out(x.size());
    for (std::size_t v = 0; v < x.size(); ++v) {
        const auto& stalk = f.vertex_stalk(v);
        std::vector<Object> parts;
        for (const auto& [u, e] : adj[v]) parts.push_back(stalk.cotensor(w(v, u), transport(f, e, u, v, x[u])));
        out[v] = stalk.meet(parts);
    }
    return out;
}

namespace {

Cochain combine(const NetworkSheaf& f, std::span<const Value> omega1, std::span<const Value> omega2, const Cochain& lx,
                const Cochain& x) {
    Cochain out(x.size());
    for (std::size_t v = 0; v < x.size(); ++v) {
        const auto& stalk = f.vertex_stalk(v);
        std::array<Object, 2> parts{stalk.cotensor(omega1[v], lx[v]), stalk.cotensor(omega2[v], x[v])};
        out[v] = stalk.meet(parts);
    }
    return out;
}

}  // namespace

Cochain flow_step(const NetworkSheaf& f, const Weighting& w, std::span<const Value> omega1,
                  std::span<const Value> omega2, const Cochain& x) {
    if (omega1.size() != x.size() || omega2.size() != x.size())
        throw std::invalid_argument("flow_step: one flow weight per vertex required");
    return combine(f, omega1, omega2, laplacian(f, w, x), x);
}

OmegaSchedule unweighted_schedule(const NetworkSheaf& f) {
    const std::size_t n = f.graph().vertices.size();
    const Value one = f.quantale().unit();
    return [n, one](std::size_t, const Cochain&) {
        return FlowWeights{std::vector<Value>(n, one), std::vector<Value>(n, one), std::nullopt, true};
    };
}

std::string to_string(FlowStatus s) {
    switch (s) {
        case FlowStatus::Converged: return "converged";
        case FlowStatus::MaxIterReached: return "max_iter_reached";
        case FlowStatus::Diverging: return "diverging";
    }
    return "unknown";
}

namespace {

double finite_norm(const Cochain& x) {
    double m = 0;
    for (const auto& o : x) {
        for (Value v : o) {
            if (std::isfinite(v)) m = std::max(m, std::abs(v));
        }
    }
    return m;
}

}  // namespace

FlowTrace harmonic_flow(const NetworkSheaf& f, const Weighting& w, const Cochain& x0, const FlowConfig& config) {
    const auto& Q = f.quantale();
    const bool reals = Q.kind() == QuantaleKind::LawvereReals;
    OmegaSchedule schedule = config.schedule ? config.schedule : unweighted_schedule(f);
    FlowTrace trace;
    Cochain x = x0;
    std::size_t worsening = 0;
    double last_norm = finite_norm(x);
    for (std::size_t t = 0; t < config.max_iter; ++t) {
        FlowWeights fw = schedule(t, x);
        const Weighting& wt = fw.weighting ? *fw.weighting : w;
        Cochain lx = laplacian(f, wt, x);
        Value level = cochain_hom(f, x, lx);
        if (!trace.iterations.empty()) {
            Value prev = trace.iterations.back().suffix_level;
            double norm = finite_norm(x);
            bool dropped = Q.leq(level, prev) && !Q.equal(level, prev);
            worsening = (dropped && norm > last_norm) ? worsening + 1 : 0;
            last_norm = norm;
        }
        trace.iterations.push_back({t, x, level});
        Cochain next = combine(f, fw.omega1, fw.omega2, lx, x);
        if (fw.stationary && cochain_approx(f, next, x, Q.unit())) {
            trace.status = FlowStatus::Converged;
            trace.t_star = t;
            trace.final = x;
            return trace;
        }
        if (reals) {
            bool beyond = config.divergence_bound && finite_norm(next) > *config.divergence_bound;
            if (beyond || (config.divergence_window > 0 && worsening >= config.divergence_window)) {
                trace.status = FlowStatus::Diverging;
                trace.final = next;
                return trace;
            }
        }
        x = std::move(next);
    }
    trace.status = FlowStatus::MaxIterReached;
    trace.final = x;
    return trace;
}

Value incidence_level_on(const NetworkSheaf& f, std::span<const Cochain> samples) {
    const auto& Q = f.quantale();
    const auto& g = f.graph();
    Value acc = Q.top();
    for (const auto& x : samples) {
        for (std::size_t e = 0; e < g.edges.size(); ++e) {
            for (std::size_t k = 0; k < 2; ++k) {
                std::size_t v = k == 0 ? g.edges[e].first : g.edges[e].second;
                std::size_t u = k == 0 ? g.edges[e].second : g.edges[e].first;
                Object y = f.restriction(e, 1 - k)(x[u]);
                Value a = f.edge_stalk(e).hom(f.restriction(e, k)(x[v]), y);
                Value b = f.vertex_stalk(v).hom(x[v], f.corestriction(e, k)(y));
                acc = Q.meet(acc, Q.meet(Q.hom(a, b), Q.hom(b, a)));
            }
        }
    }
    return acc;
}

namespace {

// Whether hom_e(F_v x_v, F_w x_w) ⪰ W(v,w) * level for every oriented edge.
bool edges_at_level(const NetworkSheaf& f, const Weighting& w, const Cochain& x, Value level) {
    const auto& Q = f.quantale();
    const auto& g = f.graph();
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        const auto [a, b] = g.edges[e];
        Object ya = f.restriction(e, 0)(x[a]);
        Object yb = f.restriction(e, 1)(x[b]);
        if (!Q.geq(f.edge_stalk(e).hom(ya, yb), Q.mul(w(a, b), level))) return false;
        if (!Q.geq(f.edge_stalk(e).hom(yb, ya), Q.mul(w(b, a), level))) return false;
    }
    return true;
}

}  // namespace

LawReport check_suffix_section_lemmas(const NetworkSheaf& f, const Weighting& w, Value eps, Value q,
                                      std::span<const Cochain> samples) {
    const auto& Q = f.quantale();
    LawReport rep;
    rep.record("premise-level", Q.geq(f.epsilon(), eps),
               [&] { return "recorded level " + Q.format(f.epsilon()) + " below " + Q.format(eps); });
    rep.declare("section-to-suffix");
    rep.declare("suffix-to-section");
    const Value eq = Q.mul(eps, q);
    const bool idem = Q.idempotent(eps);
    if (idem) rep.declare("idempotent-biconditional");
    for (const auto& x : samples) {
        Value level = cochain_hom(f, x, laplacian(f, w, x));
        if (edges_at_level(f, w, x, q)) {
            rep.record("section-to-suffix", Q.geq(level, eq), [&] {
                return describe_cochain(f, x) + ": suffix level " + Q.format(level) + " below " + Q.format(eq);
            });
        }
        if (Q.geq(level, q)) {
            rep.record("suffix-to-section", edges_at_level(f, w, x, eq),
                       [&] { return describe_cochain(f, x) + ": edge homs below W*" + Q.format(eq); });
        }
        if (idem) {
            bool lhs = Q.geq(level, eq);
            bool rhs = edges_at_level(f, w, x, eq);
            rep.record("idempotent-biconditional", lhs == rhs, [&] {
                return describe_cochain(f, x) + ": suffix " + (lhs ? "holds" : "fails") + ", edges " +
                       (rhs ? "hold" : "fail");
            });
        }
    }
    return rep;
}

LawReport check_projection_property(const NetworkSheaf& f, const Weighting& w, const Cochain& x0,
                                    std::span<const Cochain> sections, std::size_t max_iter) {
    const auto& Q = f.quantale();
    LawReport rep;
    rep.record("premise-crisp", f.crisp(), [&] { return "Laplacian level " + Q.format(f.epsilon()); });
    FlowConfig cfg;
    cfg.max_iter = max_iter;
    FlowTrace trace = harmonic_flow(f, w, x0, cfg);
    rep.record("premise-converged", trace.status == FlowStatus::Converged,
               [&] { return "flow status " + to_string(trace.status); });
    rep.declare("projection");
    if (trace.status != FlowStatus::Converged) return rep;
    for (const auto& y : sections) {
        Value before = cochain_hom(f, y, x0);
        Value after = cochain_hom(f, y, trace.final);
        rep.record("projection", Q.equal(before, after), [&] {
            return "y=" + describe_cochain(f, y) + ": hom(y,x0)=" + Q.format(before) +
                   " but hom(y,x*)=" + Q.format(after);
        });
    }
    return rep;
}

std::string describe_cochain(const NetworkSheaf& f, const Cochain& x) {
    std::string s = "[";
    for (std::size_t v = 0; v < x.size(); ++v) {
        if (v) s += ", ";
        s += f.graph().vertices[v] + ":" + f.vertex_stalk(v).describe(x[v]);
    }
    return s + "]";
}

}  // namespace lawvere
