#include "lawvere/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

namespace lawvere::oracle {

namespace {

std::vector<Object> all_objects(const QCategory& lat, const OracleConfig& cfg) {
    auto objs = lat.objects();
    if (objs.size() > cfg.max_objects) throw std::length_error("oracle: too many objects in " + lat.name());
    return objs;
}

BruteLimit scan(const QCategory& lat, const WeightedDiagram& d, bool meet, const OracleConfig& cfg) {
    const auto& Q = lat.quantale();
    const auto objs = all_objects(lat, cfg);
    std::vector<Value> target(objs.size());
    for (std::size_t z = 0; z < objs.size(); ++z) {
        Value acc = Q.top();
        for (std::size_t c = 0; c < d.size(); ++c) {
            Value h = meet ? lat.hom(objs[z], d.objects[c]) : lat.hom(d.objects[c], objs[z]);
            acc = Q.meet(acc, Q.hom(d.weights[c], h));
        }
        target[z] = acc;
    }
    BruteLimit out;
    for (const auto& m : objs) {
        bool ok = true;
        for (std::size_t z = 0; z < objs.size() && ok; ++z) {
            ok = Q.equal(meet ? lat.hom(objs[z], m) : lat.hom(m, objs[z]), target[z]);
        }
        if (ok) {
            if (out.multiplicity == 0) out.object = m;
            ++out.multiplicity;
        }
    }
    if (out.multiplicity == 0) {
        throw NoSuchObject(std::string("oracle: no weighted ") + (meet ? "meet" : "join") + " in " + lat.name());
    }
    return out;
}

}  // namespace

BruteLimit brute_weighted_meet(const QCategory& lat, const WeightedDiagram& d, const OracleConfig& cfg) {
    return scan(lat, d, true, cfg);
}

BruteLimit brute_weighted_join(const QCategory& lat, const WeightedDiagram& d, const OracleConfig& cfg) {
    return scan(lat, d, false, cfg);
}

std::vector<double> classic_shortest_paths(std::size_t n, std::span<const WeightedEdge> edges, std::size_t source) {
    std::vector<std::vector<std::pair<std::size_t, double>>> adj(n);
    for (const auto& e : edges) {
        adj[e.a].push_back({e.b, e.w});
        adj[e.b].push_back({e.a, e.w});
    }
    std::vector<double> dist(n, std::numeric_limits<double>::infinity());
    using Item = std::pair<double, std::size_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    dist[source] = 0;
    pq.push({0, source});
    while (!pq.empty()) {
        auto [d, u] = pq.top();
        pq.pop();
        if (d > dist[u]) continue;
        for (auto [v, w] : adj[u]) {
            if (d + w < dist[v]) {
                dist[v] = d + w;
                pq.push({dist[v], v});
            }
        }
    }
    return dist;
}

Value grid_residual(const Quantale& q, Value a, Value b, const OracleConfig& cfg) {
    if (q.finite()) {
        Value best = q.bottom();
        for (Value r : q.carrier()) {
            if (q.leq(q.mul(a, r), b)) best = q.join(best, r);
        }
        return best;
    }
    const double n = static_cast<double>(cfg.grid_resolution);
    if (q.kind() == QuantaleKind::LawvereReals) {
        // numerically: least r ≥ 0 with a + r ≥ b
        if (std::isinf(a)) return 0.0;
        if (std::isinf(b)) return kInfinity;
        if (a >= b) return 0.0;
        double lo = 0.0;
        double hi = b;
        for (std::size_t i = 1; i <= cfg.grid_resolution; ++i) {
            double r = b * static_cast<double>(i) / n;
            if (a + r >= b) {
                hi = r;
                lo = b * static_cast<double>(i - 1) / n;
                break;
            }
        }
        for (int k = 0; k < 60; ++k) {
            double mid = 0.5 * (lo + hi);
            (a + mid >= b ? hi : lo) = mid;
        }
        return hi;
    }
    // unit interval: greatest r in [0,1] with mul(a, r) <= b
    auto ok = [&](double r) { return q.mul(a, r) <= b + 1e-15; };
    double lo = 0.0;
    double hi = 1.0;
    if (ok(1.0)) return 1.0;
    for (std::size_t i = cfg.grid_resolution; i-- > 0;) {
        double r = static_cast<double>(i) / n;
        if (ok(r)) {
            lo = r;
            hi = static_cast<double>(i + 1) / n;
            break;
        }
    }
    for (int k = 0; k < 60; ++k) {
        double mid = 0.5 * (lo + hi);
        (ok(mid) ? lo : hi) = mid;
    }
    return lo;
}

Object transitive_closure(const Quantale& q, std::size_t n, Object r) {
    for (std::size_t a = 0; a < n; ++a) r[a * n + a] = q.join(r[a * n + a], q.unit());
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                r[i * n + j] = q.join(r[i * n + j], q.mul(r[i * n + k], r[k * n + j]));
            }
    return r;
}

std::optional<Object> grid_transitive_hull(const Quantale& q, std::size_t n, const Object& r,
                                           std::span<const Value> grid, const OracleConfig& cfg) {
    std::vector<std::size_t> off;
    for (std::size_t i = 0; i < n * n; ++i) {
        if (i / n != i % n) off.push_back(i);
    }
    std::vector<std::vector<Value>> choices(off.size());
    std::size_t total = 1;
    for (std::size_t k = 0; k < off.size(); ++k) {
        for (Value g : grid) {
            if (q.leq(r[off[k]], g)) choices[k].push_back(g);
        }
        total *= choices[k].size();
        if (total > cfg.max_grid_relations) throw std::length_error("oracle: grid too large");
    }
    auto transitive = [&](const Object& s) {
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                for (std::size_t c = 0; c < n; ++c) {
                    if (!q.leq(q.mul(s[a * n + b], s[b * n + c]), s[a * n + c])) return false;
                }
        return true;
    };
    std::vector<Object> candidates;
    for (std::size_t code = 0; code < total; ++code) {
        Object s(n * n, q.unit());
        std::size_t c = code;
        for (std::size_t k = 0; k < off.size(); ++k) {
            s[off[k]] = choices[k][c % choices[k].size()];
            c /= choices[k].size();
        }
        if (transitive(s)) candidates.push_back(std::move(s));
    }
    for (const auto& m : candidates) {
        bool least = std::all_of(candidates.begin(), candidates.end(), [&](const Object& o) {
            for (std::size_t i = 0; i < m.size(); ++i) {
                if (!q.leq(m[i], o[i])) return false;
            }
            return true;
        });
        if (least) return m;
    }
    return std::nullopt;
}

std::vector<Cochain> brute_sections(const NetworkSheaf& f, const Weighting& w, const OracleConfig& cfg) {
    const auto& g = f.graph();
    const auto& Q = f.quantale();
    std::vector<std::vector<Object>> pools;
    std::size_t total = 1;
    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
        pools.push_back(all_objects(f.vertex_stalk(v), cfg));
        total *= pools.back().size();
        if (total > cfg.max_cochains) throw std::length_error("oracle: too many cochains");
    }
    std::vector<Cochain> out;
    for (std::size_t code = 0; code < total; ++code) {
        Cochain x(pools.size());
        std::size_t c = code;
        for (std::size_t v = pools.size(); v-- > 0;) {
            x[v] = pools[v][c % pools[v].size()];
            c /= pools[v].size();
        }
        bool ok = true;
        for (std::size_t e = 0; e < g.edges.size() && ok; ++e) {
            auto [a, b] = g.edges[e];
            Object ya = f.restriction(e, 0)(x[a]);
            Object yb = f.restriction(e, 1)(x[b]);
            ok = Q.leq(w(a, b), f.edge_stalk(e).hom(ya, yb)) && Q.leq(w(b, a), f.edge_stalk(e).hom(yb, ya));
        }
        if (ok) out.push_back(std::move(x));
    }
    return out;
}

}  // namespace lawvere::oracle
