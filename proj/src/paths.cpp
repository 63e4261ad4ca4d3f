#include "lawvere/paths.hpp"

#include <algorithm>
#include <cmath>

namespace lawvere {

void PathProblem::validate() const {
    graph.validate();
    if (edge_weights.size() != graph.edges.size()) throw std::invalid_argument("paths: one weight per edge required");
    for (Value w : edge_weights) {
        if (std::isnan(w) || w < 0) throw std::invalid_argument("paths: edge weights must be nonnegative");
    }
    if (source >= graph.vertices.size()) throw std::invalid_argument("paths: source out of range");
}

Weighting PathProblem::weighting() const {
    const std::size_t n = graph.vertices.size();
    Weighting w{std::vector<std::vector<Value>>(n, std::vector<Value>(n, kInfinity))};
    for (std::size_t e = 0; e < graph.edges.size(); ++e) {
        auto [a, b] = graph.edges[e];
        w.w[a][b] = edge_weights[e];
        w.w[b][a] = edge_weights[e];
    }
    return w;
}

std::string to_string(PathMode m) { return m == PathMode::Dijkstra ? "dijkstra" : "synchronous"; }

OmegaSchedule dijkstra_schedule(const Graph& g, std::shared_ptr<std::size_t> extractions) {
    const std::size_t n = g.vertices.size();
    auto searched = std::make_shared<std::vector<bool>>(n, false);
    std::vector<std::size_t> by_id(n);
    for (std::size_t i = 0; i < n; ++i) by_id[i] = i;
    std::sort(by_id.begin(), by_id.end(), [&](std::size_t a, std::size_t b) { return g.vertices[a] < g.vertices[b]; });
    return [searched, extractions, by_id, n](std::size_t, const Cochain& x) {
        std::optional<std::size_t> pick;
        for (std::size_t v : by_id) {
            if ((*searched)[v]) continue;
            if (!pick || x[v][0] < x[*pick][0]) pick = v;
        }
        if (pick) {
            (*searched)[*pick] = true;
            ++*extractions;
        }
        FlowWeights fw;
        fw.omega2.assign(n, 0.0);
        fw.omega1.resize(n);
        bool done = true;
        for (std::size_t v = 0; v < n; ++v) {
            fw.omega1[v] = (*searched)[v] ? kInfinity : 0.0;
            done = done && (*searched)[v];
        }
        fw.stationary = done;
        return fw;
    };
}

NetworkSheaf path_sheaf(const Graph& g) {
    return constant_sheaf(g, std::make_shared<UnderlineQ>(Quantale::lawvere_reals(), true));
}

PathResult shortest_paths(const PathProblem& p, PathMode mode, std::size_t max_iter) {
    p.validate();
    NetworkSheaf f = path_sheaf(p.graph);
    const std::size_t n = p.graph.vertices.size();
    Cochain x0(n, Object{kInfinity});
    x0[p.source] = Object{0.0};
    FlowConfig cfg;
    cfg.max_iter = max_iter;
    cfg.divergence_window = 0;
    auto count = std::make_shared<std::size_t>(0);
    if (mode == PathMode::Dijkstra) cfg.schedule = dijkstra_schedule(p.graph, count);
    PathResult r;
    r.trace = harmonic_flow(f, p.weighting(), x0, cfg);
    for (const auto& v : r.trace.final) r.distances.push_back(v[0]);
    r.extractions = *count;
    return r;
}

}  // namespace lawvere
