#include "lawvere/des.hpp"

#include <algorithm>
#include <cmath>

namespace lawvere {

namespace {

const Quantale& reals() {
    static const Quantale q = Quantale::lawvere_reals();
    return q;
}

// (a - b)_+ with the conventions of the residual [b, a] on the extended reals.
Value clipped_diff(Value a, Value b) { return reals().hom(b, a); }

}  // namespace

void DesSystem::validate() const {
    graph.validate();
    if (m == 0) throw std::invalid_argument("des: at least one event required");
    if (delays.size() != graph.vertices.size()) throw std::invalid_argument("des: one delay matrix per vertex required");
    for (const auto& a : delays) {
        if (a.size() != m) throw std::invalid_argument("des: delay matrix must be m×m");
        for (const auto& row : a) {
            if (row.size() != m) throw std::invalid_argument("des: delay matrix must be m×m");
            for (Value v : row) {
                if (std::isnan(v) || v < 0) throw std::invalid_argument("des: delays must be nonnegative or inf");
            }
        }
    }
}

Object maxplus_apply(const Matrix& a, const Object& x) {
    if (a.size() != x.size()) throw std::invalid_argument("maxplus_apply: dimension mismatch");
    const std::size_t n = a.empty() ? 0 : a[0].size();
    Object out(n, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
        Value best = -kInfinity;
        for (std::size_t i = 0; i < x.size(); ++i) best = std::max(best, x[i] + a[i][j]);
        out[j] = std::max(best, 0.0);
    }
    return out;
}

Object minplus_transpose_apply(const Matrix& a, const Object& y) {
    if (a.empty() || a[0].size() != y.size()) throw std::invalid_argument("minplus_transpose_apply: dimension mismatch");
    Object out(a.size(), kInfinity);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < y.size(); ++j) out[i] = std::min(out[i], clipped_diff(y[j], a[i][j]));
    }
    return out;
}

NetworkSheaf des_sheaf(const DesSystem& sys) {
    sys.validate();
    const Quantale& Q = reals();
    auto stalk = std::make_shared<PresheafPower>(Q, sys.m, true);
    const std::size_t n = sys.graph.vertices.size();
    const std::size_t ne = sys.graph.edges.size();
    std::vector<std::array<QFunctor, 2>> res;
    std::vector<std::array<QFunctor, 2>> cores;
    for (std::size_t e = 0; e < ne; ++e) {
        std::array<QFunctor, 2> r;
        std::array<QFunctor, 2> c;
        for (std::size_t k = 0; k < 2; ++k) {
            std::size_t v = k == 0 ? sys.graph.edges[e].first : sys.graph.edges[e].second;
            const Matrix a = sys.delays[v];
            r[k] = QFunctor{stalk, stalk, [a](const Object& x) { return maxplus_apply(a, x); },
                            "maxplus(" + sys.graph.vertices[v] + ")"};
            c[k] = QFunctor{stalk, stalk, [a](const Object& y) { return minplus_transpose_apply(a, y); },
                            "minplus^T(" + sys.graph.vertices[v] + ")"};
        }
        res.push_back(r);
        cores.push_back(c);
    }
    NetworkSheaf f(sys.graph, std::vector<LatticePtr>(n, stalk), std::vector<LatticePtr>(ne, stalk), res, cores,
                   nullptr);

    auto xs = default_stalk_sample(*stalk);
    std::vector<std::array<Value, 2>> levels(ne);
    for (std::size_t e = 0; e < ne; ++e) {
        for (std::size_t k = 0; k < 2; ++k) {
            const auto& fr = f.restriction(e, k);
            std::vector<Object> ys;
            for (const auto& x : xs) {
                Object y = fr(x);
                ys.push_back(y);
                for (auto& v : y) v += 1.0;
                ys.push_back(std::move(y));
            }
            levels[e][k] = adjunction_defect(fr, f.corestriction(e, k), xs, ys);
        }
    }
    f.set_levels(std::move(levels));
    return f;
}

Cochain des_laplacian_closed_form(const DesSystem& sys, const Cochain& x) {
    const auto adj = sys.graph.adjacency();
    Cochain out(x.size());
    for (std::size_t v = 0; v < x.size(); ++v) {
        Object lv(sys.m, kInfinity);
        for (const auto& [w, e] : adj[v]) {
            (void)e;
            const Matrix& av = sys.delays[v];
            const Matrix& aw = sys.delays[w];
            for (std::size_t ip = 0; ip < sys.m; ++ip) {
                Value inner = kInfinity;
                for (std::size_t j = 0; j < sys.m; ++j) {
                    Value mx = -kInfinity;
                    for (std::size_t i = 0; i < sys.m; ++i) mx = std::max(mx, aw[i][j] + x[w][i]);
                    inner = std::min(inner, clipped_diff(av[ip][j], mx));
                }
                lv[ip] = std::min(lv[ip], sys.weights(v, w) + inner);
            }
        }
        out[v] = lv;
    }
    return out;
}

LawReport compare_des_laplacian(const DesSystem& sys, const NetworkSheaf& f, const Cochain& x) {
    const Quantale& Q = reals();
    Cochain generic = laplacian(f, sys.weights, x);
    Cochain closed = des_laplacian_closed_form(sys, x);
    LawReport rep;
    for (std::size_t v = 0; v < x.size(); ++v) {
        for (std::size_t i = 0; i < sys.m; ++i) {
            rep.record("closed-form-matches-generic", Q.equal(generic[v][i], closed[v][i]), [&] {
                return "vertex " + sys.graph.vertices[v] + " event " + std::to_string(i) + ": generic " +
                       Q.format(generic[v][i]) + ", closed form " + Q.format(closed[v][i]) + " at x=" +
                       describe_cochain(f, x);
            });
        }
    }
    return rep;
}

DesSlack des_gs_slack(const DesSystem& sys, const Cochain& x) {
    DesSlack worst{0, 0, kInfinity};
    for (const auto& [a, b] : sys.graph.edges) {
        std::vector<Value> ta(sys.m, -kInfinity);
        std::vector<Value> tb(sys.m, -kInfinity);
        for (std::size_t j = 0; j < sys.m; ++j) {
            for (std::size_t i = 0; i < sys.m; ++i) {
                ta[j] = std::max(ta[j], x[a][i] + sys.delays[a][i][j]);
                tb[j] = std::max(tb[j], x[b][i] + sys.delays[b][i][j]);
            }
        }
        for (int dir = 0; dir < 2; ++dir) {
            const auto& hi = dir == 0 ? tb : ta;
            const auto& lo = dir == 0 ? ta : tb;
            std::size_t v = dir == 0 ? a : b;
            std::size_t w = dir == 0 ? b : a;
            Value lhs = kInfinity;
            for (std::size_t j = 0; j < sys.m; ++j) {
                Value d = (std::isinf(hi[j]) && std::isinf(lo[j])) ? 0.0 : std::max(hi[j] - lo[j], 0.0);
                lhs = std::min(lhs, d);
            }
            Value wt = sys.weights(v, w);
            Value slack = std::isinf(wt) ? kInfinity : (std::isinf(lhs) ? -kInfinity : wt - lhs);
            if (slack < worst.slack) worst = DesSlack{v, w, slack};
        }
    }
    return worst;
}

}  // namespace lawvere
