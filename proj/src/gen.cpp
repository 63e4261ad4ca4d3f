#include "lawvere/gen.hpp"

#include <algorithm>
#include <set>

namespace lawvere::gen {

namespace {

std::size_t pick(Rng& rng, std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); }

}  // namespace

std::shared_ptr<const FiniteLattice> random_lattice(Rng& rng, const Quantale& q, std::size_t max_objects) {
    const auto carrier = q.carrier();
    for (int attempt = 0;; ++attempt) {
        const std::size_t m = attempt > 50 ? 1 : 1 + pick(rng, 2);
        PresheafPower ambient(q, m, false);
        std::set<Object> set{ambient.top()};
        const std::size_t gens = 1 + pick(rng, 3);
        for (std::size_t i = 0; i < gens; ++i) {
            Object x(m);
            for (auto& v : x) v = carrier[pick(rng, carrier.size())];
            set.insert(x);
        }
        bool grew = true;
        while (grew && set.size() <= max_objects) {
            grew = false;
            std::vector<Object> cur(set.begin(), set.end());
            for (std::size_t i = 0; i < cur.size(); ++i) {
                for (Value w : carrier) grew |= set.insert(ambient.cotensor(w, cur[i])).second;
                for (std::size_t j = i + 1; j < cur.size(); ++j) {
                    Object pair[2] = {cur[i], cur[j]};
                    grew |= set.insert(ambient.meet(pair)).second;
                }
            }
        }
        if (set.size() > max_objects) continue;
        std::vector<Object> objs(set.begin(), set.end());
        std::vector<std::string> ids;
        for (const auto& o : objs) ids.push_back(ambient.describe(o));
        if (objs.size() < max_objects && pick(rng, 5) == 0) {
            std::size_t k = pick(rng, objs.size());
            objs.push_back(objs[k]);
            ids.push_back(ids[k] + "'");
        }
        std::vector<std::vector<Value>> hom(objs.size(), std::vector<Value>(objs.size()));
        for (std::size_t i = 0; i < objs.size(); ++i)
            for (std::size_t j = 0; j < objs.size(); ++j) hom[i][j] = ambient.hom(objs[i], objs[j]);
        FiniteQCategory cat(q, ids, hom);
        cat.set_name("sub" + ambient.name());
        return std::make_shared<const FiniteLattice>(std::move(cat));
    }
}

std::optional<QFunctor> random_functor(Rng& rng, std::shared_ptr<const FiniteLattice> c,
                                       std::shared_ptr<const FiniteLattice> d) {
    const auto& Q = c->quantale();
    const std::size_t n = c->size();
    const std::size_t k = d->size();
    std::vector<std::size_t> table(n);
    std::size_t budget = 20000;
    std::function<bool(std::size_t)> dfs = [&](std::size_t i) -> bool {
        if (i == n) return true;
        std::vector<std::size_t> order(k);
        for (std::size_t j = 0; j < k; ++j) order[j] = j;
        std::shuffle(order.begin(), order.end(), rng);
        for (std::size_t cand : order) {
            if (budget-- == 0) return false;
            bool ok = true;
            for (std::size_t p = 0; p < i && ok; ++p) {
                ok = Q.leq(c->category().hom(p, i), d->category().hom(table[p], cand)) &&
                     Q.leq(c->category().hom(i, p), d->category().hom(cand, table[p]));
            }
            ok = ok && Q.leq(c->category().hom(i, i), d->category().hom(cand, cand));
            if (!ok) continue;
            table[i] = cand;
            if (dfs(i + 1)) return true;
        }
        return false;
    };
    if (!dfs(0)) return std::nullopt;
    auto cc = std::make_shared<const FiniteQCategory>(c->category());
    auto dc = std::make_shared<const FiniteQCategory>(d->category());
    QFunctor f = QFunctor::from_table(cc, dc, table);
    f.dom = c;
    f.cod = d;
    return f;
}

std::pair<QFunctor, QFunctor> random_crisp_adjunction(Rng& rng, std::shared_ptr<const FiniteLattice> c,
                                                      std::shared_ptr<const FiniteLattice> d, std::size_t tries) {
    const auto& Q = c->quantale();
    for (std::size_t t = 0; t < tries; ++t) {
        auto f = random_functor(rng, c, d);
        if (!f) break;
        QFunctor g = synthesize_right_adjoint(c, d, *f);
        if (Q.equal(adjunction_defect(*f, g), Q.unit())) return {*f, g};
    }
    return {QFunctor::constant(c, d, d->bottom()), QFunctor::constant(d, c, c->top())};
}

WeightedDiagram random_diagram(Rng& rng, std::span<const Object> pool, std::span<const Value> weights,
                               std::size_t max_index) {
    WeightedDiagram d;
    const std::size_t k = pick(rng, max_index + 1);
    for (std::size_t i = 0; i < k; ++i) {
        d.objects.push_back(pool[pick(rng, pool.size())]);
        d.weights.push_back(weights[pick(rng, weights.size())]);
    }
    return d;
}

Graph random_connected_graph(Rng& rng, std::size_t n, double extra) {
    Graph g;
    const std::size_t width = std::to_string(n > 0 ? n - 1 : 0).size();
    for (std::size_t i = 0; i < n; ++i) {
        std::string s = std::to_string(i);
        g.vertices.push_back("v" + std::string(width - s.size(), '0') + s);
    }
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (std::size_t i = 1; i < n; ++i) {
        std::size_t j = pick(rng, i);
        g.edges.push_back({j, i});
        seen.insert({j, i});
    }
    std::bernoulli_distribution coin(extra);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            if (!seen.count({i, j}) && coin(rng)) g.edges.push_back({i, j});
        }
    return g;
}

NetworkSheaf random_crisp_sheaf(Rng& rng, const Quantale& q, std::size_t max_objects) {
    const std::size_t n = 2 + pick(rng, 2);
    Graph g;
    for (std::size_t i = 0; i < n; ++i) g.vertices.push_back(std::string(1, static_cast<char>('a' + i)));
    g.edges = {{0, 1}};
    if (n == 3) {
        g.edges.push_back({1, 2});
        if (pick(rng, 2) == 0) g.edges.push_back({0, 2});
    }
    std::vector<std::shared_ptr<const FiniteLattice>> vs;
    for (std::size_t v = 0; v < n; ++v) vs.push_back(random_lattice(rng, q, max_objects));
    std::vector<LatticePtr> es;
    std::vector<std::array<QFunctor, 2>> res;
    std::vector<std::array<QFunctor, 2>> cores;
    for (const auto& [a, b] : g.edges) {
        auto e = random_lattice(rng, q, max_objects);
        es.push_back(e);
        auto [fa, ga] = random_crisp_adjunction(rng, vs[a], e);
        auto [fb, gb] = random_crisp_adjunction(rng, vs[b], e);
        res.push_back({fa, fb});
        cores.push_back({ga, gb});
    }
    return NetworkSheaf(std::move(g), std::vector<LatticePtr>(vs.begin(), vs.end()), std::move(es), std::move(res),
                        std::move(cores));
}

}  // namespace lawvere::gen
