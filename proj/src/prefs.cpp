#include "lawvere/prefs.hpp"

#include <algorithm>
#include <cmath>

namespace lawvere {

Relation relation_compose(const Quantale& q, std::size_t n, const Relation& r, const Relation& s) {
    Relation out(n * n, q.bottom());
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t c = 0; c < n; ++c) {
            Value acc = q.bottom();
            for (std::size_t b = 0; b < n; ++b) acc = q.join(acc, q.mul(r[a * n + b], s[b * n + c]));
            out[a * n + c] = acc;
        }
    }
    return out;
}

Relation kleene_closure(const Quantale& q, std::size_t n, Relation r) {
    for (std::size_t round = 0; round < 64; ++round) {
        Relation rr = relation_compose(q, n, r, r);
        bool changed = false;
        for (std::size_t i = 0; i < r.size(); ++i) {
            Value j = q.join(r[i], rr[i]);
            if (!q.equal(j, r[i])) changed = true;
            r[i] = j;
        }
        if (!changed) return r;
    }
    throw std::runtime_error("kleene_closure: no fixed point after 64 rounds");
}

std::optional<std::string> transitivity_witness(const Quantale& q, std::size_t n, const Relation& r) {
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c) {
                Value lhs = q.mul(r[a * n + b], r[b * n + c]);
                if (!q.leq(lhs, r[a * n + c])) {
                    return "R(" + std::to_string(a) + "," + std::to_string(b) + ")·R(" + std::to_string(b) + "," +
                           std::to_string(c) + ")=" + q.format(lhs) + " exceeds R(" + std::to_string(a) + "," +
                           std::to_string(c) + ")=" + q.format(r[a * n + c]);
                }
            }
    return std::nullopt;
}

std::optional<std::string> reflexivity_witness(const Quantale& q, std::size_t n, const Relation& r) {
    for (std::size_t a = 0; a < n; ++a) {
        if (!q.equal(r[a * n + a], q.unit())) return "R(" + std::to_string(a) + "," + std::to_string(a) + ")=" + q.format(r[a * n + a]);
    }
    return std::nullopt;
}

PreferenceLattice::PreferenceLattice(Quantale q, std::vector<std::string> alternatives)
    : WeightedLattice(std::move(q)), alts_(std::move(alternatives)) {
    if (alts_.empty()) throw std::invalid_argument("preference lattice: no alternatives");
    auto sorted = alts_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("preference lattice: duplicate alternative");
}

Value PreferenceLattice::hom(const Object& p, const Object& m) const {
    const auto& Q = quantale();
    Value acc = Q.top();
    for (std::size_t i = 0; i < p.size(); ++i) acc = Q.meet(acc, Q.hom(p[i], m[i]));
    return acc;
}

bool PreferenceLattice::contains(const Object& p) const {
    const auto& Q = quantale();
    if (p.size() != n() * n()) return false;
    for (Value v : p) {
        if (!Q.contains(v)) return false;
    }
    return !reflexivity_witness(Q, n(), p) && !transitivity_witness(Q, n(), p);
}

std::string PreferenceLattice::name() const { return "Pref(" + std::to_string(n()) + ", " + quantale().name() + ")"; }

std::string PreferenceLattice::describe(const Object& p) const {
    std::string s = "[";
    for (std::size_t a = 0; a < n(); ++a) {
        s += a ? ",[" : "[";
        for (std::size_t b = 0; b < n(); ++b) {
            if (b) s += ",";
            s += quantale().format(p[a * n() + b]);
        }
        s += "]";
    }
    return s + "]";
}

bool PreferenceLattice::enumerable() const {
    if (!quantale().finite()) return false;
    double count = std::pow(static_cast<double>(quantale().size()), static_cast<double>(n() * n() - n()));
    return count <= 4096;
}

std::vector<Object> PreferenceLattice::objects() const {
    if (!enumerable()) throw std::logic_error(name() + " is not enumerable");
    const auto& Q = quantale();
    const auto carrier = Q.carrier();
    const std::size_t nn = n();
    std::vector<std::size_t> off;
    for (std::size_t i = 0; i < nn * nn; ++i) {
        if (i / nn != i % nn) off.push_back(i);
    }
    std::size_t total = 1;
    for (std::size_t k = 0; k < off.size(); ++k) total *= carrier.size();
    std::vector<Object> out;
    for (std::size_t code = 0; code < total; ++code) {
        Relation r(nn * nn, Q.unit());
        std::size_t c = code;
        for (std::size_t k = 0; k < off.size(); ++k) {
            r[off[k]] = carrier[c % carrier.size()];
            c /= carrier.size();
        }
        if (!transitivity_witness(Q, nn, r)) out.push_back(r);
    }
    std::sort(out.begin(), out.end());
    return out;
}

Relation PreferenceLattice::identity_relation() const {
    const auto& Q = quantale();
    Relation r(n() * n(), Q.bottom());
    for (std::size_t a = 0; a < n(); ++a) r[a * n() + a] = Q.unit();
    return r;
}

Object PreferenceLattice::cotensor(Value q, const Object& p) const {
    const auto& Q = quantale();
    Relation r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) r[i] = Q.hom(q, p[i]);
    if (auto w = transitivity_witness(Q, n(), r)) {
        throw NoSuchObject("cotensor " + Q.format(q) + " ⋔ " + describe(p) + " is not transitive: " + *w);
    }
    return r;
}

Object PreferenceLattice::tensor(Value q, const Object& p) const {
    const auto& Q = quantale();
    Relation r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) r[i] = Q.mul(q, p[i]);
    for (std::size_t a = 0; a < n(); ++a) r[a * n() + a] = Q.join(r[a * n() + a], Q.unit());
    return r;
}

Object PreferenceLattice::meet(std::span<const Object> ps) const {
    const auto& Q = quantale();
    Relation r(n() * n(), Q.top());
    for (const auto& p : ps)
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = Q.meet(r[i], p[i]);
    return r;
}

Object PreferenceLattice::join(std::span<const Object> ps) const {
    const auto& Q = quantale();
    Relation r = identity_relation();
    for (const auto& p : ps)
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = Q.join(r[i], p[i]);
    r = kleene_closure(Q, n(), std::move(r));
    if (auto w = transitivity_witness(Q, n(), r)) throw NoSuchObject("join closure failed: " + *w);
    return r;
}

Relation pullback(const std::vector<std::size_t>& f, std::size_t nb, const Relation& m) {
    const std::size_t na = f.size();
    Relation out(na * na);
    for (std::size_t a = 0; a < na; ++a)
        for (std::size_t b = 0; b < na; ++b) out[a * na + b] = m[f[a] * nb + f[b]];
    return out;
}

Relation pushforward(const Quantale& q, const std::vector<std::size_t>& f, std::size_t nb, const Relation& p) {
    const std::size_t na = f.size();
    Relation out(nb * nb, q.bottom());
    for (std::size_t b = 0; b < nb; ++b) out[b * nb + b] = q.unit();
    for (std::size_t a = 0; a < na; ++a)
        for (std::size_t a2 = 0; a2 < na; ++a2) {
            Value& slot = out[f[a] * nb + f[a2]];
            slot = q.join(slot, p[a * na + a2]);
        }
    return kleene_closure(q, nb, std::move(out));
}

namespace {

void check_map(const PreferenceLattice& a, const PreferenceLattice& b, const std::vector<std::size_t>& f) {
    require_same(a.quantale(), b.quantale(), "preference map");
    if (f.size() != a.n()) throw std::invalid_argument("preference map: one image per alternative required");
    for (std::size_t x : f) {
        if (x >= b.n()) throw std::invalid_argument("preference map: image out of range");
    }
}

std::string map_name(const PreferenceLattice& a, const PreferenceLattice& b, const std::vector<std::size_t>& f) {
    std::string s;
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i) s += ",";
        s += a.alternatives()[i] + "->" + b.alternatives()[f[i]];
    }
    return s;
}

}  // namespace

QFunctor pushforward_functor(PrefPtr a, PrefPtr b, std::vector<std::size_t> f) {
    check_map(*a, *b, f);
    const std::size_t nb = b->n();
    Quantale q = a->quantale();
    std::string nm = "push(" + map_name(*a, *b, f) + ")";
    return QFunctor{a, b, [q, f, nb](const Object& p) { return pushforward(q, f, nb, p); }, nm};
}

QFunctor pullback_functor(PrefPtr a, PrefPtr b, std::vector<std::size_t> f) {
    check_map(*a, *b, f);
    const std::size_t nb = b->n();
    std::string nm = "pull(" + map_name(*a, *b, f) + ")";
    return QFunctor{b, a, [f, nb](const Object& m) { return pullback(f, nb, m); }, nm};
}

LawReport check_pushforward_minimality(const PreferenceLattice& a, const PreferenceLattice& b,
                                       const std::vector<std::size_t>& f, const Relation& p,
                                       std::span<const Relation> competitors) {
    check_map(a, b, f);
    const auto& Q = a.quantale();
    LawReport rep;
    Relation fp = pushforward(Q, f, b.n(), p);
    rep.record("pushforward-in-pref", b.contains(fp), [&] { return b.describe(fp); });
    Relation back = pullback(f, b.n(), fp);
    rep.record("pullback-covers", Q.equal(a.hom(p, back), Q.unit()),
               [&] { return "P=" + a.describe(p) + " f*f_*P=" + a.describe(back); });
    rep.declare("minimal");
    for (const auto& m : competitors) {
        if (!Q.equal(a.hom(p, pullback(f, b.n(), m)), Q.unit())) continue;
        rep.record("minimal", Q.equal(b.hom(fp, m), Q.unit()),
                   [&] { return "competitor " + b.describe(m) + " lies below f_*P=" + b.describe(fp); });
    }
    return rep;
}

NetworkSheaf preference_sheaf(Graph g, std::vector<PrefPtr> vertex_stalks, std::vector<PrefPtr> edge_stalks,
                              const std::vector<std::array<std::vector<std::size_t>, 2>>& maps) {
    g.validate();
    if (vertex_stalks.size() != g.vertices.size() || edge_stalks.size() != g.edges.size() ||
        maps.size() != g.edges.size())
        throw std::invalid_argument("preference_sheaf: stalk or map count mismatch");
    std::vector<std::array<QFunctor, 2>> res;
    std::vector<std::array<QFunctor, 2>> cores;
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        std::array<QFunctor, 2> r;
        std::array<QFunctor, 2> c;
        for (std::size_t k = 0; k < 2; ++k) {
            std::size_t v = k == 0 ? g.edges[e].first : g.edges[e].second;
            r[k] = pushforward_functor(vertex_stalks[v], edge_stalks[e], maps[e][k]);
            c[k] = pullback_functor(vertex_stalks[v], edge_stalks[e], maps[e][k]);
        }
        res.push_back(r);
        cores.push_back(c);
    }
    std::vector<LatticePtr> vs(vertex_stalks.begin(), vertex_stalks.end());
    std::vector<LatticePtr> es(edge_stalks.begin(), edge_stalks.end());
    return NetworkSheaf(std::move(g), std::move(vs), std::move(es), std::move(res), std::move(cores), nullptr);
}

NetworkSheaf preference_sheaf(Graph g, PrefPtr stalk) {
    std::vector<std::size_t> id(stalk->n());
    for (std::size_t i = 0; i < id.size(); ++i) id[i] = i;
    std::vector<std::array<std::vector<std::size_t>, 2>> maps(g.edges.size(), {id, id});
    std::vector<PrefPtr> vs(g.vertices.size(), stalk);
    std::vector<PrefPtr> es(g.edges.size(), stalk);
    return preference_sheaf(std::move(g), std::move(vs), std::move(es), maps);
}

OmegaSchedule bounded_confidence_schedule(const NetworkSheaf& f, std::vector<Value> eps) {
    const std::size_t n = f.graph().vertices.size();
    if (eps.size() != n) throw std::invalid_argument("bounded_confidence_schedule: one threshold per vertex");
    std::vector<LatticePtr> stalks;
    for (std::size_t v = 0; v < n; ++v) stalks.push_back(f.vertex_stalk_ptr(v));
    Quantale Q = f.quantale();
    auto adj = f.graph().adjacency();
    return [stalks, Q, adj, eps, n](std::size_t, const Cochain& x) {
        FlowWeights fw;
        fw.omega1.assign(n, Q.unit());
        fw.omega2.assign(n, Q.unit());
        Weighting w{std::vector<std::vector<Value>>(n, std::vector<Value>(n, Q.bottom()))};
        for (std::size_t v = 0; v < n; ++v) {
            for (const auto& [u, e] : adj[v]) {
                (void)e;
                w.w[v][u] = stalks[v]->approx_q(x[v], x[u], eps[v]) ? Q.unit() : Q.bottom();
            }
        }
        fw.weighting = std::move(w);
        return fw;
    };
}

std::size_t count_updates(const NetworkSheaf& f, const FlowTrace& trace) {
    std::size_t count = 0;
    const auto& it = trace.iterations;
    for (std::size_t i = 1; i < it.size(); ++i) {
        if (!cochain_approx(f, it[i - 1].x, it[i].x, f.quantale().unit())) ++count;
    }
    if (!it.empty() && !cochain_approx(f, it.back().x, trace.final, f.quantale().unit())) ++count;
    return count;
}

}  // namespace lawvere
