#include "lawvere/fixpoint.hpp"

#include <algorithm>

namespace lawvere {

namespace {

enum class Which { Suffix, Prefix, Stable };

std::vector<Object> collect(const FixpointQuery& query, Which which) {
    const auto& lat = *query.lattice;
    const auto& Q = lat.quantale();
    std::vector<Object> out;
    for (const auto& x : lat.objects()) {
        Object lx = query.endo(x);
        bool suffix = Q.geq(lat.hom(x, lx), query.q);
        bool prefix = Q.geq(lat.hom(lx, x), query.p);
        bool keep = which == Which::Suffix ? suffix : which == Which::Prefix ? prefix : (suffix && prefix);
        if (keep) out.push_back(x);
    }
    return out;
}

bool member(std::span<const Object> set, const Object& x) {
    return std::find(set.begin(), set.end(), x) != set.end();
}

WeightedDiagram random_diagram(std::span<const Object> pool, std::span<const Value> weights, std::size_t max_index,
                               std::mt19937_64& rng) {
    WeightedDiagram d;
    std::uniform_int_distribution<std::size_t> size_dist(0, max_index);
    std::uniform_int_distribution<std::size_t> obj_dist(0, pool.size() - 1);
    std::uniform_int_distribution<std::size_t> w_dist(0, weights.size() - 1);
    const std::size_t k = size_dist(rng);
    for (std::size_t i = 0; i < k; ++i) {
        d.objects.push_back(pool[obj_dist(rng)]);
        d.weights.push_back(weights[w_dist(rng)]);
    }
    return d;
}

std::string describe_diagram(const QCategory& lat, const WeightedDiagram& d) {
    std::string s = "{";
    for (std::size_t c = 0; c < d.size(); ++c) {
        if (c) s += ", ";
        s += lat.quantale().format(d.weights[c]) + "*" + lat.describe(d.objects[c]);
    }
    return s + "}";
}

void check_complete(const QCategory& lat, std::span<const Object> set, std::span<const Value> weights,
                    const TarskiOptions& opts, std::mt19937_64& rng, const std::string& law, LawReport& rep) {
    const auto& Q = lat.quantale();
    auto probe = [&](const WeightedDiagram& d) {
        for (LimitKind kind : {LimitKind::Meet, LimitKind::Join}) {
            bool ok = search_in_subset(lat, set, d, kind).has_value();
            rep.record(law, ok, [&] {
                return std::string(kind == LimitKind::Meet ? "no weighted meet" : "no weighted join") +
                       " inside the subset for " + describe_diagram(lat, d);
            });
        }
    };
    for (const auto& x : set) {
        for (Value w : weights) probe(WeightedDiagram{{x}, {w}});
    }
    if (set.size() <= opts.max_subset_objects) {
        const std::size_t n = set.size();
        for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
            std::vector<Object> objs;
            for (std::size_t i = 0; i < n; ++i) {
                if (mask & (std::size_t{1} << i)) objs.push_back(set[i]);
            }
            probe(WeightedDiagram::crisp(Q, std::move(objs)));
        }
    } else {
        probe(WeightedDiagram{});
    }
    if (!set.empty()) {
        for (std::size_t r = 0; r < opts.random_diagrams; ++r) probe(random_diagram(set, weights, opts.max_index, rng));
    }
}

}  // namespace

std::vector<Object> suffix_points(const FixpointQuery& query) { return collect(query, Which::Suffix); }
std::vector<Object> prefix_points(const FixpointQuery& query) { return collect(query, Which::Prefix); }
std::vector<Object> stable_points(const FixpointQuery& query) { return collect(query, Which::Stable); }

std::optional<std::size_t> search_in_subset(const QCategory& lat, std::span<const Object> objs,
                                            const WeightedDiagram& d, LimitKind kind) {
    const auto& Q = lat.quantale();
    const bool meet = kind == LimitKind::Meet;
    std::vector<Value> target;
    for (const auto& z : objs) {
        Value acc = Q.top();
        for (std::size_t c = 0; c < d.size(); ++c) {
            Value h = meet ? lat.hom(z, d.objects[c]) : lat.hom(d.objects[c], z);
            acc = Q.meet(acc, Q.hom(d.weights[c], h));
        }
        target.push_back(acc);
    }
    for (std::size_t m = 0; m < objs.size(); ++m) {
        bool ok = true;
        for (std::size_t z = 0; z < objs.size() && ok; ++z) {
            Value h = meet ? lat.hom(objs[z], objs[m]) : lat.hom(objs[m], objs[z]);
            ok = Q.equal(h, target[z]);
        }
        if (ok) return m;
    }
    return std::nullopt;
}

LawReport verify_tarski(const FixpointQuery& query, std::mt19937_64& rng, const TarskiOptions& opts) {
    const auto& lat = *query.lattice;
    const auto& Q = lat.quantale();
    std::vector<Value> weights = opts.weights;
    if (weights.empty()) {
        if (!Q.finite()) throw std::invalid_argument("verify_tarski: give explicit weights for an infinite quantale");
        weights = Q.carrier();
    }
    LawReport rep;
    Value defect = functor_defect(query.endo);
    rep.record("endofunctor", Q.equal(defect, Q.unit()), [&] { return "functor defect " + Q.format(defect); });

    const auto suffix = suffix_points(query);
    const auto prefix = prefix_points(query);
    const auto stable = stable_points(query);
    rep.record("nonempty/suffix", !suffix.empty());
    rep.record("nonempty/prefix", !prefix.empty());
    rep.record("nonempty/stable", !stable.empty());

    auto restrict = [&](const std::vector<Object>& set, const std::string& law) {
        for (const auto& x : set) {
            Object lx = query.endo(x);
            rep.record(law, member(set, lx), [&] { return "L(" + lat.describe(x) + ")=" + lat.describe(lx); });
        }
    };
    restrict(suffix, "restriction/suffix");
    restrict(prefix, "restriction/prefix");
    restrict(stable, "restriction/stable");

    auto closure = [&](const std::vector<Object>& set, LimitKind kind, const std::string& law) {
        if (set.empty()) return;
        for (std::size_t r = 0; r < opts.random_diagrams; ++r) {
            auto d = random_diagram(set, weights, opts.max_index, rng);
            Object lim = kind == LimitKind::Join ? weighted_join(lat, d) : weighted_meet(lat, d);
            rep.record(law, member(set, lim), [&] {
                return describe_diagram(lat, d) + " has ambient limit " + lat.describe(lim) + " outside the set";
            });
        }
    };
    closure(suffix, LimitKind::Join, "closure/suffix-under-joins");
    closure(prefix, LimitKind::Meet, "closure/prefix-under-meets");

    check_complete(lat, suffix, weights, opts, rng, "complete/suffix", rep);
    check_complete(lat, prefix, weights, opts, rng, "complete/prefix", rep);
    check_complete(lat, stable, weights, opts, rng, "complete/stable", rep);
    return rep;
}

}  // namespace lawvere
