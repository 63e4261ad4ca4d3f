// Acceptance suite: one PASS/FAIL line per criterion, with its runtime
// budget. Exit status is nonzero if any line fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "lawvere/commands.hpp"
#include "lawvere/des.hpp"
#include "lawvere/fixpoint.hpp"
#include "lawvere/gen.hpp"
#include "lawvere/io.hpp"
#include "lawvere/oracle.hpp"
#include "lawvere/paths.hpp"
#include "lawvere/prefs.hpp"

using namespace lawvere;

namespace {

constexpr double kResidualTol = 1e-6;
constexpr double kSlackTol = 1e-9;
constexpr std::uint64_t kSeed = 20240607;

std::string data(const std::string& name) { return std::string(LAWVERE_TEST_DATA) + "/" + name; }

// Collects the first failure of a criterion; later ones only bump the count.
struct Verdict {
    std::size_t checks = 0;
    std::size_t failures = 0;
    std::string first;
    // limits shown not to exist, so no operation can satisfy the check
    std::size_t absent = 0;
    std::string first_absent;

    void missing(const std::function<std::string()>& why) {
        ++checks;
        if (absent++ == 0) first_absent = why();
    }
    void expect(bool ok, const std::function<std::string()>& why) {
        ++checks;
        if (ok) return;
        if (failures++ == 0) first = why();
    }
    void absorb(const LawReport& rep, const std::string& where) {
        for (const auto& c : rep.checks()) {
            checks += c.checked;
            if (c.ok()) continue;
            if (failures == 0) first = where + ": " + c.law + ": " + c.witness;
            failures += c.violations;
        }
    }
};

int report(int id, const char* name, double budget_s, const std::function<void(Verdict&)>& body) {
    Verdict v;
    auto t0 = std::chrono::steady_clock::now();
    try {
        body(v);
    } catch (const std::exception& e) {
        v.expect(false, [&] { return std::string("exception: ") + e.what(); });
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool in_time = secs < budget_s;
    bool ok = v.failures == 0 && v.absent == 0 && in_time && v.checks > 0;
    std::printf("%s %d %s (%zu checks, %.2fs of %.0fs)", ok ? "PASS" : "FAIL", id, name, v.checks, secs, budget_s);
    if (v.failures) std::printf(" %zu failures; first: %s", v.failures, v.first.c_str());
    if (v.absent) std::printf(" %zu required limits do not exist; first: %s", v.absent, v.first_absent.c_str());
    if (!in_time) std::printf(" over time budget");
    if (v.checks == 0) std::printf(" nothing checked");
    std::printf("\n");
    std::fflush(stdout);
    return ok ? 0 : 1;
}

Value draw_real(gen::Rng& rng, const Quantale& q) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    switch (rng() % 10) {
        case 0: return q.top();
        case 1: return q.bottom();
        case 2: return q.kind() == QuantaleKind::LawvereReals ? std::floor(10 * u(rng)) : std::round(4 * u(rng)) / 4;
        default: return q.kind() == QuantaleKind::LawvereReals ? 20 * u(rng) : u(rng);
    }
}

// ---------------------------------------------------------------- 1

void quantale_laws(Verdict& v) {
    std::vector<Quantale> finite{Quantale::boolean(), Quantale::finite_chain(3), Quantale::finite_chain(4),
                                 Quantale::finite_chain(5), Quantale::finite_powerset(1), Quantale::finite_powerset(2),
                                 Quantale::finite_powerset(3)};
    for (const auto& q : finite) {
        v.absorb(check_quantale_laws(q), q.name());
        for (Value a : q.carrier())
            for (Value b : q.carrier()) {
                Value ref = oracle::grid_residual(q, a, b);
                v.expect(q.equal(ref, q.hom(a, b)), [&] { return q.name() + " residual [" + q.format(a) + "," + q.format(b) + "]"; });
            }
    }
    gen::Rng rng(kSeed);
    std::vector<Quantale> real{Quantale::unit_interval(TNorm::Product), Quantale::unit_interval(TNorm::Lukasiewicz),
                               Quantale::unit_interval(TNorm::Minimum), Quantale::lawvere_reals()};
    for (const auto& q : real) {
        std::vector<std::array<Value, 3>> triples(10000);
        for (auto& t : triples) t = {draw_real(rng, q), draw_real(rng, q), draw_real(rng, q)};
        v.absorb(check_quantale_laws_triples(q, triples), q.name());
        for (const auto& t : triples) {
            Value ref = oracle::grid_residual(q, t[0], t[1]);
            Value got = q.hom(t[0], t[1]);
            bool ok = std::isinf(ref) || std::isinf(got) ? ref == got : std::fabs(ref - got) <= kResidualTol;
            v.expect(ok, [&] {
                return q.name() + " residual [" + q.format(t[0]) + "," + q.format(t[1]) + "] = " + q.format(got) +
                       ", grid " + q.format(ref);
            });
        }
    }
}

// ---------------------------------------------------------------- 2

void weighted_limits(Verdict& v) {
    gen::Rng rng(kSeed + 2);
    for (int i = 0; i < 200; ++i) {
        const Quantale q = i % 2 ? Quantale::boolean() : Quantale::finite_chain(3);
        auto lat = gen::random_lattice(rng, q, 6);
        const auto objs = lat->objects();
        const auto weights = q.carrier();
        auto d = gen::random_diagram(rng, objs, weights, 4);
        const std::string where = "lattice " + std::to_string(i) + " (" + q.name() + ")";

        Object m = weighted_meet(*lat, d);
        Object mi = weighted_meet_via_identity_join(*lat, d);
        auto mb = oracle::brute_weighted_meet(*lat, d);
        v.expect(lat->approx_q(m, mi, q.unit()), [&] { return where + ": meet vs identity-join"; });
        v.expect(lat->approx_q(m, mb.object, q.unit()), [&] { return where + ": meet vs brute oracle"; });
        v.absorb(verify_universal_property(*lat, d, m, LimitKind::Meet), where + " meet");

        Object j = weighted_join(*lat, d);
        Object ji = weighted_join_via_identity_meet(*lat, d);
        auto jb = oracle::brute_weighted_join(*lat, d);
        v.expect(lat->approx_q(j, ji, q.unit()), [&] { return where + ": join vs identity-meet"; });
        v.expect(lat->approx_q(j, jb.object, q.unit()), [&] { return where + ": join vs brute oracle"; });
        v.absorb(verify_universal_property(*lat, d, j, LimitKind::Join), where + " join");
    }
}

// ---------------------------------------------------------------- 3

void tarski(Verdict& v) {
    gen::Rng rng(kSeed + 3);
    int found = 0;
    while (found < 100) {
        const Quantale q = found % 2 ? Quantale::boolean() : Quantale::finite_chain(3);
        auto lat = gen::random_lattice(rng, q, 6);
        auto endo = gen::random_functor(rng, lat, lat);
        if (!endo) continue;
        ++found;
        std::vector<std::pair<Value, Value>> levels;
        if (q.kind() == QuantaleKind::Boolean) levels = {{1, 1}, {1, 0}, {0, 1}};
        else levels = {{2, 2}, {1, 1}, {2, 1}};
        for (auto [p, s] : levels) {
            FixpointQuery fq{lat, *endo, p, s};
            v.absorb(verify_tarski(fq, rng),
                     "endofunctor " + std::to_string(found) + " p=" + q.format(p) + " q=" + q.format(s));
        }
    }
}

// ---------------------------------------------------------------- 4

Weighting random_weighting(gen::Rng& rng, const NetworkSheaf& f) {
    auto carrier = f.quantale().carrier();
    Weighting w = Weighting::constant(f.graph(), f.quantale().unit());
    for (auto& row : w.w)
        for (auto& x : row) x = carrier[rng() % carrier.size()];
    return w;
}

std::vector<std::vector<Value>> hom_matrix(const NetworkSheaf& f, const std::vector<Cochain>& xs) {
    std::vector<std::vector<Value>> m;
    for (const auto& a : xs) {
        m.emplace_back();
        for (const auto& b : xs) m.back().push_back(cochain_hom(f, a, b));
    }
    return m;
}

void hodge(Verdict& v) {
    gen::Rng rng(kSeed + 4);
    for (int i = 0; i < 50; ++i) {
        const Quantale q = i % 2 ? Quantale::boolean() : Quantale::finite_chain(3);
        NetworkSheaf f = gen::random_crisp_sheaf(rng, q);
        Weighting w = random_weighting(rng, f);
        const std::string where = "sheaf " + std::to_string(i);
        v.expect(f.crisp(), [&] { return where + ": generated sheaf not crisp"; });
        const std::size_t n = f.graph().vertices.size();
        const std::vector<Value> unit(n, q.unit());
        std::vector<Cochain> fixed, suffix, sections;
        for (const auto& x : enumerate_cochains(f)) {
            if (cochain_approx(f, flow_step(f, w, unit, unit, x), x, q.unit())) fixed.push_back(x);
            if (q.leq(q.unit(), cochain_hom(f, x, laplacian(f, w, x)))) suffix.push_back(x);
            if (is_fuzzy_global_section(f, w, x).ok) sections.push_back(x);
        }
        auto ref = oracle::brute_sections(f, w);
        v.expect(sections == ref, [&] { return where + ": sections differ from brute enumeration"; });
        v.expect(fixed == sections, [&] {
            return where + ": " + std::to_string(fixed.size()) + " fixed points vs " + std::to_string(sections.size()) +
                   " sections";
        });
        v.expect(suffix == sections, [&] {
            return where + ": " + std::to_string(suffix.size()) + " 1-suffix points vs " +
                   std::to_string(sections.size()) + " sections";
        });
        v.expect(hom_matrix(f, fixed) == hom_matrix(f, sections), [&] { return where + ": hom structure differs"; });
    }
}

// ---------------------------------------------------------------- 5

struct MaxPlusPair {
    Matrix a;
    Matrix noisy;
};

Matrix random_delays(gen::Rng& rng, std::size_t m) {
    Matrix a(m, std::vector<Value>(m));
    for (auto& row : a)
        for (auto& x : row) x = static_cast<double>(rng() % 6);
    return a;
}

Matrix add_noise(gen::Rng& rng, Matrix a, double bound) {
    std::uniform_real_distribution<double> u(0.0, bound);
    for (auto& row : a)
        for (auto& x : row) x += u(rng);
    return a;
}

// Every incidence of a path or triangle carries F~ = maxplus(A + noise) with
// corestriction minplus_transpose(A).
NetworkSheaf perturbed_maxplus_sheaf(gen::Rng& rng, std::size_t nv, std::size_t m, double bound) {
    Graph g;
    for (std::size_t i = 0; i < nv; ++i) g.vertices.push_back("v" + std::to_string(i));
    for (std::size_t i = 0; i + 1 < nv; ++i) g.edges.push_back({i, i + 1});
    if (nv == 3) g.edges.push_back({0, 2});
    auto stalk = std::make_shared<PresheafPower>(Quantale::lawvere_reals(), m, true);
    std::vector<std::array<QFunctor, 2>> res(g.edges.size()), cores(g.edges.size());
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        for (std::size_t k = 0; k < 2; ++k) {
            Matrix a = random_delays(rng, m);
            Matrix t = add_noise(rng, a, bound);
            res[e][k] = QFunctor{stalk, stalk, [t](const Object& x) { return maxplus_apply(t, x); }, "F~"};
            cores[e][k] = QFunctor{stalk, stalk, [a](const Object& y) { return minplus_transpose_apply(a, y); }, "G"};
        }
    }
    return NetworkSheaf(g, std::vector<LatticePtr>(nv, stalk), std::vector<LatticePtr>(g.edges.size(), stalk), res,
                        cores, nullptr);
}

void fuzzy_lemmas(Verdict& v) {
    gen::Rng rng(kSeed + 5);
    const Quantale lr = Quantale::lawvere_reals();

    // one-sided lemmas at the measured level of perturbed max-plus transports
    for (int i = 0; i < 20; ++i) {
        const std::size_t nv = 2 + i % 2;
        const std::size_t m = 2 + (i / 2) % 2;
        NetworkSheaf f = perturbed_maxplus_sheaf(rng, nv, m, 0.5);
        std::vector<Cochain> samples;
        for (int s = 0; s < 150; ++s) {
            Cochain x(nv, Object(m));
            for (auto& o : x)
                for (auto& c : o) c = static_cast<double>(rng() % 13) / 2;
            samples.push_back(x);
        }
        const Value eps = incidence_level_on(f, samples);
        f.set_levels(std::vector<std::array<Value, 2>>(f.graph().edges.size(), {eps, eps}));
        Weighting w = Weighting::constant(f.graph(), static_cast<double>(rng() % 4));
        for (Value q : {0.0, 0.5, 1.0, 3.0}) {
            v.absorb(check_suffix_section_lemmas(f, w, eps, q, samples),
                     "max-plus sheaf " + std::to_string(i) + " q=" + lr.format(q));
        }
    }

    // idempotent bases: the biconditional, exhaustively
    for (int i = 0; i < 30; ++i) {
        const Quantale q = i % 2 ? Quantale::boolean() : Quantale::finite_chain(3);
        NetworkSheaf f = gen::random_crisp_sheaf(rng, q);
        Weighting w = random_weighting(rng, f);
        auto all = enumerate_cochains(f);
        for (Value s : q.carrier()) {
            auto rep = check_suffix_section_lemmas(f, w, q.unit(), s, all);
            v.expect(rep.find("idempotent-biconditional") != nullptr, [] { return "biconditional not checked"; });
            v.absorb(rep, "crisp sheaf " + std::to_string(i) + " q=" + q.format(s));
        }
    }

    // perturbation of a crisp max-plus adjunction by noise in [0, q]
    for (double bound : {0.1, 0.3, 1.0}) {
        for (int draw = 0; draw < 100; ++draw) {
            const std::size_t m = 2 + draw % 2;
            auto stalk = std::make_shared<PresheafPower>(lr, m, true);
            Matrix a = random_delays(rng, m);
            Matrix t = add_noise(rng, a, bound);
            QFunctor f{stalk, stalk, [a](const Object& x) { return maxplus_apply(a, x); }, "F"};
            QFunctor g{stalk, stalk, [a](const Object& y) { return minplus_transpose_apply(a, y); }, "G"};
            QFunctor ft{stalk, stalk, [t](const Object& x) { return maxplus_apply(t, x); }, "F~"};
            std::vector<Object> xs, ys;
            for (int s = 0; s < 40; ++s) {
                Object x(m);
                for (auto& c : x) c = static_cast<double>(rng() % 9) / 2;
                xs.push_back(x);
                Object y = f(x);
                const double lift = static_cast<double>(rng() % 7) / 2;
                for (auto& c : y) c += lift + static_cast<double>(rng() % 3);
                ys.push_back(y);
            }
            v.absorb(perturbed_adjunction(f, g, ft, bound, xs, ys),
                     "noise bound " + lr.format(bound) + " draw " + std::to_string(draw));
        }
    }
}

// ---------------------------------------------------------------- 6

void shortest(Verdict& v) {
    gen::Rng rng(kSeed + 6);
    for (int i = 0; i < 100; ++i) {
        const std::size_t n = 1 + rng() % 50;
        Graph g = gen::random_connected_graph(rng, n, 0.1);
        PathProblem p{g, {}, rng() % n};
        std::vector<oracle::WeightedEdge> edges;
        for (const auto& [a, b] : g.edges) {
            double wt = 1 + static_cast<double>(rng() % 20);
            p.edge_weights.push_back(wt);
            edges.push_back({a, b, wt});
        }
        auto classic = oracle::classic_shortest_paths(n, edges, p.source);
        const std::string where = "graph " + std::to_string(i) + " (n=" + std::to_string(n) + ")";
        auto dj = shortest_paths(p, PathMode::Dijkstra);
        v.expect(dj.distances == classic, [&] { return where + ": dijkstra schedule differs from oracle"; });
        v.expect(dj.extractions == n, [&] {
            return where + ": " + std::to_string(dj.extractions) + " extractions for " + std::to_string(n) + " vertices";
        });
        auto sync = shortest_paths(p, PathMode::Synchronous);
        v.expect(sync.distances == classic, [&] { return where + ": synchronous flow differs from oracle"; });
    }
}

// ---------------------------------------------------------------- 7

void k3(Verdict& v) {
    auto spec = io::parse_sheaf(io::load_json(data("sheaf_k3.json")));
    const auto& f = *spec.sheaf;
    FlowConfig cfg;
    cfg.max_iter = 1000;
    auto tr = harmonic_flow(f, spec.weighting, Cochain{{0}, {0}, {0}}, cfg);
    v.expect(tr.status != FlowStatus::Converged, [&] { return "converged at t=" + std::to_string(tr.t_star); });
    v.expect(tr.iterations.size() >= 1000, [&] { return "only " + std::to_string(tr.iterations.size()) + " iterates"; });
    for (std::size_t t = 0; t + 3 < tr.iterations.size(); ++t) {
        const auto& a = tr.iterations[t].x;
        const auto& b = tr.iterations[t + 3].x;
        for (std::size_t i = 0; i < 3; ++i) {
            v.expect(b[i][0] > a[i][0], [&] {
                return "vertex " + f.graph().vertices[i] + " not increasing between t=" + std::to_string(t) + " and t+3";
            });
        }
    }
    for (const auto& rec : tr.iterations) {
        bool finite = std::ranges::all_of(rec.x, [](const Object& o) { return std::isfinite(o[0]); });
        if (!finite) continue;
        v.expect(!is_fuzzy_global_section(f, spec.weighting, rec.x).ok,
                 [&] { return "iterate " + std::to_string(rec.t) + " accepted as a section"; });
    }
}

// ---------------------------------------------------------------- 8

void projection(Verdict& v) {
    gen::Rng rng(kSeed + 8);
    for (int i = 0; i < 25; ++i) {
        const Quantale q = i % 2 ? Quantale::boolean() : Quantale::finite_chain(3);
        NetworkSheaf f = gen::random_crisp_sheaf(rng, q);
        Weighting w = random_weighting(rng, f);
        auto sections = global_sections(f, w);
        auto all = enumerate_cochains(f);
        for (int s = 0; s < 6; ++s) {
            const auto& x0 = all[rng() % all.size()];
            v.absorb(check_projection_property(f, w, x0, sections), "sheaf " + std::to_string(i));
        }
    }
}

// ---------------------------------------------------------------- 9

DesSystem hand_built(std::size_t which) {
    DesSystem s;
    switch (which) {
        case 0:
            s.m = 2;
            s.graph = Graph{{"a", "b"}, {{0, 1}}};
            s.delays = {{{0, 1}, {2, 0}}, {{2, 0}, {1, 1}}};
            s.weights = Weighting::constant(s.graph, 0);
            break;
        case 1:
            s.m = 2;
            s.graph = Graph{{"a", "b", "c"}, {{0, 1}, {1, 2}}};
            s.delays = {{{1, 3}, {3, 0}}, {{0, 2}, {3, 3}}, {{3, 3}, {2, 1}}};
            s.weights = Weighting::constant(s.graph, 1);
            break;
        case 2:
            s.m = 3;
            s.graph = Graph{{"a", "b"}, {{0, 1}}};
            s.delays = {{{0, 2, 1}, {1, 0, 2}, {2, 1, 0}}, {{2, 2, 2}, {0, 1, 0}, {1, 0, 1}}};
            s.weights = Weighting::constant(s.graph, 0.5);
            break;
        default:
            s.m = 3;
            s.graph = Graph{{"a", "b", "c"}, {{0, 1}, {1, 2}, {0, 2}}};
            s.delays = {{{0, 1, 2}, {1, 0, 1}, {2, 2, 0}}, {{2, 2, 2}, {0, 1, 0}, {1, 0, 1}},
                        {{1, 0, 2}, {2, 1, 0}, {0, 2, 1}}};
            s.weights = Weighting::constant(s.graph, 1);
            break;
    }
    return s;
}

void des(Verdict& v) {
    std::vector<std::pair<std::string, DesSystem>> systems;
    for (std::size_t i = 0; i < 4; ++i) systems.emplace_back("system " + std::to_string(i), hand_built(i));
    for (const char* fx : {"des_two.json", "des_three.json"})
        systems.emplace_back(fx, io::parse_des(io::load_json(data(fx))).system);

    gen::Rng rng(kSeed + 9);
    for (const auto& [name, sys] : systems) {
        NetworkSheaf f = des_sheaf(sys);
        const std::size_t n = sys.graph.vertices.size();
        std::vector<Cochain> starts{Cochain(n, Object(sys.m, 0.0))};
        for (int s = 0; s < 5; ++s) {
            Cochain x(n, Object(sys.m));
            for (auto& o : x)
                for (auto& c : o) c = static_cast<double>(rng() % 5);
            starts.push_back(x);
        }
        for (const auto& x0 : starts) {
            auto tr = harmonic_flow(f, sys.weights, x0);
            if (tr.status == FlowStatus::Converged) {
                auto slack = des_gs_slack(sys, tr.final);
                v.expect(slack.slack >= -kSlackTol, [&] {
                    return name + ": converged point with slack " + std::to_string(slack.slack);
                });
            }
            for (const auto& x : {x0, tr.final}) {
                auto cmp = compare_des_laplacian(sys, f, x);
                const auto* c = cmp.find("closed-form-matches-generic");
                v.expect(c != nullptr && (c->ok() || !c->witness.empty()),
                         [&] { return name + ": closed-form mismatch without a witness"; });
            }
        }
        // every accepted grid cochain satisfies the synchronization inequalities
        for (int s = 0; s < 300; ++s) {
            Cochain x(n, Object(sys.m));
            for (auto& o : x)
                for (auto& c : o) c = static_cast<double>(rng() % 7) / 2;
            if (!is_fuzzy_global_section(f, sys.weights, x).ok) continue;
            v.expect(des_gs_slack(sys, x).slack >= -kSlackTol,
                     [&] { return name + ": section " + describe_cochain(f, x) + " violates synchronization"; });
        }
    }
}

// ---------------------------------------------------------------- 10

std::vector<Object> grid_relations(const PreferenceLattice& pl, std::span<const Value> grid) {
    const std::size_t n = pl.n();
    std::size_t off = n * n - n;
    std::size_t total = 1;
    for (std::size_t i = 0; i < off; ++i) total *= grid.size();
    std::vector<Object> out;
    Relation r = pl.identity_relation();
    for (std::size_t code = 0; code < total; ++code) {
        std::size_t c = code;
        for (std::size_t k = 0; k < n * n; ++k) {
            if (k / n == k % n) continue;
            r[k] = grid[c % grid.size()];
            c /= grid.size();
        }
        if (pl.contains(r)) out.push_back(r);
    }
    return out;
}

std::vector<std::vector<std::size_t>> all_maps(std::size_t na, std::size_t nb) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> f(na, 0);
    while (true) {
        out.push_back(f);
        std::size_t i = 0;
        while (i < na && ++f[i] == nb) f[i++] = 0;
        if (i == na) break;
    }
    return out;
}

void prefs(Verdict& v) {
    const std::vector<Value> grid{0, 0.25, 0.5, 0.75, 1};
    gen::Rng rng(kSeed + 10);
    for (TNorm t : {TNorm::Minimum, TNorm::Product, TNorm::Lukasiewicz}) {
        const Quantale q = Quantale::unit_interval(t);
        for (std::size_t n = 1; n <= 3; ++n) {
            std::vector<std::string> alts(n);
            for (std::size_t i = 0; i < n; ++i) alts[i] = std::string(1, static_cast<char>('x' + i));
            PreferenceLattice pl(q, alts);
            auto sample = grid_relations(pl, grid);
            auto universe = std::make_shared<FiniteQCategory>(full_subcategory(pl, sample));
            for (int i = 0; i < 40; ++i) {
                const auto& a = sample[rng() % sample.size()];
                const auto& b = sample[rng() % sample.size()];
                const Value s = grid[rng() % grid.size()];
                const std::string where = q.name() + " |A|=" + std::to_string(n);
                std::vector<Object> ab{a, b};
                WeightedDiagram crisp = WeightedDiagram::crisp(q, ab);
                v.absorb(verify_universal_property(pl, crisp, pl.meet(ab), LimitKind::Meet, sample), where + " meet");
                Object j = pl.join(ab);
                auto jrep = verify_universal_property(pl, crisp, j, LimitKind::Join, sample);
                Relation upper(a.size());
                for (std::size_t k = 0; k < a.size(); ++k) upper[k] = std::max(a[k], b[k]);
                if (jrep.ok() || j != oracle::transitive_closure(q, n, upper)) {
                    v.absorb(jrep, where + " join");
                } else {
                    // any join lies above a, b and is transitive, and lies below that closure; the
                    // failing witness is itself a preference relation, so no join exists
                    v.missing([&] {
                        for (const auto& c : jrep.checks())
                            if (!c.ok()) return where + " join of " + pl.describe(a) + " and " + pl.describe(b) + ": " + c.witness;
                        return where + " join";
                    });
                }
                auto hull = [&] {
                    Relation pw(a.size());
                    for (std::size_t k = 0; k < a.size(); ++k) pw[k] = std::max(a[k], b[k]);
                    return oracle::grid_transitive_hull(q, n, pw, grid);
                }();
                if (hull) {
                    const bool on_grid = std::all_of(j.begin(), j.end(), [&](Value x) {
                        return std::find(grid.begin(), grid.end(), x) != grid.end();
                    });
                    bool below = true;
                    for (std::size_t k = 0; k < j.size(); ++k) below = below && q.leq(j[k], (*hull)[k]);
                    v.expect(on_grid ? *hull == j : below, [&] { return where + ": join differs from grid hull"; });
                }
                WeightedDiagram single{{a}, {s}};
                v.absorb(verify_universal_property(pl, single, pl.tensor(s, a), LimitKind::Join, sample),
                         where + " tensor");
                Object c;
                bool exists = true;
                try {
                    c = pl.cotensor(s, a);
                } catch (const NoSuchObject&) {
                    exists = false;
                }
                if (exists) {
                    v.absorb(verify_universal_property(pl, single, c, LimitKind::Meet, sample), where + " cotensor");
                } else {
                    // no grid relation may have the universal property either
                    auto it = std::find(sample.begin(), sample.end(), a);
                    WeightedDiagram idx{{FiniteQCategory::object(static_cast<std::size_t>(it - sample.begin()))}, {s}};
                    bool brute_found = true;
                    try {
                        oracle::OracleConfig wide;
                        wide.max_objects = universe->size();
                        oracle::brute_weighted_meet(*universe, idx, wide);
                    } catch (const NoSuchObject&) {
                        brute_found = false;
                    }
                    v.expect(!brute_found, [&] {
                        return where + ": cotensor reported missing but grid search finds one for " + pl.describe(a) +
                               " at " + q.format(s);
                    });
                    if (!brute_found)
                        v.missing([&] { return where + " cotensor of " + pl.describe(a) + " at " + q.format(s); });
                }
            }
        }
    }

    const std::vector<std::string> names{"x", "y", "z"};
    for (const Quantale& q : {Quantale::boolean(), Quantale::finite_chain(3)}) {
        for (std::size_t na = 1; na <= 3; ++na) {
            for (std::size_t nb = 1; nb <= 3; ++nb) {
                auto a = std::make_shared<PreferenceLattice>(q, std::vector<std::string>(names.begin(), names.begin() + na));
                auto b = std::make_shared<PreferenceLattice>(q, std::vector<std::string>(names.begin(), names.begin() + nb));
                for (const auto& map : all_maps(na, nb)) {
                    Value d = adjunction_defect(pushforward_functor(a, b, map), pullback_functor(a, b, map));
                    v.expect(q.equal(d, q.unit()), [&] {
                        return q.name() + " |A|=" + std::to_string(na) + " |B|=" + std::to_string(nb) + ": defect " +
                               q.format(d);
                    });
                }
            }
        }
    }

    RunConfig cfg;
    cfg.input = data("prefs_confidence.json");
    std::ostringstream out;
    v.expect(cmd_prefs(cfg, out) == 0, [] { return "prefs demo exit code"; });
    std::string last;
    std::istringstream lines(out.str());
    for (std::string l; std::getline(lines, l);) last = l;
    auto j = io::Json::parse(last);
    v.expect(j.contains("updates") && j["updates"] == 0, [&] { return "bounded-confidence demo: " + last; });
}

// ---------------------------------------------------------------- 11

void determinism(Verdict& v) {
    const std::vector<std::pair<std::string, std::string>> runs{
        {"validate", "quantale_chain3.json"}, {"validate", "quantale_reals.json"}, {"validate", "category_bad.json"},
        {"validate", "sheaf_boolean_edge.json"}, {"flow", "sheaf_k3.json"}, {"flow", "sheaf_boolean_edge.json"},
        {"sections", "sheaf_boolean_edge.json"}, {"verify", ""}, {"verify", "sheaf_boolean_edge.json"},
        {"verify", "quantale_reals.json"}, {"verify", "paths_grid.json"}, {"verify", "des_two.json"},
        {"verify", "prefs_open.json"}, {"des", "des_two.json"}, {"des", "des_three.json"},
        {"des", "des_negative.json"}, {"paths", "paths_sat.json"}, {"paths", "paths_grid.json"},
        {"prefs", "prefs_open.json"}, {"prefs", "prefs_confidence.json"}};
    for (const auto& [cmd, file] : runs) {
        for (const char* schedule : {"unweighted", "dijkstra"}) {
            if (std::string(schedule) == "dijkstra" && cmd != "paths") continue;
            RunConfig cfg;
            cfg.seed = 7;
            cfg.max_iter = 200;
            cfg.schedule = schedule;
            if (!file.empty()) cfg.input = data(file);
            std::ostringstream a, b;
            int ca = run_command(cmd, cfg, a);
            int cb = run_command(cmd, cfg, b);
            v.expect(ca == cb && a.str() == b.str() && !a.str().empty(),
                     [&] { return cmd + " " + file + ": output differs between runs"; });
        }
    }
}

struct Criterion {
    int id;
    const char* name;
    double budget_s;
    void (*body)(Verdict&);
};

const Criterion kCriteria[] = {
    {1, "quantale-law-suite", 10, quantale_laws},
    {2, "weighted-limit-oracle-equivalence", 30, weighted_limits},
    {3, "enriched-tarski", 60, tarski},
    {4, "hodge-correspondence", 60, hodge},
    {5, "fuzzy-lemmas", 30, fuzzy_lemmas},
    {6, "shortest-paths", 30, shortest},
    {7, "k3-divergence", 5, k3},
    {8, "projection-property", 30, projection},
    {9, "des-synchronization", 10, des},
    {10, "preference-diffusion", 60, prefs},
    {11, "determinism", 60, determinism},
};

}  // namespace

// acceptance [id...]: run the listed criteria, or all of them
int main(int argc, char** argv) {
    std::vector<int> wanted;
    for (int i = 1; i < argc; ++i) wanted.push_back(std::atoi(argv[i]));
    int failed = 0, ran = 0;
    for (const auto& c : kCriteria) {
        if (!wanted.empty() && std::find(wanted.begin(), wanted.end(), c.id) == wanted.end()) continue;
        ++ran;
        failed += report(c.id, c.name, c.budget_s, c.body);
    }
    if (ran == 0) {
        std::fprintf(stderr, "no such criterion\n");
        return 2;
    }
    std::printf("%d of %d criteria failed\n", failed, ran);
    return failed == 0 ? 0 : 1;
}
