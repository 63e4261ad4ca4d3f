#include "lawvere/commands.hpp"

#include <ostream>
#include <random>
#include <algorithm>
#include <cmath>
#include <functional>

#include "lawvere/gen.hpp"
#include "lawvere/io.hpp"
#include "lawvere/oracle.hpp"

namespace lawvere {

using io::Json;
using io::ParseError;

namespace {

void emit(std::ostream& out, const Json& j) { out << j.dump() << '\n'; }

void header(std::ostream& out, const std::string& name, const RunConfig& cfg) {
    Json h = {{"command", name}, {"seed", cfg.seed}, {"input", cfg.input}, {"max_iter", cfg.max_iter},
              {"schedule", cfg.schedule}, {"grid", cfg.grid}};
    if (cfg.tolerance) h["tolerance"] = *cfg.tolerance;
    emit(out, h);
}

void emit_report(std::ostream& out, const LawReport& rep, const std::string& section) {
    for (const auto& c : rep.checks()) {
        Json j = {{"check", section}, {"law", c.law}, {"checked", c.checked}, {"violations", c.violations}};
        if (!c.ok()) j["witness"] = c.witness;
        emit(out, j);
    }
}

int finish(std::ostream& out, bool ok) {
    emit(out, {{"status", ok ? "ok" : "violations"}});
    return ok ? 0 : 1;
}

std::string input_kind(const Json& j) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) throw ParseError("kind", "missing");
    return j["kind"].get<std::string>();
}

std::string incidence_name(const NetworkSheaf& f, std::size_t e, std::size_t k) {
    const auto& g = f.graph();
    std::size_t v = k == 0 ? g.edges[e].first : g.edges[e].second;
    return g.vertices[v] + "<" + g.vertices[g.edges[e].first] + "-" + g.vertices[g.edges[e].second];
}

void emit_levels(std::ostream& out, const NetworkSheaf& f) {
    const auto& Q = f.quantale();
    for (std::size_t e = 0; e < f.graph().edges.size(); ++e) {
        for (std::size_t k = 0; k < 2; ++k) {
            emit(out, {{"incidence", incidence_name(f, e, k)}, {"level", io::encode_value(Q, f.level(e, k))}});
        }
    }
    emit(out, {{"epsilon", io::encode_value(Q, f.epsilon())}, {"crisp", f.crisp()}});
}

void emit_trace(std::ostream& out, const NetworkSheaf& f, const FlowTrace& trace) {
    const auto& Q = f.quantale();
    for (const auto& r : trace.iterations) {
        emit(out, {{"t", r.t}, {"values", io::encode_cochain(f, r.x)}, {"suffix_level", io::encode_value(Q, r.suffix_level)}});
    }
    Json fin = {{"status", to_string(trace.status)}, {"iterations", trace.iterations.size()}};
    if (trace.status == FlowStatus::Converged) fin["t_star"] = trace.t_star;
    fin["final"] = io::encode_cochain(f, trace.final);
    emit(out, fin);
}

std::vector<Value> sample_values(const Quantale& Q, std::mt19937_64& rng) {
    if (Q.finite()) return Q.carrier();
    std::vector<Value> s;
    if (Q.kind() == QuantaleKind::LawvereReals) {
        s = {0.0, 0.5, 1.0, 2.0, 3.0, kInfinity};
        std::uniform_real_distribution<double> d(0.0, 10.0);
        for (int i = 0; i < 6; ++i) s.push_back(d(rng));
    } else {
        s = {0.0, 0.25, 0.5, 0.75, 1.0};
        std::uniform_real_distribution<double> d(0.0, 1.0);
        for (int i = 0; i < 6; ++i) s.push_back(d(rng));
    }
    return s;
}

oracle::OracleConfig oracle_config(const RunConfig& cfg) {
    oracle::OracleConfig oc;
    oc.grid_resolution = cfg.grid;
    oc.seed = cfg.seed;
    return oc;
}

std::vector<oracle::WeightedEdge> weighted_edges(const PathProblem& p) {
    std::vector<oracle::WeightedEdge> out;
    for (std::size_t e = 0; e < p.graph.edges.size(); ++e)
        out.push_back({p.graph.edges[e].first, p.graph.edges[e].second, p.edge_weights[e]});
    return out;
}

int run_paths(const RunConfig& cfg, const Json& j, std::ostream& out, bool with_trace) {
    PathProblem p = io::parse_paths(j);
    PathMode mode = cfg.schedule == "dijkstra" ? PathMode::Dijkstra : PathMode::Synchronous;
    PathResult r = shortest_paths(p, mode, cfg.max_iter);
    NetworkSheaf f = path_sheaf(p.graph);
    if (with_trace) emit_trace(out, f, r.trace);
    auto edges = weighted_edges(p);
    auto classic = oracle::classic_shortest_paths(p.graph.vertices.size(), edges, p.source);
    const Quantale& Q = f.quantale();
    Json dist = Json::object();
    Json ref = Json::object();
    LawReport rep;
    rep.record("converged", r.trace.status == FlowStatus::Converged, [&] { return to_string(r.trace.status); });
    for (std::size_t v = 0; v < p.graph.vertices.size(); ++v) {
        dist[p.graph.vertices[v]] = io::encode_value(Q, r.distances[v]);
        ref[p.graph.vertices[v]] = io::encode_value(Q, classic[v]);
        rep.record("matches-classic", r.distances[v] == classic[v], [&] {
            return p.graph.vertices[v] + ": flow " + Q.format(r.distances[v]) + ", classic " + Q.format(classic[v]);
        });
    }
    if (mode == PathMode::Dijkstra) {
        rep.record("extractions-equal-vertices", r.extractions == p.graph.vertices.size(),
                   [&] { return std::to_string(r.extractions) + " extractions"; });
    }
    Json summary = {{"mode", to_string(mode)}, {"source", p.graph.vertices[p.source]}, {"distances", dist},
                    {"classic", ref}};
    if (mode == PathMode::Dijkstra) summary["extractions"] = r.extractions;
    emit(out, summary);
    emit_report(out, rep, "paths");
    return finish(out, rep.ok());
}

FlowTrace run_prefs_flow(const io::PrefSpec& spec, const NetworkSheaf& f, std::size_t max_iter) {
    FlowConfig fc;
    fc.max_iter = max_iter;
    fc.schedule = bounded_confidence_schedule(f, spec.eps);
    return harmonic_flow(f, Weighting::constant(spec.graph, spec.quantale.unit()), spec.agents, fc);
}

Cochain des_initial(const io::DesSpec& spec) {
    if (spec.initial) return *spec.initial;
    return Cochain(spec.system.graph.vertices.size(), Object(spec.system.m, 0.0));
}

std::vector<const WeightedLattice*> distinct_stalks(const NetworkSheaf& f) {
    std::vector<const WeightedLattice*> out;
    auto add = [&](const WeightedLattice* s) {
        if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
    };
    for (std::size_t v = 0; v < f.graph().vertices.size(); ++v) add(&f.vertex_stalk(v));
    for (std::size_t e = 0; e < f.graph().edges.size(); ++e) add(&f.edge_stalk(e));
    return out;
}

int guarded(const std::string& name, const RunConfig& cfg, std::ostream& out,
            const std::function<int(const Json&)>& body) {
    header(out, name, cfg);
    try {
        Json j = cfg.input.empty() ? Json() : io::load_json(cfg.input);
        return body(j);
    } catch (const ParseError& e) {
        emit(out, {{"error", "parse"}, {"field", e.field()}, {"message", e.what()}});
        return 2;
    } catch (const std::exception& e) {
        emit(out, {{"error", "input"}, {"message", e.what()}});
        return 2;
    }
}

}  // namespace

int cmd_validate(const RunConfig& cfg, std::ostream& out) {
    return guarded("validate", cfg, out, [&](const Json& j) {
        const std::string kind = input_kind(j);
        LawReport rep;
        if (kind == "quantale") {
            Quantale Q = io::parse_quantale(j.at("quantale"), "quantale", cfg.tolerance);
            std::mt19937_64 rng(cfg.seed);
            rep = Q.finite() ? check_quantale_laws(Q) : check_quantale_laws(Q, sample_values(Q, rng));
            emit_report(out, rep, "quantale");
        } else if (kind == "category") {
            if (!j.contains("quantale")) throw ParseError("quantale", "missing");
            if (!j.contains("category")) throw ParseError("category", "missing");
            Quantale Q = io::parse_quantale(j["quantale"], "quantale", cfg.tolerance);
            rep = validate_category(io::parse_category(Q, j["category"], "category"));
            emit_report(out, rep, "category");
        } else if (kind == "sheaf") {
            auto spec = io::parse_sheaf(j, cfg.tolerance);
            const auto& f = *spec.sheaf;
            auto stalks = distinct_stalks(f);
            for (const auto* s : stalks) {
                if (auto fl = dynamic_cast<const FiniteLattice*>(s)) rep.merge(validate_category(fl->category()), "stalk");
            }
            rep.merge(f.validate(), "sheaf");
            emit_report(out, rep, "sheaf");
            emit_levels(out, f);
        } else if (kind == "des") {
            auto spec = io::parse_des(j, cfg.tolerance);
            NetworkSheaf f = des_sheaf(spec.system);
            rep = f.validate();
            emit_report(out, rep, "des");
            emit_levels(out, f);
        } else if (kind == "paths") {
            PathProblem p = io::parse_paths(j);
            rep.record("graph-connected-source", true);
            emit_report(out, rep, "paths");
        } else if (kind == "prefs") {
            auto spec = io::parse_prefs(j, cfg.tolerance);
            for (std::size_t v = 0; v < spec.agents.size(); ++v) {
                rep.record("agent-in-pref", spec.stalk->contains(spec.agents[v]),
                           [&] { return spec.graph.vertices[v]; });
            }
            emit_report(out, rep, "prefs");
        } else {
            throw ParseError("kind", "unknown input kind '" + kind + "'");
        }
        return finish(out, rep.ok());
    });
}

int cmd_flow(const RunConfig& cfg, std::ostream& out) {
    return guarded("flow", cfg, out, [&](const Json& j) {
        const std::string kind = input_kind(j);
        if (cfg.schedule != "unweighted" && cfg.schedule != "dijkstra")
            throw ParseError("--schedule", "unknown schedule '" + cfg.schedule + "'");
        if (kind == "paths") return run_paths(cfg, j, out, true);
        if (cfg.schedule == "dijkstra") throw ParseError("--schedule", "the dijkstra schedule needs a paths input");
        FlowConfig fc;
        fc.max_iter = cfg.max_iter;
        if (kind == "sheaf") {
            auto spec = io::parse_sheaf(j, cfg.tolerance);
            if (!spec.initial) throw ParseError("initial", "missing");
            emit_trace(out, *spec.sheaf, harmonic_flow(*spec.sheaf, spec.weighting, *spec.initial, fc));
        } else if (kind == "des") {
            auto spec = io::parse_des(j, cfg.tolerance);
            NetworkSheaf f = des_sheaf(spec.system);
            emit_trace(out, f, harmonic_flow(f, spec.system.weights, des_initial(spec), fc));
        } else if (kind == "prefs") {
            auto spec = io::parse_prefs(j, cfg.tolerance);
            NetworkSheaf f = preference_sheaf(spec.graph, spec.stalk);
            emit_trace(out, f, run_prefs_flow(spec, f, cfg.max_iter));
        } else {
            throw ParseError("kind", "flow needs a sheaf, des, paths or prefs input");
        }
        return 0;
    });
}

int cmd_sections(const RunConfig& cfg, std::ostream& out) {
    return guarded("sections", cfg, out, [&](const Json& j) {
        if (input_kind(j) != "sheaf") throw ParseError("kind", "sections needs a sheaf input");
        auto spec = io::parse_sheaf(j, cfg.tolerance);
        const auto& f = *spec.sheaf;
        auto secs = global_sections(f, spec.weighting);
        for (const auto& s : secs) emit(out, {{"section", io::encode_cochain(f, s)}});
        Json hom = Json::array();
        for (const auto& a : secs) {
            Json row = Json::array();
            for (const auto& b : secs) row.push_back(io::encode_value(f.quantale(), cochain_hom(f, a, b)));
            hom.push_back(row);
        }
        emit(out, {{"count", secs.size()}, {"hom", hom}});
        return 0;
    });
}

namespace {

void verify_lattice(const WeightedLattice& lat, const std::string& label, std::mt19937_64& rng,
                    const oracle::OracleConfig& oc, LawReport& rep) {
    const auto& Q = lat.quantale();
    auto objs = lat.objects();
    if (objs.empty()) return;
    auto weights = Q.finite() ? Q.carrier() : std::vector<Value>{Q.unit()};
    for (int r = 0; r < 20; ++r) {
        auto d = gen::random_diagram(rng, objs, weights, 4);
        for (LimitKind kind : {LimitKind::Meet, LimitKind::Join}) {
            const bool meet = kind == LimitKind::Meet;
            Object ours;
            std::string err;
            try {
                ours = meet ? weighted_meet(lat, d) : weighted_join(lat, d);
            } catch (const NoSuchObject& e) {
                err = e.what();
            }
            std::optional<oracle::BruteLimit> ref;
            try {
                ref = meet ? oracle::brute_weighted_meet(lat, d, oc) : oracle::brute_weighted_join(lat, d, oc);
            } catch (const NoSuchObject&) {
            }
            bool ok = err.empty() && ref && lat.approx_q(ours, ref->object, Q.unit());
            rep.record(label + (meet ? "weighted-meet" : "weighted-join"), ok, [&] {
                if (!err.empty()) return err;
                if (!ref) return std::string("oracle found no limit");
                return "decomposition " + lat.describe(ours) + " vs oracle " + lat.describe(ref->object);
            });
        }
    }
}

}  // namespace

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
    return guarded("verify", cfg, out, [&](const Json& j) {
        std::mt19937_64 rng(cfg.seed);
        const auto oc = oracle_config(cfg);
        LawReport rep;
        if (cfg.input.empty()) {
            for (const Quantale& Q : {Quantale::boolean(), Quantale::finite_chain(3)}) {
                for (int i = 0; i < 10; ++i) {
                    auto lat = gen::random_lattice(rng, Q);
                    verify_lattice(*lat, "random/", rng, oc, rep);
                }
            }
            emit_report(out, rep, "verify");
            return finish(out, rep.ok());
        }
        const std::string kind = input_kind(j);
        if (kind == "quantale") {
            Quantale Q = io::parse_quantale(j.at("quantale"), "quantale", cfg.tolerance);
            auto s = sample_values(Q, rng);
            for (Value a : s)
                for (Value b : s) {
                    Value ref = oracle::grid_residual(Q, a, b, oc);
                    Value got = Q.hom(a, b);
                    bool ok = Q.finite() ? Q.equal(ref, got) : (std::isinf(ref) ? std::isinf(got) : std::fabs(ref - got) <= 1e-6);
                    rep.record("residual-matches-grid", ok, [&] {
                        return "[" + Q.format(a) + "," + Q.format(b) + "]: closed form " + Q.format(got) + ", grid " +
                               Q.format(ref);
                    });
                }
        } else if (kind == "sheaf") {
            auto spec = io::parse_sheaf(j, cfg.tolerance);
            const auto& f = *spec.sheaf;
            auto stalks = distinct_stalks(f);
            bool enumerable = true;
            for (std::size_t v = 0; v < f.graph().vertices.size(); ++v) enumerable &= f.vertex_stalk(v).enumerable();
            for (const auto* s : stalks) {
                if (s->enumerable()) verify_lattice(*s, "stalk/", rng, oc, rep);
            }
            if (enumerable) {
                auto ours = global_sections(f, spec.weighting);
                auto ref = oracle::brute_sections(f, spec.weighting, oc);
                rep.record("sections-match-enumeration", ours == ref, [&] {
                    return std::to_string(ours.size()) + " sections vs " + std::to_string(ref.size()) + " enumerated";
                });
            }
        } else if (kind == "paths") {
            PathProblem p = io::parse_paths(j);
            auto classic = oracle::classic_shortest_paths(p.graph.vertices.size(), weighted_edges(p), p.source);
            for (PathMode mode : {PathMode::Dijkstra, PathMode::Synchronous}) {
                auto r = shortest_paths(p, mode, cfg.max_iter);
                rep.record(to_string(mode) + "-matches-classic", r.distances == classic,
                           [&] { return "distance vectors differ"; });
                if (mode == PathMode::Dijkstra)
                    rep.record("dijkstra-extractions", r.extractions == p.graph.vertices.size(),
                               [&] { return std::to_string(r.extractions); });
            }
        } else if (kind == "prefs") {
            auto spec = io::parse_prefs(j, cfg.tolerance);
            const auto& lat = *spec.stalk;
            Object joined = lat.join(spec.agents);
            Object pointwise = lat.identity_relation();
            for (const auto& a : spec.agents)
                for (std::size_t i = 0; i < pointwise.size(); ++i) pointwise[i] = spec.quantale.join(pointwise[i], a[i]);
            Object ref = oracle::transitive_closure(spec.quantale, lat.n(), pointwise);
            rep.record("join-matches-closure", lat.approx_q(joined, ref, spec.quantale.unit()),
                       [&] { return lat.describe(joined) + " vs " + lat.describe(ref); });
        } else if (kind == "des") {
            auto spec = io::parse_des(j, cfg.tolerance);
            NetworkSheaf f = des_sheaf(spec.system);
            FlowConfig fc;
            fc.max_iter = cfg.max_iter;
            auto trace = harmonic_flow(f, spec.system.weights, des_initial(spec), fc);
            if (trace.status == FlowStatus::Converged) {
                auto slack = des_gs_slack(spec.system, trace.final);
                rep.record("converged-point-synchronized", slack.slack >= -1e-9, [&] {
                    return spec.system.graph.vertices[slack.v] + "-" + spec.system.graph.vertices[slack.w] +
                           " slack " + std::to_string(slack.slack);
                });
            }
        } else {
            throw ParseError("kind", "no oracle for input kind '" + kind + "'");
        }
        emit_report(out, rep, "verify");
        return finish(out, rep.ok());
    });
}

int cmd_des(const RunConfig& cfg, std::ostream& out) {
    return guarded("des", cfg, out, [&](const Json& j) {
        if (input_kind(j) != "des") throw ParseError("kind", "des needs a des input");
        auto spec = io::parse_des(j, cfg.tolerance);
        const auto& sys = spec.system;
        NetworkSheaf f = des_sheaf(sys);
        emit_levels(out, f);
        FlowConfig fc;
        fc.max_iter = cfg.max_iter;
        const Cochain x0 = des_initial(spec);
        auto trace = harmonic_flow(f, sys.weights, x0, fc);
        emit_trace(out, f, trace);
        LawReport rep;
        if (trace.status == FlowStatus::Converged) {
            auto slack = des_gs_slack(sys, trace.final);
            rep.record("synchronization-slack", slack.slack >= -1e-9, [&] {
                return sys.graph.vertices[slack.v] + "-" + sys.graph.vertices[slack.w] + " slack " +
                       std::to_string(slack.slack);
            });
            emit(out, {{"slack", io::encode_value(f.quantale(), slack.slack)},
                       {"edge", {sys.graph.vertices[slack.v], sys.graph.vertices[slack.w]}}});
        }
        emit_report(out, rep, "des");
        LawReport cmp = compare_des_laplacian(sys, f, x0);
        if (trace.status == FlowStatus::Converged) cmp.merge(compare_des_laplacian(sys, f, trace.final));
        emit_report(out, cmp, "des-closed-form");
        return finish(out, rep.ok());
    });
}

int cmd_paths(const RunConfig& cfg, std::ostream& out) {
    return guarded("paths", cfg, out, [&](const Json& j) {
        if (input_kind(j) != "paths") throw ParseError("kind", "paths needs a paths input");
        RunConfig c = cfg;
        if (c.schedule == "unweighted" || c.schedule == "synchronous") c.schedule = "unweighted";
        else if (c.schedule != "dijkstra") throw ParseError("--schedule", "unknown schedule '" + c.schedule + "'");
        return run_paths(c, j, out, false);
    });
}

int cmd_prefs(const RunConfig& cfg, std::ostream& out) {
    return guarded("prefs", cfg, out, [&](const Json& j) {
        if (input_kind(j) != "prefs") throw ParseError("kind", "prefs needs a prefs input");
        auto spec = io::parse_prefs(j, cfg.tolerance);
        NetworkSheaf f = preference_sheaf(spec.graph, spec.stalk);
        auto trace = run_prefs_flow(spec, f, cfg.max_iter);
        emit_trace(out, f, trace);
        emit(out, {{"updates", count_updates(f, trace)}});
        return 0;
    });
}

int run_command(const std::string& name, const RunConfig& cfg, std::ostream& out) {
    if (name == "validate") return cmd_validate(cfg, out);
    if (name == "flow") return cmd_flow(cfg, out);
    if (name == "sections") return cmd_sections(cfg, out);
    if (name == "verify") return cmd_verify(cfg, out);
    if (name == "des") return cmd_des(cfg, out);
    if (name == "paths") return cmd_paths(cfg, out);
    if (name == "prefs") return cmd_prefs(cfg, out);
    out << Json{{"error", "usage"}, {"message", "unknown command '" + name + "'"}}.dump() << '\n';
    return 2;
}

}  // namespace lawvere
