#pragma once

// Network sheaves of weighted lattices over simple graphs, fuzzy global
// sections, the Lawvere Laplacian and harmonic flow.

#include <array>
#include <functional>
#include <optional>

#include "lawvere/adjunction.hpp"

namespace lawvere {

struct Graph {
    std::vector<std::string> vertices;
    std::vector<std::pair<std::size_t, std::size_t>> edges;

    /// Throws std::invalid_argument on loops, duplicate edges, duplicate ids
    /// or dangling endpoints.
    void validate() const;
    std::size_t index_of(const std::string& id) const;
    /// For each vertex, its (neighbour, edge) pairs in edge order.
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adjacency() const;
};

/// W(v, w) for ordered adjacent pairs; stored as a full matrix, entries for
/// non-adjacent pairs are ignored.
struct Weighting {
    std::vector<std::vector<Value>> w;

    Value operator()(std::size_t v, std::size_t u) const { return w[v][u]; }
    static Weighting constant(const Graph& g, Value q);
};

using Cochain = std::vector<Object>;

using StalkSampler = std::function<std::vector<Object>(const WeightedLattice&)>;

/// Default sample surface: every object of an enumerable lattice, otherwise
/// a small coordinate grid ({0, 0.5, 1, 2, 3, 5, inf} on the reals,
/// quarters on the unit interval).
std::vector<Object> default_stalk_sample(const WeightedLattice& lat);

class NetworkSheaf {
public:
    /// restrictions[e][k] : F(endpoint k of e) -> F(e);
    /// corestrictions[e][k] : F(e) -> F(endpoint k of e).
    NetworkSheaf(Graph g, std::vector<LatticePtr> vertex_stalks, std::vector<LatticePtr> edge_stalks,
                 std::vector<std::array<QFunctor, 2>> restrictions,
                 std::vector<std::array<QFunctor, 2>> corestrictions, const StalkSampler& sampler = default_stalk_sample);

    const Graph& graph() const { return graph_; }
    const Quantale& quantale() const { return vertex_stalks_.front()->quantale(); }
    const WeightedLattice& vertex_stalk(std::size_t v) const { return *vertex_stalks_[v]; }
    const WeightedLattice& edge_stalk(std::size_t e) const { return *edge_stalks_[e]; }
    LatticePtr vertex_stalk_ptr(std::size_t v) const { return vertex_stalks_[v]; }
    LatticePtr edge_stalk_ptr(std::size_t e) const { return edge_stalks_[e]; }
    const QFunctor& restriction(std::size_t e, std::size_t k) const { return restrictions_[e][k]; }
    const QFunctor& corestriction(std::size_t e, std::size_t k) const { return corestrictions_[e][k]; }
    /// Side (0 or 1) of vertex v on edge e.
    std::size_t side(std::size_t e, std::size_t v) const;

    /// Measured adjunction level of restriction ⊣ corestriction at (e, k).
    Value level(std::size_t e, std::size_t k) const { return levels_[e][k]; }
    /// Meet of all incidence levels.
    Value epsilon() const;
    bool crisp() const;
    void set_levels(std::vector<std::array<Value, 2>> levels) { levels_ = std::move(levels); }
    void measure_levels(const StalkSampler& sampler);

    /// Functor defects of every restriction and corestriction on the sample.
    LawReport validate(const StalkSampler& sampler = default_stalk_sample) const;

private:
    Graph graph_;
    std::vector<LatticePtr> vertex_stalks_;
    std::vector<LatticePtr> edge_stalks_;
    std::vector<std::array<QFunctor, 2>> restrictions_;
    std::vector<std::array<QFunctor, 2>> corestrictions_;
    std::vector<std::array<Value, 2>> levels_;
};

/// Same lattice on every cell, identity maps throughout.
NetworkSheaf constant_sheaf(Graph g, LatticePtr stalk);

Value cochain_hom(const NetworkSheaf& f, const Cochain& x, const Cochain& y);
bool cochain_approx(const NetworkSheaf& f, const Cochain& x, const Cochain& y, Value q);

struct SectionCheck {
    bool ok = true;
    std::size_t edge = 0;
    std::size_t from = 0;  // v in hom(F_v x_v, F_w x_w) ⪰ W(v,w)
    std::size_t to = 0;
    Value slack = 0;       // [W(v,w), hom] at the worst edge; ⪰ 1 iff that edge passes
    std::string witness;
};

/// For each edge {v,w} and both orientations, hom_e(F_v x_v, F_w x_w) ⪰ W(v,w).
SectionCheck is_fuzzy_global_section(const NetworkSheaf& f, const Weighting& w, const Cochain& x);

/// Every cochain, in lexicographic stalk-object order. Requires enumerable
/// vertex stalks; throws std::length_error beyond `cap` cochains.
std::vector<Cochain> enumerate_cochains(const NetworkSheaf& f, std::size_t cap = 200000);
std::vector<Cochain> global_sections(const NetworkSheaf& f, const Weighting& w);

/// (Lx)_v = ⋀_w W(v,w) ⋔ corestriction(restriction(x_w)); isolated vertices get top.
Cochain laplacian(const NetworkSheaf& f, const Weighting& w, const Cochain& x);

/// (Φx)_v = meet{ω1(v) ⋔ (Lx)_v, ω2(v) ⋔ x_v}.
Cochain flow_step(const NetworkSheaf& f, const Weighting& w, std::span<const Value> omega1,
                  std::span<const Value> omega2, const Cochain& x);

struct FlowWeights {
    std::vector<Value> omega1;
    std::vector<Value> omega2;
    std::optional<Weighting> weighting;  // replaces W for this step
    bool stationary = true;              // false while the schedule itself will still change
};

using OmegaSchedule = std::function<FlowWeights(std::size_t t, const Cochain& x)>;

/// ω1 = ω2 = 1 at every vertex.
OmegaSchedule unweighted_schedule(const NetworkSheaf& f);

struct FlowConfig {
    std::size_t max_iter = 10000;
    OmegaSchedule schedule;                 // empty: unweighted
    std::size_t divergence_window = 8;
    std::optional<double> divergence_bound; // flag once a finite component exceeds this
};

enum class FlowStatus { Converged, MaxIterReached, Diverging };
std::string to_string(FlowStatus s);

struct FlowRecord {
    std::size_t t;
    Cochain x;
    Value suffix_level;  // cochain_hom(x[t], L x[t])
};

struct FlowTrace {
    std::vector<FlowRecord> iterations;
    FlowStatus status = FlowStatus::MaxIterReached;
    std::size_t t_star = 0;  // meaningful when converged
    Cochain final;           // x[t_star] when converged, else the last iterate
};

FlowTrace harmonic_flow(const NetworkSheaf& f, const Weighting& w, const Cochain& x0, const FlowConfig& config = {});

/// Meet over incidences v◁e (edge {v,w}) and sampled cochains of the
/// adjunction level at the pair actually used by the Laplacian:
/// hom_e(F_v x_v, F_w x_w) ≈ hom_v(x_v, corestriction(F_w x_w)).
Value incidence_level_on(const NetworkSheaf& f, std::span<const Cochain> samples);

/// (a) edge homs ⪰ W·q implies x ∈ S_{ε·q}; (b) x ∈ S_q implies edge
/// homs ⪰ W·ε·q; (c) for idempotent ε, x ∈ S_{ε·q} iff edge homs ⪰ W·ε·q.
LawReport check_suffix_section_lemmas(const NetworkSheaf& f, const Weighting& w, Value eps, Value q,
                                      std::span<const Cochain> samples);

/// For every section y: cochain_hom(y, x[0]) = cochain_hom(y, x[t*]).
LawReport check_projection_property(const NetworkSheaf& f, const Weighting& w, const Cochain& x0,
                                    std::span<const Cochain> sections, std::size_t max_iter = 10000);

std::string describe_cochain(const NetworkSheaf& f, const Cochain& x);

}  // namespace lawvere
