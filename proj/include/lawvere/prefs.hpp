#pragma once

// Q-valued preference relations on a finite set of alternatives, their
// weighted lattice, change-of-alternatives maps and preference diffusion.

#include <optional>

#include "lawvere/sheaf.hpp"

namespace lawvere {

/// Row-major n×n relation, R[a*n+b] = R(a,b).
using Relation = Object;

Relation relation_compose(const Quantale& q, std::size_t n, const Relation& r, const Relation& s);
/// Iterates R ← R ∨ R∘R until it stops changing.
Relation kleene_closure(const Quantale& q, std::size_t n, Relation r);
/// First (a,b,c) with R(a,b)·R(b,c) ⋠ R(a,c), formatted, or nothing.
std::optional<std::string> transitivity_witness(const Quantale& q, std::size_t n, const Relation& r);
std::optional<std::string> reflexivity_witness(const Quantale& q, std::size_t n, const Relation& r);

class PreferenceLattice : public WeightedLattice {
public:
    PreferenceLattice(Quantale q, std::vector<std::string> alternatives);

    Value hom(const Object& p, const Object& m) const override;
    bool contains(const Object& p) const override;
    std::string name() const override;
    std::string describe(const Object& p) const override;
    /// Finite quantales with at most 4096 candidate relations.
    bool enumerable() const override;
    std::vector<Object> objects() const override;

    /// Pointwise [q, P(a,b)]; NoSuchObject when that fails to be transitive.
    Object cotensor(Value q, const Object& p) const override;
    /// (q·P) ∨ 1.
    Object tensor(Value q, const Object& p) const override;
    Object meet(std::span<const Object> ps) const override;
    /// Kleene closure of the pointwise join.
    Object join(std::span<const Object> ps) const override;

    const std::vector<std::string>& alternatives() const { return alts_; }
    std::size_t n() const { return alts_.size(); }
    Relation identity_relation() const;

private:
    std::vector<std::string> alts_;
};

using PrefPtr = std::shared_ptr<const PreferenceLattice>;

/// f*M(a,a') = M(f a, f a').
Relation pullback(const std::vector<std::size_t>& f, std::size_t nb, const Relation& m);
/// Closure of b,b' ↦ ⋁{P(a,a') : f a = b, f a' = b'}, with 1 on the diagonal.
Relation pushforward(const Quantale& q, const std::vector<std::size_t>& f, std::size_t nb, const Relation& p);

QFunctor pushforward_functor(PrefPtr a, PrefPtr b, std::vector<std::size_t> f);
QFunctor pullback_functor(PrefPtr a, PrefPtr b, std::vector<std::size_t> f);

/// f*(f_*P) ⪰ P, and f_*P ⪯ M for every competitor M with f*M ⪰ P.
LawReport check_pushforward_minimality(const PreferenceLattice& a, const PreferenceLattice& b,
                                       const std::vector<std::size_t>& f, const Relation& p,
                                       std::span<const Relation> competitors);

/// Vertex and edge stalks are preference lattices; the incidence v◁e carries
/// a map of alternatives maps[e][k]: A_v -> A_e. Restriction is pushforward
/// and corestriction pullback.
NetworkSheaf preference_sheaf(Graph g, std::vector<PrefPtr> vertex_stalks, std::vector<PrefPtr> edge_stalks,
                              const std::vector<std::array<std::vector<std::size_t>, 2>>& maps);
/// One shared alternative set with identity maps.
NetworkSheaf preference_sheaf(Graph g, PrefPtr stalk);

/// W(v,w) = 1 when x_v ≈_{ε_v} x_w, ⊥ otherwise; ω1 = ω2 = 1.
OmegaSchedule bounded_confidence_schedule(const NetworkSheaf& f, std::vector<Value> eps);

/// Number of steps in a trace whose iterate differs from its predecessor.
std::size_t count_updates(const NetworkSheaf& f, const FlowTrace& trace);

}  // namespace lawvere
