#pragma once

// Seeded random instances for property tests and the verify command.

#include <random>

#include "lawvere/sheaf.hpp"

namespace lawvere::gen {

using Rng = std::mt19937_64;

/// A random subset of Q^m (m = 1 or 2) closed under pointwise meets,
/// cotensors and containing the top, as a finite weighted lattice of at
/// most `max_objects` objects. With probability 1/5 one object is doubled
/// by an isomorphic copy.
std::shared_ptr<const FiniteLattice> random_lattice(Rng& rng, const Quantale& q, std::size_t max_objects = 6);

/// A Q-functor C -> D found by randomized backtracking; nothing if there is none.
std::optional<QFunctor> random_functor(Rng& rng, std::shared_ptr<const FiniteLattice> c,
                                       std::shared_ptr<const FiniteLattice> d);

/// A pair F ⊣ G with defect exactly 1. Falls back to constant bottom with
/// constant top when no random functor has a crisp right adjoint.
std::pair<QFunctor, QFunctor> random_crisp_adjunction(Rng& rng, std::shared_ptr<const FiniteLattice> c,
                                                      std::shared_ptr<const FiniteLattice> d, std::size_t tries = 8);

WeightedDiagram random_diagram(Rng& rng, std::span<const Object> pool, std::span<const Value> weights,
                               std::size_t max_index);

/// Connected graph on n vertices: random spanning tree plus each remaining
/// pair with probability `extra`. Ids are zero-padded so they sort by index.
Graph random_connected_graph(Rng& rng, std::size_t n, double extra);

/// Path or triangle on 2–3 vertices, random stalks over q and random crisp
/// adjunctions on every incidence.
NetworkSheaf random_crisp_sheaf(Rng& rng, const Quantale& q, std::size_t max_objects = 4);

}  // namespace lawvere::gen
