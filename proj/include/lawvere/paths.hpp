#pragma once

// Single-source shortest paths as harmonic flow on the constant sheaf
// with stalk the reversed extended reals.

#include <memory>

#include "lawvere/sheaf.hpp"

namespace lawvere {

struct PathProblem {
    Graph graph;
    std::vector<Value> edge_weights;  // one per edge, nonnegative
    std::size_t source = 0;

    void validate() const;
    /// Symmetric W(v,w) = weight of {v,w}; ∞ off the edge set.
    Weighting weighting() const;
};

enum class PathMode { Dijkstra, Synchronous };
std::string to_string(PathMode m);

/// ω2 = 0 everywhere; each call first extracts the unsearched vertex of least
/// current value (ties by lowest identifier), then sets ω1 = 0 on the
/// remaining unsearched vertices and ∞ on searched ones. `extractions`
/// counts frontier extractions across calls.
OmegaSchedule dijkstra_schedule(const Graph& g, std::shared_ptr<std::size_t> extractions);

struct PathResult {
    std::vector<Value> distances;
    FlowTrace trace;
    std::size_t extractions = 0;
};

NetworkSheaf path_sheaf(const Graph& g);
PathResult shortest_paths(const PathProblem& p, PathMode mode, std::size_t max_iter = 10000);

}  // namespace lawvere
