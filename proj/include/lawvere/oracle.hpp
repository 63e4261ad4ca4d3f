#pragma once

// Brute-force reference computations. Nothing here calls the code it is
// used to check: limits are found by scanning objects, residuals by grid
// search, sections by direct enumeration.

#include <cstdint>

#include "lawvere/sheaf.hpp"

namespace lawvere::oracle {

struct OracleConfig {
    std::size_t grid_resolution = 1000;
    std::uint64_t seed = 0;
    std::size_t max_objects = 4096;
    std::size_t max_cochains = 200000;
    std::size_t max_grid_relations = 100000;
};

struct BruteLimit {
    Object object;
    std::size_t multiplicity = 0;  // objects with the universal property
};

/// Scans lat.objects() for m with hom(z, m) = ⋀_c [W c, hom(z, S c)] for all z.
BruteLimit brute_weighted_meet(const QCategory& lat, const WeightedDiagram& d, const OracleConfig& cfg = {});
/// Scans for m with hom(m, z) = ⋀_c [W c, hom(S c, z)] for all z.
BruteLimit brute_weighted_join(const QCategory& lat, const WeightedDiagram& d, const OracleConfig& cfg = {});

struct WeightedEdge {
    std::size_t a;
    std::size_t b;
    double w;
};

/// Binary-heap Dijkstra on an undirected graph; unreachable vertices get inf.
std::vector<double> classic_shortest_paths(std::size_t n, std::span<const WeightedEdge> edges, std::size_t source);

/// sup{r : p·r ⪯ q}. Finite quantales scan the carrier; the unit interval
/// scans a grid of the given resolution and bisects the last step; the
/// extended reals scan [0, q] the same way.
Value grid_residual(const Quantale& q, Value a, Value b, const OracleConfig& cfg = {});

/// Floyd–Warshall with sup-mul composition, reflexive.
Object transitive_closure(const Quantale& q, std::size_t n, Object r);

/// The least reflexive transitive relation above r whose off-diagonal
/// entries lie on `grid`, by exhaustive search; nothing if the grid
/// candidates above r have no least element.
std::optional<Object> grid_transitive_hull(const Quantale& q, std::size_t n, const Object& r,
                                           std::span<const Value> grid, const OracleConfig& cfg = {});

/// All cochains of enumerable vertex stalks that satisfy both oriented edge
/// inequalities, found by scanning the full product.
std::vector<Cochain> brute_sections(const NetworkSheaf& f, const Weighting& w, const OracleConfig& cfg = {});

}  // namespace lawvere::oracle
