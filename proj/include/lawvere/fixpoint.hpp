#pragma once

// Prefix, suffix and stable points of an endofunctor on an enumerable
// weighted lattice, and a completeness check for each of those subcategories.

#include <random>

#include "lawvere/wlattice.hpp"

namespace lawvere {

struct FixpointQuery {
    LatticePtr lattice;
    QFunctor endo;
    Value p;  // prefix level: Lx ⪯_p x
    Value q;  // suffix level: x ⪯_q Lx
};

std::vector<Object> suffix_points(const FixpointQuery& query);
std::vector<Object> prefix_points(const FixpointQuery& query);
std::vector<Object> stable_points(const FixpointQuery& query);

struct TarskiOptions {
    std::size_t random_diagrams = 8;
    std::size_t max_index = 4;
    std::size_t max_subset_objects = 8;  // all crisp subsets are tried up to this size
    std::vector<Value> weights;          // empty: the carrier of a finite quantale
};

/// Nonemptiness, closure (suffix points under ambient weighted joins, prefix
/// points under ambient weighted meets), restriction of L to each set, and
/// completeness of each full subcategory, where weighted meets and joins
/// are searched for among the subset's own objects.
LawReport verify_tarski(const FixpointQuery& query, std::mt19937_64& rng, const TarskiOptions& opts = {});

/// Whether `objs`, as a full subcategory of `lat`, has an object with the
/// universal property of the weighted meet (or join) of `d`. Returns the
/// index into `objs` of the lowest such object.
std::optional<std::size_t> search_in_subset(const QCategory& lat, std::span<const Object> objs,
                                            const WeightedDiagram& d, LimitKind kind);

}  // namespace lawvere
