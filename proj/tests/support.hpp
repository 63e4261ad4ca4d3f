#pragma once

#include <string>

#include "lawvere/io.hpp"

namespace testing {

inline std::string data(const std::string& name) { return std::string(LAWVERE_TEST_DATA) + "/" + name; }

inline lawvere::io::SheafSpec load_sheaf(const std::string& name) {
    return lawvere::io::parse_sheaf(lawvere::io::load_json(data(name)));
}

inline std::shared_ptr<const lawvere::FiniteLattice> finite_lattice(const lawvere::Quantale& q,
                                                                   std::vector<std::string> ids,
                                                                   std::vector<std::vector<lawvere::Value>> hom) {
    return std::make_shared<lawvere::FiniteLattice>(lawvere::FiniteQCategory(q, std::move(ids), std::move(hom)));
}

// The Boolean chain 0 < 1 < ... < n-1 as a lattice.
inline std::shared_ptr<const lawvere::FiniteLattice> boolean_chain(std::size_t n) {
    std::vector<std::string> ids;
    std::vector<std::vector<lawvere::Value>> hom(n, std::vector<lawvere::Value>(n));
    for (std::size_t i = 0; i < n; ++i) {
        ids.push_back(std::to_string(i));
        for (std::size_t j = 0; j < n; ++j) hom[i][j] = i <= j ? 1 : 0;
    }
    return finite_lattice(lawvere::Quantale::boolean(), ids, hom);
}

// Subsets of {a,b} ordered by inclusion.
inline std::shared_ptr<const lawvere::FiniteLattice> diamond() {
    return finite_lattice(lawvere::Quantale::boolean(), {"0", "a", "b", "1"},
                          {{1, 1, 1, 1}, {0, 1, 0, 1}, {0, 0, 1, 1}, {0, 0, 0, 1}});
}

}  // namespace testing
