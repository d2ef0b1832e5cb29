#pragma once

#include "weylarr/root_system.hpp"

#include <string>
#include <vector>

namespace weylarr {

// Published invariants of the irreducible types, used as regression pins
// against the generated root systems. Bourbaki numbering throughout.
struct CatalogEntry {
    RootSystemId id;
    int coxeter = 0;
    int num_positive = 0;
    std::vector<int> exponents;
    std::vector<int> theta; // highest-root coefficients over the simple basis
    int c_max = 0;
};

CatalogEntry catalog_entry(const RootSystemId& id); // rank <= 8

// Parse the plain-text catalog file (one record per admissible id).
std::vector<CatalogEntry> load_catalog_file(const std::string& path,
                                            std::vector<std::vector<std::vector<int>>>* cartans = nullptr);

} // namespace weylarr
