#pragma once

#include <optional>

#include "negk/group.hpp"

namespace negk {

struct CatalogEntry {
    int order = 1;
    int index = 1;
    std::string name;
    std::vector<Perm> generators;

    FiniteGroup build(int cap = kDefaultOrderCap) const;
};

// Line-oriented catalog format:
//   # comment
//   group <order> <index> <name>
//   gen <cycle-notation>
std::vector<CatalogEntry> read_catalog(const std::string& path);
std::string catalog_to_string(const std::vector<CatalogEntry>& entries,
                              const std::string& header_comment);

// Group spec grammar:
//   Cyclic(n) | Dihedral(n) | Dicyclic(n) | Sym(n) | Alt(n) | SL(2,3) | SL(2,5)
//   | BinO | Prod(spec,spec) | perms:<cycles>;<cycles>;...
FiniteGroup parse_group_spec(const std::string& text, int cap = kDefaultOrderCap);

}  // namespace negk
