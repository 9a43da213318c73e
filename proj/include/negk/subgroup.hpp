#pragma once

#include "negk/group.hpp"

namespace negk {

// Sorted member list of the subgroup generated by seed (identity always in).
std::vector<int> subgroup_generated(const FiniteGroup& g, const std::vector<int>& seed);

// Every subgroup of g, as sorted member lists, ordered by (size, members).
// Join-closure over cyclic subgroups; fine for the catalog scale.
std::vector<std::vector<int>> all_subgroups(const FiniteGroup& g);

bool is_subgroup(const FiniteGroup& g, const std::vector<int>& members);

// N_G(S) for a subgroup S (sorted member list in, sorted member list out).
std::vector<int> normalizer(const FiniteGroup& g, const std::vector<int>& s);

// True if k is normal in h (both sorted member lists, k subset of h).
bool normal_in(const FiniteGroup& g, const std::vector<int>& k, const std::vector<int>& h);

// The subgroup h as a standalone FiniteGroup. to_parent maps the small
// group's indices back into g; identity stays at index 0.
FiniteGroup subgroup_as_group(const FiniteGroup& g, const std::vector<int>& h,
                              std::vector<int>* to_parent);

// Quotient h/k inside g (k normal in h). coset_of maps parent elements of h
// to quotient indices (and -1 outside h).
FiniteGroup section_group(const FiniteGroup& g, const std::vector<int>& h,
                          const std::vector<int>& k, std::vector<int>* coset_of);

}  // namespace negk
