#pragma once

#include <optional>
#include <string>
#include <vector>

#include "negk/perm.hpp"

namespace negk {

struct SizeLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Fully enumerated finite group. Element 0 is the identity; the remaining
// elements are in breadth-first discovery order from the generators.
// Immutable after construction.
struct FiniteGroup {
    int n = 1;
    std::vector<int32_t> table;      // n*n multiplication table, row-major
    std::vector<int> inv;            // inverse of each element
    std::vector<int> elt_order;      // order of each element
    long exponent = 1;               // lcm of element orders
    std::vector<int> generators;     // element indices
    std::string label;
    std::vector<Perm> element_perms; // realization used at construction (may be empty)

    int mul(int a, int b) const { return table[static_cast<std::size_t>(a) * n + b]; }
    int power(int g, long k) const;
    int conj(int x, int g) const { return mul(mul(g, x), inv[g]); }  // g x g^-1
    bool is_abelian() const;
};

struct ConjClass {
    int representative = 0;
    std::vector<int> members;  // sorted element indices
    int element_order = 1;
};

struct NormalSubgroupDesc {
    std::vector<int> members;  // sorted, contains 0
    int order = 1;
};

inline constexpr int kDefaultOrderCap = 2048;

// Closure of the generated permutation group with canonical indexing.
FiniteGroup group_from_generators(const std::vector<Perm>& gens, int cap = kDefaultOrderCap,
                                  const std::string& label = "");

// Finish a group given its multiplication table (identity must be index 0).
FiniteGroup group_from_table(int n, std::vector<int32_t> table, std::vector<int> generators,
                             const std::string& label);

// Builtin families.
FiniteGroup builtin_cyclic(int k);
FiniteGroup builtin_dihedral(int order);            // order = 2k >= 2
FiniteGroup builtin_dicyclic(int k);                // order 4k, k >= 1; Dic_{2^j} = Q_{2^(j+2)}
FiniteGroup builtin_symmetric(int k);               // k <= 5
FiniteGroup builtin_alternating(int k);             // k <= 5
FiniteGroup builtin_sl23();
FiniteGroup builtin_sl25();
FiniteGroup builtin_binary_octahedral();
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

std::vector<ConjClass> conjugacy_classes(const FiniteGroup& g);

// Map element -> index of its class in the given class list.
std::vector<int> class_of_element(const FiniteGroup& g, const std::vector<ConjClass>& cc);

// Index (into cc) of the class containing representative(c)^t.
int power_class(const FiniteGroup& g, const std::vector<ConjClass>& cc,
                const std::vector<int>& cls_of, int c, long t);

std::vector<NormalSubgroupDesc> normal_subgroups(const FiniteGroup& g);

// Quotient by a normal subgroup; cosets reindexed with identity coset first,
// remaining cosets ordered by smallest member. Optionally reports the coset
// map G -> G/N.
FiniteGroup quotient_group(const FiniteGroup& g, const NormalSubgroupDesc& n,
                           std::vector<int>* coset_map = nullptr);

// Regular-representation permutations of the generators (for catalog output).
std::vector<Perm> regular_generators(const FiniteGroup& g);

}  // namespace negk
