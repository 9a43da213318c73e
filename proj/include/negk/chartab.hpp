#pragma once

#include "negk/cyclotomic.hpp"
#include "negk/group.hpp"

namespace negk {

struct Character {
    std::vector<Cyclotomic> values;  // indexed by class, canonical class order
    long degree = 1;                 // value at the identity class
};

// Exact complex character table. Characters are sorted by (degree,
// lexicographic values) so tables are reproducible byte for byte.
struct CharacterTable {
    std::vector<ConjClass> classes;
    std::vector<int> cls_of;          // element -> class index
    std::vector<Character> chars;
    long exponent = 1;
    long ell = 0;                     // Dixon prime used for the construction
    long zeta_mod = 1;                // the primitive exponent-th root of unity mod ell
    std::vector<std::vector<uint64_t>> mod_values;  // char values mod ell (same order)

    int num_classes() const { return static_cast<int>(classes.size()); }
};

// a[i][j][k] = #{(x,y) in C_i x C_j : xy = z} for a fixed z in C_k.
std::vector<std::vector<std::vector<long>>> class_mult_coefficients(
    const FiniteGroup& g, const std::vector<ConjClass>& cc);

CharacterTable character_table(const FiniteGroup& g);

// Frobenius-Schur indicator of chars[chi]: (1/|G|) sum_g chi(g^2), in {-1,0,1}.
int fs_indicator(const FiniteGroup& g, const CharacterTable& t, int chi);

struct RationalCharClass {
    std::vector<int> members;     // char indices, ascending; Galois orbit
    long degree = 1;              // shared degree
    int fs = 0;                   // shared Frobenius-Schur indicator
    long orbit_size = 1;          // = [Q(chi) : Q]
    std::vector<long> stabilizer; // {t in (Z/m)^x : chi^t = chi}, sorted; {1} if m = 1
};

// Galois orbits of the irreducible characters under t: chi -> chi o (g -> g^t).
// Count is cross-checked against the rational conjugacy class count (Berman).
std::vector<RationalCharClass> rational_character_classes(const FiniteGroup& g,
                                                          const CharacterTable& t);

// TSV dump of the table (classes as columns) in z-notation.
std::string character_table_tsv(const FiniteGroup& g, const CharacterTable& t);

}  // namespace negk
