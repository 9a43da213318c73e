#pragma once

#include <string>
#include <vector>

#include "negk/numtheory.hpp"

namespace negk {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Permutation of {0, ..., degree-1} stored as the image vector.
using Perm = std::vector<int>;

Perm perm_identity(int degree);
Perm perm_compose(const Perm& a, const Perm& b);  // (a*b)(x) = a(b(x))
Perm perm_inverse(const Perm& a);
Perm perm_pad(const Perm& a, int degree);

// Disjoint-cycle notation with 1-based points, e.g. "(1,2,3)(4,5)".
// Whitespace-insensitive. "()" is the identity.
Perm parse_cycles(const std::string& text);
std::string cycle_string(const Perm& p);

}  // namespace negk
