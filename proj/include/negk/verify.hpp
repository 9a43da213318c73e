#pragma once

#include <functional>

#include "negk/schur.hpp"

namespace negk {

// Invariant suite used by `negk verify` and the acceptance tests. Each check
// reports failures through the sink and returns the number of failures.
using FailSink = std::function<void(const std::string&)>;

long check_group_invariants(const FiniteGroup& g, const FailSink& fail);
long check_class_invariants(const FiniteGroup& g, const FailSink& fail);
// Row/column orthogonality, degree sum, FS sum rule, Galois equivariance,
// Berman cross-check. Meant for |G| <= 64.
long check_character_invariants(const FiniteGroup& g, const FailSink& fail);
// Dimension completeness, infinity/FS agreement, contribution-test
// equivalence, abelian groups have s = 0. Meant for |G| <= 100.
long check_schur_invariants(const FiniteGroup& g, const FailSink& fail);

}  // namespace negk
