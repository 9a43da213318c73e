#pragma once

#include "negk/group.hpp"

namespace negk {

struct RankBreakdown {
    long r_q = 0;                                    // rational conjugacy class count
    std::vector<std::pair<long, long>> singular;     // (p, #singular Q_p-class cells), p | |G|
    long r = 0;                                      // 1 - r_q + sum of singular counts

    bool operator==(const RankBreakdown& o) const {
        return r_q == o.r_q && singular == o.singular && r == o.r;
    }
};

// Partition of the class indices {0..#cc-1} into rational conjugacy cells:
// c ~ d iff representative(c)^t lands in d for some t coprime to the exponent.
// Classes of distinct element orders never merge.
std::vector<std::vector<int>> rational_classes(const FiniteGroup& g,
                                               const std::vector<ConjClass>& cc);

// True iff c and d fuse over Q_p (some t in T_m with rep(c)^t in d).
bool qp_conjugate(const FiniteGroup& g, const std::vector<ConjClass>& cc,
                  const std::vector<int>& cls_of, long p, int c, int d, long m);

// Cells of p-singular classes under Q_p-conjugacy; p must divide |G|.
std::vector<std::vector<int>> singular_qp_classes(const FiniteGroup& g,
                                                  const std::vector<ConjClass>& cc, long p);

RankBreakdown r_of_group(const FiniteGroup& g);
RankBreakdown r_of_group(const FiniteGroup& g, const std::vector<ConjClass>& cc);

}  // namespace negk
