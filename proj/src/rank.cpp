#include "negk/rank.hpp"

#include <algorithm>
#include <map>

#include "negk/numtheory.hpp"

namespace negk {

namespace {

// Buckets of class indices sharing an element order; powering by units
// preserves order, so cells never cross buckets.
std::map<int, std::vector<int>> classes_by_order(const std::vector<ConjClass>& cc) {
    std::map<int, std::vector<int>> buckets;
    for (std::size_t i = 0; i < cc.size(); ++i)
        buckets[cc[i].element_order].push_back(static_cast<int>(i));
    return buckets;
}

std::vector<std::vector<int>> partition_under(const FiniteGroup& g,
                                              const std::vector<ConjClass>& cc,
                                              const std::vector<int>& cls_of,
                                              const std::vector<int>& bucket,
                                              const std::vector<long>& exponents) {
    return partition_by(bucket, [&](int c, int d) {
        for (long t : exponents)
            if (power_class(g, cc, cls_of, c, t) == d) return true;
        return false;
    });
}

}  // namespace

std::vector<std::vector<int>> rational_classes(const FiniteGroup& g,
                                               const std::vector<ConjClass>& cc) {
    std::vector<int> cls_of = class_of_element(g, cc);
    std::vector<long> units = prime_residues(g.exponent);
    if (units.empty()) units = {1};
    std::vector<std::vector<int>> out;
    for (auto& [order, bucket] : classes_by_order(cc)) {
        for (auto& cell : partition_under(g, cc, cls_of, bucket, units)) out.push_back(cell);
    }
    std::sort(out.begin(), out.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) { return a.front() < b.front(); });
    return out;
}

bool qp_conjugate(const FiniteGroup& g, const std::vector<ConjClass>& cc,
                  const std::vector<int>& cls_of, long p, int c, int d, long m) {
    GaloisSubgroup tm = galois_t_m(m, p);
    for (long t : tm.residues)
        if (power_class(g, cc, cls_of, c, t == 0 ? 1 : t) == d) return true;
    return false;
}

std::vector<std::vector<int>> singular_qp_classes(const FiniteGroup& g,
                                                  const std::vector<ConjClass>& cc, long p) {
    if (g.n % p != 0) throw ArgumentError("singular_qp_classes: p does not divide |G|");
    long m = g.exponent;
    GaloisSubgroup tm = galois_t_m(m, p);
    std::vector<long> ts;
    for (long t : tm.residues) ts.push_back(t == 0 ? 1 : t);
    std::vector<int> cls_of = class_of_element(g, cc);
    std::vector<std::vector<int>> out;
    for (auto& [order, bucket] : classes_by_order(cc)) {
        if (order % p != 0) continue;
        for (auto& cell : partition_under(g, cc, cls_of, bucket, ts)) out.push_back(cell);
    }
    std::sort(out.begin(), out.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) { return a.front() < b.front(); });
    return out;
}

RankBreakdown r_of_group(const FiniteGroup& g) { return r_of_group(g, conjugacy_classes(g)); }

RankBreakdown r_of_group(const FiniteGroup& g, const std::vector<ConjClass>& cc) {
    RankBreakdown out;
    out.r_q = static_cast<long>(rational_classes(g, cc).size());
    long sum = 0;
    for (long p : prime_divisors(g.n)) {
        long cells = static_cast<long>(singular_qp_classes(g, cc, p).size());
        out.singular.emplace_back(p, cells);
        sum += cells;
    }
    out.r = 1 - out.r_q + sum;
    if (out.r < 0) throw InternalError("r_of_group: negative free rank");
    return out;
}

}  // namespace negk
