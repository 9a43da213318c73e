#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "negk/rank.hpp"
#include "negk/subgroup.hpp"

using namespace negk;

namespace {
// brute-force count of conjugacy classes of cyclic subgroups
long cyclic_subgroup_classes(const FiniteGroup& g) {
    std::set<std::vector<int>> cyc;
    for (int x = 0; x < g.n; ++x) {
        std::vector<int> c{0};
        int y = x;
        while (y != 0) {
            c.push_back(y);
            y = g.mul(y, x);
        }
        std::sort(c.begin(), c.end());
        cyc.insert(c);
    }
    std::set<std::vector<int>> seen;
    long classes = 0;
    for (const auto& c : cyc) {
        if (seen.count(c)) continue;
        ++classes;
        for (int t = 0; t < g.n; ++t) {
            std::vector<int> img;
            for (int x : c) img.push_back(g.conj(x, t));
            std::sort(img.begin(), img.end());
            seen.insert(img);
        }
    }
    return classes;
}
}

TEST_CASE("rational classes") {
    FiniteGroup c4 = builtin_cyclic(4);
    CHECK(rational_classes(c4, conjugacy_classes(c4)).size() == 3);
    FiniteGroup s3 = builtin_symmetric(3);
    CHECK(rational_classes(s3, conjugacy_classes(s3)).size() == 3);
    FiniteGroup c6 = builtin_cyclic(6);
    CHECK(rational_classes(c6, conjugacy_classes(c6)).size() == 4);
}

TEST_CASE("rational cell count equals cyclic subgroup classes") {
    for (auto g : {builtin_cyclic(12), builtin_symmetric(4), builtin_dicyclic(4),
                   builtin_dihedral(16), builtin_sl23(), builtin_alternating(4),
                   direct_product(builtin_cyclic(2), builtin_dicyclic(3))}) {
        CHECK(static_cast<long>(rational_classes(g, conjugacy_classes(g)).size()) ==
              cyclic_subgroup_classes(g));
    }
}

TEST_CASE("qp_conjugate") {
    FiniteGroup c6 = builtin_cyclic(6);
    auto cc = conjugacy_classes(c6);
    auto cls = class_of_element(c6, cc);
    for (int c = 0; c < 6; ++c) CHECK(qp_conjugate(c6, cc, cls, 2, c, c, 6));
    CHECK(qp_conjugate(c6, cc, cls, 2, cls[1], cls[5], 6));  // g ~ g^5 over Q_2
    FiniteGroup c8 = builtin_cyclic(8);
    auto cc8 = conjugacy_classes(c8);
    auto cls8 = class_of_element(c8, cc8);
    CHECK(qp_conjugate(c8, cc8, cls8, 2, cls8[1], cls8[3], 8));
}

TEST_CASE("singular cells") {
    FiniteGroup c6 = builtin_cyclic(6);
    auto cc = conjugacy_classes(c6);
    auto cells2 = singular_qp_classes(c6, cc, 2);
    REQUIRE(cells2.size() == 2);  // {g^3} and {g, g^5}
    std::multiset<std::size_t> sizes;
    for (auto& c : cells2) sizes.insert(c.size());
    CHECK(sizes == std::multiset<std::size_t>{1, 2});
    CHECK(singular_qp_classes(c6, cc, 3).size() == 2);
    CHECK_THROWS_AS(singular_qp_classes(c6, cc, 5), ArgumentError);

    // Q16 at p=2: the six nonidentity classes fuse into exactly 5 cells (the
    // two order-8 classes merge), which with r_Q = 6 forces r = 1 - 6 + 5 = 0
    FiniteGroup q16 = builtin_dicyclic(4);
    auto ccq = conjugacy_classes(q16);
    auto cells = singular_qp_classes(q16, ccq, 2);
    std::size_t covered = 0;
    for (auto& c : cells)
        for (int idx : c) covered += ccq[idx].members.size();
    CHECK(covered == 15);  // all nonidentity elements
    CHECK(cells.size() == 5);
    CHECK(rational_classes(q16, ccq).size() == 6);
    CHECK(r_of_group(q16).r == 0);
}

TEST_CASE("r_of_group") {
    CHECK(r_of_group(builtin_cyclic(1)).r == 0);
    CHECK(r_of_group(builtin_cyclic(12)).r == 2);
    CHECK(r_of_group(builtin_cyclic(14)).r == 2);
    CHECK(r_of_group(builtin_sl25()).r == 2);
    RankBreakdown b = r_of_group(builtin_cyclic(6));
    CHECK(b.r_q == 4);
    CHECK(b.singular == std::vector<std::pair<long, long>>{{2, 2}, {3, 2}});
    CHECK(b.r == 1);
}

TEST_CASE("prime power order groups have r = 0") {
    for (auto g : {builtin_symmetric(3), builtin_symmetric(4), builtin_dicyclic(4),
                   builtin_cyclic(9), builtin_alternating(5), builtin_dihedral(10),
                   builtin_dicyclic(2)}) {
        bool all_pp = true;
        for (int x = 0; x < g.n; ++x) {
            if (prime_divisors(g.elt_order[x]).size() > 1) all_pp = false;
        }
        REQUIRE(all_pp);
        CHECK(r_of_group(g).r == 0);
    }
}

TEST_CASE("p-groups: rational and Q_p partitions agree") {
    for (auto g : {builtin_cyclic(16), builtin_dicyclic(4), builtin_dihedral(16),
                   builtin_cyclic(27), direct_product(builtin_cyclic(3), builtin_cyclic(9)),
                   direct_product(builtin_cyclic(2), builtin_dicyclic(2))}) {
        long p = prime_divisors(g.n)[0];
        auto cc = conjugacy_classes(g);
        long rq = static_cast<long>(rational_classes(g, cc).size());
        long sing = static_cast<long>(singular_qp_classes(g, cc, p).size());
        CHECK(rq == sing + 1);  // identity is the only p-regular class
        CHECK(r_of_group(g).r == 0);
    }
}

TEST_CASE("Berman cross-check: singular cells equal r_Qp - r_Fp") {
    // r_Qp counts all classes under T_m(p); r_Fp counts p-regular classes
    // under the Frobenius orbit <p>. Their difference must match the
    // singular-cell shortcut.
    for (auto g : {builtin_cyclic(6), builtin_cyclic(12), builtin_symmetric(4),
                   builtin_dicyclic(4), builtin_dicyclic(5), builtin_sl23(),
                   direct_product(builtin_cyclic(2), builtin_dicyclic(3)),
                   builtin_dihedral(24), builtin_cyclic(15)}) {
        REQUIRE(g.n <= 32);
        auto cc = conjugacy_classes(g);
        auto cls = class_of_element(g, cc);
        long m = g.exponent;
        for (long p : prime_divisors(g.n)) {
            GaloisSubgroup tm = galois_t_m(m, p);
            std::vector<int> all_idx;
            for (int i = 0; i < static_cast<int>(cc.size()); ++i) all_idx.push_back(i);
            auto by_order_cells = [&](const std::vector<int>& idx,
                                      const std::vector<long>& ts) {
                return partition_by(idx, [&](int c, int d) {
                    if (cc[c].element_order != cc[d].element_order) return false;
                    for (long t : ts)
                        if (power_class(g, cc, cls, c, t == 0 ? 1 : t) == d) return true;
                    return false;
                });
            };
            long r_qp = static_cast<long>(by_order_cells(all_idx, tm.residues).size());
            // p-regular classes under Frobenius powers of p
            std::vector<int> regular;
            for (int i = 0; i < static_cast<int>(cc.size()); ++i)
                if (cc[i].element_order % p != 0) regular.push_back(i);
            std::vector<long> frob;
            long mp = m;
            while (mp % p == 0) mp /= p;
            long e = (mp == 1) ? 1 : multiplicative_order(p, mp);
            long t = 1;
            for (long i = 0; i < e; ++i) {
                t = (t * p) % std::max(m, 2L);
                frob.push_back(t);
            }
            long r_fp = static_cast<long>(by_order_cells(regular, frob).size());
            long cells = static_cast<long>(singular_qp_classes(g, cc, p).size());
            CHECK(r_qp - r_fp == cells);
        }
    }
}

TEST_CASE("rank invariant under generator relabeling") {
    FiniteGroup a = group_from_generators({parse_cycles("(1,2)"), parse_cycles("(1,2,3,4)")});
    FiniteGroup b = group_from_generators({parse_cycles("(1,2,3,4)"), parse_cycles("(1,2)")});
    CHECK(a.n == b.n);
    CHECK(r_of_group(a) == r_of_group(b));
}
