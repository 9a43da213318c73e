#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdlib>
#include "negk/catalog.hpp"
#include "doctest.h"

#include "negk/schur.hpp"
#include "negk/verify.hpp"

using namespace negk;

namespace {
// the rational class index of the (unique here) contributing shape finder
int class_with(SchurEngine& eng, long degree, long orbit) {
    const auto& rcs = eng.rational_classes();
    for (std::size_t i = 0; i < rcs.size(); ++i)
        if (rcs[i].degree == degree && rcs[i].orbit_size == orbit) return static_cast<int>(i);
    return -1;
}
}

TEST_CASE("strong Shoda pairs of cyclic groups cover every class") {
    FiniteGroup c12 = builtin_cyclic(12);
    auto pairs = strong_shoda_pairs(c12);
    CHECK(pairs.size() == divisors(12).size());  // one per rational class
    long dim = 0;
    for (auto& p : pairs) dim += euler_phi(p.quotient_order);  // [G:H] = 1 here
    CHECK(dim == 12);
}

TEST_CASE("strong Shoda pairs of S3 and Q8") {
    FiniteGroup s3 = builtin_symmetric(3);
    auto ps = strong_shoda_pairs(s3);
    CHECK(ps.size() == 3);
    SchurEngine eng(s3);
    long dim = 0;
    for (std::size_t i = 0; i < eng.rational_classes().size(); ++i) {
        const auto& rc = eng.rational_classes()[i];
        dim += rc.orbit_size * rc.degree * rc.degree;
    }
    CHECK(dim == 6);  // 1 + 1 + 4

    FiniteGroup q8 = builtin_dicyclic(2);
    CHECK(strong_shoda_pairs(q8).size() == 5);
}

TEST_CASE("Q8 component: quaternions ramified at 2 and infinity") {
    FiniteGroup q8 = builtin_dicyclic(2);
    SchurEngine eng(q8);
    int rc = class_with(eng, 2, 1);
    REQUIRE(rc >= 0);
    SimpleComponentDesc comp = eng.component_for_class(rc);
    CHECK(comp.provenance == Provenance::StrongShoda);
    CHECK(comp.alg.conductor == 4);
    CHECK(comp.center_fix == std::vector<long>{1, 3});  // center Q
    SchurData sd = eng.local_indices(comp);
    CHECK(sd.index_at(2) == 2);
    CHECK(sd.index_at(kInfinitePlace) == 2);
    CHECK(sd.global == 2);
    CHECK(!contributes_to_s(sd, {2}));
    // Hilbert-symbol cross-check: (-1,-1) ramifies exactly at 2 and infinity
    CHECK(quaternion_local_index(-1, -1, 2) == sd.index_at(2));
    CHECK(quaternion_local_index(-1, -1, kInfinitePlace) == sd.index_at(kInfinitePlace));
    CHECK(quaternion_local_index(-1, -1, 3) == 1);
    CHECK(quaternion_local_index(-1, -1, 5) == 1);
    CHECK(quaternion_local_index(-1, -1, 7) == 1);
}

TEST_CASE("Dic3 component: (-1,-3) ramified at 3 and infinity") {
    FiniteGroup dic3 = builtin_dicyclic(3);
    SchurEngine eng(dic3);
    // the faithful class is rational (zeta_6 + zeta_6^-1 = 1) and quaternionic
    int rc = -1;
    for (std::size_t i = 0; i < eng.rational_classes().size(); ++i)
        if (eng.rational_classes()[i].degree == 2 && eng.rational_classes()[i].fs == -1)
            rc = static_cast<int>(i);
    REQUIRE(rc >= 0);
    SchurData sd = eng.local_indices(eng.component_for_class(rc));
    CHECK(sd.index_at(3) == 2);
    CHECK(sd.index_at(2) == 1);
    CHECK(sd.index_at(kInfinitePlace) == 2);
    CHECK(!contributes_to_s(sd, {2, 3}));
    // cross-check with the Hilbert symbol of (-1, -3) over Q
    CHECK(quaternion_local_index(-1, -3, 3) == 2);
    CHECK(quaternion_local_index(-1, -3, 2) == 1);
    CHECK(quaternion_local_index(-1, -3, kInfinitePlace) == 2);
}

TEST_CASE("Q16 faithful component contributes") {
    FiniteGroup q16 = builtin_dicyclic(4);
    SchurEngine eng(q16);
    int rc = class_with(eng, 2, 2);  // field Q(sqrt 2)
    REQUIRE(rc >= 0);
    SimpleComponentDesc comp = eng.component_for_class(rc);
    CHECK(comp.alg.conductor == 8);
    CHECK(comp.center_fix == std::vector<long>{1, 7});
    SchurData sd = eng.local_indices(comp);
    CHECK(sd.index_at(kInfinitePlace) == 2);
    CHECK(sd.index_at(2) == 1);
    CHECK(schur_index(sd) == 2);
    CHECK(contributes_to_s(sd, {2}));
}

TEST_CASE("contributes_to_s on bare data") {
    SchurData all_ones;
    all_ones.local = {{kInfinitePlace, 1}, {2, 1}};
    all_ones.global = 1;
    CHECK(schur_index(all_ones) == 1);
    CHECK(!contributes_to_s(all_ones, {2}));

    SchurData q8like;
    q8like.local = {{kInfinitePlace, 2}, {2, 2}};
    q8like.global = 2;
    CHECK(schur_index(q8like) == 2);
    CHECK(!contributes_to_s(q8like, {2}));

    SchurData q16like;
    q16like.local = {{kInfinitePlace, 2}, {2, 1}};
    q16like.global = 2;
    CHECK(contributes_to_s(q16like, {2}));

    SchurData odd;
    odd.local = {{kInfinitePlace, 1}, {3, 3}};
    odd.global = 3;
    CHECK(!contributes_to_s(odd, {3}));
}

TEST_CASE("SL(2,3): Brauer-Witt classes, s = 0") {
    FiniteGroup g = builtin_sl23();
    SchurEngine eng(g);
    SOfGroupResult res = eng.s_of_group();
    CHECK(res.s == 0);
    // the rational degree-2 class goes through the 2-elementary reduction and
    // keeps the even index at 2 that kills the contribution
    bool saw_bw = false;
    for (auto& rep : res.components) {
        if (rep.desc.provenance == Provenance::BrauerWitt2 && rep.desc.degree == 2 &&
            rep.desc.orbit_size == 1) {
            saw_bw = true;
            CHECK(rep.sd.index_at(2) == 2);
            CHECK(rep.sd.index_at(kInfinitePlace) == 2);
            CHECK(!rep.contributes);
        }
    }
    CHECK(saw_bw);
}

TEST_CASE("SL(2,5) and the binary octahedral group") {
    SOfGroupResult sl = s_of_group(builtin_sl25());
    CHECK(sl.s == 1);
    long contributing_fs = 0;
    for (auto& rep : sl.components)
        if (rep.contributes) {
            contributing_fs = rep.desc.fs;
            CHECK(rep.desc.degree == 2);
            CHECK(rep.desc.orbit_size == 2);
        }
    CHECK(contributing_fs == -1);

    CHECK(s_of_group(builtin_binary_octahedral()).s == 1);
}

TEST_CASE("s_of_group examples") {
    CHECK(s_of_group(builtin_dicyclic(5)).s == 1);
    CHECK(s_of_group(direct_product(builtin_cyclic(2), builtin_dicyclic(4))).s == 2);
    CHECK(s_of_group(builtin_dicyclic(12)).s == 2);
    CHECK(s_of_group(builtin_symmetric(4)).s == 0);
}

TEST_CASE("k_minus_one") {
    KMinusOneResult triv = k_minus_one(builtin_cyclic(1));
    CHECK(triv.r == 0);
    CHECK(triv.s == 0);
    CHECK(k_minus_one_pretty(triv) == "0");

    KMinusOneResult sl = k_minus_one(builtin_sl25());
    CHECK(sl.r == 2);
    CHECK(sl.s == 1);
    CHECK(k_minus_one_pretty(sl) == "Z^2 + Z/2");

    KMinusOneResult c6 = k_minus_one(builtin_cyclic(6));
    CHECK(c6.r == 1);
    CHECK(c6.s == 0);
    CHECK(k_minus_one_pretty(c6) == "Z");
}

TEST_CASE("quotient monotonicity of s") {
    for (auto g : {builtin_dicyclic(12), direct_product(builtin_cyclic(2), builtin_dicyclic(4)),
                   builtin_dicyclic(6), builtin_binary_octahedral()}) {
        long s = s_of_group(g).s;
        for (const auto& n : normal_subgroups(g)) {
            if (n.order == g.n) continue;
            CHECK(s >= s_of_group(quotient_group(g, n)).s);
        }
    }
}

namespace {
// a^8 = 1, t1^2 = 1, t2^2 = a^(4*nonsplit), t1 a t1 = a^3, t2 a t2 = a^5,
// [t1, t2] = 1: a C8 with the full unit group (Z/8)^x acting, so the faithful
// induced class has a rank-2 decomposition group at p = 2.
FiniteGroup c8_by_v4(bool nonsplit) {
    int n = 32;
    auto idx = [](int i, int e1, int e2) { return (i & 7) * 4 + e1 * 2 + e2; };
    auto act = [](int i, int e1, int e2) {
        if (e1) i = i * 3 % 8;
        if (e2) i = i * 5 % 8;
        return i;
    };
    std::vector<int32_t> tb(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < 8; ++i)
        for (int e1 = 0; e1 < 2; ++e1)
            for (int e2 = 0; e2 < 2; ++e2)
                for (int j = 0; j < 8; ++j)
                    for (int f1 = 0; f1 < 2; ++f1)
                        for (int f2 = 0; f2 < 2; ++f2) {
                            int jj = act(j, e1, e2);
                            int extra = (nonsplit && e2 && f2) ? 4 : 0;
                            tb[static_cast<std::size_t>(idx(i, e1, e2)) * n +
                               idx(j, f1, f2)] =
                                idx((i + jj + extra) % 8, e1 ^ f1, e2 ^ f2);
                        }
    return group_from_table(n, std::move(tb), {idx(1, 0, 0), idx(0, 1, 0), idx(0, 0, 1)},
                            nonsplit ? "C8.V4" : "C8:V4");
}
}

TEST_CASE("rank-2 local decomposition groups (full (Z/8)^x action)") {
    auto sink = [](const std::string& m) { FAIL_CHECK(m); };
    for (bool nonsplit : {false, true}) {
        FiniteGroup g = c8_by_v4(nonsplit);
        REQUIRE(check_group_invariants(g, sink) == 0);
        SchurEngine eng(g);
        int rc = class_with(eng, 4, 1);  // the class induced from a faithful C8 character
        REQUIRE(rc >= 0);
        SimpleComponentDesc comp = eng.component_for_class(rc);
        CHECK(comp.provenance == Provenance::StrongShoda);
        SchurData sd = eng.local_indices(comp);
        CHECK(sd.index_at(kInfinitePlace) == (eng.rational_classes()[rc].fs == -1 ? 2 : 1));
        // the nonsplit variant carries the quaternion class ramified at {2, inf}
        CHECK(sd.index_at(2) == (nonsplit ? 2 : 1));
        // full consistency of the machinery on both groups
        CHECK(check_schur_invariants(g, sink) == 0);
        CHECK(check_character_invariants(g, sink) == 0);
    }
}

namespace {
// Crossed product (Q(zeta_8)/Q, (Z/8)^x, tau) with commuting lifts
// u3 u5 = u5 u3 =: u7 and u3^2 = (-1)^e3, u5^2 = (-1)^e5. The signs are
// central and Galois-fixed, so the factor set closes with no twisting:
// the class is [(Q(i)/Q, -1)^e3] + [(Q(sqrt-2)/Q, -1)^e5].
CyclotomicAlgebra v4_algebra(long e3, long e5) {
    CyclotomicAlgebra a;
    a.conductor = 8;
    a.root_modulus = 8;
    a.w = {1, 3, 5, 7};
    a.action = a.w;
    a.matrix_size = 1;
    a.tau.assign(4, std::vector<long>(4, 0));
    long x3 = 4 * e3, x5 = 4 * e5;  // exponents of the +-1 cocycle values
    auto at = [&](long x, long y, long v) { a.tau[a.w_index(x)][a.w_index(y)] = v % 8; };
    at(3, 3, x3);            // u3 u3 = xi3
    at(5, 5, x5);            // u5 u5 = xi5
    at(3, 5, 0);             // u3 u5 = u7
    at(5, 3, 0);             // u5 u3 = u7
    at(3, 7, x3);            // u3 (u3 u5) = xi3 u5
    at(7, 3, x3);            // (u3 u5) u3 = xi3 u5
    at(5, 7, x5);            // u5 (u3 u5) = u3 xi5
    at(7, 5, x5);            // (u3 u5) u5 = xi5 u3
    at(7, 7, x3 + x5);       // (u3 u5)^2 = xi3 xi5
    return a;
}
}

TEST_CASE("direct rank-2 algebra invariants against Hilbert symbols") {
    // (-1,-1) and (-2,-1) are each ramified exactly at {2, inf}; their sum
    // splits. The decomposition group at 2 is the full C2 x C2.
    struct Case {
        long e3, e5, at2, at_inf;
    };
    for (Case c : {Case{0, 0, 1, 1}, Case{1, 0, 2, 2}, Case{0, 1, 2, 2}, Case{1, 1, 1, 1}}) {
        CyclotomicAlgebra a = v4_algebra(c.e3, c.e5);
        CHECK(local_index_of_algebra(a, 2) == c.at2);
        CHECK(infinite_index_of_algebra(a) == c.at_inf);
        for (long p : {3L, 5L, 7L, 11L}) CHECK(local_index_of_algebra(a, p) == 1);
    }
    // cross-check the quaternion shapes entering the sum
    CHECK(quaternion_local_index(-1, -1, 2) == 2);
    CHECK(quaternion_local_index(-2, -1, 2) == 2);
    CHECK(quaternion_local_index(-2, -1, kInfinitePlace) == 2);
    CHECK(quaternion_local_index(-2, -1, 5) == 1);
}

TEST_CASE("schur invariants on a sample") {
    auto sink = [](const std::string& m) { FAIL_CHECK(m); };
    CHECK(check_schur_invariants(builtin_dicyclic(6), sink) == 0);
    CHECK(check_schur_invariants(builtin_sl23(), sink) == 0);
    CHECK(check_schur_invariants(direct_product(builtin_cyclic(3), builtin_dicyclic(4)), sink) ==
          0);
    CHECK(check_schur_invariants(builtin_cyclic(24), sink) == 0);
}

TEST_CASE("abelian groups have s = 0") {
    for (auto g : {builtin_cyclic(16), builtin_cyclic(24),
                   direct_product(builtin_cyclic(4), builtin_cyclic(4)),
                   direct_product(builtin_cyclic(2), builtin_cyclic(12))}) {
        CHECK(s_of_group(g).s == 0);
    }
}

TEST_CASE("quotient monotonicity over the whole small catalog") {
    const char* dir = std::getenv("NEGK_CATALOG_DIR");
    if (!dir) return;  // only meaningful with the shipped catalog available
    for (auto& e : read_catalog(std::string(dir) + "/leq28.cat")) {
        FiniteGroup g = e.build();
        long s = s_of_group(g).s;
        for (const auto& n : normal_subgroups(g)) {
            if (n.order == g.n) continue;
            long sq = s_of_group(quotient_group(g, n)).s;
            CHECK(s >= sq);
        }
    }
}
