#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "negk/numtheory.hpp"

using namespace negk;

TEST_CASE("elementary functions") {
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(12) == 4);
    CHECK(euler_phi(200) == 80);
    CHECK(divisors(12) == std::vector<long>{1, 2, 3, 4, 6, 12});
    CHECK(prime_divisors(120) == std::vector<long>{2, 3, 5});
    CHECK(is_prime(2));
    CHECK(is_prime(97));
    CHECK(!is_prime(1));
    CHECK(!is_prime(91));
    CHECK(multiplicative_order(2, 7) == 3);
    CHECK(multiplicative_order(3, 1) == 1);
    CHECK(inv_mod(3, 7) == 5);
    CHECK(pow_mod(2, 10, 1000) == 24);
    CHECK(crt(1, 4, 2, 3) == 5);
}

TEST_CASE("prime_residues") {
    CHECK(prime_residues(12) == std::vector<long>{1, 5, 7, 11});
    CHECK(prime_residues(1).empty());
    CHECK(prime_residues(15) == std::vector<long>{1, 2, 4, 7, 8, 11, 13, 14});
}

TEST_CASE("galois_t_m worked examples") {
    CHECK(galois_t_m(8, 2).residues == std::vector<long>{1, 3, 5, 7});
    CHECK(galois_t_m(7, 2).residues == std::vector<long>{1, 2, 4});
    CHECK(galois_t_m(15, 2).residues == std::vector<long>{1, 2, 4, 8});
    CHECK(galois_t_m(6, 3).residues == std::vector<long>{1, 5});
    CHECK(galois_t_m(1, 5).size() == 1);  // trivial group
    CHECK_THROWS_AS(galois_t_m(12, 6), ArgumentError);
}

TEST_CASE("galois_t_m group structure and size formula") {
    for (long m : {2L, 3L, 4L, 6L, 8L, 9L, 12L, 14L, 15L, 16L, 20L, 24L, 30L, 36L, 60L}) {
        for (long p : {2L, 3L, 5L, 7L, 11L}) {
            GaloisSubgroup t = galois_t_m(m, p);
            CHECK(t.contains(1));
            for (long a : t.residues)
                for (long b : t.residues) CHECK(t.contains(a * b % m));
            long q = 1, mm = m;
            while (mm % p == 0) {
                q *= p;
                mm /= p;
            }
            long mu = m / q;
            long expect = euler_phi(q) * (mu == 1 ? 1 : multiplicative_order(p, mu));
            CHECK(static_cast<long>(t.size()) == expect);
            CHECK(euler_phi(m) % static_cast<long>(t.size()) == 0);
            if (m % p != 0) {
                // T equals the cyclic subgroup generated by p mod m
                std::vector<long> cyc;
                long x = p % m;
                do {
                    cyc.push_back(x);
                    x = x * p % m;
                } while (x != p % m);
                std::sort(cyc.begin(), cyc.end());
                cyc.erase(std::unique(cyc.begin(), cyc.end()), cyc.end());
                CHECK(t.residues == cyc);
            }
        }
    }
}

TEST_CASE("partition_by") {
    std::vector<int> v{1, 2, 3, 4};
    auto parity = [](int a, int b) { return (a - b) % 2 == 0; };
    auto cells = partition_by(v, parity);
    REQUIRE(cells.size() == 2);
    CHECK(cells[0] == std::vector<int>{1, 3});
    CHECK(cells[1] == std::vector<int>{2, 4});

    std::vector<int> empty;
    CHECK(partition_by(empty, parity).empty());

    std::vector<int> r;
    for (int i = 1; i <= 12; ++i) r.push_back(i);
    auto mod3 = partition_by(r, [](int a, int b) { return (a - b) % 3 == 0; });
    REQUIRE(mod3.size() == 3);
    for (auto& c : mod3) CHECK(c.size() == 4);
}
