#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace negk {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline BigInt rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline BigInt rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

struct ArgumentError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InternalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

long gcd_ll(long a, long b);
long lcm_ll(long a, long b);

// x with (a*x) % m == 1; m >= 1, gcd(a,m) == 1.
long inv_mod(long a, long m);
long pow_mod(long base, long exp, long m);

bool is_prime(long n);
// (prime, multiplicity) pairs, ascending. Trial division; inputs here stay small.
std::vector<std::pair<long, int>> factorize(long n);
std::vector<long> prime_divisors(long n);
std::vector<long> divisors(long n);
long euler_phi(long n);

// Multiplicative order of a mod m. ord_1(a) = 1 by convention.
long multiplicative_order(long a, long m);

// All t in [1, m-1] with gcd(t, m) = 1; empty for m = 1.
std::vector<long> prime_residues(long m);

// Unique x mod lcm(m1,m2) with x = r1 (m1), x = r2 (m2); moduli coprime.
long crt(long r1, long m1, long r2, long m2);

// Gal(k(zeta_m) : k) as a subgroup of (Z/m)^x. For k = Q_p this is the set of
// residues congruent to a power of p modulo the prime-to-p part of m.
struct GaloisSubgroup {
    long modulus = 1;
    std::vector<long> residues;  // sorted, each coprime to modulus; {1} convention for m = 1

    bool contains(long t) const;
    std::size_t size() const { return residues.size(); }
};

GaloisSubgroup galois_t_m(long m, long p);
GaloisSubgroup full_unit_group(long m);

// Partition items into equivalence classes of rel (first-seen representative
// order). rel must actually be an equivalence relation; this is not checked.
template <typename T, typename Rel>
std::vector<std::vector<T>> partition_by(const std::vector<T>& items, Rel&& rel) {
    std::vector<std::vector<T>> classes;
    std::vector<bool> used(items.size(), false);
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (used[i]) continue;
        std::vector<T> cell{items[i]};
        used[i] = true;
        for (std::size_t j = i + 1; j < items.size(); ++j) {
            if (!used[j] && rel(items[i], items[j])) {
                cell.push_back(items[j]);
                used[j] = true;
            }
        }
        classes.push_back(std::move(cell));
    }
    return classes;
}

}  // namespace negk
