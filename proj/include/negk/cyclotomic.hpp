#pragma once

#include <string>
#include <vector>

#include "negk/numtheory.hpp"

namespace negk {

// Exact element of Q(zeta_n), stored as rational coordinates over the power
// basis 1, z, ..., z^(phi(n)-1) after reduction by the cyclotomic polynomial
// Phi_n. Conductors stay small here (<= the group exponent), so dense vectors
// are fine.
class Cyclotomic {
public:
    Cyclotomic() : n_(1), coeff_(1, Rat(0)) {}
    explicit Cyclotomic(const Rat& r) : n_(1), coeff_(1, r) {}
    explicit Cyclotomic(long integer) : n_(1), coeff_(1, Rat(integer)) {}

    // zeta_n^k
    static Cyclotomic root_of_unity(long n, long k);
    static Cyclotomic zero(long n);
    // sum_e coeffs[e] * zeta_n^e
    static Cyclotomic from_power_sum(long n, const std::vector<long>& coeffs_by_exponent);

    long conductor() const { return n_; }
    const std::vector<Rat>& coeffs() const { return coeff_; }

    bool is_zero() const;
    bool is_rational() const;
    // Throws ArgumentError if the value is not rational.
    Rat to_rational() const;

    Cyclotomic operator+(const Cyclotomic& o) const;
    Cyclotomic operator-(const Cyclotomic& o) const;
    Cyclotomic operator*(const Cyclotomic& o) const;
    Cyclotomic operator-() const;
    Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
    Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }
    bool operator==(const Cyclotomic& o) const;
    bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

    Cyclotomic scale(const Rat& r) const;

    // Ring automorphism zeta_n -> zeta_n^t; requires gcd(t, n) = 1.
    Cyclotomic galois_apply(long t) const;
    Cyclotomic conjugate() const { return galois_apply(n_ == 1 ? 1 : n_ - 1); }

    // Rewrite over Q(zeta_m) for n | m.
    Cyclotomic lift_to(long m) const;
    // Smallest divisor d of the conductor with the value in Q(zeta_d).
    Cyclotomic normalized() const;

    // "2-1/3*z12^5" style; uses the normalized (minimal-conductor) form.
    std::string str() const;

    // Total order for deterministic output: compares coefficient vectors after
    // lifting both operands to a common conductor.
    static int cmp(const Cyclotomic& a, const Cyclotomic& b);

private:
    long n_;
    std::vector<Rat> coeff_;  // size phi(n_)

    void reduce_tail(std::vector<Rat>& raw) const;
};

// Integer coefficients of Phi_n (ascending degree). Cached.
const std::vector<BigInt>& cyclotomic_polynomial(long n);

}  // namespace negk
