#include "negk/numtheory.hpp"

#include <algorithm>
#include <numeric>

namespace negk {

long gcd_ll(long a, long b) { return std::gcd(a, b); }
long lcm_ll(long a, long b) { return std::lcm(a, b); }

long inv_mod(long a, long m) {
    if (m == 1) return 0;
    long t = 0, new_t = 1;
    long r = m, new_r = ((a % m) + m) % m;
    while (new_r != 0) {
        long q = r / new_r;
        std::tie(t, new_t) = std::pair<long, long>{new_t, t - q * new_t};
        std::tie(r, new_r) = std::pair<long, long>{new_r, r - q * new_r};
    }
    if (r != 1) throw ArgumentError("inv_mod: not invertible");
    return ((t % m) + m) % m;
}

long pow_mod(long base, long exp, long m) {
    if (m == 1) return 0;
    long result = 1;
    long b = ((base % m) + m) % m;
    while (exp > 0) {
        if (exp & 1) result = (result * b) % m;
        b = (b * b) % m;
        exp >>= 1;
    }
    return result;
}

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::pair<long, int>> factorize(long n) {
    if (n < 1) throw ArgumentError("factorize: positive input required");
    std::vector<std::pair<long, int>> out;
    for (long d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            int e = 0;
            while (n % d == 0) {
                n /= d;
                ++e;
            }
            out.emplace_back(d, e);
        }
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

std::vector<long> prime_divisors(long n) {
    std::vector<long> out;
    for (auto& [p, e] : factorize(n)) out.push_back(p);
    return out;
}

std::vector<long> divisors(long n) {
    std::vector<long> out{1};
    for (auto& [p, e] : factorize(n)) {
        std::size_t sz = out.size();
        long pk = 1;
        for (int i = 1; i <= e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < sz; ++j) out.push_back(out[j] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

long euler_phi(long n) {
    long phi = 1;
    for (auto& [p, e] : factorize(n)) {
        long pk = 1;
        for (int i = 1; i < e; ++i) pk *= p;
        phi *= pk * (p - 1);
    }
    return phi;
}

long multiplicative_order(long a, long m) {
    if (m == 1) return 1;
    a = ((a % m) + m) % m;
    if (std::gcd(a, m) != 1) throw ArgumentError("multiplicative_order: gcd(a,m) != 1");
    long x = a % m, k = 1;
    while (x != 1) {
        x = (x * a) % m;
        ++k;
    }
    return k;
}

std::vector<long> prime_residues(long m) {
    std::vector<long> out;
    for (long t = 1; t < m; ++t)
        if (std::gcd(t, m) == 1) out.push_back(t);
    return out;
}

long crt(long r1, long m1, long r2, long m2) {
    if (std::gcd(m1, m2) != 1) throw ArgumentError("crt: moduli not coprime");
    long m = m1 * m2;
    if (m1 == 1) return ((r2 % m2) + m2) % m2;
    if (m2 == 1) return ((r1 % m1) + m1) % m1;
    long x = ((r1 % m1) + m1) % m1;
    long step = inv_mod(m1 % m2, m2);
    long diff = ((((r2 - x) % m2) + m2) % m2 * step) % m2;
    return (x + m1 * diff) % m;
}

bool GaloisSubgroup::contains(long t) const {
    long r = ((t % modulus) + modulus) % modulus;
    if (modulus == 1) return true;
    return std::binary_search(residues.begin(), residues.end(), r);
}

GaloisSubgroup galois_t_m(long m, long p) {
    if (!is_prime(p)) throw ArgumentError("galois_t_m: p must be prime");
    if (m < 1) throw ArgumentError("galois_t_m: m must be positive");
    GaloisSubgroup T;
    T.modulus = m;
    if (m == 1) {
        T.residues = {0};  // trivial group {1 mod 1}
        return T;
    }
    long q = 1;
    long mm = m;
    while (mm % p == 0) {
        q *= p;
        mm /= p;
    }
    long mu = m / q;
    // powers of p mod mu; ord_1(p) = 1 so mu = 1 admits everything
    std::vector<long> powers;
    if (mu == 1) {
        powers = {0};
    } else {
        long ord = multiplicative_order(p, mu);
        for (long i = 1; i <= ord; ++i) powers.push_back(pow_mod(p, i, mu));
        std::sort(powers.begin(), powers.end());
    }
    for (long t : prime_residues(m)) {
        if (std::binary_search(powers.begin(), powers.end(), t % mu)) T.residues.push_back(t);
    }
    return T;
}

GaloisSubgroup full_unit_group(long m) {
    GaloisSubgroup T;
    T.modulus = m;
    T.residues = (m == 1) ? std::vector<long>{0} : prime_residues(m);
    return T;
}

}  // namespace negk
