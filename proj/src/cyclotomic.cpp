#include "negk/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace negk {

namespace {

// x^n - 1 = prod_{d | n} Phi_d; divide out the proper divisors.
std::vector<BigInt> compute_phi_poly(long n) {
    std::vector<BigInt> poly(n + 1, BigInt(0));
    poly[0] = -1;
    poly[n] = 1;
    for (long d : divisors(n)) {
        if (d == n) continue;
        const std::vector<BigInt>& phid = cyclotomic_polynomial(d);
        // exact polynomial division poly /= phid
        std::vector<BigInt> quot(poly.size() - phid.size() + 1, BigInt(0));
        std::vector<BigInt> rem = poly;
        for (long i = static_cast<long>(quot.size()) - 1; i >= 0; --i) {
            BigInt c = rem[i + phid.size() - 1];  // phid is monic
            quot[i] = c;
            if (c != 0) {
                for (std::size_t j = 0; j < phid.size(); ++j) rem[i + j] -= c * phid[j];
            }
        }
        for (const BigInt& c : rem)
            if (c != 0) throw InternalError("cyclotomic_polynomial: division not exact");
        poly = std::move(quot);
    }
    return poly;
}

struct ReductionTable {
    long n;
    long phi;
    // rows[k] = coordinates of z^(phi+k) over the power basis, k in [0, n-phi)
    std::vector<std::vector<BigInt>> rows;
};

const ReductionTable& reduction_table(long n) {
    static std::map<long, ReductionTable> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    ReductionTable t;
    t.n = n;
    const auto& phi_poly = cyclotomic_polynomial(n);
    t.phi = static_cast<long>(phi_poly.size()) - 1;
    t.rows.resize(n - t.phi);
    // z^phi = -(phi_poly[0] + ... + phi_poly[phi-1] z^(phi-1)), then iterate.
    std::vector<BigInt> cur(t.phi);
    for (long j = 0; j < t.phi; ++j) cur[j] = -phi_poly[j];
    for (long k = 0; k + t.phi < n; ++k) {
        t.rows[k] = cur;
        // multiply by z
        std::vector<BigInt> next(t.phi, BigInt(0));
        for (long j = 0; j + 1 < t.phi; ++j) next[j + 1] = cur[j];
        BigInt top = cur[t.phi - 1];
        if (top != 0) {
            for (long j = 0; j < t.phi; ++j) next[j] -= top * phi_poly[j];
        }
        cur = std::move(next);
    }
    return cache.emplace(n, std::move(t)).first->second;
}

}  // namespace

const std::vector<BigInt>& cyclotomic_polynomial(long n) {
    static std::map<long, std::vector<BigInt>> cache;
    static std::mutex mu;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }
    std::vector<BigInt> poly = compute_phi_poly(n);
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(n, std::move(poly)).first->second;
}

void Cyclotomic::reduce_tail(std::vector<Rat>& raw) const {
    const ReductionTable& t = reduction_table(n_);
    // fold exponents >= n first (z^n = 1), then reduce by Phi_n
    if (static_cast<long>(raw.size()) > n_) {
        for (long k = n_; k < static_cast<long>(raw.size()); ++k) {
            if (raw[k] != 0) raw[k % n_] += raw[k];
        }
        raw.resize(n_);
    }
    for (long k = static_cast<long>(raw.size()) - 1; k >= t.phi; --k) {
        Rat c = raw[k];
        if (c == 0) continue;
        raw[k] = 0;
        const auto& row = t.rows[k - t.phi];
        for (long j = 0; j < t.phi; ++j) {
            if (row[j] != 0) raw[j] += c * Rat(row[j]);
        }
    }
    raw.resize(t.phi);
}

Cyclotomic Cyclotomic::root_of_unity(long n, long k) {
    if (n < 1) throw ArgumentError("root_of_unity: conductor must be positive");
    Cyclotomic x;
    x.n_ = n;
    long phi = euler_phi(n);
    k = ((k % n) + n) % n;
    std::vector<Rat> raw(n, Rat(0));
    raw[k] = 1;
    x.coeff_.assign(phi, Rat(0));
    x.reduce_tail(raw);
    x.coeff_ = std::move(raw);
    return x;
}

Cyclotomic Cyclotomic::zero(long n) {
    Cyclotomic x;
    x.n_ = n;
    x.coeff_.assign(euler_phi(n), Rat(0));
    return x;
}

Cyclotomic Cyclotomic::from_power_sum(long n, const std::vector<long>& coeffs_by_exponent) {
    Cyclotomic x = zero(n);
    std::vector<Rat> raw(n, Rat(0));
    for (std::size_t e = 0; e < coeffs_by_exponent.size(); ++e) {
        if (coeffs_by_exponent[e] != 0) raw[e % n] += Rat(coeffs_by_exponent[e]);
    }
    x.reduce_tail(raw);
    x.coeff_ = std::move(raw);
    return x;
}

bool Cyclotomic::is_zero() const {
    for (const Rat& c : coeff_)
        if (c != 0) return false;
    return true;
}

bool Cyclotomic::is_rational() const {
    for (std::size_t j = 1; j < coeff_.size(); ++j)
        if (coeff_[j] != 0) return false;
    return true;
}

Rat Cyclotomic::to_rational() const {
    if (!is_rational()) throw ArgumentError("to_rational: value is not rational");
    return coeff_[0];
}

Cyclotomic Cyclotomic::lift_to(long m) const {
    if (m == n_) return *this;
    if (m % n_ != 0) throw ArgumentError("lift_to: target conductor not a multiple");
    Cyclotomic out = zero(m);
    long step = m / n_;
    std::vector<Rat> raw(m, Rat(0));
    for (std::size_t j = 0; j < coeff_.size(); ++j) raw[j * step] = coeff_[j];
    out.reduce_tail(raw);
    out.coeff_ = std::move(raw);
    return out;
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
    long m = lcm_ll(n_, o.n_);
    Cyclotomic a = lift_to(m), b = o.lift_to(m);
    for (std::size_t j = 0; j < a.coeff_.size(); ++j) a.coeff_[j] += b.coeff_[j];
    return a;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const { return *this + (-o); }

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic a = *this;
    for (Rat& c : a.coeff_) c = -c;
    return a;
}

Cyclotomic Cyclotomic::scale(const Rat& r) const {
    Cyclotomic a = *this;
    for (Rat& c : a.coeff_) c *= r;
    return a;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
    long m = lcm_ll(n_, o.n_);
    Cyclotomic a = lift_to(m), b = o.lift_to(m);
    std::vector<Rat> raw(2 * a.coeff_.size(), Rat(0));
    for (std::size_t i = 0; i < a.coeff_.size(); ++i) {
        if (a.coeff_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeff_.size(); ++j) {
            if (b.coeff_[j] == 0) continue;
            raw[i + j] += a.coeff_[i] * b.coeff_[j];
        }
    }
    a.reduce_tail(raw);
    a.coeff_ = std::move(raw);
    return a;
}

bool Cyclotomic::operator==(const Cyclotomic& o) const { return cmp(*this, o) == 0; }

Cyclotomic Cyclotomic::galois_apply(long t) const {
    if (n_ == 1) return *this;
    long tt = ((t % n_) + n_) % n_;
    if (gcd_ll(tt, n_) != 1) throw ArgumentError("galois_apply: t not coprime to conductor");
    std::vector<Rat> raw(n_, Rat(0));
    for (std::size_t j = 0; j < coeff_.size(); ++j) {
        if (coeff_[j] == 0) continue;
        raw[(j * tt) % n_] += coeff_[j];
    }
    Cyclotomic out = zero(n_);
    out.reduce_tail(raw);
    out.coeff_ = std::move(raw);
    return out;
}

Cyclotomic Cyclotomic::normalized() const {
    if (n_ == 1) return *this;
    std::vector<long> units = prime_residues(n_);
    for (long d : divisors(n_)) {
        bool fixed = true;
        for (long t : units) {
            if (t % d != 1 % d) continue;
            if (galois_apply(t) != *this) {
                fixed = false;
                break;
            }
        }
        if (!fixed) continue;
        if (d == n_) return *this;
        // solve for coordinates over the zeta_d power basis
        long phid = euler_phi(d);
        long phin = static_cast<long>(coeff_.size());
        // columns: zeta_d^j lifted into the zeta_n basis
        std::vector<std::vector<Rat>> mat(phin, std::vector<Rat>(phid + 1, Rat(0)));
        for (long j = 0; j < phid; ++j) {
            Cyclotomic col = root_of_unity(d, j).lift_to(n_);
            for (long i = 0; i < phin; ++i) mat[i][j] = col.coeffs()[i];
        }
        for (long i = 0; i < phin; ++i) mat[i][phid] = coeff_[i];
        // Gaussian elimination
        std::vector<Rat> sol(phid, Rat(0));
        long row = 0;
        std::vector<long> pivot_col(phin, -1);
        for (long col = 0; col < phid && row < phin; ++col) {
            long pr = -1;
            for (long i = row; i < phin; ++i)
                if (mat[i][col] != 0) {
                    pr = i;
                    break;
                }
            if (pr < 0) continue;
            std::swap(mat[row], mat[pr]);
            Rat p = mat[row][col];
            for (long j = col; j <= phid; ++j) mat[row][j] /= p;
            for (long i = 0; i < phin; ++i) {
                if (i == row || mat[i][col] == 0) continue;
                Rat f = mat[i][col];
                for (long j = col; j <= phid; ++j) mat[i][j] -= f * mat[row][j];
            }
            pivot_col[row] = col;
            ++row;
        }
        bool consistent = true;
        for (long i = row; i < phin; ++i)
            if (mat[i][phid] != 0) consistent = false;
        if (!consistent) throw InternalError("normalized: inconsistent rebase");
        for (long i = 0; i < row; ++i) sol[pivot_col[i]] = mat[i][phid];
        Cyclotomic out;
        out.n_ = d;
        out.coeff_ = std::move(sol);
        return out;
    }
    return *this;
}

std::string Cyclotomic::str() const {
    Cyclotomic v = normalized();
    std::ostringstream os;
    if (v.is_zero()) return "0";
    bool first = true;
    for (std::size_t j = 0; j < v.coeff_.size(); ++j) {
        const Rat& c = v.coeff_[j];
        if (c == 0) continue;
        bool neg = c < 0;
        Rat a = neg ? Rat(-c) : c;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? "-" : "+");
        }
        bool unit_coeff = (a == 1);
        if (j == 0 || !unit_coeff) os << a.str();
        if (j > 0) {
            if (!unit_coeff) os << "*";
            os << "z" << v.n_;
            if (j > 1) os << "^" << j;
        }
    }
    return os.str();
}

int Cyclotomic::cmp(const Cyclotomic& a, const Cyclotomic& b) {
    long m = lcm_ll(a.n_, b.n_);
    Cyclotomic x = a.lift_to(m), y = b.lift_to(m);
    for (std::size_t j = 0; j < x.coeff_.size(); ++j) {
        if (x.coeff_[j] < y.coeff_[j]) return -1;
        if (x.coeff_[j] > y.coeff_[j]) return 1;
    }
    return 0;
}

}  // namespace negk
