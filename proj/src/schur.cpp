#include "negk/schur.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace negk {

namespace {

// Local crossed-product shapes the cyclic/bicyclic reduction cannot split;
// callers fall back to the 2-elementary route.
struct UnsupportedShapeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

long mod_norm(long x, long m) { return ((x % m) + m) % m; }

long ext_gcd(long a, long b, long& x, long& y) {
    if (b == 0) {
        x = (a >= 0) ? 1 : -1;
        y = 0;
        return std::abs(a);
    }
    long x1, y1;
    long g = ext_gcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

// Representative of t (a unit mod k) as a unit mod K where K = k or 2k.
long lift_unit(long t, long k, long K) {
    t = mod_norm(t, k);
    if (K == k) return t;
    return (t % 2 == 1) ? t : t + k;  // k odd here
}

// 2-part of n.
long two_part(long n) {
    long r = 1;
    while (n % 2 == 0) {
        r *= 2;
        n /= 2;
    }
    return r;
}

long p_part(long n, long p) {
    long r = 1;
    while (n % p == 0) {
        r *= p;
        n /= p;
    }
    return r;
}

// ---------- group algebra elements with a fixed denominator ----------

struct GA {
    long long denom = 1;
    std::map<int, long long> c;  // sparse numerators
};

GA ga_hat(const std::vector<int>& s) {
    GA a;
    a.denom = static_cast<long long>(s.size());
    for (int x : s) a.c[x] = 1;
    return a;
}

void ga_normalize(GA& a) {
    long long g = a.denom;
    for (auto& [x, v] : a.c) g = std::gcd(g, v < 0 ? -v : v);
    if (g <= 1) return;
    a.denom /= g;
    for (auto& [x, v] : a.c) v /= g;
}

GA ga_sub(const GA& a, const GA& b) {
    GA r;
    r.denom = a.denom * b.denom;
    for (auto& [x, v] : a.c) r.c[x] += v * b.denom;
    for (auto& [x, v] : b.c) r.c[x] -= v * a.denom;
    ga_normalize(r);
    return r;
}

GA ga_mul(const FiniteGroup& g, const GA& a, const GA& b) {
    GA r;
    r.denom = a.denom * b.denom;
    for (auto& [x, vx] : a.c) {
        if (vx == 0) continue;
        for (auto& [y, vy] : b.c) {
            if (vy == 0) continue;
            r.c[g.mul(x, y)] += vx * vy;
        }
    }
    ga_normalize(r);
    return r;
}

GA ga_conj(const FiniteGroup& g, const GA& a, int t) {
    GA r;
    r.denom = a.denom;
    for (auto& [x, v] : a.c) r.c[g.conj(x, t)] += v;
    return r;
}

bool ga_is_zero(const GA& a) {
    for (auto& [x, v] : a.c)
        if (v != 0) return false;
    return true;
}

// ---------- local invariants ----------

struct Frac {
    long num = 0;
    long den = 1;  // invariant num/den in Q/Z
};

long frac_order(const std::vector<Frac>& parts) {
    long den = 1;
    for (const Frac& f : parts) den = lcm_ll(den, f.den);
    long num = 0;
    for (const Frac& f : parts) num = mod_norm(num + f.num * (den / f.den), den);
    return den / gcd_ll(den, num);
}

long dlog_in_cyclic(long base, long target, long k, long order) {
    long cur = 1 % k;
    for (long j = 0; j < order; ++j) {
        if (cur == mod_norm(target, k)) return j;
        cur = (cur * base) % k;
    }
    throw InternalError("dlog_in_cyclic: target not a power of base");
}

std::vector<long> cyclic_span(long t, long k) {
    std::vector<long> out;
    long cur = 1 % k;
    do {
        out.push_back(cur);
        cur = (cur * t) % k;
    } while (cur != 1 % k);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<long> span_of(const std::vector<long>& gens, long k) {
    std::vector<long> out{1 % k};
    std::vector<long> work = out;
    while (!work.empty()) {
        long x = work.back();
        work.pop_back();
        for (long g : gens) {
            long y = (x * g) % k;
            if (!std::binary_search(out.begin(), out.end(), y)) {
                out.push_back(y);
                std::sort(out.begin(), out.end());
                work.push_back(y);
            }
        }
    }
    return out;
}

bool in_sorted(const std::vector<long>& v, long x) {
    return std::binary_search(v.begin(), v.end(), x);
}

long teichmueller(long a, long p, long q) {
    // a in [1, p); the (p-1)-th root of unity congruent to a mod p, as a residue mod q
    long x = a % q;
    for (int i = 0; i < 64; ++i) {
        long nx = pow_mod(x, p, q);
        if (nx == x) return x;
        x = nx;
    }
    throw InternalError("teichmueller: no convergence");
}

// Artin symbol of the norm N_{F_P/Q_p}(zeta_K^xi_exp) as an automorphism of
// Q_p(zeta_k), returned as the acting residue t_y in (Z/k)^x. D is the local
// Galois group Gal(L_Q/F_P) = T cap W; T = galois_t_m(k, p).
long artin_ty(long k, long K, long p, const std::vector<long>& T, const std::vector<long>& D,
              long xi_exp, bool sweep_desc) {
    // coset representatives of D in T
    std::vector<long> reps;
    {
        std::vector<long> pool = T;
        if (sweep_desc) std::reverse(pool.begin(), pool.end());
        std::vector<long> covered;
        for (long t : pool) {
            if (in_sorted(covered, t)) continue;
            reps.push_back(t);
            std::vector<long> coset;
            for (long d : D) coset.push_back((t * d) % k);
            for (long x : coset) {
                covered.push_back(x);
            }
            std::sort(covered.begin(), covered.end());
        }
    }
    long y_exp = 0;
    for (long r : reps) y_exp = mod_norm(y_exp + xi_exp * lift_unit(r, k, K), K);
    if (y_exp == 0) return 1 % k;

    long q = p_part(k, p);
    long mu = k / q;
    if (q == 1) {
        // unramified locally; a unit is always a norm
        if (p == 2 && y_exp != 0 && y_exp != K / 2)
            throw InternalError("artin_ty: norm not rational at p=2");
        return 1 % k;
    }
    if (p == 2) {
        if (y_exp != K / 2) throw InternalError("artin_ty: norm not +-1 at p=2");
        if (q <= 2) return 1 % k;
        return crt(q - 1, q, 1 % std::max(mu, 2L), mu);
    }
    long o_y = K / gcd_ll(K, y_exp);
    if ((p - 1) % o_y != 0) throw InternalError("artin_ty: norm order does not divide p-1");
    long c = (y_exp / (K / o_y)) % o_y;
    // fixed embedding: canonical primitive o-th root |-> w^((p-1)/o) mod p
    long w = 0;
    for (long cand = 2; cand < p; ++cand) {
        if (multiplicative_order(cand, p) == p - 1) {
            w = cand;
            break;
        }
    }
    if (w == 0) throw InternalError("artin_ty: no primitive root");
    long a = pow_mod(w, ((p - 1) / o_y) * (c % (p - 1)) % (p - 1), p);
    long u_inv = teichmueller(inv_mod(a, p), p, q);
    return crt(u_inv, q, 1 % std::max(mu, 2L), mu);
}

struct CocycleView {
    const CyclotomicAlgebra* alg;
    long tau(long wa, long wb) const {
        return alg->tau[alg->w_index(wa)][alg->w_index(wb)];
    }
};

// xi for the standard presentation of the cyclic subalgebra generated by
// sigma: u_sigma^order = zeta^exp.
long cyclic_norm_exponent(const CocycleView& cv, long sigma, long order, long k, long K) {
    long acc = 0;
    long cur = sigma % k;
    for (long i = 1; i < order; ++i) {
        acc = mod_norm(acc + cv.tau(cur, sigma), K);
        cur = (cur * sigma) % k;
    }
    // the i=1 term tau(sigma, sigma) enters with cur starting at sigma
    return acc;
}

// Invariant of the cyclic algebra (L^{kill}/F, sigma-bar, zeta^xi_exp) at p.
Frac cyclic_invariant(long k, long K, long p, const std::vector<long>& T,
                      const std::vector<long>& D, const std::vector<long>& kill, long sigma,
                      long order, long xi_exp) {
    for (long d : D) {
        if (mod_norm(xi_exp * (lift_unit(d, k, K) - 1), K) != 0)
            throw InternalError("cyclic_invariant: cocycle norm element not central");
    }
    long ty = artin_ty(k, K, p, T, D, xi_exp, false);
    {
        long ty2 = artin_ty(k, K, p, T, D, xi_exp, true);
        if (ty != ty2) throw InternalError("cyclic_invariant: norm depends on coset sweep");
    }
    if (!in_sorted(D, ty)) throw InternalError("cyclic_invariant: Artin symbol outside D");
    // position of ty modulo <kill> as a power of sigma
    long inv_ty = inv_mod(ty, k);
    long cur = 1 % k;
    for (long j = 0; j < order; ++j) {
        if (in_sorted(kill, (cur * inv_ty) % k)) return Frac{j, order};
        cur = (cur * sigma) % k;
    }
    throw InternalError("cyclic_invariant: symbol not reached by generator");
}

bool solve_lin2(long K, long r1, long r2, long rhs, long& x, long& y) {
    r1 = mod_norm(r1, K);
    r2 = mod_norm(r2, K);
    rhs = mod_norm(rhs, K);
    long a, b;
    long g12 = ext_gcd(r1 == 0 ? K : r1, r2 == 0 ? K : r2, a, b);
    if (r1 == 0) a = 0;
    if (r2 == 0) b = 0;
    if (g12 == 0) g12 = K;
    long g = gcd_ll(g12, K);
    if (rhs % g != 0) return false;
    long kk = K / g;
    long s = (rhs / g) % kk * inv_mod((g12 / g) % kk, kk) % kk;
    x = mod_norm(a * s, K);
    y = mod_norm(b * s, K);
    if (mod_norm(r1 * x + r2 * y - rhs, K) != 0) throw InternalError("solve_lin2: bad solution");
    return true;
}

struct LocalSplitting {
    std::vector<long> gens;    // generators of D
    std::vector<long> orders;
    std::vector<long> xis;     // adjusted norm exponents, one per generator
};

// Decompose the restricted cocycle on D into commuting cyclic pieces by
// adjusting the unit lifts with roots of unity. Throws UnsupportedShapeError
// when no root-of-unity adjustment kills the commutators.
LocalSplitting split_cocycle(const CocycleView& cv, long k, long K, const std::vector<long>& D) {
    auto order_of = [&](long t) { return multiplicative_order(t, k); };
    long size = static_cast<long>(D.size());

    // cyclic?
    for (long d : D) {
        if (order_of(d) == size) {
            LocalSplitting s;
            s.gens = {d};
            s.orders = {size};
            s.xis = {cyclic_norm_exponent(cv, d, size, k, K)};
            return s;
        }
    }
    auto power_norm = [&](long t, long order) {
        // 1 + t + ... + t^(order-1) mod K, with t lifted
        long lt = lift_unit(t, k, K);
        long acc = 0, cur = 1 % K;
        for (long i = 0; i < order; ++i) {
            acc = mod_norm(acc + cur, K);
            cur = (cur * lt) % K;
        }
        return acc;
    };
    // rank 2
    for (long s1 : D) {
        long a = order_of(s1);
        if (a == 1) continue;
        for (long s2 : D) {
            long b = order_of(s2);
            if (b == 1 || a * b != size) continue;
            std::vector<long> c1 = cyclic_span(s1, k), c2 = cyclic_span(s2, k);
            std::vector<long> inter;
            std::set_intersection(c1.begin(), c1.end(), c2.begin(), c2.end(),
                                  std::back_inserter(inter));
            if (inter.size() != 1) continue;
            long beta = mod_norm(cv.tau(s1, s2) - cv.tau(s2, s1), K);
            long x, y;
            long t1 = lift_unit(s1, k, K), t2 = lift_unit(s2, k, K);
            if (!solve_lin2(K, 1 - t2, t1 - 1, -beta, x, y)) continue;
            LocalSplitting s;
            s.gens = {s1, s2};
            s.orders = {a, b};
            s.xis = {mod_norm(cyclic_norm_exponent(cv, s1, a, k, K) + x * power_norm(s1, a), K),
                     mod_norm(cyclic_norm_exponent(cv, s2, b, k, K) + y * power_norm(s2, b), K)};
            return s;
        }
    }
    // rank 3
    for (long s1 : D) {
        long a = order_of(s1);
        if (a == 1) continue;
        for (long s2 : D) {
            long b = order_of(s2);
            if (b == 1) continue;
            for (long s3 : D) {
                long c = order_of(s3);
                if (c == 1 || a * b * c != size) continue;
                std::vector<long> sp12 = span_of({s1, s2}, k);
                if (static_cast<long>(sp12.size()) != a * b) continue;
                if (in_sorted(sp12, s3) && c > 1) continue;
                std::vector<long> c3 = cyclic_span(s3, k);
                std::vector<long> inter;
                std::set_intersection(sp12.begin(), sp12.end(), c3.begin(), c3.end(),
                                      std::back_inserter(inter));
                if (inter.size() != 1) continue;
                std::vector<long> c1 = cyclic_span(s1, k), c2 = cyclic_span(s2, k);
                std::vector<long> i12;
                std::set_intersection(c1.begin(), c1.end(), c2.begin(), c2.end(),
                                      std::back_inserter(i12));
                if (i12.size() != 1) continue;
                long t1 = lift_unit(s1, k, K), t2 = lift_unit(s2, k, K), t3 = lift_unit(s3, k, K);
                long b12 = mod_norm(cv.tau(s1, s2) - cv.tau(s2, s1), K);
                long b13 = mod_norm(cv.tau(s1, s3) - cv.tau(s3, s1), K);
                long b23 = mod_norm(cv.tau(s2, s3) - cv.tau(s3, s2), K);
                // find x1,x2,x3 with b_ij + x_i(1-t_j) + x_j(t_i-1) = 0 (mod K)
                bool found = false;
                long X1 = 0, X2 = 0, X3 = 0;
                for (long x1 = 0; x1 < K && !found; ++x1) {
                    // eq12: x2*(t1-1) = -(b12 + x1*(1-t2))
                    long a2 = mod_norm(t1 - 1, K);
                    long r2v = mod_norm(-(b12 + x1 * (1 - t2)), K);
                    long g2 = gcd_ll(a2 == 0 ? K : a2, K);
                    if (r2v % g2 != 0) continue;
                    long step2 = K / g2;
                    long base2 = (a2 == 0) ? 0
                                           : mod_norm((r2v / g2) * inv_mod((a2 / g2) % step2, step2),
                                                      step2);
                    for (long j2 = 0; j2 < g2 && !found; ++j2) {
                        long x2 = base2 + j2 * step2;
                        // eq13: x3*(t1-1) = -(b13 + x1*(1-t3))
                        long r3v = mod_norm(-(b13 + x1 * (1 - t3)), K);
                        if (r3v % g2 != 0) continue;
                        long base3 = (a2 == 0) ? 0
                                               : mod_norm((r3v / g2) *
                                                              inv_mod((a2 / g2) % step2, step2),
                                                          step2);
                        for (long j3 = 0; j3 < g2 && !found; ++j3) {
                            long x3 = base3 + j3 * step2;
                            if (mod_norm(b23 + x2 * (1 - t3) + x3 * (t2 - 1), K) == 0) {
                                found = true;
                                X1 = x1;
                                X2 = x2;
                                X3 = x3;
                            }
                        }
                    }
                }
                if (!found) continue;
                LocalSplitting s;
                s.gens = {s1, s2, s3};
                s.orders = {a, b, c};
                s.xis = {
                    mod_norm(cyclic_norm_exponent(cv, s1, a, k, K) + X1 * power_norm(s1, a), K),
                    mod_norm(cyclic_norm_exponent(cv, s2, b, k, K) + X2 * power_norm(s2, b), K),
                    mod_norm(cyclic_norm_exponent(cv, s3, c, k, K) + X3 * power_norm(s3, c), K)};
                return s;
            }
        }
    }
    throw UnsupportedShapeError("split_cocycle: no root-of-unity splitting found");
}

long local_index_at_p(const CyclotomicAlgebra& alg, long p) {
    long k = alg.conductor;
    if (k <= 2 || alg.w.size() <= 1) return 1;
    long K = alg.root_modulus;
    GaloisSubgroup tg = galois_t_m(k, p);
    std::vector<long> T = tg.residues;
    std::vector<long> D;
    std::set_intersection(T.begin(), T.end(), alg.w.begin(), alg.w.end(), std::back_inserter(D));
    if (D.size() <= 1) return 1;
    CocycleView cv{&alg};
    LocalSplitting s = split_cocycle(cv, k, K, D);
    std::vector<Frac> parts;
    for (std::size_t i = 0; i < s.gens.size(); ++i) {
        // kill = subgroup generated by the other generators
        std::vector<long> others;
        for (std::size_t j = 0; j < s.gens.size(); ++j)
            if (j != i) others.push_back(s.gens[j]);
        std::vector<long> kill = others.empty() ? std::vector<long>{1 % k} : span_of(others, k);
        // check the adjusted norm element is central (fixed by D)
        parts.push_back(cyclic_invariant(k, K, p, T, D, kill, s.gens[i], s.orders[i], s.xis[i]));
    }
    return frac_order(parts);
}

// Independent infinite-place index from the algebra presentation.
long algebra_infty_index(const CyclotomicAlgebra& alg) {
    long k = alg.conductor;
    if (k <= 2 || alg.w.size() <= 1) return 1;
    long c = k - 1;  // complex conjugation
    if (!in_sorted(alg.w, c)) return 1;  // center is a CM (totally complex) field
    CocycleView cv{&alg};
    long xi = cv.tau(c, c);
    long K = alg.root_modulus;
    if (xi == 0) return 1;
    if (xi == K / 2) return 2;
    throw InternalError("algebra_infty_index: conjugation norm element not +-1");
}

}  // namespace

long local_index_of_algebra(const CyclotomicAlgebra& alg, long p) {
    return local_index_at_p(alg, p);
}

long infinite_index_of_algebra(const CyclotomicAlgebra& alg) {
    return algebra_infty_index(alg);
}

int CyclotomicAlgebra::w_index(long t) const {
    long tt = mod_norm(t, conductor);
    auto it = std::lower_bound(w.begin(), w.end(), tt);
    if (it == w.end() || *it != tt) throw InternalError("CyclotomicAlgebra: residue outside W");
    return static_cast<int>(it - w.begin());
}

long SchurData::index_at(long place) const {
    for (auto& [p, i] : local)
        if (p == place) return i;
    return 1;
}

long schur_index(const SchurData& sd) { return sd.global; }

bool contributes_to_s(const SchurData& sd, const std::vector<long>& primes) {
    if (sd.global % 2 != 0) return false;
    for (long p : primes)
        if (sd.index_at(p) % 2 == 0) return false;
    return true;
}

long quaternion_local_index(long a, long b, long place) {
    auto hilbert = [&](long aa, long bb, long p) -> int {
        if (p == kInfinitePlace) return (aa < 0 && bb < 0) ? -1 : 1;
        auto split = [&](long v, long& u) {
            long e = 0;
            u = v;
            while (u % p == 0) {
                u /= p;
                ++e;
            }
            return e;
        };
        long u, v;
        long alpha = split(aa, u), beta = split(bb, v);
        auto legendre = [&](long x) -> int {
            x = mod_norm(x, p);
            if (x == 0) return 0;
            return pow_mod(x, (p - 1) / 2, p) == 1 ? 1 : -1;
        };
        if (p != 2) {
            int sign = 1;
            if ((alpha * beta) % 2 == 1 && ((p - 1) / 2) % 2 == 1) sign = -sign;
            if (beta % 2 == 1 && legendre(u) == -1) sign = -sign;
            if (alpha % 2 == 1 && legendre(v) == -1) sign = -sign;
            return sign;
        }
        auto eps = [&](long x) { return mod_norm((x - 1) / 2, 2); };
        auto omega = [&](long x) { return mod_norm((x * x - 1) / 8, 2); };
        long e = eps(u) * eps(v) + alpha * omega(v) + beta * omega(u);
        return (e % 2 == 0) ? 1 : -1;
    };
    return hilbert(a, b, place) == -1 ? 2 : 1;
}

SchurEngine::SchurEngine(FiniteGroup g) : g_(std::move(g)) {}

const CharacterTable& SchurEngine::table() {
    if (!table_) table_ = std::make_unique<CharacterTable>(character_table(g_));
    return *table_;
}

const std::vector<RationalCharClass>& SchurEngine::rational_classes() {
    if (!rcs_) {
        rcs_ = std::make_unique<std::vector<RationalCharClass>>(
            rational_character_classes(g_, table()));
        pair_cache_.resize(rcs_->size());
        pair_tried_.assign(rcs_->size(), 0);
        comp_cache_.resize(rcs_->size());
    }
    return *rcs_;
}

const std::vector<std::vector<int>>& SchurEngine::subgroups() {
    if (!subgroups_)
        subgroups_ = std::make_unique<std::vector<std::vector<int>>>(all_subgroups(g_));
    return *subgroups_;
}

namespace {

struct SectionChar {
    std::vector<int> h;         // subgroup members (sorted)
    std::vector<int> k;         // kernel members (sorted)
    long kq = 1;                // [H : K]
    int generator_parent = 0;   // element of h mapping to the chosen generator coset
    std::vector<int> lam_exp;   // lambda exponent per parent element of h (-1 outside)
};

// Faithful linear character of the cyclic section H/K, as exponents of zeta_kq.
bool build_section_char(const FiniteGroup& g, const std::vector<int>& h, const std::vector<int>& k,
                        SectionChar& out) {
    std::vector<int> coset_of;
    FiniteGroup q = section_group(g, h, k, &coset_of);
    long kq = q.n;
    int gen = -1;
    for (int x = 0; x < q.n; ++x) {
        if (q.elt_order[x] == q.n) {
            gen = x;
            break;
        }
    }
    if (gen < 0 && q.n > 1) return false;  // not cyclic
    if (q.n == 1) gen = 0;
    std::vector<int> dlog(q.n, -1);
    {
        int cur = 0;
        for (long j = 0; j < kq; ++j) {
            dlog[cur] = static_cast<int>(j);
            cur = q.mul(cur, gen);
        }
    }
    out.h = h;
    out.k = k;
    out.kq = kq;
    out.lam_exp.assign(g.n, -1);
    for (int x : h) out.lam_exp[x] = dlog[coset_of[x]];
    out.generator_parent = 0;
    for (int x : h) {
        if (coset_of[x] == gen) {
            out.generator_parent = x;
            break;
        }
    }
    return true;
}

std::vector<uint64_t> induced_char_mod(const FiniteGroup& g, const CharacterTable& t,
                                       const SectionChar& sc) {
    uint64_t ell = static_cast<uint64_t>(t.ell);
    uint64_t zk = 1;
    {
        // primitive kq-th root mod ell
        long e = t.exponent / sc.kq;
        uint64_t z = static_cast<uint64_t>(t.zeta_mod);
        zk = 1;
        for (long i = 0; i < e; ++i) zk = zk * z % ell;
    }
    uint64_t hsize_inv = 1;
    {
        uint64_t h = static_cast<uint64_t>(sc.h.size() % ell);
        // Fermat inverse
        uint64_t r = 1, base = h, e = ell - 2;
        while (e) {
            if (e & 1) r = r * base % ell;
            base = base * base % ell;
            e >>= 1;
        }
        hsize_inv = r;
    }
    std::vector<uint64_t> zk_pows(sc.kq);
    zk_pows[0] = 1;
    for (long i = 1; i < sc.kq; ++i) zk_pows[i] = zk_pows[i - 1] * zk % ell;
    std::vector<uint64_t> out(t.classes.size(), 0);
    for (std::size_t c = 0; c < t.classes.size(); ++c) {
        int rep = t.classes[c].representative;
        uint64_t acc = 0;
        for (int x = 0; x < g.n; ++x) {
            int y = g.mul(g.mul(g.inv[x], rep), x);
            int e = sc.lam_exp[y];
            if (e >= 0) acc = (acc + zk_pows[e]) % ell;
        }
        out[c] = acc * hsize_inv % ell;
    }
    return out;
}

Cyclotomic induced_char_exact(const FiniteGroup& g, const CharacterTable& t, const SectionChar& sc,
                              int class_index) {
    int rep = t.classes[class_index].representative;
    std::vector<long> counts(sc.kq, 0);
    for (int x = 0; x < g.n; ++x) {
        int y = g.mul(g.mul(g.inv[x], rep), x);
        int e = sc.lam_exp[y];
        if (e >= 0) counts[e] += 1;
    }
    return Cyclotomic::from_power_sum(sc.kq, counts).scale(
        Rat(1, static_cast<long>(sc.h.size())));
}

GA epsilon_idempotent(const FiniteGroup& g, const SectionChar& sc) {
    if (sc.kq == 1) return ga_hat(sc.k);
    GA acc;
    bool first = true;
    for (long p : prime_divisors(sc.kq)) {
        // preimage of the order-p subgroup of H/K
        std::vector<int> m;
        for (int x : sc.h) {
            long e = sc.lam_exp[x];
            if ((e * p) % sc.kq == 0) m.push_back(x);
        }
        GA factor = ga_sub(ga_hat(sc.k), ga_hat(m));
        acc = first ? factor : ga_mul(g, acc, factor);
        first = false;
    }
    return acc;
}

}  // namespace

const StrongShodaPair* SchurEngine::shoda_pair_for(int rc_index) {
    rational_classes();
    if (pair_tried_[rc_index]) return pair_cache_[rc_index].get();
    pair_tried_[rc_index] = 1;
    const RationalCharClass& rc = (*rcs_)[rc_index];
    const CharacterTable& t = table();
    long deg = rc.degree;
    if (g_.n % deg != 0) return nullptr;
    int hsize = static_cast<int>(g_.n / deg);

    for (const auto& h : subgroups()) {
        if (static_cast<int>(h.size()) != hsize) continue;
        for (const auto& k : subgroups()) {
            if (k.size() > h.size() || h.size() % k.size() != 0) continue;
            if (!std::includes(h.begin(), h.end(), k.begin(), k.end())) continue;
            if (!normal_in(g_, k, h)) continue;
            SectionChar sc;
            if (!build_section_char(g_, h, k, sc)) continue;

            // induction test against the orbit, mod ell first
            std::vector<uint64_t> fp = induced_char_mod(g_, t, sc);
            int matched = -1;
            for (int mi : rc.members) {
                if (t.mod_values[mi] == fp) {
                    matched = mi;
                    break;
                }
            }
            if (matched < 0) continue;
            bool exact = true;
            for (int c = 0; c < t.num_classes() && exact; ++c) {
                if (induced_char_exact(g_, t, sc, c) != t.chars[matched].values[c]) exact = false;
            }
            if (!exact) continue;

            // strong Shoda conditions
            std::vector<int> n = normalizer(g_, k);
            if (!std::includes(n.begin(), n.end(), h.begin(), h.end()))
                throw InternalError("shoda_pair_for: H outside N_G(K)");
            if (!normal_in(g_, h, n)) continue;
            {
                // H/K maximal abelian in N/K: self-centralizing image
                std::vector<int> coset_n;
                FiniteGroup nq = section_group(g_, n, k, &coset_n);
                std::vector<bool> in_img(nq.n, false);
                for (int x : h) in_img[coset_n[x]] = true;
                bool maximal = true;
                for (int x = 0; x < nq.n && maximal; ++x) {
                    if (in_img[x]) continue;
                    bool central = true;
                    for (int y = 0; y < nq.n && central; ++y)
                        if (in_img[y] && nq.mul(x, y) != nq.mul(y, x)) central = false;
                    if (central) maximal = false;
                }
                if (!maximal) continue;
            }
            {
                // orthogonality of distinct conjugates of the idempotent
                GA eps = epsilon_idempotent(g_, sc);
                std::vector<bool> in_n(g_.n, false);
                for (int x : n) in_n[x] = true;
                std::vector<bool> covered(g_.n, false);
                for (int x : n) covered[x] = true;
                bool ok = true;
                for (int rep = 0; rep < g_.n && ok; ++rep) {
                    if (covered[rep]) continue;
                    for (int x : n) covered[g_.mul(rep, x)] = true;
                    GA conj = ga_conj(g_, eps, rep);
                    if (!ga_is_zero(ga_mul(g_, eps, conj))) ok = false;
                }
                if (!ok) continue;
            }
            StrongShodaPair pair;
            pair.h = h;
            pair.k = k;
            pair.quotient_order = sc.kq;
            pair.generator = sc.generator_parent;
            pair.rc_index = rc_index;
            pair_cache_[rc_index] = std::make_unique<StrongShodaPair>(std::move(pair));
            return pair_cache_[rc_index].get();
        }
    }
    return nullptr;
}

SimpleComponentDesc SchurEngine::build_strong_shoda_component(int rc_index,
                                                              const StrongShodaPair& p) {
    const RationalCharClass& rc = (*rcs_)[rc_index];
    SectionChar sc;
    if (!build_section_char(g_, p.h, p.k, sc))
        throw InternalError("build_strong_shoda_component: section vanished");
    long kq = sc.kq;
    long K = (kq % 2 == 0) ? kq : 2 * kq;
    if (kq == 1) K = 2;

    std::vector<int> n = normalizer(g_, p.k);
    // left transversal of H in N, identity first
    std::vector<bool> in_h(g_.n, false);
    for (int x : p.h) in_h[x] = true;
    std::vector<int> reps;
    {
        std::vector<bool> covered(g_.n, false);
        for (int x : n) {
            if (covered[x]) continue;
            reps.push_back(x);
            for (int y : p.h) covered[g_.mul(x, y)] = true;
        }
    }
    // acting residue of each transversal element
    int h0 = p.generator;
    std::vector<std::pair<long, int>> w_and_rep;  // (t_w, transversal element)
    for (int r : reps) {
        int conj = g_.conj(h0, r);
        if (sc.lam_exp[conj] < 0)
            throw InternalError("build_strong_shoda_component: conjugate leaves H");
        long tw = (kq == 1) ? 1 : mod_norm(sc.lam_exp[conj], kq);
        if (kq > 1 && gcd_ll(tw, kq) != 1)
            throw InternalError("build_strong_shoda_component: action not a unit");
        w_and_rep.emplace_back(kq == 1 ? 1 % kq : tw, r);
    }
    std::sort(w_and_rep.begin(), w_and_rep.end());
    for (std::size_t i = 1; i < w_and_rep.size(); ++i) {
        if (w_and_rep[i].first == w_and_rep[i - 1].first)
            throw InternalError("build_strong_shoda_component: action not faithful on N/H");
    }

    CyclotomicAlgebra alg;
    alg.conductor = kq;
    alg.root_modulus = K;
    for (auto& [t, r] : w_and_rep) alg.w.push_back(t);
    alg.action = alg.w;
    alg.matrix_size = static_cast<long>(g_.n / n.size());
    int wsz = static_cast<int>(alg.w.size());
    // transversal element for each residue
    std::vector<int> n_of_w(wsz);
    for (int i = 0; i < wsz; ++i) n_of_w[i] = w_and_rep[i].second;
    // rep lookup: coset of any n-element -> transversal index
    std::vector<int> coset_idx(g_.n, -1);
    for (int i = 0; i < wsz; ++i)
        for (int y : p.h) coset_idx[g_.mul(n_of_w[i], y)] = i;
    alg.tau.assign(wsz, std::vector<long>(wsz, 0));
    for (int i = 0; i < wsz; ++i) {
        for (int j = 0; j < wsz; ++j) {
            int prod = g_.mul(n_of_w[i], n_of_w[j]);
            int ij = coset_idx[prod];
            if (ij < 0) throw InternalError("build_strong_shoda_component: transversal closure");
            int hpart = g_.mul(prod, g_.inv[n_of_w[ij]]);
            if (sc.lam_exp[hpart] < 0)
                throw InternalError("build_strong_shoda_component: cocycle outside H");
            // residue sanity: w_i * w_j must match the found coset
            if (kq > 1 && mod_norm(alg.w[i] * alg.w[j], kq) != alg.w[ij])
                throw InternalError("build_strong_shoda_component: action/coset mismatch");
            alg.tau[i][j] = mod_norm(sc.lam_exp[hpart] * (K / kq), K);
        }
    }

    SimpleComponentDesc desc;
    desc.rc_index = rc_index;
    desc.degree = rc.degree;
    desc.orbit_size = rc.orbit_size;
    desc.center_conductor = kq;
    desc.center_fix = alg.w;
    desc.provenance = Provenance::StrongShoda;
    desc.fs = rc.fs;
    desc.alg = std::move(alg);

    // dimension accounting
    if (desc.alg.matrix_size * static_cast<long>(desc.alg.w.size()) != rc.degree)
        throw InternalError("build_strong_shoda_component: degree mismatch");
    long phik = (kq == 1) ? 1 : euler_phi(kq);
    if (phik % static_cast<long>(desc.alg.w.size()) != 0 ||
        phik / static_cast<long>(desc.alg.w.size()) != rc.orbit_size)
        throw InternalError("build_strong_shoda_component: center degree mismatch");
    return desc;
}

SchurData SchurEngine::local_indices(const SimpleComponentDesc& comp) {
    if (comp.provenance == Provenance::BrauerWitt2) return comp.bw_data;
    SchurData sd;
    long inf = (comp.fs == -1) ? 2 : 1;
    long alg_inf = algebra_infty_index(comp.alg);
    if (alg_inf != inf)
        throw InternalError("local_indices: infinite place disagrees with FS indicator");
    sd.local.emplace_back(kInfinitePlace, inf);
    for (long p : prime_divisors(g_.n)) sd.local.emplace_back(p, local_index_at_p(comp.alg, p));
    sd.global = 1;
    for (auto& [pl, ix] : sd.local) sd.global = lcm_ll(sd.global, ix);
    return sd;
}

SimpleComponentDesc SchurEngine::brauer_witt_2_reduction(int rc_index) {
    const RationalCharClass& rc = (*rcs_)[rc_index];
    const CharacterTable& t = table();
    long m = t.exponent;
    int chi = rc.members.front();
    std::vector<long> units_m = prime_residues(m);
    if (units_m.empty()) units_m = {1};

    // subgroups by size descending, then discovery (member-lex) order
    std::vector<const std::vector<int>*> order;
    for (const auto& s : subgroups()) order.push_back(&s);
    std::stable_sort(order.begin(), order.end(),
                     [](const std::vector<int>* a, const std::vector<int>* b) {
                         return a->size() > b->size();
                     });

    for (const auto* ep : order) {
        const std::vector<int>& e = *ep;
        // 2-elementary with respect to Q: odd-order elements form a cyclic
        // normal subgroup with 2-power index
        std::vector<int> odd;
        for (int x : e)
            if (g_.elt_order[x] % 2 == 1) odd.push_back(x);
        long idx = static_cast<long>(e.size() / odd.size());
        if (e.size() % odd.size() != 0 || (idx & (idx - 1)) != 0) continue;
        if (!is_subgroup(g_, odd)) continue;
        bool cyclic = false;
        for (int x : odd)
            if (g_.elt_order[x] == static_cast<int>(odd.size())) cyclic = true;
        if (!cyclic) continue;
        if (!normal_in(g_, odd, e)) continue;

        std::vector<int> to_parent;
        FiniteGroup se = subgroup_as_group(g_, e, &to_parent);
        SchurEngine sub(se);
        const CharacterTable& te = sub.table();
        const auto& rcse = sub.rational_classes();
        long me = te.exponent;

        // restriction of chi to E, as exact values per E-class
        std::vector<Cyclotomic> res_vals;
        for (const auto& ce : te.classes) {
            int parent_elt = to_parent[ce.representative];
            res_vals.push_back(t.chars[chi].values[t.cls_of[parent_elt]]);
        }
        for (std::size_t rce_i = 0; rce_i < rcse.size(); ++rce_i) {
            const RationalCharClass& rce = rcse[rce_i];
            for (int psi : rce.members) {
                // multiplicity <Res chi, psi>
                Cyclotomic acc = Cyclotomic::zero(1);
                for (int ce = 0; ce < te.num_classes(); ++ce) {
                    int invc = te.cls_of[se.inv[te.classes[ce].representative]];
                    Cyclotomic term = res_vals[ce] * te.chars[psi].values[invc];
                    acc += term.scale(Rat(static_cast<long>(te.classes[ce].members.size())));
                }
                Rat mult = acc.to_rational() / Rat(se.n);
                if (rat_den(mult) != 1) throw InternalError("brauer_witt_2_reduction: non-integral multiplicity");
                if (rat_num(mult) % 2 == 0) continue;

                // field condition: [F(psi) : F] odd
                std::vector<long> s_psi_lift;
                for (long u : units_m) {
                    long um = (me == 1) ? 1 : (u % me);
                    bool in_stab = (me == 1);
                    if (!in_stab)
                        in_stab = std::binary_search(rce.stabilizer.begin(), rce.stabilizer.end(),
                                                     um);
                    if (in_stab) s_psi_lift.push_back(u);
                }
                std::vector<long> s_chi = rc.stabilizer;
                std::vector<long> s_fpsi;
                std::set_intersection(s_chi.begin(), s_chi.end(), s_psi_lift.begin(),
                                      s_psi_lift.end(), std::back_inserter(s_fpsi));
                long fdeg = static_cast<long>(s_chi.size() / s_fpsi.size());
                if (fdeg % 2 == 0) continue;

                // component of psi over Q(psi), computed on E (strongly monomial)
                const StrongShodaPair* pe = sub.shoda_pair_for(static_cast<int>(rce_i));
                if (!pe)
                    throw InternalError(
                        "brauer_witt_2_reduction: 2-elementary subgroup not strongly monomial");
                SimpleComponentDesc ce = sub.build_strong_shoda_component(static_cast<int>(rce_i), *pe);
                SchurData sde = sub.local_indices(ce);

                auto locdeg = [&](long p, const std::vector<long>& stab) -> long {
                    GaloisSubgroup tg = galois_t_m(m, p);
                    std::vector<long> tres = tg.residues;
                    if (m == 1) return 1;
                    long cnt = 0;
                    for (long x : tres)
                        if (std::binary_search(stab.begin(), stab.end(), x)) ++cnt;
                    if (cnt == 0) throw InternalError("locdeg: empty intersection");
                    return static_cast<long>(tres.size()) / cnt;
                };

                SchurData sd;
                sd.parity_only = true;
                sd.local.emplace_back(kInfinitePlace, rc.fs == -1 ? 2 : 1);
                for (long p : prime_divisors(g_.n)) {
                    long mpp = sde.index_at(p);
                    long d1 = locdeg(p, s_fpsi) / locdeg(p, s_psi_lift);
                    long transported = mpp / gcd_ll(mpp, d1);
                    sd.local.emplace_back(p, two_part(transported));
                }
                sd.global = 1;
                for (auto& [pl, ix] : sd.local) sd.global = lcm_ll(sd.global, ix);

                SimpleComponentDesc desc;
                desc.rc_index = rc_index;
                desc.degree = rc.degree;
                desc.orbit_size = rc.orbit_size;
                desc.center_conductor = m;
                desc.center_fix = rc.stabilizer;
                desc.provenance = Provenance::BrauerWitt2;
                desc.fs = rc.fs;
                desc.bw_data = std::move(sd);
                return desc;
            }
        }
    }
    throw InternalError("brauer_witt_2_reduction: no admissible (E, psi) found");
}

SimpleComponentDesc SchurEngine::component_for_class(int rc_index) {
    rational_classes();
    if (comp_cache_[rc_index]) return *comp_cache_[rc_index];
    SimpleComponentDesc out;
    const StrongShodaPair* p = shoda_pair_for(rc_index);
    bool done = false;
    if (p) {
        SimpleComponentDesc cand = build_strong_shoda_component(rc_index, *p);
        try {
            local_indices(cand);  // probe the local machinery
            out = std::move(cand);
            done = true;
        } catch (const UnsupportedShapeError&) {
            done = false;
        }
    }
    if (!done) out = brauer_witt_2_reduction(rc_index);
    comp_cache_[rc_index] = std::make_unique<SimpleComponentDesc>(out);
    return out;
}

SOfGroupResult SchurEngine::s_of_group() {
    const auto& rcs = rational_classes();
    std::vector<long> primes = prime_divisors(g_.n);
    SOfGroupResult res;
    long dim = 0;
    for (std::size_t i = 0; i < rcs.size(); ++i) {
        ComponentReport rep;
        rep.desc = component_for_class(static_cast<int>(i));
        rep.sd = local_indices(rep.desc);
        rep.contributes = contributes_to_s(rep.sd, primes);
        dim += rcs[i].orbit_size * rcs[i].degree * rcs[i].degree;
        if (rep.contributes) ++res.s;
        res.components.push_back(std::move(rep));
    }
    if (dim != g_.n) throw InternalError("s_of_group: component dimensions do not sum to |G|");
    return res;
}

KMinusOneResult SchurEngine::k_minus_one() {
    KMinusOneResult out;
    out.rank = r_of_group(g_, table().classes);
    out.r = out.rank.r;
    SOfGroupResult s = s_of_group();
    out.s = s.s;
    out.components = std::move(s.components);
    if (g_.n % 4 != 0 && out.s != 0)
        throw InternalError("k_minus_one: torsion in K_-1 for order not divisible by 4");
    return out;
}

std::vector<StrongShodaPair> strong_shoda_pairs(const FiniteGroup& g) {
    SchurEngine eng(g);
    std::vector<StrongShodaPair> out;
    for (std::size_t i = 0; i < eng.rational_classes().size(); ++i) {
        const StrongShodaPair* p = eng.shoda_pair_for(static_cast<int>(i));
        if (p) out.push_back(*p);
    }
    return out;
}

SOfGroupResult s_of_group(const FiniteGroup& g) {
    SchurEngine eng(g);
    return eng.s_of_group();
}

KMinusOneResult k_minus_one(const FiniteGroup& g) {
    SchurEngine eng(g);
    return eng.k_minus_one();
}

std::string components_tsv(SchurEngine& eng) {
    std::ostringstream os;
    os << "class\tdegree\torbit\tcenter\tmatrix\tprovenance\tlocal_indices\tcontributes\n";
    const auto& rcs = eng.rational_classes();
    std::vector<long> primes = prime_divisors(eng.group().n);
    for (std::size_t i = 0; i < rcs.size(); ++i) {
        SimpleComponentDesc d = eng.component_for_class(static_cast<int>(i));
        SchurData sd = eng.local_indices(d);
        os << (i + 1) << "\t" << d.degree << "\t" << d.orbit_size << "\t";
        os << "Q(z" << d.center_conductor << ")^W\t";
        if (d.provenance == Provenance::StrongShoda)
            os << d.alg.matrix_size;
        else
            os << "-";
        os << "\t";
        switch (d.provenance) {
            case Provenance::StrongShoda: os << "strong-shoda"; break;
            case Provenance::BrauerWitt2: os << "brauer-witt-2"; break;
            case Provenance::QuaternionShortcut: os << "quaternion-shortcut"; break;
        }
        os << "\t";
        bool first = true;
        for (auto& [pl, ix] : sd.local) {
            if (!first) os << ",";
            first = false;
            if (pl == kInfinitePlace)
                os << "inf:" << ix;
            else
                os << pl << ":" << ix;
        }
        os << "\t" << (contributes_to_s(sd, primes) ? 1 : 0) << "\n";
    }
    return os.str();
}

std::string k_minus_one_pretty(const KMinusOneResult& k) {
    if (k.r == 0 && k.s == 0) return "0";
    std::ostringstream os;
    bool first = true;
    if (k.r > 0) {
        os << "Z";
        if (k.r > 1) os << "^" << k.r;
        first = false;
    }
    if (k.s > 0) {
        if (!first) os << " + ";
        if (k.s == 1)
            os << "Z/2";
        else
            os << "(Z/2)^" << k.s;
    }
    return os.str();
}

}  // namespace negk
