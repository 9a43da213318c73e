#include "negk/chartab.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "negk/rank.hpp"

namespace negk {

namespace {

using u64 = uint64_t;

struct Fp {
    u64 p;
    u64 add(u64 a, u64 b) const { return (a + b) % p; }
    u64 sub(u64 a, u64 b) const { return (a + p - b % p) % p; }
    u64 mul(u64 a, u64 b) const { return (a % p) * (b % p) % p; }
    u64 pow(u64 a, u64 e) const {
        u64 r = 1;
        a %= p;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    u64 inv(u64 a) const { return pow(a, p - 2); }
};

long pick_dixon_prime(long m, long n) {
    long ell = m + 1;
    double bound = 2.0 * std::sqrt(static_cast<double>(n));
    if (ell <= static_cast<long>(bound)) ell = static_cast<long>(bound) + 1;
    // smallest prime = 1 (mod m) above the bound
    while (true) {
        if ((ell - 1) % m == 0 && is_prime(ell)) return ell;
        ++ell;
    }
}

u64 primitive_root(const Fp& f) {
    std::vector<long> qs = prime_divisors(static_cast<long>(f.p - 1));
    for (u64 g = 2; g < f.p; ++g) {
        bool ok = true;
        for (long q : qs) {
            if (f.pow(g, (f.p - 1) / q) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) return g;
    }
    throw InternalError("primitive_root: none found");
}

using Vec = std::vector<u64>;
using Mtx = std::vector<Vec>;

// a_{r,j,k} for a fixed first class r, as the k x k matrix M[j][k].
Mtx class_matrix(const FiniteGroup& g, const std::vector<ConjClass>& cc,
                 const std::vector<int>& cls_of, int r, const Fp& f) {
    int k = static_cast<int>(cc.size());
    std::vector<std::vector<long>> counts(k, std::vector<long>(k, 0));
    for (int x : cc[r].members)
        for (int y = 0; y < g.n; ++y) counts[cls_of[y]][cls_of[g.mul(x, y)]] += 1;
    Mtx m(k, Vec(k, 0));
    for (int j = 0; j < k; ++j)
        for (int kk = 0; kk < k; ++kk) {
            long sz = static_cast<long>(cc[kk].members.size());
            if (counts[j][kk] % sz != 0)
                throw InternalError("class_matrix: structure constant not integral");
            m[j][kk] = static_cast<u64>((counts[j][kk] / sz) % static_cast<long>(f.p));
        }
    return m;
}

// Reduced row echelon form; returns pivot columns.
std::vector<int> rref(Mtx& a, const Fp& f) {
    std::vector<int> pivots;
    if (a.empty()) return pivots;
    int rows = static_cast<int>(a.size()), cols = static_cast<int>(a[0].size());
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pr = -1;
        for (int i = r; i < rows; ++i)
            if (a[i][c] != 0) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        std::swap(a[r], a[pr]);
        u64 iv = f.inv(a[r][c]);
        for (int j = 0; j < cols; ++j) a[r][j] = f.mul(a[r][j], iv);
        for (int i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            u64 fac = a[i][c];
            for (int j = 0; j < cols; ++j) a[i][j] = f.sub(a[i][j], f.mul(fac, a[r][j]));
        }
        pivots.push_back(c);
        ++r;
    }
    a.resize(pivots.size());
    return pivots;
}

// Coordinates of w in the RREF basis (rows of basis); w must lie in the span.
Vec coords_in_basis(const Vec& w, const Mtx& basis, const std::vector<int>& pivots, const Fp& f) {
    Vec res = w;
    Vec out(basis.size(), 0);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        u64 c = res[pivots[i]];
        out[i] = c;
        if (c != 0)
            for (std::size_t j = 0; j < res.size(); ++j)
                res[j] = f.sub(res[j], f.mul(c, basis[i][j]));
    }
    for (u64 x : res)
        if (x != 0) throw InternalError("coords_in_basis: vector outside subspace");
    return out;
}

// Characteristic polynomial mod p via Hessenberg reduction (Cohen 2.2.9).
Vec charpoly(Mtx h, const Fp& f) {
    int n = static_cast<int>(h.size());
    for (int m = 1; m < n - 0; ++m) {
        // find pivot in column m-1 below row m
        int piv = -1;
        for (int i = m; i < n; ++i)
            if (h[i][m - 1] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != m) {
            std::swap(h[piv], h[m]);
            for (int i = 0; i < n; ++i) std::swap(h[i][piv], h[i][m]);
        }
        u64 inv_p = f.inv(h[m][m - 1]);
        for (int i = m + 1; i < n; ++i) {
            if (h[i][m - 1] == 0) continue;
            u64 u = f.mul(h[i][m - 1], inv_p);
            for (int j = 0; j < n; ++j) h[i][j] = f.sub(h[i][j], f.mul(u, h[m][j]));
            for (int j = 0; j < n; ++j) h[j][m] = f.add(h[j][m], f.mul(u, h[j][i]));
        }
    }
    // p_0 = 1; p_m(x) = (x - h[m-1][m-1]) p_{m-1}(x) - sum_i ... (Hessenberg recurrence)
    std::vector<Vec> p(n + 1);
    p[0] = {1};
    for (int m = 1; m <= n; ++m) {
        p[m].assign(m + 1, 0);
        for (int i = 0; i < m; ++i) {
            p[m][i + 1] = f.add(p[m][i + 1], p[m - 1][i]);
            p[m][i] = f.sub(p[m][i], f.mul(h[m - 1][m - 1], p[m - 1][i]));
        }
        u64 t = 1;
        for (int i = 1; i < m; ++i) {
            t = f.mul(t, h[m - i][m - i - 1]);
            u64 c = f.mul(t, h[m - i - 1][m - 1]);
            if (c == 0) continue;
            for (std::size_t j = 0; j < p[m - i - 1].size(); ++j)
                p[m][j] = f.sub(p[m][j], f.mul(c, p[m - i - 1][j]));
        }
    }
    return p[n];
}

std::vector<u64> poly_roots(const Vec& poly, const Fp& f) {
    std::vector<u64> roots;
    for (u64 x = 0; x < f.p; ++x) {
        u64 acc = 0;
        for (std::size_t i = poly.size(); i-- > 0;) acc = f.add(f.mul(acc, x), poly[i]);
        if (acc == 0) roots.push_back(x);
    }
    return roots;
}

struct Subspace {
    Mtx basis;               // RREF rows, ambient dimension k
    std::vector<int> pivots;
};

// Split V into eigenspaces of the operator given by mat (acting on row
// vectors: w -> w * mat^T ... we use (M v)_j = sum_k M[j][k] v[k]).
std::vector<Subspace> split_subspace(const Subspace& v, const Mtx& mat, const Fp& f) {
    int k = static_cast<int>(mat.size());
    int d = static_cast<int>(v.basis.size());
    // restriction B: image of each basis vector, in basis coordinates
    Mtx b(d, Vec(d, 0));
    for (int i = 0; i < d; ++i) {
        Vec img(k, 0);
        for (int j = 0; j < k; ++j) {
            u64 acc = 0;
            for (int kk = 0; kk < k; ++kk) acc = f.add(acc, f.mul(mat[j][kk], v.basis[i][kk]));
            img[j] = acc;
        }
        Vec c = coords_in_basis(img, v.basis, v.pivots, f);
        for (int j = 0; j < d; ++j) b[j][i] = c[j];  // column i = coords of image of e_i
    }
    std::vector<u64> eigs = poly_roots(charpoly(b, f), f);
    std::sort(eigs.begin(), eigs.end());
    eigs.erase(std::unique(eigs.begin(), eigs.end()), eigs.end());
    if (eigs.size() <= 1) return {v};

    std::vector<Subspace> out;
    for (u64 lam : eigs) {
        // kernel of (B - lam I)
        Mtx m(d, Vec(d, 0));
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) m[i][j] = (i == j) ? f.sub(b[i][j], lam) : b[i][j];
        Mtx mm = m;
        std::vector<int> piv = rref(mm, f);
        // free columns give kernel vectors
        std::vector<bool> is_piv(d, false);
        for (int c : piv) is_piv[c] = true;
        Mtx kernel;
        for (int c = 0; c < d; ++c) {
            if (is_piv[c]) continue;
            Vec kv(d, 0);
            kv[c] = 1;
            for (std::size_t r = 0; r < piv.size(); ++r) kv[piv[r]] = f.sub(0, mm[r][c]);
            kernel.push_back(kv);
        }
        if (kernel.empty()) continue;
        // map kernel coordinates back to ambient space
        Mtx amb;
        for (const Vec& kv : kernel) {
            Vec w(k, 0);
            for (int i = 0; i < d; ++i) {
                if (kv[i] == 0) continue;
                for (int j = 0; j < k; ++j) w[j] = f.add(w[j], f.mul(kv[i], v.basis[i][j]));
            }
            amb.push_back(w);
        }
        Subspace s;
        s.basis = amb;
        s.pivots = rref(s.basis, f);
        out.push_back(std::move(s));
    }
    std::size_t total = 0;
    for (const auto& s : out) total += s.basis.size();
    if (total != static_cast<std::size_t>(d))
        throw InternalError("split_subspace: eigenspace dimensions do not add up");
    return out;
}

}  // namespace

std::vector<std::vector<std::vector<long>>> class_mult_coefficients(
    const FiniteGroup& g, const std::vector<ConjClass>& cc) {
    int k = static_cast<int>(cc.size());
    std::vector<int> cls_of = class_of_element(g, cc);
    std::vector<std::vector<std::vector<long>>> a(
        k, std::vector<std::vector<long>>(k, std::vector<long>(k, 0)));
    for (int x = 0; x < g.n; ++x)
        for (int y = 0; y < g.n; ++y) a[cls_of[x]][cls_of[y]][cls_of[g.mul(x, y)]] += 1;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            for (int kk = 0; kk < k; ++kk) {
                long sz = static_cast<long>(cc[kk].members.size());
                if (a[i][j][kk] % sz != 0)
                    throw InternalError("class_mult_coefficients: not integral");
                a[i][j][kk] /= sz;
            }
    return a;
}

CharacterTable character_table(const FiniteGroup& g) {
    CharacterTable t;
    t.classes = conjugacy_classes(g);
    t.cls_of = class_of_element(g, t.classes);
    t.exponent = g.exponent;
    int k = t.num_classes();
    long m = g.exponent;
    Fp f{static_cast<u64>(pick_dixon_prime(m, g.n))};
    t.ell = static_cast<long>(f.p);

    // common eigenvectors of the class-sum matrices over F_ell
    std::vector<Subspace> subs;
    {
        Subspace whole;
        whole.basis.assign(k, Vec(k, 0));
        for (int i = 0; i < k; ++i) whole.basis[i][i] = 1;
        for (int i = 0; i < k; ++i) whole.pivots.push_back(i);
        subs.push_back(std::move(whole));
    }
    auto all_split = [&] {
        for (const auto& s : subs)
            if (s.basis.size() > 1) return false;
        return true;
    };
    for (int r = 0; r < k && !all_split(); ++r) {
        Mtx mat = class_matrix(g, t.classes, t.cls_of, r, f);
        std::vector<Subspace> next;
        for (const auto& s : subs) {
            if (s.basis.size() == 1) {
                next.push_back(s);
                continue;
            }
            for (auto& piece : split_subspace(s, mat, f)) next.push_back(std::move(piece));
        }
        subs = std::move(next);
    }
    if (!all_split()) {
        // deterministic random combinations as a fallback; the per-matrix sweep
        // above already separates central characters in theory
        u64 seed = 0x9e3779b97f4a7c15ULL;
        for (int attempt = 0; attempt < 32 && !all_split(); ++attempt) {
            Mtx mat(k, Vec(k, 0));
            for (int r = 0; r < k; ++r) {
                seed = seed * 6364136223846793005ULL + 1442695040888963407ULL;
                u64 c = (seed >> 33) % f.p;
                if (c == 0) continue;
                Mtx cm = class_matrix(g, t.classes, t.cls_of, r, f);
                for (int i = 0; i < k; ++i)
                    for (int j = 0; j < k; ++j) mat[i][j] = f.add(mat[i][j], f.mul(c, cm[i][j]));
            }
            std::vector<Subspace> next;
            for (const auto& s : subs) {
                if (s.basis.size() == 1) {
                    next.push_back(s);
                    continue;
                }
                for (auto& piece : split_subspace(s, mat, f)) next.push_back(std::move(piece));
            }
            subs = std::move(next);
        }
        if (!all_split()) throw InternalError("character_table: failed to split eigenspaces");
    }

    // inverse-class permutation and class sizes
    std::vector<int> inv_class(k);
    std::vector<u64> h(k), h_inv(k);
    for (int i = 0; i < k; ++i) {
        inv_class[i] = t.cls_of[g.inv[t.classes[i].representative]];
        h[i] = static_cast<u64>(t.classes[i].members.size() % f.p);
        h_inv[i] = f.inv(h[i]);
    }
    long sqrt_n = static_cast<long>(std::sqrt(static_cast<double>(g.n))) + 1;
    while (sqrt_n * sqrt_n > g.n) --sqrt_n;

    u64 z = f.pow(primitive_root(f), (f.p - 1) / static_cast<u64>(m));  // primitive m-th root
    t.zeta_mod = static_cast<long>(z);

    struct RawChar {
        long degree;
        std::vector<u64> modvals;
        std::vector<Cyclotomic> values;
    };
    std::vector<RawChar> raw;
    for (const auto& s : subs) {
        Vec v = s.basis[0];
        if (v[0] == 0) throw InternalError("character_table: eigenvector vanishes at identity");
        u64 scale = f.inv(v[0]);
        for (auto& x : v) x = f.mul(x, scale);
        // degree from sum_i v_i v_{i*} / h_i = n / d^2
        u64 srec = 0;
        for (int i = 0; i < k; ++i) srec = f.add(srec, f.mul(f.mul(v[i], v[inv_class[i]]), h_inv[i]));
        u64 d2 = f.mul(static_cast<u64>(g.n % static_cast<long>(f.p)), f.inv(srec));
        long degree = -1;
        for (long r = 1; r <= sqrt_n; ++r) {
            if (f.mul(static_cast<u64>(r), static_cast<u64>(r)) == d2) {
                degree = r;
                break;
            }
        }
        if (degree < 0) throw InternalError("character_table: no integral degree");
        RawChar rc;
        rc.degree = degree;
        rc.modvals.assign(k, 0);
        for (int i = 0; i < k; ++i)
            rc.modvals[i] = f.mul(f.mul(static_cast<u64>(degree), v[i]), h_inv[i]);
        // lift each class value through the power map DFT
        rc.values.assign(k, Cyclotomic::zero(m));
        for (int i = 0; i < k; ++i) {
            int rep = t.classes[i].representative;
            long o = g.elt_order[rep];
            u64 zo = f.pow(z, static_cast<u64>(m / o));
            u64 zo_inv = f.inv(zo);
            u64 o_inv = f.inv(static_cast<u64>(o % static_cast<long>(f.p)));
            std::vector<long> coeffs(m, 0);
            long total = 0;
            for (long u = 0; u < o; ++u) {
                u64 acc = 0;
                for (long vexp = 0; vexp < o; ++vexp) {
                    u64 val = rc.modvals[t.cls_of[g.power(rep, vexp)]];
                    acc = f.add(acc, f.mul(val, f.pow(zo_inv, static_cast<u64>((u * vexp) % o))));
                }
                u64 nu = f.mul(acc, o_inv);
                if (nu > static_cast<u64>(rc.degree))
                    throw InternalError("character_table: eigenvalue multiplicity out of range");
                coeffs[(u * (m / o)) % m] += static_cast<long>(nu);
                total += static_cast<long>(nu);
            }
            if (total != rc.degree)
                throw InternalError("character_table: multiplicities do not sum to degree");
            rc.values[i] = Cyclotomic::from_power_sum(m, coeffs);
        }
        if (rc.values[0].to_rational() != Rat(rc.degree))
            throw InternalError("character_table: identity value mismatch");
        raw.push_back(std::move(rc));
    }
    if (static_cast<int>(raw.size()) != k)
        throw InternalError("character_table: wrong number of characters");

    std::sort(raw.begin(), raw.end(), [](const RawChar& a, const RawChar& b) {
        if (a.degree != b.degree) return a.degree < b.degree;
        for (std::size_t i = 0; i < a.values.size(); ++i) {
            int c = Cyclotomic::cmp(a.values[i], b.values[i]);
            if (c != 0) return c < 0;
        }
        return false;
    });
    long deg_sq = 0;
    for (const auto& rc : raw) deg_sq += rc.degree * rc.degree;
    if (deg_sq != g.n) throw InternalError("character_table: degree squares do not sum to |G|");
    for (auto& rc : raw) {
        Character c;
        c.degree = rc.degree;
        c.values = std::move(rc.values);
        t.chars.push_back(std::move(c));
        t.mod_values.push_back(std::move(rc.modvals));
    }
    return t;
}

int fs_indicator(const FiniteGroup& g, const CharacterTable& t, int chi) {
    const Character& c = t.chars[chi];
    Cyclotomic acc = Cyclotomic::zero(t.exponent);
    for (int i = 0; i < t.num_classes(); ++i) {
        int rep = t.classes[i].representative;
        int sq_class = t.cls_of[g.mul(rep, rep)];
        acc += c.values[sq_class].scale(Rat(static_cast<long>(t.classes[i].members.size())));
    }
    Rat nu = acc.to_rational() / Rat(g.n);
    if (nu != Rat(-1) && nu != Rat(0) && nu != Rat(1))
        throw InternalError("fs_indicator: non-integral indicator");
    return static_cast<int>(nu);
}

std::vector<RationalCharClass> rational_character_classes(const FiniteGroup& g,
                                                          const CharacterTable& t) {
    int k = t.num_classes();
    long m = t.exponent;
    std::map<std::vector<u64>, int> lookup;
    for (int i = 0; i < k; ++i) lookup[t.mod_values[i]] = i;

    std::vector<long> units = prime_residues(m);
    if (units.empty()) units = {1};
    // power_class permutation per unit t: column permutation of mod values
    std::vector<int> assigned(k, -1);
    std::vector<RationalCharClass> out;
    for (int i = 0; i < k; ++i) {
        if (assigned[i] >= 0) continue;
        RationalCharClass rc;
        rc.degree = t.chars[i].degree;
        std::vector<int> members;
        for (long u : units) {
            std::vector<u64> permuted(k);
            for (int c = 0; c < k; ++c)
                permuted[c] = t.mod_values[i][power_class(g, t.classes, t.cls_of, c, u)];
            auto it = lookup.find(permuted);
            if (it == lookup.end())
                throw InternalError("rational_character_classes: Galois image not in table");
            if (it->second == i) rc.stabilizer.push_back(u);
            members.push_back(it->second);
        }
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());
        for (int c : members) assigned[c] = static_cast<int>(out.size());
        rc.members = members;
        rc.orbit_size = static_cast<long>(members.size());
        rc.fs = fs_indicator(g, t, i);
        out.push_back(std::move(rc));
    }
    // Berman cross-check against the rational conjugacy cell count
    std::size_t cells = rational_classes(g, t.classes).size();
    if (cells != out.size())
        throw InternalError("rational_character_classes: Berman count mismatch");
    return out;
}

std::string character_table_tsv(const FiniteGroup& g, const CharacterTable& t) {
    std::ostringstream os;
    os << "class";
    for (int i = 0; i < t.num_classes(); ++i) os << "\t" << (i + 1);
    os << "\nsize";
    for (const auto& c : t.classes) os << "\t" << c.members.size();
    os << "\norder";
    for (const auto& c : t.classes) os << "\t" << c.element_order;
    os << "\n";
    for (std::size_t j = 0; j < t.chars.size(); ++j) {
        os << "X" << (j + 1);
        for (const auto& v : t.chars[j].values) os << "\t" << v.str();
        os << "\n";
    }
    return os.str();
}

}  // namespace negk
