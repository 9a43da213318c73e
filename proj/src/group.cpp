#include "negk/group.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <queue>
#include <set>

namespace negk {

int FiniteGroup::power(int g, long k) const {
    long o = elt_order[g];
    k %= o;
    if (k < 0) k += o;
    int acc = 0;
    int base = g;
    while (k > 0) {
        if (k & 1) acc = mul(acc, base);
        base = mul(base, base);
        k >>= 1;
    }
    return acc;
}

bool FiniteGroup::is_abelian() const {
    for (int a : generators)
        for (int b : generators)
            if (mul(a, b) != mul(b, a)) return false;
    return true;
}

FiniteGroup group_from_table(int n, std::vector<int32_t> table, std::vector<int> generators,
                             const std::string& label) {
    FiniteGroup g;
    g.n = n;
    g.table = std::move(table);
    g.label = label;
    g.inv.assign(n, -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (g.mul(a, b) == 0) {
                g.inv[a] = b;
                break;
            }
        }
        if (g.inv[a] < 0) throw InternalError("group_from_table: missing inverse");
    }
    g.elt_order.assign(n, 1);
    g.exponent = 1;
    for (int a = 0; a < n; ++a) {
        int x = a, k = 1;
        while (x != 0) {
            x = g.mul(x, a);
            ++k;
        }
        g.elt_order[a] = k;
        g.exponent = lcm_ll(g.exponent, k);
    }
    if (generators.empty() && n > 1) {
        for (int a = 1; a < n; ++a) generators.push_back(a);
    }
    g.generators = std::move(generators);
    return g;
}

FiniteGroup group_from_generators(const std::vector<Perm>& gens, int cap,
                                  const std::string& label) {
    int degree = 1;
    for (const Perm& p : gens) degree = std::max(degree, static_cast<int>(p.size()));
    std::vector<Perm> gg;
    for (const Perm& p : gens) gg.push_back(perm_pad(p, degree));

    std::vector<Perm> elems{perm_identity(degree)};
    std::map<Perm, int> index{{elems[0], 0}};
    for (std::size_t head = 0; head < elems.size(); ++head) {
        for (const Perm& g : gg) {
            Perm y = perm_compose(elems[head], g);
            if (index.emplace(y, static_cast<int>(elems.size())).second) {
                elems.push_back(std::move(y));
                if (static_cast<int>(elems.size()) > cap)
                    throw SizeLimitError("group closure exceeds cap of " + std::to_string(cap));
            }
        }
    }
    int n = static_cast<int>(elems.size());
    std::vector<int32_t> table(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            table[static_cast<std::size_t>(a) * n + b] = index.at(perm_compose(elems[a], elems[b]));
    std::vector<int> gen_idx;
    for (const Perm& g : gg) {
        int i = index.at(g);
        if (i != 0 && std::find(gen_idx.begin(), gen_idx.end(), i) == gen_idx.end())
            gen_idx.push_back(i);
    }
    FiniteGroup out = group_from_table(n, std::move(table), std::move(gen_idx), label);
    out.element_perms = std::move(elems);
    return out;
}

FiniteGroup builtin_cyclic(int k) {
    if (k < 1) throw ArgumentError("Cyclic: order must be >= 1");
    std::vector<int32_t> table(static_cast<std::size_t>(k) * k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) table[static_cast<std::size_t>(i) * k + j] = (i + j) % k;
    std::vector<int> gens;
    if (k > 1) gens.push_back(1);
    return group_from_table(k, std::move(table), std::move(gens), "C" + std::to_string(k));
}

FiniteGroup builtin_dihedral(int order) {
    if (order < 2 || order % 2 != 0) throw ArgumentError("Dihedral: order must be even and >= 2");
    int k = order / 2;
    // elements: r^i -> i, r^i s -> k + i
    auto idx = [&](int i, int j) { return ((i % k) + k) % k + (j ? k : 0); };
    int n = order;
    std::vector<int32_t> table(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
            table[static_cast<std::size_t>(idx(i, 0)) * n + idx(j, 0)] = idx(i + j, 0);
            table[static_cast<std::size_t>(idx(i, 0)) * n + idx(j, 1)] = idx(i + j, 1);
            table[static_cast<std::size_t>(idx(i, 1)) * n + idx(j, 0)] = idx(i - j, 1);
            table[static_cast<std::size_t>(idx(i, 1)) * n + idx(j, 1)] = idx(i - j, 0);
        }
    }
    std::vector<int> gens;
    if (k > 1) gens.push_back(1);
    gens.push_back(k);
    return group_from_table(n, std::move(table), std::move(gens), "D" + std::to_string(order));
}

FiniteGroup builtin_dicyclic(int k) {
    if (k < 1) throw ArgumentError("Dicyclic: parameter must be >= 1");
    int m = 2 * k;  // |<a>|
    int n = 4 * k;
    // elements: a^i -> i, a^i b -> m + i; b a b^-1 = a^-1, b^2 = a^k
    auto idx = [&](int i, int j) { return ((i % m) + m) % m + (j ? m : 0); };
    std::vector<int32_t> table(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            table[static_cast<std::size_t>(idx(i, 0)) * n + idx(j, 0)] = idx(i + j, 0);
            table[static_cast<std::size_t>(idx(i, 0)) * n + idx(j, 1)] = idx(i + j, 1);
            table[static_cast<std::size_t>(idx(i, 1)) * n + idx(j, 0)] = idx(i - j, 1);
            table[static_cast<std::size_t>(idx(i, 1)) * n + idx(j, 1)] = idx(i - j + k, 0);
        }
    }
    std::vector<int> gens{1, m};
    return group_from_table(n, std::move(table), std::move(gens), "Dic" + std::to_string(k));
}

FiniteGroup builtin_symmetric(int k) {
    if (k < 1 || k > 5) throw ArgumentError("Sym: parameter must be in 1..5");
    if (k == 1) return builtin_cyclic(1);
    std::vector<Perm> gens;
    gens.push_back(parse_cycles("(1,2)"));
    if (k > 2) {
        std::string cyc = "(1";
        for (int i = 2; i <= k; ++i) cyc += "," + std::to_string(i);
        cyc += ")";
        gens.push_back(parse_cycles(cyc));
    }
    FiniteGroup g = group_from_generators(gens, kDefaultOrderCap, "S" + std::to_string(k));
    return g;
}

FiniteGroup builtin_alternating(int k) {
    if (k < 1 || k > 5) throw ArgumentError("Alt: parameter must be in 1..5");
    if (k <= 2) return builtin_cyclic(1);
    std::vector<Perm> gens;
    if (k == 3) {
        gens.push_back(parse_cycles("(1,2,3)"));
    } else if (k == 4) {
        gens.push_back(parse_cycles("(1,2,3)"));
        gens.push_back(parse_cycles("(2,3,4)"));
    } else {
        gens.push_back(parse_cycles("(1,2,3)"));
        gens.push_back(parse_cycles("(3,4,5)"));
    }
    return group_from_generators(gens, kDefaultOrderCap, "A" + std::to_string(k));
}

namespace {

// 2x2 matrices over F_p with determinant 1, generated from the two standard
// transvections.
FiniteGroup sl2(int p, const std::string& label) {
    using Mat = std::array<int, 4>;
    auto mulmat = [&](const Mat& a, const Mat& b) {
        Mat c;
        c[0] = (a[0] * b[0] + a[1] * b[2]) % p;
        c[1] = (a[0] * b[1] + a[1] * b[3]) % p;
        c[2] = (a[2] * b[0] + a[3] * b[2]) % p;
        c[3] = (a[2] * b[1] + a[3] * b[3]) % p;
        return c;
    };
    Mat id{1, 0, 0, 1};
    std::vector<Mat> gens{{1, 1, 0, 1}, {1, 0, 1, 1}};
    std::vector<Mat> elems{id};
    std::map<Mat, int> index{{id, 0}};
    for (std::size_t head = 0; head < elems.size(); ++head) {
        for (const Mat& g : gens) {
            Mat y = mulmat(elems[head], g);
            if (index.emplace(y, static_cast<int>(elems.size())).second) elems.push_back(y);
        }
    }
    int n = static_cast<int>(elems.size());
    std::vector<int32_t> table(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            table[static_cast<std::size_t>(a) * n + b] = index.at(mulmat(elems[a], elems[b]));
    return group_from_table(n, std::move(table), {index.at(gens[0]), index.at(gens[1])}, label);
}

}  // namespace

FiniteGroup builtin_sl23() { return sl2(3, "SL(2,3)"); }
FiniteGroup builtin_sl25() { return sl2(5, "SL(2,5)"); }

namespace {

// a + b*sqrt(2) with exact rational a, b
struct QC {
    Rat a, b;
    bool operator<(const QC& o) const {
        if (a != o.a) return a < o.a;
        return b < o.b;
    }
    bool operator==(const QC& o) const { return a == o.a && b == o.b; }
};
QC qc_add(const QC& x, const QC& y) { return {x.a + y.a, x.b + y.b}; }
QC qc_sub(const QC& x, const QC& y) { return {x.a - y.a, x.b - y.b}; }
QC qc_mul(const QC& x, const QC& y) { return {x.a * y.a + 2 * x.b * y.b, x.a * y.b + x.b * y.a}; }

using Quat = std::array<QC, 4>;

Quat quat_mul(const Quat& p, const Quat& q) {
    Quat r;
    r[0] = qc_sub(qc_sub(qc_sub(qc_mul(p[0], q[0]), qc_mul(p[1], q[1])), qc_mul(p[2], q[2])),
                  qc_mul(p[3], q[3]));
    r[1] = qc_sub(qc_add(qc_add(qc_mul(p[0], q[1]), qc_mul(p[1], q[0])), qc_mul(p[2], q[3])),
                  qc_mul(p[3], q[2]));
    r[2] = qc_add(qc_add(qc_sub(qc_mul(p[0], q[2]), qc_mul(p[1], q[3])), qc_mul(p[2], q[0])),
                  qc_mul(p[3], q[1]));
    r[3] = qc_add(qc_sub(qc_add(qc_mul(p[0], q[3]), qc_mul(p[1], q[2])), qc_mul(p[2], q[1])),
                  qc_mul(p[3], q[0]));
    return r;
}

}  // namespace

FiniteGroup builtin_binary_octahedral() {
    Rat half(1, 2);
    QC zero{Rat(0), Rat(0)};
    Quat id{QC{Rat(1), Rat(0)}, zero, zero, zero};
    // s = (1 + i + j + k)/2 (order 6), t = (1 + i)/sqrt(2) (order 8)
    Quat s{QC{half, Rat(0)}, QC{half, Rat(0)}, QC{half, Rat(0)}, QC{half, Rat(0)}};
    Quat t{QC{Rat(0), half}, QC{Rat(0), half}, zero, zero};
    std::vector<Quat> gens{s, t};
    std::vector<Quat> elems{id};
    std::map<Quat, int> index{{id, 0}};
    for (std::size_t head = 0; head < elems.size(); ++head) {
        for (const Quat& g : gens) {
            Quat y = quat_mul(elems[head], g);
            if (index.emplace(y, static_cast<int>(elems.size())).second) elems.push_back(y);
        }
    }
    int n = static_cast<int>(elems.size());
    if (n != 48) throw InternalError("binary octahedral closure has wrong order");
    std::vector<int32_t> table(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            table[static_cast<std::size_t>(a) * n + b] = index.at(quat_mul(elems[a], elems[b]));
    return group_from_table(n, std::move(table), {index.at(s), index.at(t)}, "BinO");
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
    int n = a.n * b.n;
    std::vector<int32_t> table(static_cast<std::size_t>(n) * n);
    auto idx = [&](int x, int y) { return x * b.n + y; };
    for (int x1 = 0; x1 < a.n; ++x1)
        for (int y1 = 0; y1 < b.n; ++y1)
            for (int x2 = 0; x2 < a.n; ++x2)
                for (int y2 = 0; y2 < b.n; ++y2)
                    table[static_cast<std::size_t>(idx(x1, y1)) * n + idx(x2, y2)] =
                        idx(a.mul(x1, x2), b.mul(y1, y2));
    std::vector<int> gens;
    for (int g : a.generators) gens.push_back(idx(g, 0));
    for (int g : b.generators) gens.push_back(idx(0, g));
    return group_from_table(n, std::move(table), std::move(gens),
                            a.label + " x " + b.label);
}

std::vector<ConjClass> conjugacy_classes(const FiniteGroup& g) {
    std::vector<ConjClass> out;
    std::vector<bool> seen(g.n, false);
    for (int x = 0; x < g.n; ++x) {
        if (seen[x]) continue;
        // orbit of x under conjugation by the generators
        std::vector<int> members{x};
        seen[x] = true;
        for (std::size_t head = 0; head < members.size(); ++head) {
            for (int gen : g.generators) {
                int y = g.conj(members[head], gen);
                if (!seen[y]) {
                    seen[y] = true;
                    members.push_back(y);
                }
            }
        }
        std::sort(members.begin(), members.end());
        ConjClass c;
        c.representative = members.front();
        c.element_order = g.elt_order[members.front()];
        c.members = std::move(members);
        out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end(), [](const ConjClass& a, const ConjClass& b) {
        if (a.element_order != b.element_order) return a.element_order < b.element_order;
        return a.members.front() < b.members.front();
    });
    return out;
}

std::vector<int> class_of_element(const FiniteGroup& g, const std::vector<ConjClass>& cc) {
    std::vector<int> cls(g.n, -1);
    for (std::size_t i = 0; i < cc.size(); ++i)
        for (int x : cc[i].members) cls[x] = static_cast<int>(i);
    return cls;
}

int power_class(const FiniteGroup& g, const std::vector<ConjClass>& cc,
                const std::vector<int>& cls_of, int c, long t) {
    return cls_of[g.power(cc[c].representative, t)];
}

namespace {

std::vector<int> subgroup_closure(const FiniteGroup& g, std::vector<int> seed) {
    std::vector<bool> in(g.n, false);
    std::vector<int> members{0};
    in[0] = true;
    for (int x : seed) {
        if (!in[x]) {
            in[x] = true;
            members.push_back(x);
        }
    }
    for (std::size_t head = 0; head < members.size(); ++head) {
        for (std::size_t j = 0; j < members.size(); ++j) {
            int y = g.mul(members[head], members[j]);
            if (!in[y]) {
                in[y] = true;
                members.push_back(y);
            }
            y = g.mul(members[j], members[head]);
            if (!in[y]) {
                in[y] = true;
                members.push_back(y);
            }
        }
    }
    std::sort(members.begin(), members.end());
    return members;
}

}  // namespace

std::vector<NormalSubgroupDesc> normal_subgroups(const FiniteGroup& g) {
    std::set<std::vector<int>> found;
    found.insert({0});
    std::vector<std::vector<int>> work;
    for (const ConjClass& c : conjugacy_classes(g)) {
        std::vector<int> cl = subgroup_closure(g, c.members);
        if (found.insert(cl).second) work.push_back(cl);
    }
    // close under joins
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<std::vector<int>> snapshot(found.begin(), found.end());
        for (std::size_t i = 0; i < snapshot.size(); ++i) {
            for (std::size_t j = i + 1; j < snapshot.size(); ++j) {
                std::vector<int> seed = snapshot[i];
                seed.insert(seed.end(), snapshot[j].begin(), snapshot[j].end());
                std::vector<int> join = subgroup_closure(g, seed);
                if (found.insert(join).second) changed = true;
            }
        }
    }
    std::vector<NormalSubgroupDesc> out;
    for (const auto& m : found) {
        NormalSubgroupDesc d;
        d.members = m;
        d.order = static_cast<int>(m.size());
        out.push_back(std::move(d));
    }
    std::sort(out.begin(), out.end(), [](const NormalSubgroupDesc& a, const NormalSubgroupDesc& b) {
        if (a.order != b.order) return a.order < b.order;
        return a.members < b.members;
    });
    return out;
}

FiniteGroup quotient_group(const FiniteGroup& g, const NormalSubgroupDesc& nsub,
                           std::vector<int>* coset_map) {
    std::vector<bool> in_n(g.n, false);
    for (int x : nsub.members) in_n[x] = true;
    if (!in_n[0]) throw ArgumentError("quotient_group: subgroup must contain the identity");
    for (int x : nsub.members)
        for (int gen : g.generators)
            if (!in_n[g.conj(x, gen)])
                throw ArgumentError("quotient_group: subgroup is not normal");

    std::vector<int> coset(g.n, -1);
    std::vector<int> reps;
    for (int x = 0; x < g.n; ++x) {
        if (coset[x] >= 0) continue;
        int ci = static_cast<int>(reps.size());
        reps.push_back(x);
        for (int y : nsub.members) coset[g.mul(x, y)] = ci;
    }
    int qn = static_cast<int>(reps.size());
    std::vector<int32_t> table(static_cast<std::size_t>(qn) * qn);
    for (int a = 0; a < qn; ++a)
        for (int b = 0; b < qn; ++b)
            table[static_cast<std::size_t>(a) * qn + b] = coset[g.mul(reps[a], reps[b])];
    std::vector<int> gens;
    for (int gen : g.generators) {
        int c = coset[gen];
        if (c != 0 && std::find(gens.begin(), gens.end(), c) == gens.end()) gens.push_back(c);
    }
    if (coset_map) *coset_map = coset;
    return group_from_table(qn, std::move(table), std::move(gens),
                            g.label.empty() ? "quotient" : g.label + "/N" + std::to_string(nsub.order));
}

std::vector<Perm> regular_generators(const FiniteGroup& g) {
    std::vector<Perm> out;
    for (int gen : g.generators) {
        Perm p(g.n);
        for (int x = 0; x < g.n; ++x) p[x] = g.mul(gen, x);
        out.push_back(std::move(p));
    }
    return out;
}

}  // namespace negk
