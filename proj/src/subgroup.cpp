#include "negk/subgroup.hpp"

#include <algorithm>
#include <set>

namespace negk {

std::vector<int> subgroup_generated(const FiniteGroup& g, const std::vector<int>& seed) {
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

std::vector<std::vector<int>> all_subgroups(const FiniteGroup& g) {
    std::set<std::vector<int>> found;
    std::vector<std::vector<int>> cyclic;
    {
        std::set<std::vector<int>> cyc_set;
        for (int x = 0; x < g.n; ++x) {
            std::vector<int> c{0};
            int y = x;
            while (y != 0) {
                c.push_back(y);
                y = g.mul(y, x);
            }
            std::sort(c.begin(), c.end());
            cyc_set.insert(c);
        }
        cyclic.assign(cyc_set.begin(), cyc_set.end());
        found = std::move(cyc_set);
    }
    std::vector<std::vector<int>> work(found.begin(), found.end());
    for (std::size_t head = 0; head < work.size(); ++head) {
        for (const auto& c : cyclic) {
            if (std::includes(work[head].begin(), work[head].end(), c.begin(), c.end())) continue;
            std::vector<int> seed = work[head];
            seed.insert(seed.end(), c.begin(), c.end());
            std::vector<int> join = subgroup_generated(g, seed);
            if (found.insert(join).second) work.push_back(std::move(join));
        }
    }
    std::vector<std::vector<int>> out(found.begin(), found.end());
    std::sort(out.begin(), out.end(), [](const std::vector<int>& a, const std::vector<int>& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

bool is_subgroup(const FiniteGroup& g, const std::vector<int>& members) {
    std::vector<bool> in(g.n, false);
    for (int x : members) in[x] = true;
    if (!in[0]) return false;
    for (int x : members)
        for (int y : members)
            if (!in[g.mul(x, y)]) return false;
    return true;
}

std::vector<int> normalizer(const FiniteGroup& g, const std::vector<int>& s) {
    std::vector<bool> in_s(g.n, false);
    for (int x : s) in_s[x] = true;
    std::vector<int> out;
    for (int t = 0; t < g.n; ++t) {
        bool ok = true;
        for (int x : s) {
            if (!in_s[g.conj(x, t)]) {
                ok = false;
                break;
            }
        }
        if (ok) out.push_back(t);
    }
    return out;
}

bool normal_in(const FiniteGroup& g, const std::vector<int>& k, const std::vector<int>& h) {
    std::vector<bool> in_k(g.n, false);
    for (int x : k) in_k[x] = true;
    for (int t : h)
        for (int x : k)
            if (!in_k[g.conj(x, t)]) return false;
    return true;
}

FiniteGroup subgroup_as_group(const FiniteGroup& g, const std::vector<int>& h,
                              std::vector<int>* to_parent) {
    int n = static_cast<int>(h.size());
    std::vector<int> idx(g.n, -1);
    // identity first, then parent index order (h is sorted with h[0] == 0)
    for (int i = 0; i < n; ++i) idx[h[i]] = i;
    std::vector<int32_t> table(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int prod = g.mul(h[a], h[b]);
            if (idx[prod] < 0) throw ArgumentError("subgroup_as_group: set not closed");
            table[static_cast<std::size_t>(a) * n + b] = idx[prod];
        }
    if (to_parent) *to_parent = h;
    return group_from_table(n, std::move(table), {}, g.label + "-sub" + std::to_string(n));
}

FiniteGroup section_group(const FiniteGroup& g, const std::vector<int>& h,
                          const std::vector<int>& k, std::vector<int>* coset_of) {
    std::vector<bool> in_k(g.n, false);
    for (int x : k) in_k[x] = true;
    std::vector<int> coset(g.n, -1);
    std::vector<int> reps;
    for (int x : h) {
        if (coset[x] >= 0) continue;
        int ci = static_cast<int>(reps.size());
        reps.push_back(x);
        for (int y : k) coset[g.mul(x, y)] = ci;
    }
    int qn = static_cast<int>(reps.size());
    std::vector<int32_t> table(static_cast<std::size_t>(qn) * qn);
    for (int a = 0; a < qn; ++a)
        for (int b = 0; b < qn; ++b) {
            int c = coset[g.mul(reps[a], reps[b])];
            if (c < 0) throw ArgumentError("section_group: k not normal in h");
            table[static_cast<std::size_t>(a) * qn + b] = c;
        }
    if (coset_of) *coset_of = coset;
    return group_from_table(qn, std::move(table), {}, "section");
}

}  // namespace negk
