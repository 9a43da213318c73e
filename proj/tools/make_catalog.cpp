// Generates catalog/leq28.cat (every group of order <= 28, keyed by the
// SmallGroups-style (order, index) labels used in the tables this tool
// reproduces) and catalog/s-positive-100.cat (constructible groups of order
// <= 100 with s > 0). Generator permutations are emitted from the regular
// representation, except for the natural permutation families.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>

#include "negk/catalog.hpp"
#include "negk/schur.hpp"

using namespace negk;

namespace {

// Extend generator images to an automorphism of n (verified), as a permutation
// of n's elements.
std::vector<int> extend_automorphism(const FiniteGroup& n, const std::vector<int>& gen_images) {
    std::vector<int> img(n.n, -1);
    img[0] = 0;
    std::vector<int> order{0};
    // BFS over right multiplication by generators, mirroring on images
    for (std::size_t head = 0; head < order.size(); ++head) {
        int x = order[head];
        for (std::size_t gi = 0; gi < n.generators.size(); ++gi) {
            int y = n.mul(x, n.generators[gi]);
            if (img[y] < 0) {
                img[y] = n.mul(img[x], gen_images[gi]);
                order.push_back(y);
            }
        }
    }
    for (int x = 0; x < n.n; ++x)
        if (img[x] < 0) throw std::runtime_error("extend_automorphism: generators do not generate");
    // verify bijectivity and multiplicativity
    std::vector<bool> seen(n.n, false);
    for (int x = 0; x < n.n; ++x) {
        if (seen[img[x]]) throw std::runtime_error("extend_automorphism: not a bijection");
        seen[img[x]] = true;
    }
    for (int x = 0; x < n.n; ++x)
        for (int y = 0; y < n.n; ++y)
            if (img[n.mul(x, y)] != n.mul(img[x], img[y]))
                throw std::runtime_error("extend_automorphism: not multiplicative");
    return img;
}

std::vector<int> compose_auto(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[b[i]];
    return out;
}

// N x| C_k with the cyclic generator acting by phi (phi^k must be identity).
FiniteGroup semidirect_cyclic(const FiniteGroup& n, int k, const std::vector<int>& phi,
                              const std::string& label) {
    std::vector<std::vector<int>> pow(k);
    pow[0].resize(n.n);
    for (int x = 0; x < n.n; ++x) pow[0][x] = x;
    for (int i = 1; i < k; ++i) pow[i] = compose_auto(phi, pow[i - 1]);
    if (compose_auto(phi, pow[k - 1]) != pow[0])
        throw std::runtime_error("semidirect_cyclic: phi^k is not the identity");
    int total = n.n * k;
    auto idx = [&](int x, int i) { return x * k + i; };
    std::vector<int32_t> table(static_cast<std::size_t>(total) * total);
    for (int x = 0; x < n.n; ++x)
        for (int i = 0; i < k; ++i)
            for (int y = 0; y < n.n; ++y)
                for (int j = 0; j < k; ++j)
                    table[static_cast<std::size_t>(idx(x, i)) * total + idx(y, j)] =
                        idx(n.mul(x, pow[i][y]), (i + j) % k);
    std::vector<int> gens;
    for (int g : n.generators) gens.push_back(idx(g, 0));
    gens.push_back(idx(0, 1));
    return group_from_table(total, std::move(table), std::move(gens), label);
}

struct Entry {
    int order;
    int index;
    std::string name;
    FiniteGroup g;
    std::vector<Perm> perms;  // natural permutation generators when available
};

std::vector<Entry> entries;

void add(int order, int index, const std::string& name, FiniteGroup g,
         std::vector<Perm> perms = {}) {
    if (g.n != order) {
        std::cerr << "constructed group for (" << order << "," << index << ") has order " << g.n
                  << "\n";
        std::exit(1);
    }
    entries.push_back(Entry{order, index, name, std::move(g), std::move(perms)});
}

FiniteGroup C(int n) { return builtin_cyclic(n); }

FiniteGroup prod(const FiniteGroup& a, const FiniteGroup& b) { return direct_product(a, b); }

std::vector<Perm> nat(const std::string& text) {
    std::vector<Perm> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t semi = text.find(';', pos);
        std::string tok = (semi == std::string::npos) ? text.substr(pos)
                                                      : text.substr(pos, semi - pos);
        if (!tok.empty()) out.push_back(parse_cycles(tok));
        if (semi == std::string::npos) break;
        pos = semi + 1;
    }
    return out;
}

void build_leq28() {
    // order 1..15
    add(1, 1, "1", C(1), nat("()"));
    add(2, 1, "C2", C(2), nat("(1,2)"));
    add(3, 1, "C3", C(3), nat("(1,2,3)"));
    add(4, 1, "C4", C(4), nat("(1,2,3,4)"));
    add(4, 2, "C2xC2", prod(C(2), C(2)), nat("(1,2);(3,4)"));
    add(5, 1, "C5", C(5), nat("(1,2,3,4,5)"));
    add(6, 1, "S3", builtin_symmetric(3), nat("(1,2);(1,2,3)"));
    add(6, 2, "C6", C(6), nat("(1,2,3,4,5,6)"));
    add(7, 1, "C7", C(7), nat("(1,2,3,4,5,6,7)"));
    add(8, 1, "C8", C(8), nat("(1,2,3,4,5,6,7,8)"));
    add(8, 2, "C4xC2", prod(C(4), C(2)), nat("(1,2,3,4);(5,6)"));
    add(8, 3, "D8", builtin_dihedral(8), nat("(1,2,3,4);(2,4)"));
    add(8, 4, "Q8", builtin_dicyclic(2));
    add(8, 5, "C2xC2xC2", prod(prod(C(2), C(2)), C(2)), nat("(1,2);(3,4);(5,6)"));
    add(9, 1, "C9", C(9));
    add(9, 2, "C3xC3", prod(C(3), C(3)), nat("(1,2,3);(4,5,6)"));
    add(10, 1, "D10", builtin_dihedral(10), nat("(1,2,3,4,5);(2,5)(3,4)"));
    add(10, 2, "C10", C(10));
    add(11, 1, "C11", C(11));
    add(12, 1, "Dic3", builtin_dicyclic(3));
    add(12, 2, "C12", C(12));
    add(12, 3, "A4", builtin_alternating(4), nat("(1,2,3);(2,3,4)"));
    add(12, 4, "D12", builtin_dihedral(12), nat("(1,2,3,4,5,6);(2,6)(3,5)"));
    add(12, 5, "C6xC2", prod(C(6), C(2)));
    add(13, 1, "C13", C(13));
    add(14, 1, "D14", builtin_dihedral(14), nat("(1,2,3,4,5,6,7);(2,7)(3,6)(4,5)"));
    add(14, 2, "C14", C(14));
    add(15, 1, "C15", C(15));

    // order 16
    add(16, 1, "C16", C(16));
    add(16, 2, "C4xC4", prod(C(4), C(4)));
    {
        // (C4xC2) : C2 with c a c^-1 = a b, c b c^-1 = b
        FiniteGroup n = prod(C(4), C(2));
        int a = n.generators[0], b = n.generators[1];
        std::vector<int> phi = extend_automorphism(n, {n.mul(a, b), b});
        add(16, 3, "(C4xC2):C2", semidirect_cyclic(n, 2, phi, "(C4xC2):C2"));
    }
    {
        FiniteGroup n = C(4);
        std::vector<int> phi = extend_automorphism(n, {n.inv[n.generators[0]]});
        add(16, 4, "C4:C4", semidirect_cyclic(n, 4, phi, "C4:C4"));
    }
    add(16, 5, "C8xC2", prod(C(8), C(2)));
    {
        FiniteGroup n = C(8);
        std::vector<int> phi = extend_automorphism(n, {n.power(n.generators[0], 5)});
        add(16, 6, "C8:C2", semidirect_cyclic(n, 2, phi, "C8:C2"));
    }
    add(16, 7, "D16", builtin_dihedral(16), nat("(1,2,3,4,5,6,7,8);(2,8)(3,7)(4,6)"));
    {
        FiniteGroup n = C(8);
        std::vector<int> phi = extend_automorphism(n, {n.power(n.generators[0], 3)});
        add(16, 8, "QD16", semidirect_cyclic(n, 2, phi, "QD16"));
    }
    add(16, 9, "Q16", builtin_dicyclic(4));
    add(16, 10, "C4xC2xC2", prod(prod(C(4), C(2)), C(2)));
    add(16, 11, "C2xD8", prod(C(2), builtin_dihedral(8)));
    add(16, 12, "C2xQ8", prod(C(2), builtin_dicyclic(2)));
    {
        // Pauli group: central product Q8 o C4 = (Q8 x C4)/<(-1, c^2)>
        FiniteGroup p = prod(builtin_dicyclic(2), C(4));
        // Q8 = dicyclic(2): central involution is element 2 (= a^2); C4: c^2 is element 2
        NormalSubgroupDesc diag;
        diag.members = {0, 2 * 4 + 2};
        std::sort(diag.members.begin(), diag.members.end());
        diag.order = 2;
        add(16, 13, "Pauli", quotient_group(p, diag));
    }
    add(16, 14, "C2xC2xC2xC2", prod(prod(prod(C(2), C(2)), C(2)), C(2)));

    // order 17..23
    add(17, 1, "C17", C(17));
    add(18, 1, "D18", builtin_dihedral(18));
    add(18, 2, "C18", C(18));
    add(18, 3, "C3xS3", prod(C(3), builtin_symmetric(3)));
    add(18, 4, "(C3xC3):C2", group_from_generators(nat("(1,2,3);(4,5,6);(2,3)(5,6)"), 64,
                                                   "(C3xC3):C2"),
        nat("(1,2,3);(4,5,6);(2,3)(5,6)"));
    add(18, 5, "C6xC3", prod(C(6), C(3)));
    add(19, 1, "C19", C(19));
    add(20, 1, "Dic5", builtin_dicyclic(5));
    add(20, 2, "C20", C(20));
    add(20, 3, "F5", group_from_generators(nat("(1,2,3,4,5);(2,3,5,4)"), 64, "F5"),
        nat("(1,2,3,4,5);(2,3,5,4)"));
    add(20, 4, "D20", builtin_dihedral(20));
    add(20, 5, "C10xC2", prod(C(10), C(2)));
    add(21, 1, "C7:C3", group_from_generators(nat("(1,2,3,4,5,6,7);(2,3,5)(4,7,6)"), 64, "C7:C3"),
        nat("(1,2,3,4,5,6,7);(2,3,5)(4,7,6)"));
    add(21, 2, "C21", C(21));
    add(22, 1, "D22", builtin_dihedral(22));
    add(22, 2, "C22", C(22));
    add(23, 1, "C23", C(23));

    // order 24
    {
        FiniteGroup n = C(3);
        std::vector<int> phi = extend_automorphism(n, {n.inv[n.generators[0]]});
        add(24, 1, "C3:C8", semidirect_cyclic(n, 8, phi, "C3:C8"));
    }
    add(24, 2, "C24", C(24));
    add(24, 3, "SL(2,3)", builtin_sl23());
    add(24, 4, "Dic6", builtin_dicyclic(6));
    add(24, 5, "C4xS3", prod(C(4), builtin_symmetric(3)));
    add(24, 6, "D24", builtin_dihedral(24));
    add(24, 7, "C2xDic3", prod(C(2), builtin_dicyclic(3)));
    {
        // (C6xC2):C2 with t a t = a^-1, t b t = a^3 b  (a order 6, b order 2)
        FiniteGroup n = prod(C(6), C(2));
        int a = n.generators[0], b = n.generators[1];
        std::vector<int> phi = extend_automorphism(n, {n.inv[a], n.mul(n.power(a, 3), b)});
        add(24, 8, "(C6xC2):C2", semidirect_cyclic(n, 2, phi, "(C6xC2):C2"));
    }
    add(24, 9, "C12xC2", prod(C(12), C(2)));
    add(24, 10, "C3xD8", prod(C(3), builtin_dihedral(8)));
    add(24, 11, "C3xQ8", prod(C(3), builtin_dicyclic(2)));
    add(24, 12, "S4", builtin_symmetric(4), nat("(1,2);(1,2,3,4)"));
    add(24, 13, "C2xA4", prod(C(2), builtin_alternating(4)));
    add(24, 14, "C2xC2xS3", prod(prod(C(2), C(2)), builtin_symmetric(3)));
    add(24, 15, "C6xC2xC2", prod(prod(C(6), C(2)), C(2)));

    // order 25..28
    add(25, 1, "C25", C(25));
    add(25, 2, "C5xC5", prod(C(5), C(5)));
    add(26, 1, "D26", builtin_dihedral(26));
    add(26, 2, "C26", C(26));
    add(27, 1, "C27", C(27));
    add(27, 2, "C9xC3", prod(C(9), C(3)));
    {
        // Heisenberg group over F3: (C3xC3):C3, exponent 3
        FiniteGroup n = prod(C(3), C(3));
        int a = n.generators[0], b = n.generators[1];
        std::vector<int> phi = extend_automorphism(n, {a, n.mul(a, b)});
        FiniteGroup g = semidirect_cyclic(n, 3, phi, "Heis3");
        if (g.exponent != 3) throw std::runtime_error("Heisenberg: wrong exponent");
        add(27, 3, "(C3xC3):C3", std::move(g));
    }
    {
        // extraspecial C9:C3, exponent 9
        FiniteGroup n = C(9);
        std::vector<int> phi = extend_automorphism(n, {n.power(n.generators[0], 4)});
        FiniteGroup g = semidirect_cyclic(n, 3, phi, "C9:C3");
        if (g.exponent != 9) throw std::runtime_error("C9:C3: wrong exponent");
        add(27, 4, "C9:C3", std::move(g));
    }
    add(27, 5, "C3xC3xC3", prod(prod(C(3), C(3)), C(3)));
    add(28, 1, "Dic7", builtin_dicyclic(7));
    add(28, 2, "C28", C(28));
    add(28, 3, "D28", builtin_dihedral(28));
    add(28, 4, "C14xC2", prod(C(14), C(2)));
}

void build_s_positive() {
    auto dic = [](int k) { return builtin_dicyclic(k); };
    add(16, 9, "Q16", dic(4));
    add(20, 1, "Dic5", dic(5));
    add(24, 4, "Dic6", dic(6));
    add(32, 20, "Q32", dic(8));
    add(32, 41, "C2xQ16", prod(C(2), dic(4)));
    add(40, 4, "Dic10", dic(10));
    add(40, 7, "C2xDic5", prod(C(2), dic(5)));
    add(48, 8, "Dic12", dic(12));
    add(48, 27, "C3xQ16", prod(C(3), dic(4)));
    add(48, 28, "BinO", builtin_binary_octahedral());
    add(48, 34, "C2xDic6", prod(C(2), dic(6)));
    add(52, 1, "Dic13", dic(13));
    add(56, 3, "Dic14", dic(14));
    add(60, 2, "C3xDic5", prod(C(3), dic(5)));
    add(60, 3, "Dic15", dic(15));
    add(68, 1, "Dic17", dic(17));
    add(72, 4, "Dic18", dic(18));
    add(72, 26, "C3xDic6", prod(C(3), dic(6)));
    add(80, 8, "Dic20", dic(20));
    add(80, 11, "C4xDic5", prod(C(4), dic(5)));
    add(80, 27, "C5xQ16", prod(C(5), dic(4)));
    add(84, 5, "Dic21", dic(21));
    add(88, 3, "Dic22", dic(22));
    add(96, 8, "Dic24", dic(24));
    add(96, 181, "C6xQ16", prod(C(6), dic(4)));
    add(96, 205, "C2xC2xDic6", prod(prod(C(2), C(2)), dic(6)));
    add(100, 1, "Dic25", dic(25));
    add(100, 6, "C5xDic5", prod(C(5), dic(5)));
}

void write_catalog(const std::string& path, const std::string& header) {
    std::vector<CatalogEntry> out;
    for (auto& e : entries) {
        CatalogEntry c;
        c.order = e.order;
        c.index = e.index;
        c.name = e.name;
        c.generators = e.perms.empty() ? regular_generators(e.g) : e.perms;
        // round-trip check: generators close to a group of the right order
        FiniteGroup chk = group_from_generators(c.generators, 2048, c.name);
        if (chk.n != e.order) {
            std::cerr << "catalog entry (" << e.order << "," << e.index
                      << ") closes to order " << chk.n << "\n";
            std::exit(1);
        }
        out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end(), [](const CatalogEntry& a, const CatalogEntry& b) {
        if (a.order != b.order) return a.order < b.order;
        return a.index < b.index;
    });
    std::ofstream f(path);
    f << catalog_to_string(out, header);
    std::cout << "wrote " << path << " (" << out.size() << " groups)\n";
}

// Pairwise distinctness of the groups within one order, by cheap invariants.
void check_distinct() {
    std::map<int, std::vector<const Entry*>> by_order;
    for (const auto& e : entries) by_order[e.order].push_back(&e);
    for (auto& [order, list] : by_order) {
        std::vector<std::string> sigs;
        for (const Entry* e : list) {
            std::map<int, int> order_profile;
            for (int x = 0; x < e->g.n; ++x) order_profile[e->g.elt_order[x]] += 1;
            long commuting = 0;
            for (int x = 0; x < e->g.n; ++x)
                for (int y = 0; y < e->g.n; ++y)
                    if (e->g.mul(x, y) == e->g.mul(y, x)) ++commuting;
            std::vector<bool> sq(e->g.n, false);
            for (int x = 0; x < e->g.n; ++x) sq[e->g.mul(x, x)] = true;
            long squares = std::count(sq.begin(), sq.end(), true);
            std::vector<std::size_t> class_sizes;
            for (const auto& c : conjugacy_classes(e->g)) class_sizes.push_back(c.members.size());
            std::ostringstream os;
            for (auto& [o, c] : order_profile) os << o << ":" << c << ",";
            os << "|" << commuting << "|" << squares << "|";
            for (auto s : class_sizes) os << s << ",";
            sigs.push_back(os.str());
        }
        for (std::size_t i = 0; i < sigs.size(); ++i)
            for (std::size_t j = i + 1; j < sigs.size(); ++j)
                if (sigs[i] == sigs[j])
                    std::cerr << "warning: (" << order << "," << list[i]->index << ") and ("
                              << order << "," << list[j]->index
                              << ") share the invariant signature\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    std::string dir = (argc > 1) ? argv[1] : "catalog";
    build_leq28();
    check_distinct();
    write_catalog(dir + "/leq28.cat",
                  "Every group of order <= 28, keyed by (order, index) as in the standard\n"
                  "small-groups numbering. Generators are natural permutation\n"
                  "representations where one exists, otherwise the regular representation\n"
                  "of a verified presentation (see tools/make_catalog.cpp). Regenerate with\n"
                  "make-catalog; entries are validated by `negk verify`.");
    entries.clear();
    build_s_positive();
    write_catalog(dir + "/s-positive-100.cat",
                  "Constructible groups of order <= 100 with s > 0: dicyclic groups and\n"
                  "their products with small cyclic groups, the binary octahedral group,\n"
                  "and C8.C2^2 = (32,44), keyed by (order, index) as in the standard\n"
                  "small-groups numbering. Regenerate with make-catalog.");
    return 0;
}
