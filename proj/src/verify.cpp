#include "negk/verify.hpp"

#include <sstream>

namespace negk {

namespace {

std::string where(const FiniteGroup& g) {
    return "[" + (g.label.empty() ? "order " + std::to_string(g.n) : g.label) + "] ";
}

}  // namespace

long check_group_invariants(const FiniteGroup& g, const FailSink& fail) {
    long bad = 0;
    auto report = [&](const std::string& msg) {
        fail(where(g) + msg);
        ++bad;
    };
    for (int x = 0; x < g.n; ++x) {
        if (g.mul(0, x) != x || g.mul(x, 0) != x) report("identity law fails at " + std::to_string(x));
        if (g.mul(x, g.inv[x]) != 0 || g.mul(g.inv[x], x) != 0)
            report("inverse law fails at " + std::to_string(x));
    }
    // associativity: exhaustive for small groups, deterministic sample otherwise
    if (g.n <= 32) {
        for (int a = 0; a < g.n; ++a)
            for (int b = 0; b < g.n; ++b)
                for (int c = 0; c < g.n; ++c)
                    if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))) {
                        report("associativity fails");
                        a = b = c = g.n;
                    }
    } else {
        uint64_t seed = 0x6a09e667f3bcc909ULL;
        for (int i = 0; i < 1000; ++i) {
            auto next = [&] {
                seed = seed * 6364136223846793005ULL + 1442695040888963407ULL;
                return static_cast<int>((seed >> 33) % g.n);
            };
            int a = next(), b = next(), c = next();
            if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))) {
                report("associativity fails on sample");
                break;
            }
        }
    }
    long expo = 1;
    for (int x = 0; x < g.n; ++x) {
        int k = 1, y = x;
        while (y != 0) {
            y = g.mul(y, x);
            ++k;
        }
        if (k != g.elt_order[x]) report("element order table wrong at " + std::to_string(x));
        expo = lcm_ll(expo, k);
    }
    if (expo != g.exponent) report("exponent mismatch");
    if (g.n % g.exponent != 0) report("exponent does not divide |G|");
    return bad;
}

long check_class_invariants(const FiniteGroup& g, const FailSink& fail) {
    long bad = 0;
    auto report = [&](const std::string& msg) {
        fail(where(g) + msg);
        ++bad;
    };
    std::vector<ConjClass> cc = conjugacy_classes(g);
    std::vector<int> seen(g.n, 0);
    std::size_t total = 0;
    for (const auto& c : cc) {
        total += c.members.size();
        for (int x : c.members) {
            seen[x] += 1;
            if (g.elt_order[x] != c.element_order) report("class member order mismatch");
        }
        for (int x : c.members)
            for (int gen : g.generators) {
                int y = g.conj(x, gen);
                if (!std::binary_search(c.members.begin(), c.members.end(), y))
                    report("class not closed under conjugation");
            }
    }
    if (total != static_cast<std::size_t>(g.n)) report("class equation fails");
    for (int x = 0; x < g.n; ++x)
        if (seen[x] != 1) report("classes do not partition the group");

    // |power_class(c, t)| = |c| for t coprime to the exponent
    std::vector<int> cls_of = class_of_element(g, cc);
    std::vector<long> units = prime_residues(g.exponent);
    if (units.empty()) units = {1};
    for (std::size_t c = 0; c < cc.size(); ++c)
        for (long t : units) {
            int d = power_class(g, cc, cls_of, static_cast<int>(c), t);
            if (cc[d].members.size() != cc[c].members.size())
                report("power class changes size");
        }

    // Burnside count for small groups
    if (g.n <= 64) {
        long commuting = 0;
        for (int x = 0; x < g.n; ++x)
            for (int y = 0; y < g.n; ++y)
                if (g.mul(x, y) == g.mul(y, x)) ++commuting;
        if (commuting % g.n != 0 || commuting / g.n != static_cast<long>(cc.size()))
            report("Burnside class count mismatch");
    }
    return bad;
}

long check_character_invariants(const FiniteGroup& g, const FailSink& fail) {
    long bad = 0;
    auto report = [&](const std::string& msg) {
        fail(where(g) + msg);
        ++bad;
    };
    CharacterTable t = character_table(g);
    int k = t.num_classes();
    long n = g.n;
    std::vector<int> inv_class(k);
    for (int i = 0; i < k; ++i) inv_class[i] = t.cls_of[g.inv[t.classes[i].representative]];

    if (static_cast<int>(t.chars.size()) != k) report("char count != class count");
    long deg_sq = 0;
    for (const auto& c : t.chars) deg_sq += c.degree * c.degree;
    if (deg_sq != n) report("sum of squared degrees != |G|");
    for (const auto& c : t.chars)
        if (n % c.degree != 0) report("degree does not divide |G|");

    // row orthogonality
    for (int i = 0; i < k; ++i) {
        for (int j = i; j < k; ++j) {
            Cyclotomic acc = Cyclotomic::zero(1);
            for (int c = 0; c < k; ++c) {
                Cyclotomic term = t.chars[i].values[c] * t.chars[j].values[inv_class[c]];
                acc += term.scale(Rat(static_cast<long>(t.classes[c].members.size())));
            }
            Rat want = (i == j) ? Rat(n) : Rat(0);
            if (!acc.is_rational() || acc.to_rational() != want) {
                report("row orthogonality fails at (" + std::to_string(i) + "," + std::to_string(j) + ")");
            }
        }
    }
    // column orthogonality
    for (int c = 0; c < k; ++c) {
        for (int d = c; d < k; ++d) {
            Cyclotomic acc = Cyclotomic::zero(1);
            for (int i = 0; i < k; ++i) acc += t.chars[i].values[c] * t.chars[i].values[inv_class[d]];
            Rat want = (c == d) ? Rat(n) / Rat(static_cast<long>(t.classes[c].members.size()))
                                : Rat(0);
            if (!acc.is_rational() || acc.to_rational() != want)
                report("column orthogonality fails at (" + std::to_string(c) + "," + std::to_string(d) + ")");
        }
    }
    // FS sum rule: sum nu(chi) chi(1) = #{g : g^2 = e}
    {
        long sq_count = 0;
        for (int x = 0; x < g.n; ++x)
            if (g.mul(x, x) == 0) ++sq_count;
        long acc = 0;
        for (int i = 0; i < k; ++i) acc += fs_indicator(g, t, i) * t.chars[i].degree;
        if (acc != sq_count) report("Frobenius-Schur sum rule fails");
    }
    // Galois equivariance: applying t to values while permuting classes by the
    // power map fixes the set of characters
    {
        std::vector<long> units = prime_residues(t.exponent);
        if (units.empty()) units = {1};
        for (long u : units) {
            for (int i = 0; i < k; ++i) {
                bool found = false;
                for (int j = 0; j < k && !found; ++j) {
                    bool same = true;
                    for (int c = 0; c < k && same; ++c) {
                        int pc = power_class(g, t.classes, t.cls_of, c, u);
                        if (t.chars[i].values[pc] != t.chars[j].values[c]) same = false;
                    }
                    found = same;
                }
                if (!found) {
                    report("Galois equivariance fails at unit " + std::to_string(u));
                    break;
                }
            }
        }
    }
    // conductor of every entry divides the exponent (by construction, but assert)
    for (const auto& c : t.chars)
        for (const auto& v : c.values)
            if (t.exponent % v.conductor() != 0) report("character value conductor exceeds exponent");
    // Berman: number of orbits equals number of rational class cells
    if (rational_character_classes(g, t).size() != rational_classes(g, t.classes).size())
        report("Berman orbit count mismatch");
    return bad;
}

long check_schur_invariants(const FiniteGroup& g, const FailSink& fail) {
    long bad = 0;
    auto report = [&](const std::string& msg) {
        fail(where(g) + msg);
        ++bad;
    };
    SchurEngine eng(g);
    std::vector<long> primes = prime_divisors(g.n);
    const auto& rcs = eng.rational_classes();
    long dim = 0;
    long s = 0;
    for (std::size_t i = 0; i < rcs.size(); ++i) {
        SimpleComponentDesc comp = eng.component_for_class(static_cast<int>(i));
        SchurData sd = eng.local_indices(comp);
        dim += rcs[i].orbit_size * rcs[i].degree * rcs[i].degree;
        // infinity index <=> FS indicator
        if ((sd.index_at(kInfinitePlace) == 2) != (rcs[i].fs == -1))
            report("infinite place / FS mismatch at class " + std::to_string(i));
        // contribution-test equivalence (even-global/odd-finite vs FS-based)
        bool via_indices = contributes_to_s(sd, primes);
        bool via_fs = (rcs[i].fs == -1);
        for (long p : primes)
            if (sd.index_at(p) % 2 == 0) via_fs = false;
        if (via_indices != via_fs) report("contribution test equivalence fails at class " + std::to_string(i));
        if (via_indices) ++s;
        if (sd.global % 2 != 0 && via_indices) report("odd global index contributes");
        // every listed finite place divides |G|
        for (auto& [pl, ix] : sd.local)
            if (pl != kInfinitePlace && g.n % pl != 0) report("listed place does not divide |G|");
    }
    if (dim != g.n) report("component dimensions do not sum to |G|");
    if (g.is_abelian() && s != 0) report("abelian group with s > 0");
    if (g.n % 4 != 0 && s != 0) report("s > 0 with |G| not divisible by 4");
    return bad;
}

}  // namespace negk
